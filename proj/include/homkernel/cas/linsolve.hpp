#pragma once

#include <variant>
#include <vector>

#include "homkernel/cas/matrix.hpp"

namespace homkernel::cas {

struct Unique {
  std::vector<Scalar> x;
};

struct Affine {
  std::vector<Scalar> x0;
  std::vector<std::vector<Scalar>> nullbasis;
};

struct Inconsistent {
  /// Index of an equation that reduced to 0 = r with r != 0.
  std::size_t row = 0;
  Scalar residual;
};

struct LinearSolution {
  std::variant<Unique, Affine, Inconsistent> kind;
  /// Symbolic quantities assumed nonzero during elimination (pivots, and the
  /// right-hand side of an inconsistent row). Empty means the answer holds
  /// for every parameter value where the inputs are defined.
  std::vector<Scalar> genericity;

  bool is_unique() const { return std::holds_alternative<Unique>(kind); }
  bool is_affine() const { return std::holds_alternative<Affine>(kind); }
  bool is_inconsistent() const { return std::holds_alternative<Inconsistent>(kind); }
};

/// Exact Gaussian elimination over Q(params) for A x = b.
///
/// Pivots that are nonzero rational constants are preferred over symbolic
/// ones; each symbolic pivot is recorded as a genericity condition.
LinearSolution solve_linear(const Matrix& a, const Matrix& b);
LinearSolution solve_linear(const Matrix& a, const std::vector<Scalar>& b);

/// Reduced row echelon form with the same pivoting policy. `pivots` receives
/// the pivot column of each nonzero row, `genericity` the symbolic pivots.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;
  std::vector<Scalar> genericity;
  std::size_t rank() const { return pivots.size(); }
};
Echelon row_echelon(const Matrix& m);

/// Basis of {x : A x = 0}.
std::vector<std::vector<Scalar>> nullspace(const Matrix& a);

}  // namespace homkernel::cas
