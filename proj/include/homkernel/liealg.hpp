#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "homkernel/cas/linsolve.hpp"
#include "homkernel/cas/matrix.hpp"

namespace homkernel::liealg {

using cas::Matrix;
using cas::Scalar;

/// Coordinates in a fixed basis.
using Vector = std::vector<Scalar>;

Vector basis_vector(std::size_t dim, std::size_t i);

/// A finite-dimensional Lie algebra given by structure constants,
/// [e_i, e_j] = sum_k c[i][j][k] e_k.
class LieAlgebra {
 public:
  /// `brackets[i][j]` is the coordinate vector of [e_i, e_j]. Both orders must
  /// be present and antisymmetric; ValidationError otherwise.
  LieAlgebra(std::vector<std::string> basis_names, std::vector<std::vector<Vector>> brackets);
  static LieAlgebra abelian(std::size_t dim, const std::string& prefix = "e");

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  /// Coordinates of [e_i, e_j].
  const Vector& structure(std::size_t i, std::size_t j) const { return c_[i][j]; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[i][j][k]; }

  /// True when every structure constant is a rational number.
  bool is_rational() const;

  bool operator==(const LieAlgebra&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Vector>> c_;
};

Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y);

/// Components of the cyclic sum [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
/// over i < j < k, concatenated.
std::vector<Scalar> jacobi_residual(const LieAlgebra& L);
bool satisfies_jacobi(const LieAlgebra& L);

/// Matrix of Y -> [X, Y].
Matrix ad_matrix(const LieAlgebra& L, const Vector& x);

/// A linear subspace held as a reduced row echelon spanning set.
class Subspace {
 public:
  Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  /// Reduced spanning vectors (row echelon over Q(params)).
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<Scalar>& genericity() const { return genericity_; }

  /// Remainder of `v` after reduction against the echelon basis.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const { return cas::is_zero(reduce(v)); }

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<Scalar> genericity_;
};

struct Closed {};
struct NotClosed {
  std::size_t i = 0, j = 0;  // indices into the caller's spanning list
  Vector escaping;           // nonzero remainder of the bracket
};
using ClosureResult = std::variant<Closed, NotClosed>;

/// Checks closure of span(spanning) under the bracket; the witness indexes `spanning`.
ClosureResult is_subalgebra(const LieAlgebra& L, const std::vector<Vector>& spanning);
ClosureResult is_subalgebra(const LieAlgebra& L, const Subspace& s);

/// Structure constants in the basis e'_j = P e_j (columns of P), plus the
/// residual c' - c, which vanishes iff P is an automorphism.
struct AutomorphismResult {
  LieAlgebra transformed;
  std::vector<Scalar> residual;
  bool is_automorphism() const;
};
AutomorphismResult apply_automorphism(const LieAlgebra& L, const Matrix& p);

/// Lie algebra of a subalgebra, in the basis given by `spanning` (which must
/// be independent and closed). NotASubalgebra is reported as ValidationError.
LieAlgebra restrict_to(const LieAlgebra& L, const std::vector<Vector>& spanning,
                       const std::vector<std::string>& names);

struct Profile {
  std::vector<std::size_t> derived;       ///< dims of L, [L,L], ... until stable
  std::vector<std::size_t> lower_central; ///< dims of L, [L,L], [L,[L,L]], ... until stable
  std::size_t center = 0;
  std::vector<Scalar> genericity;         ///< symbolic pivots relied upon
};

/// Derived and lower central series dimensions and the center dimension.
/// Algebras with symbolic structure constants are refused unless the caller
/// passes `assume_nonzero`; pivots outside that list are then reported.
Profile algebra_profile(const LieAlgebra& L, const std::optional<std::vector<Scalar>>& assume_nonzero = std::nullopt);

}  // namespace homkernel::liealg
