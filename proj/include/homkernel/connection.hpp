#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "homkernel/homspace.hpp"

namespace homkernel::connection {

using cas::Matrix;
using cas::Scalar;
using homspace::HomogeneousPair;
using liealg::Vector;

/// Endomorphisms of m in u-coordinates. Column j of a matrix holds the image
/// of u_j.
struct ConnectionData {
  std::vector<Matrix> on_m;  ///< lambda(u_i)
  std::vector<Matrix> on_h;  ///< lambda(h_k)

  /// lambda of an m-vector given in u-coordinates.
  Matrix of_m(const Vector& x) const;
  /// lambda of an element of g, split along h + m.
  Matrix of_g(const HomogeneousPair& p, const Vector& x_in_g) const;
};

/// Koszul formula: <lambda(X)Y, Z> = 1/2 (<[X,Y]_m, Z> + <[Z,X]_m, Y> + <[Z,Y]_m, X_m>),
/// with lambda(h) = project_m o ad(h) on the isotropy.
ConnectionData compute_lambda(const HomogeneousPair& p);

struct AxiomResiduals {
  /// lambda(u_i)u_j - lambda(u_j)u_i - [u_i, u_j]_m for i < j.
  std::vector<Vector> torsion;
  /// <lambda(u_i)u_j, u_k> + <u_j, lambda(u_i)u_k>.
  std::vector<Scalar> compat;
  /// lambda(h_k) - project_m o ad(h_k), restricted to m.
  std::vector<Matrix> isotropy;
  /// lambda([h_k, e_i]) - [lambda(h_k), lambda(e_i)] over a basis of g.
  std::vector<Matrix> equivariance;
  bool all_zero() const;
};
AxiomResiduals connection_axiom_residuals(const HomogeneousPair& p, const ConnectionData& c);

/// R(u_i, u_j) = [lambda(u_i), lambda(u_j)] - lambda([u_i, u_j]) for all i, j.
struct CurvatureData {
  std::vector<std::vector<Matrix>> r;

  const Matrix& at(std::size_t i, std::size_t j) const { return r[i][j]; }
  /// R(X, Y) for m-vectors in u-coordinates.
  Matrix of(const Vector& x, const Vector& y) const;
  /// R(X, Y)Z.
  Vector apply(const Vector& x, const Vector& y, const Vector& z) const;
};
CurvatureData curvature(const HomogeneousPair& p, const ConnectionData& c);

/// Cyclic sums R(u_i,u_j)u_k + R(u_j,u_k)u_i + R(u_k,u_i)u_j for i < j < k.
std::vector<Vector> bianchi_residual(const CurvatureData& r);
/// <R(u_i,u_j)u_k, u_l> - <R(u_k,u_l)u_i, u_j> over all index tuples.
std::vector<Scalar> pair_symmetry_residual(const HomogeneousPair& p, const CurvatureData& r);

/// Ric(X, Y) = trace of Z -> R(Z, X)Y; scalar = g^{ij} Ric_ij.
struct CurvatureInvariants {
  Matrix ricci;
  Scalar scalar;
};
CurvatureInvariants curvature_invariants(const HomogeneousPair& p, const CurvatureData& r);

struct ConstantCurvature {
  Scalar k;
};
struct NotConstant {
  std::size_t i = 0, j = 0, l = 0;  ///< R(u_i, u_j)u_l fails the fit
  Vector residual;
};
using CurvatureFit = std::variant<ConstantCurvature, NotConstant>;
/// Fits R(X,Y)Z = k(<Y,Z>X - <X,Z>Y) over all basis triples.
CurvatureFit constant_curvature_fit(const HomogeneousPair& p, const CurvatureData& r);

/// Derivation action of lambda(X) on R:
/// [lambda(X), R(u_i,u_j)] - R(lambda(X)u_i, u_j) - R(u_i, lambda(X)u_j).
struct SymmetryResiduals {
  /// Indexed [x][i][j] for x over the m-basis; vanishes iff nabla R = 0.
  std::vector<std::vector<std::vector<Matrix>>> along_m;
  /// Same for x over the isotropy basis; vanishes for every invariant metric.
  std::vector<std::vector<std::vector<Matrix>>> along_h;
  bool m_zero() const;
  bool h_zero() const;
};
SymmetryResiduals locally_symmetric_residual(const HomogeneousPair& p, const ConnectionData& c,
                                             const CurvatureData& r);

}  // namespace homkernel::connection
