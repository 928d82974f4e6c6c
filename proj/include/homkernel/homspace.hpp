#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "homkernel/liealg.hpp"

namespace homkernel::homspace {

using cas::Matrix;
using cas::Rational;
using cas::Scalar;
using liealg::LieAlgebra;
using liealg::Vector;

enum class Family { A1, A2, A3, A4, B1, B2 };

/// Identifies one of the built-in pairs. `eta` only matters for A3; A4 and
/// B2 carry eta = 1 and eta = -1 respectively.
struct FamilyId {
  Family tag = Family::A1;
  int eta = 1;

  static FamilyId a1() { return {Family::A1, 1}; }
  static FamilyId a2() { return {Family::A2, 1}; }
  static FamilyId a3(int eta) { return {Family::A3, eta}; }
  static FamilyId a4() { return {Family::A4, 1}; }
  static FamilyId b1() { return {Family::B1, 1}; }
  static FamilyId b2() { return {Family::B2, -1}; }

  /// "A1", "A2", "A3", "A4", "B1", "B2".
  std::string tag_name() const;
  /// Tag plus eta where it selects the algebra, e.g. "A3(eta=-1)".
  std::string str() const;
  bool operator==(const FamilyId&) const = default;
};

/// Parses "A1", "a2", "A3", "A3+", "A3-", "B2", ... (A3 defaults to eta = 1).
std::optional<FamilyId> parse_family(const std::string& s);
std::vector<FamilyId> all_families();

/// (g, h, m, <,>): a Lie algebra, isotropy subalgebra, ordered complement
/// basis u_1..u_n and a symmetric bilinear form on m.
class HomogeneousPair {
 public:
  /// Validates dim h + dim m = dim g, h ∩ m = 0, h closed under the bracket,
  /// the Gram matrix symmetric and generically non-degenerate.
  HomogeneousPair(std::string name, std::vector<std::string> params, std::vector<Scalar> nonzero, LieAlgebra g,
                  std::vector<Vector> isotropy, std::vector<Vector> complement, Matrix gram);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& params() const { return params_; }
  /// Quantities required nonzero (the non-degeneracy constraints).
  const std::vector<Scalar>& nonzero() const { return nonzero_; }
  const LieAlgebra& g() const { return g_; }
  const std::vector<Vector>& isotropy() const { return h_; }
  const std::vector<Vector>& complement() const { return m_; }
  const Matrix& gram() const { return gram_; }
  const Matrix& gram_inverse() const { return gram_inv_; }
  std::size_t dim_m() const { return m_.size(); }
  std::size_t dim_h() const { return h_.size(); }

  /// X = X_h + X_m; returns X_m in u-coordinates.
  Vector project_m(const Vector& x_in_g) const;
  /// h-coordinates of X_h.
  Vector project_h(const Vector& x_in_g) const;
  /// g-coordinates of the m-vector with u-coordinates `x`.
  Vector embed_m(const Vector& x) const;
  Vector embed_h(const Vector& x) const;
  /// [X, Y] of two m-vectors, split into (h-coordinates, u-coordinates).
  std::pair<Vector, Vector> bracket_m(const Vector& x, const Vector& y) const;

  Scalar inner(const Vector& x, const Vector& y) const;

  /// Applies parameter bindings to every component and revalidates.
  HomogeneousPair specialize(const cas::Bindings& bindings, const std::string& new_name = {}) const;

  /// Structural equality (name excluded).
  bool operator==(const HomogeneousPair& o) const;

 private:
  std::string name_;
  std::vector<std::string> params_;
  std::vector<Scalar> nonzero_;
  LieAlgebra g_;
  std::vector<Vector> h_;
  std::vector<Vector> m_;
  Matrix gram_;
  Matrix gram_inv_;
  Matrix split_;  // inverse of [h | m] as columns
};

/// Gram matrix of the quadratic form `form` in the coframe variables, using
/// theta^i o theta^j = (theta^i (x) theta^j + theta^j (x) theta^i) / 2.
Matrix gram_from_form(const Scalar& form, const std::vector<std::string>& coframe);

/// The built-in pairs, generated from their space-file source.
HomogeneousPair builtin_pair(const FamilyId& id);
/// Space-file text that defines the built-in pair.
std::string builtin_source(const FamilyId& id);

Scalar gram_det(const HomogeneousPair& p);

/// (positive, negative) counts of a symmetric rational matrix by congruence
/// reduction. Throws DegenerateError when singular.
std::pair<int, int> signature(const Matrix& sym);
/// Signature of the metric at rational parameter values.
std::pair<int, int> signature_at(const HomogeneousPair& p, const std::map<std::string, Rational>& values);

struct Reductive {
  /// phi(u_j) in h-coordinates, column j.
  Matrix phi;
};
struct NonReductive {};
struct ConditionallyReductive {
  Matrix phi;
  std::vector<Scalar> genericity;
};
struct ReductivityDecision {
  std::variant<Reductive, NonReductive, ConditionallyReductive> kind;
  /// For NonReductive: symbolic quantities assumed nonzero on the way to the
  /// inconsistency (empty when the answer holds for every parameter value).
  std::vector<Scalar> genericity;
  bool is_reductive() const { return !std::holds_alternative<NonReductive>(kind); }
};

/// Decides whether some complement {X + phi(X)} is ad(h)-invariant by solving
/// [h_k, X]_h + [h_k, phi(X)] - phi([h_k, X]_m) = 0, linear in phi.
ReductivityDecision nonreductivity_decide(const HomogeneousPair& p);

}  // namespace homkernel::homspace
