#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homkernel/connection.hpp"
#include "homkernel/errors.hpp"

/// Hypersurfaces with constant-component unit normals: frames, shape
/// operator, Codazzi / parallel residuals and intrinsic geometry of orbit
/// hypersurfaces.
namespace homkernel::hypersurface {

using cas::Bindings;
using cas::Matrix;
using cas::Scalar;
using connection::ConnectionData;
using connection::CurvatureData;
using homspace::FamilyId;
using homspace::HomogeneousPair;
using liealg::Vector;

class NotFamilyA2 : public Error {
 public:
  using Error::Error;
};
class SymmetricLocus : public Error {
 public:
  using Error::Error;
};
class CaseConstraintViolated : public Error {
 public:
  CaseConstraintViolated(std::string constraint, const Scalar& residual)
      : Error("case constraint violated: " + constraint + " (residual " + residual.str() + ")"),
        constraint_(std::move(constraint)),
        residual_(residual) {}
  const std::string& constraint() const { return constraint_; }
  const Scalar& residual() const { return residual_; }

 private:
  std::string constraint_;
  Scalar residual_;
};
class DegenerateFrame : public Error {
 public:
  using Error::Error;
};
class NormalComponentNonzero : public Error {
 public:
  using Error::Error;
};
class FrameGramSingular : public Error {
 public:
  using Error::Error;
};
class NotASubalgebra : public Error {
 public:
  using Error::Error;
};
class InducedMetricDegenerate : public Error {
 public:
  using Error::Error;
};

/// The pair with metric -2 th1 th3 + th2^2 + th3^2 + d th4^2, and the
/// automorphism of m relating it to the input metric. The square roots of a
/// and b appear as the symbols in `sqrt_symbols` (s_a^2 = a, s_b^2 = b).
struct A2Normalization {
  HomogeneousPair pair;
  Matrix automorphism;
  std::vector<std::string> sqrt_symbols;
};
/// Throws NotFamilyA2 when the pair is not an A2 pair, SymmetricLocus when b = 0.
A2Normalization normalize_A2_metric(const HomogeneousPair& p);

/// Coefficients a, b, c, d (and kappa, eta where meaningful) read off the
/// bracket table and Gram matrix of a built-in-shaped pair.
Bindings family_coefficients(const FamilyId& id, const HomogeneousPair& p);

/// A normal vector in u-coordinates with <xi, xi> = eps identically.
class NormalField {
 public:
  /// Throws ValidationError("normal-norm") when <xi, xi> - eps is not zero.
  NormalField(const HomogeneousPair& p, Vector xi, int eps);
  const Vector& xi() const { return xi_; }
  int eps() const { return eps_; }

 private:
  Vector xi_;
  int eps_;
};

struct TangentFrame {
  std::vector<Vector> v;
  /// 4x3 matrix with the frame vectors as columns.
  Matrix as_matrix() const;
  /// Induced 3x3 Gram matrix.
  Matrix gram(const HomogeneousPair& p) const;
};

enum class CaseTag { i, ii, iii };
std::string case_name(CaseTag t);
std::optional<CaseTag> parse_case(const std::string& s);

/// The frames orthogonal to xi used for each case of the classification.
/// Checks the case's algebraic constraints and rank / orthogonality.
TangentFrame frame_for_case(const FamilyId& id, CaseTag tag, const HomogeneousPair& p, const NormalField& xi);
/// A user-supplied frame, validated (orthogonal to xi, non-degenerate Gram).
TangentFrame custom_frame(const HomogeneousPair& p, const NormalField& xi, std::vector<Vector> v);
/// Some basis of the orthogonal complement of xi.
TangentFrame orthogonal_frame(const HomogeneousPair& p, const NormalField& xi);

/// R(V1,V2)xi, R(V1,V3)xi, R(V2,V3)xi.
std::vector<Vector> codazzi_residual(const CurvatureData& r, const NormalField& xi, const TangentFrame& f);

struct ShapeData {
  Matrix s;     ///< column j: frame coordinates of S V_j
  Matrix h2ff;  ///< h(V_i, V_j) = eps <lambda(V_i)V_j, xi>
};
/// S V = -lambda(V)xi, expressed in the frame. Throws NormalComponentNonzero
/// if some -lambda(V_i)xi has a normal part, FrameGramSingular for a
/// degenerate frame.
ShapeData shape_operator(const HomogeneousPair& p, const ConnectionData& c, const NormalField& xi,
                         const TangentFrame& f);

/// <S V_i, V_j> - <V_i, S V_j>.
Matrix self_adjoint_residual(const HomogeneousPair& p, const TangentFrame& f, const ShapeData& s);

struct ParallelResult {
  /// residual[i][j] = tan(lambda(V_i) S V_j) - S tan(lambda(V_i) V_j), in u-coordinates.
  std::vector<std::vector<Vector>> residual;
  bool totally_geodesic = false;
  bool parallel = false;
  bool proper_parallel() const { return parallel && !totally_geodesic; }
};
ParallelResult parallel_residual(const HomogeneousPair& p, const ConnectionData& c, const NormalField& xi,
                                 const TangentFrame& f, const ShapeData& s);

/// Levi-Civita data of the orbit through the origin of the subgroup whose
/// algebra is span(V) (or span(V) + h when that is the smallest closed one).
struct IntrinsicGeometry {
  HomogeneousPair pair;
  ConnectionData conn;
  CurvatureData curv;
  bool with_isotropy = false;
  /// lambda^K(V_i)V_j - tan(lambda(V_i)V_j) in frame coordinates; must vanish.
  std::vector<Vector> tangential_mismatch;
  bool consistent() const;
};
/// Throws NotASubalgebra, InducedMetricDegenerate.
IntrinsicGeometry intrinsic_geometry(const HomogeneousPair& p, const ConnectionData& c, const NormalField& xi,
                                     const TangentFrame& f);

struct GaussCodazzi {
  std::vector<Scalar> gauss;    ///< over (i,j,k,l)
  std::vector<Scalar> codazzi;  ///< over (i,j,k)
  bool all_zero() const;
};
GaussCodazzi gauss_codazzi_verify(const HomogeneousPair& p, const CurvatureData& r, const NormalField& xi,
                                  const TangentFrame& f, const ShapeData& s, const IntrinsicGeometry& k);

/// Everything computed for one normal and frame.
struct Classification {
  std::vector<Vector> codazzi;
  bool codazzi_zero = false;
  std::optional<ShapeData> shape;
  std::optional<Matrix> self_adjoint;
  bool self_adjoint_zero = false;
  std::optional<ParallelResult> parallel;
  std::optional<IntrinsicGeometry> intrinsic;
  std::optional<GaussCodazzi> gauss_codazzi;
  std::string intrinsic_note;

  /// Codazzi second fundamental form: R(V,W)xi = 0 and an integrable
  /// (self-adjoint) shape operator.
  bool codazzi_form() const { return codazzi_zero && self_adjoint_zero; }
  bool is_parallel() const { return codazzi_form() && parallel && parallel->parallel; }
  bool is_totally_geodesic() const { return codazzi_form() && parallel && parallel->totally_geodesic; }
  bool is_proper_parallel() const { return is_parallel() && !parallel->totally_geodesic; }
};
Classification classify_normal(const HomogeneousPair& p, const ConnectionData& c, const CurvatureData& r,
                               const NormalField& xi, const TangentFrame& f);

/// A case of the classification set up with symbolic constant components:
/// the norm equation is solved for one metric coefficient and substituted
/// into the pair. A2 cases use the normalized pair.
struct CaseSetup {
  FamilyId family;
  CaseTag tag;
  int eps = 1;
  HomogeneousPair pair;
  ConnectionData conn;
  CurvatureData curv;
  NormalField xi;
  TangentFrame frame;
  /// The substitution that solved the norm equation, e.g. d = eps/delta^2.
  Bindings solved;
  /// Symbols that the case requires nonzero.
  std::vector<std::string> nonzero_symbols;
};
/// `overrides` binds any of the free symbols (alpha, beta, gamma, delta,
/// kappa, a, b, c, d) before the pair is built; for A2 (ii) beta defaults to 1.
CaseSetup case_setup(const FamilyId& id, CaseTag tag, int eps, const Bindings& overrides = {});
/// The cases that exist for a family (A1 and B1 have none).
std::vector<CaseTag> family_cases(const FamilyId& id);
/// Symbols the normal components and solved pair depend on, in a fixed order.
std::vector<std::string> case_symbols(const FamilyId& id, CaseTag tag);

/// Deterministic source of small rationals p/q with |p|, q <= 20.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed);
  cas::Rational next();
  cas::Rational next_nonzero();
  int next_sign();
  std::uint64_t next_index(std::uint64_t bound);

 private:
  std::uint64_t state_;
  std::uint64_t raw();
};

struct SweepSample {
  cas::Bindings params;
  Vector xi;
  int eps = 1;
  bool codazzi_zero = false;
};
struct SweepResult {
  std::size_t attempted = 0;  ///< draws, including rejected ones
  std::vector<SweepSample> samples;
  std::size_t codazzi_hits() const;
};
/// Draws `count` rational pairs (params off the symmetric locus and
/// satisfying the nonzero constraints) with random constant unit normals and
/// tests R(X,Y)xi = 0 on the orthogonal complement.
SweepResult refutation_sweep(const FamilyId& id, std::size_t count, std::uint64_t seed);

/// One step of a symbolic non-existence argument: with `assume` substituted,
/// X and Y are orthogonal to xi and R(X,Y)xi = 0 forces each polynomial in
/// `forced` to vanish in turn. A polynomial is forced when some component of
/// the residual is that polynomial times a product of `nonzero` factors; a
/// forced single symbol is set to zero before looking at the next one.
struct ProofStep {
  std::string label;
  Bindings assume;
  Vector x, y;
  std::vector<Scalar> forced;
  std::vector<Scalar> nonzero;
};
struct ProofStepResult {
  ProofStep step;
  bool orthogonal = false;
  Vector residual;
  bool residual_nonzero = false;
  /// Index of the residual component exhibiting each forced factor.
  std::vector<std::optional<std::size_t>> forced_by;
  Scalar content;  ///< gcd of the residual numerators
  bool ok() const;
};
/// The steps for A1 and B1 (empty for the other families).
std::vector<ProofStep> nonexistence_steps(const FamilyId& id);
std::vector<ProofStepResult> replay_nonexistence(const FamilyId& id);

}  // namespace homkernel::hypersurface
