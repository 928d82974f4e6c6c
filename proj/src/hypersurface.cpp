#include "homkernel/hypersurface.hpp"

#include <algorithm>

namespace homkernel::hypersurface {

using cas::Poly;
using cas::Rational;
using homspace::Family;

namespace {

Scalar sym(const std::string& name) { return Scalar::param(name); }

Vector combo(std::initializer_list<Scalar> xs) { return Vector(xs); }

Vector sub(const Vector& v, const Bindings& b) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = cas::substitute(v[i], b);
  return out;
}

// p reduced modulo s^2 = r, as A + B s.
std::pair<Poly, Poly> split_sqrt(const Poly& p, const std::string& s, const Poly& r) {
  Poly even, odd;
  const auto cs = p.coeffs_in(s);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    Poly term = cs[k] * r.pow(static_cast<std::uint32_t>(k / 2));
    (k % 2 ? odd : even) += term;
  }
  return {even, odd};
}

// Eliminates odd powers of s from the denominator and reduces s^2 -> r.
Scalar reduce_sqrt(const Scalar& x, const std::string& s, const Poly& r) {
  auto [na, nb] = split_sqrt(x.num(), s, r);
  auto [da, db] = split_sqrt(x.den(), s, r);
  const Poly sp = Poly::variable(s);
  if (db.is_zero()) return Scalar(na + nb * sp, da);
  // (na + nb s)(da - db s) / (da^2 - db^2 r)
  Poly num = na * da - nb * db * r;
  Poly num_s = nb * da - na * db;
  return Scalar(num + num_s * sp, da * da - db * db * r);
}

Scalar reduce_sqrts(Scalar x, const std::vector<std::pair<std::string, Poly>>& roots) {
  for (const auto& [s, r] : roots) x = reduce_sqrt(x, s, r);
  return x;
}

std::optional<Rational> rational_sqrt(const Scalar& x) {
  if (!x.is_constant()) return std::nullopt;
  Rational q = x.constant_value();
  if (sgn(q) <= 0 || !mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rational(n, d);
}

bool is_builtin_shape(const HomogeneousPair& p, const HomogeneousPair& ref) {
  return p.g().dim() == ref.g().dim() && p.isotropy() == ref.isotropy() && p.complement() == ref.complement();
}

void require_zero(const Scalar& x, const std::string& what) {
  if (!x.is_zero()) throw CaseConstraintViolated(what, x);
}

void require_nonzero(const Scalar& x, const std::string& what) {
  if (x.is_zero()) throw CaseConstraintViolated(what, x);
}

Vector frame_coords(const HomogeneousPair& p, const TangentFrame& f, const Matrix& gram_inv, const Vector& w) {
  Vector low(f.v.size());
  for (std::size_t i = 0; i < f.v.size(); ++i) low[i] = p.inner(f.v[i], w);
  return gram_inv.apply(low);
}

Vector from_coords(const TangentFrame& f, const Vector& c) {
  Vector out(f.v[0].size());
  for (std::size_t i = 0; i < f.v.size(); ++i)
    if (!c[i].is_zero()) out = out + cas::scaled(f.v[i], c[i]);
  return out;
}

Vector tangential(const HomogeneousPair& p, const NormalField& xi, const Vector& w) {
  Scalar t = p.inner(w, xi.xi()) * Scalar(xi.eps());
  if (t.is_zero()) return w;
  return w - cas::scaled(xi.xi(), t);
}

Matrix induced_gram_inverse(const HomogeneousPair& p, const TangentFrame& f) {
  Matrix g = f.gram(p);
  if (cas::determinant(g).is_zero()) throw FrameGramSingular("induced Gram matrix of the frame is singular");
  return cas::inverse(g);
}

}  // namespace

// ---------------------------------------------------------------------------

A2Normalization normalize_A2_metric(const HomogeneousPair& p) {
  const HomogeneousPair ref = homspace::builtin_pair(FamilyId::a2());
  if (!is_builtin_shape(p, ref)) throw NotFamilyA2("pair " + p.name() + " does not have the A2 shape");
  Bindings co = family_coefficients(FamilyId::a2(), p);
  Bindings kap{{"kappa", co["kappa"]}};
  if (!(ref.specialize(kap).g() == p.g())) throw NotFamilyA2("bracket table of " + p.name() + " is not A2");
  if (!(ref.gram().map(co) == p.gram())) throw NotFamilyA2("metric of " + p.name() + " is not an A2 metric");
  const Scalar a = co["a"], b = co["b"], c = co["c"], d = co["d"];
  if (b.is_zero()) throw SymmetricLocus("b = 0: the A2 pair is locally symmetric");
  // s_a^2 = a, s_b^2 = b; the entries 1/s are written s/a so that s only
  // occurs in numerators.
  const std::string sa = "s_a", sb = "s_b";
  if (!a.den().is_constant() || !b.den().is_constant())
    throw NotFamilyA2("normalization needs polynomial coefficients a and b");
  std::vector<std::pair<std::string, Poly>> rel = {{sa, a.num().scaled(Rational(1) / a.den().constant_value())},
                                                    {sb, b.num().scaled(Rational(1) / b.den().constant_value())}};
  // Rational squares get their exact root and no symbol.
  std::vector<std::string> used;
  auto root = [&](const Scalar& x, const std::string& s) {
    if (auto q = rational_sqrt(x)) return Scalar(*q);
    used.push_back(s);
    return sym(s);
  };
  const Scalar Sa = root(a, sa), Sb = root(b, sb);
  std::sort(used.begin(), used.end());
  Matrix P{{Sb / a, 0, 0, c / a}, {0, Sa / a, 0, 0}, {0, 0, Sb / b, 0}, {0, 0, 0, 1}};

  // m is a subalgebra for A2; P must preserve its bracket.
  const std::size_t n = p.dim_m();
  std::vector<std::vector<Vector>> br(n, std::vector<Vector>(n, Vector(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto [hpart, mpart] = p.bracket_m(liealg::basis_vector(n, i), liealg::basis_vector(n, j));
      if (!cas::is_zero(hpart)) throw NotFamilyA2("complement is not a subalgebra");
      br[i][j] = mpart;
    }
  liealg::LieAlgebra mlie({"u1", "u2", "u3", "u4"}, br);
  // Bracket preservation: [P u_i, P u_j] = P [u_i, u_j].
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector lhs = liealg::bracket(mlie, P.col(i), P.col(j));
      Vector rhs = P.apply(br[i][j]);
      for (std::size_t k = 0; k < n; ++k)
        if (!reduce_sqrts(lhs[k] - rhs[k], rel).is_zero())
          throw ValidationError("A2 normalization", "automorphism fails on [u" + std::to_string(i + 1) + ",u" +
                                                        std::to_string(j + 1) + "]");
    }

  Bindings norm{{"a", Scalar(1)}, {"b", Scalar(1)}, {"c", Scalar(0)}};
  if (!(d == sym("d"))) norm["d"] = d;
  if (!(co["kappa"] == sym("kappa"))) norm["kappa"] = co["kappa"];
  HomogeneousPair target = ref.specialize(norm, p.name() + "-normalized");

  Matrix pulled = P.transpose() * p.gram() * P;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(reduce_sqrts(pulled(i, j), rel) == target.gram()(i, j)))
        throw ValidationError("A2 normalization", "pulled-back metric differs at (" + std::to_string(i + 1) + "," +
                                                      std::to_string(j + 1) + ")");
  return {std::move(target), std::move(P), std::move(used)};
}

Bindings family_coefficients(const FamilyId& id, const HomogeneousPair& p) {
  const Matrix& G = p.gram();
  switch (id.tag) {
    case Family::A1:
      return {{"a", G(0, 0)}, {"b", G(1, 1)}, {"c", G(1, 2)}, {"d", G(2, 2)}};
    case Family::A2:
      return {{"a", G(1, 1)},
              {"b", G(2, 2)},
              {"c", G(2, 3)},
              {"d", G(3, 3)},
              {"kappa", p.g().constant(1, 4, 1)}};
    case Family::A3:
      return {{"a", G(1, 1)}, {"b", G(2, 2)}, {"c", G(2, 3)}, {"d", G(3, 3)}, {"eta", -p.g().constant(1, 4, 2)}};
    case Family::A4:
    case Family::B2:
      return {{"a", G(1, 2)}, {"b", G(1, 1)}, {"eta", G(0, 0) / G(1, 2)}};
    case Family::B1:
      return {{"a", G(0, 2)}, {"b", G(1, 1)}, {"c", G(1, 2)}, {"d", G(2, 2)}};
  }
  return {};
}

// ---------------------------------------------------------------------------

NormalField::NormalField(const HomogeneousPair& p, Vector xi, int eps) : xi_(std::move(xi)), eps_(eps) {
  if (eps != 1 && eps != -1) throw ValidationError("normal-norm", "eps must be +1 or -1");
  if (xi_.size() != p.dim_m()) throw DimensionMismatch("normal has the wrong number of components");
  Scalar r = p.inner(xi_, xi_) - Scalar(eps);
  if (!r.is_zero()) throw ValidationError("normal-norm", "<xi,xi> - eps = " + r.str());
}

Matrix TangentFrame::as_matrix() const { return Matrix::from_columns(v); }

Matrix TangentFrame::gram(const HomogeneousPair& p) const {
  Matrix g(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) g(i, j) = p.inner(v[i], v[j]);
  return g;
}

std::string case_name(CaseTag t) {
  switch (t) {
    case CaseTag::i: return "i";
    case CaseTag::ii: return "ii";
    case CaseTag::iii: return "iii";
  }
  return "?";
}

std::optional<CaseTag> parse_case(const std::string& s) {
  if (s == "i" || s == "1") return CaseTag::i;
  if (s == "ii" || s == "2") return CaseTag::ii;
  if (s == "iii" || s == "3") return CaseTag::iii;
  return std::nullopt;
}

TangentFrame custom_frame(const HomogeneousPair& p, const NormalField& xi, std::vector<Vector> v) {
  if (v.size() + 1 != p.dim_m()) throw DegenerateFrame("a frame needs " + std::to_string(p.dim_m() - 1) + " vectors");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].size() != p.dim_m()) throw DimensionMismatch("frame vector has the wrong number of components");
    Scalar ip = p.inner(v[i], xi.xi());
    if (!ip.is_zero()) throw DegenerateFrame("V" + std::to_string(i + 1) + " is not orthogonal to xi: " + ip.str());
  }
  TangentFrame f{std::move(v)};
  if (cas::determinant(f.gram(p)).is_zero()) throw DegenerateFrame("induced Gram matrix is singular");
  return f;
}

TangentFrame orthogonal_frame(const HomogeneousPair& p, const NormalField& xi) {
  Vector row = p.gram().apply(xi.xi());
  Matrix a(1, p.dim_m());
  for (std::size_t j = 0; j < p.dim_m(); ++j) a(0, j) = row[j];
  return custom_frame(p, xi, cas::nullspace(a));
}

TangentFrame frame_for_case(const FamilyId& id, CaseTag tag, const HomogeneousPair& p, const NormalField& n) {
  const Vector& x = n.xi();
  const Scalar &al = x[0], &be = x[1], &ga = x[2], &de = x[3];
  Bindings co = family_coefficients(id, p);
  std::vector<Vector> v;
  auto bad_case = [&] { return Error("family " + id.str() + " has no case " + case_name(tag)); };
  switch (id.tag) {
    case Family::A2: {
      require_zero(co["a"] - Scalar(1), "normalized A2 metric (a = 1)");
      require_zero(co["b"] - Scalar(1), "normalized A2 metric (b = 1)");
      require_zero(co["c"], "normalized A2 metric (c = 0)");
      const Scalar d = co["d"];
      if (tag == CaseTag::i) {
        require_zero(be, "beta = 0");
        require_zero(ga, "gamma = 0");
        v = {combo({1, 0, 0, 0}), combo({0, 1, 0, 0}), combo({0, 0, d * de, al})};
      } else if (tag == CaseTag::ii) {
        require_zero(ga, "gamma = 0");
        require_zero(de, "delta = 0");
        require_zero(Scalar(n.eps() - 1), "eps = 1");
        v = {combo({1, 0, 0, 0}), combo({0, al, be, 0}), combo({0, 0, 0, 1})};
      } else {
        require_zero(co["kappa"] - Scalar(2), "kappa = 2");
        require_zero(ga, "gamma = 0");
        require_nonzero(be, "beta != 0");
        require_nonzero(de, "delta != 0");
        v = {combo({1, 0, 0, 0}), combo({0, d * de, 0, -be}), combo({0, al, be, 0})};
      }
      break;
    }
    case Family::A3: {
      const Scalar a = co["a"], b = co["b"], c = co["c"];
      if (tag == CaseTag::i) {
        require_zero(ga, "gamma = 0");
        require_zero(de, "delta = 0");
        v = {combo({1, 0, 0, 0}), combo({0, 0, 1, 0}), combo({0, al, 0, -be})};
      } else if (tag == CaseTag::ii) {
        require_zero(be, "beta = 0");
        require_zero(de, "delta = 0");
        v = {combo({1, 0, 0, 0}), combo({0, 1, 0, 0}), combo({0, 0, a * al + c * ga, -b * ga})};
      } else {
        throw bad_case();
      }
      break;
    }
    case Family::A4:
    case Family::B2: {
      const Scalar eta = co["eta"];
      if (tag == CaseTag::i) {
        require_zero(al, "alpha = 0");
        require_zero(be, "beta = 0");
        v = {combo({1, 0, 0, 0}), combo({0, de, 0, Scalar(-2) * ga}), combo({0, 0, 1, 0})};
      } else if (tag == CaseTag::ii) {
        require_zero(be, "beta = 0");
        require_zero(de, "delta = 0");
        v = {combo({0, 0, 0, 1}), combo({ga, -eta * al, 0, 0}), combo({0, 0, 1, 0})};
      } else {
        throw bad_case();
      }
      break;
    }
    case Family::A1:
    case Family::B1:
      throw bad_case();
  }
  return custom_frame(p, n, std::move(v));
}

// ---------------------------------------------------------------------------

std::vector<Vector> codazzi_residual(const CurvatureData& r, const NormalField& xi, const TangentFrame& f) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < f.v.size(); ++i)
    for (std::size_t j = i + 1; j < f.v.size(); ++j) out.push_back(r.apply(f.v[i], f.v[j], xi.xi()));
  return out;
}

ShapeData shape_operator(const HomogeneousPair& p, const ConnectionData& c, const NormalField& xi,
                         const TangentFrame& f) {
  const std::size_t k = f.v.size();
  Matrix ginv = induced_gram_inverse(p, f);
  ShapeData out{Matrix(k, k), Matrix(k, k)};
  const Scalar eps(xi.eps());
  for (std::size_t i = 0; i < k; ++i) {
    Matrix lam = c.of_m(f.v[i]);
    Vector w = cas::scaled(lam.apply(xi.xi()), Scalar(-1));
    Scalar normal = p.inner(w, xi.xi());
    if (!normal.is_zero()) throw NormalComponentNonzero("<S V" + std::to_string(i + 1) + ", xi> = " + normal.str());
    Vector coords = frame_coords(p, f, ginv, w);
    if (!cas::is_zero(from_coords(f, coords) - w))
      throw NormalComponentNonzero("S V" + std::to_string(i + 1) + " is not in the span of the frame");
    out.s.set_col(i, coords);
    for (std::size_t j = 0; j < k; ++j) out.h2ff(i, j) = eps * p.inner(lam.apply(f.v[j]), xi.xi());
  }
  // <S V_i, V_j> = <lambda(V_i)V_j, xi> = eps h(V_i, V_j).
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!(p.inner(from_coords(f, out.s.col(i)), f.v[j]) == eps * out.h2ff(i, j)))
        throw ValidationError("shape operator", "<S V_i, V_j> != eps h(V_i, V_j) at (" + std::to_string(i + 1) +
                                                    "," + std::to_string(j + 1) + ")");
  return out;
}

Matrix self_adjoint_residual(const HomogeneousPair& p, const TangentFrame& f, const ShapeData& s) {
  const std::size_t k = f.v.size();
  Matrix out(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      out(i, j) = p.inner(from_coords(f, s.s.col(i)), f.v[j]) - p.inner(f.v[i], from_coords(f, s.s.col(j)));
  return out;
}

ParallelResult parallel_residual(const HomogeneousPair& p, const ConnectionData& c, const NormalField& xi,
                                 const TangentFrame& f, const ShapeData& s) {
  const std::size_t k = f.v.size();
  Matrix ginv = induced_gram_inverse(p, f);
  auto apply_s = [&](const Vector& tangent) { return from_coords(f, s.s.apply(frame_coords(p, f, ginv, tangent))); };
  ParallelResult out;
  out.residual.assign(k, std::vector<Vector>(k));
  out.parallel = true;
  for (std::size_t i = 0; i < k; ++i) {
    Matrix lam = c.of_m(f.v[i]);
    for (std::size_t j = 0; j < k; ++j) {
      Vector svj = from_coords(f, s.s.col(j));
      Vector res = tangential(p, xi, lam.apply(svj)) - apply_s(tangential(p, xi, lam.apply(f.v[j])));
      if (!cas::is_zero(res)) out.parallel = false;
      out.residual[i][j] = std::move(res);
    }
  }
  out.totally_geodesic = s.s.is_zero();
  return out;
}

bool IntrinsicGeometry::consistent() const {
  return std::all_of(tangential_mismatch.begin(), tangential_mismatch.end(),
                     [](const Vector& v) { return cas::is_zero(v); });
}

IntrinsicGeometry intrinsic_geometry(const HomogeneousPair& p, const ConnectionData& c, const NormalField& xi,
                                     const TangentFrame& f) {
  const std::size_t k = f.v.size();
  std::vector<Vector> span;
  for (const auto& v : f.v) span.push_back(p.embed_m(v));
  bool with_h = false;
  if (!std::holds_alternative<liealg::Closed>(liealg::is_subalgebra(p.g(), span))) {
    std::vector<Vector> wider = p.isotropy();
    wider.insert(wider.end(), span.begin(), span.end());
    if (!std::holds_alternative<liealg::Closed>(liealg::is_subalgebra(p.g(), wider)))
      throw NotASubalgebra("neither span(V) nor span(V) + h is closed under the bracket");
    span = std::move(wider);
    with_h = true;
  }
  Matrix gram = f.gram(p);
  if (cas::determinant(gram).is_zero()) throw InducedMetricDegenerate("induced metric on span(V) is degenerate");
  const std::size_t dh = with_h ? p.dim_h() : 0;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dh; ++i) names.push_back("h" + std::to_string(i + 1));
  for (std::size_t i = 0; i < k; ++i) names.push_back("V" + std::to_string(i + 1));
  liealg::LieAlgebra sub = liealg::restrict_to(p.g(), span, names);
  std::vector<Vector> iso, comp;
  for (std::size_t i = 0; i < dh; ++i) iso.push_back(liealg::basis_vector(dh + k, i));
  for (std::size_t i = 0; i < k; ++i) comp.push_back(liealg::basis_vector(dh + k, dh + i));
  HomogeneousPair kp(p.name() + "-orbit", p.params(), p.nonzero(), std::move(sub), std::move(iso), std::move(comp),
                     gram);
  ConnectionData kc = connection::compute_lambda(kp);
  CurvatureData kr = connection::curvature(kp, kc);
  IntrinsicGeometry out{std::move(kp), std::move(kc), std::move(kr), with_h, {}};
  Matrix ginv = cas::inverse(gram);
  for (std::size_t i = 0; i < k; ++i) {
    Matrix lam = c.of_m(f.v[i]);
    for (std::size_t j = 0; j < k; ++j)
      out.tangential_mismatch.push_back(out.conn.on_m[i].col(j) -
                                        frame_coords(p, f, ginv, tangential(p, xi, lam.apply(f.v[j]))));
  }
  return out;
}

bool GaussCodazzi::all_zero() const {
  auto z = [](const Scalar& s) { return s.is_zero(); };
  return std::all_of(gauss.begin(), gauss.end(), z) && std::all_of(codazzi.begin(), codazzi.end(), z);
}

GaussCodazzi gauss_codazzi_verify(const HomogeneousPair& p, const CurvatureData& r, const NormalField& xi,
                                  const TangentFrame& f, const ShapeData& s, const IntrinsicGeometry& kg) {
  const std::size_t k = f.v.size();
  const Scalar eps(xi.eps());
  const Matrix& h = s.h2ff;
  auto hform = [&](const Vector& x, const Vector& y) { return cas::dot(x, h.apply(y)); };
  auto nabla = [&](std::size_t i, std::size_t j) { return kg.conn.on_m[i].col(j); };
  auto e = [&](std::size_t i) { return liealg::basis_vector(k, i); };
  GaussCodazzi out;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t l = 0; l < k; ++l) {
          Scalar ambient = p.inner(r.apply(f.v[i], f.v[j], f.v[a]), f.v[l]);
          Scalar intrinsic = kg.pair.inner(kg.curv.at(i, j).col(a), e(l));
          Scalar quad = h(i, a) * h(j, l) - h(i, l) * h(j, a);
          out.gauss.push_back(ambient - intrinsic - eps * quad);
        }
  // (nabla h)(V_i; V_j, V_k) for constant h(V_j, V_k).
  auto dh = [&](std::size_t i, std::size_t j, std::size_t a) {
    return -(hform(nabla(i, j), e(a)) + hform(e(j), nabla(i, a)));
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t a = 0; a < k; ++a) {
        Scalar lhs = eps * p.inner(r.apply(f.v[i], f.v[j], f.v[a]), xi.xi());
        out.codazzi.push_back(lhs - (dh(i, j, a) - dh(j, i, a)));
      }
  return out;
}

Classification classify_normal(const HomogeneousPair& p, const ConnectionData& c, const CurvatureData& r,
                               const NormalField& xi, const TangentFrame& f) {
  Classification out;
  out.codazzi = codazzi_residual(r, xi, f);
  out.codazzi_zero =
      std::all_of(out.codazzi.begin(), out.codazzi.end(), [](const Vector& v) { return cas::is_zero(v); });
  out.shape = shape_operator(p, c, xi, f);
  out.self_adjoint = self_adjoint_residual(p, f, *out.shape);
  out.self_adjoint_zero = out.self_adjoint->is_zero();
  out.parallel = parallel_residual(p, c, xi, f, *out.shape);
  try {
    out.intrinsic = intrinsic_geometry(p, c, xi, f);
    out.gauss_codazzi = gauss_codazzi_verify(p, r, xi, f, *out.shape, *out.intrinsic);
  } catch (const NotASubalgebra& e) {
    out.intrinsic_note = e.what();
  } catch (const InducedMetricDegenerate& e) {
    out.intrinsic_note = e.what();
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<CaseTag> family_cases(const FamilyId& id) {
  switch (id.tag) {
    case Family::A2: return {CaseTag::i, CaseTag::ii, CaseTag::iii};
    case Family::A3:
    case Family::A4:
    case Family::B2: return {CaseTag::i, CaseTag::ii};
    default: return {};
  }
}

std::vector<std::string> case_symbols(const FamilyId& id, CaseTag tag) {
  switch (id.tag) {
    case Family::A2:
      if (tag == CaseTag::i) return {"kappa", "alpha", "delta"};
      if (tag == CaseTag::ii) return {"kappa", "d", "alpha"};
      return {"alpha", "beta", "delta"};
    case Family::A3:
      if (tag == CaseTag::i) return {"b", "c", "d", "alpha", "beta"};
      return {"a", "c", "d", "alpha", "gamma"};
    case Family::A4:
    case Family::B2:
      if (tag == CaseTag::i) return {"b", "gamma", "delta"};
      return {"b", "alpha", "gamma"};
    default: return {};
  }
}

CaseSetup case_setup(const FamilyId& id, CaseTag tag, int eps, const Bindings& overrides) {
  auto cases = family_cases(id);
  if (std::find(cases.begin(), cases.end(), tag) == cases.end())
    throw Error("family " + id.str() + " has no case " + case_name(tag));
  HomogeneousPair base =
      id.tag == Family::A2 ? normalize_A2_metric(homspace::builtin_pair(id)).pair : homspace::builtin_pair(id);
  auto val = [&](const std::string& name) {
    auto it = overrides.find(name);
    return it == overrides.end() ? sym(name) : it->second;
  };
  const Scalar E(eps);
  const Scalar al = val("alpha"), ga = val("gamma"), de = val("delta");
  Scalar be = val("beta");
  Vector xi;
  Bindings solved;
  std::vector<std::string> nz;
  const Scalar eta(id.eta);
  switch (id.tag) {
    case Family::A2:
      if (tag == CaseTag::i) {
        xi = {al, 0, 0, de};
        solved["d"] = E / (de * de);
        nz = {"delta"};
      } else if (tag == CaseTag::ii) {
        if (!overrides.count("beta")) be = Scalar(1);
        if (!(be * be == Scalar(1))) throw CaseConstraintViolated("beta^2 = 1", be * be - Scalar(1));
        require_zero(Scalar(eps - 1), "eps = 1");
        xi = {al, be, 0, 0};
      } else {
        xi = {al, be, 0, de};
        solved["kappa"] = Scalar(2);
        solved["d"] = (E - be * be) / (de * de);
        nz = {"beta", "delta"};
      }
      break;
    case Family::A3:
      if (tag == CaseTag::i) {
        xi = {al, be, 0, 0};
        solved["a"] = E / (be * be);
        nz = {"beta"};
      } else {
        xi = {al, 0, ga, 0};
        solved["b"] = E / (ga * ga);
        nz = {"gamma"};
      }
      break;
    case Family::A4:
    case Family::B2:
      if (tag == CaseTag::i) {
        xi = {0, 0, ga, de};
        solved["a"] = Scalar(2) * E / (de * de);
        nz = {"delta"};
      } else {
        xi = {al, 0, ga, 0};
        solved["a"] = E * eta / (al * al);
        nz = {"alpha"};
      }
      break;
    default:
      break;
  }
  Bindings pb;
  for (const auto& name : base.params())
    if (overrides.count(name)) pb[name] = overrides.at(name);
  for (const auto& [k, v] : solved) pb[k] = cas::substitute(v, overrides);
  HomogeneousPair pair = pb.empty() ? base : base.specialize(pb);
  NormalField n(pair, xi, eps);
  TangentFrame f = frame_for_case(id, tag, pair, n);
  ConnectionData c = connection::compute_lambda(pair);
  CurvatureData r = connection::curvature(pair, c);
  return CaseSetup{id, tag, eps, std::move(pair), std::move(c), std::move(r), std::move(n), std::move(f), pb,
                   std::move(nz)};
}

// ---------------------------------------------------------------------------

RationalSampler::RationalSampler(std::uint64_t seed) : state_(seed) {}

std::uint64_t RationalSampler::raw() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t RationalSampler::next_index(std::uint64_t bound) { return raw() % bound; }

Rational RationalSampler::next() {
  long p = static_cast<long>(next_index(41)) - 20;
  long q = static_cast<long>(next_index(20)) + 1;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational RationalSampler::next_nonzero() {
  for (;;) {
    Rational r = next();
    if (r != 0) return r;
  }
}

int RationalSampler::next_sign() { return next_index(2) ? 1 : -1; }

std::size_t SweepResult::codazzi_hits() const {
  return static_cast<std::size_t>(
      std::count_if(samples.begin(), samples.end(), [](const SweepSample& s) { return s.codazzi_zero; }));
}

namespace {

bool rational_sqrt(const Rational& x, Rational& out) {
  if (x < 0) return false;
  mpz_class n = x.get_num(), d = x.get_den();
  mpz_class rn = sqrt(n), rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  out = Rational(rn, rd);
  out.canonicalize();
  return true;
}

bool off_symmetric_locus(const FamilyId& id, const Bindings& b) {
  auto v = [&](const char* n) { return b.at(n).constant_value(); };
  switch (id.tag) {
    case Family::A1:
    case Family::A2:
    case Family::A4:
    case Family::B2: return v("b") != 0;
    case Family::A3: return v("d") + id.eta * v("b") != 0;
    case Family::B1: return !(v("b") == 0 && v("c") == 0 && v("d") == 0);
  }
  return true;
}

}  // namespace

SweepResult refutation_sweep(const FamilyId& id, std::size_t count, std::uint64_t seed) {
  const HomogeneousPair base = homspace::builtin_pair(id);
  RationalSampler rng(seed);
  SweepResult out;
  const std::size_t n = base.dim_m();
  while (out.samples.size() < count && out.attempted < 200 * count + 1000) {
    ++out.attempted;
    Bindings params;
    for (const auto& name : base.params()) params[name] = Scalar(rng.next());
    bool ok = off_symmetric_locus(id, params);
    for (const auto& z : base.nonzero())
      if (ok && cas::substitute(z, params).is_zero()) ok = false;
    if (!ok) continue;
    HomogeneousPair pair = base.specialize(params);
    const int eps = rng.next_sign();
    Vector xi(n);
    const std::size_t solve = rng.next_index(n);
    for (std::size_t i = 0; i < n; ++i)
      if (i != solve) xi[i] = Scalar(rng.next());
    // <xi, xi> = G_ss t^2 + 2 L t + C with t the unknown component.
    const Matrix& G = pair.gram();
    Rational gss = G(solve, solve).constant_value(), L = 0, C = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == solve) continue;
      L += G(solve, i).constant_value() * xi[i].constant_value();
      for (std::size_t j = 0; j < n; ++j)
        if (j != solve) C += xi[i].constant_value() * G(i, j).constant_value() * xi[j].constant_value();
    }
    Rational t;
    if (gss == 0) {
      if (L == 0) continue;
      t = (Rational(eps) - C) / (2 * L);
    } else {
      // gss t^2 + 2 L t + (C - eps) = 0
      Rational disc = L * L - gss * (C - eps), root;
      if (!rational_sqrt(disc, root)) continue;
      t = (-L + (rng.next_sign() > 0 ? root : Rational(-root))) / gss;
    }
    t.canonicalize();
    xi[solve] = Scalar(t);
    NormalField nf(pair, xi, eps);
    TangentFrame f = orthogonal_frame(pair, nf);
    ConnectionData c = connection::compute_lambda(pair);
    CurvatureData r = connection::curvature(pair, c);
    auto res = codazzi_residual(r, nf, f);
    bool zero = std::all_of(res.begin(), res.end(), [](const Vector& v) { return cas::is_zero(v); });
    out.samples.push_back({std::move(params), std::move(xi), eps, zero});
  }
  return out;
}

// ---------------------------------------------------------------------------

bool ProofStepResult::ok() const {
  return orthogonal && residual_nonzero &&
         std::all_of(forced_by.begin(), forced_by.end(), [](const auto& k) { return k.has_value(); });
}

namespace {

// True when p = f * (constant) * product of powers of the nonzero factors.
bool is_forced_component(const Poly& p, const Poly& f, const std::vector<Poly>& units) {
  if (p.is_zero()) return false;
  Poly q;
  if (!p.divide_exact(f, q)) return false;
  bool progress = true;
  while (!q.is_constant() && progress) {
    progress = false;
    for (const auto& u : units) {
      Poly next;
      if (!u.is_constant() && q.divide_exact(u, next)) {
        q = std::move(next);
        progress = true;
      }
    }
  }
  return q.is_constant();
}

}  // namespace

std::vector<ProofStep> nonexistence_steps(const FamilyId& id) {
  const Scalar a = sym("a"), b = sym("b"), c = sym("c"), d = sym("d");
  const Scalar al = sym("alpha"), be = sym("beta"), ga = sym("gamma"), de = sym("delta");
  const Scalar two(2), zero(0);
  std::vector<ProofStep> steps;
  if (id.tag == Family::A1) {
    const Scalar a4d = a - Scalar(4) * d;
    Vector X = {two * be, 0, 0, ga - two * al};
    Vector Y = {0, 0, two * a * be, a * al - two * c * be - two * d * ga};
    Vector Z = {0, a * be, 0, -(a * de + b * be)};
    steps.push_back({"beta != 0: R(X,Y)xi = 0 forces gamma = 0", {}, X, Y, {ga}, {a, a4d, be}});
    steps.push_back({"beta != 0, gamma = 0: R(Y,Z)xi = 0 forces b = 0", {{"gamma", zero}}, Y, Z, {b}, {a, a4d, be}});
    Vector X0 = {0, 0, 0, 1};
    Vector Y0 = {two * d * ga - a * al, 0, a * (ga - two * al), 0};
    steps.push_back({"beta = 0: R(X,Y)xi = 0 forces gamma (gamma - 2 alpha) = 0",
                     {{"beta", zero}}, X0, Y0, {ga * (ga - two * al)}, {a, a4d}});
    Vector Z0 = {de, -al, 0, 0};
    steps.push_back({"beta = gamma = 0: R(Y,Z)xi = 0 forces b = 0",
                     {{"beta", zero}, {"gamma", zero}}, Y0, Z0, {b}, {a, a4d, al}});
    Vector U1 = {1, 0, 0, 0};
    Vector W = {0, Scalar(4) * d * al - a * al, -two * (a * de + two * c * al), 0};
    steps.push_back({"beta = 0, gamma = 2 alpha: R(Z,W)xi = 0 forces b = 0",
                     {{"beta", zero}, {"gamma", two * al}}, U1, W, {b}, {a, a4d, al}});
  } else if (id.tag == Family::B1) {
    Vector X = {be, 0, 0, -ga};
    Vector Y = {0, a * be, 0, -(a * de + b * be + c * ga)};
    Vector Z = {0, 0, a * be, -(a * al + c * be + d * ga)};
    steps.push_back({"beta != 0: R(X,Z)xi = 0 forces d = 0, then c = 0", {}, X, Z, {d, c}, {a, be}});
    steps.push_back({"beta != 0, c = d = 0: R(X,Y)xi = 0 forces b = 0",
                     {{"c", zero}, {"d", zero}}, X, Y, {b}, {a, be}});
    Vector X0 = {a * al + d * ga, 0, -a * ga, 0};
    Vector Y0 = {a * de + c * ga, -a * ga, 0, 0};
    Vector Z0 = {0, 0, 0, 1};
    steps.push_back({"beta = 0: R(Y,Z)xi = 0 forces d = 0", {{"beta", zero}}, Y0, Z0, {d}, {a, ga}});
    steps.push_back({"beta = 0, d = 0: R(Y,Z)xi = 0 forces c = 0",
                     {{"beta", zero}, {"d", zero}}, Y0, Z0, {c}, {a, al, ga}});
    steps.push_back({"beta = 0, c = d = 0: R(X,Y)xi = 0 forces b = 0",
                     {{"beta", zero}, {"c", zero}, {"d", zero}}, X0, Y0, {b}, {a, al, ga}});
  }
  return steps;
}

std::vector<ProofStepResult> replay_nonexistence(const FamilyId& id) {
  std::vector<ProofStepResult> out;
  auto steps = nonexistence_steps(id);
  if (steps.empty()) return out;
  const HomogeneousPair p = homspace::builtin_pair(id);
  const ConnectionData c = connection::compute_lambda(p);
  const CurvatureData r = connection::curvature(p, c);
  const Vector xi = {sym("alpha"), sym("beta"), sym("gamma"), sym("delta")};
  for (auto& st : steps) {
    ProofStepResult res;
    Vector x = sub(st.x, st.assume), y = sub(st.y, st.assume), n = sub(xi, st.assume);
    res.orthogonal = cas::substitute(p.inner(x, n), st.assume).is_zero() &&
                     cas::substitute(p.inner(y, n), st.assume).is_zero();
    res.residual = sub(r.apply(x, y, n), st.assume);
    res.residual_nonzero = !cas::is_zero(res.residual);
    std::vector<Poly> units;
    for (const auto& u : st.nonzero) units.push_back(u.num());
    Vector current = res.residual;
    for (const auto& f : st.forced) {
      std::optional<std::size_t> hit;
      for (std::size_t k = 0; k < current.size() && !hit; ++k)
        if (is_forced_component(current[k].num(), f.num(), units)) hit = k;
      res.forced_by.push_back(hit);
      auto vars = f.variables();
      if (vars.size() == 1 && f == sym(*vars.begin())) current = sub(current, {{*vars.begin(), Scalar(0)}});
    }
    Poly g;
    for (const auto& s : res.residual) g = cas::gcd(g, s.num());
    res.content = Scalar(g);
    res.step = std::move(st);
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace homkernel::hypersurface
