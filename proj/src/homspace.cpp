#include "homkernel/homspace.hpp"

#include <algorithm>
#include <cctype>

#include "homkernel/errors.hpp"
#include "homkernel/spacefile.hpp"

namespace homkernel::homspace {

std::string FamilyId::tag_name() const {
  switch (tag) {
    case Family::A1: return "A1";
    case Family::A2: return "A2";
    case Family::A3: return "A3";
    case Family::A4: return "A4";
    case Family::B1: return "B1";
    case Family::B2: return "B2";
  }
  return "?";
}

std::string FamilyId::str() const {
  if (tag == Family::A3) return "A3(eta=" + std::to_string(eta) + ")";
  return tag_name();
}

std::optional<FamilyId> parse_family(const std::string& s) {
  std::string t;
  for (char c : s) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (t == "A1") return FamilyId::a1();
  if (t == "A2") return FamilyId::a2();
  if (t == "A3" || t == "A3+" || t == "A3(ETA=1)") return FamilyId::a3(1);
  if (t == "A3-" || t == "A3(ETA=-1)") return FamilyId::a3(-1);
  if (t == "A4") return FamilyId::a4();
  if (t == "B1") return FamilyId::b1();
  if (t == "B2") return FamilyId::b2();
  return std::nullopt;
}

std::vector<FamilyId> all_families() {
  return {FamilyId::a1(), FamilyId::a2(), FamilyId::a3(1), FamilyId::a3(-1),
          FamilyId::a4(), FamilyId::b1(), FamilyId::b2()};
}

// ---------------------------------------------------------------------------

HomogeneousPair::HomogeneousPair(std::string name, std::vector<std::string> params, std::vector<Scalar> nonzero,
                                 LieAlgebra g, std::vector<Vector> isotropy, std::vector<Vector> complement,
                                 Matrix gram)
    : name_(std::move(name)),
      params_(std::move(params)),
      nonzero_(std::move(nonzero)),
      g_(std::move(g)),
      h_(std::move(isotropy)),
      m_(std::move(complement)),
      gram_(std::move(gram)) {
  const std::size_t n = g_.dim();
  if (h_.size() + m_.size() != n)
    throw ValidationError("dimension", "dim h + dim m = " + std::to_string(h_.size() + m_.size()) +
                                           " but dim g = " + std::to_string(n));
  for (const auto& v : h_)
    if (v.size() != n) throw DimensionMismatch("isotropy vector has wrong length");
  for (const auto& v : m_)
    if (v.size() != n) throw DimensionMismatch("complement vector has wrong length");
  if (gram_.rows() != m_.size() || gram_.cols() != m_.size())
    throw ValidationError("metric", "Gram matrix must be " + std::to_string(m_.size()) + "x" +
                                        std::to_string(m_.size()));
  if (!gram_.is_symmetric()) throw ValidationError("metric symmetry", "Gram matrix is not symmetric");

  std::vector<Vector> cols = h_;
  cols.insert(cols.end(), m_.begin(), m_.end());
  try {
    split_ = cas::inverse(Matrix::from_columns(cols));
  } catch (const SingularMatrix&) {
    throw ValidationError("complement", "h and m do not span g independently");
  }
  auto closure = liealg::is_subalgebra(g_, h_);
  if (auto nc = std::get_if<liealg::NotClosed>(&closure))
    throw ValidationError("isotropy subalgebra", "[h" + std::to_string(nc->i + 1) + ",h" + std::to_string(nc->j + 1) +
                                                     "] escapes h by " + cas::vec_str(nc->escaping));
  try {
    gram_inv_ = cas::inverse(gram_);
  } catch (const SingularMatrix&) {
    throw ValidationError("metric non-degeneracy", "Gram determinant is identically zero");
  }
  for (const auto& z : nonzero_)
    if (z.is_zero()) throw ValidationError("parameter constraint", "a declared nonzero quantity is identically zero");
}

Vector HomogeneousPair::project_m(const Vector& x) const {
  Vector all = split_.apply(x);
  return Vector(all.begin() + static_cast<std::ptrdiff_t>(h_.size()), all.end());
}

Vector HomogeneousPair::project_h(const Vector& x) const {
  Vector all = split_.apply(x);
  return Vector(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(h_.size()));
}

Vector HomogeneousPair::embed_m(const Vector& x) const {
  Vector out(g_.dim());
  for (std::size_t i = 0; i < m_.size(); ++i)
    if (!x[i].is_zero()) out = out + cas::scaled(m_[i], x[i]);
  return out;
}

Vector HomogeneousPair::embed_h(const Vector& x) const {
  Vector out(g_.dim());
  for (std::size_t i = 0; i < h_.size(); ++i)
    if (!x[i].is_zero()) out = out + cas::scaled(h_[i], x[i]);
  return out;
}

std::pair<Vector, Vector> HomogeneousPair::bracket_m(const Vector& x, const Vector& y) const {
  Vector b = liealg::bracket(g_, embed_m(x), embed_m(y));
  return {project_h(b), project_m(b)};
}

Scalar HomogeneousPair::inner(const Vector& x, const Vector& y) const { return cas::dot(x, gram_.apply(y)); }

HomogeneousPair HomogeneousPair::specialize(const cas::Bindings& bindings, const std::string& new_name) const {
  auto sub_vec = [&](const Vector& v) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = cas::substitute(v[i], bindings);
    return out;
  };
  const std::size_t n = g_.dim();
  std::vector<std::vector<Vector>> c(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = sub_vec(g_.structure(i, j));
  std::vector<Vector> h, m;
  for (const auto& v : h_) h.push_back(sub_vec(v));
  for (const auto& v : m_) m.push_back(sub_vec(v));
  std::vector<Scalar> nz;
  for (const auto& z : nonzero_) {
    Scalar s = cas::substitute(z, bindings);
    if (s.is_zero()) throw ValidationError("parameter constraint", "binding makes " + z.str() + " vanish");
    if (!s.is_constant()) nz.push_back(s);
  }
  std::vector<std::string> params;
  for (const auto& p : params_)
    if (!bindings.count(p)) params.push_back(p);
  for (const auto& [k, v] : bindings)
    for (const auto& name : v.variables())
      if (std::find(params.begin(), params.end(), name) == params.end()) params.push_back(name);
  return HomogeneousPair(new_name.empty() ? name_ : new_name, std::move(params), std::move(nz),
                         LieAlgebra(g_.basis_names(), std::move(c)), std::move(h), std::move(m),
                         gram_.map(bindings));
}

bool HomogeneousPair::operator==(const HomogeneousPair& o) const {
  return g_ == o.g_ && h_ == o.h_ && m_ == o.m_ && gram_ == o.gram_;
}

// ---------------------------------------------------------------------------

Matrix gram_from_form(const Scalar& form, const std::vector<std::string>& coframe) {
  const std::size_t n = coframe.size();
  for (const auto& t : coframe)
    if (form.den().contains(t)) throw ValidationError("metric form", "coframe symbol " + t + " in a denominator");
  Matrix g(n, n);
  const cas::Poly& num = form.num();
  const cas::Scalar den_inv = Scalar(form.den()).inverse();
  // Split each term into its coframe part and its coefficient part.
  std::vector<std::vector<cas::Poly>> parts(n, std::vector<cas::Poly>(n));
  for (const auto& term : num.terms()) {
    std::vector<std::size_t> idx;
    std::vector<cas::Monomial::Factor> rest;
    for (const auto& [name, exp] : term.mono.factors()) {
      auto it = std::find(coframe.begin(), coframe.end(), name);
      if (it == coframe.end()) {
        rest.emplace_back(name, exp);
      } else {
        for (std::uint32_t e = 0; e < exp; ++e) idx.push_back(static_cast<std::size_t>(it - coframe.begin()));
      }
    }
    if (idx.size() != 2)
      throw ValidationError("metric form", "term " + cas::Poly::monomial(term.mono, term.coeff).str() +
                                               " is not quadratic in the coframe");
    std::sort(idx.begin(), idx.end());
    parts[idx[0]][idx[1]] += cas::Poly::monomial(cas::Monomial(std::move(rest)), term.coeff);
  }
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = Scalar(parts[i][i]) * den_inv;
    for (std::size_t j = i + 1; j < n; ++j) {
      g(i, j) = Scalar(parts[i][j]) * den_inv * Scalar::ratio(1, 2);
      g(j, i) = g(i, j);
    }
  }
  return g;
}

HomogeneousPair builtin_pair(const FamilyId& id) {
  return spacefile::parse_space(builtin_source(id), "builtin:" + id.str());
}

Scalar gram_det(const HomogeneousPair& p) { return cas::determinant(p.gram()); }

std::pair<int, int> signature(const Matrix& sym) {
  if (!sym.is_symmetric()) throw ValidationError("signature", "matrix is not symmetric");
  Matrix a = sym;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!a(i, j).is_constant()) throw Error("signature: matrix entries must be rational");
  int pos = 0, neg = 0;
  // Symmetric congruence: pivot on a nonzero diagonal entry; if none exists in
  // the active block, add a row/column with a nonzero off-diagonal entry.
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = n;
    for (std::size_t i = k; i < n; ++i)
      if (!a(i, i).is_zero()) {
        p = i;
        break;
      }
    if (p == n) {
      std::size_t r = n, s = n;
      for (std::size_t i = k; i < n && r == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!a(i, j).is_zero()) {
            r = i;
            s = j;
            break;
          }
      if (r == n) throw DegenerateError("metric is degenerate at this point");
      // e_r <- e_r + e_s makes the (r, r) entry 2 a(r, s) != 0.
      for (std::size_t j = 0; j < n; ++j) a(r, j) += a(s, j);
      for (std::size_t i = 0; i < n; ++i) a(i, r) += a(i, s);
      p = r;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, k));
    }
    const Scalar d = a(k, k);
    (d.constant_value() > 0 ? pos : neg)++;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Scalar f = a(i, k) / d;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      for (std::size_t j = k; j < n; ++j) a(j, i) = a(i, j);
    }
  }
  return {pos, neg};
}

std::pair<int, int> signature_at(const HomogeneousPair& p, const std::map<std::string, Rational>& values) {
  cas::Bindings b;
  for (const auto& [k, v] : values) b[k] = Scalar(v);
  Matrix g = p.gram().map(b);
  if (cas::determinant(g).is_zero()) throw DegenerateError("metric is degenerate at this point");
  return signature(g);
}

ReductivityDecision nonreductivity_decide(const HomogeneousPair& p) {
  const std::size_t k = p.dim_h();
  const std::size_t m = p.dim_m();
  ReductivityDecision out;
  if (k == 0) {
    out.kind = Reductive{Matrix(0, m)};
    return out;
  }
  // Unknown phi(u_j) = sum_l x[l][j] h_l, flattened as l * m + j.
  const std::size_t unknowns = k * m;
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (std::size_t a = 0; a < k; ++a) {
    const Vector& ha = p.isotropy()[a];
    for (std::size_t i = 0; i < m; ++i) {
      Vector br = liealg::bracket(p.g(), ha, p.complement()[i]);
      Vector br_h = p.project_h(br);
      Vector br_m = p.project_m(br);
      // Equation components along h_r: coefficient of each unknown.
      std::vector<std::vector<Scalar>> eq(k, std::vector<Scalar>(unknowns));
      for (std::size_t l = 0; l < k; ++l) {
        // [h_a, x[l][i] h_l] contributes x[l][i] * proj_h([h_a, h_l]).
        Vector hh = p.project_h(liealg::bracket(p.g(), ha, p.isotropy()[l]));
        for (std::size_t r = 0; r < k; ++r) eq[r][l * m + i] += hh[r];
        // -phi(br_m) contributes -sum_j br_m[j] x[l][j] h_l.
        for (std::size_t j = 0; j < m; ++j) eq[l][l * m + j] -= br_m[j];
      }
      for (std::size_t r = 0; r < k; ++r) {
        rows.push_back(eq[r]);
        rhs.push_back(-br_h[r]);
      }
    }
  }
  Matrix a(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) a(r, c) = rows[r][c];
  auto sol = cas::solve_linear(a, rhs);
  if (sol.is_inconsistent()) {
    out.kind = NonReductive{};
    out.genericity = sol.genericity;
    return out;
  }
  const Vector& x = sol.is_unique() ? std::get<cas::Unique>(sol.kind).x : std::get<cas::Affine>(sol.kind).x0;
  Matrix phi(k, m);
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t j = 0; j < m; ++j) phi(l, j) = x[l * m + j];
  if (sol.genericity.empty()) {
    out.kind = Reductive{std::move(phi)};
  } else {
    out.kind = ConditionallyReductive{std::move(phi), sol.genericity};
  }
  return out;
}

}  // namespace homkernel::homspace
