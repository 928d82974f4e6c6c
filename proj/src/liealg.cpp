#include "homkernel/liealg.hpp"

#include "homkernel/errors.hpp"

namespace homkernel::liealg {

using cas::Echelon;

Vector basis_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v[i] = Scalar(1);
  return v;
}

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names, std::vector<std::vector<Vector>> brackets)
    : names_(std::move(basis_names)), c_(std::move(brackets)) {
  const std::size_t n = names_.size();
  if (c_.size() != n) throw DimensionMismatch("bracket table has wrong number of rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i].size() != n) throw DimensionMismatch("bracket table has wrong number of columns");
    for (std::size_t j = 0; j < n; ++j)
      if (c_[i][j].size() != n) throw DimensionMismatch("bracket value has wrong length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!cas::is_zero(c_[i][i]))
      throw ValidationError("antisymmetry", "[" + names_[i] + "," + names_[i] + "] = " + cas::vec_str(c_[i][i]));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cas::is_zero(c_[i][j] + c_[j][i])) continue;
      throw ValidationError("antisymmetry", "[" + names_[i] + "," + names_[j] + "] = " + cas::vec_str(c_[i][j]) +
                                                " but [" + names_[j] + "," + names_[i] +
                                                "] = " + cas::vec_str(c_[j][i]));
    }
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back(prefix + std::to_string(i + 1));
  return LieAlgebra(std::move(names), std::vector<std::vector<Vector>>(dim, std::vector<Vector>(dim, Vector(dim))));
}

bool LieAlgebra::is_rational() const {
  for (const auto& row : c_)
    for (const auto& v : row)
      for (const auto& s : v)
        if (!s.is_constant()) return false;
  return true;
}

Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y) {
  const std::size_t n = L.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket: vector length does not match algebra");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || y[j].is_zero()) continue;
      const Vector& c = L.structure(i, j);
      if (cas::is_zero(c)) continue;
      Scalar f = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!c[k].is_zero()) out[k] += f * c[k];
    }
  }
  return out;
}

std::vector<Scalar> jacobi_residual(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector ei = basis_vector(n, i), ej = basis_vector(n, j), ek = basis_vector(n, k);
        Vector s = bracket(L, L.structure(i, j), ek) + bracket(L, L.structure(j, k), ei) +
                   bracket(L, L.structure(k, i), ej);
        out.insert(out.end(), s.begin(), s.end());
      }
  return out;
}

bool satisfies_jacobi(const LieAlgebra& L) { return cas::is_zero(jacobi_residual(L)); }

Matrix ad_matrix(const LieAlgebra& L, const Vector& x) {
  const std::size_t n = L.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_col(j, bracket(L, x, basis_vector(n, j)));
  return m;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning) : ambient_(ambient_dim) {
  if (spanning.empty()) return;
  Matrix m(spanning.size(), ambient_dim);
  for (std::size_t i = 0; i < spanning.size(); ++i) {
    if (spanning[i].size() != ambient_dim) throw DimensionMismatch("subspace vector has wrong length");
    for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = spanning[i][j];
  }
  Echelon e = cas::row_echelon(m);
  for (std::size_t k = 0; k < e.rank(); ++k) basis_.push_back(e.rref.row(k));
  pivots_ = e.pivots;
  genericity_ = e.genericity;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("subspace reduction: wrong vector length");
  Vector r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    Scalar f = r[pivots_[k]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!basis_[k][j].is_zero()) r[j] -= f * basis_[k][j];
  }
  return r;
}

ClosureResult is_subalgebra(const LieAlgebra& L, const std::vector<Vector>& spanning) {
  Subspace s(L.dim(), spanning);
  for (std::size_t i = 0; i < spanning.size(); ++i)
    for (std::size_t j = i + 1; j < spanning.size(); ++j) {
      Vector r = s.reduce(bracket(L, spanning[i], spanning[j]));
      if (!cas::is_zero(r)) return NotClosed{i, j, std::move(r)};
    }
  return Closed{};
}

ClosureResult is_subalgebra(const LieAlgebra& L, const Subspace& s) { return is_subalgebra(L, s.basis()); }

bool AutomorphismResult::is_automorphism() const { return cas::is_zero(residual); }

AutomorphismResult apply_automorphism(const LieAlgebra& L, const Matrix& p) {
  const std::size_t n = L.dim();
  if (p.rows() != n || p.cols() != n) throw DimensionMismatch("automorphism matrix has wrong size");
  Matrix pinv = cas::inverse(p);
  std::vector<std::vector<Vector>> c(n, std::vector<Vector>(n, Vector(n)));
  std::vector<Scalar> residual;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) c[i][j] = pinv.apply(bracket(L, p.col(i), p.col(j)));
      for (std::size_t k = 0; k < n; ++k) residual.push_back(c[i][j][k] - L.constant(i, j, k));
    }
  return {LieAlgebra(L.basis_names(), std::move(c)), std::move(residual)};
}

LieAlgebra restrict_to(const LieAlgebra& L, const std::vector<Vector>& spanning,
                       const std::vector<std::string>& names) {
  const std::size_t k = spanning.size();
  if (names.size() != k) throw DimensionMismatch("restrict_to: one name per spanning vector");
  Matrix basis = Matrix::from_columns(spanning);
  std::vector<std::vector<Vector>> c(k, std::vector<Vector>(k, Vector(k)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      auto sol = cas::solve_linear(basis, bracket(L, spanning[i], spanning[j]));
      if (!sol.is_unique())
        throw ValidationError("subalgebra", "[" + names[i] + "," + names[j] + "] leaves the span or the span is degenerate");
      c[i][j] = std::get<cas::Unique>(sol.kind).x;
      c[j][i] = cas::scaled(c[i][j], Scalar(-1));
    }
  return LieAlgebra(names, std::move(c));
}

namespace {

std::vector<Vector> bracket_span(const LieAlgebra& L, const std::vector<Vector>& a, const std::vector<Vector>& b,
                                 std::vector<Scalar>& genericity) {
  std::vector<Vector> gens;
  for (const auto& x : a)
    for (const auto& y : b) {
      Vector z = bracket(L, x, y);
      if (!cas::is_zero(z)) gens.push_back(std::move(z));
    }
  Subspace s(L.dim(), gens);
  genericity.insert(genericity.end(), s.genericity().begin(), s.genericity().end());
  return s.basis();
}

}  // namespace

Profile algebra_profile(const LieAlgebra& L, const std::optional<std::vector<Scalar>>& assume_nonzero) {
  if (!L.is_rational() && !assume_nonzero)
    throw Error("algebra_profile: structure constants depend on parameters; pass a genericity list");
  Profile out;
  const std::size_t n = L.dim();
  std::vector<Vector> full;
  for (std::size_t i = 0; i < n; ++i) full.push_back(basis_vector(n, i));

  out.derived.push_back(n);
  for (std::vector<Vector> cur = full; !cur.empty();) {
    std::vector<Vector> next = bracket_span(L, cur, cur, out.genericity);
    if (next.size() == cur.size()) break;
    out.derived.push_back(next.size());
    cur = std::move(next);
  }

  out.lower_central.push_back(n);
  for (std::vector<Vector> cur = full; !cur.empty();) {
    std::vector<Vector> next = bracket_span(L, full, cur, out.genericity);
    if (next.size() == cur.size()) break;
    out.lower_central.push_back(next.size());
    cur = std::move(next);
  }

  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix ad = ad_matrix(L, basis_vector(n, i));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = ad(r, c);
  }
  auto sol = cas::solve_linear(stacked, Vector(n * n));
  out.genericity.insert(out.genericity.end(), sol.genericity.begin(), sol.genericity.end());
  if (auto* aff = std::get_if<cas::Affine>(&sol.kind)) out.center = aff->nullbasis.size();

  if (assume_nonzero) {
    std::vector<Scalar> unlisted;
    for (const auto& g : out.genericity) {
      bool listed = false;
      for (const auto& a : *assume_nonzero)
        if (g.num().is_constant() || a.num().divisible_by(g.num())) listed = true;
      if (!listed) unlisted.push_back(g);
    }
    out.genericity = std::move(unlisted);
  }
  return out;
}

}  // namespace homkernel::liealg
