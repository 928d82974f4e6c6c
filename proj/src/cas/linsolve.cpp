#include "homkernel/cas/linsolve.hpp"

#include "homkernel/errors.hpp"

namespace homkernel::cas {

namespace {

// Rough size of a symbolic entry, used to pick the simplest symbolic pivot.
std::size_t weight(const Scalar& s) {
  return s.num().terms().size() + s.den().terms().size() + s.num().total_degree() + s.den().total_degree();
}

// Gauss-Jordan on `a` restricted to the first `ncols` columns.
Echelon eliminate(Matrix a, std::size_t ncols) {
  Echelon e;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i) {
      const Scalar& v = a(i, c);
      if (v.is_zero()) continue;
      if (p == rows) {
        p = i;
        continue;
      }
      const Scalar& best = a(p, c);
      if (best.is_constant()) continue;
      if (v.is_constant() || weight(v) < weight(best)) p = i;
    }
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Scalar piv = a(r, c);
    if (!piv.is_constant()) e.genericity.push_back(piv);
    const Scalar inv = piv.inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rref = std::move(a);
  return e;
}

}  // namespace

Echelon row_echelon(const Matrix& m) { return eliminate(m, m.cols()); }

LinearSolution solve_linear(const Matrix& a, const std::vector<Scalar>& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("solve_linear: A has " + std::to_string(a.rows()) +
                                                    " rows but b has " + std::to_string(b.size()));
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  Echelon e = eliminate(std::move(aug), n);
  LinearSolution out;
  out.genericity = e.genericity;

  for (std::size_t i = e.rank(); i < a.rows(); ++i) {
    const Scalar& r = e.rref(i, n);
    if (!r.is_zero()) {
      if (!r.is_constant()) out.genericity.push_back(r);
      out.kind = Inconsistent{i, r};
      return out;
    }
  }

  std::vector<Scalar> x0(n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t k = 0; k < e.rank(); ++k) {
    x0[e.pivots[k]] = e.rref(k, n);
    is_pivot[e.pivots[k]] = true;
  }
  if (e.rank() == n) {
    out.kind = Unique{std::move(x0)};
    return out;
  }
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(n);
    v[f] = Scalar(1);
    for (std::size_t k = 0; k < e.rank(); ++k) v[e.pivots[k]] = -e.rref(k, f);
    basis.push_back(std::move(v));
  }
  out.kind = Affine{std::move(x0), std::move(basis)};
  return out;
}

LinearSolution solve_linear(const Matrix& a, const Matrix& b) {
  if (b.cols() != 1) throw DimensionMismatch("solve_linear expects a single right-hand column");
  return solve_linear(a, b.col(0));
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& a) {
  auto s = solve_linear(a, std::vector<Scalar>(a.rows()));
  if (auto* aff = std::get_if<Affine>(&s.kind)) return aff->nullbasis;
  return {};
}

}  // namespace homkernel::cas
