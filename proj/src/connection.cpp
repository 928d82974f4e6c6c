#include "homkernel/connection.hpp"

#include "homkernel/errors.hpp"

namespace homkernel::connection {

namespace {

bool all_zero(const std::vector<std::vector<std::vector<Matrix>>>& t) {
  for (const auto& a : t)
    for (const auto& b : a)
      for (const auto& m : b)
        if (!m.is_zero()) return false;
  return true;
}

Matrix combine(const std::vector<Matrix>& ms, const Vector& coeffs, std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (!coeffs[i].is_zero()) out = out + ms[i].scaled(coeffs[i]);
  return out;
}

}  // namespace

Matrix ConnectionData::of_m(const Vector& x) const {
  return combine(on_m, x, on_m.empty() ? 0 : on_m[0].rows());
}

Matrix ConnectionData::of_g(const HomogeneousPair& p, const Vector& x) const {
  const std::size_t n = p.dim_m();
  return combine(on_h, p.project_h(x), n) + combine(on_m, p.project_m(x), n);
}

ConnectionData compute_lambda(const HomogeneousPair& p) {
  const std::size_t n = p.dim_m();
  const Matrix& ginv = p.gram_inverse();
  // br[i][j] = [u_i, u_j]_m in u-coordinates.
  std::vector<std::vector<Vector>> br(n, std::vector<Vector>(n, Vector(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      br[i][j] = p.project_m(liealg::bracket(p.g(), p.complement()[i], p.complement()[j]));
      br[j][i] = cas::scaled(br[i][j], Scalar(-1));
    }
  // <[X,Y]_m, Z> for basis vectors.
  auto ip = [&](std::size_t x, std::size_t y, std::size_t z) {
    Scalar s;
    for (std::size_t k = 0; k < n; ++k)
      if (!br[x][y][k].is_zero()) s += br[x][y][k] * p.gram()(k, z);
    return s;
  };
  ConnectionData c;
  for (std::size_t x = 0; x < n; ++x) {
    Matrix lam(n, n);
    for (std::size_t y = 0; y < n; ++y) {
      Vector low(n);
      for (std::size_t z = 0; z < n; ++z) low[z] = (ip(x, y, z) + ip(z, x, y) + ip(z, y, x)) * Scalar::ratio(1, 2);
      lam.set_col(y, ginv.apply(low));
    }
    c.on_m.push_back(std::move(lam));
  }
  for (const auto& h : p.isotropy()) {
    Matrix lam(n, n);
    for (std::size_t y = 0; y < n; ++y) lam.set_col(y, p.project_m(liealg::bracket(p.g(), h, p.complement()[y])));
    c.on_h.push_back(std::move(lam));
  }
  return c;
}

bool AxiomResiduals::all_zero() const {
  for (const auto& v : torsion)
    if (!cas::is_zero(v)) return false;
  for (const auto& s : compat)
    if (!s.is_zero()) return false;
  for (const auto& m : isotropy)
    if (!m.is_zero()) return false;
  for (const auto& m : equivariance)
    if (!m.is_zero()) return false;
  return true;
}

AxiomResiduals connection_axiom_residuals(const HomogeneousPair& p, const ConnectionData& c) {
  const std::size_t n = p.dim_m();
  const std::size_t dim = p.g().dim();
  AxiomResiduals out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector br = p.project_m(liealg::bracket(p.g(), p.complement()[i], p.complement()[j]));
      out.torsion.push_back(c.on_m[i].col(j) - c.on_m[j].col(i) - br);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < n; ++k)
        out.compat.push_back(p.inner(c.on_m[i].col(j), liealg::basis_vector(n, k)) +
                             p.inner(liealg::basis_vector(n, j), c.on_m[i].col(k)));
  for (std::size_t k = 0; k < p.dim_h(); ++k) {
    Matrix ad = liealg::ad_matrix(p.g(), p.isotropy()[k]);
    Matrix proj(n, n);
    for (std::size_t j = 0; j < n; ++j) proj.set_col(j, p.project_m(ad.apply(p.complement()[j])));
    out.isotropy.push_back(c.on_h[k] - proj);
    for (std::size_t e = 0; e < dim; ++e) {
      Vector ee = liealg::basis_vector(dim, e);
      Matrix lhs = c.of_g(p, liealg::bracket(p.g(), p.isotropy()[k], ee));
      out.equivariance.push_back(lhs - cas::commutator(c.on_h[k], c.of_g(p, ee)));
    }
  }
  return out;
}

Matrix CurvatureData::of(const Vector& x, const Vector& y) const {
  const std::size_t n = r.size();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || y[j].is_zero()) continue;
      out = out + r[i][j].scaled(x[i] * y[j]);
    }
  }
  return out;
}

Vector CurvatureData::apply(const Vector& x, const Vector& y, const Vector& z) const { return of(x, y).apply(z); }

CurvatureData curvature(const HomogeneousPair& p, const ConnectionData& c) {
  const std::size_t n = p.dim_m();
  CurvatureData out;
  out.r.assign(n, std::vector<Matrix>(n, Matrix(n, n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector br = liealg::bracket(p.g(), p.complement()[i], p.complement()[j]);
      out.r[i][j] = cas::commutator(c.on_m[i], c.on_m[j]) - c.of_g(p, br);
      out.r[j][i] = -out.r[i][j];
    }
  return out;
}

std::vector<Vector> bianchi_residual(const CurvatureData& r) {
  const std::size_t n = r.r.size();
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        out.push_back(r.at(i, j).col(k) + r.at(j, k).col(i) + r.at(k, i).col(j));
  return out;
}

std::vector<Scalar> pair_symmetry_residual(const HomogeneousPair& p, const CurvatureData& r) {
  const std::size_t n = p.dim_m();
  std::vector<Scalar> out;
  auto rt = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return p.inner(r.at(i, j).col(k), liealg::basis_vector(n, l));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) out.push_back(rt(i, j, k, l) - rt(k, l, i, j));
  return out;
}

CurvatureInvariants curvature_invariants(const HomogeneousPair& p, const CurvatureData& r) {
  const std::size_t n = p.dim_m();
  CurvatureInvariants out{Matrix(n, n), Scalar()};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Scalar tr;
      for (std::size_t k = 0; k < n; ++k) tr += r.at(k, a)(k, b);
      out.ricci(a, b) = tr;
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!p.gram_inverse()(a, b).is_zero()) out.scalar += p.gram_inverse()(a, b) * out.ricci(a, b);
  return out;
}

CurvatureFit constant_curvature_fit(const HomogeneousPair& p, const CurvatureData& r) {
  const std::size_t n = p.dim_m();
  // model(i, j, l) = <u_j, u_l> u_i - <u_i, u_l> u_j
  auto model = [&](std::size_t i, std::size_t j, std::size_t l) {
    Vector v(n);
    v[i] += p.gram()(j, l);
    v[j] -= p.gram()(i, l);
    return v;
  };
  std::optional<Scalar> k;
  for (std::size_t i = 0; i < n && !k; ++i)
    for (std::size_t j = 0; j < n && !k; ++j)
      for (std::size_t l = 0; l < n && !k; ++l) {
        Vector m = model(i, j, l);
        Vector rv = r.at(i, j).col(l);
        for (std::size_t t = 0; t < n; ++t)
          if (!m[t].is_zero()) {
            k = rv[t] / m[t];
            break;
          }
      }
  if (!k) k = Scalar();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Vector res = r.at(i, j).col(l) - cas::scaled(model(i, j, l), *k);
        if (!cas::is_zero(res)) return NotConstant{i, j, l, std::move(res)};
      }
  return ConstantCurvature{*k};
}

bool SymmetryResiduals::m_zero() const { return all_zero(along_m); }
bool SymmetryResiduals::h_zero() const { return all_zero(along_h); }

SymmetryResiduals locally_symmetric_residual(const HomogeneousPair& p, const ConnectionData& c,
                                             const CurvatureData& r) {
  const std::size_t n = p.dim_m();
  auto derivation = [&](const Matrix& lam) {
    std::vector<std::vector<Matrix>> out(n, std::vector<Matrix>(n, Matrix(n, n)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        out[i][j] = cas::commutator(lam, r.at(i, j)) - r.of(lam.col(i), liealg::basis_vector(n, j)) -
                    r.of(liealg::basis_vector(n, i), lam.col(j));
        out[j][i] = -out[i][j];
      }
    return out;
  };
  SymmetryResiduals s;
  for (const auto& lam : c.on_m) s.along_m.push_back(derivation(lam));
  for (const auto& lam : c.on_h) s.along_h.push_back(derivation(lam));
  return s;
}

}  // namespace homkernel::connection
