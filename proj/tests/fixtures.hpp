#pragma once

// Frozen expectations shared by the unit tests and the acceptance binary.

#include "homkernel/hypersurface.hpp"
#include "util.hpp"

namespace fixtures {

using homkernel::cas::Bindings;
using homkernel::cas::Matrix;
using homkernel::cas::Scalar;
using homkernel::homspace::FamilyId;
using homkernel::hypersurface::CaseTag;

/// Matrix with the given columns, each written as expressions.
inline Matrix cols(std::initializer_list<std::initializer_list<const char*>> cs) {
  std::vector<std::vector<Scalar>> v;
  for (auto c : cs) v.push_back(testutil::V(c));
  return Matrix::from_columns(v);
}

struct ShapeFixture {
  FamilyId id;
  CaseTag tag;
  std::vector<int> eps;
  Matrix expected;  ///< column j = S V_j in the case frame; eps written as x

  Matrix at(int e) const { return expected.map({{"x", Scalar(e)}}); }
};

/// Shape operators for constant components (all derivative terms zero).
inline std::vector<ShapeFixture> shape_fixtures() {
  std::vector<ShapeFixture> f;
  f.push_back({FamilyId::a2(), CaseTag::i, {1, -1},
               cols({{"-kappa*delta", "0", "0"}, {"0", "-kappa*delta", "0"}, {"alpha^2-x", "0", "-kappa*delta"}})});
  f.push_back({FamilyId::a2(), CaseTag::ii, {1}, cols({{"0", "0", "0"}, {"0", "0", "0"}, {"alpha", "0", "0"}})});
  f.push_back({FamilyId::a2(), CaseTag::iii, {1, -1},
               cols({{"-2*delta", "0", "0"}, {"-alpha*beta", "-2*delta", "0"}, {"-beta*delta", "0", "-2*delta"}})});
  for (int eta : {1, -1}) {
    f.push_back({FamilyId::a3(eta), CaseTag::i, {1, -1},
                 cols({{"0", "0", "0"}, {"alpha", "0", "0"}, {"alpha*beta", "0", "0"}})});
    f.push_back({FamilyId::a3(eta), CaseTag::ii, {1, -1},
                 cols({{"-gamma", "0", "0"},
                       {"0", "-gamma", "0"},
                       {"(a^2*alpha^2+2*a*c*alpha*gamma+c^2*gamma^2-x*d)/a", "0", "-gamma"}})});
  }
  for (auto id : {FamilyId::a4(), FamilyId::b2()}) {
    // Erratum: the printed system has S V1 = -(V1(alpha) + gamma) V3. Since
    // lambda(u1)u3 = -u3, S V1 = -lambda(V1)xi = +gamma V3, which is
    // -(V1(gamma) - gamma) V3 for constants and matches the case condition
    // V1(gamma) - gamma = 0.
    f.push_back({id, CaseTag::i, {1, -1}, cols({{"0", "0", "gamma"}, {"0", "0", "0"}, {"0", "0", "0"}})});
    // gamma^2 - eta alpha^2 b / a with a = eps eta / alpha^2
    f.push_back({id, CaseTag::ii, {1, -1},
                 cols({{"alpha", "0", "0"}, {"0", "alpha", "gamma^2-x*alpha^4*b"}, {"0", "0", "alpha"}})});
  }
  return f;
}

/// Constant examples whose frame spans a subalgebra (possibly with isotropy).
struct Witness {
  FamilyId id;
  CaseTag tag;
  int eps;
  Bindings overrides;
};

inline std::vector<Witness> subalgebra_witnesses() {
  return {{FamilyId::a2(), CaseTag::i, 1, {}},
          {FamilyId::a2(), CaseTag::i, -1, {}},
          {FamilyId::a2(), CaseTag::ii, 1, {{"alpha", 0}}},
          {FamilyId::a2(), CaseTag::iii, 1, {{"alpha", 0}}},
          {FamilyId::a2(), CaseTag::iii, -1, {{"alpha", 0}}},
          {FamilyId::a3(1), CaseTag::i, 1, {{"alpha", 0}}},
          {FamilyId::a3(-1), CaseTag::i, -1, {{"alpha", 0}}},
          {FamilyId::a3(1), CaseTag::ii, 1, {}},
          {FamilyId::a3(1), CaseTag::ii, -1, {}},
          {FamilyId::a3(-1), CaseTag::ii, 1, {}},
          {FamilyId::a3(-1), CaseTag::ii, -1, {}},
          {FamilyId::a4(), CaseTag::i, 1, {{"gamma", 0}}},
          {FamilyId::a4(), CaseTag::ii, 1, {}},
          {FamilyId::a4(), CaseTag::ii, -1, {}},
          {FamilyId::b2(), CaseTag::i, -1, {{"gamma", 0}}},
          {FamilyId::b2(), CaseTag::ii, 1, {}},
          {FamilyId::b2(), CaseTag::ii, -1, {}}};
}

struct Verdict {
  bool codazzi = false, parallel = false, totally_geodesic = false;
  bool operator==(const Verdict&) const = default;
};

/// Expected verdicts at constant components. `v` holds the value of
/// every case symbol after the norm equation is solved.
inline Verdict predicted(const FamilyId& id, CaseTag tag, int eps, const Bindings& v) {
  auto z = [&](const std::string& s) { return v.at(s).is_zero(); };
  auto val = [&](const std::string& s) { return v.at(s); };
  const Scalar e(eps);
  using homkernel::homspace::Family;
  switch (id.tag) {
    case Family::A2:
      if (tag == CaseTag::i) {
        bool par = (val("kappa") + Scalar(1)).is_zero() || z("alpha") || (val("alpha") * val("alpha") - e).is_zero();
        bool tg = z("kappa") && (val("alpha") * val("alpha") - e).is_zero();
        return {true, par, tg};
      }
      if (tag == CaseTag::ii) return {z("alpha"), z("alpha"), z("alpha")};
      return {z("alpha"), false, false};
    case Family::A3:
      if (tag == CaseTag::i) return {z("alpha"), z("alpha"), z("alpha")};
      {
        Scalar a = val("a"), c = val("c"), d = val("d"), al = val("alpha"), ga = val("gamma");
        Scalar phi = (a * a * al * al + Scalar(2) * a * c * al * ga + c * c * ga * ga - e * d) / a;
        return {true, (a * al + c * ga).is_zero() || phi.is_zero(), false};
      }
    case Family::A4:
    case Family::B2:
      if (tag == CaseTag::i) return {z("gamma"), z("gamma"), z("gamma")};
      return {true, true, false};
    default: return {};
  }
}

}  // namespace fixtures
