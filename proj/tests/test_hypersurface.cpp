#include "homkernel/hypersurface.hpp"
#include "fixtures.hpp"

using namespace homkernel;
using namespace homkernel::hypersurface;
using homspace::builtin_pair;
using homspace::FamilyId;
using liealg::basis_vector;
using testutil::S;
using testutil::V;
using cas::Poly;
using cas::Rational;

namespace {

Classification run(const CaseSetup& cs) { return classify_normal(cs.pair, cs.conn, cs.curv, cs.xi, cs.frame); }

Classification run(const FamilyId& id, CaseTag t, int eps, const Bindings& b = {}) { return run(case_setup(id, t, eps, b)); }

/// Solves <xi,xi> = eps for the first of `solve_for` that occurs linearly.
std::optional<Bindings> solve_norm(const HomogeneousPair& p, const Vector& xi, int eps,
                                   const std::vector<std::string>& solve_for) {
  Scalar n = p.inner(xi, xi) - Scalar(eps);
  for (const auto& t : solve_for) {
    if (n.den().contains(t) || n.num().degree_in(t) != 1) continue;
    Poly c1 = n.num().coeff_in(t, 1), c0 = n.num().coeff_in(t, 0);
    if (c1.is_zero()) continue;
    return Bindings{{t, -Scalar(c0) / Scalar(c1)}};
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("hypersurface") {
  TEST_CASE("A2 normalization") {
    auto n = normalize_A2_metric(builtin_pair(FamilyId::a2()));
    CHECK(n.pair.gram() == Matrix{{S("0"), S("0"), S("-1"), S("0")},
                                  {S("0"), S("1"), S("0"), S("0")},
                                  {S("-1"), S("0"), S("1"), S("0")},
                                  {S("0"), S("0"), S("0"), S("d")}});
    CHECK(n.sqrt_symbols == std::vector<std::string>{"s_a", "s_b"});
    auto again = normalize_A2_metric(n.pair);
    CHECK(again.automorphism == Matrix::identity(4));
    CHECK(again.sqrt_symbols.empty());
    CHECK(again.pair == n.pair);
    // rational squares need no symbols
    auto sq = normalize_A2_metric(builtin_pair(FamilyId::a2()).specialize({{"a", 4}, {"b", 9}, {"c", 1}}));
    CHECK(sq.sqrt_symbols.empty());
    CHECK(sq.automorphism(0, 0) == S("3/4"));
    CHECK_THROWS_AS(normalize_A2_metric(builtin_pair(FamilyId::a2()).specialize({{"b", 0}})), SymmetricLocus);
    CHECK_THROWS_AS(normalize_A2_metric(builtin_pair(FamilyId::a4())), NotFamilyA2);
  }

  TEST_CASE("normal fields are checked") {
    auto a4 = builtin_pair(FamilyId::a4());
    CHECK_NOTHROW(NormalField(a4.specialize({{"a", 1}}), V({"1", "0", "0", "0"}), 1));
    CHECK_THROWS_AS(NormalField(a4, V({"1", "0", "0", "0"}), -1), ValidationError);
    CHECK_THROWS_AS(NormalField(a4, V({"0", "0", "1", "0"}), 1), ValidationError);
  }

  TEST_CASE("case frames") {
    auto a2 = case_setup(FamilyId::a2(), CaseTag::i, 1);
    CHECK(a2.frame.v[0] == basis_vector(4, 0));
    CHECK(a2.frame.v[1] == basis_vector(4, 1));
    CHECK(a2.frame.v[2] == V({"0", "0", "1/delta", "alpha"}));  // d delta u3 + alpha u4 with d = 1/delta^2
    CHECK(a2.solved.at("d") == S("1/delta^2"));

    auto a4 = case_setup(FamilyId::a4(), CaseTag::ii, 1);
    CHECK(a4.frame.v[0] == basis_vector(4, 3));
    CHECK(a4.frame.v[1] == V({"gamma", "-alpha", "0", "0"}));
    CHECK(a4.frame.v[2] == basis_vector(4, 2));
    auto b2 = case_setup(FamilyId::b2(), CaseTag::ii, 1);
    CHECK(b2.frame.v[1] == V({"gamma", "alpha", "0", "0"}));

    auto a3 = case_setup(FamilyId::a3(1), CaseTag::i, 1);
    CHECK(a3.frame.v[0] == basis_vector(4, 0));
    CHECK(a3.frame.v[1] == basis_vector(4, 2));
    CHECK(a3.frame.v[2] == V({"0", "alpha", "0", "-beta"}));

    for (const auto& cs : {a2, a4, b2, a3})
      for (const auto& v : cs.frame.v) CHECK(cs.pair.inner(v, cs.xi.xi()).is_zero());
  }

  TEST_CASE("case constraints are enforced") {
    auto a2 = case_setup(FamilyId::a2(), CaseTag::i, 1);
    // case (iii) needs beta != 0 and kappa = 2
    CHECK_THROWS_AS(frame_for_case(FamilyId::a2(), CaseTag::iii, a2.pair, a2.xi), CaseConstraintViolated);
    CHECK_THROWS_AS(case_setup(FamilyId::a2(), CaseTag::iii, 1, {{"beta", 0}}), Error);
    CHECK_THROWS_AS(case_setup(FamilyId::a4(), CaseTag::ii, 1, {{"alpha", 0}}), Error);
    CHECK(family_cases(FamilyId::a1()).empty());
    CHECK(family_cases(FamilyId::a2()).size() == 3);
  }

  TEST_CASE("custom and orthogonal frames") {
    auto cs = case_setup(FamilyId::a4(), CaseTag::ii, 1);
    CHECK_THROWS_AS(custom_frame(cs.pair, cs.xi, {basis_vector(4, 0), basis_vector(4, 1), basis_vector(4, 2)}),
                    Error);
    CHECK_THROWS_AS(custom_frame(cs.pair, cs.xi, {basis_vector(4, 3), basis_vector(4, 3), basis_vector(4, 2)}),
                    Error);
    auto f = orthogonal_frame(cs.pair, cs.xi);
    REQUIRE(f.v.size() == 3);
    for (const auto& v : f.v) CHECK(cs.pair.inner(v, cs.xi.xi()).is_zero());
    CHECK_FALSE(cas::determinant(f.gram(cs.pair)).is_zero());
    // The verdicts do not depend on the frame.
    auto cl = classify_normal(cs.pair, cs.conn, cs.curv, cs.xi, f);
    CHECK(cl.is_proper_parallel());
  }

  TEST_CASE("shape operator fixtures") {
    for (const auto& fx : fixtures::shape_fixtures())
      for (int eps : fx.eps) {
        auto cs = case_setup(fx.id, fx.tag, eps);
        auto sd = shape_operator(cs.pair, cs.conn, cs.xi, cs.frame);
        auto expected = fx.at(eps);
        CHECK_MESSAGE(sd.s == expected, fx.id.str() << " case " << case_name(fx.tag) << " eps " << eps << "\n"
                                                    << sd.s.str());
        CHECK(sd.h2ff.is_symmetric() == self_adjoint_residual(cs.pair, cs.frame, sd).is_zero());
      }
  }

  TEST_CASE("A4 (i): the computed sign fits the case condition") {
    // Printed: S V1 = -(V1(alpha) + gamma) V3. Computed: lambda(u1)u3 = -u3,
    // so S V1 = -lambda(V1)xi = +gamma V3, i.e. -(V1(gamma) - gamma) V3 for
    // constants, and S is self-adjoint exactly when gamma = 0.
    auto cs = case_setup(FamilyId::a4(), CaseTag::i, 1);
    CHECK(cs.conn.on_m[0].col(2) == V({"0", "0", "-1", "0"}));
    auto sd = shape_operator(cs.pair, cs.conn, cs.xi, cs.frame);
    CHECK(sd.s(2, 0) == S("gamma"));
    CHECK(sd.s(2, 0) != S("-gamma"));
    CHECK_FALSE(self_adjoint_residual(cs.pair, cs.frame, sd).is_zero());
    CHECK(run(FamilyId::a4(), CaseTag::i, 1, {{"gamma", 0}}).self_adjoint_zero);
  }

  TEST_CASE("shape images are tangent") {
    for (auto id : homspace::all_families())
      for (auto t : family_cases(id)) {
        auto cs = case_setup(id, t, 1);
        for (const auto& v : cs.frame.v) {
          auto w = cs.conn.of_m(v).apply(cs.xi.xi());
          CHECK(cs.pair.inner(w, cs.xi.xi()).is_zero());
        }
      }
  }

  TEST_CASE("self-adjointness") {
    auto cs = case_setup(FamilyId::a2(), CaseTag::i, 1);
    auto sd = shape_operator(cs.pair, cs.conn, cs.xi, cs.frame);
    CHECK(self_adjoint_residual(cs.pair, cs.frame, sd).is_zero());
    auto bad = sd;
    bad.s(0, 1) = bad.s(0, 1) + Scalar(1);
    CHECK_FALSE(self_adjoint_residual(cs.pair, cs.frame, bad).is_zero());
  }

  TEST_CASE("Codazzi residual vanishes in every case") {
    for (auto id : homspace::all_families())
      for (auto t : family_cases(id))
        for (int eps : {1, -1}) {
          if (id == FamilyId::a2() && t == CaseTag::ii && eps == -1) continue;
          auto cs = case_setup(id, t, eps);
          for (const auto& r : codazzi_residual(cs.curv, cs.xi, cs.frame))
            CHECK_MESSAGE(cas::is_zero(r), id.str() << " " << case_name(t));
        }
  }

  TEST_CASE("B1 at constant curvature: every normal is Codazzi") {
    auto p = builtin_pair(FamilyId::b1()).specialize({{"b", 0}, {"c", 0}, {"d", 0}, {"a", 1}});
    auto c = connection::compute_lambda(p);
    auto r = connection::curvature(p, c);
    // u1 is null; <u1 + u3/2, u1 + u3/2> = a = 1
    NormalField xi(p, V({"1", "0", "1/2", "0"}), 1);
    REQUIRE(p.inner(xi.xi(), xi.xi()) == Scalar(1));
    for (const auto& v : codazzi_residual(r, xi, orthogonal_frame(p, xi))) CHECK(cas::is_zero(v));
  }

  TEST_CASE("property: violating one case constraint breaks Codazzi") {
    // Normals that satisfy the norm but miss exactly one constraint of
    // every case: A2 with beta != 0 and kappa != 2, A3 with beta, gamma != 0,
    // A4/B2 with alpha, gamma, delta != 0.
    RationalSampler rs(99);
    struct Pattern {
      FamilyId id;
      std::vector<bool> nonzero;  // which components of xi are drawn
      std::vector<std::string> solve;
    };
    std::vector<Pattern> patterns = {{FamilyId::a2(), {true, true, false, true}, {"d"}},
                                     {FamilyId::a3(1), {true, true, true, false}, {"b", "a"}},
                                     {FamilyId::a3(-1), {true, true, true, false}, {"b", "a"}},
                                     {FamilyId::a4(), {true, false, true, true}, {"a"}},
                                     {FamilyId::b2(), {true, false, true, true}, {"a"}}};
    for (const auto& pat : patterns) {
      int done = 0, tries = 0;
      while (done < 20 && tries++ < 500) {
        auto base = pat.id.tag == homspace::Family::A2 ? normalize_A2_metric(builtin_pair(pat.id)).pair
                                                        : builtin_pair(pat.id);
        Bindings vals;
        for (const auto& q : base.params()) {
          if (q == pat.solve.front()) continue;
          Rational v = rs.next_nonzero();
          if (q == "kappa" && v == 2) v = 3;
          vals[q] = Scalar(v);
        }
        Vector xi;
        for (bool nz : pat.nonzero) xi.push_back(nz ? Scalar(rs.next_nonzero()) : Scalar(0));
        int eps = rs.next_sign();
        HomogeneousPair p = base;
        try {
          p = base.specialize(vals);
        } catch (const Error&) {
          continue;
        }
        auto sol = solve_norm(p, xi, eps, pat.solve);
        if (!sol) continue;
        try {
          p = p.specialize(*sol);
        } catch (const Error&) {
          continue;
        }
        auto c = connection::compute_lambda(p);
        auto r = connection::curvature(p, c);
        NormalField nf(p, xi, eps);
        auto res = codazzi_residual(r, nf, orthogonal_frame(p, nf));
        bool some = std::any_of(res.begin(), res.end(), [](const Vector& v) { return !cas::is_zero(v); });
        CHECK_MESSAGE(some, pat.id.str() << " xi = " << cas::vec_str(xi));
        ++done;
      }
      CHECK_MESSAGE(done == 20, pat.id.str());
    }
  }

  TEST_CASE("parallel examples") {
    CHECK(run(FamilyId::a2(), CaseTag::i, 1, {{"alpha", 0}}).is_parallel());
    CHECK(run(FamilyId::a2(), CaseTag::i, 1, {{"kappa", -1}}).is_parallel());
    CHECK(run(FamilyId::a2(), CaseTag::i, 1, {{"alpha", 1}}).is_parallel());
    CHECK_FALSE(run(FamilyId::a2(), CaseTag::i, 1).is_parallel());
    CHECK(run(FamilyId::a2(), CaseTag::i, 1, {{"kappa", 0}, {"alpha", 1}}).is_totally_geodesic());
    CHECK_FALSE(run(FamilyId::a2(), CaseTag::i, -1, {{"kappa", 0}, {"alpha", 0}}).is_totally_geodesic());
    for (auto id : {FamilyId::a4(), FamilyId::b2()})
      for (int eps : {1, -1}) {
        auto cl = run(id, CaseTag::ii, eps);
        CHECK(cl.is_proper_parallel());
      }
    auto sd = run(FamilyId::a2(), CaseTag::ii, 1, {{"alpha", 0}});
    CHECK(sd.shape->s.is_zero());
    CHECK(sd.is_totally_geodesic());
  }

  TEST_CASE("intrinsic geometry") {
    auto a2 = run(FamilyId::a2(), CaseTag::i, 1);
    REQUIRE(a2.intrinsic);
    CHECK_FALSE(a2.intrinsic->with_isotropy);
    CHECK(a2.intrinsic->consistent());
    // [V1, V3] = alpha (kappa + 1) V1
    const auto& k = a2.intrinsic->pair.g();
    CHECK(k.structure(0, 2) == V({"alpha*(kappa+1)", "0", "0"}));

    auto a3 = run(FamilyId::a3(1), CaseTag::i, 1, {{"alpha", S("1")}});
    CHECK_FALSE(a3.intrinsic);
    auto a3c = run(FamilyId::a3(1), CaseTag::i, 1, {{"alpha", 0}});
    REQUIRE(a3c.intrinsic);
    CHECK(a3c.intrinsic->consistent());

    // A flat ambient space restricts to a flat orbit.
    std::vector<Vector> m;
    for (std::size_t i = 0; i < 4; ++i) m.push_back(basis_vector(4, i));
    HomogeneousPair flat("flat", {}, {}, liealg::LieAlgebra::abelian(4), {}, m, Matrix::identity(4));
    auto c = connection::compute_lambda(flat);
    auto r = connection::curvature(flat, c);
    NormalField xi(flat, basis_vector(4, 3), 1);
    auto ig = intrinsic_geometry(flat, c, xi, orthogonal_frame(flat, xi));
    for (const auto& row : ig.curv.r)
      for (const auto& mat : row) CHECK(mat.is_zero());
  }

  TEST_CASE("Gauss-Codazzi closure") {
    for (const auto& w : fixtures::subalgebra_witnesses()) {
      auto cl = run(w.id, w.tag, w.eps, w.overrides);
      REQUIRE_MESSAGE(cl.intrinsic, w.id.str() << " " << case_name(w.tag));
      CHECK(cl.intrinsic->consistent());
      CHECK_MESSAGE(cl.gauss_codazzi->all_zero(), w.id.str() << " " << case_name(w.tag));
    }
    // A3 (ii) with eta = 1 only closes together with the isotropy.
    CHECK(run(FamilyId::a3(1), CaseTag::ii, 1).intrinsic->with_isotropy);
    CHECK_FALSE(run(FamilyId::a3(-1), CaseTag::ii, 1).intrinsic->with_isotropy);
    // Totally geodesic: Gauss is R = R^Sigma on the frame.
    auto tg = run(FamilyId::a2(), CaseTag::ii, 1, {{"alpha", 0}});
    CHECK(tg.shape->h2ff.is_zero());
  }

  TEST_CASE("verdicts follow the classification symbolically") {
    for (auto id : homspace::all_families())
      for (auto t : family_cases(id))
        for (int eps : {1, -1}) {
          if (id == FamilyId::a2() && t == CaseTag::ii && eps == -1) continue;
          auto cs = case_setup(id, t, eps);
          auto cl = run(cs);
          // generic symbols: nothing on a special locus
          Bindings v;
          for (const auto& s : case_symbols(id, t)) v[s] = S(s);
          if (id == FamilyId::a2() && t == CaseTag::iii) v["kappa"] = 2;
          fixtures::Verdict got{cl.codazzi_form(), cl.is_parallel(), cl.is_totally_geodesic()};
          CHECK_MESSAGE(got == fixtures::predicted(id, t, eps, v), id.str() << " " << case_name(t));
        }
  }

  TEST_CASE("refutation sweeps") {
    for (auto id : {FamilyId::a1(), FamilyId::b1()}) {
      auto sw = refutation_sweep(id, 100, 0);
      CHECK(sw.samples.size() == 100);
      CHECK(sw.codazzi_hits() == 0);
      auto again = refutation_sweep(id, 100, 0);
      CHECK(again.attempted == sw.attempted);
      CHECK(again.samples.back().xi == sw.samples.back().xi);
    }
    CHECK(refutation_sweep(FamilyId::a1(), 20, 1).samples.front().xi !=
          refutation_sweep(FamilyId::a1(), 20, 2).samples.front().xi);
  }

  TEST_CASE("non-existence arguments replay") {
    for (auto id : {FamilyId::a1(), FamilyId::b1()}) {
      auto steps = replay_nonexistence(id);
      CHECK(steps.size() == 5);
      for (const auto& s : steps) {
        CHECK_MESSAGE(s.ok(), s.step.label);
        CHECK(s.orthogonal);
        CHECK(s.residual_nonzero);
      }
    }
    CHECK(nonexistence_steps(FamilyId::a4()).empty());
    // The factor b appears in the A1 residuals, b, c and d in the B1 ones.
    auto contains = [](const std::vector<ProofStepResult>& steps, const std::string& v) {
      return std::any_of(steps.begin(), steps.end(), [&](const ProofStepResult& s) {
        return std::any_of(s.step.forced.begin(), s.step.forced.end(), [&](const Scalar& f) { return f == S(v); });
      });
    };
    auto a1 = replay_nonexistence(FamilyId::a1());
    CHECK(contains(a1, "b"));
    auto b1 = replay_nonexistence(FamilyId::b1());
    CHECK(contains(b1, "b"));
    CHECK(contains(b1, "c"));
    CHECK(contains(b1, "d"));
  }

  TEST_CASE("sampler") {
    RationalSampler a(5), b(5);
    for (int i = 0; i < 100; ++i) {
      auto x = a.next();
      CHECK(x == b.next());
      CHECK(abs(x.get_num()) <= 20);
      CHECK(x.get_den() <= 20);
      CHECK(a.next_nonzero() != 0);
      b.next_nonzero();
    }
  }
}
