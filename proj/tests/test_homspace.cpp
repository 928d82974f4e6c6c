#include "homkernel/errors.hpp"
#include "homkernel/homspace.hpp"
#include "util.hpp"

using namespace homkernel;
using namespace homkernel::homspace;
using liealg::basis_vector;
using testutil::S;
using testutil::V;

namespace {

HomogeneousPair su2_toy() {
  // [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2
  std::vector<std::vector<Vector>> b(3, std::vector<Vector>(3, Vector(3, Scalar(0))));
  auto set = [&](int i, int j, int k) {
    b[i][j] = basis_vector(3, k);
    b[j][i] = cas::scaled(basis_vector(3, k), Scalar(-1));
  };
  set(0, 1, 2);
  set(1, 2, 0);
  set(2, 0, 1);
  return HomogeneousPair("su2", {}, {}, LieAlgebra({"e1", "e2", "e3"}, b), {basis_vector(3, 2)},
                         {basis_vector(3, 0), basis_vector(3, 1)}, Matrix::identity(2));
}

HomogeneousPair flat_plane() {
  return HomogeneousPair("flat", {}, {}, LieAlgebra::abelian(2), {}, {basis_vector(2, 0), basis_vector(2, 1)},
                         Matrix::identity(2));
}

}  // namespace

TEST_SUITE("homspace") {
  TEST_CASE("builtin Gram matrices") {
    auto a1 = builtin_pair(FamilyId::a1());
    CHECK(a1.gram() == Matrix{{S("a"), S("0"), S("-a/2"), S("0")},
                              {S("0"), S("b"), S("c"), S("a")},
                              {S("-a/2"), S("c"), S("d"), S("0")},
                              {S("0"), S("a"), S("0"), S("0")}});
    auto a4 = builtin_pair(FamilyId::a4());
    CHECK(a4.gram() == Matrix{{S("a"), S("0"), S("0"), S("0")},
                              {S("0"), S("b"), S("a"), S("0")},
                              {S("0"), S("a"), S("0"), S("0")},
                              {S("0"), S("0"), S("0"), S("a/2")}});
    auto b2 = builtin_pair(FamilyId::b2());
    CHECK(b2.g() == a4.g());
    Matrix expected = a4.gram();
    expected(0, 0) = S("-a");
    CHECK(b2.gram() == expected);
    CHECK(b2.isotropy()[0] == V({"0", "0", "1", "0", "0", "-1"}));
    CHECK(a4.isotropy()[0] == V({"0", "0", "1", "0", "0", "1"}));
  }

  TEST_CASE("nonzero constraints") {
    CHECK(builtin_pair(FamilyId::a1()).nonzero() == std::vector<Scalar>{S("a*(a-4*d)")});
    CHECK(builtin_pair(FamilyId::a2()).nonzero() == std::vector<Scalar>{S("a*d")});
    CHECK(builtin_pair(FamilyId::a3(1)).nonzero() == std::vector<Scalar>{S("a*b")});
    CHECK(builtin_pair(FamilyId::a4()).nonzero() == std::vector<Scalar>{S("a")});
    CHECK(builtin_pair(FamilyId::b1()).nonzero() == std::vector<Scalar>{S("a")});
  }

  TEST_CASE("projection") {
    auto a1 = builtin_pair(FamilyId::a1());
    CHECK(a1.project_m(basis_vector(5, 2)) == V({"0", "0", "0", "1/2"}));
    CHECK(a1.project_m(basis_vector(5, 3)) == V({"0", "0", "0", "-1/2"}));
    CHECK(cas::is_zero(a1.project_m(a1.isotropy()[0])));
    for (auto id : all_families()) {
      auto p = builtin_pair(id);
      for (std::size_t i = 0; i < p.g().dim(); ++i) {
        auto x = p.project_m(basis_vector(p.g().dim(), i));
        CHECK(p.project_m(p.embed_m(x)) == x);
        CHECK(p.embed_m(x) + p.embed_h(p.project_h(basis_vector(p.g().dim(), i))) == basis_vector(p.g().dim(), i));
      }
    }
  }

  TEST_CASE("Gram determinants") {
    auto a1 = gram_det(builtin_pair(FamilyId::a1()));
    CHECK(a1 == S("a^3*(a-4*d)/4"));
    auto a4 = gram_det(builtin_pair(FamilyId::a4()));
    CHECK(a4 == S("-a^4/2"));
    for (auto id : all_families()) {
      auto p = builtin_pair(id);
      auto det = gram_det(p);
      // a unit multiple of a power product of the constraint factors
      for (const auto& c : p.nonzero()) CHECK_MESSAGE(det.num().divisible_by(c.num()), id.str());
    }
    CHECK_THROWS_AS(HomogeneousPair("degenerate", {}, {}, LieAlgebra::abelian(2), {},
                                    {basis_vector(2, 0), basis_vector(2, 1)}, Matrix{{S("1"), S("0")}, {S("0"), S("0")}}),
                    ValidationError);
  }

  TEST_CASE("signatures") {
    CHECK(signature_at(builtin_pair(FamilyId::a4()), {{"a", 1}, {"b", 0}}) == std::pair{3, 1});
    CHECK(signature_at(builtin_pair(FamilyId::b2()), {{"a", 1}, {"b", 0}}) == std::pair{2, 2});
    auto a1 = builtin_pair(FamilyId::a1());
    // blocks (u1,u3) and (u2,u4): [[1,-1/2],[-1/2,d]] and [[0,1],[1,0]]
    CHECK(signature_at(a1, {{"a", 1}, {"b", 0}, {"c", 0}, {"d", 1}}) == std::pair{3, 1});
    CHECK(signature_at(a1, {{"a", 1}, {"b", 0}, {"c", 0}, {"d", 0}}) == std::pair{2, 2});
    CHECK_THROWS(signature_at(a1, {{"a", 4}, {"b", 0}, {"c", 0}, {"d", 1}}));
  }

  TEST_CASE("property: signature is a congruence invariant") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> d(-4, 4);
    int done = 0;
    while (done < 50) {
      Matrix g(4, 4), p(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) g(i, j) = g(j, i) = Scalar(d(rng));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) p(i, j) = Scalar(d(rng));
      if (cas::determinant(g).is_zero() || cas::determinant(p).is_zero()) continue;
      CHECK(signature(p.transpose() * g * p) == signature(g));
      ++done;
    }
  }

  TEST_CASE("non-reductivity") {
    for (auto id : all_families()) {
      auto dec = nonreductivity_decide(builtin_pair(id));
      CHECK_MESSAGE(std::holds_alternative<NonReductive>(dec.kind), id.str());
    }
    CHECK(nonreductivity_decide(builtin_pair(FamilyId::a2())).genericity.empty());
    auto flat = nonreductivity_decide(flat_plane());
    REQUIRE(std::holds_alternative<Reductive>(flat.kind));
    auto su2 = nonreductivity_decide(su2_toy());
    REQUIRE(std::holds_alternative<Reductive>(su2.kind));
    CHECK(std::get<Reductive>(su2.kind).phi.is_zero());
  }

  TEST_CASE("the decision depends on the isotropy") {
    // Same algebra as A4, isotropy spanned by e1: ad(e1) is diagonal, so the
    // other basis vectors span an invariant complement.
    auto g = builtin_pair(FamilyId::a4()).g();
    std::vector<Vector> m;
    for (std::size_t i = 1; i < 6; ++i) m.push_back(basis_vector(6, i));
    Matrix gram(5, 5);
    gram(0, 1) = gram(1, 0) = Scalar(1);  // e2, e3: weights 2, -2
    gram(2, 3) = gram(3, 2) = Scalar(1);  // e4, e5: weights 1, -1
    gram(4, 4) = Scalar(1);               // e6: weight 0
    HomogeneousPair cartan("a4-cartan", {}, {}, g, {basis_vector(6, 0)}, m, gram);
    CHECK(nonreductivity_decide(cartan).is_reductive());
    CHECK_FALSE(nonreductivity_decide(builtin_pair(FamilyId::a4())).is_reductive());
  }

  TEST_CASE("specialization") {
    auto a1 = builtin_pair(FamilyId::a1());
    auto s = a1.specialize({{"d", Scalar(0)}});
    CHECK(s.gram()(2, 2).is_zero());
    CHECK(std::find(s.params().begin(), s.params().end(), "d") == s.params().end());
    CHECK_THROWS_AS(a1.specialize({{"a", Scalar(4)}, {"d", Scalar(1)}}), ValidationError);
  }

  TEST_CASE("family names") {
    CHECK(parse_family("a3-") == FamilyId::a3(-1));
    CHECK(parse_family("B2") == FamilyId::b2());
    CHECK_FALSE(parse_family("C1"));
    CHECK(FamilyId::a3(-1).str() == "A3(eta=-1)");
  }
}
