#include "homkernel/checks.hpp"
#include "util.hpp"

using namespace homkernel;
using namespace homkernel::checks;
using homspace::builtin_pair;
using hypersurface::CaseTag;

namespace {

bool has_line(const Report& r, const std::string& line) {
  for (const auto& l : r.machine_extra)
    if (l == line) return true;
  return false;
}

const CheckResult* find(const Report& r, const std::string& name) {
  for (const auto& c : r.results)
    if (c.name == name) return &c;
  return nullptr;
}

homspace::HomogeneousPair su2_toy() {
  using liealg::basis_vector;
  std::vector<std::vector<liealg::Vector>> b(3, std::vector<liealg::Vector>(3, liealg::Vector(3, cas::Scalar(0))));
  auto set = [&](int i, int j, int k) {
    b[i][j] = basis_vector(3, k);
    b[j][i] = cas::scaled(basis_vector(3, k), cas::Scalar(-1));
  };
  set(0, 1, 2);
  set(1, 2, 0);
  set(2, 0, 1);
  return homspace::HomogeneousPair("su2", {}, {}, liealg::LieAlgebra({"e1", "e2", "e3"}, b), {basis_vector(3, 2)},
                                   {basis_vector(3, 0), basis_vector(3, 1)}, cas::Matrix::identity(2));
}

}  // namespace

TEST_SUITE("checks") {
  TEST_CASE("every family passes the default checks") {
    for (auto id : homspace::all_families()) {
      auto r = run_checks(builtin_pair(id), id);
      CHECK_MESSAGE(r.all_pass(), r.human());
      CHECK(r.exit_code() == 0);
      CHECK(r.results.size() == all_check_names().size());
    }
    auto a4 = run_checks(builtin_pair(FamilyId::a4()), FamilyId::a4());
    auto* sym = find(a4, "symmetric-locus");
    REQUIRE(sym);
    CHECK(sym->summary.find("b = 0") != std::string::npos);
  }

  TEST_CASE("selected checks run alone") {
    auto r = run_checks(builtin_pair(FamilyId::b1()), FamilyId::b1(), {"nonreductive"});
    REQUIRE(r.results.size() == 1);
    CHECK(r.results[0].name == "nonreductive");
    CHECK(r.results[0].status == Status::pass);
  }

  TEST_CASE("a reductive pair fails the non-reductivity check") {
    auto r = run_checks(su2_toy(), std::nullopt, {"nonreductive"});
    REQUIRE(r.results.size() == 1);
    CHECK(r.results[0].status == Status::fail);
    CHECK(r.exit_code() == failure_code("nonreductive"));
    CHECK(r.exit_code() != 0);
  }

  TEST_CASE("golden checks need a family") {
    auto r = run_checks(su2_toy(), std::nullopt, {"golden-lambda"});
    REQUIRE(r.results.size() == 1);
    CHECK(r.results[0].status == Status::fail);
    // skipped silently in the default set
    auto all = run_checks(su2_toy(), std::nullopt);
    CHECK_FALSE(find(all, "golden-lambda"));
  }

  TEST_CASE("identify_family") {
    for (auto id : homspace::all_families()) CHECK(identify_family(builtin_pair(id)) == id);
    CHECK_FALSE(identify_family(su2_toy()));
  }

  TEST_CASE("machine rendering") {
    auto r = run_checks(builtin_pair(FamilyId::a4()), FamilyId::a4());
    auto m = r.machine();
    CHECK(m.find("CHECK jacobi PASS") != std::string::npos);
    CHECK(m == run_checks(builtin_pair(FamilyId::a4()), FamilyId::a4()).machine());
  }

  TEST_CASE("classify examples") {
    ClassifyRequest a2;
    a2.family = FamilyId::a2();
    a2.normal = {"alpha", "0", "0", "delta"};
    a2.tag = CaseTag::i;
    a2.bindings = {{"d", "1/delta^2"}};
    auto r = classify(a2);
    CHECK_MESSAGE(has_line(r, "VERDICT codazzi yes"), r.human());
    CHECK(has_line(r, "VERDICT parallel no"));

    a2.normal = {"0", "0", "0", "delta"};
    r = classify(a2);
    CHECK_MESSAGE(has_line(r, "VERDICT parallel yes"), r.human());

    ClassifyRequest a1;
    a1.family = FamilyId::a1();
    a1.normal = {"alpha", "0", "0", "0"};
    a1.bindings = {{"a", "1/alpha^2"}};
    r = classify(a1);
    CHECK_MESSAGE(has_line(r, "VERDICT codazzi no"), r.human());
    bool mentions_b = false;
    for (const auto& n : r.notes) mentions_b |= n.find('b') != std::string::npos && n.find("alpha") != std::string::npos;
    CHECK(mentions_b);

    ClassifyRequest b2;
    b2.family = FamilyId::b2();
    b2.normal = {"alpha", "0", "gamma", "0"};
    b2.tag = CaseTag::ii;
    b2.bindings = {{"a", "-1/alpha^2"}};
    r = classify(b2);
    CHECK_MESSAGE(has_line(r, "VERDICT proper-parallel yes"), r.human());

    ClassifyRequest bad = b2;
    bad.bindings = {};
    CHECK_THROWS(classify(bad));
  }

  TEST_CASE("table I") {
    auto rows = table1_rows(1, 100);
    // A3 is one row for both signs of eta
    REQUIRE(rows.size() == 6);
    for (const auto& row : rows) {
      auto e = expected_table1_row(row.family);
      CHECK_MESSAGE(row.codazzi == e.codazzi, row.family.str());
      CHECK(row.proper_parallel == e.proper_parallel);
      CHECK(row.totally_geodesic == e.totally_geodesic);
      CHECK_FALSE(row.evidence.empty());
    }
    CHECK(table1_report(1, 100).machine() == table1_report(1, 100).machine());
  }
}
