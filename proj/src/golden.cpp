#include "homkernel/golden.hpp"

#include <sstream>

#include "homkernel/cas/parser.hpp"
#include "homkernel/errors.hpp"

namespace homkernel::golden {

namespace {

// One block per table: a header line naming the table, then four rows with
// entries separated by ';'.
const char* const kA1 = R"(
lambda(u1)
0; 0; 0; 0
0; 1; 0; 0
0; 0; 0; 0
0; -b/c; -c/a; -1
lambda(u2)
0; -8*d*b/(a*(a-4*d)); c/a; 1
-1; 0; 1/2; 0
0; -4*b/(a-4*d); 0; 0
-b/a; 4*c*b/(a*(a-4*d)); -b/(2*a); 0
lambda(u3)
0; c/a; 0; 0
0; 1/2; 0; 0
0; 0; 0; 0
-c/a; -b/(2*a); 0; -1/2
lambda(u4)
0; -1; 0; 0
0; 0; 0; 0
0; 0; 0; 0
1; 0; -1/2; 0
R(u1,u2)
0; b*(a+20*d)/(alpha*(a-4*d)); -c/a; -1
1; 0; -1/2; 0
0; 12*b/(a-4*d); 0; 0
4*b/a; -12*b*c/(a*(a-4*d)); b/a; 0
R(u1,u3)
0; -c/a; 0; 0
0; 0; 0; 0
0; 0; 0; 0
c/a; 0; -c/(2*a); 0
R(u1,u4)
0; -1; 0; 0
0; 0; 0; 0
0; 0; 0; 0
1; 0; -1/2; 0
R(u2,u3)
0; -b*(a+4*d)/(2*a*(a-4*d)); -c/(2*a); -1/2
1/2; -c/a; -1/4; 0
0; -2*b/(a-4*d); 0; 0
-b/a; b*c*(3*a-4*d)/(a^2*(a-4*d)); c^2/a^2; c/a
R(u2,u4)
0; 0; 0; 0
0; -1; 0; 0
0; 0; 0; 0
0; b/a; c/a; 1
R(u3,u4)
0; 1/2; 0; 0
0; 0; 0; 0
0; 0; 0; 0
-1/2; 0; 1/4; 0
)";

const char* const kA2 = R"(
lambda(u1)
0; 0; kappa*c/d; kappa
0; 0; 0; 0
0; 0; 0; 0
0; 0; kappa*a/d; 0
lambda(u2)
0; -kappa*c/d; 0; 0
0; 0; 0; kappa
0; 0; 0; 0
0; -kappa*a/d; 0; 0
lambda(u3)
kappa*c/d; 0; -(kappa-1)*b*c/(a*d); -(kappa*c^2-b*d)/(a*d)
0; 0; 0; 0
0; 0; 0; kappa
kappa*a/d; 0; -(kappa-1)*b/d; -kappa*c/d
lambda(u4)
-1; 0; -(kappa*c^2-b*d)/(a*d); -(kappa-1)*c/a
0; 0; 0; 0
0; 0; 1; 0
0; 0; -kappa*c/d; 0
R(u1,u2)
0; -kappa^2*a/d; 0; 0
0; 0; -kappa^2*a/d; 0
0; 0; 0; 0
0; 0; 0; 0
R(u1,u3)
kappa^2*a/d; 0; -kappa^2*b/d; -kappa^2*c/d
0; 0; 0; 0
0; 0; -kappa^2*a/d; 0
0; 0; 0; 0
R(u1,u4)
0; 0; -kappa^2*c/d; -kappa^2
0; 0; 0; 0
0; 0; 0; 0
0; 0; -kappa^2*a/d; 0
R(u2,u3)
0; kappa*b/d; 0; 0
kappa^2*a/d; 0; -kappa*(kappa-1)*b/d; -kappa^2*c/d
0; kappa^2*a/d; 0; 0
0; 0; 0; 0
R(u2,u4)
0; 0; 0; 0
0; 0; -kappa^2*c/d; -kappa^2
0; 0; 0; 0
0; kappa^2*a/d; 0; 0
R(u3,u4)
0; 0; -2*(kappa-1)*b*c/(a*d); -2*(kappa-1)*b/a
0; 0; 0; 0
0; 0; -kappa^2*c/d; -kappa^2
-kappa^2*a/d; 0; (kappa^2-2*kappa+2)*b/d; kappa^2*c/d
)";

const char* const kA3 = R"(
lambda(u1)
0; 0; 1; c/b
0; 0; 0; 0
0; 0; 0; -a/b
0; 0; 0; 0
lambda(u2)
0; c/b-1; 0; 0
0; 0; 1; 1
0; -a/b; 0; 0
0; 0; 0; 0
lambda(u3)
-1; 0; 0; (c^2-b*d)/(a*b)
0; 0; 0; 0
0; 0; 0; -c/b
0; 0; 0; 1
lambda(u4)
c/b; 0; (c^2-b*d)/(a*b); 0
0; 0; 0; 0
-a/b; 0; -c/b; 0
0; 0; 1; 0
R(u1,u2)
0; -a/b; 0; 0
0; 0; 0; a/b
0; 0; 0; 0
0; 0; 0; 0
R(u1,u3)
0; 0; -1; -c/b
0; 0; 0; 0
0; 0; 0; a/b
0; 0; 0; 0
R(u1,u4)
-a/b; 0; -c/b; -d/b
0; 0; 0; 0
0; 0; 0; 0
0; 0; 0; a/b
R(u2,u3)
0; 0; 0; 0
0; 0; -1; -c/b
0; a/b; 0; 0
0; 0; 0; 0
R(u2,u4)
0; -eta-d/b; 0; 0
-a/b; 0; -c/b; eta
0; 0; 0; 0
0; a/b; 0; 0
R(u3,u4)
0; 0; 0; 0
0; 0; 0; 0
-a/b; 0; -c/b; -d/b
0; 0; 1; c/b
)";

const char* const kA4 = R"(
lambda(u1)
0; 0; 0; 0
0; 1; 0; 0
0; -b/a; -1; 0
0; 0; 0; 0
lambda(u2)
0; 2*b/a*eta; eta; 0
-1; 0; 0; 0
-b/a; 0; 0; 0
0; 0; 0; 0
lambda(u3)
0; eta; 0; 0
0; 0; 0; 0
-1; 0; 0; 0
0; 0; 0; 0
lambda(u4)
0; 0; 0; eta/2
0; 0; 0; 0
0; 0; 0; 0
-1; 0; 0; 0
R(u1,u2)
0; -5*b/a*eta; -eta; 0
1; 0; 0; 0
4*b/a; 0; 0; 0
0; 0; 0; 0
R(u1,u3)
0; -eta; 0; 0
0; 0; 0; 0
1; 0; 0; 0
0; 0; 0; 0
R(u1,u4)
0; 0; 0; -eta/2
0; 0; 0; 0
0; 0; 0; 0
1; 0; 0; 0
R(u2,u3)
0; 0; 0; 0
0; -eta; 0; 0
0; b/a*eta; eta; 0
0; 0; 0; 0
R(u2,u4)
0; 0; 0; 0
0; 0; 0; -eta/2
0; 0; 0; -b/(2*a)*eta
0; 2*b/a*eta; eta; 0
R(u3,u4)
0; 0; 0; 0
0; 0; 0; 0
0; 0; 0; -eta/2
0; eta; 0; 0
)";

const char* const kB1 = R"(
lambda(u1)
-1; -c/(2*a); -d/a; 0
0; 1; 0; 0
0; 0; 1; 0
0; -b/a; -3*c/(2*a); -1
lambda(u2)
-c/(2*a); (c^2-2*b*d)/a^2; -c*d/a^2; -d/(2*a)
-1; -c/a; -d/(2*a); 0
0; 2*b/a; 3*c/(2*a); 1
-b/a; -b*c/a^2; (b*d-3*c^2)/(2*a^2); 0
lambda(u3)
-d/a; -c*d/a^2; -d^2/a^2; 0
0; -d/(2*a); 0; 0
0; 3*c/(2*a); d/a; 0
-3*c/(2*a); (b*d-3*c^2)/(2*a^2); -c*d/a^2; d/(2*a)
lambda(u4)
0; -d/(2*a); 0; 0
0; 0; 0; 0
0; 0; 0; 0
0; 0; d/(2*a); 0
R(u1,u2)
3*c/(2*a); (22*b*d-15*c^2)/(4*a^2); 3*c*d/(2*a^2); 0
0; 3*c/(2*a); 0; 0
0; -3*b/a; -3*c/(2*a); 0
3*b/a; 3*b*c/(2*a^2); 5*(3*c^2-2*b*d)/(4*a^2); -3*c/(2*a)
R(u1,u3)
d/a; 5*c*d/(4*a^2); d^2/a^2; 0
0; d/(2*a); 0; 0
0; -3*c/(2*a); -d/a; 0
3*c/(2*a); (3*c^2-b*d)/(2*a^2); 3*c*d/(4*a^2); -d/(2*a)
R(u1,u4)
0; d/(2*a); 0; 0
0; 0; 0; 0
0; 0; 0; 0
0; 0; -d/(2*a); 0
R(u2,u3)
-c*d/(4*a^2); 3*d*(b*d-c^2)/(4*a^3); 0; d^2/(4*a^2)
d/(2*a); c*d/(4*a^2); d^2/(4*a^2); 0
0; (9*c^2-10*b*d)/(4*a^2); -c*d/(4*a^2); -d/(2*a)
(8*b*d-9*c^2)/(4*a^2); 9*c*(b*d-c^2)/(4*a^3); 3*d*(b*d-c^2)/(2*a^3); c*d/(4*a^2)
R(u2,u4)
d/(2*a); 3*c*d/(4*a^2); d^2/(2*a^2); 0
0; d/a; 0; 0
0; -3*c/(2*a); -d/(2*a); 0
3*c/(2*a); (3*c^2-2*b*d)/(2*a^2); c*d/(4*a^2); -d/a
R(u3,u4)
0; d^2/(4*a^2); 0; 0
0; 0; 0; 0
0; 0; 0; 0
0; 0; -d^2/(4*a^2); 0
)";

std::vector<Erratum> errata_for(homspace::Family f) {
  if (f != homspace::Family::A1) return {};
  return {
      {"lambda(u1)", 3, 1, "-b/c", "-b/a",
       "the printed entry breaks metric compatibility; the Koszul value is -b/a"},
      {"R(u1,u2)", 0, 1, "b*(a+20*d)/(alpha*(a-4*d))", "b*(a+20*d)/(a*(a-4*d))",
       "the printed denominator uses a symbol that is not a parameter of the family"},
  };
}

const char* source_for(homspace::Family f) {
  switch (f) {
    case homspace::Family::A1: return kA1;
    case homspace::Family::A2: return kA2;
    case homspace::Family::A3: return kA3;
    case homspace::Family::A4:
    case homspace::Family::B2: return kA4;
    case homspace::Family::B1: return kB1;
  }
  throw Error("no reference tables for this family");
}

std::vector<std::string> table_params() { return {"a", "b", "c", "d", "kappa", "eta", "alpha"}; }

Scalar entry(const std::string& text, const cas::Bindings& eta) {
  return cas::substitute(cas::parse_expr(text, table_params()), eta);
}

std::vector<std::pair<std::string, Matrix>> parse_tables(const char* src, const cas::Bindings& eta) {
  std::vector<std::pair<std::string, Matrix>> out;
  std::istringstream in(src);
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.find(';') == std::string::npos) {
      out.emplace_back(line, Matrix(4, 4));
      row = 0;
      continue;
    }
    std::istringstream cells(line);
    std::string cell;
    std::size_t col = 0;
    while (std::getline(cells, cell, ';')) out.back().second(row, col++) = entry(cell, eta);
    ++row;
  }
  return out;
}

std::string where(const std::string& table, std::size_t row, std::size_t col) {
  return table + "[" + std::to_string(row + 1) + "," + std::to_string(col + 1) + "]";
}

GoldenComparison compare(const std::vector<GoldenTable>& tables, const std::vector<Matrix>& computed,
                         const std::vector<Erratum>& errata) {
  GoldenComparison out;
  for (std::size_t t = 0; t < tables.size(); ++t)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        ++out.entries;
        if (tables[t].expected(i, j) != computed[t](i, j))
          out.mismatches.push_back({tables[t].name, i, j, tables[t].expected(i, j), computed[t](i, j)});
      }
  for (const auto& e : errata) {
    for (std::size_t t = 0; t < tables.size(); ++t) {
      if (tables[t].name != e.table) continue;
      ErratumCheck chk;
      chk.erratum = e;
      chk.printed_differs = tables[t].printed(e.row, e.col) != computed[t](e.row, e.col);
      chk.corrected_matches = tables[t].expected(e.row, e.col) == computed[t](e.row, e.col);
      out.errata.push_back(chk);
    }
  }
  return out;
}

}  // namespace

bool GoldenComparison::pass() const {
  if (!mismatches.empty()) return false;
  for (const auto& e : errata)
    if (!e.ok()) return false;
  return true;
}

GoldenSet golden_tables(const FamilyId& id) {
  cas::Bindings eta{{"eta", Scalar(id.eta)}};
  GoldenSet out;
  out.errata = errata_for(id.tag);
  for (auto& [name, m] : parse_tables(source_for(id.tag), eta)) {
    GoldenTable t{name, m, m};
    for (const auto& e : out.errata)
      if (e.table == name) t.expected(e.row, e.col) = entry(e.corrected, eta);
    (name.rfind("lambda", 0) == 0 ? out.lambda : out.curvature).push_back(std::move(t));
  }
  return out;
}

GoldenComparison compare_lambda(const FamilyId& id, const homspace::HomogeneousPair& p,
                                const connection::ConnectionData& c) {
  GoldenSet g = golden_tables(id);
  GoldenComparison out = compare(g.lambda, c.on_m, g.errata);
  // A misprint is only accepted when the printed table itself is not a
  // Levi-Civita map.
  connection::ConnectionData printed = c;
  for (std::size_t t = 0; t < g.lambda.size(); ++t) printed.on_m[t] = g.lambda[t].printed;
  auto res = connection::connection_axiom_residuals(p, printed);
  for (auto& chk : out.errata) {
    chk.printed_inconsistent = !res.all_zero();
    std::size_t nonzero = 0;
    for (const auto& s : res.compat) nonzero += !s.is_zero();
    for (const auto& v : res.torsion) nonzero += !cas::is_zero(v);
    chk.evidence = where(chk.erratum.table, chk.erratum.row, chk.erratum.col) + ": printed table has " +
                   std::to_string(nonzero) + " nonzero torsion/compatibility residuals";
  }
  return out;
}

GoldenComparison compare_curvature(const FamilyId& id, const homspace::HomogeneousPair& p,
                                   const connection::CurvatureData& r) {
  GoldenSet g = golden_tables(id);
  static const std::pair<std::size_t, std::size_t> kPairs[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<Matrix> computed;
  for (const auto& [i, j] : kPairs) computed.push_back(r.at(i, j));
  GoldenComparison out = compare(g.curvature, computed, g.errata);
  connection::CurvatureData printed = r;
  for (std::size_t t = 0; t < 6; ++t) {
    const auto& [i, j] = kPairs[t];
    printed.r[i][j] = g.curvature[t].printed;
    printed.r[j][i] = -g.curvature[t].printed;
  }
  std::size_t nonzero = 0;
  for (const auto& s : connection::pair_symmetry_residual(p, printed)) nonzero += !s.is_zero();
  for (const auto& v : connection::bianchi_residual(printed)) nonzero += !cas::is_zero(v);
  for (auto& chk : out.errata) {
    chk.printed_inconsistent = nonzero > 0;
    chk.evidence = where(chk.erratum.table, chk.erratum.row, chk.erratum.col) + ": printed table has " +
                   std::to_string(nonzero) + " nonzero pair-symmetry/Bianchi residuals";
  }
  return out;
}

}  // namespace homkernel::golden
