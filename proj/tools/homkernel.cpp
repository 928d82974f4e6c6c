// homkernel command-line tool.
#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "homkernel/checks.hpp"
#include "homkernel/spacefile.hpp"

using namespace homkernel;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

homspace::FamilyId family_or_throw(const std::string& s) {
  auto id = homspace::parse_family(s);
  if (!id) throw CLI::ValidationError("family", "unknown family '" + s + "' (A1, A2, A3, A3-, A4, B1, B2)");
  return *id;
}

void print(const checks::Report& r, bool machine) { std::cout << (machine ? r.machine() : r.human()); }

int cmd_check(const std::string& target, const std::vector<std::string>& names, std::uint64_t seed,
              bool machine) {
  std::optional<homspace::FamilyId> id = homspace::parse_family(target);
  homspace::HomogeneousPair p = id ? homspace::builtin_pair(*id) : spacefile::load_space(target);
  if (!id) id = checks::identify_family(p);
  checks::Report rep = checks::run_checks(p, id, names);
  // Pairs that are one of the non-existence families also get the sweep.
  if (id && names.empty() && (id->tag == homspace::Family::A1 || id->tag == homspace::Family::B1)) {
    auto sw = hypersurface::refutation_sweep(*id, 100, seed);
    rep.results.push_back({"refutation-sweep",
                           sw.codazzi_hits() == 0 ? checks::Status::pass : checks::Status::fail,
                           std::to_string(sw.samples.size()) + " random constant unit normals, " +
                               std::to_string(sw.codazzi_hits()) + " with R(X,Y)xi = 0",
                           {"seed " + std::to_string(seed)}});
  }
  print(rep, machine);
  return rep.exit_code();
}

int cmd_show(const std::string& what, const std::string& family, bool machine) {
  auto id = family_or_throw(family);
  auto p = homspace::builtin_pair(id);
  auto c = connection::compute_lambda(p);
  std::ostringstream os;
  auto emit = [&](const std::string& label, const cas::Matrix& m) {
    if (machine) {
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t k = 0; k < m.cols(); ++k)
          os << "ENTRY " << label << " " << r + 1 << " " << k + 1 << " " << m(r, k).str() << "\n";
    } else {
      os << label << " =\n" << m.str() << "\n";
    }
  };
  if (!machine) os << "== " << id.str() << " " << what << " ==\n";
  if (what == "lambda") {
    for (std::size_t i = 0; i < c.on_m.size(); ++i) emit("lambda(u" + std::to_string(i + 1) + ")", c.on_m[i]);
  } else {
    auto r = connection::curvature(p, c);
    for (std::size_t i = 0; i < p.dim_m(); ++i)
      for (std::size_t j = i + 1; j < p.dim_m(); ++j)
        emit("R(u" + std::to_string(i + 1) + ",u" + std::to_string(j + 1) + ")", r.at(i, j));
  }
  std::cout << os.str();
  return 0;
}

int cmd_classify(const std::string& family, const std::string& normal, int eps, const std::string& tag,
                 const std::string& frame, const std::vector<std::string>& binds, bool machine) {
  checks::ClassifyRequest req{family_or_throw(family), {}, eps, std::nullopt, std::nullopt, {}};
  for (const auto& e : split(normal, ',')) req.normal.push_back(trim(e));
  if (!tag.empty()) {
    req.tag = hypersurface::parse_case(tag);
    if (!req.tag) throw CLI::ValidationError("--case", "expected i, ii or iii");
  }
  if (!frame.empty()) {
    std::vector<std::vector<std::string>> vs;
    for (const auto& v : split(frame, ';')) {
      vs.emplace_back();
      for (const auto& e : split(v, ',')) vs.back().push_back(trim(e));
    }
    req.frame = std::move(vs);
  }
  for (const auto& b : binds) {
    auto eq = b.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--bind", "expected name=value, got '" + b + "'");
    req.bindings.emplace_back(trim(b.substr(0, eq)), trim(b.substr(eq + 1)));
  }
  auto rep = checks::classify(req);
  print(rep, machine);
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariant geometry of non-reductive homogeneous four-manifolds"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));

  std::string target;
  std::vector<std::string> check_names;
  std::uint64_t seed = 0;
  auto* check = app.add_subcommand("check", "run checks on a family or space file");
  check->add_option("target", target, "family tag or path to a .space file")->required();
  check->add_option("--checks", check_names, "subset of checks")
      ->delimiter(',')
      ->check(CLI::IsMember(checks::all_check_names()));
  check->add_option("--seed", seed, "refutation sweep seed");

  std::string what, family;
  auto* show = app.add_subcommand("show", "print lambda or curvature tables");
  show->add_option("what", what)->required()->check(CLI::IsMember({"lambda", "curvature"}));
  show->add_option("family", family)->required();

  std::string normal, tag, frame;
  int eps = 1;
  std::vector<std::string> binds;
  auto* cls = app.add_subcommand("classify", "classify a constant-component unit normal");
  cls->add_option("family", family)->required();
  cls->add_option("--normal", normal, "four comma-separated components")->required();
  cls->add_option("--eps", eps, "+1 or -1")->required()->check(CLI::IsMember({1, -1}));
  auto* case_opt = cls->add_option("--case", tag, "i, ii or iii");
  cls->add_option("--frame", frame, "three ';'-separated vectors")->excludes(case_opt);
  cls->add_option("--bind", binds, "name=value parameter binding");

  std::size_t sweep = 100;
  auto* t1 = app.add_subcommand("table1", "reproduce the Codazzi / parallel / totally geodesic table");
  t1->add_option("--seed", seed, "refutation sweep seed");
  t1->add_option("--sweep", sweep, "random normals per non-existence family")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version come through here with code 0
    return app.exit(e) == 0 ? 0 : 2;
  }
  const bool machine = format == "machine";
  try {
    if (*check) return cmd_check(target, check_names, seed, machine);
    if (*show) return cmd_show(what, family, machine);
    if (*cls) return cmd_classify(family, normal, eps, tag, frame, binds, machine);
    if (*t1) {
      auto rep = checks::table1_report(seed, sweep);
      print(rep, machine);
      return rep.exit_code();
    }
  } catch (const CLI::Error& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
