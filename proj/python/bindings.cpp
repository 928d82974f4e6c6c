#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homkernel/cas/parser.hpp"
#include "homkernel/checks.hpp"
#include "homkernel/connection.hpp"
#include "homkernel/errors.hpp"
#include "homkernel/spacefile.hpp"

namespace py = pybind11;
using namespace homkernel;

namespace {

homspace::FamilyId family_or_throw(const std::string& name) {
  auto id = homspace::parse_family(name);
  if (!id) throw py::value_error("unknown family: " + name);
  return *id;
}

// A family name or a path to a .space file.
std::pair<homspace::HomogeneousPair, std::optional<homspace::FamilyId>> resolve(const std::string& subject) {
  if (auto id = homspace::parse_family(subject)) return {homspace::builtin_pair(*id), id};
  auto p = spacefile::load_space(subject);
  return {p, checks::identify_family(p)};
}

std::vector<std::vector<std::string>> strings(const cas::Matrix& m) {
  std::vector<std::vector<std::string>> out(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).str();
  return out;
}

py::dict report_dict(const checks::Report& r) {
  py::dict checks_out;
  for (const auto& c : r.results) checks_out[py::str(c.name)] = checks::status_name(c.status);
  py::dict verdicts;
  for (const auto& line : r.machine_extra) {
    // VERDICT <name> <yes|no>
    auto a = line.find(' '), b = line.rfind(' ');
    if (line.rfind("VERDICT ", 0) == 0 && b > a) verdicts[py::str(line.substr(a + 1, b - a - 1))] = line.substr(b + 1) == "yes";
  }
  py::dict d;
  d["subject"] = r.subject;
  d["checks"] = checks_out;
  d["verdicts"] = verdicts;
  d["notes"] = r.notes;
  d["exit_code"] = r.exit_code();
  d["text"] = r.human();
  return d;
}

}  // namespace

PYBIND11_MODULE(_homkernel, m) {
  m.doc() = "Exact connection, curvature and hypersurface computations on four-dimensional homogeneous pairs";

  py::register_exception<Error>(m, "HomkernelError", PyExc_ValueError);

  m.def("families", [] {
    std::vector<std::string> out;
    for (auto id : homspace::all_families()) out.push_back(id.str());
    return out;
  });

  m.def(
      "simplify", [](const std::string& expr, const std::vector<std::string>& params) { return cas::parse_expr(expr, params).str(); },
      py::arg("expr"), py::arg("params"), "Canonical form of a rational expression.");

  m.def(
      "gram",
      [](const std::string& subject) { return strings(resolve(subject).first.gram()); }, py::arg("subject"));

  m.def(
      "connection",
      [](const std::string& subject) {
        auto p = resolve(subject).first;
        auto c = connection::compute_lambda(p);
        std::vector<std::vector<std::vector<std::string>>> out;
        for (const auto& l : c.on_m) out.push_back(strings(l));
        return out;
      },
      py::arg("subject"), "lambda(u_k) for each basis vector, column j = lambda(u_k) u_j.");

  m.def(
      "curvature",
      [](const std::string& subject, std::size_t i, std::size_t j) {
        auto p = resolve(subject).first;
        if (i >= p.dim_m() || j >= p.dim_m()) throw py::index_error("basis index out of range");
        auto r = connection::curvature(p, connection::compute_lambda(p));
        return strings(r.at(i, j));
      },
      py::arg("subject"), py::arg("i"), py::arg("j"), "R(u_i, u_j) as a matrix (0-based indices).");

  m.def(
      "check",
      [](const std::string& subject, const std::vector<std::string>& names) {
        auto [p, id] = resolve(subject);
        return report_dict(checks::run_checks(p, id, names));
      },
      py::arg("subject"), py::arg("names") = std::vector<std::string>{});

  m.def(
      "classify",
      [](const std::string& family, const std::vector<std::string>& normal, int eps, std::optional<std::string> case_tag,
         const std::map<std::string, std::string>& bindings) {
        checks::ClassifyRequest req;
        req.family = family_or_throw(family);
        req.normal = normal;
        req.eps = eps;
        if (case_tag) {
          req.tag = hypersurface::parse_case(*case_tag);
          if (!req.tag) throw py::value_error("unknown case: " + *case_tag);
        }
        for (const auto& kv : bindings) req.bindings.push_back(kv);
        return report_dict(checks::classify(req));
      },
      py::arg("family"), py::arg("normal"), py::arg("eps") = 1, py::arg("case") = py::none(),
      py::arg("bindings") = std::map<std::string, std::string>{});

  m.def(
      "table1",
      [](std::uint64_t seed, std::size_t sweep) {
        std::vector<py::dict> rows;
        for (const auto& r : checks::table1_rows(seed, sweep)) {
          py::dict d;
          d["family"] = r.family.tag_name();
          d["codazzi"] = r.codazzi;
          d["proper_parallel"] = r.proper_parallel;
          d["totally_geodesic"] = r.totally_geodesic;
          d["evidence"] = r.evidence;
          rows.push_back(d);
        }
        return rows;
      },
      py::arg("seed") = 1, py::arg("sweep") = 100);
}
