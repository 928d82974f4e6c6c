#include "homkernel/checks.hpp"

#include <algorithm>
#include <sstream>

#include "homkernel/cas/parser.hpp"
#include "homkernel/golden.hpp"

namespace homkernel::checks {

using cas::Bindings;
using cas::Scalar;
using homspace::Family;
namespace hs = hypersurface;

namespace {

const std::vector<std::string> kGreek = {"alpha", "beta", "gamma", "delta"};

Scalar sym(const std::string& n) { return Scalar::param(n); }

std::string bindings_str(const Bindings& b) {
  std::string out;
  for (const auto& [k, v] : b) {
    if (!out.empty()) out += ", ";
    out += k + " = " + v.str();
  }
  return out.empty() ? "generic" : out;
}

bool vectors_zero(const std::vector<liealg::Vector>& vs) {
  return std::all_of(vs.begin(), vs.end(), [](const liealg::Vector& v) { return cas::is_zero(v); });
}

bool scalars_zero(const std::vector<Scalar>& xs) {
  return std::all_of(xs.begin(), xs.end(), [](const Scalar& s) { return s.is_zero(); });
}

// Applies only the bindings whose names are still parameters of p.
std::optional<HomogeneousPair> specialize_if_free(const HomogeneousPair& p, const Bindings& b) {
  for (const auto& [k, v] : b)
    if (std::find(p.params().begin(), p.params().end(), k) == p.params().end()) return std::nullopt;
  return p.specialize(b);
}

CheckResult check_jacobi(const HomogeneousPair& p) {
  auto res = liealg::jacobi_residual(p.g());
  if (scalars_zero(res)) return {"jacobi", Status::pass, "Jacobi identity holds identically", {}};
  CheckResult r{"jacobi", Status::fail, "Jacobi identity fails", {}};
  for (const auto& s : res)
    if (!s.is_zero()) {
      r.details.push_back("residual " + s.str());
      break;
    }
  return r;
}

CheckResult check_nonreductive(const HomogeneousPair& p) {
  auto dec = homspace::nonreductivity_decide(p);
  if (std::holds_alternative<homspace::NonReductive>(dec.kind)) {
    if (dec.genericity.empty()) return {"nonreductive", Status::pass, "no ad(h)-invariant complement exists", {}};
    CheckResult r{"nonreductive", Status::conditional, "non-reductive where these are nonzero", {}};
    for (const auto& g : dec.genericity) r.details.push_back(g.str() + " != 0");
    return r;
  }
  const cas::Matrix& phi = std::holds_alternative<homspace::Reductive>(dec.kind)
                               ? std::get<homspace::Reductive>(dec.kind).phi
                               : std::get<homspace::ConditionallyReductive>(dec.kind).phi;
  CheckResult r{"nonreductive", Status::fail, "an invariant complement exists", {}};
  r.details.push_back("phi = " + phi.str());
  return r;
}

CheckResult check_axioms(const HomogeneousPair& p, const connection::ConnectionData& c,
                         const connection::CurvatureData& r) {
  auto ax = connection::connection_axiom_residuals(p, c);
  bool bianchi = vectors_zero(connection::bianchi_residual(r));
  bool pairsym = scalars_zero(connection::pair_symmetry_residual(p, r));
  CheckResult out{"connection-axioms", Status::pass,
                  "torsion-free, metric, isotropy-compatible; Bianchi and pair symmetry hold", {}};
  if (!ax.all_zero()) out.details.push_back("Levi-Civita axiom residual nonzero");
  if (!bianchi) out.details.push_back("first Bianchi residual nonzero");
  if (!pairsym) out.details.push_back("pair symmetry residual nonzero");
  if (!out.details.empty()) {
    out.status = Status::fail;
    out.summary = "connection identities fail";
  }
  return out;
}

CheckResult golden_result(const std::string& name, const golden::GoldenComparison& cmp) {
  CheckResult r{name, cmp.pass() ? Status::pass : Status::fail, "", {}};
  r.summary = std::to_string(cmp.entries) + " entries compared, " + std::to_string(cmp.mismatches.size()) +
              " mismatches, " + std::to_string(cmp.errata.size()) + " corrected misprints";
  for (const auto& m : cmp.mismatches)
    r.details.push_back(m.table + "[" + std::to_string(m.row + 1) + "," + std::to_string(m.col + 1) +
                        "]: expected " + m.expected.str() + ", computed " + m.computed.str());
  for (const auto& e : cmp.errata)
    r.details.push_back("erratum " + e.erratum.table + "[" + std::to_string(e.erratum.row + 1) + "," +
                        std::to_string(e.erratum.col + 1) + "] printed " + e.erratum.printed + " -> " +
                        e.erratum.corrected + (e.ok() ? " (confirmed: " + e.evidence + ")" : " (NOT confirmed)"));
  return r;
}

std::string locus_name(const FamilyId& id) {
  switch (id.tag) {
    case Family::A3: return id.eta > 0 ? "d + b = 0" : "d - b = 0";
    case Family::B1: return "c^2 - b d = 0";
    default: return "b = 0";
  }
}

CheckResult check_symmetric_locus(const HomogeneousPair& p, const FamilyId& id) {
  CheckResult r{"symmetric-locus", Status::pass, "locally symmetric on " + locus_name(id), {}};
  auto on = specialize_if_free(p, symmetric_locus(id));
  auto off = specialize_if_free(p, generic_point(id));
  if (!on || !off) return {"symmetric-locus", Status::conditional, "parameters already bound; locus not probed", {}};
  auto sym_res = [](const HomogeneousPair& q) {
    auto c = connection::compute_lambda(q);
    auto cr = connection::curvature(q, c);
    return connection::locally_symmetric_residual(q, c, cr);
  };
  auto s_on = sym_res(*on);
  auto s_off = sym_res(*off);
  if (!s_on.m_zero()) {
    r.status = Status::fail;
    r.details.push_back("nabla R != 0 on " + locus_name(id));
  }
  if (s_off.m_zero()) {
    r.status = Status::fail;
    r.details.push_back("nabla R = 0 off the locus at " + bindings_str(generic_point(id)));
  } else {
    r.details.push_back("nabla R != 0 at " + bindings_str(generic_point(id)));
  }
  if (!s_on.h_zero() || !s_off.h_zero()) {
    r.status = Status::fail;
    r.details.push_back("isotropy derivation residual nonzero");
  }
  return r;
}

CheckResult check_constant_curvature(const HomogeneousPair& p, const FamilyId& id) {
  CheckResult r{"constant-curvature-locus", Status::pass, "", {}};
  auto fit_at = [&](const Bindings& b) -> std::optional<connection::CurvatureFit> {
    auto q = specialize_if_free(p, b);
    if (!q) return std::nullopt;
    auto c = connection::compute_lambda(*q);
    return connection::constant_curvature_fit(*q, connection::curvature(*q, c));
  };
  auto describe = [](const connection::CurvatureFit& f) {
    if (auto k = std::get_if<connection::ConstantCurvature>(&f)) return "constant curvature k = " + k->k.str();
    const auto& nc = std::get<connection::NotConstant>(f);
    return "not constant: R(u" + std::to_string(nc.i + 1) + ",u" + std::to_string(nc.j + 1) + ")u" +
           std::to_string(nc.l + 1) + " misfit " + cas::vec_str(nc.residual);
  };
  auto locus = constant_curvature_locus(id);
  auto off = fit_at(generic_point(id));
  if (!off) return {"constant-curvature-locus", Status::conditional, "parameters already bound; locus not probed", {}};
  if (std::holds_alternative<connection::ConstantCurvature>(*off)) {
    r.status = Status::fail;
    r.details.push_back("constant curvature off the locus at " + bindings_str(generic_point(id)));
  } else {
    r.details.push_back("at " + bindings_str(generic_point(id)) + ": " + describe(*off));
  }
  if (locus) {
    auto on = fit_at(*locus);
    r.summary = "constant curvature exactly on " + bindings_str(*locus);
    if (!on || !std::holds_alternative<connection::ConstantCurvature>(*on)) {
      r.status = Status::fail;
      r.details.push_back("no constant curvature on " + bindings_str(*locus));
    } else {
      r.details.push_back("on " + bindings_str(*locus) + ": " + describe(*on));
    }
  } else {
    r.summary = "never of constant curvature";
  }
  // Locally symmetric points that are not of constant curvature.
  if (id.tag == Family::A1 || id.tag == Family::B1) {
    Bindings ls = symmetric_locus(id);
    auto f = fit_at(ls);
    if (f && std::holds_alternative<connection::ConstantCurvature>(*f)) {
      r.status = Status::fail;
      r.details.push_back("unexpected constant curvature on " + bindings_str(ls));
    } else if (f) {
      r.details.push_back("on " + bindings_str(ls) + ": " + describe(*f));
    }
  }
  return r;
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::conditional: return "COND";
  }
  return "?";
}

bool Report::all_pass() const {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == Status::fail; });
}

int Report::exit_code() const {
  for (const auto& r : results)
    if (r.status == Status::fail) return failure_code(r.name);
  return 0;
}

std::string Report::human() const {
  std::ostringstream os;
  os << "== " << subject << " ==\n";
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  for (const auto& r : results) {
    os << "  " << status_name(r.status) << "  " << r.name << std::string(width - r.name.size() + 2, ' ') << r.summary
       << "\n";
    for (const auto& d : r.details) os << "        " << d << "\n";
  }
  for (const auto& n : notes) os << n << "\n";
  return os.str();
}

std::string Report::machine() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << "CHECK " << r.name << " " << status_name(r.status);
    for (const auto& d : r.details) os << " [" << d << "]";
    os << "\n";
  }
  for (const auto& l : machine_extra) os << l << "\n";
  return os.str();
}

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = {"jacobi",           "nonreductive",    "connection-axioms",
                                                 "golden-lambda",    "golden-curvature", "symmetric-locus",
                                                 "constant-curvature-locus"};
  return names;
}

int failure_code(const std::string& name) {
  const auto& names = all_check_names();
  auto it = std::find(names.begin(), names.end(), name);
  if (it != names.end()) return 10 + static_cast<int>(it - names.begin());
  if (name.rfind("table1", 0) == 0) return 30;
  if (name.rfind("nonexistence", 0) == 0) return 21;
  return 20;
}

std::optional<FamilyId> identify_family(const HomogeneousPair& p) {
  for (const auto& id : homspace::all_families())
    if (homspace::builtin_pair(id) == p) return id;
  return std::nullopt;
}

Bindings symmetric_locus(const FamilyId& id) {
  switch (id.tag) {
    case Family::A3: return {{"d", Scalar(-id.eta) * sym("b")}};
    case Family::B1: return {{"d", sym("c") * sym("c") / sym("b")}};
    default: return {{"b", Scalar(0)}};
  }
}

Bindings generic_point(const FamilyId& id) {
  switch (id.tag) {
    case Family::A1: return {{"a", 1}, {"b", 1}, {"c", 0}, {"d", 0}};
    case Family::A2: return {{"a", 1}, {"b", 1}, {"c", 0}, {"d", 1}, {"kappa", 2}};
    case Family::A3: return {{"a", 1}, {"b", 1}, {"c", 0}, {"d", 2}};
    case Family::B1: return {{"a", 1}, {"b", 1}, {"c", 0}, {"d", 1}};
    default: return {{"a", 1}, {"b", 1}};
  }
}

std::optional<Bindings> constant_curvature_locus(const FamilyId& id) {
  switch (id.tag) {
    case Family::A1: return std::nullopt;
    case Family::B1: return Bindings{{"b", 0}, {"c", 0}, {"d", 0}};
    default: return symmetric_locus(id);
  }
}

Report run_checks(const HomogeneousPair& p, const std::optional<FamilyId>& id, const std::vector<std::string>& names) {
  Report rep;
  rep.subject = id ? id->str() : p.name();
  const bool defaults = names.empty();
  std::vector<std::string> todo = defaults ? all_check_names() : names;
  std::optional<connection::ConnectionData> conn;
  std::optional<connection::CurvatureData> curv;
  auto ensure = [&] {
    if (!conn) {
      conn = connection::compute_lambda(p);
      curv = connection::curvature(p, *conn);
    }
  };
  for (const auto& name : todo) {
    const bool needs_family = name.rfind("golden", 0) == 0 || name == "symmetric-locus" ||
                              name == "constant-curvature-locus";
    if (needs_family && !id) {
      if (!defaults)
        rep.results.push_back({name, Status::fail, "no built-in family matches this pair", {}});
      continue;
    }
    if (name == "jacobi") {
      rep.results.push_back(check_jacobi(p));
    } else if (name == "nonreductive") {
      rep.results.push_back(check_nonreductive(p));
    } else if (name == "connection-axioms") {
      ensure();
      rep.results.push_back(check_axioms(p, *conn, *curv));
    } else if (name == "golden-lambda") {
      ensure();
      rep.results.push_back(golden_result(name, golden::compare_lambda(*id, p, *conn)));
    } else if (name == "golden-curvature") {
      ensure();
      rep.results.push_back(golden_result(name, golden::compare_curvature(*id, p, *curv)));
    } else if (name == "symmetric-locus") {
      rep.results.push_back(check_symmetric_locus(p, *id));
    } else if (name == "constant-curvature-locus") {
      rep.results.push_back(check_constant_curvature(p, *id));
    } else {
      rep.results.push_back({name, Status::fail, "unknown check", {}});
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> with_greek(std::vector<std::string> names) {
  for (const auto& g : kGreek)
    if (std::find(names.begin(), names.end(), g) == names.end()) names.push_back(g);
  return names;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Scalar residual_content(const std::vector<liealg::Vector>& vs) {
  cas::Poly g;
  for (const auto& v : vs)
    for (const auto& s : v) g = cas::gcd(g, s.num());
  return Scalar(g);
}

void add_replay(Report& rep, const FamilyId& id) {
  int k = 0;
  for (const auto& st : hs::replay_nonexistence(id)) {
    ++k;
    CheckResult r{"nonexistence-step-" + std::to_string(k), st.ok() ? Status::pass : Status::fail, st.step.label, {}};
    r.details.push_back("residual content " + st.content.str());
    for (std::size_t f = 0; f < st.forced_by.size(); ++f)
      r.details.push_back(st.step.forced[f].str() + (st.forced_by[f] ? " exhibited by component " +
                                                                           std::to_string(*st.forced_by[f] + 1)
                                                                     : " not exhibited"));
    rep.results.push_back(std::move(r));
  }
}

}  // namespace

Report classify(const ClassifyRequest& req) {
  Report rep;
  rep.subject = "classify " + req.family.str();
  HomogeneousPair base = req.family.tag == Family::A2
                             ? hs::normalize_A2_metric(homspace::builtin_pair(req.family)).pair
                             : homspace::builtin_pair(req.family);
  const auto names = with_greek(base.params());
  Bindings b;
  for (const auto& [k, v] : req.bindings) b[k] = cas::parse_expr(v, names);
  HomogeneousPair pair = b.empty() ? base : base.specialize(b);
  const auto pnames = with_greek(pair.params());
  if (req.normal.size() != pair.dim_m()) throw DimensionMismatch("the normal needs " + std::to_string(pair.dim_m()) + " components");
  liealg::Vector xi;
  for (const auto& e : req.normal) xi.push_back(cas::parse_expr(e, pnames));
  hs::NormalField nf(pair, xi, req.eps);
  rep.results.push_back({"normal-norm", Status::pass, "<xi,xi> = " + std::to_string(req.eps) + " identically", {}});

  hs::TangentFrame frame;
  if (req.tag) {
    frame = hs::frame_for_case(req.family, *req.tag, pair, nf);
  } else if (req.frame) {
    std::vector<liealg::Vector> vs;
    for (const auto& v : *req.frame) {
      liealg::Vector x;
      for (const auto& e : v) x.push_back(cas::parse_expr(e, pnames));
      vs.push_back(std::move(x));
    }
    frame = hs::custom_frame(pair, nf, std::move(vs));
  } else {
    frame = hs::orthogonal_frame(pair, nf);
  }
  std::string frame_str;
  for (std::size_t i = 0; i < frame.v.size(); ++i)
    frame_str += (i ? "; " : "") + std::string("V") + std::to_string(i + 1) + " = " + cas::vec_str(frame.v[i]);
  rep.results.push_back({"frame", Status::pass, "orthogonal to xi, non-degenerate", {frame_str}});

  auto conn = connection::compute_lambda(pair);
  auto curv = connection::curvature(pair, conn);
  hs::Classification cl = hs::classify_normal(pair, conn, curv, nf, frame);
  rep.results.push_back({"shape-form-relation", Status::pass, "<S V_i, V_j> = eps h(V_i, V_j)", {}});

  if (cl.intrinsic) {
    rep.results.push_back({"intrinsic-consistency", cl.intrinsic->consistent() ? Status::pass : Status::fail,
                           std::string("orbit connection equals the tangential ambient one") +
                               (cl.intrinsic->with_isotropy ? " (orbit of span(V) + h)" : " (orbit of span(V))"),
                           {}});
    rep.results.push_back({"gauss-codazzi", cl.gauss_codazzi->all_zero() ? Status::pass : Status::fail,
                           "Gauss and Codazzi equations close", {}});
  } else {
    rep.results.push_back({"gauss-codazzi", Status::conditional, "not checked", {cl.intrinsic_note}});
  }
  if (req.family.tag == Family::A1 || req.family.tag == Family::B1) add_replay(rep, req.family);

  rep.notes.push_back("  xi = " + cas::vec_str(xi) + ", eps = " + std::to_string(req.eps));
  rep.notes.push_back("  R(V_i,V_j)xi: " + std::string(cl.codazzi_zero ? "all zero" : "content " +
                                                                         residual_content(cl.codazzi).str()));
  rep.notes.push_back("  S (column j = S V_j in the frame):");
  rep.notes.push_back(cl.shape->s.str());
  if (!cl.self_adjoint_zero) rep.notes.push_back("  S is not self-adjoint: <SV_i,V_j> - <V_i,SV_j> =\n" + cl.self_adjoint->str());
  if (!cl.parallel->parallel) {
    std::vector<liealg::Vector> flat;
    for (const auto& row : cl.parallel->residual) flat.insert(flat.end(), row.begin(), row.end());
    rep.notes.push_back("  parallel residual content " + residual_content(flat).str());
  }
  rep.notes.push_back("  Codazzi second fundamental form: " + yes_no(cl.codazzi_form()));
  rep.notes.push_back("  parallel: " + yes_no(cl.is_parallel()) + ", proper parallel: " +
                      yes_no(cl.is_proper_parallel()) + ", totally geodesic: " + yes_no(cl.is_totally_geodesic()));
  rep.machine_extra.push_back("VERDICT codazzi " + yes_no(cl.codazzi_form()));
  rep.machine_extra.push_back("VERDICT parallel " + yes_no(cl.is_parallel()));
  rep.machine_extra.push_back("VERDICT proper-parallel " + yes_no(cl.is_proper_parallel()));
  rep.machine_extra.push_back("VERDICT totally-geodesic " + yes_no(cl.is_totally_geodesic()));
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

enum class Property { codazzi, proper_parallel, totally_geodesic };

struct Witness {
  hs::CaseTag tag;
  Bindings overrides;
  Property property;
};

std::vector<Witness> witnesses(const FamilyId& id) {
  using hs::CaseTag;
  switch (id.tag) {
    case Family::A2:
      return {{CaseTag::i, {}, Property::codazzi},
              {CaseTag::i, {{"alpha", 0}}, Property::proper_parallel},
              {CaseTag::i, {{"kappa", 0}, {"alpha", 1}}, Property::totally_geodesic}};
    case Family::A3:
      return {{CaseTag::ii, {}, Property::codazzi},
              {CaseTag::ii, {{"alpha", -sym("c") * sym("gamma") / sym("a")}}, Property::proper_parallel},
              {CaseTag::i, {{"alpha", 0}}, Property::totally_geodesic}};
    case Family::A4:
    case Family::B2:
      return {{CaseTag::ii, {}, Property::codazzi},
              {CaseTag::ii, {}, Property::proper_parallel},
              {CaseTag::i, {{"gamma", 0}}, Property::totally_geodesic}};
    default: return {};
  }
}

bool holds(const hs::Classification& c, Property p) {
  switch (p) {
    case Property::codazzi: return c.codazzi_form();
    case Property::proper_parallel: return c.is_proper_parallel();
    case Property::totally_geodesic: return c.is_totally_geodesic();
  }
  return false;
}

const char* property_name(Property p) {
  switch (p) {
    case Property::codazzi: return "Codazzi";
    case Property::proper_parallel: return "proper parallel";
    case Property::totally_geodesic: return "totally geodesic";
  }
  return "?";
}

}  // namespace

Table1Row expected_table1_row(const FamilyId& id) {
  const bool yes = id.tag != Family::A1 && id.tag != Family::B1;
  return {id, yes, yes, yes, {}};
}

std::vector<Table1Row> table1_rows(std::uint64_t seed, std::size_t sweep_size) {
  std::vector<Table1Row> rows;
  for (Family f : {Family::A1, Family::A2, Family::A3, Family::A4, Family::B1, Family::B2}) {
    std::vector<FamilyId> ids;
    if (f == Family::A3)
      ids = {FamilyId::a3(1), FamilyId::a3(-1)};
    else
      ids = {f == Family::B2 ? FamilyId::b2() : FamilyId{f, 1}};
    Table1Row row{ids.front(), true, true, true, {}};
    if (f == Family::A1 || f == Family::B1) {
      auto sw = hs::refutation_sweep(ids.front(), sweep_size, seed);
      bool refuted = sw.samples.size() == sweep_size && sw.codazzi_hits() == 0;
      row.evidence.push_back("sweep: " + std::to_string(sw.samples.size()) + " random unit normals (" +
                             std::to_string(sw.attempted) + " draws), " + std::to_string(sw.codazzi_hits()) +
                             " with R(X,Y)xi = 0");
      bool replay_ok = true;
      for (const auto& st : hs::replay_nonexistence(ids.front())) {
        replay_ok = replay_ok && st.ok();
        row.evidence.push_back(std::string(st.ok() ? "ok  " : "BAD ") + st.step.label + "; content " +
                               st.content.str());
      }
      row.codazzi = !(refuted && replay_ok);
      row.proper_parallel = row.totally_geodesic = row.codazzi;
    } else {
      for (Property p : {Property::codazzi, Property::proper_parallel, Property::totally_geodesic}) {
        bool all = true;
        for (const auto& id : ids)
          for (const auto& w : witnesses(id)) {
            if (w.property != p) continue;
            auto cs = hs::case_setup(id, w.tag, 1, w.overrides);
            auto cl = hs::classify_normal(cs.pair, cs.conn, cs.curv, cs.xi, cs.frame);
            bool ok = holds(cl, p);
            all = all && ok;
            row.evidence.push_back(std::string(property_name(p)) + ": " + id.str() + " case " +
                                   hs::case_name(w.tag) + ", eps = 1, " + bindings_str(w.overrides) + ", xi = " +
                                   cas::vec_str(cs.xi.xi()) + " -> " + (ok ? "holds" : "fails"));
          }
        (p == Property::codazzi ? row.codazzi : p == Property::proper_parallel ? row.proper_parallel
                                                                              : row.totally_geodesic) = all;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Report table1_report(std::uint64_t seed, std::size_t sweep_size) {
  Report rep;
  rep.subject = "table1 (seed " + std::to_string(seed) + ")";
  auto mark = [](bool b) { return std::string(b ? "✓" : "✗"); };
  rep.notes.push_back("  family | Codazzi | proper parallel | totally geodesic");
  for (const auto& row : table1_rows(seed, sweep_size)) {
    auto exp = expected_table1_row(row.family);
    bool match = exp.codazzi == row.codazzi && exp.proper_parallel == row.proper_parallel &&
                 exp.totally_geodesic == row.totally_geodesic;
    std::string cells = "codazzi=" + yes_no(row.codazzi) + " proper-parallel=" + yes_no(row.proper_parallel) +
                        " totally-geodesic=" + yes_no(row.totally_geodesic);
    CheckResult r{"table1-" + row.family.tag_name(), match ? Status::pass : Status::fail, cells, row.evidence};
    rep.results.push_back(std::move(r));
    rep.notes.push_back("  " + row.family.tag_name() + "     |    " + mark(row.codazzi) + "    |        " +
                        mark(row.proper_parallel) + "        |        " + mark(row.totally_geodesic));
  }
  return rep;
}

}  // namespace homkernel::checks
