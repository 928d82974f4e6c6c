#include "homkernel/spacefile.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "homkernel/cas/parser.hpp"
#include "homkernel/errors.hpp"

namespace homkernel::spacefile {

using cas::Scalar;
using homspace::HomogeneousPair;
using liealg::Vector;

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct Line {
  std::size_t number;
  std::string key;
  std::string value;
  std::size_t value_column;  // 1-based column of value start
};

class Reader {
 public:
  explicit Reader(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t n = 0;
    std::string section;
    while (std::getline(in, raw)) {
      ++n;
      std::string s = raw.substr(0, raw.find('#'));
      if (trim(s).empty()) continue;
      std::string t = trim(s);
      if (t.front() == '[') {
        if (t.back() != ']') throw ParseError(n, raw.find('[') + 1, "unterminated section header");
        section = trim(t.substr(1, t.size() - 2));
        static const std::set<std::string> known{"params", "algebra", "isotropy", "complement", "metric"};
        if (!known.count(section)) throw ParseError(n, raw.find('[') + 1, "unknown section '" + section + "'");
        sections_[section];
        continue;
      }
      auto eq = s.find('=');
      if (eq == std::string::npos) throw ParseError(n, raw.find_first_not_of(" \t") + 1, "expected 'key = value'");
      if (section.empty()) throw ParseError(n, 1, "entry outside of a section");
      std::string value = s.substr(eq + 1);
      std::size_t lead = value.find_first_not_of(" \t");
      sections_[section].push_back(
          {n, trim(s.substr(0, eq)), trim(value), eq + 2 + (lead == std::string::npos ? 0 : lead)});
    }
  }
  const std::vector<Line>& section(const std::string& name) const {
    static const std::vector<Line> empty;
    auto it = sections_.find(name);
    return it == sections_.end() ? empty : it->second;
  }

 private:
  std::map<std::string, std::vector<Line>> sections_;
};

class Builder {
 public:
  Scalar expr(const Line& l, const std::vector<std::string>& extra = {}) const {
    std::vector<std::string> names = params_;
    for (const auto& [k, v] : fixed_) names.push_back(k);
    names.insert(names.end(), extra.begin(), extra.end());
    Scalar s;
    try {
      s = cas::parse_expr(l.value, names);
    } catch (const SyntaxError& e) {
      throw ParseError(l.number, l.value_column + e.position(), e.what());
    } catch (const UnknownParameter& e) {
      throw ParseError(l.number, l.value_column, e.what());
    } catch (const DivisionByZero& e) {
      throw ParseError(l.number, l.value_column, e.what());
    }
    return fixed_.empty() ? s : cas::substitute(s, fixed_);
  }

  /// Linear combination of `vars` with coefficients free of them.
  Vector linear(const Line& l, const std::vector<std::string>& vars) const {
    Scalar s = expr(l, vars);
    for (const auto& v : vars)
      if (s.den().contains(v)) throw ParseError(l.number, l.value_column, "'" + v + "' appears in a denominator");
    Vector out(vars.size());
    cas::Poly rest = s.num();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (rest.degree_in(vars[i]) > 1) throw ParseError(l.number, l.value_column, "not linear in " + vars[i]);
      cas::Poly c = rest.coeff_in(vars[i], 1);
      for (const auto& v : vars)
        if (c.contains(v)) throw ParseError(l.number, l.value_column, "not linear in the basis");
      out[i] = Scalar(c, s.den());
      rest = rest.coeff_in(vars[i], 0);
    }
    if (!rest.is_zero()) throw ParseError(l.number, l.value_column, "term without a basis element: " + rest.str());
    return out;
  }

  std::vector<std::string> params_;
  cas::Bindings fixed_;
};

void check_fresh(const Line& l, const std::string& name, std::set<std::string>& used) {
  if (!cas::is_identifier(name)) throw ParseError(l.number, 1, "'" + name + "' is not an identifier");
  if (!used.insert(name).second) throw ParseError(l.number, 1, "name '" + name + "' declared twice");
}

}  // namespace

HomogeneousPair parse_space(const std::string& text, const std::string& name) {
  Reader r(text);
  Builder b;
  std::set<std::string> used;
  std::vector<const Line*> nonzero_lines;

  for (const auto& l : r.section("params")) {
    if (l.key == "names") {
      for (const auto& p : split_list(l.value)) {
        check_fresh(l, p, used);
        b.params_.push_back(p);
      }
    } else if (l.key == "nonzero") {
      nonzero_lines.push_back(&l);
    } else if (l.key.rfind("set ", 0) == 0) {
      std::string p = trim(l.key.substr(4));
      check_fresh(l, p, used);
      Scalar v = b.expr(l);
      if (!v.is_constant()) throw ParseError(l.number, l.value_column, "fixed value must be a rational number");
      b.fixed_[p] = v;
    } else {
      throw ParseError(l.number, 1, "unknown key '" + l.key + "' in [params]");
    }
  }
  std::vector<Scalar> nonzero;
  for (const Line* l : nonzero_lines) nonzero.push_back(b.expr(*l));

  std::vector<std::string> basis;
  std::vector<const Line*> bracket_lines;
  for (const auto& l : r.section("algebra")) {
    if (l.key == "basis") {
      for (const auto& e : split_list(l.value)) {
        check_fresh(l, e, used);
        basis.push_back(e);
      }
    } else if (l.key.rfind("bracket ", 0) == 0) {
      bracket_lines.push_back(&l);
    } else {
      throw ParseError(l.number, 1, "unknown key '" + l.key + "' in [algebra]");
    }
  }
  if (basis.empty()) throw ParseError(1, 1, "missing [algebra] basis");
  const std::size_t n = basis.size();
  std::vector<std::vector<Vector>> c(n, std::vector<Vector>(n, Vector(n)));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Line* l : bracket_lines) {
    std::istringstream ks(l->key.substr(8));
    std::string x, y, extra;
    ks >> x >> y;
    if (x.empty() || y.empty() || (ks >> extra))
      throw ParseError(l->number, 1, "expected 'bracket <x> <y> = <expr>'");
    auto ix = std::find(basis.begin(), basis.end(), x), iy = std::find(basis.begin(), basis.end(), y);
    if (ix == basis.end() || iy == basis.end()) throw ParseError(l->number, 1, "bracket of unknown basis element");
    std::size_t i = static_cast<std::size_t>(ix - basis.begin()), j = static_cast<std::size_t>(iy - basis.begin());
    if (!seen.insert({i, j}).second) throw ParseError(l->number, 1, "bracket " + x + " " + y + " given twice");
    c[i][j] = b.linear(*l, basis);
  }

  auto vectors = [&](const std::string& sec, std::vector<std::string>& names) {
    std::vector<Vector> out;
    for (const auto& l : r.section(sec)) {
      check_fresh(l, l.key, used);
      names.push_back(l.key);
      out.push_back(b.linear(l, basis));
    }
    return out;
  };
  std::vector<std::string> h_names, m_names;
  std::vector<Vector> h = vectors("isotropy", h_names);
  std::vector<Vector> m = vectors("complement", m_names);
  const std::size_t k = m.size();

  std::vector<std::string> coframe;
  for (std::size_t i = 0; i < k; ++i) coframe.push_back("th" + std::to_string(i + 1));
  cas::Matrix gram(k, k);
  std::optional<const Line*> form;
  std::vector<const Line*> entries;
  for (const auto& l : r.section("metric")) {
    if (l.key == "coframe") {
      coframe = split_list(l.value);
      if (coframe.size() != k) throw ParseError(l.number, l.value_column, "coframe needs one name per complement vector");
    } else if (l.key == "form") {
      form = &l;
    } else {
      entries.push_back(&l);
    }
  }
  if (form && !entries.empty()) throw ParseError(entries[0]->number, 1, "metric given both as form and entries");
  if (form) {
    for (const auto& t : coframe) check_fresh(**form, t, used);
    try {
      gram = homspace::gram_from_form(b.expr(**form, coframe), coframe);
    } catch (const ValidationError& e) {
      throw ParseError((*form)->number, (*form)->value_column, e.what());
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> given;
  for (const Line* l : entries) {
    std::size_t i = 0, j = 0;
    const std::string& key = l->key;
    bool ok = key.size() == 3 && key[0] == 'g' && std::isdigit(static_cast<unsigned char>(key[1])) &&
              std::isdigit(static_cast<unsigned char>(key[2]));
    if (ok) {
      i = static_cast<std::size_t>(key[1] - '1');
      j = static_cast<std::size_t>(key[2] - '1');
      ok = i < k && j < k;
    }
    if (!ok) throw ParseError(l->number, 1, "expected a Gram entry g<i><j> with 1 <= i, j <= " + std::to_string(k));
    if (!given.insert({std::min(i, j), std::max(i, j)}).second)
      throw ParseError(l->number, 1, "Gram entry " + key + " given twice");
    gram(i, j) = gram(j, i) = b.expr(*l);
  }

  HomogeneousPair pair(name, b.params_, std::move(nonzero), liealg::LieAlgebra(basis, std::move(c)), std::move(h),
                       std::move(m), std::move(gram));
  auto jac = liealg::jacobi_residual(pair.g());
  for (std::size_t idx = 0; idx < jac.size(); ++idx)
    if (!jac[idx].is_zero()) throw ValidationError("jacobi", "nonzero cyclic sum component " + jac[idx].str());
  return pair;
}

HomogeneousPair load_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string name = path;
  auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  auto dot = name.rfind('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return parse_space(ss.str(), name);
}

namespace {

std::string combination(const Vector& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!v[i].is_constant()) {
      out += (out.empty() ? "(" : " + (") + v[i].str() + ")*" + names[i];
      continue;
    }
    cas::Rational c = v[i].constant_value();
    const bool neg = c < 0;
    if (neg) c = -c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (c != 1) out += cas::rational_str(c) + "*";
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string render_space(const HomogeneousPair& p) {
  std::ostringstream os;
  os << "# " << p.name() << "\n[params]\n";
  if (!p.params().empty()) {
    os << "names = ";
    for (std::size_t i = 0; i < p.params().size(); ++i) os << (i ? ", " : "") << p.params()[i];
    os << "\n";
  }
  for (const auto& z : p.nonzero()) os << "nonzero = " << z.str() << "\n";
  const auto& basis = p.g().basis_names();
  os << "\n[algebra]\nbasis = ";
  for (std::size_t i = 0; i < basis.size(); ++i) os << (i ? ", " : "") << basis[i];
  os << "\n";
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (!cas::is_zero(p.g().structure(i, j)))
        os << "bracket " << basis[i] << " " << basis[j] << " = " << combination(p.g().structure(i, j), basis) << "\n";
  os << "\n[isotropy]\n";
  for (std::size_t i = 0; i < p.dim_h(); ++i) os << "h" << i + 1 << " = " << combination(p.isotropy()[i], basis) << "\n";
  os << "\n[complement]\n";
  for (std::size_t i = 0; i < p.dim_m(); ++i)
    os << "u" << i + 1 << " = " << combination(p.complement()[i], basis) << "\n";
  os << "\n[metric]\n";
  for (std::size_t i = 0; i < p.dim_m(); ++i)
    for (std::size_t j = i; j < p.dim_m(); ++j)
      if (!p.gram()(i, j).is_zero()) os << "g" << i + 1 << j + 1 << " = " << p.gram()(i, j).str() << "\n";
  return os.str();
}

}  // namespace homkernel::spacefile
