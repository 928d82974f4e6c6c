#include "homkernel/cas/poly.hpp"

#include <algorithm>
#include <sstream>

#include "homkernel/errors.hpp"

namespace homkernel::cas {

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& x, const Factor& y) { return x.first < y.first; });
  for (auto& f : factors) {
    if (f.second == 0) continue;
    if (!factors_.empty() && factors_.back().first == f.first) {
      factors_.back().second += f.second;
    } else {
      factors_.push_back(std::move(f));
    }
  }
  for (const auto& f : factors_) degree_ += f.second;
}

Monomial Monomial::variable(const std::string& name, std::uint32_t exp) {
  return Monomial({{name, exp}});
}

std::uint32_t Monomial::exponent(const std::string& name) const {
  for (const auto& f : factors_)
    if (f.first == name) return f.second;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Monomial::divide(const Monomial& other, Monomial& quotient) const {
  quotient.factors_.clear();
  auto j = other.factors_.begin();
  for (const auto& f : factors_) {
    if (j != other.factors_.end() && j->first < f.first) return false;
    if (j != other.factors_.end() && j->first == f.first) {
      if (j->second > f.second) return false;
      if (j->second < f.second) quotient.factors_.emplace_back(f.first, f.second - j->second);
      ++j;
    } else {
      quotient.factors_.push_back(f);
    }
  }
  if (j != other.factors_.end()) return false;
  quotient.degree_ = degree_ - other.degree_;
  return true;
}

Monomial Monomial::without(const std::string& name) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first == name) continue;
    out.factors_.push_back(f);
    out.degree_ += f.second;
  }
  return out;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  auto i = a.factors().begin();
  auto j = b.factors().begin();
  while (i != a.factors().end() && j != b.factors().end()) {
    if (i->first != j->first) return i->first < j->first ? 1 : -1;
    if (i->second != j->second) return i->second > j->second ? 1 : -1;
    ++i;
    ++j;
  }
  if (i != a.factors().end()) return 1;
  if (j != b.factors().end()) return -1;
  return 0;
}

// ---------------------------------------------------------------------------

// Caller-built rationals such as mpq_class(6, 4) are not reduced; GMP
// arithmetic assumes reduced operands, so normalize on the way in.
namespace {
Rational reduced(const Rational& c) {
  Rational r = c;
  r.canonicalize();
  return r;
}
}  // namespace

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial(), reduced(c)});
}

Poly Poly::variable(const std::string& name) { return monomial(Monomial::variable(name), 1); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  if (c == 0) return {};
  return Poly(std::vector<Term>{{m, reduced(c)}});
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grlex_compare(x.mono, y.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return Poly(std::move(out));
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw Error("polynomial is not constant: " + str());
  return terms_[0].coeff;
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

std::uint32_t Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

std::set<std::string> Poly::variables() const {
  std::set<std::string> out;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) out.insert(f.first);
  return out;
}

bool Poly::contains(const std::string& name) const {
  for (const auto& t : terms_)
    if (t.mono.exponent(name)) return true;
  return false;
}

std::uint32_t Poly::degree_in(const std::string& name) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(name));
  return d;
}

Poly Poly::coeff_in(const std::string& name, std::uint32_t k) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.exponent(name) == k) out.push_back({t.mono.without(name), t.coeff});
  // Removing one variable from grlex-sorted terms keeps the relative order.
  return from_terms(std::move(out));
}

std::vector<Poly> Poly::coeffs_in(const std::string& name) const {
  std::vector<std::vector<Term>> buckets(degree_in(name) + 1);
  for (const auto& t : terms_) buckets[t.mono.exponent(name)].push_back({t.mono.without(name), t.coeff});
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    int c = (i == terms_.end()) ? -1 : (j == o.terms_.end()) ? 1 : grlex_compare(i->mono, j->mono);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back(*j++);
    } else {
      Rational s = i->coeff + j->coeff;
      if (s != 0) out.push_back({i->mono, s});
      ++i;
      ++j;
    }
  }
  return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.is_constant()) return scaled(o.terms_[0].coeff);
  if (is_constant()) return o.scaled(terms_[0].coeff);
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : o.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return from_terms(std::move(out));
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return {};
  Poly out = *this;
  const Rational k = reduced(c);
  for (auto& t : out.terms_) t.coeff *= k;
  return out;
}

Poly Poly::times_monomial(const Monomial& m) const {
  Poly out = *this;
  for (auto& t : out.terms_) t.mono = t.mono * m;
  return out;
}

Poly Poly::pow(std::uint32_t e) const {
  Poly result(1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

bool Poly::divide_exact(const Poly& divisor, Poly& quotient) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (divisor.is_constant()) {
    quotient = scaled(1 / divisor.terms_[0].coeff);
    return true;
  }
  std::vector<Term> q;
  Poly rem = *this;
  const Term& lead = divisor.leading();
  while (!rem.is_zero()) {
    Monomial m;
    if (!rem.leading().mono.divide(lead.mono, m)) return false;
    Rational c = rem.leading_coeff() / lead.coeff;
    rem = rem - divisor.times_monomial(m).scaled(c);
    q.push_back({std::move(m), std::move(c)});
  }
  quotient = Poly(std::move(q));
  return true;
}

Poly Poly::exact_quotient(const Poly& divisor) const {
  Poly q;
  if (!divide_exact(divisor, q)) throw Error("inexact polynomial division: (" + str() + ") / (" + divisor.str() + ")");
  return q;
}

bool Poly::divisible_by(const Poly& divisor) const {
  Poly q;
  return divide_exact(divisor, q);
}

Poly Poly::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(1 / leading_coeff());
}

Rational Poly::evaluate(const std::map<std::string, Rational>& values) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (const auto& f : t.mono.factors()) {
      auto it = values.find(f.first);
      if (it == values.end()) throw Error("unbound parameter '" + f.first + "' in evaluation");
      mpq_class p;
      mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), f.second);
      mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), f.second);
      p.canonicalize();
      v *= p;
    }
    sum += v;
  }
  return sum;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (t.mono.is_one() || c != 1) {
      os << rational_str(c);
      wrote = true;
    }
    for (const auto& f : t.mono.factors()) {
      if (wrote) os << '*';
      os << f.first;
      if (f.second != 1) os << '^' << f.second;
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gcd: content / primitive-part recursion on a main variable.

Poly pseudo_remainder(const Poly& a, const Poly& b, const std::string& var) {
  const std::uint32_t db = b.degree_in(var);
  const Poly lb = b.coeff_in(var, db);
  Poly r = a;
  while (!r.is_zero()) {
    std::uint32_t dr = r.degree_in(var);
    if (dr < db) break;
    Poly lr = r.coeff_in(var, dr);
    r = r * lb - (b * lr).times_monomial(Monomial::variable(var, dr - db));
  }
  return r;
}

Poly content_in(const Poly& p, const std::string& var) {
  Poly g;
  for (const auto& c : p.coeffs_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) return Poly(1);
  }
  return g;
}

namespace {

Poly primitive_part(const Poly& p, const std::string& var) {
  if (p.is_zero()) return p;
  return p.exact_quotient(content_in(p, var));
}

// Image of p in Q[var] with every other variable replaced by its value in `at`.
Poly univariate_image(const Poly& p, const std::string& var, const std::map<std::string, Rational>& at) {
  std::vector<Poly::Term> terms;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    std::uint32_t e = 0;
    for (const auto& [name, exp] : t.mono.factors()) {
      if (name == var) {
        e = exp;
        continue;
      }
      mpq_class v;
      mpz_pow_ui(v.get_num_mpz_t(), at.at(name).get_num_mpz_t(), exp);
      mpz_pow_ui(v.get_den_mpz_t(), at.at(name).get_den_mpz_t(), exp);
      c *= v;
    }
    if (c != 0) terms.push_back({e ? Monomial::variable(var, e) : Monomial(), c});
  }
  return Poly::from_terms(std::move(terms));
}

// True when gcd(a, b) is certainly 1. For each variable x, a point for the
// others with lc_x(a) nonzero keeps the x-degree of any common factor, so a
// constant gcd of the images rules out x from the gcd. False means unknown.
bool coprime_by_images(const Poly& a, const Poly& b, const std::set<std::string>& vars) {
  for (const auto& x : vars) {
    if (!a.contains(x) || !b.contains(x)) continue;
    const Poly lc = a.coeff_in(x, a.degree_in(x));
    // A positive-degree image gcd may just be an unlucky point, so retry.
    static const long kPoints[] = {37, 59, 83, 113, 149, 173, 211, 241, 269, 307};
    bool decided = false;
    for (std::size_t seed = 0; seed < 4 && !decided; ++seed) {
      std::map<std::string, Rational> at;
      std::size_t k = seed;
      for (const auto& v : vars)
        if (v != x) at[v] = Rational(kPoints[k++ % std::size(kPoints)]);
      if (univariate_image(lc, x, at).is_zero()) continue;
      decided = gcd(univariate_image(a, x, at), univariate_image(b, x, at)).degree_in(x) == 0;
    }
    if (!decided) return false;
  }
  return true;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a == b) return a.monic();

  // Fast path: one side divides the other.
  if (a.terms().size() <= b.terms().size()) {
    if (b.divisible_by(a)) return a.monic();
  } else if (a.divisible_by(b)) {
    return b.monic();
  }

  std::set<std::string> vars = a.variables();
  for (const auto& v : b.variables()) vars.insert(v);
  if (vars.size() > 1 && coprime_by_images(a, b, vars)) return Poly(1);
  // Recurse on the least significant variable.
  const std::string& x = *vars.rbegin();

  if (!a.contains(x)) return gcd(a, content_in(b, x));
  if (!b.contains(x)) return gcd(content_in(a, x), b);

  Poly ca = content_in(a, x);
  Poly cb = content_in(b, x);
  Poly c = gcd(ca, cb);
  Poly pa = a.exact_quotient(ca).monic();
  Poly pb = b.exact_quotient(cb).monic();
  if (pa.degree_in(x) < pb.degree_in(x)) std::swap(pa, pb);

  while (!pb.is_zero()) {
    Poly r = pseudo_remainder(pa, pb, x);
    pa = std::move(pb);
    if (r.is_zero()) {
      pb = Poly();
    } else if (r.degree_in(x) == 0) {
      pa = Poly(1);
      pb = Poly();
    } else {
      // Rational content is not removed by primitive_part; without the monic
      // step the coefficients grow exponentially along the sequence.
      pb = primitive_part(r, x).monic();
    }
  }
  return (c * primitive_part(pa, x)).monic();
}

}  // namespace homkernel::cas
