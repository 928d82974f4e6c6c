#include "homkernel/cas/scalar.hpp"

#include "homkernel/errors.hpp"

namespace homkernel::cas {

Scalar::Scalar(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DivisionByZero("zero denominator");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den.is_constant()) {
    num_ = num.scaled(1 / den.constant_value());
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num, den);
  Poly n = g.is_constant() ? num : num.exact_quotient(g);
  Poly d = g.is_constant() ? den : den.exact_quotient(g);
  Rational lc = d.leading_coeff();
  num_ = n.scaled(1 / lc);
  den_ = d.scaled(1 / lc);
}

Rational Scalar::constant_value() const {
  if (!is_constant()) throw Error("scalar is not constant: " + str());
  return num_.constant_value() / den_.constant_value();
}

std::set<std::string> Scalar::variables() const {
  auto v = num_.variables();
  for (const auto& s : den_.variables()) v.insert(s);
  return v;
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, Reduced{}); }

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    if (den_.is_constant()) return Scalar(num_ + o.num_, den_, Reduced{});
    return Scalar(num_ + o.num_, den_);
  }
  if (den_.is_constant()) return Scalar(num_ * o.den_ + o.num_, o.den_, Reduced{});
  if (o.den_.is_constant()) return Scalar(num_ + o.num_ * den_, den_, Reduced{});
  // a/b + c/d = (a*(d/g) + c*(b/g)) / (b*d/g), g = gcd(b, d)
  Poly g = gcd(den_, o.den_);
  Poly bd = den_.exact_quotient(g);
  Poly dd = o.den_.exact_quotient(g);
  return Scalar(num_ * dd + o.num_ * bd, den_ * dd);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  if (den_.is_constant() && o.den_.is_constant()) return Scalar(num_ * o.num_, Poly(1), Reduced{});
  // Cross-cancel before multiplying so the result is already reduced.
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n = num_.exact_quotient(g1) * o.num_.exact_quotient(g2);
  Poly d = den_.exact_quotient(g2) * o.den_.exact_quotient(g1);
  Rational lc = d.leading_coeff();
  return Scalar(n.scaled(1 / lc), d.scaled(1 / lc), Reduced{});
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("division by the zero scalar");
  Rational lc = num_.leading_coeff();
  return Scalar(den_.scaled(1 / lc), num_.scaled(1 / lc), Reduced{});
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(std::uint32_t e) const { return Scalar(num_.pow(e), den_.pow(e), Reduced{}); }

namespace {

bool needs_parens_as_numerator(const Poly& p) { return p.terms().size() > 1; }

bool needs_parens_as_denominator(const Poly& p) {
  if (p.terms().size() != 1) return true;
  const auto& t = p.terms()[0];
  if (t.mono.is_one()) return t.coeff.get_den() != 1;
  return t.coeff != 1 || t.mono.factors().size() != 1;
}

}  // namespace

std::string Scalar::str() const {
  if (den_ == Poly(1)) return num_.str();
  std::string n = num_.str();
  std::string d = den_.str();
  if (needs_parens_as_numerator(num_)) n = "(" + n + ")";
  if (needs_parens_as_denominator(den_)) d = "(" + d + ")";
  return n + "/" + d;
}

Scalar scalar_arith(ArithOp op, const Scalar& x, const Scalar& y) {
  switch (op) {
    case ArithOp::add:
      return x + y;
    case ArithOp::sub:
      return x - y;
    case ArithOp::mul:
      return x * y;
    case ArithOp::div:
      return x / y;
  }
  throw Error("unknown arithmetic operation");
}

Scalar substitute(const Poly& p, const Bindings& bindings) {
  bool touched = false;
  for (const auto& v : p.variables())
    if (bindings.count(v)) touched = true;
  if (!touched) return Scalar(p);

  // Group terms by their bound part so shared denominators are combined once.
  Scalar out;
  std::map<std::string, std::vector<Scalar>> powers;
  for (const auto& t : p.terms()) {
    Scalar term(t.coeff);
    std::vector<Monomial::Factor> free;
    for (const auto& [name, exp] : t.mono.factors()) {
      auto it = bindings.find(name);
      if (it == bindings.end()) {
        free.emplace_back(name, exp);
        continue;
      }
      auto& cache = powers[name];
      if (cache.empty()) cache.push_back(Scalar(1));
      while (cache.size() <= exp) cache.push_back(cache.back() * it->second);
      term *= cache[exp];
    }
    term *= Scalar(Poly::monomial(Monomial(std::move(free)), 1));
    out += term;
  }
  return out;
}

Scalar substitute(const Scalar& x, const Bindings& bindings) {
  Scalar n = substitute(x.num(), bindings);
  Scalar d = substitute(x.den(), bindings);
  if (d.is_zero()) {
    std::string desc = "{";
    bool first = true;
    for (const auto& [k, v] : bindings) {
      if (!x.contains(k)) continue;
      desc += (first ? "" : ", ") + k + " -> " + v.str();
      first = false;
    }
    desc += "} in denominator " + x.den().str();
    throw DenominatorVanishes(desc);
  }
  return n / d;
}

Rational evaluate(const Scalar& x, const std::map<std::string, Rational>& values) {
  Rational d = x.den().evaluate(values);
  if (d == 0) throw DenominatorVanishes("evaluation point in denominator " + x.den().str());
  return x.num().evaluate(values) / d;
}

}  // namespace homkernel::cas
