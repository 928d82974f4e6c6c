#pragma once

#include <map>
#include <string>

#include "homkernel/cas/poly.hpp"

namespace homkernel::cas {

/// An element of the field of rational functions Q(params).
///
/// Always stored reduced: gcd(num, den) = 1 and den monic, so equality of
/// values is equality of representations.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  Scalar(long c) : Scalar(Rational(c)) {}  // NOLINT
  Scalar(int c) : Scalar(Rational(c)) {}  // NOLINT
  Scalar(const Poly& p) : num_(p), den_(1) {}  // NOLINT
  /// Normalizes num/den; throws DivisionByZero when den is zero.
  Scalar(const Poly& num, const Poly& den);
  static Scalar param(const std::string& name) { return Scalar(Poly::variable(name)); }
  static Scalar ratio(long p, long q) { return Scalar(Rational(p, q)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Rational value of a constant Scalar.
  Rational constant_value() const;
  std::set<std::string> variables() const;
  bool contains(const std::string& name) const { return num_.contains(name) || den_.contains(name); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Throws DivisionByZero when `o` is identically zero.
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar pow(std::uint32_t e) const;
  Scalar inverse() const;

  bool operator==(const Scalar&) const = default;

  /// Grammar-conformant rendering, reparseable by parse_expr.
  std::string str() const;

 private:
  struct Reduced {};
  Scalar(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

enum class ArithOp { add, sub, mul, div };

/// Binary field operation; mirrors the operators for table-driven callers.
Scalar scalar_arith(ArithOp op, const Scalar& x, const Scalar& y);

using Bindings = std::map<std::string, Scalar>;

/// Simultaneous substitution of parameters; unbound parameters pass through.
/// Throws DenominatorVanishes when the substituted denominator is zero.
Scalar substitute(const Scalar& x, const Bindings& bindings);
Scalar substitute(const Poly& p, const Bindings& bindings);

/// Evaluates to a rational; every parameter must be bound.
Rational evaluate(const Scalar& x, const std::map<std::string, Rational>& values);

}  // namespace homkernel::cas
