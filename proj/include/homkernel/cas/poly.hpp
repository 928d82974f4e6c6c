#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace homkernel::cas {

using Rational = mpq_class;

/// A power product of named parameters.
///
/// Factors are kept sorted by parameter name with positive exponents, so two
/// equal monomials always have identical storage. Parameters are ordered by
/// name; the alphabetically first name is the most significant variable in the
/// lexicographic tie-break of the graded order.
class Monomial {
 public:
  using Factor = std::pair<std::string, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial variable(const std::string& name, std::uint32_t exp = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t exponent(const std::string& name) const;

  Monomial operator*(const Monomial& other) const;
  /// Quotient when `other` divides this monomial; false otherwise.
  bool divide(const Monomial& other, Monomial& quotient) const;
  /// The monomial with `name` removed.
  Monomial without(const std::string& name) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic comparison; positive when `a` is the larger monomial.
int grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are stored in strictly decreasing graded-lex order with no zero
/// coefficients, which makes structural equality the same as mathematical
/// equality.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
    bool operator==(const Term&) const = default;
  };

  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT
  static Poly variable(const std::string& name);
  static Poly monomial(const Monomial& m, const Rational& c);
  /// Builds from unsorted terms; duplicates are merged and zeros dropped.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Value of a constant polynomial (zero for the zero polynomial).
  Rational constant_value() const;
  Rational constant_term() const;
  const Term& leading() const { return terms_.front(); }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  std::uint32_t total_degree() const;

  std::set<std::string> variables() const;
  bool contains(const std::string& name) const;
  std::uint32_t degree_in(const std::string& name) const;
  /// Coefficient of name^k, as a polynomial free of `name`.
  Poly coeff_in(const std::string& name, std::uint32_t k) const;
  /// All coefficients as a polynomial in `name`, indexed by power.
  std::vector<Poly> coeffs_in(const std::string& name) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c) const;
  Poly times_monomial(const Monomial& m) const;
  Poly pow(std::uint32_t e) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Exact division; returns false (leaving `quotient` unspecified) when
  /// `divisor` does not divide this polynomial.
  bool divide_exact(const Poly& divisor, Poly& quotient) const;
  Poly exact_quotient(const Poly& divisor) const;
  bool divisible_by(const Poly& divisor) const;

  /// Scales so the leading coefficient is 1 (zero stays zero).
  Poly monic() const;
  /// Evaluates at rational values; every variable must be bound.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  bool operator==(const Poly&) const = default;

  /// Renders in the expression grammar, e.g. `a^2 - 4*a*d`.
  std::string str() const;

 private:
  explicit Poly(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}
  std::vector<Term> terms_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Pseudo-remainder of `a` by `b` viewed as polynomials in `var`.
Poly pseudo_remainder(const Poly& a, const Poly& b, const std::string& var);

/// Content of `p` as a polynomial in `var` (monic gcd of its coefficients).
Poly content_in(const Poly& p, const std::string& var);

std::string rational_str(const Rational& q);

}  // namespace homkernel::cas
