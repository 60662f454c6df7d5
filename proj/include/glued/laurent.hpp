#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace glued {

// Rational exponent num/den with den > 0, kept in lowest terms.
struct Exponent {
  int num = 0;
  int den = 1;

  double value() const { return static_cast<double>(num) / den; }
  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend bool operator<(const Exponent& a, const Exponent& b) {
    return static_cast<long long>(a.num) * b.den < static_cast<long long>(b.num) * a.den;
  }
};

/// Laurent polynomial with integer coefficients in one formal variable whose
/// exponents are multiples of 1/unit(). Knots and links share the type: the
/// Jones polynomial of a two-component link carries unit 2, a knot's unit 1.
///
/// The representation is canonical (no zero coefficients, smallest unit), so
/// operator== is exact polynomial equality.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  explicit LaurentPoly(Coeff constant);

  /// c * q^(num/den)
  static LaurentPoly monomial(Coeff c, int num, int den = 1);

  int unit() const { return unit_; }
  const std::map<int, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Coeff coeff(Exponent e) const;
  Exponent max_exponent() const;  // {0,1} for the zero polynomial
  Exponent min_exponent() const;
  Exponent span() const;

  /// Substitutes q -> q^(num/den); den must be positive, num may be negative.
  LaurentPoly substitute_power(int num, int den = 1) const;
  /// Multiplies by q^(num/den).
  LaurentPoly shifted(int num, int den = 1) const;
  LaurentPoly pow(unsigned n) const;

  /// Value at q = -1; requires integer exponents.
  Coeff at_minus_one() const;
  Coeff at_one() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.unit_ == b.unit_ && a.terms_ == b.terms_;
  }

  /// `coeff*q^(num/den)` terms sorted by exponent and joined by `+`;
  /// the zero polynomial prints as `0`.
  std::string to_string(std::string_view var = "q") const;
  static LaurentPoly parse(std::string_view text);

 private:
  void rescale(int new_unit);
  void normalize();

  std::map<int, Coeff> terms_;
  int unit_ = 1;
};

}  // namespace glued
