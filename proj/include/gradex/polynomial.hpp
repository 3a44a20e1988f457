#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gradex/field.hpp"

namespace gradex {

/// Univariate polynomial over a Field; coeffs[k] is the coefficient of X^k,
/// with no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Field f) : f_(f) {}
  Poly(Field f, std::vector<Rational> coeffs);
  static Poly constant(Field f, const Rational& c) { return Poly(f, {c}); }
  /// c X^k
  static Poly monomial(Field f, const Rational& c, std::size_t k);

  const Field& field() const { return f_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  bool is_unit() const { return c_.size() == 1; }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly monic() const;
  bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }

  std::string to_string() const;

 private:
  void trim();
  Field f_;
  std::vector<Rational> c_;
};

/// Quotient and remainder of a by nonzero b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd (zero when both are zero).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace gradex
