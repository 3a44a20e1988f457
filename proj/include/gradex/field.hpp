#pragma once

#include <string>

#include "gradex/abgroup.hpp"

namespace gradex {

/// Either Q or F_p. Scalars are always carried as mpq_class; over F_p they
/// are kept as integers in [0, p).
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(unsigned long p);

  bool is_rational() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  unsigned long characteristic() const { return p_; }

  Rational reduce(const Rational& a) const;
  Rational from_int(long v) const { return reduce(Rational(v)); }
  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  /// Throws std::domain_error on zero.
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }
  Rational pow(Rational a, unsigned long e) const;

  std::string name() const;
  bool operator==(const Field&) const = default;

 private:
  explicit Field(unsigned long p) : p_(p) {}
  unsigned long p_ = 0;
};

}  // namespace gradex
