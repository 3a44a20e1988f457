#include "gradex/field.hpp"

#include <stdexcept>

#include "gradex/errors.hpp"

namespace gradex {

Field Field::prime(unsigned long p) {
  Integer z(p);
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    throw ValidationError("field-prime", std::to_string(p) + " is not prime");
  return Field(p);
}

Rational Field::reduce(const Rational& a) const {
  if (p_ == 0) return a;
  Integer p(p_), num = a.get_num(), den = a.get_den();
  mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  if (den != 1) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw ValidationError("field-scalar", "denominator divisible by " + std::to_string(p_));
    num *= inv;
    mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  }
  return Rational(num);
}

namespace {

Rational mod_int(Integer v, unsigned long p) {
  mpz_fdiv_r_ui(v.get_mpz_t(), v.get_mpz_t(), p);
  return Rational(v);
}

}  // namespace

Rational Field::add(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a + b;
  return mod_int(a.get_num() + b.get_num(), p_);
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a - b;
  return mod_int(a.get_num() - b.get_num(), p_);
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a * b;
  return mod_int(a.get_num() * b.get_num(), p_);
}

Rational Field::neg(const Rational& a) const {
  if (p_ == 0) return -a;
  return mod_int(-a.get_num(), p_);
}

Rational Field::inv(const Rational& a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (p_ == 0) return 1 / a;
  Integer r, p(p_);
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t());
  return Rational(r);
}

Rational Field::pow(Rational a, unsigned long e) const {
  Rational r = from_int(1);
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

}  // namespace gradex
