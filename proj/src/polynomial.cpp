#include "gradex/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace gradex {

Poly::Poly(Field f, std::vector<Rational> coeffs) : f_(f), c_(std::move(coeffs)) {
  for (auto& c : c_) c = f_.reduce(c);
  trim();
}

Poly Poly::monomial(Field f, const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(f, v);
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = f_.add(coefficient(k), o.coefficient(k));
  return Poly(f_, v);
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = f_.sub(coefficient(k), o.coefficient(k));
  return Poly(f_, v);
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(f_);
  std::vector<Rational> v(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = f_.add(v[i + j], f_.mul(c_[i], o.c_[j]));
  return Poly(f_, v);
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational inv = f_.inv(leading());
  std::vector<Rational> v = c_;
  for (auto& c : v) c = f_.mul(c, inv);
  return Poly(f_, v);
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    Rational c = c_[k];
    bool negative = f_.is_rational() && c < 0;
    if (negative) c = -c;
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << '-';
    if (k == 0 || c != 1) os << c.get_str();
    if (k > 0) os << 'X';
    if (k > 1) os << '^' << k;
    first = false;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = a.field();
  std::vector<Rational> r = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {Poly(f), a};
  std::vector<Rational> q(a.degree() - db + 1);
  Rational inv = f.inv(b.leading());
  for (long k = a.degree(); k >= db; --k) {
    Rational t = f.mul(r[k], inv);
    if (t == 0) continue;
    q[k - db] = t;
    for (long i = 0; i <= db; ++i) r[k - db + i] = f.sub(r[k - db + i], f.mul(t, b.coeffs()[i]));
  }
  return {Poly(f, q), Poly(f, r)};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

}  // namespace gradex
