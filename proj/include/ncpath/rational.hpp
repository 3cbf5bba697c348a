#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace ncpath {

// Exact arbitrary-precision fraction. Always stored canonical:
// denominator > 0 and gcd(|num|, den) = 1, so operator== is structural.
class Rational {
public:
  Rational() : q_() {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design, weights read like 3 - inv
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
  explicit Rational(mpz_class n) { q_.get_num() = std::move(n); }

  Rational(mpz_class num, mpz_class den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    q_.get_num() = std::move(num);
    q_.get_den() = std::move(den);
    q_.canonicalize();
  }

  // Accepts "p", "-p" or "p/q" with arbitrary-precision decimal parts.
  static Rational from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(mpz_class(s));
    return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  }

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  std::string str() const { return q_.get_str(); }  // "p" or "p/q"

  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(mpq_class(1 / q_));
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.q_;
  }

private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

}  // namespace ncpath
