#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "ncpath/rational.hpp"

namespace ncpath {

// Power series over Rational known exactly up to x^order (inclusive).
// Arithmetic truncates to the smaller operand order; there is no silent
// order promotion anywhere.
class TruncatedSeries {
public:
  explicit TruncatedSeries(std::size_t order) : coef_(order + 1) {}
  explicit TruncatedSeries(std::vector<Rational> coef);
  TruncatedSeries(std::initializer_list<Rational> coef)
      : TruncatedSeries(std::vector<Rational>(coef)) {}

  static TruncatedSeries constant(const Rational& c, std::size_t order);
  static TruncatedSeries one(std::size_t order) { return constant(1, order); }

  // Polynomial: the listed low-order coefficients, zero above, given order.
  static TruncatedSeries poly(std::vector<Rational> low, std::size_t order);

  std::size_t order() const { return coef_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coef_[k]; }
  void set(std::size_t k, Rational v) { coef_[k] = std::move(v); }
  const std::vector<Rational>& coefficients() const { return coef_; }

  TruncatedSeries truncated(std::size_t new_order) const;

  // Multiplication by x: coefficients shift up, order grows by one, no
  // information is invented.
  TruncatedSeries mul_by_x() const;

  // Division by x: requires a zero constant term; order shrinks by one.
  TruncatedSeries div_by_x() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coef_ == b.coef_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !(a == b);
  }

private:
  std::vector<Rational> coef_;  // exactly order+1 entries
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);

// q with q*b = a up to the common truncation order; b must have a nonzero
// constant term.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

// s with s*s = a up to the truncation order and s[0] = 1; a must have
// constant term exactly 1.
TruncatedSeries sqrt_series(const TruncatedSeries& a);

// Coefficients agree at indices 0..k (k must be within both orders).
bool agree_to(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t k);

// 3/2 - (1/2) sqrt((1-5x)/(1-x)); coefficient n counts the 2-distant
// noncrossing partitions of an n-element set.
TruncatedSeries nc2_series(std::size_t order);

// sqrt((1-x)(1-5x))
TruncatedSeries radical_series(std::size_t order);

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

}  // namespace ncpath
