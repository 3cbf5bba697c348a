#include "ncpath/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ncpath {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coef) : coef_(std::move(coef)) {
  if (coef_.empty())
    throw std::invalid_argument("TruncatedSeries: needs at least the constant term");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
  TruncatedSeries s(order);
  s.coef_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::poly(std::vector<Rational> low, std::size_t order) {
  TruncatedSeries s(order);
  std::size_t n = std::min(low.size(), order + 1);
  std::copy_n(low.begin(), n, s.coef_.begin());
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
  if (new_order > order())
    throw std::invalid_argument("TruncatedSeries::truncated: cannot raise order");
  TruncatedSeries s(new_order);
  std::copy_n(coef_.begin(), new_order + 1, s.coef_.begin());
  return s;
}

TruncatedSeries TruncatedSeries::mul_by_x() const {
  TruncatedSeries s(order() + 1);
  std::copy(coef_.begin(), coef_.end(), s.coef_.begin() + 1);
  return s;
}

TruncatedSeries TruncatedSeries::div_by_x() const {
  if (!coef_[0].is_zero())
    throw std::domain_error("TruncatedSeries::div_by_x: nonzero constant term");
  if (order() == 0)
    throw std::domain_error("TruncatedSeries::div_by_x: order would go negative");
  TruncatedSeries s(order() - 1);
  std::copy(coef_.begin() + 1, coef_.end(), s.coef_.begin());
  return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries s(n);
  for (std::size_t k = 0; k <= n; ++k) s.set(k, a[k] + b[k]);
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries s(n);
  for (std::size_t k = 0; k <= n; ++k) s.set(k, a[k] - b[k]);
  return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries s(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc;
    for (std::size_t j = 0; j <= k; ++j) acc += a[j] * b[k - j];
    s.set(k, std::move(acc));
  }
  return s;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
  TruncatedSeries s(a.order());
  for (std::size_t k = 0; k <= a.order(); ++k) s.set(k, c * a[k]);
  return s;
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b[0].is_zero())
    throw std::domain_error("TruncatedSeries division: zero constant term in divisor");
  std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries q(n);
  Rational inv_b0 = b[0].reciprocal();
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc = a[k];
    for (std::size_t j = 0; j < k; ++j) acc -= q[j] * b[k - j];
    q.set(k, acc * inv_b0);
  }
  return q;
}

TruncatedSeries sqrt_series(const TruncatedSeries& a) {
  if (a[0] != Rational(1))
    throw std::domain_error("sqrt_series: constant term must be 1");
  std::size_t n = a.order();
  TruncatedSeries s(n);
  s.set(0, 1);
  Rational half(1, 2);
  for (std::size_t k = 1; k <= n; ++k) {
    // a_k = 2 s_0 s_k + sum_{j=1}^{k-1} s_j s_{k-j}, with s_0 = 1
    Rational acc = a[k];
    for (std::size_t j = 1; j < k; ++j) acc -= s[j] * s[k - j];
    s.set(k, acc * half);
  }
  return s;
}

bool agree_to(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t k) {
  if (k > a.order() || k > b.order())
    throw std::invalid_argument("agree_to: index beyond truncation order");
  for (std::size_t j = 0; j <= k; ++j)
    if (a[j] != b[j]) return false;
  return true;
}

TruncatedSeries nc2_series(std::size_t order) {
  TruncatedSeries num = TruncatedSeries::poly({1, -5}, order);
  TruncatedSeries den = TruncatedSeries::poly({1, -1}, order);
  TruncatedSeries root = sqrt_series(div(num, den));
  return TruncatedSeries::constant(Rational(3, 2), order) - Rational(1, 2) * root;
}

TruncatedSeries radical_series(std::size_t order) {
  return sqrt_series(TruncatedSeries::poly({1, -6, 5}, order));
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
  os << "[";
  for (std::size_t k = 0; k <= s.order(); ++k) {
    if (k) os << ", ";
    os << s[k];
  }
  return os << "]";
}

}  // namespace ncpath
