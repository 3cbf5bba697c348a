#include "ncpath/contfrac.hpp"

#include <utility>

namespace ncpath {

namespace {

// 1 - x * t, all at t's order.
TruncatedSeries one_minus_x_times(const TruncatedSeries& t) {
  std::size_t n = t.order();
  return TruncatedSeries::one(n) - t.mul_by_x().truncated(n);
}

}  // namespace

TruncatedSeries expand(const SFraction& f, std::size_t order) {
  return expand(f, order, order + 1);
}

TruncatedSeries expand(const SFraction& f, std::size_t order, std::size_t depth) {
  TruncatedSeries tail = TruncatedSeries::one(order);
  for (std::size_t level = depth; level-- > 0;) {
    // tail <- 1/(1 - c_level x tail); the denominator keeps constant term 1
    TruncatedSeries den =
        TruncatedSeries::one(order) - (f.c(level) * tail.mul_by_x().truncated(order));
    tail = div(TruncatedSeries::one(order), den);
  }
  return tail;
}

TruncatedSeries expand(const JFraction& f, std::size_t order) {
  // Level k first contributes at x^{2k+1}, so depth order/2 + 1 is exact.
  return expand(f, order, order / 2 + 1);
}

TruncatedSeries expand(const JFraction& f, std::size_t order, std::size_t depth) {
  TruncatedSeries tail = TruncatedSeries::one(order);
  for (std::size_t level = depth; level-- > 0;) {
    TruncatedSeries x2_tail = tail.mul_by_x().mul_by_x().truncated(order);
    TruncatedSeries den = TruncatedSeries::one(order) -
                          TruncatedSeries::poly({0, f.a(level)}, order) -
                          (f.beta(level) * x2_tail);
    tail = div(TruncatedSeries::one(order), den);
  }
  return tail;
}

JFraction contract(const SFraction& f) {
  RationalSeq c = f.c;
  return {
      [c](std::size_t n) {
        Rational prev = n == 0 ? Rational(0) : c(2 * n - 1);  // c_{-1} = 0
        return prev + c(2 * n);
      },
      [c](std::size_t n) { return c(2 * n) * c(2 * n + 1); },
  };
}

std::vector<Rational> sfraction_coefficients(const TruncatedSeries& s, std::size_t m) {
  if (s[0] != Rational(1))
    throw std::domain_error("sfraction_coefficients: constant term must be 1");
  if (m >= s.order())
    throw std::domain_error("sfraction_coefficients: need m < truncation order");
  std::vector<Rational> out;
  out.reserve(m);
  TruncatedSeries cur = s;
  for (std::size_t level = 0; level < m; ++level) {
    Rational ck = cur[1];
    if (ck.is_zero()) {
      // The fraction terminates here; that is only consistent if the
      // remaining series is exactly 1.
      for (std::size_t j = 1; j <= cur.order(); ++j)
        if (!cur[j].is_zero())
          throw ExtractionError(level,
                                "sfraction_coefficients: breakdown at depth " +
                                    std::to_string(level));
      out.resize(m, Rational(0));
      return out;
    }
    out.push_back(ck);
    if (level + 1 == m) break;
    // cur = 1/(1 - ck x next)  =>  next = (1 - 1/cur)/(ck x)
    TruncatedSeries recip = div(TruncatedSeries::one(cur.order()), cur);
    TruncatedSeries h = TruncatedSeries::one(cur.order()) - recip;
    cur = ck.reciprocal() * h.div_by_x();
  }
  return out;
}

TruncatedSeries r_series(long m, std::size_t order) {
  if (m < -1) throw std::domain_error("r_series: m must be >= -1");
  if (m == -1) return nc2_series(order);
  if (m % 2 == 1) {
    // d_m + (1 - 3x - sqrt((1-x)(1-5x)))/(2x); the numerator has zero
    // constant term, so the shift down is exact at order+1.
    TruncatedSeries num =
        TruncatedSeries::poly({1, -3}, order + 1) - radical_series(order + 1);
    TruncatedSeries tail = Rational(1, 2) * num.div_by_x();
    return TruncatedSeries::constant(weight_d(static_cast<std::size_t>(m)), order) + tail;
  }
  TruncatedSeries next = r_series(m + 1, order);
  return div(TruncatedSeries::constant(weight_d(static_cast<std::size_t>(m)), order),
             one_minus_x_times(next));
}

LadderResult check_r_ladder(long max_m, std::size_t order) {
  for (long m = -1; m <= max_m; ++m) {
    Rational dm = m == -1 ? Rational(1) : weight_d(static_cast<std::size_t>(m));
    TruncatedSeries lhs = r_series(m, order) * one_minus_x_times(r_series(m + 1, order));
    if (lhs != TruncatedSeries::constant(dm, order)) return {false, m};
  }
  return {true, 0};
}

}  // namespace ncpath
