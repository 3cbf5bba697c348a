#include "ncpath/weights.hpp"

#include <stdexcept>
#include <utility>

#include "ncpath/fibonacci.hpp"

namespace ncpath {

Rational weight_b(std::size_t n) {
  if (n == 0) return 1;
  long ln = static_cast<long>(n);
  return Rational(3) - Rational(mpz_class(1), fib(2 * ln - 1) * fib(2 * ln - 3));
}

Rational weight_lambda(std::size_t n) {
  if (n == 0) return 1;
  long ln = static_cast<long>(n);
  mpz_class f = fib(2 * ln - 1);
  return Rational(1) + Rational(mpz_class(1), f * f);
}

Rational weight_d(std::size_t m) {
  if (m == 0) return 1;
  long lm = static_cast<long>(m);
  if (m % 2 == 1) return Rational(fib(lm), fib(lm - 2));  // d_{2n-1}
  return Rational(fib(lm - 3), fib(lm - 1));              // d_{2n} = 1/d_{2n-1}
}

MotzkinWeights fib2_weights() {
  return {[](std::size_t n) { return weight_b(n); },
          [](std::size_t n) { return weight_lambda(n); }};
}

DyckWeights d_weights() {
  return {[](std::size_t m) { return weight_d(m); }};
}

MotzkinWeights alpha_beta_weights() {
  return {[](std::size_t n) { return Rational(n == 0 ? 2 : 3); }, constant_seq(1)};
}

MotzkinWeights nc0_weights() { return {constant_seq(1), constant_seq(1)}; }

MotzkinWeights nc1_weights() {
  return {[](std::size_t n) { return Rational(n == 0 ? 1 : 2); }, constant_seq(1)};
}

MotzkinWeights nc3_weights() {
  return {[](std::size_t n) { return Rational(n >= 2 ? 3 : static_cast<long>(n) + 1); },
          [](std::size_t n) { return Rational(n == 0 ? 1 : 2); }};
}

DyckWeights ones_dyck() { return {constant_seq(1)}; }

RationalSeq constant_seq(Rational value) {
  return [v = std::move(value)](std::size_t) { return v; };
}

RationalSeq list_seq(std::vector<Rational> head, bool repeat_last) {
  if (head.empty()) throw std::invalid_argument("list_seq: empty sequence");
  return [h = std::move(head), repeat_last](std::size_t i) {
    if (i < h.size()) return h[i];
    if (repeat_last) return h.back();
    throw std::out_of_range("weight sequence: index past explicit entries and no tail marker");
  };
}

}  // namespace ncpath
