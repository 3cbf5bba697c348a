#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ncpath/rational.hpp"

namespace ncpath {

// A total weight sequence: defined for every index >= 0.
using RationalSeq = std::function<Rational(std::size_t)>;

// Weights for Motzkin paths: a horizontal step ending at height i carries
// level(i), a down step ending at height i carries down(i), up steps carry 1.
struct MotzkinWeights {
  RationalSeq level;
  RationalSeq down;
};

// Weights for Dyck paths: a down step ending at height i carries down(i).
// Index -1 reads as 0 (needed by the contraction of paired steps).
struct DyckWeights {
  RationalSeq down;
  Rational at(long i) const {
    return i < 0 ? Rational(0) : down(static_cast<std::size_t>(i));
  }
};

// The Fibonacci-fraction sequences:
//   b_0 = 1,      b_n = 3 - 1/(F_{2n-1} F_{2n-3})
//   l_0 = 1,      l_n = 1 + 1/F_{2n-1}^2
//   d_0 = 1,      d_{2n-1} = F_{2n-1}/F_{2n-3},  d_{2n} = 1/d_{2n-1}
Rational weight_b(std::size_t n);
Rational weight_lambda(std::size_t n);
Rational weight_d(std::size_t m);

MotzkinWeights fib2_weights();        // (b, lambda)
DyckWeights d_weights();              // d
MotzkinWeights alpha_beta_weights();  // ((2,3,3,...), (1,1,...))
MotzkinWeights nc0_weights();         // ((1,1,...), (1,1,...))
MotzkinWeights nc1_weights();         // ((1,2,2,...), (1,1,...))
MotzkinWeights nc3_weights();         // ((1,2,3,3,...), (1,2,2,...))
DyckWeights ones_dyck();

RationalSeq constant_seq(Rational value);

// Sequence backed by an explicit list. With repeat_last the final entry
// extends forever; without it, reading past the list throws out_of_range.
RationalSeq list_seq(std::vector<Rational> head, bool repeat_last);

}  // namespace ncpath
