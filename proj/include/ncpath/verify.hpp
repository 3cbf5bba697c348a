#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ncpath {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;  // counterexample, both sides rendered, when !ok
};

// b_n = d_{2n-1} + d_{2n}, lambda_n = d_{2n} d_{2n+1}, 1/d_{2n-1} + d_{2n+1} = 3
// for n up to max_n, plus the Fibonacci Catalan identity for 0 <= i <= m <= max_fib_m
// and the m - i = -1 edge.
std::vector<CheckResult> verify_weight_identities(std::size_t max_n, long max_fib_m);

// S-fraction expansion equals the J-fraction expansion of its contraction for
// `reps` seeded random sequences at the given order, and per-path weight
// transport under the step pairing holds exhaustively for Dyck semilength
// up to max_fiber_n with the d weights.
std::vector<CheckResult> verify_contraction(std::size_t order, int reps,
                                            std::size_t max_fiber_n, unsigned seed);

// The S-fraction with the d coefficients matches the closed-form series:
// extraction of `depth` coefficients from the series recovers d, and the
// expansions agree through `order`.
std::vector<CheckResult> verify_sfraction_formula(std::size_t depth, std::size_t order);

// R_m (1 - x R_{m+1}) = d_m for -1 <= m <= max_m, and constant terms match.
std::vector<CheckResult> verify_ladder(long max_m, std::size_t order);

// For 1 <= n <= max_n, five routes to the same integer:
// partition filter, Schroder filter, Motzkin DP, S-fraction, J-fraction.
std::vector<CheckResult> verify_chain(std::size_t max_n);

// Partition counts against Motzkin sums and the Catalan formula for
// k = 0, 1, 3, and against the closed-form series for k = 2, n <= max_n.
std::vector<CheckResult> verify_nc_crosschecks(std::size_t max_n);

// Every coefficient of the (b, lambda) J-fraction expansion is an integer.
std::vector<CheckResult> verify_integrality(std::size_t order);

// Round trips of all three step rewritings on their exhaustive domains.
std::vector<CheckResult> verify_bijections(std::size_t dyck_n, std::size_t choice_n,
                                           std::size_t peak_n);

}  // namespace ncpath
