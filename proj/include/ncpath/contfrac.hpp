#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ncpath/series.hpp"
#include "ncpath/weights.hpp"

namespace ncpath {

// S-fraction 1/(1 - c0 x/(1 - c1 x/(1 - ...))). Coefficient n of its
// expansion is the c-weighted Dyck path sum over length 2n.
struct SFraction {
  RationalSeq c;
};

// J-fraction 1/(1 - a0 x - b0 x^2/(1 - a1 x - b1 x^2/(1 - ...))).
// Coefficient n of its expansion is the (a, beta)-weighted Motzkin sum.
struct JFraction {
  RationalSeq a;
  RationalSeq beta;
};

// Truncated expansions, folded bottom-up from the given depth. The default
// depth order+1 is already one level deeper than the coefficients can see;
// the depth parameter exists so tests can confirm that cutoff.
TruncatedSeries expand(const SFraction& f, std::size_t order);
TruncatedSeries expand(const SFraction& f, std::size_t order, std::size_t depth);
TruncatedSeries expand(const JFraction& f, std::size_t order);
TruncatedSeries expand(const JFraction& f, std::size_t order, std::size_t depth);

// Pairing steps two at a time: a_n = c_{2n-1} + c_{2n} (c_{-1} = 0),
// beta_n = c_{2n} c_{2n+1}. Expansions of f and contract(f) agree.
JFraction contract(const SFraction& f);

// Raised when S-fraction extraction hits a zero where a nonzero
// coefficient is required; depth is the number of coefficients recovered.
class ExtractionError : public std::runtime_error {
public:
  ExtractionError(std::size_t depth, const std::string& what)
      : std::runtime_error(what), depth_(depth) {}
  std::size_t depth() const { return depth_; }

private:
  std::size_t depth_;
};

// The unique c0..c_{m-1} whose S-fraction matches s through order m,
// by peeling one level at a time in exact arithmetic. Requires s[0] = 1
// and m < s.order().
std::vector<Rational> sfraction_coefficients(const TruncatedSeries& s, std::size_t m);

// The ladder R_{-1} = 3/2 - (1/2) sqrt((1-5x)/(1-x)),
// R_{2n+1} = d_{2n+1} + (1 - 3x - sqrt((1-x)(1-5x)))/(2x),
// R_{2n} = d_{2n}/(1 - x R_{2n+1}), each truncated at the given order.
TruncatedSeries r_series(long m, std::size_t order);

struct LadderResult {
  bool ok = true;
  long failed_m = 0;  // meaningful only when !ok
};

// Verifies R_m (1 - x R_{m+1}) = d_m for -1 <= m <= max_m (d_{-1} = 1),
// at the given truncation order.
LadderResult check_r_ladder(long max_m, std::size_t order);

}  // namespace ncpath
