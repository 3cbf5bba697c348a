#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ncpath/rational.hpp"
#include "ncpath/weights.hpp"

namespace ncpath {

enum class Step : std::uint8_t { Up, Down, H, HH };
enum class Flavor { Motzkin, Dyck, Schroder };

// A nonnegative lattice path from (0,0) back to the x-axis.
//   Motzkin:  steps U=(1,1), D=(1,-1), H=(1,0), length n
//   Dyck:     steps U, D, length 2n
//   Schroder: steps U, D, HH=(2,0), length 2n
// The height of a step is the y coordinate of its ending point; it drives
// all weight lookups.
struct LatticePath {
  Flavor flavor = Flavor::Motzkin;
  std::vector<Step> steps;

  std::size_t length() const;  // total x displacement
  bool valid() const;          // alphabet, nonnegativity, returns to 0

  // Height after each step, in step order.
  std::vector<int> end_heights() const;

  std::string str() const;  // "UDH", Schroder double steps printed as "H2"
  static LatticePath parse(Flavor flavor, std::string_view text);

  friend bool operator==(const LatticePath& a, const LatticePath& b) {
    return a.flavor == b.flavor && a.steps == b.steps;
  }
};

// Every path of the flavor's size parameter n (Motzkin length n, Dyck and
// Schroder length 2n), exactly once, depth first with step priority
// U < D < H (< HH).
void for_each_path(Flavor flavor, std::size_t n,
                   const std::function<void(const LatticePath&)>& fn);
std::vector<LatticePath> enumerate_paths(Flavor flavor, std::size_t n);

Rational path_weight(const LatticePath& path, const MotzkinWeights& w);
Rational path_weight(const LatticePath& path, const DyckWeights& w);

// Weighted path sums by dynamic programming over (position, height); no
// path is ever materialized. dyck_sum(n, .) sums paths of length 2n.
Rational motzkin_sum(std::size_t n, const MotzkinWeights& w);
Rational dyck_sum(std::size_t n, const DyckWeights& w);

// The same sums by exhaustive enumeration; the slow reference route.
Rational motzkin_sum_enumerated(std::size_t n, const MotzkinWeights& w);
Rational dyck_sum_enumerated(std::size_t n, const DyckWeights& w);

// True iff every HH step of a Schroder path sits at even height.
bool is_sch_even(const LatticePath& path);

// True iff some U step is immediately followed by D with the apex (the
// height between them) even.
bool has_even_peak(const LatticePath& path);

// Schroder paths of length 2n with all HH steps at even height.
mpz_class sch_even_count(std::size_t n);              // DP
mpz_class sch_even_count_enumerated(std::size_t n);   // filter the stream

// Schroder paths of length 2n with no peak at even height.
mpz_class no_even_peak_count(std::size_t n);             // DP
mpz_class no_even_peak_count_enumerated(std::size_t n);  // filter the stream

}  // namespace ncpath
