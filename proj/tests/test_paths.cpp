#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "ncpath/paths.hpp"
#include "ncpath/weights.hpp"

using namespace ncpath;

namespace {

const long kMotzkinNumbers[] = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188};
const long kCatalanNumbers[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
const long kSchroderNumbers[] = {1, 2, 6, 22, 90, 394, 1806};

MotzkinWeights random_motzkin_weights(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> level, down;
  for (int i = 0; i < 12; ++i) {
    level.emplace_back(num(rng), den(rng));
    down.emplace_back(num(rng), den(rng));
  }
  return {list_seq(level, true), list_seq(down, true)};
}

}  // namespace

TEST_CASE("enumeration counts and canonical order") {
  CHECK(enumerate_paths(Flavor::Motzkin, 0).size() == 1);
  CHECK(enumerate_paths(Flavor::Motzkin, 0).front().steps.empty());

  auto m3 = enumerate_paths(Flavor::Motzkin, 3);
  REQUIRE(m3.size() == 4);
  CHECK(m3[0].str() == "UDH");
  CHECK(m3[1].str() == "UHD");
  CHECK(m3[2].str() == "HUD");
  CHECK(m3[3].str() == "HHH");
  std::set<std::string> want{"HHH", "HUD", "UDH", "UHD"};
  std::set<std::string> got;
  for (const auto& p : m3) got.insert(p.str());
  CHECK(got == want);

  auto d2 = enumerate_paths(Flavor::Dyck, 2);
  REQUIRE(d2.size() == 2);
  CHECK(d2[0].str() == "UUDD");
  CHECK(d2[1].str() == "UDUD");

  for (std::size_t n = 0; n <= 8; ++n)
    CHECK(enumerate_paths(Flavor::Motzkin, n).size() ==
          static_cast<std::size_t>(kMotzkinNumbers[n]));
  for (std::size_t n = 0; n <= 7; ++n)
    CHECK(enumerate_paths(Flavor::Dyck, n).size() ==
          static_cast<std::size_t>(kCatalanNumbers[n]));
  for (std::size_t n = 0; n <= 6; ++n)
    CHECK(enumerate_paths(Flavor::Schroder, n).size() ==
          static_cast<std::size_t>(kSchroderNumbers[n]));
}

TEST_CASE("every enumerated path is valid and unique") {
  for (Flavor f : {Flavor::Motzkin, Flavor::Dyck, Flavor::Schroder}) {
    std::set<std::string> seen;
    for (const auto& p : enumerate_paths(f, 5)) {
      CHECK(p.valid());
      CHECK(p.length() == (f == Flavor::Motzkin ? 5 : 10));
      CHECK(seen.insert(p.str()).second);
    }
  }
}

TEST_CASE("parse and print round trip") {
  LatticePath p = LatticePath::parse(Flavor::Schroder, "UH2DUDH2");
  CHECK(p.length() == 8);
  CHECK(p.str() == "UH2DUDH2");
  CHECK(LatticePath::parse(Flavor::Motzkin, "UHD").steps.size() == 3);
  CHECK_THROWS_AS(LatticePath::parse(Flavor::Dyck, "UDD"), std::domain_error);
  CHECK_THROWS_AS(LatticePath::parse(Flavor::Motzkin, "UX"), std::domain_error);
}

TEST_CASE("path weights use ending heights") {
  MotzkinWeights bl = fib2_weights();
  CHECK(path_weight(LatticePath::parse(Flavor::Motzkin, "UHD"), bl) == Rational(2));
  CHECK(path_weight(LatticePath{Flavor::Motzkin, {}}, bl) == Rational(1));
  CHECK(path_weight(LatticePath::parse(Flavor::Motzkin, "UDHUUDHD"), bl) == Rational(4));
  CHECK_THROWS_AS(path_weight(LatticePath{Flavor::Dyck, {}}, bl), std::domain_error);
  CHECK_THROWS_AS(path_weight(LatticePath{Flavor::Motzkin, {}}, d_weights()),
                  std::domain_error);
}

TEST_CASE("weighted sums: dynamic programming equals enumeration") {
  MotzkinWeights bl = fib2_weights();
  DyckWeights d = d_weights();
  for (std::size_t n = 0; n <= 9; ++n)
    CHECK(motzkin_sum(n, bl) == motzkin_sum_enumerated(n, bl));
  for (std::size_t n = 0; n <= 8; ++n)
    CHECK(dyck_sum(n, d) == dyck_sum_enumerated(n, d));

  std::mt19937 rng(31);
  for (int rep = 0; rep < 10; ++rep) {
    MotzkinWeights w = random_motzkin_weights(rng);
    for (std::size_t n = 0; n <= 7; ++n)
      CHECK(motzkin_sum(n, w) == motzkin_sum_enumerated(n, w));
    DyckWeights c{w.down};
    for (std::size_t n = 0; n <= 6; ++n)
      CHECK(dyck_sum(n, c) == dyck_sum_enumerated(n, c));
  }
}

TEST_CASE("classic sequences from weighted sums") {
  MotzkinWeights ones = nc0_weights();
  for (std::size_t n = 0; n <= 10; ++n)
    CHECK(motzkin_sum(n, ones) == Rational(kMotzkinNumbers[n]));
  DyckWeights c1 = ones_dyck();
  for (std::size_t n = 0; n <= 10; ++n)
    CHECK(dyck_sum(n, c1) == Rational(kCatalanNumbers[n]));
}

TEST_CASE("fixed small values") {
  CHECK(motzkin_sum(1, fib2_weights()) == Rational(1));
  CHECK(motzkin_sum(3, fib2_weights()) == Rational(5));
  CHECK(dyck_sum(2, d_weights()) == Rational(2));
}

TEST_CASE("equal weighted families") {
  MotzkinWeights bl = fib2_weights();
  MotzkinWeights ab = alpha_beta_weights();
  DyckWeights d = d_weights();
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(dyck_sum(n, d) == motzkin_sum(n, bl));
    if (n >= 1) CHECK(dyck_sum(n, d) == motzkin_sum(n - 1, ab));
    CHECK(Rational(sch_even_count(n)) == motzkin_sum(n, ab));
  }
}

TEST_CASE("even-height horizontal predicate") {
  CHECK(is_sch_even(LatticePath::parse(Flavor::Schroder, "H2")));
  CHECK_FALSE(is_sch_even(LatticePath::parse(Flavor::Schroder, "UH2D")));
  std::set<std::string> even2;
  for (const auto& p : enumerate_paths(Flavor::Schroder, 2))
    if (is_sch_even(p)) even2.insert(p.str());
  CHECK(even2 == std::set<std::string>{"UUDD", "UDUD", "UDH2", "H2UD", "H2H2"});
  CHECK_THROWS_AS(is_sch_even(LatticePath{Flavor::Dyck, {}}), std::domain_error);
}

TEST_CASE("schroder counts: DP equals the filtered stream") {
  for (std::size_t n = 0; n <= 7; ++n) {
    CHECK(sch_even_count(n) == sch_even_count_enumerated(n));
    CHECK(no_even_peak_count(n) == no_even_peak_count_enumerated(n));
  }
  CHECK(no_even_peak_count(0) == 1);
  CHECK(no_even_peak_count(1) == 2);
  for (std::size_t n = 0; n <= 8; ++n)
    CHECK(no_even_peak_count(n) == sch_even_count(n));
}
