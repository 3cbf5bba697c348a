#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "ncpath/partitions.hpp"
#include "ncpath/paths.hpp"
#include "ncpath/weights.hpp"

using namespace ncpath;

namespace {
const std::uint64_t kBell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
}

TEST_CASE("enumeration in lexicographic rgs order") {
  auto all0 = enumerate_partitions(0);
  REQUIRE(all0.size() == 1);
  CHECK(all0.front().size() == 0);

  auto all3 = enumerate_partitions(3);
  REQUIRE(all3.size() == 5);
  const std::vector<std::vector<unsigned char>> want{
      {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}};
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(all3[i].rgs == want[i]);

  for (std::size_t n = 0; n <= 8; ++n) {
    std::uint64_t count = 0;
    for_each_partition(n, [&](const SetPartition& p) {
      CHECK(p.valid());
      ++count;
    });
    CHECK(count == kBell[n]);
  }
}

TEST_CASE("blocks and rendering") {
  SetPartition p = SetPartition::from_rgs({0, 1, 1, 2, 0, 1, 0});
  CHECK(p.block_count() == 3);
  CHECK(p.str() == "{{1,5,7},{2,3,6},{4}}");
  CHECK_THROWS_AS(SetPartition::from_rgs({1}), std::domain_error);
  CHECK_THROWS_AS(SetPartition::from_rgs({0, 2}), std::domain_error);
}

TEST_CASE("arcs are consecutive block pairs") {
  SetPartition p = SetPartition::from_rgs({0, 1, 1, 2, 0, 1, 0});
  std::vector<Arc> got = arcs(p);
  // arcs appear in right-endpoint order
  std::vector<Arc> want{{2, 3}, {1, 5}, {3, 6}, {5, 7}};
  CHECK(got == want);

  CHECK(arcs(SetPartition::from_rgs({0, 1, 2, 3})).empty());
  std::vector<Arc> chain = arcs(SetPartition::from_rgs({0, 0, 0, 0}));
  CHECK(chain == std::vector<Arc>{{1, 2}, {2, 3}, {3, 4}});
}

TEST_CASE("distant noncrossing predicate") {
  SetPartition pi = SetPartition::from_rgs({0, 1, 1, 2, 0, 1, 0});
  CHECK(is_k_distant_noncrossing(pi, 3));
  CHECK_FALSE(is_k_distant_noncrossing(pi, 2));

  for (const auto& p : enumerate_partitions(3)) CHECK(is_k_distant_noncrossing(p, 2));

  SetPartition v = SetPartition::from_rgs({0, 1, 2, 0, 1});  // {{1,4},{2,5},{3}}
  CHECK_FALSE(is_k_distant_noncrossing(v, 2));
  CHECK(is_k_distant_noncrossing(v, 3));
}

TEST_CASE("counts at fixed points") {
  CHECK(count_nc(2, 5) == 51);
  CHECK(count_nc(1, 4) == 14);
  for (long k = 0; k <= 4; ++k) CHECK(count_nc(k, 0) == 1);
}

TEST_CASE("counts against weighted Motzkin sums") {
  for (std::size_t n = 0; n <= 8; ++n) {
    CHECK(Rational(static_cast<long>(count_nc(0, n))) == motzkin_sum(n, nc0_weights()));
    CHECK(Rational(static_cast<long>(count_nc(1, n))) == motzkin_sum(n, nc1_weights()));
    CHECK(Rational(static_cast<long>(count_nc(2, n))) == motzkin_sum(n, fib2_weights()));
    CHECK(Rational(static_cast<long>(count_nc(3, n))) == motzkin_sum(n, nc3_weights()));
  }
}

TEST_CASE("monotone in k and saturating at Bell") {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (long k = 0; k <= 7; ++k) CHECK(count_nc(k, n) <= count_nc(k + 1, n));
    CHECK(count_nc(static_cast<long>(n), n) == kBell[n]);
  }
}

TEST_CASE("parallel counter matches the serial reference") {
  for (std::size_t n = 0; n <= 10; ++n)
    for (long k : {0L, 1L, 2L, 3L, 5L})
      CHECK(count_nc(k, n) == count_nc_serial(k, n));
}

TEST_CASE("resource guard") {
  CHECK_THROWS_AS(count_nc(2, 14), std::domain_error);
  CHECK_THROWS_AS(count_nc_serial(2, 14), std::domain_error);
  CHECK_THROWS_AS(count_nc(2, 9, 8), std::domain_error);  // explicit bound
}
