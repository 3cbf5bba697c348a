#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ncpath {

// A set partition of {1..n} in restricted-growth encoding: rgs[0] = 0 and
// rgs[i] <= 1 + max(rgs[0..i-1]). n = 0 encodes the empty partition.
struct SetPartition {
  std::vector<unsigned char> rgs;

  std::size_t size() const { return rgs.size(); }
  std::size_t block_count() const;
  bool valid() const;
  std::vector<std::vector<int>> blocks() const;  // 1-based elements, sorted
  std::string str() const;                       // "{{1,5,7},{2,3,6},{4}}"

  static SetPartition from_rgs(std::vector<unsigned char> rgs);  // validates
};

// A pair (left, right) of integers in the same block with no block element
// strictly between them.
struct Arc {
  int left = 0;
  int right = 0;
  friend bool operator==(const Arc& a, const Arc& b) {
    return a.left == b.left && a.right == b.right;
  }
};

std::vector<Arc> arcs(const SetPartition& p);

// No two arcs (a,c), (b,d) with a < b <= c < d and c - b >= k.
bool is_k_distant_noncrossing(const SetPartition& p, long k);

// Every partition of {1..n} exactly once, in lexicographic rgs order.
void for_each_partition(std::size_t n,
                        const std::function<void(const SetPartition&)>& fn);
std::vector<SetPartition> enumerate_partitions(std::size_t n);

inline constexpr std::size_t kDefaultMaxPartitionN = 13;

// Number of k-distant noncrossing partitions of {1..n}, by filtering the
// full enumeration. Bell numbers grow fast; n above max_n is refused.
// count_nc spreads the enumeration over threads when OpenMP is available
// and always returns the same total as count_nc_serial.
std::uint64_t count_nc_serial(long k, std::size_t n,
                              std::size_t max_n = kDefaultMaxPartitionN);
std::uint64_t count_nc(long k, std::size_t n,
                       std::size_t max_n = kDefaultMaxPartitionN);

}  // namespace ncpath
