#include "ncpath/partitions.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ncpath {

namespace {

constexpr std::size_t kMaxSupportedN = 32;  // rgs fits on the stack

// Arc test on a raw rgs buffer; single implementation shared by the
// predicate and both counters.
bool rgs_k_distant(const unsigned char* rgs, std::size_t n, long k) {
  int last[kMaxSupportedN];
  std::fill(last, last + kMaxSupportedN, 0);
  int al[kMaxSupportedN], ar[kMaxSupportedN];
  int na = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    unsigned char b = rgs[i - 1];
    if (last[b] != 0) {
      al[na] = last[b];
      ar[na] = static_cast<int>(i);
      ++na;
    }
    last[b] = static_cast<int>(i);
  }
  for (int p = 0; p < na; ++p)
    for (int q = 0; q < na; ++q) {
      // arcs (a,c) = p, (b,d) = q with a < b <= c < d and c - b >= k
      if (al[p] < al[q] && al[q] <= ar[p] && ar[p] < ar[q] && ar[p] - al[q] >= k)
        return false;
    }
  return true;
}

std::uint64_t count_subtree(unsigned char* rgs, std::size_t n, std::size_t pos,
                            int maxv, long k) {
  if (pos == n) return rgs_k_distant(rgs, n, k) ? 1 : 0;
  std::uint64_t total = 0;
  for (int v = 0; v <= maxv + 1; ++v) {
    rgs[pos] = static_cast<unsigned char>(v);
    total += count_subtree(rgs, n, pos + 1, std::max(maxv, v), k);
  }
  return total;
}

void check_args(long k, std::size_t n, std::size_t max_n) {
  if (k < 0) throw std::domain_error("count_nc: k must be nonnegative");
  if (n > max_n)
    throw std::domain_error("count_nc: n = " + std::to_string(n) +
                            " exceeds the configured partition bound " +
                            std::to_string(max_n) + " (Bell growth)");
  if (n > kMaxSupportedN)
    throw std::domain_error("count_nc: n exceeds the compiled-in limit");
}

struct Prefix {
  unsigned char rgs[kMaxSupportedN];
  int maxv;
};

void collect_prefixes(unsigned char* rgs, std::size_t depth, std::size_t pos,
                      int maxv, std::vector<Prefix>& out) {
  if (pos == depth) {
    Prefix p{};
    std::copy(rgs, rgs + depth, p.rgs);
    p.maxv = maxv;
    out.push_back(p);
    return;
  }
  for (int v = 0; v <= maxv + 1; ++v) {
    rgs[pos] = static_cast<unsigned char>(v);
    collect_prefixes(rgs, depth, pos + 1, std::max(maxv, v), out);
  }
}

}  // namespace

std::size_t SetPartition::block_count() const {
  if (rgs.empty()) return 0;
  return 1 + static_cast<std::size_t>(*std::max_element(rgs.begin(), rgs.end()));
}

bool SetPartition::valid() const {
  int maxv = -1;
  for (unsigned char v : rgs) {
    if (static_cast<int>(v) > maxv + 1) return false;
    maxv = std::max(maxv, static_cast<int>(v));
  }
  return true;
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(block_count());
  for (std::size_t i = 0; i < rgs.size(); ++i)
    out[rgs[i]].push_back(static_cast<int>(i) + 1);
  return out;
}

std::string SetPartition::str() const {
  std::string out = "{";
  bool first_block = true;
  for (const auto& block : blocks()) {
    if (!first_block) out += ",";
    first_block = false;
    out += "{";
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(block[j]);
    }
    out += "}";
  }
  return out + "}";
}

SetPartition SetPartition::from_rgs(std::vector<unsigned char> rgs) {
  SetPartition p{std::move(rgs)};
  if (!p.valid())
    throw std::domain_error("SetPartition: not a restricted-growth string");
  return p;
}

std::vector<Arc> arcs(const SetPartition& p) {
  std::vector<Arc> out;
  std::vector<int> last(p.block_count(), 0);
  for (std::size_t i = 1; i <= p.size(); ++i) {
    unsigned char b = p.rgs[i - 1];
    if (last[b] != 0) out.push_back({last[b], static_cast<int>(i)});
    last[b] = static_cast<int>(i);
  }
  return out;
}

bool is_k_distant_noncrossing(const SetPartition& p, long k) {
  return rgs_k_distant(p.rgs.data(), p.size(), k);
}

namespace {

void walk_partitions(std::vector<unsigned char>& rgs, std::size_t pos, int maxv,
                     const std::function<void(const SetPartition&)>& fn) {
  if (pos == rgs.size()) {
    fn(SetPartition{rgs});
    return;
  }
  for (int v = 0; v <= maxv + 1; ++v) {
    rgs[pos] = static_cast<unsigned char>(v);
    walk_partitions(rgs, pos + 1, std::max(maxv, v), fn);
  }
}

}  // namespace

void for_each_partition(std::size_t n,
                        const std::function<void(const SetPartition&)>& fn) {
  std::vector<unsigned char> rgs(n);
  walk_partitions(rgs, 0, -1, fn);
}

std::vector<SetPartition> enumerate_partitions(std::size_t n) {
  std::vector<SetPartition> out;
  for_each_partition(n, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_nc_serial(long k, std::size_t n, std::size_t max_n) {
  check_args(k, n, max_n);
  unsigned char rgs[kMaxSupportedN] = {};
  return count_subtree(rgs, n, 0, -1, k);
}

std::uint64_t count_nc(long k, std::size_t n, std::size_t max_n) {
  check_args(k, n, max_n);
#ifdef _OPENMP
  const std::size_t depth = 6;
  if (n > depth) {
    unsigned char buf[kMaxSupportedN] = {};
    std::vector<Prefix> prefixes;
    collect_prefixes(buf, depth, 0, -1, prefixes);
    std::uint64_t total = 0;
    // Totals are integers, so the reduction order cannot affect the result.
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
      unsigned char rgs[kMaxSupportedN] = {};
      std::copy(prefixes[i].rgs, prefixes[i].rgs + depth, rgs);
      total += count_subtree(rgs, n, depth, prefixes[i].maxv, k);
    }
    return total;
  }
#endif
  return count_nc_serial(k, n, max_n);
}

}  // namespace ncpath
