#include "ncpath/paths.hpp"

#include <array>
#include <stdexcept>

namespace ncpath {

namespace {

bool step_allowed(Flavor f, Step s) {
  switch (s) {
    case Step::Up:
    case Step::Down:
      return true;
    case Step::H:
      return f == Flavor::Motzkin;
    case Step::HH:
      return f == Flavor::Schroder;
  }
  return false;
}

// Can a path at height h still return to 0 in rem x-units?
bool can_finish(Flavor f, int h, std::size_t rem) {
  if (h < 0 || static_cast<std::size_t>(h) > rem) return false;
  if (f == Flavor::Motzkin) return true;
  return (rem - static_cast<std::size_t>(h)) % 2 == 0;
}

void dfs(Flavor f, std::size_t target, std::size_t x, int h, std::vector<Step>& acc,
         const std::function<void(const LatticePath&)>& fn) {
  if (x == target) {
    if (h == 0) fn(LatticePath{f, acc});
    return;
  }
  std::size_t rem = target - x;
  if (can_finish(f, h + 1, rem - 1)) {
    acc.push_back(Step::Up);
    dfs(f, target, x + 1, h + 1, acc, fn);
    acc.pop_back();
  }
  if (h > 0 && can_finish(f, h - 1, rem - 1)) {
    acc.push_back(Step::Down);
    dfs(f, target, x + 1, h - 1, acc, fn);
    acc.pop_back();
  }
  if (f == Flavor::Motzkin && can_finish(f, h, rem - 1)) {
    acc.push_back(Step::H);
    dfs(f, target, x + 1, h, acc, fn);
    acc.pop_back();
  }
  if (f == Flavor::Schroder && rem >= 2 && can_finish(f, h, rem - 2)) {
    acc.push_back(Step::HH);
    dfs(f, target, x + 2, h, acc, fn);
    acc.pop_back();
  }
}

std::size_t target_length(Flavor f, std::size_t n) {
  return f == Flavor::Motzkin ? n : 2 * n;
}

}  // namespace

std::size_t LatticePath::length() const {
  std::size_t len = 0;
  for (Step s : steps) len += s == Step::HH ? 2 : 1;
  return len;
}

bool LatticePath::valid() const {
  int h = 0;
  for (Step s : steps) {
    if (!step_allowed(flavor, s)) return false;
    if (s == Step::Up) ++h;
    if (s == Step::Down) --h;
    if (h < 0) return false;
  }
  return h == 0;
}

std::vector<int> LatticePath::end_heights() const {
  std::vector<int> hs;
  hs.reserve(steps.size());
  int h = 0;
  for (Step s : steps) {
    if (s == Step::Up) ++h;
    if (s == Step::Down) --h;
    hs.push_back(h);
  }
  return hs;
}

std::string LatticePath::str() const {
  std::string out;
  for (Step s : steps) {
    switch (s) {
      case Step::Up: out += 'U'; break;
      case Step::Down: out += 'D'; break;
      case Step::H: out += 'H'; break;
      case Step::HH: out += "H2"; break;
    }
  }
  return out;
}

LatticePath LatticePath::parse(Flavor flavor, std::string_view text) {
  LatticePath p{flavor, {}};
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    switch (c) {
      case 'U': p.steps.push_back(Step::Up); break;
      case 'D': p.steps.push_back(Step::Down); break;
      case 'H':
        if (flavor == Flavor::Schroder) {
          p.steps.push_back(Step::HH);
          if (i + 1 < text.size() && text[i + 1] == '2') ++i;
        } else {
          p.steps.push_back(Step::H);
        }
        break;
      default:
        throw std::domain_error(std::string("LatticePath::parse: bad character '") + c + "'");
    }
  }
  if (!p.valid()) throw std::domain_error("LatticePath::parse: not a valid path");
  return p;
}

void for_each_path(Flavor flavor, std::size_t n,
                   const std::function<void(const LatticePath&)>& fn) {
  std::vector<Step> acc;
  acc.reserve(target_length(flavor, n));
  dfs(flavor, target_length(flavor, n), 0, 0, acc, fn);
}

std::vector<LatticePath> enumerate_paths(Flavor flavor, std::size_t n) {
  std::vector<LatticePath> out;
  for_each_path(flavor, n, [&](const LatticePath& p) { out.push_back(p); });
  return out;
}

Rational path_weight(const LatticePath& path, const MotzkinWeights& w) {
  if (path.flavor != Flavor::Motzkin)
    throw std::domain_error("path_weight: Motzkin weights need a Motzkin path");
  Rational acc(1);
  int h = 0;
  for (Step s : path.steps) {
    if (s == Step::Up) ++h;
    if (s == Step::Down) {
      --h;
      acc *= w.down(static_cast<std::size_t>(h));
    }
    if (s == Step::H) acc *= w.level(static_cast<std::size_t>(h));
  }
  return acc;
}

Rational path_weight(const LatticePath& path, const DyckWeights& w) {
  if (path.flavor != Flavor::Dyck)
    throw std::domain_error("path_weight: Dyck weights need a Dyck path");
  Rational acc(1);
  int h = 0;
  for (Step s : path.steps) {
    if (s == Step::Up) ++h;
    if (s == Step::Down) {
      --h;
      acc *= w.down(static_cast<std::size_t>(h));
    }
  }
  return acc;
}

Rational motzkin_sum(std::size_t n, const MotzkinWeights& w) {
  std::vector<Rational> cur(n + 1);
  cur[0] = 1;
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::vector<Rational> next(n + 1);
    for (std::size_t h = 0; h <= pos; ++h) {
      if (cur[h].is_zero()) continue;
      next[h + 1] += cur[h];                  // U ending at h+1
      if (h > 0) next[h - 1] += cur[h] * w.down(h - 1);  // D ending at h-1
      next[h] += cur[h] * w.level(h);         // H at height h
    }
    cur = std::move(next);
  }
  return cur[0];
}

Rational dyck_sum(std::size_t n, const DyckWeights& w) {
  std::size_t len = 2 * n;
  std::vector<Rational> cur(len + 1);
  cur[0] = 1;
  for (std::size_t pos = 0; pos < len; ++pos) {
    std::vector<Rational> next(len + 1);
    for (std::size_t h = 0; h <= pos; ++h) {
      if (cur[h].is_zero()) continue;
      next[h + 1] += cur[h];
      if (h > 0) next[h - 1] += cur[h] * w.down(h - 1);
    }
    cur = std::move(next);
  }
  return cur[0];
}

Rational motzkin_sum_enumerated(std::size_t n, const MotzkinWeights& w) {
  Rational acc;
  for_each_path(Flavor::Motzkin, n,
                [&](const LatticePath& p) { acc += path_weight(p, w); });
  return acc;
}

Rational dyck_sum_enumerated(std::size_t n, const DyckWeights& w) {
  Rational acc;
  for_each_path(Flavor::Dyck, n,
                [&](const LatticePath& p) { acc += path_weight(p, w); });
  return acc;
}

bool is_sch_even(const LatticePath& path) {
  if (path.flavor != Flavor::Schroder)
    throw std::domain_error("is_sch_even: needs a Schroder path");
  int h = 0;
  for (Step s : path.steps) {
    if (s == Step::Up) ++h;
    if (s == Step::Down) --h;
    if (s == Step::HH && h % 2 != 0) return false;
  }
  return true;
}

bool has_even_peak(const LatticePath& path) {
  int h = 0;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    Step s = path.steps[i];
    if (s == Step::Up) ++h;
    if (s == Step::Down) --h;
    if (s == Step::Up && i + 1 < path.steps.size() && path.steps[i + 1] == Step::Down &&
        h % 2 == 0)
      return true;
  }
  return false;
}

mpz_class sch_even_count(std::size_t n) {
  std::size_t len = 2 * n;
  // dp[x][h]
  std::vector<std::vector<mpz_class>> dp(len + 1, std::vector<mpz_class>(len + 2));
  dp[0][0] = 1;
  for (std::size_t x = 0; x < len; ++x) {
    for (std::size_t h = 0; h <= x; ++h) {
      const mpz_class& v = dp[x][h];
      if (v == 0) continue;
      dp[x + 1][h + 1] += v;
      if (h > 0) dp[x + 1][h - 1] += v;
      if (h % 2 == 0 && x + 2 <= len) dp[x + 2][h] += v;
    }
  }
  return dp[len][0];
}

mpz_class sch_even_count_enumerated(std::size_t n) {
  mpz_class count = 0;
  for_each_path(Flavor::Schroder, n, [&](const LatticePath& p) {
    if (is_sch_even(p)) ++count;
  });
  return count;
}

mpz_class no_even_peak_count(std::size_t n) {
  std::size_t len = 2 * n;
  // dp[x][h][just_went_up]
  std::vector<std::vector<std::array<mpz_class, 2>>> dp(
      len + 1, std::vector<std::array<mpz_class, 2>>(len + 2));
  dp[0][0][0] = 1;
  for (std::size_t x = 0; x < len; ++x) {
    for (std::size_t h = 0; h <= x; ++h) {
      for (int f = 0; f < 2; ++f) {
        const mpz_class& v = dp[x][h][f];
        if (v == 0) continue;
        dp[x + 1][h + 1][1] += v;                                  // U
        if (h > 0 && !(f == 1 && h % 2 == 0)) dp[x + 1][h - 1][0] += v;  // D, no even apex
        if (x + 2 <= len) dp[x + 2][h][0] += v;                    // HH, any height
      }
    }
  }
  return dp[len][0][0] + dp[len][0][1];
}

mpz_class no_even_peak_count_enumerated(std::size_t n) {
  mpz_class count = 0;
  for_each_path(Flavor::Schroder, n, [&](const LatticePath& p) {
    if (!has_even_peak(p)) ++count;
  });
  return count;
}

}  // namespace ncpath
