#include "ncpath/verify.hpp"

#include <random>
#include <set>
#include <sstream>

#include "ncpath/bijections.hpp"
#include "ncpath/contfrac.hpp"
#include "ncpath/fibonacci.hpp"
#include "ncpath/partitions.hpp"
#include "ncpath/paths.hpp"
#include "ncpath/series.hpp"
#include "ncpath/weights.hpp"

namespace ncpath {

namespace {

template <typename L, typename R>
CheckResult check_eq(const std::string& name, const L& lhs, const R& rhs) {
  std::ostringstream ls, rs;
  ls << lhs;
  rs << rhs;
  if (ls.str() == rs.str()) return {name, true, {}};
  return {name, false, "lhs = " + ls.str() + ", rhs = " + rs.str()};
}

CheckResult check_that(const std::string& name, bool ok, const std::string& detail = {}) {
  return {name, ok, ok ? std::string{} : detail};
}

std::vector<Rational> random_sequence(std::mt19937& rng, std::size_t len) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.emplace_back(num(rng), den(rng));
  return out;
}

mpz_class catalan_number(std::size_t n) {
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * n, n);
  return binom / (n + 1);
}

// The contraction of Dyck weights as Motzkin weights:
// level(i) = c_{2i-1} + c_{2i}, down(i) = c_{2i} c_{2i+1}.
MotzkinWeights contract_weights(const DyckWeights& c) {
  return {[c](std::size_t i) {
            long li = static_cast<long>(i);
            return c.at(2 * li - 1) + c.at(2 * li);
          },
          [c](std::size_t i) {
            long li = static_cast<long>(i);
            return c.at(2 * li) * c.at(2 * li + 1);
          }};
}

}  // namespace

std::vector<CheckResult> verify_weight_identities(std::size_t max_n, long max_fib_m) {
  std::vector<CheckResult> out;
  DyckWeights d = d_weights();
  bool ok1 = true, ok2 = true, ok3 = true;
  std::string d1, d2, d3;
  for (std::size_t n = 0; n <= max_n; ++n) {
    long ln = static_cast<long>(n);
    if (ok1 && weight_b(n) != d.at(2 * ln - 1) + d.at(2 * ln)) {
      ok1 = false;
      d1 = "n = " + std::to_string(n);
    }
    if (ok2 && weight_lambda(n) != weight_d(2 * n) * weight_d(2 * n + 1)) {
      ok2 = false;
      d2 = "n = " + std::to_string(n);
    }
    if (ok3 && n >= 1 &&
        weight_d(2 * n - 1).reciprocal() + weight_d(2 * n + 1) != Rational(3)) {
      ok3 = false;
      d3 = "n = " + std::to_string(n);
    }
  }
  out.push_back(check_that("b_n = d_{2n-1} + d_{2n} for n <= " + std::to_string(max_n),
                           ok1, d1));
  out.push_back(check_that(
      "lambda_n = d_{2n} d_{2n+1} for n <= " + std::to_string(max_n), ok2, d2));
  out.push_back(check_that(
      "1/d_{2n-1} + d_{2n+1} = 3 for 1 <= n <= " + std::to_string(max_n), ok3, d3));

  bool cat_ok = true;
  std::string cat_detail;
  for (long m = 0; m <= max_fib_m && cat_ok; ++m)
    for (long i = 0; i <= m; ++i)
      if (!catalan_fib_identity(m, i)) {
        cat_ok = false;
        cat_detail = "m = " + std::to_string(m) + ", i = " + std::to_string(i);
        break;
      }
  for (long m = 0; m <= max_fib_m && cat_ok; ++m)
    if (!catalan_fib_identity(m, m + 1)) {  // the m - i = -1 edge
      cat_ok = false;
      cat_detail = "m = " + std::to_string(m) + ", i = " + std::to_string(m + 1);
    }
  out.push_back(check_that("Fibonacci Catalan identity for 0 <= i <= m <= " +
                               std::to_string(max_fib_m) + " and i = m + 1",
                           cat_ok, cat_detail));
  return out;
}

std::vector<CheckResult> verify_contraction(std::size_t order, int reps,
                                            std::size_t max_fiber_n, unsigned seed) {
  std::vector<CheckResult> out;
  std::mt19937 rng(seed);
  bool expand_ok = true;
  std::string expand_detail;
  for (int rep = 0; rep < reps && expand_ok; ++rep) {
    // The contracted J-fraction reads c two indices ahead per level.
    std::vector<Rational> cs = random_sequence(rng, 2 * order + 4);
    SFraction s{list_seq(cs, false)};
    TruncatedSeries lhs = expand(s, order);
    TruncatedSeries rhs = expand(contract(s), order);
    if (lhs != rhs) {
      expand_ok = false;
      std::ostringstream os;
      os << "rep " << rep << ": S = " << lhs << ", J = " << rhs;
      expand_detail = os.str();
    }
  }
  out.push_back(check_that("S-fraction = contracted J-fraction, " +
                               std::to_string(reps) + " random sequences at order " +
                               std::to_string(order),
                           expand_ok, expand_detail));

  DyckWeights d = d_weights();
  MotzkinWeights bw = contract_weights(d);
  bool transport_ok = true;
  std::string transport_detail;
  for (std::size_t n = 0; n <= max_fiber_n && transport_ok; ++n) {
    for_each_path(Flavor::Dyck, n, [&](const LatticePath& p) {
      if (!transport_ok) return;
      LabeledMotzkinPath lm = contract_dyck(p);
      if (path_weight(p, d) != labeled_weight(lm, d)) {
        transport_ok = false;
        transport_detail = "path " + p.str();
      }
    });
    // Summing the label fibers over a fixed Motzkin path recovers its
    // contracted weight.
    for_each_path(Flavor::Motzkin, n, [&](const LatticePath& m) {
      if (!transport_ok) return;
      Rational fiber_sum;
      for (const LabeledMotzkinPath& lm : all_labelings(m))
        fiber_sum += labeled_weight(lm, d);
      if (fiber_sum != path_weight(m, bw)) {
        transport_ok = false;
        transport_detail = "Motzkin path " + m.str();
      }
    });
  }
  out.push_back(check_that("per-path weight transport under step pairing, Dyck length <= " +
                               std::to_string(2 * max_fiber_n),
                           transport_ok, transport_detail));
  return out;
}

std::vector<CheckResult> verify_sfraction_formula(std::size_t depth, std::size_t order) {
  std::vector<CheckResult> out;
  std::vector<Rational> extracted =
      sfraction_coefficients(nc2_series(depth + 7), depth);
  bool ok = true;
  std::string detail;
  for (std::size_t i = 0; i < depth; ++i)
    if (extracted[i] != weight_d(i)) {
      ok = false;
      detail = "index " + std::to_string(i) + ": got " + extracted[i].str() +
               ", want " + weight_d(i).str();
      break;
    }
  out.push_back(check_that(
      "extracted S-fraction coefficients match d through depth " + std::to_string(depth),
      ok, detail));
  out.push_back(check_eq("S-fraction of d equals closed-form series at order " +
                             std::to_string(order),
                         expand(SFraction{d_weights().down}, order), nc2_series(order)));
  return out;
}

std::vector<CheckResult> verify_ladder(long max_m, std::size_t order) {
  std::vector<CheckResult> out;
  LadderResult r = check_r_ladder(max_m, order);
  out.push_back(check_that("R_m (1 - x R_{m+1}) = d_m for -1 <= m <= " +
                               std::to_string(max_m) + " at order " +
                               std::to_string(order),
                           r.ok, r.ok ? "" : "failed at m = " + std::to_string(r.failed_m)));
  bool const_ok = true;
  std::string detail;
  for (long m = 0; m <= max_m; ++m) {
    Rational c0 = r_series(m, order)[0];
    if (c0 != weight_d(static_cast<std::size_t>(m))) {
      const_ok = false;
      detail = "m = " + std::to_string(m) + ": constant term " + c0.str();
      break;
    }
  }
  out.push_back(check_that(
      "constant term of R_m equals d_m for 0 <= m <= " + std::to_string(max_m),
      const_ok, detail));
  return out;
}

std::vector<CheckResult> verify_chain(std::size_t max_n) {
  std::vector<CheckResult> out;
  TruncatedSeries s_route = max_n == 0
                                ? TruncatedSeries::one(0)
                                : expand(SFraction{d_weights().down}, max_n);
  TruncatedSeries j_route =
      max_n == 0 ? TruncatedSeries::one(0)
                 : expand(JFraction{fib2_weights().level, fib2_weights().down}, max_n);
  MotzkinWeights ab = alpha_beta_weights();
  for (std::size_t n = 1; n <= max_n; ++n) {
    mpz_class ncp(static_cast<unsigned long>(count_nc(2, n)));
    mpz_class sch = sch_even_count_enumerated(n - 1);
    Rational mot = motzkin_sum(n - 1, ab);
    const Rational& dyck = s_route[n];
    const Rational& mot_bl = j_route[n];
    bool ok = Rational(ncp) == Rational(sch) && Rational(sch) == mot && mot == dyck &&
              dyck == mot_bl;
    std::ostringstream os;
    if (!ok)
      os << "ncp = " << ncp << ", sch_even = " << sch << ", motzkin(a,b) = " << mot
         << ", dyck(d) = " << dyck << ", motzkin(b,l) = " << mot_bl;
    out.push_back(check_that("five-route agreement at n = " + std::to_string(n), ok,
                             os.str()));
  }
  return out;
}

std::vector<CheckResult> verify_nc_crosschecks(std::size_t max_n) {
  std::vector<CheckResult> out;
  MotzkinWeights w0 = nc0_weights(), w1 = nc1_weights(), w3 = nc3_weights();
  TruncatedSeries gf = nc2_series(max_n);
  bool ok0 = true, ok1 = true, ok1c = true, ok3 = true, ok2 = true;
  std::string s0, s1, s1c, s3, s2;
  for (std::size_t n = 0; n <= max_n; ++n) {
    Rational c0(static_cast<long>(count_nc(0, n)));
    Rational c1(static_cast<long>(count_nc(1, n)));
    Rational c2(static_cast<long>(count_nc(2, n)));
    Rational c3(static_cast<long>(count_nc(3, n)));
    if (ok0 && c0 != motzkin_sum(n, w0)) { ok0 = false; s0 = "n = " + std::to_string(n); }
    if (ok1 && c1 != motzkin_sum(n, w1)) { ok1 = false; s1 = "n = " + std::to_string(n); }
    if (ok1c && c1 != Rational(catalan_number(n))) {
      ok1c = false;
      s1c = "n = " + std::to_string(n);
    }
    if (ok3 && c3 != motzkin_sum(n, w3)) { ok3 = false; s3 = "n = " + std::to_string(n); }
    if (ok2 && c2 != gf[n]) { ok2 = false; s2 = "n = " + std::to_string(n); }
  }
  std::string range = " for n <= " + std::to_string(max_n);
  out.push_back(check_that("0-distant counts equal (1,1,...),(1,1,...) Motzkin sums" + range, ok0, s0));
  out.push_back(check_that("1-distant counts equal (1,2,2,...),(1,1,...) Motzkin sums" + range, ok1, s1));
  out.push_back(check_that("1-distant counts equal Catalan numbers" + range, ok1c, s1c));
  out.push_back(check_that("3-distant counts equal (1,2,3,3,...),(1,2,2,...) Motzkin sums" + range, ok3, s3));
  out.push_back(check_that("2-distant counts equal closed-form series coefficients" + range, ok2, s2));
  return out;
}

std::vector<CheckResult> verify_integrality(std::size_t order) {
  std::vector<CheckResult> out;
  MotzkinWeights w = fib2_weights();
  out.push_back(check_that("the weights themselves are not all integers",
                           !weight_b(2).is_integer() && !weight_lambda(2).is_integer()));
  TruncatedSeries j = expand(JFraction{w.level, w.down}, order);
  bool ok = true;
  std::string detail;
  for (std::size_t n = 0; n <= order; ++n)
    if (!j[n].is_integer()) {
      ok = false;
      detail = "coefficient " + std::to_string(n) + " = " + j[n].str();
      break;
    }
  out.push_back(check_that("all (b, lambda) J-fraction coefficients through order " +
                               std::to_string(order) + " are integers",
                           ok, detail));
  return out;
}

std::vector<CheckResult> verify_bijections(std::size_t dyck_n, std::size_t choice_n,
                                           std::size_t peak_n) {
  std::vector<CheckResult> out;

  bool pair_ok = true;
  std::string pair_detail;
  for (std::size_t n = 0; n <= dyck_n && pair_ok; ++n) {
    for_each_path(Flavor::Dyck, n, [&](const LatticePath& p) {
      if (!pair_ok) return;
      if (expand_motzkin(contract_dyck(p)) != p) {
        pair_ok = false;
        pair_detail = "Dyck path " + p.str();
      }
    });
    for_each_path(Flavor::Motzkin, n, [&](const LatticePath& m) {
      if (!pair_ok) return;
      for (const LabeledMotzkinPath& lm : all_labelings(m))
        if (!(contract_dyck(expand_motzkin(lm)) == lm)) {
          pair_ok = false;
          pair_detail = "labeled Motzkin path over " + m.str();
          return;
        }
    });
  }
  out.push_back(check_that("step pairing round trips for Dyck semilength <= " +
                               std::to_string(dyck_n),
                           pair_ok, pair_detail));

  bool sch_ok = true;
  std::string sch_detail;
  for (std::size_t n = 0; n <= choice_n && sch_ok; ++n) {
    std::set<std::string> images;
    std::size_t decorated = 0;
    for_each_path(Flavor::Motzkin, n, [&](const LatticePath& m) {
      if (!sch_ok) return;
      for (const ChoiceMotzkinPath& cm : all_choices(m)) {
        ++decorated;
        LatticePath s = to_schroder(cm);
        if (!s.valid() || !is_sch_even(s) || s.length() != 2 * n) {
          sch_ok = false;
          sch_detail = "image of " + m.str() + " not in the even-horizontal set";
          return;
        }
        if (!images.insert(s.str()).second) {
          sch_ok = false;
          sch_detail = "collision at " + s.str();
          return;
        }
        if (!(from_schroder(s) == cm)) {
          sch_ok = false;
          sch_detail = "round trip failed through " + s.str();
          return;
        }
      }
    });
    if (sch_ok && mpz_class(static_cast<unsigned long>(images.size())) != sch_even_count(n)) {
      sch_ok = false;
      sch_detail = "n = " + std::to_string(n) + ": image has " +
                   std::to_string(images.size()) + " paths";
    }
    if (sch_ok && no_even_peak_count(n) != sch_even_count(n)) {
      sch_ok = false;
      sch_detail = "n = " + std::to_string(n) + ": peak-free and even-horizontal counts differ";
    }
    (void)decorated;
  }
  out.push_back(check_that("Motzkin choice decoration is a bijection onto the even-horizontal set, n <= " +
                               std::to_string(choice_n),
                           sch_ok, sch_detail));

  bool peak_ok = true;
  std::string peak_detail;
  for (std::size_t n = 0; n <= peak_n && peak_ok; ++n) {
    std::set<std::string> images;
    for_each_path(Flavor::Schroder, n, [&](const LatticePath& p) {
      if (!peak_ok || has_even_peak(p)) return;
      LatticePath q = odd_h_to_peaks(p);
      if (!q.valid() || !is_sch_even(q)) {
        peak_ok = false;
        peak_detail = "image of " + p.str() + " invalid";
        return;
      }
      if (!images.insert(q.str()).second) {
        peak_ok = false;
        peak_detail = "collision at " + q.str();
        return;
      }
      if (!(even_peaks_to_h(q) == p)) {
        peak_ok = false;
        peak_detail = "round trip failed for " + p.str();
      }
    });
    if (peak_ok && mpz_class(static_cast<unsigned long>(images.size())) != sch_even_count(n)) {
      peak_ok = false;
      peak_detail = "n = " + std::to_string(n) + ": image misses part of the target set";
    }
  }
  out.push_back(check_that("odd-horizontal-to-peak rewriting is a bijection, length <= " +
                               std::to_string(2 * peak_n),
                           peak_ok, peak_detail));
  return out;
}

}  // namespace ncpath
