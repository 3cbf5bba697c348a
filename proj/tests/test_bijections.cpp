#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "ncpath/bijections.hpp"
#include "ncpath/partitions.hpp"
#include "ncpath/paths.hpp"
#include "ncpath/weights.hpp"

using namespace ncpath;

namespace {

LatticePath dyck(const std::string& s) { return LatticePath::parse(Flavor::Dyck, s); }
LatticePath sch(const std::string& s) { return LatticePath::parse(Flavor::Schroder, s); }

}  // namespace

TEST_CASE("step pairing contracts as stated") {
  LabeledMotzkinPath m = contract_dyck(dyck("UUDD"));
  CHECK(m.path.str() == "UD");
  CHECK(m.labels.empty());

  m = contract_dyck(dyck("UDUD"));
  CHECK(m.path.str() == "HH");
  CHECK(m.labels == std::vector<HLabel>{HLabel::FromUD, HLabel::FromUD});

  m = contract_dyck(dyck("UUDDUDUUUUDDDUDD"));
  CHECK(m.path.str() == "UDHUUDHD");
  CHECK(m.labels == std::vector<HLabel>{HLabel::FromUD, HLabel::FromDU});
}

TEST_CASE("expansion is the exact inverse") {
  CHECK(expand_motzkin({{Flavor::Motzkin, {}}, {}}).steps.empty());
  CHECK(expand_motzkin({{Flavor::Motzkin, {Step::H}}, {HLabel::FromUD}}).str() == "UD");

  for (std::size_t n = 0; n <= 8; ++n)
    for_each_path(Flavor::Dyck, n, [&](const LatticePath& p) {
      CHECK(expand_motzkin(contract_dyck(p)) == p);
    });

  for (std::size_t n = 0; n <= 6; ++n)
    for_each_path(Flavor::Motzkin, n, [&](const LatticePath& mp) {
      for (const LabeledMotzkinPath& lm : all_labelings(mp))
        CHECK(contract_dyck(expand_motzkin(lm)) == lm);
    });

  CHECK_THROWS_AS(expand_motzkin({{Flavor::Motzkin, {Step::H}}, {HLabel::FromDU}}),
                  std::domain_error);
  CHECK_THROWS_AS(expand_motzkin({{Flavor::Motzkin, {Step::H}}, {}}), std::domain_error);
}

TEST_CASE("weight transport through the pairing") {
  DyckWeights d = d_weights();
  for (std::size_t n = 0; n <= 6; ++n)
    for_each_path(Flavor::Dyck, n, [&](const LatticePath& p) {
      CHECK(path_weight(p, d) == labeled_weight(contract_dyck(p), d));
    });

  // fiber sums over a fixed Motzkin path recover the contracted weights
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> num(1, 4), den(1, 4);
  for (int rep = 0; rep < 5; ++rep) {
    std::vector<Rational> cs;
    for (int i = 0; i < 24; ++i) cs.emplace_back(num(rng), den(rng));
    DyckWeights c{list_seq(cs, true)};
    MotzkinWeights contracted{
        [c](std::size_t i) {
          long li = static_cast<long>(i);
          return c.at(2 * li - 1) + c.at(2 * li);
        },
        [c](std::size_t i) {
          long li = static_cast<long>(i);
          return c.at(2 * li) * c.at(2 * li + 1);
        }};
    for (std::size_t n = 0; n <= 5; ++n)
      for_each_path(Flavor::Motzkin, n, [&](const LatticePath& mp) {
        Rational fiber;
        for (const LabeledMotzkinPath& lm : all_labelings(mp))
          fiber += labeled_weight(lm, c);
        CHECK(fiber == path_weight(mp, contracted));
      });
  }
}

TEST_CASE("stripped contraction") {
  CHECK(strip_contract(dyck("UD")).path.steps.empty());

  LabeledMotzkinPath m = strip_contract(dyck("UUDD"));
  CHECK(m.path.str() == "H");
  CHECK(m.labels == std::vector<HLabel>{HLabel::FromUD});

  m = strip_contract(dyck("UDUD"));
  CHECK(m.path.str() == "H");
  CHECK(m.labels == std::vector<HLabel>{HLabel::FromDU});  // dips to the floor

  CHECK_THROWS_AS(strip_contract(LatticePath{Flavor::Dyck, {}}), std::domain_error);
}

TEST_CASE("stripped fibers carry the shifted weights") {
  DyckWeights d = d_weights();
  MotzkinWeights ab = alpha_beta_weights();
  for (std::size_t n = 1; n <= 7; ++n) {
    std::map<std::string, Rational> fiber;
    for_each_path(Flavor::Dyck, n, [&](const LatticePath& p) {
      LabeledMotzkinPath lm = strip_contract(p);
      CHECK(lm.path.valid());
      CHECK(lm.path.length() == n - 1);
      CHECK(path_weight(p, d) == labeled_weight(lm, d, 1));
      fiber[lm.path.str()] += path_weight(p, d);
    });
    for_each_path(Flavor::Motzkin, n - 1, [&](const LatticePath& mp) {
      REQUIRE(fiber.count(mp.str()) == 1);
      CHECK(fiber[mp.str()] == path_weight(mp, ab));
    });
  }
}

TEST_CASE("choice decoration onto even-horizontal Schroder paths") {
  CHECK(to_schroder({{Flavor::Motzkin, {Step::H}}, {HChoice::AsHH}}).str() == "H2");
  CHECK(to_schroder({{Flavor::Motzkin, {Step::H}}, {HChoice::AsUD}}).str() == "UD");
  CHECK_THROWS_AS(to_schroder({{Flavor::Motzkin, {Step::H}}, {HChoice::AsDU}}),
                  std::domain_error);

  for (std::size_t n = 0; n <= 6; ++n) {
    std::set<std::string> images;
    for_each_path(Flavor::Motzkin, n, [&](const LatticePath& mp) {
      for (const ChoiceMotzkinPath& cm : all_choices(mp)) {
        LatticePath s = to_schroder(cm);
        CHECK(s.valid());
        CHECK(is_sch_even(s));
        CHECK(images.insert(s.str()).second);
        CHECK(from_schroder(s) == cm);
      }
    });
    CHECK(mpz_class(images.size()) == sch_even_count(n));
  }
}

TEST_CASE("reading Schroder paths back in windows") {
  ChoiceMotzkinPath cm = from_schroder(sch("UDH2"));
  CHECK(cm.path.str() == "HH");
  CHECK(cm.choices == std::vector<HChoice>{HChoice::AsUD, HChoice::AsHH});

  cm = from_schroder(sch("H2H2"));
  CHECK(cm.choices == std::vector<HChoice>{HChoice::AsHH, HChoice::AsHH});

  CHECK_THROWS_AS(from_schroder(sch("UH2D")), std::domain_error);
}

TEST_CASE("cardinality chain to n = 12") {
  MotzkinWeights bl = fib2_weights();
  MotzkinWeights ab = alpha_beta_weights();
  DyckWeights d = d_weights();
  for (std::size_t n = 1; n <= 12; ++n) {
    Rational ncp(static_cast<long>(ncpath::count_nc(2, n)));
    CHECK(ncp == Rational(sch_even_count(n - 1)));
    CHECK(ncp == motzkin_sum(n - 1, ab));
    CHECK(ncp == dyck_sum(n, d));
    CHECK(ncp == motzkin_sum(n, bl));
  }
}

TEST_CASE("odd horizontals to peaks") {
  CHECK(odd_h_to_peaks(sch("UH2D")).str() == "UUDD");
  CHECK(odd_h_to_peaks(sch("H2")).str() == "H2");
  CHECK_THROWS_AS(odd_h_to_peaks(sch("UUDD")), std::domain_error);  // even peak
  CHECK_THROWS_AS(even_peaks_to_h(sch("UH2D")), std::domain_error);

  for (std::size_t n = 0; n <= 6; ++n) {
    std::set<std::string> images;
    for_each_path(Flavor::Schroder, n, [&](const LatticePath& p) {
      if (has_even_peak(p)) return;
      LatticePath q = odd_h_to_peaks(p);
      CHECK(q.valid());
      CHECK(is_sch_even(q));
      CHECK(images.insert(q.str()).second);
      CHECK(even_peaks_to_h(q) == p);
    });
    CHECK(mpz_class(images.size()) == sch_even_count(n));
    // and back the other way
    for_each_path(Flavor::Schroder, n, [&](const LatticePath& p) {
      if (!is_sch_even(p)) return;
      LatticePath q = even_peaks_to_h(p);
      CHECK_FALSE(has_even_peak(q));
      CHECK(odd_h_to_peaks(q) == p);
    });
  }
}
