// Command-line front end: exact counts, series expansions, identity
// verification suites, and step-rewriting demos. Exit codes: 0 success,
// 1 verification mismatch or extraction breakdown, 2 usage/bounds error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncpath/bijections.hpp"
#include "ncpath/contfrac.hpp"
#include "ncpath/partitions.hpp"
#include "ncpath/paths.hpp"
#include "ncpath/series.hpp"
#include "ncpath/verify.hpp"
#include "ncpath/weights.hpp"

using nlohmann::json;
using namespace ncpath;

namespace {

enum class Mode { Human, Json, Csv };

struct Options {
  Mode mode = Mode::Human;
  std::size_t max_partition_n = kDefaultMaxPartitionN;
  std::size_t max_path_len = 16;
  std::size_t max_order = 200;
  int exit_code = 0;
};

struct Row {
  long n = 0;
  std::vector<std::pair<std::string, Rational>> values;
  bool ok = true;
};

json rational_json(const Rational& r) {
  return json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

void print_rows(const Options& opt, const std::vector<Row>& rows) {
  if (opt.mode == Mode::Json) {
    json out = json::array();
    for (const Row& row : rows) {
      json values;
      for (const auto& [label, v] : row.values) values[label] = rational_json(v);
      out.push_back({{"n", row.n}, {"values", values}, {"status", row.ok ? "ok" : "mismatch"}});
    }
    std::cout << out.dump() << "\n";
    return;
  }
  if (opt.mode == Mode::Csv) {
    std::cout << "n";
    if (!rows.empty())
      for (const auto& [label, v] : rows.front().values) std::cout << "," << label;
    std::cout << "\n";
    for (const Row& row : rows) {
      std::cout << row.n;
      for (const auto& [label, v] : row.values) std::cout << "," << v.str();
      std::cout << "\n";
    }
    return;
  }
  for (const Row& row : rows) {
    std::cout << row.n;
    for (const auto& [label, v] : row.values) std::cout << "\t" << label << "=" << v.str();
    if (!row.ok) std::cout << "\tMISMATCH";
    std::cout << "\n";
  }
}

std::pair<long, long> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      long v = std::stol(text);
      return {v, v};
    }
    long lo = std::stol(text.substr(0, dots));
    long hi = std::stol(text.substr(dots + 2));
    if (lo > hi) throw std::domain_error("range: empty");
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw std::domain_error("range: expected N or A..B, got '" + text + "'");
  }
}

// "1,2,3,3..." -> explicit entries; a trailing "..." repeats the last entry.
RationalSeq parse_seq(std::string text) {
  bool repeat = false;
  if (text.size() >= 3 && text.substr(text.size() - 3) == "...") {
    repeat = true;
    text.resize(text.size() - 3);
  }
  std::vector<Rational> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                     : comma - start);
    if (item.empty()) throw std::domain_error("weight sequence: empty entry");
    entries.push_back(Rational::from_string(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return list_seq(std::move(entries), repeat);
}

MotzkinWeights motzkin_weights_from(const std::string& name, const std::string& level,
                                    const std::string& down) {
  if (!name.empty()) {
    if (!level.empty() || !down.empty())
      throw std::domain_error("give either --weights or inline sequences, not both");
    if (name == "fib2") return fib2_weights();
    if (name == "alpha-beta") return alpha_beta_weights();
    if (name == "nc0") return nc0_weights();
    if (name == "nc1") return nc1_weights();
    if (name == "nc3") return nc3_weights();
    if (name == "ones") return nc0_weights();
    if (name == "d")
      throw std::domain_error("'d' is a Dyck weight sequence, not a Motzkin pair");
    throw std::domain_error("unknown Motzkin weight system '" + name + "'");
  }
  if (level.empty() || down.empty())
    throw std::domain_error("Motzkin weights need --weights NAME or both inline sequences");
  return {parse_seq(level), parse_seq(down)};
}

DyckWeights dyck_weights_from(const std::string& name, const std::string& inline_c) {
  if (!name.empty()) {
    if (!inline_c.empty())
      throw std::domain_error("give either --weights or --c, not both");
    if (name == "d") return d_weights();
    if (name == "ones") return ones_dyck();
    throw std::domain_error("unknown Dyck weight sequence '" + name + "'");
  }
  if (inline_c.empty())
    throw std::domain_error("Dyck weights need --weights NAME or --c");
  return {parse_seq(inline_c)};
}

std::string labeled_str(const LabeledMotzkinPath& lm) {
  std::string out;
  std::size_t li = 0;
  for (Step s : lm.path.steps) {
    if (s == Step::Up) out += "U";
    if (s == Step::Down) out += "D";
    if (s == Step::H)
      out += lm.labels[li++] == HLabel::FromUD ? "H(UD)" : "H(DU)";
  }
  return out.empty() ? "(empty)" : out;
}

std::string choice_str(const ChoiceMotzkinPath& cm) {
  std::string out;
  std::size_t ci = 0;
  for (Step s : cm.path.steps) {
    if (s == Step::Up) out += "U";
    if (s == Step::Down) out += "D";
    if (s == Step::H) {
      switch (cm.choices[ci++]) {
        case HChoice::AsUD: out += "H(UD)"; break;
        case HChoice::AsDU: out += "H(DU)"; break;
        case HChoice::AsHH: out += "H(HH)"; break;
      }
    }
  }
  return out.empty() ? "(empty)" : out;
}

void run_count(Options& opt, const std::string& kind, long k, const std::string& range,
               const std::string& wname, const std::string& level, const std::string& down,
               const std::string& cseq) {
  auto [lo, hi] = parse_range(range);
  if (lo < 0) throw std::domain_error("count: n must be nonnegative");
  std::vector<Row> rows;
  for (long n = lo; n <= hi; ++n) {
    std::size_t un = static_cast<std::size_t>(n);
    Row row{n, {}, true};
    if (kind == "ncp") {
      if (k < 0) throw std::domain_error("count ncp: --k must be >= 0");
      row.values.emplace_back("count",
                              Rational(static_cast<long>(count_nc(k, un, opt.max_partition_n))));
    } else if (kind == "motzkin") {
      if (un > opt.max_order)
        throw std::domain_error("count motzkin: n exceeds the order bound " +
                                std::to_string(opt.max_order));
      row.values.emplace_back("sum", motzkin_sum(un, motzkin_weights_from(wname, level, down)));
    } else if (kind == "dyck") {
      if (un > opt.max_order)
        throw std::domain_error("count dyck: n exceeds the order bound " +
                                std::to_string(opt.max_order));
      row.values.emplace_back("sum", dyck_sum(un, dyck_weights_from(wname, cseq)));
    } else if (kind == "schroder-even") {
      if (un > opt.max_order)
        throw std::domain_error("count schroder-even: n exceeds the order bound " +
                                std::to_string(opt.max_order));
      row.values.emplace_back("count", Rational(sch_even_count(un)));
    } else {
      throw std::domain_error("count: unknown kind '" + kind + "'");
    }
    rows.push_back(std::move(row));
  }
  print_rows(opt, rows);
}

void run_expand(Options& opt, const std::string& kind, std::size_t order,
                std::optional<std::size_t> invert, const std::string& wname,
                const std::string& cseq, const std::string& aseq, const std::string& bseq) {
  if (order > opt.max_order)
    throw std::domain_error("expand: order exceeds the bound " + std::to_string(opt.max_order));
  TruncatedSeries s = TruncatedSeries::one(0);
  if (kind == "gf") {
    s = nc2_series(order);
  } else if (kind == "s") {
    DyckWeights w = dyck_weights_from(wname, cseq);
    s = expand(SFraction{w.down}, order);
  } else if (kind == "j") {
    MotzkinWeights w = [&] {
      if (wname.empty() && !aseq.empty() && !bseq.empty())
        return MotzkinWeights{parse_seq(aseq), parse_seq(bseq)};
      return motzkin_weights_from(wname, aseq, bseq);
    }();
    s = expand(JFraction{w.level, w.down}, order);
  } else {
    throw std::domain_error("expand: unknown kind '" + kind + "'");
  }

  std::vector<Row> rows;
  if (invert) {
    if (*invert >= order)
      throw std::domain_error("expand --invert: need fewer coefficients than the order");
    std::vector<Rational> cs = sfraction_coefficients(s, *invert);
    for (std::size_t i = 0; i < cs.size(); ++i)
      rows.push_back({static_cast<long>(i), {{"c", cs[i]}}, true});
  } else {
    for (std::size_t i = 0; i <= order; ++i)
      rows.push_back({static_cast<long>(i), {{"coeff", s[i]}}, true});
  }
  print_rows(opt, rows);
}

void print_checks(Options& opt, const std::vector<CheckResult>& checks) {
  if (opt.mode == Mode::Json) {
    json out = json::array();
    for (const CheckResult& c : checks)
      out.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    std::cout << out.dump() << "\n";
  } else {
    for (const CheckResult& c : checks) {
      if (c.ok)
        std::cout << "ok    " << c.name << "\n";
      else
        std::cout << "FAIL  " << c.name << ": " << c.detail << "\n";
    }
  }
  for (const CheckResult& c : checks)
    if (!c.ok) opt.exit_code = 1;
}

void run_verify(Options& opt, const std::string& suite, std::optional<std::size_t> max_n) {
  auto cap = [&](std::size_t dflt) { return max_n ? std::min(dflt, *max_n) : dflt; };
  std::vector<CheckResult> checks;
  auto append = [&](std::vector<CheckResult> more) {
    checks.insert(checks.end(), more.begin(), more.end());
  };
  bool all = suite == "all";
  if (all || suite == "lemma22")
    append(verify_weight_identities(max_n.value_or(50), static_cast<long>(cap(40))));
  if (all || suite == "prop21") append(verify_contraction(cap(16), 100, cap(6), 12345));
  if (all || suite == "thm24") append(verify_sfraction_formula(cap(18), cap(30)));
  if (all || suite == "ladder") {
    std::size_t order = max_n ? std::max<std::size_t>(1, std::min<std::size_t>(30, 3 * *max_n)) : 30;
    append(verify_ladder(static_cast<long>(cap(8)), order));
  }
  if (all || suite == "chain") {
    std::size_t n = cap(10);
    append(verify_chain(n));
    append(verify_nc_crosschecks(std::min(n, opt.max_partition_n)));
    append(verify_integrality(3 * n));
  }
  if (checks.empty() && !all)
    throw std::domain_error("verify: unknown suite '" + suite + "'");
  print_checks(opt, checks);
  if (opt.exit_code == 0 && opt.mode == Mode::Human)
    std::cout << "all " << checks.size() << " checks passed\n";
}

void run_bijection(Options& opt, const std::string& kind, std::size_t n) {
  if (2 * n > opt.max_path_len)
    throw std::domain_error("bijection: path length exceeds the bound " +
                            std::to_string(opt.max_path_len));
  struct Line {
    std::string from, to;
    bool ok;
  };
  std::vector<Line> lines;
  if (kind == "contract") {
    for_each_path(Flavor::Dyck, n, [&](const LatticePath& p) {
      LabeledMotzkinPath lm = contract_dyck(p);
      lines.push_back({p.str(), labeled_str(lm), expand_motzkin(lm) == p});
    });
  } else if (kind == "strip") {
    if (n == 0) throw std::domain_error("bijection strip: needs n >= 1");
    for_each_path(Flavor::Dyck, n, [&](const LatticePath& p) {
      lines.push_back({p.str(), labeled_str(strip_contract(p)), true});
    });
  } else if (kind == "schroder") {
    for_each_path(Flavor::Motzkin, n, [&](const LatticePath& m) {
      for (const ChoiceMotzkinPath& cm : all_choices(m)) {
        LatticePath s = to_schroder(cm);
        lines.push_back({choice_str(cm), s.str(), from_schroder(s) == cm});
      }
    });
  } else if (kind == "peaks") {
    for_each_path(Flavor::Schroder, n, [&](const LatticePath& p) {
      if (has_even_peak(p)) return;
      LatticePath q = odd_h_to_peaks(p);
      lines.push_back({p.str(), q.str(), even_peaks_to_h(q) == p});
    });
  } else {
    throw std::domain_error("bijection: unknown kind '" + kind + "'");
  }

  if (opt.mode == Mode::Json) {
    json out = json::array();
    for (const Line& l : lines)
      out.push_back({{"from", l.from}, {"to", l.to}, {"ok", l.ok}});
    std::cout << out.dump() << "\n";
  } else {
    for (const Line& l : lines) {
      std::cout << (l.from.empty() ? "(empty)" : l.from) << " -> "
                << (l.to.empty() ? "(empty)" : l.to);
      if (!l.ok) std::cout << "  MISMATCH";
      std::cout << "\n";
    }
  }
  for (const Line& l : lines)
    if (!l.ok) opt.exit_code = 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact enumeration of distant noncrossing partitions, weighted lattice "
               "paths and their continued fractions"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json_mode = false, csv_mode = false;
  auto* json_opt = app.add_flag("--json", json_mode, "machine-readable JSON output");
  auto* csv_opt = app.add_flag("--csv", csv_mode, "CSV output");
  json_opt->excludes(csv_opt);
  auto sync_mode = [&] {
    opt.mode = json_mode ? Mode::Json : csv_mode ? Mode::Csv : Mode::Human;
  };
  app.add_option("--max-partition-n", opt.max_partition_n,
                 "largest ground set for partition enumeration")
      ->envname("NCPATH_MAX_PARTITION_N");
  app.add_option("--max-path-len", opt.max_path_len,
                 "largest x-length for path enumeration")
      ->envname("NCPATH_MAX_PATH_LEN");
  app.add_option("--max-order", opt.max_order, "largest series truncation order")
      ->envname("NCPATH_MAX_ORDER");

  auto* count = app.add_subcommand("count", "exact counts and weighted path sums");
  std::string count_kind, count_range = "0", count_w, count_b, count_l, count_c;
  long count_k = -1;
  count->add_option("kind", count_kind, "ncp | motzkin | dyck | schroder-even")->required();
  count->add_option("--k", count_k, "distance parameter for ncp");
  count->add_option("--n", count_range, "index or range A..B");
  count->add_option("--weights", count_w, "named weight system");
  count->add_option("--b", count_b, "inline Motzkin level weights, e.g. 1,2,3,3...");
  count->add_option("--lambda", count_l, "inline Motzkin down weights");
  count->add_option("--c", count_c, "inline Dyck down weights");
  count->callback([&] {
    sync_mode();
    run_count(opt, count_kind, count_k, count_range, count_w, count_b, count_l, count_c);
  });

  auto* expand_cmd = app.add_subcommand("expand", "series from fractions and closed forms");
  std::string ex_kind, ex_w, ex_c, ex_a, ex_beta;
  std::size_t ex_order = 10;
  std::optional<std::size_t> ex_invert;
  expand_cmd->add_option("kind", ex_kind, "s | j | gf")->required();
  expand_cmd->add_option("--order", ex_order, "truncation order");
  expand_cmd->add_option("--invert", ex_invert,
                         "recover this many S-fraction coefficients from the series");
  expand_cmd->add_option("--weights", ex_w, "named weight system");
  expand_cmd->add_option("--c", ex_c, "inline S-fraction coefficients");
  expand_cmd->add_option("--a", ex_a, "inline J-fraction diagonal");
  expand_cmd->add_option("--beta", ex_beta, "inline J-fraction subdiagonal");
  expand_cmd->callback([&] {
    sync_mode();
    run_expand(opt, ex_kind, ex_order, ex_invert, ex_w, ex_c, ex_a, ex_beta);
  });

  auto* verify_cmd = app.add_subcommand("verify", "identity verification suites");
  std::string suite;
  std::optional<std::size_t> verify_max_n;
  verify_cmd->add_option("suite", suite, "lemma22 | prop21 | thm24 | ladder | chain | all")
      ->required();
  verify_cmd->add_option("--max-n", verify_max_n, "cap the ranges of the suite");
  verify_cmd->callback([&] {
    sync_mode();
    run_verify(opt, suite, verify_max_n);
  });

  auto* bij = app.add_subcommand("bijection", "step-rewriting round-trip demos");
  std::string bij_kind;
  std::size_t bij_n = 2;
  bij->add_option("kind", bij_kind, "contract | strip | schroder | peaks")->required();
  bij->add_option("--n", bij_n, "size parameter (paths of length 2n)");
  bij->callback([&] {
    sync_mode();
    run_bijection(opt, bij_kind, bij_n);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ExtractionError& e) {
    std::cerr << "error: " << e.what() << " (depth reached: " << e.depth() << ")\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return opt.exit_code;
}
