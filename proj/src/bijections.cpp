#include "ncpath/bijections.hpp"

#include <stdexcept>
#include <string>

namespace ncpath {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

LabeledMotzkinPath contract_steps(const std::vector<Step>& steps, std::size_t begin,
                                  std::size_t end) {
  LabeledMotzkinPath out{{Flavor::Motzkin, {}}, {}};
  for (std::size_t i = begin; i + 2 <= end; i += 2) {
    Step a = steps[i], b = steps[i + 1];
    if (a == Step::Up && b == Step::Up) {
      out.path.steps.push_back(Step::Up);
    } else if (a == Step::Down && b == Step::Down) {
      out.path.steps.push_back(Step::Down);
    } else if (a == Step::Up && b == Step::Down) {
      out.path.steps.push_back(Step::H);
      out.labels.push_back(HLabel::FromUD);
    } else {
      out.path.steps.push_back(Step::H);
      out.labels.push_back(HLabel::FromDU);
    }
  }
  return out;
}

}  // namespace

LabeledMotzkinPath contract_dyck(const LatticePath& dyck) {
  require(dyck.flavor == Flavor::Dyck && dyck.valid(),
          "contract_dyck: needs a valid Dyck path");
  return contract_steps(dyck.steps, 0, dyck.steps.size());
}

LatticePath expand_motzkin(const LabeledMotzkinPath& m) {
  require(m.path.flavor == Flavor::Motzkin && m.path.valid(),
          "expand_motzkin: needs a valid Motzkin path");
  LatticePath out{Flavor::Dyck, {}};
  std::size_t li = 0;
  int h = 0;
  for (Step s : m.path.steps) {
    switch (s) {
      case Step::Up:
        ++h;
        out.steps.push_back(Step::Up);
        out.steps.push_back(Step::Up);
        break;
      case Step::Down:
        --h;
        out.steps.push_back(Step::Down);
        out.steps.push_back(Step::Down);
        break;
      case Step::H: {
        require(li < m.labels.size(), "expand_motzkin: missing label");
        HLabel l = m.labels[li++];
        require(!(h == 0 && l == HLabel::FromDU),
                "expand_motzkin: FromDU label on a height-0 step");
        if (l == HLabel::FromUD) {
          out.steps.push_back(Step::Up);
          out.steps.push_back(Step::Down);
        } else {
          out.steps.push_back(Step::Down);
          out.steps.push_back(Step::Up);
        }
        break;
      }
      case Step::HH:
        require(false, "expand_motzkin: HH step in a Motzkin path");
    }
  }
  require(li == m.labels.size(), "expand_motzkin: too many labels");
  return out;
}

LabeledMotzkinPath strip_contract(const LatticePath& dyck) {
  require(dyck.flavor == Flavor::Dyck && dyck.valid(),
          "strip_contract: needs a valid Dyck path");
  require(!dyck.steps.empty(), "strip_contract: needs length >= 2");
  // First step is U and last is D in any nonempty Dyck path.
  return contract_steps(dyck.steps, 1, dyck.steps.size() - 1);
}

Rational labeled_weight(const LabeledMotzkinPath& m, const DyckWeights& c, long shift) {
  Rational acc(1);
  std::size_t li = 0;
  long h = 0;
  for (Step s : m.path.steps) {
    switch (s) {
      case Step::Up:
        ++h;
        break;
      case Step::Down:
        --h;
        acc *= c.at(2 * h + 1 + shift) * c.at(2 * h + shift);
        break;
      case Step::H:
        if (m.labels[li++] == HLabel::FromUD)
          acc *= c.at(2 * h + shift);
        else
          acc *= c.at(2 * h - 1 + shift);
        break;
      case Step::HH:
        require(false, "labeled_weight: HH step in a Motzkin path");
    }
  }
  return acc;
}

std::vector<LabeledMotzkinPath> all_labelings(const LatticePath& motzkin) {
  std::vector<int> heights = motzkin.end_heights();
  std::vector<int> h_heights;
  for (std::size_t i = 0; i < motzkin.steps.size(); ++i)
    if (motzkin.steps[i] == Step::H) h_heights.push_back(heights[i]);

  std::vector<LabeledMotzkinPath> out;
  std::vector<HLabel> cur(h_heights.size(), HLabel::FromUD);
  auto emit = [&](auto&& self, std::size_t i) -> void {
    if (i == cur.size()) {
      out.push_back({motzkin, cur});
      return;
    }
    cur[i] = HLabel::FromUD;
    self(self, i + 1);
    if (h_heights[i] > 0) {
      cur[i] = HLabel::FromDU;
      self(self, i + 1);
    }
  };
  emit(emit, 0);
  return out;
}

std::vector<ChoiceMotzkinPath> all_choices(const LatticePath& motzkin) {
  std::vector<int> heights = motzkin.end_heights();
  std::vector<int> h_heights;
  for (std::size_t i = 0; i < motzkin.steps.size(); ++i)
    if (motzkin.steps[i] == Step::H) h_heights.push_back(heights[i]);

  std::vector<ChoiceMotzkinPath> out;
  std::vector<HChoice> cur(h_heights.size(), HChoice::AsUD);
  auto emit = [&](auto&& self, std::size_t i) -> void {
    if (i == cur.size()) {
      out.push_back({motzkin, cur});
      return;
    }
    cur[i] = HChoice::AsUD;
    self(self, i + 1);
    if (h_heights[i] > 0) {
      cur[i] = HChoice::AsDU;
      self(self, i + 1);
    }
    cur[i] = HChoice::AsHH;
    self(self, i + 1);
  };
  emit(emit, 0);
  return out;
}

LatticePath to_schroder(const ChoiceMotzkinPath& m) {
  require(m.path.flavor == Flavor::Motzkin && m.path.valid(),
          "to_schroder: needs a valid Motzkin path");
  LatticePath out{Flavor::Schroder, {}};
  std::size_t ci = 0;
  int h = 0;
  for (Step s : m.path.steps) {
    switch (s) {
      case Step::Up:
        ++h;
        out.steps.push_back(Step::Up);
        out.steps.push_back(Step::Up);
        break;
      case Step::Down:
        --h;
        out.steps.push_back(Step::Down);
        out.steps.push_back(Step::Down);
        break;
      case Step::H: {
        require(ci < m.choices.size(), "to_schroder: missing choice");
        HChoice c = m.choices[ci++];
        require(!(h == 0 && c == HChoice::AsDU),
                "to_schroder: AsDU choice on a height-0 step");
        if (c == HChoice::AsUD) {
          out.steps.push_back(Step::Up);
          out.steps.push_back(Step::Down);
        } else if (c == HChoice::AsDU) {
          out.steps.push_back(Step::Down);
          out.steps.push_back(Step::Up);
        } else {
          out.steps.push_back(Step::HH);
        }
        break;
      }
      case Step::HH:
        require(false, "to_schroder: HH step in a Motzkin path");
    }
  }
  require(ci == m.choices.size(), "to_schroder: too many choices");
  return out;
}

ChoiceMotzkinPath from_schroder(const LatticePath& sch) {
  require(sch.flavor == Flavor::Schroder && sch.valid(),
          "from_schroder: needs a valid Schroder path");
  require(is_sch_even(sch), "from_schroder: a horizontal step sits at odd height");
  ChoiceMotzkinPath out{{Flavor::Motzkin, {}}, {}};
  std::size_t i = 0;
  while (i < sch.steps.size()) {
    Step a = sch.steps[i];
    if (a == Step::HH) {
      out.path.steps.push_back(Step::H);
      out.choices.push_back(HChoice::AsHH);
      i += 1;
      continue;
    }
    // A unit step must be followed by another unit step inside the window.
    if (i + 1 >= sch.steps.size() || sch.steps[i + 1] == Step::HH)
      throw std::domain_error(
          "from_schroder: horizontal step straddles the window at step " +
          std::to_string(i + 1));
    Step b = sch.steps[i + 1];
    if (a == Step::Up && b == Step::Up) {
      out.path.steps.push_back(Step::Up);
    } else if (a == Step::Down && b == Step::Down) {
      out.path.steps.push_back(Step::Down);
    } else if (a == Step::Up && b == Step::Down) {
      out.path.steps.push_back(Step::H);
      out.choices.push_back(HChoice::AsUD);
    } else {
      out.path.steps.push_back(Step::H);
      out.choices.push_back(HChoice::AsDU);
    }
    i += 2;
  }
  return out;
}

LatticePath odd_h_to_peaks(const LatticePath& sch) {
  require(sch.flavor == Flavor::Schroder && sch.valid(),
          "odd_h_to_peaks: needs a valid Schroder path");
  require(!has_even_peak(sch), "odd_h_to_peaks: input has a peak at even height");
  LatticePath out{Flavor::Schroder, {}};
  int h = 0;
  for (Step s : sch.steps) {
    if (s == Step::Up) ++h;
    if (s == Step::Down) --h;
    if (s == Step::HH && h % 2 != 0) {
      out.steps.push_back(Step::Up);
      out.steps.push_back(Step::Down);
    } else {
      out.steps.push_back(s);
    }
  }
  return out;
}

LatticePath even_peaks_to_h(const LatticePath& sch) {
  require(sch.flavor == Flavor::Schroder && sch.valid(),
          "even_peaks_to_h: needs a valid Schroder path");
  require(is_sch_even(sch), "even_peaks_to_h: input outside the even-horizontal set");
  LatticePath out{Flavor::Schroder, {}};
  int h = 0;
  std::size_t i = 0;
  while (i < sch.steps.size()) {
    Step s = sch.steps[i];
    if (s == Step::Up && i + 1 < sch.steps.size() && sch.steps[i + 1] == Step::Down &&
        (h + 1) % 2 == 0) {
      out.steps.push_back(Step::HH);  // peak apex at h+1 (even), HH lands at odd h
      i += 2;
      continue;
    }
    if (s == Step::Up) ++h;
    if (s == Step::Down) --h;
    out.steps.push_back(s);
    i += 1;
  }
  return out;
}

}  // namespace ncpath
