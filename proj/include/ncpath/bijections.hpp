#pragma once

#include <cstdint>
#include <vector>

#include "ncpath/paths.hpp"
#include "ncpath/rational.hpp"
#include "ncpath/weights.hpp"

namespace ncpath {

// Where a horizontal step came from when a Dyck path is read two steps at
// a time: UD or DU.
enum class HLabel : std::uint8_t { FromUD, FromDU };

struct LabeledMotzkinPath {
  LatticePath path;            // flavor Motzkin
  std::vector<HLabel> labels;  // one per H step, in step order
  friend bool operator==(const LabeledMotzkinPath& a, const LabeledMotzkinPath& b) {
    return a.path == b.path && a.labels == b.labels;
  }
};

// What a horizontal step turns into when a Motzkin path is blown up to a
// Schroder path: UD, DU or HH. At height 0 only UD and HH are possible.
enum class HChoice : std::uint8_t { AsUD, AsDU, AsHH };

struct ChoiceMotzkinPath {
  LatticePath path;             // flavor Motzkin
  std::vector<HChoice> choices;  // one per H step, in step order
  friend bool operator==(const ChoiceMotzkinPath& a, const ChoiceMotzkinPath& b) {
    return a.path == b.path && a.choices == b.choices;
  }
};

// Pairs the steps of a Dyck path of length 2n: UU->U, DD->D, UD->H(FromUD),
// DU->H(FromDU). The result has length n; an H at height 0 is always
// FromUD (a DU pair there would dip below the axis).
LabeledMotzkinPath contract_dyck(const LatticePath& dyck);

// Exact inverse of contract_dyck: U->UU, D->DD, H(FromUD)->UD,
// H(FromDU)->DU. Rejects a FromDU label on a height-0 step.
LatticePath expand_motzkin(const LabeledMotzkinPath& m);

// Drops the first and last steps of a Dyck path of length 2n (n >= 1) and
// contracts the remaining 2n-2 steps, heights measured from the shifted
// floor at 1. Unlike contract_dyck, FromDU can occur at height 0.
LabeledMotzkinPath strip_contract(const LatticePath& dyck);

// Weight carried by a labeled path, reading each Motzkin step back as its
// Dyck pair: with shift = 0 (plain contraction)
//   H(FromUD) at height i -> c_{2i},  H(FromDU) at i -> c_{2i-1},
//   D at i -> c_{2i+1} c_{2i},        U -> 1,
// and shift = 1 for the stripped contraction (every index one higher).
Rational labeled_weight(const LabeledMotzkinPath& m, const DyckWeights& c,
                        long shift = 0);

// All labelings valid for expand_motzkin (height-0 steps forced to FromUD).
std::vector<LabeledMotzkinPath> all_labelings(const LatticePath& motzkin);

// All choice decorations (height-0 steps restricted to {AsUD, AsHH}).
std::vector<ChoiceMotzkinPath> all_choices(const LatticePath& motzkin);

// U->UU, D->DD, H->(UD | DU | HH) per the choice; the image is a Schroder
// path of length 2n with every HH at even height.
LatticePath to_schroder(const ChoiceMotzkinPath& m);

// Exact inverse of to_schroder: reads two x-units at a time, aligned to
// even positions. Rejects paths outside the HH-at-even-height set.
ChoiceMotzkinPath from_schroder(const LatticePath& sch);

// Rewrites every HH at odd height into a peak UD (apex at even height).
// Defined on Schroder paths with no peak at even height; lands in the
// HH-at-even-height set.
LatticePath odd_h_to_peaks(const LatticePath& sch);

// Inverse: rewrites every even-apex peak back into an HH one level down.
LatticePath even_peaks_to_h(const LatticePath& sch);

}  // namespace ncpath
