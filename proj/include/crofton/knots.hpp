#pragma once

#include <vector>

#include "crofton/chords.hpp"
#include "crofton/codecs.hpp"
#include "crofton/rational.hpp"

namespace crofton {

struct ResolutionTrace {
    SignedChordDiagram original;
    SignedChordDiagram descending;
    std::vector<int> flipped;  // chords whose crossing was changed, ascending
    KnotDiagram descending_diagram;
};

// Changes every crossing whose first visit from the basepoint is an under-pass.
ResolutionTrace descending_resolution(const KnotDiagram& k);

Rational v2_chords(const KnotDiagram& k);

// l_i = chord_degree(d, i) / 2.
std::vector<Rational> linking_numbers(const SignedChordDiagram& d);
Rational v2_linking(const KnotDiagram& k);

struct V2Bounds {
    Rational v2;
    int n = 0;
    bool bound_ok = false;
    bool integrality_ok = false;
};

V2Bounds check_v2_bounds(const KnotDiagram& k);

KnotDiagram reverse_orientation(const KnotDiagram& k);
KnotDiagram rotate_basepoint(const KnotDiagram& k, int shift);

}  // namespace crofton
