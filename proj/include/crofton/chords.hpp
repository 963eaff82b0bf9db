#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "crofton/codecs.hpp"
#include "crofton/rational.hpp"

namespace crofton {

// Perfect matching on the cyclic positions 0..2n-1. Chords are numbered
// 0..n-1 by their first endpoint, and endpoints[c][0] < endpoints[c][1].
struct ChordMatching {
    std::vector<std::array<int, 2>> endpoints;
    std::vector<int> chord_at;  // position -> chord

    int size() const { return static_cast<int>(endpoints.size()); }
    int partner(int pos) const;
    bool operator==(const ChordMatching&) const = default;
};

ChordMatching make_matching(const std::vector<std::array<int, 2>>& pairs);

struct SignedChordDiagram {
    ChordMatching matching;
    std::vector<int> signs;  // chord -> +1 / -1

    int size() const { return matching.size(); }
    bool operator==(const SignedChordDiagram&) const = default;
};

SignedChordDiagram make_signed_diagram(ChordMatching m, std::vector<int> signs);
SignedChordDiagram chord_diagram(const KnotDiagram& k);
// Moves the basepoint forward by `shift` positions.
SignedChordDiagram rotate_basepoint(const SignedChordDiagram& d, int shift);

bool chords_intersect(const SignedChordDiagram& d, int a, int b);

struct PairCounts {
    std::int64_t c_plus = 0;
    std::int64_t c_minus = 0;

    bool operator==(const PairCounts&) const = default;
};

PairCounts signed_pair_counts(const SignedChordDiagram& d);
int chord_degree(const SignedChordDiagram& d, int i);
Rational ix_limit(const SignedChordDiagram& d);

}  // namespace crofton
