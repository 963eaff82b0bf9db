#include "crofton/chords.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace crofton {

namespace {

void check_chord(const SignedChordDiagram& d, int c) {
    if (c < 0 || c >= d.size()) throw std::out_of_range("chord " + std::to_string(c) + " out of range");
}

// Interleaving on the circle: exactly one endpoint of b strictly inside (a0, a1).
bool interleave(const std::array<int, 2>& a, const std::array<int, 2>& b) {
    bool in0 = a[0] < b[0] && b[0] < a[1];
    bool in1 = a[0] < b[1] && b[1] < a[1];
    return in0 != in1;
}

}  // namespace

int ChordMatching::partner(int pos) const {
    const auto& e = endpoints.at(chord_at.at(pos));
    return e[0] == pos ? e[1] : e[0];
}

ChordMatching make_matching(const std::vector<std::array<int, 2>>& pairs) {
    const int n = static_cast<int>(pairs.size());
    std::vector<int> owner(2 * n, -1);
    for (int c = 0; c < n; ++c) {
        for (int p : pairs[c]) {
            if (p < 0 || p >= 2 * n) throw std::invalid_argument("chord endpoint out of range");
            if (owner[p] != -1) throw std::invalid_argument("endpoint used twice");
            owner[p] = c;
        }
        if (pairs[c][0] == pairs[c][1]) throw std::invalid_argument("degenerate chord");
    }
    ChordMatching m;
    m.chord_at.assign(2 * n, -1);
    std::vector<int> relabel(n, -1);
    for (int p = 0; p < 2 * n; ++p) {
        int c = owner[p];
        if (relabel[c] == -1) {
            relabel[c] = static_cast<int>(m.endpoints.size());
            m.endpoints.push_back({p, -1});
        } else {
            m.endpoints[relabel[c]][1] = p;
        }
        m.chord_at[p] = relabel[c];
    }
    return m;
}

SignedChordDiagram make_signed_diagram(ChordMatching m, std::vector<int> signs) {
    if (static_cast<int>(signs.size()) != m.size()) throw std::invalid_argument("one sign per chord required");
    for (int s : signs)
        if (s != 1 && s != -1) throw std::invalid_argument("chord signs must be +1 or -1");
    return SignedChordDiagram{std::move(m), std::move(signs)};
}

SignedChordDiagram chord_diagram(const KnotDiagram& k) {
    const int n = k.crossing_count();
    std::vector<std::array<int, 2>> pairs(n, {-1, -1});
    std::vector<int> signs(n, 1);
    for (int p = 0; p < 2 * n; ++p) {
        const auto& e = k.entries[p];
        auto& slot = pairs[e.label - 1];
        (slot[0] == -1 ? slot[0] : slot[1]) = p;
        signs[e.label - 1] = e.sign;
    }
    // Labels are already in first-appearance order, so chord c == label c+1.
    return make_signed_diagram(make_matching(pairs), std::move(signs));
}

SignedChordDiagram rotate_basepoint(const SignedChordDiagram& d, int shift) {
    const int n = d.size();
    if (n == 0) return d;
    const int len = 2 * n;
    shift = ((shift % len) + len) % len;
    std::vector<std::array<int, 2>> pairs(n);
    for (int c = 0; c < n; ++c)
        for (int j = 0; j < 2; ++j) pairs[c][j] = ((d.matching.endpoints[c][j] - shift) % len + len) % len;
    ChordMatching m = make_matching(pairs);
    std::vector<int> signs(n);
    for (int c = 0; c < n; ++c) signs[m.chord_at[pairs[c][0]]] = d.signs[c];
    return make_signed_diagram(std::move(m), std::move(signs));
}

bool chords_intersect(const SignedChordDiagram& d, int a, int b) {
    check_chord(d, a);
    check_chord(d, b);
    if (a == b) throw std::invalid_argument("chords_intersect needs two distinct chords");
    return interleave(d.matching.endpoints[a], d.matching.endpoints[b]);
}

PairCounts signed_pair_counts(const SignedChordDiagram& d) {
    PairCounts pc;
    const int n = d.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!interleave(d.matching.endpoints[a], d.matching.endpoints[b])) continue;
            (d.signs[a] * d.signs[b] > 0 ? pc.c_plus : pc.c_minus) += 1;
        }
    return pc;
}

int chord_degree(const SignedChordDiagram& d, int i) {
    check_chord(d, i);
    int deg = 0;
    for (int j = 0; j < d.size(); ++j)
        if (j != i && interleave(d.matching.endpoints[i], d.matching.endpoints[j])) deg += d.signs[i] * d.signs[j];
    return deg;
}

Rational ix_limit(const SignedChordDiagram& d) {
    PairCounts pc = signed_pair_counts(d);
    return Rational(d.size(), 16) + Rational(pc.c_plus - pc.c_minus, 4);
}

}  // namespace crofton
