#include "crofton/knots.hpp"

#include <vector>

namespace crofton {

ResolutionTrace descending_resolution(const KnotDiagram& k) {
    ResolutionTrace tr;
    tr.original = chord_diagram(k);
    const int n = k.crossing_count();
    std::vector<bool> seen(n + 1, false), flip(n + 1, false);
    for (const auto& e : k.entries) {
        if (!seen[e.label]) {
            seen[e.label] = true;
            flip[e.label] = e.pass == Pass::under;
        }
    }
    std::vector<GaussEntry> entries = k.entries;
    for (auto& e : entries) {
        if (!flip[e.label]) continue;
        e.pass = e.pass == Pass::over ? Pass::under : Pass::over;
        e.sign = -e.sign;
    }
    for (int c = 0; c < n; ++c)
        if (flip[c + 1]) tr.flipped.push_back(c);
    tr.descending_diagram = make_knot_diagram(std::move(entries));
    tr.descending = chord_diagram(tr.descending_diagram);
    return tr;
}

Rational v2_chords(const KnotDiagram& k) {
    ResolutionTrace tr = descending_resolution(k);
    PairCounts a = signed_pair_counts(tr.original);
    PairCounts u = signed_pair_counts(tr.descending);
    return Rational(a.c_plus - a.c_minus, 4) - Rational(u.c_plus - u.c_minus, 4) - Rational(1, 24);
}

std::vector<Rational> linking_numbers(const SignedChordDiagram& d) {
    std::vector<Rational> l;
    l.reserve(d.size());
    for (int i = 0; i < d.size(); ++i) l.emplace_back(chord_degree(d, i), 2);
    return l;
}

// (1/4) sum (l_i - l_i^u) - 1/24
Rational v2_linking(const KnotDiagram& k) {
    ResolutionTrace tr = descending_resolution(k);
    std::vector<Rational> l = linking_numbers(tr.original);
    std::vector<Rational> lu = linking_numbers(tr.descending);
    Rational sum;
    for (std::size_t i = 0; i < l.size(); ++i) sum += l[i] - lu[i];
    return Rational(1, 4) * sum - Rational(1, 24);
}

V2Bounds check_v2_bounds(const KnotDiagram& k) {
    V2Bounds b;
    b.v2 = v2_chords(k);
    b.n = k.crossing_count();
    b.bound_ok = abs(b.v2) <= Rational(static_cast<std::int64_t>(b.n) * (b.n - 1), 4) + Rational(1, 24);
    b.integrality_ok = (b.v2 + Rational(1, 24)).is_integer();
    return b;
}

KnotDiagram reverse_orientation(const KnotDiagram& k) {
    std::vector<GaussEntry> e(k.entries.rbegin(), k.entries.rend());
    return make_knot_diagram(std::move(e));
}

KnotDiagram rotate_basepoint(const KnotDiagram& k, int shift) {
    const int len = static_cast<int>(k.entries.size());
    if (len == 0) return k;
    shift = ((shift % len) + len) % len;
    std::vector<GaussEntry> e;
    e.reserve(len);
    for (int i = 0; i < len; ++i) e.push_back(k.entries[(i + shift) % len]);
    return make_knot_diagram(std::move(e));
}

}  // namespace crofton
