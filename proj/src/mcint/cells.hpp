#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "crofton/space_curve.hpp"

namespace crofton::detail {

// Parameter intervals refining the segments of a curve.
struct Cells {
    std::vector<std::size_t> seg;
    std::vector<double> lo, hi;

    std::size_t size() const { return seg.size(); }
    std::size_t locate(double t) const {
        auto it = std::upper_bound(lo.begin(), lo.end(), t);
        std::size_t i = it == lo.begin() ? 0 : static_cast<std::size_t>(it - lo.begin()) - 1;
        return std::min(i, seg.size() - 1);
    }
};

// Segment j is cut into pieces no longer than half its clearance, with at most `cap` cells overall.
inline Cells make_cells(const SpaceCurve& g, const std::vector<double>& clearance, std::size_t cap) {
    const std::size_t n = g.size();
    std::vector<std::size_t> k(n);
    std::size_t total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        double want = std::ceil(g.edge_length(j) / (0.5 * clearance[j]));
        k[j] = static_cast<std::size_t>(std::clamp(want, 1.0, 64.0));
        total += k[j];
    }
    if (total > cap) {
        const double f = static_cast<double>(cap) / static_cast<double>(total);
        for (auto& kj : k) kj = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(kj * f)));
    }
    Cells c;
    for (std::size_t j = 0; j < n; ++j) {
        const double a = g.param(j), b = g.param(j + 1);
        for (std::size_t i = 0; i < k[j]; ++i) {
            c.seg.push_back(j);
            c.lo.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(k[j]));
            c.hi.push_back(i + 1 == k[j] ? b : a + (b - a) * static_cast<double>(i + 1) / static_cast<double>(k[j]));
        }
    }
    return c;
}

inline bool touching(std::size_t i, std::size_t j, std::size_t n) {
    if (i == j) return true;
    std::size_t d = i > j ? i - j : j - i;
    return d == 1 || d == n - 1;
}

// Two-point Gauss-Legendre nodes on [0, 1].
constexpr double kGauss[2] = {0.21132486540518713, 0.78867513459481287};

}  // namespace crofton::detail
