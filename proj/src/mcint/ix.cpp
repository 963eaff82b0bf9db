#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cells.hpp"
#include "crofton/errors.hpp"
#include "crofton/mcint.hpp"
#include "tags.hpp"

namespace crofton {

namespace detail {

std::vector<double> separations(const SpaceCurve& g, Execution exec) {
    const std::size_t n = g.size();
    std::vector<double> out(n);
    auto one = [&](std::size_t j) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            if (touching(i, j, n)) continue;
            best = std::min(best, segment_distance(g.vertex(j), g.vertex(j + 1), g.vertex(i), g.vertex(i + 1)));
        }
        out[j] = best;
    };
    const long long m = static_cast<long long>(n);
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (long long j = 0; j < m; ++j) one(static_cast<std::size_t>(j));
    } else {
        for (long long j = 0; j < m; ++j) one(static_cast<std::size_t>(j));
    }
    return out;
}

}  // namespace detail

namespace {

using detail::Cells;

constexpr double kUniformShare = 0.05;
constexpr std::size_t kMaxCells = 1536;

// G(s,t) for s < t on segments i, j; zero on a shared or touching segment.
double chord_form(const SpaceCurve& g, double s, double t, std::size_t i, std::size_t j) {
    if (detail::touching(i, j, g.size())) return 0;
    const Vec3 d = g.point_at(t) - g.point_at(s);
    const double r = norm(d);
    return triple(d, g.velocity(j), g.velocity(i)) / (r * r * r);
}

// Proposal over ordered pairs s < t: cell-pair masses of |G| mixed with the uniform law.
class PairProposal {
public:
    PairProposal(const SpaceCurve& g, Execution exec) {
        cells_ = detail::make_cells(g, detail::separations(g, exec), kMaxCells);
        const std::size_t c = cells_.size();
        mass_.assign(c * c, 0.0);
        const long long cc = static_cast<long long>(c);
        auto row = [&](std::size_t a) {
            for (std::size_t b = a + 1; b < c; ++b) {
                if (detail::touching(cells_.seg[a], cells_.seg[b], g.size())) continue;
                double acc = 0;
                for (double ga : detail::kGauss)
                    for (double gb : detail::kGauss) {
                        const double s = cells_.lo[a] + ga * (cells_.hi[a] - cells_.lo[a]);
                        const double t = cells_.lo[b] + gb * (cells_.hi[b] - cells_.lo[b]);
                        acc += std::abs(chord_form(g, s, t, cells_.seg[a], cells_.seg[b]));
                    }
                mass_[a * c + b] = 0.25 * acc * (cells_.hi[a] - cells_.lo[a]) * (cells_.hi[b] - cells_.lo[b]);
            }
        };
        if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
            for (long long a = 0; a < cc; ++a) row(static_cast<std::size_t>(a));
        } else {
            for (long long a = 0; a < cc; ++a) row(static_cast<std::size_t>(a));
        }
        std::vector<double> w;
        for (std::size_t a = 0; a < c; ++a)
            for (std::size_t b = a + 1; b < c; ++b)
                if (mass_[a * c + b] > 0) {
                    pairs_.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
                    w.push_back(mass_[a * c + b]);
                }
        table_ = AliasTable(w);
        share_ = table_.empty() ? 1.0 : kUniformShare;
    }

    void draw(Stream& s, double& lo, double& hi) const {
        if (share_ >= 1.0 || s.uniform() < share_) {
            lo = s.uniform();
            hi = s.uniform();
            if (lo > hi) std::swap(lo, hi);
            return;
        }
        const auto [a, b] = pairs_[table_.sample(s)];
        lo = cells_.lo[a] + s.uniform() * (cells_.hi[a] - cells_.lo[a]);
        hi = cells_.lo[b] + s.uniform() * (cells_.hi[b] - cells_.lo[b]);
    }

    double density(double lo, double hi) const {
        double q = 2.0 * share_;
        if (share_ < 1.0) {
            const std::size_t a = cells_.locate(lo), b = cells_.locate(hi);
            if (a < b) {
                const double m = mass_[a * cells_.size() + b];
                q += (1 - share_) * m / (table_.total() * (cells_.hi[a] - cells_.lo[a]) * (cells_.hi[b] - cells_.lo[b]));
            }
        }
        return q;
    }

    const Cells& cells() const { return cells_; }

private:
    Cells cells_;
    std::vector<double> mass_;
    std::vector<std::array<std::uint32_t, 2>> pairs_;
    AliasTable table_;
    double share_ = 1.0;
};

const double kIxScale = 1.0 / (16 * std::numbers::pi * std::numbers::pi);

}  // namespace

McEstimate mc_ix(const SpaceCurve& g, const McConfig& cfg, IxMethod method) {
    validate(cfg);
    if (g.is_horizontal()) return {0.0, 0.0, cfg.samples, cfg.seed};
    if (!(g.min_nonadjacent_distance() > 1e-9 * g.diameter()))
        throw PreconditionError("curve is not embedded: non-adjacent segments meet");

    if (method == IxMethod::uniform) {
        return run_strata(cfg, tags::ix_uniform, [&](Stream& s) {
            double x[4] = {s.uniform(), s.uniform(), s.uniform(), s.uniform()};
            std::sort(x, x + 4);
            std::size_t k[4];
            for (int i = 0; i < 4; ++i) k[i] = g.segment_at(x[i]);
            const double f = chord_form(g, x[0], x[2], k[0], k[2]) * chord_form(g, x[1], x[3], k[1], k[3]);
            return kIxScale * f / 24.0;
        });
    }

    const PairProposal prop(g, cfg.exec);
    return run_strata(cfg, tags::ix, [&](Stream& s) {
        double s1, t1, s2, t2;
        prop.draw(s, s1, t1);
        prop.draw(s, s2, t2);
        const bool interleaved = (s1 < s2 && s2 < t1 && t1 < t2) || (s2 < s1 && s1 < t2 && t2 < t1);
        if (!interleaved) return 0.0;
        const double f = chord_form(g, s1, t1, g.segment_at(s1), g.segment_at(t1)) *
                         chord_form(g, s2, t2, g.segment_at(s2), g.segment_at(t2));
        if (f == 0) return 0.0;
        return kIxScale * f / (2 * prop.density(s1, t1) * prop.density(s2, t2));
    });
}

}  // namespace crofton
