#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cells.hpp"
#include "crofton/errors.hpp"
#include "crofton/mcint.hpp"
#include "tags.hpp"

namespace crofton {

namespace {

constexpr double kUniformShare = 0.05;
constexpr std::size_t kMaxCells = 1024;

std::vector<double> clearance(const SpaceCurve& a, const SpaceCurve& b, Execution exec) {
    std::vector<double> out(a.size());
    auto one = [&](std::size_t i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < b.size(); ++j)
            best = std::min(best, segment_distance(a.vertex(i), a.vertex(i + 1), b.vertex(j), b.vertex(j + 1)));
        out[i] = best;
    };
    const long long n = static_cast<long long>(a.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (long long i = 0; i < n; ++i) one(static_cast<std::size_t>(i));
    } else {
        for (long long i = 0; i < n; ++i) one(static_cast<std::size_t>(i));
    }
    return out;
}

double gauss_form(const SpaceCurve& a, const SpaceCurve& b, double s, double t, std::size_t i, std::size_t j) {
    const Vec3 d = a.point_at(s) - b.point_at(t);
    const double r = norm(d);
    return triple(d, a.velocity(i), b.velocity(j)) / (r * r * r);
}

}  // namespace

McEstimate gauss_linking(const SpaceCurve& a, const SpaceCurve& b, const McConfig& cfg) {
    validate(cfg);
    const std::vector<double> ca = clearance(a, b, cfg.exec), cb = clearance(b, a, cfg.exec);
    const double gap = *std::min_element(ca.begin(), ca.end());
    if (!(gap > 1e-9 * std::max(a.diameter(), b.diameter())))
        throw PreconditionError("curves intersect");

    const detail::Cells xa = detail::make_cells(a, ca, kMaxCells), xb = detail::make_cells(b, cb, kMaxCells);
    const std::size_t na = xa.size(), nb = xb.size();
    std::vector<double> mass(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            double acc = 0;
            for (double gi : detail::kGauss)
                for (double gj : detail::kGauss) {
                    const double s = xa.lo[i] + gi * (xa.hi[i] - xa.lo[i]);
                    const double t = xb.lo[j] + gj * (xb.hi[j] - xb.lo[j]);
                    acc += std::abs(gauss_form(a, b, s, t, xa.seg[i], xb.seg[j]));
                }
            mass[i * nb + j] = 0.25 * acc * (xa.hi[i] - xa.lo[i]) * (xb.hi[j] - xb.lo[j]);
        }
    const AliasTable table(mass);
    const double share = table.empty() ? 1.0 : kUniformShare;
    const double scale = 1.0 / (4 * std::numbers::pi);

    return run_strata(cfg, tags::linking, [&](Stream& st) {
        double s, t;
        if (share >= 1.0 || st.uniform() < share) {
            s = st.uniform();
            t = st.uniform();
        } else {
            const std::size_t k = table.sample(st);
            const std::size_t i = k / nb, j = k % nb;
            s = xa.lo[i] + st.uniform() * (xa.hi[i] - xa.lo[i]);
            t = xb.lo[j] + st.uniform() * (xb.hi[j] - xb.lo[j]);
        }
        double q = share;
        if (share < 1.0) {
            const std::size_t i = xa.locate(s), j = xb.locate(t);
            q += (1 - share) * mass[i * nb + j] / (table.total() * (xa.hi[i] - xa.lo[i]) * (xb.hi[j] - xb.lo[j]));
        }
        return scale * gauss_form(a, b, s, t, a.segment_at(s), b.segment_at(t)) / q;
    });
}

}  // namespace crofton
