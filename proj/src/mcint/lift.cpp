#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "crofton/errors.hpp"
#include "crofton/mcint.hpp"

namespace crofton {

namespace {

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 d = b - a;
    const double t = std::clamp(dot(p - a, d) / dot(d, d), 0.0, 1.0);
    return norm(p - (a + d * t));
}

}  // namespace

double max_lift_epsilon(const UnicursalCurve& u) {
    const int n = u.size(), nv = u.vertex_count();
    double d = std::numeric_limits<double>::infinity();
    std::vector<char> local(nv);
    for (int k = 0; k < n; ++k) {
        const DoublePoint& x = u.double_points[k];
        for (int l = k + 1; l < n; ++l) d = std::min(d, norm(x.position - u.double_points[l].position));
        // Edges on which a branch still moves away from the double point belong to that branch.
        std::fill(local.begin(), local.end(), 0);
        for (int b = 0; b < 2; ++b) {
            for (int dir : {1, -1}) {
                int e = x.edges[b];
                double r = 0;
                local[e] = 1;
                for (int steps = 0; steps < nv; ++steps) {
                    const Vec2 far = dir > 0 ? u.vertices[(e + 1) % nv] : u.vertices[e];
                    const double next = norm(far - x.position);
                    if (next <= r) break;
                    local[e] = 1;
                    r = next;
                    e = (e + dir + nv) % nv;
                }
                d = std::min(d, r);
            }
        }
        for (int e = 0; e < nv; ++e)
            if (!local[e]) d = std::min(d, point_segment_distance(x.position, u.vertices[e], u.vertices[(e + 1) % nv]));
    }
    return d / 2;
}

SpaceCurve lift_diagram(const UnicursalCurve& u, const std::vector<bool>& first_over, double epsilon, int arc_samples) {
    const int n = u.size(), nv = u.vertex_count();
    if (static_cast<int>(first_over.size()) != n) throw PreconditionError("resolution needs one entry per double point");
    if (arc_samples < 2) throw PreconditionError("semicircles need at least 2 pieces");
    std::vector<Vec3> out;
    if (n == 0) {
        for (const auto& v : u.vertices) out.push_back({v.x, v.y, 0});
        return SpaceCurve(std::move(out));
    }
    if (!(epsilon > 0)) throw PreconditionError("epsilon must be positive");
    if (!(epsilon < max_lift_epsilon(u))) throw PreconditionError("epsilon too large for the local geometry");

    std::vector<double> cum(nv + 1, 0);
    for (int i = 0; i < nv; ++i) cum[i + 1] = cum[i] + norm(u.edge(i));
    const double total = cum[nv];
    auto wrap = [&](double s) {
        s = std::fmod(s, total);
        return s < 0 ? s + total : s;
    };
    auto at = [&](double s) {
        s = wrap(s);
        int i = static_cast<int>(std::upper_bound(cum.begin(), cum.end(), s) - cum.begin()) - 1;
        i = std::clamp(i, 0, nv - 1);
        const Vec2 p = u.vertices[i] + u.edge(i) * ((s - cum[i]) / (cum[i + 1] - cum[i]));
        return Vec3{p.x, p.y, 0};
    };

    std::vector<double> centre(n);
    for (int k = 0; k < n; ++k) {
        const DoublePoint& d = u.double_points[k];
        const int b = first_over[k] ? 0 : 1;
        centre[k] = cum[d.edges[b]] + (d.params[b] - d.edges[b]) * norm(u.edge(d.edges[b]));
    }
    // Walk from the end of the first over-pass so that no window straddles the start.
    const double origin = centre[0] + epsilon;
    auto offset = [&](double s) { return wrap(s - origin); };

    struct Item {
        double at;
        int vertex;  // -1 for an over-pass
        int dp;
    };
    std::vector<Item> items;
    for (int v = 0; v < nv; ++v) {
        bool covered = false;
        for (int k = 0; k < n && !covered; ++k) {
            const double d = std::abs(wrap(cum[v] - centre[k] + total / 2) - total / 2);
            covered = d <= epsilon;
        }
        if (!covered) items.push_back({offset(cum[v]), v, -1});
    }
    for (int k = 0; k < n; ++k) items.push_back({offset(centre[k] - epsilon), -1, k});
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.at < b.at; });

    auto emit = [&](const Vec3& p) {
        if (out.empty() || !(out.back() == p)) out.push_back(p);
    };
    for (const Item& it : items) {
        if (it.vertex >= 0) {
            emit({u.vertices[it.vertex].x, u.vertices[it.vertex].y, 0});
            continue;
        }
        const Vec3 a = at(centre[it.dp] - epsilon), b = at(centre[it.dp] + epsilon);
        const Vec3 m = (a + b) * 0.5;
        const double rho = norm(b - a) / 2;
        const Vec3 e = (b - a) * (0.5 / rho);
        emit(a);
        for (int j = 1; j < arc_samples; ++j) {
            const double phi = std::numbers::pi * j / arc_samples;
            emit(m - e * (rho * std::cos(phi)) + Vec3{0, 0, rho * std::sin(phi)});
        }
        emit(b);
    }
    if (out.size() > 1 && out.front() == out.back()) out.pop_back();
    return SpaceCurve(std::move(out));
}

}  // namespace crofton
