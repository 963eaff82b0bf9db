#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "crofton/errors.hpp"
#include "crofton/knots.hpp"
#include "crofton/plane.hpp"

namespace crofton {

namespace {

Vec2 unit(Vec2 v) { return v * (1.0 / norm(v)); }

// One of the two surgered loops: leaves x along the branch at `from`, rejoins along the branch at `to`.
std::vector<Vec2> surgery_loop(const UnicursalCurve& u, double from, double to, double delta) {
    const int n = u.vertex_count();
    const int ea = static_cast<int>(std::floor(from)), eb = static_cast<int>(std::floor(to));
    const Vec2 x = u.point_at(from);
    std::vector<Vec2> loop;
    loop.push_back(x + unit(u.edge(ea)) * delta);
    double end = to <= from ? to + n : to;
    for (int k = ea + 1; k < end; ++k) loop.push_back(u.vertices[k % n]);
    loop.push_back(x - unit(u.edge(eb)) * delta);
    return loop;
}

}  // namespace

int double_point_index(const UnicursalCurve& u, int dp) {
    if (dp < 0 || dp >= u.size()) throw std::out_of_range("double point out of range");
    const DoublePoint& d = u.double_points[dp];
    const int nv = u.vertex_count();
    const Vec2 x = d.position;

    double reach = std::numeric_limits<double>::infinity();
    for (int e : d.edges) {
        reach = std::min({reach, norm(u.vertices[e] - x), norm(u.vertices[(e + 1) % nv] - x)});
        for (int k = 0; k < u.size(); ++k) {
            if (k == dp) continue;
            const DoublePoint& o = u.double_points[k];
            if (o.edges[0] == e || o.edges[1] == e) reach = std::min(reach, norm(o.position - x));
        }
    }
    const double delta = 1e-3 * reach;

    const std::vector<Vec2> a = surgery_loop(u, d.params[0], d.params[1], delta);
    const std::vector<Vec2> b = surgery_loop(u, d.params[1], d.params[0], delta);
    const std::vector<Vec2>& c1 = d.frame_sign > 0 ? a : b;
    const std::vector<Vec2>& c2 = d.frame_sign > 0 ? b : a;
    return 4 * winding_number(c1, x) - 4 * winding_number(c2, x) - 2;
}

std::vector<int> double_point_indices(const UnicursalCurve& u) {
    std::vector<int> out;
    for (int k = 0; k < u.size(); ++k) out.push_back(double_point_index(u, k));
    return out;
}

int whitney_index(const UnicursalCurve& u) {
    const int n = u.vertex_count();
    double total = 0;
    for (int i = 0; i < n; ++i) {
        Vec2 a = u.edge(i), b = u.edge(i + 1);
        total += std::atan2(cross(a, b), dot(a, b));
    }
    double w = total / (2 * std::numbers::pi);
    double r = std::round(w);
    if (std::abs(w - r) >= 1e-6) throw ConsistencyError("turning number is not an integer");
    return static_cast<int>(r);
}

IPair i_pm(const UnicursalCurve& u) {
    std::int64_t sum = 0;
    for (int i : double_point_indices(u)) sum += i;
    const std::int64_t n = u.size();
    return {Rational(sum + 2 * n, 4), Rational(sum - 2 * n, 4)};
}

Rational alpha(const UnicursalCurve& u) {
    ResolutionTrace tr = descending_resolution(descending_knot_diagram(u));
    PairCounts pc = signed_pair_counts(tr.descending);
    return Rational(u.size(), 8) + Rational(pc.c_plus - pc.c_minus, 4);
}

ArnoldReport arnold_invariants(const UnicursalCurve& u) {
    ArnoldReport r;
    r.n = u.size();
    r.alpha = alpha(u);
    r.per_double_point_index = double_point_indices(u);
    std::int64_t sum = 0;
    for (int i : r.per_double_point_index) sum += i;
    r.i_plus = Rational(sum + 2 * static_cast<std::int64_t>(r.n), 4);
    r.i_minus = Rational(sum - 2 * static_cast<std::int64_t>(r.n), 4);
    r.st = r.i_minus + Rational(8) * r.alpha;
    r.j_minus = Rational(-2) * r.i_minus - Rational(24) * r.alpha;
    r.j_plus = r.j_minus + Rational(r.n);
    r.whitney_index = whitney_index(u);
    return r;
}

bool arnold_identities_hold(const ArnoldReport& r) {
    const Rational n(r.n);
    return r.j_plus - r.j_minus == n && r.alpha == -(Rational(2) * r.st + r.j_minus) / Rational(8) &&
           r.st == r.i_minus + Rational(8) * r.alpha && r.j_minus == Rational(-2) * r.i_minus - Rational(24) * r.alpha &&
           r.j_plus == r.i_plus - Rational(3) * r.st && r.j_minus == r.i_minus - Rational(3) * r.st &&
           r.i_plus - r.i_minus == n;
}

}  // namespace crofton
