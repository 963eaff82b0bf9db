#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>

#include <omp.h>

#include "crofton/errors.hpp"
#include "crofton/plane.hpp"

namespace crofton {

namespace {

constexpr double kSinTol = 1e-9;
constexpr double kParamTol = 1e-9;
constexpr double kPointTol = 1e-9;

struct Hit {
    int i, j;
    double t, u;
    Vec2 p;
};

struct Violation {
    GenericityViolation::Kind kind;
    std::string message;
};

double segment_distance_2d(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
    auto point_seg = [](Vec2 p, Vec2 s0, Vec2 s1) {
        Vec2 d = s1 - s0;
        double t = std::clamp(dot(p - s0, d) / dot(d, d), 0.0, 1.0);
        return norm(p - (s0 + d * t));
    };
    return std::min({point_seg(a0, b0, b1), point_seg(a1, b0, b1), point_seg(b0, a0, a1), point_seg(b1, a0, a1)});
}

std::string where(int i, int j) {
    std::ostringstream os;
    os << "edges " << i << " and " << j;
    return os.str();
}

// Intersections of edge i with every later edge. Returns the first violation, if any.
std::optional<Violation> scan_edge(const std::vector<Vec2>& v, int i, double scale, std::vector<Hit>& out) {
    const int n = static_cast<int>(v.size());
    const Vec2 a0 = v[i], a1 = v[(i + 1) % n], r = a1 - a0;
    const double lr = norm(r);
    for (int j = i + 1; j < n; ++j) {
        const Vec2 b0 = v[j], b1 = v[(j + 1) % n], s = b1 - b0;
        const double ls = norm(s);
        const double den = cross(r, s);
        const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
        if (adjacent) {
            // Shared vertex; a second contact means the edges fold back on each other.
            Vec2 in = j == i + 1 ? r : s, outd = j == i + 1 ? s : r;
            if (std::abs(cross(in, outd)) < kSinTol * norm(in) * norm(outd) && dot(in, outd) < 0)
                return Violation{GenericityViolation::Kind::cusp, "edges fold back (cusp) at " + where(i, j)};
            continue;
        }
        if (std::abs(den) < kSinTol * lr * ls) {
            if (segment_distance_2d(a0, a1, b0, b1) <= kPointTol * scale)
                return Violation{GenericityViolation::Kind::near_tangency,
                                 "parallel contact (tangency) between " + where(i, j)};
            continue;
        }
        const Vec2 qp = b0 - a0;
        const double t = cross(qp, s) / den;
        const double u = cross(qp, r) / den;
        if (t < -kParamTol || t > 1 + kParamTol || u < -kParamTol || u > 1 + kParamTol) continue;
        if (t <= kParamTol || t >= 1 - kParamTol || u <= kParamTol || u >= 1 - kParamTol)
            return Violation{GenericityViolation::Kind::vertex_intersection,
                             "intersection at a polyline vertex between " + where(i, j)};
        out.push_back({i, j, t, u, a0 + r * t});
    }
    return std::nullopt;
}

}  // namespace

const char* to_string(GenericityViolation::Kind kind) {
    switch (kind) {
        case GenericityViolation::Kind::near_tangency: return "near_tangency";
        case GenericityViolation::Kind::triple_point: return "triple_point";
        case GenericityViolation::Kind::vertex_intersection: return "vertex_intersection";
        case GenericityViolation::Kind::cusp: return "cusp";
        case GenericityViolation::Kind::degenerate_face: return "degenerate_face";
    }
    return "unknown";
}

int resolve_threads(int requested) { return requested > 0 ? requested : std::max(1, omp_get_max_threads()); }

Vec2 UnicursalCurve::edge(int i) const {
    const int n = vertex_count();
    return vertices[(i + 1) % n] - vertices[i % n];
}

Vec2 UnicursalCurve::point_at(double param) const {
    const int n = vertex_count();
    double w = std::fmod(param, static_cast<double>(n));
    if (w < 0) w += n;
    int i = std::min(static_cast<int>(w), n - 1);
    return vertices[i] + edge(i) * (w - i);
}

UnicursalCurve analyze_curve(const PlaneCurveInput& c, Execution exec) {
    const std::vector<Vec2>& v = c.vertices;
    const int n = static_cast<int>(v.size());
    if (n < 3) throw PreconditionError("plane curve needs at least 3 vertices");

    double minx = v[0].x, maxx = v[0].x, miny = v[0].y, maxy = v[0].y;
    for (const auto& p : v) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    const double scale = std::hypot(maxx - minx, maxy - miny);

    std::vector<std::vector<Hit>> hits(n);
    std::vector<std::optional<Violation>> bad(n);
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (int i = 0; i < n; ++i) bad[i] = scan_edge(v, i, scale, hits[i]);
    } else {
        for (int i = 0; i < n; ++i) bad[i] = scan_edge(v, i, scale, hits[i]);
    }
    for (int i = 0; i < n; ++i)
        if (bad[i]) throw GenericityViolation(bad[i]->kind, bad[i]->message);

    UnicursalCurve u;
    u.vertices = v;
    for (int i = 0; i < n; ++i)
        for (const Hit& h : hits[i]) {
            DoublePoint dp;
            dp.position = h.p;
            dp.params = {h.i + h.t, h.j + h.u};
            dp.edges = {h.i, h.j};
            double f = cross(u.edge(h.i), u.edge(h.j));
            dp.frame_sign = f > 0 ? 1 : -1;
            u.double_points.push_back(dp);
        }
    std::sort(u.double_points.begin(), u.double_points.end(),
              [](const DoublePoint& a, const DoublePoint& b) { return a.params[0] < b.params[0]; });

    // Coincident double points: a triple point, or a tangency split into two nearby crossings.
    std::vector<int> order(u.size());
    for (int k = 0; k < u.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return u.double_points[a].position.x < u.double_points[b].position.x;
    });
    const double tol = kPointTol * scale;
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            const Vec2 pa = u.double_points[order[a]].position, pb = u.double_points[order[b]].position;
            if (pb.x - pa.x > tol) break;
            if (norm(pa - pb) <= tol) {
                const auto& da = u.double_points[order[a]];
                const auto& db = u.double_points[order[b]];
                bool shares = false;
                for (int x : da.edges)
                    for (int y : db.edges) shares = shares || x == y;
                throw GenericityViolation(shares ? GenericityViolation::Kind::triple_point
                                                 : GenericityViolation::Kind::near_tangency,
                                          shares ? "three branches meet at one point"
                                                 : "two double points coincide (tangency)");
            }
        }
    return u;
}

ChordMatching gauss_diagram(const UnicursalCurve& u) {
    const int n = u.size();
    struct Event {
        double param;
        int dp;
    };
    std::vector<Event> ev;
    ev.reserve(2 * n);
    for (int k = 0; k < n; ++k) {
        ev.push_back({u.double_points[k].params[0], k});
        ev.push_back({u.double_points[k].params[1], k});
    }
    std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) { return a.param < b.param; });
    std::vector<std::array<int, 2>> pairs(n, {-1, -1});
    for (int p = 0; p < 2 * n; ++p) {
        auto& slot = pairs[ev[p].dp];
        (slot[0] == -1 ? slot[0] : slot[1]) = p;
    }
    return make_matching(pairs);
}

KnotDiagram knot_diagram(const UnicursalCurve& u, const std::vector<bool>& first_over) {
    const int n = u.size();
    if (static_cast<int>(first_over.size()) != n) throw PreconditionError("resolution needs one entry per double point");
    ChordMatching m = gauss_diagram(u);
    std::vector<GaussEntry> entries(2 * n);
    for (int c = 0; c < n; ++c) {
        // Double points are numbered by first visit, so chord c is double point c.
        int sign = first_over[c] ? u.double_points[c].frame_sign : -u.double_points[c].frame_sign;
        entries[m.endpoints[c][0]] = {c + 1, first_over[c] ? Pass::over : Pass::under, sign};
        entries[m.endpoints[c][1]] = {c + 1, first_over[c] ? Pass::under : Pass::over, sign};
    }
    return make_knot_diagram(std::move(entries));
}

KnotDiagram descending_knot_diagram(const UnicursalCurve& u) {
    return knot_diagram(u, std::vector<bool>(u.size(), true));
}

PlaneCurveInput reversed(const PlaneCurveInput& c) {
    std::vector<Vec2> v(c.vertices.rbegin(), c.vertices.rend());
    return PlaneCurveInput{std::move(v)};
}

}  // namespace crofton
