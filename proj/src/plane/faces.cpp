#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "crofton/errors.hpp"
#include "crofton/plane.hpp"

namespace crofton {

namespace {

struct Event {
    double param;
    int dp;
};

std::vector<Event> sorted_events(const UnicursalCurve& u) {
    std::vector<Event> ev;
    for (int k = 0; k < u.size(); ++k) {
        ev.push_back({u.double_points[k].params[0], k});
        ev.push_back({u.double_points[k].params[1], k});
    }
    std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) { return a.param < b.param; });
    return ev;
}

// Points of an arc plus the edge carrying each piece (piece i joins pts[i], pts[i+1]).
struct ArcGeometry {
    std::vector<Vec2> pts;
    std::vector<int> edge;
};

ArcGeometry arc_geometry(const UnicursalCurve& u, double from, double to) {
    const int n = u.vertex_count();
    if (to <= from) to += n;
    ArcGeometry g;
    g.pts.push_back(u.point_at(from));
    int e = static_cast<int>(std::floor(from));
    for (int k = e + 1; k < to; ++k) {
        g.edge.push_back(((k - 1) % n + n) % n);
        g.pts.push_back(u.vertices[k % n]);
    }
    g.edge.push_back(static_cast<int>(std::floor(to)) % n);
    g.pts.push_back(u.point_at(to));
    return g;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    Vec2 d = b - a;
    double t = std::clamp(dot(p - a, d) / dot(d, d), 0.0, 1.0);
    return norm(p - (a + d * t));
}

double signed_area(const std::vector<Vec2>& poly) {
    double s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) s += cross(poly[i], poly[(i + 1) % poly.size()]);
    return s / 2;
}

// A point just left of the boundary piece with the most clearance from the rest of the curve.
Vec2 representative_point(const UnicursalCurve& u, const std::vector<const ArcGeometry*>& geo,
                          const std::vector<bool>& forward, double scale) {
    const int n = u.vertex_count();
    double best = -1;
    Vec2 best_p;
    for (std::size_t h = 0; h < geo.size(); ++h) {
        const ArcGeometry& g = *geo[h];
        for (std::size_t k = 0; k + 1 < g.pts.size(); ++k) {
            Vec2 a = g.pts[k], b = g.pts[k + 1];
            if (!forward[h]) std::swap(a, b);
            Vec2 d = b - a;
            double len = norm(d);
            if (!(len > 0)) continue;
            Vec2 m = (a + b) * 0.5;
            double clear = len / 2;
            for (int e = 0; e < n && clear > best; ++e) {
                if (e == g.edge[k]) continue;
                clear = std::min(clear, point_segment_distance(m, u.vertices[e], u.vertices[(e + 1) % n]));
            }
            if (clear > best) {
                best = clear;
                Vec2 left{-d.y / len, d.x / len};
                best_p = m + left * (0.5 * clear);
            }
        }
    }
    if (!(best > 1e-12 * scale))
        throw GenericityViolation(GenericityViolation::Kind::degenerate_face,
                                  "face too thin to place a representative point");
    return best_p;
}

}  // namespace

int winding_number(const std::vector<Vec2>& polyline, Vec2 p) {
    double total = 0;
    for (std::size_t i = 0; i < polyline.size(); ++i) {
        Vec2 a = polyline[i] - p, b = polyline[(i + 1) % polyline.size()] - p;
        total += std::atan2(cross(a, b), dot(a, b));
    }
    double w = total / (2 * std::numbers::pi);
    double r = std::round(w);
    if (std::abs(w - r) >= 1e-6) throw ConsistencyError("winding number residual " + std::to_string(w - r));
    return static_cast<int>(r);
}

FaceMap face_windings(const UnicursalCurve& u) {
    const int n = u.size();
    const int nv = u.vertex_count();
    double scale = 0;
    for (const auto& a : u.vertices)
        for (const auto& b : u.vertices) scale = std::max(scale, norm(a - b));

    FaceMap fm;
    if (n == 0) {
        ArcGeometry g;
        for (int k = 0; k <= nv; ++k) g.pts.push_back(u.vertices[k % nv]);
        for (int k = 0; k < nv; ++k) g.edge.push_back(k);
        fm.arcs.push_back({-1, -1, 0, 1});
        for (int side = 0; side < 2; ++side) {
            Face f;
            f.arcs = {0};
            f.forward = {side == 0};
            f.corners = {-1};
            f.sample = representative_point(u, {&g}, f.forward, scale);
            f.area = side == 0 ? signed_area(u.vertices) : -signed_area(u.vertices);
            f.winding = winding_number(u.vertices, f.sample);
            fm.faces.push_back(f);
        }
        fm.unbounded_face = fm.faces[0].area < 0 ? 0 : 1;
        return fm;
    }

    const std::vector<Event> ev = sorted_events(u);
    const int m = 2 * n;
    std::vector<ArcGeometry> geo(m);
    for (int k = 0; k < m; ++k) {
        geo[k] = arc_geometry(u, ev[k].param, ev[(k + 1) % m].param);
        fm.arcs.push_back({k, (k + 1) % m, -1, -1});
    }

    // Half-edge 2k runs along arc k, 2k+1 against it.
    auto origin = [&](int h) { return h % 2 == 0 ? ev[h / 2].dp : ev[(h / 2 + 1) % m].dp; };
    auto direction = [&](int h) {
        const int k = h / 2;
        if (h % 2 == 0) return u.edge(static_cast<int>(std::floor(ev[k].param)));
        return -u.edge(static_cast<int>(std::floor(ev[(k + 1) % m].param)));
    };
    std::vector<std::vector<int>> around(n);
    for (int h = 0; h < 2 * m; ++h) around[origin(h)].push_back(h);
    for (auto& out : around) {
        std::sort(out.begin(), out.end(), [&](int a, int b) {
            Vec2 da = direction(a), db = direction(b);
            return std::atan2(da.y, da.x) < std::atan2(db.y, db.x);
        });
    }
    auto next = [&](int h) {
        const int twin = h ^ 1;
        const auto& out = around[origin(twin)];
        const int idx = static_cast<int>(std::find(out.begin(), out.end(), twin) - out.begin());
        return out[(idx + static_cast<int>(out.size()) - 1) % out.size()];
    };

    std::vector<int> face_of(2 * m, -1);
    for (int start = 0; start < 2 * m; ++start) {
        if (face_of[start] != -1) continue;
        Face f;
        std::vector<Vec2> boundary;
        std::vector<const ArcGeometry*> pieces;
        const int id = static_cast<int>(fm.faces.size());
        int h = start;
        do {
            face_of[h] = id;
            const int k = h / 2;
            const bool fwd = h % 2 == 0;
            f.arcs.push_back(k);
            f.forward.push_back(fwd);
            f.corners.push_back(origin(h));
            pieces.push_back(&geo[k]);
            const auto& pts = geo[k].pts;
            if (fwd)
                boundary.insert(boundary.end(), pts.begin(), pts.end() - 1);
            else
                boundary.insert(boundary.end(), pts.rbegin(), pts.rend() - 1);
            h = next(h);
            if (static_cast<int>(f.arcs.size()) > 2 * m)
                throw ConsistencyError("face tracing did not close");
        } while (h != start);
        f.area = signed_area(boundary);
        f.sample = representative_point(u, pieces, f.forward, scale);
        fm.faces.push_back(std::move(f));
    }
    for (int k = 0; k < m; ++k) {
        fm.arcs[k].left_face = face_of[2 * k];
        fm.arcs[k].right_face = face_of[2 * k + 1];
    }
    double most_negative = std::numeric_limits<double>::infinity();
    for (int i = 0; i < static_cast<int>(fm.faces.size()); ++i)
        if (fm.faces[i].area < most_negative) {
            most_negative = fm.faces[i].area;
            fm.unbounded_face = i;
        }
    for (auto& f : fm.faces) f.winding = winding_number(u.vertices, f.sample);
    return fm;
}

std::vector<VanishingTriangle> vanishing_triangles(const UnicursalCurve& u) {
    return vanishing_triangles(u, face_windings(u));
}

std::vector<VanishingTriangle> vanishing_triangles(const UnicursalCurve&, const FaceMap& fm) {
    std::vector<VanishingTriangle> out;
    for (int id = 0; id < static_cast<int>(fm.faces.size()); ++id) {
        const Face& f = fm.faces[id];
        if (f.arcs.size() != 3) continue;
        if (f.corners[0] == f.corners[1] || f.corners[1] == f.corners[2] || f.corners[0] == f.corners[2]) continue;
        // Sides in traversal order from the basepoint; does that cyclic order match the boundary tracing?
        std::array<int, 3> a{f.arcs[0], f.arcs[1], f.arcs[2]};
        const int lo = static_cast<int>(std::min_element(a.begin(), a.end()) - a.begin());
        const bool positive = a[(lo + 1) % 3] < a[(lo + 2) % 3];
        int q = 0;
        for (int s = 0; s < 3; ++s)
            if (f.forward[s] == positive) ++q;
        out.push_back({id, q % 2 == 0 ? 1 : -1});
    }
    return out;
}

}  // namespace crofton
