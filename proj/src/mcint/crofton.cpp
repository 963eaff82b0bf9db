#include <algorithm>
#include <cmath>
#include <numbers>

#include "crofton/errors.hpp"
#include "crofton/mcint.hpp"
#include "tags.hpp"
#include "y_field.hpp"

namespace crofton {

namespace {

using std::numbers::pi;

SpaceCurve horizontal(const PlaneCurveInput& c) {
    std::vector<Vec3> v;
    for (const auto& p : c.vertices) v.push_back({p.x, p.y, 0.0});
    return SpaceCurve(std::move(v));
}

// Counterclockwise copy of a convex polygon and its exterior angles, or false.
bool convex_ccw(const std::vector<Vec2>& in, std::vector<Vec2>& out, std::vector<double>& turns) {
    const std::size_t n = in.size();
    double area = 0, scale = 0;
    for (std::size_t i = 0; i < n; ++i) {
        area += cross(in[i], in[(i + 1) % n]);
        scale = std::max(scale, norm(in[i] - in[0]));
    }
    out = in;
    if (area < 0) std::reverse(out.begin(), out.end());
    double turning = 0;
    turns.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = out[(i + 1) % n] - out[i], b = out[(i + 2) % n] - out[(i + 1) % n];
        const double c = cross(a, b);
        if (c < -1e-12 * norm(a) * norm(b)) return false;
        turns[i] = std::atan2(c, dot(a, b));
        turning += turns[i];
    }
    return std::abs(turning - 2 * pi) < 1e-6;
}

}  // namespace

McEstimate crofton_generalized(const PlaneCurveInput& c, const McConfig& cfg) {
    validate(cfg);
    const UnicursalCurve u = analyze_curve(c, cfg.exec);
    if (u.size() != 0) throw PreconditionError("generalized Crofton integral needs a simple closed curve");
    const SpaceCurve g = horizontal(c);
    const detail::FieldSampler prop(g, cfg.near_curve_fraction);
    return run_strata(cfg, tags::crofton_generalized, [&](Stream& s) {
        const Vec3 z = prop.draw(s);
        double phi, q;
        prop.evaluate(z, phi, q);
        return -phi / (8 * q);
    });
}

ClassicalCrofton crofton_classical(const PlaneCurveInput& c, const McConfig& cfg) {
    validate(cfg);
    std::vector<Vec2> poly;
    std::vector<double> turns;
    if (!convex_ccw(c.vertices, poly, turns)) throw PreconditionError("classical Crofton integral needs a convex curve");
    const std::size_t n = poly.size();
    Vec2 center;
    for (const auto& p : poly) center = center + p;
    center = center * (1.0 / static_cast<double>(n));
    double r0 = 0;
    for (const auto& p : poly) r0 = std::max(r0, norm(p - center));

    // Half the draws uniform in the disk of radius r0, half with density ∝ |P|^-3 outside it.
    auto density = [&](double r) { return r < r0 ? 0.5 / (pi * r0 * r0) : 0.5 * r0 / (2 * pi * r * r * r); };
    auto outside = [&](Vec2 p) {
        for (std::size_t i = 0; i < n; ++i)
            if (cross(poly[(i + 1) % n] - poly[i], p - poly[i]) < 0) return true;
        return false;
    };
    // Extreme vertices as seen from p, relative to the ray towards the center.
    auto support = [&](Vec2 p, Vec2& h1, Vec2& h2) {
        const Vec2 ref = center - p;
        double lo = pi, hi = -pi;
        for (const auto& v : poly) {
            const Vec2 d = v - p;
            const double a = std::atan2(cross(ref, d), dot(ref, d));
            if (a < lo) {
                lo = a;
                h1 = v;
            }
            if (a > hi) {
                hi = a;
                h2 = v;
            }
        }
    };

    struct Draw {
        double sin_form, area_form;
    };
    auto draw = [&](Stream& s) -> Draw {
        const double phi = 2 * pi * s.uniform();
        const double r = s.uniform() < 0.5 ? r0 * std::sqrt(s.uniform()) : r0 / s.uniform();
        const Vec2 p = center + Vec2{std::cos(phi), std::sin(phi)} * r;
        if (!outside(p)) return {0, 0};
        Vec2 h1, h2;
        support(p, h1, h2);
        const Vec2 a = h1 - p, b = h2 - p;
        const double sa = norm(a), sb = norm(b);
        const double angle = std::atan2(std::abs(cross(a, b)), dot(a, b));
        const double q = density(r);
        return {std::sin(angle) / (sa * sb) / q, std::abs(cross(a, b)) / (sa * sa * sb * sb) / q};
    };

    ClassicalCrofton out;
    for (double t : turns) out.vertex_term += t * t / 2;
    out.sin_form = run_strata(cfg, tags::crofton_classical, [&](Stream& s) { return draw(s).sin_form; });
    out.area_form = run_strata(cfg, tags::crofton_classical, [&](Stream& s) { return draw(s).area_form; });
    out.sin_form.value += out.vertex_term;
    out.area_form.value += out.vertex_term;
    return out;
}

}  // namespace crofton
