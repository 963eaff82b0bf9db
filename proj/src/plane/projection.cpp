#include <cmath>

#include "crofton/errors.hpp"
#include "crofton/plane.hpp"

namespace crofton {

KnotDiagram diagram_from_projection(const SpaceCurve& g) {
    std::vector<Vec2> flat;
    flat.reserve(g.size());
    for (const auto& v : g.vertices()) flat.push_back({v.x, v.y});
    for (std::size_t i = 0; i < flat.size(); ++i)
        if (flat[i] == flat[(i + 1) % flat.size()])
            throw GenericityViolation(GenericityViolation::Kind::cusp, "vertical segment in projection");
    const UnicursalCurve u = analyze_curve(PlaneCurveInput{std::move(flat)});

    const double tol = 1e-9 * g.diameter();
    auto height = [&](int edge, double param) {
        const double f = param - edge;
        return g.vertex(edge).z + f * (g.vertex(edge + 1).z - g.vertex(edge).z);
    };
    std::vector<bool> first_over(u.size());
    for (int k = 0; k < u.size(); ++k) {
        const DoublePoint& d = u.double_points[k];
        const double z1 = height(d.edges[0], d.params[0]), z2 = height(d.edges[1], d.params[1]);
        if (std::abs(z1 - z2) <= tol)
            throw GenericityViolation(GenericityViolation::Kind::near_tangency, "curve meets itself above a crossing");
        first_over[k] = z1 > z2;
    }
    return knot_diagram(u, first_over);
}

}  // namespace crofton
