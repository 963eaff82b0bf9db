#pragma once

#include <vector>

#include "crofton/codecs.hpp"
#include "crofton/estimate.hpp"
#include "crofton/plane.hpp"
#include "crofton/space_curve.hpp"
#include "crofton/strata.hpp"

namespace crofton {

// Forms are normalized to unit area on S^2:
//   I_X = (1/(4π)^2) ∫_{Δ4} G(t1,t3) G(t2,t4),  G(s,t) = [γ(t)-γ(s), γ'(t), γ'(s)] / |γ(t)-γ(s)|^3
//   I_Y = -(1/(4π)^3) ∫_{Δ3×R^3} [E(z,t1), E(z,t2), E(z,t3)],  E(z,t) = (z-γ(t)) × γ'(t) / |z-γ(t)|^3

enum class IxMethod {
    pair_importance,  // cell-pair proposal for each of the two chords
    uniform,          // sorted uniform points on Δ4
};

enum class IyMethod {
    analytic_simplex,  // z sampled, t-integral over Δ3 done in closed form per segment
    simplex_sampling,  // z and sorted (t1,t2,t3) both sampled
};

McEstimate mc_ix(const SpaceCurve& g, const McConfig& cfg, IxMethod method = IxMethod::pair_importance);
McEstimate mc_iy(const SpaceCurve& g, const McConfig& cfg, IyMethod method = IyMethod::analytic_simplex);

// -(1/8) ∫_{Δ3 × R^3_+} [E1, E2, E3]; the volume form of the three field vectors. π^3/6 for simple curves.
McEstimate crofton_generalized(const PlaneCurveInput& c, const McConfig& cfg);

// At a polygon vertex with exterior angle θ, the support-line pairs pinned to that vertex
// all meet at the vertex itself and carry mass θ^2/2 that no exterior point sees. Both
// forms include vertex_term, the sum of these masses, which is the limit of rounding the
// corners; subtract it for the integral over exterior points of the sharp polygon.
struct ClassicalCrofton {
    McEstimate sin_form;   // ∫ sin α / (s s')
    McEstimate area_form;  // ∫ A / (s^2 s'^2), A the parallelogram on the two tangent segments
    double vertex_term = 0;
};

ClassicalCrofton crofton_classical(const PlaneCurveInput& c, const McConfig& cfg);

McEstimate gauss_linking(const SpaceCurve& a, const SpaceCurve& b, const McConfig& cfg);

// Over-strands replaced by vertical semicircles on the chord through the branch points
// at arc length ±epsilon from the double point.
SpaceCurve lift_diagram(const UnicursalCurve& u, const std::vector<bool>& first_over, double epsilon,
                        int arc_samples = 24);
// Strict upper bound for epsilon.
double max_lift_epsilon(const UnicursalCurve& u);

McEstimate v2_numeric(const SpaceCurve& g, const McConfig& cfg);

// Exposed for the benchmark and the equivalence tests.
namespace detail {
// Distance from each segment to the nearest segment not touching it.
std::vector<double> separations(const SpaceCurve& g, Execution exec);
}  // namespace detail

}  // namespace crofton
