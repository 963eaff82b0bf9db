#pragma once

#include <functional>
#include <random>

#include "crofton/codecs.hpp"

namespace oracle {

using Param = std::function<crofton::Vec2(double)>;

// Samples t = 2π(k + offset)/m; the offset keeps vertices off crossings of symmetric curves.
crofton::PlaneCurveInput sample(const Param& f, int m, double offset = 0.37);

crofton::PlaneCurveInput circle(int m, double radius = 1.0);
crofton::PlaneCurveInput ellipse(double a, double b, int m);
crofton::PlaneCurveInput lemniscate(int m);
crofton::PlaneCurveInput trefoil_shadow(int m);
// Limaçon r = b + cos θ; an inner loop for b < 1.
crofton::PlaneCurveInput limacon(double b, int m);
// Limaçon b = 0.5 with its far side pushed out by c; crosses the near loop for large c.
crofton::PlaneCurveInput limacon_bump(double c, int m);
// x = 1.5 cos t, y = sin t (x^2 - k): two lobes touching across the waist as k passes 0.
crofton::PlaneCurveInput dumbbell(double k, int m);
// Trefoil shadow with one side of the central triangle pushed by c through the opposite crossing.
crofton::PlaneCurveInput trefoil_push(double c, int m);
// e^{it} + a e^{i k t}
crofton::PlaneCurveInput trochoid(double a, int k, int m);
// Vertices at angles 2π q j / p + 0.1.
crofton::PlaneCurveInput star_polygon(int p, int q);

// Random polygon with 5..12 vertices; retried until generic with at most max_dp double points.
crofton::PlaneCurveInput random_generic_polygon(int max_dp, std::mt19937_64& rng);
// Random low-order Fourier curve, densely sampled, with exactly n double points.
crofton::PlaneCurveInput random_smooth_curve(int n, std::mt19937_64& rng, int m = 512);

}  // namespace oracle
