#pragma once

#include <array>
#include <vector>

#include "crofton/chords.hpp"
#include "crofton/codecs.hpp"
#include "crofton/parallel.hpp"
#include "crofton/rational.hpp"
#include "crofton/space_curve.hpp"
#include "crofton/vec.hpp"

namespace crofton {

// Curve parameters run over [0, N): integer part = edge, fraction = position on it.
struct DoublePoint {
    Vec2 position;
    std::array<double, 2> params{};  // params[0] < params[1]
    std::array<int, 2> edges{};
    int frame_sign = 0;              // orientation of (first tangent, second tangent)
};

struct UnicursalCurve {
    std::vector<Vec2> vertices;
    std::vector<DoublePoint> double_points;  // numbered by first visit

    int size() const { return static_cast<int>(double_points.size()); }
    int vertex_count() const { return static_cast<int>(vertices.size()); }
    Vec2 edge(int i) const;
    Vec2 point_at(double param) const;
};

UnicursalCurve analyze_curve(const PlaneCurveInput& c, Execution exec = Execution::parallel);

// Chord c joins the two visits of double point c.
ChordMatching gauss_diagram(const UnicursalCurve& u);
// Over/under chosen per double point; crossing signs follow from the frame signs.
KnotDiagram knot_diagram(const UnicursalCurve& u, const std::vector<bool>& first_over);
KnotDiagram descending_knot_diagram(const UnicursalCurve& u);

struct Face {
    Vec2 sample;
    int winding = 0;
    double area = 0;                 // signed, of the traced boundary
    std::vector<int> arcs;           // boundary arcs in tracing order
    std::vector<bool> forward;       // arc traversed along the curve orientation
    std::vector<int> corners;        // double point at the start of each boundary arc
};

// Arc k runs along the curve from event k to event k+1 (events sorted by parameter).
struct Arc {
    int start_event = 0;
    int end_event = 0;
    int left_face = -1;
    int right_face = -1;
};

struct FaceMap {
    std::vector<Face> faces;
    std::vector<Arc> arcs;
    int unbounded_face = -1;
};

FaceMap face_windings(const UnicursalCurve& u);

// Winding number of the closed polyline around p, certified to be an integer.
int winding_number(const std::vector<Vec2>& polyline, Vec2 p);

int double_point_index(const UnicursalCurve& u, int dp);
std::vector<int> double_point_indices(const UnicursalCurve& u);
int whitney_index(const UnicursalCurve& u);

struct IPair {
    Rational i_plus;
    Rational i_minus;
};

IPair i_pm(const UnicursalCurve& u);
Rational alpha(const UnicursalCurve& u);

struct ArnoldReport {
    int n = 0;
    Rational alpha;
    Rational i_plus;
    Rational i_minus;
    Rational st;
    Rational j_plus;
    Rational j_minus;
    int whitney_index = 0;
    std::vector<int> per_double_point_index;
};

ArnoldReport arnold_invariants(const UnicursalCurve& u);
// Checks the five linear identities between the report fields.
bool arnold_identities_hold(const ArnoldReport& r);

struct VanishingTriangle {
    int face = -1;
    int sign = 0;
};

std::vector<VanishingTriangle> vanishing_triangles(const UnicursalCurve& u);
std::vector<VanishingTriangle> vanishing_triangles(const UnicursalCurve& u, const FaceMap& faces);

// Signed diagram of the xy-projection; over/under from z.
KnotDiagram diagram_from_projection(const SpaceCurve& g);

PlaneCurveInput reversed(const PlaneCurveInput& c);

}  // namespace crofton
