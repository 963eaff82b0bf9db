#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "crofton/estimate.hpp"
#include "crofton/rational.hpp"
#include "crofton/space_curve.hpp"
#include "crofton/vec.hpp"

namespace crofton {

using json = nlohmann::json;

enum class Pass { over, under };

struct GaussEntry {
    int label = 0;
    Pass pass = Pass::over;
    int sign = 1;

    bool operator==(const GaussEntry&) const = default;
};

// Signed Gauss sequence; the basepoint sits before entries[0].
// Labels are always 1..n in order of first appearance.
struct KnotDiagram {
    std::vector<GaussEntry> entries;

    int crossing_count() const { return static_cast<int>(entries.size() / 2); }
    bool operator==(const KnotDiagram&) const = default;
};

// Validates the entries and renumbers labels by first appearance.
KnotDiagram make_knot_diagram(std::vector<GaussEntry> entries);

KnotDiagram parse_gauss_code(std::string_view text);
std::string serialize_gauss_code(const KnotDiagram& k);

// One diagram per line, '#' starts a comment, blank lines are skipped and a
// lone "." stands for the empty diagram.
std::vector<KnotDiagram> parse_gauss_file(std::string_view text);
std::string serialize_gauss_file(const std::vector<KnotDiagram>& diagrams);

struct PlaneCurveInput {
    std::vector<Vec2> vertices;

    bool operator==(const PlaneCurveInput&) const = default;
};

PlaneCurveInput make_plane_curve(std::vector<Vec2> vertices);
// Accepts a bare point list or a {"format":"plane_curve", ...} document.
PlaneCurveInput parse_plane_curve(const json& doc);
PlaneCurveInput parse_plane_curve(std::string_view text);
json plane_curve_document(const PlaneCurveInput& c);

// circle (radius), ellipse (a, b), square (side), figure_eight (scale).
PlaneCurveInput builtin_plane_curve(const std::string& name, int samples, const json& params = json::object());

struct BuiltinSpaceCurve {
    std::string name;  // "circle" or "torus_knot"
    int p = 2;
    int q = 3;
    double major_radius = 2.0;
    double minor_radius = 1.0;
    double radius = 1.0;
    int samples = 256;

    bool operator==(const BuiltinSpaceCurve&) const = default;
};

struct SpaceCurveInput {
    std::variant<std::vector<Vec3>, BuiltinSpaceCurve> source;

    bool operator==(const SpaceCurveInput&) const = default;
};

SpaceCurveInput parse_space_curve(const json& doc);
SpaceCurveInput parse_space_curve(std::string_view text);
json space_curve_document(const SpaceCurveInput& c);
json space_curve_document(const SpaceCurve& c);
SpaceCurve resolve_space_curve(const SpaceCurveInput& input);

// Result schema pieces.
json to_json(const Rational& r);
json to_json(const McEstimate& e);

// FNV-1a 64-bit, as 16 hex digits.
std::string content_digest(std::string_view bytes);

}  // namespace crofton
