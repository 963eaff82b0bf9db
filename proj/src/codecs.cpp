#include "crofton/codecs.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

#include "crofton/errors.hpp"

namespace crofton {

namespace {

ParseError syntax(const std::string& msg) { return ParseError(ParseError::Kind::syntax, msg); }
ParseError semantic(const std::string& msg) { return ParseError(ParseError::Kind::semantic, msg); }

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

// Token grammar (O|U)<digits>(+|-), where the minus may also be U+2212.
GaussEntry parse_token(std::string_view tok) {
    auto bad = [&] { return syntax("bad Gauss token '" + std::string(tok) + "'"); };
    if (tok.size() < 3) throw bad();
    GaussEntry e;
    if (tok[0] == 'O')
        e.pass = Pass::over;
    else if (tok[0] == 'U')
        e.pass = Pass::under;
    else
        throw bad();
    std::size_t i = 1;
    long long label = 0;
    while (i < tok.size() && tok[i] >= '0' && tok[i] <= '9') {
        label = label * 10 + (tok[i] - '0');
        if (label > 1'000'000'000) throw bad();
        ++i;
    }
    if (i == 1) throw bad();
    if (label <= 0) throw syntax("Gauss labels must be positive: '" + std::string(tok) + "'");
    std::string_view rest = tok.substr(i);
    if (rest == "+")
        e.sign = 1;
    else if (rest == "-" || rest == "\xE2\x88\x92")
        e.sign = -1;
    else
        throw bad();
    e.label = static_cast<int>(label);
    return e;
}

double number_at(const json& v, const char* what) {
    if (!v.is_number()) throw syntax(std::string("non-numeric ") + what);
    double x = v.get<double>();
    if (!std::isfinite(x)) throw syntax(std::string("non-finite ") + what);
    return x;
}

json parse_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw syntax(std::string("malformed document: ") + e.what());
    }
}

void check_header(const json& doc, const char* format) {
    if (!doc.contains("format") || doc["format"] != format)
        throw syntax(std::string("expected \"format\": \"") + format + "\"");
    if (!doc.contains("version") || !doc["version"].is_number_integer() || doc["version"].get<int>() != 1)
        throw syntax("unsupported or missing \"version\" (expected 1)");
}

int int_param(const json& obj, const char* key, int fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number_integer()) throw syntax(std::string("builtin parameter '") + key + "' must be an integer");
    return obj[key].get<int>();
}

double real_param(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    return number_at(obj[key], key);
}

}  // namespace

KnotDiagram make_knot_diagram(std::vector<GaussEntry> entries) {
    struct Seen {
        int over = 0, under = 0, sign = 0, id = 0;
    };
    std::map<int, Seen> seen;
    int next = 1;
    for (const auto& e : entries) {
        if (e.label <= 0) throw semantic("non-positive crossing label " + std::to_string(e.label));
        if (e.sign != 1 && e.sign != -1) throw semantic("crossing sign must be +1 or -1");
        auto [it, fresh] = seen.try_emplace(e.label);
        Seen& s = it->second;
        if (fresh) {
            s.id = next++;
            s.sign = e.sign;
        } else if (s.sign != e.sign) {
            throw semantic("crossing " + std::to_string(e.label) + " has inconsistent signs");
        }
        (e.pass == Pass::over ? s.over : s.under) += 1;
    }
    for (const auto& [label, s] : seen) {
        if (s.over != 1 || s.under != 1)
            throw semantic("crossing " + std::to_string(label) + " must appear exactly once over and once under");
    }
    for (auto& e : entries) e.label = seen[e.label].id;
    return KnotDiagram{std::move(entries)};
}

KnotDiagram parse_gauss_code(std::string_view text) {
    std::vector<GaussEntry> entries;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        std::size_t j = i;
        while (j < text.size() && !is_space(text[j])) ++j;
        if (j > i) entries.push_back(parse_token(text.substr(i, j - i)));
        i = j;
    }
    return make_knot_diagram(std::move(entries));
}

std::string serialize_gauss_code(const KnotDiagram& k) {
    std::string out;
    for (const auto& e : k.entries) {
        if (!out.empty()) out += ' ';
        out += e.pass == Pass::over ? 'O' : 'U';
        out += std::to_string(e.label);
        out += e.sign > 0 ? '+' : '-';
    }
    return out;
}

std::vector<KnotDiagram> parse_gauss_file(std::string_view text) {
    std::vector<KnotDiagram> out;
    std::size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        while (!line.empty() && is_space(line.front())) line.remove_prefix(1);
        while (!line.empty() && is_space(line.back())) line.remove_suffix(1);
        if (!line.empty()) {
            try {
                out.push_back(line == "." ? KnotDiagram{} : parse_gauss_code(line));
            } catch (const ParseError& e) {
                throw ParseError(e.kind(), "line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        pos = end + 1;
    }
    return out;
}

std::string serialize_gauss_file(const std::vector<KnotDiagram>& diagrams) {
    std::string out;
    for (const auto& k : diagrams) {
        out += k.entries.empty() ? std::string(".") : serialize_gauss_code(k);
        out += '\n';
    }
    return out;
}

PlaneCurveInput make_plane_curve(std::vector<Vec2> vertices) {
    if (vertices.size() < 3) throw semantic("plane curve needs at least 3 points");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Vec2& a = vertices[i];
        const Vec2& b = vertices[(i + 1) % vertices.size()];
        if (!std::isfinite(a.x) || !std::isfinite(a.y)) throw syntax("non-finite coordinate");
        if (a == b) throw semantic("repeated consecutive point at index " + std::to_string(i));
    }
    return PlaneCurveInput{std::move(vertices)};
}

PlaneCurveInput parse_plane_curve(const json& doc) {
    const json* points = &doc;
    if (doc.is_object()) {
        check_header(doc, "plane_curve");
        if (doc.contains("builtin")) {
            const json& b = doc["builtin"];
            if (!b.is_object() || !b.contains("name") || !b["name"].is_string())
                throw syntax("builtin needs a \"name\"");
            return builtin_plane_curve(b["name"].get<std::string>(), int_param(b, "samples", 256), b);
        }
        if (!doc.contains("points")) throw syntax("plane_curve document needs \"points\" or \"builtin\"");
        points = &doc["points"];
    }
    if (!points->is_array()) throw syntax("points must be a list");
    std::vector<Vec2> v;
    v.reserve(points->size());
    for (const auto& p : *points) {
        if (!p.is_array() || p.size() != 2) throw syntax("each plane point must be a 2-element list");
        v.push_back({number_at(p[0], "coordinate"), number_at(p[1], "coordinate")});
    }
    return make_plane_curve(std::move(v));
}

PlaneCurveInput parse_plane_curve(std::string_view text) { return parse_plane_curve(parse_text(text)); }

json plane_curve_document(const PlaneCurveInput& c) {
    json pts = json::array();
    for (const auto& v : c.vertices) pts.push_back({v.x, v.y});
    return {{"format", "plane_curve"}, {"version", 1}, {"points", std::move(pts)}};
}

PlaneCurveInput builtin_plane_curve(const std::string& name, int samples, const json& params) {
    using std::numbers::pi;
    if (samples < 3) throw semantic("builtin needs samples >= 3");
    std::vector<Vec2> v;
    if (name == "circle" || name == "ellipse") {
        double a = name == "circle" ? real_param(params, "radius", 1.0) : real_param(params, "a", 2.0);
        double b = name == "circle" ? a : real_param(params, "b", 1.0);
        if (!(a > 0) || !(b > 0)) throw semantic("builtin radii must be positive");
        for (int k = 0; k < samples; ++k) {
            double t = 2 * pi * k / samples;
            v.push_back({a * std::cos(t), b * std::sin(t)});
        }
    } else if (name == "square") {
        double h = real_param(params, "side", 2.0) / 2;
        if (!(h > 0)) throw semantic("square side must be positive");
        v = {{-h, -h}, {h, -h}, {h, h}, {-h, h}};
    } else if (name == "figure_eight") {
        // Lemniscate of Gerono; the offset keeps vertices off the crossing.
        double s = real_param(params, "scale", 1.0);
        if (!(s > 0)) throw semantic("figure_eight scale must be positive");
        for (int k = 0; k < samples; ++k) {
            double t = 2 * pi * (k + 0.37) / samples;
            v.push_back({s * std::sin(t), s * std::sin(t) * std::cos(t)});
        }
    } else {
        throw semantic("unknown plane builtin '" + name + "'");
    }
    return make_plane_curve(std::move(v));
}

SpaceCurveInput parse_space_curve(const json& doc) {
    const json* points = &doc;
    if (doc.is_object()) {
        check_header(doc, "space_curve");
        if (doc.contains("builtin")) {
            const json& b = doc["builtin"];
            if (!b.is_object() || !b.contains("name") || !b["name"].is_string())
                throw syntax("builtin needs a \"name\"");
            BuiltinSpaceCurve bc;
            bc.name = b["name"].get<std::string>();
            if (bc.name != "circle" && bc.name != "torus_knot") throw semantic("unknown space builtin '" + bc.name + "'");
            bc.samples = int_param(b, "samples", bc.samples);
            bc.p = int_param(b, "p", bc.p);
            bc.q = int_param(b, "q", bc.q);
            bc.major_radius = real_param(b, "major_radius", bc.major_radius);
            bc.minor_radius = real_param(b, "minor_radius", bc.minor_radius);
            bc.radius = real_param(b, "radius", bc.radius);
            if (bc.samples < 3) throw semantic("builtin needs samples >= 3");
            return SpaceCurveInput{bc};
        }
        if (!doc.contains("points")) throw syntax("space_curve document needs \"points\" or \"builtin\"");
        points = &doc["points"];
    }
    if (!points->is_array()) throw syntax("points must be a list");
    std::vector<Vec3> v;
    v.reserve(points->size());
    for (const auto& p : *points) {
        if (!p.is_array() || p.size() != 3) throw syntax("each space point must be a 3-element list");
        v.push_back({number_at(p[0], "coordinate"), number_at(p[1], "coordinate"), number_at(p[2], "coordinate")});
    }
    if (v.size() < 3) throw semantic("space curve needs at least 3 points");
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] == v[(i + 1) % v.size()]) throw semantic("repeated consecutive point at index " + std::to_string(i));
    return SpaceCurveInput{std::move(v)};
}

SpaceCurveInput parse_space_curve(std::string_view text) { return parse_space_curve(parse_text(text)); }

json space_curve_document(const SpaceCurveInput& c) {
    if (const auto* b = std::get_if<BuiltinSpaceCurve>(&c.source)) {
        json jb = {{"name", b->name}, {"samples", b->samples}};
        if (b->name == "circle") {
            jb["radius"] = b->radius;
        } else {
            jb["p"] = b->p;
            jb["q"] = b->q;
            jb["major_radius"] = b->major_radius;
            jb["minor_radius"] = b->minor_radius;
        }
        return {{"format", "space_curve"}, {"version", 1}, {"builtin", std::move(jb)}};
    }
    json pts = json::array();
    for (const auto& v : std::get<std::vector<Vec3>>(c.source)) pts.push_back({v.x, v.y, v.z});
    return {{"format", "space_curve"}, {"version", 1}, {"points", std::move(pts)}};
}

json space_curve_document(const SpaceCurve& c) { return space_curve_document(SpaceCurveInput{c.vertices()}); }

SpaceCurve resolve_space_curve(const SpaceCurveInput& input) {
    using std::numbers::pi;
    if (const auto* pts = std::get_if<std::vector<Vec3>>(&input.source)) return SpaceCurve(*pts);
    const auto& b = std::get<BuiltinSpaceCurve>(input.source);
    if (b.samples < 3) throw semantic("builtin needs samples >= 3");
    std::vector<Vec3> v;
    v.reserve(b.samples);
    if (b.name == "circle") {
        if (!(b.radius > 0)) throw semantic("circle radius must be positive");
        for (int k = 0; k < b.samples; ++k) {
            double t = 2 * pi * k / b.samples;
            v.push_back({b.radius * std::cos(t), b.radius * std::sin(t), 0.0});
        }
    } else if (b.name == "torus_knot") {
        if (!(b.major_radius > b.minor_radius) || !(b.minor_radius > 0))
            throw semantic("torus_knot needs major_radius > minor_radius > 0");
        if (b.p == 0 || b.q == 0) throw semantic("torus_knot needs nonzero p and q");
        for (int k = 0; k < b.samples; ++k) {
            double t = 2 * pi * k / b.samples;
            double rho = b.major_radius + b.minor_radius * std::cos(b.q * t);
            v.push_back({rho * std::cos(b.p * t), rho * std::sin(b.p * t), b.minor_radius * std::sin(b.q * t)});
        }
    } else {
        throw semantic("unknown space builtin '" + b.name + "'");
    }
    return SpaceCurve(std::move(v));
}

json to_json(const Rational& r) { return r.str(); }

json to_json(const McEstimate& e) {
    return {{"value", e.value}, {"std_error", e.std_error}, {"samples", e.samples}, {"seed", e.seed}};
}

std::string content_digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace crofton
