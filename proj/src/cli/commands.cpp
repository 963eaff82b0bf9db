#include "crofton/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include "acceptance/criteria.hpp"
#include "crofton/chords.hpp"
#include "crofton/codecs.hpp"
#include "crofton/errors.hpp"
#include "crofton/knots.hpp"
#include "crofton/mcint.hpp"
#include "crofton/plane.hpp"

namespace crofton::cli {

namespace {

ParseError input_error(const std::string& what) { return ParseError(ParseError::Kind::syntax, what); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json parse_json(const std::string& text, const std::string& path) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

std::uint64_t count_arg(const std::string& s, const char* what) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || !(v >= 1) || v != std::floor(v) || v > 9.2e18)
        throw input_error(std::string(what) + " must be a positive integer, got '" + s + "'");
    return static_cast<std::uint64_t>(v);
}

// key=value pairs for builtin curves.
json builtin_params(const std::vector<std::string>& kv) {
    json p = json::object();
    for (const auto& item : kv) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw input_error("--param expects key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
        std::size_t used = 0;
        double x = 0;
        try {
            x = std::stod(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != value.size()) throw input_error("--param " + key + " needs a number");
        p[key] = x;
    }
    return p;
}

struct Source {
    std::string label;  // file path or builtin:name
    std::string bytes;  // hashed into the input digest
    bool planar = false;
    PlaneCurveInput plane;
    SpaceCurve space = SpaceCurve({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
};

SpaceCurve flat(const PlaneCurveInput& c) {
    std::vector<Vec3> v;
    for (const auto& p : c.vertices) v.push_back({p.x, p.y, 0});
    return SpaceCurve(std::move(v));
}

Source from_plane(std::string label, std::string bytes, PlaneCurveInput c) {
    Source s;
    s.label = std::move(label);
    s.bytes = std::move(bytes);
    s.planar = true;
    s.space = flat(c);
    s.plane = std::move(c);
    return s;
}

Source load_file(const std::string& path) {
    std::string text = read_file(path);
    const json doc = parse_json(text, path);
    if (doc.is_object() && doc.value("format", "") == "space_curve") {
        Source s;
        s.label = path;
        s.bytes = std::move(text);
        s.space = resolve_space_curve(parse_space_curve(doc));
        return s;
    }
    PlaneCurveInput c = parse_plane_curve(doc);
    return from_plane(path, std::move(text), std::move(c));
}

Source load_builtin(const std::string& name, int vertices, const json& params, bool prefer_space) {
    const bool space_name = name == "circle" || name == "torus_knot";
    if (prefer_space && space_name) {
        BuiltinSpaceCurve b;
        b.name = name;
        b.samples = vertices;
        if (params.contains("p")) b.p = static_cast<int>(params["p"].get<double>());
        if (params.contains("q")) b.q = static_cast<int>(params["q"].get<double>());
        b.major_radius = params.value("major_radius", b.major_radius);
        b.minor_radius = params.value("minor_radius", b.minor_radius);
        b.radius = params.value("radius", b.radius);
        const SpaceCurveInput in{b};
        Source s;
        s.label = "builtin:" + name;
        s.bytes = space_curve_document(in).dump();
        s.space = resolve_space_curve(in);
        s.planar = s.space.is_horizontal();
        return s;
    }
    PlaneCurveInput c = builtin_plane_curve(name, vertices, params);
    std::string bytes = plane_curve_document(c).dump();
    return from_plane("builtin:" + name, std::move(bytes), std::move(c));
}

std::string digest_of(const std::vector<Source>& sources) {
    std::string all;
    for (const auto& s : sources) all += s.bytes;
    return content_digest(all);
}

json rationals(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(to_json(r));
    return a;
}

json point(Vec2 p) { return json::array({p.x, p.y}); }

struct Report {
    json results = json::object();
    std::string digest;
    int exit = ok;
};

// ---- v2 ----

struct V2Args {
    std::string file;
    std::string method = "both";
};

Report v2_command(const V2Args& a, std::ostream& err) {
    const std::string text = read_file(a.file);
    Report r;
    r.digest = content_digest(text);
    json list = json::array();
    for (const KnotDiagram& k : parse_gauss_file(text)) {
        const ResolutionTrace tr = descending_resolution(k);
        const PairCounts pc = signed_pair_counts(tr.original), pd = signed_pair_counts(tr.descending);
        const V2Bounds b = check_v2_bounds(k);
        json d = {
            {"gauss", serialize_gauss_code(k)},
            {"n", k.crossing_count()},
            {"c_plus", pc.c_plus},
            {"c_minus", pc.c_minus},
            {"c_plus_descending", pd.c_plus},
            {"c_minus_descending", pd.c_minus},
            {"flipped", tr.flipped},
            {"linking_numbers", rationals(linking_numbers(tr.original))},
            {"linking_numbers_descending", rationals(linking_numbers(tr.descending))},
            {"bound_ok", b.bound_ok},
            {"integrality_ok", b.integrality_ok},
        };
        if (a.method == "chords" || a.method == "both") d["v2_chords"] = to_json(v2_chords(k));
        if (a.method == "linking" || a.method == "both") d["v2_linking"] = to_json(v2_linking(k));
        if (a.method == "both") {
            const bool agree = v2_chords(k) == v2_linking(k);
            d["methods_agree"] = agree;
            if (!agree) {
                err << "consistency: chord and linking formulas disagree on " << serialize_gauss_code(k) << "\n";
                r.exit = consistency_error;
            }
        }
        d["v2"] = a.method == "linking" ? d["v2_linking"] : d["v2_chords"];
        list.push_back(std::move(d));
    }
    r.results["method"] = a.method;
    r.results["diagrams"] = std::move(list);
    return r;
}

// ---- arnold ----

struct CurveArgs {
    std::vector<std::string> curves;
    std::vector<std::string> builtins;
    std::vector<std::string> params;
    int vertices = 256;
};

std::vector<Source> load_sources(const CurveArgs& a, bool prefer_space) {
    std::vector<Source> out;
    for (const auto& f : a.curves) out.push_back(load_file(f));
    const json p = builtin_params(a.params);
    for (const auto& b : a.builtins) out.push_back(load_builtin(b, a.vertices, p, prefer_space));
    return out;
}

const Source& single(const std::vector<Source>& s) {
    if (s.size() != 1) throw input_error("expected exactly one curve (--curve FILE or --builtin NAME)");
    return s[0];
}

const PlaneCurveInput& plane_of(const Source& s) {
    if (!s.planar) throw PreconditionError(s.label + " is not a plane curve");
    return s.plane;
}

Report arnold_command(const CurveArgs& a, std::ostream& err) {
    const auto sources = load_sources(a, false);
    const Source& s = single(sources);
    const UnicursalCurve u = analyze_curve(plane_of(s));
    const ArnoldReport ar = arnold_invariants(u);
    const FaceMap fm = face_windings(u);
    Report r;
    r.digest = digest_of(sources);
    json dps = json::array();
    for (int k = 0; k < u.size(); ++k) {
        const DoublePoint& d = u.double_points[k];
        dps.push_back({{"position", point(d.position)},
                       {"params", {d.params[0], d.params[1]}},
                       {"frame_sign", d.frame_sign},
                       {"index", ar.per_double_point_index[k]}});
    }
    json faces = json::array();
    for (const Face& f : fm.faces)
        faces.push_back({{"winding", f.winding}, {"area", f.area}, {"sample", point(f.sample)}, {"arcs", f.arcs}});
    json tri = json::array();
    for (const auto& t : vanishing_triangles(u, fm)) tri.push_back({{"face", t.face}, {"sign", t.sign}});
    const bool identities = arnold_identities_hold(ar);
    r.results = {
        {"n", ar.n},
        {"alpha", to_json(ar.alpha)},
        {"i_plus", to_json(ar.i_plus)},
        {"i_minus", to_json(ar.i_minus)},
        {"st", to_json(ar.st)},
        {"j_plus", to_json(ar.j_plus)},
        {"j_minus", to_json(ar.j_minus)},
        {"whitney_index", ar.whitney_index},
        {"per_double_point_index", ar.per_double_point_index},
        {"double_points", std::move(dps)},
        {"faces", std::move(faces)},
        {"unbounded_face", fm.unbounded_face},
        {"vanishing_triangles", std::move(tri)},
        {"identities_hold", identities},
    };
    if (!identities) {
        err << "consistency: Arnold identities fail\n";
        r.exit = consistency_error;
    }
    return r;
}

// ---- integrate ----

struct IntegrateArgs {
    CurveArgs curve;
    std::string integral;
    std::string samples = "1e6";
    std::uint64_t seed = 0;
    std::uint32_t strata = 64;
    int threads = 0;
    double near = 0.5;
    std::string method;
};

Report integrate_command(const IntegrateArgs& a, std::ostream& err) {
    McConfig cfg;
    cfg.samples = count_arg(a.samples, "--samples");
    cfg.seed = a.seed;
    cfg.strata = a.strata;
    cfg.threads = a.threads;
    cfg.near_curve_fraction = a.near;
    try {
        validate(cfg);
    } catch (const std::invalid_argument& e) {
        throw PreconditionError(e.what());
    }
    const bool plane_integral = a.integral == "crofton" || a.integral == "crofton-classical";
    const auto sources = load_sources(a.curve, !plane_integral);
    Report r;
    r.digest = digest_of(sources);
    r.results = {{"integral", a.integral},
                 {"config",
                  {{"samples", cfg.samples},
                   {"seed", cfg.seed},
                   {"strata", cfg.strata},
                   {"near_curve_fraction", cfg.near_curve_fraction}}}};
    json inputs = json::array();
    for (const auto& s : sources) inputs.push_back(s.label);
    r.results["inputs"] = std::move(inputs);

    if (a.integral == "linking") {
        if (sources.size() != 2) throw input_error("linking needs exactly two curves");
        r.results["estimate"] = to_json(gauss_linking(sources[0].space, sources[1].space, cfg));
        return r;
    }
    const Source& s = single(sources);
    if (a.integral == "ix") {
        const IxMethod m = a.method == "uniform" ? IxMethod::uniform : IxMethod::pair_importance;
        r.results["method"] = a.method == "uniform" ? "uniform" : "pair_importance";
        r.results["estimate"] = to_json(mc_ix(s.space, cfg, m));
    } else if (a.integral == "iy") {
        const IyMethod m = a.method == "simplex" ? IyMethod::simplex_sampling : IyMethod::analytic_simplex;
        r.results["method"] = a.method == "simplex" ? "simplex_sampling" : "analytic_simplex";
        r.results["estimate"] = to_json(mc_iy(s.space, cfg, m));
    } else if (a.integral == "v2") {
        const McEstimate x = mc_ix(s.space, cfg), y = mc_iy(s.space, cfg);
        r.results["ix"] = to_json(x);
        r.results["iy"] = to_json(y);
        r.results["estimate"] = to_json(McEstimate{x.value - y.value, std::hypot(x.std_error, y.std_error),
                                                   cfg.samples, cfg.seed});
    } else if (a.integral == "crofton") {
        r.results["estimate"] = to_json(crofton_generalized(plane_of(s), cfg));
        r.results["expected"] = std::pow(std::numbers::pi, 3) / 6;
    } else {
        const ClassicalCrofton c = crofton_classical(plane_of(s), cfg);
        r.results["estimate"] = to_json(c.sin_form);
        r.results["area_form"] = to_json(c.area_form);
        r.results["vertex_term"] = c.vertex_term;
        r.results["expected"] = 2 * std::numbers::pi * std::numbers::pi;
    }
    err << "integrate " << a.integral << ": " << r.results["estimate"].dump() << "\n";
    return r;
}

// ---- lift ----

struct LiftArgs {
    CurveArgs curve;
    std::string resolution = "descending";
    double epsilon = 0;
    std::string out;
    int arc_samples = 24;
};

std::vector<bool> read_resolution(const std::string& path, int n) {
    const json doc = parse_json(read_file(path), path);
    if (!doc.is_object() || doc.value("format", "") != "resolution" || doc.value("version", 0) != 1)
        throw input_error(path + ": expected {\"format\": \"resolution\", \"version\": 1, ...}");
    if (!doc.contains("first_over") || !doc["first_over"].is_array())
        throw input_error(path + ": \"first_over\" must be a list of booleans");
    std::vector<bool> out;
    for (const auto& x : doc["first_over"]) {
        if (!x.is_boolean()) throw input_error(path + ": \"first_over\" entries must be booleans");
        out.push_back(x.get<bool>());
    }
    if (static_cast<int>(out.size()) != n)
        throw ParseError(ParseError::Kind::semantic, path + ": resolution has " + std::to_string(out.size()) +
                                                         " entries for " + std::to_string(n) + " double points");
    return out;
}

Report lift_command(const LiftArgs& a, std::ostream& err) {
    const auto sources = load_sources(a.curve, false);
    const Source& s = single(sources);
    const UnicursalCurve u = analyze_curve(plane_of(s));
    const std::vector<bool> first_over =
        a.resolution == "descending" ? std::vector<bool>(u.size(), true) : read_resolution(a.resolution, u.size());
    const SpaceCurve g = lift_diagram(u, first_over, a.epsilon, a.arc_samples);
    const std::string doc = space_curve_document(g).dump(2) + "\n";
    std::ofstream out(a.out, std::ios::binary);
    if (!out || !(out << doc)) throw PreconditionError("cannot write '" + a.out + "'");
    err << "lift: wrote " << g.size() << " vertices to " << a.out << "\n";
    Report r;
    r.digest = digest_of(sources);
    json fo = json::array();
    for (bool b : first_over) fo.push_back(static_cast<bool>(b));
    r.results = {{"epsilon", a.epsilon},
                 {"max_epsilon", max_lift_epsilon(u)},
                 {"double_points", u.size()},
                 {"semicircles", u.size()},
                 {"first_over", std::move(fo)},
                 {"gauss", serialize_gauss_code(knot_diagram(u, first_over))},
                 {"vertices", g.size()},
                 {"output", a.out},
                 {"output_digest", content_digest(doc)}};
    return r;
}

// ---- selftest ----

struct SelftestArgs {
    std::vector<int> only;
    int threads = 0;
};

Report selftest_command(const SelftestArgs& a, std::ostream& err) {
    acceptance::Options opt;
    opt.only = a.only;
    opt.threads = a.threads;
    Report r;
    r.digest = content_digest("selftest");
    json list = json::array();
    bool all = true, expected = true;
    for (const auto& c : acceptance::run_suite(opt, err)) {
        list.push_back({{"id", c.id},
                        {"title", c.title},
                        {"pass", c.pass},
                        {"known_unattainable", acceptance::unattainable(c.id)},
                        {"detail", c.detail},
                        {"seconds", c.seconds}});
        all = all && c.pass;
        expected = expected && (c.pass || acceptance::unattainable(c.id));
    }
    r.results = {{"criteria", std::move(list)}, {"all_pass", all}};
    if (!expected) r.exit = consistency_error;
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Configuration-space integrals, v2, and Arnold invariants of plane curves", "crofton"};
    app.require_subcommand(1);

    V2Args v2a;
    auto* v2 = app.add_subcommand("v2", "v2 of each diagram in a Gauss-code file");
    v2->add_option("diagram_file", v2a.file, "Gauss-code file")->required();
    v2->add_option("--method", v2a.method, "chords, linking or both")
        ->check(CLI::IsMember({"chords", "linking", "both"}));

    auto add_curve = [](CLI::App* sub, CurveArgs& c) {
        sub->add_option("--curve,curve_file", c.curves, "plane_curve or space_curve file");
        sub->add_option("--builtin", c.builtins, "circle, ellipse, square, figure_eight, torus_knot");
        sub->add_option("--param", c.params, "builtin parameter key=value");
        sub->add_option("--vertices", c.vertices, "vertices of a builtin curve")->check(CLI::Range(3, 1 << 24));
    };

    CurveArgs arn;
    auto* arnold = app.add_subcommand("arnold", "Arnold invariants and face windings of a plane curve");
    add_curve(arnold, arn);

    IntegrateArgs ia;
    auto* integ = app.add_subcommand("integrate", "Monte Carlo estimate of one of the integrals");
    integ->add_option("--integral", ia.integral, "ix, iy, v2, crofton, crofton-classical or linking")
        ->required()
        ->check(CLI::IsMember({"ix", "iy", "v2", "crofton", "crofton-classical", "linking"}));
    add_curve(integ, ia.curve);
    integ->add_option("--samples", ia.samples, "sample count, e.g. 4e6");
    integ->add_option("--seed", ia.seed);
    integ->add_option("--strata", ia.strata)->check(CLI::PositiveNumber);
    integ->add_option("--threads", ia.threads, "0 = all available")->check(CLI::NonNegativeNumber);
    integ->add_option("--near-fraction", ia.near)->check(CLI::Range(0.0, 1.0));
    integ->add_option("--method", ia.method, "ix: pair or uniform; iy: analytic or simplex")
        ->check(CLI::IsMember({"pair", "uniform", "analytic", "simplex"}));

    LiftArgs la;
    auto* lift = app.add_subcommand("lift", "Lift a plane curve to a space curve with over-pass semicircles");
    add_curve(lift, la.curve);
    lift->add_option("--resolution", la.resolution, "descending or a resolution file");
    lift->add_option("--epsilon", la.epsilon)->required();
    lift->add_option("--out", la.out, "space_curve file to write")->required();
    lift->add_option("--arc-samples", la.arc_samples)->check(CLI::Range(2, 100000));

    SelftestArgs sa;
    auto* self = app.add_subcommand("selftest", "Run the acceptance suite");
    self->add_option("--only", sa.only, "criterion numbers")->delimiter(',');
    self->add_option("--threads", sa.threads)->check(CLI::NonNegativeNumber);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return parse_error;
    }

    json command = {{"name", app.get_subcommands().front()->get_name()}, {"argv", args}};
    const auto t0 = std::chrono::steady_clock::now();
    auto emit = [&](json report) {
        report["wall_time_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        out << report.dump(2) << std::endl;
    };
    auto fail = [&](int code, const char* kind, const std::string& msg) {
        err << kind << ": " << msg << "\n";
        emit({{"command", command}, {"error", {{"kind", kind}, {"message", msg}}}, {"exit_code", code}});
        return code;
    };
    try {
        Report r;
        if (v2->parsed())
            r = v2_command(v2a, err);
        else if (arnold->parsed())
            r = arnold_command(arn, err);
        else if (integ->parsed())
            r = integrate_command(ia, err);
        else if (lift->parsed())
            r = lift_command(la, err);
        else
            r = selftest_command(sa, err);
        emit({{"command", command}, {"input_digest", r.digest}, {"results", r.results}});
        return r.exit;
    } catch (const ParseError& e) {
        return fail(parse_error, "PARSE_ERROR", e.what());
    } catch (const GenericityViolation& e) {
        return fail(genericity_error, "GENERICITY_VIOLATION", std::string(to_string(e.kind())) + ": " + e.what());
    } catch (const PreconditionError& e) {
        return fail(precondition_error, "PRECONDITION_FAILED", e.what());
    } catch (const ConsistencyError& e) {
        return fail(consistency_error, "CONSISTENCY_FAILURE", e.what());
    }
}

}  // namespace crofton::cli
