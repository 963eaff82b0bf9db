#include "acceptance/criteria.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "crofton/chords.hpp"
#include "crofton/codecs.hpp"
#include "crofton/errors.hpp"
#include "crofton/knots.hpp"
#include "crofton/mcint.hpp"
#include "crofton/plane.hpp"
#include "oracles/curves.hpp"
#include "oracles/diagrams.hpp"
#include "oracles/skein.hpp"

namespace acceptance {

namespace {

using namespace crofton;
using std::numbers::pi;

std::string num(double x, int precision = 6) {
    std::ostringstream s;
    s << std::setprecision(precision) << x;
    return s.str();
}

std::string pct(double x) { return num(100 * x, 3) + "%"; }

SpaceCurve flat(const PlaneCurveInput& c) {
    std::vector<Vec3> v;
    for (const auto& p : c.vertices) v.push_back({p.x, p.y, 0});
    return SpaceCurve(std::move(v));
}

McConfig config(const Options& opt, std::uint64_t samples, std::uint64_t seed) {
    McConfig c;
    c.samples = samples;
    c.seed = seed;
    c.threads = opt.threads;
    return c;
}

double z_score(const McEstimate& e, double target) {
    if (e.std_error == 0) return e.value == target ? 0 : std::numeric_limits<double>::infinity();
    return (e.value - target) / e.std_error;
}

std::string est(const McEstimate& e) { return num(e.value) + " ± " + num(e.std_error, 2); }

struct Check {
    bool pass = true;
    std::ostringstream note;
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            note << "[violated: " << what << "] ";
        }
    }
};

// Prediction for I_Y of a plane curve when each double point contributes (π - φ)/(8π),
// φ the angle between the two oriented tangents, instead of 1/16.
double angle_corrected_iy(const UnicursalCurve& u) {
    double s = 0;
    for (const auto& d : u.double_points) {
        const Vec2 a = u.edge(d.edges[0]), b = u.edge(d.edges[1]);
        const double phi = std::acos(std::clamp(dot(a, b) / (norm(a) * norm(b)), -1.0, 1.0));
        s += (pi - phi) / (8 * pi);
    }
    return s + alpha(u).to_double() - u.size() / 8.0 + 1.0 / 24;
}

// Trefoil shadow sin t + a sin 2t, cos t - a cos 2t with a chosen so that all three
// crossings are orthogonal, scaled by 3.
PlaneCurveInput orthogonal_trefoil_shadow(int m) {
    constexpr double a = 1.5815, scale = 3.0;
    return oracle::sample(
        [](double t) {
            return Vec2{scale * (std::sin(t) + a * std::sin(2 * t)), scale * (std::cos(t) - a * std::cos(2 * t))};
        },
        m);
}

const std::vector<KnotDiagram>& corpus() {
    static const std::vector<KnotDiagram> c = [] {
        std::mt19937_64 rng(20240601);
        std::vector<KnotDiagram> out;
        for (int i = 0; i < 500; ++i) out.push_back(oracle::realizable_diagram(10, rng));
        return out;
    }();
    return c;
}

Result c1(const Options& opt) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const double target = pi * pi * pi / 6;
    const McConfig cfg = config(opt, 4'000'000, 7);
    const McEstimate circle = crofton_generalized(builtin_plane_curve("circle", 256), cfg);
    const McEstimate ellipse = crofton_generalized(builtin_plane_curve("ellipse", 256, {{"a", 2.0}, {"b", 1.0}}), cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double e1 = std::abs(circle.value / target - 1), e2 = std::abs(ellipse.value / target - 1);
    c.expect(e1 < 0.02, "circle within 2%");
    c.expect(e2 < 0.02, "ellipse within 2%");
    c.expect(secs < 60, "runtime < 60 s");
    c.note << "circle " << est(circle) << " (" << pct(e1) << "), ellipse 2:1 " << est(ellipse) << " (" << pct(e2)
           << "), target " << num(target) << ", " << num(secs, 3) << " s";
    return {1, c.pass, "generalized Crofton", c.note.str()};
}

Result c2(const Options& opt) {
    Check c;
    const double target = 2 * pi * pi;
    const McConfig cfg = config(opt, 1'000'000, 11);
    const std::pair<const char*, PlaneCurveInput> cases[] = {
        {"circle", builtin_plane_curve("circle", 256)},
        {"square", builtin_plane_curve("square", 4)},
        {"ellipse 3:1", builtin_plane_curve("ellipse", 256, {{"a", 3.0}, {"b", 1.0}})},
    };
    for (const auto& [name, curve] : cases) {
        const ClassicalCrofton r = crofton_classical(curve, cfg);
        const double e = std::abs(r.sin_form.value / target - 1);
        c.expect(e < 0.02, std::string(name) + " within 2%");
        c.expect(std::abs(r.area_form.value / r.sin_form.value - 1) < 1e-9, std::string(name) + " area form agrees");
        c.note << name << " " << est(r.sin_form) << " (" << pct(e) << ", vertex term " << num(r.vertex_term, 4) << "); ";
    }
    c.note << "target " << num(target);
    return {2, c.pass, "classical Crofton", c.note.str()};
}

Result c3(const Options& opt) {
    Check c;
    const McConfig cfg = config(opt, 400'000, 3);
    const McEstimate circle = mc_iy(flat(builtin_plane_curve("circle", 1024)), cfg);
    const McEstimate eight = mc_iy(flat(builtin_plane_curve("figure_eight", 1024)), cfg);
    const double zc = z_score(circle, 1.0 / 24), ze = z_score(eight, 5.0 / 48);
    c.expect(std::abs(zc) <= 3, "circle within 3σ of 1/24");
    c.expect(circle.std_error / circle.value < 0.05, "circle σ/value < 5%");
    c.expect(std::abs(ze) <= 3, "figure-eight within 3σ of 5/48");
    c.note << "circle " << est(circle) << " (z=" << num(zc, 3) << ", σ/v=" << pct(circle.std_error / circle.value)
           << "), figure-eight " << est(eight) << " (z=" << num(ze, 3) << ")";
    return {3, c.pass, "I_Y values", c.note.str()};
}

Result c4(const Options&) {
    Check c;
    const KnotDiagram empty = parse_gauss_code("");
    const KnotDiagram trefoil = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+");
    const KnotDiagram eight = parse_gauss_code("O1+ U2- O3+ U4- O2- U1+ O4- U3+");
    for (const auto* k : {&empty, &trefoil, &eight})
        c.expect(v2_chords(*k) == v2_linking(*k), "both formulas agree");
    const auto a2 = [](const KnotDiagram& k) { return Rational(oracle::conway_coefficient(oracle::conway(k), 2)); };
    const Rational shift(-1, 24);
    c.expect(v2_chords(empty) == shift, "empty diagram gives -1/24");
    c.expect(v2_chords(trefoil) == Rational(23, 24), "trefoil gives 23/24");
    c.expect(v2_chords(trefoil) == a2(trefoil) + shift, "trefoil matches oracle");
    c.expect(v2_chords(eight) == a2(eight) + shift, "figure-eight knot matches oracle");
    c.note << "empty " << v2_chords(empty) << ", trefoil " << v2_chords(trefoil) << " (oracle a2=" << a2(trefoil)
           << "), figure-eight knot " << v2_chords(eight) << " (oracle a2=" << a2(eight) << ")";
    return {4, c.pass, "exact v2", c.note.str()};
}

Result c5(const Options&) {
    Check c;
    int dual = 0, rotation = 0, reversal = 0, max_n = 0;
    for (const KnotDiagram& k : corpus()) {
        const Rational v = v2_chords(k);
        max_n = std::max(max_n, k.crossing_count());
        if (v != v2_linking(k)) ++dual;
        for (int s = 1; s < 2 * k.crossing_count(); ++s)
            if (v2_chords(rotate_basepoint(k, s)) != v) {
                ++rotation;
                break;
            }
        if (v2_chords(reverse_orientation(k)) != v) ++reversal;
    }
    c.expect(dual == 0, "chords = linking");
    c.expect(rotation == 0, "basepoint rotation");
    c.expect(reversal == 0, "orientation reversal");
    c.note << corpus().size() << " realizable diagrams, n ≤ " << max_n << ": formula mismatches " << dual
           << ", rotation failures " << rotation << ", reversal failures " << reversal;
    return {5, c.pass, "dual-formula equivalence", c.note.str()};
}

Result c6(const Options&) {
    Check c;
    int bound = 0, integral = 0;
    for (const KnotDiagram& k : corpus()) {
        const V2Bounds b = check_v2_bounds(k);
        if (!b.bound_ok) ++bound;
        if (!b.integrality_ok) ++integral;
    }
    c.expect(bound == 0, "|v2| ≤ n(n-1)/4 + 1/24");
    c.expect(integral == 0, "v2 + 1/24 integral");
    c.note << corpus().size() << " diagrams: bound violations " << bound << ", integrality violations " << integral;
    return {6, c.pass, "bounds and integrality", c.note.str()};
}

Result c7(const Options&) {
    Check c;
    std::mt19937_64 rng(77);
    int identity = 0, faces = 0, bounds = 0, max_n = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const UnicursalCurve u = analyze_curve(oracle::random_generic_polygon(8, rng));
        const int n = u.size();
        max_n = std::max(max_n, n);
        const ArnoldReport r = arnold_invariants(u);
        if (!arnold_identities_hold(r)) ++identity;

        const FaceMap fm = face_windings(u);
        bool ok = static_cast<int>(fm.faces.size()) == n + 2 && fm.faces[fm.unbounded_face].winding == 0;
        for (const Arc& a : fm.arcs) ok = ok && fm.faces[a.left_face].winding - fm.faces[a.right_face].winding == 1;
        for (const Face& f : fm.faces) ok = ok && std::abs(f.winding) <= n + 1;
        if (!ok) ++faces;

        const auto n2 = static_cast<std::int64_t>(n) * n;
        bool in = abs(r.alpha) <= Rational(n2, 8) && abs(r.i_minus) <= Rational(n2 + 2 * n) &&
                  abs(r.st) <= Rational(2 * n2 + 2 * n) && abs(r.j_minus) <= Rational(5 * n2 + 4 * n);
        for (int i : r.per_double_point_index) in = in && std::abs(i) <= 4 * n + 6;
        if (!in) ++bounds;
    }
    c.expect(identity == 0, "Arnold identities");
    c.expect(faces == 0, "face map invariants");
    c.expect(bounds == 0, "invariant bounds");
    c.note << "200 random polygons, n ≤ " << max_n << ": identity failures " << identity << ", face-map failures "
           << faces << ", bound violations " << bounds;
    return {7, c.pass, "Arnold identities", c.note.str()};
}

Result c8(const Options&) {
    Check c;
    struct Move {
        const char* name;
        PlaneCurveInput before, after;
    };
    const int m = 900;
    const Move moves[] = {
        {"I (kink i=2)", oracle::limacon(0.5, m), oracle::limacon(1.5, m)},
        {"I (kink i=-2)", oracle::lemniscate(m), oracle::circle(m)},
        {"II+", oracle::limacon_bump(0.6, m), oracle::limacon_bump(1.4, m)},
        {"II-", oracle::dumbbell(-0.3, m), oracle::dumbbell(0.3, m)},
        {"III", oracle::trefoil_push(3.0, m), oracle::trefoil_push(2.0, m)},
    };
    for (const Move& mv : moves) {
        const UnicursalCurve ub = analyze_curve(mv.before), ua = analyze_curve(mv.after);
        const ArnoldReport b = arnold_invariants(ub), a = arnold_invariants(ua);
        const Rational da = a.alpha - b.alpha, di = a.i_minus - b.i_minus;
        const std::string name = mv.name;
        if (name.starts_with("I ")) {
            // The vanishing kink is the double point missing after the move.
            c.expect(a.n == b.n - 1 && b.n == 1, name + " removes one kink");
            const int i = b.per_double_point_index.at(0);
            c.expect(da == Rational(-1, 8), name + " Δα = -1/8");
            c.expect(di == Rational(-(i - 2), 4), name + " ΔI- = -(i-2)/4");
        } else if (name == "II+") {
            c.expect(a.n == b.n + 2, name + " adds two double points");
            c.expect(da == Rational(0), name + " Δα = 0");
            c.expect(di == Rational(0), name + " ΔI- = 0");
        } else if (name == "II-") {
            c.expect(a.n == b.n + 2, name + " adds two double points");
            c.expect(da == Rational(1, 4), name + " Δα = 1/4");
            c.expect(di == Rational(-2), name + " ΔI- = -2");
        } else {
            c.expect(a.n == b.n, name + " keeps n");
            c.expect(da == Rational(-1, 4), name + " Δα = -1/4");
            c.expect(di == Rational(3), name + " ΔI- = 3");
            c.expect(a.st - b.st == Rational(1), name + " ΔSt = 1");
            c.expect(a.j_plus == b.j_plus && a.j_minus == b.j_minus, name + " ΔJ± = 0");
            const auto neg = vanishing_triangles(ub), pos = vanishing_triangles(ua);
            c.expect(std::any_of(neg.begin(), neg.end(), [](auto t) { return t.sign < 0; }) &&
                         std::any_of(pos.begin(), pos.end(), [](auto t) { return t.sign > 0; }),
                     name + " triangle sign goes from - to +");
            c.note << name << ": ΔSt=" << (a.st - b.st) << " ΔJ+=" << (a.j_plus - b.j_plus)
                   << " ΔJ-=" << (a.j_minus - b.j_minus) << "; ";
        }
        c.note << name << ": Δα=" << da << " ΔI-=" << di << "; ";
    }
    return {8, c.pass, "move fixtures", c.note.str()};
}

Result c9(const Options& opt) {
    Check c;
    std::mt19937_64 rng(9);
    const std::pair<const char*, PlaneCurveInput> cases[] = {
        {"circle", builtin_plane_curve("circle", 512)},
        {"figure-eight", builtin_plane_curve("figure_eight", 512)},
        {"random 3-point curve", oracle::random_smooth_curve(3, rng, 512)},
    };
    const McConfig cfg = config(opt, 1'000'000, 5);
    for (const auto& [name, curve] : cases) {
        const UnicursalCurve u = analyze_curve(curve);
        const double target = (alpha(u) - Rational(u.size(), 16) + Rational(1, 24)).to_double();
        const McEstimate e = mc_iy(flat(curve), cfg);
        const double z = z_score(e, target);
        c.expect(std::abs(z) <= 3, std::string(name) + " within 3σ");
        const double corrected = angle_corrected_iy(u);
        c.note << name << " " << est(e) << " vs α - n/16 + 1/24 = " << num(target) << " (z=" << num(z, 3)
               << "; crossing-angle prediction " << num(corrected) << ", z=" << num(z_score(e, corrected), 3) << "); ";
    }
    return {9, c.pass, "combinatorics-analysis bridge", c.note.str()};
}

Result c10(const Options& opt) {
    Check c;
    const UnicursalCurve u = analyze_curve(orthogonal_trefoil_shadow(3600));
    const std::vector<bool> descending(u.size(), true);
    const double limit = ix_limit(chord_diagram(knot_diagram(u, descending))).to_double();
    const McConfig cfg = config(opt, 4'000'000, 7);
    std::vector<double> gaps;
    for (double eps : {0.2, 0.1, 0.05}) {
        const McEstimate e = mc_ix(lift_diagram(u, descending, eps), cfg);
        gaps.push_back(std::abs(e.value - limit));
        c.note << "ε=" << eps << " " << est(e) << "; ";
    }
    c.expect(gaps[0] > gaps[1] && gaps[1] > gaps[2], "gap decreasing");
    c.expect(gaps[2] < 0.05 * std::abs(limit), "final gap < 5%");
    c.note << "limit " << num(limit) << ", final gap " << pct(gaps[2] / std::abs(limit));
    return {10, c.pass, "K_ε limit", c.note.str()};
}

Result c11(const Options& opt) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    BuiltinSpaceCurve torus;
    torus.name = "torus_knot";
    const McEstimate t = v2_numeric(resolve_space_curve({torus}), config(opt, 10'000'000, 13));
    const McEstimate circle = v2_numeric(flat(builtin_plane_curve("circle", 1024)), config(opt, 1'000'000, 13));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double rel = std::abs(t.value / (23.0 / 24) - 1), z = z_score(circle, -1.0 / 24);
    c.expect(rel < 0.10, "torus knot within 10% of 23/24");
    c.expect(std::abs(z) <= 3, "circle within 3σ of -1/24");
    c.expect(secs < 600, "runtime < 10 min");
    c.note << "(2,3)-torus knot " << est(t) << " (" << pct(rel) << "), circle " << est(circle) << " (z=" << num(z, 3)
           << "), " << num(secs, 3) << " s";
    return {11, c.pass, "v2 = I_X - I_Y", c.note.str()};
}

Result c12(const Options&) {
    Check c;
    BuiltinSpaceCurve tk;
    tk.name = "torus_knot";
    tk.samples = 128;
    const SpaceCurve torus = resolve_space_curve({tk});
    const PlaneCurveInput circle = builtin_plane_curve("circle", 128);
    std::vector<Vec3> a, b;
    for (int k = 0; k < 96; ++k) {
        const double s = 2 * pi * k / 96;
        a.push_back({std::cos(s), std::sin(s), 0});
        b.push_back({1 + std::cos(s), 0, std::sin(s)});
    }
    const SpaceCurve ring_a(a), ring_b(b);
    const std::pair<const char*, std::function<std::string(const McConfig&)>> runs[] = {
        {"ix", [&](const McConfig& cfg) { return to_json(mc_ix(torus, cfg)).dump(); }},
        {"iy", [&](const McConfig& cfg) { return to_json(mc_iy(torus, cfg)).dump(); }},
        {"v2", [&](const McConfig& cfg) { return to_json(v2_numeric(torus, cfg)).dump(); }},
        {"crofton", [&](const McConfig& cfg) { return to_json(crofton_generalized(circle, cfg)).dump(); }},
        {"crofton-classical",
         [&](const McConfig& cfg) { return to_json(crofton_classical(circle, cfg).sin_form).dump(); }},
        {"linking", [&](const McConfig& cfg) { return to_json(gauss_linking(ring_a, ring_b, cfg)).dump(); }},
    };
    for (const auto& [name, run] : runs) {
        McConfig cfg;
        cfg.samples = 100'000;
        cfg.seed = 42;
        cfg.threads = 1;
        const std::string one = run(cfg);
        cfg.threads = 8;
        const std::string eight = run(cfg);
        cfg.exec = Execution::serial;
        const std::string serial = run(cfg);
        c.expect(one == eight && one == serial, std::string(name) + " bit-identical");
        c.note << name << (one == eight && one == serial ? " identical; " : " DIFFERS; ");
    }
    c.note << "threads 1 vs 8 vs serial kernels";
    return {12, c.pass, "determinism", c.note.str()};
}

}  // namespace

bool unattainable(int id) { return id == 9; }

Result run_criterion(int id, const Options& opt) {
    using Fn = Result (*)(const Options&);
    static const Fn table[kCriteria] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12};
    if (id < 1 || id > kCriteria) throw std::out_of_range("no criterion " + std::to_string(id));
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
        r = table[id - 1](opt);
    } catch (const std::exception& e) {
        r = {id, false, "criterion " + std::to_string(id), std::string("exception: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!r.pass && unattainable(id))
        r.detail += " | known: I_Y of a plane curve depends on its crossing angles; α - n/16 + 1/24 holds only "
                    "when every crossing is orthogonal";
    return r;
}

std::string format_line(const Result& r) {
    std::ostringstream s;
    s << (r.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << r.id << "  " << r.title << ": " << r.detail
      << "  [" << std::fixed << std::setprecision(1) << r.seconds << " s]";
    return s.str();
}

std::vector<Result> run_suite(const Options& opt, std::ostream& out) {
    std::vector<Result> all;
    for (int id = 1; id <= kCriteria; ++id) {
        if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
        all.push_back(run_criterion(id, opt));
        out << format_line(all.back()) << std::endl;
    }
    return all;
}

}  // namespace acceptance
