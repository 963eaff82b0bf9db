#include "oracles/diagrams.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "crofton/errors.hpp"
#include "crofton/plane.hpp"
#include "oracles/curves.hpp"

namespace oracle {

using crofton::GaussEntry;
using crofton::KnotDiagram;
using crofton::Pass;
using crofton::SpaceCurve;
using crofton::Vec3;
using std::numbers::pi;

KnotDiagram formal_diagram(int n, std::mt19937_64& rng) {
    std::vector<int> pos(2 * n);
    for (int i = 0; i < 2 * n; ++i) pos[i] = i;
    std::shuffle(pos.begin(), pos.end(), rng);
    std::bernoulli_distribution coin(0.5);
    std::vector<GaussEntry> e(2 * n);
    for (int c = 0; c < n; ++c) {
        const int sign = coin(rng) ? 1 : -1;
        const bool first_over = coin(rng);
        e[pos[2 * c]] = {c + 1, first_over ? Pass::over : Pass::under, sign};
        e[pos[2 * c + 1]] = {c + 1, first_over ? Pass::under : Pass::over, sign};
    }
    return crofton::make_knot_diagram(std::move(e));
}

SpaceCurve random_space_polygon(int vertices, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Vec3> v(vertices);
    for (auto& p : v) p = {u(rng), u(rng), u(rng)};
    return SpaceCurve(std::move(v));
}

KnotDiagram realizable_diagram(int max_crossings, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(4, 11);
    for (;;) {
        try {
            KnotDiagram k = crofton::diagram_from_projection(random_space_polygon(count(rng), rng));
            if (k.crossing_count() <= max_crossings) return k;
        } catch (const crofton::GenericityViolation&) {
        }
    }
}

namespace {

// Lifts a plane curve family member with a height function of the curve parameter.
KnotDiagram lifted(const crofton::PlaneCurveInput& c, int m, double (*height)(double)) {
    std::vector<Vec3> v;
    for (int k = 0; k < m; ++k) {
        const double t = 2 * pi * (k + 0.37) / m;
        v.push_back({c.vertices[k].x, c.vertices[k].y, height(t)});
    }
    return crofton::diagram_from_projection(SpaceCurve(std::move(v)));
}

double trefoil_height(double t) {
    const double d = std::remainder(t, 2 * pi) / 0.4;
    return std::sin(3 * t) - 3 * std::exp(-d * d);
}

double dumbbell_height(double t) { return std::sin(t); }

}  // namespace

std::vector<MovePair> reidemeister_pairs() {
    std::vector<MovePair> out;
    const KnotDiagram trefoil = crofton::parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+");
    for (const Pass first : {Pass::over, Pass::under}) {
        const Pass second = first == Pass::over ? Pass::under : Pass::over;
        for (int sign : {1, -1}) {
            for (int at : {0, 2, 5}) {
                std::vector<GaussEntry> e = trefoil.entries;
                e.insert(e.begin() + at, {GaussEntry{9, first, sign}, GaussEntry{9, second, sign}});
                out.push_back({"R1", trefoil, crofton::make_knot_diagram(std::move(e))});
            }
        }
    }
    const int m = 900;
    out.push_back({"R2", lifted(dumbbell(-0.3, m), m, dumbbell_height), lifted(dumbbell(0.3, m), m, dumbbell_height)});
    out.push_back({"R3", lifted(trefoil_push(3.0, m), m, trefoil_height), lifted(trefoil_push(2.0, m), m, trefoil_height)});
    return out;
}

}  // namespace oracle
