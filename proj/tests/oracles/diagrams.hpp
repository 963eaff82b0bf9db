#pragma once

#include <random>
#include <string>
#include <vector>

#include "crofton/codecs.hpp"
#include "crofton/space_curve.hpp"

namespace oracle {

// Uniform matching on 2n points, uniform signs, uniform over/under per crossing.
crofton::KnotDiagram formal_diagram(int n, std::mt19937_64& rng);

// Random polygon in the unit cube, projected to the xy-plane. A genuine knot diagram.
crofton::SpaceCurve random_space_polygon(int vertices, std::mt19937_64& rng);
crofton::KnotDiagram realizable_diagram(int max_crossings, std::mt19937_64& rng);

struct MovePair {
    std::string move;  // "R1", "R2", "R3"
    crofton::KnotDiagram before, after;
};

// Diagrams of one space curve before and after a planar isotopy through a
// Reidemeister move, with heights chosen so the knot type is unchanged.
std::vector<MovePair> reidemeister_pairs();

}  // namespace oracle
