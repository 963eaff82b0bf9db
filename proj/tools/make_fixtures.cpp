// Writes the curve fixtures under data/. Usage: make_fixtures DIR
#include <fstream>
#include <iostream>

#include "crofton/codecs.hpp"
#include "crofton/plane.hpp"
#include "oracles/curves.hpp"

namespace {

void write(const std::string& dir, const std::string& name, const crofton::PlaneCurveInput& c) {
    std::ofstream(dir + "/" + name + ".json") << crofton::plane_curve_document(c).dump(1) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_fixtures DIR\n";
        return 2;
    }
    const std::string dir = argv[1];
    write(dir, "lemniscate", oracle::lemniscate(400));
    write(dir, "trefoil_shadow", oracle::trefoil_shadow(600));
    write(dir, "limacon", oracle::limacon(0.5, 400));
    write(dir, "dumbbell_before", oracle::dumbbell(-0.3, 600));
    write(dir, "dumbbell_after", oracle::dumbbell(0.3, 600));
    write(dir, "trefoil_push_before", oracle::trefoil_push(3.0, 900));
    write(dir, "trefoil_push_after", oracle::trefoil_push(2.0, 900));
    write(dir, "star_5_2", oracle::star_polygon(5, 2));
    write(dir, "triple_point", crofton::make_plane_curve({{-2, 0}, {2, 0}, {1, 2}, {-1, -2}, {-1, 2}, {1, -2}}));
    std::ofstream(dir + "/knots.gauss") << "# trefoil, unknot, figure-eight\n"
                                           "O1+ U2+ O3+ U1+ O2+ U3+\n"
                                           ".\n"
                                           "O1+ U2- O3+ U4- O2- U1+ O4- U3+\n";
    std::ofstream(dir + "/malformed.gauss") << "O1+ U2+ O1+\n";
    std::ofstream(dir + "/lemniscate_under.json")
        << R"({"format": "resolution", "version": 1, "first_over": [false]})" << "\n";
    return 0;
}
