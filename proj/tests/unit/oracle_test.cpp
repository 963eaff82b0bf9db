#include <gtest/gtest.h>

#include "oracles/skein.hpp"

using namespace crofton;
using oracle::conway;

// Known Conway polynomials on diagrams of at most 6 crossings.
TEST(Skein, Unknots) {
    EXPECT_EQ(conway(KnotDiagram{}), (oracle::Conway{1}));
    EXPECT_EQ(conway(parse_gauss_code("O1+ U1+")), (oracle::Conway{1}));
    EXPECT_EQ(conway(parse_gauss_code("O1+ U2- O2- U1+")), (oracle::Conway{1}));
}

TEST(Skein, Trefoils) {
    for (const char* s : {"O1+ U2+ O3+ U1+ O2+ U3+", "O1- U2- O3- U1- O2- U3-"})
        EXPECT_EQ(oracle::conway_coefficient(conway(parse_gauss_code(s)), 2), 1) << s;
}

TEST(Skein, FigureEight) {
    EXPECT_EQ(oracle::conway_coefficient(conway(parse_gauss_code("O1+ U2- O3+ U4- O2- U1+ O4- U3+")), 2), -1);
}

TEST(Skein, HopfLink) {
    // Two components sharing two positive crossings: ∇ = z.
    const oracle::LinkCode hopf{{{1, Pass::over, 1}, {2, Pass::under, 1}}, {{1, Pass::under, 1}, {2, Pass::over, 1}}};
    const oracle::Conway c = conway(hopf);
    EXPECT_EQ(oracle::conway_coefficient(c, 0), 0);
    EXPECT_EQ(oracle::conway_coefficient(c, 1), 1);
}

TEST(Skein, Cinquefoil) {
    // (2,5) torus knot: ∇ = 1 + 3z^2 + z^4
    const oracle::Conway c = conway(parse_gauss_code("O1+ U2+ O3+ U4+ O5+ U1+ O2+ U3+ O4+ U5+"));
    EXPECT_EQ(oracle::conway_coefficient(c, 2), 3);
    EXPECT_EQ(oracle::conway_coefficient(c, 4), 1);
}
