#pragma once

#include <vector>

#include "crofton/space_curve.hpp"
#include "crofton/strata.hpp"
#include "crofton/vec.hpp"

namespace crofton::detail {

// Field points z for the Y-integral. The proposal mixes three half-Cauchy laws:
// a tube around the segments (offset drawn in the normal plane), balls around the
// vertices, and a ball around the centroid. For a horizontal curve only z above
// its plane is drawn, and every density is for that half-space.
class FieldSampler {
public:
    FieldSampler(const SpaceCurve& g, double near_fraction);

    bool half_space() const { return half_; }
    Vec3 draw(Stream& s) const;

    // Φ(z) = ∫_{Δ3} [E(z,t1), E(z,t2), E(z,t3)] in closed form, and the proposal density at z.
    void evaluate(const Vec3& z, double& phi, double& density) const;

    // Stand-alone pieces, used by the reference sampler and the tests.
    double phi(const Vec3& z) const;
    double density(const Vec3& z) const;

private:
    double radial(double r) const;  // half-Cauchy density of the offset length
    Vec3 direction(Stream& s) const;

    std::vector<Vec3> start_, unit_, n1_, n2_;
    std::vector<double> len_;
    AliasTable seg_table_, vertex_table_;
    std::vector<double> vertex_weight_;
    Vec3 centroid_;
    double length_ = 0, delta_ = 0;
    double f_tube_ = 0, f_vertex_ = 0, f_far_ = 0;
    bool half_ = false;
};

}  // namespace crofton::detail
