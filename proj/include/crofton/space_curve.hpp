#pragma once

#include <cstddef>
#include <vector>

#include "crofton/vec.hpp"

namespace crofton {

// Closed polyline in R^3 parametrized by normalized arc length t in [0,1).
// Segment i runs from vertex i to vertex (i+1) mod N.
class SpaceCurve {
public:
    explicit SpaceCurve(std::vector<Vec3> vertices);

    const std::vector<Vec3>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    double length() const { return length_; }

    const Vec3& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
    Vec3 edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }
    double edge_length(std::size_t i) const { return knots_[i + 1] - knots_[i]; }

    // Parameter of vertex i for i in [0, N]; param(N) == 1.
    double param(std::size_t i) const { return knots_[i] / length_; }
    std::size_t segment_at(double t) const;
    Vec3 point_at(double t) const;
    // dγ/dt on segment i; constant per segment.
    Vec3 velocity(std::size_t i) const { return edge(i) * (length_ / edge_length(i)); }

    // All vertices share one z coordinate.
    bool is_horizontal() const { return horizontal_; }
    Vec3 centroid() const;
    double diameter() const;

    // Smallest distance between segments that do not share a vertex.
    double min_nonadjacent_distance() const;

private:
    std::vector<Vec3> vertices_;
    std::vector<double> knots_;  // cumulative arc length, knots_[N] == length_
    double length_ = 0;
    bool horizontal_ = false;
};

// Closest distance between segments [p0,p1] and [q0,q1].
double segment_distance(const Vec3& p0, const Vec3& p1, const Vec3& q0, const Vec3& q1);

}  // namespace crofton
