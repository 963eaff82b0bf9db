#include "crofton/space_curve.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace crofton {

SpaceCurve::SpaceCurve(std::vector<Vec3> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) throw std::invalid_argument("space curve needs at least 3 vertices");
    knots_.resize(n + 1);
    knots_[0] = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3& a = vertices_[i];
        if (!std::isfinite(a.x) || !std::isfinite(a.y) || !std::isfinite(a.z))
            throw std::invalid_argument("non-finite space curve vertex");
        double len = norm(vertex(i + 1) - a);
        if (!(len > 0)) throw std::invalid_argument("repeated consecutive vertex at index " + std::to_string(i));
        knots_[i + 1] = knots_[i] + len;
    }
    length_ = knots_[n];
    horizontal_ = std::all_of(vertices_.begin(), vertices_.end(), [&](const Vec3& v) { return v.z == vertices_[0].z; });
}

std::size_t SpaceCurve::segment_at(double t) const {
    double s = t * length_;
    auto it = std::upper_bound(knots_.begin(), knots_.end(), s);
    std::size_t i = static_cast<std::size_t>(it - knots_.begin());
    i = i == 0 ? 0 : i - 1;
    return std::min(i, vertices_.size() - 1);
}

Vec3 SpaceCurve::point_at(double t) const {
    std::size_t i = segment_at(t);
    double f = (t * length_ - knots_[i]) / edge_length(i);
    return vertex(i) + edge(i) * f;
}

Vec3 SpaceCurve::centroid() const {
    Vec3 c;
    for (std::size_t i = 0; i < size(); ++i) c += (vertex(i) + vertex(i + 1)) * (0.5 * edge_length(i));
    return c * (1.0 / length_);
}

double SpaceCurve::diameter() const {
    double d = 0;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j) d = std::max(d, norm2(vertices_[i] - vertices_[j]));
    return std::sqrt(d);
}

double SpaceCurve::min_nonadjacent_distance() const {
    const std::size_t n = size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            best = std::min(best, segment_distance(vertex(i), vertex(i + 1), vertex(j), vertex(j + 1)));
        }
    return best;
}

double segment_distance(const Vec3& p0, const Vec3& p1, const Vec3& q0, const Vec3& q1) {
    const Vec3 d1 = p1 - p0, d2 = q1 - q0, r = p0 - q0;
    const double a = dot(d1, d1), e = dot(d2, d2), f = dot(d2, r);
    const double c = dot(d1, r), b = dot(d1, d2);
    const double denom = a * e - b * b;
    double s = 0, t = 0;
    if (denom > 1e-14 * a * e)
        s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
    t = (b * s + f) / e;
    if (t < 0) {
        t = 0;
        s = std::clamp(-c / a, 0.0, 1.0);
    } else if (t > 1) {
        t = 1;
        s = std::clamp((b - c) / a, 0.0, 1.0);
    }
    return norm(p0 + d1 * s - (q0 + d2 * t));
}

}  // namespace crofton
