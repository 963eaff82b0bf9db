#include <algorithm>
#include <cmath>
#include <numbers>

#include "crofton/mcint.hpp"
#include "tags.hpp"
#include "y_field.hpp"

namespace crofton {

namespace detail {

namespace {

using std::numbers::pi;

constexpr double kVertexShareOfNear = 0.25;

Vec3 normalized(const Vec3& v) { return v * (1.0 / norm(v)); }

}  // namespace

FieldSampler::FieldSampler(const SpaceCurve& g, double near_fraction) {
    const std::size_t n = g.size();
    half_ = g.is_horizontal();
    length_ = g.length();
    delta_ = 0.5 * g.diameter();
    centroid_ = g.centroid();
    f_tube_ = near_fraction * (1 - kVertexShareOfNear);
    f_vertex_ = near_fraction * kVertexShareOfNear;
    f_far_ = 1 - near_fraction;

    std::vector<double> seg_w(n), vert_w(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vec3 e = g.edge(j);
        const double l = g.edge_length(j);
        const Vec3 t = e * (1.0 / l);
        start_.push_back(g.vertex(j));
        unit_.push_back(t);
        len_.push_back(l);
        Vec3 a, b;
        if (half_) {
            a = normalized(Vec3{-t.y, t.x, 0});
            b = {0, 0, 1};
        } else {
            Vec3 axis = std::abs(t.x) <= std::abs(t.y) && std::abs(t.x) <= std::abs(t.z) ? Vec3{1, 0, 0}
                        : std::abs(t.y) <= std::abs(t.z)                                ? Vec3{0, 1, 0}
                                                                                        : Vec3{0, 0, 1};
            a = normalized(cross(t, axis));
            b = cross(t, a);
        }
        n1_.push_back(a);
        n2_.push_back(b);
        seg_w[j] = l;
    }
    for (std::size_t v = 0; v < n; ++v) vert_w[v] = 0.5 * (len_[(v + n - 1) % n] + len_[v]);
    seg_table_ = AliasTable(seg_w);
    vertex_table_ = AliasTable(vert_w);
    vertex_weight_.resize(n);
    for (std::size_t v = 0; v < n; ++v) vertex_weight_[v] = vert_w[v] / vertex_table_.total();
}

double FieldSampler::radial(double r) const {
    const double x = r / delta_;
    return 2.0 / (pi * delta_ * (1 + x * x));
}

Vec3 FieldSampler::direction(Stream& s) const {
    const double w = half_ ? s.uniform() : 2 * s.uniform() - 1;
    const double phi = 2 * pi * s.uniform();
    const double rho = std::sqrt(std::max(0.0, 1 - w * w));
    return {rho * std::cos(phi), rho * std::sin(phi), w};
}

Vec3 FieldSampler::draw(Stream& s) const {
    const double pick = s.uniform();
    const double r = delta_ * std::tan(0.5 * pi * s.uniform());
    if (pick < f_tube_) {
        const std::size_t j = seg_table_.sample(s);
        const double lambda = s.uniform() * len_[j];
        const double phi = (half_ ? pi : 2 * pi) * s.uniform();
        return start_[j] + unit_[j] * lambda + (n1_[j] * std::cos(phi) + n2_[j] * std::sin(phi)) * r;
    }
    if (pick < f_tube_ + f_vertex_) {
        const std::size_t v = vertex_table_.sample(s);
        return start_[v] + direction(s) * r;
    }
    return centroid_ + direction(s) * r;
}

void FieldSampler::evaluate(const Vec3& z, double& phi, double& density) const {
    const std::size_t n = start_.size();
    const double sphere = half_ ? 2 * pi : 4 * pi;
    const double ring = half_ ? pi : 2 * pi;
    Vec3 sum, acc;
    double tube = 0, ball = 0;
    Vec3 x = z - start_[0];
    double r = norm(x);
    const Vec3 x0 = x;
    const double r0 = r;
    for (std::size_t j = 0; j < n; ++j) {
        const Vec3 xn = j + 1 < n ? z - start_[j + 1] : x0;
        const double rn = j + 1 < n ? norm(xn) : r0;
        const Vec3& t = unit_[j];
        const double l = len_[j];
        const double p = dot(x, t);
        const Vec3 perp = x - t * p;
        const double rho2 = dot(perp, perp);
        const double u1 = -p, u2 = l - p;
        // ∫ dλ / |x - λ t|^3 over the segment, written to avoid cancellation.
        double k;
        if (u1 >= 0 || u2 <= 0)
            k = l * (u2 + u1) / (r * rn * (u2 * r + u1 * rn));
        else
            k = (u2 / rn - u1 / r) / rho2;
        const Vec3 b = cross(x, t) * k;
        acc += cross(sum, b);
        sum += b;
        if (u1 < 0 && u2 >= 0) {
            const double rho = std::sqrt(rho2);
            tube += radial(rho) / (ring * rho);
        }
        ball += vertex_weight_[j] * radial(r) / (sphere * r * r);
        x = xn;
        r = rn;
    }
    phi = dot(acc, sum);
    const Vec3 dc = z - centroid_;
    const double rc2 = norm2(dc);
    density = f_tube_ * tube / length_ + f_vertex_ * ball + f_far_ * radial(std::sqrt(rc2)) / (sphere * rc2);
}

double FieldSampler::phi(const Vec3& z) const {
    double p, q;
    evaluate(z, p, q);
    return p;
}

double FieldSampler::density(const Vec3& z) const {
    double p, q;
    evaluate(z, p, q);
    return q;
}

}  // namespace detail

namespace {

using std::numbers::pi;

const double kIyScale = -1.0 / (64 * pi * pi * pi);

// Proposal of the reference sampler: z = γ(u) + r ω with ω isotropic, plus the centroid ball.
class IsotropicSampler {
public:
    IsotropicSampler(const SpaceCurve& g, double near_fraction)
        : g_(g), near_(near_fraction), half_(g.is_horizontal()), delta_(0.5 * g.diameter()), c_(g.centroid()) {}

    Vec3 draw(Stream& s) const {
        const double pick = s.uniform();
        const double r = delta_ * std::tan(0.5 * pi * s.uniform());
        const double w = half_ ? s.uniform() : 2 * s.uniform() - 1;
        const double phi = 2 * pi * s.uniform();
        const double rho = std::sqrt(std::max(0.0, 1 - w * w));
        const Vec3 omega{rho * std::cos(phi), rho * std::sin(phi), w};
        const Vec3 base = pick < near_ ? g_.point_at(s.uniform()) : c_;
        return base + omega * r;
    }

    double density(const Vec3& z) const {
        const double hemi = half_ ? 2 : 1;
        double line = 0;
        for (std::size_t j = 0; j < g_.size(); ++j) {
            const double l = g_.edge_length(j);
            const Vec3 t = g_.edge(j) * (1.0 / l);
            const Vec3 x = z - g_.vertex(j);
            const double p = dot(x, t);
            const double rho2 = norm2(x - t * p);
            const double u1 = -p, u2 = l - p;
            auto piece = [&](double a2) {
                const double a = std::sqrt(a2);
                return std::atan2(a * l, a2 + u1 * u2) / a;
            };
            line += piece(rho2) - piece(rho2 + delta_ * delta_);
        }
        line /= 2 * pi * pi * delta_ * g_.length();
        const double rc = norm(z - c_);
        const double far = 2.0 / (pi * delta_ * (1 + (rc / delta_) * (rc / delta_))) / (4 * pi * rc * rc);
        return hemi * (near_ * line + (1 - near_) * far);
    }

private:
    const SpaceCurve& g_;
    double near_;
    bool half_;
    double delta_;
    Vec3 c_;
};

Vec3 field(const SpaceCurve& g, const Vec3& z, double t) {
    const std::size_t i = g.segment_at(t);
    const Vec3 d = z - g.point_at(t);
    const double r = norm(d);
    return cross(d, g.velocity(i)) * (1.0 / (r * r * r));
}

}  // namespace

McEstimate mc_iy(const SpaceCurve& g, const McConfig& cfg, IyMethod method) {
    validate(cfg);
    const double mirror = g.is_horizontal() ? 2.0 : 1.0;
    if (method == IyMethod::simplex_sampling) {
        const IsotropicSampler prop(g, cfg.near_curve_fraction);
        return run_strata(cfg, tags::iy_simplex, [&](Stream& s) {
            const Vec3 z = prop.draw(s);
            double t[3] = {s.uniform(), s.uniform(), s.uniform()};
            std::sort(t, t + 3);
            const double v = triple(field(g, z, t[0]), field(g, z, t[1]), field(g, z, t[2]));
            return mirror * kIyScale * v / (6.0 * prop.density(z));
        });
    }
    const detail::FieldSampler prop(g, cfg.near_curve_fraction);
    return run_strata(cfg, tags::iy, [&](Stream& s) {
        const Vec3 z = prop.draw(s);
        double phi, q;
        prop.evaluate(z, phi, q);
        return mirror * kIyScale * phi / q;
    });
}

McEstimate v2_numeric(const SpaceCurve& g, const McConfig& cfg) {
    const McEstimate x = mc_ix(g, cfg);
    const McEstimate y = mc_iy(g, cfg);
    return {x.value - y.value, std::hypot(x.std_error, y.std_error), cfg.samples, cfg.seed};
}

}  // namespace crofton
