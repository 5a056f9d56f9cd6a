#ifndef ADSWEDGE_HOLOGRAPHY_HPP
#define ADSWEDGE_HOLOGRAPHY_HPP

// Conformal boundary as the projective null cone {xi : xi.xi = 0} / R_+ and
// the map alpha sending a wedge to its intersection with the boundary. The
// wedge inequalities are homogeneous of degree one, so they apply verbatim
// to rays.

#include <adswedge/ads_geometry.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace adswedge
{

inline constexpr double kNullTolerance = 1e-12;

class BoundaryRay
{
  public:
    // Rescales to Euclidean norm 1; only positive rescaling is a ray symmetry.
    explicit BoundaryRay(const Vector& xi)
    {
        if (xi.size() < 3 || !xi.allFinite())
            throw std::invalid_argument("ray needs at least 3 finite ambient coordinates");
        const double norm = xi.norm();
        if (norm == 0.0)
            throw std::invalid_argument("zero vector is not a boundary ray");
        xi_ = xi / norm;
        if (std::abs(Metric(static_cast<int>(xi.size()) - 1).square(xi_)) > kNullTolerance)
            throw std::invalid_argument("boundary ray must be a null vector");
    }

    const Vector& xi() const { return xi_; }
    int dimension() const { return static_cast<int>(xi_.size()) - 1; }

    bool operator==(const BoundaryRay& other) const
    {
        return xi_.size() == other.xi_.size() && (xi_ - other.xi_).norm() <= kNullTolerance;
    }

  private:
    Vector xi_;
};

// Removes the rounding drift of a transformed null vector by equalising the
// norms of its timelike (0, n) and spacelike parts. Inputs farther than
// rel_tol from the cone are rejected rather than projected.
inline Vector project_to_null_cone(const Vector& x, double rel_tol = 1e-8)
{
    const auto n = x.size() - 1;
    const double time = std::hypot(x[0], x[n]);
    const double space = x.segment(1, n - 1).norm();
    const double scale = std::max(time, space);
    if (scale == 0.0 || std::abs(time - space) > rel_tol * scale)
        throw std::invalid_argument("vector is not within rounding of the null cone");
    Vector y = x;
    const double target = 0.5 * (time + space);
    y[0] *= target / time;
    y[n] *= target / time;
    y.segment(1, n - 1) *= target / space;
    return y;
}

inline BoundaryRay apply(const GroupElement& g, const BoundaryRay& r)
{
    return BoundaryRay(project_to_null_cone(g.apply(r.xi())));
}

class BoundaryRegion
{
  public:
    explicit BoundaryRegion(Wedge w) : wedge_(std::move(w)) {}

    const Wedge& wedge_label() const { return wedge_; }

    bool contains(const BoundaryRay& r) const
    {
        if (r.dimension() != wedge_.dimension())
            throw std::invalid_argument("ray and region have different dimension");
        return wedge_.contains(r.xi());
    }

  private:
    Wedge wedge_;
};

inline BoundaryRegion alpha(const Wedge& w) { return BoundaryRegion(w); }

// Uniform on the boundary: (sin tau, omega, cos tau) / sqrt2 with omega on S^{n-2}.
inline BoundaryRay sample_boundary_ray(int n, Rng& rng)
{
    Vector xi(n + 1);
    Vector omega(n - 1);
    for (int i = 0; i < n - 1; ++i)
        omega[i] = rng.normal();
    omega /= omega.norm();
    const double tau = rng.uniform(0.0, 2.0 * std::numbers::pi);
    xi[0] = std::sin(tau);
    xi.segment(1, n - 1) = omega;
    xi[n] = std::cos(tau);
    return BoundaryRay(xi);
}

// Rays of alpha(w): lam applied to (sinh eta, cosh eta, v, sqrt(1+|v|^2)) with
// the variant's sign flips.
inline BoundaryRay sample_region_ray(const Wedge& w, Rng& rng)
{
    const int n = w.dimension();
    const auto [s1, sn] = variant_signs(w.variant());
    Vector xi(n + 1);
    const double eta = 2.0 * rng.normal();
    xi[0] = std::sinh(eta);
    xi[1] = s1 * std::cosh(eta);
    double v2 = 0.0;
    for (int i = 2; i < n; ++i) {
        xi[i] = std::sinh(1.5 * rng.normal());
        v2 += xi[i] * xi[i];
    }
    xi[n] = sn * std::sqrt(1.0 + v2);
    return BoundaryRay(project_to_null_cone(w.lam().apply(xi)));
}

// Mixture of whole-boundary rays and rays drawn from the given regions.
inline BoundaryRay sample_test_ray(int n, Rng& rng, const Wedge* a, const Wedge* b, int i)
{
    if (i % 3 == 1 && a != nullptr)
        return sample_region_ray(*a, rng);
    if (i % 3 == 2 && b != nullptr)
        return sample_region_ray(*b, rng);
    return sample_boundary_ray(n, rng);
}

// Count of rays where membership of g xi in alpha(g w) differs from
// membership of xi in alpha(w).
inline int check_alpha_intertwines(const GroupElement& g, const Wedge& w, int rays, std::uint64_t seed)
{
    const Wedge gw = map_region(g, w);
    const BoundaryRegion before = alpha(w);
    const BoundaryRegion after = alpha(gw);
    Rng rng(seed);
    int violations = 0;
    for (int i = 0; i < rays; ++i) {
        const BoundaryRay r = sample_test_ray(w.dimension(), rng, &w, &gw, i);
        if (after.contains(apply(g, r)) != before.contains(r))
            ++violations;
    }
    return violations;
}

struct OrderComplementReport
{
    bool bulk_inclusion = false;  // plain Monte Carlo subset test w1 subset w2 in the bulk
    int inclusion_violations = 0; // rays in alpha(w1) \ alpha(w2), counted when bulk_inclusion holds
    int complement_violations = 0; // rays in alpha(w) and alpha(w') for w in {w1, w2}
    int rays = 0;
};

inline OrderComplementReport check_alpha_order_and_complement(const Wedge& w1, const Wedge& w2, int rays,
                                                              std::uint64_t seed)
{
    if (w1.dimension() != w2.dimension())
        throw std::invalid_argument("wedges of different dimension");
    OrderComplementReport report;
    report.rays = rays;
    report.bulk_inclusion =
        properly_contained(w1, w2, {.eps = 0.0, .points_per_trial = std::max(rays, 1), .seed = seed}).kind ==
        VerdictKind::holds_at_confidence;
    const BoundaryRegion a1 = alpha(w1);
    const BoundaryRegion a2 = alpha(w2);
    const BoundaryRegion c1 = alpha(opposite(w1));
    const BoundaryRegion c2 = alpha(opposite(w2));
    const Wedge o1 = opposite(w1);
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int i = 0; i < rays; ++i) {
        const BoundaryRay r = sample_test_ray(w1.dimension(), rng, &w1, i % 2 == 0 ? &w2 : &o1, i);
        if (report.bulk_inclusion && a1.contains(r) && !a2.contains(r))
            ++report.inclusion_violations;
        if ((a1.contains(r) && c1.contains(r)) || (a2.contains(r) && c2.contains(r)))
            ++report.complement_violations;
    }
    return report;
}

} // namespace adswedge

#endif // ADSWEDGE_HOLOGRAPHY_HPP
