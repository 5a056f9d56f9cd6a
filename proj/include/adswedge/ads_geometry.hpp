#ifndef ADSWEDGE_ADS_GEOMETRY_HPP
#define ADSWEDGE_ADS_GEOMETRY_HPP

// The AdS quadric x.x = 1, worldlines, wedges lambda W_R and the causal
// predicates built from them. Wedges are open; membership uses strict
// inequalities, and Monte Carlo subset tests keep sampled points a fixed
// distance away from the boundary of the sampled region.

#include <adswedge/lie_group.hpp>
#include <adswedge/random.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adswedge
{

inline constexpr double kQuadricTolerance = 1e-10;
inline constexpr double kBoundaryMargin = 1e-9;

inline double quadric_defect(const Vector& x)
{
    const Metric g(static_cast<int>(x.size()) - 1);
    return std::abs(g.square(x) - 1.0) / std::max(1.0, x.squaredNorm());
}

class AdSPoint
{
  public:
    explicit AdSPoint(Vector coords, double tol = kQuadricTolerance) : coords_(std::move(coords))
    {
        if (coords_.size() < 3)
            throw std::invalid_argument("AdS point needs at least 3 ambient coordinates");
        if (!coords_.allFinite() || quadric_defect(coords_) > tol)
            throw std::invalid_argument("point is not on the AdS quadric");
    }

    const Vector& coords() const { return coords_; }
    int dimension() const { return static_cast<int>(coords_.size()) - 1; }
    double operator[](int i) const { return coords_[i]; }

  private:
    Vector coords_;
};

inline AdSPoint apply(const GroupElement& g, const AdSPoint& x) { return AdSPoint(g.apply(x.coords())); }

enum class WedgeVariant
{
    base,            // W_R       = { x1 > |x0|,  xn > 0}
    opposite,        // W_R'      = {-x1 > |x0|,  xn > 0}
    conjugate,       // -W_R      = {-x1 > |x0|, -xn > 0}
    conjugate_prime, // -W_R'     = { x1 > |x0|, -xn > 0}
};

inline constexpr WedgeVariant kAllVariants[] = {WedgeVariant::base, WedgeVariant::opposite, WedgeVariant::conjugate,
                                                WedgeVariant::conjugate_prime};

inline std::string_view variant_name(WedgeVariant v)
{
    switch (v) {
    case WedgeVariant::base: return "base";
    case WedgeVariant::opposite: return "opposite";
    case WedgeVariant::conjugate: return "conjugate";
    case WedgeVariant::conjugate_prime: return "conjugate_prime";
    }
    return "unknown";
}

// signs (s1, sn) with the reference region { s1 y1 > |y0|, sn yn > 0 }
inline std::pair<double, double> variant_signs(WedgeVariant v)
{
    switch (v) {
    case WedgeVariant::base: return {1.0, 1.0};
    case WedgeVariant::opposite: return {-1.0, 1.0};
    case WedgeVariant::conjugate: return {-1.0, -1.0};
    case WedgeVariant::conjugate_prime: return {1.0, -1.0};
    }
    throw std::invalid_argument("unknown wedge variant");
}

// Works on any ambient vector, including null rays: each inequality is
// invariant under positive rescaling.
inline bool in_reference_region(WedgeVariant v, const Vector& y)
{
    const auto [s1, sn] = variant_signs(v);
    const auto n = y.size() - 1;
    return s1 * y[1] > std::abs(y[0]) && sn * y[n] > 0.0;
}

// Distance-like margin s1 y1 - |y0| of the first inequality; the second one
// is never the binding constraint on the quadric since |yn| >= 1 there.
inline double reference_margin(WedgeVariant v, const Vector& y)
{
    const auto [s1, sn] = variant_signs(v);
    (void)sn;
    return s1 * y[1] - std::abs(y[0]);
}

inline WedgeVariant opposite_variant(WedgeVariant v)
{
    switch (v) {
    case WedgeVariant::base: return WedgeVariant::opposite;
    case WedgeVariant::opposite: return WedgeVariant::base;
    case WedgeVariant::conjugate: return WedgeVariant::conjugate_prime;
    case WedgeVariant::conjugate_prime: return WedgeVariant::conjugate;
    }
    throw std::invalid_argument("unknown wedge variant");
}

inline WedgeVariant negated_variant(WedgeVariant v)
{
    switch (v) {
    case WedgeVariant::base: return WedgeVariant::conjugate;
    case WedgeVariant::conjugate: return WedgeVariant::base;
    case WedgeVariant::opposite: return WedgeVariant::conjugate_prime;
    case WedgeVariant::conjugate_prime: return WedgeVariant::opposite;
    }
    throw std::invalid_argument("unknown wedge variant");
}

class Wedge
{
  public:
    Wedge(GroupElement lam, WedgeVariant variant = WedgeVariant::base)
        : lam_(std::move(lam)), inverse_(lam_.inverse().matrix()), variant_(variant)
    {
        if (lam_.component() != Component::identity)
            throw std::invalid_argument("wedge labels must lie in the identity component");
    }

    static Wedge reference(int n, WedgeVariant variant = WedgeVariant::base)
    {
        return Wedge(GroupElement::identity(n), variant);
    }

    const GroupElement& lam() const { return lam_; }
    WedgeVariant variant() const { return variant_; }
    int dimension() const { return lam_.dimension(); }

    Vector pull_back(const Vector& x) const { return inverse_ * x; }

    bool contains(const Vector& x) const { return in_reference_region(variant_, pull_back(x)); }

    double margin(const Vector& x) const { return reference_margin(variant_, pull_back(x)); }

  private:
    GroupElement lam_;
    Matrix inverse_;
    WedgeVariant variant_;
};

inline bool in_region(const Wedge& w, const AdSPoint& x)
{
    if (x.dimension() != w.dimension())
        throw std::invalid_argument("point and wedge have different dimension");
    return w.contains(x.coords());
}

// (lam W)' = lam W'
inline Wedge opposite(const Wedge& w) { return Wedge(w.lam(), opposite_variant(w.variant())); }

// -(lam W) = lam (-W)
inline Wedge conjugate(const Wedge& w) { return Wedge(w.lam(), negated_variant(w.variant())); }

inline Wedge conjugate_prime(const Wedge& w) { return opposite(conjugate(w)); }

inline Wedge map_region(const GroupElement& g, const Wedge& w)
{
    if (g.component() != Component::identity)
        throw std::invalid_argument("map_region needs an identity-component element");
    return Wedge(g * w.lam(), w.variant());
}

// ---------------------------------------------------------------------------
// sampling

// Adapted coordinates for the base region: (a sinh eta, a cosh eta, u, sqrt(1+a^2+|u|^2)).
// Other variants flip the signs of x1 and xn.
inline Vector adapted_point(WedgeVariant v, double a, double eta, const Vector& u)
{
    const auto [s1, sn] = variant_signs(v);
    const auto n = u.size() + 2;
    Vector x(n + 1);
    x[0] = a * std::sinh(eta);
    x[1] = s1 * a * std::cosh(eta);
    for (Eigen::Index i = 0; i < u.size(); ++i)
        x[2 + i] = u[i];
    x[n] = sn * std::sqrt(1.0 + a * a + u.squaredNorm());
    return x;
}

struct SamplingOptions
{
    double boundary_fraction = 0.5;
    double min_margin = kBoundaryMargin;
};

// Reference-region samples, half of them biased toward the boundary
// x1 = |x0| with log-uniform margin.
inline Vector sample_reference_point(WedgeVariant v, int n, Rng& rng, const SamplingOptions& opt = {})
{
    Vector u(n - 2);
    const bool near_boundary = rng.uniform() < opt.boundary_fraction;
    double a;
    double eta;
    if (near_boundary) {
        eta = std::clamp(2.0 * rng.normal(), -8.0, 8.0);
        const double margin = std::exp(rng.uniform(std::log(std::max(opt.min_margin, 1e-8)), 0.0));
        a = margin * std::exp(std::abs(eta));
        for (int i = 0; i < n - 2; ++i)
            u[i] = rng.tan_transform();
    } else {
        a = std::exp(1.5 * rng.normal());
        eta = std::clamp(2.0 * rng.normal(), -8.0, 8.0);
        for (int i = 0; i < n - 2; ++i)
            u[i] = std::sinh(1.5 * rng.normal());
    }
    if (a * std::exp(-std::abs(eta)) < opt.min_margin)
        a = opt.min_margin * std::exp(std::abs(eta)) * (1.0 + 1e-6);
    return adapted_point(v, a, eta, u);
}

inline Vector sample_wedge_point(const Wedge& w, Rng& rng, const SamplingOptions& opt = {})
{
    return w.lam().apply(sample_reference_point(w.variant(), w.dimension(), rng, opt));
}

// Whole quadric: (sqrt(1+|u|^2) sin tau, u, sqrt(1+|u|^2) cos tau).
inline Vector sample_quadric_point(int n, Rng& rng)
{
    Vector x(n + 1);
    double r2 = 1.0;
    for (int i = 1; i < n; ++i) {
        x[i] = std::sinh(1.5 * rng.normal());
        r2 += x[i] * x[i];
    }
    const double tau = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double r = std::sqrt(r2);
    x[0] = r * std::sin(tau);
    x[n] = r * std::cos(tau);
    return x;
}

// Membership disagreements between two wedge predicates over whole-quadric
// samples plus samples drawn from each region.
inline int region_disagreements(const Wedge& w1, const Wedge& w2, int samples, std::uint64_t seed)
{
    if (w1.dimension() != w2.dimension())
        throw std::invalid_argument("wedges of different dimension");
    Rng rng(seed);
    const int n = w1.dimension();
    int bad = 0;
    for (int i = 0; i < samples; ++i) {
        Vector x;
        switch (i % 3) {
        case 0: x = sample_quadric_point(n, rng); break;
        case 1: x = sample_wedge_point(w1, rng); break;
        default: x = sample_wedge_point(w2, rng); break;
        }
        if (w1.contains(x) != w2.contains(x))
            ++bad;
    }
    return bad;
}

// Random identity-component element: product of single-plane exponentials.
inline GroupElement random_group_element(int n, Rng& rng, int factors = 5, double spread = 1.5)
{
    const auto basis = algebra_basis(n);
    GroupElement g = GroupElement::identity(n);
    for (int i = 0; i < factors; ++i) {
        const Generator& k = basis[rng.next() % basis.size()];
        g = g * exp_generator(k, rng.uniform(-spread, spread));
    }
    return g;
}

// ---------------------------------------------------------------------------
// worldlines

enum class WorldlineKind
{
    accelerated, // lam lambda01(t) lam^{-1}
    geodesic,    // lam lambda0n(t) lam^{-1}
};

struct Worldline
{
    GroupElement lam;
    WorldlineKind kind;
    AdSPoint x_O;
};

inline Generator worldline_generator(const Worldline& w)
{
    const int n = w.lam.dimension();
    return w.kind == WorldlineKind::accelerated ? generator(0, 1, n) : generator(0, n, n);
}

inline AdSPoint worldline_point(const Worldline& w, double t)
{
    const GroupElement flow = w.lam * exp_generator(worldline_generator(w), t) * w.lam.inverse();
    return AdSPoint(flow.apply(w.x_O.coords()));
}

inline Vector worldline_tangent(const Worldline& w)
{
    const Matrix k = w.lam.matrix() * worldline_generator(w).real() * w.lam.inverse().matrix();
    return k * w.x_O.coords();
}

inline double proper_time_rate(const Worldline& w)
{
    const Vector v = worldline_tangent(w);
    const double sq = w.lam.metric().square(v);
    if (!(sq > 0.0))
        throw std::domain_error("worldline tangent is not timelike at x_O");
    return std::sqrt(sq);
}

enum class ThermalKind
{
    thermal,
    ground_state,
};

struct UnruhResult
{
    ThermalKind kind;
    double temperature;
};

// (1/2pi) ((lambda01'(0) x_O)^2)^{-1/2} for accelerated observers; geodesic
// observers see the ground state.
inline UnruhResult unruh_temperature(const Worldline& w)
{
    if (w.kind == WorldlineKind::geodesic) {
        (void)proper_time_rate(w);
        return {ThermalKind::ground_state, 0.0};
    }
    return {ThermalKind::thermal, 1.0 / (2.0 * std::numbers::pi * proper_time_rate(w))};
}

// Max Euclidean distance of orbit points from span{x_O, K x_O}. The orbit is
// a geodesic, and the deviation vanishes, when lam^{-1} x_O lies on the
// central geodesic x1 = ... = x_{n-1} = 0.
inline double geodesic_planarity_check(const Worldline& w, int samples)
{
    if (w.kind != WorldlineKind::geodesic)
        throw std::invalid_argument("planarity check applies to geodesic worldlines");
    if (samples < 1)
        throw std::invalid_argument("need at least one sample");
    Matrix basis(w.x_O.coords().size(), 2);
    basis.col(0) = w.x_O.coords();
    basis.col(1) = worldline_tangent(w);
    const Eigen::HouseholderQR<Matrix> qr(basis);
    const Matrix q = qr.householderQ() * Matrix::Identity(basis.rows(), 2);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = 2.0 * std::numbers::pi * i / samples;
        const Vector p = worldline_point(w, t).coords();
        worst = std::max(worst, (p - q * (q.transpose() * p)).norm());
    }
    return worst;
}

// ---------------------------------------------------------------------------
// proper containment

enum class VerdictKind
{
    holds_at_confidence,
    violated,
    unknown,
};

inline std::string_view verdict_name(VerdictKind k)
{
    switch (k) {
    case VerdictKind::holds_at_confidence: return "holds_at_confidence";
    case VerdictKind::violated: return "violated";
    case VerdictKind::unknown: return "unknown";
    }
    return "unknown";
}

struct ContainmentOptions
{
    double eps = 1e-3;
    int trials = 200;
    int points_per_trial = 200;
    std::uint64_t seed = 1;
    SamplingOptions sampling{};
};

struct ContainmentWitness
{
    Vector coefficients; // algebra coordinates of the perturbation in the basis algebra_basis(n)
    Vector point;        // point of w1
    Vector image;        // its image under the perturbation, outside w2
};

struct ContainmentVerdict
{
    VerdictKind kind = VerdictKind::unknown;
    int trials = 0;
    long points_checked = 0;
    std::optional<ContainmentWitness> witness;
};

inline GroupElement perturbation(const Vector& coefficients, int n)
{
    const auto basis = algebra_basis(n);
    Matrix x = Matrix::Zero(n + 1, n + 1);
    for (std::size_t i = 0; i < basis.size(); ++i)
        x += coefficients[static_cast<Eigen::Index>(i)] * basis[i].real();
    return exp_algebra(x);
}

// Perturbation coefficients: the first 2d trials use +-eps along each single
// generator, the rest are uniform in the eps-ball of R^d.
inline Vector perturbation_coefficients(int trial, int dim, double eps, Rng& rng)
{
    Vector c = Vector::Zero(dim);
    if (eps == 0.0)
        return c;
    if (trial < 2 * dim) {
        c[trial / 2] = (trial % 2 == 0) ? eps : -eps;
        return c;
    }
    for (int i = 0; i < dim; ++i)
        c[i] = rng.normal();
    const double radius = eps * std::pow(rng.uniform(), 1.0 / dim);
    return c * (radius / c.norm());
}

// Semidecision for lambda w1 subset w2 for all lambda near the identity.
// eps = 0 reduces to a plain subset test with a single trial.
inline ContainmentVerdict properly_contained(const Wedge& w1, const Wedge& w2, const ContainmentOptions& opt = {})
{
    if (w1.dimension() != w2.dimension())
        throw std::invalid_argument("wedges of different dimension");
    if (opt.eps < 0.0 || opt.trials < 1 || opt.points_per_trial < 1)
        throw std::invalid_argument("containment options need eps >= 0 and positive budgets");
    const int n = w1.dimension();
    const int dim = n * (n + 1) / 2;
    Rng rng(opt.seed);
    ContainmentVerdict verdict;
    const int trials = opt.eps == 0.0 ? 1 : opt.trials;
    for (int trial = 0; trial < trials; ++trial) {
        const Vector c = perturbation_coefficients(trial, dim, opt.eps, rng);
        const Matrix m = perturbation(c, n).matrix() * w1.lam().matrix();
        for (int p = 0; p < opt.points_per_trial; ++p) {
            const Vector y = sample_reference_point(w1.variant(), n, rng, opt.sampling);
            const Vector image = m * y;
            ++verdict.points_checked;
            if (!w2.contains(image)) {
                verdict.kind = VerdictKind::violated;
                verdict.trials = trial + 1;
                verdict.witness = ContainmentWitness{c, w1.lam().apply(y), image};
                return verdict;
            }
        }
    }
    verdict.kind = VerdictKind::holds_at_confidence;
    verdict.trials = trials;
    return verdict;
}

// lambda w1 subset w2' for all lambda near the identity
inline ContainmentVerdict properly_spacelike(const Wedge& w1, const Wedge& w2, const ContainmentOptions& opt = {})
{
    return properly_contained(w1, opposite(w2), opt);
}

// ---------------------------------------------------------------------------
// explicit wedge inclusion via lightlike vectors f_+- = (+-1, c, 0, ..., 0, s)

inline double lightlike_partner(double s) { return std::sqrt(1.0 + s * s); }

inline void require_positive_s(double s)
{
    if (!(s > 0.0))
        throw std::invalid_argument("inclusion parameter s must be positive");
}

// W_0 = exp(-asinh(s) K1n) W_R, the wedge with edge (0, s r, sigma, c r), r = (1+|sigma|^2)^{1/2};
// boosted by lambda01(t).
inline Wedge inner_wedge(double s, int n, double t = 0.0)
{
    require_positive_s(s);
    return Wedge(exp_generator(0, 1, n, t) * exp_generator(1, n, n, -std::asinh(s)));
}

// exp(+asinh(s) K1n) W_R, which properly contains W_R
inline Wedge outer_wedge(double s, int n)
{
    require_positive_s(s);
    return Wedge(exp_generator(1, n, n, std::asinh(s)));
}

inline Vector lightlike_vector(double s, int kappa, int n)
{
    Vector f = Vector::Zero(n + 1);
    f[0] = kappa;
    f[1] = lightlike_partner(s);
    f[n] = s;
    return f;
}

inline Vector edge_point(double s, const Vector& sigma)
{
    const auto n = sigma.size() + 2;
    const double r = std::sqrt(1.0 + sigma.squaredNorm());
    Vector x = Vector::Zero(n + 1);
    x[1] = s * r;
    x.segment(2, sigma.size()) = sigma;
    x[n] = lightlike_partner(s) * r;
    return x;
}

// || lambda01(t) f_kappa ||^2 = (1+c^2) cosh 2t + 2 kappa c sinh 2t + s^2
inline double boosted_lightlike_norm(double s, double t)
{
    const double c = lightlike_partner(s);
    double worst = 0.0;
    for (int kappa : {-1, 1})
        worst = std::max(worst, (1.0 + c * c) * std::cosh(2 * t) + 2.0 * kappa * c * std::sinh(2 * t) + s * s);
    return std::sqrt(worst);
}

// Margin <= -A r - B l with r = (1+|sigma|^2)^{1/2} >= 1 and l >= 0, where
//   A = s e^{-|t|} - eps sqrt2 cosh t (1 + c^2 + 2 s^2)^{1/2}
//   B = (c - 1) e^{-|t|} - eps sqrt2 max_kappa ||lambda01(t) f_kappa||.
struct InclusionBound
{
    double edge_coefficient;   // A
    double light_coefficient;  // B
    double admissible_eps;     // sup of eps with A > 0 and B > 0
    double delta;              // -A, valid when eps < admissible_eps
};

inline InclusionBound inclusion_bound(double s, double t, double eps)
{
    require_positive_s(s);
    const double c = lightlike_partner(s);
    const double decay = std::exp(-std::abs(t));
    const double edge_growth = std::sqrt(2.0) * std::cosh(t) * std::sqrt(1.0 + c * c + 2.0 * s * s);
    const double light_growth = std::sqrt(2.0) * boosted_lightlike_norm(s, t);
    InclusionBound b;
    b.edge_coefficient = s * decay - eps * edge_growth;
    b.light_coefficient = (c - 1.0) * decay - eps * light_growth;
    b.admissible_eps = std::min(s * decay / edge_growth, (c - 1.0) * decay / light_growth);
    b.delta = -b.edge_coefficient;
    return b;
}

struct InclusionCheck
{
    double max_margin;   // max over samples of (1+M) lambda01(t)(x + l f_k) . e_+-
    double delta;        // certified bound, max_margin <= delta < 0
    double eps;
    int samples;
};

// Samples sigma (tan transform), l >= 0 and 1 + M with Frobenius norm of M
// below eps, over both lightlike directions and both e_+-.
inline InclusionCheck inclusion_boundary_check(double s, double t, double eps, int samples, std::uint64_t seed,
                                               int n = 3)
{
    const InclusionBound bound = inclusion_bound(s, t, eps);
    if (eps < 0.0 || eps >= bound.admissible_eps)
        throw std::domain_error("eps = " + std::to_string(eps) + " is outside the certifiable range [0, " +
                                std::to_string(bound.admissible_eps) + ")");
    if (samples < 1)
        throw std::invalid_argument("need at least one sample");
    const Metric g(n);
    Rng rng(seed);
    const Matrix boost = exp_generator(0, 1, n, t).matrix();
    Vector e_plus = Vector::Zero(n + 1);
    e_plus[0] = 1.0;
    e_plus[1] = 1.0;
    Vector e_minus = e_plus;
    e_minus[0] = -1.0;
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        Vector sigma(n - 2);
        for (int k = 0; k < n - 2; ++k)
            sigma[k] = (i % 4 == 0) ? 0.0 : rng.tan_transform();
        const double l = (i % 3 == 0) ? 0.0 : std::abs(rng.tan_transform());
        const int kappa = (i % 2 == 0) ? 1 : -1;
        Matrix m = Matrix::Zero(n + 1, n + 1);
        if (eps > 0.0) {
            for (Eigen::Index r = 0; r < m.size(); ++r)
                m.data()[r] = rng.normal();
            m *= eps * rng.uniform() / m.norm();
        }
        const Vector p = (Matrix::Identity(n + 1, n + 1) + m) * boost *
                         (edge_point(s, sigma) + l * lightlike_vector(s, kappa, n));
        worst = std::max({worst, g.dot(p, e_plus), g.dot(p, e_minus)});
    }
    return InclusionCheck{worst, bound.delta, eps, samples};
}

// ---------------------------------------------------------------------------
// point separation

struct SeparationVerdict
{
    VerdictKind kind = VerdictKind::unknown; // holds_at_confidence means separated
    std::optional<Wedge> witness;
    int trials = 0;
};

// Randomized search for a wedge W with x in W and y in W'. Never claims
// non-separation.
inline SeparationVerdict spacelike_separated_points(const AdSPoint& x, const AdSPoint& y, int trials,
                                                    std::uint64_t seed)
{
    if (x.dimension() != y.dimension())
        throw std::invalid_argument("points of different dimension");
    const int n = x.dimension();
    Rng rng(seed);
    SeparationVerdict out;
    for (int i = 0; i < trials; ++i) {
        const GroupElement lam = i == 0 ? GroupElement::identity(n) : random_group_element(n, rng, 6, 2.0);
        for (WedgeVariant v : {WedgeVariant::base, WedgeVariant::opposite}) {
            const Wedge w(lam, v);
            if (w.contains(x.coords()) && opposite(w).contains(y.coords())) {
                out.kind = VerdictKind::holds_at_confidence;
                out.witness = w;
                out.trials = i + 1;
                return out;
            }
        }
    }
    out.trials = trials;
    return out;
}

} // namespace adswedge

#endif // ADSWEDGE_ADS_GEOMETRY_HPP
