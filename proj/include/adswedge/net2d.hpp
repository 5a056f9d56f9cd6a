#ifndef ADSWEDGE_NET2D_HPP
#define ADSWEDGE_NET2D_HPP

// Region-level net on two-dimensional AdS. The edge of a wedge is a point;
// right wedges W_a are labelled by their edge a and double cones are
// O_{a,b} = W_a n W_b' for W_b properly inside W_a. In null coordinates
// u = rho - tau, v = rho + tau a right wedge is {u > u_a, v > v_a} and a
// double cone is the open rectangle (u_a, u_b) x (v_a, v_b).

#include <adswedge/ads_geometry.hpp>
#include <adswedge/chart.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adswedge
{

inline constexpr double kEdgeClosureTolerance = 1e-12;

class EdgePoint
{
  public:
    explicit EdgePoint(AdSPoint a) : a_(std::move(a))
    {
        if (a_.dimension() != 2)
            throw std::invalid_argument("edge points live on two-dimensional AdS");
    }

    static EdgePoint from_global(const GlobalCoords& c) { return EdgePoint(AdSPoint(to_ambient(c))); }

    const AdSPoint& point() const { return a_; }
    const Vector& coords() const { return a_.coords(); }

  private:
    AdSPoint a_;
};

// lam = lambda02(tau) * exp(-asinh(tan rho) K12), with lambda02(tau) = exp(-tau K02);
// maps (0, 0, 1) to the chart point (tau, rho).
inline GroupElement canonical_edge_map(const GlobalCoords& c)
{
    require_chart_domain(c.rho);
    return exp_generator(0, 2, 2, -c.tau) * exp_generator(1, 2, 2, -std::asinh(std::tan(c.rho)));
}

class RightWedge2D
{
  public:
    RightWedge2D(EdgePoint edge, GroupElement lam) : edge_(std::move(edge)), wedge_(std::move(lam))
    {
        if (wedge_.dimension() != 2)
            throw std::invalid_argument("two-dimensional wedge expected");
        Vector origin(3);
        origin << 0, 0, 1;
        const Vector image = wedge_.lam().apply(origin);
        if ((image - edge_.coords()).norm() > 1e-10 * std::max(1.0, edge_.coords().norm()))
            throw std::invalid_argument("label does not map the reference edge onto the given edge");
    }

    const EdgePoint& edge() const { return edge_; }
    const Wedge& wedge() const { return wedge_; }
    bool contains(const Vector& x) const { return wedge_.contains(x); }

  private:
    EdgePoint edge_;
    Wedge wedge_;
};

inline RightWedge2D right_wedge_from_edge(const EdgePoint& a)
{
    return RightWedge2D(a, canonical_edge_map(chart(a.point())));
}

inline EdgePoint edge_of(const RightWedge2D& w)
{
    Vector origin(3);
    origin << 0, 0, 1;
    return EdgePoint(AdSPoint(w.wedge().lam().apply(origin)));
}

inline EdgePoint edge_of(const Wedge& w)
{
    Vector origin(3);
    origin << 0, 0, 1;
    return EdgePoint(AdSPoint(w.lam().apply(origin)));
}

enum class Handedness
{
    right,
    left,
};

// On AdS_2 the wedge family splits into right wedges (group images of W_R and
// of the conjugate prime wedge) and left wedges.
inline Handedness handedness(const Wedge& w)
{
    if (w.dimension() != 2)
        throw std::invalid_argument("handedness is defined on two-dimensional AdS");
    return (w.variant() == WedgeVariant::base || w.variant() == WedgeVariant::conjugate_prime) ? Handedness::right
                                                                                                 : Handedness::left;
}

// W_a subset W_c iff a lies in the closure of W_c.
inline bool wedge_included(const RightWedge2D& inner, const RightWedge2D& outer)
{
    const Vector y = outer.wedge().pull_back(inner.edge().coords());
    const double scale = std::max(1.0, y.norm());
    return y[1] - std::abs(y[0]) >= -kEdgeClosureTolerance * scale && y[2] > 0.0;
}

struct DoubleConeOptions
{
    double eps = 1e-3;
    int trials = 64;
    int points_per_trial = 64;
    std::uint64_t seed = 1;
};

class DoubleCone2D
{
  public:
    const RightWedge2D& outer() const { return outer_; }  // W_a
    const RightWedge2D& inner() const { return inner_; }  // W_b
    const ContainmentVerdict& certificate() const { return certificate_; }
    const DoubleConeOptions& options() const { return options_; }

    bool contains(const Vector& x) const { return outer_.contains(x) && opposite(inner_.wedge()).contains(x); }

    // null-coordinate rectangle, tau branch of b matched to a
    NullCoords lower() const { return lower_; }
    NullCoords upper() const { return upper_; }

    // Uniform in the rectangle with a quarter of the coordinates pushed
    // log-uniformly toward the sides.
    Vector sample_point(Rng& rng) const
    {
        auto coordinate = [&](double lo, double hi) {
            const double r = rng.uniform();
            double w;
            if (r < 0.125)
                w = std::exp(rng.uniform(std::log(1e-9), 0.0));
            else if (r < 0.25)
                w = 1.0 - std::exp(rng.uniform(std::log(1e-9), 0.0));
            else
                w = rng.uniform();
            w = std::clamp(w, 1e-9, 1.0 - 1e-9);
            return lo + (hi - lo) * w;
        };
        const NullCoords p{coordinate(lower_.u, upper_.u), coordinate(lower_.v, upper_.v)};
        return to_ambient(from_null(p));
    }

    friend DoubleCone2D double_cone(const EdgePoint& a, const EdgePoint& b, const DoubleConeOptions& opt);

  private:
    DoubleCone2D(RightWedge2D outer, RightWedge2D inner, ContainmentVerdict cert, DoubleConeOptions opt)
        : outer_(std::move(outer)), inner_(std::move(inner)), certificate_(std::move(cert)), options_(opt)
    {
        const GlobalCoords ca = chart(outer_.edge().point());
        GlobalCoords cb = chart(inner_.edge().point());
        cb.tau = nearest_branch(cb.tau, ca.tau);
        lower_ = to_null(ca);
        upper_ = to_null(cb);
    }

    RightWedge2D outer_;
    RightWedge2D inner_;
    ContainmentVerdict certificate_;
    DoubleConeOptions options_;
    NullCoords lower_;
    NullCoords upper_;
};

// O_{a,b} = W_a n W_b', valid when W_b is properly contained in W_a.
inline DoubleCone2D double_cone(const EdgePoint& a, const EdgePoint& b, const DoubleConeOptions& opt = {})
{
    RightWedge2D wa = right_wedge_from_edge(a);
    RightWedge2D wb = right_wedge_from_edge(b);
    ContainmentVerdict cert = properly_contained(
        wb.wedge(), wa.wedge(),
        {.eps = opt.eps, .trials = opt.trials, .points_per_trial = opt.points_per_trial, .seed = opt.seed});
    if (cert.kind != VerdictKind::holds_at_confidence)
        throw std::invalid_argument("W_b is not properly contained in W_a (verdict " +
                                    std::string(verdict_name(cert.kind)) + ")");
    return DoubleCone2D(std::move(wa), std::move(wb), std::move(cert), opt);
}

inline DoubleCone2D double_cone(const GlobalCoords& a, const GlobalCoords& b, const DoubleConeOptions& opt = {})
{
    return double_cone(EdgePoint::from_global(a), EdgePoint::from_global(b), opt);
}

// Random valid double cone: edge a with |tau|, |rho| below 0.8 and b offset by
// (du, dv) in [min_side, max_side]^2 in null coordinates.
inline DoubleCone2D random_double_cone(Rng& rng, double min_side = 0.1, double max_side = 1.2,
                                       const DoubleConeOptions& opt = {})
{
    for (;;) {
        const GlobalCoords a{rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8)};
        const NullCoords na = to_null(a);
        const GlobalCoords b = from_null({na.u + rng.uniform(min_side, max_side), na.v + rng.uniform(min_side, max_side)});
        if (b.rho < std::numbers::pi / 2 - 0.05)
            return double_cone(a, b, opt);
    }
}

// Double cone containing o: each null side pushed outward by a uniform amount in
// [min_margin, max_margin], scaled down near the chart seam so the result fits.
inline DoubleCone2D random_enclosing_double_cone(const DoubleCone2D& o, Rng& rng, double min_margin = 0.02,
                                                 double max_margin = 0.3)
{
    const double limit = std::numbers::pi / 2 - 0.05;
    const double rho_lo = 0.5 * (o.lower().u + o.lower().v);
    const double rho_hi = 0.5 * (o.upper().u + o.upper().v);
    // a push of (du, dv) moves the corner's rho by (du + dv) / 2 <= max margin
    const double room = std::min(limit + rho_lo, limit - rho_hi);
    if (!(room > 0.0))
        throw std::invalid_argument("double cone touches the chart seam");
    const double scale = std::min(1.0, 0.99 * room / max_margin);
    const double lo_m = scale * min_margin, hi_m = scale * max_margin;
    const NullCoords lo{o.lower().u - rng.uniform(lo_m, hi_m), o.lower().v - rng.uniform(lo_m, hi_m)};
    const NullCoords hi{o.upper().u + rng.uniform(lo_m, hi_m), o.upper().v + rng.uniform(lo_m, hi_m)};
    return double_cone(from_null(lo), from_null(hi), o.options());
}

struct IsotonyReport
{
    bool criterion = false;   // W_a subset W_c and W_d subset W_b
    bool monte_carlo = false; // no sampled point of o1 outside o2
    bool agree = false;
    int samples = 0;
    std::optional<Vector> witness; // point of o1 outside o2
};

// O_{a,b} subset O_{c,d} iff W_a subset W_c and W_d subset W_b.
inline IsotonyReport isotony_equivalence_check(const DoubleCone2D& o1, const DoubleCone2D& o2, int trials,
                                               std::uint64_t seed)
{
    IsotonyReport r;
    r.criterion = wedge_included(o1.outer(), o2.outer()) && wedge_included(o2.inner(), o1.inner());
    Rng rng(seed);
    r.monte_carlo = true;
    for (int i = 0; i < trials; ++i) {
        const Vector x = o1.sample_point(rng);
        ++r.samples;
        if (!o2.contains(x)) {
            r.monte_carlo = false;
            r.witness = x;
            break;
        }
    }
    r.agree = r.criterion == r.monte_carlo;
    return r;
}

struct CovarianceReport
{
    int samples = 0;
    int disagreements = 0;
};

// region of O_{ga,gb} against g O_{a,b}, sampled from both sides
inline CovarianceReport covariance_check(const GroupElement& g, const DoubleCone2D& o, int trials, std::uint64_t seed)
{
    const EdgePoint ga(apply(g, o.outer().edge().point()));
    const EdgePoint gb(apply(g, o.inner().edge().point()));
    const DoubleCone2D image = double_cone(ga, gb, o.options());
    const Matrix ginv = g.inverse().matrix();
    Rng rng(seed);
    CovarianceReport r;
    for (int i = 0; i < trials; ++i) {
        const Vector x = o.sample_point(rng);
        const Vector y = image.sample_point(rng);
        r.samples += 2;
        if (!image.contains(g.apply(x)))
            ++r.disagreements;
        if (!o.contains(ginv * y))
            ++r.disagreements;
    }
    return r;
}

struct LocalityVerdict
{
    VerdictKind kind = VerdictKind::unknown; // holds_at_confidence means separated
    std::optional<Wedge> witness;            // o1 in witness, o2 in its opposite
    int candidates = 0;
};

namespace detail
{

// Candidate right wedges W_e with inner subset W_e subset outer, edges taken
// on the chart segment from the inner edge to the outer edge plus jitter.
inline std::optional<Wedge> search_between(const RightWedge2D& inner, const RightWedge2D& outer,
                                           const DoubleCone2D& in_w, const DoubleCone2D& in_opposite, Rng& rng,
                                           int candidates, int verify, int& tried)
{
    const GlobalCoords ca = chart(inner.edge().point());
    GlobalCoords cd = chart(outer.edge().point());
    cd.tau = nearest_branch(cd.tau, ca.tau);
    for (int i = 0; i < candidates; ++i) {
        double f = (i < candidates / 2) ? static_cast<double>(i) / std::max(1, candidates / 2 - 1) : rng.uniform();
        GlobalCoords ce{ca.tau + f * (cd.tau - ca.tau), ca.rho + f * (cd.rho - ca.rho)};
        if (i >= candidates / 2) {
            // jitter inside the null box spanned by the two edges
            const NullCoords na = to_null(ca);
            const NullCoords nd = to_null(cd);
            ce = from_null({na.u + rng.uniform() * (nd.u - na.u), na.v + rng.uniform() * (nd.v - na.v)});
        }
        if (!(std::abs(ce.rho) < std::numbers::pi / 2 - kChartSeam))
            continue;
        ++tried;
        const RightWedge2D we = right_wedge_from_edge(EdgePoint::from_global(ce));
        if (!wedge_included(inner, we) || !wedge_included(we, outer))
            continue;
        const Wedge w = we.wedge();
        const Wedge wp = opposite(w);
        bool clean = true;
        for (int k = 0; k < verify && clean; ++k)
            clean = w.contains(in_w.sample_point(rng)) && wp.contains(in_opposite.sample_point(rng));
        if (clean)
            return w;
    }
    return std::nullopt;
}

} // namespace detail

// Separating wedge with o1 in W and o2 in W'. Tries right wedges between
// W_a and W_d (o1 = O_{a,b}, o2 = O_{c,d}) and, for the left-wedge case,
// right wedges between W_c and W_b whose opposite is returned.
inline LocalityVerdict locality_predicate(const DoubleCone2D& o1, const DoubleCone2D& o2, int trials,
                                          std::uint64_t seed)
{
    Rng rng(seed);
    LocalityVerdict out;
    const int verify = 256;
    if (auto w = detail::search_between(o1.outer(), o2.inner(), o1, o2, rng, trials, verify, out.candidates)) {
        out.kind = VerdictKind::holds_at_confidence;
        out.witness = *w;
        return out;
    }
    if (auto w = detail::search_between(o2.outer(), o1.inner(), o2, o1, rng, trials, verify, out.candidates)) {
        out.kind = VerdictKind::holds_at_confidence;
        out.witness = opposite(*w);
        return out;
    }
    return out;
}

} // namespace adswedge

#endif // ADSWEDGE_NET2D_HPP
