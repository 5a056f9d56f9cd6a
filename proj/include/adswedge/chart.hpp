#ifndef ADSWEDGE_CHART_HPP
#define ADSWEDGE_CHART_HPP

// Global coordinates on two-dimensional AdS:
//   x0 = sin tau / cos rho,  x1 = tan rho,  x2 = cos tau / cos rho.

#include <adswedge/ads_geometry.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace adswedge
{

inline constexpr double kChartSeam = 1e-8;

struct GlobalCoords
{
    double tau = 0.0;
    double rho = 0.0;
};

inline void require_chart_domain(double rho)
{
    if (!(std::abs(rho) < std::numbers::pi / 2 - kChartSeam))
        throw std::domain_error("point too close to the chart seam |rho| = pi/2");
}

inline Vector to_ambient(const GlobalCoords& c)
{
    require_chart_domain(c.rho);
    const double sec = 1.0 / std::cos(c.rho);
    Vector x(3);
    x << std::sin(c.tau) * sec, std::tan(c.rho), std::cos(c.tau) * sec;
    return x;
}

// tau in (-pi, pi]
inline GlobalCoords chart(const Vector& x)
{
    if (x.size() != 3)
        throw std::invalid_argument("global chart is defined on two-dimensional AdS");
    GlobalCoords c;
    c.rho = std::atan(x[1]);
    require_chart_domain(c.rho);
    c.tau = std::atan2(x[0], x[2]);
    return c;
}

inline GlobalCoords chart(const AdSPoint& x) { return chart(x.coords()); }

// tau shifted by a multiple of 2 pi into (center - pi, center + pi]
inline double nearest_branch(double tau, double center)
{
    const double two_pi = 2.0 * std::numbers::pi;
    return tau - two_pi * std::ceil((tau - center - std::numbers::pi) / two_pi);
}

// null coordinates u = rho - tau, v = rho + tau
struct NullCoords
{
    double u = 0.0;
    double v = 0.0;
};

inline NullCoords to_null(const GlobalCoords& c) { return {c.rho - c.tau, c.rho + c.tau}; }

inline GlobalCoords from_null(const NullCoords& n) { return {0.5 * (n.v - n.u), 0.5 * (n.u + n.v)}; }

} // namespace adswedge

#endif // ADSWEDGE_CHART_HPP
