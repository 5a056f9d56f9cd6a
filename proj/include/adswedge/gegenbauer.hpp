#ifndef ADSWEDGE_GEGENBAUER_HPP
#define ADSWEDGE_GEGENBAUER_HPP

// Gegenbauer polynomials C_k^(d) normalised in L^2([-1, 1], (1 - s^2)^(d - 1/2) ds),
// generated by the symmetric three-term recurrence
//   s p_k = a_{k+1} p_{k+1} + a_k p_{k-1},
//   a_k = (1/2) sqrt(k (k + 2d - 1) / ((k + d)(k + d - 1))).

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace adswedge
{

class OrthonormalGegenbauer
{
  public:
    OrthonormalGegenbauer(double delta, int degree) : delta_(delta), a_(static_cast<std::size_t>(degree) + 2)
    {
        if (!(delta > 0.0) || !std::isfinite(delta))
            throw std::invalid_argument("Gegenbauer index must be positive");
        if (degree < 0)
            throw std::invalid_argument("degree must be nonnegative");
        for (std::size_t k = 1; k < a_.size(); ++k) {
            const double kk = static_cast<double>(k);
            a_[k] = 0.5 * std::sqrt(kk * (kk + 2.0 * delta - 1.0) / ((kk + delta) * (kk + delta - 1.0)));
        }
        // h_0 = int (1 - s^2)^(d - 1/2) ds = sqrt(pi) Gamma(d + 1/2) / Gamma(d + 1)
        const double log_h0 =
            0.5 * std::log(std::numbers::pi) + std::lgamma(delta + 0.5) - std::lgamma(delta + 1.0);
        p0_ = std::exp(-0.5 * log_h0);
    }

    double delta() const { return delta_; }
    int degree() const { return static_cast<int>(a_.size()) - 2; }

    // f(k, p_k(s)) for k = 0..degree
    template <class F> void for_each(double s, F&& f) const
    {
        const int n = degree();
        double prev = 0.0;
        double cur = p0_;
        f(0, cur);
        for (int k = 0; k < n; ++k) {
            const double next = (s * cur - a_[k] * prev) / a_[k + 1];
            prev = cur;
            cur = next;
            f(k + 1, cur);
        }
    }

    std::vector<double> values(double s) const
    {
        std::vector<double> out(static_cast<std::size_t>(degree()) + 1);
        for_each(s, [&](int k, double v) { out[k] = v; });
        return out;
    }

  private:
    double delta_;
    std::vector<double> a_; // a_[0] unused (p_{-1} = 0)
    double p0_ = 0.0;
};

} // namespace adswedge

#endif // ADSWEDGE_GEGENBAUER_HPP
