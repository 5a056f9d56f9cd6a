#ifndef ADSWEDGE_SPECTRAL_HPP
#define ADSWEDGE_SPECTRAL_HPP

// Energy spectra of free fields on AdS built on SO0(2,3) positive-energy
// representations: one-particle multiplicity bounds, exact Fock-space level
// counting, partition-function bounds and the multiplicity growth condition
//   mu_m <= exp(c0 m^k0),  0 < k0 < 1.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adswedge
{

using BigInt = boost::multiprecision::cpp_int;

enum class Statistics
{
    bose,
    fermi,
};

inline const char* statistics_name(Statistics s) { return s == Statistics::bose ? "bose" : "fermi"; }

inline constexpr int kMaxFockCutoff = 4096;

// Closed-form one-particle families, n >= 1:
//   cubic_bound  mu_n = 2 n^3
//   angular_sum  mu_n = sum_{l<n} (2l+1)(l+1)
//   single_copy  mu_n = sum_{l<n} (2l+1) = n^2
enum class SpectrumFamily
{
    cubic_bound,
    angular_sum,
    single_copy,
};

inline const char* family_name(SpectrumFamily f)
{
    switch (f) {
    case SpectrumFamily::cubic_bound:
        return "cubic_bound";
    case SpectrumFamily::angular_sum:
        return "angular_sum";
    case SpectrumFamily::single_copy:
        return "single_copy";
    }
    return "?";
}

struct MultiplicityBound
{
    std::int64_t exact_sum = 0;   // sum_{l<n} (2l+1)(l+1)
    std::int64_t cubic_bound = 0; // 2 n^3
};

inline MultiplicityBound so23_multiplicity_bound(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("energy level must be positive");
    if (n > 100000)
        throw std::out_of_range("energy level too large for 64-bit bounds");
    MultiplicityBound b;
    for (std::int64_t l = 0; l < n; ++l)
        b.exact_sum += (2 * l + 1) * (l + 1);
    b.cubic_bound = 2 * n * n * n;
    return b;
}

inline std::int64_t family_multiplicity(SpectrumFamily f, std::int64_t n)
{
    switch (f) {
    case SpectrumFamily::cubic_bound:
        return 2 * n * n * n;
    case SpectrumFamily::angular_sum:
        return so23_multiplicity_bound(n).exact_sum;
    case SpectrumFamily::single_copy:
        return n * n;
    }
    return 0;
}

class OneParticleSpectrum
{
  public:
    OneParticleSpectrum() = default;

    OneParticleSpectrum(std::initializer_list<std::pair<const std::int64_t, std::int64_t>> levels)
        : OneParticleSpectrum(std::map<std::int64_t, std::int64_t>(levels))
    {
    }

    explicit OneParticleSpectrum(const std::map<std::int64_t, std::int64_t>& levels)
    {
        for (const auto& [m, mu] : levels)
            set(m, mu);
    }

    static OneParticleSpectrum from_family(SpectrumFamily f, std::int64_t cutoff)
    {
        OneParticleSpectrum s;
        for (std::int64_t n = 1; n <= cutoff; ++n)
            s.set(n, family_multiplicity(f, n));
        s.family_ = f;
        return s;
    }

    void set(std::int64_t m, std::int64_t mu)
    {
        if (m < 1)
            throw std::invalid_argument("one-particle energies are positive integers");
        if (mu < 0)
            throw std::invalid_argument("multiplicities are nonnegative");
        if (mu == 0)
            levels_.erase(m);
        else
            levels_[m] = mu;
    }

    const std::map<std::int64_t, std::int64_t>& levels() const { return levels_; }
    std::int64_t multiplicity(std::int64_t m) const
    {
        const auto it = levels_.find(m);
        return it == levels_.end() ? 0 : it->second;
    }
    std::int64_t max_level() const { return levels_.empty() ? 0 : levels_.rbegin()->first; }

    // Set when the table is the truncation of a closed-form family; levels
    // beyond max_level() then follow the family.
    std::optional<SpectrumFamily> family() const { return family_; }

  private:
    std::map<std::int64_t, std::int64_t> levels_;
    std::optional<SpectrumFamily> family_;
};

class FockSpectrum
{
  public:
    FockSpectrum(Statistics stats, std::vector<BigInt> levels) : stats_(stats), levels_(std::move(levels))
    {
        if (levels_.empty() || levels_[0] != 1)
            throw std::invalid_argument("Fock spectrum needs a single vacuum at level 0");
        for (const BigInt& x : levels_)
            if (x < 0)
                throw std::invalid_argument("multiplicities are nonnegative");
    }

    Statistics statistics() const { return stats_; }
    int cutoff() const { return static_cast<int>(levels_.size()) - 1; }
    const BigInt& operator[](int m) const { return levels_.at(static_cast<std::size_t>(m)); }
    const std::vector<BigInt>& levels() const { return levels_; }

  private:
    Statistics stats_;
    std::vector<BigInt> levels_;
};

// ln x for a positive big integer, accurate to double rounding.
inline double log_big(const BigInt& x)
{
    if (x <= 0)
        throw std::domain_error("log of a nonpositive integer");
    const std::size_t bits = boost::multiprecision::msb(x) + 1;
    if (bits <= 60)
        return std::log(static_cast<double>(x));
    const std::size_t shift = bits - 60;
    const BigInt top = x >> shift;
    return std::log(static_cast<double>(top)) + static_cast<double>(shift) * std::log(2.0);
}

inline BigInt binomial(BigInt top, std::int64_t k)
{
    BigInt r = 1;
    for (std::int64_t j = 0; j < k; ++j) {
        r *= top - j;
        r /= j + 1;
    }
    return r;
}

// Coefficients of prod_n (1 - q^n)^(-mu_n) (Bose) or prod_n (1 + q^n)^(mu_n)
// (Fermi) up to q^cutoff. Each factor is expanded by its binomial series.
inline FockSpectrum fock_multiplicities(const OneParticleSpectrum& spec, Statistics stats, int cutoff,
                                        int max_cutoff = kMaxFockCutoff)
{
    if (cutoff < 0)
        throw std::invalid_argument("cutoff must be nonnegative");
    if (cutoff > max_cutoff)
        throw std::out_of_range("cutoff exceeds the configured size guard");
    std::vector<BigInt> c(static_cast<std::size_t>(cutoff) + 1, 0);
    c[0] = 1;
    for (const auto& [n, mu] : spec.levels()) {
        if (n > cutoff)
            break;
        const std::int64_t jmax = cutoff / n;
        std::vector<BigInt> series(static_cast<std::size_t>(jmax) + 1);
        for (std::int64_t j = 0; j <= jmax; ++j)
            series[j] = stats == Statistics::bose ? binomial(BigInt(mu) + j - 1, j) : binomial(BigInt(mu), j);
        std::vector<BigInt> next(c.size(), 0);
        for (int m = 0; m <= cutoff; ++m) {
            if (c[m] == 0)
                continue;
            for (std::int64_t j = 0; m + j * n <= cutoff; ++j) {
                if (series[j] == 0)
                    break;
                next[m + j * n] += c[m] * series[j];
            }
        }
        c = std::move(next);
    }
    return FockSpectrum(stats, std::move(c));
}

struct LogPartition
{
    double value = 0.0;      // sum over the tabulated levels
    double tail_bound = 0.0; // rigorous bound on the omitted levels, 0 for finite tables
    int levels_summed = 0;
    double upper() const { return value + tail_bound; }
};

namespace detail
{

inline double level_term(Statistics stats, double mu, double gamma, std::int64_t n)
{
    const double x = std::exp(-gamma * static_cast<double>(n));
    return stats == Statistics::bose ? -mu * std::log1p(-x) : mu * std::log1p(x);
}

} // namespace detail

// Bose: -sum mu_n ln(1 - e^{-gamma n}); Fermi: +sum mu_n ln(1 + e^{-gamma n}).
// A finite table is summed exactly. A table carrying a family is continued
// along the family until the remainder is below double resolution, and the
// remainder is bounded using mu_n <= 2 n^3 and
//   -ln(1 - x) <= x / (1 - x),  ln(1 + x) <= x,
//   sum_{n>N} n^3 q^n <= (N+1)^3 q^{N+1} / (1 - r),  r = ((N+2)/(N+1))^3 q < 1.
inline LogPartition log_partition(const OneParticleSpectrum& spec, Statistics stats, double gamma)
{
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::domain_error("gamma must be positive");
    LogPartition out;
    for (const auto& [n, mu] : spec.levels()) {
        out.value += detail::level_term(stats, static_cast<double>(mu), gamma, n);
        ++out.levels_summed;
    }
    if (!spec.family())
        return out;
    const SpectrumFamily f = *spec.family();
    std::int64_t n = spec.max_level();
    const double q = std::exp(-gamma);
    auto remainder_bound = [&](std::int64_t last) {
        const double a = static_cast<double>(last + 1);
        const double r = std::pow((a + 1.0) / a, 3) * q;
        if (r >= 1.0)
            return std::numeric_limits<double>::infinity();
        const double qa = std::exp(-gamma * a);
        const double head = 2.0 * a * a * a * qa / (1.0 - r);
        return stats == Statistics::bose ? head / (1.0 - qa) : head;
    };
    while (n < 100000000) {
        const double bound = remainder_bound(n);
        if (std::isfinite(bound) && bound <= 1e-17 * std::max(out.value, 1e-300))
            break;
        ++n;
        out.value += detail::level_term(stats, static_cast<double>(family_multiplicity(f, n)), gamma, n);
        ++out.levels_summed;
    }
    out.tail_bound = remainder_bound(n);
    return out;
}

// Stages of the partition-function bound for mu_n = 2 n^3, q = e^{-gamma}:
//   s0 = -sum 2 n^3 ln(1 - q^n)                  (computed exactly)
//   s1 = 2 sum n^3 q^n / (1 - q)
//   s2 = 2/(1-q) (-d/dgamma)^3 1/(1-q) = 2 q (1 + 4q + q^2) / (1-q)^5
//   s3 = 12 q / (1-q)^5
//   s4 = 12 * 5^5 / gamma^5
struct ChainReport
{
    double gamma = 0.0;
    std::vector<double> stages;
    std::vector<bool> step_holds; // stages[i] <= stages[i+1] within rounding
    bool monotone = false;
    double tail_bound = 0.0; // on s0
};

inline ChainReport verify_partition_chain(double gamma)
{
    if (!(gamma > 0.0))
        throw std::domain_error("gamma must be positive");
    ChainReport r;
    r.gamma = gamma;
    const OneParticleSpectrum model = OneParticleSpectrum::from_family(SpectrumFamily::cubic_bound, 1);
    const LogPartition s0 = log_partition(model, Statistics::bose, gamma);
    r.tail_bound = s0.tail_bound;
    const double q = std::exp(-gamma);
    const double one_minus_q = -std::expm1(-gamma);

    // s1 summed directly, independent of the closed form of s2
    double cubic_series = 0.0;
    for (std::int64_t n = 1;; ++n) {
        const double term = static_cast<double>(n * n * n) * std::exp(-gamma * static_cast<double>(n));
        cubic_series += term;
        if (n > 3.0 / gamma && term < 1e-18 * cubic_series)
            break;
    }
    const double p5 = std::pow(one_minus_q, 5);
    r.stages = {s0.upper(), 2.0 * cubic_series / one_minus_q, 2.0 * q * (1.0 + 4.0 * q + q * q) / p5,
                12.0 * q / p5, 12.0 * 3125.0 / std::pow(gamma, 5)};
    r.monotone = true;
    for (std::size_t i = 0; i + 1 < r.stages.size(); ++i) {
        const bool ok = r.stages[i] <= r.stages[i + 1] * (1.0 + 1e-12);
        r.step_holds.push_back(ok);
        r.monotone = r.monotone && ok;
    }
    return r;
}

struct NCParams
{
    double c0 = 17.0;
    double k0 = 5.0 / 6.0;

    void validate() const
    {
        if (!(c0 > 0.0))
            throw std::invalid_argument("c0 must be positive");
        if (!(k0 > 0.0 && k0 < 1.0))
            throw std::invalid_argument("k0 must lie in (0, 1)");
    }
};

struct NCVerdict
{
    bool holds = true;
    int levels_checked = 0;
    std::optional<int> first_violation;
    double worst_margin = 0.0; // max over m >= 1 of ln mu_m - c0 m^k0 (negative when holding)
    int worst_level = 0;
};

// mu_m <= exp(c0 m^k0) at every computed level; mu_0 = 1 always satisfies it.
inline NCVerdict check_nc(const FockSpectrum& fock, const NCParams& params)
{
    params.validate();
    NCVerdict v;
    v.worst_margin = -std::numeric_limits<double>::infinity();
    for (int m = 0; m <= fock.cutoff(); ++m) {
        ++v.levels_checked;
        if (fock[m] == 0 || m == 0)
            continue;
        const double margin = log_big(fock[m]) - params.c0 * std::pow(static_cast<double>(m), params.k0);
        if (margin > v.worst_margin) {
            v.worst_margin = margin;
            v.worst_level = m;
        }
        if (margin > 0.0 && !v.first_violation) {
            v.holds = false;
            v.first_violation = m;
        }
    }
    return v;
}

struct PartitionBound
{
    double gamma = 0.0;
    double log_bound = 0.0; // mu_m <= exp(log_bound)
};

// mu_m <= exp(gamma m + 12 * 5^5 / gamma^5). With gamma unset the choice
// gamma = 5 m^{-1/6} gives the exponent 17 m^{5/6}; m = 0 returns the vacuum bound.
inline PartitionBound multiplicity_bound_from_partition(std::optional<double> gamma, std::int64_t m)
{
    if (m < 0)
        throw std::invalid_argument("level must be nonnegative");
    PartitionBound b;
    if (!gamma) {
        if (m == 0)
            return b;
        b.gamma = 5.0 * std::pow(static_cast<double>(m), -1.0 / 6.0);
    } else {
        if (!(*gamma > 0.0))
            throw std::domain_error("gamma must be positive");
        b.gamma = *gamma;
    }
    b.log_bound = b.gamma * static_cast<double>(m) + 12.0 * 3125.0 / std::pow(b.gamma, 5);
    return b;
}

} // namespace adswedge

#endif // ADSWEDGE_SPECTRAL_HPP
