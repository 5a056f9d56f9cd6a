#ifndef ADSWEDGE_FREEFIELD_HPP
#define ADSWEDGE_FREEFIELD_HPP

// Quasifree scalar fields on two-dimensional AdS. The two-point function is
// the global mode sum
//   W_eps(x, y) = (cos rho_x cos rho_y)^d
//                 sum_{k<=N} p_k(sin rho_x) p_k(sin rho_y) / (2 w_k) e^{-i w_k (tau_x - tau_y - i eps)},
// w_k = d + k, with p_k the orthonormal Gegenbauer polynomials of index d;
// the 1/(2 w_k) is the Klein-Gordon normalisation. Integer d gives a field on
// AdS proper (2 pi periodic in tau), other d live on the covering space only.

#include <adswedge/ads_geometry.hpp>
#include <adswedge/chart.hpp>
#include <adswedge/gegenbauer.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adswedge
{

using Complex = std::complex<double>;

enum class Space
{
    proper,
    covering,
};

inline const char* space_name(Space s) { return s == Space::proper ? "proper" : "covering"; }

struct ScalarModel
{
    double delta = 1.0;
    Space space = Space::proper;

    static ScalarModel proper(int delta) { return {static_cast<double>(delta), Space::proper}; }
    static ScalarModel covering(double delta) { return {delta, Space::covering}; }

    bool integer_weight() const { return delta == std::round(delta); }

    void validate() const
    {
        if (!(delta > 0.0) || !std::isfinite(delta))
            throw std::invalid_argument("conformal weight must be positive");
        if (space == Space::proper && !integer_weight())
            throw std::invalid_argument("fields on AdS proper need integer conformal weight");
    }
};

struct EnergyVerdict
{
    bool accepted = false;
    bool positive = false;
    bool integer_spectrum = false;
    std::string reason;
};

// Mode frequencies w_k = d + k are positive for d > 0; AdS proper further
// needs them in N.
inline EnergyVerdict positive_energy_check(const ScalarModel& m)
{
    EnergyVerdict v;
    v.positive = m.delta > 0.0 && std::isfinite(m.delta);
    v.integer_spectrum = v.positive && m.integer_weight();
    if (!v.positive)
        v.reason = "nonpositive lowest frequency";
    else if (m.space == Space::proper && !v.integer_spectrum)
        v.reason = "non-integer frequencies are not 2 pi periodic";
    else if (!v.integer_spectrum)
        v.reason = "non-integer frequencies, covering space only";
    v.accepted = v.positive && (m.space == Space::covering || v.integer_spectrum);
    return v;
}

struct ModeSumParams
{
    double eps = 0.05;
    int modes = 400;

    void validate() const
    {
        if (!(eps > 0.0) || !std::isfinite(eps))
            throw std::invalid_argument("regulator must be positive");
        if (modes < 1)
            throw std::invalid_argument("mode truncation must be at least 1");
    }

    // geometric factor of the omitted modes: e^{-eps (N+1)} / (1 - e^{-eps})
    double truncation_factor() const { return std::exp(-eps * (modes + 1.0)) / -std::expm1(-eps); }
};

inline int modes_for(double eps, double decay_lengths)
{
    return static_cast<int>(std::ceil(decay_lengths / eps));
}

class TwoPointEvaluator
{
  public:
    TwoPointEvaluator(ScalarModel model, ModeSumParams params)
        : model_(model), params_(params), poly_(checked_delta(model, params), params.modes)
    {
    }

    const ScalarModel& model() const { return model_; }
    const ModeSumParams& params() const { return params_; }

    // Profile of one point, reusable against many partners.
    struct Profile
    {
        GlobalCoords at;
        double weight = 0.0; // cos^d rho
        std::vector<double> p;
    };

    Profile profile(const GlobalCoords& x) const
    {
        require_chart_domain(x.rho);
        return {x, std::pow(std::cos(x.rho), model_.delta), poly_.values(std::sin(x.rho))};
    }

    Complex operator()(const Profile& x, const GlobalCoords& y) const
    {
        require_chart_domain(y.rho);
        const double d = model_.delta;
        const double dtau = x.at.tau - y.tau;
        // sum_k p_k(sx) p_k(sy) / (2 (d + k)) w^k, w = e^{-i dtau - eps}
        Complex acc = 0.0;
        Complex phase = 1.0;
        const Complex w = std::polar(std::exp(-params_.eps), -dtau);
        poly_.for_each(std::sin(y.rho), [&](int k, double py) {
            if (k % 256 == 0)
                phase = std::polar(std::exp(-params_.eps * k), -dtau * k);
            acc += (x.p[k] * py / (2.0 * (d + k))) * phase;
            phase *= w;
        });
        const Complex lead = std::polar(std::exp(-params_.eps * d), -dtau * d);
        return x.weight * std::pow(std::cos(y.rho), d) * lead * acc;
    }

    Complex operator()(const GlobalCoords& x, const GlobalCoords& y) const { return (*this)(profile(x), y); }

    // Points of the embedding use the principal chart branch tau in (-pi, pi].
    Complex operator()(const AdSPoint& x, const AdSPoint& y) const { return (*this)(chart(x), chart(y)); }

  private:
    static double checked_delta(const ScalarModel& m, const ModeSumParams& p)
    {
        m.validate();
        p.validate();
        return m.delta;
    }

    ScalarModel model_;
    ModeSumParams params_;
    OrthonormalGegenbauer poly_;
};

inline Complex two_point(const GlobalCoords& x, const GlobalCoords& y, const ScalarModel& model,
                         const ModeSumParams& params)
{
    return TwoPointEvaluator(model, params)(x, y);
}

inline Complex two_point(const AdSPoint& x, const AdSPoint& y, const ScalarModel& model, const ModeSumParams& params)
{
    return TwoPointEvaluator(model, params)(x, y);
}

struct ConvergenceEstimate
{
    double difference = 0.0; // |W_N - W_2N|
    double factor = 0.0;     // e^{-eps (N+1)} / (1 - e^{-eps})
    double fitted_constant = 0.0;
};

inline ConvergenceEstimate mode_sum_convergence(const GlobalCoords& x, const GlobalCoords& y, const ScalarModel& model,
                                                const ModeSumParams& params)
{
    ModeSumParams twice = params;
    twice.modes = 2 * params.modes;
    ConvergenceEstimate e;
    e.difference = std::abs(two_point(x, y, model, params) - two_point(x, y, model, twice));
    e.factor = params.truncation_factor();
    e.fitted_constant = e.difference / e.factor;
    return e;
}

// W(x, y) + W(y, x) = 2 Re W(x, y) for a hermitian scalar: the vacuum value
// of the anticommutator a Fermi-type quantisation would need.
struct AnticommutatorValue
{
    double value = 0.0;
    double imaginary_residual = 0.0;
};

inline AnticommutatorValue fermi_anticommutator(const GlobalCoords& x, const GlobalCoords& y,
                                                const TwoPointEvaluator& w)
{
    const Complex a = w(x, y);
    const Complex b = w(y, x);
    AnticommutatorValue out;
    out.value = a.real() + b.real();
    out.imaginary_residual = std::abs(a.imag() + b.imag());
    if (out.imaginary_residual > 1e-12 * std::max(1.0, std::abs(a)))
        throw std::logic_error("two-point function is not hermitian at this pair");
    return out;
}

inline AnticommutatorValue fermi_anticommutator(const AdSPoint& x, const AdSPoint& y, const TwoPointEvaluator& w)
{
    return fermi_anticommutator(chart(x), chart(y), w);
}

// ---------------------------------------------------------------------------
// KMS condition along the boost orbit x(t) = lambda01(t) x_O:
//   F(t) = W(x_O, x(t)),  G(t) = W(x(t), x_O) = conj F(t),
//   F^(k) = int F(t) w(t) e^{-ikt} dt,  G^(k) = e^{-2 pi k} F^(k).
// For k < 0 the inverse ratio F^/G^ = e^{2 pi k} is compared so that the
// compared ratio never exceeds 1.

struct KmsOptions
{
    double eps = 0.0025;
    int modes = 0;          // 0 selects ceil(30 / eps)
    double half_width = 12; // t in [-T, T)
    int samples = 16384;
    double taper = 2.0;     // cosine ramp length at each end
    double k_min = -3.0;
    double k_max = 3.0;
    double k_step = 0.25;
    double noise_floor = 1e-6; // relative to the peak |F^|
    double tol = 1e-3;
    double decay_floor = 1e-4; // max |F(+-T)| / max |F| accepted

    int mode_count() const { return modes > 0 ? modes : modes_for(eps, 30.0); }
};

struct KmsBin
{
    double k = 0.0;
    double abs_f = 0.0;
    double abs_g = 0.0;
    double ratio = 0.0;  // |G^/F^| for k >= 0, |F^/G^| for k < 0
    double target = 0.0; // e^{-2 pi |k|}
    double error = 0.0;  // |complex ratio - target|
    bool significant = false;
    bool pass = false;
};

struct KmsReport
{
    KmsOptions options;
    std::vector<KmsBin> bins;
    double max_error = 0.0;
    double worst_k = 0.0;
    int significant_bins = 0;
    bool pass = false;
};

inline double tukey_window(double t, double half_width, double taper)
{
    const double d = std::abs(t) - (half_width - taper);
    if (d <= 0.0)
        return 1.0;
    if (d >= taper)
        return 0.0;
    return 0.5 * (1.0 + std::cos(std::numbers::pi * d / taper));
}

inline KmsReport kms_fourier_check(const AdSPoint& x_O, const ScalarModel& model, const KmsOptions& opt = {})
{
    if (model.space != Space::proper)
        throw std::invalid_argument("KMS check runs on the proper-space model");
    if (x_O.dimension() != 2)
        throw std::invalid_argument("KMS check runs on two-dimensional AdS");
    if (!(reference_margin(WedgeVariant::base, x_O.coords()) > 0.0))
        throw std::invalid_argument("observer must lie strictly inside W_R");
    if (opt.samples < 16 || !(opt.half_width > opt.taper) || !(opt.k_step > 0.0))
        throw std::invalid_argument("bad sampling grid");

    const TwoPointEvaluator w(model, {opt.eps, opt.mode_count()});
    const auto prof = w.profile(chart(x_O));
    const double dt = 2.0 * opt.half_width / opt.samples;
    std::vector<double> t(opt.samples);
    std::vector<Complex> f(opt.samples);
    double peak_f = 0.0;
    for (int j = 0; j < opt.samples; ++j) {
        t[j] = -opt.half_width + j * dt;
        const Vector xt = exp_generator(0, 1, 2, t[j]).apply(x_O.coords());
        f[j] = w(prof, chart(xt));
        peak_f = std::max(peak_f, std::abs(f[j]));
    }
    const double edge = std::max(std::abs(f.front()), std::abs(f.back()));
    if (edge > opt.decay_floor * peak_f)
        throw std::domain_error("two-point function has not decayed within the t window");

    KmsReport rep;
    rep.options = opt;
    std::vector<Complex> fh, gh;
    const int nk = static_cast<int>(std::floor((opt.k_max - opt.k_min) / opt.k_step + 1e-9)) + 1;
    double peak_hat = 0.0;
    for (int i = 0; i < nk; ++i) {
        const double k = opt.k_min + i * opt.k_step;
        Complex sf = 0.0, sg = 0.0;
        for (int j = 0; j < opt.samples; ++j) {
            const double win = tukey_window(t[j], opt.half_width, opt.taper);
            if (win == 0.0)
                continue;
            const Complex e = std::polar(win * dt, -k * t[j]);
            sf += f[j] * e;
            sg += std::conj(f[j]) * e;
        }
        fh.push_back(sf);
        gh.push_back(sg);
        peak_hat = std::max(peak_hat, std::abs(sf));
    }
    rep.pass = true;
    for (int i = 0; i < nk; ++i) {
        KmsBin b;
        b.k = opt.k_min + i * opt.k_step;
        b.abs_f = std::abs(fh[i]);
        b.abs_g = std::abs(gh[i]);
        const bool forward = b.k >= 0.0;
        const Complex num = forward ? gh[i] : fh[i];
        const Complex den = forward ? fh[i] : gh[i];
        b.target = std::exp(-2.0 * std::numbers::pi * std::abs(b.k));
        b.significant = std::abs(den) > opt.noise_floor * peak_hat;
        if (b.significant) {
            const Complex r = num / den;
            b.ratio = std::abs(r);
            b.error = std::abs(r - b.target);
            b.pass = b.error <= opt.tol;
            ++rep.significant_bins;
            if (b.error > rep.max_error) {
                rep.max_error = b.error;
                rep.worst_k = b.k;
            }
            rep.pass = rep.pass && b.pass;
        } else {
            b.pass = true;
        }
        rep.bins.push_back(b);
    }
    rep.pass = rep.pass && rep.significant_bins > 0;
    return rep;
}

// Same check at (eps, N), (eps, 2N) and (eps/2, 2N).
struct KmsConvergence
{
    KmsReport base;
    KmsReport doubled_modes;
    KmsReport halved_eps;
    bool truncation_negligible = false; // doubling N moves the worst error by < 1e-6
    bool eps_improves = false;          // halving eps does not increase the worst error
    bool pass = false;
};

inline KmsConvergence kms_convergence(const AdSPoint& x_O, const ScalarModel& model, const KmsOptions& opt = {})
{
    KmsConvergence c;
    c.base = kms_fourier_check(x_O, model, opt);
    KmsOptions more = opt;
    more.modes = 2 * opt.mode_count();
    c.doubled_modes = kms_fourier_check(x_O, model, more);
    KmsOptions finer = more;
    finer.eps = opt.eps / 2.0;
    c.halved_eps = kms_fourier_check(x_O, model, finer);
    c.truncation_negligible = std::abs(c.base.max_error - c.doubled_modes.max_error) < 1e-6;
    c.eps_improves = c.halved_eps.max_error <= c.base.max_error;
    c.pass = c.base.pass && c.doubled_modes.pass && c.halved_eps.pass && c.truncation_negligible && c.eps_improves;
    return c;
}

// ---------------------------------------------------------------------------
// Weak locality at two-point level: a hermitian scalar has
// W(x, y) - W(y, x) = 2i Im W(x, y), so the two orderings agree in the vacuum
// iff Im W_eps -> 0. Pairs have y in W_R and x in W_R' (opposite) or in the
// conjugate region {x1 > |x0|, x2 < 0} (conjugate). On the covering space the
// conjugate points are lifted to the sheet tau in (pi/2, 3pi/2).

enum class PairFamily
{
    opposite,
    conjugate,
};

inline const char* pair_family_name(PairFamily f) { return f == PairFamily::opposite ? "opposite" : "conjugate"; }

struct PointPair
{
    GlobalCoords x;
    GlobalCoords y;
};

// (a sinh eta, s1 a cosh eta, sn sqrt(1 + a^2)) with a log-uniform in
// [0.25, 4] and eta uniform in [-1, 1].
inline GlobalCoords sample_family_point(WedgeVariant v, Rng& rng, Space space)
{
    const double a = rng.log_uniform(0.25, 4.0);
    const double eta = rng.uniform(-1.0, 1.0);
    const auto [s1, sn] = variant_signs(v);
    Vector x(3);
    x << a * std::sinh(eta), s1 * a * std::cosh(eta), sn * std::sqrt(1.0 + a * a);
    GlobalCoords c = chart(x);
    if (space == Space::covering && sn < 0 && c.tau < 0.0)
        c.tau += 2.0 * std::numbers::pi;
    return c;
}

inline std::vector<PointPair> sample_pairs(PairFamily family, Space space, int samples, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<PointPair> out;
    out.reserve(samples);
    const WedgeVariant vx = family == PairFamily::opposite ? WedgeVariant::opposite : WedgeVariant::conjugate_prime;
    for (int i = 0; i < samples; ++i) {
        const GlobalCoords x = sample_family_point(vx, rng, space);
        const GlobalCoords y = sample_family_point(WedgeVariant::base, rng, space);
        out.push_back({x, y});
    }
    return out;
}

struct WeakLocalityOptions
{
    std::vector<double> eps_sequence{1e-2, 1e-3, 1e-4};
    int samples = 200;
    std::uint64_t seed = 1;
    double decay_lengths = 36.0; // N = ceil(decay_lengths / eps)
};

struct PairValue
{
    double eps = 0.0;
    int pair = 0;
    Complex w;
};

struct WeakLocalityLevel
{
    double eps = 0.0;
    int modes = 0;
    double max_abs_im = 0.0;
    double min_abs_im = 0.0;
    double median_abs_im = 0.0;
    int worst_pair = 0;
};

struct WeakLocalityReport
{
    PairFamily family = PairFamily::opposite;
    ScalarModel model;
    std::vector<WeakLocalityLevel> levels;
    std::vector<PairValue> values;
    std::vector<PointPair> pairs;
    // slope of log max|Im W| against log eps between the first and last level
    double fitted_order = 0.0;
    bool decreasing = false;
};

inline WeakLocalityReport weak_locality_scan(PairFamily family, const ScalarModel& model,
                                             const WeakLocalityOptions& opt = {})
{
    model.validate();
    if (opt.eps_sequence.empty() || opt.samples < 1)
        throw std::invalid_argument("empty weak-locality scan");
    WeakLocalityReport rep;
    rep.family = family;
    rep.model = model;
    rep.pairs = sample_pairs(family, model.space, opt.samples, opt.seed);
    for (double eps : opt.eps_sequence) {
        const TwoPointEvaluator w(model, {eps, modes_for(eps, opt.decay_lengths)});
        WeakLocalityLevel lv;
        lv.eps = eps;
        lv.modes = w.params().modes;
        lv.min_abs_im = std::numeric_limits<double>::infinity();
        std::vector<double> ims;
        for (int i = 0; i < static_cast<int>(rep.pairs.size()); ++i) {
            const Complex v = w(rep.pairs[i].x, rep.pairs[i].y);
            rep.values.push_back({eps, i, v});
            const double im = std::abs(v.imag());
            ims.push_back(im);
            if (im > lv.max_abs_im) {
                lv.max_abs_im = im;
                lv.worst_pair = i;
            }
            lv.min_abs_im = std::min(lv.min_abs_im, im);
        }
        std::nth_element(ims.begin(), ims.begin() + ims.size() / 2, ims.end());
        lv.median_abs_im = ims[ims.size() / 2];
        rep.levels.push_back(lv);
    }
    rep.decreasing = true;
    for (std::size_t i = 1; i < rep.levels.size(); ++i)
        rep.decreasing = rep.decreasing && rep.levels[i].max_abs_im < rep.levels[i - 1].max_abs_im;
    if (rep.levels.size() >= 2) {
        const auto& a = rep.levels.front();
        const auto& b = rep.levels.back();
        rep.fitted_order = std::log(b.max_abs_im / a.max_abs_im) / std::log(b.eps / a.eps);
    }
    return rep;
}

} // namespace adswedge

#endif // ADSWEDGE_FREEFIELD_HPP
