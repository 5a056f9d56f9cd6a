#ifndef ADSWEDGE_LIE_GROUP_HPP
#define ADSWEDGE_LIE_GROUP_HPP

// Defining representation of so(2,n-1) and SO(2,n-1) on R^{n+1}.
//
// Generators are the real matrices K_{mu nu} with
//     (K_{mu nu})^a_b = g_{mu b} delta^a_nu - g_{nu b} delta^a_mu ,
// so that a unitary one-parameter group e^{itM_{mu nu}} corresponds to the
// matrix group e^{tK_{mu nu}}. Products of single-plane exponentials are
// evaluated from closed 2x2 blocks; general algebra elements go through a
// Pade scaling-and-squaring exponential, and the two routes are checked
// against each other.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace adswedge
{

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntMatrix = Eigen::MatrixXi;

inline constexpr double kHyperbolicGuard = 20.0;
inline constexpr double kProductTolerance = 1e-12;
inline constexpr double kCompositeTolerance = 1e-10;

class Metric
{
  public:
    explicit Metric(int n) : n_(n)
    {
        if (n < 2)
            throw std::invalid_argument("spacetime dimension must be at least 2, got " + std::to_string(n));
    }

    int dimension() const { return n_; }
    int ambient() const { return n_ + 1; }

    // +1 for the two time-like ambient directions 0 and n, -1 otherwise
    int operator[](int i) const
    {
        if (i < 0 || i > n_)
            throw std::out_of_range("ambient index out of range");
        return (i == 0 || i == n_) ? 1 : -1;
    }

    IntMatrix int_matrix() const
    {
        IntMatrix g = IntMatrix::Zero(ambient(), ambient());
        for (int i = 0; i <= n_; ++i)
            g(i, i) = (*this)[i];
        return g;
    }

    Matrix matrix() const { return int_matrix().cast<double>(); }

    double dot(const Vector& a, const Vector& b) const
    {
        double s = a[0] * b[0] + a[n_] * b[n_];
        for (int i = 1; i < n_; ++i)
            s -= a[i] * b[i];
        return s;
    }

    double square(const Vector& a) const { return dot(a, a); }

    bool operator==(const Metric&) const = default;

  private:
    int n_;
};

struct Generator
{
    int mu = 0;
    int nu = 1;
    int n = 2;
    IntMatrix matrix;

    Matrix real() const { return matrix.cast<double>(); }

    // opposite metric signs in the (mu, nu) plane -> boost, equal signs -> rotation
    bool hyperbolic() const
    {
        const Metric g(n);
        return g[mu] != g[nu];
    }
};

inline Generator generator(int mu, int nu, int n)
{
    const Metric g(n);
    if (mu < 0 || mu > n || nu < 0 || nu > n)
        throw std::out_of_range("generator index out of range for n = " + std::to_string(n));
    if (mu == nu)
        throw std::invalid_argument("generator requires distinct indices");
    IntMatrix k = IntMatrix::Zero(n + 1, n + 1);
    // K e_mu = g_mu e_nu,  K e_nu = -g_nu e_mu
    k(nu, mu) = g[mu];
    k(mu, nu) = -g[nu];
    return Generator{mu, nu, n, std::move(k)};
}

inline IntMatrix commutator(const IntMatrix& a, const IntMatrix& b) { return a * b - b * a; }
inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// Real form of the so(2,n-1) bracket satisfied by the K_{mu nu}:
//   [K_{mu nu}, K_{rho sigma}] = g_{mu rho} K_{nu sigma} - g_{mu sigma} K_{nu rho}
//                               + g_{nu sigma} K_{mu rho} - g_{nu rho} K_{mu sigma}
// where K with equal indices is zero and K_{ab} = -K_{ba}.
inline IntMatrix bracket_rhs(int mu, int nu, int rho, int sigma, int n)
{
    const Metric g(n);
    auto k = [n](int a, int b) -> IntMatrix {
        if (a == b)
            return IntMatrix::Zero(n + 1, n + 1);
        return generator(a, b, n).matrix;
    };
    auto delta = [&](int a, int b) { return a == b ? g[a] : 0; };
    return delta(mu, rho) * k(nu, sigma) - delta(mu, sigma) * k(nu, rho) + delta(nu, sigma) * k(mu, rho) -
           delta(nu, rho) * k(mu, sigma);
}

struct BracketTableReport
{
    int pairs_checked = 0;
    int mismatches = 0;
    int antisymmetry_failures = 0;
};

// Exact integer comparison of the full bracket table and of g-antisymmetry.
inline BracketTableReport bracket_table_check(int n)
{
    const Metric metric(n);
    const IntMatrix g = metric.int_matrix();
    BracketTableReport report;
    for (int mu = 0; mu <= n; ++mu) {
        for (int nu = 0; nu <= n; ++nu) {
            if (mu == nu)
                continue;
            const Generator a = generator(mu, nu, n);
            if (a.matrix.transpose() * g + g * a.matrix != IntMatrix::Zero(n + 1, n + 1) ||
                generator(nu, mu, n).matrix != -a.matrix)
                ++report.antisymmetry_failures;
            for (int rho = 0; rho <= n; ++rho) {
                for (int sigma = 0; sigma <= n; ++sigma) {
                    if (rho == sigma)
                        continue;
                    const Generator b = generator(rho, sigma, n);
                    ++report.pairs_checked;
                    if (commutator(a.matrix, b.matrix) != bracket_rhs(mu, nu, rho, sigma, n))
                        ++report.mismatches;
                }
            }
        }
    }
    return report;
}

enum class Component
{
    identity,
    reflected,
};

inline double metric_defect(const Matrix& m, const Metric& g)
{
    const Matrix gm = g.matrix();
    return (m.transpose() * gm * m - gm).cwiseAbs().maxCoeff();
}

class GroupElement
{
  public:
    static GroupElement identity(int n) { return GroupElement(Matrix::Identity(n + 1, n + 1), Component::identity); }

    // Validates g-preservation and det = +1 relative to the entry scale, so
    // large boosts are not rejected for rounding in their cosh entries.
    static GroupElement from_matrix(Matrix m, Component component, double tol = kProductTolerance)
    {
        if (m.rows() != m.cols() || m.rows() < 3)
            throw std::invalid_argument("group element must be a square matrix of size >= 3");
        const Metric g(static_cast<int>(m.rows()) - 1);
        const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
        if (adswedge::metric_defect(m, g) > tol * scale * scale)
            throw std::invalid_argument("matrix does not preserve the ambient metric");
        if (std::abs(m.determinant() - 1.0) > tol * std::pow(scale, static_cast<double>(m.rows())))
            throw std::invalid_argument("matrix does not have unit determinant");
        return GroupElement(std::move(m), component);
    }

    const Matrix& matrix() const { return matrix_; }
    Component component() const { return component_; }
    int dimension() const { return static_cast<int>(matrix_.rows()) - 1; }
    Metric metric() const { return Metric(dimension()); }

    // g^{-1} = g Lambda^T g for metric-preserving Lambda
    GroupElement inverse() const
    {
        const Matrix g = metric().matrix();
        return GroupElement(g * matrix_.transpose() * g, component_);
    }

    Vector apply(const Vector& x) const { return matrix_ * x; }

    double metric_defect() const { return adswedge::metric_defect(matrix_, metric()); }

    // conjugation a * this * a^{-1}
    GroupElement conjugated_by(const GroupElement& a) const;

    friend GroupElement extended_product(const GroupElement& a, const GroupElement& b);

  private:
    GroupElement(Matrix m, Component c) : matrix_(std::move(m)), component_(c) {}

    friend GroupElement exp_generator(const Generator& gen, double t);
    friend GroupElement exp_algebra(const Matrix& x);
    friend GroupElement theta01(int n);

    Matrix matrix_;
    Component component_;
};

// Product in SO(2,n-1) = SO_0 u theta01 SO_0 with the Z_2 component rule.
inline GroupElement extended_product(const GroupElement& a, const GroupElement& b)
{
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("group elements of different dimension");
    const Component c = (a.component_ == b.component_) ? Component::identity : Component::reflected;
    return GroupElement(a.matrix_ * b.matrix_, c);
}

inline GroupElement operator*(const GroupElement& a, const GroupElement& b) { return extended_product(a, b); }

inline GroupElement GroupElement::conjugated_by(const GroupElement& a) const { return a * (*this) * a.inverse(); }

// Closed form exp(tK) = 1 + (c - 1) P + s K on the (mu, nu) plane.
inline GroupElement exp_generator(const Generator& gen, double t)
{
    const bool hyp = gen.hyperbolic();
    if (hyp && std::abs(t) > kHyperbolicGuard)
        throw std::domain_error("hyperbolic exponent |t| = " + std::to_string(std::abs(t)) + " exceeds guard " +
                                std::to_string(kHyperbolicGuard));
    const double c = hyp ? std::cosh(t) : std::cos(t);
    const double s = hyp ? std::sinh(t) : std::sin(t);
    Matrix m = Matrix::Identity(gen.n + 1, gen.n + 1);
    m(gen.mu, gen.mu) = c;
    m(gen.nu, gen.nu) = c;
    m(gen.nu, gen.mu) = s * gen.matrix(gen.nu, gen.mu);
    m(gen.mu, gen.nu) = s * gen.matrix(gen.mu, gen.nu);
    return GroupElement(std::move(m), Component::identity);
}

inline GroupElement exp_generator(int mu, int nu, int n, double t) { return exp_generator(generator(mu, nu, n), t); }

// [6/6] Pade approximant with scaling and squaring, evaluated in extended
// precision. After scaling the infinity norm is at most 1/4, where the
// truncation error is below 1e-20; the squarings then lose a few digits of
// the wider mantissa instead of the double one.
inline Matrix expm(const Matrix& a)
{
    using Wide = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    if (a.rows() != a.cols())
        throw std::invalid_argument("expm requires a square matrix");
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.25)
        squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / 0.25))));
    const Wide x = a.cast<long double>() / std::ldexp(1.0L, squarings);

    // c_k = (2p - k)! p! / ((2p)! k! (p - k)!) with p = 6
    constexpr long double coeff[] = {1.0L,
                                     1.0L / 2.0L,
                                     5.0L / 44.0L,
                                     1.0L / 66.0L,
                                     1.0L / 792.0L,
                                     1.0L / 15840.0L,
                                     1.0L / 665280.0L};
    const Wide id = Wide::Identity(a.rows(), a.cols());
    Wide power = id;
    Wide numer = id;
    Wide denom = id;
    for (int k = 1; k <= 6; ++k) {
        power = power * x;
        numer += coeff[k] * power;
        denom += ((k % 2 == 0) ? coeff[k] : -coeff[k]) * power;
    }
    Wide r = denom.partialPivLu().solve(numer);
    for (int i = 0; i < squarings; ++i)
        r = r * r;
    return r.cast<double>();
}

inline bool in_algebra(const Matrix& x, double tol = 1e-12)
{
    const Matrix g = Metric(static_cast<int>(x.rows()) - 1).matrix();
    const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
    return (x.transpose() * g + g * x).cwiseAbs().maxCoeff() <= tol * scale;
}

// exp of a general Lie algebra element; always in the identity component
inline GroupElement exp_algebra(const Matrix& x)
{
    if (x.rows() != x.cols() || x.rows() < 3)
        throw std::invalid_argument("algebra element must be square of size >= 3");
    if (!in_algebra(x))
        throw std::invalid_argument("matrix is not in so(2,n-1)");
    return GroupElement(expm(x), Component::identity);
}

// Linear combination sum_i c_i K_i.
inline Matrix combine(std::initializer_list<std::pair<double, Generator>> terms)
{
    if (terms.size() == 0)
        throw std::invalid_argument("empty combination");
    const int n = terms.begin()->second.n;
    Matrix x = Matrix::Zero(n + 1, n + 1);
    for (const auto& [c, gen] : terms)
        x += c * gen.real();
    return x;
}

// All generators K_{mu nu} with mu < nu; a basis of so(2,n-1).
inline std::vector<Generator> algebra_basis(int n)
{
    std::vector<Generator> basis;
    for (int mu = 0; mu <= n; ++mu)
        for (int nu = mu + 1; nu <= n; ++nu)
            basis.push_back(generator(mu, nu, n));
    return basis;
}

// Reflection of the 0-1 coordinates, diag(-1,-1,1,...,1).
inline GroupElement theta01(int n)
{
    const Metric g(n);
    Matrix m = Matrix::Identity(g.ambient(), g.ambient());
    m(0, 0) = -1.0;
    m(1, 1) = -1.0;
    return GroupElement(std::move(m), Component::reflected);
}

inline double max_abs_difference(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Conjugation identities e^{sA} e^{tB} e^{-sA} = e^{t(f(s) C + h(s) D)}.
enum class Relation
{
    boost01_under_time_rotation,      // A = K0n, B = K01 -> cos s K01 - sin s K1n
    boost01_under_boost0j,            // A = K0j, B = K01 -> cosh s K01 - sinh s K1j
    boost01_under_rotation_j1,        // A = Kj1, B = K01 -> cos s K01 - sin s Kj0
    time_rotation_under_boost01,      // A = K01, B = K0n -> cosh s K0n + sinh s K1n
    boost0j_under_boost01,            // A = K01, B = K0j -> cosh s K0j + sinh s K1j
    boost1n_under_boost01,            // A = K01, B = K1n -> cosh s K1n + sinh s K0n
    boost01_under_boost1n,            // A = K1n, B = K01 -> cosh s K01 - sinh s K0n
};

inline constexpr Relation kAllRelations[] = {
    Relation::boost01_under_time_rotation, Relation::boost01_under_boost0j, Relation::boost01_under_rotation_j1,
    Relation::time_rotation_under_boost01, Relation::boost0j_under_boost01, Relation::boost1n_under_boost01,
    Relation::boost01_under_boost1n,
};

inline std::string_view relation_name(Relation r)
{
    switch (r) {
    case Relation::boost01_under_time_rotation: return "boost01_under_time_rotation";
    case Relation::boost01_under_boost0j: return "boost01_under_boost0j";
    case Relation::boost01_under_rotation_j1: return "boost01_under_rotation_j1";
    case Relation::time_rotation_under_boost01: return "time_rotation_under_boost01";
    case Relation::boost0j_under_boost01: return "boost0j_under_boost01";
    case Relation::boost1n_under_boost01: return "boost1n_under_boost01";
    case Relation::boost01_under_boost1n: return "boost01_under_boost1n";
    }
    return "unknown";
}

inline bool relation_uses_transverse_index(Relation r)
{
    return r == Relation::boost01_under_boost0j || r == Relation::boost01_under_rotation_j1 ||
           r == Relation::boost0j_under_boost01;
}

struct RelationTerms
{
    Generator conjugator;
    Generator conjugated;
    Generator first;
    Generator second;
    double first_coeff;
    double second_coeff;
};

inline RelationTerms relation_terms(Relation r, double s, int n, int j)
{
    auto k = [n](int a, int b) { return generator(a, b, n); };
    switch (r) {
    case Relation::boost01_under_time_rotation:
        return {k(0, n), k(0, 1), k(0, 1), k(1, n), std::cos(s), -std::sin(s)};
    case Relation::boost01_under_boost0j:
        return {k(0, j), k(0, 1), k(0, 1), k(1, j), std::cosh(s), -std::sinh(s)};
    case Relation::boost01_under_rotation_j1:
        return {k(j, 1), k(0, 1), k(0, 1), k(j, 0), std::cos(s), -std::sin(s)};
    case Relation::time_rotation_under_boost01:
        return {k(0, 1), k(0, n), k(0, n), k(1, n), std::cosh(s), std::sinh(s)};
    case Relation::boost0j_under_boost01:
        return {k(0, 1), k(0, j), k(0, j), k(1, j), std::cosh(s), std::sinh(s)};
    case Relation::boost1n_under_boost01:
        return {k(0, 1), k(1, n), k(1, n), k(0, n), std::cosh(s), std::sinh(s)};
    case Relation::boost01_under_boost1n:
        return {k(1, n), k(0, 1), k(0, 1), k(0, n), std::cosh(s), -std::sinh(s)};
    }
    throw std::invalid_argument("unknown relation");
}

// Max-norm difference of the two sides; left side from closed-form blocks,
// right side from the general exponential.
inline double check_group_relation(Relation r, double s, double t, int n, int j = 2)
{
    const Metric metric(n);
    if (relation_uses_transverse_index(r)) {
        if (n < 3)
            throw std::invalid_argument(std::string(relation_name(r)) + " needs a transverse index, vacuous for n = 2");
        if (j < 2 || j > n - 1)
            throw std::out_of_range("transverse index j must lie in [2, n-1]");
    }
    const RelationTerms terms = relation_terms(r, s, n, j);
    const GroupElement lhs = exp_generator(terms.conjugator, s) * exp_generator(terms.conjugated, t) *
                             exp_generator(terms.conjugator, -s);
    const Matrix rhs = expm(t * (terms.first_coeff * terms.first.real() + terms.second_coeff * terms.second.real()));
    return max_abs_difference(lhs.matrix(), rhs);
}

enum class LimitSide
{
    plus,  // s -> +infinity
    minus, // s -> -infinity
};

enum class ContractionPlane
{
    transverse, // e^{sK01} e^{2r e^{-|s|} K0j} e^{-sK01} -> e^{r(K0j +- K1j)}
    temporal,   // e^{sK01} e^{2r e^{-|s|} K1n} e^{-sK01} -> e^{r(K1n +- K0n)}
};

// Deviation of the conjugated, shrinking exponential from its limit for each
// s in s_values (|s| is used, the side picks the sign of s and the limit).
inline std::vector<double> contraction_limit_check(ContractionPlane plane, int n, int j, double r,
                                                   std::span<const double> s_values, LimitSide side = LimitSide::plus)
{
    if (plane == ContractionPlane::transverse && (j < 2 || j > n - 1))
        throw std::out_of_range("transverse contraction needs 2 <= j <= n-1");
    const double sign = side == LimitSide::plus ? 1.0 : -1.0;
    const Generator boost = generator(0, 1, n);
    const Generator moved = plane == ContractionPlane::transverse ? generator(0, j, n) : generator(1, n, n);
    const Generator partner = plane == ContractionPlane::transverse ? generator(1, j, n) : generator(0, n, n);
    const Matrix limit = expm(r * (moved.real() + sign * partner.real()));
    std::vector<double> out;
    out.reserve(s_values.size());
    for (double s_abs : s_values) {
        const double s = sign * std::abs(s_abs);
        const double t = 2.0 * r * std::exp(-std::abs(s));
        const GroupElement lhs = exp_generator(boost, s) * exp_generator(moved, t) * exp_generator(boost, -s);
        out.push_back(max_abs_difference(lhs.matrix(), limit));
    }
    return out;
}

inline Matrix matrix_power(Matrix base, std::int64_t m)
{
    Matrix result = Matrix::Identity(base.rows(), base.cols());
    while (m > 0) {
        if (m & 1)
            result = result * base;
        base = base * base;
        m >>= 1;
    }
    return result;
}

// || (e^{A/m} e^{B/m})^m - e^{A+B} ||_max
inline double trotter_check(const Generator& a, const Generator& b, std::int64_t m)
{
    if (m < 1)
        throw std::invalid_argument("Trotter step count must be >= 1");
    if (a.n != b.n)
        throw std::invalid_argument("generators of different dimension");
    const double step = 1.0 / static_cast<double>(m);
    const Matrix factor = exp_generator(a, step).matrix() * exp_generator(b, step).matrix();
    return max_abs_difference(matrix_power(factor, m), expm(a.real() + b.real()));
}

} // namespace adswedge

#endif // ADSWEDGE_LIE_GROUP_HPP
