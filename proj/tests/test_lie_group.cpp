#include <adswedge/lie_group.hpp>
#include <adswedge/random.hpp>

#include <unsupported/Eigen/MatrixFunctions>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace adswedge;

namespace
{

constexpr double pi = std::numbers::pi;

Matrix random_algebra_element(Rng& rng, int n, double scale)
{
    Matrix x = Matrix::Zero(n + 1, n + 1);
    for (const Generator& g : algebra_basis(n))
        x += scale * rng.uniform(-1.0, 1.0) * g.real();
    return x;
}

} // namespace

TEST(Metric, SignatureHasTwoTimelikeDirections)
{
    const Metric g(4);
    EXPECT_EQ(g[0], 1);
    EXPECT_EQ(g[4], 1);
    for (int i = 1; i < 4; ++i)
        EXPECT_EQ(g[i], -1);
    EXPECT_THROW(Metric(1), std::invalid_argument);
    EXPECT_THROW(g[5], std::out_of_range);
}

TEST(Generator, IsGAntisymmetricAndAntisymmetricInIndices)
{
    for (int n = 2; n <= 5; ++n) {
        const IntMatrix g = Metric(n).int_matrix();
        for (int mu = 0; mu <= n; ++mu)
            for (int nu = 0; nu <= n; ++nu) {
                if (mu == nu)
                    continue;
                const Generator k = generator(mu, nu, n);
                EXPECT_EQ(k.matrix.transpose() * g + g * k.matrix, IntMatrix::Zero(n + 1, n + 1));
                EXPECT_EQ(generator(nu, mu, n).matrix, -k.matrix);
            }
    }
}

TEST(Generator, RejectsBadIndices)
{
    EXPECT_THROW(generator(0, 0, 3), std::invalid_argument);
    EXPECT_THROW(generator(0, 4, 3), std::out_of_range);
    EXPECT_THROW(generator(-1, 2, 3), std::out_of_range);
}

TEST(Generator, BoostActsAsHyperbolicRotation)
{
    const double t = 0.83;
    const Vector x = (Vector(3) << 0.3, -1.2, 2.0).finished();
    const Vector y = exp_generator(0, 1, 2, t).apply(x);
    EXPECT_NEAR(y[0], std::cosh(t) * x[0] + std::sinh(t) * x[1], 1e-14);
    EXPECT_NEAR(y[1], std::sinh(t) * x[0] + std::cosh(t) * x[1], 1e-14);
    EXPECT_DOUBLE_EQ(y[2], x[2]);
}

TEST(Generator, BracketOfGeneratorWithItselfVanishes)
{
    const Generator k = generator(0, 1, 3);
    EXPECT_EQ(commutator(k.matrix, k.matrix), IntMatrix::Zero(4, 4));
}

TEST(Generator, BoostBracketMatchesRealForm)
{
    // [K01, K1n] = -g_11 K0n = K0n
    for (int n = 2; n <= 5; ++n) {
        const IntMatrix lhs = commutator(generator(0, 1, n).matrix, generator(1, n, n).matrix);
        EXPECT_EQ(lhs, generator(0, n, n).matrix) << "n = " << n;
        EXPECT_EQ(lhs, bracket_rhs(0, 1, 1, n, n));
    }
}

TEST(Generator, FullBracketTableIsExact)
{
    for (int n = 2; n <= 5; ++n) {
        const BracketTableReport r = bracket_table_check(n);
        EXPECT_EQ(r.pairs_checked, (n + 1) * n * (n + 1) * n);
        EXPECT_EQ(r.mismatches, 0) << "n = " << n;
        EXPECT_EQ(r.antisymmetry_failures, 0);
    }
}

TEST(Exponential, ZeroParameterGivesIdentity)
{
    EXPECT_EQ(exp_generator(0, 1, 3, 0.0).matrix(), Matrix::Identity(4, 4));
}

TEST(Exponential, TimeRotationHasPeriodTwoPi)
{
    for (int n = 2; n <= 5; ++n) {
        EXPECT_LE(max_abs_difference(exp_generator(0, n, n, 2 * pi).matrix(), Matrix::Identity(n + 1, n + 1)), 1e-15);
        for (double t : {-2.1, 0.4, 1.7})
            EXPECT_LE(max_abs_difference(exp_generator(0, n, n, t).matrix(),
                                         exp_generator(0, n, n, t + 2 * pi).matrix()),
                      1e-12);
    }
}

TEST(Exponential, HalfTurnRotationFlipsBoost)
{
    for (int n = 2; n <= 5; ++n) {
        const Matrix r = exp_generator(0, n, n, pi).matrix();
        const Matrix rinv = exp_generator(0, n, n, -pi).matrix();
        const Matrix k01 = generator(0, 1, n).real();
        EXPECT_LE(max_abs_difference(r * k01 * rinv, -k01), 1e-15);
    }
}

TEST(Exponential, HyperbolicGuard)
{
    EXPECT_NO_THROW(exp_generator(0, 1, 2, 20.0));
    EXPECT_THROW(exp_generator(0, 1, 2, 20.5), std::domain_error);
    // rotations are bounded, no guard
    EXPECT_NO_THROW(exp_generator(0, 2, 2, 100.0));
}

TEST(Exponential, ClosedFormAgreesWithPade)
{
    for (int n = 2; n <= 4; ++n)
        for (const Generator& g : algebra_basis(n))
            for (double t : {-3.0, -0.2, 0.9, 2.5}) {
                const double scale = std::cosh(t);
                EXPECT_LE(max_abs_difference(exp_generator(g, t).matrix(), expm(t * g.real())), 1e-13 * scale);
            }
}

TEST(Exponential, PadeAgreesWithIndependentReference)
{
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix x = random_algebra_element(rng, 4, 1.5);
        const Matrix ref = x.exp();
        EXPECT_LE(max_abs_difference(expm(x), ref), 1e-12 * std::max(1.0, ref.cwiseAbs().maxCoeff()));
    }
}

TEST(Exponential, AlgebraExponentialRejectsNonAlgebraMatrix)
{
    Matrix x = Matrix::Zero(3, 3);
    x(0, 0) = 1.0;
    EXPECT_THROW(exp_algebra(x), std::invalid_argument);
    EXPECT_NO_THROW(exp_algebra(generator(1, 2, 2).real()));
}

TEST(GroupElement, FromMatrixValidatesMetric)
{
    EXPECT_NO_THROW(GroupElement::from_matrix(exp_generator(0, 1, 3, 2.0).matrix(), Component::identity));
    Matrix bad = Matrix::Identity(4, 4);
    bad(0, 1) = 0.1;
    EXPECT_THROW(GroupElement::from_matrix(bad, Component::identity), std::invalid_argument);
    Matrix flip = Matrix::Identity(4, 4);
    flip(1, 1) = -1.0;
    EXPECT_THROW(GroupElement::from_matrix(flip, Component::identity), std::invalid_argument);
}

TEST(GroupElement, InverseIsMetricTranspose)
{
    const GroupElement a = exp_generator(0, 1, 3, 1.1) * exp_generator(1, 2, 3, 0.4) * exp_generator(0, 3, 3, -2.0);
    EXPECT_LE(max_abs_difference((a * a.inverse()).matrix(), Matrix::Identity(4, 4)), 1e-13);
}

TEST(GroupElement, TenRandomExponentialsPreserveMetric)
{
    Rng rng(5);
    for (int n = 2; n <= 5; ++n) {
        const auto basis = algebra_basis(n);
        for (int trial = 0; trial < 50; ++trial) {
            GroupElement a = GroupElement::identity(n);
            for (int i = 0; i < 10; ++i) {
                const auto& g = basis[rng.next() % basis.size()];
                a = a * exp_generator(g, rng.uniform(-3.0, 3.0));
            }
            // relative to the entry scale, as in from_matrix
            const double scale = std::max(1.0, a.matrix().cwiseAbs().maxCoeff());
            EXPECT_LE(a.metric_defect(), 1e-12 * scale * scale);
            EXPECT_LE(std::abs(a.matrix().determinant() - 1.0), 1e-12 * std::pow(scale, n + 1.0));
        }
    }
}

TEST(GroupElement, ShortProductsMeetAbsoluteTolerance)
{
    Rng rng(6);
    const auto basis = algebra_basis(3);
    for (int trial = 0; trial < 100; ++trial) {
        GroupElement a = GroupElement::identity(3);
        for (int i = 0; i < 4; ++i)
            a = a * exp_generator(basis[rng.next() % basis.size()], rng.uniform(-1.0, 1.0));
        EXPECT_LE(a.metric_defect(), 1e-12);
    }
}

TEST(Reflection, Theta01SquaresToIdentity)
{
    const GroupElement th = theta01(3);
    EXPECT_EQ(th.component(), Component::reflected);
    const GroupElement sq = th * th;
    EXPECT_EQ(sq.component(), Component::identity);
    EXPECT_EQ(sq.matrix(), Matrix::Identity(4, 4));
}

TEST(Reflection, ConjugationShadowsModularRelations)
{
    for (int n = 2; n <= 5; ++n) {
        const GroupElement th = theta01(n);
        for (double s : {-1.4, 0.3, 2.2}) {
            EXPECT_LE(max_abs_difference((th * exp_generator(0, 1, n, s) * th).matrix(),
                                         exp_generator(0, 1, n, s).matrix()),
                      1e-15);
            EXPECT_LE(max_abs_difference((th * exp_generator(0, n, n, s) * th).matrix(),
                                         exp_generator(0, n, n, -s).matrix()),
                      1e-15);
            for (int j = 2; j < n; ++j)
                EXPECT_LE(max_abs_difference((th * exp_generator(0, j, n, s) * th).matrix(),
                                             exp_generator(0, j, n, -s).matrix()),
                          1e-15);
        }
    }
}

TEST(Reflection, ExtendedProductFollowsZ2Rule)
{
    const int n = 3;
    const GroupElement l1 = exp_generator(0, 2, n, 0.7) * exp_generator(1, 3, n, -0.3);
    const GroupElement l2 = exp_generator(0, 1, n, 1.2);
    const GroupElement th = theta01(n);
    const GroupElement a = th * l1;
    const GroupElement b = th * l2;
    EXPECT_EQ(a.component(), Component::reflected);
    const GroupElement ab = a * b;
    EXPECT_EQ(ab.component(), Component::identity);
    EXPECT_LE(max_abs_difference(ab.matrix(), (th * l1 * th).matrix() * l2.matrix()), 1e-14);
    const GroupElement id = GroupElement::identity(n);
    EXPECT_EQ((id * a).matrix(), a.matrix());
    EXPECT_EQ((id * a).component(), Component::reflected);
}

TEST(Relations, AllHoldOnRandomGrid)
{
    Rng rng(1);
    for (int n = 2; n <= 5; ++n)
        for (Relation r : kAllRelations) {
            if (relation_uses_transverse_index(r) && n < 3)
                continue;
            for (int trial = 0; trial < 100; ++trial) {
                const double s = rng.uniform(-3.0, 3.0);
                const double t = rng.uniform(-3.0, 3.0);
                const int j = 2 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(std::max(1, n - 2)));
                EXPECT_LE(check_group_relation(r, s, t, n, j), kCompositeTolerance)
                    << relation_name(r) << " n=" << n << " s=" << s << " t=" << t;
            }
        }
}

TEST(Relations, TransverseRelationsNeedThreeDimensions)
{
    EXPECT_THROW(check_group_relation(Relation::boost0j_under_boost01, 0.1, 0.2, 2), std::invalid_argument);
    EXPECT_THROW(check_group_relation(Relation::boost01_under_boost0j, 0.1, 0.2, 4, 4), std::out_of_range);
}

TEST(Relations, ZeroConjugationIsTrivial)
{
    EXPECT_LE(check_group_relation(Relation::boost01_under_time_rotation, 0.0, 1.7, 3), 1e-15);
}

TEST(Relations, HalfTurnConjugatedBoostIsReversed)
{
    for (double t : {-1.0, 0.5, 2.0}) {
        const int n = 3;
        const GroupElement lhs =
            exp_generator(0, n, n, pi) * exp_generator(0, 1, n, t) * exp_generator(0, n, n, -pi);
        EXPECT_LE(max_abs_difference(lhs.matrix(), exp_generator(0, 1, n, -t).matrix()), 1e-13);
    }
}

TEST(Relations, TimeRotationUnderBoostNeedsPlusSign)
{
    // the minus-sign variant differs at first order in s
    const int n = 3;
    const double s = 0.8;
    const double t = 1.1;
    const GroupElement lhs = exp_generator(0, 1, n, s) * exp_generator(0, n, n, t) * exp_generator(0, 1, n, -s);
    const Matrix minus = expm(t * (std::cosh(s) * generator(0, n, n).real() - std::sinh(s) * generator(1, n, n).real()));
    EXPECT_GT(max_abs_difference(lhs.matrix(), minus), 0.1);
    EXPECT_LE(check_group_relation(Relation::time_rotation_under_boost01, s, t, n), 1e-12);
}

TEST(Contraction, ZeroRadiusIsIdentity)
{
    // exact up to the rounding of e^{sK01} e^{-sK01}
    const std::vector<double> s = {1.0, 3.0, 5.0};
    const auto dev = contraction_limit_check(ContractionPlane::transverse, 3, 2, 0.0, s);
    for (std::size_t i = 0; i < s.size(); ++i)
        EXPECT_LE(dev[i], 1e-15 * std::exp(2.0 * s[i]));
}

TEST(Contraction, TransverseDeviationDecreasesToLimit)
{
    const std::vector<double> s = {2.0, 4.0, 6.0, 8.0};
    for (LimitSide side : {LimitSide::plus, LimitSide::minus}) {
        const auto dev = contraction_limit_check(ContractionPlane::transverse, 3, 2, 1.0, s, side);
        for (std::size_t i = 1; i < dev.size(); ++i)
            EXPECT_LT(dev[i], dev[i - 1]);
        EXPECT_LE(dev.back(), 1e-3);
        // deviation is of order r e^{-2|s|}
        EXPECT_NEAR(dev[3] / dev[2], std::exp(-4.0), 0.3 * std::exp(-4.0));
    }
}

TEST(Contraction, TwoDimensionalAnalogue)
{
    const std::vector<double> s = {2.0, 4.0, 6.0, 8.0};
    for (LimitSide side : {LimitSide::plus, LimitSide::minus}) {
        const auto dev = contraction_limit_check(ContractionPlane::temporal, 2, 0, 1.0, s, side);
        for (std::size_t i = 1; i < dev.size(); ++i)
            EXPECT_LT(dev[i], dev[i - 1]);
        EXPECT_LE(dev.back(), 1e-3);
    }
}

TEST(Contraction, WrongLimitSignDoesNotConverge)
{
    // s -> +infinity picks K0j + K1j; comparing the negative side against it fails
    const std::vector<double> s = {8.0};
    const double r = 1.0;
    const Matrix plus = expm(r * (generator(0, 2, 3).real() + generator(1, 2, 3).real()));
    const GroupElement lhs = exp_generator(0, 1, 3, -8.0) * exp_generator(0, 2, 3, 2 * r * std::exp(-8.0)) *
                             exp_generator(0, 1, 3, 8.0);
    EXPECT_GT(max_abs_difference(lhs.matrix(), plus), 0.5);
}

TEST(Trotter, CommutingPairIsExact)
{
    const Generator a = generator(0, 1, 3);
    for (int m : {1, 7, 100})
        EXPECT_LE(trotter_check(a, a, m), 1e-13);
}

TEST(Trotter, ErrorScalesInverselyWithSteps)
{
    const Generator a = generator(0, 1, 3);
    const Generator b = generator(1, 2, 3);
    const double d10 = trotter_check(a, b, 10);
    const double d100 = trotter_check(a, b, 100);
    const double d1000 = trotter_check(a, b, 1000);
    EXPECT_NEAR(d10 / d100, 10.0, 1.0);
    EXPECT_NEAR(d100 / d1000, 10.0, 0.5);
    EXPECT_GE(trotter_check(a, b, 1) / d1000, 100.0);
    EXPECT_THROW(trotter_check(a, b, 0), std::invalid_argument);
}
