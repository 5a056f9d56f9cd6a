#include <adswedge/holography.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace adswedge;

namespace
{

// Bulk point x = R xi + c e on the quadric, with e = (0, ..., 0, 1) for xi_n != 0
// and e = (1, 0, ..., 0) otherwise; c solves 2 R c (xi.e) + c^2 (e.e) = 1.
Vector bulk_point_near_ray(const Vector& xi, double R)
{
    const auto n = xi.size() - 1;
    Vector e = Vector::Zero(xi.size());
    const Eigen::Index k = std::abs(xi[n]) > std::abs(xi[0]) ? n : 0;
    e[k] = 1.0;
    const double b = xi[k];
    // c^2 + 2 R b c - 1 = 0, root that stays bounded as R grows
    const double c = 1.0 / (R * b + std::copysign(std::sqrt(R * R * b * b + 1.0), b));
    return R * xi + c * e;
}

} // namespace

TEST(BoundaryRay, CanonicalScaleAndNullity)
{
    Vector xi(4);
    xi << 0, 1, 0, 1;
    const BoundaryRay r(xi * 3.0);
    EXPECT_NEAR(r.xi().norm(), 1.0, 1e-15);
    EXPECT_EQ(r, BoundaryRay(xi));
    EXPECT_FALSE(r == BoundaryRay(-xi));
    Vector timelike(4);
    timelike << 0, 0, 0, 1;
    EXPECT_THROW(BoundaryRay{timelike}, std::invalid_argument);
    EXPECT_THROW(BoundaryRay{Vector::Zero(4)}, std::invalid_argument);
}

TEST(BoundaryRay, ProjectionOnlyAbsorbsRounding)
{
    Vector xi(4);
    xi << 0.3, 1.0, 0.5, 1.0;
    xi[3] = std::sqrt(1.25 - 0.09);
    Vector drift = xi;
    drift[1] *= 1.0 + 1e-11;
    EXPECT_NEAR(Metric(3).square(project_to_null_cone(drift)), 0.0, 1e-15);
    drift[1] *= 1.0 + 1e-3;
    EXPECT_THROW(project_to_null_cone(drift), std::invalid_argument);
}

TEST(Alpha, ReferenceRays)
{
    for (int n = 2; n <= 4; ++n) {
        Vector xi = Vector::Zero(n + 1);
        xi[1] = 1.0;
        xi[n] = 1.0;
        const BoundaryRay right(xi / std::sqrt(2.0));
        xi[1] = -1.0;
        const BoundaryRay left(xi / std::sqrt(2.0));
        const Wedge wr = Wedge::reference(n);
        EXPECT_TRUE(alpha(wr).contains(right));
        EXPECT_FALSE(alpha(wr).contains(left));
        EXPECT_TRUE(alpha(opposite(wr)).contains(left));
    }
}

TEST(Alpha, ScaleInvariance)
{
    Rng rng(1);
    const Wedge w(random_group_element(3, rng));
    for (int i = 0; i < 1000; ++i) {
        const BoundaryRay r = sample_boundary_ray(3, rng);
        EXPECT_EQ(w.contains(r.xi()), w.contains(2.0 * r.xi()));
        EXPECT_EQ(BoundaryRay(2.0 * r.xi()), r);
    }
}

TEST(Alpha, SampledRaysAreNullAndInRegion)
{
    Rng rng(2);
    for (WedgeVariant v : kAllVariants) {
        const Wedge w(random_group_element(4, rng, 3, 1.0), v);
        for (int i = 0; i < 500; ++i) {
            const BoundaryRay r = sample_region_ray(w, rng);
            EXPECT_TRUE(alpha(w).contains(r));
        }
    }
}

TEST(Alpha, AgreesWithBulkLimit)
{
    // membership of the ray equals membership of bulk points R xi + O(1/R) for large R
    Rng rng(3);
    int compared = 0;
    for (int i = 0; i < 2000; ++i) {
        const int n = 2 + i % 3;
        const Wedge w(random_group_element(n, rng, 3, 1.0), kAllVariants[i % 4]);
        const BoundaryRay r = (i % 2 == 0) ? sample_boundary_ray(n, rng) : sample_region_ray(w, rng);
        // skip rays within rounding reach of the boundary
        if (std::abs(w.margin(r.xi())) < 1e-6 || std::abs(w.pull_back(r.xi())[n]) < 1e-6)
            continue;
        const Vector x = bulk_point_near_ray(r.xi(), 1e8);
        ASSERT_LE(quadric_defect(x), 1e-12);
        EXPECT_EQ(alpha(w).contains(r), w.contains(x));
        ++compared;
    }
    EXPECT_GT(compared, 1500);
}

TEST(Alpha, IntertwinesGroupAction)
{
    Rng rng(4);
    int total = 0;
    for (int i = 0; i < 1000; ++i) {
        const int n = 2 + i % 3;
        const GroupElement g = random_group_element(n, rng, 1 + static_cast<int>(rng.next() % 5));
        const Wedge w(random_group_element(n, rng), kAllVariants[rng.next() % 4]);
        total += check_alpha_intertwines(g, w, 3, rng.next());
    }
    EXPECT_EQ(total, 0);
    EXPECT_EQ(check_alpha_intertwines(GroupElement::identity(3), Wedge::reference(3), 100, 1), 0);
}

TEST(Alpha, HalfTurnMapsToConjugatePrimeImage)
{
    const int n = 3;
    const Wedge wr = Wedge::reference(n);
    const Wedge image = map_region(exp_generator(0, n, n, std::numbers::pi), wr);
    Rng rng(5);
    for (int i = 0; i < 2000; ++i) {
        const BoundaryRay r = sample_test_ray(n, rng, &wr, &image, i);
        EXPECT_EQ(alpha(image).contains(r), alpha(conjugate_prime(wr)).contains(r));
    }
}

TEST(Alpha, PreservesInclusionAndComplement)
{
    for (int n = 2; n <= 4; ++n) {
        const Wedge w0 = inner_wedge(0.5, n);
        const Wedge wr = Wedge::reference(n);
        const OrderComplementReport r = check_alpha_order_and_complement(w0, wr, 10000, 6);
        EXPECT_TRUE(r.bulk_inclusion);
        EXPECT_EQ(r.inclusion_violations, 0);
        EXPECT_EQ(r.complement_violations, 0);
        const OrderComplementReport same = check_alpha_order_and_complement(wr, wr, 1000, 7);
        EXPECT_TRUE(same.bulk_inclusion);
        EXPECT_EQ(same.inclusion_violations, 0);
        const OrderComplementReport opp = check_alpha_order_and_complement(wr, opposite(wr), 1000, 8);
        EXPECT_FALSE(opp.bulk_inclusion);
        EXPECT_EQ(opp.complement_violations, 0);
    }
}

TEST(Alpha, DistinctRegionsHaveDistinctImages)
{
    Rng rng(9);
    for (int n = 3; n <= 4; ++n) {
        const GroupElement lam = random_group_element(n, rng);
        for (WedgeVariant a : kAllVariants)
            for (WedgeVariant b : kAllVariants) {
                if (a == b)
                    continue;
                const Wedge wa(lam, a);
                const Wedge wb(lam, b);
                bool distinguished = false;
                for (int i = 0; i < 200 && !distinguished; ++i) {
                    const BoundaryRay r = sample_region_ray(wa, rng);
                    distinguished = alpha(wa).contains(r) != alpha(wb).contains(r);
                }
                EXPECT_TRUE(distinguished);
            }
    }
}
