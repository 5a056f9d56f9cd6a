#include <adswedge/spectral.hpp>
#include <adswedge/spectral_json.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <functional>

using namespace adswedge;

namespace
{

// Number of occupation vectors of total energy m: every mode of level n is
// a separate slot, occupied any number of times (Bose) or at most once (Fermi).
std::vector<std::int64_t> enumerate_levels(const OneParticleSpectrum& s, Statistics stats, int cutoff)
{
    std::vector<std::int64_t> modes;
    for (const auto& [n, mu] : s.levels())
        for (std::int64_t i = 0; i < mu; ++i)
            modes.push_back(n);
    std::vector<std::int64_t> count(cutoff + 1, 0);
    const int max_occ = stats == Statistics::bose ? cutoff : 1;
    std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t i, std::int64_t energy) {
        if (i == modes.size()) {
            ++count[energy];
            return;
        }
        for (int k = 0; k <= max_occ && energy + k * modes[i] <= cutoff; ++k)
            walk(i + 1, energy + k * modes[i]);
    };
    walk(0, 0);
    return count;
}

} // namespace

TEST(MultiplicityBound, Examples)
{
    EXPECT_EQ(so23_multiplicity_bound(1).exact_sum, 1);
    EXPECT_EQ(so23_multiplicity_bound(1).cubic_bound, 2);
    EXPECT_EQ(so23_multiplicity_bound(3).exact_sum, 22);
    EXPECT_EQ(so23_multiplicity_bound(3).cubic_bound, 54);
    EXPECT_LE(so23_multiplicity_bound(10).exact_sum, 2000);
    for (int n = 1; n <= 500; ++n) {
        const MultiplicityBound b = so23_multiplicity_bound(n);
        EXPECT_LE(b.exact_sum, b.cubic_bound);
        // sum_{l<n} (2l+1)(l+1) = n (n+1) (4n-1) / 6
        EXPECT_EQ(b.exact_sum, static_cast<std::int64_t>(n) * (n + 1) * (4 * n - 1) / 6);
    }
    EXPECT_THROW(so23_multiplicity_bound(0), std::invalid_argument);
}

TEST(OneParticle, Validation)
{
    OneParticleSpectrum s;
    EXPECT_THROW(s.set(0, 1), std::invalid_argument);
    EXPECT_THROW(s.set(2, -1), std::invalid_argument);
    s.set(2, 3);
    s.set(2, 0);
    EXPECT_TRUE(s.levels().empty());
}

TEST(LogPartition, Examples)
{
    EXPECT_EQ(log_partition(OneParticleSpectrum{}, Statistics::bose, 1.0).value, 0.0);
    const OneParticleSpectrum single({{1, 1}});
    EXPECT_NEAR(log_partition(single, Statistics::bose, std::log(2.0)).value, std::log(2.0), 1e-15);
    EXPECT_NEAR(log_partition(single, Statistics::fermi, std::log(2.0)).value, std::log(1.5), 1e-15);
    EXPECT_THROW(log_partition(single, Statistics::bose, 0.0), std::domain_error);
    EXPECT_THROW(log_partition(single, Statistics::bose, -1.0), std::domain_error);
    const LogPartition cubic =
        log_partition(OneParticleSpectrum::from_family(SpectrumFamily::cubic_bound, 1), Statistics::bose, 1.0);
    EXPECT_LE(cubic.upper(), 37500.0);
    EXPECT_GT(cubic.value, 0.0);
}

TEST(LogPartition, FamilyTailIsRigorousAndTight)
{
    // the tabulated cutoff must not matter beyond the tail bound
    for (double gamma : {0.25, 1.0, 3.0}) {
        const LogPartition a =
            log_partition(OneParticleSpectrum::from_family(SpectrumFamily::cubic_bound, 5), Statistics::bose, gamma);
        const LogPartition b = log_partition(OneParticleSpectrum::from_family(SpectrumFamily::cubic_bound, 2000),
                                             Statistics::bose, gamma);
        EXPECT_NEAR(a.value, b.value, 1e-12 * b.value);
        EXPECT_LE(a.tail_bound, 1e-16 * a.value);
        // truncated family sum without continuation lies below, upper bound above
        OneParticleSpectrum table;
        for (int n = 1; n <= 20; ++n)
            table.set(n, 2 * n * n * n);
        const LogPartition t = log_partition(table, Statistics::bose, gamma);
        EXPECT_LE(t.value, a.value);
        EXPECT_EQ(t.tail_bound, 0.0);
    }
}

TEST(LogPartition, TruncatedFockSumBelowPartition)
{
    const int cutoff = 60;
    const OneParticleSpectrum model = OneParticleSpectrum::from_family(SpectrumFamily::cubic_bound, cutoff);
    const FockSpectrum fock = fock_multiplicities(model, Statistics::bose, cutoff);
    for (double gamma : {0.5, 1.0, 2.0, 5.0}) {
        double log_sum = 0.0;
        // log-sum-exp over levels
        double top = -INFINITY;
        std::vector<double> logs;
        for (int m = 0; m <= cutoff; ++m) {
            logs.push_back(log_big(fock[m]) - gamma * m);
            top = std::max(top, logs.back());
        }
        double acc = 0.0;
        for (double l : logs)
            acc += std::exp(l - top);
        log_sum = top + std::log(acc);
        const LogPartition z = log_partition(model, Statistics::bose, gamma);
        EXPECT_LE(log_sum, z.value * (1.0 + 1e-12)) << gamma;
        EXPECT_LE(z.value, z.upper());
    }
}

TEST(Fock, Examples)
{
    EXPECT_EQ(fock_multiplicities(OneParticleSpectrum({{1, 1}}), Statistics::bose, 4)[4], 1);
    EXPECT_EQ(fock_multiplicities(OneParticleSpectrum({{1, 1}, {2, 1}}), Statistics::bose, 4)[4], 3);
    EXPECT_EQ(fock_multiplicities(OneParticleSpectrum({{1, 2}}), Statistics::fermi, 2)[2], 1);
    const FockSpectrum vac = fock_multiplicities(OneParticleSpectrum{}, Statistics::bose, 5);
    EXPECT_EQ(vac[0], 1);
    for (int m = 1; m <= 5; ++m)
        EXPECT_EQ(vac[m], 0);
    EXPECT_THROW(fock_multiplicities(OneParticleSpectrum{}, Statistics::bose, -1), std::invalid_argument);
    EXPECT_THROW(fock_multiplicities(OneParticleSpectrum{}, Statistics::bose, 100, 50), std::out_of_range);
}

TEST(Fock, MatchesEnumerationExhaustively)
{
    // every spectrum with <= 4 distinct levels in 1..5 and multiplicities 1..2,
    // plus a few with multiplicity 3
    std::vector<OneParticleSpectrum> spectra;
    for (int mask = 1; mask < 32; ++mask) {
        if (__builtin_popcount(mask) > 4)
            continue;
        std::vector<int> lv;
        for (int b = 0; b < 5; ++b)
            if (mask & (1 << b))
                lv.push_back(b + 1);
        for (int choice = 0; choice < (1 << lv.size()); ++choice) {
            OneParticleSpectrum s;
            for (std::size_t i = 0; i < lv.size(); ++i)
                s.set(lv[i], 1 + ((choice >> i) & 1));
            spectra.push_back(s);
        }
    }
    spectra.push_back(OneParticleSpectrum({{1, 3}, {2, 3}, {4, 1}}));
    spectra.push_back(OneParticleSpectrum({{2, 3}, {3, 2}, {5, 3}, {7, 1}}));
    const int cutoff = 12;
    for (const OneParticleSpectrum& s : spectra)
        for (Statistics st : {Statistics::bose, Statistics::fermi}) {
            const FockSpectrum f = fock_multiplicities(s, st, cutoff);
            const std::vector<std::int64_t> brute = enumerate_levels(s, st, cutoff);
            for (int m = 0; m <= cutoff; ++m)
                ASSERT_EQ(f[m], brute[m]) << statistics_name(st) << " level " << m;
        }
}

TEST(Fock, FermiNeverExceedsBose)
{
    for (SpectrumFamily fam : {SpectrumFamily::cubic_bound, SpectrumFamily::angular_sum, SpectrumFamily::single_copy}) {
        const OneParticleSpectrum s = OneParticleSpectrum::from_family(fam, 40);
        const FockSpectrum b = fock_multiplicities(s, Statistics::bose, 40);
        const FockSpectrum f = fock_multiplicities(s, Statistics::fermi, 40);
        for (int m = 0; m <= 40; ++m)
            EXPECT_LE(f[m], b[m]) << family_name(fam) << " " << m;
    }
}

TEST(Fock, PartitionNumbers)
{
    // one mode per level: ordinary partitions p(m); p(100) = 190569292
    OneParticleSpectrum s;
    for (int n = 1; n <= 100; ++n)
        s.set(n, 1);
    const FockSpectrum b = fock_multiplicities(s, Statistics::bose, 100);
    EXPECT_EQ(b[10], 42);
    EXPECT_EQ(b[100], BigInt(190569292));
    // distinct parts q(50) = 3658
    EXPECT_EQ(fock_multiplicities(s, Statistics::fermi, 50)[50], 3658);
}

TEST(Chain, MonotoneOnGrid)
{
    for (double gamma : {0.25, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        const ChainReport r = verify_partition_chain(gamma);
        ASSERT_EQ(r.stages.size(), 5u);
        EXPECT_TRUE(r.monotone) << gamma;
        // the series identity s1 = s2 holds to rounding
        EXPECT_NEAR(r.stages[1], r.stages[2], 1e-12 * r.stages[2]);
    }
    EXPECT_NEAR(verify_partition_chain(0.5).stages[4], 1200000.0, 1e-6);
    const ChainReport big = verify_partition_chain(10.0);
    EXPECT_LT(big.stages[3], 1e-2);
    EXPECT_THROW(verify_partition_chain(0.0), std::domain_error);
}

TEST(NC, VacuumAndModel)
{
    const FockSpectrum vac = fock_multiplicities(OneParticleSpectrum{}, Statistics::bose, 10);
    EXPECT_TRUE(check_nc(vac, {0.01, 0.01}).holds);
    const FockSpectrum model =
        fock_multiplicities(OneParticleSpectrum::from_family(SpectrumFamily::cubic_bound, 60), Statistics::bose, 60);
    const NCVerdict v = check_nc(model, {17.0, 5.0 / 6.0});
    EXPECT_TRUE(v.holds);
    EXPECT_EQ(v.levels_checked, 61);
    EXPECT_LT(v.worst_margin, 0.0);
    const FockSpectrum fermi =
        fock_multiplicities(OneParticleSpectrum::from_family(SpectrumFamily::cubic_bound, 60), Statistics::fermi, 60);
    EXPECT_TRUE(check_nc(fermi, {17.0, 5.0 / 6.0}).holds);
    EXPECT_THROW(check_nc(vac, {1.0, 1.0}), std::invalid_argument);
}

TEST(NC, AdversarialGrowthIsCaught)
{
    std::vector<BigInt> levels;
    for (int m = 0; m <= 40; ++m)
        levels.push_back(BigInt(1) << m);
    const NCVerdict v = check_nc(FockSpectrum(Statistics::bose, levels), {1.0, 0.5});
    EXPECT_FALSE(v.holds);
    ASSERT_TRUE(v.first_violation.has_value());
    // m ln 2 > sqrt(m) first at m = 3
    EXPECT_EQ(*v.first_violation, 3);
}

TEST(PartitionBound, AutoGammaExponent)
{
    EXPECT_EQ(multiplicity_bound_from_partition(std::nullopt, 0).log_bound, 0.0);
    EXPECT_LE(multiplicity_bound_from_partition(std::nullopt, 1).log_bound, 17.0 + 1e-12);
    EXPECT_NEAR(multiplicity_bound_from_partition(1.0, 10).log_bound, 37510.0, 1e-9);
    const FockSpectrum model =
        fock_multiplicities(OneParticleSpectrum::from_family(SpectrumFamily::cubic_bound, 60), Statistics::bose, 60);
    for (int m = 1; m <= 60; ++m) {
        const PartitionBound b = multiplicity_bound_from_partition(std::nullopt, m);
        EXPECT_NEAR(b.log_bound, 17.0 * std::pow(m, 5.0 / 6.0), 1e-9 * b.log_bound);
        EXPECT_LT(log_big(model[m]), b.log_bound);
    }
    EXPECT_THROW(multiplicity_bound_from_partition(0.0, 3), std::domain_error);
}

TEST(LogBig, Accuracy)
{
    EXPECT_NEAR(log_big(BigInt(1) << 200), 200 * std::log(2.0), 1e-12);
    EXPECT_NEAR(log_big(BigInt(12345)), std::log(12345.0), 1e-15);
    EXPECT_THROW(log_big(BigInt(0)), std::domain_error);
}

TEST(SpectrumJson, RoundTrip)
{
    const OneParticleSpectrum s({{1, 2}, {3, 7}});
    const nlohmann::json j = to_json(s);
    EXPECT_EQ(j.dump(), R"({"1":2,"3":7})");
    EXPECT_EQ(one_particle_from_json(j).levels(), s.levels());
    const FockSpectrum f =
        fock_multiplicities(OneParticleSpectrum::from_family(SpectrumFamily::cubic_bound, 60), Statistics::bose, 60);
    const FockSpectrum back = fock_from_json(to_json(f), Statistics::bose);
    EXPECT_EQ(back.levels(), f.levels());
    EXPECT_THROW(one_particle_from_json(nlohmann::json::parse(R"({"x":1})")), std::invalid_argument);
    EXPECT_THROW(one_particle_from_json(nlohmann::json::parse(R"({"0":1})")), std::invalid_argument);
    EXPECT_THROW(fock_from_json(nlohmann::json::parse(R"({"0":2})"), Statistics::bose), std::invalid_argument);
}
