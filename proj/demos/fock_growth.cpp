// Fock-space level counts for the one-particle spectrum mu_n = 2 n^3 against
// the growth bound exp(17 m^(5/6)).
//   fock_growth [cutoff]

#include <adswedge/spectral.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv)
{
    using namespace adswedge;
    const int cutoff = argc > 1 ? std::atoi(argv[1]) : 60;
    const OneParticleSpectrum one = OneParticleSpectrum::from_family(SpectrumFamily::cubic_bound, cutoff);
    const FockSpectrum bose = fock_multiplicities(one, Statistics::bose, cutoff);
    const FockSpectrum fermi = fock_multiplicities(one, Statistics::fermi, cutoff);

    std::printf("%5s %14s %14s %14s %14s\n", "m", "ln N_bose", "ln N_fermi", "17 m^(5/6)", "ln partition");
    for (int m = 1; m <= cutoff; m += (m < 10 ? 1 : 5)) {
        const PartitionBound p = multiplicity_bound_from_partition(std::nullopt, m);
        std::printf("%5d %14.4f %14.4f %14.4f %14.4f\n", m, log_big(bose[m]), log_big(fermi[m]),
                    17.0 * std::pow(m, 5.0 / 6.0), p.log_bound);
    }
    const NCVerdict v = check_nc(bose, {17.0, 5.0 / 6.0});
    std::printf("bound %s on %d levels, tightest margin %.3f at m = %d\n", v.holds ? "holds" : "fails",
                v.levels_checked, v.worst_margin, v.worst_level);
}
