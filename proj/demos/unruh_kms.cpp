// Thermal spectrum seen by the unit-acceleration observer on AdS_2: prints the
// Fourier ratio of the two Wightman orderings next to exp(-2 pi k).
//   unruh_kms [eps]

#include <adswedge/freefield.hpp>

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv)
{
    using namespace adswedge;
    KmsOptions opt;
    if (argc > 1)
        opt.eps = std::atof(argv[1]);
    Vector x(3);
    x << 0, 1, std::sqrt(2.0);
    const AdSPoint observer(x);

    const UnruhResult u = unruh_temperature({GroupElement::identity(2), WorldlineKind::accelerated, observer});
    std::printf("observer (0, 1, sqrt 2): T = %.12f, 1/(2 pi) = %.12f\n", u.temperature, 1.0 / (2.0 * std::numbers::pi));

    const KmsReport r = kms_fourier_check(observer, ScalarModel::proper(1), opt);
    std::printf("eps = %g, modes = %d\n%8s %12s %12s %12s %12s\n", opt.eps, opt.mode_count(), "k", "|F^|", "|G^|",
                "ratio", "exp(-2pi|k|)");
    for (const KmsBin& b : r.bins)
        std::printf("%8.2f %12.4e %12.4e %12.4e %12.4e%s\n", b.k, b.abs_f, b.abs_g, b.ratio, b.target,
                    b.significant ? "" : "  (below noise floor)");
    std::printf("max error on significant bins: %.3e at k = %g\n", r.max_error, r.worst_k);
}
