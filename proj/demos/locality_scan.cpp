// Commutator residual max |Im W_eps| against eps for opposite and conjugate
// wedge pairs, on AdS proper (weight 1) and on the covering space (weight 3/2).
//   locality_scan [samples]

#include <adswedge/freefield.hpp>

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv)
{
    using namespace adswedge;
    WeakLocalityOptions opt;
    if (argc > 1)
        opt.samples = std::atoi(argv[1]);

    std::printf("%-10s %-9s %6s %9s %8s %12s %12s %12s\n", "pairs", "space", "delta", "eps", "modes", "max|Im W|",
                "median", "min");
    for (const ScalarModel& model : {ScalarModel::proper(1), ScalarModel::covering(1.5)}) {
        for (PairFamily family : {PairFamily::opposite, PairFamily::conjugate}) {
            const WeakLocalityReport r = weak_locality_scan(family, model, opt);
            for (const WeakLocalityLevel& l : r.levels)
                std::printf("%-10s %-9s %6.2f %9.0e %8d %12.4e %12.4e %12.4e\n", pair_family_name(family),
                            space_name(model.space), model.delta, l.eps, l.modes, l.max_abs_im,
                            l.median_abs_im, l.min_abs_im);
            std::printf("  fitted order in eps: %.3f\n", r.fitted_order);
        }
    }
}
