#ifndef ADSWEDGE_SUITES_HPP
#define ADSWEDGE_SUITES_HPP

// Check batteries run by the command-line front end, one per module. Every
// check draws its randomness from its own stream derived from (seed, id), so
// a single check replays identically when run alone with --only.

#include <adswedge/freefield.hpp>
#include <adswedge/holography.hpp>
#include <adswedge/net2d.hpp>
#include <adswedge/report.hpp>
#include <adswedge/spectral.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace adswedge
{

inline constexpr std::array<std::string_view, 8> kSuiteNames = {
    "relations", "wedges", "appendix-b", "holography", "net2d", "spectrum", "field-kms", "field-locality",
};

struct ToleranceKey
{
    std::string_view key;
    double fallback;
    std::string_view meaning;
};

// Every key accepted by --tol, with its default.
inline constexpr std::array<ToleranceKey, 16> kToleranceKeys = {{
    {"relations.max_deviation", 1e-10, "max-norm deviation of a conjugation identity"},
    {"relations.half_turn", 1e-14, "deviation of the half-turn reversal of the 0-1 boost"},
    {"relations.contraction", 1e-5, "deviation from the contraction limit at |s| = 8"},
    {"relations.trotter_ratio", 0.1, "relative error of the first-order Trotter ratio 10"},
    {"wedges.unruh", 1e-12, "temperature error at the reference observer"},
    {"wedges.rate", 1e-10, "relative proper-time rate error"},
    {"wedges.planarity", 1e-10, "distance of a geodesic orbit from its plane, relative"},
    {"appendix-b.eps_fraction", 0.9, "fraction of the admissible eps sampled"},
    {"appendix-b.mc_fraction", 0.2, "fraction of the admissible eps used by the Monte Carlo verdict"},
    {"spectrum.chain", 1e-12, "relative slack allowed between chain stages"},
    {"field-kms.tol", 1e-3, "ratio error on significant Fourier bins"},
    {"field-kms.eps", 0.0025, "regulator of the base KMS run"},
    {"field-locality.target", 1e-6, "max |Im W| required at the smallest eps"},
    {"field-locality.floor_factor", 10.0, "covering floor over opposite residual"},
    {"field-locality.hermiticity", 1e-12, "imaginary residual of the anticommutator"},
    {"net2d.disagreements", 0.0, "allowed isotony disagreements"},
}};

inline bool known_tolerance_key(const std::string& key)
{
    for (const ToleranceKey& k : kToleranceKeys)
        if (k.key == key)
            return true;
    return false;
}

inline double tol_of(const RunConfig& c, std::string_view key)
{
    for (const ToleranceKey& k : kToleranceKeys)
        if (k.key == key)
            return c.tolerance(std::string(key), k.fallback);
    throw std::logic_error("unregistered tolerance key " + std::string(key));
}

// splitmix64 of the seed and an FNV-1a hash of the check id
inline std::uint64_t check_seed(std::uint64_t seed, std::string_view id)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (char ch : id) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ULL;
    }
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (h | 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline nlohmann::json vector_json(const Vector& v)
{
    nlohmann::json j = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        j.push_back(json_number(v[i]));
    return j;
}

inline std::vector<int> dimension_grid(const RunConfig& c, int lo, int hi)
{
    if (c.n != 0)
        return {c.n};
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n)
        out.push_back(n);
    return out;
}

// ---------------------------------------------------------------------------

inline std::vector<CheckSpec> relations_suite(const RunConfig& cfg)
{
    std::vector<CheckSpec> specs;
    const double tol = tol_of(cfg, "relations.max_deviation");
    for (int n : dimension_grid(cfg, 2, 5)) {
        const std::string dim = ".n" + std::to_string(n);
        for (Relation r : kAllRelations) {
            if (relation_uses_transverse_index(r) && n < 3)
                continue;
            const std::string id = "relations." + std::string(relation_name(r)) + dim;
            specs.push_back({id, [=] {
                                 Rng rng(check_seed(cfg.seed, id));
                                 double worst = 0.0;
                                 nlohmann::json where;
                                 for (int i = 0; i < 100; ++i) {
                                     const double s = rng.uniform(-3.0, 3.0);
                                     const double t = rng.uniform(-3.0, 3.0);
                                     const int j = n >= 3 ? 2 + static_cast<int>(rng.next() % (n - 2)) : 2;
                                     const double d = check_group_relation(r, s, t, n, j);
                                     if (d >= worst) {
                                         worst = d;
                                         where = {{"s", s}, {"t", t}, {"n", n}, {"j", j}, {"deviation", d}};
                                     }
                                 }
                                 CheckResult c = bounded(id, "conjugated one-parameter group equals the exponential "
                                                             "of the rotated generator",
                                                         worst, tol, where);
                                 c.details = where;
                                 return c;
                             }});
        }
        const std::string half = "relations.half_turn" + dim;
        specs.push_back({half, [=] {
                             const GroupElement r = exp_generator(0, n, n, std::numbers::pi);
                             const Matrix k = generator(0, 1, n).real();
                             const Matrix conj = r.matrix() * k * r.inverse().matrix();
                             const double d = max_abs_difference(conj, -k);
                             return bounded(half, "half turn of time rotation reverses the 0-1 boost generator", d,
                                            tol_of(cfg, "relations.half_turn"), {{"n", n}, {"deviation", d}});
                         }});
        const std::string bracket = "relations.bracket_table" + dim;
        specs.push_back({bracket, [=] {
                             const BracketTableReport b = bracket_table_check(n);
                             CheckResult c = bounded(bracket, "integer commutator table of the real generators",
                                                     b.mismatches + b.antisymmetry_failures, 0.0,
                                                     {{"n", n},
                                                      {"mismatches", b.mismatches},
                                                      {"antisymmetry_failures", b.antisymmetry_failures}});
                             c.details = {{"pairs", b.pairs_checked}};
                             return c;
                         }});
        const std::string contraction = "relations.contraction" + dim;
        specs.push_back({contraction, [=] {
                             const std::vector<double> s = {2.0, 4.0, 6.0, 8.0};
                             const ContractionPlane plane =
                                 n >= 3 ? ContractionPlane::transverse : ContractionPlane::temporal;
                             double last = 0.0;
                             bool monotone = true;
                             nlohmann::json devs = nlohmann::json::array();
                             for (LimitSide side : {LimitSide::plus, LimitSide::minus}) {
                                 const auto d = contraction_limit_check(plane, n, 2, 1.0, s, side);
                                 for (std::size_t i = 1; i < d.size(); ++i)
                                     monotone = monotone && d[i] < d[i - 1];
                                 last = std::max(last, d.back());
                                 for (double x : d)
                                     devs.push_back(x);
                             }
                             CheckResult c = bounded(contraction,
                                                     "boost-conjugated shrinking exponential tends to the null limit",
                                                     monotone ? last : INFINITY, tol_of(cfg, "relations.contraction"),
                                                     {{"n", n}, {"deviations", devs}, {"monotone", monotone}});
                             c.details = {{"deviations", devs}};
                             return c;
                         }});
        const std::string trotter = "relations.trotter" + dim;
        specs.push_back({trotter, [=] {
                             const Generator a = generator(0, 1, n);
                             const Generator b = generator(1, n, n);
                             const double ratio = trotter_check(a, b, 10) / trotter_check(a, b, 100);
                             const double err = std::abs(ratio - 10.0) / 10.0;
                             return bounded(trotter, "Trotter product converges at first order", err,
                                            tol_of(cfg, "relations.trotter_ratio"), {{"n", n}, {"ratio", ratio}});
                         }});
    }
    return specs;
}

// ---------------------------------------------------------------------------

inline std::vector<CheckSpec> wedges_suite(const RunConfig& cfg)
{
    std::vector<CheckSpec> specs;
    specs.push_back({"wedges.unruh.reference", [=] {
                         Vector x(3);
                         x << 0, 1, std::sqrt(2.0);
                         const UnruhResult u =
                             unruh_temperature({GroupElement::identity(2), WorldlineKind::accelerated, AdSPoint(x)});
                         const double err = std::abs(u.temperature - 1.0 / (2.0 * std::numbers::pi));
                         return bounded("wedges.unruh.reference", "Unruh temperature of the unit-acceleration observer",
                                        err, tol_of(cfg, "wedges.unruh"), {{"temperature", u.temperature}});
                     }});
    specs.push_back({"wedges.unruh.rates", [=] {
                         const std::string id = "wedges.unruh.rates";
                         Rng rng(check_seed(cfg.seed, id));
                         double worst = 0.0;
                         nlohmann::json where;
                         for (int i = 0; i < 100; ++i) {
                             const int n = cfg.n != 0 ? cfg.n : 2 + i % 4;
                             const GroupElement lam = random_group_element(n, rng, 4, 1.0);
                             const double a = rng.log_uniform(0.25, 4.0);
                             Vector u(n - 2);
                             for (int k = 0; k < n - 2; ++k)
                                 u[k] = rng.uniform(-1.0, 1.0);
                             const double eta = rng.uniform(-1.0, 1.0);
                             const Worldline w{lam, WorldlineKind::accelerated,
                                               AdSPoint(lam.apply(adapted_point(WedgeVariant::base, a, eta, u)))};
                             const double err = std::abs(proper_time_rate(w) - a) / a;
                             if (err >= worst) {
                                 worst = err;
                                 where = {{"sample", i}, {"n", n}, {"a", a}, {"eta", eta}};
                             }
                         }
                         return bounded(id, "proper-time rate equals the g-norm of the orbit tangent", worst,
                                        tol_of(cfg, "wedges.rate"), where);
                     }});
    specs.push_back({"wedges.unruh.geodesic_ground_state", [=] {
                         Vector x(3);
                         x << 0, 0, 1;
                         const UnruhResult u =
                             unruh_temperature({GroupElement::identity(2), WorldlineKind::geodesic, AdSPoint(x)});
                         return predicate("wedges.unruh.geodesic_ground_state",
                                          "geodesic observers see a ground state", u.kind == ThermalKind::ground_state,
                                          {{"temperature", u.temperature}});
                     }});
    for (int n : dimension_grid(cfg, 2, 4)) {
        const std::string dim = ".n" + std::to_string(n);
        const std::string half = "wedges.conjugate.half_turn" + dim;
        specs.push_back({half, [=] {
                             const Wedge wr = Wedge::reference(n);
                             const int d = region_disagreements(
                                 map_region(exp_generator(0, n, n, std::numbers::pi), wr), conjugate_prime(wr), 10000,
                                 check_seed(cfg.seed, half));
                             return bounded(half, "half turn of time rotation maps W_R onto the conjugate prime wedge",
                                            d, 0.0, {{"n", n}, {"disagreements", d}});
                         }});
        const std::string neg = "wedges.conjugate.negation" + dim;
        specs.push_back({neg, [=] {
                             const Wedge wr = Wedge::reference(n);
                             const Wedge wc = conjugate(wr);
                             Rng rng(check_seed(cfg.seed, neg));
                             int d = 0;
                             nlohmann::json first;
                             for (int i = 0; i < 10000; ++i) {
                                 const Vector x = i % 2 == 0 ? sample_quadric_point(n, rng) : sample_wedge_point(wr, rng);
                                 if (wr.contains(-x) != wc.contains(x)) {
                                     if (d == 0)
                                         first = vector_json(x);
                                     ++d;
                                 }
                             }
                             return bounded(neg, "point reflection of W_R is the conjugate wedge", d, 0.0,
                                            {{"n", n}, {"disagreements", d}, {"point", first}});
                         }});
        const std::string cov = "wedges.covariance" + dim;
        specs.push_back({cov, [=] {
                             Rng rng(check_seed(cfg.seed, cov));
                             int d = 0;
                             nlohmann::json first;
                             for (int i = 0; i < 1000; ++i) {
                                 const GroupElement g = random_group_element(n, rng);
                                 const Wedge w(random_group_element(n, rng), kAllVariants[i % 4]);
                                 const Wedge gw = map_region(g, w);
                                 const Vector x = i % 2 == 0 ? sample_wedge_point(w, rng) : sample_quadric_point(n, rng);
                                 if (w.contains(x) != gw.contains(g.apply(x))) {
                                     if (d == 0)
                                         first = {{"sample", i}, {"point", vector_json(x)}};
                                     ++d;
                                 }
                             }
                             return bounded(cov, "wedge membership is group covariant", d, 0.0,
                                            {{"n", n}, {"disagreements", d}, {"first", first}});
                         }});
        if (n >= 2) {
            const std::string plan = "wedges.geodesic_planarity" + dim;
            specs.push_back({plan, [=] {
                                 Rng rng(check_seed(cfg.seed, plan));
                                 const GroupElement lam = random_group_element(n, rng);
                                 const double tau = rng.uniform(0.0, 2.0 * std::numbers::pi);
                                 Vector y = Vector::Zero(n + 1);
                                 y[0] = std::sin(tau);
                                 y[n] = std::cos(tau);
                                 const Worldline w{lam, WorldlineKind::geodesic, AdSPoint(lam.apply(y))};
                                 const double dev =
                                     geodesic_planarity_check(w, 100) / std::max(1.0, w.x_O.coords().norm());
                                 return bounded(plan, "geodesic orbit through the central geodesic is planar", dev,
                                                tol_of(cfg, "wedges.planarity"), {{"n", n}, {"tau", tau}});
                             }});
        }
    }
    return specs;
}

// ---------------------------------------------------------------------------

inline std::vector<CheckSpec> inclusion_suite(const RunConfig& cfg)
{
    std::vector<CheckSpec> specs;
    const double s = 0.5;
    for (int n : dimension_grid(cfg, 3, 3)) {
        for (double t : {0.0, 1.0}) {
            const std::string tag = ".n" + std::to_string(n) + (t == 0.0 ? ".t0" : ".t1");
            const std::string bound_id = "appendix-b.boundary_margin" + tag;
            specs.push_back({bound_id, [=] {
                                 const double admissible = inclusion_bound(s, t, 0.0).admissible_eps;
                                 const double eps = tol_of(cfg, "appendix-b.eps_fraction") * admissible;
                                 const InclusionCheck c =
                                     inclusion_boundary_check(s, t, eps, 10000, check_seed(cfg.seed, bound_id), n);
                                 // pass iff max margin <= delta < 0
                                 const double metric = c.delta < 0.0 ? c.max_margin - c.delta : INFINITY;
                                 CheckResult r = bounded(bound_id,
                                                         "perturbed boundary of the inner wedge stays outside W_R by "
                                                         "the certified margin",
                                                         metric, 0.0,
                                                         {{"s", s},
                                                          {"t", t},
                                                          {"n", n},
                                                          {"eps", eps},
                                                          {"max_margin", c.max_margin},
                                                          {"delta", c.delta}});
                                 r.details = {{"eps", eps},
                                              {"admissible_eps", admissible},
                                              {"max_margin", c.max_margin},
                                              {"delta", c.delta},
                                              {"samples", c.samples}};
                                 return r;
                             }});
            const std::string mc_id = "appendix-b.monte_carlo" + tag;
            specs.push_back({mc_id, [=] {
                                 const double eps =
                                     tol_of(cfg, "appendix-b.mc_fraction") * inclusion_bound(s, t, 0.0).admissible_eps;
                                 const ContainmentVerdict v =
                                     properly_contained(inner_wedge(s, n, t), Wedge::reference(n),
                                                        {.eps = eps, .trials = 100, .seed = check_seed(cfg.seed, mc_id)});
                                 nlohmann::json w = {{"s", s}, {"t", t}, {"n", n}, {"eps", eps},
                                                     {"verdict", std::string(verdict_name(v.kind))}};
                                 if (v.witness)
                                     w["witness"] = {{"coefficients", vector_json(v.witness->coefficients)},
                                                     {"point", vector_json(v.witness->point)}};
                                 CheckResult r = predicate(mc_id, "sampled proper containment of the inner wedge in W_R",
                                                           v.kind == VerdictKind::holds_at_confidence, w);
                                 r.details = {{"points_checked", v.points_checked}, {"trials", v.trials}};
                                 return r;
                             }});
        }
    }
    return specs;
}

// ---------------------------------------------------------------------------

inline std::vector<CheckSpec> holography_suite(const RunConfig& cfg)
{
    std::vector<CheckSpec> specs;
    specs.push_back({"holography.intertwining", [=] {
                         const std::string id = "holography.intertwining";
                         Rng rng(check_seed(cfg.seed, id));
                         int violations = 0;
                         nlohmann::json first;
                         for (int i = 0; i < 1000; ++i) {
                             const int n = cfg.n != 0 ? cfg.n : 2 + i % 3;
                             const GroupElement g = random_group_element(n, rng, 1 + static_cast<int>(rng.next() % 5));
                             const Wedge w(random_group_element(n, rng), kAllVariants[rng.next() % 4]);
                             const std::uint64_t ray_seed = rng.next();
                             const int v = check_alpha_intertwines(g, w, 1, ray_seed);
                             if (v > 0 && violations == 0)
                                 first = {{"sample", i}, {"n", n}, {"ray_seed", ray_seed}};
                             violations += v;
                         }
                         return bounded(id, "boundary image intertwines the group action", violations, 0.0,
                                        {{"violations", violations}, {"first", first}});
                     }});
    for (int n : dimension_grid(cfg, 2, 4)) {
        const std::string id = "holography.order_complement.n" + std::to_string(n);
        specs.push_back({id, [=] {
                             const OrderComplementReport r = check_alpha_order_and_complement(
                                 inner_wedge(0.5, n), Wedge::reference(n), 1000, check_seed(cfg.seed, id));
                             const int bad =
                                 r.inclusion_violations + r.complement_violations + (r.bulk_inclusion ? 0 : 1);
                             return bounded(id, "boundary image preserves inclusion and complements", bad, 0.0,
                                            {{"n", n},
                                             {"bulk_inclusion", r.bulk_inclusion},
                                             {"inclusion_violations", r.inclusion_violations},
                                             {"complement_violations", r.complement_violations}});
                         }});
    }
    return specs;
}

// ---------------------------------------------------------------------------

// Pairs for the isotony battery: enclosing, enclosed and independent cones.
inline std::pair<DoubleCone2D, DoubleCone2D> isotony_pair(Rng& rng, int i)
{
    const DoubleCone2D o = random_double_cone(rng);
    switch (i % 4) {
    case 0:
        return {o, random_enclosing_double_cone(o, rng)};
    case 1:
        return {random_enclosing_double_cone(o, rng), o};
    default:
        return {o, random_double_cone(rng, 0.3, 2.0)};
    }
}

inline std::vector<CheckSpec> net2d_suite(const RunConfig& cfg)
{
    std::vector<CheckSpec> specs;
    specs.push_back({"net2d.isotony", [=] {
                         const std::string id = "net2d.isotony";
                         Rng rng(check_seed(cfg.seed, id));
                         int disagreements = 0, nested = 0;
                         nlohmann::json first;
                         for (int i = 0; i < 200; ++i) {
                             const auto [o1, o2] = isotony_pair(rng, i);
                             const std::uint64_t s = rng.next();
                             const IsotonyReport r = isotony_equivalence_check(o1, o2, 4000, s);
                             nested += r.criterion ? 1 : 0;
                             if (!r.agree) {
                                 if (disagreements == 0)
                                     first = {{"pair", i}, {"criterion", r.criterion}, {"sample_seed", s}};
                                 ++disagreements;
                             }
                         }
                         CheckResult c = bounded(id, "edge criterion for double-cone inclusion agrees with sampling",
                                                 disagreements, tol_of(cfg, "net2d.disagreements"),
                                                 {{"disagreements", disagreements}, {"first", first}});
                         c.details = {{"pairs", 200}, {"nested", nested}};
                         return c;
                     }});
    specs.push_back({"net2d.locality_witness", [=] {
                         const std::string id = "net2d.locality_witness";
                         Rng rng(check_seed(cfg.seed, id));
                         int separated = 0, dirty = 0;
                         nlohmann::json first;
                         for (int i = 0; i < 100; ++i) {
                             const DoubleCone2D o1 = random_double_cone(rng, 0.05, 0.6);
                             const DoubleCone2D o2 = random_double_cone(rng, 0.05, 0.6);
                             const LocalityVerdict v = locality_predicate(o1, o2, 32, rng.next());
                             if (v.kind != VerdictKind::holds_at_confidence)
                                 continue;
                             ++separated;
                             const Wedge wp = opposite(*v.witness);
                             for (int k = 0; k < 500; ++k) {
                                 const Vector x = o1.sample_point(rng);
                                 const Vector y = o2.sample_point(rng);
                                 if (!v.witness->contains(x) || !wp.contains(y)) {
                                     if (dirty == 0)
                                         first = {{"pair", i}, {"x", vector_json(x)}, {"y", vector_json(y)}};
                                     ++dirty;
                                     break;
                                 }
                             }
                         }
                         CheckResult c = bounded(id, "separating wedge of a spacelike pair of double cones is clean",
                                                 separated > 0 ? dirty : INFINITY, 0.0,
                                                 {{"separated", separated}, {"dirty", dirty}, {"first", first}});
                         c.details = {{"pairs", 100}, {"separated", separated}};
                         return c;
                     }});
    specs.push_back({"net2d.covariance", [=] {
                         const std::string id = "net2d.covariance";
                         Rng rng(check_seed(cfg.seed, id));
                         int bad = 0;
                         for (int i = 0; i < 10; ++i) {
                             const DoubleCone2D o = random_double_cone(rng);
                             const GroupElement g = random_group_element(2, rng, 3, 0.8);
                             bad += covariance_check(g, o, 200, rng.next()).disagreements;
                         }
                         return bounded(id, "double cone of transformed edges is the transformed double cone", bad,
                                        0.0, {{"disagreements", bad}});
                     }});
    return specs;
}

// ---------------------------------------------------------------------------

inline std::vector<CheckSpec> spectrum_suite(const RunConfig& cfg)
{
    std::vector<CheckSpec> specs;
    specs.push_back({"spectrum.fock_examples", [=] {
                         const bool a = fock_multiplicities({{1, 1}}, Statistics::bose, 4)[4] == 1;
                         const bool b = fock_multiplicities({{1, 1}, {2, 1}}, Statistics::bose, 4)[4] == 3;
                         const bool c = fock_multiplicities({{1, 2}}, Statistics::fermi, 2)[2] == 1;
                         return predicate("spectrum.fock_examples", "exact Fock level counts of small spectra",
                                          a && b && c, {{"single_mode", a}, {"two_levels", b}, {"fermi_pair", c}});
                     }});
    specs.push_back({"spectrum.one_particle_bound", [=] {
                         int bad = 0;
                         for (int n = 1; n <= 200; ++n) {
                             const MultiplicityBound b = so23_multiplicity_bound(n);
                             bad += b.exact_sum <= b.cubic_bound ? 0 : 1;
                         }
                         const MultiplicityBound three = so23_multiplicity_bound(3);
                         bad += (three.exact_sum == 22 && three.cubic_bound == 54) ? 0 : 1;
                         return bounded("spectrum.one_particle_bound", "one-particle multiplicity below 2 n^3", bad,
                                        0.0, {{"violations", bad}});
                     }});
    for (double gamma : {0.25, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%05.2f", gamma);
        const std::string id = std::string("spectrum.chain.gamma") + buf;
        specs.push_back({id, [=] {
                             const ChainReport r = verify_partition_chain(gamma);
                             double slack = 0.0;
                             for (std::size_t i = 0; i + 1 < r.stages.size(); ++i)
                                 slack = std::max(slack, (r.stages[i] - r.stages[i + 1]) / r.stages[i + 1]);
                             nlohmann::json st = nlohmann::json::array();
                             for (double x : r.stages)
                                 st.push_back(json_number(x));
                             CheckResult c = bounded(id, "partition-function bound chain is monotone", slack,
                                                     tol_of(cfg, "spectrum.chain"), {{"gamma", gamma}, {"stages", st}});
                             c.details = {{"stages", st}, {"tail_bound", r.tail_bound}};
                             return c;
                         }});
    }
    const OneParticleSpectrum model = OneParticleSpectrum::from_family(SpectrumFamily::cubic_bound, 60);
    for (Statistics st : {Statistics::bose, Statistics::fermi}) {
        const std::string id = std::string("spectrum.nc.") + statistics_name(st);
        specs.push_back({id, [=] {
                             const NCVerdict v = check_nc(fock_multiplicities(model, st, 60), {17.0, 5.0 / 6.0});
                             nlohmann::json w = {{"c0", 17.0}, {"k0", 5.0 / 6.0}, {"cutoff", 60}};
                             if (v.first_violation)
                                 w["first_violation"] = *v.first_violation;
                             CheckResult c = predicate(id, "multiplicity growth bound exp(17 m^(5/6)) up to level 60",
                                                       v.holds, w);
                             c.metric = v.worst_margin;
                             c.details = {{"worst_margin", v.worst_margin}, {"worst_level", v.worst_level}};
                             return c;
                         }});
    }
    specs.push_back({"spectrum.auto_gamma_dominates", [=] {
                         const FockSpectrum f = fock_multiplicities(model, Statistics::bose, 60);
                         double worst = -INFINITY;
                         int level = 0;
                         for (int m = 1; m <= 60; ++m) {
                             const double d = log_big(f[m]) - multiplicity_bound_from_partition(std::nullopt, m).log_bound;
                             if (d > worst) {
                                 worst = d;
                                 level = m;
                             }
                         }
                         CheckResult c = predicate("spectrum.auto_gamma_dominates",
                                                   "partition bound at gamma = 5 m^(-1/6) dominates exact counts",
                                                   worst < 0.0, {{"level", level}, {"log_gap", worst}});
                         c.metric = worst;
                         return c;
                     }});
    specs.push_back({"spectrum.fermi_below_bose", [=] {
                         const FockSpectrum b = fock_multiplicities(model, Statistics::bose, 60);
                         const FockSpectrum f = fock_multiplicities(model, Statistics::fermi, 60);
                         int bad = 0;
                         for (int m = 0; m <= 60; ++m)
                             bad += f[m] <= b[m] ? 0 : 1;
                         return bounded("spectrum.fermi_below_bose", "Fermi level counts never exceed Bose counts", bad,
                                        0.0, {{"violations", bad}});
                     }});
    specs.push_back({"spectrum.adversarial", [=] {
                         std::vector<BigInt> levels;
                         for (int m = 0; m <= 40; ++m)
                             levels.push_back(BigInt(1) << m);
                         const NCVerdict v = check_nc(FockSpectrum(Statistics::bose, levels), {1.0, 0.5});
                         return predicate("spectrum.adversarial", "exponential multiplicities violate the growth bound",
                                          !v.holds && v.first_violation == 3,
                                          {{"first_violation", v.first_violation ? *v.first_violation : -1}});
                     }});
    return specs;
}

// ---------------------------------------------------------------------------

inline nlohmann::json kms_bins_json(const KmsReport& r)
{
    nlohmann::json out = nlohmann::json::array();
    for (const KmsBin& b : r.bins)
        out.push_back({json_number(b.k), json_number(b.abs_f), json_number(b.abs_g), json_number(b.ratio), b.pass});
    return out;
}

inline AdSPoint kms_observer()
{
    Vector x(3);
    x << 0, 1, std::sqrt(2.0);
    return AdSPoint(x);
}

inline std::vector<CheckSpec> field_kms_suite(const RunConfig& cfg)
{
    std::vector<CheckSpec> specs;
    specs.push_back({"field-kms.convergence", [=] {
                         KmsOptions opt;
                         opt.eps = tol_of(cfg, "field-kms.eps");
                         opt.tol = tol_of(cfg, "field-kms.tol");
                         const KmsConvergence c = kms_convergence(kms_observer(), ScalarModel::proper(1), opt);
                         const double worst =
                             std::max({c.base.max_error, c.doubled_modes.max_error, c.halved_eps.max_error});
                         nlohmann::json w = {{"eps", opt.eps},
                                             {"modes", opt.mode_count()},
                                             {"base_error", c.base.max_error},
                                             {"doubled_modes_error", c.doubled_modes.max_error},
                                             {"halved_eps_error", c.halved_eps.max_error},
                                             {"worst_k", c.base.worst_k}};
                         CheckResult r = bounded("field-kms.convergence",
                                                 "Fourier ratio of the two orderings equals exp(-2 pi k) on the boost "
                                                 "orbit, stable under N doubling and eps halving",
                                                 c.pass ? worst : INFINITY, opt.tol, w);
                         r.details = {{"bins", kms_bins_json(c.base)},
                                      {"bins_halved_eps", kms_bins_json(c.halved_eps)},
                                      {"truncation_negligible", c.truncation_negligible},
                                      {"eps_improves", c.eps_improves},
                                      {"significant_bins", c.base.significant_bins}};
                         return r;
                     }});
    return specs;
}

inline nlohmann::json locality_levels_json(const WeakLocalityReport& r)
{
    nlohmann::json out = nlohmann::json::array();
    for (const WeakLocalityLevel& l : r.levels)
        out.push_back({{"eps", l.eps},
                       {"modes", l.modes},
                       {"max_abs_im", json_number(l.max_abs_im)},
                       {"median_abs_im", json_number(l.median_abs_im)},
                       {"min_abs_im", json_number(l.min_abs_im)},
                       {"worst_pair", l.worst_pair}});
    return out;
}

// Scans shared by the locality checks and the plot-ready CSV export.
struct LocalityScans
{
    WeakLocalityReport opposite_proper;
    WeakLocalityReport conjugate_proper;
    WeakLocalityReport opposite_covering;
    WeakLocalityReport conjugate_covering;
};

inline LocalityScans run_locality_scans(const RunConfig& cfg)
{
    WeakLocalityOptions opt;
    opt.seed = check_seed(cfg.seed, "field-locality");
    return {weak_locality_scan(PairFamily::opposite, ScalarModel::proper(1), opt),
            weak_locality_scan(PairFamily::conjugate, ScalarModel::proper(1), opt),
            weak_locality_scan(PairFamily::opposite, ScalarModel::covering(1.5), opt),
            weak_locality_scan(PairFamily::conjugate, ScalarModel::covering(1.5), opt)};
}

inline std::string locality_csv(const LocalityScans& s)
{
    std::ostringstream os;
    os << "family,space,delta,eps,pair_id,re_w,im_w\n";
    for (const WeakLocalityReport* r :
         {&s.opposite_proper, &s.conjugate_proper, &s.opposite_covering, &s.conjugate_covering})
        for (const PairValue& v : r->values)
            os << pair_family_name(r->family) << ',' << space_name(r->model.space) << ','
               << csv_number(r->model.delta) << ',' << csv_number(v.eps) << ',' << v.pair << ','
               << csv_number(v.w.real()) << ',' << csv_number(v.w.imag()) << '\n';
    return os.str();
}

inline std::vector<CheckSpec> field_locality_suite(const RunConfig& cfg)
{
    std::vector<CheckSpec> specs;
    auto scans = std::make_shared<std::optional<LocalityScans>>();
    auto get = [scans, cfg]() -> const LocalityScans& {
        if (!*scans)
            *scans = run_locality_scans(cfg);
        return **scans;
    };
    auto decay_check = [=](std::string id, std::string anchor, auto pick) {
        return CheckSpec{id, [=] {
                             const WeakLocalityReport& r = pick(get());
                             const WeakLocalityLevel& last = r.levels.back();
                             const PointPair& p = r.pairs[last.worst_pair];
                             CheckResult c = bounded(id, anchor, r.decreasing ? last.max_abs_im : INFINITY,
                                                     tol_of(cfg, "field-locality.target"),
                                                     {{"eps", last.eps},
                                                      {"pair", last.worst_pair},
                                                      {"x", {p.x.tau, p.x.rho}},
                                                      {"y", {p.y.tau, p.y.rho}},
                                                      {"max_abs_im", last.max_abs_im},
                                                      {"fitted_order", r.fitted_order}});
                             c.details = {{"levels", locality_levels_json(r)}, {"fitted_order", r.fitted_order}};
                             return c;
                         }};
    };
    specs.push_back(decay_check("field-locality.opposite.proper",
                                "two orderings agree for opposite-wedge pairs as eps -> 0",
                                [](const LocalityScans& s) -> const WeakLocalityReport& { return s.opposite_proper; }));
    specs.push_back(decay_check("field-locality.conjugate.proper",
                                "two orderings agree for conjugate-wedge pairs on AdS proper as eps -> 0",
                                [](const LocalityScans& s) -> const WeakLocalityReport& { return s.conjugate_proper; }));
    specs.push_back({"field-locality.conjugate.covering_floor", [=] {
                         const LocalityScans& s = get();
                         const WeakLocalityLevel& conj = s.conjugate_covering.levels.back();
                         const WeakLocalityLevel& opp = s.opposite_covering.levels.back();
                         const double factor = tol_of(cfg, "field-locality.floor_factor");
                         // pass iff floor > factor * residual, i.e. factor * residual / floor < 1
                         const double metric = factor * opp.max_abs_im / conj.min_abs_im;
                         CheckResult c = bounded("field-locality.conjugate.covering_floor",
                                                 "conjugate-wedge pairs on the covering space keep a commutator floor",
                                                 metric, 1.0,
                                                 {{"eps", conj.eps},
                                                  {"floor", conj.min_abs_im},
                                                  {"opposite_residual", opp.max_abs_im}});
                         c.details = {{"conjugate_levels", locality_levels_json(s.conjugate_covering)},
                                      {"opposite_levels", locality_levels_json(s.opposite_covering)}};
                         return c;
                     }});
    specs.push_back({"field-locality.fermi_anticommutator", [=] {
                         const std::string id = "field-locality.fermi_anticommutator";
                         const double eps = 1e-3;
                         const TwoPointEvaluator w(ScalarModel::proper(1), {eps, modes_for(eps, 36.0)});
                         double smallest = INFINITY, worst_im = 0.0;
                         for (const PointPair& p :
                              sample_pairs(PairFamily::opposite, Space::proper, 50, check_seed(cfg.seed, id))) {
                             const AnticommutatorValue a = fermi_anticommutator(p.x, p.y, w);
                             smallest = std::min(smallest, std::abs(a.value));
                             worst_im = std::max(worst_im, a.imaginary_residual);
                         }
                         const bool ok = smallest > 0.0 && worst_im <= tol_of(cfg, "field-locality.hermiticity");
                         CheckResult c = predicate(id, "anticommutator function is real and nonzero on complementary "
                                                       "wedges",
                                                   ok, {{"min_abs_value", smallest}, {"max_imaginary", worst_im}});
                         c.details = {{"min_abs_value", smallest}, {"max_imaginary", worst_im}};
                         return c;
                     }});
    specs.push_back({"field-locality.positive_energy", [=] {
                         const bool a = positive_energy_check(ScalarModel::proper(1)).accepted;
                         const bool b = !positive_energy_check(ScalarModel{1.5, Space::proper}).accepted;
                         const bool c = positive_energy_check(ScalarModel::covering(1.5)).accepted;
                         return predicate("field-locality.positive_energy",
                                          "mode frequencies are positive, and integral on AdS proper", a && b && c,
                                          {{"proper_1", a}, {"proper_1.5_rejected", b}, {"covering_1.5", c}});
                     }});
    return specs;
}

// ---------------------------------------------------------------------------

inline std::vector<CheckSpec> suite_checks(const std::string& suite, const RunConfig& cfg)
{
    if (suite == "relations")
        return relations_suite(cfg);
    if (suite == "wedges")
        return wedges_suite(cfg);
    if (suite == "appendix-b")
        return inclusion_suite(cfg);
    if (suite == "holography")
        return holography_suite(cfg);
    if (suite == "net2d")
        return net2d_suite(cfg);
    if (suite == "spectrum")
        return spectrum_suite(cfg);
    if (suite == "field-kms")
        return field_kms_suite(cfg);
    if (suite == "field-locality")
        return field_locality_suite(cfg);
    if (suite == "all") {
        std::vector<CheckSpec> all;
        for (std::string_view s : kSuiteNames) {
            auto part = suite_checks(std::string(s), cfg);
            all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
        return all;
    }
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

inline Report run_suite(const std::string& suite, const RunConfig& cfg)
{
    return run_checks(suite, cfg, suite_checks(suite, cfg));
}

} // namespace adswedge

#endif // ADSWEDGE_SUITES_HPP
