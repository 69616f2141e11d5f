#include "qstab/harness/pullback_report.hpp"

#include "qstab/pullback/counterexample.hpp"

namespace qstab::harness {

using namespace qstab::pullback;

Json pullback_witnesses(const PullbackOptions& opts) {
    const GradedModule truncated = build_counterexample(opts.prime_bound, opts.degree_bound);
    const GradedModule ideal = build_counterexample_all_primes(opts.degree_bound);
    bool ok = true;

    Json out;
    out["model"] = "D = Z + X*Q[X]";
    out["prime_bound"] = opts.prime_bound;
    out["degree_bound"] = opts.degree_bound;
    out["ideal"] = ideal.to_string();
    out["truncated_ideal"] = truncated.to_string();

    if (opts.divisoriality) {
        const RatPoly w = RatPoly::monomial(Rat(1, 4), 1);
        const GradedModule d = GradedModule::ring(opts.degree_bound);
        const GradedModule inv = colon(d, ideal);
        const GradedModule v = v_closure_model(ideal);
        const bool in_i = ideal.contains(w), in_v = v.contains(w);
        const bool holds = !in_i && in_v && v.contains(ideal);
        ok = ok && holds;
        out["not_divisorial"] = {{"element", w.to_string()},
                                 {"in_ideal", in_i},
                                 {"in_v_closure", in_v},
                                 {"inverse", inv.to_string()},
                                 {"v_closure", v.to_string()},
                                 {"truncated_ideal_divisorial", v_closure_model(truncated) == truncated},
                                 {"holds", holds}};
    }

    if (opts.local_principality) {
        Json rows = Json::array();
        bool holds = true;
        for (long p = 2; p <= opts.prime_bound; ++p) {
            if (!is_prime(p)) continue;
            auto r = local_principality(ideal, p);
            auto rt = local_principality(truncated, p);
            const auto* g = std::get_if<Principal>(&r);
            const auto* gt = std::get_if<Principal>(&rt);
            const bool expected = g && g->generator.to_string() == RatPoly::monomial(Rat(1, p), 1).to_string();
            const bool agrees = gt && g && gt->generator.to_string() == g->generator.to_string();
            holds = holds && expected && agrees;
            rows.push_back({{"p", p}, {"generator", g ? g->generator.to_string() : "none"}});
        }
        ok = ok && holds;
        out["locally_principal"] = {{"primes", rows}, {"holds", holds}};
    }

    if (opts.growth) {
        const long to = opts.growth_to.value_or(2 * opts.prime_bound);
        auto probe = finite_generation_probe(opts.prime_bound, to, opts.degree_bound);
        const auto* s = std::get_if<StrictGrowth>(&probe);
        const bool holds = s != nullptr;
        ok = ok && holds;
        out["strict_growth"] = {{"from", opts.prime_bound},
                                {"to", to},
                                {"result", s ? "StrictGrowth" : "Stable"},
                                {"witness", s ? s->witness.to_string() : ""},
                                {"holds", holds}};
    }
    out["ok"] = ok;
    return out;
}

}  // namespace qstab::harness
