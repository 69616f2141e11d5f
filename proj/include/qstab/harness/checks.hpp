#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qstab/harness/ideal_system.hpp"
#include "qstab/harness/report.hpp"

namespace qstab::harness {

class UnknownCheck : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Names accepted by run_check, in suite order.
const std::vector<std::string>& check_names();

namespace detail {

template <class Ideal>
std::vector<Ideal> ideals_for(const IdealSystem<Ideal>& sys, Rng& rng, long n) {
    if (auto all = sys.enumerate()) return *all;
    std::vector<Ideal> out;
    out.reserve(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) out.push_back(sys.sample(rng));
    return out;
}

template <class Ideal>
bool criterion_holds(const IdealSystem<Ideal>& sys, const Ideal& i, const Ideal& a, const Ideal& b) {
    return sys.mul(sys.intersect(a, b), i) == sys.intersect(sys.mul(a, i), sys.mul(b, i));
}

/// Flatness of i over base, decided by the certificate search and by
/// invertibility. A disagreement, or a certificate pair that does not
/// violate the criterion on replay, is recorded as a failure; an
/// inconclusive certificate is counted and yields nullopt.
template <class Ideal>
std::optional<bool> decide_flat(const IdealSystem<Ideal>& sys, const Ideal& i, const Ideal& base,
                                TheoremReport& report) {
    using Kind = typename FlatnessOutcome<Ideal>::Kind;
    const auto cert = sys.flatness_certificate(i, base);
    if (cert.kind == Kind::inconclusive) {
        ++report.inconclusive;
        return std::nullopt;
    }
    const bool invertible = sys.is_invertible_over(i, base);
    const bool flat = cert.kind == Kind::flat;
    if (flat != invertible) {
        report.fail({{"reason", "flatness certificate disagrees with invertibility"},
                     {"ideal", sys.describe(i)},
                     {"base", sys.describe(base)},
                     {"certificate_flat", flat},
                     {"invertible", invertible}});
    }
    if (!flat && cert.witness && criterion_holds(sys, i, cert.witness->first, cert.witness->second)) {
        report.fail({{"reason", "certificate pair satisfies the intersection criterion on replay"},
                     {"ideal", sys.describe(i)},
                     {"a", sys.describe(cert.witness->first)},
                     {"b", sys.describe(cert.witness->second)}});
    }
    return invertible;
}

inline void finish(TheoremReport& r, bool hypothesis_met, std::chrono::steady_clock::time_point start) {
    r.vacuous = !hypothesis_met;
    if (r.failures > 0)
        r.status = "fail";
    else if (r.inconclusive > 0)
        r.status = "inconclusive";
    else if (r.vacuous)
        r.status = "vacuous";
    else
        r.status = "pass";
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

template <class Ideal>
TheoremReport start(const IdealSystem<Ideal>& sys, const std::string& id, const CheckOptions& opts) {
    TheoremReport r;
    r.claim_id = id;
    r.backend = sys.name();
    r.seed = opts.seed;
    return r;
}

}  // namespace detail

/// Invertible I: (A ∩ B)·I = A·I ∩ B·I for drawn A, B. Non-invertible I:
/// the certificate's violating pair must replay.
template <class Ideal>
TheoremReport check_flat_criterion(const IdealSystem<Ideal>& sys, const CheckOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = detail::start(sys, "flat_criterion", opts);
    Rng rng = check_rng(r.claim_id, opts.seed);
    std::vector<Ideal> ideals;
    if (opts.invertible_only)
        for (long k = 0; k < opts.samples; ++k) ideals.push_back(sys.sample_invertible(rng));
    else
        ideals = detail::ideals_for(sys, rng, opts.samples);
    long invertible = 0, violations = 0, pairs = 0;
    for (const auto& i : ideals) {
        ++r.samples;
        auto flat = detail::decide_flat(sys, i, sys.unit(), r);
        if (!flat) continue;
        if (!*flat) {
            ++violations;
            continue;
        }
        ++invertible;
        for (long k = 0; k < opts.pairs_per_ideal; ++k) {
            Ideal a = sys.sample(rng), b = sys.sample(rng);
            ++pairs;
            if (!detail::criterion_holds(sys, i, a, b))
                r.fail({{"reason", "intersection criterion fails for an invertible ideal"},
                        {"ideal", sys.describe(i)},
                        {"a", sys.describe(a)},
                        {"b", sys.describe(b)}});
        }
    }
    r.details = {{"invertible_ideals", invertible}, {"pairs_checked", pairs}, {"violations_found", violations}};
    detail::finish(r, invertible > 0, t0);
    return r;
}

template <class Ideal>
TheoremReport check_flat_iff_invertible(const IdealSystem<Ideal>& sys, const CheckOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = detail::start(sys, "flat_iff_invertible", opts);
    Rng rng = check_rng(r.claim_id, opts.seed);
    long flat = 0, not_flat = 0;
    for (const auto& i : detail::ideals_for(sys, rng, opts.samples)) {
        ++r.samples;
        auto f = detail::decide_flat(sys, i, sys.unit(), r);
        if (f) ++(*f ? flat : not_flat);
    }
    r.details = {{"flat", flat}, {"not_flat", not_flat}};
    detail::finish(r, r.samples > 0, t0);
    return r;
}

/// Flat I and drawn J: (I : J) = I·J^{-1}.
template <class Ideal>
TheoremReport check_colon_identity(const IdealSystem<Ideal>& sys, const CheckOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = detail::start(sys, "colon_identity", opts);
    Rng rng = check_rng(r.claim_id, opts.seed);
    long applied = 0;
    for (const auto& i : detail::ideals_for(sys, rng, opts.samples)) {
        ++r.samples;
        auto f = detail::decide_flat(sys, i, sys.unit(), r);
        if (!f || !*f) continue;
        for (long k = 0; k < opts.pairs_per_ideal; ++k) {
            Ideal j = sys.sample(rng);
            ++applied;
            if (!(sys.colon(i, j) == sys.mul(i, sys.inverse(j))))
                r.fail({{"reason", "(I : J) differs from I*J^-1"}, {"ideal", sys.describe(i)}, {"j", sys.describe(j)}});
        }
    }
    r.details = {{"pairs_checked", applied}};
    detail::finish(r, applied > 0, t0);
    return r;
}

/// Flat (finitely generated) I is a t-ideal, and t = v here.
template <class Ideal>
TheoremReport check_flat_implies_t(const IdealSystem<Ideal>& sys, const CheckOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = detail::start(sys, "flat_implies_t", opts);
    Rng rng = check_rng(r.claim_id, opts.seed);
    long flat = 0;
    for (const auto& i : detail::ideals_for(sys, rng, opts.samples)) {
        ++r.samples;
        auto f = detail::decide_flat(sys, i, sys.unit(), r);
        if (!f || !*f) continue;
        ++flat;
        if (!(sys.v_closure(i) == i))
            r.fail({{"reason", "flat ideal is not v-closed"}, {"ideal", sys.describe(i)}});
    }
    r.details = {{"flat", flat}};
    detail::finish(r, flat > 0, t0);
    return r;
}

/// strongly stable ⇒ stable ⇒ quasi-stable ⇒ t-ideal of (I : I); flat ⇒
/// quasi-stable; quasi-stable agrees with the certificate over (I : I).
template <class Ideal>
TheoremReport check_stability_chain(const IdealSystem<Ideal>& sys, const CheckOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = detail::start(sys, "stability_chain", opts);
    Rng rng = check_rng(r.claim_id, opts.seed);
    long stable = 0, quasi = 0, invertible = 0, strongly_unknown = 0;
    for (const auto& i : detail::ideals_for(sys, rng, opts.samples)) {
        ++r.samples;
        const Verdict v = sys.classify(i);
        const Ideal t = sys.multiplier_ring(i);
        auto bad = [&](const char* why) {
            r.fail({{"reason", why}, {"ideal", sys.describe(i)}, {"multiplier_ring", sys.describe(t)}});
        };
        stable += v.stable;
        quasi += v.quasi_stable;
        invertible += v.invertible;
        strongly_unknown += v.strongly_stable == Tri::unknown;
        if (v.strongly_stable == Tri::yes && !v.stable) bad("strongly stable but not stable");
        if (v.stable && !v.quasi_stable) bad("stable but not quasi-stable");
        if (v.quasi_stable && !(sys.v_closure_over(i, t) == i)) bad("quasi-stable but not a t-ideal of (I:I)");
        auto flat = detail::decide_flat(sys, i, sys.unit(), r);
        if (flat && *flat != v.invertible) bad("classification and flatness disagree on invertibility");
        if (flat && *flat && !v.quasi_stable) bad("flat but not quasi-stable");
        auto flat_over_t = detail::decide_flat(sys, i, t, r);
        if (flat_over_t && *flat_over_t != v.quasi_stable) bad("quasi-stable flag disagrees with flatness over (I:I)");
    }
    r.details = {{"invertible", invertible},
                 {"stable", stable},
                 {"quasi_stable", quasi},
                 {"strongly_stable_unknown", strongly_unknown}};
    detail::finish(r, r.samples > 0, t0);
    return r;
}

/// Flat I gives a flat I·T over T; quasi-stable I gives a quasi-stable I·T.
template <class Ideal>
TheoremReport check_overring_transfer(const IdealSystem<Ideal>& sys, const CheckOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = detail::start(sys, "overring_transfer", opts);
    Rng rng = check_rng(r.claim_id, opts.seed);
    long flat_cases = 0, quasi_cases = 0;
    for (const auto& i : detail::ideals_for(sys, rng, opts.samples)) {
        ++r.samples;
        auto flat = detail::decide_flat(sys, i, sys.unit(), r);
        auto quasi = detail::decide_flat(sys, i, sys.multiplier_ring(i), r);
        for (const auto& t : sys.overrings(i)) {
            const Ideal it = sys.extend(i, t);
            auto witness = [&](const char* why) {
                r.fail({{"reason", why}, {"ideal", sys.describe(i)}, {"overring", sys.describe(t)},
                        {"extension", sys.describe(it)}});
            };
            if (flat && *flat) {
                ++flat_cases;
                auto g = detail::decide_flat(sys, it, t, r);
                if (g && !*g) witness("I flat over D but IT not flat over T");
            }
            if (quasi && *quasi) {
                ++quasi_cases;
                auto g = detail::decide_flat(sys, it, sys.multiplier_ring(it), r);
                if (g && !*g) witness("I quasi-stable but IT not quasi-stable");
            }
        }
    }
    r.details = {{"flat_transfers", flat_cases}, {"quasi_stable_transfers", quasi_cases}};
    detail::finish(r, flat_cases + quasi_cases > 0, t0);
    return r;
}

/// (I : I) localized at p equals (I_p : I_p).
template <class Ideal>
TheoremReport check_localization_hypothesis(const IdealSystem<Ideal>& sys, const CheckOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = detail::start(sys, "localization_hypothesis", opts);
    if (!sys.supports_localization()) {
        detail::finish(r, true, t0);
        r.status = "n/a";
        return r;
    }
    Rng rng = check_rng(r.claim_id, opts.seed);
    long probes = 0;
    for (const auto& i : detail::ideals_for(sys, rng, opts.samples)) {
        ++r.samples;
        for (const auto& [p, ok] : sys.localize(i)) {
            ++probes;
            if (!ok) r.fail({{"reason", "multiplier ring does not localize"}, {"ideal", sys.describe(i)}, {"prime", p}});
        }
    }
    r.details = {{"prime_probes", probes}};
    detail::finish(r, probes > 0, t0);
    return r;
}

/// Contingency of (t-ideal of (I : I), stable) over every enumerated ideal.
template <class Ideal>
TheoremReport question2_scan(const IdealSystem<Ideal>& sys, const CheckOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = detail::start(sys, "question2_scan", opts);
    auto all = sys.enumerate();
    if (!all) {
        detail::finish(r, true, t0);
        r.status = "n/a";
        return r;
    }
    long cell[2][2] = {{0, 0}, {0, 0}};
    Json unstable = Json::array();
    for (const auto& i : *all) {
        ++r.samples;
        const bool t_ideal = sys.v_closure_over(i, sys.multiplier_ring(i)) == i;
        const bool stable = sys.classify(i).stable;
        ++cell[t_ideal][stable];
        if (!stable) unstable.push_back({{"ideal", sys.describe(i)}, {"t_ideal_over_multiplier", t_ideal}});
    }
    r.details = {{"t_ideal_and_stable", cell[1][1]},
                 {"t_ideal_not_stable", cell[1][0]},
                 {"not_t_ideal_stable", cell[0][1]},
                 {"not_t_ideal_not_stable", cell[0][0]},
                 {"not_stable_rows", unstable}};
    detail::finish(r, true, t0);
    r.status = "evidence";
    return r;
}

/// Faithfully flat ideals are flat, and flat ideals here are invertible, so
/// this claim is covered by flat_iff_invertible.
template <class Ideal>
TheoremReport check_ff_invertible(const IdealSystem<Ideal>& sys, const CheckOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = detail::start(sys, "ff_invertible", opts);
    r.details = {{"subsumed_by", "flat_iff_invertible"}};
    detail::finish(r, true, t0);
    r.status = "subsumed";
    return r;
}

template <class Ideal>
TheoremReport run_check(const std::string& name, const IdealSystem<Ideal>& sys, const CheckOptions& opts) {
    using Fn = TheoremReport (*)(const IdealSystem<Ideal>&, const CheckOptions&);
    static const std::map<std::string, Fn> table{
        {"flat_criterion", &check_flat_criterion<Ideal>},
        {"flat_iff_invertible", &check_flat_iff_invertible<Ideal>},
        {"colon_identity", &check_colon_identity<Ideal>},
        {"flat_implies_t", &check_flat_implies_t<Ideal>},
        {"stability_chain", &check_stability_chain<Ideal>},
        {"overring_transfer", &check_overring_transfer<Ideal>},
        {"localization_hypothesis", &check_localization_hypothesis<Ideal>},
        {"question2_scan", &question2_scan<Ideal>},
        {"ff_invertible", &check_ff_invertible<Ideal>},
    };
    auto it = table.find(name);
    if (it == table.end()) throw UnknownCheck("unknown check \"" + name + "\"");
    return it->second(sys, opts);
}

}  // namespace qstab::harness
