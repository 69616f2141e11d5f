#include "qstab/pullback/counterexample.hpp"

namespace qstab::pullback {

GradedModule build_counterexample(long prime_bound, int degree_bound) {
    if (prime_bound < 2) throw BoundsTooSmall("prime bound must be at least 2");
    if (degree_bound < 2) throw BoundsTooSmall("degree bound must be at least 2");
    return GradedModule(1, CoeffGroup::support(1, prime_bound), degree_bound);
}

GradedModule build_counterexample_all_primes(int degree_bound) {
    if (degree_bound < 2) throw BoundsTooSmall("degree bound must be at least 2");
    return GradedModule(1, CoeffGroup::support(1, std::nullopt), degree_bound);
}

LocalPrincipality local_principality(const GradedModule& m, long p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    const CoeffGroup& raw = m.lowest_group();
    if (raw.kind() == CoeffGroup::Kind::support && raw.prime_bound() && p > *raw.prime_bound())
        throw std::out_of_range("prime " + std::to_string(p) + " exceeds the prime bound " +
                                std::to_string(*raw.prime_bound()));
    const CoeffGroup g = raw.canonical();
    long k = 0;
    switch (g.kind()) {
        case CoeffGroup::Kind::zero:
        case CoeffGroup::Kind::full: return NotPrincipal{};
        case CoeffGroup::Kind::scaled:
            k = valuation(g.scale().get_num(), p) - valuation(g.scale().get_den(), p);
            break;
        case CoeffGroup::Kind::support:
            // Localized, the square-free denominators leave only 1/p.
            k = valuation(g.scale().get_num(), p) - valuation(g.scale().get_den(), p) - 1;
            break;
    }
    Rat c = 1;
    for (long j = 0; j < (k < 0 ? -k : k); ++j) c *= p;
    if (k < 0) c = 1 / c;
    return Principal{RatPoly::monomial(c, m.lowest_degree())};
}

GrowthProbe finite_generation_probe(long p1, long p2, int degree_bound) {
    if (p1 > p2) throw std::invalid_argument("finite_generation_probe: P1 exceeds P2");
    const GradedModule small = build_counterexample(p1, degree_bound);
    const GradedModule large = build_counterexample(p2, degree_bound);
    for (long q = p1 + 1; q <= p2; ++q) {
        if (!is_prime(q)) continue;
        RatPoly w = RatPoly::monomial(Rat(1, q), 1);
        if (!large.contains(small) || !large.contains(w) || small.contains(w))
            throw std::logic_error("finite_generation_probe: truncations are not nested as expected");
        return StrictGrowth{w};
    }
    return Stable{};
}

}  // namespace qstab::pullback
