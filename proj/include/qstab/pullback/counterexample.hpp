#pragma once

#include <optional>
#include <stdexcept>
#include <variant>

#include "qstab/pullback/graded_module.hpp"

namespace qstab::pullback {

class BoundsTooSmall : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The ideal of D = Z + X·Q[X] generated by X/p for primes p <= P:
/// degree 0 zero, degree 1 the square-free support group over primes <= P,
/// higher degrees full. Requires P >= 2 and N >= 2.
GradedModule build_counterexample(long prime_bound, int degree_bound);
/// Same with every prime among the generators.
GradedModule build_counterexample_all_primes(int degree_bound);

struct Principal {
    RatPoly generator;
};
struct NotPrincipal {};
using LocalPrincipality = std::variant<Principal, NotPrincipal>;

/// m ⊗ D_(p) with D_(p) = Z_(p) + X·Q[X]: principal exactly when the
/// lowest group becomes p^k·Z_(p), and then X^a·p^k generates. Throws when
/// p is not prime or exceeds the prime bound of a truncated support group.
LocalPrincipality local_principality(const GradedModule& m, long p);

struct StrictGrowth {
    RatPoly witness;
};
struct Stable {};
using GrowthProbe = std::variant<StrictGrowth, Stable>;

/// Compares the truncations at P1 <= P2; the witness is (1/q)X for the
/// least prime q in (P1, P2].
GrowthProbe finite_generation_probe(long p1, long p2, int degree_bound = 2);

}  // namespace qstab::pullback
