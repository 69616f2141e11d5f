#pragma once

#include <optional>

#include "qstab/harness/ideal_system.hpp"

namespace qstab::harness {

struct PullbackOptions {
    long prime_bound = 100;
    int degree_bound = 5;
    /// Growth probe from prime_bound up to this bound, when given.
    std::optional<long> growth_to;
    bool divisoriality = true;
    bool local_principality = true;
    bool growth = true;
};

/// The three witnesses for the ideal of Z + X·Q[X] generated by the X/p:
/// not divisorial, locally principal, not finitely generated. "ok" is
/// false when any of them fails to hold.
Json pullback_witnesses(const PullbackOptions& opts);

}  // namespace qstab::harness
