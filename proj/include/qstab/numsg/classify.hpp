#pragma once

#include <vector>

#include "qstab/numsg/relative_ideal.hpp"

namespace qstab::numsg {

/// In the monomial model invertible, principal, stable and strongly stable
/// coincide over the multiplier semigroup, and invertible over S means
/// E = S after normalization.
struct IdealRow {
    std::vector<long> gap_subset;
    RelativeIdeal ideal;
    bool invertible = false;
    bool stable = false;
    bool divisorial = false;
    bool t_ideal_over_multiplier = false;
};

struct ClassificationTable {
    SemigroupPtr semigroup;
    long subsets_examined = 0;
    std::vector<IdealRow> rows;
    long invertible = 0;
    long stable = 0;
    long divisorial = 0;
    long t_ideal_over_multiplier = 0;
};

class GenusTooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

IdealRow classify(const RelativeIdeal& e);

/// All 2^genus subsets G of the gaps; S ∪ G is kept when it is a relative
/// ideal. Throws GenusTooLarge above genus_bound.
ClassificationTable classify_all(const SemigroupPtr& s, long genus_bound = 12);

/// Every normalized relative ideal of s.
std::vector<RelativeIdeal> enumerate_ideals(const SemigroupPtr& s, long genus_bound = 12);

}  // namespace qstab::numsg
