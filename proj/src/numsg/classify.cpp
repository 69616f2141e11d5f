#include "qstab/numsg/classify.hpp"

#include <string>

namespace qstab::numsg {

IdealRow classify(const RelativeIdeal& e) {
    IdealRow row{.gap_subset = {}, .ideal = e};
    row.invertible = is_invertible(e);
    row.stable = is_stable(e);
    row.divisorial = dual_v(e) == e;
    row.t_ideal_over_multiplier = dual_over(e, multiplier(e)) == e;
    return row;
}

namespace {

template <class Visit>
long for_each_candidate(const SemigroupPtr& s, long genus_bound, Visit visit) {
    const long g = s->genus();
    if (g > genus_bound)
        throw GenusTooLarge("genus " + std::to_string(g) + " exceeds the bound " + std::to_string(genus_bound));
    const auto& gaps = s->gaps();
    const long count = 1L << g;
    for (long mask = 0; mask < count; ++mask) {
        std::vector<long> chosen;
        for (long k = 0; k < g; ++k)
            if (mask >> k & 1) chosen.push_back(gaps[k]);
        auto e = RelativeIdeal::from_predicate(s, 0, s->conductor(), [&](long x) {
            if (s->contains(x)) return true;
            for (long c : chosen)
                if (c == x) return true;
            return false;
        });
        if (e) visit(std::move(chosen), std::move(*e));
    }
    return count;
}

}  // namespace

ClassificationTable classify_all(const SemigroupPtr& s, long genus_bound) {
    ClassificationTable table;
    table.semigroup = s;
    table.subsets_examined = for_each_candidate(s, genus_bound, [&](std::vector<long> chosen, RelativeIdeal e) {
        IdealRow row = classify(e);
        row.gap_subset = std::move(chosen);
        table.invertible += row.invertible;
        table.stable += row.stable;
        table.divisorial += row.divisorial;
        table.t_ideal_over_multiplier += row.t_ideal_over_multiplier;
        table.rows.push_back(std::move(row));
    });
    return table;
}

std::vector<RelativeIdeal> enumerate_ideals(const SemigroupPtr& s, long genus_bound) {
    std::vector<RelativeIdeal> out;
    for_each_candidate(s, genus_bound, [&](std::vector<long>, RelativeIdeal e) { out.push_back(std::move(e)); });
    return out;
}

}  // namespace qstab::numsg
