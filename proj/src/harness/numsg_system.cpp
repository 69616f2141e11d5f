#include "qstab/harness/numsg_system.hpp"

#include <algorithm>

#include "qstab/numsg/classify.hpp"

namespace qstab::harness {

NumsgSystem::NumsgSystem(numsg::SemigroupPtr s, long genus_bound) : s_(std::move(s)), genus_bound_(genus_bound) {}

std::string NumsgSystem::name() const {
    std::string out = "numsg:";
    const auto& g = s_->minimal_generators();
    for (std::size_t k = 0; k < g.size(); ++k) out += (k ? "," : "") + std::to_string(g[k]);
    return out;
}

NumsgSystem::Ideal NumsgSystem::sample(Rng& rng) const {
    std::vector<long> gens{0};
    for (long gap : s_->gaps())
        if (draw(rng, 0, 1)) gens.push_back(gap);
    return Ideal::generated(s_, gens).shifted(draw(rng, -3, 3));
}

NumsgSystem::Ideal NumsgSystem::sample_invertible(Rng& rng) const { return Ideal::principal(s_, draw(rng, -5, 5)); }

std::optional<std::vector<NumsgSystem::Ideal>> NumsgSystem::enumerate() const {
    if (s_->genus() > genus_bound_) return std::nullopt;
    return numsg::enumerate_ideals(s_, genus_bound_);
}

std::vector<NumsgSystem::Ideal> NumsgSystem::overrings(const Ideal& i) const {
    std::vector<Ideal> out{unit()};
    for (const Ideal& t : {numsg::multiplier(i), Ideal::naturals(s_)})
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    return out;
}

FlatnessOutcome<NumsgSystem::Ideal> NumsgSystem::flatness_certificate(const Ideal& i, const Ideal& base) const {
    using Kind = FlatnessOutcome<Ideal>::Kind;
    auto cert = numsg::flatness_certificate(i, base);
    FlatnessOutcome<Ideal> out;
    if (std::holds_alternative<numsg::Flat>(cert)) {
        out.kind = Kind::flat;
    } else if (auto* nf = std::get_if<numsg::NotFlat>(&cert)) {
        out.kind = Kind::not_flat;
        out.witness.emplace(nf->a, nf->b);
    }
    return out;
}

Verdict NumsgSystem::classify(const Ideal& i) const {
    const auto row = numsg::classify(i);
    Verdict v;
    v.invertible = row.invertible;
    v.divisorial = row.divisorial;
    v.stable = row.stable;
    v.strongly_stable = row.stable ? Tri::yes : Tri::no;
    v.quasi_stable = numsg::is_invertible_over(i, numsg::multiplier(i));
    return v;
}

Json NumsgSystem::describe(const Ideal& i) const {
    return {{"elements", i.to_string()}, {"generators", i.minimal_generators()}, {"normalized", i.normalized().generator_string()}};
}

}  // namespace qstab::harness
