#pragma once

#include "qstab/harness/ideal_system.hpp"
#include "qstab/numsg/relative_ideal.hpp"

namespace qstab::harness {

/// Relative ideals of a numerical semigroup. Enumerable (every normalized
/// ideal) when the genus is at most genus_bound. Samples are a random
/// subset of the gaps added to S, shifted by an integer in [-3, 3].
class NumsgSystem final : public IdealSystem<numsg::RelativeIdeal> {
public:
    using Ideal = numsg::RelativeIdeal;

    explicit NumsgSystem(numsg::SemigroupPtr s, long genus_bound = 12);

    const numsg::SemigroupPtr& semigroup() const { return s_; }

    std::string name() const override;
    Ideal unit() const override { return Ideal::unit(s_); }
    Ideal mul(const Ideal& a, const Ideal& b) const override { return numsg::add(a, b); }
    Ideal sum(const Ideal& a, const Ideal& b) const override { return numsg::unite(a, b); }
    Ideal intersect(const Ideal& a, const Ideal& b) const override { return numsg::intersect(a, b); }
    Ideal colon(const Ideal& a, const Ideal& b) const override { return numsg::subtract(a, b); }
    bool is_invertible_over(const Ideal& i, const Ideal& base) const override {
        return numsg::is_invertible_over(i, base);
    }

    Ideal sample(Rng& rng) const override;
    /// a + S, a in [-5, 5].
    Ideal sample_invertible(Rng& rng) const override;
    std::optional<std::vector<Ideal>> enumerate() const override;
    /// S, E − E and the naturals.
    std::vector<Ideal> overrings(const Ideal& i) const override;

    FlatnessOutcome<Ideal> flatness_certificate(const Ideal& i, const Ideal& base) const override;
    /// Invertible over a monomial local ring means principal, so strongly
    /// stable and stable coincide.
    Verdict classify(const Ideal& i) const override;

    Json describe(const Ideal& i) const override;

private:
    numsg::SemigroupPtr s_;
    long genus_bound_;
};

}  // namespace qstab::harness
