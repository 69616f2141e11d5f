#pragma once

#include "qstab/harness/ideal_system.hpp"
#include "qstab/order/frac_ideal.hpp"
#include "qstab/order/stability.hpp"

namespace qstab::harness {

/// Fractional ideals of a monogenic order.
///
/// Samples are generated by 2 or 3 elements with coordinates in
/// [-height, height] and, with probability 1/4 each, a denominator in
/// {2, 3}; the result is then scaled by a rational a/b, 1 <= a, b <= 5,
/// with probability 1/3.
class OrderSystem final : public IdealSystem<order::FracIdeal> {
public:
    using Ideal = order::FracIdeal;

    explicit OrderSystem(order::OrderPtr order, long height = 6, order::ClassifyOptions classify_opts = {});

    const order::OrderPtr& order() const { return order_; }

    std::string name() const override;
    Ideal unit() const override { return unit_; }
    Ideal mul(const Ideal& a, const Ideal& b) const override { return order::mul(a, b); }
    Ideal sum(const Ideal& a, const Ideal& b) const override { return order::sum(a, b); }
    Ideal intersect(const Ideal& a, const Ideal& b) const override { return order::intersect(a, b); }
    Ideal colon(const Ideal& a, const Ideal& b) const override { return order::colon(a, b); }
    Ideal extend(const Ideal& i, const Ideal& t) const override { return order::extend(i, t); }

    Ideal sample(Rng& rng) const override;
    /// Rejection sampling; falls back to a principal ideal after 64 draws.
    Ideal sample_invertible(Rng& rng) const override;
    /// D, (I : I) and, for quadratic fields, the maximal order.
    std::vector<Ideal> overrings(const Ideal& i) const override;

    FlatnessOutcome<Ideal> flatness_certificate(const Ideal& i, const Ideal& base) const override;
    Verdict classify(const Ideal& i) const override;

    bool supports_localization() const override { return true; }
    /// Primes dividing the discriminant or the covolume of i, and 2, 3, 5, 7.
    std::vector<std::pair<long, bool>> localize(const Ideal& i) const override;

    Json describe(const Ideal& i) const override;

private:
    order::FieldElem random_element(Rng& rng) const;

    order::OrderPtr order_;
    Ideal unit_;
    std::optional<Ideal> maximal_;
    long height_;
    order::ClassifyOptions classify_opts_;
};

}  // namespace qstab::harness
