#include <gtest/gtest.h>

#include <string>

#include "qstab/order/frac_ideal.hpp"
#include "qstab/order/stability.hpp"
#include "support/oracles.hpp"

using namespace qstab;
using namespace qstab::order;

namespace {

FieldElem random_elem(oracle::Gen& g, std::size_t n, long k, long max_den) {
    FieldElem x(n);
    bool zero = true;
    while (zero) {
        long den = g.range(1, max_den);
        for (auto& c : x) {
            c = Rat(g.range(-k, k), den);
            c.canonicalize();
            zero = zero && c == 0;
        }
    }
    return x;
}

FracIdeal random_ideal(oracle::Gen& g, const OrderPtr& d, long max_den = 2) {
    std::vector<FieldElem> gens;
    int count = static_cast<int>(g.range(1, 3));
    for (int k = 0; k < count; ++k) gens.push_back(random_elem(g, d->degree(), 4, max_den));
    return FracIdeal::from_gens(d, gens);
}

class OrderProperties : public ::testing::TestWithParam<std::string> {
protected:
    OrderPtr d = MonogenicOrder::parse(GetParam());
    FracIdeal unit = FracIdeal::unit(d);
    int trials() const { return d->degree() == 2 ? 60 : 15; }
};

}  // namespace

TEST_P(OrderProperties, CanonicalRepresentation) {
    oracle::Gen g(101);
    for (int t = 0; t < trials(); ++t) {
        FracIdeal i = random_ideal(g, d);
        ASSERT_EQ(gcd(i.den(), i.lattice().content()), 1);
        // Re-deriving the ideal from its own basis yields the same representation.
        ASSERT_EQ(FracIdeal::from_gens(d, i.basis()), i);
        for (const auto& b : i.basis()) ASSERT_TRUE(i.contains(d->multiply(b, d->theta())));
    }
}

TEST_P(OrderProperties, ClosureChain) {
    oracle::Gen g(102);
    for (int t = 0; t < trials(); ++t) {
        FracIdeal i = random_ideal(g, d), j = random_ideal(g, d);
        FracIdeal vi = v_closure(i);
        ASSERT_TRUE(vi.contains(i));
        ASSERT_EQ(t_closure_fg(i), vi);
        ASSERT_EQ(v_closure(vi), vi);
        FracIdeal ij = intersect(i, j);
        ASSERT_TRUE(vi.contains(v_closure(ij)));
        FieldElem c = random_elem(g, d->degree(), 3, 3);
        ASSERT_EQ(v_closure(i.scaled(c)), vi.scaled(c));
    }
}

TEST_P(OrderProperties, MultiplierRingIsARing) {
    oracle::Gen g(103);
    auto mo = maximal_order(d);
    for (int t = 0; t < trials(); ++t) {
        FracIdeal i = random_ideal(g, d);
        FracIdeal r = multiplier_ring(i);
        ASSERT_TRUE(r.is_ring());
        ASSERT_TRUE(r.contains(unit));
        ASSERT_EQ(mul(r, r), r);
        if (mo) ASSERT_TRUE(mo->contains(r));
        FieldElem c = random_elem(g, d->degree(), 3, 2);
        ASSERT_EQ(multiplier_ring(i.scaled(c)), r);
    }
}

TEST_P(OrderProperties, IdealOperationLaws) {
    oracle::Gen g(104);
    for (int t = 0; t < trials(); ++t) {
        FracIdeal i = random_ideal(g, d), j = random_ideal(g, d), k = random_ideal(g, d);
        ASSERT_EQ(mul(i, j), mul(j, i));
        ASSERT_EQ(mul(mul(i, j), k), mul(i, mul(j, k)));
        ASSERT_EQ(mul(i, sum(j, k)), sum(mul(i, j), mul(i, k)));
        ASSERT_TRUE(sum(i, j).contains(i));
        ASSERT_TRUE(i.contains(intersect(i, j)));
        FracIdeal c = colon(i, j);
        ASSERT_TRUE(i.contains(mul(c, j)));
        // Covolume is multiplicative for invertible factors.
        if (is_invertible(i)) ASSERT_EQ(mul(i, j).covolume(), i.covolume() * j.covolume());
    }
}

TEST_P(OrderProperties, InvertibleIdealsAreFlat) {
    oracle::Gen g(105);
    for (int t = 0; t < trials(); ++t) {
        FracIdeal i = random_ideal(g, d);
        bool inv = is_invertible(i);
        auto cert = flatness_certificate(i, unit);
        ASSERT_FALSE(std::holds_alternative<Inconclusive>(cert));
        ASSERT_EQ(std::holds_alternative<Flat>(cert), inv);
        if (inv) {
            ASSERT_EQ(v_closure(i), i);
            FracIdeal a = random_ideal(g, d), b = random_ideal(g, d);
            ASSERT_TRUE(flatness_criterion_holds(i, a, b));
        } else {
            const auto& nf = std::get<NotFlat>(cert);
            ASSERT_NE(mul(intersect(nf.a, nf.b), i), intersect(mul(nf.a, i), mul(nf.b, i)));
            ASSERT_NE(nf.colon_side, nf.product_side);
        }
    }
}

TEST_P(OrderProperties, VerdictChainAndTIdealOverMultiplier) {
    oracle::Gen g(106);
    for (int t = 0; t < trials(); ++t) {
        FracIdeal i = random_ideal(g, d);
        StabilityVerdict v = classify(i);
        if (v.strongly_stable == Tri::yes) ASSERT_TRUE(v.stable);
        if (v.stable) ASSERT_TRUE(v.quasi_stable);
        if (v.invertible) ASSERT_TRUE(v.stable && v.divisorial);
        if (v.quasi_stable) ASSERT_EQ(v_closure_over(i, v.multiplier_ring), i);
        ASSERT_EQ(v.invertible, v.multiplier_ring == unit && v.stable);
    }
}

TEST_P(OrderProperties, ExtensionOfInvertibleStaysInvertible) {
    oracle::Gen g(107);
    auto mo = maximal_order(d);
    for (int t = 0; t < trials(); ++t) {
        FracIdeal i = random_ideal(g, d);
        FracIdeal ring = mo ? *mo : multiplier_ring(random_ideal(g, d));
        FracIdeal e = extend(i, ring);
        ASSERT_EQ(mul(e, ring), e);
        if (is_invertible(i)) ASSERT_TRUE(is_invertible_over(e, ring));
        ASSERT_EQ(extend(i, unit), i);
    }
}

TEST_P(OrderProperties, LocalizationHypothesisHolds) {
    oracle::Gen g(108);
    for (int t = 0; t < trials(); ++t) {
        FracIdeal i = random_ideal(g, d);
        for (long p : {2, 3, 5, 7}) ASSERT_TRUE(localize_check(i, p));
    }
}

INSTANTIATE_TEST_SUITE_P(Orders, OrderProperties,
                         ::testing::Values("x^2+3", "x^2+4", "x^2-5", "x^2+1", "x^3-2"),
                         [](const auto& info) {
                             std::string s;
                             for (char c : info.param) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
                             return s;
                         });
