#include <gtest/gtest.h>

#include "qstab/numsg/classify.hpp"
#include "qstab/numsg/relative_ideal.hpp"
#include "qstab/numsg/semigroup.hpp"
#include "support/oracles.hpp"
#include "support/set_oracle.hpp"

using namespace qstab::numsg;

namespace qstab::numsg {
void PrintTo(const RelativeIdeal& e, std::ostream* os) { *os << e.to_string(); }
}  // namespace qstab::numsg

namespace {

void expect_matches(const RelativeIdeal& e, const oracle::WindowSet& w, const std::string& what) {
    // The oracle's window upper edge is treated as a tail; compare well inside it.
    for (long x = oracle::WindowSet::lo; x < 40; ++x) ASSERT_EQ(e.contains(x), w.has(x)) << what << " at " << x;
}

struct S345 : ::testing::Test {
    SemigroupPtr s = make_semigroup({3, 4, 5});
    RelativeIdeal unit = RelativeIdeal::unit(s);
    RelativeIdeal e01 = RelativeIdeal::generated(s, {0, 1});
};

struct S23 : ::testing::Test {
    SemigroupPtr s = make_semigroup({2, 3});
    RelativeIdeal unit = RelativeIdeal::unit(s);
    RelativeIdeal m = RelativeIdeal::generated(s, {2, 3});
};

}  // namespace

TEST(Semigroup, BasicInvariants) {
    NumericalSemigroup s({6, 9, 20});
    EXPECT_EQ(s.frobenius(), 43);
    EXPECT_EQ(s.minimal_generators(), (std::vector<long>{6, 9, 20}));
    NumericalSemigroup t({3, 4, 5, 6, 8});
    EXPECT_EQ(t.minimal_generators(), (std::vector<long>{3, 4, 5}));
    EXPECT_EQ(t.gaps(), (std::vector<long>{1, 2}));
    EXPECT_EQ(t.conductor(), 3);
    EXPECT_EQ(NumericalSemigroup::naturals().frobenius(), -1);
    EXPECT_EQ(NumericalSemigroup::naturals().genus(), 0);
    EXPECT_EQ(NumericalSemigroup::from_gaps({1, 2}), t);
    EXPECT_EQ(t.to_string(), "<3,4,5>");
    EXPECT_THROW(NumericalSemigroup({2, 4}), std::invalid_argument);
    EXPECT_THROW(NumericalSemigroup({0, 1}), std::invalid_argument);
    EXPECT_THROW(NumericalSemigroup::from_gaps({2}), std::invalid_argument);
    EXPECT_THROW(parse_semigroup("3,x"), std::invalid_argument);
    EXPECT_EQ(*parse_semigroup("3, 4,5"), t);
}

TEST(Semigroup, MembershipMatchesClosureOracle) {
    oracle::Gen g(31);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<long> gens;
        long count = g.range(2, 4);
        for (long k = 0; k < count; ++k) gens.push_back(g.range(2, 12));
        long gg = 0;
        for (long x : gens) gg = std::gcd(gg, x);
        if (gg != 1) continue;
        NumericalSemigroup s(gens);
        auto w = oracle::semigroup(gens);
        for (long x = -3; x < 70; ++x) ASSERT_EQ(s.contains(x), w.has(x)) << s.to_string() << " " << x;
    }
}

TEST(Semigroup, CountsByGenus) {
    const std::vector<long> known{1, 1, 2, 4, 7, 12, 23, 39, 67};
    auto all = enumerate_semigroups(8);
    std::vector<long> by_genus(9, 0);
    for (const auto& s : all) ++by_genus[s.genus()];
    EXPECT_EQ(by_genus, known);
    for (long g = 0; g <= 6; ++g) EXPECT_EQ(by_genus[g], oracle::count_semigroups(g)) << g;
}

TEST_F(S345, AddExamples) {
    EXPECT_EQ(add(e01, unit), e01);
    RelativeIdeal sq = add(e01, e01);
    EXPECT_EQ(sq, RelativeIdeal::generated(s, {0, 1, 2}));
    EXPECT_EQ(add(RelativeIdeal::principal(s, 4), RelativeIdeal::principal(s, -1)), RelativeIdeal::principal(s, 3));
}

TEST_F(S345, SubtractAndStability) {
    EXPECT_EQ(subtract(unit, unit), unit);
    EXPECT_EQ(multiplier(e01), unit);
    EXPECT_FALSE(is_stable(e01));
    EXPECT_TRUE(is_stable(unit));
    EXPECT_FALSE(is_invertible(e01));
    // M = S \ {0} normalizes to the naturals; over S it is not invertible.
    RelativeIdeal m = RelativeIdeal::generated(s, {3, 4, 5});
    EXPECT_EQ(m.normalized(), RelativeIdeal::naturals(s));
    EXPECT_EQ(add(m, subtract(unit, m)), m);
    EXPECT_FALSE(is_invertible_over(m.normalized(), unit));
    EXPECT_TRUE(is_invertible_over(unit, unit));
    EXPECT_THROW(is_invertible_over(unit, e01), std::invalid_argument);
}

TEST_F(S345, DualOfE01) {
    // S − E = {x : x, x+1 ∈ S} = {3,4,...}; S − {3,4,...} = {0,1,2,...}.
    EXPECT_EQ(subtract(unit, e01), RelativeIdeal::naturals(s).shifted(3));
    EXPECT_EQ(dual_v(e01), RelativeIdeal::naturals(s));
    EXPECT_FALSE(dual_v(e01) == e01);
    EXPECT_EQ(dual_v(dual_v(e01)), dual_v(e01));
    EXPECT_EQ(dual_v(unit), unit);
}

TEST_F(S23, MaximalIdeal) {
    EXPECT_EQ(multiplier(m), RelativeIdeal::naturals(s));
    EXPECT_TRUE(is_stable(m));
    EXPECT_TRUE(is_invertible_over(m, multiplier(m)));
    EXPECT_FALSE(is_invertible(m));
    EXPECT_EQ(m.normalized(), RelativeIdeal::naturals(s));
}

TEST(ClassifyAll, Examples) {
    auto t23 = classify_all(make_semigroup({2, 3}));
    EXPECT_EQ(t23.subsets_examined, 2);
    EXPECT_EQ(t23.rows.size(), 2u);
    EXPECT_EQ(t23.stable, 2);

    auto t345 = classify_all(make_semigroup({3, 4, 5}));
    EXPECT_EQ(t345.subsets_examined, 4);
    bool found = false;
    for (const auto& r : t345.rows)
        if (r.gap_subset == std::vector<long>{1}) {
            found = true;
            EXPECT_EQ(r.ideal.generator_string(), "{0,1}+S");
            EXPECT_FALSE(r.stable);
            EXPECT_FALSE(r.invertible);
        }
    EXPECT_TRUE(found);

    auto tn = classify_all(make_semigroup({1}));
    EXPECT_EQ(tn.rows.size(), 1u);
    EXPECT_TRUE(tn.rows[0].stable);

    EXPECT_THROW(classify_all(make_semigroup({13, 14}), 12), GenusTooLarge);
}

TEST_F(S345, FlatnessCertificate) {
    auto c = flatness_certificate(e01, unit);
    ASSERT_TRUE(std::holds_alternative<NotFlat>(c));
    const auto& nf = std::get<NotFlat>(c);
    EXPECT_FALSE(flatness_criterion_holds(e01, nf.a, nf.b));
    EXPECT_TRUE(std::holds_alternative<Flat>(flatness_certificate(unit, unit)));
    EXPECT_TRUE(std::holds_alternative<Flat>(flatness_certificate(e01, multiplier(e01).shifted(0))) ==
                is_invertible_over(e01, multiplier(e01)));
}

TEST(RelativeIdealOps, MatchWindowOracle) {
    oracle::Gen g(32);
    const std::vector<std::vector<long>> sgs{{3, 4, 5}, {2, 5}, {4, 6, 7}, {3, 7}, {1}, {5, 6, 7, 8, 9}};
    for (int trial = 0; trial < 120; ++trial) {
        const auto& gens = sgs[g.range(0, sgs.size() - 1)];
        auto s = make_semigroup(gens);
        auto w = oracle::semigroup(gens);
        auto rand_gens = [&] {
            std::vector<long> out;
            long k = g.range(1, 3);
            for (long i = 0; i < k; ++i) out.push_back(g.range(-4, 6));
            return out;
        };
        auto ga = rand_gens(), gb = rand_gens();
        RelativeIdeal a = RelativeIdeal::generated(s, ga), b = RelativeIdeal::generated(s, gb);
        auto wa = oracle::ideal(w, ga), wb = oracle::ideal(w, gb);
        expect_matches(a, wa, "ideal");
        expect_matches(add(a, b), oracle::sum(wa, wb), "add");
        expect_matches(intersect(a, b), oracle::meet(wa, wb), "intersect");
        expect_matches(subtract(a, b), oracle::minus(wa, wb), "subtract");
        expect_matches(dual_v(a), oracle::minus(w, oracle::minus(w, wa)), "dual_v");
    }
}

TEST(RelativeIdealProperties, ExhaustiveLawsUpToGenusSix) {
    for (const auto& sg : enumerate_semigroups(6)) {
        auto s = std::make_shared<const NumericalSemigroup>(sg);
        RelativeIdeal unit = RelativeIdeal::unit(s);
        auto ideals = enumerate_ideals(s);
        ASSERT_EQ(classify_all(s).subsets_examined, 1L << sg.genus());
        for (const auto& e : ideals) {
            RelativeIdeal v = dual_v(e);
            ASSERT_TRUE(v.contains(e));
            ASSERT_EQ(dual_v(v), v);
            ASSERT_TRUE(add(e, unit) == e);
            bool inv = is_invertible(e);
            ASSERT_EQ(inv, e.is_principal());
            ASSERT_EQ(inv, e == unit);
            if (inv) ASSERT_EQ(v, e);
            RelativeIdeal t = multiplier(e);
            ASSERT_TRUE(t.is_semigroup());
            ASSERT_EQ(is_stable(e), is_invertible_over(e, t));
            if (is_stable(e)) ASSERT_EQ(dual_over(e, t), e);
            auto cert = flatness_certificate(e, unit);
            ASSERT_FALSE(std::holds_alternative<Inconclusive>(cert));
            ASSERT_EQ(std::holds_alternative<Flat>(cert), inv);
        }
        for (const auto& a : ideals)
            for (const auto& b : ideals)
                if (a.contains(b)) ASSERT_TRUE(dual_v(a).contains(dual_v(b)));
    }
}
