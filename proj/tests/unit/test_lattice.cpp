#include <gtest/gtest.h>

#include <cstdlib>
#include <numeric>

#include "qstab/core/integer.hpp"
#include "qstab/core/lattice.hpp"
#include "support/oracles.hpp"

using namespace qstab;

namespace {

IntMatrix rows(const oracle::Basis& b) {
    std::vector<std::vector<Int>> r;
    for (const auto& v : b) r.emplace_back(v.begin(), v.end());
    return IntMatrix::from_rows(r);
}

oracle::Basis to_basis(const IntMatrix& m) {
    oracle::Basis b;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        oracle::Vec v;
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c).get_si());
        b.push_back(v);
    }
    return b;
}

Lattice lat(const oracle::Basis& b) { return Lattice(rows(b)); }

bool is_canonical_hnf(const IntMatrix& h) {
    std::size_t last_pivot = 0;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        std::size_t p = 0;
        while (p < h.cols() && h(r, p) == 0) ++p;
        if (p == h.cols()) return false;
        if (r > 0 && p <= last_pivot) return false;
        if (h(r, p) <= 0) return false;
        for (std::size_t above = 0; above < r; ++above)
            if (h(above, p) < 0 || h(above, p) >= h(r, p)) return false;
        last_pivot = p;
    }
    return true;
}

IntMatrix random_matrix(oracle::Gen& g, std::size_t r, std::size_t c, long k) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = g.range(-k, k);
    return m;
}

// Product of random elementary row operations.
IntMatrix random_unimodular(oracle::Gen& g, std::size_t n) {
    IntMatrix u = IntMatrix::identity(n);
    for (int step = 0; step < 8; ++step) {
        std::size_t a = g.range(0, n - 1), b = g.range(0, n - 1);
        if (a == b) {
            for (std::size_t c = 0; c < n; ++c) u(a, c) = -u(a, c);
            continue;
        }
        long f = g.range(-3, 3);
        for (std::size_t c = 0; c < n; ++c) u(a, c) += f * u(b, c);
    }
    return u;
}

}  // namespace

TEST(Hnf, IdentityIsFixed) {
    EXPECT_EQ(hnf(IntMatrix::identity(2)), IntMatrix::identity(2));
}

TEST(Hnf, TwoByTwoExample) {
    const oracle::Basis in{{2, 0}, {1, 1}};
    IntMatrix h = hnf(rows(in));
    EXPECT_EQ(h, rows({{1, 1}, {0, 2}}));
    EXPECT_TRUE(oracle::same_span(in, to_basis(h), 4));
}

TEST(Hnf, RankDeficientCollapsesToOneRow) {
    const oracle::Basis in{{2, 4}, {1, 2}};
    IntMatrix h = hnf(rows(in));
    EXPECT_EQ(h, rows({{1, 2}}));
    EXPECT_TRUE(oracle::same_span(in, to_basis(h), 4));
}

TEST(Hnf, ZeroMatrixHasNoRows) {
    EXPECT_EQ(hnf(IntMatrix(2, 3)).rows(), 0u);
}

TEST(LatticeSum, OneDimensionalGcd) {
    EXPECT_EQ(lattice_sum(lat({{2}}), lat({{3}})), Lattice::standard(1));
    EXPECT_EQ(lattice_sum(lat({{4}}), lat({{6}})), lat({{2}}));
    const Lattice l = lat({{3, 1}, {0, 5}});
    EXPECT_EQ(lattice_sum(l, l), l);
}

TEST(LatticeIntersect, OneDimensionalLcm) {
    EXPECT_EQ(lattice_intersect(lat({{2}}), lat({{3}})), lat({{6}}));
    const Lattice l = lat({{3, 1}, {0, 5}});
    EXPECT_EQ(lattice_intersect(l, l), l);
}

TEST(LatticeIntersect, RankTwoAgainstMembershipScan) {
    const Lattice a = lat({{2, 0}, {0, 1}});
    const Lattice b = lat({{1, 0}, {0, 3}});
    const Lattice got = lattice_intersect(a, b);
    EXPECT_EQ(got, lat({{2, 0}, {0, 3}}));
    // Membership in a ∩ b is x even and y divisible by 3.
    for (long x = -8; x <= 8; ++x)
        for (long y = -8; y <= 8; ++y) {
            std::vector<Int> v{x, y};
            EXPECT_EQ(got.contains(v), x % 2 == 0 && y % 3 == 0) << x << "," << y;
        }
}

TEST(Lattice, DeterminantAndContent) {
    const Lattice l = lat({{4, 2}, {0, 6}});
    EXPECT_EQ(l.determinant(), 24);
    EXPECT_EQ(l.content(), 2);
    EXPECT_EQ(l.divided(2), lat({{2, 1}, {0, 3}}));
    EXPECT_EQ(l.divided(2).scaled(2), l);
}

TEST(Lattice, MixedRankThrows) {
    EXPECT_THROW(lattice_sum(Lattice(2), Lattice(3)), RankMismatch);
    EXPECT_THROW(lattice_intersect(Lattice(2), Lattice(3)), RankMismatch);
}

TEST(Lattice, ZeroLatticeBehaviour) {
    const Lattice z(2);
    EXPECT_EQ(z.rank(), 0u);
    EXPECT_EQ(lattice_sum(z, Lattice::standard(2)), Lattice::standard(2));
    EXPECT_EQ(lattice_intersect(z, Lattice::standard(2)), z);
}

TEST(Integer, Helpers) {
    auto [g, s, t] = gcdext(240, 46);
    EXPECT_EQ(g, 2);
    EXPECT_EQ(s * 240 + t * 46, 2);
    EXPECT_EQ(floor_div(-7, 2), -4);
    EXPECT_EQ(floor_div(7, -2), -4);
    EXPECT_EQ(prime_to_part(-72, 2), 9);
    EXPECT_EQ(valuation(72, 3), 2);
    EXPECT_EQ(prime_divisors(360), (std::vector<Int>{2, 3, 5}));
    EXPECT_EQ(common_denominator({Rat(1, 6), Rat(3, 4), Rat(2)}), 12);
    EXPECT_EQ(to_string(Rat(-1, 2)), "-1/2");
    EXPECT_EQ(to_string(Rat(4)), "4");
}

TEST(HnfProperty, CanonicalIdempotentAndSpanPreserving) {
    oracle::Gen g(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = g.range(1, 3), r = g.range(1, 4);
        IntMatrix m = random_matrix(g, r, n, 5);
        IntMatrix h = hnf(m);
        ASSERT_TRUE(is_canonical_hnf(h)) << m << "\n->\n" << h;
        ASSERT_EQ(hnf(h), h);
        Lattice l(m);
        for (std::size_t i = 0; i < m.rows(); ++i) ASSERT_TRUE(l.contains(m.row(i)));
        Lattice lh(h);
        for (std::size_t i = 0; i < h.rows(); ++i) ASSERT_TRUE(l.contains(h.row(i)));
        ASSERT_EQ(lh, l);
    }
}

TEST(HnfProperty, UnimodularInvariance) {
    oracle::Gen g(12);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = g.range(1, 4);
        IntMatrix m = random_matrix(g, n, g.range(1, 4), 6);
        IntMatrix u = random_unimodular(g, n);
        ASSERT_EQ(hnf(u * m), hnf(m)) << m;
    }
}

TEST(LatticeProperty, SumAndIntersectionBounds) {
    oracle::Gen g(13);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = g.range(1, 3);
        Lattice a(random_matrix(g, g.range(1, 3), n, 6));
        Lattice b(random_matrix(g, g.range(1, 3), n, 6));
        Lattice s = lattice_sum(a, b), i = lattice_intersect(a, b);
        ASSERT_TRUE(s.contains(a) && s.contains(b));
        ASSERT_TRUE(a.contains(i) && b.contains(i));
    }
}

TEST(LatticeProperty, IntersectionMatchesBoxScan) {
    oracle::Gen g(14);
    for (int trial = 0; trial < 40; ++trial) {
        Lattice a(random_matrix(g, 2, 2, 4));
        Lattice b(random_matrix(g, 2, 2, 4));
        Lattice i = lattice_intersect(a, b);
        for (long x = -6; x <= 6; ++x)
            for (long y = -6; y <= 6; ++y) {
                std::vector<Int> v{x, y};
                ASSERT_EQ(i.contains(v), a.contains(v) && b.contains(v));
            }
    }
}

TEST(LatticeProperty, ModularInclusion) {
    oracle::Gen g(15);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = g.range(1, 3);
        Lattice a(random_matrix(g, n, n, 5));
        Lattice b(random_matrix(g, n, n, 5));
        Lattice c(random_matrix(g, n, n, 5));
        Lattice lhs = lattice_sum(lattice_intersect(a, b), lattice_intersect(a, c));
        Lattice rhs = lattice_intersect(a, lattice_sum(b, c));
        ASSERT_TRUE(rhs.contains(lhs));
    }
}

TEST(LatticeProperty, RankTwoDeterminantIsGcdOfMinors) {
    oracle::Gen g(16);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix m = random_matrix(g, g.range(2, 4), 2, 7);
        long gm = 0;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = i + 1; j < m.rows(); ++j) {
                long minor = Int(m(i, 0) * m(j, 1) - m(i, 1) * m(j, 0)).get_si();
                gm = std::gcd(gm, std::labs(minor));
            }
        Lattice l(m);
        if (gm == 0)
            ASSERT_LT(l.rank(), 2u);
        else
            ASSERT_EQ(l.determinant(), gm) << m;
    }
}
