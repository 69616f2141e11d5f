#include "qstab/order/stability.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace qstab::order {

std::string to_string(Tri t) {
    switch (t) {
        case Tri::no: return "false";
        case Tri::yes: return "true";
        case Tri::unknown: return "unknown";
    }
    return "unknown";
}

namespace {

FieldElem combine(const FracIdeal& i, const std::vector<Int>& coords) {
    const auto& b = i.lattice().basis();
    FieldElem out(b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        Int acc = 0;
        for (std::size_t r = 0; r < b.rows(); ++r) acc += coords[r] * b(r, c);
        out[c] = Rat(acc, i.den());
        out[c].canonicalize();
    }
    return out;
}

bool generates(const FracIdeal& i, const FracIdeal& t, const FieldElem& alpha) {
    return mul(FracIdeal::principal(i.order(), alpha), t) == i;
}

std::optional<FieldElem> search_quadratic(const FracIdeal& i, const FracIdeal& t, const Int& target,
                                          bool imaginary, long height) {
    const auto& o = i.ring();
    const auto& b = i.lattice().basis();
    const Int a_coef = o.norm(b.row(0));
    const Int c_coef = o.norm(b.row(1));
    std::vector<Int> both{b(0, 0) + b(1, 0), b(0, 1) + b(1, 1)};
    const Int b_coef = o.norm(both) - a_coef - c_coef;

    std::vector<Int> signs{target};
    if (!imaginary) signs.push_back(-target);

    Int x_bound = height;
    if (imaginary) {
        // A x^2 + B x y + C y^2 is positive definite; |x| is bounded by
        // sqrt(4 C N / (4 A C - B^2)).
        Int num = 4 * c_coef * target;
        Int den = 4 * a_coef * c_coef - b_coef * b_coef;
        x_bound = sqrt(Int(num / den)) + 1;
    }
    for (const auto& goal : signs) {
        for (Int x = -x_bound; x <= x_bound; ++x) {
            Int disc = b_coef * b_coef * x * x - 4 * c_coef * (a_coef * x * x - goal);
            if (disc < 0) continue;
            Int root = sqrt(disc);
            if (root * root != disc) continue;
            for (const Int& r : {root, Int(-root)}) {
                Int num = -b_coef * x + r;
                Int den = 2 * c_coef;
                if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
                FieldElem alpha = combine(i, {x, Int(num / den)});
                if (generates(i, t, alpha)) return alpha;
            }
        }
    }
    return std::nullopt;
}

std::optional<FieldElem> search_box(const FracIdeal& i, const FracIdeal& t, const Int& target, long height) {
    const auto& o = i.ring();
    const std::size_t n = o.degree();
    const auto& b = i.lattice().basis();
    std::vector<long> x(n, -height);
    for (;;) {
        // First nonzero coordinate positive and coordinates coprime: each
        // line through the origin is visited once, by its primitive point.
        std::size_t lead = 0;
        while (lead < n && x[lead] == 0) ++lead;
        long g = 0;
        for (auto v : x) g = std::gcd(g, std::labs(v));
        if (lead < n && x[lead] > 0 && g == 1) {
            std::vector<Int> w(n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) w[c] += x[r] * b(r, c);
            if (abs(o.norm(w)) == target) {
                std::vector<Int> coords(x.begin(), x.end());
                FieldElem alpha = combine(i, coords);
                if (generates(i, t, alpha)) return alpha;
            }
        }
        std::size_t k = 0;
        while (k < n && x[k] == height) x[k++] = -height;
        if (k == n) break;
        ++x[k];
    }
    return std::nullopt;
}

}  // namespace

GeneratorSearch find_generator(const FracIdeal& i, const FracIdeal& t, const ClassifyOptions& opts) {
    const auto& o = i.ring();
    const std::size_t n = o.degree();
    // |N(w)| for the integral vector w = den_i·α must equal
    // den_i^n · covol(i) / covol(t) = det(L_i) · den_t^n / det(L_t).
    Int den_t_pow = 1;
    for (std::size_t k = 0; k < n; ++k) den_t_pow *= t.den();
    Rat target(i.lattice().determinant() * den_t_pow, t.lattice().determinant());
    target.canonicalize();
    if (target.get_den() != 1) return {std::nullopt, true};

    if (n == 2) {
        const Int& c0 = o.min_poly()[0];
        const Int& c1 = o.min_poly()[1];
        const bool imaginary = c1 * c1 - 4 * c0 < 0;
        auto g = search_quadratic(i, t, target.get_num(), imaginary, opts.search_height);
        return {g, imaginary};
    }
    return {search_box(i, t, target.get_num(), opts.search_height_higher_degree), false};
}

StabilityVerdict classify(const FracIdeal& i, const ClassifyOptions& opts) {
    const FracIdeal unit = FracIdeal::unit(i.order());
    FracIdeal t = multiplier_ring(i);
    StabilityVerdict v{.multiplier_ring = t};
    v.invertible = mul(i, colon(unit, i)) == unit;
    v.divisorial = v_closure(i) == i;
    v.stable = is_invertible_over(i, t);
    // Finitely generated and flat over (i : i) is the same as invertible there.
    v.quasi_stable = v.stable;
    if (!v.stable) {
        v.strongly_stable = Tri::no;
    } else {
        auto search = find_generator(i, t, opts);
        if (search.generator)
            v.strongly_stable = Tri::yes;
        else
            v.strongly_stable = search.complete ? Tri::no : Tri::unknown;
    }
    return v;
}

bool flatness_criterion_holds(const FracIdeal& i, const FracIdeal& a, const FracIdeal& b) {
    return mul(intersect(a, b), i) == intersect(mul(a, i), mul(b, i));
}

FlatnessCertificate flatness_certificate(const FracIdeal& i, const FracIdeal& over,
                                         const std::vector<FieldElem>& gens) {
    const auto& o = i.ring();
    if (!over.contains(o.one()) || !over.is_ring())
        throw std::invalid_argument("flatness_certificate: base is not a ring");
    if (!(mul(i, over) == i)) throw std::invalid_argument("flatness_certificate: ideal is not a module over the base");
    if (is_invertible_over(i, over)) return Flat{};

    std::vector<FieldElem> g;
    for (const auto& x : gens.empty() ? i.basis() : gens) {
        bool zero = true;
        for (const auto& c : x) zero = zero && c == 0;
        if (!zero) g.push_back(x);
    }

    std::vector<std::vector<FieldElem>> candidates{{o.one()}};
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b) candidates.push_back({g[a], g[b]});
    candidates.push_back(g);

    auto reciprocal = [&](const FieldElem& x) { return over.scaled(o.inverse(x)); };

    for (const auto& cand : candidates) {
        FracIdeal j = mul(FracIdeal::from_gens(i.order(), cand), over);
        FracIdeal lhs = colon(i, j);
        FracIdeal rhs = mul(i, colon(over, j));
        if (lhs == rhs) continue;
        // (i : J) = ∩ g_k^{-1} i, while i·J^{-1} = i·∩ g_k^{-1} over. The
        // first k where the partial intersections disagree gives the pair.
        FracIdeal acc = reciprocal(cand.front());
        for (std::size_t k = 1; k < cand.size(); ++k) {
            FracIdeal b = reciprocal(cand[k]);
            if (!flatness_criterion_holds(i, acc, b))
                return NotFlat{cand, j, lhs, rhs, acc, b};
            acc = intersect(acc, b);
        }
    }
    return Inconclusive{};
}

FracIdeal saturate(const FracIdeal& i, const Int& p) {
    const Lattice& l = i.lattice();
    const std::size_t n = l.ambient_rank();
    const Int u = prime_to_part(l.determinant(), p);
    Lattice sat = lattice_intersect(l, Lattice::scaled_standard(n, u)).divided(u);
    return FracIdeal::from_lattice(i.order(), i.den(), sat);
}

bool locally_equal(const FracIdeal& i, const FracIdeal& j, const Int& p) {
    const Int l = lcm(i.den(), j.den());
    const Lattice a = i.lattice().scaled(l / i.den());
    const Lattice b = j.lattice().scaled(l / j.den());
    const std::size_t n = a.ambient_rank();
    const Int u = prime_to_part(a.determinant() * b.determinant(), p);
    const Lattice box = Lattice::scaled_standard(n, u);
    return lattice_intersect(a, box).divided(u) == lattice_intersect(b, box).divided(u);
}

bool localize_check(const FracIdeal& i, const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("localize_check: " + p.get_str() + " is not prime");
    const FracIdeal global = multiplier_ring(i);
    const FracIdeal local_rep = saturate(i, p);
    return locally_equal(global, multiplier_ring(local_rep), p);
}

}  // namespace qstab::order
