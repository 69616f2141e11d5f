#include "qstab/order/frac_ideal.hpp"

#include <sstream>

namespace qstab::order {

namespace {

void require_same_order(const FracIdeal& a, const FracIdeal& b, const char* op) {
    if (a.order() != b.order() && !(*a.order() == *b.order()))
        throw OrderMismatch(std::string(op) + ": ideals live in different orders");
}

std::vector<Int> scaled_integral(const FieldElem& x, const Int& d) {
    std::vector<Int> out;
    out.reserve(x.size());
    for (const auto& c : x) {
        Rat s = c * d;
        if (s.get_den() != 1) throw std::logic_error("scaled_integral: denominator not cleared");
        out.push_back(s.get_num());
    }
    return out;
}

// Bring two ideals to a common denominator: returns (l, L1·(l/d1), L2·(l/d2)).
std::tuple<Int, Lattice, Lattice> common_scale(const FracIdeal& a, const FracIdeal& b) {
    Int l = lcm(a.den(), b.den());
    return {l, a.lattice().scaled(l / a.den()), b.lattice().scaled(l / b.den())};
}

}  // namespace

FracIdeal::FracIdeal(OrderPtr order, Int den, Lattice lat)
    : order_(std::move(order)), den_(std::move(den)), lat_(std::move(lat)) {
    if (!lat_.is_full_rank() || lat_.ambient_rank() != order_->degree())
        throw std::invalid_argument("fractional ideal lattice must be full rank");
    if (den_ <= 0) throw std::invalid_argument("fractional ideal denominator must be positive");
    Int g = gcd(den_, lat_.content());
    if (g > 1) {
        den_ /= g;
        lat_ = lat_.divided(g);
    }
}

FracIdeal FracIdeal::unit(OrderPtr order) {
    const std::size_t n = order->degree();
    return FracIdeal(std::move(order), 1, Lattice::standard(n));
}

FracIdeal FracIdeal::principal(OrderPtr order, const FieldElem& a) { return from_gens(std::move(order), {a}); }

FracIdeal FracIdeal::from_gens(OrderPtr order, const std::vector<FieldElem>& gens) {
    const std::size_t n = order->degree();
    if (gens.empty()) throw std::invalid_argument("ideal_from_gens: no generators");
    Int d = 1;
    for (const auto& g : gens) {
        if (g.size() != n) throw RankMismatch("ideal_from_gens: generator has wrong length");
        d = lcm(d, common_denominator(g));
    }
    IntMatrix rows(n);
    for (const auto& g : gens) {
        auto v = scaled_integral(g, d);
        for (std::size_t k = 0; k < n; ++k) {
            rows.append_row(v);
            if (k + 1 < n) v = order->times_theta(v);
        }
    }
    Lattice lat(rows);
    if (lat.rank() == 0) throw std::invalid_argument("ideal_from_gens: all generators are zero");
    return FracIdeal(std::move(order), d, std::move(lat));
}

FracIdeal FracIdeal::from_lattice(OrderPtr order, Int den, const Lattice& lattice) {
    if (lattice.ambient_rank() != order->degree()) throw RankMismatch("from_lattice: wrong ambient rank");
    if (!lattice.is_full_rank()) throw std::invalid_argument("from_lattice: lattice is not full rank");
    for (std::size_t r = 0; r < lattice.rank(); ++r)
        if (!lattice.contains(order->times_theta(lattice.basis().row(r))))
            throw std::invalid_argument("from_lattice: lattice is not closed under multiplication by θ");
    return FracIdeal(std::move(order), std::move(den), lattice);
}

FracIdeal FracIdeal::from_rational_rows(OrderPtr order, const std::vector<FieldElem>& rows) {
    Int d = 1;
    for (const auto& r : rows) d = lcm(d, common_denominator(r));
    IntMatrix m(order->degree());
    for (const auto& r : rows) m.append_row(scaled_integral(r, d));
    return FracIdeal(std::move(order), d, Lattice(m));
}

std::vector<FieldElem> FracIdeal::basis() const {
    std::vector<FieldElem> out;
    for (std::size_t r = 0; r < lat_.rank(); ++r) {
        FieldElem e;
        for (const auto& x : lat_.basis().row(r)) {
            Rat q(x, den_);
            q.canonicalize();
            e.push_back(q);
        }
        out.push_back(std::move(e));
    }
    return out;
}

bool FracIdeal::contains(const FieldElem& x) const {
    std::vector<Int> v;
    for (const auto& c : x) {
        Rat s = c * den_;
        if (s.get_den() != 1) return false;
        v.push_back(s.get_num());
    }
    return lat_.contains(v);
}

bool FracIdeal::contains(const FracIdeal& other) const {
    require_same_order(*this, other, "contains");
    auto [l, mine, theirs] = common_scale(*this, other);
    return mine.contains(theirs);
}

FracIdeal FracIdeal::scaled(const Rat& c) const {
    if (c == 0) throw std::invalid_argument("scaling an ideal by zero");
    return FracIdeal(order_, den_ * c.get_den(), lat_.scaled(abs(c.get_num())));
}

FracIdeal FracIdeal::scaled(const FieldElem& a) const { return mul(principal(order_, a), *this); }

Rat FracIdeal::covolume() const {
    Int dn = 1;
    for (std::size_t k = 0; k < order_->degree(); ++k) dn *= den_;
    Rat q(lat_.determinant(), dn);
    q.canonicalize();
    return q;
}

bool FracIdeal::is_ring() const { return contains(order_->one()) && mul(*this, *this) == *this; }

std::string FracIdeal::to_string() const {
    std::ostringstream os;
    os << "den " << den_ << " basis " << lat_;
    return os.str();
}

FracIdeal mul(const FracIdeal& i, const FracIdeal& j) {
    require_same_order(i, j, "mul");
    const auto& o = i.ring();
    const auto& a = i.lattice().basis();
    const auto& b = j.lattice().basis();
    IntMatrix rows(o.degree());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t s = 0; s < b.rows(); ++s) rows.append_row(o.multiply(a.row(r), b.row(s)));
    return FracIdeal::from_lattice_unchecked(i.order(), i.den() * j.den(), Lattice(rows));
}

FracIdeal sum(const FracIdeal& i, const FracIdeal& j) {
    require_same_order(i, j, "sum");
    auto [l, a, b] = common_scale(i, j);
    return FracIdeal::from_lattice_unchecked(i.order(), l, lattice_sum(a, b));
}

FracIdeal intersect(const FracIdeal& i, const FracIdeal& j) {
    require_same_order(i, j, "intersect");
    auto [l, a, b] = common_scale(i, j);
    return FracIdeal::from_lattice_unchecked(i.order(), l, lattice_intersect(a, b));
}

FracIdeal colon(const FracIdeal& i, const FracIdeal& j) {
    require_same_order(i, j, "colon");
    const auto& o = i.ring();
    const auto i_basis = i.basis();
    std::optional<FracIdeal> acc;
    for (const auto& beta : j.basis()) {
        // β^{-1}·i is spanned over Z by β^{-1} times a Z-basis of i.
        const FieldElem inv = o.inverse(beta);
        std::vector<FieldElem> rows;
        rows.reserve(i_basis.size());
        for (const auto& b : i_basis) rows.push_back(o.multiply(inv, b));
        FracIdeal part = FracIdeal::from_rational_rows(i.order(), rows);
        acc = acc ? intersect(*acc, part) : part;
    }
    return *acc;
}

FracIdeal inverse(const FracIdeal& i) { return colon(FracIdeal::unit(i.order()), i); }

FracIdeal v_closure(const FracIdeal& i) { return inverse(inverse(i)); }

FracIdeal t_closure_fg(const FracIdeal& i) { return v_closure(i); }

FracIdeal multiplier_ring(const FracIdeal& i) { return colon(i, i); }

bool is_invertible_over(const FracIdeal& i, const FracIdeal& base) {
    return mul(i, colon(base, i)) == base;
}

bool is_invertible(const FracIdeal& i) { return is_invertible_over(i, FracIdeal::unit(i.order())); }

FracIdeal v_closure_over(const FracIdeal& i, const FracIdeal& base) {
    return colon(base, colon(base, i));
}

FracIdeal extend(const FracIdeal& i, const FracIdeal& t) {
    require_same_order(i, t, "extend");
    if (!t.contains(FracIdeal::unit(t.order())) || !t.is_ring())
        throw std::invalid_argument("extend: target is not a ring containing the order");
    return mul(i, t);
}

std::optional<FracIdeal> maximal_order(const OrderPtr& order) {
    if (order->degree() != 2) return std::nullopt;
    const Int& c = order->min_poly()[0];
    const Int& b = order->min_poly()[1];
    const Int disc = b * b - 4 * c;
    // disc = f^2 · d0 with d0 a fundamental discriminant.
    Int core = disc < 0 ? Int(-1) : Int(1);
    Int square = 1;
    for (const auto& p : prime_divisors(disc)) {
        long v = valuation(disc, p);
        if (v % 2) core *= p;
        for (long k = 0; k < v / 2; ++k) square *= p;
    }
    Int d0 = core;
    Int f = square;
    if (mpz_fdiv_ui(core.get_mpz_t(), 4) != 1) {
        d0 = 4 * core;
        f = square / 2;  // disc ≡ 0 or 1 mod 4 forces 2 | square here
    }
    // ω = (d0 + sqrt(d0)) / 2 with sqrt(d0) = (2θ + b) / f.
    FieldElem omega{Rat(d0 * f + b, 2 * f), Rat(1, f)};
    omega[0].canonicalize();
    omega[1].canonicalize();
    return FracIdeal::from_gens(order, {order->one(), omega});
}

}  // namespace qstab::order
