#include "qstab/harness/order_system.hpp"

#include <algorithm>
#include <set>

#include "qstab/order/literal.hpp"

namespace qstab::harness {

namespace {

Json int_json(const Int& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

}  // namespace

OrderSystem::OrderSystem(order::OrderPtr order, long height, order::ClassifyOptions classify_opts)
    : order_(std::move(order)),
      unit_(Ideal::unit(order_)),
      maximal_(order::maximal_order(order_)),
      height_(height),
      classify_opts_(classify_opts) {}

std::string OrderSystem::name() const { return "order:" + order::poly_to_string(order_->min_poly()); }

order::FieldElem OrderSystem::random_element(Rng& rng) const {
    const std::size_t n = order_->degree();
    order::FieldElem x(n);
    for (;;) {
        long den = draw(rng, 0, 3) == 0 ? draw(rng, 2, 3) : 1;
        bool zero = true;
        for (auto& c : x) {
            c = Rat(draw(rng, -height_, height_), den);
            c.canonicalize();
            zero = zero && c == 0;
        }
        if (!zero) return x;
    }
}

OrderSystem::Ideal OrderSystem::sample(Rng& rng) const {
    std::vector<order::FieldElem> gens;
    const long count = draw(rng, 2, 3);
    for (long k = 0; k < count; ++k) gens.push_back(random_element(rng));
    Ideal i = Ideal::from_gens(order_, gens);
    if (draw(rng, 0, 2) == 0) {
        Rat c(draw(rng, 1, 5), draw(rng, 1, 5));
        c.canonicalize();
        i = i.scaled(c);
    }
    return i;
}

OrderSystem::Ideal OrderSystem::sample_invertible(Rng& rng) const {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Ideal i = sample(rng);
        if (order::is_invertible(i)) return i;
    }
    return Ideal::principal(order_, random_element(rng));
}

std::vector<OrderSystem::Ideal> OrderSystem::overrings(const Ideal& i) const {
    std::vector<Ideal> out{unit_};
    auto add = [&](const Ideal& t) {
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    };
    add(order::multiplier_ring(i));
    if (maximal_) add(*maximal_);
    return out;
}

FlatnessOutcome<OrderSystem::Ideal> OrderSystem::flatness_certificate(const Ideal& i, const Ideal& base) const {
    using Kind = FlatnessOutcome<Ideal>::Kind;
    auto cert = order::flatness_certificate(i, base);
    FlatnessOutcome<Ideal> out;
    if (std::holds_alternative<order::Flat>(cert)) {
        out.kind = Kind::flat;
    } else if (auto* nf = std::get_if<order::NotFlat>(&cert)) {
        out.kind = Kind::not_flat;
        out.witness.emplace(nf->a, nf->b);
    }
    return out;
}

Verdict OrderSystem::classify(const Ideal& i) const {
    const auto v = order::classify(i, classify_opts_);
    return {v.invertible, v.divisorial, v.stable, v.strongly_stable, v.quasi_stable};
}

std::vector<std::pair<long, bool>> OrderSystem::localize(const Ideal& i) const {
    std::set<Int> primes{2, 3, 5, 7};
    for (const Int& p : prime_divisors(order_->discriminant())) primes.insert(p);
    const Rat cov = i.covolume();
    if (cov.get_num() != 1)
        for (const Int& p : prime_divisors(cov.get_num())) primes.insert(p);
    if (cov.get_den() != 1)
        for (const Int& p : prime_divisors(cov.get_den())) primes.insert(p);
    std::vector<std::pair<long, bool>> out;
    for (const Int& p : primes) out.emplace_back(p.get_si(), order::localize_check(i, p));
    return out;
}

Json OrderSystem::describe(const Ideal& i) const {
    Json basis = Json::array();
    const auto& b = i.lattice().basis();
    for (std::size_t r = 0; r < b.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < b.cols(); ++c) row.push_back(int_json(b(r, c)));
        basis.push_back(row);
    }
    return {{"literal", order::ideal_to_literal(i)}, {"den", int_json(i.den())}, {"basis", basis}};
}

}  // namespace qstab::harness
