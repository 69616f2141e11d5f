#include "qstab/numsg/relative_ideal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qstab::numsg {

namespace {

void require_same(const RelativeIdeal& a, const RelativeIdeal& b, const char* op) {
    if (a.semigroup() != b.semigroup() && !(*a.semigroup() == *b.semigroup()))
        throw SemigroupMismatch(std::string(op) + ": ideals of different semigroups");
}

}  // namespace

RelativeIdeal RelativeIdeal::canonical(SemigroupPtr s, long lo, long hi, const std::function<bool(long)>& member) {
    hi = std::max(hi, lo);
    long c = hi;
    while (c > lo && member(c - 1)) --c;
    long m = lo;
    while (m < c && !member(m)) ++m;
    std::vector<bool> head;
    head.reserve(static_cast<std::size_t>(c - m));
    for (long x = m; x < c; ++x) head.push_back(member(x));
    return RelativeIdeal(std::move(s), m, c, std::move(head));
}

RelativeIdeal RelativeIdeal::unit(SemigroupPtr s) { return principal(std::move(s), 0); }

RelativeIdeal RelativeIdeal::principal(SemigroupPtr s, long a) { return generated(std::move(s), {a}); }

RelativeIdeal RelativeIdeal::generated(SemigroupPtr s, const std::vector<long>& gens) {
    if (gens.empty()) throw std::invalid_argument("relative ideal needs at least one generator");
    const long lo = *std::min_element(gens.begin(), gens.end());
    const long hi = *std::max_element(gens.begin(), gens.end()) + s->conductor();
    const NumericalSemigroup& sg = *s;
    return canonical(std::move(s), lo, hi, [&](long x) {
        for (long g : gens)
            if (sg.contains(x - g)) return true;
        return false;
    });
}

std::optional<RelativeIdeal> RelativeIdeal::from_predicate(SemigroupPtr s, long lo, long hi,
                                                           const std::function<bool(long)>& member) {
    RelativeIdeal e = canonical(std::move(s), lo, hi, [&](long x) { return x >= hi || member(x); });
    const NumericalSemigroup& sg = *e.s_;
    for (long x = e.min_; x < e.conductor_; ++x) {
        if (!e.contains(x)) continue;
        for (long t = 1; x + t < e.conductor_; ++t)
            if (sg.contains(t) && !e.contains(x + t)) return std::nullopt;
    }
    return e;
}

RelativeIdeal RelativeIdeal::naturals(SemigroupPtr s) { return RelativeIdeal(std::move(s), 0, 0, {}); }

bool RelativeIdeal::contains(long x) const {
    if (x < min_) return false;
    if (x >= conductor_) return true;
    return head_[static_cast<std::size_t>(x - min_)];
}

bool RelativeIdeal::contains(const RelativeIdeal& other) const {
    const long hi = std::max(conductor_, other.conductor_);
    for (long x = other.min_; x < hi; ++x)
        if (other.contains(x) && !contains(x)) return false;
    return true;
}

RelativeIdeal RelativeIdeal::shifted(long k) const { return RelativeIdeal(s_, min_ + k, conductor_ + k, head_); }

std::vector<long> RelativeIdeal::minimal_generators() const {
    std::vector<long> out;
    const long m = s_->multiplicity();
    for (long e = min_; e < conductor_ + m; ++e) {
        if (!contains(e)) continue;
        bool reachable = false;
        for (long t = 1; e - t >= min_ && !reachable; ++t) reachable = s_->contains(t) && contains(e - t);
        if (!reachable) out.push_back(e);
    }
    return out;
}

bool RelativeIdeal::is_semigroup() const {
    if (min_ != 0) return false;
    for (long a = 0; a < conductor_; ++a) {
        if (!contains(a)) continue;
        for (long b = a; a + b < conductor_; ++b)
            if (contains(b) && !contains(a + b)) return false;
    }
    return true;
}

std::string RelativeIdeal::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (long x = min_; x < conductor_; ++x) {
        if (!contains(x)) continue;
        os << (first ? "" : ",") << x;
        first = false;
    }
    os << (first ? "" : ",") << conductor_ << ",...}";
    return os.str();
}

std::string RelativeIdeal::generator_string() const {
    std::ostringstream os;
    os << '{';
    auto g = minimal_generators();
    for (std::size_t k = 0; k < g.size(); ++k) os << (k ? "," : "") << g[k];
    os << "}+S";
    return os.str();
}

RelativeIdeal parse_relative_ideal(const SemigroupPtr& s, std::string text) {
    const std::string original = text;
    std::erase_if(text, [](unsigned char c) { return std::isspace(c); });
    if (text.size() >= 2 && text.substr(text.size() - 2) == "+S") text.resize(text.size() - 2);
    if (text.size() >= 2 && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
    std::vector<long> gens;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        try {
            gens.push_back(std::stol(item, &used));
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw std::invalid_argument("bad relative ideal \"" + original + "\"");
    }
    if (gens.empty()) throw std::invalid_argument("bad relative ideal \"" + original + "\"");
    return RelativeIdeal::generated(s, gens);
}

RelativeIdeal add(const RelativeIdeal& e, const RelativeIdeal& f) {
    require_same(e, f, "add");
    const long lo = e.min_ + f.min_;
    const long hi = std::min(e.conductor_ + f.min_, f.conductor_ + e.min_);
    return RelativeIdeal::canonical(e.s_, lo, hi, [&](long x) {
        for (long a = e.min_; a <= x - f.min_; ++a)
            if (e.contains(a) && f.contains(x - a)) return true;
        return false;
    });
}

RelativeIdeal unite(const RelativeIdeal& e, const RelativeIdeal& f) {
    require_same(e, f, "unite");
    return RelativeIdeal::canonical(e.s_, std::min(e.min_, f.min_), std::min(e.conductor_, f.conductor_),
                                    [&](long x) { return e.contains(x) || f.contains(x); });
}

RelativeIdeal intersect(const RelativeIdeal& e, const RelativeIdeal& f) {
    require_same(e, f, "intersect");
    return RelativeIdeal::canonical(e.s_, std::max(e.min_, f.min_), std::max(e.conductor_, f.conductor_),
                                    [&](long x) { return e.contains(x) && f.contains(x); });
}

RelativeIdeal subtract(const RelativeIdeal& e, const RelativeIdeal& f) {
    require_same(e, f, "subtract");
    // x + min(F) ∈ E forces x >= min(E) − min(F); x + min(F) >= cond(E)
    // puts all of x + F inside the tail of E.
    const long lo = e.min_ - f.min_;
    const long hi = e.conductor_ - f.min_;
    return RelativeIdeal::canonical(e.s_, lo, hi, [&](long x) {
        for (long y = f.min_; y < e.conductor_ - x; ++y)
            if (f.contains(y) && !e.contains(x + y)) return false;
        return true;
    });
}

RelativeIdeal dual_v(const RelativeIdeal& e) { return dual_over(e, RelativeIdeal::unit(e.semigroup())); }

RelativeIdeal dual_over(const RelativeIdeal& e, const RelativeIdeal& t) { return subtract(t, subtract(t, e)); }

RelativeIdeal multiplier(const RelativeIdeal& e) { return subtract(e, e); }

bool is_invertible_over(const RelativeIdeal& e, const RelativeIdeal& t) {
    if (!t.is_semigroup()) throw std::invalid_argument("is_invertible_over: base is not closed under addition");
    return add(e, subtract(t, e)) == t;
}

bool is_invertible(const RelativeIdeal& e) { return is_invertible_over(e, RelativeIdeal::unit(e.semigroup())); }

bool is_stable(const RelativeIdeal& e) { return e.normalized() == multiplier(e); }

bool flatness_criterion_holds(const RelativeIdeal& e, const RelativeIdeal& a, const RelativeIdeal& b) {
    return add(intersect(a, b), e) == intersect(add(a, e), add(b, e));
}

FlatnessCertificate flatness_certificate(const RelativeIdeal& e, const RelativeIdeal& t) {
    if (!t.is_semigroup()) throw std::invalid_argument("flatness_certificate: base is not closed under addition");
    if (!(add(e, t) == e)) throw std::invalid_argument("flatness_certificate: ideal is not a module over the base");
    if (is_invertible_over(e, t)) return Flat{};

    const auto g = e.minimal_generators();
    std::vector<std::vector<long>> candidates{{0}};
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b) candidates.push_back({g[a], g[b]});
    candidates.push_back(g);

    for (const auto& cand : candidates) {
        RelativeIdeal j = add(RelativeIdeal::generated(e.semigroup(), cand), t);
        RelativeIdeal lhs = subtract(e, j);
        RelativeIdeal rhs = add(e, subtract(t, j));
        if (lhs == rhs) continue;
        RelativeIdeal acc = t.shifted(-cand.front());
        for (std::size_t k = 1; k < cand.size(); ++k) {
            RelativeIdeal b = t.shifted(-cand[k]);
            if (!flatness_criterion_holds(e, acc, b)) return NotFlat{cand, j, lhs, rhs, acc, b};
            acc = intersect(acc, b);
        }
    }
    return Inconclusive{};
}

}  // namespace qstab::numsg
