#include "qstab/pullback/graded_module.hpp"

#include <algorithm>
#include <sstream>

namespace qstab::pullback {

namespace {

Int primorial(long bound) {
    Int out = 1;
    for (long p = 2; p <= bound; ++p)
        if (is_prime(p)) out *= p;
    return out;
}

// Denominator square-free, with every prime factor at most bound when given.
bool square_free_support(const Rat& r, const std::optional<long>& bound) {
    const Int& den = r.get_den();
    if (den == 1) return true;
    for (const Int& p : prime_divisors(den)) {
        if (valuation(den, p) > 1) return false;
        if (bound && p > *bound) return false;
    }
    return true;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace

CoeffGroup CoeffGroup::scaled(const Rat& q) {
    if (q == 0) return zero();
    return CoeffGroup(Kind::scaled, abs(q), std::nullopt);
}

CoeffGroup CoeffGroup::support(const Rat& q, std::optional<long> prime_bound) {
    if (q == 0) return zero();
    if (prime_bound && *prime_bound < 1) throw std::invalid_argument("support group needs a positive prime bound");
    return CoeffGroup(Kind::support, abs(q), prime_bound);
}

CoeffGroup CoeffGroup::canonical() const {
    if (kind_ == Kind::support && bound_) return scaled(Rat(q_ / primorial(*bound_)));
    return *this;
}

bool operator==(const CoeffGroup& a, const CoeffGroup& b) {
    const CoeffGroup x = a.canonical(), y = b.canonical();
    if (x.kind_ != y.kind_) return false;
    if (x.kind_ == CoeffGroup::Kind::scaled || x.kind_ == CoeffGroup::Kind::support) return x.q_ == y.q_;
    return true;
}

bool CoeffGroup::contains(const Rat& r) const {
    switch (kind_) {
        case Kind::zero: return r == 0;
        case Kind::full: return true;
        case Kind::scaled: return is_integer(Rat(r / q_));
        case Kind::support: return square_free_support(Rat(r / q_), bound_);
    }
    return false;
}

bool CoeffGroup::contains(const CoeffGroup& other) const {
    const CoeffGroup g = canonical(), h = other.canonical();
    if (h.kind_ == Kind::zero) return true;
    if (g.kind_ == Kind::zero) return false;
    if (g.kind_ == Kind::full) return true;
    if (h.kind_ == Kind::full) return false;
    const Rat ratio = h.q_ / g.q_;
    if (h.kind_ == Kind::scaled) return g.kind_ == Kind::scaled ? is_integer(ratio) : square_free_support(ratio, {});
    // h is q·(all square-free denominators); no cyclic group holds it.
    return g.kind_ == Kind::support && is_integer(ratio);
}

std::string CoeffGroup::to_string() const {
    switch (kind_) {
        case Kind::zero: return "0";
        case Kind::full: return "Q";
        case Kind::scaled: return qstab::to_string(q_) + "Z";
        case Kind::support: {
            std::string s = "squarefree-denominators(" + (bound_ ? "p<=" + std::to_string(*bound_) : std::string("all p")) + ")";
            return q_ == 1 ? s : qstab::to_string(q_) + "*" + s;
        }
    }
    return "?";
}

CoeffGroup colon(const CoeffGroup& g0, const CoeffGroup& h0) {
    using K = CoeffGroup::Kind;
    const CoeffGroup g = g0.canonical(), h = h0.canonical();
    if (h.kind() == K::zero || g.kind() == K::full) return CoeffGroup::full();
    if (g.kind() == K::zero || h.kind() == K::full) return CoeffGroup::zero();
    const Rat ratio = g.scale() / h.scale();
    if (h.kind() == K::scaled)
        return g.kind() == K::scaled ? CoeffGroup::scaled(ratio) : CoeffGroup::support(ratio, std::nullopt);
    // c·h·Sup ⊆ g·Sup forces c·h/g integral; no nonzero c sends Sup into a cyclic group.
    return g.kind() == K::support ? CoeffGroup::scaled(ratio) : CoeffGroup::zero();
}

CoeffGroup product(const CoeffGroup& g0, const CoeffGroup& h0) {
    using K = CoeffGroup::Kind;
    const CoeffGroup g = g0.canonical(), h = h0.canonical();
    if (g.kind() == K::zero || h.kind() == K::zero) return CoeffGroup::zero();
    if (g.kind() == K::full || h.kind() == K::full) return CoeffGroup::full();
    const Rat q = g.scale() * h.scale();
    if (g.kind() == K::scaled && h.kind() == K::scaled) return CoeffGroup::scaled(q);
    if (g.kind() == K::support && h.kind() == K::support) return CoeffGroup::full();
    return CoeffGroup::support(q, std::nullopt);
}

int RatPoly::degree() const {
    for (std::size_t k = coeffs.size(); k-- > 0;)
        if (coeffs[k] != 0) return low + static_cast<int>(k);
    return -1;
}

std::string RatPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Rat& c = coeffs[k];
        if (c == 0) continue;
        const int d = low + static_cast<int>(k);
        if (!first) os << " + ";
        first = false;
        if (d == 0)
            os << qstab::to_string(c);
        else if (c == 1)
            ;
        else if (c == -1)
            os << '-';
        else if (c.get_den() == 1)
            os << c.get_num();
        else
            os << '(' << qstab::to_string(c) << ')';
        if (d == 1) os << 'X';
        if (d != 0 && d != 1) os << "X^" << d;
    }
    return first ? "0" : os.str();
}

GradedModule::GradedModule(int lowest_degree, CoeffGroup lowest_group, int degree_bound)
    : low_(lowest_degree), group_(lowest_group.canonical()), bound_(degree_bound) {
    if (group_.kind() == CoeffGroup::Kind::zero) throw std::invalid_argument("graded module: lowest group is zero");
    if (low_ > bound_) throw std::invalid_argument("graded module: lowest degree above the degree bound");
    // Keep the finite support form for display; equality goes through canonical().
    group_ = lowest_group;
}

GradedModule GradedModule::from_groups(int first_degree, const std::vector<CoeffGroup>& groups, int degree_bound) {
    std::size_t k = 0;
    while (k < groups.size() && groups[k].kind() == CoeffGroup::Kind::zero) ++k;
    if (k == groups.size()) throw std::invalid_argument("graded module: every listed degree is zero");
    for (std::size_t j = k + 1; j < groups.size(); ++j)
        if (groups[j].kind() != CoeffGroup::Kind::full)
            throw std::invalid_argument("graded module: not closed under X*Q[X] at degree " +
                                        std::to_string(first_degree + static_cast<int>(j)));
    return GradedModule(first_degree + static_cast<int>(k), groups[k], degree_bound);
}

GradedModule GradedModule::principal(const Rat& c, int k, int degree_bound) {
    return GradedModule(k, CoeffGroup::scaled(c), std::max(degree_bound, k));
}

CoeffGroup GradedModule::group(int degree) const {
    if (degree < low_) return CoeffGroup::zero();
    if (degree == low_) return group_;
    return CoeffGroup::full();
}

std::vector<CoeffGroup> GradedModule::groups() const {
    std::vector<CoeffGroup> out;
    for (int d = std::min(0, low_); d <= bound_; ++d) out.push_back(group(d));
    return out;
}

bool GradedModule::contains(const RatPoly& elem) const {
    if (elem.degree() > bound_)
        throw std::out_of_range("element of degree " + std::to_string(elem.degree()) + " exceeds the degree bound " +
                                std::to_string(bound_));
    for (std::size_t k = 0; k < elem.coeffs.size(); ++k)
        if (!group(elem.low + static_cast<int>(k)).contains(elem.coeffs[k])) return false;
    return true;
}

bool GradedModule::contains(const GradedModule& other) const {
    if (other.low_ < low_) return false;
    if (other.low_ > low_) return true;
    return group_.contains(other.group_);
}

std::string GradedModule::to_string() const {
    std::ostringstream os;
    os << "X^" << low_ << "*(" << group_.to_string() << " + X*Q[X])";
    return os.str();
}

GradedModule mul(const GradedModule& m, const GradedModule& n) {
    const int low = m.lowest_degree() + n.lowest_degree();
    return GradedModule(low, product(m.lowest_group(), n.lowest_group()),
                        std::max({m.degree_bound(), n.degree_bound(), low}));
}

GradedModule colon(const GradedModule& m, const GradedModule& n) {
    int low = m.lowest_degree() - n.lowest_degree();
    CoeffGroup g = colon(m.lowest_group(), n.lowest_group());
    if (g.kind() == CoeffGroup::Kind::zero) {
        ++low;
        g = CoeffGroup::full();
    }
    return GradedModule(low, g, std::max({m.degree_bound(), n.degree_bound(), low}));
}

GradedModule v_closure_model(const GradedModule& m) {
    const GradedModule d = GradedModule::ring(m.degree_bound());
    return colon(d, colon(d, m));
}

}  // namespace qstab::pullback
