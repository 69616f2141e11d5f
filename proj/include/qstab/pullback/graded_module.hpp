#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qstab/core/integer.hpp"

namespace qstab::pullback {

/// Raised when an operation would leave the representable family.
class NotRepresentable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Additive subgroup of Q of one of four kinds:
///   zero; full (all of Q); scaled q·Z; support q·{a/b : b square-free,
///   every prime factor of b at most P}, where P may be unbounded.
class CoeffGroup {
public:
    enum class Kind { zero, full, scaled, support };

    static CoeffGroup zero() { return CoeffGroup(Kind::zero, 0, std::nullopt); }
    static CoeffGroup full() { return CoeffGroup(Kind::full, 0, std::nullopt); }
    static CoeffGroup scaled(const Rat& q);
    /// Square-free denominators over primes <= bound; no bound means all primes.
    static CoeffGroup support(const Rat& q, std::optional<long> prime_bound);

    Kind kind() const { return kind_; }
    const Rat& scale() const { return q_; }
    const std::optional<long>& prime_bound() const { return bound_; }

    bool contains(const Rat& r) const;
    /// other ⊆ *this.
    bool contains(const CoeffGroup& other) const;

    /// A support group over finitely many primes is the cyclic group
    /// (q / primorial)·Z; this rewrites it that way.
    CoeffGroup canonical() const;

    std::string to_string() const;

    friend bool operator==(const CoeffGroup& a, const CoeffGroup& b);

private:
    CoeffGroup(Kind k, Rat q, std::optional<long> bound) : kind_(k), q_(std::move(q)), bound_(bound) {}

    Kind kind_;
    Rat q_;
    std::optional<long> bound_;
};

/// {c : c·h ⊆ g}.
CoeffGroup colon(const CoeffGroup& g, const CoeffGroup& h);
/// Subgroup generated by all products.
CoeffGroup product(const CoeffGroup& g, const CoeffGroup& h);

/// A Laurent polynomial with rational coefficients, lowest term at `low`.
struct RatPoly {
    int low = 0;
    std::vector<Rat> coeffs;

    static RatPoly monomial(const Rat& c, int degree) { return {degree, {c}}; }
    /// -1 for the zero polynomial.
    int degree() const;
    std::string to_string() const;
};

/// A graded submodule of Q[X, 1/X] over D = Z + X·Q[X].
///
/// Multiplying by X·Q[X] forces every degree above the lowest nonzero one
/// to be all of Q, so such a module is X^a·(G + X·Q[X]) for one degree a
/// and one nonzero group G. The degree bound N records how far
/// coefficients are listed; every degree above N is full.
class GradedModule {
public:
    GradedModule(int lowest_degree, CoeffGroup lowest_group, int degree_bound);

    /// Builds from the groups of consecutive degrees starting at first_degree
    /// and checks they describe a D-module.
    static GradedModule from_groups(int first_degree, const std::vector<CoeffGroup>& groups, int degree_bound);

    static GradedModule ring(int degree_bound) { return GradedModule(0, CoeffGroup::scaled(1), degree_bound); }
    /// c·X^k·D.
    static GradedModule principal(const Rat& c, int k, int degree_bound);

    int lowest_degree() const { return low_; }
    const CoeffGroup& lowest_group() const { return group_; }
    int degree_bound() const { return bound_; }
    CoeffGroup group(int degree) const;
    /// Groups of degrees min(0, lowest)..degree_bound.
    std::vector<CoeffGroup> groups() const;

    /// Throws std::out_of_range when elem has degree above the bound.
    bool contains(const RatPoly& elem) const;
    bool contains(const GradedModule& other) const;

    std::string to_string() const;

    friend bool operator==(const GradedModule& a, const GradedModule& b) {
        return a.low_ == b.low_ && a.group_ == b.group_;
    }

private:
    int low_;
    CoeffGroup group_;
    int bound_;
};

GradedModule mul(const GradedModule& m, const GradedModule& n);
/// (m : n) = {x : x·n ⊆ m}.
GradedModule colon(const GradedModule& m, const GradedModule& n);
/// (D : (D : m)).
GradedModule v_closure_model(const GradedModule& m);

}  // namespace qstab::pullback
