#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qstab/numsg/semigroup.hpp"

namespace qstab::numsg {

class SemigroupMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A relative ideal E of S: a nonempty subset of Z, bounded below, with
/// E + S ⊆ E. This is the monomial model of a fractional ideal of k[[t^S]].
///
/// Held by its minimum, its conductor (least c with every integer >= c in
/// E) and the membership of [min, conductor). Actual positions are kept so
/// that sums and differences of shifted ideals stay exact; normalized()
/// gives the representative with minimum 0.
class RelativeIdeal {
public:
    static RelativeIdeal unit(SemigroupPtr s);
    /// a + S.
    static RelativeIdeal principal(SemigroupPtr s, long a);
    /// gens + S; gens must be nonempty.
    static RelativeIdeal generated(SemigroupPtr s, const std::vector<long>& gens);
    /// {x in [lo, hi) : member(x)} ∪ [hi, ∞), or nothing if that set is
    /// empty or not closed under adding S.
    static std::optional<RelativeIdeal> from_predicate(SemigroupPtr s, long lo, long hi,
                                                       const std::function<bool(long)>& member);
    /// The naturals as a relative ideal of s.
    static RelativeIdeal naturals(SemigroupPtr s);

    const SemigroupPtr& semigroup() const { return s_; }
    long min() const { return min_; }
    long conductor() const { return conductor_; }
    bool contains(long x) const;
    /// other ⊆ *this.
    bool contains(const RelativeIdeal& other) const;

    RelativeIdeal shifted(long k) const;
    RelativeIdeal normalized() const { return shifted(-min_); }
    bool is_normalized() const { return min_ == 0; }

    /// Least set G with E = G + S.
    std::vector<long> minimal_generators() const;
    bool is_principal() const { return minimal_generators().size() == 1; }
    /// Contains 0 and is closed under addition.
    bool is_semigroup() const;

    /// Elements below the conductor, e.g. "{0,1,3}" followed by "+".
    std::string to_string() const;
    /// "{0,1}+S" style, on the minimal generators.
    std::string generator_string() const;

    friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
        return a.min_ == b.min_ && a.conductor_ == b.conductor_ && a.head_ == b.head_ && *a.s_ == *b.s_;
    }

private:
    RelativeIdeal(SemigroupPtr s, long min, long conductor, std::vector<bool> head)
        : s_(std::move(s)), min_(min), conductor_(conductor), head_(std::move(head)) {}
    static RelativeIdeal canonical(SemigroupPtr s, long lo, long hi, const std::function<bool(long)>& member);

    friend RelativeIdeal add(const RelativeIdeal&, const RelativeIdeal&);
    friend RelativeIdeal unite(const RelativeIdeal&, const RelativeIdeal&);
    friend RelativeIdeal intersect(const RelativeIdeal&, const RelativeIdeal&);
    friend RelativeIdeal subtract(const RelativeIdeal&, const RelativeIdeal&);

    SemigroupPtr s_;
    long min_ = 0;
    long conductor_ = 0;
    std::vector<bool> head_;
};

/// gens + S from "{0,1}+S", "{0,1}" or "0,1". Throws std::invalid_argument.
RelativeIdeal parse_relative_ideal(const SemigroupPtr& s, std::string text);

/// Minkowski sum {e + f}: the product of monomial ideals.
RelativeIdeal add(const RelativeIdeal& e, const RelativeIdeal& f);
/// Union: the sum of monomial ideals.
RelativeIdeal unite(const RelativeIdeal& e, const RelativeIdeal& f);
RelativeIdeal intersect(const RelativeIdeal& e, const RelativeIdeal& f);
/// E − F = {x : x + F ⊆ E}: the colon ideal.
RelativeIdeal subtract(const RelativeIdeal& e, const RelativeIdeal& f);

/// S − (S − E).
RelativeIdeal dual_v(const RelativeIdeal& e);
/// T − (T − E), the divisorial closure relative to T.
RelativeIdeal dual_over(const RelativeIdeal& e, const RelativeIdeal& t);
/// E − E.
RelativeIdeal multiplier(const RelativeIdeal& e);

/// E + (T − E) = T; throws unless t is a semigroup.
bool is_invertible_over(const RelativeIdeal& e, const RelativeIdeal& t);
bool is_invertible(const RelativeIdeal& e);
/// E is a shift of E − E.
bool is_stable(const RelativeIdeal& e);

/// (A ∩ B) + E == (A + E) ∩ (B + E).
bool flatness_criterion_holds(const RelativeIdeal& e, const RelativeIdeal& a, const RelativeIdeal& b);

struct Flat {};
struct NotFlat {
    std::vector<long> j_generators;
    RelativeIdeal j;
    RelativeIdeal colon_side;
    RelativeIdeal product_side;
    RelativeIdeal a;
    RelativeIdeal b;
};
struct Inconclusive {};
using FlatnessCertificate = std::variant<Flat, NotFlat, Inconclusive>;

/// Same search as for orders: invertible over t is Flat; otherwise J is
/// tried as t, pairs of generators of e and all of them, and a failure of
/// (E − J) = E + (t − J) is unwound into A = −g + t, B = −h + t.
FlatnessCertificate flatness_certificate(const RelativeIdeal& e, const RelativeIdeal& t);

}  // namespace qstab::numsg
