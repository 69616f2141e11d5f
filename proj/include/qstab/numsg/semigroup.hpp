#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qstab::numsg {

/// A numerical semigroup: an additively closed subset of the naturals
/// containing 0 with finite complement.
class NumericalSemigroup {
public:
    /// Semigroup generated by gens; they must be positive with gcd 1.
    explicit NumericalSemigroup(std::vector<long> gens);
    /// Semigroup whose complement in the naturals is exactly gaps.
    static NumericalSemigroup from_gaps(std::vector<long> gaps);
    /// The naturals themselves.
    static NumericalSemigroup naturals() { return NumericalSemigroup({1}); }

    bool contains(long x) const;
    const std::vector<long>& minimal_generators() const { return min_gens_; }
    const std::vector<long>& gaps() const { return gaps_; }
    long genus() const { return static_cast<long>(gaps_.size()); }
    /// Largest gap, -1 for the naturals.
    long frobenius() const { return conductor_ - 1; }
    long conductor() const { return conductor_; }
    long multiplicity() const { return min_gens_.front(); }

    /// "<3,4,5>".
    std::string to_string() const;

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.gaps_ == b.gaps_;
    }

private:
    NumericalSemigroup() = default;
    void finish(std::vector<bool> member);

    std::vector<long> min_gens_;
    std::vector<long> gaps_;
    long conductor_ = 0;
    // Membership of 0 .. conductor_-1.
    std::vector<bool> head_;
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

SemigroupPtr make_semigroup(std::vector<long> gens);

/// Parses "3,4,5".
SemigroupPtr parse_semigroup(const std::string& text);

/// Every numerical semigroup of genus <= max_genus, by walking the tree in
/// which a child removes one minimal generator larger than the Frobenius
/// number. Ordered by genus, then by discovery.
std::vector<NumericalSemigroup> enumerate_semigroups(long max_genus);

}  // namespace qstab::numsg
