#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qstab/order/frac_ideal.hpp"

namespace qstab::order {

enum class Tri { no, yes, unknown };

std::string to_string(Tri t);

struct StabilityVerdict {
    bool invertible = false;
    bool divisorial = false;
    bool stable = false;
    Tri strongly_stable = Tri::unknown;
    bool quasi_stable = false;
    FracIdeal multiplier_ring;
};

struct ClassifyOptions {
    /// Coordinate height for the generator search outside imaginary
    /// quadratic orders. Quadratic orders solve for the second coordinate,
    /// so the cost is linear in the height there.
    long search_height = 1000;
    /// Box height used in degree >= 3, where the search is a full box.
    long search_height_higher_degree = 6;
};

/// Looks for α with α·t = i among elements of i whose norm matches the
/// index of i in t. `complete` is set when a failed search proves that no
/// generator exists (imaginary quadratic orders, or a non-integral index).
struct GeneratorSearch {
    std::optional<FieldElem> generator;
    bool complete = false;
};
GeneratorSearch find_generator(const FracIdeal& i, const FracIdeal& t, const ClassifyOptions& opts = {});

StabilityVerdict classify(const FracIdeal& i, const ClassifyOptions& opts = {});

/// (A ∩ B)·i == A·i ∩ B·i.
bool flatness_criterion_holds(const FracIdeal& i, const FracIdeal& a, const FracIdeal& b);

struct Flat {};

struct NotFlat {
    /// Finitely generated J with (i : J) != i·(base : J).
    std::vector<FieldElem> j_generators;
    FracIdeal j;
    FracIdeal colon_side;
    FracIdeal product_side;
    /// A pair with (A ∩ B)·i != A·i ∩ B·i.
    FracIdeal a;
    FracIdeal b;
};

struct Inconclusive {};

using FlatnessCertificate = std::variant<Flat, NotFlat, Inconclusive>;

/// Decides flatness of i over the ring `over` (which must contain 1 and
/// act on i). Invertible ideals are certified flat; otherwise ideals J
/// generated by `over`, by pairs of generators of i and by all of them are
/// searched for a failure of (i : J) = i·J^{-1}, and the failure is
/// unwound into a pair (A, B) violating the intersection criterion.
/// `gens` defaults to the Z-basis of i.
FlatnessCertificate flatness_certificate(const FracIdeal& i, const FracIdeal& over,
                                         const std::vector<FieldElem>& gens = {});

/// {x ∈ (1/den)·Z[θ] : u·x ∈ i for some integer u coprime to p}; it agrees
/// with i at p and is a representative of the localization i_p.
FracIdeal saturate(const FracIdeal& i, const Int& p);

/// i and j agree after inverting every integer coprime to p.
bool locally_equal(const FracIdeal& i, const FracIdeal& j, const Int& p);

/// (i : i) localized at p equals (i_p : i_p). Throws unless p is prime.
bool localize_check(const FracIdeal& i, const Int& p);

}  // namespace qstab::order
