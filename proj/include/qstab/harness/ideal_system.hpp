#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nlohmann/json.hpp"
#include "qstab/order/stability.hpp"

namespace qstab::harness {

using Json = nlohmann::ordered_json;
using Rng = std::mt19937_64;
using order::Tri;

/// Uniform-ish integer in [lo, hi] by reduction modulo the range. Used
/// instead of std::uniform_int_distribution, whose output is not fixed
/// across standard library implementations.
inline long draw(Rng& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct Verdict {
    bool invertible = false;
    bool divisorial = false;
    bool stable = false;
    Tri strongly_stable = Tri::unknown;
    bool quasi_stable = false;
};

template <class Ideal>
struct FlatnessOutcome {
    enum class Kind { flat, not_flat, inconclusive };
    Kind kind = Kind::inconclusive;
    /// For not_flat: (A ∩ B)·I != A·I ∩ B·I.
    std::optional<std::pair<Ideal, Ideal>> witness;
};

/// The operations a backend offers to the theorem checks. Every operation
/// is exact and equality is equality of canonical forms.
template <class Ideal>
class IdealSystem {
public:
    using ideal_type = Ideal;

    virtual ~IdealSystem() = default;

    /// "order:x^2+3", "numsg:3,4,5".
    virtual std::string name() const = 0;

    virtual Ideal unit() const = 0;
    virtual Ideal mul(const Ideal& a, const Ideal& b) const = 0;
    virtual Ideal sum(const Ideal& a, const Ideal& b) const = 0;
    virtual Ideal intersect(const Ideal& a, const Ideal& b) const = 0;
    virtual Ideal colon(const Ideal& a, const Ideal& b) const = 0;

    virtual Ideal inverse(const Ideal& i) const { return colon(unit(), i); }
    virtual Ideal v_closure(const Ideal& i) const { return colon(unit(), colon(unit(), i)); }
    virtual Ideal v_closure_over(const Ideal& i, const Ideal& base) const { return colon(base, colon(base, i)); }
    virtual Ideal multiplier_ring(const Ideal& i) const { return colon(i, i); }
    virtual bool is_invertible_over(const Ideal& i, const Ideal& base) const {
        return mul(i, colon(base, i)) == base;
    }
    bool is_invertible(const Ideal& i) const { return is_invertible_over(i, unit()); }
    /// i·t as an ideal of the overring t.
    virtual Ideal extend(const Ideal& i, const Ideal& t) const { return mul(i, t); }

    virtual Ideal sample(Rng& rng) const = 0;
    virtual Ideal sample_invertible(Rng& rng) const = 0;
    /// Every ideal up to equivalence when the backend is exhaustively enumerable.
    virtual std::optional<std::vector<Ideal>> enumerate() const { return std::nullopt; }
    /// Overrings of D used for transfer checks, D itself included.
    virtual std::vector<Ideal> overrings(const Ideal& i) const = 0;

    virtual FlatnessOutcome<Ideal> flatness_certificate(const Ideal& i, const Ideal& base) const = 0;
    virtual Verdict classify(const Ideal& i) const = 0;

    virtual bool supports_localization() const { return false; }
    /// (prime, localize_check result) for the primes relevant to i.
    virtual std::vector<std::pair<long, bool>> localize(const Ideal&) const { return {}; }

    virtual Json describe(const Ideal& i) const = 0;
};

}  // namespace qstab::harness
