#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qstab/core/integer.hpp"
#include "qstab/core/lattice.hpp"

namespace qstab::order {

/// Element of the number field as rational coordinates on the power basis.
using FieldElem = std::vector<Rat>;

/// The order Z[θ] for θ a root of a monic irreducible integer polynomial.
///
/// Elements are coordinate vectors on 1, θ, ..., θ^(n-1). The powers
/// θ^0 .. θ^(2n-2) are tabulated on that basis so a product costs one
/// convolution plus a table lookup per high coefficient.
class MonogenicOrder {
public:
    /// coeffs are low to high and must describe a monic polynomial of
    /// degree >= 2 that is irreducible over Q.
    explicit MonogenicOrder(std::vector<Int> coeffs);

    /// Parses e.g. "x^2+3" or "x^3 - 2".
    static std::shared_ptr<const MonogenicOrder> parse(std::string_view poly);

    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<Int>& min_poly() const { return coeffs_; }
    /// θ^k on the power basis, 0 <= k <= 2n-2.
    const std::vector<Int>& power(std::size_t k) const { return powers_.at(k); }

    std::vector<Int> multiply(std::span<const Int> a, std::span<const Int> b) const;
    FieldElem multiply(const FieldElem& a, const FieldElem& b) const;
    std::vector<Int> times_theta(std::span<const Int> a) const;

    /// Rows a, aθ, ..., aθ^(n-1): the matrix of multiplication by a.
    IntMatrix multiplication_matrix(std::span<const Int> a) const;
    Int norm(std::span<const Int> a) const;
    Rat norm(const FieldElem& a) const;
    FieldElem inverse(const FieldElem& a) const;

    /// Discriminant of the minimal polynomial (= disc of Z[θ]).
    Int discriminant() const;

    FieldElem one() const;
    FieldElem theta() const;

    std::string to_string() const;

    friend bool operator==(const MonogenicOrder& a, const MonogenicOrder& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Int> coeffs_;
    std::vector<std::vector<Int>> powers_;
};

using OrderPtr = std::shared_ptr<const MonogenicOrder>;

/// Polynomial over Z, low to high, in the variable x.
std::string poly_to_string(std::span<const Int> coeffs, char var = 'x');

/// Integer determinant by fraction-free elimination.
Int determinant(IntMatrix m);

/// Irreducibility guard for a monic integer polynomial (low to high).
///
/// Rejects rational roots and repeated factors, then intersects the
/// factor-degree patterns of several square-free reductions mod p. Returns
/// true when the patterns leave no room for a proper factor; false when a
/// factor was proven; throws when neither could be established.
bool is_irreducible_over_q(const std::vector<Int>& coeffs);

}  // namespace qstab::order
