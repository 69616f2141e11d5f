#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qstab/core/lattice.hpp"
#include "qstab/order/monogenic_order.hpp"

namespace qstab::order {

class OrderMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A fractional ideal (1/den)·L of a monogenic order, L a full-rank
/// θ-stable lattice on the power basis.
///
/// den is minimal: it shares no factor with the content of L. Together
/// with the canonical HNF of L this makes (den, L) unique, so equality of
/// ideals is equality of representations.
class FracIdeal {
public:
    static FracIdeal unit(OrderPtr order);
    static FracIdeal principal(OrderPtr order, const FieldElem& a);
    /// Smallest module over the order containing gens.
    static FracIdeal from_gens(OrderPtr order, const std::vector<FieldElem>& gens);
    /// (1/den)·lattice; throws unless the lattice is full rank and θ-stable.
    static FracIdeal from_lattice(OrderPtr order, Int den, const Lattice& lattice);

    const OrderPtr& order() const { return order_; }
    const MonogenicOrder& ring() const { return *order_; }
    const Int& den() const { return den_; }
    const Lattice& lattice() const { return lat_; }

    /// Z-basis of the ideal as field elements.
    std::vector<FieldElem> basis() const;

    bool contains(const FieldElem& x) const;
    /// Set inclusion: other ⊆ *this.
    bool contains(const FracIdeal& other) const;

    FracIdeal scaled(const Rat& c) const;
    FracIdeal scaled(const FieldElem& a) const;

    /// Covolume relative to Z[θ]: det(L) / den^n.
    Rat covolume() const;
    bool is_integral() const { return den_ == 1; }
    /// Contains 1 and is closed under multiplication.
    bool is_ring() const;

    std::string to_string() const;

    friend bool operator==(const FracIdeal& a, const FracIdeal& b) {
        return a.den_ == b.den_ && a.lat_ == b.lat_ && *a.order_ == *b.order_;
    }

private:
    FracIdeal(OrderPtr order, Int den, Lattice lat);
    static FracIdeal from_rational_rows(OrderPtr order, const std::vector<FieldElem>& rows);
    // For lattices already known to be θ-stable.
    static FracIdeal from_lattice_unchecked(OrderPtr order, Int den, Lattice lat) {
        return FracIdeal(std::move(order), std::move(den), std::move(lat));
    }
    friend FracIdeal mul(const FracIdeal&, const FracIdeal&);
    friend FracIdeal sum(const FracIdeal&, const FracIdeal&);
    friend FracIdeal intersect(const FracIdeal&, const FracIdeal&);
    friend FracIdeal colon(const FracIdeal&, const FracIdeal&);

    OrderPtr order_;
    Int den_;
    Lattice lat_;
};

FracIdeal mul(const FracIdeal& i, const FracIdeal& j);
FracIdeal sum(const FracIdeal& i, const FracIdeal& j);
FracIdeal intersect(const FracIdeal& i, const FracIdeal& j);
/// (i : j) = { x : x·j ⊆ i }, as the intersection of β^{-1}·i over a
/// Z-basis β of j.
FracIdeal colon(const FracIdeal& i, const FracIdeal& j);
FracIdeal inverse(const FracIdeal& i);
FracIdeal v_closure(const FracIdeal& i);
/// t-closure; every ideal here is finitely generated, so it equals v.
FracIdeal t_closure_fg(const FracIdeal& i);
FracIdeal multiplier_ring(const FracIdeal& i);

/// i·(base : i) = base.
bool is_invertible_over(const FracIdeal& i, const FracIdeal& base);
bool is_invertible(const FracIdeal& i);
/// (base : (base : i)), the divisorial closure relative to base.
FracIdeal v_closure_over(const FracIdeal& i, const FracIdeal& base);

/// i·t viewed as a t-module; throws unless t is a ring containing the order.
FracIdeal extend(const FracIdeal& i, const FracIdeal& t);

/// The maximal order, when the field is quadratic.
std::optional<FracIdeal> maximal_order(const OrderPtr& order);

}  // namespace qstab::order
