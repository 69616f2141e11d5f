#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "qstab/core/integer.hpp"

namespace qstab {

class RankMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t cols = 1);
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Int> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Int> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::vector<Int> row_vector(std::size_t r) const;

    void append_row(std::span<const Int> r);
    void append_rows(const IntMatrix& other);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 1;
    std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Canonical row-style Hermite normal form of the row span of m.
///
/// Rows are in echelon form with strictly increasing pivot columns, every
/// pivot is positive and entries above a pivot lie in [0, pivot). Zero rows
/// are dropped, so the zero matrix maps to a matrix with no rows.
IntMatrix hnf(const IntMatrix& m);

/// A sublattice of Z^n held by its canonical HNF basis.
class Lattice {
public:
    /// The zero lattice in Z^n.
    explicit Lattice(std::size_t ambient_rank);
    /// Lattice spanned by the rows of generators.
    explicit Lattice(const IntMatrix& generators);

    static Lattice standard(std::size_t n);
    static Lattice scaled_standard(std::size_t n, const Int& c);

    std::size_t ambient_rank() const { return basis_.cols(); }
    std::size_t rank() const { return basis_.rows(); }
    bool is_full_rank() const { return rank() == ambient_rank(); }
    const IntMatrix& basis() const { return basis_; }

    /// |det| of the basis; the index in Z^n when full rank.
    Int determinant() const;
    /// gcd of all basis entries.
    Int content() const;

    bool contains(std::span<const Int> v) const;
    bool contains(const Lattice& other) const;

    Lattice scaled(const Int& c) const;
    /// Exact division of every basis entry; c must divide the content.
    Lattice divided(const Int& c) const;

    friend bool operator==(const Lattice&, const Lattice&) = default;

private:
    struct Canonical {};
    Lattice(IntMatrix basis, Canonical) : basis_(std::move(basis)) {}

    IntMatrix basis_;
};

Lattice lattice_sum(const Lattice& a, const Lattice& b);

/// Set intersection, obtained from the integer kernel of the stacked bases.
Lattice lattice_intersect(const Lattice& a, const Lattice& b);

std::ostream& operator<<(std::ostream& os, const Lattice& l);

}  // namespace qstab
