#include "qstab/core/lattice.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace qstab {

IntMatrix::IntMatrix(std::size_t cols) : cols_(cols) {
    if (cols == 0) throw std::invalid_argument("IntMatrix needs at least one column");
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (cols == 0) throw std::invalid_argument("IntMatrix needs at least one column");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_rows: no rows, column count unknown");
    IntMatrix m(rows.front().size());
    for (const auto& r : rows) m.append_row(r);
    return m;
}

std::vector<Int> IntMatrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
}

void IntMatrix::append_row(std::span<const Int> r) {
    if (r.size() != cols_) throw RankMismatch("append_row: width mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

void IntMatrix::append_rows(const IntMatrix& other) {
    if (other.cols_ != cols_) throw RankMismatch("append_rows: width mismatch");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw RankMismatch("matrix product: inner dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", (" : "(");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
        os << ')';
    }
    return os << ']';
}

namespace {

// rows[dst] -= q * rows[src]
void sub_mul_row(std::vector<std::vector<Int>>& rows, std::size_t dst, std::size_t src,
                 const Int& q, std::size_t from_col) {
    auto& d = rows[dst];
    const auto& s = rows[src];
    for (std::size_t c = from_col; c < d.size(); ++c)
        if (s[c] != 0) d[c] -= q * s[c];
}

}  // namespace

IntMatrix hnf(const IntMatrix& m) {
    const std::size_t cols = m.cols();
    std::vector<std::vector<Int>> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto r = m.row_vector(i);
        if (std::any_of(r.begin(), r.end(), [](const Int& x) { return x != 0; }))
            rows.push_back(std::move(r));
    }

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        // Euclid on column entries: repeatedly take the smallest nonzero
        // entry as pivot and reduce the others modulo it.
        bool found = false;
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = pivot_row; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
            }
            if (best == rows.size()) break;
            found = true;
            std::swap(rows[pivot_row], rows[best]);
            bool clean = true;
            for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = floor_div(rows[i][col], rows[pivot_row][col]);
                sub_mul_row(rows, i, pivot_row, q, col);
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (!found) continue;

        auto& p = rows[pivot_row];
        if (p[col] < 0)
            for (std::size_t c = col; c < cols; ++c) p[c] = -p[c];
        for (std::size_t i = 0; i < pivot_row; ++i) {
            if (rows[i][col] == 0) continue;
            Int q = floor_div(rows[i][col], p[col]);
            if (q != 0) sub_mul_row(rows, i, pivot_row, q, col);
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);

    IntMatrix out(cols);
    for (const auto& r : rows) out.append_row(r);
    return out;
}

Lattice::Lattice(std::size_t ambient_rank) : basis_(ambient_rank) {}

Lattice::Lattice(const IntMatrix& generators) : basis_(hnf(generators)) {}

Lattice Lattice::standard(std::size_t n) { return Lattice(IntMatrix::identity(n), Canonical{}); }

Lattice Lattice::scaled_standard(std::size_t n, const Int& c) {
    return standard(n).scaled(c);
}

Int Lattice::determinant() const {
    Int d = 1;
    std::size_t c = 0;
    for (std::size_t r = 0; r < rank(); ++r) {
        while (basis_(r, c) == 0) ++c;
        d *= basis_(r, c);
    }
    return d;
}

Int Lattice::content() const {
    Int g = 0;
    for (std::size_t r = 0; r < rank(); ++r)
        for (const auto& x : basis_.row(r)) g = gcd(g, x);
    return g;
}

bool Lattice::contains(std::span<const Int> v) const {
    if (v.size() != ambient_rank()) throw RankMismatch("contains: vector width mismatch");
    std::vector<Int> w(v.begin(), v.end());
    std::size_t c = 0;
    for (std::size_t r = 0; r < rank(); ++r) {
        while (basis_(r, c) == 0) ++c;
        for (std::size_t k = 0; k < c; ++k)
            if (w[k] != 0) return false;
        const Int& piv = basis_(r, c);
        if (!mpz_divisible_p(w[c].get_mpz_t(), piv.get_mpz_t())) return false;
        Int q = w[c] / piv;
        if (q != 0)
            for (std::size_t k = c; k < w.size(); ++k) w[k] -= q * basis_(r, k);
    }
    return std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
}

bool Lattice::contains(const Lattice& other) const {
    if (other.ambient_rank() != ambient_rank()) throw RankMismatch("contains: ambient rank mismatch");
    for (std::size_t r = 0; r < other.rank(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

Lattice Lattice::scaled(const Int& c) const {
    if (c == 0) return Lattice(ambient_rank());
    IntMatrix b = basis_;
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (auto& x : b.row(r)) x *= c;
    // Scaling by a positive integer keeps the HNF conditions.
    if (c > 0) return Lattice(std::move(b), Canonical{});
    return Lattice(b);
}

Lattice Lattice::divided(const Int& c) const {
    if (c <= 0) throw std::invalid_argument("divided: divisor must be positive");
    IntMatrix b = basis_;
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (auto& x : b.row(r)) {
            if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
                throw std::invalid_argument("divided: divisor does not divide the content");
            x /= c;
        }
    return Lattice(std::move(b), Canonical{});
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    if (a.ambient_rank() != b.ambient_rank()) throw RankMismatch("lattice_sum: ambient rank mismatch");
    IntMatrix g = a.basis();
    g.append_rows(b.basis());
    return Lattice(g);
}

Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
    const std::size_t n = a.ambient_rank();
    if (b.ambient_rank() != n) throw RankMismatch("lattice_intersect: ambient rank mismatch");
    // Rows (x, x) for x in a and (y, 0) for y in b. A row with zero left
    // half is (x + y, x) with x = -y, so its right half lies in a ∩ b, and
    // the echelon rows with pivot in the right half span exactly those.
    IntMatrix stacked(2 * n);
    std::vector<Int> row(2 * n);
    for (std::size_t r = 0; r < a.rank(); ++r) {
        for (std::size_t c = 0; c < n; ++c) row[c] = row[n + c] = a.basis()(r, c);
        stacked.append_row(row);
    }
    for (std::size_t r = 0; r < b.rank(); ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            row[c] = b.basis()(r, c);
            row[n + c] = 0;
        }
        stacked.append_row(row);
    }
    IntMatrix h = hnf(stacked);
    IntMatrix kernel(n);
    for (std::size_t r = 0; r < h.rows(); ++r) {
        auto full = h.row(r);
        if (std::all_of(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(n),
                        [](const Int& x) { return x == 0; }))
            kernel.append_row(full.subspan(n));
    }
    return Lattice(kernel);
}

std::ostream& operator<<(std::ostream& os, const Lattice& l) { return os << l.basis(); }

}  // namespace qstab
