#include "qstab/order/monogenic_order.hpp"

#include <sstream>
#include <stdexcept>

#include "qstab/order/literal.hpp"

namespace qstab::order {

MonogenicOrder::MonogenicOrder(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.size() < 3) throw std::invalid_argument("minimal polynomial must have degree >= 2");
    if (coeffs_.back() != 1) throw std::invalid_argument("minimal polynomial must be monic");
    if (!is_irreducible_over_q(coeffs_))
        throw std::invalid_argument("minimal polynomial " + poly_to_string(coeffs_) + " is reducible over Q");

    const std::size_t n = degree();
    powers_.assign(2 * n - 1, std::vector<Int>(n));
    for (std::size_t k = 0; k < n; ++k) powers_[k][k] = 1;
    for (std::size_t k = n; k < 2 * n - 1; ++k) powers_[k] = times_theta(powers_[k - 1]);
}

std::shared_ptr<const MonogenicOrder> MonogenicOrder::parse(std::string_view poly) {
    return std::make_shared<const MonogenicOrder>(parse_polynomial(poly));
}

std::vector<Int> MonogenicOrder::times_theta(std::span<const Int> a) const {
    const std::size_t n = degree();
    // θ^n = -(c_0 + c_1 θ + ... + c_{n-1} θ^{n-1})
    std::vector<Int> out(n);
    const Int& top = a[n - 1];
    for (std::size_t k = n - 1; k > 0; --k) out[k] = a[k - 1] - top * coeffs_[k];
    out[0] = -top * coeffs_[0];
    return out;
}

std::vector<Int> MonogenicOrder::multiply(std::span<const Int> a, std::span<const Int> b) const {
    const std::size_t n = degree();
    std::vector<Int> conv(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (b[j] != 0) conv[i + j] += a[i] * b[j];
    }
    std::vector<Int> out(conv.begin(), conv.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t k = n; k < 2 * n - 1; ++k) {
        if (conv[k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) out[j] += conv[k] * powers_[k][j];
    }
    return out;
}

FieldElem MonogenicOrder::multiply(const FieldElem& a, const FieldElem& b) const {
    const Int da = common_denominator(a), db = common_denominator(b);
    std::vector<Int> ia, ib;
    for (const auto& x : a) ia.push_back(Rat(x * da).get_num());
    for (const auto& x : b) ib.push_back(Rat(x * db).get_num());
    auto prod = multiply(ia, ib);
    FieldElem out;
    const Int den = da * db;
    for (auto& x : prod) {
        Rat q(x, den);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

IntMatrix MonogenicOrder::multiplication_matrix(std::span<const Int> a) const {
    const std::size_t n = degree();
    IntMatrix m(n);
    std::vector<Int> cur(a.begin(), a.end());
    for (std::size_t j = 0; j < n; ++j) {
        m.append_row(cur);
        if (j + 1 < n) cur = times_theta(cur);
    }
    return m;
}

Int determinant(IntMatrix m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw RankMismatch("determinant of a non-square matrix");
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && m(s, k) == 0) ++s;
            if (s == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(s, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j));
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

Int MonogenicOrder::norm(std::span<const Int> a) const { return determinant(multiplication_matrix(a)); }

Rat MonogenicOrder::norm(const FieldElem& a) const {
    const Int d = common_denominator(a);
    std::vector<Int> ia;
    for (const auto& x : a) ia.push_back(Rat(x * d).get_num());
    Int dn = 1;
    for (std::size_t k = 0; k < degree(); ++k) dn *= d;
    Rat q(norm(ia), dn);
    q.canonicalize();
    return q;
}

FieldElem MonogenicOrder::inverse(const FieldElem& a) const {
    const std::size_t n = degree();
    const Int d = common_denominator(a);
    std::vector<Int> ia;
    for (const auto& x : a) ia.push_back(Rat(x * d).get_num());
    const IntMatrix m = multiplication_matrix(ia);
    // Want b with sum_j b_j * (row j of m) = 1, i.e. m^T b = e_0, then scale by d.
    std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m(j, i);
        aug[i][n] = (i == 0) ? 1 : 0;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && aug[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("inverse of zero field element");
        std::swap(aug[col], aug[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || aug[i][col] == 0) continue;
            Rat f = aug[i][col] / aug[col][col];
            for (std::size_t j = col; j <= n; ++j) aug[i][j] -= f * aug[col][j];
        }
    }
    FieldElem out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = aug[i][n] / aug[i][i] * d;
    return out;
}

Int MonogenicOrder::discriminant() const {
    const std::size_t n = degree();
    // Trace of θ^k is the trace of its multiplication matrix.
    std::vector<Int> traces(2 * n - 1);
    for (std::size_t k = 0; k < 2 * n - 1; ++k) {
        IntMatrix m = multiplication_matrix(powers_[k]);
        for (std::size_t i = 0; i < n; ++i) traces[k] += m(i, i);
    }
    IntMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(i, j) = traces[i + j];
    return determinant(t);
}

FieldElem MonogenicOrder::one() const {
    FieldElem e(degree());
    e[0] = 1;
    return e;
}

FieldElem MonogenicOrder::theta() const {
    FieldElem e(degree());
    e[1] = 1;
    return e;
}

std::string MonogenicOrder::to_string() const { return "Z[x]/(" + poly_to_string(coeffs_) + ")"; }

std::string poly_to_string(std::span<const Int> coeffs, char var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const Int& c = coeffs[k];
        if (c == 0) continue;
        Int mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? '-' : '+');
        }
        first = false;
        if (k == 0 || mag != 1) os << mag;
        if (k >= 1) os << var;
        if (k >= 2) os << '^' << k;
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace qstab::order
