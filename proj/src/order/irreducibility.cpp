#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "qstab/order/monogenic_order.hpp"

namespace qstab::order {

namespace {

using Poly = std::vector<std::int64_t>;  // mod p, low to high, trimmed

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::int64_t mod(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t r = 1, e = p - 2, b = mod(a, p);
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

Poly sub(Poly a, const Poly& b, std::int64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
    trim(a);
    return a;
}

Poly mul(const Poly& a, const Poly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return c;
}

// Returns (quotient, remainder).
std::pair<Poly, Poly> divmod(Poly a, const Poly& b, std::int64_t p) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    Poly q(a.size() - b.size() + 1, 0);
    const std::int64_t lead_inv = inv_mod(b.back(), p);
    for (std::size_t k = a.size(); k-- >= b.size();) {
        std::int64_t c = a[k] * lead_inv % p;
        q[k - (b.size() - 1)] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[k - (b.size() - 1) + j] = mod(a[k - (b.size() - 1) + j] - c * b[j], p);
        if (k == 0) break;
    }
    trim(a);
    trim(q);
    return {q, a};
}

Poly gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::int64_t inv = inv_mod(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

Poly derivative(const Poly& f, std::int64_t p) {
    Poly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mod(static_cast<std::int64_t>(i) * f[i], p));
    trim(d);
    return d;
}

Poly powmod(Poly base, std::int64_t e, const Poly& m, std::int64_t p) {
    Poly r{1};
    base = divmod(base, m, p).second;
    while (e) {
        if (e & 1) r = divmod(mul(r, base, p), m, p).second;
        base = divmod(mul(base, base, p), m, p).second;
        e >>= 1;
    }
    return r;
}

// Degrees of the irreducible factors of a square-free monic f mod p.
std::vector<std::size_t> factor_degrees(Poly f, std::int64_t p) {
    std::vector<std::size_t> degrees;
    const Poly x{0, 1};
    Poly h = x;
    for (std::size_t k = 1; 2 * k < f.size(); ++k) {
        h = powmod(h, p, f, p);
        Poly g = gcd(sub(h, x, p), f, p);
        if (g.size() > 1) {
            for (std::size_t c = 0; c < (g.size() - 1) / k; ++c) degrees.push_back(k);
            f = divmod(f, g, p).first;
            h = divmod(h, f, p).second;
        }
    }
    if (f.size() > 1) degrees.push_back(f.size() - 1);
    return degrees;
}

std::set<std::size_t> proper_subset_sums(const std::vector<std::size_t>& degrees, std::size_t n) {
    std::set<std::size_t> sums{0};
    for (auto d : degrees) {
        auto next = sums;
        for (auto s : sums) next.insert(s + d);
        sums = std::move(next);
    }
    std::set<std::size_t> proper;
    for (auto s : sums)
        if (s > 0 && s < n) proper.insert(s);
    return proper;
}

bool has_integer_root(const std::vector<Int>& f) {
    if (f.front() == 0) return true;
    const Int c = abs(f.front());
    if (c > 1000000) return false;  // left to the mod-p patterns
    const long bound = c.get_si();
    for (long d = 1; d <= bound; ++d) {
        if (bound % d != 0) continue;
        for (long r : {d, -d}) {
            Int acc = 0;
            for (std::size_t k = f.size(); k-- > 0;) acc = acc * r + f[k];
            if (acc == 0) return true;
        }
    }
    return false;
}

// Square-free over Q: gcd(f, f') is constant, by Euclid over the rationals.
bool squarefree_over_q(const std::vector<Int>& f) {
    std::vector<Rat> a(f.begin(), f.end()), b;
    for (std::size_t i = 1; i < f.size(); ++i) b.push_back(Rat(f[i] * static_cast<long>(i)));
    auto trim_q = [](std::vector<Rat>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim_q(b);
    while (!b.empty()) {
        while (a.size() >= b.size() && !a.empty()) {
            Rat c = a.back() / b.back();
            const std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
            trim_q(a);
        }
        std::swap(a, b);
    }
    return a.size() == 1;
}

}  // namespace

bool is_irreducible_over_q(const std::vector<Int>& coeffs) {
    const std::size_t n = coeffs.size() - 1;
    if (coeffs.back() != 1) throw std::invalid_argument("polynomial is not monic");
    if (n == 0) return false;
    if (n == 1) return true;
    if (has_integer_root(coeffs)) return false;
    if (!squarefree_over_q(coeffs)) return false;
    if (n <= 3) return true;  // no rational root and degree <= 3

    std::set<std::size_t> possible;
    for (std::size_t k = 1; k < n; ++k) possible.insert(k);
    int used = 0;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                           73, 79, 83, 89, 97, 101, 103, 107, 109, 113}) {
        Poly f;
        for (const auto& c : coeffs) {
            Int r = c % p;
            f.push_back(mod(r.get_si(), p));
        }
        trim(f);
        if (gcd(f, derivative(f, p), p).size() != 1) continue;
        auto sums = proper_subset_sums(factor_degrees(f, p), n);
        std::set<std::size_t> kept;
        std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(),
                              std::inserter(kept, kept.begin()));
        possible = std::move(kept);
        ++used;
        if (possible.empty()) return true;
    }
    throw std::invalid_argument("irreducibility could not be certified from " + std::to_string(used) +
                                " prime reductions");
}

}  // namespace qstab::order
