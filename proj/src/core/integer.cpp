#include "qstab/core/integer.hpp"

#include <stdexcept>

namespace qstab {

std::tuple<Int, Int, Int> gcdext(const Int& a, const Int& b) {
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {g, s, t};
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int common_denominator(const std::vector<Rat>& v) {
    Int d = 1;
    for (const auto& x : v) d = lcm(d, x.get_den());
    return d;
}

bool is_prime(const Int& p) {
    if (p < 2) return false;
    return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

Int prime_to_part(const Int& n, const Int& p) {
    if (n == 0) throw std::invalid_argument("prime_to_part of zero");
    Int r = abs(n);
    while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) r /= p;
    return r;
}

long valuation(const Int& n, const Int& p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    Int r = abs(n);
    long v = 0;
    while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
        r /= p;
        ++v;
    }
    return v;
}

std::vector<Int> prime_divisors(Int n) {
    if (n == 0) throw std::invalid_argument("prime_divisors of zero");
    n = abs(n);
    std::vector<Int> out;
    for (Int p = 2; p * p <= n; ++p) {
        if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            out.push_back(p);
            while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace qstab
