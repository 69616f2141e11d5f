#include "qstab/numsg/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qstab::numsg {

NumericalSemigroup::NumericalSemigroup(std::vector<long> gens) {
    if (gens.empty()) throw std::invalid_argument("numerical semigroup needs at least one generator");
    long g = 0;
    for (long x : gens) {
        if (x <= 0) throw std::invalid_argument("numerical semigroup generators must be positive");
        g = std::gcd(g, x);
    }
    if (g != 1) throw std::invalid_argument("numerical semigroup generators must have gcd 1");

    const long smallest = *std::min_element(gens.begin(), gens.end());
    std::vector<bool> member{true};
    long run = 1;
    // Once `smallest` consecutive integers are in, everything beyond is.
    while (run < smallest) {
        const long x = static_cast<long>(member.size());
        bool in = false;
        for (long gen : gens)
            if (gen <= x && member[x - gen]) in = true;
        member.push_back(in);
        run = in ? run + 1 : 0;
    }
    member.resize(member.size() - static_cast<std::size_t>(run));
    finish(std::move(member));
}

void NumericalSemigroup::finish(std::vector<bool> member) {
    conductor_ = static_cast<long>(member.size());
    head_ = std::move(member);
    gaps_.clear();
    for (long x = 0; x < conductor_; ++x)
        if (!head_[x]) gaps_.push_back(x);

    long m = 1;
    while (!contains(m)) ++m;
    min_gens_.clear();
    for (long s = m; s < std::max(conductor_, 1L) + m; ++s) {
        if (!contains(s)) continue;
        bool decomposes = false;
        for (long a = m; a <= s - m && !decomposes; ++a) decomposes = contains(a) && contains(s - a);
        if (!decomposes) min_gens_.push_back(s);
    }
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<long> gaps) {
    std::sort(gaps.begin(), gaps.end());
    gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
    if (!gaps.empty() && gaps.front() <= 0) throw std::invalid_argument("gaps must be positive");
    const long c = gaps.empty() ? 0 : gaps.back() + 1;
    std::vector<bool> member(static_cast<std::size_t>(c), true);
    for (long g : gaps) member[g] = false;
    for (long g : gaps)
        for (long a = 1; a < g; ++a)
            if (member[a] && member[g - a])
                throw std::invalid_argument("gap set is not the complement of a semigroup");
    NumericalSemigroup s;
    s.finish(std::move(member));
    return s;
}

bool NumericalSemigroup::contains(long x) const {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return head_[x];
}

std::string NumericalSemigroup::to_string() const {
    std::ostringstream os;
    os << '<';
    for (std::size_t k = 0; k < min_gens_.size(); ++k) os << (k ? "," : "") << min_gens_[k];
    os << '>';
    return os.str();
}

SemigroupPtr make_semigroup(std::vector<long> gens) {
    return std::make_shared<const NumericalSemigroup>(std::move(gens));
}

SemigroupPtr parse_semigroup(const std::string& text) {
    std::vector<long> gens;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad semigroup generator \"" + item + "\"");
        }
        while (used < item.size() && item[used] == ' ') ++used;
        if (used != item.size()) throw std::invalid_argument("bad semigroup generator \"" + item + "\"");
        gens.push_back(v);
    }
    return make_semigroup(std::move(gens));
}

std::vector<NumericalSemigroup> enumerate_semigroups(long max_genus) {
    std::vector<NumericalSemigroup> out;
    if (max_genus < 0) return out;
    std::vector<NumericalSemigroup> level{NumericalSemigroup::naturals()};
    for (long g = 0;; ++g) {
        out.insert(out.end(), level.begin(), level.end());
        if (g == max_genus) break;
        std::vector<NumericalSemigroup> next;
        for (const auto& s : level) {
            for (long gen : s.minimal_generators()) {
                if (gen <= s.frobenius()) continue;
                auto gaps = s.gaps();
                gaps.push_back(gen);
                next.push_back(NumericalSemigroup::from_gaps(std::move(gaps)));
            }
        }
        level = std::move(next);
    }
    return out;
}

}  // namespace qstab::numsg
