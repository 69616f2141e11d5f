#pragma once

// Quadratic-field arithmetic written out by hand for x^2 + b x + c, used to
// check ideal operations without going through the lattice code.

#include <optional>
#include <vector>

#include "qstab/core/integer.hpp"

namespace oracle {

using qstab::Rat;

struct Quad {
    long b, c;  // θ^2 = -b θ - c

    // (p0 + p1 θ)(q0 + q1 θ)
    std::vector<Rat> mul(const std::vector<Rat>& p, const std::vector<Rat>& q) const {
        Rat t2 = p[1] * q[1];
        return {p[0] * q[0] - c * t2, p[0] * q[1] + p[1] * q[0] - b * t2};
    }
    // Galois conjugate: θ ↦ -b - θ.
    std::vector<Rat> conj(const std::vector<Rat>& p) const { return {p[0] - b * p[1], -p[1]}; }
};

/// Coordinates of v on the rational basis {r0, r1} by Cramer's rule.
inline std::optional<std::vector<Rat>> solve2(const std::vector<Rat>& r0, const std::vector<Rat>& r1,
                                              const std::vector<Rat>& v) {
    Rat det = r0[0] * r1[1] - r0[1] * r1[0];
    if (det == 0) return std::nullopt;
    return std::vector<Rat>{Rat((v[0] * r1[1] - v[1] * r1[0]) / det), Rat((r0[0] * v[1] - r0[1] * v[0]) / det)};
}

/// v is an integer combination of r0 and r1.
inline bool in_z_span(const std::vector<Rat>& r0, const std::vector<Rat>& r1, const std::vector<Rat>& v) {
    auto s = solve2(r0, r1, v);
    return s && (*s)[0].get_den() == 1 && (*s)[1].get_den() == 1;
}

}  // namespace oracle
