#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qstab/order/frac_ideal.hpp"

namespace qstab::order {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// "x^3 - 2x + 1" -> {1, -2, 0, 1}. Integer coefficients, variable x,
/// implicit multiplication allowed ("2x", "2*x").
std::vector<Int> parse_polynomial(std::string_view text);

/// An integer polynomial in the generator with an optional "/d" suffix
/// dividing the whole element: "1+x", "(1+x)/2", "1/2". The polynomial is
/// reduced modulo the minimal polynomial.
FieldElem parse_element(const MonogenicOrder& order, std::string_view text);

/// Generators of "(2, 1+x)" or "ideal (2, 1+x)".
std::vector<FieldElem> parse_ideal_generators(const MonogenicOrder& order, std::string_view text);
FracIdeal parse_ideal(const OrderPtr& order, std::string_view text);

/// "order x^2+3; ideal (2, 1+x); ideal (1)".
struct Session {
    OrderPtr order;
    std::vector<FracIdeal> ideals;
    std::vector<std::vector<FieldElem>> generators;
};
Session parse_session(std::string_view text);

/// Element rendered back in literal syntax, e.g. "(1+x)/2".
std::string element_to_string(const FieldElem& x);
/// Ideal rendered as a literal on its Z-basis, e.g. "(2, 1+x)".
std::string ideal_to_literal(const FracIdeal& i);

}  // namespace qstab::order
