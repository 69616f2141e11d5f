#include "qstab/order/literal.hpp"

#include <cctype>

namespace qstab::order {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    Int number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Int(std::string(s_.substr(start, pos_ - start)));
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

void add_term(std::vector<Int>& poly, std::size_t degree, const Int& c) {
    if (poly.size() <= degree) poly.resize(degree + 1);
    poly[degree] += c;
}

std::vector<Int> polynomial(Cursor& cur) {
    std::vector<Int> poly;
    bool first = true;
    for (;;) {
        int sign = 1;
        if (cur.accept('-'))
            sign = -1;
        else if (!cur.accept('+') && !first)
            break;
        first = false;

        Int coef = 1;
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coef = cur.number();
            have_coef = true;
        }
        if (have_coef) cur.accept('*');
        std::size_t degree = 0;
        if (cur.accept('x')) {
            degree = 1;
            if (cur.accept('^')) {
                Int e = cur.number();
                if (e > 64) cur.fail("exponent too large");
                degree = e.get_ui();
            }
        } else if (!have_coef) {
            cur.fail("expected a term");
        }
        add_term(poly, degree, sign * coef);
        char next = cur.peek();
        if (next != '+' && next != '-') break;
    }
    while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
    if (poly.empty()) poly.push_back(0);
    return poly;
}

FieldElem reduce(const MonogenicOrder& order, const std::vector<Int>& poly, const Int& den) {
    // Horner in θ: acc = acc·θ + c_k from the top coefficient down.
    std::vector<Int> acc(order.degree());
    for (std::size_t k = poly.size(); k-- > 0;) {
        acc = order.times_theta(acc);
        acc[0] += poly[k];
    }
    FieldElem out;
    for (auto& c : acc) {
        Rat q(c, den);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

FieldElem element(const MonogenicOrder& order, Cursor& cur) {
    std::vector<Int> poly;
    if (cur.accept('(')) {
        poly = polynomial(cur);
        cur.expect(')');
    } else {
        poly = polynomial(cur);
    }
    Int den = 1;
    if (cur.accept('/')) {
        den = cur.number();
        if (den == 0) cur.fail("zero denominator");
    }
    return reduce(order, poly, den);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool starts_with_word(std::string_view s, std::string_view word) {
    return s.substr(0, word.size()) == word &&
           (s.size() == word.size() || !std::isalnum(static_cast<unsigned char>(s[word.size()])));
}

}  // namespace

std::vector<Int> parse_polynomial(std::string_view text) {
    Cursor cur(text);
    auto poly = polynomial(cur);
    if (!cur.done()) cur.fail("unexpected trailing input");
    return poly;
}

FieldElem parse_element(const MonogenicOrder& order, std::string_view text) {
    Cursor cur(text);
    auto e = element(order, cur);
    if (!cur.done()) cur.fail("unexpected trailing input");
    return e;
}

std::vector<FieldElem> parse_ideal_generators(const MonogenicOrder& order, std::string_view text) {
    text = trim(text);
    if (starts_with_word(text, "ideal")) text = trim(text.substr(5));
    Cursor cur(text);
    cur.expect('(');
    std::vector<FieldElem> gens;
    do {
        gens.push_back(element(order, cur));
    } while (cur.accept(','));
    cur.expect(')');
    if (!cur.done()) cur.fail("unexpected trailing input");
    return gens;
}

FracIdeal parse_ideal(const OrderPtr& order, std::string_view text) {
    auto gens = parse_ideal_generators(*order, text);
    try {
        return FracIdeal::from_gens(order, gens);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + " in \"" + std::string(text) + "\"");
    }
}

Session parse_session(std::string_view text) {
    Session s;
    while (!text.empty()) {
        auto semi = text.find(';');
        std::string_view part = trim(text.substr(0, semi));
        text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
        if (part.empty()) continue;
        if (starts_with_word(part, "order")) {
            if (s.order) throw ParseError("more than one order statement");
            try {
                s.order = MonogenicOrder::parse(trim(part.substr(5)));
            } catch (const ParseError&) {
                throw;
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
        } else if (starts_with_word(part, "ideal")) {
            if (!s.order) throw ParseError("ideal given before the order");
            auto gens = parse_ideal_generators(*s.order, part);
            s.ideals.push_back(parse_ideal(s.order, part));
            s.generators.push_back(std::move(gens));
        } else {
            throw ParseError("unknown statement \"" + std::string(part) + "\"");
        }
    }
    if (!s.order) throw ParseError("missing order statement");
    return s;
}

std::string element_to_string(const FieldElem& x) {
    const Int d = common_denominator(x);
    std::vector<Int> num;
    std::size_t terms = 0;
    for (const auto& c : x) {
        num.push_back(Rat(c * d).get_num());
        if (num.back() != 0) ++terms;
    }
    std::string p = poly_to_string(num);
    if (d == 1) return p;
    return (terms > 1 ? "(" + p + ")" : p) + "/" + d.get_str();
}

std::string ideal_to_literal(const FracIdeal& i) {
    std::string out = "(";
    bool first = true;
    for (const auto& b : i.basis()) {
        out += (first ? "" : ", ") + element_to_string(b);
        first = false;
    }
    return out + ")";
}

}  // namespace qstab::order
