#include "kwb/poly_io.hpp"

#include <cctype>
#include <sstream>

namespace kwb {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

namespace {

// Recursive-descent parser over the shared grammar.
class PolyParser {
public:
    PolyParser(const std::string& text, int nvars, bool laurent)
        : text_(text), nvars_(nvars), laurent_(laurent) {}

    Poly parse() {
        Poly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    const std::string& text_;
    int nvars_;
    bool laurent_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, col = 1;
        for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') { ++line; col = 1; } else { ++col; }
        }
        throw ParseError(msg, line, col);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) { ++pos_; return true; }
        return false;
    }

    // expr := ['-'|'+'] term { ('+'|'-') term }
    Poly parse_expr() {
        Poly total(nvars_, laurent_);
        bool negate = false;
        if (eat('-')) negate = true;
        else eat('+');
        Poly t = parse_term();
        total += negate ? -t : t;
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Poly u = parse_term();
                total += (c == '-') ? -u : u;
            } else {
                break;
            }
        }
        return total;
    }

    // term := factor { '*' factor | factor }   (juxtaposition multiplies)
    Poly parse_term() {
        Poly prod = parse_factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                prod = prod * parse_factor();
            } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                       std::isalpha(static_cast<unsigned char>(c)) || c == '(') {
                prod = prod * parse_factor();
            } else {
                break;
            }
        }
        return prod;
    }

    // factor := atom ['^' ['-'] integer]
    Poly parse_factor() {
        Poly base = parse_atom();
        if (peek() == '^') {
            ++pos_;
            bool neg = eat('-');
            long e = parse_integer();
            if (neg) {
                if (!laurent_) fail("negative exponent outside Laurent context");
                if (base.terms().size() != 1)
                    fail("negative exponent requires a monomial base");
                const auto& [ev, c] = *base.terms().begin();
                Rat cc = 1;
                for (long k = 0; k < e; ++k) cc *= c;
                if (cc == 0) fail("zero to a negative power");
                ExpVec inv(nvars_);
                for (int i = 0; i < nvars_; ++i) inv[i] = -static_cast<int>(e) * ev[i];
                return Poly::monomial(inv, 1 / cc, true);
            }
            return pow_trunc(base, static_cast<int>(e));
        }
        return base;
    }

    long parse_integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stol(text_.substr(start, pos_ - start));
    }

    // atom := number | variable | '(' expr ')'
    Poly parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = parse_integer();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                long den = parse_integer();
                if (den == 0) fail("zero denominator");
                return Poly::constant(nvars_, make_rat(num, den), laurent_);
            }
            return Poly::constant(nvars_, num, laurent_);
        }
        if (c == 'x' || c == 'z') {
            char letter = laurent_ ? 'z' : 'x';
            if (c != letter) fail(std::string("expected variable letter '") + letter + "'");
            ++pos_;
            long idx = parse_integer();
            if (idx < 1 || idx > nvars_) fail("variable index out of range");
            return Poly::variable(nvars_, static_cast<int>(idx) - 1, laurent_);
        }
        fail("expected number, variable, or '('");
    }
};

void print_monomial(std::ostream& os, const ExpVec& e, bool laurent) {
    bool first = true;
    char letter = laurent ? 'z' : 'x';
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << letter << (i + 1);
        if (e[i] != 1) os << '^' << e[i];
    }
}

}  // namespace

Poly parse_poly(const std::string& text, int nvars, bool laurent) {
    return PolyParser(text, nvars, laurent).parse();
}

std::string print_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << '-'; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool trivial_monomial = total_degree(e) == 0 && e == ExpVec(e.size(), 0);
        if (trivial_monomial) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << '*';
            print_monomial(os, e, p.laurent());
        }
    }
    return os.str();
}

}  // namespace kwb
