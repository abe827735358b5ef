#include <cctype>
#include <string>

#include "fixpoint/error.hpp"
#include "fixpoint/polynomial.hpp"

namespace fixpoint {

namespace {

constexpr std::size_t kMaxParsedExponent = 100000;

// Recursive descent over
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/')? unary)*     '/' only by a nonzero constant
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | 'x' | '(' expr ')'
class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        for (;;) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                skip_ws();
                const std::size_t at = pos_;
                Polynomial d = unary();
                if (!d.is_constant()) throw ParseError(at, "division by a non-constant");
                if (d.is_zero()) throw ParseError(at, "division by zero");
                acc *= Rational(1) / d.leading();
            } else if (implicit_factor_follows()) {
                acc *= unary();
            } else {
                return acc;
            }
        }
    }

    // "2x" and "3(x+1)" read as products.
    bool implicit_factor_follows() {
        skip_ws();
        return pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'X' || text_[pos_] == '(');
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (!accept('^')) return base;
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected a nonnegative integer exponent");
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 6 || std::stoul(digits) > kMaxParsedExponent) {
            throw ParseError(start, "exponent too large");
        }
        std::size_t n = std::stoul(digits);
        if (base.degree() > 0 && static_cast<std::size_t>(base.degree()) * n > kMaxParsedExponent) {
            throw ParseError(start, "resulting degree too large");
        }
        Polynomial result = Polynomial::constant(Rational(1));
        Polynomial sq = base;
        while (n > 0) {
            if (n & 1u) result *= sq;
            n >>= 1u;
            if (n > 0) sq *= sq;
        }
        return result;
    }

    Polynomial primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == 'x' || c == 'X') {
            ++pos_;
            return Polynomial::identity();
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            Integer v;
            v.set_str(std::string(text_.substr(start, pos_ - start)), 10);
            return Polynomial::constant(Rational(v));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

Polynomial parse_list(std::string_view text, std::size_t open) {
    std::vector<Rational> coeffs;
    std::size_t pos = open + 1;
    const std::size_t close = text.find(']', pos);
    if (close == std::string_view::npos) throw ParseError(text.size(), "expected ']'");
    for (std::size_t i = close + 1; i < text.size(); ++i) {
        if (!std::isspace(static_cast<unsigned char>(text[i]))) throw ParseError(i, "trailing characters after ']'");
    }
    const std::string_view body = text.substr(pos, close - pos);
    if (body.find_first_not_of(" \t\r\n") == std::string_view::npos) return {};
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = body.find(',', start);
        const std::string_view item = body.substr(start, comma == std::string_view::npos ? comma : comma - start);
        try {
            coeffs.push_back(Rational::parse(item));
        } catch (const ParseError& e) {
            throw ParseError(pos + start + e.offset(), "bad coefficient '" + std::string(item) + "'");
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Polynomial(std::move(coeffs));
}

} // namespace

Polynomial parse_polynomial(std::string_view text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError(0, "empty polynomial");
    if (text[first] == '[') return parse_list(text, first);
    return ExprParser(text).parse();
}

} // namespace fixpoint
