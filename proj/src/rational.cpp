#include "fixpoint/rational.hpp"

#include <cctype>
#include <ostream>

#include "fixpoint/error.hpp"

namespace fixpoint {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorKind::IdentityMap: return "IdentityMap";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::BitCapExceeded: return "BitCapExceeded";
    case ErrorKind::DegreeTooLow: return "DegreeTooLow";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::AmbiguousParent: return "AmbiguousParent";
    case ErrorKind::WrongPolynomial: return "WrongPolynomial";
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
    case ErrorKind::DegreeZeroNotAllowed: return "DegreeZeroNotAllowed";
    }
    return "Unknown";
}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) {
        throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = s.size();
    while (j > i && std::isspace(static_cast<unsigned char>(s[j - 1]))) --j;
    s = s.substr(i, j - i);
    if (s.empty()) return false;
    std::size_t k = 0;
    if (s[0] == '-' || s[0] == '+') k = 1;
    if (k == s.size()) return false;
    for (std::size_t m = k; m < s.size(); ++m) {
        if (!std::isdigit(static_cast<unsigned char>(s[m]))) return false;
    }
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return out.set_str(digits, 10) == 0;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    Integer num;
    Integer den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) {
            throw ParseError(0, "not a rational number: '" + std::string(text) + "'");
        }
    } else {
        if (!parse_integer(text.substr(0, slash), num)) {
            throw ParseError(0, "bad numerator in '" + std::string(text) + "'");
        }
        if (!parse_integer(text.substr(slash + 1), den) || den < 0) {
            throw ParseError(slash + 1, "bad denominator in '" + std::string(text) + "'");
        }
        if (den == 0) throw ParseError(slash + 1, "zero denominator");
    }
    return Rational(num, den);
}

Rational Rational::abs() const {
    return Rational(mpq_class(::abs(value_)));
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Integer Rational::ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

std::size_t Rational::bit_size() const {
    return mpz_sizeinbase(value_.get_num_mpz_t(), 2) + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int significant) const {
    if (significant < 1) significant = 1;
    if (is_zero()) return "0";
    const Rational a = abs();

    // exponent e with 10^e <= a < 10^(e+1)
    int e = static_cast<int>(mpz_sizeinbase(a.numerator().get_mpz_t(), 10)) -
            static_cast<int>(mpz_sizeinbase(a.denominator().get_mpz_t(), 10));
    while (pow10(e) > a) --e;
    while (pow10(e + 1) <= a) ++e;

    // round a * 10^(significant-1-e) to an integer, half away from zero
    const Rational scaled = a * pow10(significant - 1 - e);
    Integer digits = (scaled + Rational(1, 2)).floor();
    std::string ds = digits.get_str();
    if (static_cast<int>(ds.size()) > significant) {
        // rounding carried into a new leading digit (e.g. 9.99 -> 10.0)
        ++e;
        ds.pop_back();
    }

    std::string out = sign() < 0 ? "-" : "";
    if (e >= significant - 1 && e < 40) {
        out += ds + std::string(static_cast<std::size_t>(e - (significant - 1)), '0');
    } else if (e >= 0 && e < significant - 1) {
        out += ds.substr(0, static_cast<std::size_t>(e + 1)) + "." +
               ds.substr(static_cast<std::size_t>(e + 1));
    } else if (e < 0 && e >= -10) {
        out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
    } else {
        while (ds.size() > 1 && ds.back() == '0') ds.pop_back();
        out += ds.substr(0, 1);
        if (ds.size() > 1) out += "." + ds.substr(1);
        out += "e" + std::to_string(e);
    }
    if (out.find('.') != std::string::npos && out.find('e') == std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return out;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-value_));
}

std::size_t Rational::hash() const {
    const std::hash<std::string> h;
    // limb-level hashing would be faster; string form keeps it portable
    return h(value_.get_num().get_str(16)) * 31u + h(value_.get_den().get_str(16));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Rational pow10(int exponent) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

Rational pow2(int exponent) {
    Integer p = 1;
    const unsigned long n = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), n);
    return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

Rational midpoint(const Rational& a, const Rational& b) {
    return (a + b) * Rational(Integer(1), Integer(2));
}

} // namespace fixpoint
