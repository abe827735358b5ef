#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fixpoint/rational.hpp"

namespace fixpoint {

/// Guards against runaway growth of composed polynomials.
struct PolyLimits {
    std::size_t max_degree = 20000;
    std::size_t max_bits = 1000000;
};

/// Dense univariate polynomial over the rationals, coefficients ascending by
/// degree. The zero polynomial has an empty coefficient list; otherwise the
/// leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients);

    static Polynomial constant(const Rational& c);
    static Polynomial identity();
    /// c * x^n
    static Polynomial monomial(const Rational& c, std::size_t n);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// Degree; the zero polynomial reports -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of x^i (zero past the degree).
    Rational operator[](std::size_t i) const;
    const Rational& leading() const;

    /// Horner evaluation.
    Rational operator()(const Rational& x) const;
    int sign_at(const Rational& x) const;

    Polynomial derivative() const;
    Polynomial monic() const;
    /// Rational multiple with coprime integer coefficients and positive
    /// leading coefficient.
    Polynomial primitive() const;
    bool has_integer_coefficients() const;

    /// Total numerator+denominator bits over all coefficients.
    std::size_t bit_size() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// "x^2 - 2" style rendering.
    std::string to_string() const;
    /// Coefficient strings, ascending.
    std::vector<std::string> coefficient_strings() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws ZeroPolynomial on zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor);
Polynomial remainder(const Polynomial& dividend, const Polynomial& divisor);
/// True when divisor | dividend exactly.
bool divides(const Polynomial& divisor, const Polynomial& dividend);

Rational poly_eval(const Polynomial& p, const Rational& x);

/// outer(inner(x)).
Polynomial poly_compose(const Polynomial& outer, const Polynomial& inner,
                        const PolyLimits& limits = {});

/// P composed with itself k times; k = 0 is the identity x.
Polynomial iterate_compose(const Polynomial& p, std::size_t k, const PolyLimits& limits = {});

/// Monic gcd over Q. Throws BothZero when both inputs are zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'), monic. Throws ZeroPolynomial.
Polynomial squarefree_part(const Polynomial& p);

/// Q(x) = P(x) - x. Throws IdentityMap when P is the identity.
Polynomial fixed_point_poly(const Polynomial& p);

/// F_k = Q o P^k; its real roots are the points reaching a fixed point within k steps.
Polynomial level_poly(const Polynomial& p, std::size_t k, const PolyLimits& limits = {});

/// Throws DegreeOverflow / BitCapExceeded when `p` breaks `limits`.
void check_limits(const Polynomial& p, const PolyLimits& limits);

/// Parse either "[c0, c1, ...]" (ascending, entries "n" or "p/q") or an
/// expression in x using + - * / ^ and parentheses, e.g. "x^2 - 2".
Polynomial parse_polynomial(std::string_view text);

} // namespace fixpoint
