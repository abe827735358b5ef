#include "fixpoint/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "fixpoint/error.hpp"

namespace fixpoint {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
    trim();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::identity() {
    return Polynomial{Rational(0), Rational(1)};
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t n) {
    std::vector<Rational> cs(n + 1);
    cs[n] = c;
    return Polynomial(std::move(cs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    if (coeffs_.empty()) return Rational(0);
    if (x.is_zero()) return coeffs_.front();
    // Horner on the integer numerator: p(u/q) = (sum c_i u^i q^(d-i)) / q^d
    const Integer u = x.numerator();
    const Integer q = x.denominator();
    if (q == 1) {
        mpq_class acc = coeffs_.back().raw();
        for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
            acc *= u;
            acc += coeffs_[i].raw();
        }
        return Rational(Integer(acc.get_num()), Integer(acc.get_den()));
    }
    mpq_class acc = coeffs_.back().raw();
    Integer qpow = 1;
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
        qpow *= q;
        acc *= u;
        acc += mpq_class(coeffs_[i].raw() * qpow);
    }
    return Rational(Integer(acc.get_num()), Integer(acc.get_den() * qpow));
}

int Polynomial::sign_at(const Rational& x) const {
    return (*this)(x).sign();
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    }
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    const Rational inv = Rational(1) / leading();
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c *= inv;
    return out;
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return {};
    Integer lcm_den = 1;
    for (const auto& c : coeffs_) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.raw().get_den_mpz_t());
    }
    std::vector<Integer> ints;
    ints.reserve(coeffs_.size());
    Integer g = 0;
    for (const auto& c : coeffs_) {
        Integer v = c.numerator() * (lcm_den / c.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    if (ints.back() < 0) g = -g;
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (auto& v : ints) {
        Integer r;
        mpz_divexact(r.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        out.emplace_back(r);
    }
    return Polynomial(std::move(out));
}

bool Polynomial::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

std::size_t Polynomial::bit_size() const {
    std::size_t total = 0;
    for (const auto& c : coeffs_) total += c.bit_size();
    return total;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<mpq_class> acc(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            acc[i + j] += coeffs_[i].raw() * o.coeffs_[j].raw();
        }
    }
    coeffs_.clear();
    coeffs_.reserve(acc.size());
    for (auto& v : acc) coeffs_.emplace_back(Integer(v.get_num()), Integer(v.get_den()));
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    for (auto& v : coeffs_) v *= c;
    trim();
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = a == Rational(1);
        if (i == 0) {
            os << a;
            continue;
        }
        if (!unit) os << (a.is_integer() ? a.to_string() : "(" + a.to_string() + ")") << "*";
        os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::vector<std::string> Polynomial::coefficient_strings() const {
    std::vector<std::string> out;
    if (is_zero()) {
        out.emplace_back("0");
        return out;
    }
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_string());
    return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor) {
    if (divisor.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "polynomial division by zero");
    if (dividend.degree() < divisor.degree()) return {Polynomial{}, dividend};

    std::vector<mpq_class> rem;
    rem.reserve(dividend.coefficients().size());
    for (const auto& c : dividend.coefficients()) rem.push_back(c.raw());
    const auto& dc = divisor.coefficients();
    const std::size_t dd = dc.size() - 1;
    const mpq_class inv_lead = 1 / dc.back().raw();
    std::vector<Rational> quot(rem.size() - dd);

    for (std::size_t k = rem.size(); k-- > dd;) {
        if (sgn(rem[k]) == 0) continue;
        const mpq_class f = rem[k] * inv_lead;
        quot[k - dd] = Rational(Integer(f.get_num()), Integer(f.get_den()));
        for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= f * dc[j].raw();
    }
    std::vector<Rational> r;
    r.reserve(dd);
    for (std::size_t i = 0; i < dd; ++i) r.emplace_back(Integer(rem[i].get_num()), Integer(rem[i].get_den()));
    return {Polynomial(std::move(quot)), Polynomial(std::move(r))};
}

Polynomial remainder(const Polynomial& dividend, const Polynomial& divisor) {
    return divmod(dividend, divisor).second;
}

bool divides(const Polynomial& divisor, const Polynomial& dividend) {
    return remainder(dividend, divisor).is_zero();
}

Rational poly_eval(const Polynomial& p, const Rational& x) {
    return p(x);
}

void check_limits(const Polynomial& p, const PolyLimits& limits) {
    if (p.degree() > 0 && static_cast<std::size_t>(p.degree()) > limits.max_degree) {
        throw Error(ErrorKind::DegreeOverflow, "degree " + std::to_string(p.degree()) +
                                                   " exceeds max degree " + std::to_string(limits.max_degree));
    }
    const std::size_t bits = p.bit_size();
    if (bits > limits.max_bits) {
        throw Error(ErrorKind::BitCapExceeded, "coefficient size " + std::to_string(bits) +
                                                   " bits exceeds cap " + std::to_string(limits.max_bits));
    }
}

namespace {

// deg(outer) * deg(inner), saturating at max + 1.
std::size_t composed_degree(int outer, int inner, std::size_t max) {
    if (outer <= 0 || inner <= 0) return 0;
    const auto a = static_cast<std::size_t>(outer);
    const auto b = static_cast<std::size_t>(inner);
    if (a > (max + 1) / b + 1) return max + 1;
    return std::min(a * b, max + 1);
}

void guard_degree(std::size_t degree, const PolyLimits& limits) {
    if (degree > limits.max_degree) {
        throw Error(ErrorKind::DegreeOverflow, "degree " + std::to_string(degree) +
                                                   " would exceed max degree " + std::to_string(limits.max_degree));
    }
}

} // namespace

Polynomial poly_compose(const Polynomial& outer, const Polynomial& inner, const PolyLimits& limits) {
    guard_degree(composed_degree(outer.degree(), inner.degree(), limits.max_degree), limits);
    if (outer.is_zero()) return {};
    const auto& oc = outer.coefficients();
    Polynomial acc = Polynomial::constant(oc.back());
    for (std::size_t i = oc.size() - 1; i-- > 0;) {
        acc *= inner;
        acc += Polynomial::constant(oc[i]);
    }
    check_limits(acc, limits);
    return acc;
}

Polynomial iterate_compose(const Polynomial& p, std::size_t k, const PolyLimits& limits) {
    std::size_t degree = 1;
    for (std::size_t i = 0; i < k && p.degree() > 1; ++i) {
        degree = composed_degree(p.degree(), static_cast<int>(std::min<std::size_t>(degree, limits.max_degree + 1)),
                                 limits.max_degree);
        guard_degree(degree, limits);
    }
    Polynomial acc = Polynomial::identity();
    for (std::size_t i = 0; i < k; ++i) acc = poly_compose(p, acc, limits);
    return acc;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::BothZero, "gcd of two zero polynomials");
    Polynomial x = a.primitive();
    Polynomial y = b.primitive();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        Polynomial r = remainder(x, y).primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "square-free part of zero polynomial");
    if (p.is_constant()) return Polynomial::constant(Rational(1));
    const Polynomial g = poly_gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

Polynomial fixed_point_poly(const Polynomial& p) {
    Polynomial q = p - Polynomial::identity();
    if (q.is_zero()) {
        throw Error(ErrorKind::IdentityMap, "P(x) = x: every real number is a fixed point");
    }
    return q;
}

Polynomial level_poly(const Polynomial& p, std::size_t k, const PolyLimits& limits) {
    const Polynomial q = fixed_point_poly(p);
    std::size_t degree = q.degree() > 0 ? static_cast<std::size_t>(q.degree()) : 0;
    for (std::size_t i = 0; i < k && p.degree() > 1 && degree > 0; ++i) {
        degree = composed_degree(p.degree(), static_cast<int>(std::min<std::size_t>(degree, limits.max_degree + 1)),
                                 limits.max_degree);
        guard_degree(degree, limits);
    }
    return poly_compose(q, iterate_compose(p, k, limits), limits);
}

} // namespace fixpoint
