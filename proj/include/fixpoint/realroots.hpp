#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "fixpoint/interval.hpp"
#include "fixpoint/polynomial.hpp"
#include "fixpoint/rational.hpp"

namespace fixpoint {

enum class RootKind {
    OpenClosed, ///< (lo, hi] holding exactly one root, defining(lo) and defining(hi) nonzero
    ExactPoint, ///< lo == hi is a rational root
};

struct RootInterval {
    Rational lo;
    Rational hi;
    RootKind kind = RootKind::OpenClosed;

    Rational width() const { return hi - lo; }
    Interval closed() const { return {lo, hi}; }

    friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

/// Sturm chain p, p', -rem(p, p'), ... exactly as defined (no rescaling).
/// Throws ZeroPolynomial.
std::vector<Polynomial> sturm_chain(const Polynomial& p);

/// Sturm chain with every member rescaled by a positive constant to coprime
/// integer coefficients; sign sequences match sturm_chain at every point.
class SturmSequence {
public:
    explicit SturmSequence(const Polynomial& p);

    const std::vector<Polynomial>& chain() const { return chain_; }

    /// Sign variations at x, zeros skipped.
    std::size_t variations(const Rational& x) const;
    std::size_t variations_at_minus_infinity() const;
    std::size_t variations_at_plus_infinity() const;

    /// Distinct roots in (lo, hi].
    std::size_t count(const Rational& lo, const Rational& hi) const;
    std::size_t count_all() const;

private:
    std::vector<Polynomial> chain_;
};

/// Number of distinct real roots of the square-free p in (lo, hi]; for an
/// exact-point interval, 1 if p vanishes there and 0 otherwise.
std::size_t count_roots_in(const Polynomial& p, const RootInterval& iv);
std::size_t count_roots_in(const Polynomial& p, const Rational& lo, const Rational& hi);

/// Cauchy bound 1 + max |c_i| / |c_d|; all real roots lie strictly inside (-B, B).
/// Throws ConstantPolynomial.
Rational root_bound(const Polynomial& p);

/// A real algebraic number: a square-free defining polynomial together with
/// an interval isolating one of its real roots.
class AlgebraicNumber {
public:
    /// The rational r, defined by x - r.
    static AlgebraicNumber exact(const Rational& r);
    /// r as a root of `defining`, which must vanish at r.
    static AlgebraicNumber exact_root(Polynomial defining, const Rational& r);

    /// Validates square-freeness and a single root in (lo, hi], then
    /// normalizes so that the endpoints are not roots (or collapses to an
    /// exact point). Throws PreconditionViolation on bad input.
    static AlgebraicNumber from_interval(Polynomial defining, const Rational& lo, const Rational& hi);

    const Polynomial& defining() const { return defining_; }
    const RootInterval& interval() const { return interval_; }
    bool is_exact() const { return interval_.kind == RootKind::ExactPoint; }
    /// Only meaningful when is_exact().
    const Rational& exact_value() const { return interval_.lo; }
    Interval enclosure() const { return interval_.closed(); }

    /// One bisection step; may collapse to an exact point.
    AlgebraicNumber bisected() const;

    friend bool operator==(const AlgebraicNumber&, const AlgebraicNumber&) = default;

private:
    friend std::vector<AlgebraicNumber> isolate_real_roots(const Polynomial& p);

    AlgebraicNumber(Polynomial defining, RootInterval interval)
        : defining_(std::move(defining)), interval_(std::move(interval)) {}

    Polynomial defining_;
    RootInterval interval_;
};

/// One AlgebraicNumber per distinct real root of squarefree_part(p),
/// ascending, with disjoint intervals; rational roots come back as exact
/// points. Throws ZeroPolynomial.
std::vector<AlgebraicNumber> isolate_real_roots(const Polynomial& p);

/// Bisect until the interval width is at most w (w > 0).
AlgebraicNumber refine_to_width(const AlgebraicNumber& a, const Rational& w);

/// Exact comparison by true real value.
std::strong_ordering alg_compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
std::strong_ordering alg_compare(const AlgebraicNumber& a, const Rational& r);

/// Decimal approximation with `digits` significant digits.
std::string approx(const AlgebraicNumber& a, int digits = 30);

/// Closed enclosure of width at most w.
Interval enclose(const AlgebraicNumber& a, const Rational& w);

} // namespace fixpoint
