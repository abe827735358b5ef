#pragma once

#include "fixpoint/polynomial.hpp"
#include "fixpoint/rational.hpp"

namespace fixpoint {

/// Closed interval [lo, hi] with exact rational endpoints.
struct Interval {
    Rational lo;
    Rational hi;

    static Interval point(const Rational& x) { return {x, x}; }

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool intersects(const Interval& o) const { return !(o.hi < lo || hi < o.lo); }
    /// Gap between the intervals; zero when they intersect.
    Rational distance(const Interval& o) const;

    /// Widen to the enclosing grid of spacing 2^-bits, keeping endpoint sizes bounded.
    Interval rounded_out(int bits) const;

    friend bool operator==(const Interval&, const Interval&) = default;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Rational& c);

/// Enclosure of p over x by interval Horner; exact rational arithmetic,
/// optionally rounded outward after each step when round_bits > 0.
Interval eval_interval(const Polynomial& p, const Interval& x, int round_bits = 0);

} // namespace fixpoint
