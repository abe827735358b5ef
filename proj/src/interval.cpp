#include "fixpoint/interval.hpp"

#include <algorithm>

namespace fixpoint {

Rational Interval::distance(const Interval& o) const {
    if (o.hi < lo) return lo - o.hi;
    if (hi < o.lo) return o.lo - hi;
    return Rational(0);
}

Interval Interval::rounded_out(int bits) const {
    const Rational scale = pow2(bits);
    const Rational down(Integer((lo * scale).floor()));
    const Rational up(Integer((hi * scale).ceil()));
    return {down / scale, up / scale};
}

Interval operator+(const Interval& a, const Interval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

Interval operator-(const Interval& a, const Interval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

Interval operator*(const Interval& a, const Interval& b) {
    const Rational p1 = a.lo * b.lo;
    const Rational p2 = a.lo * b.hi;
    const Rational p3 = a.hi * b.lo;
    const Rational p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval operator*(const Interval& a, const Rational& c) {
    if (c.sign() >= 0) return {a.lo * c, a.hi * c};
    return {a.hi * c, a.lo * c};
}

Interval eval_interval(const Polynomial& p, const Interval& x, int round_bits) {
    const auto& cs = p.coefficients();
    if (cs.empty()) return Interval::point(Rational(0));
    if (x.lo == x.hi) return Interval::point(p(x.lo));
    Interval acc = Interval::point(cs.back());
    for (std::size_t i = cs.size() - 1; i-- > 0;) {
        acc = acc * x + Interval::point(cs[i]);
        if (round_bits > 0) acc = acc.rounded_out(round_bits);
    }
    return acc;
}

} // namespace fixpoint
