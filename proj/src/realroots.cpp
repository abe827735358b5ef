#include "fixpoint/realroots.hpp"

#include <functional>
#include <optional>

#include "fixpoint/error.hpp"

namespace fixpoint {

namespace {

std::size_t count_sign_changes(const std::vector<int>& signs) {
    std::size_t changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// Positive multiple of p with coprime integer coefficients.
Polynomial positive_primitive(const Polynomial& p) {
    Polynomial q = p.primitive();
    if (q.is_zero()) return q;
    if (q.leading().sign() != p.leading().sign()) q = -q;
    return q;
}

} // namespace

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Sturm chain of zero polynomial");
    std::vector<Polynomial> chain{p};
    Polynomial next = p.derivative();
    while (!next.is_zero()) {
        chain.push_back(next);
        const std::size_t n = chain.size();
        next = -remainder(chain[n - 2], chain[n - 1]);
    }
    return chain;
}

SturmSequence::SturmSequence(const Polynomial& p) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Sturm chain of zero polynomial");
    chain_.push_back(positive_primitive(p));
    Polynomial next = positive_primitive(p.derivative());
    while (!next.is_zero()) {
        chain_.push_back(next);
        const std::size_t n = chain_.size();
        next = positive_primitive(-remainder(chain_[n - 2], chain_[n - 1]));
    }
}

std::size_t SturmSequence::variations(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(q.sign_at(x));
    return count_sign_changes(signs);
}

std::size_t SturmSequence::variations_at_minus_infinity() const {
    std::vector<int> signs;
    for (const auto& q : chain_) {
        const int s = q.leading().sign();
        signs.push_back(q.degree() % 2 == 0 ? s : -s);
    }
    return count_sign_changes(signs);
}

std::size_t SturmSequence::variations_at_plus_infinity() const {
    std::vector<int> signs;
    for (const auto& q : chain_) signs.push_back(q.leading().sign());
    return count_sign_changes(signs);
}

std::size_t SturmSequence::count(const Rational& lo, const Rational& hi) const {
    if (hi <= lo) return 0;
    // Variation counts ignoring zeros are right-continuous at roots of a
    // square-free p, so this is exact for (lo, hi] even when lo or hi is a root.
    const std::size_t vl = variations(lo);
    const std::size_t vh = variations(hi);
    return vl > vh ? vl - vh : 0;
}

std::size_t SturmSequence::count_all() const {
    const std::size_t a = variations_at_minus_infinity();
    const std::size_t b = variations_at_plus_infinity();
    return a > b ? a - b : 0;
}

std::size_t count_roots_in(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root count of zero polynomial");
    return SturmSequence(p).count(lo, hi);
}

std::size_t count_roots_in(const Polynomial& p, const RootInterval& iv) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root count of zero polynomial");
    if (iv.kind == RootKind::ExactPoint) return p(iv.lo).is_zero() ? 1 : 0;
    return count_roots_in(p, iv.lo, iv.hi);
}

Rational root_bound(const Polynomial& p) {
    if (p.degree() < 1) throw Error(ErrorKind::ConstantPolynomial, "root bound of a constant polynomial");
    const auto& cs = p.coefficients();
    Rational m(0);
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
        const Rational a = cs[i].abs();
        if (a > m) m = a;
    }
    return Rational(1) + m / cs.back().abs();
}

AlgebraicNumber AlgebraicNumber::exact(const Rational& r) {
    return AlgebraicNumber(Polynomial{-r, Rational(1)}, RootInterval{r, r, RootKind::ExactPoint});
}

AlgebraicNumber AlgebraicNumber::exact_root(Polynomial defining, const Rational& r) {
    if (defining.is_constant() || !defining(r).is_zero()) {
        throw Error(ErrorKind::PreconditionViolation, "defining polynomial does not vanish at " + r.to_string());
    }
    return AlgebraicNumber(std::move(defining), RootInterval{r, r, RootKind::ExactPoint});
}

AlgebraicNumber AlgebraicNumber::from_interval(Polynomial defining, const Rational& lo, const Rational& hi) {
    if (defining.is_constant()) {
        throw Error(ErrorKind::PreconditionViolation, "defining polynomial must be nonconstant");
    }
    if (!poly_gcd(defining, defining.derivative()).is_constant()) {
        throw Error(ErrorKind::PreconditionViolation, "defining polynomial must be square-free");
    }
    if (lo == hi) return exact_root(std::move(defining), lo);
    if (hi < lo) throw Error(ErrorKind::PreconditionViolation, "interval has lo > hi");
    const SturmSequence seq(defining);
    if (seq.count(lo, hi) != 1) {
        throw Error(ErrorKind::PreconditionViolation, "interval (" + lo.to_string() + ", " + hi.to_string() +
                                                          "] does not isolate exactly one root");
    }
    Rational a = lo;
    Rational b = hi;
    for (;;) {
        if (defining(b).is_zero()) return exact_root(std::move(defining), b);
        if (!defining(a).is_zero()) break;
        // lo is a root outside (lo, hi]; move it inward past that root
        const Rational m = midpoint(a, b);
        if (seq.count(a, m) == 1) {
            b = m;
        } else {
            a = m;
        }
    }
    return AlgebraicNumber(std::move(defining), RootInterval{a, b, RootKind::OpenClosed});
}

AlgebraicNumber AlgebraicNumber::bisected() const {
    if (is_exact()) return *this;
    const Rational m = midpoint(interval_.lo, interval_.hi);
    const int sm = defining_.sign_at(m);
    if (sm == 0) return AlgebraicNumber(defining_, RootInterval{m, m, RootKind::ExactPoint});
    const int sl = defining_.sign_at(interval_.lo);
    if (sm == sl) return AlgebraicNumber(defining_, RootInterval{m, interval_.hi, RootKind::OpenClosed});
    return AlgebraicNumber(defining_, RootInterval{interval_.lo, m, RootKind::OpenClosed});
}

std::vector<AlgebraicNumber> isolate_real_roots(const Polynomial& p) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root isolation of zero polynomial");
    std::vector<AlgebraicNumber> out;
    const Polynomial sf = squarefree_part(p);
    if (sf.is_constant()) return out;

    const Polynomial work = sf.primitive();
    const SturmSequence seq(work);
    const Integer lead = work.leading().numerator();

    // Narrow (lo, hi] until it holds at most one multiple of 1/lead; any
    // rational root u/v has v | lead, so that multiple is the only candidate.
    auto finalize = [&](Rational lo, Rational hi) {
        const int slo = work.sign_at(lo);
        const Rational unit(Integer(1), lead);
        while (hi - lo >= unit) {
            const Rational m = midpoint(lo, hi);
            const int sm = work.sign_at(m);
            if (sm == 0) {
                out.push_back(AlgebraicNumber(sf, RootInterval{m, m, RootKind::ExactPoint}));
                return;
            }
            (sm == slo ? lo : hi) = m;
        }
        const Integer n = (hi * Rational(lead)).floor();
        const Rational candidate(n, lead);
        if (lo < candidate && work(candidate).is_zero()) {
            out.push_back(AlgebraicNumber(sf, RootInterval{candidate, candidate, RootKind::ExactPoint}));
        } else {
            out.push_back(AlgebraicNumber(sf, RootInterval{lo, hi, RootKind::OpenClosed}));
        }
    };

    std::function<void(const Rational&, const Rational&, std::size_t)> isolate;
    isolate = [&](const Rational& lo, const Rational& hi, std::size_t n) {
        if (n == 0) return;
        if (n == 1) {
            finalize(lo, hi);
            return;
        }
        const Rational m = midpoint(lo, hi);
        if (!work(m).is_zero()) {
            const std::size_t left = seq.count(lo, m);
            isolate(lo, m, left);
            isolate(m, hi, n - left);
            return;
        }
        // m is a root: cut it out with a window (m - d, m + d] holding no other root
        Rational d = (hi - lo) * Rational(1, 4);
        while (seq.count(m - d, m + d) != 1 || work(m - d).is_zero() || work(m + d).is_zero()) {
            d *= Rational(1, 2);
        }
        const std::size_t left = seq.count(lo, m - d);
        isolate(lo, m - d, left);
        out.push_back(AlgebraicNumber(sf, RootInterval{m, m, RootKind::ExactPoint}));
        isolate(m + d, hi, n - left - 1);
    };

    const Rational bound = root_bound(work);
    isolate(-bound, bound, seq.count(-bound, bound));
    return out;
}

AlgebraicNumber refine_to_width(const AlgebraicNumber& a, const Rational& w) {
    if (w.sign() <= 0) throw Error(ErrorKind::PreconditionViolation, "refinement width must be positive");
    AlgebraicNumber r = a;
    while (!r.is_exact() && r.interval().width() > w) r = r.bisected();
    return r;
}

std::strong_ordering alg_compare(const AlgebraicNumber& a, const Rational& r) {
    AlgebraicNumber x = a;
    for (;;) {
        if (x.is_exact()) return x.exact_value() <=> r;
        const auto& iv = x.interval();
        if (r <= iv.lo) return std::strong_ordering::greater;
        if (r >= iv.hi) return std::strong_ordering::less;
        if (x.defining()(r).is_zero()) return std::strong_ordering::equal;
        x = x.bisected();
    }
}

std::strong_ordering alg_compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (b.is_exact()) return alg_compare(a, b.exact_value());
    if (a.is_exact()) return 0 <=> alg_compare(b, a.exact_value());

    // gcd only once the intervals overlap; disjoint inputs are the common case
    std::optional<Polynomial> g;
    AlgebraicNumber x = a;
    AlgebraicNumber y = b;
    for (;;) {
        if (x.is_exact()) return alg_compare(x, y);
        if (y.is_exact()) return alg_compare(x, y);
        const auto& ix = x.interval();
        const auto& iy = y.interval();
        if (ix.hi <= iy.lo) return std::strong_ordering::less;
        if (iy.hi <= ix.lo) return std::strong_ordering::greater;
        if (!g) g = poly_gcd(a.defining(), b.defining());
        if (!g->is_constant()) {
            const Rational lo = ix.lo < iy.lo ? iy.lo : ix.lo;
            const Rational hi = ix.hi < iy.hi ? ix.hi : iy.hi;
            if (count_roots_in(*g, lo, hi) > 0) return std::strong_ordering::equal;
        }
        x = x.bisected();
        y = y.bisected();
    }
}

Interval enclose(const AlgebraicNumber& a, const Rational& w) {
    return refine_to_width(a, w).enclosure();
}

std::string approx(const AlgebraicNumber& a, int digits) {
    if (a.is_exact()) return a.exact_value().to_decimal(digits);
    // Refine until the width is tiny relative to the magnitude; irrational
    // roots are nonzero, so the interval eventually excludes 0.
    const Rational rel = pow10(-(digits + 2));
    AlgebraicNumber x = refine_to_width(a, rel);
    for (;;) {
        if (x.is_exact()) return x.exact_value().to_decimal(digits);
        const auto& iv = x.interval();
        if (iv.lo.sign() == iv.hi.sign() && iv.lo.sign() != 0) {
            const Rational mag = iv.lo.abs() < iv.hi.abs() ? iv.lo.abs() : iv.hi.abs();
            if (iv.width() <= mag * rel) return midpoint(iv.lo, iv.hi).to_decimal(digits);
        }
        x = x.bisected();
    }
}

} // namespace fixpoint
