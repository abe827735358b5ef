#include "fixpoint/e3036.hpp"

#include <algorithm>

#include "fixpoint/error.hpp"

namespace fixpoint::e3036 {

const char* to_string(Family f) noexcept {
    switch (f) {
    case Family::BaseSet: return "base";
    case Family::Sqrt2Family: return "sqrt2";
    case Family::Sqrt3Family: return "sqrt3";
    }
    return "unknown";
}

RadicalExpr RadicalExpr::base(const Rational& value) {
    return RadicalExpr{Family::BaseSet, {}, value};
}

std::size_t RadicalExpr::level() const {
    switch (family) {
    case Family::BaseSet:
        if (base_element == Rational(-1) || base_element == Rational(2)) return 0;
        if (base_element == Rational(1) || base_element == Rational(-2)) return 1;
        if (base_element.is_zero()) return 2;
        throw Error(ErrorKind::PreconditionViolation, base_element.to_string() + " is not in the base set");
    case Family::Sqrt2Family: return signs.size() + 2;
    case Family::Sqrt3Family: return signs.size() + 1;
    }
    return 0;
}

std::string RadicalExpr::sign_string() const {
    std::string s;
    for (auto sign : signs) s += sign == Sign::Plus ? '+' : '-';
    return s;
}

std::string RadicalExpr::render() const {
    static const std::string kMinus = "−";
    static const std::string kRoot = "√";
    if (family == Family::BaseSet) {
        return base_element.sign() < 0 ? kMinus + base_element.abs().to_string() : base_element.to_string();
    }
    if (signs.empty()) return "0";
    std::string inner = kRoot + (family == Family::Sqrt2Family ? "2" : "3");
    for (std::size_t i = signs.size() - 1; i-- > 0;) {
        inner = kRoot + "(2" + (signs[i + 1] == Sign::Plus ? "+" : kMinus) + inner + ")";
    }
    return (signs.front() == Sign::Minus ? kMinus : std::string()) + inner;
}

namespace {

// All sign vectors of length n in lexicographic order, '+' first.
std::vector<std::vector<Sign>> sign_patterns(std::size_t n) {
    std::vector<std::vector<Sign>> out;
    const std::size_t total = std::size_t{1} << n;
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<Sign> s(n);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = (mask >> (n - 1 - i)) & 1u ? Sign::Minus : Sign::Plus;
        }
        out.push_back(std::move(s));
    }
    return out;
}

// floor(sqrt(n)) and ceil(sqrt(n)) for n >= 0.
Integer isqrt_floor(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Integer isqrt_ceil(const Integer& n) {
    Integer r = isqrt_floor(n);
    if (r * r < n) ++r;
    return r;
}

Interval interval_sqrt(const Interval& x, int bits) {
    if (x.hi.sign() < 0) {
        throw Error(ErrorKind::NegativeRadicand, "square root of a negative radicand");
    }
    const Rational scale = pow2(2 * bits);
    const Rational unit = pow2(-bits);
    const Rational lo = x.lo.sign() < 0 ? Rational(0) : x.lo;
    const Integer lo_scaled = (lo * scale).floor();
    const Integer hi_scaled = (x.hi * scale).ceil();
    return {Rational(isqrt_floor(lo_scaled)) * unit, Rational(isqrt_ceil(hi_scaled)) * unit};
}

Interval negate(const Interval& x) {
    return {-x.hi, -x.lo};
}

Interval evaluate(const RadicalExpr& e, int bits) {
    if (e.family == Family::BaseSet) return Interval::point(e.base_element);
    if (e.signs.empty()) {
        throw Error(ErrorKind::PreconditionViolation, "radical family member needs at least one sign");
    }
    const Interval two = Interval::point(Rational(2));
    const std::size_t n = e.signs.size();
    Interval v = interval_sqrt(Interval::point(Rational(e.family == Family::Sqrt2Family ? 2 : 3)), bits);
    if (e.signs[n - 1] == Sign::Minus) v = negate(v);
    for (std::size_t i = n - 1; i-- > 0;) {
        v = interval_sqrt(two + v, bits);
        if (e.signs[i] == Sign::Minus) v = negate(v);
    }
    return v;
}

} // namespace

std::vector<LeveledRadical> enumerate_radicals(std::size_t max_level) {
    std::vector<LeveledRadical> out;
    const std::vector<std::vector<long>> base = {{-1, 2}, {-2, 1}, {0}};
    for (std::size_t level = 0; level <= max_level; ++level) {
        if (level < base.size()) {
            for (long b : base[level]) out.push_back({RadicalExpr::base(Rational(b)), level});
        }
        if (level >= 3) {
            for (auto& s : sign_patterns(level - 2)) {
                out.push_back({RadicalExpr{Family::Sqrt2Family, std::move(s), Rational(0)}, level});
            }
        }
        if (level >= 2) {
            for (auto& s : sign_patterns(level - 1)) {
                out.push_back({RadicalExpr{Family::Sqrt3Family, std::move(s), Rational(0)}, level});
            }
        }
    }
    return out;
}

Interval radical_value(const RadicalExpr& e, int digits) {
    const Rational target = pow10(-digits);
    // nested square roots near 0 amplify width, so grow precision until it fits
    int bits = static_cast<int>(digits * 3.33) + 64;
    for (;;) {
        Interval v = evaluate(e, bits);
        if (v.width() <= target) return v;
        bits *= 2;
    }
}

bool MatchReport::perfect() const {
    return std::all_of(levels.begin(), levels.end(), [](const LevelMatch& l) { return l.perfect(); });
}

std::size_t MatchReport::total_enumerated() const {
    std::size_t n = 0;
    for (const auto& l : levels) n += l.enumerated;
    return n;
}

std::size_t MatchReport::total_tree_nodes() const {
    std::size_t n = 0;
    for (const auto& l : levels) n += l.tree_nodes;
    return n;
}

Polynomial chebyshev_map() {
    return Polynomial{Rational(-2), Rational(0), Rational(1)};
}

MatchReport match_levels(const ETree& tree, std::size_t max_level, const Rational& tol) {
    const Polynomial* p = tree.map ? tree.map->as_polynomial() : nullptr;
    if (!p || *p != chebyshev_map()) {
        throw Error(ErrorKind::WrongPolynomial, "closed forms are only known for x^2 - 2");
    }
    if (max_level > tree.max_depth) {
        throw Error(ErrorKind::PreconditionViolation, "tree depth " + std::to_string(tree.max_depth) +
                                                          " is below requested level " + std::to_string(max_level));
    }
    MatchReport report;
    report.max_level = max_level;
    report.tolerance = tol;
    const auto radicals = enumerate_radicals(max_level);
    const Rational fine = pow10(-30);

    for (std::size_t level = 0; level <= max_level; ++level) {
        LevelMatch lm;
        lm.level = level;
        const auto& ids = tree.levels[level];
        lm.tree_nodes = ids.size();
        std::vector<Rational> node_mid;
        for (auto id : ids) {
            const Interval iv = enclose(tree.nodes[id].value, fine);
            node_mid.push_back(midpoint(iv.lo, iv.hi));
        }
        std::vector<bool> used(ids.size(), false);
        for (const auto& r : radicals) {
            if (r.level != level) continue;
            ++lm.enumerated;
            const Interval rv = radical_value(r.expr, 30);
            const Rational rmid = midpoint(rv.lo, rv.hi);
            std::optional<std::size_t> best;
            for (std::size_t i = 0; i < ids.size(); ++i) {
                if (used[i]) continue;
                const Rational d = (node_mid[i] - rmid).abs();
                if (d > tol) continue;
                if (!best || d < (node_mid[*best] - rmid).abs()) best = i;
            }
            if (best) {
                used[*best] = true;
                ++lm.matched;
            } else {
                lm.unmatched_radicals.push_back(r.expr.render());
            }
        }
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (!used[i]) lm.unmatched_nodes.push_back(ids[i]);
        }
        report.levels.push_back(std::move(lm));
    }
    return report;
}

} // namespace fixpoint::e3036
