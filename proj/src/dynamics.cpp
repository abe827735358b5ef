#include "fixpoint/dynamics.hpp"

#include <unordered_map>

#include "fixpoint/error.hpp"

namespace fixpoint {

const char* to_string(Truncation t) noexcept {
    switch (t) {
    case Truncation::ReachedFixed: return "reached_fixed";
    case Truncation::RepeatDetected: return "repeat_detected";
    case Truncation::EscapedBound: return "escaped_bound";
    case Truncation::BitCap: return "bit_cap";
    case Truncation::MaxSteps: return "max_steps";
    }
    return "unknown";
}

const char* to_string(NonStationaryReason r) noexcept {
    switch (r) {
    case NonStationaryReason::DenominatorGrowth: return "denominator_growth";
    case NonStationaryReason::Translation: return "translation";
    case NonStationaryReason::Contraction: return "contraction";
    }
    return "unknown";
}

const char* to_string(UndeterminedReason r) noexcept {
    switch (r) {
    case UndeterminedReason::MaxSteps: return "max_steps";
    case UndeterminedReason::BitCap: return "bit_cap";
    }
    return "unknown";
}

std::string verdict_name(const OrbitVerdict& v) {
    struct Namer {
        std::string operator()(const verdict::Stationary&) const { return "stationary"; }
        std::string operator()(const verdict::Cycle&) const { return "cycle"; }
        std::string operator()(const verdict::CertifiedDivergent&) const { return "divergent"; }
        std::string operator()(const verdict::CertifiedNonStationary&) const { return "non_stationary"; }
        std::string operator()(const verdict::Undetermined&) const { return "undetermined"; }
    };
    return std::visit(Namer{}, v);
}

bool is_certified(const OrbitVerdict& v) {
    return !std::holds_alternative<verdict::Undetermined>(v);
}

Rational step(const Polynomial& p, const Rational& a) {
    return p(a);
}

Rational escape_bound(const Polynomial& p) {
    if (p.degree() < 2) {
        throw Error(ErrorKind::DegreeTooLow, "escape bound needs degree >= 2, got " + std::to_string(p.degree()));
    }
    const auto& cs = p.coefficients();
    Rational sum(2);
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) sum += cs[i].abs();
    const Rational b = sum / cs.back().abs();
    return b < Rational(1) ? Rational(1) : b;
}

std::optional<verdict::CertifiedNonStationary> denominator_certificate(const Polynomial& p, const Rational& a) {
    if (p.degree() < 2 || !p.has_integer_coefficients() || a.is_integer()) return std::nullopt;
    Integer g;
    const Integer lead = p.leading().numerator();
    const Integer q = a.denominator();
    mpz_gcd(g.get_mpz_t(), lead.get_mpz_t(), q.get_mpz_t());
    if (g != 1) return std::nullopt;
    return verdict::CertifiedNonStationary{NonStationaryReason::DenominatorGrowth};
}

OrbitTrace run_orbit(const Polynomial& p, const Rational& a, const OrbitOptions& options) {
    if (options.max_steps < 1) throw Error(ErrorKind::PreconditionViolation, "max_steps must be >= 1");
    OrbitTrace trace{a, {a}, Truncation::MaxSteps};
    std::optional<Rational> bound;
    if (p.degree() >= 2) bound = escape_bound(p);

    std::unordered_map<Rational, std::size_t> seen;
    seen.emplace(a, 0);
    if (bound && a.abs() > *bound) {
        trace.truncation = Truncation::EscapedBound;
        return trace;
    }
    if (a.bit_size() > options.bit_cap) {
        trace.truncation = Truncation::BitCap;
        return trace;
    }
    for (std::size_t n = 0; n < options.max_steps; ++n) {
        Rational next = p(trace.values.back());
        const bool fixed = next == trace.values.back();
        trace.values.push_back(next);
        if (fixed) {
            trace.truncation = Truncation::ReachedFixed;
            return trace;
        }
        if (seen.contains(next)) {
            trace.truncation = Truncation::RepeatDetected;
            return trace;
        }
        if (bound && next.abs() > *bound) {
            trace.truncation = Truncation::EscapedBound;
            return trace;
        }
        if (next.bit_size() > options.bit_cap) {
            trace.truncation = Truncation::BitCap;
            return trace;
        }
        seen.emplace(std::move(next), n + 1);
    }
    trace.truncation = Truncation::MaxSteps;
    return trace;
}

namespace {

// c*x + e, including constants (c = 0).
OrbitVerdict classify_affine(const Polynomial& p, const Rational& a) {
    const Rational e = p[0];
    const Rational c = p[1];
    if (c.is_zero()) {
        return verdict::Stationary{a == e ? std::size_t{0} : std::size_t{1}, e};
    }
    if (c == Rational(1)) {
        if (e.is_zero()) return verdict::Stationary{0, a};
        return verdict::CertifiedNonStationary{NonStationaryReason::Translation};
    }
    // a_n - f = c^n (a - f) with f the unique fixed point
    const Rational f = e / (Rational(1) - c);
    if (a == f) return verdict::Stationary{0, f};
    if (c == Rational(-1)) return verdict::Cycle{0, 2};
    if (c.abs() > Rational(1)) return verdict::CertifiedDivergent{0};
    return verdict::CertifiedNonStationary{NonStationaryReason::Contraction};
}

OrbitVerdict verdict_from_trace(const OrbitTrace& trace) {
    const auto& v = trace.values;
    switch (trace.truncation) {
    case Truncation::ReachedFixed:
        return verdict::Stationary{v.size() - 2, v.back()};
    case Truncation::RepeatDetected: {
        std::size_t entry = 0;
        while (v[entry] != v.back()) ++entry;
        return verdict::Cycle{entry, v.size() - 1 - entry};
    }
    case Truncation::EscapedBound:
        return verdict::CertifiedDivergent{v.size() - 1};
    case Truncation::BitCap:
        return verdict::Undetermined{UndeterminedReason::BitCap};
    case Truncation::MaxSteps:
        break;
    }
    return verdict::Undetermined{UndeterminedReason::MaxSteps};
}

} // namespace

OrbitVerdict classify_orbit(const Polynomial& p, const Rational& a, const OrbitOptions& options,
                            std::optional<OrbitTrace>& trace) {
    trace.reset();
    if (options.max_steps < 1) throw Error(ErrorKind::PreconditionViolation, "max_steps must be >= 1");
    if (p.degree() <= 1) return classify_affine(p, a);
    if (auto cert = denominator_certificate(p, a)) return *cert;
    trace = run_orbit(p, a, options);
    return verdict_from_trace(*trace);
}

OrbitVerdict classify_orbit(const Polynomial& p, const Rational& a, const OrbitOptions& options) {
    std::optional<OrbitTrace> ignored;
    return classify_orbit(p, a, options, ignored);
}

} // namespace fixpoint
