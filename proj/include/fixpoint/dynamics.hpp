#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fixpoint/polynomial.hpp"
#include "fixpoint/rational.hpp"

namespace fixpoint {

struct OrbitOptions {
    std::size_t max_steps = 64;
    std::size_t bit_cap = std::size_t{1} << 20;
};

enum class Truncation { ReachedFixed, RepeatDetected, EscapedBound, BitCap, MaxSteps };

const char* to_string(Truncation t) noexcept;

/// a_0 = start, a_{i+1} = P(a_i), exactly.
struct OrbitTrace {
    Rational start;
    std::vector<Rational> values;
    Truncation truncation = Truncation::MaxSteps;
};

/// Reasons a start value is certified never to become constant.
enum class NonStationaryReason {
    DenominatorGrowth, ///< reduced denominators grow strictly (integer map, coprime leading coefficient)
    Translation,       ///< x + c with c != 0
    Contraction,       ///< c*x + e with 0 < |c| < 1 started off the fixed point
};

enum class UndeterminedReason { MaxSteps, BitCap };

const char* to_string(NonStationaryReason r) noexcept;
const char* to_string(UndeterminedReason r) noexcept;

namespace verdict {

/// a_n = limit for every n >= rank (0-based: a_0 is the start).
struct Stationary {
    std::size_t rank = 0;
    Rational limit;
    friend bool operator==(const Stationary&, const Stationary&) = default;
};

struct Cycle {
    std::size_t entry = 0;
    std::size_t period = 2;
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

struct CertifiedDivergent {
    std::size_t step = 0;
    friend bool operator==(const CertifiedDivergent&, const CertifiedDivergent&) = default;
};

struct CertifiedNonStationary {
    NonStationaryReason reason = NonStationaryReason::DenominatorGrowth;
    friend bool operator==(const CertifiedNonStationary&, const CertifiedNonStationary&) = default;
};

struct Undetermined {
    UndeterminedReason reason = UndeterminedReason::MaxSteps;
    friend bool operator==(const Undetermined&, const Undetermined&) = default;
};

} // namespace verdict

using OrbitVerdict = std::variant<verdict::Stationary, verdict::Cycle, verdict::CertifiedDivergent,
                                  verdict::CertifiedNonStationary, verdict::Undetermined>;

/// "stationary", "cycle", "divergent", "non_stationary" or "undetermined".
std::string verdict_name(const OrbitVerdict& v);
bool is_certified(const OrbitVerdict& v);

/// P(a).
Rational step(const Polynomial& p, const Rational& a);

/// B = max(1, (2 + sum_{i<d} |c_i|) / |c_d|): |x| >= B implies |P(x)| >= 2|x|.
/// Throws DegreeTooLow for deg(p) <= 1.
Rational escape_bound(const Polynomial& p);

/// Certificate that the orbit of `a` is never constant: integer coefficients,
/// deg >= 2, a = u/q with q > 1 and gcd(leading, q) = 1. The reduced
/// denominator of P(a) is then q^d, so denominators grow forever.
std::optional<verdict::CertifiedNonStationary> denominator_certificate(const Polynomial& p, const Rational& a);

/// Exact iteration until a fixed value, a repeat, an escape past the escape
/// bound (deg >= 2), the bit cap, or max_steps applications of P.
OrbitTrace run_orbit(const Polynomial& p, const Rational& a, const OrbitOptions& options = {});

/// Eventual-constancy verdict for the orbit of `a`. Degree <= 1 maps are
/// decided in closed form; otherwise the denominator certificate is tried
/// before iterating.
OrbitVerdict classify_orbit(const Polynomial& p, const Rational& a, const OrbitOptions& options = {});

/// Same, also returning the trace when one was computed.
OrbitVerdict classify_orbit(const Polynomial& p, const Rational& a, const OrbitOptions& options,
                            std::optional<OrbitTrace>& trace);

} // namespace fixpoint
