#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fixpoint/polynomial.hpp"
#include "fixpoint/rational.hpp"

namespace fixpoint::cli {

enum class OutputFormat { Json, Dot, Csv, Text };

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kComputation = 2,
    kValidationFailure = 3,
};

struct Config {
    /// Unset means: 5 for degree <= 2, 3 for degree 3, 2 above.
    std::optional<std::size_t> max_depth;
    std::size_t max_steps = 64;
    std::size_t bit_cap = std::size_t{1} << 20;
    int precision_digits = 30;
    Rational tolerance = pow10(-10);
    OutputFormat output_format = OutputFormat::Text;
    std::uint64_t seed = 0;
    PolyLimits limits;

    std::size_t depth_for(const Polynomial& p) const;
    /// Throws Error(PreconditionViolation) when a limit or the tolerance is nonpositive.
    void validate() const;
};

/// "1e-10", "0.25", "-3", "7/2".
Rational parse_decimal(std::string_view text);

/// Runs one subcommand; args exclude the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fixpoint::cli
