#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fixpoint/eset.hpp"
#include "fixpoint/interval.hpp"
#include "fixpoint/rational.hpp"

namespace fixpoint::e3036 {

// Closed forms of the eventually constant starts of a -> a^2 - 2:
//   base set      {-1, 2} (fixed), {1, -2}, {0}
//   sqrt2 family  s0*sqrt(2 + s1*sqrt(2 + ... + s_{r-1}*sqrt(2)))        level r + 2
//   sqrt3 family  s0*sqrt(2 + s1*sqrt(2 + ... + s_{r-1}*sqrt(3)))        level r + 1
// One sign per radical, outermost first. sqrt(2) = sqrt(2 + 0) and
// sqrt(3) = sqrt(2 + 1) are the preimages of the level-2 value 0 and the
// level-1 value 1, so every radicand stays in [0, 4].

enum class Family { BaseSet, Sqrt2Family, Sqrt3Family };
enum class Sign { Plus, Minus };

const char* to_string(Family f) noexcept;

struct RadicalExpr {
    Family family = Family::BaseSet;
    std::vector<Sign> signs;
    /// Only for the base set.
    Rational base_element;

    static RadicalExpr base(const Rational& value);

    /// Steps until the orbit is constant.
    std::size_t level() const;
    /// "+-+" style sign string.
    std::string sign_string() const;
    /// UTF-8 rendering such as "√(2−√(2+√3))".
    std::string render() const;

    friend bool operator==(const RadicalExpr&, const RadicalExpr&) = default;
};

struct LeveledRadical {
    RadicalExpr expr;
    std::size_t level = 0;
};

/// Every closed form of level <= max_level, grouped by level; within a level
/// base elements come first, then the sqrt2 and sqrt3 families with sign
/// strings in lexicographic order ('+' before '-').
std::vector<LeveledRadical> enumerate_radicals(std::size_t max_level);

/// Enclosure of the value with width <= 10^-digits, from interval square
/// roots with outward rounding. Throws NegativeRadicand on malformed input.
Interval radical_value(const RadicalExpr& e, int digits);

struct LevelMatch {
    std::size_t level = 0;
    std::size_t enumerated = 0;
    std::size_t tree_nodes = 0;
    std::size_t matched = 0;
    std::vector<std::string> unmatched_radicals;
    std::vector<std::size_t> unmatched_nodes;

    bool perfect() const {
        return unmatched_radicals.empty() && unmatched_nodes.empty() && enumerated == tree_nodes;
    }
};

struct MatchReport {
    std::size_t max_level = 0;
    Rational tolerance;
    std::vector<LevelMatch> levels;

    bool perfect() const;
    std::size_t total_enumerated() const;
    std::size_t total_tree_nodes() const;
};

/// The polynomial x^2 - 2.
Polynomial chebyshev_map();

/// Level-by-level bijection between closed forms and tree nodes within `tol`.
/// Throws WrongPolynomial unless the tree was built for x^2 - 2, and
/// PreconditionViolation if the tree is shallower than max_level.
MatchReport match_levels(const ETree& tree, std::size_t max_level, const Rational& tol);

} // namespace fixpoint::e3036
