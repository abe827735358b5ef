#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fixpoint/dynamics.hpp"
#include "fixpoint/interval.hpp"
#include "fixpoint/polynomial.hpp"
#include "fixpoint/realroots.hpp"

namespace fixpoint {

/// A self-map of the reals whose fixed points and iterated preimages are
/// the real roots of computable level polynomials. Polynomials are the only
/// shipped instance.
class PreimageSolvableMap {
public:
    virtual ~PreimageSolvableMap() = default;

    virtual Rational eval_rational(const Rational& a) const = 0;
    /// Enclosure of the image of x.
    virtual Interval eval_interval(const Interval& x) const = 0;
    /// Q(x) = f(x) - x.
    virtual Polynomial fixed_point_poly() const = 0;
    /// F_k = Q(f^k(x)); level_poly(0) == fixed_point_poly().
    virtual Polynomial level_poly(std::size_t k) const = 0;
    /// |x| > bound implies the orbit escapes; absent when no such bound exists.
    virtual std::optional<Rational> escape_bound() const = 0;
    virtual OrbitVerdict classify(const Rational& a, const OrbitOptions& options) const = 0;

    /// The underlying polynomial for polynomial maps, else nullptr.
    virtual const Polynomial* as_polynomial() const { return nullptr; }
};

class PolynomialMap final : public PreimageSolvableMap {
public:
    explicit PolynomialMap(Polynomial p, PolyLimits limits = {}, int round_bits = 256);

    Rational eval_rational(const Rational& a) const override { return p_(a); }
    Interval eval_interval(const Interval& x) const override;
    Polynomial fixed_point_poly() const override;
    Polynomial level_poly(std::size_t k) const override;
    std::optional<Rational> escape_bound() const override;
    OrbitVerdict classify(const Rational& a, const OrbitOptions& options) const override;
    const Polynomial* as_polynomial() const override { return &p_; }

    const PolyLimits& limits() const { return limits_; }

private:
    Polynomial p_;
    PolyLimits limits_;
    int round_bits_;
};

struct ENode {
    std::size_t id = 0;
    /// Exact number of steps for the orbit to reach a fixed point.
    std::size_t depth = 0;
    /// Node holding f(value); absent exactly for fixed points.
    std::optional<std::size_t> parent;
    AlgebraicNumber value;
};

/// Depth-truncated recurrent set: fixed points at level 0, and at level k
/// the points first reaching a fixed point after exactly k steps.
struct ETree {
    std::shared_ptr<const PreimageSolvableMap> map;
    std::size_t max_depth = 0;
    /// No real fixed point, hence no eventually constant orbit at all.
    bool e_empty = false;
    std::vector<ENode> nodes;
    /// levels[k] lists node ids of depth k, ascending by value.
    std::vector<std::vector<std::size_t>> levels;

    std::size_t count_up_to(std::size_t k) const;
    /// Id of the depth-0 node the orbit of `id` lands on.
    std::size_t root_of(std::size_t id) const;
};

/// Ascending distinct real roots of f(x) = x. Throws IdentityMap.
std::vector<AlgebraicNumber> fixed_points(const PreimageSolvableMap& m);

/// All distinct real roots of squarefree(level_poly(k)): the depth <= k slice.
std::vector<AlgebraicNumber> build_level(const PreimageSolvableMap& m, std::size_t k);

/// Levels 0..max_depth with parent links; an empty fixed-point set yields a
/// tree flagged e_empty.
ETree build_tree(std::shared_ptr<const PreimageSolvableMap> m, std::size_t max_depth);

/// Id of the node at depth child.depth - 1 holding f(child.value), found by
/// interval evaluation with refinement. Throws PreconditionViolation for a
/// depth-0 child or missing level, AmbiguousParent if refinement to 1e-30
/// cannot single out one candidate.
std::size_t link_parent(const ETree& tree, const ENode& child);

/// Smallest k <= max_depth with F_k(a) = 0, by exact forward iteration.
std::optional<std::size_t> member_rational(const PreimageSolvableMap& m, const Rational& a,
                                           std::size_t max_depth);

/// Smallest k <= max_depth for which gcd(a.defining, squarefree(F_k)) has a
/// root inside a's isolating interval.
std::optional<std::size_t> member_algebraic(const PreimageSolvableMap& m, const AlgebraicNumber& a,
                                            std::size_t max_depth);

struct CrossValidationReport {
    std::size_t max_depth = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    bool e_empty = false;
    std::vector<AlgebraicNumber> fixed_points;

    // tree -> orbits (E subset of A)
    std::size_t nodes_checked = 0;
    std::size_t rational_nodes = 0;
    std::size_t irrational_nodes = 0;
    /// drains_to[id] is the depth-0 node reached from node id.
    std::vector<std::size_t> drains_to;

    // sampled orbits -> tree (A subset of E)
    std::vector<Rational> sampled;
    std::vector<std::string> sampled_verdicts;
    std::size_t sampled_stationary = 0;
    std::size_t sampled_beyond_depth = 0;

    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
};

/// Draws `samples` seeded rationals: alternately small integers in [-10, 10]
/// and fractions p/q with q in [2, 12], |p/q| <= 3.
std::vector<Rational> sample_rationals(std::size_t samples, std::uint64_t seed);

/// Two-directional check that the truncated tree and the set of eventually
/// constant starts agree.
CrossValidationReport cross_validate(const ETree& tree, std::size_t samples, std::uint64_t seed,
                                     const OrbitOptions& options = {});
CrossValidationReport cross_validate(std::shared_ptr<const PreimageSolvableMap> m, std::size_t max_depth,
                                     std::size_t samples, std::uint64_t seed, const OrbitOptions& options = {});

} // namespace fixpoint
