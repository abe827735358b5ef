#include "fixpoint/eset.hpp"

#include <random>
#include <sstream>

#include "fixpoint/error.hpp"

namespace fixpoint {

PolynomialMap::PolynomialMap(Polynomial p, PolyLimits limits, int round_bits)
    : p_(std::move(p)), limits_(limits), round_bits_(round_bits) {}

Interval PolynomialMap::eval_interval(const Interval& x) const {
    return fixpoint::eval_interval(p_, x, round_bits_);
}

Polynomial PolynomialMap::fixed_point_poly() const {
    return fixpoint::fixed_point_poly(p_);
}

Polynomial PolynomialMap::level_poly(std::size_t k) const {
    return fixpoint::level_poly(p_, k, limits_);
}

std::optional<Rational> PolynomialMap::escape_bound() const {
    if (p_.degree() < 2) return std::nullopt;
    return fixpoint::escape_bound(p_);
}

OrbitVerdict PolynomialMap::classify(const Rational& a, const OrbitOptions& options) const {
    return classify_orbit(p_, a, options);
}

std::size_t ETree::count_up_to(std::size_t k) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i <= k && i < levels.size(); ++i) n += levels[i].size();
    return n;
}

std::size_t ETree::root_of(std::size_t id) const {
    while (nodes.at(id).parent) id = *nodes[id].parent;
    return id;
}

std::vector<AlgebraicNumber> fixed_points(const PreimageSolvableMap& m) {
    return isolate_real_roots(m.fixed_point_poly());
}

std::vector<AlgebraicNumber> build_level(const PreimageSolvableMap& m, std::size_t k) {
    return isolate_real_roots(m.level_poly(k));
}

namespace {

const Rational& link_width_floor() {
    static const Rational w = pow10(-30);
    return w;
}

} // namespace

std::size_t link_parent(const ETree& tree, const ENode& child) {
    if (child.depth == 0) {
        throw Error(ErrorKind::PreconditionViolation, "fixed points have no parent");
    }
    if (child.depth - 1 >= tree.levels.size()) {
        throw Error(ErrorKind::PreconditionViolation, "level " + std::to_string(child.depth - 1) + " not built");
    }
    const auto& ids = tree.levels[child.depth - 1];
    std::vector<AlgebraicNumber> cand;
    cand.reserve(ids.size());
    for (auto id : ids) cand.push_back(tree.nodes[id].value);

    AlgebraicNumber c = child.value;
    for (;;) {
        const Interval image = tree.map->eval_interval(c.enclosure());
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (cand[i].enclosure().intersects(image)) hits.push_back(i);
        }
        if (hits.size() == 1) return ids[hits.front()];
        if (hits.empty()) {
            throw Error(ErrorKind::AmbiguousParent, "no level-" + std::to_string(child.depth - 1) +
                                                        " node meets the image of node " + std::to_string(child.id));
        }
        bool refined = false;
        if (!c.is_exact() && c.interval().width() > link_width_floor()) {
            c = c.bisected();
            refined = true;
        }
        for (auto i : hits) {
            if (!cand[i].is_exact() && cand[i].interval().width() > link_width_floor()) {
                cand[i] = cand[i].bisected();
                refined = true;
            }
        }
        if (!refined) {
            throw Error(ErrorKind::AmbiguousParent, std::to_string(hits.size()) + " candidate parents for node " +
                                                        std::to_string(child.id) + " at width 1e-30");
        }
    }
}

ETree build_tree(std::shared_ptr<const PreimageSolvableMap> m, std::size_t max_depth) {
    ETree tree;
    tree.map = std::move(m);
    tree.max_depth = max_depth;
    tree.levels.resize(max_depth + 1);

    const Polynomial q = tree.map->fixed_point_poly();
    // the deepest level is the largest; hitting a limit there fails before any isolation work
    const Polynomial top = tree.map->level_poly(max_depth);
    const auto fps = isolate_real_roots(q);
    if (fps.empty()) {
        tree.e_empty = true;
        return tree;
    }
    for (const auto& v : fps) {
        const std::size_t id = tree.nodes.size();
        tree.nodes.push_back(ENode{id, 0, std::nullopt, v});
        tree.levels[0].push_back(id);
    }

    Polynomial previous = squarefree_part(q);
    for (std::size_t k = 1; k <= max_depth; ++k) {
        const Polynomial level = k == max_depth ? top : tree.map->level_poly(k);
        if (level.is_zero()) {
            throw Error(ErrorKind::DegreeZeroNotAllowed, "level " + std::to_string(k) + " vanishes identically");
        }
        const Polynomial current = squarefree_part(level);
        auto [fresh, rem] = divmod(current, previous);
        if (!rem.is_zero()) {
            throw Error(ErrorKind::PreconditionViolation,
                        "level " + std::to_string(k - 1) + " roots are not all level " + std::to_string(k) + " roots");
        }
        std::vector<AlgebraicNumber> roots;
        if (!fresh.is_constant()) roots = isolate_real_roots(fresh);
        for (auto& v : roots) {
            for (const auto& existing : tree.nodes) {
                if (existing.value.enclosure().intersects(v.enclosure()) &&
                    alg_compare(existing.value, v) == std::strong_ordering::equal) {
                    throw Error(ErrorKind::PreconditionViolation,
                                "level " + std::to_string(k) + " repeats node " + std::to_string(existing.id));
                }
            }
            const std::size_t id = tree.nodes.size();
            tree.nodes.push_back(ENode{id, k, std::nullopt, std::move(v)});
            tree.levels[k].push_back(id);
        }
        for (auto id : tree.levels[k]) tree.nodes[id].parent = link_parent(tree, tree.nodes[id]);
        previous = current;
    }
    return tree;
}

std::optional<std::size_t> member_rational(const PreimageSolvableMap& m, const Rational& a, std::size_t max_depth) {
    const Polynomial q = m.fixed_point_poly();
    const auto bound = m.escape_bound();
    Rational x = a;
    for (std::size_t k = 0; k <= max_depth; ++k) {
        if (q(x).is_zero()) return k;
        // past the escape bound no fixed point is ever reached
        if (bound && x.abs() > *bound) return std::nullopt;
        if (k < max_depth) x = m.eval_rational(x);
    }
    return std::nullopt;
}

std::optional<std::size_t> member_algebraic(const PreimageSolvableMap& m, const AlgebraicNumber& a,
                                            std::size_t max_depth) {
    for (std::size_t k = 0; k <= max_depth; ++k) {
        const Polynomial g = poly_gcd(a.defining(), squarefree_part(m.level_poly(k)));
        if (g.is_constant()) continue;
        if (count_roots_in(g, a.interval()) > 0) return k;
    }
    return std::nullopt;
}

std::vector<Rational> sample_rationals(std::size_t samples, std::uint64_t seed) {
    // raw engine output only: distribution objects differ between standard libraries
    std::mt19937_64 rng(seed);
    std::vector<Rational> out;
    out.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        if (i % 2 == 0) {
            out.emplace_back(static_cast<long>(rng() % 21) - 10);
        } else {
            const long q = 2 + static_cast<long>(rng() % 11);
            const long p = static_cast<long>(rng() % static_cast<std::uint64_t>(6 * q + 1)) - 3 * q;
            out.emplace_back(Integer(p), Integer(q));
        }
    }
    return out;
}

namespace {

std::string describe_node(const ENode& n) {
    std::ostringstream os;
    os << "node " << n.id << " (depth " << n.depth << ", ~" << approx(n.value, 12) << ")";
    return os.str();
}

// Does the enclosure `x` lie within `tol` of the fixed point enclosure `e`?
bool near(const Interval& x, const Interval& e, const Rational& tol) {
    return e.lo - tol <= x.lo && x.hi <= e.hi + tol;
}

} // namespace

CrossValidationReport cross_validate(const ETree& tree, std::size_t samples, std::uint64_t seed,
                                     const OrbitOptions& options) {
    CrossValidationReport report;
    report.max_depth = tree.max_depth;
    report.samples = samples;
    report.seed = seed;
    report.e_empty = tree.e_empty;
    for (auto id : tree.levels.empty() ? std::vector<std::size_t>{} : tree.levels[0]) {
        report.fixed_points.push_back(tree.nodes[id].value);
    }
    const auto& m = *tree.map;
    OrbitOptions opts = options;
    if (opts.max_steps <= tree.max_depth) opts.max_steps = tree.max_depth + 1;

    const Rational fine = pow10(-30);
    const Rational tol = pow10(-10);
    std::vector<Polynomial> level_sf(tree.max_depth + 1);
    std::vector<bool> level_ready(tree.max_depth + 1, false);
    std::vector<std::optional<Interval>> root_enclosure(tree.nodes.size());

    // E subset of A
    report.drains_to.resize(tree.nodes.size());
    for (const auto& node : tree.nodes) {
        ++report.nodes_checked;
        std::size_t steps = 0;
        std::size_t cur = node.id;
        while (tree.nodes[cur].parent) {
            const std::size_t up = *tree.nodes[cur].parent;
            if (tree.nodes[up].depth + 1 != tree.nodes[cur].depth) {
                report.violations.push_back(describe_node(tree.nodes[cur]) + ": parent depth mismatch");
            }
            cur = up;
            ++steps;
        }
        const std::size_t root = cur;
        report.drains_to[node.id] = root;
        if (steps != node.depth) {
            report.violations.push_back(describe_node(node) + ": parent chain length " + std::to_string(steps));
        }
        const AlgebraicNumber& fixed = tree.nodes[root].value;

        if (node.value.is_exact()) {
            ++report.rational_nodes;
            const OrbitVerdict v = m.classify(node.value.exact_value(), opts);
            const auto* st = std::get_if<verdict::Stationary>(&v);
            if (!st) {
                report.violations.push_back(describe_node(node) + ": orbit verdict " + verdict_name(v));
            } else if (st->rank != node.depth) {
                report.violations.push_back(describe_node(node) + ": stationary from rank " +
                                            std::to_string(st->rank));
            } else if (alg_compare(fixed, st->limit) != std::strong_ordering::equal) {
                report.violations.push_back(describe_node(node) + ": limit " + st->limit.to_string() +
                                            " is not its root fixed point");
            }
            continue;
        }

        ++report.irrational_nodes;
        if (!level_ready[node.depth]) {
            level_sf[node.depth] = squarefree_part(m.level_poly(node.depth));
            level_ready[node.depth] = true;
        }
        if (!divides(node.value.defining(), level_sf[node.depth])) {
            report.violations.push_back(describe_node(node) + ": defining polynomial does not divide its level");
        }
        if (!root_enclosure[root]) root_enclosure[root] = enclose(fixed, fine);
        Interval x = enclose(node.value, fine);
        for (std::size_t s = 0; s < tree.max_depth; ++s) {
            x = m.eval_interval(x);
            if (s + 1 == node.depth && !near(x, *root_enclosure[root], tol)) {
                report.violations.push_back(describe_node(node) + ": image after " + std::to_string(node.depth) +
                                            " steps is not within 1e-10 of its fixed point");
            }
        }
        if (!near(x, *root_enclosure[root], tol)) {
            report.violations.push_back(describe_node(node) + ": image after " + std::to_string(tree.max_depth) +
                                        " steps left its fixed point");
        }
    }

    // A subset of E
    const Polynomial q = m.fixed_point_poly();
    report.sampled = sample_rationals(samples, seed);
    for (const auto& a : report.sampled) {
        const OrbitVerdict v = m.classify(a, opts);
        report.sampled_verdicts.push_back(verdict_name(v));
        const auto member = member_rational(m, a, tree.max_depth);
        const auto* st = std::get_if<verdict::Stationary>(&v);
        if (!st) {
            if (member) {
                report.violations.push_back("sample " + a.to_string() + ": member at depth " +
                                            std::to_string(*member) + " but verdict " + verdict_name(v));
            }
            continue;
        }
        ++report.sampled_stationary;
        if (tree.e_empty) {
            report.violations.push_back("sample " + a.to_string() + ": stationary although E is empty");
            continue;
        }
        if (!q(st->limit).is_zero()) {
            report.violations.push_back("sample " + a.to_string() + ": limit " + st->limit.to_string() +
                                        " is not a fixed point");
        }
        if (st->rank > tree.max_depth) {
            ++report.sampled_beyond_depth;
            continue;
        }
        if (!member || *member != st->rank) {
            report.violations.push_back("sample " + a.to_string() + ": stationary from rank " +
                                        std::to_string(st->rank) + " but membership depth " +
                                        (member ? std::to_string(*member) : std::string("none")));
        }
    }
    return report;
}

CrossValidationReport cross_validate(std::shared_ptr<const PreimageSolvableMap> m, std::size_t max_depth,
                                     std::size_t samples, std::uint64_t seed, const OrbitOptions& options) {
    return cross_validate(build_tree(std::move(m), max_depth), samples, seed, options);
}

} // namespace fixpoint
