// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fixpoint/dynamics.hpp"
#include "fixpoint/e3036.hpp"
#include "fixpoint/eset.hpp"
#include "fixpoint/polynomial.hpp"
#include "fixpoint/realroots.hpp"
#include "test_support.hpp"

using namespace fixpoint;
using fixpoint::testing::Gen;
using fixpoint::testing::poly;
using fixpoint::testing::q;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

std::shared_ptr<const PolynomialMap> map_of(const Polynomial& p) {
    return std::make_shared<PolynomialMap>(p);
}

Outcome ac1_fixed_points() {
    Outcome o;
    const auto m = map_of(poly({-2, 0, 1}));
    const auto fps = fixed_points(*m);
    if (fps.size() != 2 || !fps[0].is_exact() || !fps[1].is_exact() || fps[0].exact_value() != q(-1) ||
        fps[1].exact_value() != q(2)) {
        o.fail("fixed points are not exactly {-1, 2}");
        return o;
    }
    const ETree tree = build_tree(m, 4);
    for (const auto& n : tree.nodes) {
        const auto& root = tree.nodes[tree.root_of(n.id)].value;
        if (alg_compare(root, q(-1)) != 0 && alg_compare(root, q(2)) != 0) {
            o.fail("node " + std::to_string(n.id) + " drains elsewhere");
        }
    }
    o.detail = "{-1, 2}; " + std::to_string(tree.nodes.size()) + " nodes drain to them";
    return o;
}

Outcome ac2_level_totals() {
    Outcome o;
    const ETree tree = build_tree(map_of(poly({-2, 0, 1})), 4);
    const std::size_t want[] = {2, 4, 7, 13, 25};
    std::string got;
    for (std::size_t k = 0; k <= 4; ++k) {
        const std::size_t n = tree.count_up_to(k);
        got += (k ? ", " : "") + std::to_string(n);
        if (n != want[k]) o.fail("level " + std::to_string(k) + " total " + std::to_string(n));
        if (k >= 1 && want[k] != 3 * (std::size_t{1} << (k - 1)) + 1) o.fail("closed-form law mismatch");
    }
    if (o.ok) o.detail = got;
    return o;
}

Outcome ac3_bijection() {
    Outcome o;
    const ETree tree = build_tree(map_of(e3036::chebyshev_map()), 4);
    for (std::size_t k = 0; k <= 4; ++k) {
        const auto r = e3036::match_levels(tree, k, pow10(-10));
        if (!r.perfect()) o.fail("depth " + std::to_string(k) + " not a bijection");
        if (k == 4 && o.ok) {
            o.detail = std::to_string(r.total_enumerated()) + " = " + std::to_string(r.total_tree_nodes());
        }
    }
    return o;
}

Outcome ac4_ladder() {
    Outcome o;
    struct Case {
        Polynomial p;
        std::size_t top;
        const char* name;
    };
    const Case cases[] = {{poly({-2, 0, 1}), 6, "x^2-2"}, {poly({0, 0, 0, 1}), 3, "x^3"}, {poly({-1, 0, 1}), 3, "x^2-1"}};
    std::size_t checks = 0;
    for (const auto& c : cases) {
        for (std::size_t k = 0; k <= c.top; ++k) {
            const Polynomial sf = squarefree_part(level_poly(c.p, k));
            if (!remainder(level_poly(c.p, k + 1), sf).is_zero()) {
                o.fail(std::string(c.name) + " k=" + std::to_string(k));
            }
            ++checks;
        }
    }
    if (o.ok) o.detail = std::to_string(checks) + " exact divisions";
    return o;
}

Outcome ac5_cross_validate() {
    Outcome o;
    const auto r = cross_validate(map_of(poly({-2, 0, 1})), 4, 200, 7);
    if (!r.passed()) o.fail(std::to_string(r.violations.size()) + " violations, first: " + r.violations.front());
    else
        o.detail = std::to_string(r.nodes_checked) + " nodes, " + std::to_string(r.sampled.size()) + " samples, " +
                   std::to_string(r.sampled_stationary) + " stationary";
    return o;
}

Outcome ac6_exhaustive() {
    Outcome o;
    const Polynomial p = poly({-2, 0, 1});
    const OrbitOptions opts;
    std::size_t n = 0;
    for (long a = -100; a <= 100; ++a, ++n) {
        const auto v = classify_orbit(p, q(a), opts);
        const bool stationary = std::holds_alternative<verdict::Stationary>(v);
        const bool expect = a >= -2 && a <= 2;
        if (stationary != expect) o.fail("integer " + std::to_string(a));
        if (!expect && !std::holds_alternative<verdict::CertifiedDivergent>(v)) o.fail("integer " + std::to_string(a));
    }
    for (long den = 2; den <= 50; ++den) {
        for (long num = -50; num <= 50; ++num) {
            const Rational a = q(num, den);
            if (a.is_integer()) continue;
            ++n;
            if (!denominator_certificate(p, a)) o.fail("no certificate for " + a.to_string());
            const auto v = classify_orbit(p, a, opts);
            const auto* c = std::get_if<verdict::CertifiedNonStationary>(&v);
            if (!c || c->reason != NonStationaryReason::DenominatorGrowth) o.fail("verdict for " + a.to_string());
        }
    }
    if (o.ok) o.detail = std::to_string(n) + " start values";
    return o;
}

// Independent oracle: exact sign scan on a 1/1000 grid over the Cauchy bound,
// then bisection of each sign change down to the target width.
std::vector<Interval> scan_oracle(const Polynomial& p, const Rational& width) {
    std::vector<Interval> roots;
    Rational bound(1);
    for (int i = 0; i < p.degree(); ++i) bound = std::max(bound, Rational(1) + (p[i] / p.leading()).abs());
    const long cells = (bound * Rational(2000)).ceil().get_si();
    const Rational h = q(1, 1000);
    Rational x = -bound;
    int s = p.sign_at(x);
    for (long i = 0; i < cells; ++i) {
        const Rational y = x + h;
        const int t = p.sign_at(y);
        if (t == 0) {
            roots.push_back(Interval::point(y));
        } else if (s != 0 && s != t) {
            Rational lo = x, hi = y;
            while (hi - lo > width) {
                const Rational mid = midpoint(lo, hi);
                const int m = p.sign_at(mid);
                if (m == 0) {
                    lo = hi = mid;
                    break;
                }
                if (m == s) lo = mid;
                else hi = mid;
            }
            roots.push_back({lo, hi});
        }
        x = y;
        s = t;
    }
    return roots;
}

Outcome ac7_isolation_oracle() {
    Outcome o;
    Gen gen(2024);
    const Rational width = pow10(-12);
    std::size_t total_roots = 0;
    for (int t = 0; t < 100; ++t) {
        Polynomial p;
        do {
            p = gen.poly(static_cast<int>(gen.integer(1, 6)), 10);
        } while (!poly_gcd(p, p.derivative()).is_constant());

        const auto sturm = isolate_real_roots(p);
        const auto oracle = scan_oracle(p, width);
        if (sturm.size() != oracle.size()) {
            o.fail("case " + std::to_string(t) + " (" + p.to_string() + "): " + std::to_string(sturm.size()) +
                   " vs " + std::to_string(oracle.size()) + " roots");
            continue;
        }
        total_roots += sturm.size();
        for (std::size_t i = 0; i < sturm.size(); ++i) {
            const Interval e = enclose(sturm[i], width);
            if (e.width() > width || oracle[i].width() > width) o.fail("enclosure too wide");
            // both enclose the same true root, so they must overlap
            if (!e.intersects(oracle[i])) {
                o.fail("case " + std::to_string(t) + " root " + std::to_string(i) + " enclosures disagree");
            }
        }
    }
    if (o.ok) o.detail = "100 polynomials, " + std::to_string(total_roots) + " roots";
    return o;
}

Outcome ac8_empty() {
    Outcome o;
    const auto m = map_of(poly({1, 1}));
    const ETree tree = build_tree(m, 3);
    if (!tree.e_empty || !tree.nodes.empty()) o.fail("E not reported empty");
    const auto samples = sample_rationals(100, 1);
    for (const auto& a : samples) {
        const auto v = classify_orbit(*m->as_polynomial(), a, OrbitOptions{});
        if (!std::holds_alternative<verdict::CertifiedNonStationary>(v) &&
            !std::holds_alternative<verdict::CertifiedDivergent>(v)) {
            o.fail(a.to_string() + " classified " + verdict_name(v));
        }
    }
    const auto r = cross_validate(m, 0, 100, 1);
    if (!r.passed() || !r.e_empty) o.fail("cross validation not a vacuous pass");
    if (o.ok) o.detail = "E empty, 100 samples non-stationary";
    return o;
}

struct Criterion {
    const char* id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"AC1", "fixed points of x^2-2 and drainage", 1, ac1_fixed_points},
        {"AC2", "level totals 2, 4, 7, 13, 25", 5, ac2_level_totals},
        {"AC3", "closed-form bijection to depth 4", 10, ac3_bijection},
        {"AC4", "divisibility ladder", 30, ac4_ladder},
        {"AC5", "cross validation x^2-2, depth 4, 200 samples", 30, ac5_cross_validate},
        {"AC6", "exhaustive orbit classification", 10, ac6_exhaustive},
        {"AC7", "root isolation against sign-scan oracle", 60, ac7_isolation_oracle},
        {"AC8", "empty E for x+1", 5, ac8_empty},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds) o.fail("took " + std::to_string(secs) + " s");
        std::printf("%s %s: %s (%.3f s / %.0f s) %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    c.limit_seconds, o.detail.c_str());
        if (!o.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
