#include <doctest.h>

#include <set>

#include "fixpoint/e3036.hpp"
#include "fixpoint/error.hpp"
#include "fixpoint/serialize.hpp"
#include "test_support.hpp"

using namespace fixpoint;
using namespace fixpoint::e3036;
using fixpoint::testing::poly;
using fixpoint::testing::q;

namespace {

RadicalExpr sqrt2_family(std::string_view signs) {
    RadicalExpr e;
    e.family = Family::Sqrt2Family;
    for (char c : signs) e.signs.push_back(c == '+' ? Sign::Plus : Sign::Minus);
    return e;
}

RadicalExpr sqrt3_family(std::string_view signs) {
    RadicalExpr e = sqrt2_family(signs);
    e.family = Family::Sqrt3Family;
    return e;
}

// true when the decimal string `ref` lies in the interval
bool encloses(const Interval& iv, const char* ref) {
    const std::string s(ref);
    const auto dot = s.find('.');
    const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const int frac = static_cast<int>(s.size() - dot - 1);
    const Rational x = Rational::parse(digits) * pow10(-frac);
    // reference carries more digits than the interval width
    const Rational slack = pow10(-frac);
    return iv.lo - slack <= x && x <= iv.hi + slack;
}

std::shared_ptr<const PolynomialMap> chebyshev() {
    return std::make_shared<PolynomialMap>(chebyshev_map());
}

} // namespace

TEST_CASE("enumerate_radicals counts") {
    CHECK(enumerate_radicals(0).size() == 2);
    CHECK(enumerate_radicals(1).size() == 4);
    CHECK(enumerate_radicals(2).size() == 7);
    const std::size_t totals[] = {2, 4, 7, 13, 25, 49, 97};
    for (std::size_t k = 0; k <= 6; ++k) CHECK(enumerate_radicals(k).size() == totals[k]);
    for (std::size_t k = 1; k <= 6; ++k) CHECK(totals[k] == 3 * (std::size_t{1} << (k - 1)) + 1);
}

TEST_CASE("enumeration order and levels") {
    const auto rs = enumerate_radicals(3);
    std::vector<std::string> rendered;
    for (const auto& r : rs) {
        CHECK(r.level == r.expr.level());
        rendered.push_back(r.expr.render());
    }
    CHECK(rendered == std::vector<std::string>{"−1", "2", "−2", "1", "0", "√3", "−√3", "√2", "−√2",
                                               "√(2+√3)", "√(2−√3)", "−√(2+√3)", "−√(2−√3)"});
    for (std::size_t i = 1; i < rs.size(); ++i) CHECK(rs[i - 1].level <= rs[i].level);
}

TEST_CASE("radical_value") {
    const Interval a = radical_value(sqrt3_family("+"), 20);
    CHECK(a.width() <= pow10(-20));
    CHECK(encloses(radical_value(sqrt3_family("++"), 30), "1.931851652578136573499486399457794735268"));
    CHECK(encloses(radical_value(sqrt2_family("+"), 30), "1.414213562373095048801688724209698078570"));
    CHECK(encloses(radical_value(sqrt3_family("+-+"), 40),
                   "0.26105238444010318309681245579097802038748140962346"));
    CHECK(encloses(radical_value(sqrt2_family("+---"), 40),
                   "0.94279347365199529711277525181050875531492063786496"));
    CHECK(encloses(radical_value(sqrt2_family("-"), 30), "-1.414213562373095048801688724209698078570"));

    const Interval zero = radical_value(RadicalExpr::base(q(0)), 30);
    CHECK(zero.lo == q(0));
    CHECK(zero.hi == q(0));

    RadicalExpr bad;
    bad.family = Family::Sqrt2Family;
    CHECK(bad.signs.empty());
    CHECK_THROWS_AS(radical_value(bad, 10), Error);
}

TEST_CASE("every closed form lands on a fixed point") {
    const Polynomial p = chebyshev_map();
    for (const auto& r : enumerate_radicals(5)) {
        Interval x = radical_value(r.expr, 60);
        for (std::size_t i = 0; i < r.level; ++i) x = eval_interval(p, x, 256);
        const bool near_two = x.contains(q(2)) || x.distance(Interval::point(q(2))) < pow10(-30);
        const bool near_neg_one = x.contains(q(-1)) || x.distance(Interval::point(q(-1))) < pow10(-30);
        CHECK((near_two || near_neg_one));
        CHECK(x.width() < pow10(-20));
    }
}

TEST_CASE("closed forms are distinct") {
    const auto rs = enumerate_radicals(6);
    std::vector<Interval> ivs;
    for (const auto& r : rs) ivs.push_back(radical_value(r.expr, 40));
    std::set<std::string> names;
    for (std::size_t i = 0; i < ivs.size(); ++i) {
        names.insert(rs[i].expr.render());
        for (std::size_t j = i + 1; j < ivs.size(); ++j) CHECK_FALSE(ivs[i].intersects(ivs[j]));
    }
    CHECK(names.size() == rs.size());
}

TEST_CASE("count law against Sturm counts") {
    const PolynomialMap m(chebyshev_map());
    for (std::size_t k = 0; k <= 6; ++k) {
        CHECK(enumerate_radicals(k).size() == SturmSequence(squarefree_part(m.level_poly(k))).count_all());
    }
}

TEST_CASE("match_levels") {
    const ETree t4 = build_tree(chebyshev(), 4);
    const auto r4 = match_levels(t4, 4, pow10(-10));
    CHECK(r4.perfect());
    CHECK(r4.total_enumerated() == 25);
    CHECK(r4.total_tree_nodes() == 25);
    REQUIRE(r4.levels.size() == 5);
    CHECK(r4.levels[3].matched == 6);

    const ETree t2 = build_tree(chebyshev(), 2);
    const auto r2 = match_levels(t2, 2, pow10(-10));
    CHECK(r2.perfect());
    CHECK(r2.total_enumerated() == 7);

    const auto partial = match_levels(t4, 2, pow10(-10));
    CHECK(partial.perfect());
    CHECK(partial.total_tree_nodes() == 7);

    const auto j = to_json(r4);
    CHECK(j["bijection"] == true);

    try {
        (void)match_levels(build_tree(std::make_shared<PolynomialMap>(poly({0, 0, 0, 1})), 2), 2, pow10(-10));
        FAIL("expected WrongPolynomial");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::WrongPolynomial);
    }
    CHECK_THROWS_AS(match_levels(t2, 3, pow10(-10)), Error);
}

TEST_CASE("rendering") {
    CHECK(sqrt3_family("+-+").render() == "√(2−√(2+√3))");
    CHECK(sqrt2_family("-").render() == "−√2");
    CHECK(sqrt2_family("+-").sign_string() == "+-");
    CHECK(RadicalExpr::base(q(-2)).render() == "−2");
    CHECK(sqrt3_family("+-+").level() == 4);
    CHECK(sqrt2_family("+---").level() == 6);
}
