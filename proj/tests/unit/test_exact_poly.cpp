#include <doctest.h>

#include "fixpoint/error.hpp"
#include "fixpoint/polynomial.hpp"
#include "fixpoint/realroots.hpp"
#include "test_support.hpp"

using namespace fixpoint;
using fixpoint::testing::Gen;
using fixpoint::testing::poly;
using fixpoint::testing::q;

namespace {

const Polynomial kP = poly({-2, 0, 1}); // x^2 - 2

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::PreconditionViolation;
}

} // namespace

TEST_CASE("rational canonical form") {
    const Rational r(Integer(6), Integer(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(Integer(0), Integer(-7)).to_string() == "0");
    CHECK(Rational::parse(" -12/8 ") == q(-3, 2));
    CHECK(Rational::parse("+5") == q(5));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK(kind_of([] { (void)(q(1) / q(0)); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("rational decimal rendering") {
    CHECK(q(1, 3).to_decimal(5) == "0.33333");
    CHECK(q(-7, 4).to_decimal(10) == "-1.75");
    CHECK(q(2, 3).to_decimal(3) == "0.667");
    CHECK(q(999, 1000).to_decimal(2) == "1");
    CHECK(q(123456).to_decimal(3) == "123000");
    CHECK(q(1, 1000000000).to_decimal(2) == "0.000000001");
    CHECK(Rational(Integer(1), Integer("1000000000000000000000")).to_decimal(3) == "1e-21");
}

TEST_CASE("poly_eval") {
    CHECK(poly_eval(kP, q(3)) == q(7));
    CHECK(poly_eval(Polynomial::constant(q(5)), q(123, 7)) == q(5));
    CHECK(poly_eval(kP, q(1, 2)) == q(-7, 4));
    CHECK(poly_eval(Polynomial{}, q(9)) == q(0));
}

TEST_CASE("evaluation agrees with naive power sums") {
    Gen gen(11);
    for (int t = 0; t < 50; ++t) {
        const Polynomial p = gen.rational_poly(static_cast<int>(gen.integer(0, 6)), 9, 5);
        const Rational x = gen.rational(20, 9);
        Rational naive(0);
        Rational power(1);
        for (const auto& c : p.coefficients()) {
            naive += c * power;
            power *= x;
        }
        CHECK(p(x) == naive);
    }
}

TEST_CASE("canonical zero and degree") {
    CHECK(poly({0, 0, 0}).is_zero());
    CHECK(poly({0, 0, 0}) == Polynomial{});
    CHECK(poly({1, 2, 0}).degree() == 1);
    CHECK(Polynomial{}.degree() == -1);
    CHECK(kP.to_string() == "x^2 - 2");
    CHECK(Polynomial({q(-1), q(0), q(1, 2)}).to_string() == "(1/2)*x^2 - 1");
}

TEST_CASE("poly_compose") {
    CHECK(poly_compose(kP, kP) == poly({2, 0, -4, 0, 1}));
    CHECK(poly_compose(kP, Polynomial::identity()) == kP);
    CHECK(poly_compose(kP, Polynomial::constant(q(3))) == Polynomial::constant(q(7)));

    // pointwise oracle: (f o g)(x) = f(g(x)) at random rationals
    Gen gen(20);
    const Polynomial ff = poly_compose(kP, kP);
    for (int t = 0; t < 20; ++t) {
        const Rational x = gen.rational(50, 17);
        CHECK(ff(x) == kP(kP(x)));
    }
    for (int t = 0; t < 50; ++t) {
        const Polynomial f = gen.rational_poly(static_cast<int>(gen.integer(0, 4)), 7, 3);
        const Polynomial g = gen.rational_poly(static_cast<int>(gen.integer(0, 4)), 7, 3);
        const Rational x = gen.rational(30, 11);
        CHECK(poly_eval(poly_compose(f, g), x) == poly_eval(f, poly_eval(g, x)));
    }
}

TEST_CASE("iterate_compose") {
    CHECK(iterate_compose(kP, 0) == Polynomial::identity());
    CHECK(iterate_compose(kP, 1) == kP);
    CHECK(iterate_compose(kP, 2) == poly({2, 0, -4, 0, 1}));
    CHECK(iterate_compose(kP, 6).degree() == 64);

    SUBCASE("associativity") {
        Gen gen(3);
        for (int t = 0; t < 6; ++t) {
            const Polynomial p = gen.poly(static_cast<int>(gen.integer(1, 3)), 3);
            for (std::size_t j = 0; j <= 3; ++j) {
                for (std::size_t k = 0; k + j <= 4; ++k) {
                    CHECK(iterate_compose(p, j + k) == poly_compose(iterate_compose(p, j), iterate_compose(p, k)));
                }
            }
        }
    }

    SUBCASE("degree guard") {
        const PolyLimits small{100, 1000000};
        CHECK(kind_of([&] { (void)iterate_compose(kP, 7, small); }) == ErrorKind::DegreeOverflow);
        CHECK(iterate_compose(kP, 6, small).degree() == 64);
        // huge k must fail fast rather than overflow the degree arithmetic
        CHECK(kind_of([&] { (void)iterate_compose(kP, 1000); }) == ErrorKind::DegreeOverflow);
    }

    SUBCASE("bit guard") {
        const PolyLimits tight{20000, 400};
        const Polynomial big = Polynomial({q(1, 1000003), q(0), q(999983, 7)});
        CHECK(kind_of([&] { (void)iterate_compose(big, 4, tight); }) == ErrorKind::BitCapExceeded);
    }
}

TEST_CASE("ring axioms spot checks") {
    Gen gen(5);
    for (int t = 0; t < 50; ++t) {
        const Polynomial a = gen.poly(static_cast<int>(gen.integer(0, 4)), 5);
        const Polynomial b = gen.poly(static_cast<int>(gen.integer(0, 4)), 5);
        const Polynomial c = gen.poly(static_cast<int>(gen.integer(0, 4)), 5);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK(a - a == Polynomial{});
    }
}

TEST_CASE("divmod reconstructs the dividend") {
    Gen gen(8);
    for (int t = 0; t < 50; ++t) {
        const Polynomial a = gen.rational_poly(static_cast<int>(gen.integer(0, 7)), 9, 4);
        const Polynomial b = gen.rational_poly(static_cast<int>(gen.integer(0, 4)), 9, 4);
        const auto [quot, rem] = divmod(a, b);
        CHECK(quot * b + rem == a);
        CHECK(rem.degree() < b.degree());
    }
    CHECK(kind_of([] { (void)divmod(kP, Polynomial{}); }) == ErrorKind::ZeroPolynomial);
}

TEST_CASE("poly_gcd") {
    CHECK(poly_gcd(poly({-1, 0, 1}), poly({-1, 1})) == poly({-1, 1}));
    const Polynomial prod = poly({-1, 0, 1}) * poly({-4, 0, 1});
    CHECK(prod == poly({4, 0, -5, 0, 1}));
    CHECK(poly_gcd(prod, poly({-2, -1, 1})) == poly({-2, -1, 1}));
    CHECK(poly_gcd(poly({2, 4}), Polynomial{}) == poly({1, 2}).monic());
    CHECK(poly_gcd(Polynomial{}, poly({3, 0, 3})) == poly({1, 0, 1}));
    CHECK(poly_gcd(poly({1, 0, 1}), poly({-1, 1})) == Polynomial::constant(q(1)));
    CHECK(kind_of([] { (void)poly_gcd(Polynomial{}, Polynomial{}); }) == ErrorKind::BothZero);

    SUBCASE("common factor is recovered") {
        Gen gen(17);
        for (int t = 0; t < 30; ++t) {
            const Polynomial f = gen.poly(static_cast<int>(gen.integer(1, 3)), 6);
            const Polynomial a = f * gen.poly(static_cast<int>(gen.integer(0, 3)), 6);
            const Polynomial b = f * gen.poly(static_cast<int>(gen.integer(0, 3)), 6);
            const Polynomial g = poly_gcd(a, b);
            CHECK(g.leading() == q(1));
            CHECK(divides(f, g * Polynomial::constant(f.leading())));
            CHECK(divides(g, a));
            CHECK(divides(g, b));
        }
    }
}

TEST_CASE("squarefree_part") {
    const Polynomial xm1 = poly({-1, 1});
    CHECK(squarefree_part(xm1 * xm1) == xm1);
    CHECK(squarefree_part(kP) == kP);
    CHECK(squarefree_part(xm1 * xm1 * xm1 * poly({1, 0, 1})) == xm1 * poly({1, 0, 1}));
    CHECK(kind_of([] { (void)squarefree_part(Polynomial{}); }) == ErrorKind::ZeroPolynomial);

    // F_2 for x^2 - 2 has 0 as a double root
    const Polynomial f2 = level_poly(kP, 2);
    const Polynomial sf = squarefree_part(f2);
    CHECK(sf.degree() == 7);
    CHECK(sf == poly({0, -12, 0, 19, 0, -8, 0, 1}));
    CHECK(sf(q(0)) == q(0));
    CHECK(sf.derivative()(q(0)) != q(0));

    Gen gen(23);
    for (int t = 0; t < 20; ++t) {
        const Polynomial p = gen.poly(static_cast<int>(gen.integer(1, 3)), 4);
        const Polynomial r = gen.poly(static_cast<int>(gen.integer(1, 2)), 4);
        const Polynomial s = squarefree_part(p * p * r);
        CHECK(poly_gcd(s, s.derivative()).is_constant());
        CHECK(divides(s, p * p * r));
    }
}

TEST_CASE("fixed_point_poly") {
    CHECK(fixed_point_poly(kP) == poly({-2, -1, 1}));
    CHECK(kind_of([] { (void)fixed_point_poly(Polynomial::identity()); }) == ErrorKind::IdentityMap);
    CHECK(fixed_point_poly(poly({1, 1})) == Polynomial::constant(q(1)));
}

TEST_CASE("level_poly") {
    CHECK(level_poly(kP, 0) == poly({-2, -1, 1}));
    CHECK(level_poly(kP, 1) == poly({4, 0, -5, 0, 1}));
    const Polynomial f2 = level_poly(kP, 2);
    CHECK(f2 == poly({0, 0, -12, 0, 19, 0, -8, 0, 1}));
    CHECK(f2.degree() == 8);
    CHECK(isolate_real_roots(f2).size() == 7);
    CHECK(kind_of([] { (void)level_poly(Polynomial::identity(), 1); }) == ErrorKind::IdentityMap);
    CHECK(kind_of([] { (void)level_poly(kP, 20, PolyLimits{1000, 1000000}); }) == ErrorKind::DegreeOverflow);
}

TEST_CASE("divisibility ladder") {
    for (const auto& p : {kP, poly({0, 0, 0, 1}), poly({-1, 0, 1})}) {
        const std::size_t top = p.degree() == 2 && p[0] == q(-2) ? 6 : 3;
        for (std::size_t k = 0; k <= top; ++k) {
            CHECK(divides(squarefree_part(level_poly(p, k)), level_poly(p, k + 1)));
        }
    }
}

TEST_CASE("parse_polynomial") {
    CHECK(parse_polynomial("x^2 - 2") == kP);
    CHECK(parse_polynomial("[-2, 0, 1]") == kP);
    CHECK(parse_polynomial(" [ -2 , 0 , 1 ] ") == kP);
    CHECK(parse_polynomial("[-1, 0, 1/2]") == Polynomial({q(-1), q(0), q(1, 2)}));
    CHECK(parse_polynomial("x^2/2 - 1") == Polynomial({q(-1), q(0), q(1, 2)}));
    CHECK(parse_polynomial("1/2 x^2 - 1") == Polynomial({q(-1), q(0), q(1, 2)}));
    CHECK(parse_polynomial("1 - x") == poly({1, -1}));
    CHECK(parse_polynomial("(x+1)^2 - 3*x") == poly({1, -1, 1}));
    CHECK(parse_polynomial("2x^3") == poly({0, 0, 0, 2}));
    CHECK(parse_polynomial("-x^2") == poly({0, 0, -1}));
    CHECK(parse_polynomial("[]") == Polynomial{});
    CHECK(parse_polynomial("x") == Polynomial::identity());

    auto offset_of = [](const char* text) -> long {
        try {
            (void)parse_polynomial(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    CHECK(offset_of("x^^2") == 2);
    CHECK(offset_of("x^2 +") == 5);
    CHECK(offset_of("x^2 $ 1") == 4);
    CHECK(offset_of("(x+1") == 4);
    CHECK(offset_of("x/x") == 2);
    CHECK(offset_of("x/0") == 2);
    CHECK(offset_of("y") == 0);
    CHECK(offset_of("[1, 2") >= 0);
    CHECK(offset_of("[1, a]") >= 0);
    CHECK(offset_of("") == 0);
}
