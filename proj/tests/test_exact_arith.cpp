#include <random>

#include "doctest.h"
#include "fseries/ring.hpp"
#include "support.hpp"

using namespace fseries;
using fseries::testing::check_error;

TEST_CASE("rationals are stored reduced") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r == Rational(-3, 2));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(2, 3).inv() == Rational(3, 2));
    CHECK(Rational(-2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("rational errors") {
    check_error(ErrorKind::DivisionByZero, [] { return Rational(1, 0); });
    check_error(ErrorKind::DivisionByZero, [] { return Rational(1) / Rational(0); });
    check_error(ErrorKind::DivisionByZero, [] { return Rational(0).inv(); });
    check_error(ErrorKind::ParseError, [] { return Rational::parse("1/x"); });
}

TEST_CASE("p-adic valuation") {
    CHECK(padic_valuation(Rational(24, 5), 2) == 3);
    CHECK(padic_valuation(Rational(24, 25), 5) == -2);
    CHECK(padic_valuation(Rational(7), 3) == 0);
}

TEST_CASE("prime field arithmetic") {
    PrimeFieldElem a(7, 3), b(7, 5);
    CHECK((a + b).value() == 1);
    CHECK((a * b).value() == 1);
    CHECK((a / b * b) == a);
    CHECK(a.pow(6).value() == 1);
    CHECK(PrimeFieldElem(7, -1).value() == 6);
    CHECK(rational_mod_p(Rational(1, 2), 7).value() == 4);
    CHECK(is_prime(101));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("prime field errors") {
    check_error(ErrorKind::MixedRings, [] { return PrimeFieldElem(7, 1) + PrimeFieldElem(11, 1); });
    check_error(ErrorKind::DivisionByZero, [] { return PrimeFieldElem(5, 0).inv(); });
    check_error(ErrorKind::BadReduction, [] { return rational_mod_p(Rational(1, 14), 7); });
}

TEST_CASE("cyclotomic arithmetic reduces modulo Phi_n") {
    CyclotomicElem w = CyclotomicElem::root_power(3, 1);
    CHECK(w.pow(3) == CyclotomicElem(Rational(1)));
    CHECK(w * w + w + CyclotomicElem(Rational(1)) == CyclotomicElem(Rational(0)));
    CyclotomicElem i = CyclotomicElem::root_power(4, 1);
    CHECK(i * i == CyclotomicElem(Rational(-1)));
    CHECK((i / (i + CyclotomicElem(Rational(1)))) * (i + CyclotomicElem(Rational(1))) == i);
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(euler_phi(13) == 12);
    CyclotomicElem z = CyclotomicElem::root_power(13, 5);
    CHECK(z.pow(13).is_scalar());
    check_error(ErrorKind::MixedRings, [&] { return w + i; });
    check_error(ErrorKind::DivisionByZero, [] { return CyclotomicElem(Rational(0)).inv(); });
}

TEST_CASE("parameter polynomials") {
    ParamPolynomial p = ParamPolynomial::parse("(a-1)*(a+1)");
    ParamPolynomial a = ParamPolynomial::variable("a");
    CHECK(p == a * a - ParamPolynomial(1));
    CHECK(p.divide_exact(a - ParamPolynomial(1)) == a + ParamPolynomial(1));
    CHECK(p.degree("a") == 2);
    CHECK(p.degree("b") == 0);
    CHECK(p.eval({{"a", Rational(3)}}) == Rational(8));
    CHECK(p.substitute({{"a", ParamPolynomial::parse("b+1")}}) == ParamPolynomial::parse("b^2+2*b"));
    CHECK(ParamPolynomial::parse("6*a/4 + 3/2").content() == Rational(3, 2));
    ParamPolynomial q = ParamPolynomial::parse("x*y + 3*x^2*y^2");
    CHECK(q.coefficient("y", 2) == ParamPolynomial::parse("3*x^2"));
    CHECK(q.partial("x") == ParamPolynomial::parse("y + 6*x*y^2"));
    check_error(ErrorKind::DivisionNotExact, [&] { return p.divide_exact(a + ParamPolynomial(2)); });
    check_error(ErrorKind::NonUnitDivisor, [&] { return p / (a + ParamPolynomial(2)); });
    check_error(ErrorKind::MissingAssignment, [&] { return p.eval({}); });
    check_error(ErrorKind::ParseError, [] { return ParamPolynomial::parse("a**"); });
}

TEST_CASE("parameter polynomial substitution is simultaneous") {
    ParamPolynomial p = ParamPolynomial::parse("a - 2*b");
    ParamPolynomial swapped = p.substitute({{"a", ParamPolynomial::variable("b")}, {"b", ParamPolynomial::variable("a")}});
    CHECK(swapped == ParamPolynomial::parse("b - 2*a"));
}

TEST_CASE("parameter rational functions normalize") {
    ParamPolynomial a = ParamPolynomial::variable("a");
    ParamRationalFunction r(a * a - ParamPolynomial(1), a - ParamPolynomial(1));
    ParamRationalFunction s(a + ParamPolynomial(1));
    CHECK(r == s);
    CHECK((r / s).eval({{"a", Rational(5)}}) == Rational(1));
    check_error(ErrorKind::DivisionByZero, [&] { return r / ParamRationalFunction(0); });
}

TEST_CASE("ring axioms over random rationals") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-50, 50), e(1, 30);
    for (int i = 0; i < 200; ++i) {
        Rational x(d(rng), e(rng)), y(d(rng), e(rng)), z(d(rng), e(rng));
        CHECK((x + y) * z == x * z + y * z);
        CHECK((x * y) * z == x * (y * z));
        if (!y.is_zero()) CHECK(x / y * y == x);
    }
}
