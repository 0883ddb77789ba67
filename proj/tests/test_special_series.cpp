#include <cmath>

#include "doctest.h"
#include "fseries/special.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace fseries;
using fseries::testing::check_error;
using fseries::testing::check_fixture;

namespace {

// sum (a)_n (b)_n / ((c)_n n!) (s x)^n from Pochhammer products.
QSeries hypergeometric_oracle(Rational a, Rational b, Rational c, Rational s, int order) {
    QSeries out(order);
    Rational t(1);
    for (int n = 0; n <= order; ++n) {
        out[n] = t;
        t = t * (a + Rational(n)) * (b + Rational(n)) / ((c + Rational(n)) * Rational(n + 1)) * s;
    }
    return out;
}

// (1 + s x)^r from generalized binomial coefficients.
QSeries binomial_oracle(Rational r, Rational s, int order) {
    QSeries out(order);
    Rational t(1);
    for (int n = 0; n <= order; ++n) {
        out[n] = t;
        t = t * (r - Rational(n)) / Rational(n + 1) * s;
    }
    return out;
}

long sigma3(long n) {
    long s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) s += d * d * d;
    return s;
}

// 1/j = Delta / E4^3 with E4 = 1 + 240 sum sigma_3(n) q^n and Delta = q prod (1-q^n)^24.
QSeries inverse_j_oracle(int order) {
    QSeries e4(order), eta = QSeries::constant(Rational(1), order);
    e4[0] = Rational(1);
    for (int n = 1; n <= order; ++n) e4[n] = Rational(240 * sigma3(n));
    for (int n = 1; n <= order; ++n) {
        QSeries f = QSeries::constant(Rational(1), order);
        f[n] = Rational(-1);
        eta = mul(eta, f);
    }
    QSeries delta = pow(eta, 24).shifted_up(1).truncated(order);
    return divide(delta, pow(e4, 3));
}

// x exp(int (1/F - 1/x) dx) as an alternative route to the nome.
QSeries nome_oracle(const QSeries& f) {
    QSeries u = f.shifted_down(1);
    QSeries integrand = divide(QSeries::constant(Rational(1), u.order()) - u, f);
    return exp(integrate(integrand)).shifted_up(1).truncated(f.order());
}

}  // namespace

TEST_CASE("elliptic F against the hypergeometric closed form") {
    const int K = 25;
    QSeries h = hypergeometric_oracle(Rational(1, 12), Rational(5, 12), Rational(1), Rational(1728), K);
    QSeries oracle = mul(binomial_oracle(Rational(1, 2), Rational(-1728), K), mul(h, h)).shifted_up(1).truncated(K);
    FData f = build_F(FSpec::elliptic(), K);
    CHECK(f.power == 1);
    CHECK(f.g == oracle);
    check_fixture("elliptic-F", f.g);
    CHECK(gauss_2f1_series(Rational(1, 12), Rational(5, 12), Rational(1), Rational(1728), K) == h);
}

TEST_CASE("x^2 W against the displayed rational functions") {
    const int K = 20;
    CHECK(w_from_f(FSpec::elliptic(), Rational(0), K) ==
          props::rational_function_series(load_fixture("elliptic-W"), 2, K));
    CHECK(w_from_f(FSpec::parse("poly:1,-5,6"), Rational(0), K) ==
          props::rational_function_series(load_fixture("cubic-F-W"), 2, K));
    CHECK(w_from_fdata(build_F(FSpec::heun81(), K + 2), Rational(0), K) ==
          props::rational_function_series(load_fixture("heun-W"), 2, K));
}

TEST_CASE("alpha deformation adds alpha^2/(2F^2)") {
    const int K = 12;
    FSpec spec = FSpec::parse("poly:1,-5,6");
    QSeries f = build_F(spec, K + 2).g;
    QSeries w0 = w_from_f(spec, Rational(0), K), w3 = w_from_f(spec, Rational(3), K);
    QSeries u = f.shifted_down(1);
    QSeries extra = scale(inverse(mul(u, u)), Rational(9, 2));
    CHECK((w3 - w0) == extra.truncated(K));
}

TEST_CASE("polynomial F specifications") {
    check_fixture("factored-F", build_F(FSpec::parse("poly:1,-744,138383"), 6).g);
    check_fixture("truncated-F", build_F(FSpec::parse("poly:1,-744,-393768"), 6).g);
    CHECK(build_F(FSpec::parse("poly-factored:(1,-373)(1,-371)"), 6).g ==
          build_F(FSpec::parse("poly:1,-744,138383"), 6).g);
    check_error(ErrorKind::ParseError, [] { return FSpec::parse("poly:"); });
    check_error(ErrorKind::ParseError, [] { return FSpec::parse("sinusoidal"); });
    check_error(ErrorKind::BadNormalization, [] { return nome_from_spec(FSpec::parse("poly:2,1"), 5); });
    check_error(ErrorKind::BadNormalization, [] { return w_from_f(FSpec::parse("poly:0,1"), Rational(0), 5); });
}

TEST_CASE("Heun F squared") {
    FData f = build_F(FSpec::heun81(), 8);
    CHECK(f.power == 2);
    check_fixture("heun-F-squared", scale(f.g, Rational(81)));
}

TEST_CASE("elliptic nome and mirror against modular forms") {
    const int K = 40;
    QSeries q = nome_from_spec(FSpec::elliptic(), K);
    CHECK(q == nome_oracle(build_F(FSpec::elliptic(), K).g));
    QSeries X = mirror_from_nome(q);
    CHECK(X == inverse_j_oracle(K));
    check_fixture("elliptic-nome", q);
    check_fixture("elliptic-mirror", X);
}

TEST_CASE("polynomial F nome and mirror") {
    const int K = 30;
    FSpec cubic = FSpec::parse("poly:1,-5,6");
    QSeries q = nome_from_spec(cubic, K);
    check_fixture("cubic-F-nome", q);
    CHECK(q == props::rational_function_series(load_fixture("cubic-F-nome-closed"), 0, K));
    CHECK(q == nome_oracle(build_F(cubic, K).g));
    check_fixture("cubic-F-mirror", mirror_from_nome(q));

    FSpec factored = FSpec::parse("poly:1,-744,138383");
    QSeries qf = nome_from_spec(factored, K);
    CHECK(qf == nome_oracle(build_F(factored, K).g));
    check_fixture("factored-F-nome", qf);
    check_fixture("factored-F-mirror", mirror_from_nome(qf));

    FSpec truncated = FSpec::parse("poly:1,-744,-393768");
    QSeries qt = nome_from_spec(truncated, K);
    CHECK(qt == nome_oracle(build_F(truncated, K).g));
    check_fixture("truncated-F-nome", qt);
    check_fixture("truncated-F-mirror", mirror_from_nome(qt));
}

TEST_CASE("Heun nome and mirror") {
    QSeries q = nome_from_spec(FSpec::heun81(), 8);
    // (int dx/F)^2 / 4 with F = sqrt(g)
    FData f = build_F(FSpec::heun81(), 9);
    QSeries u = pow_rational(f.g.shifted_down(1), Rational(-1, 2));
    // int x^(-1/2) u dx = 2 x^(1/2) sum u_n x^n / (2n+1)
    QSeries half(u.order());
    for (int n = 0; n <= u.order(); ++n) half[n] = u[n] / Rational(2 * n + 1);
    QSeries oracle = mul(half, half).shifted_up(1).truncated(8);
    CHECK(q == oracle);
    CHECK(q[3] == Rational(1109, 6561));
    const Fixture& fx = load_fixture("heun-nome");
    CHECK(fx.coeff(3) == ParamPolynomial(Rational(1109, 86561)));
    for (int n : {1, 2, 4, 5, 6}) CHECK(fx.coeff(n) == ParamPolynomial(q[n]));
    check_fixture("heun-mirror", mirror_from_nome(q));
}

TEST_CASE("quoted radii") {
    CHECK(load_fixture("mirror-radius").scalar_double() ==
          doctest::Approx(std::exp(-std::sqrt(3.0) * M_PI)).epsilon(1e-10));
    CHECK(load_fixture("truncated-F-radius").scalar_double() ==
          doctest::Approx(std::sqrt(14782.0) / 65628 - 31.0 / 32814).epsilon(1e-10));
    CHECK(load_fixture("nome-radius").scalar() == Rational(1, 1728));
}
