#include <cmath>

#include "doctest.h"
#include "fseries/arith.hpp"
#include "fseries/schwarzian.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace fseries;
using fseries::testing::check_error;
using fseries::testing::check_fixture;

namespace {

const FSpec kTruncated = FSpec::parse("poly:1,-744,-393768");

}  // namespace

TEST_CASE("reduction modulo a prime") {
    QSeries f(3);
    f[0] = Rational(1, 2);
    f[1] = Rational(3);
    f[2] = Rational(-1, 3);
    f[3] = Rational(7);
    ModPSeries m = reduce_mod_p(f, 5);
    CHECK(m[0].value() == 3);
    CHECK(m[1].value() == 3);
    CHECK(m[2].value() == 3);
    CHECK(m[3].value() == 2);
    bool thrown = false;
    try {
        reduce_mod_p(f, 3);
    } catch (const Error& e) {
        thrown = true;
        CHECK(e.kind() == ErrorKind::BadReduction);
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
    CHECK(thrown);
    check_error(ErrorKind::BadReduction, [&] { return reduce_mod_p(f, 9); });
}

TEST_CASE("sigma identity modulo 2") {
    SigmaReport s = sigma_check(260);
    CHECK(s.residual_zero);
    CHECK(s.matches_lacunary);
    check_fixture("sigma-at-3", s.sigma);
    const Fixture& fx = load_fixture("sigma-at-3-mod2");
    for (int n = 0; n <= 260; ++n) {
        INFO("x^" << n);
        CHECK(s.sigma_mod2[n].value() == (fx.coeff(n).is_zero() ? 0u : 1u));
    }
    // sigma itself is integral
    for (int n = 0; n <= s.sigma.order(); ++n) CHECK(s.sigma[n].den() == 1);
}

TEST_CASE("p-curvature of the nome operator for the truncated F") {
    OperatorOrderOne op = OperatorOrderOne::nome_operator(kTruncated.poly);
    PCurvatureSurvey s = p_curvature_survey(op, 3, 101);
    const auto& zero = load_fixture("pcurv-zero").primes;
    const auto& nonzero = load_fixture("pcurv-nonzero").primes;
    CHECK(s.zero == zero);
    std::vector<std::uint64_t> head(s.nonzero.begin(), s.nonzero.begin() + static_cast<long>(nonzero.size()));
    CHECK(head == nonzero);
    CHECK(s.nonzero.size() == nonzero.size() + 2);
    CHECK(s.skipped.empty());
    CHECK(p_curvature_order_one(op, 2) == PCurvature::Zero);
    check_error(ErrorKind::BadReduction, [&] { return p_curvature_order_one(op, 15); });
}

TEST_CASE("p-curvature of the elliptic nome operator is zero where F reduces") {
    // F = x(1-x) has algebraic nome x/(1-x); every prime gives zero p-curvature
    OperatorOrderOne op = OperatorOrderOne::nome_operator({Rational(0), Rational(1), Rational(-1)});
    PCurvatureSurvey s = p_curvature_survey(op, 2, 60);
    CHECK(s.nonzero.empty());
    CHECK(s.zero.size() == 17);
}

TEST_CASE("pole collision is reported") {
    OperatorOrderOne op{{Rational(1)}, {Rational(7), Rational(0)}};
    check_error(ErrorKind::PoleCollision, [&] { return p_curvature_order_one(op, 7); });
    OperatorOrderOne frac{{Rational(1, 5)}, {Rational(1), Rational(1)}};
    check_error(ErrorKind::PoleCollision, [&] { return p_curvature_order_one(frac, 5); });
}

TEST_CASE("radius estimates") {
    QSeries q = nome_from_spec(kTruncated, 200);
    RadiusEstimate r = radius_estimate(q, 8);
    double target = load_fixture("truncated-F-radius").scalar_double();
    CHECK(std::abs(r.estimate - target) < 0.01 * target);
    CHECK(r.sign == 1);
    CHECK(r.trace.size() == 8);
    CHECK(r.last_index == 199);

    QSeries nome = nome_from_spec(FSpec::elliptic(), 200);
    double one_over_1728 = load_fixture("nome-radius").scalar_double();
    CHECK(std::abs(radius_estimate(nome, 8).estimate - one_over_1728) < 0.02 * one_over_1728);

    check_error(ErrorKind::InsufficientTerms, [] { return radius_estimate(QSeries::x(3), 8); });
    check_error(ErrorKind::InsufficientTerms, [] { return radius_estimate(QSeries::x(30), 8); });
    CHECK(ratio_to_decimal(Rational(1, 3), 5) == "0.33333");
}

TEST_CASE("mirror ratio: the quoted value needs 521 coefficients") {
    const int L = 521;
    QSeries X = mirror_from_nome(nome_from_spec(FSpec::elliptic(), L));
    double quoted = load_fixture("mirror-ratio").scalar_double();
    CHECK(ratio_to_decimal(X[L - 1] / X[L], 10) == "-0.004316810242");
    CHECK(to_double((X[L - 1] / X[L]).num(), (X[L - 1] / X[L]).den()) == doctest::Approx(quoted).epsilon(1e-9));
    Rational r421 = X[420] / X[421];
    CHECK(ratio_to_decimal(r421, 6) == "-0.00431287");
    double radius = load_fixture("mirror-radius").scalar_double();
    CHECK(std::abs(std::abs(r421.to_double()) - radius) < 0.005 * radius);
}

TEST_CASE("global boundedness probe") {
    QSeries X = mirror_from_nome(nome_from_spec(FSpec::elliptic(), 40));
    BoundednessReport integral = globally_bounded_probe(X, 40);
    CHECK(integral.integral);
    CHECK_FALSE(integral.unbounded_evidence());

    PFamily fam = solve_one_param(FSpec::elliptic(), 30);
    BoundednessReport half = globally_bounded_probe(specialize(fam.y, {{"a", Rational(1, 2)}}), 30);
    CHECK(half.rescalable);
    CHECK(half.rescale == Rational(2));

    QSeries inv = solve_family<Rational>(w_from_f(kTruncated, Rational(0), 52), 1, Rational(-1), 50).y;
    BoundednessReport br = globally_bounded_probe(inv, 50);
    CHECK(br.unbounded_evidence());
    CHECK_FALSE(br.rescalable);
    for (const auto& g : br.primes)
        if (g.p > 25) CHECK(g.first_index == static_cast<int>(g.p) + 1);
}

TEST_CASE("property: reduction is a ring map") {
    for (int seed = 1; seed <= props::kSeeds; ++seed) {
        std::string r = props::reduction_is_multiplicative(static_cast<std::uint64_t>(seed));
        INFO(r);
        CHECK(r.empty());
    }
}

TEST_CASE("property: logarithmic derivatives have zero p-curvature") {
    for (int seed = 1; seed <= props::kSeeds; ++seed) {
        std::string r = props::logarithmic_derivative_p_curvature(static_cast<std::uint64_t>(seed));
        INFO(r);
        CHECK(r.empty());
    }
}

TEST_CASE("property: radius estimate self-calibrates") {
    for (int seed = 1; seed <= props::kSeeds; ++seed) {
        std::string r = props::radius_self_calibration(static_cast<std::uint64_t>(seed));
        INFO(r);
        CHECK(r.empty());
    }
}
