#pragma once

#include <string>
#include <vector>

#include "fseries/series.hpp"

namespace fseries {

using QSeries = Series<Rational>;

// sum (a)_n (b)_n / ((c)_n n!) (s x)^n to order K.
QSeries gauss_2f1_series(const Rational& a, const Rational& b, const Rational& c, const Rational& scale, int order);

// Local solution at 0 of the general Heun equation with singularities 0, 1, a, normalized to 1.
QSeries heun_series(const Rational& a, const Rational& q, const Rational& alpha, const Rational& beta,
                    const Rational& gamma, const Rational& delta, int order);

// Source of the function F(x).
struct FSpec {
    enum class Kind { Elliptic, Heun81, Polynomial, Custom };
    Kind kind = Kind::Elliptic;
    // Coefficients of F from x^0 (Polynomial).
    std::vector<Rational> poly;
    // Explicit F (Custom).
    QSeries custom;
    std::string label;

    static FSpec elliptic();
    static FSpec heun81();
    static FSpec polynomial(std::vector<Rational> coeffs);
    static FSpec custom_series(const QSeries& f, std::string label = "custom");
    // "elliptic", "heun81", "poly:c1,c2,..." (coefficients of x, x^2, ...),
    // "poly-factored:(c0,c1)(c0,c1)..." meaning x * prod (c0 + c1 x).
    static FSpec parse(const std::string& text);
    std::string str() const { return label; }
};

// F in the form F^power = g; power is 2 for the Heun example (F has a square-root branch at 0).
struct FData {
    QSeries g;
    int power = 1;
};

FData build_F(const FSpec& spec, int order);

// x^2 W(x) for W = F''/F - (F'/F)^2/2 + alpha^2/(2 F^2), to order K.
QSeries w_from_f(const FSpec& spec, const Rational& alpha, int order);
QSeries w_from_fdata(const FData& f, const Rational& alpha, int order);

// x A_R(x) for A_R = F'/F + alpha/F, to order K.
QSeries rank2_r_from_f(const FSpec& spec, const Rational& alpha, int order);

// Q = x + O(x^2) with F Q' = Q, from the linear recurrence. For the Heun
// example (F^2 = g) the nome series is (integral of dx/F)^2 / 4.
QSeries nome_from_f(const QSeries& f, int order);
QSeries nome_from_fdata(const FData& f, int order);
QSeries nome_from_spec(const FSpec& spec, int order);
QSeries mirror_from_nome(const QSeries& q);

}  // namespace fseries
