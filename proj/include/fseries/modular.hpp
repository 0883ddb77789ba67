#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fseries/param_poly.hpp"
#include "fseries/series.hpp"
#include "fseries/special.hpp"

namespace fseries {

// Directory holding catalog.txt and fixtures.txt; REPLICA_FIXTURES overrides the built-in path.
std::string data_directory();

// Rational parametrization x(t), y(t) of a modular curve, with its polynomial when known.
struct CurveEntry {
    std::string name;  // "2", "3", ... or a descriptive name
    int N = 0;         // level, 0 for named curves
    std::string var = "t";
    ParamPolynomial x_num, x_den, y_num, y_den;
    std::optional<BivariatePolynomial> gamma;
};

class CurveCatalog {
public:
    static CurveCatalog parse(const std::string& text);
    static CurveCatalog load(const std::string& path);
    // Catalog shipped in the data directory (loaded once).
    static const CurveCatalog& standard();

    const CurveEntry& level(int N) const;
    const CurveEntry& named(const std::string& name) const;
    std::vector<int> levels() const;
    const std::vector<CurveEntry>& entries() const { return entries_; }

private:
    std::vector<CurveEntry> entries_;
};

// Dense coefficients of a univariate polynomial, constant term first.
std::vector<Rational> univariate_coeffs(const ParamPolynomial& p, const std::string& var);

struct ParametrizedSeries {
    QSeries x_of_t, y_of_t, t_of_x, y_of_x;
};

// Expands x(t), y(t), inverts x(t) and returns y(t(x)).
ParametrizedSeries parametrization_to_series(const CurveEntry& entry, int order);

// Gamma(fx, fy) as a series.
template <class R>
Series<R> verify_curve(const BivariatePolynomial& gamma, const Series<R>& fx, const Series<R>& fy) {
    int k = std::min(fx.order(), fy.order());
    int dx = gamma.degree("x"), dy = gamma.degree("y");
    std::vector<Series<R>> px{Series<R>::constant(R(1), k)}, py{Series<R>::constant(R(1), k)};
    for (int i = 1; i <= dx; ++i) px.push_back(mul(px.back(), fx.truncated(k), k));
    for (int j = 1; j <= dy; ++j) py.push_back(mul(py.back(), fy.truncated(k), k));
    std::size_t ix = 0, iy = 0;
    const auto& vars = gamma.vars();
    bool has_x = false, has_y = false;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == "x") { ix = i; has_x = true; }
        else if (vars[i] == "y") { iy = i; has_y = true; }
    }
    Series<R> acc(k);
    for (const auto& [e, c] : gamma.terms()) {
        for (std::size_t v = 0; v < vars.size(); ++v)
            if (e[v] != 0 && vars[v] != "x" && vars[v] != "y")
                throw Error(ErrorKind::MixedRings, "curve polynomial uses variable " + vars[v]);
        int i = has_x ? e[ix] : 0, j = has_y ? e[iy] : 0;
        if (i < 0 || j < 0) throw Error(ErrorKind::BadValuation, "curve polynomial has negative exponents");
        acc = acc + scale(mul(px[static_cast<std::size_t>(i)], py[static_cast<std::size_t>(j)], k),
                          from_rational<R>(c));
    }
    return acc;
}

// X(Q(x)^N) for the elliptic nome Q and mirror map X.
QSeries correspondence_series(int N, int order);

// Inverse branch y_{1/N} as a series in u = w x^(1/N).
struct PuiseuxBranch {
    int ram = 1;
    QSeries body;
    // Coefficient of x^(k/N) is body[k] w^k.
    std::string display(int terms) const;
};

PuiseuxBranch puiseux_branch(const QSeries& yN, int N);

// g^-1(w g(x)) with g^N = yN, over the coefficient ring of w.
template <class R>
Series<R> branch_composite(const QSeries& yN, int N, const R& omega) {
    QSeries g = nth_root_split(yN, N);
    QSeries gi = revert(g);
    Series<R> gl(g.order()), gil(gi.order());
    for (int i = 0; i <= g.order(); ++i) gl[i] = from_rational<R>(g[i]) * omega;
    for (int i = 0; i <= gi.order(); ++i) gil[i] = from_rational<R>(gi[i]);
    return compose(gil, gl);
}

// Determinant by fraction-free (Bareiss) elimination.
ParamPolynomial bareiss_determinant(std::vector<std::vector<ParamPolynomial>> m);
// Sylvester resultant of f and g with respect to var.
ParamPolynomial sylvester_resultant(const ParamPolynomial& f, const ParamPolynomial& g, const std::string& var);
// Primitive integer form with a positive leading term.
ParamPolynomial primitive_part(const ParamPolynomial& p);

// Res_z(Gamma2(x,z), Gamma2(z,y)) with every factor x-y removed, made primitive.
// The resultant must contain (x-y)^2 (DivisionNotExact otherwise); the number of
// factors removed is stored in diagonal_multiplicity.
BivariatePolynomial gamma4_by_resultant(const BivariatePolynomial& gamma2, int* diagonal_multiplicity = nullptr);

// Product of the roots in y of gamma, (-1)^d c_0(x)/c_d(x), expanded to order.
QSeries vieta_root_product(const BivariatePolynomial& gamma, int order);

// Product over the N-th roots of unity w of y_{1/N}(w, x), which is a series in x.
QSeries puiseux_orbit_product(const QSeries& yN, int N, int order);

// Involutive series g^-1(-g(x)) with g^2 = y2.
QSeries involutive_branch(const QSeries& y2);

// y_1 * y_4 * product of the four y_{1/4} branches, to order.
QSeries level4_branch_product(int order);

// Landen curve residual in the modulus k to order K.
QSeries landen_check(int order);

}  // namespace fseries
