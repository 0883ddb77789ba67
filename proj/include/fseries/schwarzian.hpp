#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fseries/series.hpp"
#include "fseries/special.hpp"

namespace fseries {

// Lifts a rational series into another coefficient ring.
template <class R>
Series<R> lift(const QSeries& s) {
    std::vector<R> c;
    c.reserve(s.coeffs().size());
    for (const auto& v : s.coeffs()) c.push_back(from_rational<R>(v));
    return Series<R>(std::move(c));
}

// y = x^v u with v >= 1 and u known to order m = y.order() - v.
template <class R>
struct Split {
    int v;
    Series<R> u;
    Series<R> p;  // y' = x^(v-1) p
};

template <class R>
Split<R> split_valuation(const Series<R>& y) {
    int v = y.valuation();
    if (v == 0) throw Error(ErrorKind::NonpositiveValuation, "series must vanish at 0");
    if (v > y.order()) throw Error(ErrorKind::ZeroDerivative, "series vanishes to its known order");
    Series<R> u = y.shifted_down(v);
    Series<R> p = scale(u, R(v));
    for (int i = 1; i <= u.order(); ++i) p[i] += R(i) * u[i];
    return {v, u, p};
}

// x^2 (W(x) - W(y) y'^2 + {y, x}) with w = x^2 W, for y = x^v u:
// w(x) - w(y) p^2/u^2 + x^2 (p'/p)' - x^2 (p'/p)^2 / 2 - (v-1) x p'/p - (v^2-1)/2.
// Known to order min(y.order() - v, w.order()).
template <class R>
Series<R> schwarzian_residual_body(const Series<R>& w, const Series<R>& y) {
    Split<R> s = split_valuation(y);
    const int v = s.v;
    const int m = std::min(s.u.order(), w.order());
    Series<R> u = s.u.truncated(m), p = s.p.truncated(m);
    R half = from_rational<R>(Rational(1, 2));
    Series<R> body(m);
    Series<R> ratio = mul(p, inverse(u), m);
    ratio = mul(ratio, ratio, m);
    Series<R> wy = compose(w.truncated(m), y.truncated(m + v)).truncated(m);
    Series<R> wyr = mul(wy, ratio, m);
    for (int i = 0; i <= m; ++i) body[i] = w[i] - wyr[i];
    body[0] -= from_rational<R>(Rational(static_cast<long>(v) * v - 1, 2));
    if (m >= 1) {
        Series<R> lp = divide(derive(p), p.truncated(m - 1));  // p'/p, order m-1
        Series<R> xlp = lp.shifted_up(1);
        Series<R> x2dlp = m >= 2 ? derive(lp).shifted_up(2) : Series<R>(m);
        Series<R> xlp2 = mul(xlp, xlp, m);
        for (int i = 0; i <= m; ++i)
            body[i] += x2dlp[i] - xlp2[i] * half - xlp[i] * R(v - 1);
    }
    return body;
}

template <class R>
Laurent<R> schwarzian_residual(const Series<R>& w, const Series<R>& y) {
    return {-2, schwarzian_residual_body(w, y)};
}

// x (A_R(x) - A_R(y) y' + y''/y') with r = x A_R:
// r(x) - r(y) p/u + (v-1) + x p'/p.
template <class R>
Series<R> rank2_residual_body(const Series<R>& r, const Series<R>& y) {
    Split<R> s = split_valuation(y);
    const int v = s.v;
    const int m = std::min(s.u.order(), r.order());
    Series<R> u = s.u.truncated(m), p = s.p.truncated(m);
    Series<R> ry = compose(r.truncated(m), y.truncated(m + v)).truncated(m);
    Series<R> t = mul(mul(ry, p, m), inverse(u), m);
    Series<R> body(m);
    for (int i = 0; i <= m; ++i) body[i] = r[i] - t[i];
    body[0] += R(v - 1);
    if (m >= 1) {
        Series<R> xlp = divide(derive(p), p.truncated(m - 1)).shifted_up(1);
        for (int i = 0; i <= m; ++i) body[i] += xlp[i];
    }
    return body;
}

template <class R>
Laurent<R> rank2_residual(const Series<R>& r, const Series<R>& y) {
    return {-1, rank2_residual_body(r, y)};
}

// Solution of the Schwarzian condition y = lead x^N + sum_{n>N} c_n x^n.
template <class R>
struct FamilySolution {
    enum class Kind { OneParam, TwoParam, Correspondence };
    Kind kind = Kind::OneParam;
    int N = 1;
    Series<R> y;
    // (order, parameter name) for each free coefficient met by the solver.
    std::vector<std::pair<int, std::string>> ledger;
};

// Value assigned to a free coefficient at order n, given the partial solution.
template <class R>
using FreeCoefficient = std::function<std::pair<R, std::string>(int n, const Series<R>& partial)>;

// At each order the residual coefficient is affine in the new unknown: A c_n + B = 0.
template <class R>
FamilySolution<R> solve_family(const Series<R>& w, int N, const R& lead, int order,
                               const FreeCoefficient<R>& on_free = {}) {
    if (N < 1) throw Error(ErrorKind::BadValuation, "leading exponent must be positive");
    if (order < N) throw Error(ErrorKind::PrecisionUnderflow, "order below the leading exponent");
    if (N >= 2 && !(w[0] == from_rational<R>(Rational(-1, 2))))
        throw Error(ErrorKind::WNotNormalized, "x^2 W(x) must start with -1/2 for x^N solutions");
    if (w.order() < order - N) throw Error(ErrorKind::PrecisionUnderflow, "W known to too low an order");
    FamilySolution<R> sol;
    sol.N = N;
    sol.kind = N == 1 ? FamilySolution<R>::Kind::OneParam : FamilySolution<R>::Kind::Correspondence;
    Series<R> y(order);
    y[N] = lead;
    for (int n = N + 1; n <= order; ++n) {
        const int m = n - N;
        Series<R> trial = y.truncated(n);
        trial[n] = R(0);
        R b = schwarzian_residual_body(w, trial)[m];
        trial[n] = R(1);
        R a = schwarzian_residual_body(w, trial)[m] - b;
        if (is_zero(a)) {
            if (!is_zero(b))
                throw Error(ErrorKind::Inconsistent, "no solution at order " + std::to_string(n));
            if (!on_free) throw Error(ErrorKind::Inconsistent, "unhandled free coefficient at order " + std::to_string(n));
            auto [value, name] = on_free(n, y.truncated(n - 1));
            y[n] = value;
            sol.ledger.emplace_back(n, name);
            sol.kind = FamilySolution<R>::Kind::TwoParam;
            continue;
        }
        y[n] = -(b / a);
    }
    sol.y = y;
    return sol;
}

using PSeries = Series<ParamPolynomial>;
using PFamily = FamilySolution<ParamPolynomial>;

inline ParamPolynomial param(const std::string& name) { return ParamPolynomial::variable(name); }

// y(a, x) = a x + ... over Q[a].
PFamily solve_one_param(const FSpec& spec, int order, const Rational& alpha = Rational(0));
// y = a x^N + ... over Q[a].
PFamily solve_correspondence(const FSpec& spec, int N, int order);
// Y(a, b, x) for integer alpha >= 1: the free coefficient at order alpha+1 is set to the
// alpha = 0 coefficient plus b_scale * a * b.
PFamily solve_two_param(const FSpec& spec, int alpha, int order, const Rational& b_scale = Rational(1728));

// Specializes parameters of a family to rationals.
QSeries specialize(const PSeries& y, const std::map<std::string, Rational>& values);
// Substitutes parameters by polynomials.
PSeries substitute(const PSeries& y, const std::map<std::string, ParamPolynomial>& values);
// Embeds a Q[a] series into another ring by sending a to the given element.
template <class R>
Series<R> specialize_to(const PSeries& y, const std::string& var, const R& value) {
    Series<R> out(y.order());
    for (int i = 0; i <= y.order(); ++i) {
        const ParamPolynomial& c = y[i];
        R acc(0);
        for (const auto& [exps, coef] : c.terms()) {
            R t = from_rational<R>(coef);
            for (std::size_t k = 0; k < exps.size(); ++k) {
                if (exps[k] == 0) continue;
                if (c.vars()[k] != var)
                    throw Error(ErrorKind::MissingAssignment, "no value for parameter " + c.vars()[k]);
                R base = exps[k] > 0 ? value : R(1) / value;
                for (int e = 0; e < std::abs(exps[k]); ++e) t = t * base;
            }
            acc += t;
        }
        out[i] = acc;
    }
    return out;
}

// B_1 = F, (n+1) B_{n+1} = F B_n' - n B_n, returned as B_1..B_M.
std::vector<QSeries> epsilon_family(const QSeries& f, int M, int order);
// Coefficient of eps^k in y(1 + eps, x), for k = 0..M.
std::vector<QSeries> epsilon_reexpand(const PSeries& y, int M);

struct TransportReport {
    // a dy/da - F(y), F(x) y' - mu F(y), mu a dy/da - F(x) y'.
    PSeries a_vs_fy, fx_vs_fy, a_vs_fx;
    bool a_vs_fy_zero = false, fx_vs_fy_zero = false, a_vs_fx_zero = false;
};
TransportReport transport_residuals(const QSeries& f, const PSeries& y, const Rational& mu = Rational(1));

// Outcome of mu^k F(y)^k = F(x)^k y'^k with F^k = g.
struct Multiplier {
    Rational mu_power;  // mu^k
    int power = 1;      // k
    bool has_rational_root = false;
    Rational mu;
};
Multiplier multiplier_check(const FData& f, const QSeries& y);

}  // namespace fseries
