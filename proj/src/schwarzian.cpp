#include "fseries/schwarzian.hpp"

namespace fseries {

namespace {

PSeries w_param(const FSpec& spec, const Rational& alpha, int order) {
    return lift<ParamPolynomial>(w_from_f(spec, alpha, order));
}

}  // namespace

PFamily solve_one_param(const FSpec& spec, int order, const Rational& alpha) {
    return solve_family(w_param(spec, alpha, order - 1), 1, param("a"), order);
}

PFamily solve_correspondence(const FSpec& spec, int N, int order) {
    return solve_family(w_param(spec, Rational(0), order - N), N, param("a"), order);
}

PFamily solve_two_param(const FSpec& spec, int alpha, int order, const Rational& b_scale) {
    if (alpha < 1) throw Error(ErrorKind::BadNormalization, "two-parameter family needs alpha >= 1");
    FreeCoefficient<ParamPolynomial> free = [&](int n, const PSeries&) {
        PFamily base = solve_one_param(spec, n);
        ParamPolynomial c = base.y[n] + ParamPolynomial(b_scale) * param("a") * param("b");
        return std::make_pair(c, std::string("b"));
    };
    PFamily sol = solve_family(w_param(spec, Rational(alpha), order - 1), 1, param("a"), order, free);
    sol.kind = PFamily::Kind::TwoParam;
    return sol;
}

QSeries specialize(const PSeries& y, const std::map<std::string, Rational>& values) {
    QSeries out(y.order());
    for (int i = 0; i <= y.order(); ++i) out[i] = y[i].eval(values);
    return out;
}

PSeries substitute(const PSeries& y, const std::map<std::string, ParamPolynomial>& values) {
    PSeries out(y.order());
    for (int i = 0; i <= y.order(); ++i) out[i] = y[i].substitute(values);
    return out;
}

std::vector<QSeries> epsilon_family(const QSeries& f, int M, int order) {
    if (!f[0].is_zero() || f.order() < 1 || !f[1].is_one())
        throw Error(ErrorKind::BadNormalization, "F must be x + O(x^2)");
    std::vector<QSeries> b;
    b.push_back(f.truncated(order));
    for (int n = 1; n < M; ++n) {
        const QSeries& bn = b.back();
        QSeries t = mul(f.truncated(order), derive(bn), order) - scale(bn, Rational(n));
        b.push_back(scale(t, Rational(1, n + 1)));
    }
    return b;
}

std::vector<QSeries> epsilon_reexpand(const PSeries& y, int M) {
    PSeries shifted = substitute(y, {{"a", ParamPolynomial(1) + param("e")}});
    std::vector<QSeries> out;
    for (int k = 0; k <= M; ++k) {
        QSeries s(y.order());
        for (int i = 0; i <= y.order(); ++i) s[i] = shifted[i].coefficient("e", k).to_rational();
        out.push_back(s);
    }
    return out;
}

TransportReport transport_residuals(const QSeries& f, const PSeries& y, const Rational& mu) {
    const int k = std::min(f.order(), y.order());
    PSeries F = lift<ParamPolynomial>(f.truncated(k));
    PSeries yk = y.truncated(k);
    PSeries fy = compose(F, yk).truncated(k);
    PSeries ady(k);
    for (int i = 0; i <= k; ++i) ady[i] = param("a") * yk[i].partial("a");
    PSeries fxdy = mul(F, derive(yk), k);
    ParamPolynomial m(mu);
    TransportReport r;
    r.a_vs_fy = ady - fy;
    r.fx_vs_fy = fxdy - scale(fy, m);
    r.a_vs_fx = scale(ady, m) - fxdy;
    r.a_vs_fy_zero = r.a_vs_fy.is_zero_series();
    r.fx_vs_fy_zero = r.fx_vs_fy.is_zero_series();
    r.a_vs_fx_zero = r.a_vs_fx.is_zero_series();
    return r;
}

namespace {

bool rational_root(const Rational& q, int k, Rational& out) {
    if (q.sign() < 0 && k % 2 == 0) return false;
    mpz_class n = q.num(), d = q.den(), rn, rd;
    bool neg = n < 0;
    if (neg) n = -n;
    if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return false;
    if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return false;
    out = Rational(neg ? mpz_class(-rn) : rn, rd);
    return true;
}

}  // namespace

// mu^k = g(x) y'^k / g(y), which must be constant.
Multiplier multiplier_check(const FData& f, const QSeries& y) {
    const int k = f.power;
    QSeries dy = derive(y);
    QSeries num = mul(f.g.truncated(std::min(f.g.order(), dy.order() + 1)), pow(dy, k));
    QSeries den = compose(f.g, y);
    QSeries ratio = divide(num, den);
    for (int i = 1; i <= ratio.order(); ++i)
        if (!ratio[i].is_zero())
            throw Error(ErrorKind::NoConstantMultiplier, "ratio depends on x at order " + std::to_string(i));
    Multiplier m;
    m.mu_power = ratio[0];
    m.power = k;
    m.has_rational_root = rational_root(ratio[0], k, m.mu);
    return m;
}

}  // namespace fseries
