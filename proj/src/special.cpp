#include "fseries/special.hpp"

#include <cctype>
#include <sstream>

namespace fseries {

QSeries gauss_2f1_series(const Rational& a, const Rational& b, const Rational& c, const Rational& scale,
                         int order) {
    if (c.is_integer() && c.sign() <= 0) throw Error(ErrorKind::BadGamma, "lower parameter " + c.str());
    QSeries h(order);
    Rational t(1);
    for (int n = 0; n <= order; ++n) {
        h[n] = t;
        t = t * (a + Rational(n)) * (b + Rational(n)) / ((c + Rational(n)) * Rational(n + 1)) * scale;
    }
    return h;
}

// Three-term recurrence of the general Heun equation, e = al + be + 1 - g - d:
// R_j c_{j+1} = (Q_j + q) c_j - P_j c_{j-1},
// R_j = a (j+1)(j+g), Q_j = j((j-1+g)(1+a) + a d + e), P_j = (j-1+al)(j-1+be).
QSeries heun_series(const Rational& a, const Rational& q, const Rational& alpha, const Rational& beta,
                    const Rational& gamma, const Rational& delta, int order) {
    if (gamma.is_integer() && gamma.sign() <= 0) throw Error(ErrorKind::BadGamma, "gamma " + gamma.str());
    if (a.is_zero()) throw Error(ErrorKind::BadGamma, "singular point a = 0");
    Rational eps = alpha + beta + Rational(1) - gamma - delta;
    QSeries h(order);
    h[0] = Rational(1);
    for (int j = 0; j < order; ++j) {
        Rational jj(j);
        Rational r = a * (jj + Rational(1)) * (jj + gamma);
        Rational qj = jj * ((jj - Rational(1) + gamma) * (Rational(1) + a) + a * delta + eps);
        Rational s = (qj + q) * h[j];
        if (j >= 1) s -= (jj - Rational(1) + alpha) * (jj - Rational(1) + beta) * h[j - 1];
        h[j + 1] = s / r;
    }
    return h;
}

FSpec FSpec::elliptic() {
    FSpec s;
    s.kind = Kind::Elliptic;
    s.label = "elliptic";
    return s;
}

FSpec FSpec::heun81() {
    FSpec s;
    s.kind = Kind::Heun81;
    s.label = "heun81";
    return s;
}

FSpec FSpec::polynomial(std::vector<Rational> coeffs) {
    FSpec s;
    s.kind = Kind::Polynomial;
    s.poly = std::move(coeffs);
    std::ostringstream os;
    os << "poly:";
    for (std::size_t i = 1; i < s.poly.size(); ++i) os << (i > 1 ? "," : "") << s.poly[i];
    s.label = os.str();
    return s;
}

FSpec FSpec::custom_series(const QSeries& f, std::string label) {
    FSpec s;
    s.kind = Kind::Custom;
    s.custom = f;
    s.label = std::move(label);
    return s;
}

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::vector<Rational> parse_list(const std::string& body) {
    std::vector<Rational> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw Error(ErrorKind::ParseError, "empty coefficient in '" + body + "'");
        out.push_back(Rational::parse(item));
    }
    return out;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace

FSpec FSpec::parse(const std::string& text) {
    std::string t = strip(text);
    if (t == "elliptic") return elliptic();
    if (t == "heun81") return heun81();
    const std::string pf = "poly-factored:";
    const std::string pl = "poly:";
    if (t.rfind(pf, 0) == 0) {
        std::string body = t.substr(pf.size());
        std::vector<Rational> acc{Rational(0), Rational(1)};
        std::size_t i = 0;
        if (body.empty()) throw Error(ErrorKind::ParseError, "no factors in '" + text + "'");
        while (i < body.size()) {
            if (body[i] != '(') throw Error(ErrorKind::ParseError, "expected '(' in '" + text + "'");
            std::size_t j = body.find(')', i);
            if (j == std::string::npos) throw Error(ErrorKind::ParseError, "unbalanced '(' in '" + text + "'");
            std::vector<Rational> f = parse_list(body.substr(i + 1, j - i - 1));
            if (f.empty()) throw Error(ErrorKind::ParseError, "empty factor in '" + text + "'");
            acc = poly_mul(acc, f);
            i = j + 1;
        }
        FSpec s = polynomial(acc);
        s.label = t;
        return s;
    }
    if (t.rfind(pl, 0) == 0) {
        std::vector<Rational> c = parse_list(t.substr(pl.size()));
        if (c.empty()) throw Error(ErrorKind::ParseError, "no coefficients in '" + text + "'");
        c.insert(c.begin(), Rational(0));
        FSpec s = polynomial(c);
        s.label = t;
        return s;
    }
    throw Error(ErrorKind::ParseError, "unknown F specification '" + text + "'");
}

FData build_F(const FSpec& spec, int order) {
    switch (spec.kind) {
        case FSpec::Kind::Elliptic: {
            QSeries h = gauss_2f1_series(Rational(1, 12), Rational(5, 12), Rational(1), Rational(1728), order);
            QSeries s = QSeries::constant(Rational(1), order);
            if (order >= 1) s[1] = Rational(-1728);
            QSeries f = mul(pow_rational(s, Rational(1, 2)), mul(h, h)).shifted_up(1).truncated(order);
            return {f, 1};
        }
        case FSpec::Kind::Heun81: {
            // F^2 = x (1 - x/81)(1 - x) H^4
            QSeries h = heun_series(Rational(81), Rational(1, 2), Rational(1, 6), Rational(1, 3), Rational(1, 2),
                                    Rational(1, 2), order);
            QSeries h2 = mul(h, h);
            QSeries c(std::vector<Rational>{Rational(1), Rational(-82, 81), Rational(1, 81)}, order);
            QSeries g = mul(c, mul(h2, h2)).shifted_up(1).truncated(order);
            return {g, 2};
        }
        case FSpec::Kind::Polynomial:
            return {QSeries(spec.poly.size() > static_cast<std::size_t>(order + 1)
                                ? std::vector<Rational>(spec.poly.begin(), spec.poly.begin() + order + 1)
                                : spec.poly,
                            order),
                    1};
        case FSpec::Kind::Custom:
            return {spec.custom.truncated(std::min(order, spec.custom.order())), 1};
    }
    return {};
}

namespace {

// Splits g = c x^v (1 + ...) checking valuation 1.
QSeries unit_part(const QSeries& g) {
    if (g.valuation() != 1) throw Error(ErrorKind::BadNormalization, "F must have valuation 1");
    return g.shifted_down(1);
}

}  // namespace

// With g = F^k = x h: F'/F = (1/x + L)/k, L = h'/h, so
// x^2 W = (1/k)(-1 + x^2 L') + (1/(2k^2))(1 + 2 x L + x^2 L^2) + alpha^2 x^2 / (2 F^2).
QSeries w_from_fdata(const FData& f, const Rational& alpha, int order) {
    if (f.g.order() < order + 1) throw Error(ErrorKind::PrecisionUnderflow, "F known to too low an order");
    QSeries h = unit_part(f.g.truncated(order + 1));  // order K
    QSeries L = divide(derive(h), h.truncated(order - 1 >= 0 ? order - 1 : 0));  // order K-1
    QSeries xL = L.shifted_up(1);                                                 // order K
    QSeries x2dL = derive(L).shifted_up(2);                                       // order K
    QSeries x2L2 = mul(xL, xL, order);
    Rational k(f.power);
    Rational inv_k = Rational(1) / k, half_k2 = Rational(1, 2) / (k * k);
    QSeries w(order);
    for (int i = 0; i <= order; ++i) {
        Rational t = inv_k * x2dL[i] + half_k2 * (Rational(2) * xL[i] + x2L2[i]);
        w[i] = t;
    }
    w[0] += half_k2 - inv_k;
    if (!alpha.is_zero()) {
        if (f.power != 1) throw Error(ErrorKind::BadNormalization, "alpha term needs an ordinary F");
        // x^2 / F^2 = 1 / h^2
        QSeries ih = inverse(h);
        QSeries t = mul(ih, ih, order);
        Rational c = alpha * alpha / Rational(2);
        for (int i = 0; i <= order; ++i) w[i] += c * t[i];
    }
    return w;
}

QSeries w_from_f(const FSpec& spec, const Rational& alpha, int order) {
    return w_from_fdata(build_F(spec, order + 2), alpha, order);
}

// x A_R = (1/k)(1 + x L) + alpha x / F.
QSeries rank2_r_from_f(const FSpec& spec, const Rational& alpha, int order) {
    FData f = build_F(spec, order + 2);
    QSeries h = unit_part(f.g.truncated(order + 1));
    QSeries xL = divide(derive(h), h.truncated(order - 1 >= 0 ? order - 1 : 0)).shifted_up(1);
    Rational inv_k = Rational(1) / Rational(f.power);
    QSeries r = scale(xL, inv_k);
    r[0] += inv_k;
    if (!alpha.is_zero()) {
        if (f.power != 1) throw Error(ErrorKind::BadNormalization, "alpha term needs an ordinary F");
        QSeries ih = inverse(h);
        for (int i = 0; i <= order; ++i) r[i] += alpha * ih[i];
    }
    return r;
}

// Coefficient of x^n in F Q' - Q, F = x f: sum_{j<n} f_j (n-j) q_{n-j} - q_n = 0.
QSeries nome_from_f(const QSeries& f, int order) {
    if (!f[0].is_zero() || f.order() < 1 || !f[1].is_one())
        throw Error(ErrorKind::BadNormalization, "F must be x + O(x^2)");
    if (f.order() < order) throw Error(ErrorKind::PrecisionUnderflow, "F known to too low an order");
    QSeries q(order);
    if (order >= 1) q[1] = Rational(1);
    for (int n = 2; n <= order; ++n) {
        Rational s(0);
        for (int j = 1; j < n; ++j) {
            const Rational& fj = f[j + 1];
            if (!fj.is_zero()) s += fj * Rational(n - j) * q[n - j];
        }
        q[n] = -s / Rational(n - 1);
    }
    return q;
}

QSeries nome_from_fdata(const FData& f, int order) {
    if (f.power == 1) return nome_from_f(f.g, order);
    if (f.power != 2) throw Error(ErrorKind::BadNormalization, "unsupported power of F");
    // F = x^(1/2) s with s = h^(1/2); integral of dx/F = 2 x^(1/2) sum t_k x^k / (2k+1), t = h^(-1/2).
    QSeries h = unit_part(f.g);
    if (!h[0].is_one()) throw Error(ErrorKind::BadNormalization, "F^2 must be x + O(x^2)");
    QSeries t = pow_rational(h, Rational(-1, 2));
    QSeries s(t.order());
    for (int k = 0; k <= t.order(); ++k) s[k] = t[k] / Rational(2 * k + 1);
    return mul(s, s).shifted_up(1).truncated(order);
}

QSeries nome_from_spec(const FSpec& spec, int order) { return nome_from_fdata(build_F(spec, order + 1), order); }

QSeries mirror_from_nome(const QSeries& q) {
    if (!q[0].is_zero() || q.order() < 1 || !q[1].is_one())
        throw Error(ErrorKind::BadNormalization, "nome must be x + O(x^2)");
    return revert(q);
}

}  // namespace fseries
