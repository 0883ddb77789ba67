#include "fseries/modular.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fseries {

std::string data_directory() {
    if (const char* env = std::getenv("REPLICA_FIXTURES"); env && *env) return env;
    return FSERIES_DATA_DIR;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Splits "num / den" at the division sign outside parentheses.
std::pair<ParamPolynomial, ParamPolynomial> parse_quotient(const std::string& text) {
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (c == '/' && depth == 0) {
            bool digit_before = i > 0 && std::isdigit(static_cast<unsigned char>(text[i - 1]));
            bool digit_after = i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]));
            if (digit_before && digit_after) continue;  // rational literal such as 3/2
            return {ParamPolynomial::parse(trim(text.substr(0, i))), ParamPolynomial::parse(trim(text.substr(i + 1)))};
        }
    }
    return {ParamPolynomial::parse(trim(text)), ParamPolynomial(1)};
}

}  // namespace

CurveCatalog CurveCatalog::parse(const std::string& text) {
    CurveCatalog cat;
    std::istringstream in(text);
    std::string line;
    std::optional<CurveEntry> cur;
    int lineno = 0;
    auto flush = [&] {
        if (!cur) return;
        if (cur->x_num.is_zero() || cur->y_num.is_zero())
            throw Error(ErrorKind::ParseError, "curve " + cur->name + " lacks x or y");
        cat.entries_.push_back(std::move(*cur));
        cur.reset();
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty()) { flush(); continue; }
        if (t[0] == '#') continue;
        auto sp = t.find(' ');
        std::string key = t.substr(0, sp), val = sp == std::string::npos ? "" : trim(t.substr(sp + 1));
        try {
            if (key == "level" || key == "curve") {
                flush();
                cur.emplace();
                cur->name = val;
                if (key == "level") cur->N = std::stoi(val);
                continue;
            }
            if (!cur) throw Error(ErrorKind::ParseError, "field outside a record");
            if (key == "var") cur->var = val;
            else if (key == "x") std::tie(cur->x_num, cur->x_den) = parse_quotient(val);
            else if (key == "y") std::tie(cur->y_num, cur->y_den) = parse_quotient(val);
            else if (key == "gamma") cur->gamma = ParamPolynomial::parse(val);
            else throw Error(ErrorKind::ParseError, "unknown key '" + key + "'");
        } catch (const Error& e) {
            throw Error(ErrorKind::ParseError, "catalog line " + std::to_string(lineno) + ": " + e.what());
        } catch (const std::exception& e) {
            throw Error(ErrorKind::ParseError, "catalog line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    flush();
    return cat;
}

CurveCatalog CurveCatalog::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

const CurveCatalog& CurveCatalog::standard() {
    static const CurveCatalog cat = load(data_directory() + "/catalog.txt");
    return cat;
}

const CurveEntry& CurveCatalog::level(int N) const {
    for (const auto& e : entries_)
        if (e.N == N) return e;
    throw Error(ErrorKind::UnknownFixture, "no parametrization for level " + std::to_string(N));
}

const CurveEntry& CurveCatalog::named(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return e;
    throw Error(ErrorKind::UnknownFixture, "no curve named " + name);
}

std::vector<int> CurveCatalog::levels() const {
    std::vector<int> out;
    for (const auto& e : entries_)
        if (e.N > 0) out.push_back(e.N);
    return out;
}

std::vector<Rational> univariate_coeffs(const ParamPolynomial& p, const std::string& var) {
    if (p.is_zero()) return {Rational(0)};
    const auto& vars = p.vars();
    auto it = std::find(vars.begin(), vars.end(), var);
    std::size_t iv = static_cast<std::size_t>(it - vars.begin());
    int lo = p.min_degree(var);
    if (lo < 0) throw Error(ErrorKind::BadValuation, "negative power of " + var);
    std::vector<Rational> out(static_cast<std::size_t>(p.degree(var)) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (i != iv && e[i] != 0)
                throw Error(ErrorKind::MixedRings, "expected a polynomial in " + var + ", found " + vars[i]);
        out[iv < vars.size() ? static_cast<std::size_t>(e[iv]) : 0] = c;
    }
    return out;
}

ParametrizedSeries parametrization_to_series(const CurveEntry& entry, int order) {
    ParametrizedSeries out;
    out.x_of_t = expand_rational(univariate_coeffs(entry.x_num, entry.var), univariate_coeffs(entry.x_den, entry.var), order);
    out.y_of_t = expand_rational(univariate_coeffs(entry.y_num, entry.var), univariate_coeffs(entry.y_den, entry.var), order);
    if (out.x_of_t.valuation() != 1)
        throw Error(ErrorKind::BadParametrization, "x(" + entry.var + ") must vanish to first order at 0");
    out.t_of_x = revert(out.x_of_t);
    out.y_of_x = compose(out.y_of_t, out.t_of_x);
    return out;
}

QSeries correspondence_series(int N, int order) {
    if (N < 1) throw Error(ErrorKind::BadValuation, "level must be positive");
    QSeries F = build_F(FSpec::elliptic(), order + 2).g;
    QSeries q = nome_from_f(F.truncated(order + 1), order);
    QSeries X = mirror_from_nome(q);
    QSeries qN = pow(q, N).truncated(order);
    return compose(X, qN);
}

std::string PuiseuxBranch::display(int terms) const {
    std::ostringstream os;
    bool first = true;
    for (int k = 1; k <= body.order() && k <= terms; ++k) {
        const Rational& c = body[k];
        if (c == Rational(0)) continue;
        std::string s = c.str();
        bool neg = s[0] == '-';
        if (neg) s = s.substr(1);
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        if (s != "1") os << s << "*";
        os << "w";
        if (k > 1) os << "^" << k;
        os << "*x";
        if (k != ram) os << "^(" << k << "/" << ram << ")";
    }
    return first ? "0" : os.str();
}

PuiseuxBranch puiseux_branch(const QSeries& yN, int N) {
    PuiseuxBranch b;
    b.ram = N;
    b.body = revert(nth_root_split(yN, N));
    return b;
}

ParamPolynomial bareiss_determinant(std::vector<std::vector<ParamPolynomial>> m) {
    std::size_t n = m.size();
    if (n == 0) return ParamPolynomial(1);
    bool negate = false;
    ParamPolynomial prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return ParamPolynomial(0);
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                ParamPolynomial v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = k == 0 ? v : v.divide_exact(prev);
            }
            m[i][k] = ParamPolynomial(0);
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

ParamPolynomial sylvester_resultant(const ParamPolynomial& f, const ParamPolynomial& g, const std::string& var) {
    int m = f.degree(var), n = g.degree(var);
    if (f.min_degree(var) < 0 || g.min_degree(var) < 0)
        throw Error(ErrorKind::BadValuation, "negative power of " + var + " in resultant input");
    std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<ParamPolynomial>> s(size, std::vector<ParamPolynomial>(size, ParamPolynomial(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f.coefficient(var, m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = g.coefficient(var, n - i);
    return bareiss_determinant(std::move(s));
}

ParamPolynomial primitive_part(const ParamPolynomial& p) {
    if (p.is_zero()) return p;
    Rational c = p.content();
    if (p.terms().rbegin()->second < Rational(0)) c = -c;
    return p * ParamPolynomial(Rational(1) / c);
}

BivariatePolynomial gamma4_by_resultant(const BivariatePolynomial& gamma2, int* diagonal_multiplicity) {
    ParamPolynomial x = ParamPolynomial::variable("x"), y = ParamPolynomial::variable("y"),
                    z = ParamPolynomial::variable("z");
    ParamPolynomial f = gamma2.substitute({{"x", x}, {"y", z}});
    ParamPolynomial g = gamma2.substitute({{"x", z}, {"y", y}});
    ParamPolynomial res = sylvester_resultant(f, g, "z");
    ParamPolynomial d = x - y;
    ParamPolynomial q = res.divide_exact(d * d);
    int mult = 2;
    for (;;) {
        try {
            q = q.divide_exact(d);
            ++mult;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DivisionNotExact) throw;
            break;
        }
    }
    if (diagonal_multiplicity) *diagonal_multiplicity = mult;
    return primitive_part(q);
}

QSeries vieta_root_product(const BivariatePolynomial& gamma, int order) {
    int d = gamma.degree("y");
    ParamPolynomial c0 = gamma.coefficient("y", 0), cd = gamma.coefficient("y", d);
    QSeries r = expand_rational(univariate_coeffs(c0, "x"), univariate_coeffs(cd, "x"), order);
    return d % 2 ? -r : r;
}

QSeries puiseux_orbit_product(const QSeries& yN, int N, int order) {
    // Body in u = x^(1/N) needs N*order terms; the product is known N-1 further.
    QSeries g = nth_root_split(yN.truncated(std::min(yN.order(), N * order + N)), N);
    QSeries body = revert(g);
    int ku = std::min(body.order(), N * order);
    Series<CyclotomicElem> prod = Series<CyclotomicElem>::constant(CyclotomicElem(1), ku);
    for (int k = 0; k < N; ++k) {
        CyclotomicElem w = CyclotomicElem::root_power(static_cast<unsigned>(N), k);
        Series<CyclotomicElem> b(ku);
        CyclotomicElem wp(1);
        for (int i = 0; i <= ku; ++i) {
            b[i] = from_rational<CyclotomicElem>(body[i]) * wp;
            wp = wp * w;
        }
        prod = mul(prod, b, ku);
    }
    QSeries out(prod.order() / N);
    for (int i = 0; i <= prod.order(); ++i) {
        const CyclotomicElem& c = prod[i];
        if (c.is_zero()) continue;
        if (i % N != 0 || !c.is_scalar())
            throw Error(ErrorKind::Inconsistent, "orbit product has a non-rational term at u^" + std::to_string(i));
        if (i / N <= out.order()) out[i / N] = c.coords()[0];
    }
    return out;
}

QSeries involutive_branch(const QSeries& y2) {
    return branch_composite<Rational>(y2, 2, Rational(-1));
}

QSeries level4_branch_product(int order) {
    QSeries y2 = correspondence_series(2, order + 2);
    QSeries y4 = correspondence_series(4, 4 * order + 8);
    QSeries y1 = involutive_branch(y2);
    QSeries quarter = puiseux_orbit_product(y4, 4, order);
    int k = std::min({order, y1.order(), quarter.order()});
    return mul(mul(y1.truncated(k), y4.truncated(k), k), quarter.truncated(k), k);
}

QSeries landen_check(int order) {
    const CurveEntry& e = CurveCatalog::standard().named("landen");
    if (!e.gamma) throw Error(ErrorKind::UnknownFixture, "landen curve has no polynomial");
    QSeries xk = expand_rational(univariate_coeffs(e.x_num, e.var), univariate_coeffs(e.x_den, e.var), order);
    QSeries yk = expand_rational(univariate_coeffs(e.y_num, e.var), univariate_coeffs(e.y_den, e.var), order);
    return verify_curve(*e.gamma, xk, yk);
}

}  // namespace fseries
