#pragma once

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fseries/error.hpp"
#include "fseries/ring.hpp"

namespace fseries {

// Dense power series known modulo x^(K+1), K = order().
template <class R>
class Series {
public:
    Series() : c_(1, R(0)) {}
    explicit Series(int order) : c_(static_cast<std::size_t>(std::max(order, 0)) + 1, R(0)) {
        if (order < 0) throw Error(ErrorKind::PrecisionUnderflow, "negative truncation order");
    }
    explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw Error(ErrorKind::PrecisionUnderflow, "empty coefficient vector");
    }
    // Coefficients given for x^0.. and zero-padded up to the order.
    Series(std::vector<R> coeffs, int order) : c_(std::move(coeffs)) {
        if (order < 0) throw Error(ErrorKind::PrecisionUnderflow, "negative truncation order");
        c_.resize(static_cast<std::size_t>(order) + 1, R(0));
    }

    static Series x(int order) {
        Series s(order);
        if (order >= 1) s.c_[1] = R(1);
        return s;
    }
    static Series constant(const R& c, int order) {
        Series s(order);
        s.c_[0] = c;
        return s;
    }
    static Series monomial(const R& c, int n, int order) {
        Series s(order);
        if (n <= order) s.c_[static_cast<std::size_t>(n)] = c;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<R>& coeffs() const { return c_; }
    std::vector<R>& coeffs() { return c_; }

    const R& operator[](int n) const {
        if (n < 0 || n > order())
            throw Error(ErrorKind::PrecisionUnderflow,
                        "coefficient " + std::to_string(n) + " beyond order " + std::to_string(order()));
        return c_[static_cast<std::size_t>(n)];
    }
    R& operator[](int n) {
        if (n < 0 || n > order())
            throw Error(ErrorKind::PrecisionUnderflow,
                        "coefficient " + std::to_string(n) + " beyond order " + std::to_string(order()));
        return c_[static_cast<std::size_t>(n)];
    }

    // Index of the first nonzero coefficient; order()+1 when all known terms vanish.
    int valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!is_zero(c_[i])) return static_cast<int>(i);
        return order() + 1;
    }
    bool is_zero_series() const { return valuation() > order(); }

    Series truncated(int order) const {
        if (order > this->order())
            throw Error(ErrorKind::PrecisionUnderflow, "cannot extend order " + std::to_string(this->order()) +
                                                           " to " + std::to_string(order));
        return Series(std::vector<R>(c_.begin(), c_.begin() + order + 1));
    }
    // Multiplies by x^k.
    Series shifted_up(int k) const {
        std::vector<R> c(static_cast<std::size_t>(k), R(0));
        c.insert(c.end(), c_.begin(), c_.end());
        return Series(std::move(c));
    }
    // Divides by x^k; the first k coefficients must vanish.
    Series shifted_down(int k) const {
        for (int i = 0; i < k && i <= order(); ++i)
            if (!is_zero(c_[static_cast<std::size_t>(i)]))
                throw Error(ErrorKind::DivisionValuation, "series not divisible by x^" + std::to_string(k));
        if (k > order()) throw Error(ErrorKind::PrecisionUnderflow, "no known terms left after division");
        return Series(std::vector<R>(c_.begin() + k, c_.end()));
    }

    template <class S>
    Series<S> map(const std::function<S(const R&)>& f) const {
        std::vector<S> c;
        c.reserve(c_.size());
        for (const auto& v : c_) c.push_back(f(v));
        return Series<S>(std::move(c));
    }

    // Equality of the known terms on the common range.
    bool agrees_with(const Series& o) const {
        int k = std::min(order(), o.order());
        for (int i = 0; i <= k; ++i)
            if (!(c_[static_cast<std::size_t>(i)] == o.c_[static_cast<std::size_t>(i)])) return false;
        return true;
    }
    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        bool any = false;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (is_zero(c_[i])) continue;
            if (any) os << " + ";
            any = true;
            os << "(" << c_[i] << ")";
            if (i == 1) os << "*x";
            if (i > 1) os << "*x^" << i;
        }
        if (!any) os << "0";
        os << " + O(x^" << c_.size() << ")";
        return os.str();
    }

private:
    std::vector<R> c_;
};

// ---------------------------------------------------------------------------
// Dense polynomial products.

namespace detail {

inline constexpr std::size_t kKaratsubaThreshold = 24;

template <class T>
bool is_zero_coeff(const T& v) {
    using fseries::is_zero;
    return is_zero(v);
}

inline bool is_zero_coeff(const mpz_class& v) { return sgn(v) == 0; }

template <class T>
void schoolbook(const T* a, std::size_t na, const T* b, std::size_t nb, T* out) {
    for (std::size_t i = 0; i < na; ++i) {
        if (is_zero_coeff(a[i])) continue;
        for (std::size_t j = 0; j < nb; ++j) out[i + j] += a[i] * b[j];
    }
}


// out (size na+nb-1, zero-initialised) += a*b; na == nb assumed by the split.
template <class T>
void karatsuba(const T* a, const T* b, std::size_t n, T* out) {
    if (n <= kKaratsubaThreshold) {
        schoolbook(a, n, b, n, out);
        return;
    }
    std::size_t h = n / 2, m = n - h;
    // a = a0 + x^h a1, b = b0 + x^h b1
    std::vector<T> z0(2 * h - 1, T(0)), z2(2 * m - 1, T(0)), z1(2 * m - 1, T(0));
    karatsuba(a, b, h, z0.data());
    karatsuba(a + h, b + h, m, z2.data());
    std::vector<T> sa(m, T(0)), sb(m, T(0));
    for (std::size_t i = 0; i < m; ++i) {
        sa[i] = a[h + i];
        sb[i] = b[h + i];
    }
    for (std::size_t i = 0; i < h; ++i) {
        sa[i] += a[i];
        sb[i] += b[i];
    }
    karatsuba(sa.data(), sb.data(), m, z1.data());
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
    for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
    for (std::size_t i = 0; i < z1.size(); ++i) out[h + i] += z1[i];
    for (std::size_t i = 0; i < z2.size(); ++i) out[2 * h + i] += z2[i];
}

// Full product of two coefficient vectors, choosing the algorithm by size.
template <class T>
std::vector<T> product(const std::vector<T>& a, const std::vector<T>& b, bool allow_fast = true) {
    if (a.empty() || b.empty()) return {};
    std::vector<T> out(a.size() + b.size() - 1, T(0));
    std::size_t n = std::max(a.size(), b.size());
    if (!allow_fast || std::min(a.size(), b.size()) <= kKaratsubaThreshold) {
        schoolbook(a.data(), a.size(), b.data(), b.size(), out.data());
        return out;
    }
    std::vector<T> pa(a), pb(b);
    pa.resize(n, T(0));
    pb.resize(n, T(0));
    std::vector<T> full(2 * n - 1, T(0));
    karatsuba(pa.data(), pb.data(), n, full.data());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::move(full[i]);
    return out;
}

// Rational vectors are multiplied as integer vectors over a common denominator.
std::vector<Rational> product_rational(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                       bool allow_fast);

template <class R>
std::vector<R> multiply(const std::vector<R>& a, const std::vector<R>& b, bool allow_fast = true) {
    return product(a, b, allow_fast);
}

template <>
inline std::vector<Rational> multiply<Rational>(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                                bool allow_fast) {
    return product_rational(a, b, allow_fast);
}

// Selects schoolbook-only multiplication for the current thread (testing aid).
void set_force_schoolbook(bool on);
bool force_schoolbook();

}  // namespace detail

// ---------------------------------------------------------------------------
// Arithmetic.

template <class R>
Series<R> operator+(const Series<R>& f, const Series<R>& g) {
    int k = std::min(f.order(), g.order());
    Series<R> r(k);
    for (int i = 0; i <= k; ++i) r[i] = f[i] + g[i];
    return r;
}

template <class R>
Series<R> operator-(const Series<R>& f, const Series<R>& g) {
    int k = std::min(f.order(), g.order());
    Series<R> r(k);
    for (int i = 0; i <= k; ++i) r[i] = f[i] - g[i];
    return r;
}

template <class R>
Series<R> operator-(const Series<R>& f) {
    Series<R> r(f.order());
    for (int i = 0; i <= f.order(); ++i) r[i] = -f[i];
    return r;
}

template <class R>
Series<R> scale(const Series<R>& f, const R& c) {
    Series<R> r(f.order());
    for (int i = 0; i <= f.order(); ++i) r[i] = f[i] * c;
    return r;
}

template <class R>
Series<R> operator*(const R& c, const Series<R>& f) {
    return scale(f, c);
}

// Product known to min(K_f + val g, K_g + val f), capped at `cap` when given.
template <class R>
Series<R> mul(const Series<R>& f, const Series<R>& g, int cap = -1) {
    int vf = f.valuation(), vg = g.valuation();
    int k = std::min(f.order() + vg, g.order() + vf);
    if (cap >= 0) k = std::min(k, cap);
    if (k < 0) throw Error(ErrorKind::PrecisionUnderflow, "product has no known terms");
    std::size_t need = static_cast<std::size_t>(k) + 1;
    std::vector<R> a(f.coeffs().begin(), f.coeffs().begin() + std::min(need, f.coeffs().size()));
    std::vector<R> b(g.coeffs().begin(), g.coeffs().begin() + std::min(need, g.coeffs().size()));
    std::vector<R> p = detail::multiply(a, b, !detail::force_schoolbook());
    p.resize(need, R(0));
    return Series<R>(std::move(p));
}

template <class R>
Series<R> operator*(const Series<R>& f, const Series<R>& g) {
    return mul(f, g);
}

template <class R>
Series<R> pow(const Series<R>& f, long e) {
    if (e < 0) throw Error(ErrorKind::NonUnitConstantTerm, "negative power of a series; use inverse");
    if (e == 0) return Series<R>::constant(R(1), f.order());
    Series<R> b = f, acc;
    bool have = false;
    while (e) {
        if (e & 1) {
            acc = have ? mul(acc, b) : b;
            have = true;
        }
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return acc;
}

// Multiplicative inverse; the constant term must be invertible.
template <class R>
Series<R> inverse(const Series<R>& f) {
    if (is_zero(f[0])) throw Error(ErrorKind::DivisionValuation, "inverse of a series with zero constant term");
    const int k = f.order();
    R c0 = R(1) / f[0];
    if (k < 48) {
        Series<R> g(k);
        g[0] = c0;
        for (int n = 1; n <= k; ++n) {
            R s(0);
            for (int j = 1; j <= n; ++j)
                if (!is_zero(f[j])) s += f[j] * g[n - j];
            g[n] = -(s * c0);
        }
        return g;
    }
    // Newton: g <- g (2 - f g), doubling the precision each step.
    Series<R> g = Series<R>::constant(c0, 0);
    int prec = 0;
    while (prec < k) {
        int np = std::min(k, 2 * prec + 1);
        Series<R> gg(g.coeffs(), np);
        Series<R> fg = mul(f.truncated(np), gg, np);
        Series<R> two = -fg;
        two[0] += R(2);
        g = mul(gg, two, np);
        prec = np;
    }
    return g;
}

// f/g; valuations are factored out first so val(g) <= val(f) is allowed.
template <class R>
Series<R> divide(const Series<R>& f, const Series<R>& g) {
    int vg = g.valuation();
    if (vg > g.order()) throw Error(ErrorKind::DivisionValuation, "division by a series with no known nonzero term");
    int vf = f.valuation();
    if (vf < vg && vf <= f.order()) throw Error(ErrorKind::DivisionValuation, "valuation of divisor exceeds dividend");
    int k = std::min(f.order(), g.order()) - vg;
    if (k < 0) throw Error(ErrorKind::PrecisionUnderflow, "quotient has no known terms");
    Series<R> a = f.truncated(k + vg).shifted_down(vg);
    Series<R> b = g.truncated(k + vg).shifted_down(vg);
    return mul(a, inverse(b), k);
}

template <class R>
Series<R> operator/(const Series<R>& f, const Series<R>& g) {
    return divide(f, g);
}

template <class R>
Series<R> derive(const Series<R>& f) {
    if (f.order() == 0) return Series<R>(0);
    Series<R> r(f.order() - 1);
    for (int i = 1; i <= f.order(); ++i) r[i - 1] = f[i] * R(i);
    return r;
}

// Antiderivative with zero constant term.
template <class R>
Series<R> integrate(const Series<R>& f) {
    Series<R> r(f.order() + 1);
    for (int i = 0; i <= f.order(); ++i) r[i + 1] = f[i] / R(i + 1);
    return r;
}

template <class R>
void require_unit_constant(const Series<R>& f, const char* what) {
    if (!(f[0] == R(1)))
        throw Error(ErrorKind::NonUnitConstantTerm, std::string(what) + " requires constant term 1");
}

template <class R>
Series<R> log(const Series<R>& f) {
    require_unit_constant(f, "log");
    return integrate(divide(derive(f), f.truncated(std::max(0, f.order() - 1))));
}

template <class R>
Series<R> exp(const Series<R>& f) {
    if (!is_zero(f[0])) throw Error(ErrorKind::NonUnitConstantTerm, "exp requires zero constant term");
    const int k = f.order();
    Series<R> e(k);
    e[0] = R(1);
    // n e_n = sum_k k f_k e_{n-k}
    for (int n = 1; n <= k; ++n) {
        R s(0);
        for (int j = 1; j <= n; ++j)
            if (!is_zero(f[j])) s += R(j) * f[j] * e[n - j];
        e[n] = s / R(n);
    }
    return e;
}

// f^r for a rational exponent, f(0) = 1, via n P_n = sum (r k - (n-k)) f_k P_{n-k}.
template <class R>
Series<R> pow_rational(const Series<R>& f, const Rational& r) {
    require_unit_constant(f, "pow_rational");
    const int k = f.order();
    Series<R> p(k);
    p[0] = R(1);
    for (int n = 1; n <= k; ++n) {
        R s(0);
        for (int j = 1; j <= n; ++j) {
            if (is_zero(f[j])) continue;
            Rational w = r * Rational(j) - Rational(n - j);
            if (w.is_zero()) continue;
            s += from_rational<R>(w) * f[j] * p[n - j];
        }
        p[n] = s / R(n);
    }
    return p;
}

// Evaluates an exact polynomial (coefficient list) at a series g.
template <class R>
Series<R> compose_polynomial(const std::vector<R>& poly, const Series<R>& g) {
    Series<R> acc = Series<R>::constant(R(0), g.order());
    for (std::size_t i = poly.size(); i-- > 0;) {
        acc = mul(acc, g, g.order());
        acc[0] += poly[i];
    }
    return acc;
}

// f(g(x)) with val(g) >= 1; known to min(v (K_f + 1) - 1, K_g + (val f - 1) v).
template <class R>
Series<R> compose(const Series<R>& f, const Series<R>& g) {
    int v = g.valuation();
    if (!is_zero(g[0])) throw Error(ErrorKind::NonpositiveValuation, "inner series must have zero constant term");
    if (v > g.order()) {
        // g vanishes to its known precision; only f(0) is certain.
        return Series<R>::constant(f[0], g.order());
    }
    int vf = std::min(f.valuation(), f.order() + 1);
    int k = std::min(v * (f.order() + 1) - 1, g.order() + std::max(0, vf - 1) * v);
    Series<R> gg = g.order() >= k ? g.truncated(k) : Series<R>(g.coeffs(), k);
    // Terms beyond top cannot reach order k.
    int top = std::min(f.order(), k / v);
    if (top < 16) {
        Series<R> acc = Series<R>::constant(f[top], k);
        for (int i = top - 1; i >= 0; --i) {
            acc = mul(acc, gg, k);
            acc = Series<R>(acc.coeffs(), k);
            acc[0] += f[i];
        }
        return acc;
    }
    // Baby steps g^0..g^(m-1), giant step g^m, Horner over blocks of m terms.
    int m = 1;
    while (m * m < top + 1) ++m;
    std::vector<Series<R>> pw;
    pw.push_back(Series<R>::constant(R(1), k));
    for (int i = 1; i <= m; ++i) pw.push_back(Series<R>(mul(pw.back(), gg, k).coeffs(), k));
    auto block = [&](int j) {
        Series<R> b(k);
        for (int i = 0; i < m && j * m + i <= top; ++i) {
            const R& c = f[j * m + i];
            if (is_zero(c)) continue;
            for (int t = i * v; t <= k; ++t)
                if (!is_zero(pw[static_cast<std::size_t>(i)][t])) b[t] += c * pw[static_cast<std::size_t>(i)][t];
        }
        return b;
    };
    int blocks = top / m;
    Series<R> acc = block(blocks);
    for (int j = blocks - 1; j >= 0; --j) acc = Series<R>(mul(acc, pw[static_cast<std::size_t>(m)], k).coeffs(), k) + block(j);
    return acc;
}

// Compositional inverse of f = c x + ..., c invertible, by Newton iteration.
template <class R>
Series<R> revert(const Series<R>& f) {
    if (!is_zero(f[0]) || f.order() < 1 || is_zero(f[1]))
        throw Error(ErrorKind::BadValuation, "reversion requires valuation exactly 1");
    const int k = f.order();
    R c = R(1) / f[1];
    Series<R> g(1);
    g[1] = c;
    Series<R> df = derive(f);
    int prec = 1;
    while (prec < k) {
        int np = std::min(k, 2 * prec);
        Series<R> gg(g.coeffs(), np);
        Series<R> fg = compose(f.truncated(np), gg);
        // f(g) - x vanishes to order prec, so f'(g) is needed to order np - prec - 1.
        Series<R> err = (fg - Series<R>::x(np)).shifted_down(prec + 1);
        Series<R> dfg = compose(df.truncated(np - prec - 1), gg.truncated(np - prec - 1));
        g = gg - mul(err, inverse(dfg), np - prec - 1).shifted_up(prec + 1);
        prec = np;
    }
    return g;
}

// Order-by-order reversion (Lagrange-free substitution); used as a cross-check.
template <class R>
Series<R> revert_naive(const Series<R>& f) {
    if (!is_zero(f[0]) || f.order() < 1 || is_zero(f[1]))
        throw Error(ErrorKind::BadValuation, "reversion requires valuation exactly 1");
    const int k = f.order();
    Series<R> g(k);
    g[1] = R(1) / f[1];
    for (int n = 2; n <= k; ++n) {
        Series<R> t = compose(f.truncated(n), g.truncated(n));
        g[n] = -(t[n] / f[1]);
    }
    return g;
}

// Taylor expansion of num/den; a common power of x is cancelled first.
template <class R>
Series<R> expand_rational(const std::vector<R>& num, const std::vector<R>& den, int order) {
    auto val = [](const std::vector<R>& p) {
        for (std::size_t i = 0; i < p.size(); ++i)
            if (!is_zero(p[i])) return static_cast<int>(i);
        return -1;
    };
    int vd = val(den);
    if (vd < 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    int vn = val(num);
    if (vn < 0) return Series<R>(order);
    if (vn < vd) throw Error(ErrorKind::PoleAtOrigin, "denominator vanishes at the origin to higher order");
    std::vector<R> n(num.begin() + vd, num.end()), d(den.begin() + vd, den.end());
    Series<R> ns(n, std::max(order, static_cast<int>(n.size()) - 1));
    Series<R> ds(d, std::max(order, static_cast<int>(d.size()) - 1));
    return mul(ns.truncated(order), inverse(ds.truncated(order)), order);
}

// g with g^N = f: g = x^(v/N) (f / (c x^v))^(1/N), leading coefficient c must be 1.
template <class R>
Series<R> nth_root_split(const Series<R>& f, int n) {
    int v = f.valuation();
    if (v > f.order()) throw Error(ErrorKind::ValuationNotDivisible, "series vanishes to its known order");
    if (v % n != 0)
        throw Error(ErrorKind::ValuationNotDivisible,
                    "valuation " + std::to_string(v) + " is not divisible by " + std::to_string(n));
    if (!(f[v] == R(1))) throw Error(ErrorKind::NonUnitLeading, "leading coefficient must be 1");
    Series<R> u = f.shifted_down(v);
    return pow_rational(u, Rational(1, n)).shifted_up(v / n);
}

// ---------------------------------------------------------------------------
// Laurent series: x^shift * body, known modulo x^(shift + body.order() + 1).

template <class R>
struct Laurent {
    int shift = 0;
    Series<R> body;

    int precision() const { return shift + body.order(); }
    R coeff(int n) const {
        int i = n - shift;
        if (i < 0) return R(0);
        return body[i];
    }
    // Rewrites with a smaller shift (padding zeros).
    Laurent with_shift(int s) const {
        if (s > shift) throw Error(ErrorKind::PrecisionUnderflow, "cannot raise the Laurent shift");
        return {s, body.shifted_up(shift - s)};
    }
};

template <class R>
Laurent<R> operator+(const Laurent<R>& a, const Laurent<R>& b) {
    int s = std::min(a.shift, b.shift);
    Laurent<R> x = a.with_shift(s), y = b.with_shift(s);
    return {s, x.body + y.body};
}

template <class R>
Laurent<R> operator-(const Laurent<R>& a, const Laurent<R>& b) {
    int s = std::min(a.shift, b.shift);
    Laurent<R> x = a.with_shift(s), y = b.with_shift(s);
    return {s, x.body - y.body};
}

template <class R>
Laurent<R> operator*(const Laurent<R>& a, const Laurent<R>& b) {
    return {a.shift + b.shift, mul(a.body, b.body)};
}

// Schwarzian derivative {y, x} = y'''/y' - 3/2 (y''/y')^2 as a Laurent series.
// With y = x^v u, y' = x^(v-1) p, p(0) = v u(0):
// {y,x} = x^-2 [ x^2 (p'/p)' - x^2 (p'/p)^2 / 2 - (v-1) x p'/p - (v^2-1)/2 ].
template <class R>
Laurent<R> schwarzian(const Series<R>& y) {
    int v = y.valuation();
    if (v > y.order()) throw Error(ErrorKind::ZeroDerivative, "derivative vanishes to known order");
    if (v == 0) {
        Series<R> y1 = derive(y);
        if (is_zero(y1[0])) throw Error(ErrorKind::ZeroDerivative, "y'(0) = 0 with y(0) != 0");
        Series<R> y2 = derive(y1), y3 = derive(y2);
        Series<R> l = divide(y2, y1.truncated(y2.order()));
        Series<R> t = divide(y3, y1.truncated(y3.order()));
        Series<R> ll = mul(l, l);
        Series<R> r = t - scale(ll, from_rational<R>(Rational(3, 2)));
        return {0, r};
    }
    Series<R> u = y.shifted_down(v);
    Series<R> p = scale(u, R(v)) + Series<R>(derive(u).shifted_up(1).coeffs(), u.order());
    Series<R> lp = divide(derive(p), p.truncated(std::max(0, p.order() - 1)));  // p'/p
    Series<R> x_lp = lp.shifted_up(1);
    Series<R> x2_dlp = derive(lp).shifted_up(2);
    Series<R> x2_lp2 = mul(x_lp, x_lp);
    int k = std::min({x_lp.order(), x2_dlp.order(), x2_lp2.order()});
    Series<R> body(k);
    R half = from_rational<R>(Rational(1, 2));
    for (int i = 0; i <= k; ++i) body[i] = x2_dlp[i] - x2_lp2[i] * half - x_lp[i] * R(v - 1);
    body[0] -= from_rational<R>(Rational(static_cast<long>(v) * v - 1, 2));
    return {-2, body};
}

// Evaluates x^s * l(x) at y = x^v u, returning x^(s v) * u^s * l(y).
template <class R>
Laurent<R> compose_laurent(const Laurent<R>& w, const Series<R>& y) {
    int v = y.valuation();
    if (v == 0 || v > y.order()) throw Error(ErrorKind::NonpositiveValuation, "inner series must have valuation >= 1");
    Series<R> u = y.shifted_down(v);
    Series<R> ly = compose(w.body, y);
    Series<R> us;
    if (w.shift >= 0) {
        us = pow(u, w.shift);
    } else {
        us = pow(inverse(u), -w.shift);
    }
    return {w.shift * v, mul(us, ly)};
}

}  // namespace fseries
