#include "fseries/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace fseries {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

std::vector<long> div_exact_int(std::vector<long> num, const std::vector<long>& den) {
    // den is monic
    std::vector<long> q(num.size() - den.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        long c = num[i + den.size() - 1];
        q[i] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    return q;
}

// Remainder of a modulo the monic integer polynomial m.
QPoly reduce_mod(QPoly a, const std::vector<long>& m) {
    std::size_t d = m.size() - 1;
    for (std::size_t i = a.size(); i-- > d;) {
        if (a[i].is_zero()) continue;
        Rational c = a[i];
        for (std::size_t j = 0; j <= d; ++j) a[i - d + j] -= c * Rational(m[j]);
    }
    a.resize(d, Rational(0));
    return a;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Quotient and remainder over Q.
void poly_divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
    trim(a);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    Rational lead_inv = b.back().inv();
    for (std::size_t i = q.size(); i-- > 0;) {
        Rational c = a[i + b.size() - 1] * lead_inv;
        q[i] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    trim(a);
    r = a;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(unsigned n) {
    static std::recursive_mutex mu;
    static std::map<unsigned, std::vector<long>> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d) continue;
        p = div_exact_int(p, cyclotomic_polynomial(d));
    }
    return cache[n] = p;
}

unsigned euler_phi(unsigned n) { return static_cast<unsigned>(cyclotomic_polynomial(n).size() - 1); }

CyclotomicElem cyclotomic_reduce(unsigned n, const std::vector<Rational>& raw) {
    if (n == 0) throw Error(ErrorKind::BadReduction, "cyclotomic order must be positive");
    CyclotomicElem e;
    e.n_ = n;
    e.c_ = reduce_mod(raw, cyclotomic_polynomial(n));
    return e;
}

CyclotomicElem CyclotomicElem::root_power(unsigned n, long k) {
    long m = k % static_cast<long>(n);
    if (m < 0) m += n;
    std::vector<Rational> raw(static_cast<std::size_t>(m) + 1, Rational(0));
    raw[static_cast<std::size_t>(m)] = Rational(1);
    return cyclotomic_reduce(n, raw);
}

bool CyclotomicElem::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool CyclotomicElem::is_scalar() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

namespace {

unsigned common_order(const CyclotomicElem& a, const CyclotomicElem& b) {
    if (a.order() == b.order()) return a.order();
    if (a.order() == 1 || a.is_scalar()) return b.order();
    if (b.order() == 1 || b.is_scalar()) return a.order();
    throw Error(ErrorKind::MixedRings, "cyclotomic orders " + std::to_string(a.order()) + " and " +
                                           std::to_string(b.order()));
}

std::vector<Rational> lift(const CyclotomicElem& e, unsigned n) {
    std::vector<Rational> v(euler_phi(n), Rational(0));
    if (e.order() == n) return e.coords();
    v[0] = e.coords()[0];
    return v;
}

}  // namespace

CyclotomicElem operator+(const CyclotomicElem& a, const CyclotomicElem& b) {
    unsigned n = common_order(a, b);
    auto x = lift(a, n), y = lift(b, n);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return cyclotomic_reduce(n, x);
}

CyclotomicElem operator-(const CyclotomicElem& a, const CyclotomicElem& b) {
    unsigned n = common_order(a, b);
    auto x = lift(a, n), y = lift(b, n);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
    return cyclotomic_reduce(n, x);
}

CyclotomicElem operator-(const CyclotomicElem& a) {
    auto x = a.coords();
    for (auto& c : x) c = -c;
    return cyclotomic_reduce(a.order(), x);
}

CyclotomicElem operator*(const CyclotomicElem& a, const CyclotomicElem& b) {
    unsigned n = common_order(a, b);
    if (a.is_scalar() || b.is_scalar()) {
        const CyclotomicElem& s = a.is_scalar() ? a : b;
        const CyclotomicElem& o = a.is_scalar() ? b : a;
        auto x = lift(o, n);
        for (auto& c : x) c *= s.coords()[0];
        return cyclotomic_reduce(n, x);
    }
    return cyclotomic_reduce(n, poly_mul(lift(a, n), lift(b, n)));
}

CyclotomicElem CyclotomicElem::inv() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(w)");
    if (is_scalar()) {
        std::vector<Rational> x(c_.size(), Rational(0));
        x[0] = c_[0].inv();
        return cyclotomic_reduce(n_, x);
    }
    // Extended Euclid: s*a + t*Phi = g, g a nonzero constant.
    const auto& m = cyclotomic_polynomial(n_);
    QPoly phi(m.begin(), m.end());
    QPoly r0 = phi, r1 = c_;
    trim(r1);
    QPoly s0, s1{Rational(1)};
    while (r1.size() > 1) {
        QPoly q, r;
        poly_divmod(r0, r1, q, r);
        QPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    Rational g = r1[0].inv();
    for (auto& c : s1) c *= g;
    return cyclotomic_reduce(n_, s1);
}

CyclotomicElem CyclotomicElem::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    CyclotomicElem r = cyclotomic_reduce(n_, {Rational(1)}), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

CyclotomicElem operator/(const CyclotomicElem& a, const CyclotomicElem& b) { return a * b.inv(); }

bool operator==(const CyclotomicElem& a, const CyclotomicElem& b) {
    if (a.order() != b.order()) {
        if (!(a.is_scalar() && b.is_scalar())) return false;
        return a.coords()[0] == b.coords()[0];
    }
    return a.coords() == b.coords();
}

std::ostream& operator<<(std::ostream& os, const CyclotomicElem& e) {
    bool first = true;
    for (std::size_t k = 0; k < e.coords().size(); ++k) {
        const Rational& c = e.coords()[k];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? "+" : "");
        first = false;
        if (k == 0) {
            os << c;
        } else {
            if (c == Rational(-1)) os << "-";
            else if (c != Rational(1)) os << c << "*";
            os << "w";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os;
}

}  // namespace fseries
