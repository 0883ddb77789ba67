#include "fseries/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace fseries {

ModPSeries reduce_mod_p(const QSeries& f, std::uint64_t p) {
    if (!is_prime(p)) throw Error(ErrorKind::BadReduction, std::to_string(p) + " is not prime");
    ModPSeries out(f.order());
    for (int i = 0; i <= f.order(); ++i) {
        try {
            out[i] = rational_mod_p(f[i], p);
        } catch (const Error&) {
            throw Error(ErrorKind::BadReduction,
                        "coefficient " + std::to_string(i) + " has a denominator divisible by " + std::to_string(p));
        }
    }
    return out;
}

SigmaReport sigma_check(int order) {
    SigmaReport rep;
    QSeries q = nome_from_spec(FSpec::elliptic(), order + 1);
    QSeries X = mirror_from_nome(q);
    QSeries S = compose(X, scale(q, Rational(3)));
    QSeries t = (S - scale(QSeries::x(S.order()), Rational(3))).shifted_down(1);
    QSeries sigma = scale(t, Rational(1, 96));
    sigma[0] += Rational(1);
    sigma[1] += Rational(99, 2);
    rep.sigma = sigma;
    rep.sigma_mod2 = reduce_mod_p(sigma, 2);
    ModPSeries x = ModPSeries::x(order);
    for (int i = 0; i <= order; ++i) x[i] = PrimeFieldElem(2, i == 1 ? 1 : 0);
    rep.residual_mod2 = mul(rep.sigma_mod2, rep.sigma_mod2, order) - rep.sigma_mod2 + x;
    rep.residual_zero = rep.residual_mod2.valuation() > order;
    rep.matches_lacunary = true;
    for (int i = 0; i <= order; ++i) {
        bool one = i == 0 || i == 1 || (i > 1 && (i & (i - 1)) == 0);
        if (rep.sigma_mod2[i] != PrimeFieldElem(2, one ? 1 : 0)) rep.matches_lacunary = false;
    }
    return rep;
}

OperatorOrderOne OperatorOrderOne::nome_operator(const std::vector<Rational>& f_poly) {
    return OperatorOrderOne{{Rational(1)}, f_poly};
}

namespace {

// Dense polynomials over F_p, constant term first, no trailing zeros.
using PolyP = std::vector<std::uint64_t>;

void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

PolyP add(const PolyP& a, const PolyP& b, std::uint64_t p) {
    PolyP r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    trim(r);
    return r;
}

PolyP mul(const PolyP& a, const PolyP& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    trim(r);
    return r;
}

PolyP scale(const PolyP& a, std::uint64_t c, std::uint64_t p) {
    PolyP r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], c, p);
    trim(r);
    return r;
}

PolyP derive(const PolyP& a, std::uint64_t p) {
    PolyP r(a.empty() ? 0 : a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
    trim(r);
    return r;
}

PolyP reduce(const std::vector<Rational>& c, std::uint64_t p) {
    PolyP r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        try {
            r[i] = rational_mod_p(c[i], p).value();
        } catch (const Error&) {
            throw Error(ErrorKind::PoleCollision, "operator coefficient does not reduce mod " + std::to_string(p));
        }
    }
    trim(r);
    return r;
}

}  // namespace

PCurvature p_curvature_order_one(const OperatorOrderOne& op, std::uint64_t p) {
    if (!is_prime(p)) throw Error(ErrorKind::BadReduction, std::to_string(p) + " is not prime");
    PolyP a = reduce(op.num, p), b = reduce(op.den, p);
    if (b.empty()) throw Error(ErrorKind::PoleCollision, "denominator vanishes mod " + std::to_string(p));
    // A_k = N_k / b^k with N_(k+1) = b N_k' + (a - k b') N_k.
    PolyP db = derive(b, p);
    PolyP n = a;
    for (std::uint64_t k = 1; k < p; ++k) {
        PolyP kdb = scale(db, (p - k % p) % p, p);
        n = add(mul(b, derive(n, p), p), mul(add(a, kdb, p), n, p), p);
    }
    return n.empty() ? PCurvature::Zero : PCurvature::Nonzero;
}

PCurvatureSurvey p_curvature_survey(const OperatorOrderOne& op, std::uint64_t lo, std::uint64_t hi) {
    PCurvatureSurvey s;
    for (std::uint64_t p = std::max<std::uint64_t>(lo, 2); p <= hi; ++p) {
        if (!is_prime(p)) continue;
        try {
            (p_curvature_order_one(op, p) == PCurvature::Zero ? s.zero : s.nonzero).push_back(p);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::PoleCollision) throw;
            s.skipped.push_back(p);
        }
    }
    return s;
}

namespace {

constexpr mp_bitcnt_t kRatioBits = 512;

mpf_class ratio_mpf(const Rational& r) {
    mpf_class n(0, kRatioBits), d(0, kRatioBits), out(0, kRatioBits);
    n = mpf_class(r.num(), kRatioBits);
    d = mpf_class(r.den(), kRatioBits);
    out = n / d;
    return out;
}

}  // namespace

std::string ratio_to_decimal(const Rational& r, int digits) {
    mpf_class v = ratio_mpf(r);
    mp_exp_t e = 0;
    std::string m = v.get_str(e, 10, static_cast<std::size_t>(digits));
    if (m.empty() || m == "0") return "0";
    bool neg = m[0] == '-';
    if (neg) m = m.substr(1);
    std::ostringstream os;
    if (neg) os << '-';
    if (e <= 0) {
        os << "0." << std::string(static_cast<std::size_t>(-e), '0') << m;
    } else if (static_cast<std::size_t>(e) >= m.size()) {
        os << m << std::string(static_cast<std::size_t>(e) - m.size(), '0');
    } else {
        os << m.substr(0, static_cast<std::size_t>(e)) << '.' << m.substr(static_cast<std::size_t>(e));
    }
    return os.str();
}

RadiusEstimate radius_estimate(const QSeries& f, int window) {
    if (window < 1) throw Error(ErrorKind::InsufficientTerms, "window must be positive");
    int K = f.order();
    int first = K - window - 1;
    if (first < 0) throw Error(ErrorKind::InsufficientTerms, "need at least " + std::to_string(window + 2) + " terms");
    for (int i = first; i <= K; ++i)
        if (f[i] == Rational(0))
            throw Error(ErrorKind::InsufficientTerms, "coefficient " + std::to_string(i) + " vanishes in the ratio window");
    RadiusEstimate est;
    mpf_class sum(0, kRatioBits);
    for (int n = K - window; n < K; ++n) {
        mpf_class r = ratio_mpf(f[n] / f[n + 1]);
        sum += r;
        est.trace.push_back(r.get_d());
    }
    Rational last = f[K - 1] / f[K];
    est.estimate = ratio_mpf(last).get_d();
    est.window_mean = mpf_class(sum / window).get_d();
    est.sign = last < Rational(0) ? -1 : 1;
    est.last_index = K - 1;
    return est;
}

namespace {

// Prime factorization by trial division; a leftover cofactor is kept as one entry.
std::map<mpz_class, int> factor(mpz_class n) {
    std::map<mpz_class, int> out;
    for (unsigned long d = 2; d < 1000000 && n > 1; d += (d == 2 ? 1 : 2)) {
        if (mpz_class(d) * d > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            n /= d;
            ++out[mpz_class(d)];
        }
    }
    if (n > 1) ++out[n];
    return out;
}

}  // namespace

BoundednessReport globally_bounded_probe(const QSeries& f, int order, const Rational& bound) {
    BoundednessReport rep;
    int K = std::min(order, f.order());
    std::map<mpz_class, PrimeGrowth> growth;
    for (int n = 1; n <= K; ++n) {
        mpz_class d = f[n].den();
        if (d == 1) continue;
        for (const auto& [p, e] : factor(d)) {
            auto [it, fresh] = growth.try_emplace(p);
            PrimeGrowth& g = it->second;
            if (fresh) {
                g.p = p.fits_ulong_p() ? p.get_ui() : 0;
                g.first_index = n;
            }
            g.exponent = std::max(g.exponent, (e + n - 1) / n);
            g.slope = std::max(g.slope, static_cast<double>(e) / n);
        }
    }
    // Coefficient 0 must already be integral.
    if (f[0].den() != 1) throw Error(ErrorKind::BadReduction, "constant term is not integral");
    rep.integral = growth.empty();
    mpz_class c = 1;
    for (const auto& [p, g] : growth) {
        rep.primes.push_back(g);
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(g.exponent));
        c *= pe;
        if (g.first_index > K / 2) rep.late_primes.push_back(g.p);
    }
    rep.rescale = Rational(c);
    rep.rescalable = rep.late_primes.empty() && !(bound < rep.rescale);
    return rep;
}

}  // namespace fseries
