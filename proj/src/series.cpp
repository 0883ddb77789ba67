#include "fseries/series.hpp"

namespace fseries::detail {

namespace {
thread_local bool g_force_schoolbook = false;

mpz_class common_denominator(const std::vector<Rational>& v) {
    mpz_class d = 1;
    for (const auto& c : v)
        if (!c.is_zero() && c.den() != 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.raw().get_den_mpz_t());
    return d;
}

std::vector<mpz_class> scaled(const std::vector<Rational>& v, const mpz_class& d) {
    std::vector<mpz_class> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (d == 1) {
            out[i] = v[i].raw().get_num();
        } else {
            mpz_class q = d / v[i].raw().get_den();
            out[i] = v[i].raw().get_num() * q;
        }
    }
    return out;
}
}  // namespace

void set_force_schoolbook(bool on) { g_force_schoolbook = on; }
bool force_schoolbook() { return g_force_schoolbook; }

std::vector<Rational> product_rational(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                       bool allow_fast) {
    if (a.empty() || b.empty()) return {};
    mpz_class da = common_denominator(a), db = common_denominator(b);
    std::vector<mpz_class> ia = scaled(a, da), ib = scaled(b, db);
    std::vector<mpz_class> ip = product(ia, ib, allow_fast);
    mpz_class d = da * db;
    std::vector<Rational> out;
    out.reserve(ip.size());
    for (auto& v : ip) out.emplace_back(d == 1 ? Rational(v) : Rational(v, d));
    return out;
}

}  // namespace fseries::detail
