#include "fseries/rational.hpp"

#include <cctype>

namespace fseries {

Rational::Rational(long n, long d) {
    if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

static bool valid_integer(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto slash = s.find('/');
    std::string n = s.substr(0, slash);
    std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_integer(n) || !valid_integer(d) || d[0] == '-' || d[0] == '+')
        throw Error(ErrorKind::ParseError, "not a rational: '" + text + "'");
    if (n[0] == '+') n = n.substr(1);
    mpz_class dn(d);
    if (dn == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + text + "'");
    return Rational(mpz_class(n), dn);
}

Rational Rational::inv() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(r);
}

Rational Rational::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    v_ /= o.v_;
    return *this;
}

double Rational::to_double() const { return fseries::to_double(v_.get_num(), v_.get_den()); }

double to_double(const mpz_class& num, const mpz_class& den) {
    mpf_class n(num, 512), d(den, 512);
    mpf_class q(n / d, 512);
    return q.get_d();
}

long padic_valuation(const Rational& r, unsigned long p) {
    if (r.is_zero()) throw Error(ErrorKind::DivisionByZero, "valuation of zero");
    long v = 0;
    mpz_class n = r.num(), d = r.den();
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) { n /= p; ++v; }
    while (mpz_divisible_ui_p(d.get_mpz_t(), p)) { d /= p; --v; }
    return v;
}

}  // namespace fseries
