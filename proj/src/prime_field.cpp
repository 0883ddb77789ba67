#include "fseries/prime_field.hpp"

namespace fseries {

namespace {

using u128 = unsigned __int128;

std::uint64_t reduce(long n, std::uint64_t p) {
    long m = n % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    return static_cast<std::uint64_t>(m);
}

// Resolves the common modulus of two operands, lifting untyped constants.
std::uint64_t common(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    if (a.typed() && b.typed() && a.modulus() != b.modulus())
        throw Error(ErrorKind::MixedRings, "F_" + std::to_string(a.modulus()) + " vs F_" +
                                               std::to_string(b.modulus()));
    return a.typed() ? a.modulus() : b.modulus();
}

}  // namespace

PrimeFieldElem::PrimeFieldElem(std::uint64_t p, long n) : p_(p), v_(0) {
    if (p < 2) throw Error(ErrorKind::BadReduction, "modulus must be at least 2");
    v_ = static_cast<long>(reduce(n, p));
}

std::uint64_t PrimeFieldElem::value() const {
    return typed() ? static_cast<std::uint64_t>(v_) : static_cast<std::uint64_t>(v_);
}

static std::uint64_t residue(const PrimeFieldElem& e, std::uint64_t p) {
    return e.typed() ? e.value() : reduce(static_cast<long>(e.value()), p);
}

static long raw_int(const PrimeFieldElem& e) { return static_cast<long>(e.value()); }

PrimeFieldElem operator+(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    std::uint64_t p = common(a, b);
    if (p == 0) return PrimeFieldElem(raw_int(a) + raw_int(b));
    std::uint64_t s = residue(a, p) + residue(b, p);
    if (s >= p) s -= p;
    return PrimeFieldElem(p, static_cast<long>(s));
}

PrimeFieldElem operator-(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    std::uint64_t p = common(a, b);
    if (p == 0) return PrimeFieldElem(raw_int(a) - raw_int(b));
    std::uint64_t x = residue(a, p), y = residue(b, p);
    return PrimeFieldElem(p, static_cast<long>(x >= y ? x - y : x + p - y));
}

PrimeFieldElem operator*(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    std::uint64_t p = common(a, b);
    if (p == 0) return PrimeFieldElem(raw_int(a) * raw_int(b));
    u128 m = static_cast<u128>(residue(a, p)) * residue(b, p);
    return PrimeFieldElem(p, static_cast<long>(static_cast<std::uint64_t>(m % p)));
}

PrimeFieldElem operator-(const PrimeFieldElem& a) {
    if (!a.typed()) return PrimeFieldElem(-raw_int(a));
    return PrimeFieldElem(a.modulus(), 0) - a;
}

PrimeFieldElem PrimeFieldElem::pow(std::uint64_t e) const {
    if (!typed()) throw Error(ErrorKind::MixedRings, "power of an untyped constant");
    PrimeFieldElem r(p_, 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

PrimeFieldElem PrimeFieldElem::inv() const {
    if (!typed()) {
        if (v_ == 1 || v_ == -1) return *this;
        throw Error(ErrorKind::MixedRings, "inverse of an untyped constant");
    }
    if (v_ == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_" + std::to_string(p_));
    return pow(p_ - 2);
}

PrimeFieldElem operator/(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    std::uint64_t p = common(a, b);
    if (p == 0) {
        if (raw_int(b) == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
        if (raw_int(a) % raw_int(b) != 0)
            throw Error(ErrorKind::MixedRings, "inexact division of untyped constants");
        return PrimeFieldElem(raw_int(a) / raw_int(b));
    }
    PrimeFieldElem bb(p, static_cast<long>(residue(b, p)));
    return a * bb.inv();
}

bool operator==(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    std::uint64_t p = common(a, b);
    if (p == 0) return raw_int(a) == raw_int(b);
    return residue(a, p) == residue(b, p);
}

PrimeFieldElem rational_mod_p(const Rational& r, std::uint64_t p) {
    mpz_class pp(static_cast<unsigned long>(p));
    mpz_class d = r.den() % pp;
    if (d == 0)
        throw Error(ErrorKind::BadReduction, r.str() + " has a denominator divisible by " +
                                                 std::to_string(p));
    mpz_class n = r.num() % pp;
    if (n < 0) n += pp;
    if (d < 0) d += pp;
    PrimeFieldElem num(p, static_cast<long>(n.get_ui()));
    PrimeFieldElem den(p, static_cast<long>(d.get_ui()));
    return num / den;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace fseries
