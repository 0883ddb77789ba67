#pragma once

#include "fseries/cyclotomic.hpp"
#include "fseries/param_poly.hpp"
#include "fseries/prime_field.hpp"
#include "fseries/rational.hpp"

namespace fseries {

// Embedding of exact rationals into each coefficient ring.
template <class R>
R from_rational(const Rational& q);

template <>
inline Rational from_rational<Rational>(const Rational& q) { return q; }
template <>
inline ParamPolynomial from_rational<ParamPolynomial>(const Rational& q) { return ParamPolynomial(q); }
template <>
inline ParamRationalFunction from_rational<ParamRationalFunction>(const Rational& q) {
    return ParamRationalFunction(ParamPolynomial(q));
}
template <>
inline CyclotomicElem from_rational<CyclotomicElem>(const Rational& q) { return CyclotomicElem(q); }
template <>
inline PrimeFieldElem from_rational<PrimeFieldElem>(const Rational& q) {
    if (!q.is_integer()) throw Error(ErrorKind::MixedRings, "non-integer rational without a modulus");
    return PrimeFieldElem(q.num().get_si());
}

}  // namespace fseries
