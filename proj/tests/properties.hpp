#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "fseries/arith.hpp"
#include "fseries/fixtures.hpp"
#include "fseries/schwarzian.hpp"

// Randomized identities shared by the unit tests and the acceptance runner.
// Each check returns an empty string on success and a description otherwise.
namespace fseries::props {

inline constexpr int kSeeds = 50;

Rational random_rational(std::mt19937_64& rng, long num_bound = 9, long den_bound = 5);
// x + c_2 x^2 + ... + c_K x^K with random rational c_i.
QSeries random_tangent_series(std::mt19937_64& rng, int order);

// Series of x^shift * num/den after cancelling common powers of the variable.
QSeries rational_function_series(const Fixture& fx, int shift, int order);

std::string compose_revert_roundtrip(std::uint64_t seed);
std::string schwarzian_moebius_invariance(std::uint64_t seed);
std::string schwarzian_chain_rule(std::uint64_t seed);
// y_2(y_3) = y_3(y_2) = y_6, exactly and modulo a seed-selected prime.
std::string correspondence_commutation(std::uint64_t seed);
// a y_a = F(y), F(x) y' = F(y) and their combination, for a random cubic F.
std::string transport_residuals_vanish(std::uint64_t seed);
std::string reduction_is_multiplicative(std::uint64_t seed);
// D - u'/u has zero p-curvature for every prime where u does not vanish identically.
std::string logarithmic_derivative_p_curvature(std::uint64_t seed);
// Ratio estimate recovers the nearest pole of a random rational function.
std::string radius_self_calibration(std::uint64_t seed);

}  // namespace fseries::props
