#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fseries/param_poly.hpp"
#include "fseries/series.hpp"

namespace fseries {

struct Fixture {
    enum class Kind { Series, Polynomial, Primes, RationalFunction, Scalar };

    std::string id;
    Kind kind = Kind::Series;
    std::string note;
    std::string var = "x";
    std::map<int, ParamPolynomial> terms;  // series coefficients by exponent
    ParamPolynomial poly, num, den;
    std::vector<std::uint64_t> primes;
    std::string value;

    int top() const { return terms.empty() ? -1 : terms.rbegin()->first; }
    // Coefficient of var^n, zero when absent and n <= top().
    ParamPolynomial coeff(int n) const;
    // Rational series to top(); KindMismatch when a coefficient involves parameters.
    Series<Rational> rational_series() const;
    Series<ParamPolynomial> param_series() const;
    // Expansion of num/den in var to the given order.
    Series<Rational> expand(int order) const;
    Rational scalar() const;  // exact rational values only
    double scalar_double() const;
};

const char* kind_name(Fixture::Kind k);

class FixtureSet {
public:
    static FixtureSet parse(const std::string& text);
    static FixtureSet load(const std::string& path);
    // fixtures.txt in the data directory (REPLICA_FIXTURES overrides).
    static const FixtureSet& standard();

    const Fixture& get(const std::string& id) const;
    bool contains(const std::string& id) const { return fixtures_.count(id) != 0; }
    std::vector<std::string> ids() const;

private:
    std::map<std::string, Fixture> fixtures_;
};

// Shorthand for FixtureSet::standard().get(id).
const Fixture& load_fixture(const std::string& id);

struct SeriesDiff {
    bool pass = true;
    int first_mismatch = -1;  // exponent of the first differing coefficient
    int compared_to = -1;     // highest exponent compared
    bool truncated = false;   // computed series shorter than the fixture
    std::string detail;
};

// Exact comparison on the overlap of the computed series and the fixture.
template <class R>
SeriesDiff diff_series(const Series<R>& computed, const Fixture& fx);

extern template SeriesDiff diff_series<Rational>(const Series<Rational>&, const Fixture&);
extern template SeriesDiff diff_series<ParamPolynomial>(const Series<ParamPolynomial>&, const Fixture&);

}  // namespace fseries
