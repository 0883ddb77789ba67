#include "fseries/fixtures.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "fseries/modular.hpp"

namespace fseries {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Fixture::Kind parse_kind(const std::string& s) {
    if (s == "series") return Fixture::Kind::Series;
    if (s == "polynomial") return Fixture::Kind::Polynomial;
    if (s == "primes") return Fixture::Kind::Primes;
    if (s == "rational-function") return Fixture::Kind::RationalFunction;
    if (s == "scalar") return Fixture::Kind::Scalar;
    throw Error(ErrorKind::ParseError, "unknown fixture kind '" + s + "'");
}

void require_kind(const Fixture& f, Fixture::Kind k) {
    if (f.kind != k)
        throw Error(ErrorKind::KindMismatch,
                    "fixture " + f.id + " is " + kind_name(f.kind) + ", expected " + kind_name(k));
}

}  // namespace

const char* kind_name(Fixture::Kind k) {
    switch (k) {
        case Fixture::Kind::Series: return "series";
        case Fixture::Kind::Polynomial: return "polynomial";
        case Fixture::Kind::Primes: return "primes";
        case Fixture::Kind::RationalFunction: return "rational-function";
        case Fixture::Kind::Scalar: return "scalar";
    }
    return "?";
}

ParamPolynomial Fixture::coeff(int n) const {
    require_kind(*this, Kind::Series);
    auto it = terms.find(n);
    return it == terms.end() ? ParamPolynomial(0) : it->second;
}

Series<Rational> Fixture::rational_series() const {
    require_kind(*this, Kind::Series);
    Series<Rational> s(std::max(top(), 0));
    for (const auto& [n, c] : terms) {
        if (!c.is_constant()) throw Error(ErrorKind::KindMismatch, "fixture " + id + " has symbolic coefficients");
        s[n] = c.to_rational();
    }
    return s;
}

Series<ParamPolynomial> Fixture::param_series() const {
    require_kind(*this, Kind::Series);
    Series<ParamPolynomial> s(std::max(top(), 0));
    for (const auto& [n, c] : terms) s[n] = c;
    return s;
}

Series<Rational> Fixture::expand(int order) const {
    require_kind(*this, Kind::RationalFunction);
    return expand_rational(univariate_coeffs(num, var), univariate_coeffs(den, var), order);
}

Rational Fixture::scalar() const {
    require_kind(*this, Kind::Scalar);
    if (value.find('.') != std::string::npos)
        throw Error(ErrorKind::KindMismatch, "fixture " + id + " is a decimal approximation");
    return ParamPolynomial::parse(value).to_rational();
}

double Fixture::scalar_double() const {
    require_kind(*this, Kind::Scalar);
    if (value.find('.') != std::string::npos) return std::stod(value);
    Rational r = scalar();
    return to_double(r.num(), r.den());
}

FixtureSet FixtureSet::parse(const std::string& text) {
    FixtureSet set;
    std::istringstream in(text);
    std::string line;
    std::optional<Fixture> cur;
    int lineno = 0;
    auto flush = [&] {
        if (!cur) return;
        if (set.fixtures_.count(cur->id)) throw Error(ErrorKind::ParseError, "duplicate fixture " + cur->id);
        std::string id = cur->id;
        set.fixtures_.emplace(id, std::move(*cur));
        cur.reset();
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty()) { flush(); continue; }
        if (t[0] == '#') continue;
        try {
            auto sp = t.find(' ');
            std::string key = t.substr(0, sp), val = sp == std::string::npos ? "" : trim(t.substr(sp + 1));
            if (key == "fixture") {
                flush();
                std::istringstream hs(val);
                std::string id, kind;
                hs >> id >> kind;
                if (id.empty() || kind.empty()) throw Error(ErrorKind::ParseError, "fixture header needs id and kind");
                cur.emplace();
                cur->id = id;
                cur->kind = parse_kind(kind);
                continue;
            }
            if (!cur) throw Error(ErrorKind::ParseError, "field outside a fixture");
            if (!key.empty() && key.back() == ':') {
                require_kind(*cur, Fixture::Kind::Series);
                int n = std::stoi(key.substr(0, key.size() - 1));
                cur->terms[n] = ParamPolynomial::parse(val);
            } else if (key == "note") {
                cur->note = val;
            } else if (key == "var") {
                cur->var = val;
            } else if (key == "poly") {
                require_kind(*cur, Fixture::Kind::Polynomial);
                cur->poly = ParamPolynomial::parse(val);
            } else if (key == "num") {
                require_kind(*cur, Fixture::Kind::RationalFunction);
                cur->num = ParamPolynomial::parse(val);
            } else if (key == "den") {
                require_kind(*cur, Fixture::Kind::RationalFunction);
                cur->den = ParamPolynomial::parse(val);
            } else if (key == "primes") {
                require_kind(*cur, Fixture::Kind::Primes);
                std::istringstream ps(val);
                std::uint64_t p;
                while (ps >> p) cur->primes.push_back(p);
            } else if (key == "value") {
                require_kind(*cur, Fixture::Kind::Scalar);
                cur->value = val;
            } else {
                throw Error(ErrorKind::ParseError, "unknown key '" + key + "'");
            }
        } catch (const std::exception& e) {
            throw Error(ErrorKind::ParseError, "fixtures line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    flush();
    return set;
}

FixtureSet FixtureSet::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

const FixtureSet& FixtureSet::standard() {
    static const FixtureSet set = load(data_directory() + "/fixtures.txt");
    return set;
}

const Fixture& FixtureSet::get(const std::string& id) const {
    auto it = fixtures_.find(id);
    if (it == fixtures_.end()) throw Error(ErrorKind::UnknownFixture, "no fixture named '" + id + "'");
    return it->second;
}

std::vector<std::string> FixtureSet::ids() const {
    std::vector<std::string> out;
    for (const auto& [id, f] : fixtures_) out.push_back(id);
    return out;
}

const Fixture& load_fixture(const std::string& id) { return FixtureSet::standard().get(id); }

namespace {

ParamPolynomial as_param(const Rational& r) { return ParamPolynomial(r); }
const ParamPolynomial& as_param(const ParamPolynomial& p) { return p; }

}  // namespace

template <class R>
SeriesDiff diff_series(const Series<R>& computed, const Fixture& fx) {
    require_kind(fx, Fixture::Kind::Series);
    SeriesDiff d;
    int top = fx.top();
    d.compared_to = std::min(top, computed.order());
    d.truncated = computed.order() < top;
    // Fixtures list every displayed term from their first one on.
    int lo = fx.terms.empty() ? 0 : fx.terms.begin()->first;
    for (int n = 0; n <= d.compared_to; ++n) {
        ParamPolynomial want = n < lo ? ParamPolynomial(0) : fx.coeff(n);
        ParamPolynomial got = as_param(computed[n]);
        if (got != want) {
            d.pass = false;
            d.first_mismatch = n;
            d.detail = fx.id + ": coefficient of " + fx.var + "^" + std::to_string(n) + " is " + got.str() +
                       ", expected " + want.str();
            return d;
        }
    }
    if (d.truncated)
        d.detail = fx.id + ": compared through " + fx.var + "^" + std::to_string(d.compared_to) + " of " +
                   std::to_string(top);
    return d;
}

template SeriesDiff diff_series<Rational>(const Series<Rational>&, const Fixture&);
template SeriesDiff diff_series<ParamPolynomial>(const Series<ParamPolynomial>&, const Fixture&);

}  // namespace fseries
