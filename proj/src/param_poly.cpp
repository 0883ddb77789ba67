#include "fseries/param_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fseries {

namespace {

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

}  // namespace

ParamPolynomial::ParamPolynomial(const Rational& c) {
    if (!c.is_zero()) terms_[{}] = c;
}

ParamPolynomial ParamPolynomial::variable(const std::string& name) {
    return monomial({name}, {1}, Rational(1));
}

ParamPolynomial ParamPolynomial::monomial(const std::vector<std::string>& vars, const Exponents& e,
                                          const Rational& c) {
    ParamPolynomial p;
    std::vector<std::pair<std::string, int>> pairs;
    for (std::size_t i = 0; i < vars.size(); ++i) pairs.emplace_back(vars[i], e[i]);
    std::sort(pairs.begin(), pairs.end());
    Exponents ex;
    for (auto& [v, k] : pairs) {
        if (!p.vars_.empty() && p.vars_.back() == v) {
            ex.back() += k;
        } else {
            p.vars_.push_back(v);
            ex.push_back(k);
        }
    }
    if (!c.is_zero()) p.terms_[ex] = c;
    return p;
}

ParamPolynomial ParamPolynomial::with_vars(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    ParamPolynomial r;
    r.vars_ = vars;
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
        pos[i] = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), vars_[i]) - vars.begin());
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

void ParamPolynomial::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
}

bool ParamPolynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (int k : terms_.begin()->first)
        if (k != 0) return false;
    return true;
}

Rational ParamPolynomial::constant_term() const {
    Exponents z(vars_.size(), 0);
    auto it = terms_.find(z);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational ParamPolynomial::to_rational() const {
    if (!is_constant()) throw Error(ErrorKind::MissingAssignment, "polynomial " + str() + " is not constant");
    return constant_term();
}

int ParamPolynomial::degree(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    std::size_t i = static_cast<std::size_t>(it - vars_.begin());
    int d = terms_.empty() ? 0 : terms_.begin()->first[i];
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

int ParamPolynomial::min_degree(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    std::size_t i = static_cast<std::size_t>(it - vars_.begin());
    int d = terms_.empty() ? 0 : terms_.begin()->first[i];
    for (const auto& [e, c] : terms_) d = std::min(d, e[i]);
    return d;
}

int ParamPolynomial::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

Rational ParamPolynomial::eval(const std::map<std::string, Rational>& assignment) const {
    std::vector<const Rational*> vals;
    for (const auto& v : vars_) {
        auto it = assignment.find(v);
        if (it == assignment.end()) {
            bool used = false;
            std::size_t i = vals.size();
            for (const auto& [e, c] : terms_) used = used || e[i] != 0;
            if (used) throw Error(ErrorKind::MissingAssignment, "no value for parameter '" + v + "'");
            vals.push_back(nullptr);
        } else {
            vals.push_back(&it->second);
        }
    }
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= vals[i]->pow(e[i]);
        sum += t;
    }
    return sum;
}

ParamPolynomial ParamPolynomial::pow(long e) const {
    if (e < 0) return ParamPolynomial(1) / pow(-e);
    ParamPolynomial r(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

ParamPolynomial ParamPolynomial::substitute(const std::map<std::string, ParamPolynomial>& subs) const {
    // Powers of each substituted value are cached per exponent.
    std::vector<const ParamPolynomial*> repl;
    for (const auto& v : vars_) {
        auto it = subs.find(v);
        repl.push_back(it == subs.end() ? nullptr : &it->second);
    }
    std::vector<std::map<int, ParamPolynomial>> cache(vars_.size());
    ParamPolynomial result;
    for (const auto& [e, c] : terms_) {
        std::vector<std::string> kv;
        Exponents ke;
        ParamPolynomial t(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (repl[i]) {
                auto& pc = cache[i];
                auto it = pc.find(e[i]);
                if (it == pc.end()) it = pc.emplace(e[i], repl[i]->pow(e[i])).first;
                t = t * it->second;
            } else {
                kv.push_back(vars_[i]);
                ke.push_back(e[i]);
            }
        }
        if (!kv.empty()) t = t * monomial(kv, ke, Rational(1));
        result += t;
    }
    return result;
}

ParamPolynomial ParamPolynomial::partial(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return ParamPolynomial();
    std::size_t i = static_cast<std::size_t>(it - vars_.begin());
    ParamPolynomial r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents ne = e;
        ne[i] -= 1;
        r.terms_[ne] += c * Rational(e[i]);
    }
    r.prune();
    return r;
}

ParamPolynomial ParamPolynomial::coefficient(const std::string& var, int k) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return k == 0 ? *this : ParamPolynomial();
    std::size_t i = static_cast<std::size_t>(it - vars_.begin());
    ParamPolynomial r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[i] != k) continue;
        Exponents ne = e;
        ne[i] = 0;
        r.terms_[ne] = c;
    }
    return r;
}

ParamPolynomial& ParamPolynomial::operator+=(const ParamPolynomial& o) {
    if (o.terms_.empty()) return *this;
    if (vars_ != o.vars_) {
        auto vars = merge_vars(vars_, o.vars_);
        *this = with_vars(vars);
        ParamPolynomial b = o.with_vars(vars);
        return *this += b;
    }
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

ParamPolynomial& ParamPolynomial::operator-=(const ParamPolynomial& o) { return *this += -o; }

ParamPolynomial operator-(const ParamPolynomial& a) {
    ParamPolynomial r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b) {
    if (a.terms_.empty() || b.terms_.empty()) return ParamPolynomial();
    if (a.vars_ != b.vars_) {
        auto vars = merge_vars(a.vars_, b.vars_);
        return a.with_vars(vars) * b.with_vars(vars);
    }
    ParamPolynomial r;
    r.vars_ = a.vars_;
    const std::size_t n = a.vars_.size();
    ParamPolynomial::Exponents e(n);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) r.terms_.emplace(e, ca * cb);
            else it->second += ca * cb;
        }
    }
    r.prune();
    return r;
}

ParamPolynomial ParamPolynomial::divide_exact(const ParamPolynomial& d) const {
    if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
    if (is_zero()) return ParamPolynomial();
    auto vars = merge_vars(vars_, d.vars_);
    ParamPolynomial r = with_vars(vars), dd = d.with_vars(vars);
    // Strip the monomial parts so both operands are ordinary polynomials with
    // no variable factor; in the Laurent ring divisibility reduces to that case.
    auto strip = [&](ParamPolynomial& p) {
        Exponents lo = p.terms_.begin()->first;
        for (const auto& [e, c] : p.terms_)
            for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = std::min(lo[i], e[i]);
        Terms t;
        for (const auto& [e, c] : p.terms_) {
            Exponents ne = e;
            for (std::size_t i = 0; i < ne.size(); ++i) ne[i] -= lo[i];
            t.emplace(std::move(ne), c);
        }
        p.terms_ = std::move(t);
        return lo;
    };
    Exponents lo_r = strip(r), lo_d = strip(dd);
    ParamPolynomial q;
    q.vars_ = vars;
    const Exponents lde = dd.terms_.rbegin()->first;
    const Rational ldc = dd.terms_.rbegin()->second;
    while (!r.terms_.empty()) {
        const Exponents lre = r.terms_.rbegin()->first;
        const Rational lrc = r.terms_.rbegin()->second;
        Exponents e(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) {
            e[i] = lre[i] - lde[i];
            if (e[i] < 0) throw Error(ErrorKind::DivisionNotExact, str() + " is not divisible by " + d.str());
        }
        ParamPolynomial t;
        t.vars_ = vars;
        t.terms_[e] = lrc / ldc;
        q += t;
        r -= t * dd;
    }
    Terms shifted;
    for (const auto& [e, c] : q.terms_) {
        Exponents ne = e;
        for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += lo_r[i] - lo_d[i];
        shifted.emplace(std::move(ne), c);
    }
    q.terms_ = std::move(shifted);
    return q;
}

ParamPolynomial operator/(const ParamPolynomial& a, const ParamPolynomial& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
    if (b.is_monomial()) {
        const auto& [e, c] = *b.terms_.begin();
        ParamPolynomial inv;
        inv.vars_ = b.vars_;
        ParamPolynomial::Exponents ne(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
        inv.terms_[ne] = c.inv();
        return a * inv;
    }
    try {
        return a.divide_exact(b);
    } catch (const Error&) {
        throw Error(ErrorKind::NonUnitDivisor, b.str() + " does not divide " + a.str());
    }
}

bool operator==(const ParamPolynomial& a, const ParamPolynomial& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    return (a - b).is_zero();
}

Rational ParamPolynomial::content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class g = 0, l = 1;
    for (const auto& [e, c] : terms_) {
        mpz_class n = c.num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        mpz_class d = c.den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return Rational(g, l);
}

std::string ParamPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool unit_mon = true;
        for (int k : e) unit_mon = unit_mon && k == 0;
        Rational ac = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (unit_mon || !ac.is_one()) {
            os << ac;
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (e[i] != 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

namespace {

class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    ParamPolynomial run() {
        ParamPolynomial p = expr();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw Error(ErrorKind::ParseError, why + " at offset " + std::to_string(i_) + " in '" + s_ + "'");
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    ParamPolynomial expr() {
        ParamPolynomial p = term();
        for (;;) {
            if (eat('+')) p += term();
            else if (eat('-')) p -= term();
            else return p;
        }
    }
    ParamPolynomial term() {
        ParamPolynomial p = factor();
        for (;;) {
            if (eat('*')) p = p * factor();
            else if (eat('/')) p = p / factor();
            else {
                // implicit product: "2a", "a(b+1)"
                skip();
                if (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '('))
                    p = p * factor();
                else
                    return p;
            }
        }
    }
    ParamPolynomial factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        ParamPolynomial b = primary();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            skip();
            std::size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (st == i_) fail("expected exponent");
            long e = std::stol(s_.substr(st, i_ - st));
            b = b.pow(neg ? -e : e);
        }
        return b;
    }
    ParamPolynomial primary() {
        skip();
        if (eat('(')) {
            ParamPolynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            std::size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return ParamPolynomial(Rational(mpz_class(s_.substr(st, i_ - st))));
        }
        if (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
            std::size_t st = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' ||
                                      s_[i_] == '\''))
                ++i_;
            return ParamPolynomial::variable(s_.substr(st, i_ - st));
        }
        fail("unexpected character");
    }
};

}  // namespace

ParamPolynomial ParamPolynomial::parse(const std::string& text) { return PolyParser(text).run(); }

ParamRationalFunction::ParamRationalFunction(const ParamPolynomial& n, const ParamPolynomial& d)
    : num_(n), den_(d) {
    if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    normalize();
}

void ParamRationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = ParamPolynomial(1);
        return;
    }
    // Clear rational content so that both parts have integer, jointly
    // primitive coefficients and the denominator's leading coefficient is positive.
    Rational cn = num_.content(), cd = den_.content();
    num_ = num_ / ParamPolynomial(cn);
    den_ = den_ / ParamPolynomial(cd);
    Rational ratio = cn / cd;
    num_ = num_ * ParamPolynomial(Rational(ratio.num()));
    den_ = den_ * ParamPolynomial(Rational(ratio.den()));
    if (den_.terms().rbegin()->second.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (den_.is_monomial()) {
        num_ = num_ / den_;
        den_ = ParamPolynomial(1);
    }
}

Rational ParamRationalFunction::eval(const std::map<std::string, Rational>& assignment) const {
    return num_.eval(assignment) / den_.eval(assignment);
}

ParamRationalFunction operator+(const ParamRationalFunction& a, const ParamRationalFunction& b) {
    if (a.den_ == b.den_) return ParamRationalFunction(a.num_ + b.num_, a.den_);
    return ParamRationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ParamRationalFunction operator-(const ParamRationalFunction& a) {
    return ParamRationalFunction(-a.num_, a.den_);
}

ParamRationalFunction operator-(const ParamRationalFunction& a, const ParamRationalFunction& b) {
    return a + (-b);
}

ParamRationalFunction operator*(const ParamRationalFunction& a, const ParamRationalFunction& b) {
    return ParamRationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

ParamRationalFunction operator/(const ParamRationalFunction& a, const ParamRationalFunction& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero rational function");
    return ParamRationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const ParamRationalFunction& a, const ParamRationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string ParamRationalFunction::str() const {
    if (den_.is_constant() && den_.to_rational().is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace fseries
