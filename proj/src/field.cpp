#include "macpoly/field.hpp"

#include <algorithm>
#include <sstream>

namespace macpoly {

const Symbols& ctx_none() {
    static const Symbols s{};
    return s;
}
const Symbols& ctx_q() {
    static const Symbols s{"q"};
    return s;
}
const Symbols& ctx_t() {
    static const Symbols s{"t"};
    return s;
}
const Symbols& ctx_qt() {
    static const Symbols s{"q", "t"};
    return s;
}
const Symbols& ctx_alpha() {
    static const Symbols s{"alpha"};
    return s;
}

int total_degree(const ParamExp& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool GrlexLess::operator()(const ParamExp& a, const ParamExp& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------
// ParamPolynomial
// ---------------------------------------------------------------------------

ParamPolynomial::ParamPolynomial(Symbols symbols) : symbols_(std::move(symbols)) {}

ParamPolynomial ParamPolynomial::constant(Symbols symbols, mpz_class c) {
    ParamPolynomial p(std::move(symbols));
    if (c != 0) p.terms_.emplace(ParamExp(p.symbols_.size(), 0), std::move(c));
    return p;
}

ParamPolynomial ParamPolynomial::variable(const Symbols& symbols, const std::string& name, int power) {
    auto it = std::find(symbols.begin(), symbols.end(), name);
    if (it == symbols.end())
        throw std::invalid_argument("symbol '" + name + "' not in parameter context");
    ParamExp e(symbols.size(), 0);
    e[static_cast<size_t>(it - symbols.begin())] = power;
    return monomial(symbols, std::move(e), 1);
}

ParamPolynomial ParamPolynomial::monomial(Symbols symbols, ParamExp exp, mpz_class c) {
    if (exp.size() != symbols.size())
        throw std::invalid_argument("exponent vector length does not match context");
    ParamPolynomial p(std::move(symbols));
    if (c != 0) p.terms_.emplace(std::move(exp), std::move(c));
    return p;
}

bool ParamPolynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && macpoly::total_degree(terms_.begin()->first) == 0;
}

bool ParamPolynomial::is_one() const {
    return terms_.size() == 1 && macpoly::total_degree(terms_.begin()->first) == 0 &&
           terms_.begin()->second == 1;
}

int ParamPolynomial::total_degree() const {
    if (terms_.empty()) return -1;
    // ascending grlex: the last term has maximal degree
    return macpoly::total_degree(terms_.rbegin()->first);
}

const mpz_class& ParamPolynomial::first_coeff() const {
    if (terms_.empty()) throw std::logic_error("first_coeff of zero polynomial");
    return terms_.begin()->second;
}

void ParamPolynomial::check_context(const ParamPolynomial& o) const {
    if (symbols_ != o.symbols_)
        throw std::invalid_argument("parameter context mismatch");
}

void ParamPolynomial::add_term(const ParamExp& exp, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamPolynomial ParamPolynomial::operator-() const {
    ParamPolynomial r(symbols_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

ParamPolynomial ParamPolynomial::operator+(const ParamPolynomial& o) const {
    check_context(o);
    ParamPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

ParamPolynomial ParamPolynomial::operator-(const ParamPolynomial& o) const {
    check_context(o);
    ParamPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

ParamPolynomial ParamPolynomial::operator*(const ParamPolynomial& o) const {
    check_context(o);
    ParamPolynomial r(symbols_);
    ParamExp e(symbols_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

mpz_class ParamPolynomial::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

bool ParamPolynomial::operator<(const ParamPolynomial& o) const {
    if (symbols_ != o.symbols_) return symbols_ < o.symbols_;
    return std::lexicographical_compare(
        terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
        [](const auto& a, const auto& b) {
            if (a.first != b.first) return GrlexLess{}(a.first, b.first);
            return a.second < b.second;
        });
}

namespace {

template <class Num>
Num eval_terms(const ParamPolynomial& p, const std::map<std::string, Num>& point) {
    std::vector<const Num*> vals;
    vals.reserve(p.symbols().size());
    for (const auto& s : p.symbols()) {
        auto it = point.find(s);
        if (it == point.end())
            throw std::invalid_argument("evaluation point missing symbol '" + s + "'");
        vals.push_back(&it->second);
    }
    Num acc(0);
    for (const auto& [e, c] : p.terms()) {
        Num term;
        if constexpr (std::is_same_v<Num, mpq_class>)
            term = mpq_class(c);
        else
            term = c.get_d();
        for (size_t k = 0; k < e.size(); ++k)
            for (int j = 0; j < e[k]; ++j) term *= *vals[k];
        acc += term;
    }
    return acc;
}

}  // namespace

mpq_class ParamPolynomial::eval(const std::map<std::string, mpq_class>& point) const {
    return eval_terms(*this, point);
}

double ParamPolynomial::eval(const std::map<std::string, double>& point) const {
    return eval_terms(*this, point);
}

std::string ParamPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += symbols_[k];
            if (e[k] != 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty())
            os << a.get_str();
        else if (a == 1)
            os << mono;
        else
            os << a.get_str() << "*" << mono;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// gcd machinery: primitive pseudo-remainder sequences over Z[symbols]
// ---------------------------------------------------------------------------

namespace {

using TermMap = ParamPolynomial::TermMap;

void raw_add_term(TermMap& m, const ParamExp& e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = m.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

TermMap raw_mul(const TermMap& a, const TermMap& b) {
    TermMap r;
    if (a.empty() || b.empty()) return r;
    ParamExp e(a.begin()->first.size());
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            raw_add_term(r, e, ca * cb);
        }
    return r;
}

// r -= s * (single term given by exp/coeff)
void raw_sub_scaled(TermMap& r, const TermMap& s, const ParamExp& exp, const mpz_class& coeff) {
    ParamExp e(exp.size());
    for (const auto& [es, cs] : s) {
        for (size_t k = 0; k < e.size(); ++k) e[k] = es[k] + exp[k];
        raw_add_term(r, e, -(cs * coeff));
    }
}

// Exact division by leading-term reduction; succeeds iff b | a over Z.
bool raw_try_divide(const TermMap& a, const TermMap& b, TermMap& q) {
    q.clear();
    if (b.empty()) return false;
    if (a.empty()) return true;
    TermMap r = a;
    const auto& lb = *b.rbegin();
    ParamExp de(lb.first.size());
    while (!r.empty()) {
        const auto& lr = *r.rbegin();
        bool ok = true;
        for (size_t k = 0; k < de.size(); ++k) {
            de[k] = lr.first[k] - lb.first[k];
            if (de[k] < 0) { ok = false; break; }
        }
        if (!ok) return false;
        mpz_class qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), lr.second.get_mpz_t(), lb.second.get_mpz_t());
        if (rem != 0) return false;
        raw_sub_scaled(r, b, de, qc);
        raw_add_term(q, de, qc);
    }
    return true;
}

// Main variable for the PRS: among variables used by either operand, the
// one with the smallest min degree (then smallest max degree), so a pure
// content split is taken whenever one side misses a variable entirely.
int raw_pick_var(const TermMap& a, const TermMap& b) {
    const size_t nv = a.begin()->first.size();
    std::vector<int> da(nv, 0), db(nv, 0);
    for (const auto& [e, c] : a)
        for (size_t k = 0; k < nv; ++k) da[k] = std::max(da[k], e[k]);
    for (const auto& [e, c] : b)
        for (size_t k = 0; k < nv; ++k) db[k] = std::max(db[k], e[k]);
    int best = -1;
    long best_score = 0;
    for (size_t k = 0; k < nv; ++k) {
        if (da[k] == 0 && db[k] == 0) continue;
        const long score = 1000L * std::min(da[k], db[k]) + std::max(da[k], db[k]);
        if (best < 0 || score < best_score) {
            best = static_cast<int>(k);
            best_score = score;
        }
    }
    return best;
}

// Univariate view in variable v: degree -> coefficient polynomial with
// the v-entry zeroed out.
std::map<int, TermMap> raw_univariate(const TermMap& m, int v) {
    std::map<int, TermMap> u;
    for (const auto& [e, c] : m) {
        ParamExp rest = e;
        int d = rest[static_cast<size_t>(v)];
        rest[static_cast<size_t>(v)] = 0;
        u[d].emplace(std::move(rest), c);
    }
    return u;
}

TermMap raw_from_univariate(const std::map<int, TermMap>& u, int v) {
    TermMap m;
    for (const auto& [d, coeff] : u)
        for (const auto& [e, c] : coeff) {
            ParamExp full = e;
            full[static_cast<size_t>(v)] = d;
            m.emplace(std::move(full), c);
        }
    return m;
}

TermMap raw_gcd(const TermMap& a, const TermMap& b);

// gcd of all univariate coefficients.
TermMap raw_content(const std::map<int, TermMap>& u) {
    TermMap g;
    for (const auto& [d, coeff] : u) {
        g = raw_gcd(g, coeff);
        if (g.size() == 1 && macpoly::total_degree(g.begin()->first) == 0 && g.begin()->second == 1)
            break;
    }
    return g;
}

std::map<int, TermMap> raw_divide_univariate(const std::map<int, TermMap>& u, const TermMap& d) {
    std::map<int, TermMap> r;
    for (const auto& [deg, coeff] : u) {
        TermMap q;
        if (!raw_try_divide(coeff, d, q))
            throw std::logic_error("content division failed");
        r.emplace(deg, std::move(q));
    }
    return r;
}

// Pseudo-remainder of A by B (both univariate in the same main variable,
// coefficients multivariate).  deg A >= deg B >= 0.
std::map<int, TermMap> raw_prem(std::map<int, TermMap> A, const std::map<int, TermMap>& B) {
    const int db = B.rbegin()->first;
    const TermMap& lb = B.rbegin()->second;
    while (!A.empty() && A.rbegin()->first >= db) {
        const int da = A.rbegin()->first;
        TermMap la = A.rbegin()->second;
        // A = lb*A - la * x^(da-db) * B
        std::map<int, TermMap> next;
        for (const auto& [d, c] : A)
            next[d] = raw_mul(c, lb);
        for (const auto& [d, c] : B) {
            TermMap prod = raw_mul(c, la);
            auto it = next.find(d + da - db);
            if (it == next.end()) {
                for (auto& [e, v] : prod) v = -v;
                if (!prod.empty()) next.emplace(d + da - db, std::move(prod));
            } else {
                for (const auto& [e, v] : prod) raw_add_term(it->second, e, -v);
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.empty() ? next.erase(it) : std::next(it);
        A = std::move(next);
        if (!A.empty() && A.rbegin()->first >= da)
            throw std::logic_error("pseudo-division failed to reduce degree");
    }
    return A;
}

void raw_normalize_sign(TermMap& g) {
    if (!g.empty() && g.begin()->second < 0)
        for (auto& [e, c] : g) c = -c;
}

TermMap raw_gcd(const TermMap& a, const TermMap& b) {
    if (a.empty()) {
        TermMap g = b;
        raw_normalize_sign(g);
        return g;
    }
    if (b.empty()) {
        TermMap g = a;
        raw_normalize_sign(g);
        return g;
    }
    const int v = raw_pick_var(a, b);
    if (v < 0) {
        // both nonzero constants
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.begin()->second.get_mpz_t(), b.begin()->second.get_mpz_t());
        TermMap r;
        r.emplace(a.begin()->first, std::move(g));
        return r;
    }
    auto ua = raw_univariate(a, v);
    auto ub = raw_univariate(b, v);
    TermMap ca = raw_content(ua);
    TermMap cb = raw_content(ub);
    TermMap cont = raw_gcd(ca, cb);
    auto A = raw_divide_univariate(ua, ca);
    auto B = raw_divide_univariate(ub, cb);
    if (A.rbegin()->first < B.rbegin()->first) std::swap(A, B);
    while (true) {
        auto R = raw_prem(A, B);
        if (R.empty()) break;
        R = raw_divide_univariate(R, raw_content(R));
        A = std::move(B);
        B = std::move(R);
    }
    if (B.rbegin()->first == 0 && B.begin()->second.size() == 1 &&
        macpoly::total_degree(B.begin()->second.begin()->first) == 0) {
        // coprime up to content
        TermMap g = cont;
        raw_normalize_sign(g);
        return g;
    }
    TermMap g = raw_mul(raw_from_univariate(B, v), cont);
    raw_normalize_sign(g);
    return g;
}

ParamPolynomial from_raw(const Symbols& symbols, TermMap m) {
    ParamPolynomial p(symbols);
    for (auto& [e, c] : m) p.add_term(e, c);
    return p;
}

}  // namespace

ParamPolynomial gcd(const ParamPolynomial& a, const ParamPolynomial& b) {
    if (a.symbols() != b.symbols())
        throw std::invalid_argument("parameter context mismatch");
    return from_raw(a.symbols(), raw_gcd(a.terms(), b.terms()));
}

bool try_divide(const ParamPolynomial& a, const ParamPolynomial& b, ParamPolynomial& quotient) {
    if (a.symbols() != b.symbols())
        throw std::invalid_argument("parameter context mismatch");
    TermMap q;
    if (!raw_try_divide(a.terms(), b.terms(), q)) return false;
    quotient = from_raw(a.symbols(), std::move(q));
    return true;
}

ParamPolynomial divide_exact(const ParamPolynomial& a, const ParamPolynomial& b) {
    ParamPolynomial q;
    if (!try_divide(a, b, q))
        throw std::logic_error("inexact polynomial division");
    return q;
}

// ---------------------------------------------------------------------------
// RationalFunction
// ---------------------------------------------------------------------------

RationalFunction::RationalFunction()
    : num_(ctx_none()), den_(ParamPolynomial::constant(ctx_none(), 1)) {}

RationalFunction::RationalFunction(ParamPolynomial num)
    : num_(std::move(num)), den_(ParamPolynomial::constant(num_.symbols(), 1)) {}

RationalFunction::RationalFunction(ParamPolynomial num, ParamPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    num_.check_context(den_);
    canonicalize();
}

RationalFunction RationalFunction::zero(Symbols symbols) {
    return RationalFunction(ParamPolynomial(std::move(symbols)));
}

RationalFunction RationalFunction::one(Symbols symbols) {
    return RationalFunction(ParamPolynomial::constant(std::move(symbols), 1));
}

RationalFunction RationalFunction::constant(Symbols symbols, const mpq_class& c) {
    return RationalFunction(ParamPolynomial::constant(symbols, c.get_num()),
                            ParamPolynomial::constant(symbols, c.get_den()));
}

RationalFunction RationalFunction::constant(Symbols symbols, long c) {
    return RationalFunction(ParamPolynomial::constant(std::move(symbols), c));
}

RationalFunction RationalFunction::variable(const Symbols& symbols, const std::string& name, int power) {
    return RationalFunction(ParamPolynomial::variable(symbols, name, power));
}

void RationalFunction::canonicalize() {
    if (den_.is_zero())
        throw std::domain_error("division by zero rational function");
    if (num_.is_zero()) {
        den_ = ParamPolynomial::constant(num_.symbols(), 1);
        return;
    }
    if (den_.is_constant() && num_.is_constant()) {
        mpq_class v(num_.first_coeff(), den_.first_coeff());
        v.canonicalize();
        num_ = ParamPolynomial::constant(num_.symbols(), v.get_num());
        den_ = ParamPolynomial::constant(num_.symbols(), v.get_den());
        return;
    }
    if (!den_.is_one()) {
        ParamPolynomial g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    mpz_class cn = num_.content(), cd = den_.content(), c;
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den_.first_coeff() < 0) c = -c;
    if (c != 1) {
        ParamPolynomial cp = ParamPolynomial::constant(num_.symbols(), c);
        num_ = divide_exact(num_, cp);
        den_ = divide_exact(den_, cp);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    num_.check_context(o.num_);
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    num_.check_context(o.num_);
    if (is_zero() || o.is_zero()) return zero(symbols());
    // cross-cancel before multiplying to keep intermediates small
    ParamPolynomial g1 = gcd(num_, o.den_);
    ParamPolynomial g2 = gcd(o.num_, den_);
    ParamPolynomial n1 = g1.is_one() ? num_ : divide_exact(num_, g1);
    ParamPolynomial d2 = g1.is_one() ? o.den_ : divide_exact(o.den_, g1);
    ParamPolynomial n2 = g2.is_one() ? o.num_ : divide_exact(o.num_, g2);
    ParamPolynomial d1 = g2.is_one() ? den_ : divide_exact(den_, g2);
    return RationalFunction(n1 * n2, d1 * d2);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    num_.check_context(o.num_);
    if (o.is_zero())
        throw std::domain_error("division by zero rational function");
    return *this * RationalFunction(o.den_, o.num_);
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent in RationalFunction::pow");
    RationalFunction r = one(symbols());
    RationalFunction base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

bool RationalFunction::operator<(const RationalFunction& o) const {
    if (!(num_ == o.num_)) return num_ < o.num_;
    return den_ < o.den_;
}

namespace {

template <class Num>
std::string point_str(const std::map<std::string, Num>& point) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : point) {
        if (!first) os << ", ";
        first = false;
        if constexpr (std::is_same_v<Num, mpq_class>)
            os << k << "=" << v.get_str();
        else
            os << k << "=" << v;
    }
    return os.str();
}

}  // namespace

mpq_class RationalFunction::eval(const std::map<std::string, mpq_class>& point) const {
    mpq_class d = den_.eval(point);
    if (d == 0)
        throw std::domain_error("denominator " + den_.str() + " vanishes at (" +
                                point_str(point) + ")");
    return num_.eval(point) / d;
}

double RationalFunction::eval(const std::map<std::string, double>& point) const {
    double d = den_.eval(point);
    if (d == 0.0)
        throw std::domain_error("denominator " + den_.str() + " vanishes at (" +
                                point_str(point) + ")");
    return num_.eval(point) / d;
}

std::string RationalFunction::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction rf_normalize(const ParamPolynomial& num, const ParamPolynomial& den) {
    return RationalFunction(num, den);
}

}  // namespace macpoly
