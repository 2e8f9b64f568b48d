#include "macpoly/polyring.hpp"

#include <algorithm>
#include <sstream>

namespace macpoly {

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    int da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(int n, Symbols params) : n_(n), params_(std::move(params)) {
    if (n < 1) throw std::invalid_argument("variable count must be positive");
}

Polynomial Polynomial::constant(int n, const Symbols& params, RationalFunction c) {
    Polynomial p(n, params);
    p.add_term(Monomial(static_cast<size_t>(n), 0), c);
    return p;
}

Polynomial Polynomial::one(int n, const Symbols& params) {
    return constant(n, params, RationalFunction::one(params));
}

Polynomial Polynomial::x(int n, const Symbols& params, int i, int power) {
    if (i < 1 || i > n) throw std::invalid_argument("variable index out of range");
    Monomial e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i - 1)] = power;
    return term(n, params, std::move(e), RationalFunction::one(params));
}

Polynomial Polynomial::term(int n, const Symbols& params, Monomial exp, RationalFunction c) {
    if (static_cast<int>(exp.size()) != n)
        throw std::invalid_argument("monomial length does not match variable count");
    Polynomial p(n, params);
    p.add_term(exp, c);
    return p;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    // descending grlex: the first term has maximal total degree
    int d = 0;
    for (int x : terms_.begin()->first) d += x;
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree();
    for (const auto& [e, c] : terms_) {
        int de = 0;
        for (int x : e) de += x;
        if (de != d) return false;
    }
    return true;
}

RationalFunction Polynomial::coeff(const Monomial& exp) const {
    auto it = terms_.find(exp);
    if (it == terms_.end()) return RationalFunction::zero(params_);
    return it->second;
}

void Polynomial::add_term(const Monomial& exp, const RationalFunction& c) {
    if (static_cast<int>(exp.size()) != n_)
        throw std::invalid_argument("monomial length does not match variable count");
    if (c.symbols() != params_)
        throw std::invalid_argument("coefficient context mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
    if (params_ != o.params_) throw std::invalid_argument("parameter context mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(n_, params_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(n_, params_);
    Monomial e(static_cast<size_t>(n_));
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

Polynomial Polynomial::scale(const RationalFunction& c) const {
    if (c.symbols() != params_)
        throw std::invalid_argument("coefficient context mismatch");
    Polynomial r(n_, params_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

namespace {

template <class Num>
Num eval_poly(const Polynomial& f, const std::map<std::string, Num>& param_point,
              const std::vector<Num>& x) {
    if (static_cast<int>(x.size()) != f.n())
        throw std::invalid_argument("evaluation vector length does not match variable count");
    Num acc(0);
    for (const auto& [e, c] : f.terms()) {
        Num term = c.eval(param_point);
        for (size_t k = 0; k < e.size(); ++k)
            for (int j = 0; j < e[k]; ++j) term *= x[k];
        acc += term;
    }
    return acc;
}

}  // namespace

mpq_class Polynomial::eval(const std::map<std::string, mpq_class>& param_point,
                           const std::vector<mpq_class>& x) const {
    return eval_poly(*this, param_point, x);
}

double Polynomial::eval(const std::map<std::string, double>& param_point,
                        const std::vector<double>& x) const {
    return eval_poly(*this, param_point, x);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string mono;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(k + 1);
            if (e[k] != 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty()) {
            os << (c.den().is_one() && (c.num().is_constant())
                       ? c.str()
                       : "(" + c.str() + ")");
        } else if (c.is_one()) {
            os << mono;
        } else if (c.den().is_one() && c.num().is_monomial()) {
            // simple coefficient like q or -2*q*t
            os << c.str() << "*" << mono;
        } else {
            os << "(" << c.str() << ")*" << mono;
        }
    }
    return os.str();
}

Polynomial transpose_vars(int i, const Polynomial& f) {
    if (i < 1 || i > f.n() - 1)
        throw std::invalid_argument("transposition index out of range");
    Polynomial r(f.n(), f.params());
    for (const auto& [e, c] : f.terms()) {
        Monomial m = e;
        std::swap(m[static_cast<size_t>(i - 1)], m[static_cast<size_t>(i)]);
        r.add_term(m, c);
    }
    return r;
}

Polynomial divide_difference_quotient(int i, const Polynomial& f) {
    if (i < 1 || i > f.n() - 1)
        throw std::invalid_argument("transposition index out of range");
    const size_t a = static_cast<size_t>(i - 1), b = static_cast<size_t>(i);
    Polynomial g = f - transpose_vars(i, f);
    Polynomial r(f.n(), f.params());
    for (const auto& [e, c] : g.terms()) {
        if (e[a] == e[b])
            throw std::logic_error("antisymmetric part has a diagonal term");
        if (e[a] < e[b]) continue;  // partner of a term already handled
        // c*(x_i^p x_{i+1}^q - x_i^q x_{i+1}^p)/(x_i - x_{i+1}), p > q
        Monomial m = e;
        const int p = e[a], q = e[b];
        for (int k = 0; k < p - q; ++k) {
            m[a] = q + k;
            m[b] = p - 1 - k;
            r.add_term(m, c);
        }
    }
    return r;
}

Polynomial specialize_params(const Polynomial& f,
                             const std::map<std::string, RationalFunction>& assignment,
                             const Symbols& target_params) {
    std::vector<RationalFunction> images;
    images.reserve(f.params().size());
    for (const auto& s : f.params()) {
        auto it = assignment.find(s);
        if (it != assignment.end()) {
            if (it->second.symbols() != target_params)
                throw std::invalid_argument("assignment value for '" + s +
                                            "' is not over the target context");
            images.push_back(it->second);
        } else {
            images.push_back(RationalFunction::variable(target_params, s));
        }
    }
    auto subst = [&](const ParamPolynomial& p) {
        RationalFunction acc = RationalFunction::zero(target_params);
        for (const auto& [e, c] : p.terms()) {
            RationalFunction term =
                RationalFunction(ParamPolynomial::constant(target_params, c));
            for (size_t k = 0; k < e.size(); ++k)
                if (e[k] > 0) term *= images[k].pow(e[k]);
            acc += term;
        }
        return acc;
    };
    Polynomial r(f.n(), target_params);
    for (const auto& [e, c] : f.terms()) {
        RationalFunction den = subst(c.den());
        if (den.is_zero())
            throw std::domain_error("coefficient " + c.str() +
                                    " has identically vanishing denominator under the assignment");
        r.add_term(e, subst(c.num()) / den);
    }
    return r;
}

Polynomial shift_var(const Polynomial& f, int i) {
    if (i < 1 || i > f.n())
        throw std::invalid_argument("variable index out of range");
    RationalFunction q = RationalFunction::variable(f.params(), "q");
    Polynomial r(f.n(), f.params());
    for (const auto& [e, c] : f.terms())
        r.add_term(e, c * q.pow(e[static_cast<size_t>(i - 1)]));
    return r;
}

bool is_symmetric(const Polynomial& f) {
    for (int i = 1; i < f.n(); ++i)
        if (transpose_vars(i, f) != f) return false;
    return true;
}

Polynomial embed_params(const Polynomial& f, const Symbols& target) {
    std::vector<size_t> pos;
    pos.reserve(f.params().size());
    for (const auto& s : f.params()) {
        auto it = std::find(target.begin(), target.end(), s);
        if (it == target.end())
            throw std::invalid_argument("symbol '" + s + "' missing from target context");
        pos.push_back(static_cast<size_t>(it - target.begin()));
    }
    auto lift = [&](const ParamPolynomial& p) {
        ParamPolynomial r(target);
        ParamExp e(target.size(), 0);
        for (const auto& [se, c] : p.terms()) {
            std::fill(e.begin(), e.end(), 0);
            for (size_t k = 0; k < se.size(); ++k) e[pos[k]] = se[k];
            r.add_term(e, c);
        }
        return r;
    };
    Polynomial r(f.n(), target);
    for (const auto& [e, c] : f.terms())
        r.add_term(e, RationalFunction(lift(c.num()), lift(c.den())));
    return r;
}

Polynomial divide_exact_poly(const Polynomial& f, const Polynomial& d) {
    f.check_compatible(d);
    if (d.is_zero()) throw std::logic_error("polynomial division by zero");
    Polynomial q(f.n(), f.params());
    Polynomial r = f;
    const auto& lead_d = *d.terms().begin();
    Monomial e(static_cast<size_t>(f.n()));
    while (!r.is_zero()) {
        const auto& lead_r = *r.terms().begin();
        for (size_t k = 0; k < e.size(); ++k) {
            e[k] = lead_r.first[k] - lead_d.first[k];
            if (e[k] < 0) throw std::logic_error("inexact polynomial division");
        }
        RationalFunction c = lead_r.second / lead_d.second;
        Polynomial piece = Polynomial::term(f.n(), f.params(), e, c);
        q += piece;
        r = r - piece * d;
    }
    return q;
}

Polynomial restrict_vars(const Polynomial& f, int m) {
    if (m < 1 || m > f.n())
        throw std::invalid_argument("variable cutoff out of range");
    Polynomial r(m, f.params());
    for (const auto& [e, c] : f.terms()) {
        bool keep = true;
        for (size_t k = static_cast<size_t>(m); k < e.size(); ++k)
            if (e[k] != 0) {
                keep = false;
                break;
            }
        if (keep) r.add_term(Monomial(e.begin(), e.begin() + m), c);
    }
    return r;
}

}  // namespace macpoly
