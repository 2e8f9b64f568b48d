// Multivariate polynomials in x1..xn over RationalFunction coefficients,
// with the variable-level operations the Hecke action and the
// specializations require.
#pragma once

#include <functional>

#include "macpoly/field.hpp"

namespace macpoly {

// Exponent vector of length n.
using Monomial = std::vector<int>;

// Descending graded-lex: higher total degree first, then lex-larger first.
// This matches the display convention (x1^3*x2 before x1^2*x2^2).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Polynomial in x1..xn whose coefficients live in a fixed parameter
/// context.  Stored coefficients are never zero.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, RationalFunction, MonomialOrder>;

    Polynomial(int n, Symbols params);  // zero polynomial

    static Polynomial constant(int n, const Symbols& params, RationalFunction c);
    static Polynomial one(int n, const Symbols& params);
    // x_i^power (1-based index)
    static Polynomial x(int n, const Symbols& params, int i, int power = 1);
    static Polynomial term(int n, const Symbols& params, Monomial exp, RationalFunction c);

    int n() const { return n_; }
    const Symbols& params() const { return params_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    int total_degree() const;  // -1 for zero
    bool is_homogeneous() const;

    // Coefficient of the given monomial (zero if absent).
    RationalFunction coeff(const Monomial& exp) const;

    void add_term(const Monomial& exp, const RationalFunction& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scale(const RationalFunction& c) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }

    bool operator==(const Polynomial& o) const {
        return n_ == o.n_ && params_ == o.params_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    mpq_class eval(const std::map<std::string, mpq_class>& param_point,
                   const std::vector<mpq_class>& x) const;
    double eval(const std::map<std::string, double>& param_point,
                const std::vector<double>& x) const;

    // Display string, terms in descending graded-lex order,
    // e.g. "x1^3*x2 + ((1 - t + q - q*t)/(1 - q*t))*x1^2*x2^2 + x1*x2^3".
    std::string str() const;

    void check_compatible(const Polynomial& o) const;

  private:
    int n_;
    Symbols params_;
    TermMap terms_;
};

// f with x_i and x_{i+1} exchanged (1 <= i <= n-1).
Polynomial transpose_vars(int i, const Polynomial& f);

// (f - s_i f)/(x_i - x_{i+1}), always exact.
Polynomial divide_difference_quotient(int i, const Polynomial& f);

// Substitute parameter symbols; values live over target_params, symbols not
// assigned must appear in target_params and are carried through unchanged.
Polynomial specialize_params(const Polynomial& f,
                             const std::map<std::string, RationalFunction>& assignment,
                             const Symbols& target_params);

// x_i -> q*x_i: every monomial x^mu gains a factor q^{mu_i}.
Polynomial shift_var(const Polynomial& f, int i);

bool is_symmetric(const Polynomial& f);

// Reinterpret f over a larger parameter context (params() must be a
// subsequence of target).
Polynomial embed_params(const Polynomial& f, const Symbols& target);

// Set x_i = 0 for all i > m and truncate to m variables.
Polynomial restrict_vars(const Polynomial& f, int m);

// Exact division in the x-variables (coefficients form a field); throws
// std::logic_error if d does not divide f.
Polynomial divide_exact_poly(const Polynomial& f, const Polynomial& d);

}  // namespace macpoly
