// Exact arithmetic in the field of rational functions Z(q,t,alpha),
// restricted to a fixed ordered list of parameter symbols per computation
// context.  All values are immutable once constructed and freely shareable
// across threads.
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace macpoly {

// Ordered parameter context, e.g. {"q","t"}.  Mixing values from different
// contexts is an error, never a coercion.
using Symbols = std::vector<std::string>;

const Symbols& ctx_none();
const Symbols& ctx_q();
const Symbols& ctx_t();
const Symbols& ctx_qt();
const Symbols& ctx_alpha();

// Exponent vector over the symbol list (same length as the context).
using ParamExp = std::vector<int>;

// Graded-lexicographic order, ascending: total degree first, then lex.
// The first term of a polynomial under this order is the one printed first.
struct GrlexLess {
    bool operator()(const ParamExp& a, const ParamExp& b) const;
};

int total_degree(const ParamExp& e);

/// Multivariate polynomial in the context symbols with arbitrary-precision
/// integer coefficients.  Stored terms never have coefficient zero.
class ParamPolynomial {
  public:
    using TermMap = std::map<ParamExp, mpz_class, GrlexLess>;

    ParamPolynomial() = default;  // zero over the empty context
    explicit ParamPolynomial(Symbols symbols);

    static ParamPolynomial constant(Symbols symbols, mpz_class c);
    static ParamPolynomial variable(const Symbols& symbols, const std::string& name, int power = 1);
    static ParamPolynomial monomial(Symbols symbols, ParamExp exp, mpz_class c);

    const Symbols& symbols() const { return symbols_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    int total_degree() const;  // -1 for the zero polynomial

    // Coefficient on the grlex-smallest exponent vector; sign convention
    // anchor for canonical forms.  Requires a nonzero polynomial.
    const mpz_class& first_coeff() const;

    ParamPolynomial operator-() const;
    ParamPolynomial operator+(const ParamPolynomial& o) const;
    ParamPolynomial operator-(const ParamPolynomial& o) const;
    ParamPolynomial operator*(const ParamPolynomial& o) const;

    void add_term(const ParamExp& exp, const mpz_class& c);

    // gcd of all integer coefficients, always nonnegative; 0 for zero poly.
    mpz_class content() const;

    mpq_class eval(const std::map<std::string, mpq_class>& point) const;
    double eval(const std::map<std::string, double>& point) const;

    bool operator==(const ParamPolynomial& o) const {
        return symbols_ == o.symbols_ && terms_ == o.terms_;
    }
    bool operator!=(const ParamPolynomial& o) const { return !(*this == o); }
    bool operator<(const ParamPolynomial& o) const;  // arbitrary total order for map keys

    // Expanded sum of monomials, terms in ascending grlex order,
    // e.g. "1 - t + q - q*t".
    std::string str() const;

    // Throws std::invalid_argument unless o shares this context.
    void check_context(const ParamPolynomial& o) const;

  private:
    Symbols symbols_;
    TermMap terms_;
};

// Honest multivariate gcd over Z (primitive PRS), including integer content.
// Result has positive first (grlex-smallest) coefficient.
ParamPolynomial gcd(const ParamPolynomial& a, const ParamPolynomial& b);

// Exact division a / b; returns false if b does not divide a exactly.
bool try_divide(const ParamPolynomial& a, const ParamPolynomial& b, ParamPolynomial& quotient);

// Exact division that must succeed; throws std::logic_error otherwise.
ParamPolynomial divide_exact(const ParamPolynomial& a, const ParamPolynomial& b);

/// Canonical ratio of two ParamPolynomials.  Invariants: denominator
/// nonzero; numerator/denominator coprime with joint integer content 1; the
/// denominator's first coefficient (ascending grlex) is positive.  Equality
/// is componentwise identity of the canonical forms.
class RationalFunction {
  public:
    RationalFunction();  // zero over the empty context
    explicit RationalFunction(ParamPolynomial num);
    RationalFunction(ParamPolynomial num, ParamPolynomial den);

    static RationalFunction zero(Symbols symbols);
    static RationalFunction one(Symbols symbols);
    static RationalFunction constant(Symbols symbols, const mpq_class& c);
    static RationalFunction constant(Symbols symbols, long c);
    static RationalFunction variable(const Symbols& symbols, const std::string& name, int power = 1);

    const ParamPolynomial& num() const { return num_; }
    const ParamPolynomial& den() const { return den_; }
    const Symbols& symbols() const { return num_.symbols(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    RationalFunction pow(int e) const;  // e >= 0

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }
    bool operator<(const RationalFunction& o) const;

    mpq_class eval(const std::map<std::string, mpq_class>& point) const;
    double eval(const std::map<std::string, double>& point) const;

    // Canonical string, "(num)/(den)" or just "num" when den == 1.
    std::string str() const;

  private:
    ParamPolynomial num_;
    ParamPolynomial den_;

    void canonicalize();
};

// Thin wrapper over the canonical constructor.
RationalFunction rf_normalize(const ParamPolynomial& num, const ParamPolynomial& den);

}  // namespace macpoly
