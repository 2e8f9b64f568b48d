// Numerical simulator for the t-boson matrix-product construction:
// truncated Fock traces, single-layer transition weights, and the full
// trace formula for the non-symmetric family f.
#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "macpoly/combinat.hpp"

namespace macpoly {

enum class TokenKind { raise_op, lower_op, diag_op };

// diag acts on |m> with eigenvalue t^{a*m} * q^{b*m}; the pair encoding
// keeps twist exponents integral, no logarithms involved.
struct BosonToken {
    TokenKind kind;
    int a = 0;
    int b = 0;
};

using OperatorString = std::vector<BosonToken>;

template <typename Num>
struct FockTruncation {
    int cutoff;  // trace runs over |0> .. |cutoff>
    Num t;
    Num q;
};

template <typename Num>
struct TraceResult {
    Num value;
    double tail_bound;  // bound on the distance to the untruncated value
    bool exact_zero;    // zero by operator counting alone, not truncation
};

// Trace of the word over the truncated Fock space, the word applied
// right to left: phi|m> = (1-t^m)|m-1>, phidag|m> = |m+1>, diag as above.
// Raising past the cutoff kills the path.  Throws domain_error when the
// word conserves the level but its diagonal weight t^a q^b has modulus >= 1.
template <typename Num>
TraceResult<Num> fock_trace(const OperatorString& word, const FockTruncation<Num>& trunc);

/// Convenience form: phi^b (phidag)^c diag(d).
template <typename Num>
TraceResult<Num> fock_trace(int b, int c, std::pair<int, int> d,
                            const FockTruncation<Num>& trunc);

// delta_{b,c} prod_{i=1}^{b}(1-t^i) / prod_{i=0}^{b}(1 - w t^i) with
// w = t^{d.first} q^{d.second}; the untruncated value of the same trace.
template <typename Num>
Num closed_form_trace(int b, int c, std::pair<int, int> d, const Num& t, const Num& q);

// prod_{i=s}^{r} prod_{j=i+1}^{r} 1/(1 - q^{j-i} t^{la'_i - la'_j})
template <typename Num>
Num omega_norm(int s, const Partition& la_plus, int r, const Num& t, const Num& q);

// Single layer at level s: Tr[L^{(s)}_{la_1,mu_1}(x_1) ... L^{(s)}_{la_n,mu_n}(x_n) S^{(s)}],
// one commuting boson copy per l in {s+1,...,r}, traced independently.
// la must be a partition with parts in {0, s..r}, mu a composition with
// parts in {0, s+1..r}.  tail_bound propagates the per-copy truncation
// bounds through the product.
template <typename Num>
TraceResult<Num> transition_weight(int s, int r, const Partition& la, const Composition& mu,
                                   const std::vector<Num>& xs,
                                   const FockTruncation<Num>& trunc);

// x_la * C_s(la,mu) * omega_norm(s, la) / omega_norm(s+1, sorted mu), or 0
// when the part multiplicities above level s disagree.
mpq_class lemma_rhs(int s, int r, const Partition& la, const Composition& mu,
                    const std::vector<mpq_class>& xs, const mpq_class& t,
                    const mpq_class& q);

// Relative deviation between transition_weight and lemma_rhs at one point.
double verify_lemma(int s, int r, const Partition& la, const Composition& mu,
                    const std::vector<mpq_class>& xs,
                    const FockTruncation<mpq_class>& trunc);

// Tr[A_{la_1}(x_1) ... A_{la_n}(x_n) S] / omega_norm(1, sorted la), the
// numeric value of f_la; enforces parts <= 3 and n <= 3.
template <typename Num>
TraceResult<Num> matrix_product_f(const Composition& la, const std::vector<Num>& xs,
                                  const FockTruncation<Num>& trunc);

}  // namespace macpoly
