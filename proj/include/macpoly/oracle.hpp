// Independent constructions used to cross-check the nested-sum evaluator:
// classical bases, Gram-Schmidt orthogonalization against the (q,t) and
// alpha inner products, the Jacobi-Trudi determinant, and the first
// q-difference eigenoperator.
#pragma once

#include "macpoly/combinat.hpp"
#include "macpoly/polyring.hpp"

namespace macpoly {

// Complete homogeneous h_k in n variables, constant coefficients over the
// given parameter context; k < 0 gives 0, k = 0 gives 1.
Polynomial complete_homogeneous(int k, int n, const Symbols& params);

// Power-sum product p_la = prod over nonzero parts of sum_i x_i^part.
Polynomial power_sum(const Partition& la, int n, const Symbols& params);

// Schur polynomial via det(h_{la_i - i + j}), over the empty context.
Polynomial schur(const Partition& la, int n);

// Orthogonalizes the monomial basis in ascending lexicographic order (a
// linear extension of dominance) against the diagonal power-sum pairing
// <p_la, p_la> = z_la prod_i (1-q^{la_i})/(1-t^{la_i}), keeping the x^la
// coefficient 1.  Works in max(n, |la|) variables, then truncates to n.
Polynomial gram_schmidt_P(const Partition& la, int n);

// Same construction with <p_la, p_la> = z_la alpha^{length(la)}.
Polynomial gram_schmidt_jack(const Partition& la, int n);

// First q-difference operator: D f = sum_i [prod_{j != i}
// (t x_i - x_j)/(x_i - x_j)] f(..., q x_i, ...), computed over a cleared
// Vandermonde denominator with exact division.  Requires f over {q,t}.
Polynomial macdonald_operator(const Polynomial& f);

// Its eigenvalue on P_la in n variables, sum_i q^{la_i} t^{n-i}.
RationalFunction macdonald_eigenvalue(const Partition& la, int n);

}  // namespace macpoly
