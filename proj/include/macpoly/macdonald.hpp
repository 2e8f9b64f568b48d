// Coefficient function C_i, the nested-sum evaluator for P_lambda, the
// non-symmetric family f, and the four specializations.
#pragma once

#include "macpoly/combinat.hpp"
#include "macpoly/hecke.hpp"

namespace macpoly {

struct CoefficientQuery {
    int level;            // i
    Partition top;        // plays lambda[i-1], parts in {0, i, ..., r}
    Composition bottom;   // plays sigma o lambda[i], parts in {0, i+1, ..., r}
    int r;                // largest part of the ORIGINAL lambda
};

// 0 if some 0 < top_k < bottom_k; otherwise
// prod_{j=i+1}^{r} [ q^{(j-i) a_j} prod_{k=1}^{b_j}
//                    (1-t^k)/(1-q^{j-i} t^{top'_i - top'_j + k}) ]
// with a_j, b_j taken on (top, bottom) and top' the conjugate of top.
RationalFunction coefficient_C(const CoefficientQuery& query);

// Same vanishing rule; surviving factors become
// prod_j prod_{k=1}^{b_j} k/((j-i)*alpha + top'_i - top'_j + k).
RationalFunction jack_coefficient(const CoefficientQuery& query);

// Same vanishing rule; surviving factors become prod_j q^{(j-i) a_j}.
RationalFunction whittaker_coefficient(const CoefficientQuery& query);

struct EvalOptions {
    bool memoize = true;
    int threads = 1;
};

// The nested formula over {q,t}: symmetric, homogeneous of degree |lambda|,
// coefficient 1 on x^lambda.  lambda may be shorter than n (zero-padded);
// more than n nonzero parts is an error.
Polynomial macdonald_P(const Partition& la, int n, const EvalOptions& opts = {});

// Inner non-symmetric polynomial f_lambda (the pre-symmetrization value).
Polynomial nonsym_f(const Partition& la, int n);

// f_mu for an arbitrary composition, via T-words acting on f of the sorted
// partition.
Polynomial compose_f(const Composition& mu);

enum class HallLittlewoodMode { hecke_sum, standard_sum };

// Over {t}: hecke_sum applies T-words to the full monomial x^lambda;
// standard_sum symmetrizes x^lambda prod_{la_i > la_j} (x_i - t x_j)/(x_i - x_j)
// over a cleared common denominator with exact division at the end.
Polynomial hall_littlewood(const Partition& la, int n, HallLittlewoodMode mode);

// Over {alpha}: plain transpositions and the degenerate coefficients.
Polynomial jack_P(const Partition& la, int n);

// Over {q}: divided-difference words and the degenerate coefficients.
Polynomial q_whittaker_P(const Partition& la, int n);

// Monomial symmetric polynomial m_lambda over the empty parameter context.
Polynomial monomial_limit(const Partition& la, int n);

}  // namespace macpoly
