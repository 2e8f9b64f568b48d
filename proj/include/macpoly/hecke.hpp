// Polynomial representation of the type A Hecke algebra: generators T_i,
// words T_sigma, simple transpositions, divided differences.
#pragma once

#include "macpoly/polyring.hpp"

namespace macpoly {

// T_i f = t*f - (t*x_i - x_{i+1}) * divide_difference_quotient(i, f).
// Requires the symbol t in f's parameter context; 1 <= i <= n-1.
Polynomial apply_T(int i, const Polynomial& f);

// Word of generator indices, leftmost applied last (outermost).
Polynomial apply_T_word(const std::vector<int>& word, const Polynomial& f);

// D_i f = x_{i+1} * divide_difference_quotient(i, f), the t -> 0 member of
// the family; works in any parameter context.
Polynomial apply_divided_difference(int i, const Polynomial& f);

Polynomial apply_divided_difference_word(const std::vector<int>& word, const Polynomial& f);

// Plain s_i composition, same order convention as apply_T_word.
Polynomial apply_transpositions(const std::vector<int>& word, const Polynomial& f);

// Instrumentation: total apply_T invocations since last reset (thread-safe).
long apply_T_count();
void reset_apply_T_count();

/// Memoizes apply_T_word suffixes against one fixed base polynomial, for
/// evaluators that sweep many words sharing tails.  Not synchronized; use
/// one instance per thread.
class TWordCache {
  public:
    explicit TWordCache(Polynomial base);

    const Polynomial& apply(const std::vector<int>& word);

  private:
    std::map<std::vector<int>, Polynomial> memo_;
};

}  // namespace macpoly
