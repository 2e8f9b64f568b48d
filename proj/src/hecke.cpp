#include "macpoly/hecke.hpp"

#include <atomic>

namespace macpoly {

namespace {
std::atomic<long> t_counter{0};
}

long apply_T_count() { return t_counter.load(); }
void reset_apply_T_count() { t_counter.store(0); }

Polynomial apply_T(int i, const Polynomial& f) {
    t_counter.fetch_add(1, std::memory_order_relaxed);
    const RationalFunction t = RationalFunction::variable(f.params(), "t");
    Polynomial g = divide_difference_quotient(i, f);
    Polynomial xi = Polynomial::x(f.n(), f.params(), i);
    Polynomial xj = Polynomial::x(f.n(), f.params(), i + 1);
    return f.scale(t) - (xi.scale(t) - xj) * g;
}

Polynomial apply_T_word(const std::vector<int>& word, const Polynomial& f) {
    Polynomial r = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = apply_T(*it, r);
    return r;
}

Polynomial apply_divided_difference(int i, const Polynomial& f) {
    return Polynomial::x(f.n(), f.params(), i + 1) * divide_difference_quotient(i, f);
}

Polynomial apply_divided_difference_word(const std::vector<int>& word, const Polynomial& f) {
    Polynomial r = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        r = apply_divided_difference(*it, r);
    return r;
}

Polynomial apply_transpositions(const std::vector<int>& word, const Polynomial& f) {
    Polynomial r = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = transpose_vars(*it, r);
    return r;
}

TWordCache::TWordCache(Polynomial base) {
    memo_.emplace(std::vector<int>{}, std::move(base));
}

const Polynomial& TWordCache::apply(const std::vector<int>& word) {
    auto it = memo_.find(word);
    if (it != memo_.end()) return it->second;
    // longest cached proper suffix, then extend one generator at a time
    size_t cut = 1;
    for (; cut < word.size(); ++cut)
        if (memo_.count(std::vector<int>(word.begin() + cut, word.end()))) break;
    std::vector<int> suffix(word.begin() + cut, word.end());
    Polynomial cur = memo_.at(suffix);
    for (size_t k = cut; k-- > 0;) {
        suffix.insert(suffix.begin(), word[k]);
        cur = apply_T(word[k], cur);
        memo_.emplace(suffix, cur);
    }
    return memo_.at(word);
}

}  // namespace macpoly
