#include "macpoly/macdonald.hpp"

#include <functional>
#include <thread>

namespace macpoly {

namespace {

void check_query(const CoefficientQuery& q) {
    if (q.level < 1) throw std::invalid_argument("coefficient level must be >= 1");
    if (q.top.size() != q.bottom.size())
        throw std::invalid_argument("coefficient arguments differ in length");
    check_partition(q.top);
    for (int p : q.top)
        if (p != 0 && (p < q.level || p > q.r))
            throw std::invalid_argument("top parts must lie in {0, i, ..., r}");
    for (int p : q.bottom)
        if (p != 0 && (p < q.level + 1 || p > q.r))
            throw std::invalid_argument("bottom parts must lie in {0, i+1, ..., r}");
}

bool vanishes(const CoefficientQuery& q) {
    for (size_t k = 0; k < q.top.size(); ++k)
        if (0 < q.top[k] && q.top[k] < q.bottom[k]) return true;
    return false;
}

}  // namespace

RationalFunction coefficient_C(const CoefficientQuery& query) {
    check_query(query);
    if (vanishes(query)) return RationalFunction::zero(ctx_qt());
    const ParamPolynomial one = ParamPolynomial::constant(ctx_qt(), 1);
    RationalFunction result = RationalFunction::one(ctx_qt());
    const int conj_i = conjugate_part(query.top, query.level);
    for (int j = query.level + 1; j <= query.r; ++j) {
        const int aj = a_stat(query.top, query.bottom, j);
        const int bj = b_stat(query.top, query.bottom, j);
        const int gap = j - query.level;
        if (aj > 0)
            result *= RationalFunction::variable(ctx_qt(), "q", gap * aj);
        const int conj_j = conjugate_part(query.top, j);
        for (int k = 1; k <= bj; ++k) {
            ParamPolynomial num = one - ParamPolynomial::variable(ctx_qt(), "t", k);
            ParamPolynomial den =
                one - ParamPolynomial::monomial(ctx_qt(), {gap, conj_i - conj_j + k}, 1);
            result *= RationalFunction(num, den);
        }
    }
    return result;
}

RationalFunction jack_coefficient(const CoefficientQuery& query) {
    check_query(query);
    if (vanishes(query)) return RationalFunction::zero(ctx_alpha());
    RationalFunction result = RationalFunction::one(ctx_alpha());
    const int conj_i = conjugate_part(query.top, query.level);
    for (int j = query.level + 1; j <= query.r; ++j) {
        const int bj = b_stat(query.top, query.bottom, j);
        const int gap = j - query.level;
        const int conj_j = conjugate_part(query.top, j);
        for (int k = 1; k <= bj; ++k) {
            ParamPolynomial num = ParamPolynomial::constant(ctx_alpha(), k);
            ParamPolynomial den =
                ParamPolynomial::constant(ctx_alpha(), conj_i - conj_j + k) +
                ParamPolynomial::monomial(ctx_alpha(), {1}, gap);
            result *= RationalFunction(num, den);
        }
    }
    return result;
}

RationalFunction whittaker_coefficient(const CoefficientQuery& query) {
    check_query(query);
    if (vanishes(query)) return RationalFunction::zero(ctx_q());
    int power = 0;
    for (int j = query.level + 1; j <= query.r; ++j)
        power += (j - query.level) * a_stat(query.top, query.bottom, j);
    return RationalFunction::variable(ctx_q(), "q", power);
}

namespace {

Partition normalize_lambda(const Partition& la, int n) {
    check_partition(la);
    Partition padded = la;
    if (static_cast<int>(padded.size()) > n) {
        for (size_t k = static_cast<size_t>(n); k < padded.size(); ++k)
            if (padded[k] != 0)
                throw std::invalid_argument("partition has more than n nonzero parts");
        padded.resize(static_cast<size_t>(n));
    } else {
        padded.resize(static_cast<size_t>(n), 0);
    }
    return padded;
}

// column monomial: product of x_k over the nonzero parts
Polynomial x_col(const Partition& la, int n, const Symbols& params) {
    Monomial e(static_cast<size_t>(n), 0);
    for (size_t k = 0; k < la.size(); ++k)
        if (la[k] > 0) e[k] = 1;
    return Polynomial::term(n, params, e, RationalFunction::one(params));
}

using CoeffFn = RationalFunction (*)(const CoefficientQuery&);
using WordFn = Polynomial (*)(const std::vector<int>&, const Polynomial&);

// f_lambda = x_{lambda[0]} * prod_{i=1}^{r-1}(sum_sigma C_i T_sigma x_{lambda[i]}) 1,
// evaluated innermost level first, one accumulator threaded through.
Polynomial nested_f(const Partition& la, int n, const Symbols& params, CoeffFn coeff,
                    WordFn word_apply, bool memoize) {
    const int r = la.empty() ? 0 : la[0];
    Polynomial g = Polynomial::one(n, params);
    for (int i = r - 1; i >= 1; --i) {
        const Partition top = truncate(la, i - 1);
        const Partition cur = truncate(la, i);
        const Polynomial base = x_col(cur, n, params) * g;
        Polynomial sum(n, params);
        TWordCache cache(base);
        for (const auto& c : coset_reps(cur)) {
            RationalFunction w = coeff(CoefficientQuery{i, top, c.arrangement, r});
            if (w.is_zero()) continue;
            if (memoize && word_apply == static_cast<WordFn>(&apply_T_word))
                sum += cache.apply(c.word).scale(w);
            else
                sum += word_apply(c.word, base).scale(w);
        }
        g = std::move(sum);
    }
    return x_col(la, n, params) * g;
}

Polynomial symmetrize(const Partition& la, const Polynomial& f, WordFn word_apply,
                      const EvalOptions& opts) {
    const auto reps = coset_reps(la);
    const bool use_cache = opts.memoize && word_apply == static_cast<WordFn>(&apply_T_word);
    const int nthreads =
        std::max(1, std::min<int>(opts.threads, static_cast<int>(reps.size())));
    if (nthreads == 1) {
        Polynomial sum(f.n(), f.params());
        TWordCache cache(f);
        for (const auto& c : reps)
            sum += use_cache ? cache.apply(c.word) : word_apply(c.word, f);
        return sum;
    }
    std::vector<Polynomial> partial(static_cast<size_t>(nthreads),
                                    Polynomial(f.n(), f.params()));
    std::vector<std::thread> pool;
    for (int tid = 0; tid < nthreads; ++tid) {
        pool.emplace_back([&, tid]() {
            TWordCache cache(f);
            Polynomial acc(f.n(), f.params());
            for (size_t k = static_cast<size_t>(tid); k < reps.size();
                 k += static_cast<size_t>(nthreads))
                acc += use_cache ? cache.apply(reps[k].word) : word_apply(reps[k].word, f);
            partial[static_cast<size_t>(tid)] = std::move(acc);
        });
    }
    for (auto& th : pool) th.join();
    Polynomial sum(f.n(), f.params());
    for (const auto& p : partial) sum += p;
    return sum;
}

}  // namespace

Polynomial macdonald_P(const Partition& la, int n, const EvalOptions& opts) {
    const Partition lam = normalize_lambda(la, n);
    Polynomial f = nested_f(lam, n, ctx_qt(), &coefficient_C, &apply_T_word, opts.memoize);
    return symmetrize(lam, f, &apply_T_word, opts);
}

Polynomial nonsym_f(const Partition& la, int n) {
    const Partition lam = normalize_lambda(la, n);
    return nested_f(lam, n, ctx_qt(), &coefficient_C, &apply_T_word, true);
}

Polynomial compose_f(const Composition& mu) {
    for (int p : mu)
        if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
    const int n = static_cast<int>(mu.size());
    const Partition sorted = sort_desc(mu);
    return apply_T_word(coset_word(sorted, mu), nonsym_f(sorted, n));
}

Polynomial hall_littlewood(const Partition& la, int n, HallLittlewoodMode mode) {
    const Partition lam = normalize_lambda(la, n);
    const Symbols& params = ctx_t();
    if (mode == HallLittlewoodMode::hecke_sum) {
        Monomial e(lam.begin(), lam.end());
        Polynomial xlam = Polynomial::term(n, params, e, RationalFunction::one(params));
        return symmetrize(lam, xlam, &apply_T_word, EvalOptions{});
    }
    // standard_sum: write every summand over the full Vandermonde
    // prod_{i<j}(x_i - x_j), so sigma contributes its sign, then divide out.
    const RationalFunction one = RationalFunction::one(params);
    const RationalFunction t = RationalFunction::variable(params, "t");
    Monomial e(lam.begin(), lam.end());
    Polynomial numer = Polynomial::term(n, params, e, one);
    Polynomial vandermonde = Polynomial::one(n, params);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Polynomial diff = Polynomial::x(n, params, i) - Polynomial::x(n, params, j);
            vandermonde = vandermonde * diff;
            if (lam[static_cast<size_t>(i - 1)] > lam[static_cast<size_t>(j - 1)])
                numer = numer * (Polynomial::x(n, params, i) -
                                 Polynomial::x(n, params, j).scale(t));
            else
                numer = numer * diff;
        }
    Polynomial sum(n, params);
    for (const auto& c : coset_reps(lam)) {
        Polynomial img = apply_transpositions(c.word, numer);
        sum += (c.word.size() % 2 == 0) ? img : -img;
    }
    return divide_exact_poly(sum, vandermonde);
}

Polynomial jack_P(const Partition& la, int n) {
    const Partition lam = normalize_lambda(la, n);
    Polynomial f =
        nested_f(lam, n, ctx_alpha(), &jack_coefficient, &apply_transpositions, false);
    return symmetrize(lam, f, &apply_transpositions, EvalOptions{});
}

Polynomial q_whittaker_P(const Partition& la, int n) {
    const Partition lam = normalize_lambda(la, n);
    Polynomial f = nested_f(lam, n, ctx_q(), &whittaker_coefficient,
                            &apply_divided_difference_word, false);
    return symmetrize(lam, f, &apply_divided_difference_word, EvalOptions{});
}

Polynomial monomial_limit(const Partition& la, int n) {
    const Partition lam = normalize_lambda(la, n);
    Polynomial sum(n, ctx_none());
    for (const auto& c : coset_reps(lam)) {
        Monomial e(c.arrangement.begin(), c.arrangement.end());
        sum.add_term(e, RationalFunction::one(ctx_none()));
    }
    return sum;
}

}  // namespace macpoly
