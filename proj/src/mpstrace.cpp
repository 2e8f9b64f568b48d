#include "macpoly/mpstrace.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "macpoly/macdonald.hpp"

namespace macpoly {

namespace {

double to_dbl(const mpq_class& v) { return v.get_d(); }
double to_dbl(double v) { return v; }

// The tail formulas are sharp for pure-diagonal strings, so the double
// evaluation could round a hair below the true bound; pad it back up.
constexpr double tail_slack = 1.0 + 1e-12;

bool abs_ge_one(const mpq_class& v) { return cmp(abs(v), 1) >= 0; }
bool abs_ge_one(double v) { return std::fabs(v) >= 1.0; }

template <typename Num>
void check_trunc(const FockTruncation<Num>& trunc) {
    if (trunc.cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
    if (abs_ge_one(trunc.t) || abs_ge_one(trunc.q))
        throw std::invalid_argument("|t| and |q| must be below 1");
}

template <typename Num>
class PowCache {
  public:
    explicit PowCache(Num base) : pows_{Num(1)}, base_(std::move(base)) {}

    const Num& get(int e) {
        while (static_cast<int>(pows_.size()) <= e) pows_.push_back(pows_.back() * base_);
        return pows_[static_cast<size_t>(e)];
    }

  private:
    std::vector<Num> pows_;
    Num base_;
};

}  // namespace

template <typename Num>
TraceResult<Num> fock_trace(const OperatorString& word, const FockTruncation<Num>& trunc) {
    check_trunc(trunc);
    int raises = 0, lowers = 0, ta = 0, qb = 0;
    for (const auto& tk : word) {
        switch (tk.kind) {
            case TokenKind::raise_op: ++raises; break;
            case TokenKind::lower_op: ++lowers; break;
            case TokenKind::diag_op:
                if (tk.a < 0 || tk.b < 0)
                    throw std::invalid_argument("diag exponents must be nonnegative");
                ta += tk.a;
                qb += tk.b;
                break;
        }
    }
    if (raises != lowers) return {Num(0), 0.0, true};
    const double wabs = std::pow(std::fabs(to_dbl(trunc.t)), ta) *
                        std::pow(std::fabs(to_dbl(trunc.q)), qb);
    if (wabs >= 1.0) throw std::domain_error("divergent trace: |t^a q^b| >= 1");
    PowCache<Num> tp(trunc.t);
    PowCache<Num> qp(trunc.q);
    Num total(0);
    for (int m = 0; m <= trunc.cutoff; ++m) {
        int state = m;
        Num amp(1);
        bool dead = false;
        for (auto it = word.rbegin(); it != word.rend() && !dead; ++it) {
            switch (it->kind) {
                case TokenKind::diag_op:
                    if (it->a != 0) amp *= tp.get(it->a * state);
                    if (it->b != 0) amp *= qp.get(it->b * state);
                    break;
                case TokenKind::raise_op:
                    if (state == trunc.cutoff)
                        dead = true;
                    else
                        ++state;
                    break;
                case TokenKind::lower_op:
                    if (state == 0) {
                        dead = true;
                    } else {
                        amp *= Num(1) - tp.get(state);
                        --state;
                    }
                    break;
            }
        }
        if (!dead) total += amp;
    }
    double tail = 0.0;
    if (wabs > 0.0)
        tail = tail_slack * std::pow(2.0, lowers) * (1.0 + raises) *
               std::pow(wabs, trunc.cutoff + 1 - lowers - raises) / (1.0 - wabs);
    return {std::move(total), tail, false};
}

template <typename Num>
TraceResult<Num> fock_trace(int b, int c, std::pair<int, int> d,
                            const FockTruncation<Num>& trunc) {
    if (b < 0 || c < 0) throw std::invalid_argument("operator counts must be nonnegative");
    OperatorString word;
    word.reserve(static_cast<size_t>(b + c) + 1);
    for (int k = 0; k < b; ++k) word.push_back({TokenKind::lower_op, 0, 0});
    for (int k = 0; k < c; ++k) word.push_back({TokenKind::raise_op, 0, 0});
    word.push_back({TokenKind::diag_op, d.first, d.second});
    return fock_trace(word, trunc);
}

template <typename Num>
Num closed_form_trace(int b, int c, std::pair<int, int> d, const Num& t, const Num& q) {
    if (b < 0 || c < 0) throw std::invalid_argument("operator counts must be nonnegative");
    if (d.first < 0 || d.second < 0)
        throw std::invalid_argument("diag exponents must be nonnegative");
    if (b != c) return Num(0);
    PowCache<Num> tp(t);
    PowCache<Num> qp(q);
    const Num w = tp.get(d.first) * qp.get(d.second);
    Num result(1);
    for (int i = 1; i <= b; ++i) result *= Num(1) - tp.get(i);
    for (int i = 0; i <= b; ++i) {
        Num factor = Num(1) - w * tp.get(i);
        if (factor == Num(0)) throw std::domain_error("divergent trace: |t^a q^b| >= 1");
        result /= factor;
    }
    return result;
}

template <typename Num>
Num omega_norm(int s, const Partition& la_plus, int r, const Num& t, const Num& q) {
    check_partition(la_plus);
    if (s < 1) throw std::invalid_argument("level must be >= 1");
    for (int p : la_plus)
        if (p > r) throw std::invalid_argument("parts must be <= r");
    PowCache<Num> tp(t);
    PowCache<Num> qp(q);
    Num result(1);
    for (int i = s; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            Num factor = Num(1) - qp.get(j - i) * tp.get(conjugate_part(la_plus, i) -
                                                         conjugate_part(la_plus, j));
            if (factor == Num(0))
                throw std::domain_error("normalization pole at this point");
            result /= factor;
        }
    return result;
}

namespace {

// 1 <= s < l <= r, the commuting copy the token lives on
struct CopyToken {
    int copy;
    BosonToken token;
};

// Tokens contributed by the matrix entry (i, j) at level s to the copies
// (s, s+1..r), plus whether the entry carries a factor of the site
// variable.  Returns false when the entry is identically zero.
bool entry_tokens(int s, int r, int i, int j, const std::function<int(int, int)>& copy_id,
                  bool& carries_x, std::vector<CopyToken>& out) {
    carries_x = false;
    if (i == 0) {
        if (j != 0) out.push_back({copy_id(s, j), {TokenKind::lower_op, 0, 0}});
        return true;
    }
    if (j != 0 && i < j) return false;
    carries_x = true;
    if (j != 0 && i > j) out.push_back({copy_id(s, j), {TokenKind::lower_op, 0, 0}});
    if (i > s && (j == 0 || i > j))
        out.push_back({copy_id(s, i), {TokenKind::raise_op, 0, 0}});
    for (int l = i + 1; l <= r; ++l)
        out.push_back({copy_id(s, l), {TokenKind::diag_op, 1, 0}});
    return true;
}

// |(v1 + e1)(v2 + e2) - v1 v2| <= |v1| d2 + |v2| d1 + d1 d2 for |ei| <= di
template <typename Num>
double product_bound(const Num& v1, double d1, const Num& v2, double d2) {
    return tail_slack *
           (std::fabs(to_dbl(v1)) * d2 + std::fabs(to_dbl(v2)) * d1 + d1 * d2);
}

}  // namespace

template <typename Num>
TraceResult<Num> transition_weight(int s, int r, const Partition& la, const Composition& mu,
                                   const std::vector<Num>& xs,
                                   const FockTruncation<Num>& trunc) {
    check_trunc(trunc);
    if (s < 1 || s > r) throw std::invalid_argument("level out of range");
    check_partition(la);
    if (la.size() != mu.size() || xs.size() != la.size())
        throw std::invalid_argument("layer arguments differ in length");
    for (int p : la)
        if (p != 0 && (p < s || p > r))
            throw std::invalid_argument("top parts must lie in {0, s, ..., r}");
    for (int p : mu)
        if (p != 0 && (p < s + 1 || p > r))
            throw std::invalid_argument("bottom parts must lie in {0, s+1, ..., r}");
    auto copy_id = [s](int level, int l) {
        (void)level;
        return l - s - 1;
    };
    std::vector<OperatorString> strings(static_cast<size_t>(r - s));
    Num weight(1);
    for (size_t k = 0; k < la.size(); ++k) {
        bool carries_x = false;
        std::vector<CopyToken> toks;
        if (!entry_tokens(s, r, la[k], mu[k], copy_id, carries_x, toks))
            return {Num(0), 0.0, true};
        if (carries_x) weight *= xs[k];
        for (const auto& ct : toks) strings[static_cast<size_t>(ct.copy)].push_back(ct.token);
    }
    for (int l = s + 1; l <= r; ++l)
        strings[static_cast<size_t>(l - s - 1)].push_back({TokenKind::diag_op, 0, l - s});
    Num value = weight;
    double bound = 0.0;
    for (const auto& w : strings) {
        const TraceResult<Num> tr = fock_trace(w, trunc);
        if (tr.exact_zero) return {Num(0), 0.0, true};
        bound = product_bound(value, bound, tr.value, tr.tail_bound);
        value *= tr.value;
    }
    return {std::move(value), bound, false};
}

mpq_class lemma_rhs(int s, int r, const Partition& la, const Composition& mu,
                    const std::vector<mpq_class>& xs, const mpq_class& t,
                    const mpq_class& q) {
    for (int i = s + 1; i <= r; ++i)
        if (multiplicity(la, i) != multiplicity(mu, i)) return 0;
    RationalFunction c = coefficient_C({s, la, mu, r});
    if (c.is_zero()) return 0;
    const std::map<std::string, mpq_class> point{{"q", q}, {"t", t}};
    mpq_class value = c.eval(point);
    for (size_t k = 0; k < la.size(); ++k)
        if (la[k] > 0) value *= xs[k];
    value *= omega_norm(s, la, r, t, q);
    value /= omega_norm(s + 1, sort_desc(mu), r, t, q);
    return value;
}

double verify_lemma(int s, int r, const Partition& la, const Composition& mu,
                    const std::vector<mpq_class>& xs,
                    const FockTruncation<mpq_class>& trunc) {
    const mpq_class lhs = transition_weight(s, r, la, mu, xs, trunc).value;
    const mpq_class rhs = lemma_rhs(s, r, la, mu, xs, trunc.t, trunc.q);
    if (lhs == 0 && rhs == 0) return 0.0;
    const double denom = std::max(std::fabs(to_dbl(lhs)), std::fabs(to_dbl(rhs)));
    return std::fabs(to_dbl(mpq_class(lhs - rhs))) / denom;
}

template <typename Num>
TraceResult<Num> matrix_product_f(const Composition& la, const std::vector<Num>& xs,
                                  const FockTruncation<Num>& trunc) {
    check_trunc(trunc);
    const int n = static_cast<int>(la.size());
    if (n < 1 || n > 3) throw std::invalid_argument("instance too large: need 1 <= n <= 3");
    if (xs.size() != la.size())
        throw std::invalid_argument("need one sample value per part");
    int r = 0;
    for (int p : la) {
        if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
        r = std::max(r, p);
    }
    if (r > 3) throw std::invalid_argument("instance too large: need parts <= 3");
    if (r == 0) return {Num(1), 0.0, false};

    std::vector<int> offset(static_cast<size_t>(r), 0);
    int ncopies = 0;
    for (int s = 1; s < r; ++s) {
        offset[static_cast<size_t>(s)] = ncopies;
        ncopies += r - s;
    }
    auto copy_id = [&offset](int s, int l) {
        return offset[static_cast<size_t>(s)] + (l - s - 1);
    };

    // one chain per surviving index path (i_1 = part, i_2, ..., i_r, 0)
    struct Chain {
        int xpow = 0;
        std::vector<CopyToken> steps;
    };
    std::vector<std::vector<Chain>> site_chains(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        Chain acc;
        std::function<void(int, int)> rec = [&](int s, int i) {
            if (s > r) {
                site_chains[static_cast<size_t>(k)].push_back(acc);
                return;
            }
            std::vector<int> cols{0};
            if (s < r)
                for (int j = s + 1; j <= r; ++j)
                    if (i == 0 || i >= j) cols.push_back(j);
            for (int j : cols) {
                const Chain saved = acc;
                bool carries_x = false;
                if (entry_tokens(s, r, i, j, copy_id, carries_x, acc.steps)) {
                    if (carries_x) ++acc.xpow;
                    rec(s + 1, j);
                }
                acc = saved;
            }
        };
        rec(1, la[static_cast<size_t>(k)]);
    }

    std::map<std::vector<int>, TraceResult<Num>> memo;
    auto trace_memo = [&](const OperatorString& w) -> const TraceResult<Num>& {
        std::vector<int> key;
        key.reserve(w.size());
        for (const auto& tk : w)
            key.push_back((static_cast<int>(tk.kind) << 8) | (tk.a << 4) | tk.b);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(std::move(key), fock_trace(w, trunc)).first;
        return it->second;
    };

    Num total(0);
    double total_bound = 0.0;
    std::vector<const Chain*> pick(static_cast<size_t>(n), nullptr);
    std::function<void(int)> sweep = [&](int k) {
        if (k == n) {
            std::vector<OperatorString> strings(static_cast<size_t>(ncopies));
            Num weight(1);
            for (int site = 0; site < n; ++site) {
                const Chain& c = *pick[static_cast<size_t>(site)];
                for (const auto& st : c.steps)
                    strings[static_cast<size_t>(st.copy)].push_back(st.token);
                for (int e = 0; e < c.xpow; ++e) weight *= xs[static_cast<size_t>(site)];
            }
            for (int s = 1; s < r; ++s)
                for (int l = s + 1; l <= r; ++l)
                    strings[static_cast<size_t>(copy_id(s, l))].push_back(
                        {TokenKind::diag_op, 0, l - s});
            Num prod = weight;
            double bound = 0.0;
            for (const auto& w : strings) {
                const TraceResult<Num>& tr = trace_memo(w);
                if (tr.exact_zero) return;
                bound = product_bound(prod, bound, tr.value, tr.tail_bound);
                prod *= tr.value;
            }
            total += prod;
            total_bound += bound;
            return;
        }
        for (const Chain& c : site_chains[static_cast<size_t>(k)]) {
            pick[static_cast<size_t>(k)] = &c;
            sweep(k + 1);
        }
    };
    sweep(0);
    const Num omega = omega_norm(1, sort_desc(la), r, trunc.t, trunc.q);
    return {total / omega, total_bound / std::fabs(to_dbl(omega)),
            total == Num(0) && total_bound == 0.0};
}

template TraceResult<mpq_class> fock_trace(const OperatorString&,
                                           const FockTruncation<mpq_class>&);
template TraceResult<double> fock_trace(const OperatorString&,
                                        const FockTruncation<double>&);
template TraceResult<mpq_class> fock_trace(int, int, std::pair<int, int>,
                                           const FockTruncation<mpq_class>&);
template TraceResult<double> fock_trace(int, int, std::pair<int, int>,
                                        const FockTruncation<double>&);
template mpq_class closed_form_trace(int, int, std::pair<int, int>, const mpq_class&,
                                     const mpq_class&);
template double closed_form_trace(int, int, std::pair<int, int>, const double&,
                                  const double&);
template mpq_class omega_norm(int, const Partition&, int, const mpq_class&,
                              const mpq_class&);
template double omega_norm(int, const Partition&, int, const double&, const double&);
template TraceResult<mpq_class> transition_weight(int, int, const Partition&,
                                                  const Composition&,
                                                  const std::vector<mpq_class>&,
                                                  const FockTruncation<mpq_class>&);
template TraceResult<double> transition_weight(int, int, const Partition&,
                                               const Composition&,
                                               const std::vector<double>&,
                                               const FockTruncation<double>&);
template TraceResult<mpq_class> matrix_product_f(const Composition&,
                                                 const std::vector<mpq_class>&,
                                                 const FockTruncation<mpq_class>&);
template TraceResult<double> matrix_product_f(const Composition&,
                                              const std::vector<double>&,
                                              const FockTruncation<double>&);

}  // namespace macpoly
