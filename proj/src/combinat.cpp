#include "macpoly/combinat.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace macpoly {

bool is_partition(const Composition& mu) {
    for (size_t k = 0; k < mu.size(); ++k) {
        if (mu[k] < 0) return false;
        if (k + 1 < mu.size() && mu[k] < mu[k + 1]) return false;
    }
    return true;
}

void check_partition(const Partition& la) {
    if (!is_partition(la))
        throw std::invalid_argument("not a partition: " + composition_str(la));
}

Partition conjugate(const Partition& la) {
    check_partition(la);
    Partition conj;
    if (la.empty() || la[0] == 0) return conj;
    conj.reserve(static_cast<size_t>(la[0]));
    for (int i = 1; i <= la[0]; ++i) conj.push_back(conjugate_part(la, i));
    return conj;
}

int conjugate_part(const Partition& la, int i) {
    int c = 0;
    for (int p : la)
        if (p >= i) ++c;
    return c;
}

Partition truncate(const Partition& la, int k) {
    check_partition(la);
    const int top = la.empty() ? 0 : la[0];
    if (k < 0 || k > top) throw std::invalid_argument("truncation level out of range");
    Partition r = la;
    for (int& p : r)
        if (p <= k) p = 0;
    return r;
}

int multiplicity(const Composition& mu, int i) {
    if (i < 0) throw std::invalid_argument("part value must be nonnegative");
    return static_cast<int>(std::count(mu.begin(), mu.end(), i));
}

int a_stat(const Composition& la, const Composition& mu, int i) {
    if (la.size() != mu.size()) throw std::invalid_argument("composition length mismatch");
    if (i < 1) throw std::invalid_argument("statistic index must be >= 1");
    int c = 0;
    for (size_t k = 0; k < la.size(); ++k)
        if (la[k] == 0 && mu[k] == i) ++c;
    return c;
}

int b_stat(const Composition& la, const Composition& mu, int i) {
    if (la.size() != mu.size()) throw std::invalid_argument("composition length mismatch");
    if (i < 1) throw std::invalid_argument("statistic index must be >= 1");
    int c = 0;
    for (size_t k = 0; k < la.size(); ++k)
        if (la[k] == i && la[k] > mu[k]) ++c;
    return c;
}

Partition sort_desc(const Composition& mu) {
    Partition r = mu;
    std::sort(r.begin(), r.end(), std::greater<int>());
    return r;
}

int weight(const Composition& mu) {
    return std::accumulate(mu.begin(), mu.end(), 0);
}

bool dominance_less(const Partition& mu, const Partition& la) {
    check_partition(mu);
    check_partition(la);
    if (weight(mu) != weight(la))
        throw std::invalid_argument("dominance order requires equal weights");
    bool equal = true;
    int psum_mu = 0, psum_la = 0;
    const size_t n = std::max(mu.size(), la.size());
    for (size_t k = 0; k < n; ++k) {
        const int m = k < mu.size() ? mu[k] : 0;
        const int l = k < la.size() ? la[k] : 0;
        psum_mu += m;
        psum_la += l;
        if (psum_mu > psum_la) return false;
        if (m != l) equal = false;
    }
    return !equal;
}

namespace {

std::vector<int> build_word(const Partition& source, const Composition& target,
                            bool fill_back) {
    if (source.size() != target.size())
        throw std::invalid_argument("composition length mismatch");
    Composition cur = source;
    std::vector<int> chronological;
    const int n = static_cast<int>(source.size());
    if (fill_back) {
        for (int pos = n - 1; pos >= 0; --pos) {
            int j = -1;
            for (int k = pos; k >= 0; --k)
                if (cur[static_cast<size_t>(k)] == target[static_cast<size_t>(pos)]) {
                    j = k;
                    break;
                }
            if (j < 0) throw std::invalid_argument("target is not a rearrangement of the source");
            for (int k = j; k < pos; ++k) {
                std::swap(cur[static_cast<size_t>(k)], cur[static_cast<size_t>(k + 1)]);
                chronological.push_back(k + 1);
            }
        }
    } else {
        for (int pos = 0; pos < n; ++pos) {
            int j = -1;
            for (int k = pos; k < n; ++k)
                if (cur[static_cast<size_t>(k)] == target[static_cast<size_t>(pos)]) {
                    j = k;
                    break;
                }
            if (j < 0) throw std::invalid_argument("target is not a rearrangement of the source");
            for (int k = j; k > pos; --k) {
                std::swap(cur[static_cast<size_t>(k)], cur[static_cast<size_t>(k - 1)]);
                chronological.push_back(k);  // swap of positions k-1,k is s_k (1-based)
            }
        }
    }
    std::reverse(chronological.begin(), chronological.end());
    return chronological;
}

}  // namespace

std::vector<int> coset_word(const Partition& source, const Composition& target) {
    check_partition(source);
    return build_word(source, target, false);
}

std::vector<int> coset_word_alt(const Partition& source, const Composition& target) {
    check_partition(source);
    return build_word(source, target, true);
}

std::vector<CosetElement> coset_reps(const Partition& la) {
    check_partition(la);
    std::vector<CosetElement> reps;
    Composition arr = la;
    do {
        reps.push_back(CosetElement{arr, coset_word(la, arr)});
    } while (std::prev_permutation(arr.begin(), arr.end()));
    return reps;
}

mpz_class coset_count(const Partition& la) {
    check_partition(la);
    mpz_class c;
    mpz_fac_ui(c.get_mpz_t(), la.size());
    int v = la.empty() ? 0 : la[0];
    for (int i = 0; i <= v; ++i) {
        const int m = multiplicity(la, i);
        if (m > 1) {
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
            c /= f;
        }
    }
    return c;
}

mpz_class z_factor(const Partition& la) {
    check_partition(la);
    mpz_class z = 1;
    const int top = la.empty() ? 0 : la[0];
    for (int i = 1; i <= top; ++i) {
        const int m = multiplicity(la, i);
        if (m == 0) continue;
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(i),
                      static_cast<unsigned long>(m));
        z *= f * p;
    }
    return z;
}

namespace {

void partitions_rec(int d, int max_part, int max_len, Partition& cur,
                    std::vector<Partition>& out, int pad_len) {
    if (d == 0) {
        Partition p = cur;
        p.resize(static_cast<size_t>(pad_len), 0);
        out.push_back(std::move(p));
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(d, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(d - p, p, max_len - 1, cur, out, pad_len);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d, int max_len) {
    if (d < 0) throw std::invalid_argument("partition weight must be nonnegative");
    if (max_len < 1) throw std::invalid_argument("partition length must be positive");
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(d, d, max_len, cur, out, max_len);
    return out;
}

std::vector<Composition> enumerate_compositions(int n, int max_part) {
    std::vector<Composition> out;
    Composition cur(static_cast<size_t>(n), 0);
    while (true) {
        out.push_back(cur);
        int k = n - 1;
        while (k >= 0 && cur[static_cast<size_t>(k)] == max_part) {
            cur[static_cast<size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
        ++cur[static_cast<size_t>(k)];
    }
    return out;
}

Composition parse_composition(const std::string& text) {
    Composition mu;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse part '" + tok + "'");
        }
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
        if (used != tok.size())
            throw std::invalid_argument("cannot parse part '" + tok + "'");
        if (v < 0) throw std::invalid_argument("parts must be nonnegative");
        mu.push_back(v);
    }
    if (mu.empty()) throw std::invalid_argument("empty composition");
    return mu;
}

std::string composition_str(const Composition& mu) {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < mu.size(); ++k) {
        if (k) os << ",";
        os << mu[k];
    }
    os << ")";
    return os.str();
}

}  // namespace macpoly
