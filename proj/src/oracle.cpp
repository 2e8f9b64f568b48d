#include "macpoly/oracle.hpp"

#include <algorithm>
#include <functional>

namespace macpoly {

Polynomial complete_homogeneous(int k, int n, const Symbols& params) {
    Polynomial result(n, params);
    if (k < 0) return result;
    Monomial e(static_cast<size_t>(n), 0);
    std::function<void(int, int)> fill = [&](int pos, int left) {
        if (pos == n - 1) {
            e[static_cast<size_t>(pos)] = left;
            result.add_term(e, RationalFunction::one(params));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[static_cast<size_t>(pos)] = v;
            fill(pos + 1, left - v);
        }
    };
    if (n > 0) fill(0, k);
    return result;
}

Polynomial power_sum(const Partition& la, int n, const Symbols& params) {
    check_partition(la);
    Polynomial result = Polynomial::one(n, params);
    for (int part : la) {
        if (part == 0) continue;
        Polynomial pk(n, params);
        for (int i = 1; i <= n; ++i) pk += Polynomial::x(n, params, i, part);
        result = result * pk;
    }
    return result;
}

Polynomial schur(const Partition& la, int n) {
    check_partition(la);
    const int len = conjugate_part(la, 1);
    if (len == 0) return Polynomial::one(n, ctx_none());
    std::vector<std::vector<Polynomial>> h(
        static_cast<size_t>(len),
        std::vector<Polynomial>(static_cast<size_t>(len), Polynomial(n, ctx_none())));
    for (int i = 1; i <= len; ++i)
        for (int j = 1; j <= len; ++j)
            h[i - 1][j - 1] = complete_homogeneous(la[i - 1] - i + j, n, ctx_none());
    // cofactor expansion along the first column
    std::function<Polynomial(std::vector<int>)> det = [&](std::vector<int> rows) {
        const size_t col = static_cast<size_t>(len) - rows.size();
        if (rows.size() == 1) return h[static_cast<size_t>(rows[0])][col];
        Polynomial sum(n, ctx_none());
        for (size_t k = 0; k < rows.size(); ++k) {
            std::vector<int> rest = rows;
            rest.erase(rest.begin() + static_cast<long>(k));
            Polynomial minor = h[static_cast<size_t>(rows[k])][col] * det(rest);
            sum += (k % 2 == 0) ? minor : -minor;
        }
        return sum;
    };
    std::vector<int> rows(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) rows[static_cast<size_t>(i)] = i;
    return det(rows);
}

namespace {

// m_mu expanded in the power-sum basis: solve the integer transition matrix
// p_nu = sum_mu B[nu][mu] m_mu by Gauss-Jordan over rationals.
std::vector<std::vector<mpq_class>> monomial_to_power(
    const std::vector<Partition>& parts, int nvars) {
    const size_t m = parts.size();
    std::vector<std::vector<mpq_class>> B(m, std::vector<mpq_class>(m));
    const std::map<std::string, mpq_class> no_point;
    for (size_t i = 0; i < m; ++i) {
        Polynomial p = power_sum(parts[i], nvars, ctx_none());
        for (size_t j = 0; j < m; ++j) {
            Monomial e(parts[j].begin(), parts[j].end());
            B[i][j] = p.coeff(e).eval(no_point);
        }
    }
    // invert B
    std::vector<std::vector<mpq_class>> inv(m, std::vector<mpq_class>(m, 0));
    for (size_t i = 0; i < m; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < m; ++col) {
        size_t pivot = col;
        while (pivot < m && B[pivot][col] == 0) ++pivot;
        if (pivot == m) throw std::logic_error("basis transition matrix is singular");
        std::swap(B[pivot], B[col]);
        std::swap(inv[pivot], inv[col]);
        const mpq_class lead = B[col][col];
        for (size_t j = 0; j < m; ++j) {
            B[col][j] /= lead;
            inv[col][j] /= lead;
        }
        for (size_t row = 0; row < m; ++row) {
            if (row == col || B[row][col] == 0) continue;
            const mpq_class factor = B[row][col];
            for (size_t j = 0; j < m; ++j) {
                B[row][j] -= factor * B[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

Polynomial gram_schmidt_engine(
    const Partition& la, int n, const Symbols& params,
    const std::function<RationalFunction(const Partition&)>& pair_pp) {
    Partition lam = la;
    check_partition(lam);
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    if (static_cast<int>(lam.size()) > n)
        throw std::invalid_argument("partition has more than n nonzero parts");
    const int d = weight(lam);
    if (d == 0) return Polynomial::one(n, params);
    const int nvars = std::max(n, d);

    // ascending lexicographic list of candidate shapes
    std::vector<Partition> parts = enumerate_partitions(d, nvars);
    std::reverse(parts.begin(), parts.end());
    Partition padded = lam;
    padded.resize(static_cast<size_t>(nvars), 0);
    size_t target = 0;
    while (parts[target] != padded) ++target;

    const auto m_in_p = monomial_to_power(parts, nvars);
    std::vector<RationalFunction> diag;
    diag.reserve(parts.size());
    for (const auto& nu : parts) diag.push_back(pair_pp(nu));

    // Gram matrix <m_a, m_b> through the diagonal power-sum pairing
    const size_t m = target + 1;
    std::vector<std::vector<RationalFunction>> G(
        m, std::vector<RationalFunction>(m, RationalFunction::zero(params)));
    for (size_t a = 0; a < m; ++a)
        for (size_t b = a; b < m; ++b) {
            RationalFunction sum = RationalFunction::zero(params);
            for (size_t k = 0; k < parts.size(); ++k) {
                mpq_class c = m_in_p[a][k] * m_in_p[b][k];
                if (c == 0) continue;
                sum += RationalFunction::constant(params, c) * diag[k];
            }
            G[a][b] = sum;
            G[b][a] = std::move(sum);
        }

    // P = m_la + sum_{b < target} u_b m_b with <P, m_rho> = 0 for every
    // rho below the target, since those m_rho span the earlier P's
    std::vector<RationalFunction> u(m, RationalFunction::zero(params));
    u[target] = RationalFunction::one(params);
    if (target > 0) {
        std::vector<std::vector<RationalFunction>> A(
            target, std::vector<RationalFunction>(target + 1,
                                                  RationalFunction::zero(params)));
        for (size_t rho = 0; rho < target; ++rho) {
            for (size_t mu = 0; mu < target; ++mu) A[rho][mu] = G[mu][rho];
            A[rho][target] = -G[target][rho];
        }
        for (size_t col = 0; col < target; ++col) {
            size_t pivot = col;
            while (pivot < target && A[pivot][col].is_zero()) ++pivot;
            if (pivot == target) throw std::logic_error("degenerate pairing");
            std::swap(A[pivot], A[col]);
            for (size_t row = 0; row < target; ++row) {
                if (row == col || A[row][col].is_zero()) continue;
                RationalFunction f = A[row][col] / A[col][col];
                for (size_t j = col; j <= target; ++j)
                    A[row][j] = A[row][j] - f * A[col][j];
            }
        }
        for (size_t mu = 0; mu < target; ++mu) u[mu] = A[mu][target] / A[mu][mu];
    }

    Polynomial result(nvars, params);
    for (size_t b = 0; b <= target; ++b) {
        if (u[b].is_zero()) continue;
        for (const auto& c : coset_reps(parts[b]))
            result.add_term(Monomial(c.arrangement.begin(), c.arrangement.end()), u[b]);
    }
    return restrict_vars(result, n);
}

}  // namespace

Polynomial gram_schmidt_P(const Partition& la, int n) {
    auto pair_pp = [](const Partition& nu) {
        const Symbols& P = ctx_qt();
        RationalFunction value =
            RationalFunction::constant(P, mpq_class(z_factor(nu)));
        const ParamPolynomial one = ParamPolynomial::constant(P, 1);
        for (int part : nu) {
            if (part == 0) continue;
            value *= RationalFunction(one - ParamPolynomial::variable(P, "q", part),
                                      one - ParamPolynomial::variable(P, "t", part));
        }
        return value;
    };
    return gram_schmidt_engine(la, n, ctx_qt(), pair_pp);
}

Polynomial gram_schmidt_jack(const Partition& la, int n) {
    auto pair_pp = [](const Partition& nu) {
        const Symbols& P = ctx_alpha();
        RationalFunction value =
            RationalFunction::constant(P, mpq_class(z_factor(nu)));
        return value * RationalFunction::variable(P, "alpha", conjugate_part(nu, 1));
    };
    return gram_schmidt_engine(la, n, ctx_alpha(), pair_pp);
}

Polynomial macdonald_operator(const Polynomial& f) {
    const Symbols& P = f.params();
    const int n = f.n();
    const RationalFunction t = RationalFunction::variable(P, "t");
    Polynomial total(n, P);
    Polynomial vandermonde = Polynomial::one(n, P);
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            vandermonde = vandermonde * (Polynomial::x(n, P, j) - Polynomial::x(n, P, k));
    for (int i = 1; i <= n; ++i) {
        Polynomial coeff = Polynomial::one(n, P);
        for (int j = 1; j <= n; ++j)
            if (j != i)
                coeff = coeff * (Polynomial::x(n, P, i).scale(t) - Polynomial::x(n, P, j));
        for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                if (j != i && k != i)
                    coeff = coeff * (Polynomial::x(n, P, j) - Polynomial::x(n, P, k));
        Polynomial piece = coeff * shift_var(f, i);
        total += (i % 2 == 1) ? piece : -piece;
    }
    return divide_exact_poly(total, vandermonde);
}

RationalFunction macdonald_eigenvalue(const Partition& la, int n) {
    check_partition(la);
    Partition lam = la;
    lam.resize(static_cast<size_t>(n), 0);
    RationalFunction sum = RationalFunction::zero(ctx_qt());
    for (int i = 1; i <= n; ++i) {
        ParamPolynomial term = ParamPolynomial::monomial(
            ctx_qt(), {lam[static_cast<size_t>(i - 1)], n - i}, 1);
        sum += RationalFunction(term);
    }
    return sum;
}

}  // namespace macpoly
