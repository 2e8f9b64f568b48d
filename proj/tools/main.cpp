// Command line driver: evaluate the polynomial families, apply the
// classical specializations, run the verification suites, spot-check
// matrix-product traces, and benchmark evaluation strategies.
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "macpoly/macdonald.hpp"
#include "macpoly/mpstrace.hpp"
#include "macpoly/oracle.hpp"
#include "macpoly/serialize.hpp"

using namespace macpoly;
using nlohmann::ordered_json;

namespace {

constexpr unsigned long default_seed = 8191;

int thread_cap(int requested) {
    if (requested < 1) requested = 1;
    const char* env = std::getenv("MACPOLY_THREADS");
    if (env == nullptr) return requested;
    const int cap = std::atoi(env);
    return cap >= 1 ? std::min(requested, cap) : requested;
}

mpq_class parse_rational(const std::string& text) {
    mpq_class v;
    if (mpq_set_str(v.get_mpq_t(), text.c_str(), 10) != 0 || v.get_den() == 0)
        throw std::invalid_argument("bad rational: " + text);
    v.canonicalize();
    return v;
}

std::vector<mpq_class> parse_rational_list(const std::string& text) {
    std::vector<mpq_class> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw std::invalid_argument("empty value list");
    return out;
}

std::string render(const Polynomial& f, const std::string& format) {
    if (format == "latex") return poly_to_latex(f);
    if (format == "json") return poly_to_json(f).dump(2);
    return f.str();
}

// strictly inside (0, 1/2], keeps every trace weight |t^a q^b| < 1 and
// every appearing denominator 1 - q^a t^b away from zero
mpq_class random_unit_rational(std::mt19937_64& rng) {
    const unsigned long den = 17 + rng() % 48;
    const unsigned long num = 1 + rng() % (den / 2);
    mpq_class v(static_cast<long>(num), den);
    v.canonicalize();
    return v;
}

Polynomial random_poly(std::mt19937_64& rng, int n) {
    Polynomial f(n, ctx_qt());
    const int terms = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < terms; ++k) {
        Monomial e(static_cast<size_t>(n), 0);
        int total = 0;
        for (int v = 0; v < n; ++v) {
            const int d = static_cast<int>(rng() % 3);
            if (total + d > 5) break;
            e[static_cast<size_t>(v)] = d;
            total += d;
        }
        const long mag = 1 + static_cast<long>(rng() % 3);
        const long sign = (rng() % 2 == 0) ? 1 : -1;
        ParamExp pe{static_cast<int>(rng() % 2), static_cast<int>(rng() % 2)};
        RationalFunction c(ParamPolynomial::monomial(ctx_qt(), pe, sign * mag));
        if (k % 3 == 2) {
            ParamPolynomial den = ParamPolynomial::constant(ctx_qt(), 1) -
                                  ParamPolynomial::monomial(ctx_qt(), {1, 1}, 1);
            c = c * RationalFunction(ParamPolynomial::constant(ctx_qt(), 1), den);
        }
        f.add_term(e, c);
    }
    if (f.is_zero()) return Polynomial::one(n, ctx_qt());
    return f;
}

struct Report {
    ordered_json checks = ordered_json::array();
    int passed = 0;
    int failed = 0;

    void push(ordered_json entry, bool ok) {
        entry["pass"] = ok;
        checks.push_back(std::move(entry));
        ok ? ++passed : ++failed;
    }

    void add(const std::string& instance, bool ok) {
        ordered_json e;
        e["instance"] = instance;
        push(std::move(e), ok);
    }

    void add_poly(const std::string& instance, const Polynomial& got,
                  const Polynomial& want) {
        const bool ok = got == want;
        ordered_json e;
        e["instance"] = instance;
        if (!ok) {
            e["actual"] = got.str();
            e["expected"] = want.str();
        }
        push(std::move(e), ok);
    }
};

struct VerifyParams {
    int max_weight = 4;
    int n = 3;
    int r = 3;
    int count = 3;
    int cutoff = 60;
    int trials = 100;
    double tol = 0.0;  // 0 = suite default
    unsigned long seed = default_seed;
};

std::vector<Partition> shapes_up_to(int max_weight, int n) {
    std::vector<Partition> shapes;
    for (int d = 0; d <= max_weight; ++d)
        for (const auto& la : enumerate_partitions(d, n)) shapes.push_back(la);
    return shapes;
}

Report run_golden() {
    Report rep;
    const RationalFunction one = RationalFunction::one(ctx_qt());
    const ParamPolynomial q = ParamPolynomial::variable(ctx_qt(), "q");
    const ParamPolynomial t = ParamPolynomial::variable(ctx_qt(), "t");
    const ParamPolynomial c1 = ParamPolynomial::constant(ctx_qt(), 1);

    rep.add("two-row display string",
            macdonald_P({3, 1}, 2).str() ==
                "x1^3*x2 + ((1 - t + q - q*t)/(1 - q*t))*x1^2*x2^2 + x1*x2^3");

    Polynomial expect_f(2, ctx_qt());
    expect_f.add_term({3, 1}, one);
    expect_f.add_term({2, 2}, RationalFunction(q * (c1 - t), c1 - q * t));
    rep.add_poly("two-row pre-symmetrization value", nonsym_f({3, 1}, 2), expect_f);

    Polynomial expect321(3, ctx_qt());
    for (const auto& c : coset_reps({3, 2, 1})) expect321.add_term(c.arrangement, one);
    const ParamPolynomial c2 = ParamPolynomial::constant(ctx_qt(), 2);
    expect321.add_term({2, 2, 2},
                       RationalFunction((c2 + q + t + c2 * q * t) * (c1 - t),
                                        c1 - q * t * t));
    rep.add_poly("three-row value", macdonald_P({3, 2, 1}, 3), expect321);
    return rep;
}

Report run_hecke(const VerifyParams& vp) {
    Report rep;
    std::mt19937_64 rng(vp.seed);
    const RationalFunction t = RationalFunction::variable(ctx_qt(), "t");
    const RationalFunction tm1 = t - RationalFunction::one(ctx_qt());
    for (int trial = 0; trial < vp.trials; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const Polynomial f = random_poly(rng, n);
        const std::string tag = " n=" + std::to_string(n) + " trial=" + std::to_string(trial);
        const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        const Polynomial tf = apply_T(i, f);
        rep.add("quadratic i=" + std::to_string(i) + tag,
                apply_T(i, tf) == tf.scale(tm1) + f.scale(t));
        if (n >= 3) {
            const int j = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 2));
            rep.add("braid i=" + std::to_string(j) + tag,
                    apply_T_word({j, j + 1, j}, f) == apply_T_word({j + 1, j, j + 1}, f));
        }
        if (n == 4)
            rep.add("commute" + tag,
                    apply_T_word({1, 3}, f) == apply_T_word({3, 1}, f));
    }
    const int windep = std::max(1, vp.trials / 2);
    for (int trial = 0; trial < windep; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        Partition la(static_cast<size_t>(n), 0);
        for (auto& p : la) p = static_cast<int>(rng() % 4);
        la = sort_desc(la);
        Composition arr = la;
        std::shuffle(arr.begin(), arr.end(), rng);
        const Polynomial f = random_poly(rng, n);
        rep.add("word-independence " + composition_str(arr) + " trial=" + std::to_string(trial),
                apply_T_word(coset_word(la, arr), f) ==
                    apply_T_word(coset_word_alt(la, arr), f));
    }
    return rep;
}

Report run_oracle(const VerifyParams& vp) {
    Report rep;
    for (const auto& la : shapes_up_to(vp.max_weight, vp.n)) {
        const std::string tag = composition_str(la) + " n=" + std::to_string(vp.n);
        const Polynomial P = macdonald_P(la, vp.n);
        rep.add_poly("gram-schmidt " + tag, P, gram_schmidt_P(la, vp.n));
        rep.add("eigenoperator " + tag,
                macdonald_operator(P) == P.scale(macdonald_eigenvalue(la, vp.n)));
    }
    for (const auto& la : shapes_up_to(std::min(vp.max_weight, 4), vp.n))
        rep.add_poly("jack " + composition_str(la) + " n=" + std::to_string(vp.n),
                     jack_P(la, vp.n), gram_schmidt_jack(la, vp.n));
    return rep;
}

Report run_specialization(const VerifyParams& vp) {
    Report rep;
    for (const auto& la : shapes_up_to(vp.max_weight, vp.n)) {
        const std::string tag = composition_str(la) + " n=" + std::to_string(vp.n);
        const Polynomial P = macdonald_P(la, vp.n);
        rep.add_poly("t=1 monomial " + tag,
                     specialize_params(P, {{"t", RationalFunction::one(ctx_q())}}, ctx_q()),
                     embed_params(monomial_limit(la, vp.n), ctx_q()));
        const Polynomial hl1 = hall_littlewood(la, vp.n, HallLittlewoodMode::hecke_sum);
        const Polynomial hl2 = hall_littlewood(la, vp.n, HallLittlewoodMode::standard_sum);
        rep.add_poly("q=0 hall-littlewood " + tag,
                     specialize_params(P, {{"q", RationalFunction::zero(ctx_t())}}, ctx_t()),
                     hl1);
        rep.add_poly("hall-littlewood forms agree " + tag, hl1, hl2);
        rep.add_poly("t=0 q-whittaker " + tag,
                     specialize_params(P, {{"t", RationalFunction::zero(ctx_q())}}, ctx_q()),
                     q_whittaker_P(la, vp.n));
        rep.add_poly("q=t schur " + tag,
                     specialize_params(P, {{"q", RationalFunction::variable(ctx_t(), "t")}},
                                       ctx_t()),
                     embed_params(schur(la, vp.n), ctx_t()));
    }
    return rep;
}

struct SamplePoint {
    mpq_class t;
    mpq_class q;
    std::vector<mpq_class> xs;
};

std::vector<SamplePoint> sample_points(std::mt19937_64& rng, int count, int n) {
    std::vector<SamplePoint> points;
    for (int p = 0; p < count; ++p) {
        SamplePoint pt;
        pt.t = random_unit_rational(rng);
        pt.q = random_unit_rational(rng);
        for (int k = 0; k < n; ++k) pt.xs.push_back(random_unit_rational(rng));
        points.push_back(std::move(pt));
    }
    return points;
}

ordered_json point_json(const SamplePoint& pt) {
    ordered_json j;
    j["t"] = pt.t.get_str();
    j["q"] = pt.q.get_str();
    auto xs = ordered_json::array();
    for (const auto& x : pt.xs) xs.push_back(x.get_str());
    j["x"] = std::move(xs);
    return j;
}

double rel_deviation(const mpq_class& lhs, const mpq_class& rhs) {
    if (lhs == 0 && rhs == 0) return 0.0;
    const double den = std::max(std::fabs(lhs.get_d()), std::fabs(rhs.get_d()));
    return std::fabs(mpq_class(lhs - rhs).get_d()) / den;
}

Report run_lemma_suite(const VerifyParams& vp) {
    Report rep;
    const double tol = vp.tol > 0 ? vp.tol : 1e-9;
    std::mt19937_64 rng(vp.seed);
    const auto points = sample_points(rng, vp.count, vp.n);
    for (int r = 1; r <= vp.r; ++r)
        for (int s = 1; s <= r; ++s)
            for (const auto& la : enumerate_compositions(vp.n, r)) {
                if (!is_partition(la)) continue;
                bool ok = true;
                for (int p : la)
                    if (p != 0 && p < s) ok = false;
                if (!ok) continue;
                for (const auto& mu : enumerate_compositions(vp.n, r)) {
                    bool okb = true;
                    for (int p : mu)
                        if (p != 0 && p < s + 1) okb = false;
                    if (!okb) continue;
                    for (const auto& pt : points) {
                        const FockTruncation<mpq_class> trunc{vp.cutoff, pt.t, pt.q};
                        const auto lhs = transition_weight(s, r, la, mu, pt.xs, trunc);
                        const mpq_class rhs = lemma_rhs(s, r, la, mu, pt.xs, pt.t, pt.q);
                        const double dev = rel_deviation(lhs.value, rhs);
                        ordered_json e;
                        e["instance"] = "r=" + std::to_string(r) + " s=" + std::to_string(s) +
                                        " la=" + composition_str(la) +
                                        " mu=" + composition_str(mu);
                        e["point"] = point_json(pt);
                        e["lhs"] = lhs.value.get_d();
                        e["rhs"] = rhs.get_d();
                        e["rel_err"] = dev;
                        e["cutoff"] = vp.cutoff;
                        e["tail_bound"] = lhs.tail_bound;
                        rep.push(std::move(e), dev < tol);
                    }
                }
            }
    return rep;
}

Report run_mps_suite(const VerifyParams& vp) {
    Report rep;
    const double tol = vp.tol > 0 ? vp.tol : 1e-8;
    const int n = std::min(vp.n, 3);
    const int r = std::min(vp.r, 3);
    std::mt19937_64 rng(vp.seed);
    const auto points = sample_points(rng, vp.count, n);
    for (const auto& la : enumerate_compositions(n, r)) {
        const Polynomial f = compose_f(la);
        for (const auto& pt : points) {
            const FockTruncation<mpq_class> trunc{vp.cutoff, pt.t, pt.q};
            const auto lhs = matrix_product_f(la, pt.xs, trunc);
            const mpq_class rhs = f.eval({{"q", pt.q}, {"t", pt.t}}, pt.xs);
            const double dev = rel_deviation(lhs.value, rhs);
            ordered_json e;
            e["instance"] = "la=" + composition_str(la);
            e["point"] = point_json(pt);
            e["lhs"] = lhs.value.get_d();
            e["rhs"] = rhs.get_d();
            e["rel_err"] = dev;
            e["cutoff"] = vp.cutoff;
            e["tail_bound"] = lhs.tail_bound;
            rep.push(std::move(e), dev < tol);
        }
    }
    return rep;
}

int run_verify(const std::string& suite, const VerifyParams& vp) {
    ordered_json out;
    out["suite"] = suite;
    if (suite == "hecke" || suite == "lemma" || suite == "mps") out["seed"] = vp.seed;
    ordered_json sizes;
    if (suite == "hecke") sizes["trials"] = vp.trials;
    if (suite == "oracle" || suite == "specialization") {
        sizes["max_weight"] = vp.max_weight;
        sizes["n"] = vp.n;
    }
    if (suite == "lemma" || suite == "mps") {
        sizes["r"] = vp.r;
        sizes["n"] = vp.n;
        sizes["points"] = vp.count;
        sizes["cutoff"] = vp.cutoff;
    }
    if (!sizes.empty()) out["sizes"] = std::move(sizes);

    Report rep;
    if (suite == "golden")
        rep = run_golden();
    else if (suite == "hecke")
        rep = run_hecke(vp);
    else if (suite == "oracle")
        rep = run_oracle(vp);
    else if (suite == "specialization")
        rep = run_specialization(vp);
    else if (suite == "lemma")
        rep = run_lemma_suite(vp);
    else
        rep = run_mps_suite(vp);

    out["passed"] = rep.passed;
    out["failed"] = rep.failed;
    out["checks"] = std::move(rep.checks);
    std::cout << out.dump(2) << "\n";
    return rep.failed == 0 ? 0 : 1;
}

int run_compute(const std::string& lambda_text, int n_opt, const std::string& family,
                const std::string& format, int threads) {
    const Composition la = parse_composition(lambda_text);
    const int n = n_opt > 0 ? n_opt : static_cast<int>(la.size());
    const EvalOptions opts{true, thread_cap(threads)};
    if (family == "nonsym-f") {
        if (n != static_cast<int>(la.size()))
            throw std::invalid_argument(
                "inconsistent n: the non-symmetric family uses one variable per part");
        std::cout << render(compose_f(la), format) << "\n";
        return 0;
    }
    if (!is_partition(la))
        throw std::invalid_argument("lambda must be a partition for this family");
    const Polynomial result = [&]() {
        if (family == "macdonald") return macdonald_P(la, n, opts);
        if (family == "hall-littlewood")
            return hall_littlewood(la, n, HallLittlewoodMode::hecke_sum);
        if (family == "jack") return jack_P(la, n);
        if (family == "q-whittaker") return q_whittaker_P(la, n);
        return monomial_limit(la, n);
    }();
    std::cout << render(result, format) << "\n";
    return 0;
}

int run_specialize(const std::string& lambda_text, int n_opt, const std::string& target,
                   const std::string& format, int threads) {
    const Composition la = parse_composition(lambda_text);
    if (!is_partition(la)) throw std::invalid_argument("lambda must be a partition");
    const int n = n_opt > 0 ? n_opt : static_cast<int>(la.size());
    const Polynomial P = macdonald_P(la, n, {true, thread_cap(threads)});
    const auto [image, reference] = [&]() -> std::pair<Polynomial, Polynomial> {
        if (target == "monomial")
            return {specialize_params(P, {{"t", RationalFunction::one(ctx_q())}}, ctx_q()),
                    embed_params(monomial_limit(la, n), ctx_q())};
        if (target == "hall-littlewood")
            return {specialize_params(P, {{"q", RationalFunction::zero(ctx_t())}}, ctx_t()),
                    hall_littlewood(la, n, HallLittlewoodMode::hecke_sum)};
        if (target == "q-whittaker")
            return {specialize_params(P, {{"t", RationalFunction::zero(ctx_q())}}, ctx_q()),
                    q_whittaker_P(la, n)};
        return {specialize_params(P, {{"q", RationalFunction::variable(ctx_t(), "t")}},
                                  ctx_t()),
                embed_params(schur(la, n), ctx_t())};
    }();
    if (image != reference) {
        std::cerr << "specialization disagrees with the direct construction\n";
        return 1;
    }
    std::cout << render(image, format) << "\n";
    return 0;
}

int run_oracle_compare(const std::string& lambda_text, int n_opt, const std::string& family,
                       int threads) {
    const Composition la = parse_composition(lambda_text);
    if (!is_partition(la)) throw std::invalid_argument("lambda must be a partition");
    const int n = n_opt > 0 ? n_opt : static_cast<int>(la.size());
    ordered_json out;
    out["lambda"] = la;
    out["n"] = n;
    out["family"] = family;
    bool ok = true;
    if (family == "jack") {
        ok = jack_P(la, n) == gram_schmidt_jack(la, n);
        out["nested_equals_gram_schmidt"] = ok;
    } else {
        const Polynomial P = macdonald_P(la, n, {true, thread_cap(threads)});
        const bool gs = P == gram_schmidt_P(la, n);
        const bool eig = macdonald_operator(P) == P.scale(macdonald_eigenvalue(la, n));
        out["nested_equals_gram_schmidt"] = gs;
        out["eigenoperator"] = eig;
        ok = gs && eig;
    }
    std::cout << out.dump(2) << "\n";
    return ok ? 0 : 1;
}

int run_trace_check(int s, int r, const std::string& lambda_text, const std::string& mu_text,
                    const std::string& x_text, const std::string& t_text,
                    const std::string& q_text, int cutoff, double tol) {
    const Composition la = parse_composition(lambda_text);
    const Composition mu = parse_composition(mu_text);
    const mpq_class t = parse_rational(t_text);
    const mpq_class q = parse_rational(q_text);
    std::vector<mpq_class> xs;
    if (x_text.empty())
        xs.assign(la.size(), mpq_class(1, 2));
    else
        xs = parse_rational_list(x_text);
    const FockTruncation<mpq_class> trunc{cutoff, t, q};
    const auto lhs = transition_weight(s, r, la, mu, xs, trunc);
    const mpq_class rhs = lemma_rhs(s, r, la, mu, xs, t, q);
    const double dev = rel_deviation(lhs.value, rhs);
    SamplePoint pt{t, q, xs};
    ordered_json e;
    e["instance"] = "r=" + std::to_string(r) + " s=" + std::to_string(s) +
                    " la=" + composition_str(la) + " mu=" + composition_str(mu);
    e["point"] = point_json(pt);
    e["lhs"] = lhs.value.get_d();
    e["rhs"] = rhs.get_d();
    e["rel_err"] = dev;
    e["cutoff"] = cutoff;
    e["tail_bound"] = lhs.tail_bound;
    std::cout << e.dump(2) << "\n";
    return dev < tol ? 0 : 1;
}

int run_bench(const std::string& lambda_text, int n_opt, int reps, int threads) {
    const Composition la = parse_composition(lambda_text);
    if (!is_partition(la)) throw std::invalid_argument("lambda must be a partition");
    const int n = n_opt > 0 ? n_opt : static_cast<int>(la.size());
    struct Scenario {
        const char* name;
        EvalOptions opts;
    };
    const Scenario scenarios[] = {
        {"naive", {false, 1}},
        {"memoized", {true, 1}},
        {"parallel", {true, thread_cap(threads)}},
    };
    ordered_json out;
    out["lambda"] = la;
    out["n"] = n;
    out["reps"] = reps;
    ordered_json table = ordered_json::array();
    std::vector<Polynomial> results;
    std::vector<long> counts;
    for (const auto& sc : scenarios) {
        double best = 0.0;
        long ops = 0;
        for (int rep = 0; rep < std::max(1, reps); ++rep) {
            reset_apply_T_count();
            const auto start = std::chrono::steady_clock::now();
            Polynomial P = macdonald_P(la, n, sc.opts);
            const double ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
            ops = apply_T_count();
            if (rep == 0 || ms < best) best = ms;
            if (rep == 0) results.push_back(std::move(P));
        }
        ordered_json row;
        row["scenario"] = sc.name;
        row["best_ms"] = best;
        row["terms"] = results.back().term_count();
        row["t_applications"] = ops;
        table.push_back(std::move(row));
        counts.push_back(ops);
    }
    if (!(results[0] == results[1] && results[1] == results[2]))
        throw std::logic_error("scenario outputs disagree");
    if (counts[1] > counts[0])
        throw std::logic_error("memoized strategy used more T applications than naive");
    out["scenarios"] = std::move(table);
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Macdonald polynomial evaluator with verification suites"};
    app.require_subcommand(1);

    std::string lambda_text, mu_text, x_text;
    std::string family = "macdonald", format = "text", suite, target;
    std::string t_text = "1/2", q_text = "1/3";
    int n_opt = 0, threads = 1, s_level = 1, reps = 3;
    double tol = 0.0;
    VerifyParams vp;

    auto* compute = app.add_subcommand("compute", "evaluate one polynomial");
    compute->add_option("--lambda", lambda_text, "comma separated parts")->required();
    compute->add_option("--n", n_opt, "number of variables (default: number of parts)");
    compute->add_option("--family", family)
        ->check(CLI::IsMember({"macdonald", "hall-littlewood", "jack", "q-whittaker",
                               "monomial", "nonsym-f"}));
    compute->add_option("--format", format)->check(CLI::IsMember({"text", "json", "latex"}));
    compute->add_option("--threads", threads, "symmetrization threads");

    auto* specialize = app.add_subcommand(
        "specialize", "specialize the two-parameter family and cross-check");
    specialize->add_option("--lambda", lambda_text)->required();
    specialize->add_option("--n", n_opt);
    specialize->add_option("--target", target)
        ->required()
        ->check(CLI::IsMember({"monomial", "hall-littlewood", "q-whittaker", "schur"}));
    specialize->add_option("--format", format)
        ->check(CLI::IsMember({"text", "json", "latex"}));
    specialize->add_option("--threads", threads);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"hecke", "golden", "oracle", "specialization", "lemma", "mps"}));
    verify->add_option("--max-weight", vp.max_weight);
    verify->add_option("--n", vp.n);
    verify->add_option("--r", vp.r);
    verify->add_option("--count", vp.count, "sample points per instance");
    verify->add_option("--cutoff", vp.cutoff, "Fock space truncation");
    verify->add_option("--trials", vp.trials);
    verify->add_option("--tol", vp.tol);
    verify->add_option("--seed", vp.seed);

    auto* compare = app.add_subcommand("oracle-compare",
                                       "nested formula against the independent oracles");
    compare->add_option("--lambda", lambda_text)->required();
    compare->add_option("--n", n_opt);
    compare->add_option("--family", family)->check(CLI::IsMember({"macdonald", "jack"}));
    compare->add_option("--threads", threads);

    auto* trace = app.add_subcommand("trace-check",
                                     "single transition-weight instance against the "
                                     "coefficient formula");
    trace->add_option("--s", s_level, "layer level")->required();
    trace->add_option("--r", vp.r, "largest part bound")->required();
    trace->add_option("--lambda", lambda_text)->required();
    trace->add_option("--mu", mu_text)->required();
    trace->add_option("--x", x_text, "comma separated rationals (default: all 1/2)");
    trace->add_option("--t", t_text);
    trace->add_option("--q", q_text);
    trace->add_option("--cutoff", vp.cutoff);
    trace->add_option("--tol", tol);

    auto* bench = app.add_subcommand("bench", "compare evaluation strategies");
    bench->add_option("--lambda", lambda_text)->required();
    bench->add_option("--n", n_opt);
    bench->add_option("--reps", reps);
    bench->add_option("--threads", threads, "threads for the parallel scenario");

    int rc = 0;
    compute->callback([&] { rc = run_compute(lambda_text, n_opt, family, format, threads); });
    specialize->callback(
        [&] { rc = run_specialize(lambda_text, n_opt, target, format, threads); });
    verify->callback([&] { rc = run_verify(suite, vp); });
    compare->callback(
        [&] { rc = run_oracle_compare(lambda_text, n_opt, family, threads); });
    trace->callback([&] {
        rc = run_trace_check(s_level, vp.r, lambda_text, mu_text, x_text, t_text, q_text,
                             vp.cutoff, tol > 0 ? tol : 1e-9);
    });
    bench->callback([&] { rc = run_bench(lambda_text, n_opt, reps, threads); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return rc;
}
