#pragma once

// Route-agreement checks for `segrelat verify`. Every check recomputes one
// quantity along independent routes and throws verification_failure on the
// first disagreement.

#include "segrelat/multisym.hpp"
#include "segrelat/poset_oracle.hpp"
#include "segrelat/segre_invariants.hpp"

#include <functional>
#include <future>
#include <string>
#include <vector>

namespace segrelat::cli {

struct Check {
    std::string name;
    std::function<void()> run;
};

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct SuiteLimits {
    int w_nmax, w_tmax;        // scalar w routes
    int beta_nmax;             // characteristic routes, t in {2,3}
    int rank_nmax;             // rank-selection routes, t = 2
    int q_nmax, q_tmax;        // q-side brute force
    int rank_q_nmax;           // rank-selected q brute force, t = 2
    int ps_nmax, ps_tmax;      // principal specialization bridge
    int series_order;          // generating-function inversions
    bool large_posets;         // B_4^(2), B_4(2), B_3(3), B_3(2)^(2)
};

inline SuiteLimits suite_limits(const std::string& suite) {
    if (suite == "small") return {4, 3, 4, 4, 3, 2, 3, 3, 2, 5, false};
    if (suite == "full") return {5, 6, 5, 5, 4, 3, 4, 4, 3, 6, true};
    throw std::invalid_argument("unknown suite '" + suite + "' (expected small or full)");
}

namespace detail {
[[noreturn]] inline void mismatch(const std::string& what) { throw verification_failure(what); }

template <class A, class B>
void expect_equal(const A& a, const B& b, const std::string& what) {
    if (!(a == b)) mismatch(what);
}

inline std::string cell(int n, int t) { return "n=" + std::to_string(n) + ",t=" + std::to_string(t); }
}  // namespace detail

inline std::vector<Check> build_suite(const std::string& suite) {
    using detail::cell;
    using detail::expect_equal;
    const SuiteLimits L = suite_limits(suite);
    std::vector<Check> checks;

    checks.push_back({"w routes agree", [L] {
        Budget budget;
        for (int t = 1; t <= L.w_tmax; ++t)
            for (int n = 0; n <= L.w_nmax; ++n) {
                const Integer w = w_t(n, t, WRoute::recurrence);
                expect_equal(w_t(n, t, WRoute::genfun), w, "genfun route, " + cell(n, t));
                if (n <= 4 && t <= 3) expect_equal(w_t(n, t, WRoute::dimension), w, "dimension route, " + cell(n, t));
                if (tuple_count(n, t) <= budget.tuples)
                    expect_equal(w_t(n, t, WRoute::brute, budget), w, "brute route, " + cell(n, t));
            }
    }});

    checks.push_back({"beta: recurrence = phi_t(e_n) = closed form, S-positive", [L] {
        for (int t = 2; t <= 3; ++t)
            for (int n = 0; n <= L.beta_nmax; ++n) {
                const auto b = beta_t(n, t);
                expect_equal(phi_t(e_to_h(n), t), b, "phi_t(e_n), " + cell(n, t));
                expect_equal(beta_t_closed_form(n, t), b, "closed form, " + cell(n, t));
                if (!b.to_s().all_nonnegative()) detail::mismatch("negative S-coefficient in beta, " + cell(n, t));
                expect_equal(dimension(b), Rational(w_t(n, t)), "dimension of beta, " + cell(n, t));
            }
    }});

    checks.push_back({"rank selection: syt = recurrence = inclusion-exclusion", [L] {
        const int t = 2;
        for (int n = 1; n <= L.rank_nmax; ++n)
            for (const auto& J : RankSet::full(n).subsets()) {
                const auto a = rank_alpha_beta(n, t, J, RankRoute::syt);
                const auto b = rank_alpha_beta(n, t, J, RankRoute::recurrence);
                const auto c = rank_alpha_beta(n, t, J, RankRoute::inclusion_exclusion);
                const std::string where = cell(n, t) + ",J=" + J.to_string();
                expect_equal(b.alpha, a.alpha, "alpha recurrence vs syt, " + where);
                expect_equal(c.alpha, a.alpha, "alpha inclusion-exclusion vs syt, " + where);
                expect_equal(b.beta, a.beta, "beta recurrence vs syt, " + where);
                expect_equal(c.beta, a.beta, "beta inclusion-exclusion vs syt, " + where);
                if (!a.beta.to_s().all_nonnegative()) detail::mismatch("negative S-coefficient, " + where);
                auto sum = MultiSymFunc::uniform(t, n);
                for (const auto& U : J.subsets()) sum += rank_alpha_beta(n, t, U, RankRoute::recurrence).beta;
                expect_equal(sum, a.alpha, "sum of beta(U) over U in J vs alpha(J), " + where);
            }
    }});

    checks.push_back({"W(q): recurrence = brute force, W(1) = w", [L] {
        for (int t = 1; t <= L.q_tmax; ++t)
            for (int n = 0; n <= L.q_nmax; ++n) {
                const QPoly W = W_t_q(n, t, QRoute::recurrence);
                expect_equal(W_t_q(n, t, QRoute::brute), W, "W brute, " + cell(n, t));
                expect_equal(W.eval(1), w_t(n, t), "W(1), " + cell(n, t));
                if (!W.nonnegative()) detail::mismatch("negative coefficient in W, " + cell(n, t));
            }
    }});

    checks.push_back({"rank-selected W(q): brute force = recurrence", [L] {
        const int t = 2;
        for (int n = 1; n <= L.rank_q_nmax; ++n)
            for (const auto& J : RankSet::full(n).subsets()) {
                const std::string where = cell(n, t) + ",J=" + J.to_string();
                const QPoly r = rank_W_t_q(n, t, J, QRoute::recurrence);
                expect_equal(rank_W_t_q(n, t, J, QRoute::brute), r, "rank W brute, " + where);
                expect_equal(Rational(r.eval(1)), dimension(rank_alpha_beta(n, t, J).beta), "rank W(1), " + where);
            }
    }});

    checks.push_back({"principal specialization bridge", [L] {
        for (int t = 1; t <= L.ps_tmax; ++t)
            for (int n = 1; n <= L.ps_nmax; ++n) {
                const QRatNF full{W_t_q(n, t), static_cast<unsigned>(n), static_cast<unsigned>(t)};
                expect_equal(principal_specialization(beta_t(n, t)), full, "ps beta, " + cell(n, t));
                for (const auto& J : RankSet::full(n).subsets()) {
                    const QRatNF rhs{rank_W_t_q(n, t, J), static_cast<unsigned>(n), static_cast<unsigned>(t)};
                    expect_equal(principal_specialization(rank_alpha_beta(n, t, J).beta), rhs,
                                 "ps rank beta, " + cell(n, t) + ",J=" + J.to_string());
                }
                for (int r = 0; r <= n; ++r) {
                    const QRatNF rhs{whitney_q(n, t, r), static_cast<unsigned>(n), static_cast<unsigned>(t)};
                    expect_equal(principal_specialization(whitney_char(n, t, r)), rhs,
                                 "ps Whitney, " + cell(n, t) + ",r=" + std::to_string(r));
                }
            }
    }});

    checks.push_back({"Whitney alternating sum", [L] {
        for (int t = 2; t <= 3; ++t)
            for (int n = 1; n <= L.beta_nmax; ++n) {
                auto sum = MultiSymFunc::uniform(t, n);
                for (int r = 0; r < n; ++r)
                    sum += Rational((n - r + 1) % 2 ? -1 : 1) * whitney_char(n, t, r);
                expect_equal(sum, beta_t(n, t), "Whitney sum, " + cell(n, t));
            }
    }});

    checks.push_back({"generating-function inversions", [L] {
        for (int t = 2; t <= 3; ++t) {
            const auto ws = w_series_inversion(L.series_order, t);
            const auto bs = beta_series_inversion(L.series_order, t);
            for (int n = 0; n <= L.series_order; ++n) {
                expect_equal(ws[static_cast<std::size_t>(n)], w_t(n, t), "w series, " + cell(n, t));
                expect_equal(bs[static_cast<std::size_t>(n)], beta_t(n, t), "beta series, " + cell(n, t));
            }
        }
    }});

    checks.push_back({"poset oracle: Boolean Segre powers", [L] {
        std::vector<std::pair<int, int>> cells{{2, 2}, {3, 2}, {2, 3}};
        if (L.large_posets) cells.insert(cells.end(), {{4, 2}, {3, 3}});
        for (auto [n, t] : cells) {
            const auto P = segre_power(boolean_lattice(n), t);
            const Integer sign = n % 2 ? -1 : 1;
            expect_equal(mobius(P), sign * w_t(n, t), "mobius, " + cell(n, t));
            expect_equal(chain_census(P).decreasing, w_t(n, t), "decreasing chains, " + cell(n, t));
            if (!verify_el(P).pass) detail::mismatch("EL verification, " + cell(n, t));
        }
    }});

    checks.push_back({"poset oracle: subspace lattices", [L] {
        std::vector<std::pair<int, int>> lattices{{2, 2}, {3, 2}};
        if (L.large_posets) lattices.insert(lattices.end(), {{3, 3}, {4, 2}});
        for (auto [n, q] : lattices) {
            const auto P = subspace_lattice(n, q);
            const auto census = chain_census(P);
            Permutation s = Permutation::identity(n);
            do {
                LabelWord word;
                for (int i = 1; i <= n; ++i) word.push_back({s(i)});
                const Integer expect = ipow(Integer(q), static_cast<unsigned>(perm_stats(s).inversions));
                auto it = census.by_word.find(word);
                expect_equal(it == census.by_word.end() ? Integer(0) : it->second, expect,
                             "chain count per word, B_" + std::to_string(n) + "(" + std::to_string(q) + ")");
            } while (s.next());
            if (!verify_el(P).pass) detail::mismatch("EL verification of the subspace lattice");
        }
        const int side = L.large_posets ? 3 : 2;
        const auto P2 = segre_power(subspace_lattice(side, 2), 2);
        const Integer sign = side % 2 ? -1 : 1;
        expect_equal(mobius(P2), sign * W_t_q(side, 2).eval(2), "mobius of subspace Segre square");
        if (!verify_el(P2).pass) detail::mismatch("EL verification of the subspace Segre square");
    }});

    checks.push_back({"poset oracle: repeated-label fixture", [] {
        const auto P = repeated_label_fixture();
        const auto P2 = segre_power(P, 2);
        if (!verify_el(P).pass || !verify_el(P2).pass) detail::mismatch("EL verification of the fixture");
        expect_equal(mobius(P2), Integer(-2), "mobius of the fixture square");
        expect_equal(chain_census(P2).decreasing, Integer(2), "decreasing chains of the fixture square");
    }});

    return checks;
}

/// Runs every check concurrently; results come back in suite order.
inline std::vector<CheckResult> run_suite(const std::vector<Check>& checks) {
    std::vector<std::future<CheckResult>> futures;
    for (const auto& c : checks)
        futures.push_back(std::async(std::launch::async, [&c] {
            try {
                c.run();
                return CheckResult{c.name, true, ""};
            } catch (const verification_failure& e) {
                return CheckResult{c.name, false, e.what()};
            }
        }));
    std::vector<CheckResult> out;
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

}  // namespace segrelat::cli
