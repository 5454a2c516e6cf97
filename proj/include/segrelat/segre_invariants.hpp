#pragma once

// Invariants of the t-fold Segre powers of the Boolean lattice B_n and the
// subspace lattice B_n(q). Each invariant is reachable by at least two
// independent routes so that the routes can be cross-checked.

#include "segrelat/arith.hpp"
#include "segrelat/multisym.hpp"
#include "segrelat/perm_core.hpp"
#include "segrelat/qpoly.hpp"
#include "segrelat/symfunc.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace segrelat {

// ---------------------------------------------------------------------------
// Top homology characteristic beta_n^{(t)}

/// beta_n^{(t)} from sum_{i=0}^n (-1)^i beta_i Z_{n-i} = 0 with beta_0 = 1.
inline MultiSymFunc beta_t(int n, int t) {
    if (n < 0 || t < 1) throw std::invalid_argument("beta_t: need n >= 0, t >= 1");
    std::vector<MultiSymFunc> beta{MultiSymFunc::one(t)};
    for (int m = 1; m <= n; ++m) {
        auto next = MultiSymFunc::uniform(t, m);
        for (int i = 0; i < m; ++i) {
            const Rational sign = (m - 1 - i) % 2 ? -1 : 1;
            next += sign * multiply(beta[static_cast<std::size_t>(i)], MultiSymFunc::z_monomial(t, Partition::row(m - i)));
        }
        beta.push_back(std::move(next));
    }
    return beta.back();
}

/// beta_n^{(t)} = sum_lambda c_lambda Z_lambda.
inline MultiSymFunc beta_t_closed_form(int n, int t) {
    auto out = MultiSymFunc::uniform(t, n);
    for (const auto& lambda : partitions_of(n))
        out.add(PartitionTuple(static_cast<std::size_t>(t), lambda), e_coefficient(lambda));
    return out;
}

/// Multiplicity of the irreducible indexed by `mus` in the top homology of B_n^{(t)}:
/// sum_lambda c_lambda prod_j K_{mu^j, lambda}.
inline Integer beta_multiplicity(int n, int t, const PartitionTuple& mus) {
    if (static_cast<int>(mus.size()) != t) throw std::invalid_argument("beta_multiplicity: need exactly t partitions");
    for (const auto& mu : mus)
        if (mu.weight() != n)
            throw std::invalid_argument("beta_multiplicity: partition (" + mu.to_string() + ") is not a partition of " +
                                        std::to_string(n));
    Integer total = 0;
    for (const auto& lambda : partitions_of(n)) {
        Integer term = e_coefficient(lambda);
        for (const auto& mu : mus) {
            term *= kostka(mu, lambda);
            if (term == 0) break;
        }
        total += term;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Generating-function inversion

namespace detail {
inline Rational negated(const Rational& r) { return -r; }
inline MultiSymFunc negated(const MultiSymFunc& f) { return Rational(-1) * f; }
}  // namespace detail

/// Coefficients b_0..b_N of (sum_k a_k u^k)^{-1} for a series with a_0 = 1.
template <class T>
std::vector<T> invert_unit_series(const std::vector<T>& a) {
    std::vector<T> b;
    if (a.empty()) return b;
    b.push_back(a[0]);
    for (std::size_t k = 1; k < a.size(); ++k) {
        T acc = a[1] * b[k - 1];
        for (std::size_t i = 2; i <= k; ++i) acc += a[i] * b[k - i];
        b.push_back(detail::negated(acc));
    }
    return b;
}

/// beta_0..beta_order read off (sum_n (-1)^n Z_n u^n)^{-1}.
inline std::vector<MultiSymFunc> beta_series_inversion(int order, int t) {
    std::vector<MultiSymFunc> a;
    for (int k = 0; k <= order; ++k)
        a.push_back(Rational(k % 2 ? -1 : 1) * MultiSymFunc::z_monomial(t, Partition::row(k)));
    return invert_unit_series(a);
}

/// w_0..w_order from sum w_n z^n / n!^t = 1 / sum (-1)^n z^n / n!^t.
inline std::vector<Integer> w_series_inversion(int order, int t) {
    std::vector<Rational> f;
    for (int k = 0; k <= order; ++k)
        f.emplace_back(Integer(k % 2 ? -1 : 1), tuple_count(k, t));
    auto g = invert_unit_series(f);
    std::vector<Integer> w;
    for (int k = 0; k <= order; ++k) {
        Rational v = g[static_cast<std::size_t>(k)] * Rational(tuple_count(k, t));
        if (!is_integral(v)) throw verification_failure("w series inversion produced a non-integer");
        w.push_back(numerator(v));
    }
    return w;
}

// ---------------------------------------------------------------------------
// Betti numbers w_n^{(t)}

enum class WRoute { recurrence, brute, dimension, genfun };

inline const char* route_name(WRoute r) {
    switch (r) {
        case WRoute::recurrence: return "recurrence";
        case WRoute::brute: return "brute";
        case WRoute::dimension: return "dimension";
        case WRoute::genfun: return "genfun";
    }
    return "?";
}

/// Sum over lambda and t-tuples mu of c_lambda-weighted products f^{mu^j} K_{mu^j,lambda},
/// written with the z_lambda normalization: l! prod_i i^{m_i} / z_lambda = |c_lambda|.
inline Integer w_dimension_identity(int n, int t) {
    const auto shapes = partitions_of(n);
    const auto col = Partition::column(n);
    Rational total = 0;
    for (const auto& lambda : shapes) {
        Integer num = factorial(static_cast<unsigned>(lambda.length()));
        for (int i = 1; i <= lambda.largest(); ++i)
            num *= ipow(Integer(i), static_cast<unsigned>(lambda.multiplicity(i)));
        if ((n - lambda.length()) % 2) num = -num;
        const Rational weight(num, z_lambda(lambda));
        // sum over (mu^1..mu^t) of prod_j f^{mu^j} K_{mu^j,lambda}
        std::vector<Integer> per_alphabet;
        for (const auto& mu : shapes) per_alphabet.push_back(kostka(mu, col) * kostka(mu, lambda));
        std::vector<std::size_t> idx(static_cast<std::size_t>(t), 0);
        Integer inner = 0;
        while (true) {
            Integer prod = 1;
            for (auto i : idx) prod *= per_alphabet[i];
            inner += prod;
            std::size_t j = 0;
            while (j < idx.size() && ++idx[j] == shapes.size()) idx[j++] = 0;
            if (j == idx.size()) break;
        }
        total += weight * Rational(inner);
    }
    if (!is_integral(total)) throw verification_failure("dimension identity produced a non-integer");
    return numerator(total);
}

/// Number of t-tuples of permutations of [n] with no common ascent.
inline Integer w_t(int n, int t, WRoute route = WRoute::recurrence, const Budget& budget = Budget::from_env()) {
    if (n < 0 || t < 1) throw std::invalid_argument("w_t: need n >= 0, t >= 1");
    switch (route) {
        case WRoute::recurrence: {
            std::vector<Integer> w{1};
            for (int m = 1; m <= n; ++m) {
                Integer acc = 0;
                for (int i = 0; i < m; ++i) {
                    Integer term = ipow(binomial(static_cast<unsigned>(m), static_cast<unsigned>(i)), static_cast<unsigned>(t)) *
                                   w[static_cast<std::size_t>(i)];
                    acc += (m - 1 - i) % 2 ? Integer(-term) : term;
                }
                w.push_back(acc);
            }
            return w.back();
        }
        case WRoute::brute:
            return count_tuples_common_ascent(n, t, RankSet::full(n), CommonAscentMode::none_common, budget);
        case WRoute::dimension:
            return w_dimension_identity(n, t);
        case WRoute::genfun:
            return w_series_inversion(n, t).back();
    }
    throw std::invalid_argument("w_t: unknown route");
}

// ---------------------------------------------------------------------------
// Rank selection in B_n^{(t)}

enum class RankRoute { syt, recurrence, inclusion_exclusion };

inline const char* route_name(RankRoute r) {
    switch (r) {
        case RankRoute::syt: return "syt";
        case RankRoute::recurrence: return "recurrence";
        case RankRoute::inclusion_exclusion: return "inclusion-exclusion";
    }
    return "?";
}

struct RankSelected {
    MultiSymFunc alpha;  ///< maximal chains of the rank-selected subposet
    MultiSymFunc beta;   ///< its top homology
};

/// Z-monomial of the composition (j1, j2-j1, ..., n-jr): the chain module of B_n^{(t)}(J).
inline MultiSymFunc chain_monomial(int t, const RankSet& J) {
    std::vector<int> comp = J.composition();
    return MultiSymFunc::z_monomial(t, Partition::from_parts(std::move(comp)));
}

namespace detail {

inline void check_rank_set(int n, const RankSet& J) {
    if (J.ambient() != n && !(n <= 1 && J.empty()))
        throw std::invalid_argument("rank set ambient rank " + std::to_string(J.ambient()) + " does not match n = " +
                                    std::to_string(n));
}

// beta_n(J) + beta_n(J \ {jr}) = beta_{jr}(J \ {jr}) Z_{n-jr}, with beta_n(empty) = Z_n.
inline MultiSymFunc rank_beta_recurrence(int n, int t, const RankSet& J) {
    if (J.empty()) return MultiSymFunc::z_monomial(t, Partition::row(n));
    const int top = J.max();
    const RankSet rest = J.without_max();
    auto lower = rank_beta_recurrence(top, t, rest.restricted_to(top));
    return multiply(lower, MultiSymFunc::z_monomial(t, Partition::row(n - top))) -
           rank_beta_recurrence(n, t, rest);
}

}  // namespace detail

/// (alpha_n^{(t)}(J), beta_n^{(t)}(J)) in the Z-basis.
inline RankSelected rank_alpha_beta(int n, int t, const RankSet& J, RankRoute route = RankRoute::syt) {
    detail::check_rank_set(n, J);
    switch (route) {
        case RankRoute::syt: {
            auto alpha = MultiSymFunc::uniform(t, n);
            auto beta = MultiSymFunc::uniform(t, n);
            for (const auto& lambda : partitions_of(n)) {
                const Integer sub = syt_count_with_descents(lambda, J, DescentMatch::subset);
                if (sub == 0) continue;
                const auto image = phi_t(schur_to_h(lambda), t);
                alpha += Rational(sub) * image;
                const Integer exact = syt_count_with_descents(lambda, J, DescentMatch::exact);
                if (exact != 0) beta += Rational(exact) * image;
            }
            return {alpha, beta};
        }
        case RankRoute::recurrence: {
            auto beta = detail::rank_beta_recurrence(n, t, J);
            auto alpha = MultiSymFunc::uniform(t, n);
            for (const auto& U : J.subsets()) alpha += detail::rank_beta_recurrence(n, t, U);
            return {alpha, beta};
        }
        case RankRoute::inclusion_exclusion: {
            auto beta = MultiSymFunc::uniform(t, n);
            for (const auto& U : J.subsets()) {
                const Rational sign = (J.size() - U.size()) % 2 ? -1 : 1;
                beta += sign * chain_monomial(t, U);
            }
            return {chain_monomial(t, J), beta};
        }
    }
    throw std::invalid_argument("rank_alpha_beta: unknown route");
}

// ---------------------------------------------------------------------------
// q-analogues

/// Gaussian binomial [n, k]_q by the q-Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k].
inline QPoly q_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("q_binomial: need 0 <= k <= n");
    std::vector<QPoly> row{QPoly(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<QPoly> next(static_cast<std::size_t>(m + 1));
        next[0] = 1;
        next[static_cast<std::size_t>(m)] = 1;
        for (int j = 1; j < m; ++j)
            next[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] + QPoly::monomial(static_cast<unsigned>(j)) * row[static_cast<std::size_t>(j)];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

/// q-multinomial [n; parts]_q, an integer polynomial when sum(parts) = n.
inline QPoly q_multinomial(int n, const std::vector<int>& parts) {
    QPoly r = 1;
    int left = n;
    for (int p : parts) {
        r *= q_binomial(left, p);
        left -= p;
    }
    if (left != 0) throw std::invalid_argument("q_multinomial: parts do not sum to n");
    return r;
}

enum class QRoute { recurrence, brute };

inline const char* route_name(QRoute r) { return r == QRoute::recurrence ? "recurrence" : "brute"; }

/// W_n^{(t)}(q) = sum over t-tuples with no common ascent of prod q^{inv}.
inline QPoly W_t_q(int n, int t, QRoute route = QRoute::recurrence, const Budget& budget = Budget::from_env()) {
    if (n < 0 || t < 1) throw std::invalid_argument("W_t_q: need n >= 0, t >= 1");
    if (route == QRoute::brute)
        return count_tuples_common_ascent_q(n, t, RankSet::full(n), CommonAscentMode::none_common, budget);
    std::vector<QPoly> W{QPoly(1)};
    for (int m = 1; m <= n; ++m) {
        QPoly acc;
        for (int i = 0; i < m; ++i) {
            QPoly term = q_binomial(m, i).pow(static_cast<unsigned>(t)) * W[static_cast<std::size_t>(i)];
            if ((m - 1 - i) % 2) acc -= term;
            else acc += term;
        }
        W.push_back(std::move(acc));
    }
    return W.back();
}

namespace detail {
inline QPoly rank_W_recurrence(int n, int t, const RankSet& J) {
    if (J.empty()) return 1;
    const int top = J.max();
    const RankSet rest = J.without_max();
    return q_binomial(n, top).pow(static_cast<unsigned>(t)) * rank_W_recurrence(top, t, rest.restricted_to(top)) -
           rank_W_recurrence(n, t, rest);
}
}  // namespace detail

/// Rank-selected Betti polynomial of B_n^{(t)}(q) restricted to ranks J.
inline QPoly rank_W_t_q(int n, int t, const RankSet& J, QRoute route = QRoute::recurrence,
                        const Budget& budget = Budget::from_env()) {
    detail::check_rank_set(n, J);
    if (route == QRoute::brute)
        return count_tuples_common_ascent_q(n, t, J, CommonAscentMode::exact_complement, budget);
    return detail::rank_W_recurrence(n, t, J);
}

// ---------------------------------------------------------------------------
// Whitney homology

/// Characteristic of the r-th Whitney homology of B_n^{(t)}: beta_r Z_{n-r}.
inline MultiSymFunc whitney_char(int n, int t, int r) {
    if (r < 0 || r > n) throw std::invalid_argument("whitney_char: need 0 <= r <= n");
    return multiply(beta_t(r, t), MultiSymFunc::z_monomial(t, Partition::row(n - r)));
}

/// Dimension of the r-th Whitney homology of B_n(q)^{(t)}: [n,r]_q^t W_r(q).
inline QPoly whitney_q(int n, int t, int r) {
    return q_binomial(n, r).pow(static_cast<unsigned>(t)) * W_t_q(r, t);
}

// ---------------------------------------------------------------------------
// Stable principal specialization

/// Substitutes {1, q, q^2, ...} for every alphabet. Each Z-key contributes
/// prod_j prod_parts ps(h_part); the sum is written over prod_{i=1}^N (1-q^i)^t
/// with N the largest alphabet degree.
inline QRatNF principal_specialization(const MultiSymFunc& F) {
    const auto fz = F.to_z();
    int N = 0;
    for (int d : fz.degrees()) N = std::max(N, d);
    QPoly num;
    for (const auto& [key, c] : fz.terms()) {
        if (!is_integral(c)) throw std::invalid_argument("principal_specialization: non-integer coefficient " + to_decimal(c));
        QPoly term(numerator(c));
        for (const auto& lambda : key) {
            term *= q_multinomial(lambda.weight(), lambda.parts());
            term *= one_minus_q_product(static_cast<unsigned>(lambda.weight()) + 1, static_cast<unsigned>(N), 1);
        }
        num += term;
    }
    return {num, static_cast<unsigned>(N), static_cast<unsigned>(F.t())};
}

}  // namespace segrelat
