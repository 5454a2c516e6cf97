#pragma once

// Slow, independent reference computations. None of these call the library
// routine they are used to check.

#include "segrelat/multisym.hpp"
#include "segrelat/perm_core.hpp"
#include "segrelat/symfunc.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using namespace segrelat;

/// Every sequence of positive parts summing to n, sorted and deduplicated.
inline std::set<std::vector<int>> partitions_brute(int n) {
    std::set<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            auto s = cur;
            std::sort(s.rbegin(), s.rend());
            out.insert(s);
            return;
        }
        for (int p = 1; p <= left; ++p) {
            cur.push_back(p);
            rec(left - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

/// Fill cells in reading order with values 1..l(content), keep row-weak and
/// column-strict fillings, count those with the requested content.
inline long long ssyt_count(const std::vector<int>& shape, const std::vector<int>& content) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < static_cast<int>(shape.size()); ++r)
        for (int c = 0; c < shape[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
    const int maxv = static_cast<int>(content.size());
    std::vector<std::vector<int>> T(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r) T[r].assign(static_cast<std::size_t>(shape[r]), 0);
    std::vector<int> used(static_cast<std::size_t>(maxv + 1), 0);
    long long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            for (int v = 1; v <= maxv; ++v)
                if (used[static_cast<std::size_t>(v)] != content[static_cast<std::size_t>(v - 1)]) return;
            ++count;
            return;
        }
        auto [r, c] = cells[k];
        for (int v = 1; v <= maxv; ++v) {
            if (c > 0 && T[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] > v) continue;
            if (r > 0 && T[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] >= v) continue;
            if (used[static_cast<std::size_t>(v)] == content[static_cast<std::size_t>(v - 1)]) continue;
            T[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            ++used[static_cast<std::size_t>(v)];
            rec(k + 1);
            --used[static_cast<std::size_t>(v)];
        }
        T[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
    };
    rec(0);
    return count;
}

/// Descent masks of all standard tableaux of the shape, by placing a
/// permutation of 1..n into the cells and keeping the standard fillings.
/// Entry i is a descent when i+1 sits in a strictly lower row.
inline std::vector<std::uint64_t> syt_descent_masks(const std::vector<int>& shape) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < static_cast<int>(shape.size()); ++r)
        for (int c = 0; c < shape[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
    const int n = static_cast<int>(cells.size());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::uint64_t> out;
    do {
        std::vector<std::vector<int>> T(shape.size());
        for (std::size_t r = 0; r < shape.size(); ++r) T[r].assign(static_cast<std::size_t>(shape[r]), 0);
        std::vector<int> row_of(static_cast<std::size_t>(n + 1));
        for (int k = 0; k < n; ++k) {
            T[static_cast<std::size_t>(cells[static_cast<std::size_t>(k)].first)][static_cast<std::size_t>(cells[static_cast<std::size_t>(k)].second)] = perm[static_cast<std::size_t>(k)];
            row_of[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = cells[static_cast<std::size_t>(k)].first;
        }
        bool standard = true;
        for (auto [r, c] : cells) {
            if (c > 0 && T[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] > T[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) standard = false;
            if (r > 0 && T[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] > T[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) standard = false;
        }
        if (!standard) continue;
        std::uint64_t m = 0;
        for (int i = 1; i < n; ++i)
            if (row_of[static_cast<std::size_t>(i + 1)] > row_of[static_cast<std::size_t>(i)]) m |= std::uint64_t{1} << (i - 1);
        out.push_back(m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// e_n from e_n = sum_{i<n} (-1)^{n-1-i} e_i h_{n-i}, e_0 = 1.
inline SymFunc e_by_recurrence(int n) {
    std::vector<SymFunc> e{SymFunc::one()};
    for (int m = 1; m <= n; ++m) {
        SymFunc acc(m);
        for (int i = 0; i < m; ++i) {
            const SymFunc term = e[static_cast<std::size_t>(i)] * h_monomial(Partition::row(m - i));
            acc += Rational((m - 1 - i) % 2 ? -1 : 1) * term;
        }
        e.push_back(acc);
    }
    return e[static_cast<std::size_t>(n)];
}

/// det(entry(lambda_i - i + j)) by cofactor expansion along the first row.
/// entry(k) has degree k, entries with k < 0 vanish, zero(d) is the zero of degree d.
template <class T, class Entry, class Zero>
T jacobi_trudi_cofactor(const Partition& lambda, Entry entry, Zero zero, const T& one) {
    std::function<T(std::vector<int>, std::vector<int>, int)> det = [&](std::vector<int> rows, std::vector<int> cols,
                                                                       int deg) -> T {
        if (rows.empty()) return one;
        T total = zero(deg);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const int idx = lambda.part(rows[0] + 1) - (rows[0] + 1) + (cols[k] + 1);
            // every term of a minor has the same degree, so a negative one means the minor vanishes
            if (idx < 0 || deg - idx < 0) continue;
            std::vector<int> r2(rows.begin() + 1, rows.end()), c2 = cols;
            c2.erase(c2.begin() + static_cast<long>(k));
            total += Rational(k % 2 ? -1 : 1) * (entry(idx) * det(r2, c2, deg - idx));
        }
        return total;
    };
    std::vector<int> idx(static_cast<std::size_t>(lambda.length()));
    std::iota(idx.begin(), idx.end(), 0);
    return det(idx, idx, lambda.weight());
}

/// Descent mask of a sequence of t-tuples (not strictly less componentwise).
inline std::uint64_t tuple_word_descents(const std::vector<std::vector<int>>& w) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        bool le = true, ne = false;
        for (std::size_t j = 0; j < w[i].size(); ++j) {
            if (w[i][j] > w[i + 1][j]) le = false;
            if (w[i][j] != w[i + 1][j]) ne = true;
        }
        if (!(le && ne)) m |= std::uint64_t{1} << i;
    }
    return m;
}

}  // namespace oracle
