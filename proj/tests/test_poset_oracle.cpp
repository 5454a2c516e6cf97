#include "oracles.hpp"

#include "segrelat/poset_oracle.hpp"
#include "segrelat/segre_invariants.hpp"

#include <gtest/gtest.h>

using namespace segrelat;

namespace {
Integer sign_of_rank(int n) { return n % 2 ? -1 : 1; }

LabelWord word_of(std::initializer_list<std::vector<int>> letters) { return LabelWord(letters); }

/// Betti number of the rank selection through the Mobius function.
Integer betti_by_mobius(const LabeledPoset& P, const RankSet& J) {
    const Integer mu = mobius(rank_select(P, J));
    return (J.size() + 1) % 2 ? Integer(-mu) : mu;
}
}  // namespace

TEST(LabeledPoset, RejectsMalformedInput) {
    using E = LabeledPoset::Element;
    EXPECT_THROW(LabeledPoset({}, {}), std::invalid_argument);
    // skipped rank
    EXPECT_THROW(LabeledPoset({E{"a", 0}, E{"b", 2}}, {Cover{0, 1, {}}}), std::invalid_argument);
    // two bottoms
    EXPECT_THROW(LabeledPoset({E{"a", 0}, E{"b", 0}, E{"c", 1}}, {Cover{0, 2, {}}, Cover{1, 2, {}}}),
                 std::invalid_argument);
    // dangling maximal element
    EXPECT_THROW(LabeledPoset({E{"a", 0}, E{"b", 1}, E{"c", 1}, E{"d", 2}}, {Cover{0, 1, {}}, Cover{0, 2, {}}, Cover{1, 3, {}}}),
                 std::invalid_argument);
    // duplicate ids
    EXPECT_THROW(LabeledPoset({E{"a", 0}, E{"a", 1}}, {Cover{0, 1, {}}}), std::invalid_argument);
    // mixed label widths
    EXPECT_THROW(LabeledPoset({E{"a", 0}, E{"b", 1}, E{"c", 1}, E{"d", 2}},
                              {Cover{0, 1, {1}}, Cover{0, 2, {1, 2}}, Cover{1, 3, {1}}, Cover{2, 3, {1}}}),
                 std::invalid_argument);
}

TEST(BooleanLattice, Shape) {
    const auto B2 = boolean_lattice(2);
    EXPECT_EQ(B2.size(), 4);
    EXPECT_EQ(B2.maximal_chain_count(), 2);
    const auto B4 = boolean_lattice(4);
    EXPECT_EQ(B4.size(), 16);
    EXPECT_EQ(B4.rank(), 4);
    EXPECT_THROW(boolean_lattice(7), budget_exceeded);
}

TEST(BooleanLattice, OneChainPerPermutation) {
    const auto census = chain_census(boolean_lattice(4));
    EXPECT_EQ(census.total, 24);
    EXPECT_EQ(census.by_word.size(), 24u);
    Permutation s = Permutation::identity(4);
    do {
        LabelWord w;
        for (int i = 1; i <= 4; ++i) w.push_back({s(i)});
        ASSERT_TRUE(census.by_word.count(w));
        EXPECT_EQ(census.by_word.at(w), 1);
        EXPECT_EQ(word_descent_mask(w), perm_stats(s).descents.mask());
    } while (s.next());
    EXPECT_EQ(chain_census(boolean_lattice(3)).decreasing, 1);
}

TEST(SubspaceLattice, RankProfileAndChains) {
    const auto B = subspace_lattice(3, 2);
    EXPECT_EQ(B.size(), 16);
    std::vector<int> profile;
    for (int r = 0; r <= 3; ++r) profile.push_back(static_cast<int>(B.elements_at_rank(r).size()));
    EXPECT_EQ(profile, (std::vector<int>{1, 7, 7, 1}));
    EXPECT_EQ(B.maximal_chain_count(), 21);
    EXPECT_EQ(mobius(B), -8);
    EXPECT_THROW(subspace_lattice(3, 4), std::invalid_argument);
    EXPECT_THROW(subspace_lattice(3, 1), std::invalid_argument);
}

TEST(SubspaceLattice, LayerSizesAreGaussianBinomials) {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {4, 2}, {3, 5}}) {
        const auto B = subspace_lattice(n, q);
        for (int r = 0; r <= n; ++r)
            EXPECT_EQ(Integer(B.elements_at_rank(r).size()), q_binomial(n, r).eval(q)) << n << "," << q << "," << r;
    }
    EXPECT_EQ(subspace_lattice(4, 2).elements_at_rank(2).size(), 35u);
}

TEST(SubspaceLattice, ChainsPerWordAreInversionPowers) {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}}) {
        const auto census = chain_census(subspace_lattice(n, q));
        Permutation s = Permutation::identity(n);
        Integer total = 0;
        do {
            LabelWord w;
            for (int i = 1; i <= n; ++i) w.push_back({s(i)});
            const Integer expect = ipow(Integer(q), static_cast<unsigned>(perm_stats(s).inversions));
            ASSERT_TRUE(census.by_word.count(w));
            EXPECT_EQ(census.by_word.at(w), expect);
            total += expect;
        } while (s.next());
        EXPECT_EQ(census.total, total);
        EXPECT_EQ(census.by_word.size(), static_cast<std::size_t>(factorial(static_cast<unsigned>(n))));
    }
}

TEST(SegrePower, IdentityAndLayers) {
    const auto B3 = boolean_lattice(3);
    EXPECT_EQ(write_poset(segre_power(B3, 1)), write_poset(B3));
    const auto P = segre_power(B3, 3);
    for (int r = 0; r <= 3; ++r)
        EXPECT_EQ(P.elements_at_rank(r).size(), static_cast<std::size_t>(std::pow(B3.elements_at_rank(r).size(), 3)));
    EXPECT_EQ(P.label_width(), 3);
    EXPECT_THROW(segre_power(B3, 0), std::invalid_argument);
    Budget tiny;
    tiny.elements = 50;
    EXPECT_THROW(segre_power(boolean_lattice(4), 2, tiny), budget_exceeded);
}

TEST(SegrePower, ChainsCAndD) {
    const auto census = chain_census(segre_power(boolean_lattice(4), 3));
    EXPECT_EQ(census.total, 13824);
    const auto C = word_of({{1, 3, 3}, {2, 2, 1}, {3, 1, 4}, {4, 4, 2}});
    const auto D = word_of({{1, 3, 3}, {2, 4, 4}, {3, 1, 1}, {4, 2, 2}});
    ASSERT_TRUE(census.by_word.count(C));
    ASSERT_TRUE(census.by_word.count(D));
    EXPECT_EQ(word_descent_mask(C), RankSet::full_mask(4));  // no ascents
    EXPECT_EQ(RankSet::from_mask(4, word_descent_mask(D)).complement(), RankSet(4, {1, 3}));
}

TEST(SegrePower, CensusFactorsThroughComponentAscents) {
    // a chain of P^(t) is a tuple of chains; its descent set is the complement
    // of the intersection of the component ascent sets
    for (const auto& base : {boolean_lattice(4), subspace_lattice(3, 2)}) {
        const auto census = chain_census(segre_power(base, 2));
        const int n = base.rank();
        for (const auto& [word, count] : census.by_word) {
            std::uint64_t common = RankSet::full_mask(n);
            for (int j = 0; j < 2; ++j) {
                LabelWord component;
                for (const auto& letter : word) component.push_back({letter[static_cast<std::size_t>(j)]});
                common &= ~word_descent_mask(component) & RankSet::full_mask(n);
            }
            std::vector<std::vector<int>> raw(word.begin(), word.end());
            EXPECT_EQ(word_descent_mask(word), RankSet::full_mask(n) & ~common);
            EXPECT_EQ(oracle::tuple_word_descents(raw), word_descent_mask(word));
        }
    }
}

TEST(VerifyEl, PassesOnStandardLabelings) {
    EXPECT_TRUE(verify_el(boolean_lattice(4)).pass);
    EXPECT_TRUE(verify_el(subspace_lattice(3, 2)).pass);
    EXPECT_TRUE(verify_el(segre_power(subspace_lattice(3, 2), 2)).pass);
    EXPECT_TRUE(verify_el(segre_power(boolean_lattice(3), 3)).pass);
    const auto P = repeated_label_fixture();
    EXPECT_TRUE(verify_el(P).pass);
    EXPECT_TRUE(verify_el(segre_power(P, 2)).pass);
}

TEST(VerifyEl, ReportsWitnessOnFailure) {
    // relabel B_2 so that both chains increase
    using E = LabeledPoset::Element;
    LabeledPoset bad({E{"0", 0}, E{"a", 1}, E{"b", 1}, E{"1", 2}},
                     {Cover{0, 1, {1}}, Cover{0, 2, {1}}, Cover{1, 3, {2}}, Cover{2, 3, {2}}});
    const auto r = verify_el(bad);
    EXPECT_FALSE(r.pass);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(bad.name(r.witness->first), "0");
    EXPECT_EQ(bad.name(r.witness->second), "1");

    // unique increasing chain that is not lexicographically first
    LabeledPoset late({E{"0", 0}, E{"a", 1}, E{"b", 1}, E{"1", 2}},
                      {Cover{0, 1, {2}}, Cover{0, 2, {1}}, Cover{1, 3, {3}}, Cover{2, 3, {1}}});
    EXPECT_FALSE(verify_el(late).pass);
}

TEST(Fixture, RepeatedLabels) {
    const auto P = repeated_label_fixture();
    const auto census = chain_census(P);
    std::set<std::string> words;
    for (const auto& [w, c] : census.by_word) {
        std::string s;
        for (const auto& l : w) s += std::to_string(l[0]);
        words.insert(s);
        EXPECT_EQ(c, 1);
    }
    EXPECT_EQ(words, (std::set<std::string>{"123", "132", "212"}));
    const auto P2 = segre_power(P, 2);
    EXPECT_EQ(mobius(P2), -2);
    const auto c2 = chain_census(P2);
    EXPECT_EQ(c2.decreasing, 2);
    EXPECT_EQ(write_poset(named_fixture("example-2-7-square")), write_poset(P2));
}

TEST(Mobius, BooleanSegrePowers) {
    for (auto [n, t] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}}) {
        const auto P = segre_power(boolean_lattice(n), t);
        EXPECT_EQ(mobius(P), sign_of_rank(n) * w_t(n, t)) << n << "," << t;
        EXPECT_EQ(chain_census(P).decreasing, w_t(n, t));
    }
    EXPECT_EQ(chain_census(segre_power(boolean_lattice(3), 2)).decreasing, 19);
}

TEST(Mobius, SubspaceSegreSquares) {
    EXPECT_EQ(mobius(segre_power(subspace_lattice(2, 2), 2)), 8);
    EXPECT_EQ(mobius(segre_power(subspace_lattice(3, 2), 2)), -W_t_q(3, 2).eval(2));
}

TEST(Mobius, IntervalsOfBooleanLattice) {
    const auto B = boolean_lattice(4);
    const OrderIndex order(B);
    for (int x = 0; x < B.size(); ++x)
        for (int y = 0; y < B.size(); ++y) {
            const Integer mu = mobius(B, x, y);
            if (!order.leq(x, y)) EXPECT_EQ(mu, 0);
            else EXPECT_EQ(mu, sign_of_rank(B.rank(y) - B.rank(x)));
        }
}

TEST(RankSelect, Basics) {
    const auto B = boolean_lattice(3);
    EXPECT_EQ(rank_select(B, RankSet::full(3)).size(), B.size());
    const auto chain = rank_select(B, RankSet::none(3));
    EXPECT_EQ(chain.size(), 2);
    EXPECT_EQ(mobius(chain), -1);
    EXPECT_EQ(betti_by_mobius(B, RankSet::none(3)), 1);
    EXPECT_THROW(rank_select(B, RankSet::full(4)), std::invalid_argument);
}

TEST(RankSelect, SubspaceSquareMatchesRankSelectedPolynomial) {
    const auto P = segre_power(subspace_lattice(3, 2), 2);
    for (const auto& J : RankSet::full(3).subsets())
        EXPECT_EQ(betti_by_mobius(P, J), rank_W_t_q(3, 2, J).eval(2)) << J.to_string();
}

TEST(ElConsequences, DescentCountsMatchRankSelectedMobius) {
    for (const auto& P : {segre_power(boolean_lattice(3), 2), subspace_lattice(3, 2), segre_power(boolean_lattice(4), 2),
                          repeated_label_fixture(), segre_power(repeated_label_fixture(), 2)}) {
        ASSERT_TRUE(verify_el(P).pass);
        const auto census = chain_census(P);
        EXPECT_EQ(census.decreasing, sign_of_rank(P.rank()) * mobius(P));
        for (const auto& J : RankSet::full(P.rank()).subsets()) EXPECT_EQ(census.with_descents(J), betti_by_mobius(P, J));
    }
}

TEST(ElConsequences, UniformIntervalRecurrence) {
    // beta(J) + beta(J \ {jr}) = (#rank jr elements) * beta_{[0, x0]}(J \ {jr})
    for (const auto& P : {segre_power(boolean_lattice(4), 2), subspace_lattice(3, 3), segre_power(subspace_lattice(3, 2), 2)}) {
        const int n = P.rank();
        for (const auto& J : RankSet::full(n).subsets()) {
            if (J.empty()) continue;
            const int top = J.max();
            const RankSet rest = J.without_max();
            const auto layer = P.elements_at_rank(top);
            const auto lower = interval(P, P.bottom(), layer.front());
            const Integer rhs = Integer(layer.size()) * betti_by_mobius(lower, rest.restricted_to(top));
            EXPECT_EQ(betti_by_mobius(P, J) + betti_by_mobius(P, rest), rhs) << J.to_string();
        }
        // full-poset form
        Integer s = 0;
        for (int i = 0; i < n; ++i) {
            const auto layer = P.elements_at_rank(i);
            s += Integer(layer.size()) * mobius(interval(P, P.bottom(), layer.front()));
        }
        EXPECT_EQ(mobius(P), -s);
    }
}

TEST(ChainCensus, BudgetIsEnforced) {
    Budget tiny;
    tiny.chains = 10;
    EXPECT_THROW(chain_census(boolean_lattice(4), tiny), budget_exceeded);
    EXPECT_THROW(verify_el(boolean_lattice(4), tiny), budget_exceeded);
}

TEST(TextFormat, RoundTripIsByteExact) {
    for (const auto& P : {repeated_label_fixture(), segre_power(repeated_label_fixture(), 2), subspace_lattice(2, 3),
                          rank_select(boolean_lattice(3), RankSet(3, {2}))}) {
        const std::string text = write_poset(P);
        EXPECT_EQ(write_poset(read_poset(text)), text);
    }
    const std::string text = "poset v1\nelement 0 0\nelement a 1\nelement 1 2\ncover 0 a 1\ncover a 1 2\n";
    EXPECT_EQ(write_poset(read_poset(text)), text);
}

TEST(TextFormat, RejectsMalformedFiles) {
    EXPECT_THROW(read_poset("poset v2\n"), std::invalid_argument);
    EXPECT_THROW(read_poset("poset v1\nelement a x\n"), std::invalid_argument);
    EXPECT_THROW(read_poset("poset v1\nelement a 0\ncover a b\n"), std::invalid_argument);
    EXPECT_THROW(read_poset("poset v1\nedge a b\n"), std::invalid_argument);
    EXPECT_THROW(read_poset(""), std::invalid_argument);
}

TEST(Fixtures, Names) {
    EXPECT_EQ(named_fixture("boolean-3").size(), 8);
    EXPECT_EQ(named_fixture("boolean-3-t2").size(), 1 + 9 + 9 + 1);
    EXPECT_EQ(named_fixture("subspace-2-2").size(), 5);
    EXPECT_EQ(named_fixture("subspace-2-2-t2").size(), 11);
    EXPECT_THROW(named_fixture("lattice-3"), std::invalid_argument);
    EXPECT_THROW(named_fixture("boolean-x"), std::invalid_argument);
}
