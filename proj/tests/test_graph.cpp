#include <doctest.h>

#include <random>

#include "galepoly/graph.hpp"
#include "test_util.hpp"

using namespace galepoly;
using testutil::edges_to_counts;
using testutil::poly;

namespace {

SubMultigraph unit_graph(int k, std::initializer_list<std::pair<int, int>> edges) {
    return SubMultigraph(MultMatrix::all_ones(k), edges_to_counts(k, edges));
}

// independent nakedness checker: search a directed cycle through each edge
bool naked_by_cycle_search(const SubMultigraph& g) {
    SupportGraph s = g.support();
    for (int v = 1; v <= s.k; ++v) {
        VertMask m = s.out[v];
        while (m) {
            int w = __builtin_ctz(m);
            m &= m - 1;
            if (!(reach_to(s, v) >> w & 1)) return false;  // no path w -> v
        }
    }
    return true;
}

}  // namespace

TEST_CASE("support_scc") {
    auto comps = support_scc(unit_graph(3, {{1, 2}, {2, 1}, {2, 3}}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{1, 2});
    CHECK(comps[1] == std::vector<int>{3});
    CHECK(support_scc(SubMultigraph(MultMatrix::all_ones(3))).size() == 3);
    CHECK(support_scc(unit_graph(3, {{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}})).size() == 1);
}

TEST_CASE("naked_core") {
    SubMultigraph acyclic = unit_graph(3, {{2, 1}, {3, 2}});
    CHECK(naked_core(acyclic).edge_total() == 0);
    SubMultigraph g = unit_graph(3, {{1, 2}, {2, 1}, {2, 3}});
    CHECK(naked_core(g) == unit_graph(3, {{1, 2}, {2, 1}}));
    SubMultigraph full = unit_graph(3, {{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}});
    CHECK(naked_core(full) == full);
}

TEST_CASE("is_acyclic") {
    MultMatrix r2(2, {2});
    SubMultigraph two_copies(r2, std::vector<int>{2, 0});
    CHECK(is_acyclic(two_copies));
    CHECK_FALSE(is_acyclic(unit_graph(2, {{1, 2}, {2, 1}})));
    CHECK(is_acyclic(SubMultigraph(MultMatrix::all_ones(3))));
}

TEST_CASE("is_rooted_at") {
    CHECK(is_rooted_at(unit_graph(3, {{2, 1}, {3, 1}}), 1));
    CHECK_FALSE(is_rooted_at(unit_graph(3, {{2, 1}}), 1));
    CHECK(is_rooted_at(SubMultigraph(MultMatrix::all_ones(1)), 1));
}

TEST_CASE("component_count") {
    CHECK(component_count(SubMultigraph(MultMatrix::all_ones(3))) == 3);
    CHECK(component_count(unit_graph(3, {{1, 2}, {2, 1}})) == 2);
    CHECK(component_count(unit_graph(3, {{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}})) == 1);
}

TEST_CASE("naked_core idempotent and characterizes nakedness") {
    for (int k = 3; k <= 4; ++k) {
        MultMatrix R = MultMatrix::all_ones(k);
        int pairs = opair_count(k);
        std::uint64_t limit = std::uint64_t(1) << pairs;
        std::uint64_t step = k == 3 ? 1 : 37;  // all for K3, a lattice sample for K4
        for (std::uint64_t m = 0; m < limit; m += step) {
            std::vector<int> c(pairs, 0);
            for (int s = 0; s < pairs; ++s) c[s] = m >> s & 1;
            SubMultigraph g(R, c);
            SubMultigraph core = naked_core(g);
            CHECK(naked_core(core) == core);
            bool fixed = core == g;
            CHECK(fixed == naked_by_cycle_search(g));
            CHECK(fixed == is_naked(g.support()));
        }
    }
}

TEST_CASE("rooted implies weakly connected") {
    for (int k = 3; k <= 4; ++k) {
        MultMatrix R = MultMatrix::all_ones(k);
        int pairs = opair_count(k);
        for (std::uint64_t m = 0; m < (std::uint64_t(1) << pairs); ++m) {
            if (k == 4 && m % 11) continue;
            std::vector<int> c(pairs, 0);
            for (int s = 0; s < pairs; ++s) c[s] = m >> s & 1;
            SubMultigraph g(R, c);
            if (is_rooted_at(g, 1)) CHECK(component_count(g) == 1);
        }
    }
}

TEST_CASE("count_weighted matches figure counts") {
    MultMatrix R = MultMatrix::all_ones(3);
    AcyclicRootedPred pred;
    EdgeMask no_root_out = ~EdgeMask(0);
    for (int j = 2; j <= 3; ++j) no_root_out &= ~(EdgeMask(1) << opair_index(3, 1, j));
    IntPoly counts = count_weighted(R, pred, 1, {}, no_root_out);
    CHECK(counts.coeff(2) == 3);
    CHECK(counts.coeff(3) == 2);
    CHECK(counts.coeff(0) == 0);
    CHECK(counts.coeff(1) == 0);
    CHECK(counts.degree() == 3);
}

TEST_CASE("count_weighted trivial cases") {
    struct FalsePred : SupportPredicate {
        bool test(const SupportGraph&) const override { return false; }
    } none;
    CHECK(count_weighted(MultMatrix::all_ones(3), none).is_zero());

    MultMatrix R2 = MultMatrix::all_ones(2);
    AcyclicRootedPred pred;
    CHECK(count_weighted(R2, pred) == poly({0, 1}));  // single graph {2->1}
}

TEST_CASE("unit multiplicities reduce to plain subset enumeration") {
    MultMatrix R = MultMatrix::all_ones(3);
    RootedCyclePred pred;
    IntPoly fast = count_weighted(R, pred);
    std::vector<Int> direct(opair_count(3) + 1, Int(0));
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << opair_count(3)); ++m) {
        SupportGraph g = SupportGraph::from_mask(3, m);
        if (pred.test(g)) direct[g.edge_count()] += 1;
    }
    CHECK(fast == IntPoly(std::move(direct)));
}

TEST_CASE("fast path equals brute force oracle") {
    std::mt19937_64 rng(2024);
    AcyclicRootedPred acyclic;
    RootedCyclePred cyclic;
    NakedPred naked;
    const SupportPredicate* preds[] = {&acyclic, &cyclic, &naked};
    for (int trial = 0; trial < 12; ++trial) {
        int k = 2 + static_cast<int>(rng() % 3);
        MultMatrix R = testutil::random_instance(rng, k, 2);
        EdgeMask allowed = ~EdgeMask(0);
        if (trial % 3 == 0) allowed = rng();  // random restriction
        for (const SupportPredicate* p : preds)
            for (int floor = 0; floor <= 1; ++floor) {
                IntPoly fast = count_weighted(R, *p, floor, {}, allowed);
                IntPoly brute = count_weighted_bruteforce(R, *p, floor, {}, allowed);
                CHECK(fast == brute);
            }
    }
}

TEST_CASE("parallel run is bitwise identical") {
    MultMatrix R(4, {2, 1, 2, 1, 2, 1});
    RootedCyclePred pred;
    EnumOptions seq, par;
    par.jobs = 4;
    CHECK(count_weighted(R, pred, 1, seq) == count_weighted(R, pred, 1, par));
}

TEST_CASE("budget errors") {
    MultMatrix R = MultMatrix::all_ones(4);
    RootedCyclePred pred;
    EnumOptions tiny;
    tiny.budget = 10;
    CHECK_THROWS_AS(count_weighted(R, pred, 1, tiny), BudgetExceeded);
    MultMatrix big(9, std::vector<int>(36, 1));
    CHECK_THROWS_AS(count_weighted(big, pred), InstanceTooLarge);
}

TEST_CASE("multigraph validation") {
    CHECK_THROWS_AS(MultMatrix(3, {1, 1}), InvalidInput);
    CHECK_THROWS_AS(MultMatrix(3, {1, 0, 1}), InvalidInput);
    CHECK_THROWS_AS(SubMultigraph(MultMatrix::all_ones(2), std::vector<int>{2, 0}), InvalidInput);
}
