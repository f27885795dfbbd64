#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "galepoly/errors.hpp"
#include "galepoly/poly.hpp"

namespace galepoly {

/*
 * Directed multigraph layer.
 *
 * Vertices are 1-based throughout. Ordered pairs (i,j), i != j, are encoded
 * in a fixed slot order: unordered pairs {i<j} in lexicographic order, slot
 * 2u for the edge i->j and slot 2u+1 for j->i. Support graphs (the simple
 * digraph underlying a multigraph) are bitmasks over these slots, which caps
 * enumeration kernels at k(k-1) <= 64, i.e. k <= 8. Structural predicates on
 * counted multigraphs work up to k = 16.
 */

inline int upair_count(int k) { return k * (k - 1) / 2; }
inline int opair_count(int k) { return k * (k - 1); }

// Index of the unordered pair {i,j}, i < j, in lexicographic order.
inline int upair_index(int k, int i, int j) {
    return (i - 1) * (2 * k - i) / 2 + (j - i - 1);
}

inline int opair_index(int k, int from, int to) {
    int i = from < to ? from : to;
    int j = from < to ? to : from;
    return 2 * upair_index(k, i, j) + (from < to ? 0 : 1);
}

std::pair<int, int> opair_vertices(int k, int slot);  // (from, to)

constexpr int kMaxVertices = 16;
constexpr int kMaxEnumVertices = 8;  // edge bitmasks require k(k-1) <= 64

using EdgeMask = std::uint64_t;
using VertMask = std::uint32_t;  // bit v = vertex v (1-based; bit 0 unused)

inline VertMask all_vertices(int k) { return ((VertMask(1) << k) - 1) << 1; }

// Simple digraph on {1..k} kept both as an edge-slot mask and as per-vertex
// out-neighbour masks.
struct SupportGraph {
    int k = 0;
    EdgeMask edges = 0;
    std::array<VertMask, kMaxVertices + 1> out{};

    explicit SupportGraph(int k_ = 0) : k(k_) {}
    static SupportGraph from_mask(int k, EdgeMask m);

    bool has(int from, int to) const { return out[from] >> to & 1; }
    void add(int from, int to) {
        edges |= EdgeMask(1) << opair_index(k, from, to);
        out[from] |= VertMask(1) << to;
    }
    void remove(int from, int to) {
        edges &= ~(EdgeMask(1) << opair_index(k, from, to));
        out[from] &= ~(VertMask(1) << to);
    }
    int edge_count() const { return __builtin_popcountll(edges); }
};

// Vertices that can reach `target` by a directed path (target included).
VertMask reach_to(const SupportGraph& g, int target);
bool is_rooted_at(const SupportGraph& g, int v);
bool has_directed_cycle(const SupportGraph& g);
// scc[v] = id of v's strongly connected component, ids in order of the
// smallest vertex; returns the number of components.
int scc_ids(const SupportGraph& g, std::array<int, kMaxVertices + 1>& scc);
int weak_component_count(const SupportGraph& g);
// Every edge joins two vertices of one strongly connected component.
bool is_naked(const SupportGraph& g);

/*
 * Symmetric positive multiplicities r_ij on the complete graph on k
 * labelled vertices: the problem instance. n = 2 * sum r_ij is the total
 * number of edge copies of the complete multigraph.
 */
class MultMatrix {
public:
    MultMatrix(int k, std::vector<int> upper);
    static MultMatrix all_ones(int k);

    int k() const { return k_; }
    int r(int i, int j) const { return upper_[upair_index(k_, std::min(i, j), std::max(i, j))]; }
    const std::vector<int>& upper() const { return upper_; }
    long long pair_sum() const;               // sum_{i<j} r_ij
    long long total_copies() const { return 2 * pair_sum(); }  // n
    int dim() const { return static_cast<int>(total_copies()) - k_; }  // dim of the dual polytope

    // Instance induced on a subset of vertices (ascending), relabelled 1..m.
    MultMatrix induced(const std::vector<int>& verts) const;

    bool operator==(const MultMatrix& o) const { return k_ == o.k_ && upper_ == o.upper_; }
    std::string key() const;

private:
    int k_;
    std::vector<int> upper_;  // unordered pairs, lex order
};

/*
 * Sub-multigraph of the complete multigraph K_k(R): a copy count for every
 * ordered pair, 0 <= c_ij <= r_ij. Parallel copies are never labelled
 * individually; labelled-subgraph counts are recovered with binomial
 * weights.
 */
class SubMultigraph {
public:
    explicit SubMultigraph(MultMatrix R);
    SubMultigraph(MultMatrix R, std::vector<int> counts);

    const MultMatrix& parent() const { return R_; }
    int k() const { return R_.k(); }
    int count(int from, int to) const { return c_[opair_index(R_.k(), from, to)]; }
    void set_count(int from, int to, int c);
    const std::vector<int>& counts() const { return c_; }
    long long edge_total() const;  // e(G) = sum of counts
    SupportGraph support() const;

    bool operator==(const SubMultigraph& o) const { return R_ == o.R_ && c_ == o.c_; }

private:
    MultMatrix R_;
    std::vector<int> c_;  // by ordered-pair slot
};

std::vector<std::vector<int>> support_scc(const SubMultigraph& g);
SubMultigraph naked_core(const SubMultigraph& g);
bool is_acyclic(const SubMultigraph& g);
bool is_rooted_at(const SubMultigraph& g, int v);
int component_count(const SubMultigraph& g);

/*
 * Weighted support enumeration.
 *
 * count_weighted sums, over all support graphs S inside `allowed_pairs`
 * satisfying the predicate, the product over the edges of S of
 * sum_{c=floor..r_ij} C(r_ij, c) t^c. The coefficient of t^e is then the
 * number of labelled sub-multigraphs with e edge copies whose support
 * satisfies the predicate (for floor = 1).
 *
 * The fast path walks unordered pairs with a four-way branch (absent, ->,
 * <-, both) and prunes through the predicate's dead() hook; the brute-force
 * variant iterates every support mask directly and exists as an oracle.
 */
class SupportPredicate {
public:
    virtual ~SupportPredicate() = default;
    virtual bool test(const SupportGraph& g) const = 0;
    // Conservative prune: true only if no completion can pass test().
    // `partial` holds the decided edges, `potential` additionally every
    // undecided allowed edge.
    virtual bool dead(const SupportGraph& partial, const SupportGraph& potential) const {
        (void)partial;
        (void)potential;
        return false;
    }
};

// acyclic and rooted at vertex 1
struct AcyclicRootedPred : SupportPredicate {
    bool test(const SupportGraph& g) const override;
    bool dead(const SupportGraph& partial, const SupportGraph& potential) const override;
};

// rooted at vertex 1 with at least one directed cycle
struct RootedCyclePred : SupportPredicate {
    bool test(const SupportGraph& g) const override;
    bool dead(const SupportGraph& partial, const SupportGraph& potential) const override;
};

struct NakedPred : SupportPredicate {
    bool test(const SupportGraph& g) const override;
    bool dead(const SupportGraph& partial, const SupportGraph& potential) const override;
};

IntPoly count_weighted(const MultMatrix& R, const SupportPredicate& pred, int edge_floor = 1,
                       const EnumOptions& opts = {}, EdgeMask allowed_pairs = ~EdgeMask(0));
IntPoly count_weighted_bruteforce(const MultMatrix& R, const SupportPredicate& pred,
                                  int edge_floor = 1, const EnumOptions& opts = {},
                                  EdgeMask allowed_pairs = ~EdgeMask(0));

// Support enumeration with a callback at every accepted leaf; shared by the
// counting kernel and the face/fiber machinery. The callback receives the
// completed support graph. Node count is charged against opts.budget.
void for_each_support(const MultMatrix& R, const SupportPredicate& pred, const EnumOptions& opts,
                      EdgeMask allowed_pairs, const std::function<void(const SupportGraph&)>& leaf);

}  // namespace galepoly
