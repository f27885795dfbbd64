#include "galepoly/betti.hpp"

#include <map>
#include <vector>

namespace galepoly {

namespace {

// strips the mandatory minimum edge count so that coefficient i matches the
// hat-index convention
IntPoly drop_low_degrees(const IntPoly& p, int low) {
    if (p.is_zero()) return p;
    for (int i = 0; i < low; ++i)
        if (p.coeff(i) != 0) throw CrossCheckFailure("unexpected low-degree subgraph count");
    std::vector<Int> c;
    for (int i = low; i <= p.degree(); ++i) c.push_back(p.coeff(i));
    return IntPoly(std::move(c));
}

EdgeMask pairs_without_root_out_edges(int k) {
    EdgeMask m = ~EdgeMask(0);
    for (int j = 2; j <= k; ++j) m &= ~(EdgeMask(1) << opair_index(k, 1, j));
    return m;
}

}  // namespace

IntPoly g_hat(const MultMatrix& R, const EnumOptions& opts) {
    AcyclicRootedPred pred;
    IntPoly counts = count_weighted(R, pred, 1, opts, pairs_without_root_out_edges(R.k()));
    return drop_low_degrees(counts, R.k() - 1);
}

IntPoly h_hat(const MultMatrix& R, const EnumOptions& opts) {
    if (R.k() < 2) throw InvalidInput("h_hat needs at least two vertices");
    RootedCyclePred pred;
    IntPoly counts = count_weighted(R, pred, 1, opts);
    return drop_low_degrees(counts, R.k());
}

IntPoly g_poly(const MultMatrix& R, const EnumOptions& opts) {
    return shift(g_hat(R, opts), Int(-1));
}

IntPoly h_poly(const MultMatrix& R, const EnumOptions& opts) {
    IntPoly h = shift(h_hat(R, opts), Int(-1));
    if (h.is_zero() || h.degree() != R.dim())
        throw CrossCheckFailure("h-polynomial degree differs from the polytope dimension");
    return h;
}

namespace {

using SubsetMemo = std::map<std::uint32_t, IntPoly>;

int popcount(std::uint32_t m) { return __builtin_popcount(m); }

std::vector<int> mask_vertices(std::uint32_t m) {
    std::vector<int> v;
    while (m) {
        v.push_back(__builtin_ctz(m));
        m &= m - 1;
    }
    return v;
}

const IntPoly& g_rec(const MultMatrix& R, std::uint32_t subset, SubsetMemo& memo) {
    auto it = memo.find(subset);
    if (it != memo.end()) return it->second;
    IntPoly res;
    if (popcount(subset) == 1) {
        res = IntPoly::constant(1);
    } else {
        std::uint32_t nonroot = subset & ~(subset & -subset);  // everything above the least vertex
        // the least vertex of the subset acts as the root
        for (std::uint32_t J = nonroot; J; J = (J - 1) & nonroot) {
            std::uint32_t rest = subset & ~J;
            IntPoly prod = IntPoly::constant(1);
            for (int j : mask_vertices(J)) {
                long m = 0;
                for (int i : mask_vertices(rest)) m += R.r(i, j);
                prod *= p_poly(m);
            }
            IntPoly term = prod * g_rec(R, rest, memo);
            if (popcount(J) % 2 == 1)
                res += term;
            else
                res -= term;
        }
    }
    return memo.emplace(subset, std::move(res)).first->second;
}

// set partitions of `elems` with every block of size >= 2 and at least two
// blocks; assembled by assigning elements in order, pruning states whose
// singleton blocks can no longer be filled
void for_each_partition(const std::vector<int>& elems,
                        const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    std::vector<std::vector<int>> blocks;
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int singletons) {
        int remaining = static_cast<int>(elems.size() - idx);
        if (singletons > remaining) return;
        if (idx == elems.size()) {
            if (blocks.size() >= 2) fn(blocks);
            return;
        }
        int e = elems[idx];
        // index loop: deeper levels may grow `blocks`, which would invalidate
        // range-for references
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
            blocks[bi].push_back(e);
            rec(idx + 1, singletons - (blocks[bi].size() == 2 ? 1 : 0));
            blocks[bi].pop_back();
        }
        blocks.push_back({e});
        rec(idx + 1, singletons + 1);
        blocks.pop_back();
    };
    rec(0, 0);
}

const IntPoly& h_rec(const MultMatrix& R, std::uint32_t subset, SubsetMemo& memo) {
    auto it = memo.find(subset);
    if (it != memo.end()) return it->second;
    IntPoly res;
    std::vector<int> verts = mask_vertices(subset);
    if (verts.size() == 1) {
        res = IntPoly::constant(1);
    } else {
        res = IntPoly::constant(1);
        for (int i : verts) {
            long ri = 0;
            for (int j : verts)
                if (j != i) ri += R.r(i, j);
            res *= p_poly(ri);
        }
        for_each_partition(verts, [&](const std::vector<std::vector<int>>& blocks) {
            long cross = 0;
            for (std::size_t a = 0; a < blocks.size(); ++a)
                for (std::size_t b = a + 1; b < blocks.size(); ++b)
                    for (int i : blocks[a])
                        for (int j : blocks[b]) cross += R.r(i, j);
            IntPoly term = IntPoly::monomial(static_cast<int>(cross));
            for (const auto& b : blocks) {
                std::uint32_t bm = 0;
                for (int v : b) bm |= std::uint32_t(1) << v;
                term *= h_rec(R, bm, memo);
            }
            res -= term;
        });
    }
    return memo.emplace(subset, std::move(res)).first->second;
}

}  // namespace

IntPoly g_poly_recursive(const MultMatrix& R) {
    SubsetMemo memo;
    std::uint32_t full = 0;
    for (int v = 1; v <= R.k(); ++v) full |= std::uint32_t(1) << v;
    return g_rec(R, full, memo);
}

IntPoly h_poly_recursive(const MultMatrix& R) {
    if (R.k() < 2) throw InvalidInput("h_poly_recursive needs at least two vertices");
    SubsetMemo memo;
    std::uint32_t full = 0;
    for (int v = 1; v <= R.k(); ++v) full |= std::uint32_t(1) << v;
    return h_rec(R, full, memo);
}

IntPoly intro_g(int k) {
    if (k < 1) throw InvalidInput("k must be positive");
    std::vector<IntPoly> g(k + 1);
    g[1] = IntPoly::constant(1);
    for (int m = 2; m <= k; ++m) {
        IntPoly acc;
        for (int j = 1; j <= m - 1; ++j) {
            IntPoly term = pow(p_poly(m - j), j) * g[m - j];
            term *= IntPoly::constant(binomial(m - 1, j));
            if (j % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        g[m] = acc;
    }
    return g[k];
}

namespace {

void for_each_size_partition(int m, int min_part, std::vector<int>& parts,
                             const std::function<void(const std::vector<int>&)>& fn) {
    if (m == 0) {
        fn(parts);
        return;
    }
    for (int p = min_part; p <= m; ++p) {
        parts.push_back(p);
        for_each_size_partition(m - p, p, parts, fn);
        parts.pop_back();
    }
}

}  // namespace

IntPoly intro_h(int k) {
    if (k < 1) throw InvalidInput("k must be positive");
    std::vector<IntPoly> h(k + 1);
    h[1] = IntPoly::constant(1);
    for (int m = 2; m <= k; ++m) {
        IntPoly res = pow(p_poly(m - 1), m);
        std::vector<int> parts;
        for_each_size_partition(m, 2, parts, [&](const std::vector<int>& lam) {
            if (lam.size() < 2) return;
            // number of set partitions with these block sizes
            Int ways;
            mpz_fac_ui(ways.get_mpz_t(), m);
            Int denom = 1;
            int run = 1;
            for (std::size_t i = 0; i < lam.size(); ++i) {
                Int f;
                mpz_fac_ui(f.get_mpz_t(), lam[i]);
                denom *= f;
                if (i + 1 < lam.size() && lam[i + 1] == lam[i]) {
                    ++run;
                } else {
                    Int rf;
                    mpz_fac_ui(rf.get_mpz_t(), run);
                    denom *= rf;
                    run = 1;
                }
            }
            ways /= denom;
            long sq = 0;
            for (int p : lam) sq += static_cast<long>(p) * p;
            long cross = (static_cast<long>(m) * m - sq) / 2;
            IntPoly term = IntPoly::monomial(static_cast<int>(cross), ways);
            for (int p : lam) term *= h[p];
            res -= term;
        });
        h[m] = res;
    }
    return h[k];
}

}  // namespace galepoly
