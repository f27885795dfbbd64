#include "galepoly/geometry.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace galepoly {

namespace {

std::vector<Int> alpha_of_edge(int k, int from, int to) {
    // the copy attached to the directed edge from -> to is e_to - e_from
    std::vector<Int> a(k, 0);
    a[to - 1] = 1;
    a[from - 1] = -1;
    return a;
}

}  // namespace

GaleData build_gale(const MultMatrix& R) {
    int k = R.k();
    if (k < 2) throw InvalidInput("gale construction needs at least two vertices");
    GaleData gd{R, {}, {}, {}};
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            // alpha_ij = e_i - e_j first (edge j->i), then alpha_ji (edge i->j)
            for (int c = 0; c < R.r(i, j); ++c) {
                gd.alphas.push_back(alpha_of_edge(k, j, i));
                gd.edge_slot.push_back(opair_index(k, j, i));
            }
            for (int c = 0; c < R.r(i, j); ++c) {
                gd.alphas.push_back(alpha_of_edge(k, i, j));
                gd.edge_slot.push_back(opair_index(k, i, j));
            }
        }
    long long n = R.total_copies();
    ZMat a(k, std::vector<Int>(n));
    for (long long c = 0; c < n; ++c)
        for (int r = 0; r < k; ++r) a[r][c] = gd.alphas[c][r];
    ZMat kernel = kernel_z(a);
    if (static_cast<long long>(kernel.size()) != n - k + 1)
        throw CrossCheckFailure("kernel of the evaluation map has unexpected rank");
    for (long long c = 0; c < n; ++c) {
        std::vector<Int> beta(kernel.size());
        for (std::size_t r = 0; r < kernel.size(); ++r) beta[r] = kernel[r][c];
        gd.betas.push_back(std::move(beta));
    }
    return gd;
}

namespace {

bool beta_functional_exists(const GaleData& gd, const std::vector<Rat>& m) {
    // solve l(beta_i) = m_i
    std::size_t n = gd.betas.size();
    std::size_t d = gd.betas[0].size();
    QMat sys(n, std::vector<Rat>(d));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < d; ++r) sys[i][r] = Rat(gd.betas[i][r]);
    return solve_q(std::move(sys), m).has_value();
}

std::vector<Int> combination_value(const GaleData& gd, const std::vector<Int>& m) {
    int k = gd.R.k();
    std::vector<Int> v(k, 0);
    for (std::size_t i = 0; i < gd.alphas.size(); ++i)
        for (int r = 0; r < k; ++r) v[r] += m[i] * gd.alphas[i][r];
    return v;
}

bool is_zero_vec(const std::vector<Int>& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

bool verify_gale(const GaleData& gd, int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    int k = gd.R.k();
    std::size_t n = gd.alphas.size();

    // integer generators of the relation space: two-cycles, hub triangles,
    // and differences of parallel copies
    std::vector<std::vector<Int>> gens;
    std::map<int, std::vector<int>> copies_by_slot;
    for (std::size_t i = 0; i < n; ++i) copies_by_slot[gd.edge_slot[i]].push_back(i);
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            std::vector<Int> m(n, 0);
            m[copies_by_slot[opair_index(k, i, j)][0]] = 1;
            m[copies_by_slot[opair_index(k, j, i)][0]] = 1;
            gens.push_back(std::move(m));
        }
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            for (int l = j + 1; l <= k; ++l) {
                // alpha_ij + alpha_jl + alpha_li = 0
                std::vector<Int> m(n, 0);
                m[copies_by_slot[opair_index(k, j, i)][0]] = 1;
                m[copies_by_slot[opair_index(k, l, j)][0]] = 1;
                m[copies_by_slot[opair_index(k, i, l)][0]] = 1;
                gens.push_back(std::move(m));
            }
    for (auto& [slot, idxs] : copies_by_slot)
        for (std::size_t c = 1; c < idxs.size(); ++c) {
            std::vector<Int> m(n, 0);
            m[idxs[0]] = 1;
            m[idxs[c]] = -1;
            gens.push_back(std::move(m));
        }

    for (int t = 0; t < trials; ++t) {
        if (t % 2 == 0) {
            // a relation: must admit a functional
            std::vector<Int> m(n, 0);
            for (const auto& g : gens) {
                int c = coeff(rng);
                if (c == 0) continue;
                for (std::size_t i = 0; i < n; ++i) m[i] += c * g[i];
            }
            if (!is_zero_vec(combination_value(gd, m)))
                throw CrossCheckFailure("relation generator is not a relation");
            std::vector<Rat> mq(n);
            for (std::size_t i = 0; i < n; ++i) mq[i] = Rat(m[i]);
            if (!beta_functional_exists(gd, mq)) return false;
        } else {
            // a non-relation: the functional must not exist
            std::vector<Int> m(n, 0);
            for (std::size_t i = 0; i < n; ++i) m[i] = coeff(rng);
            if (is_zero_vec(combination_value(gd, m))) continue;
            std::vector<Rat> mq(n);
            for (std::size_t i = 0; i < n; ++i) mq[i] = Rat(m[i]);
            if (beta_functional_exists(gd, mq)) return false;
        }
    }
    return true;
}

bool verify_unimodular(const GaleData& gd) {
    int k = gd.R.k();
    // distinct alpha vectors, in sum-zero coordinates (basis e_i - e_k)
    ZMat distinct;
    for (const auto& a : gd.alphas) {
        bool seen = false;
        for (const auto& d : distinct) seen = seen || d == a;
        if (!seen) distinct.push_back(a);
    }
    std::size_t m = distinct.size();
    ZMat coords(m, std::vector<Int>(k - 1));
    for (std::size_t i = 0; i < m; ++i) {
        Int sum = 0;
        for (int r = 0; r < k; ++r) sum += distinct[i][r];
        if (sum != 0) throw InvalidInput("alpha vector outside the sum-zero lattice");
        for (int r = 0; r < k - 1; ++r) coords[i][r] = distinct[i][r];
    }

    std::vector<std::size_t> pick(k - 1);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == pick.size()) {
            ZMat sub(k - 1, std::vector<Int>(k - 1));
            for (int r = 0; r < k - 1; ++r)
                for (int c = 0; c < k - 1; ++c) sub[r][c] = coords[pick[c]][r];
            Int d = det_z(sub);
            return d == 0 || d == 1 || d == -1;
        }
        for (std::size_t i = start; i < m; ++i) {
            pick[pos] = i;
            if (!rec(pos + 1, i + 1)) return false;
        }
        return true;
    };
    return rec(0, 0);
}

namespace {

// positive integer relation on a naked support, assembled from one directed
// cycle through every edge
bool certify_support_feasible(const GaleData& gd, const SupportGraph& sg) {
    int k = gd.R.k();
    std::vector<Int> coeff(opair_count(k), 0);
    for (int v = 1; v <= k; ++v) {
        VertMask m = sg.out[v];
        while (m) {
            int w = __builtin_ctz(m);
            m &= m - 1;
            // find a path w -> v inside the support, BFS by parents
            std::vector<int> parent(k + 1, 0);
            std::vector<int> queue{w};
            parent[w] = w;
            for (std::size_t h = 0; h < queue.size() && !parent[v]; ++h) {
                int x = queue[h];
                VertMask o = sg.out[x];
                while (o) {
                    int y = __builtin_ctz(o);
                    o &= o - 1;
                    if (!parent[y]) {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if (!parent[v]) return false;  // not naked after all
            coeff[opair_index(k, v, w)] += 1;
            for (int x = v; x != w; x = parent[x]) coeff[opair_index(k, parent[x], x)] += 1;
        }
    }
    // exact check: sum over edges of coeff * (e_to - e_from) = 0, positive on the support
    std::vector<Int> total(k, 0);
    for (int s = 0; s < opair_count(k); ++s) {
        if (sg.edges >> s & 1) {
            if (coeff[s] < 1) return false;
        } else if (coeff[s] != 0) {
            return false;
        }
        if (coeff[s] == 0) continue;
        auto [from, to] = opair_vertices(k, s);
        total[to - 1] += coeff[s];
        total[from - 1] -= coeff[s];
    }
    return is_zero_vec(total);
}

// separating functional: weak topological level of the condensation
bool certify_support_infeasible(const GaleData& gd, const SupportGraph& sg) {
    int k = gd.R.k();
    std::array<int, kMaxVertices + 1> cls;
    int nc = scc_ids(sg, cls);
    // longest-path level in the class DAG
    std::vector<std::vector<int>> cadj(nc);
    for (int v = 1; v <= k; ++v) {
        VertMask m = sg.out[v];
        while (m) {
            int w = __builtin_ctz(m);
            m &= m - 1;
            if (cls[v] != cls[w]) cadj[cls[v]].push_back(cls[w]);
        }
    }
    std::vector<int> level(nc, 0);
    for (int pass = 0; pass < nc; ++pass)
        for (int c = 0; c < nc; ++c)
            for (int d : cadj[c]) level[d] = std::max(level[d], level[c] + 1);
    // functional value on a vertex = level of its class
    bool strict = false;
    for (int v = 1; v <= k; ++v) {
        VertMask m = sg.out[v];
        while (m) {
            int w = __builtin_ctz(m);
            m &= m - 1;
            int diff = level[cls[w]] - level[cls[v]];  // pairing with e_w - e_v
            if (diff < 0) return false;
            if (diff > 0) strict = true;
        }
    }
    return strict;  // a non-naked support always has a cross edge
}

}  // namespace

bool verify_faces(const GaleData& gd, const FaceLattice& lat, int rank_sample_cap) {
    const MultMatrix& R = gd.R;
    int k = R.k();

    // feasibility certificates, one per distinct core support
    std::vector<EdgeMask> supports;
    for (const Face& f : lat.faces) {
        EdgeMask m = 0;
        for (int s = 0; s < opair_count(k); ++s)
            if (f.core[s] > 0) m |= EdgeMask(1) << s;
        supports.push_back(m);
    }
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    for (EdgeMask m : supports) {
        if (m == 0) continue;
        if (!certify_support_feasible(gd, SupportGraph::from_mask(k, m))) return false;
    }

    // sampled non-naked subsets must separate
    std::mt19937_64 rng(4242);
    EdgeMask all = (opair_count(k) == 64) ? ~EdgeMask(0) : (EdgeMask(1) << opair_count(k)) - 1;
    int found = 0;
    for (int t = 0; t < 500 && found < 25; ++t) {
        EdgeMask m = rng() & all;
        SupportGraph sg = SupportGraph::from_mask(k, m);
        if (m == 0 || is_naked(sg)) continue;
        ++found;
        if (!certify_support_infeasible(gd, sg)) return false;
    }

    // affine rank of the vertex set equals the combinatorial dimension
    std::size_t stride = 1;
    if (rank_sample_cap > 0 && lat.faces.size() > static_cast<std::size_t>(rank_sample_cap))
        stride = lat.faces.size() / rank_sample_cap + 1;
    for (std::size_t fi = 0; fi < lat.faces.size(); fi += stride) {
        const Face& f = lat.faces[fi];
        // labelled representative: the core claims the first c copies per slot
        std::vector<int> taken(opair_count(k), 0);
        std::vector<std::size_t> verts;
        for (std::size_t i = 0; i < gd.betas.size(); ++i) {
            int slot = gd.edge_slot[i];
            if (taken[slot] < f.core[slot]) {
                ++taken[slot];
                continue;  // copy belongs to the core
            }
            verts.push_back(i);
        }
        int affine;
        if (verts.empty()) {
            affine = -1;
        } else {
            QMat diffs;
            for (std::size_t i = 1; i < verts.size(); ++i) {
                std::vector<Rat> row(gd.betas[verts[0]].size());
                for (std::size_t r = 0; r < row.size(); ++r)
                    row[r] = Rat(gd.betas[verts[i]][r] - gd.betas[verts[0]][r]);
                diffs.push_back(std::move(row));
            }
            affine = diffs.empty() ? 0 : rank_q(std::move(diffs));
        }
        if (affine != f.dim) return false;
    }
    return true;
}

std::vector<Int> theta_coords(const GaleData& gd, const std::vector<int>& tree_slots,
                              const std::vector<long long>& theta) {
    int k = gd.R.k();
    if (static_cast<int>(tree_slots.size()) != k - 1)
        throw InvalidInput("a spanning tree has k-1 edges");
    QMat sys(k, std::vector<Rat>(k - 1));
    for (int c = 0; c < k - 1; ++c) {
        auto [from, to] = opair_vertices(k, tree_slots[c]);
        sys[to - 1][c] = 1;
        sys[from - 1][c] = -1;
    }
    std::vector<Rat> rhs(k);
    for (int r = 0; r < k; ++r) rhs[r] = Rat(static_cast<long>(theta[r]));
    auto sol = solve_q(sys, rhs);
    if (!sol) throw InvalidInput("tree roots do not span theta");
    // uniqueness: tree edges are independent, so the solve is exact; demand integrality
    std::vector<Int> coords(k - 1);
    for (int c = 0; c < k - 1; ++c) {
        if ((*sol)[c].get_den() != 1)
            throw CrossCheckFailure("non-integral tree coordinates: unimodularity violated");
        coords[c] = (*sol)[c].get_num();
    }
    // exact residual check
    std::vector<Int> resid(k);
    for (int r = 0; r < k; ++r) resid[r] = static_cast<long>(theta[r]);
    for (int c = 0; c < k - 1; ++c) {
        auto [from, to] = opair_vertices(k, tree_slots[c]);
        resid[to - 1] -= coords[c];
        resid[from - 1] += coords[c];
    }
    if (!is_zero_vec(resid)) throw CrossCheckFailure("tree coordinate solve failed");
    return coords;
}

}  // namespace galepoly
