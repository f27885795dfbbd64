#include "galepoly/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

namespace galepoly {

std::string face_id(const std::vector<int>& core) {
    std::ostringstream os;
    for (std::size_t i = 0; i < core.size(); ++i) {
        if (i) os << ",";
        os << core[i];
    }
    return os.str();
}

std::vector<int> parse_face_id(const MultMatrix& R, const std::string& id) {
    std::vector<int> core;
    std::istringstream is(id);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            core.push_back(std::stoi(tok));
        } catch (...) {
            throw InvalidInput("malformed face id");
        }
    }
    if (static_cast<int>(core.size()) != opair_count(R.k()))
        throw InvalidInput("face id must list k(k-1) edge counts");
    SubMultigraph g(R, core);  // validates ranges
    if (!is_naked(g.support())) throw InvalidInput("count vector is not a face: support not naked");
    return core;
}

int face_dim(const MultMatrix& R, const std::vector<int>& core) {
    SubMultigraph g(R, core);
    long long e = g.edge_total();
    int s = weak_component_count(g.support());
    return static_cast<int>(R.total_copies() - e - s);
}

namespace {

Int orbit_size_of(const MultMatrix& R, const std::vector<int>& core) {
    Int w = 1;
    for (int s = 0; s < opair_count(R.k()); ++s) {
        auto [a, b] = opair_vertices(R.k(), s);
        w *= binomial(R.r(a, b), core[s]);
    }
    return w;
}

// expands a naked support into every count vector carried by it
void for_each_core_on_support(const MultMatrix& R, const SupportGraph& sg,
                              std::uint64_t& nodes, std::uint64_t budget,
                              const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> slots;
    for (int s = 0; s < opair_count(R.k()); ++s)
        if (sg.edges >> s & 1) slots.push_back(s);
    std::vector<int> core(opair_count(R.k()), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == slots.size()) {
            if (++nodes > budget) throw BudgetExceeded("face enumeration budget exceeded");
            fn(core);
            return;
        }
        auto [a, b] = opair_vertices(R.k(), slots[idx]);
        for (int c = 1; c <= R.r(a, b); ++c) {
            core[slots[idx]] = c;
            rec(idx + 1);
        }
        core[slots[idx]] = 0;
    };
    rec(0);
}

}  // namespace

FaceLattice enumerate_faces(const MultMatrix& R, const EnumOptions& opts) {
    if (R.k() < 2) throw InvalidInput("face lattice needs at least two vertices");
    FaceLattice lat{R, {}, {}, {}, true};
    int D = R.dim();
    NakedPred naked;
    std::uint64_t nodes = 0;
    for_each_support(R, naked, opts, ~EdgeMask(0), [&](const SupportGraph& sg) {
        for_each_core_on_support(R, sg, nodes, opts.budget, [&](const std::vector<int>& core) {
            Face f;
            f.core = core;
            f.dim = face_dim(R, core);
            f.orbit_size = orbit_size_of(R, core);
            f.id = face_id(core);
            lat.faces.push_back(std::move(f));
        });
    });

    std::sort(lat.faces.begin(), lat.faces.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim > b.dim;
        return a.id < b.id;
    });

    lat.f_vector.assign(std::max(D, 0), Int(0));
    for (const Face& f : lat.faces)
        if (f.dim >= 0 && f.dim < D) lat.f_vector[f.dim] += f.orbit_size;

    // cover pairs: comparable faces one dimension apart
    std::map<int, std::vector<int>> by_dim;
    for (std::size_t i = 0; i < lat.faces.size(); ++i) by_dim[lat.faces[i].dim].push_back(i);
    std::uint64_t pair_work = 0;
    for (auto& [d, lower] : by_dim) {
        auto up = by_dim.find(d + 1);
        if (up == by_dim.end()) continue;
        pair_work += static_cast<std::uint64_t>(lower.size()) * up->second.size();
    }
    if (pair_work > opts.budget) {
        lat.covers_complete = false;
    } else {
        for (auto& [d, lower] : by_dim) {
            auto up = by_dim.find(d + 1);
            if (up == by_dim.end()) continue;
            for (int li : lower)
                for (int ui : up->second) {
                    const auto& cl = lat.faces[li].core;
                    const auto& cu = lat.faces[ui].core;
                    bool leq = true;
                    for (std::size_t s = 0; s < cl.size() && leq; ++s) leq = cu[s] <= cl[s];
                    if (leq) lat.covers.emplace_back(li, ui);
                }
        }
    }
    return lat;
}

std::vector<long long> theta_one(int k) {
    std::vector<long long> t(k, -1);
    t[0] = k - 1;
    return t;
}

namespace {

// subtree sums of theta along a spanning tree; a zero sum on any edge split
// puts theta on a cone wall
struct TreeSolve {
    bool on_wall = false;
    EdgeMask oriented = 0;  // edge directions with strictly positive coordinates
};

TreeSolve solve_tree(int k, const std::vector<std::pair<int, int>>& edges,
                     const std::vector<long long>& theta) {
    std::vector<std::vector<std::pair<int, int>>> adj(k + 1);  // (neighbour, edge idx)
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].first].push_back({edges[e].second, static_cast<int>(e)});
        adj[edges[e].second].push_back({edges[e].first, static_cast<int>(e)});
    }
    std::vector<int> parent(k + 1, 0), parent_edge(k + 1, -1), order;
    std::vector<char> seen(k + 1, 0);
    order.reserve(k);
    order.push_back(1);
    seen[1] = 1;
    for (std::size_t h = 0; h < order.size(); ++h) {
        int v = order[h];
        for (auto [w, e] : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                parent_edge[w] = e;
                order.push_back(w);
            }
    }
    std::vector<long long> sum(k + 1);
    for (int v = 1; v <= k; ++v) sum[v] = theta[v - 1];
    TreeSolve res;
    for (std::size_t h = order.size(); h-- > 1;) {
        int v = order[h];
        long long sv = sum[v];
        if (sv == 0) {
            res.on_wall = true;
            return res;
        }
        int p = parent[v];
        // coordinate of orientation v->p equals -subtree_sum(v)
        int from = sv < 0 ? v : p;
        int to = sv < 0 ? p : v;
        res.oriented |= EdgeMask(1) << opair_index(k, from, to);
        sum[p] += sv;
        (void)parent_edge;
    }
    return res;
}

void for_each_spanning_tree(int k, const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
    std::vector<std::pair<int, int>> upairs;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) upairs.push_back({i, j});
    std::vector<std::pair<int, int>> chosen;
    std::vector<int> parent(k + 1);

    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (chosen.size() == static_cast<std::size_t>(k - 1)) {
            fn(chosen);
            return;
        }
        if (upairs.size() - idx < (k - 1) - chosen.size()) return;
        for (std::size_t e = idx; e < upairs.size(); ++e) {
            auto [a, b] = upairs[e];
            // union-find rebuilt cheaply: k is tiny
            for (int v = 1; v <= k; ++v) parent[v] = v;
            bool ok = true;
            for (auto [x, y] : chosen) parent[find(x)] = find(y);
            if (find(a) == find(b)) ok = false;
            if (!ok) continue;
            chosen.push_back(upairs[e]);
            rec(e + 1);
            chosen.pop_back();
        }
    };
    rec(0);
}

}  // namespace

ThetaParam analyze_theta(const MultMatrix& R, const std::vector<long long>& theta) {
    int k = R.k();
    if (k < 2) throw InvalidInput("theta analysis needs at least two vertices");
    if (k > kMaxEnumVertices) throw InstanceTooLarge("theta analysis supports at most 8 vertices");
    if (static_cast<int>(theta.size()) != k) throw InvalidInput("theta must have k entries");
    long long s = 0;
    for (long long t : theta) s += t;
    if (s != 0) throw InvalidInput("theta must sum to zero");

    ThetaParam param;
    param.theta = theta;
    bool wall = false;
    for_each_spanning_tree(k, [&](const std::vector<std::pair<int, int>>& edges) {
        if (wall) return;
        TreeSolve ts = solve_tree(k, edges, theta);
        if (ts.on_wall)
            wall = true;
        else
            param.trees.push_back(ts.oriented);
    });
    param.generic = !wall;
    if (wall) param.trees.clear();
    return param;
}

std::vector<long long> random_generic_theta(const MultMatrix& R, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> dist(-15, 15);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<long long> theta(R.k());
        long long s = 0;
        for (int i = 0; i + 1 < R.k(); ++i) {
            theta[i] = dist(rng);
            s += theta[i];
        }
        theta[R.k() - 1] = -s;
        bool zero = true;
        for (long long t : theta) zero = zero && t == 0;
        if (zero) continue;
        if (analyze_theta(R, theta).generic) return theta;
    }
    throw CrossCheckFailure("failed to sample a generic theta");
}

/*
 * Stanley recursion through block contraction.
 *
 * The sub-lattice below a face depends only on the contraction of the core:
 * strongly connected classes become single vertices, cross-class
 * multiplicities add up, and unused parallel capacity inside the classes
 * acts as free directions that each drop the dimension by one (the lattice
 * factor of a simplex). The recursion therefore runs on (block count,
 * contracted multiplicities, free-copy count) triples.
 */
namespace {

struct LoopyInstance {
    int b = 1;
    std::vector<int> q;  // unordered block-pair multiplicities
    long long loops = 0;
};

long long loopy_total(const LoopyInstance& L) {
    long long s = 0;
    for (int v : L.q) s += v;
    return 2 * s + L.loops;
}

int loopy_dim(const LoopyInstance& L) { return static_cast<int>(loopy_total(L)) - L.b; }

std::string loopy_key(const LoopyInstance& L) {
    std::ostringstream os;
    os << L.b << "|";
    for (std::size_t i = 0; i < L.q.size(); ++i) {
        if (i) os << ",";
        os << L.q[i];
    }
    os << "|" << L.loops;
    return os.str();
}

struct StanleyCtx {
    std::map<std::string, IntPoly> memo;
    std::mutex mu;
    std::uint64_t nodes = 0;
    EnumOptions opts;
};

// contraction of a block-level core d inside the instance (b, q):
// SCC classes of d merge; cross multiplicities add; unused copies inside the
// merged classes join the free pool
LoopyInstance contract_blocks(const LoopyInstance& L, const MultMatrix& BR,
                              const std::vector<int>& d, const SupportGraph& sg) {
    std::array<int, kMaxVertices + 1> cls;
    int nc = scc_ids(sg, cls);
    LoopyInstance sub;
    sub.b = nc;
    sub.q.assign(upair_count(nc), 0);
    long long within = 0;
    for (int i = 1; i <= L.b; ++i)
        for (int j = i + 1; j <= L.b; ++j) {
            int qi = BR.r(i, j);
            int used = d[opair_index(L.b, i, j)] + d[opair_index(L.b, j, i)];
            if (cls[i] == cls[j])
                within += 2 * qi - used;
            else
                sub.q[upair_index(nc, std::min(cls[i], cls[j]) + 1, std::max(cls[i], cls[j]) + 1)] += qi;
        }
    sub.loops = within;  // caller adds the surviving free pool
    return sub;
}

IntPoly loopy_h(const LoopyInstance& L, StanleyCtx& ctx);

IntPoly loopy_g(const LoopyInstance& L, StanleyCtx& ctx) {
    int dim = loopy_dim(L);
    if (dim < 0) return IntPoly::constant(1);  // empty polytope
    return g_from_h(loopy_h(L, ctx), dim);
}

IntPoly loopy_h(const LoopyInstance& L, StanleyCtx& ctx) {
    std::string key = loopy_key(L);
    {
        std::lock_guard<std::mutex> lock(ctx.mu);
        auto it = ctx.memo.find(key);
        if (it != ctx.memo.end()) return it->second;
    }
    IntPoly res;
    int dim = loopy_dim(L);
    if (dim < 0) {
        res = IntPoly::constant(1);
    } else {
        std::vector<IntPoly> tm1;  // powers of (t-1)
        tm1.push_back(IntPoly::constant(1));
        IntPoly base(std::vector<Int>{-1, 1});
        for (int e = 1; e <= dim; ++e) tm1.push_back(tm1.back() * base);

        std::vector<Int> loop_binom(L.loops + 1);
        for (long long m = 0; m <= L.loops; ++m) loop_binom[m] = binomial(L.loops, m);

        NakedPred naked;
        if (L.b == 1) {
            // only the free directions remain: the simplex case
            for (long long m = 1; m <= L.loops; ++m)
                res += IntPoly::constant(loop_binom[m]) *
                       loopy_g({1, {}, L.loops - m}, ctx) * tm1[static_cast<int>(m) - 1];
        } else {
            MultMatrix BR(L.b, L.q);
            for_each_support(BR, naked, ctx.opts, ~EdgeMask(0), [&](const SupportGraph& sg) {
                int s_b = weak_component_count(sg);
                for_each_core_on_support(BR, sg, ctx.nodes, ctx.opts.budget,
                                         [&](const std::vector<int>& d) {
                    long long e_d = 0;
                    Int w = 1;
                    for (int slot = 0; slot < opair_count(L.b); ++slot) {
                        if (d[slot] == 0) continue;
                        e_d += d[slot];
                        auto [a, b] = opair_vertices(L.b, slot);
                        w *= binomial(BR.r(a, b), d[slot]);
                    }
                    LoopyInstance sub = contract_blocks(L, BR, d, sg);
                    long long sub_loop_base = sub.loops;
                    for (long long m = 0; m <= L.loops; ++m) {
                        if (e_d == 0 && m == 0) continue;  // the face itself
                        if (++ctx.nodes > ctx.opts.budget)
                            throw BudgetExceeded("face recursion budget exceeded");
                        sub.loops = sub_loop_base + (L.loops - m);
                        int expo = static_cast<int>(e_d + m) + s_b - L.b - 1;
                        IntPoly g = loopy_g(sub, ctx);
                        res += IntPoly::constant(w * loop_binom[m]) * g * tm1[expo];
                    }
                });
            });
        }
    }
    std::lock_guard<std::mutex> lock(ctx.mu);
    return ctx.memo.emplace(std::move(key), std::move(res)).first->second;
}

LoopyInstance contract_core(const MultMatrix& R, const std::vector<int>& core) {
    SubMultigraph g(R, core);
    SupportGraph sg = g.support();
    std::array<int, kMaxVertices + 1> cls;
    int nc = scc_ids(sg, cls);
    LoopyInstance L;
    L.b = nc;
    L.q.assign(upair_count(nc), 0);
    long long within = 0;
    for (int i = 1; i <= R.k(); ++i)
        for (int j = i + 1; j <= R.k(); ++j) {
            int used =
                core[opair_index(R.k(), i, j)] + core[opair_index(R.k(), j, i)];
            if (cls[i] == cls[j])
                within += 2 * R.r(i, j) - used;
            else
                L.q[upair_index(nc, std::min(cls[i], cls[j]) + 1, std::max(cls[i], cls[j]) + 1)] +=
                    R.r(i, j);
        }
    L.loops = within;
    return L;
}

}  // namespace

IntPoly stanley_h(const MultMatrix& R, const std::vector<int>& core, const EnumOptions& opts) {
    if (R.k() < 2) throw InvalidInput("stanley_h needs at least two vertices");
    SubMultigraph g(R, core);
    if (!is_naked(g.support())) throw InvalidInput("core support is not naked");
    StanleyCtx ctx;
    ctx.opts = opts;
    LoopyInstance L = contract_core(R, core);
    if (loopy_dim(L) != face_dim(R, core))
        throw CrossCheckFailure("contracted dimension mismatch");
    return loopy_h(L, ctx);
}

IntPoly stanley_g(const MultMatrix& R, const std::vector<int>& core, const EnumOptions& opts) {
    int dim = face_dim(R, core);
    if (dim < 0) return IntPoly::constant(1);
    return g_from_h(stanley_h(R, core, opts), dim);
}

/*
 * Fiber machinery. Graphs with the same directed cycles as a face core are
 * the core plus extra edges between its strongly connected classes whose
 * class-level contraction stays acyclic. Grading by added copies gives the
 * cone counts d_l, and the fiber Poincare polynomial is sum d_l (t^2-1)^l.
 */
namespace {

struct FiberClasses {
    SupportGraph base;  // support of the core
    std::array<int, kMaxVertices + 1> cls{};
    int nclasses = 0;
    EdgeMask between = 0;  // ordered pairs joining distinct classes
};

FiberClasses fiber_classes(const MultMatrix& R, const std::vector<int>& core) {
    FiberClasses fc{SupportGraph(R.k()), {}, 0, 0};
    SubMultigraph g(R, core);
    fc.base = g.support();
    fc.nclasses = scc_ids(fc.base, fc.cls);
    for (int s = 0; s < opair_count(R.k()); ++s) {
        auto [a, b] = opair_vertices(R.k(), s);
        if (fc.cls[a] != fc.cls[b]) fc.between |= EdgeMask(1) << s;
    }
    return fc;
}

SupportGraph union_graphs(const SupportGraph& a, const SupportGraph& b) {
    SupportGraph u(a.k);
    u.edges = a.edges | b.edges;
    for (int v = 1; v <= a.k; ++v) u.out[v] = a.out[v] | b.out[v];
    return u;
}

bool contains_any_tree(const SupportGraph& g, const std::vector<EdgeMask>& trees) {
    for (EdgeMask t : trees)
        if ((g.edges & t) == t) return true;
    return false;
}

class FiberPred : public SupportPredicate {
public:
    FiberPred(const FiberClasses& fc, const std::vector<EdgeMask>* trees)
        : fc_(fc), trees_(trees) {}

    bool test(const SupportGraph& g) const override {
        if (has_directed_cycle(contracted(g))) return false;
        SupportGraph u = union_graphs(fc_.base, g);
        return trees_ ? contains_any_tree(u, *trees_) : is_rooted_at(u, 1);
    }

    bool dead(const SupportGraph& partial, const SupportGraph& potential) const override {
        if (has_directed_cycle(contracted(partial))) return true;
        SupportGraph u = union_graphs(fc_.base, potential);
        return trees_ ? !contains_any_tree(u, *trees_) : !is_rooted_at(u, 1);
    }

private:
    SupportGraph contracted(const SupportGraph& g) const {
        SupportGraph c(fc_.nclasses);
        for (int v = 1; v <= g.k; ++v) {
            VertMask m = g.out[v];
            while (m) {
                int w = __builtin_ctz(m);
                m &= m - 1;
                int cv = fc_.cls[v] + 1, cw = fc_.cls[w] + 1;
                if (cv != cw && !c.has(cv, cw)) c.add(cv, cw);
            }
        }
        return c;
    }

    const FiberClasses& fc_;
    const std::vector<EdgeMask>* trees_;
};

// generating polynomial of added-copy counts over the valid extensions
IntPoly fiber_counts(const MultMatrix& R, const FiberClasses& fc,
                     const std::vector<EdgeMask>* trees, const EnumOptions& opts) {
    FiberPred pred(fc, trees);
    return count_weighted(R, pred, 1, opts, fc.between);
}

IntPoly poincare_from_counts(const IntPoly& counts, int s, int* fiber_dim) {
    for (int i = 0; i < s - 1; ++i)
        if (counts.coeff(i) != 0) throw CrossCheckFailure("fiber count below the connecting minimum");
    if (counts.is_zero()) throw CrossCheckFailure("empty fiber");
    IntPoly base(std::vector<Int>{-1, 0, 1});  // t^2 - 1
    IntPoly pw = IntPoly::constant(1);
    IntPoly res;
    int top = 0;
    for (int l = 0; s - 1 + l <= counts.degree(); ++l) {
        const Int& d = counts.coeff(s - 1 + l);
        if (d != 0) {
            res += IntPoly::constant(d) * pw;
            top = l;
        }
        pw *= base;
    }
    if (fiber_dim) *fiber_dim = top;
    if (res.coeff(0) != 1) throw CrossCheckFailure("fiber not connected");
    return res;
}

}  // namespace

IntPoly face_g_graphical(const MultMatrix& R, const std::vector<int>& core,
                         const EnumOptions& opts) {
    SubMultigraph g(R, core);
    if (!is_naked(g.support())) throw InvalidInput("core support is not naked");
    FiberClasses fc = fiber_classes(R, core);
    IntPoly counts = fiber_counts(R, fc, nullptr, opts);
    int s = fc.nclasses;
    if (counts.is_zero()) throw CrossCheckFailure("no spanning graph realizes the face core");
    for (int i = 0; i < s - 1; ++i)
        if (counts.coeff(i) != 0) throw CrossCheckFailure("fiber count below the connecting minimum");
    std::vector<Int> hat;
    for (int i = s - 1; i <= counts.degree(); ++i) hat.push_back(counts.coeff(i));
    return shift(IntPoly(std::move(hat)), Int(-1));
}

FiberReport fiber_poincare(const MultMatrix& R, const std::vector<int>& core, const ThetaParam& th,
                           const EnumOptions& opts) {
    if (!th.generic) throw NonGenericTheta("fiber computation requires a generic theta");
    SubMultigraph g(R, core);
    if (!is_naked(g.support())) throw InvalidInput("core support is not naked");
    FiberClasses fc = fiber_classes(R, core);
    IntPoly counts = fiber_counts(R, fc, &th.trees, opts);

    FiberReport rep;
    rep.face = face_id(core);
    rep.face_dim = face_dim(R, core);
    rep.poincare = poincare_from_counts(counts, fc.nclasses, &rep.fiber_dim);
    rep.stratum_codim = R.total_copies() - g.edge_total() - fc.nclasses + 1;
    bool empty_core = g.edge_total() == 0;
    rep.small_ok = empty_core || rep.stratum_codim > 2 * rep.fiber_dim;
    rep.class_faces = 1;
    return rep;
}

SmallCertificate certify_small(const MultMatrix& R, const ThetaParam& th,
                               const EnumOptions& opts) {
    if (!th.generic) throw NonGenericTheta("smallness certification requires a generic theta");
    if (R.k() < 2) throw InvalidInput("certification needs at least two vertices");
    SmallCertificate cert;
    cert.small = true;
    cert.faces_checked = 0;

    EdgeMask all_pairs = (opair_count(R.k()) == 64) ? ~EdgeMask(0)
                                                    : (EdgeMask(1) << opair_count(R.k())) - 1;
    NakedPred naked;
    for_each_support(R, naked, opts, ~EdgeMask(0), [&](const SupportGraph& sg) {
        bool full_support = sg.edges == all_pairs;
        long long e_max = 0;
        Int class_count = 1;
        std::vector<int> rep_core(opair_count(R.k()), 0);
        for (int s = 0; s < opair_count(R.k()); ++s) {
            if (!(sg.edges >> s & 1)) continue;
            auto [a, b] = opair_vertices(R.k(), s);
            e_max += R.r(a, b);
            rep_core[s] = R.r(a, b);
            class_count *= R.r(a, b);
        }
        long long e_limit = e_max;
        if (full_support) {
            // the maximal count vector is the empty face; it is not a stratum
            e_limit -= 1;
            class_count -= 1;
            if (class_count == 0) return;  // only the empty face lives here
            for (int s = 0; s < opair_count(R.k()); ++s)
                if (rep_core[s] >= 2) {
                    rep_core[s] -= 1;  // stay on the same support
                    break;
                }
        }

        std::vector<int> mincore(opair_count(R.k()), 0);
        for (int s = 0; s < opair_count(R.k()); ++s)
            if (sg.edges >> s & 1) mincore[s] = 1;
        FiberClasses fc = fiber_classes(R, mincore);
        IntPoly counts = fiber_counts(R, fc, &th.trees, opts);
        FiberReport rep;
        rep.face = face_id(rep_core);
        rep.face_dim = face_dim(R, rep_core);
        rep.poincare = poincare_from_counts(counts, fc.nclasses, &rep.fiber_dim);
        rep.stratum_codim = R.total_copies() - e_limit - fc.nclasses + 1;
        bool is_polytope_class = sg.edges == 0;
        rep.small_ok = is_polytope_class || rep.stratum_codim > 2 * rep.fiber_dim;
        rep.class_faces = class_count;
        cert.small = cert.small && rep.small_ok;
        cert.faces_checked += class_count;
        cert.reports.push_back(std::move(rep));
    });

    std::sort(cert.reports.begin(), cert.reports.end(), [](const FiberReport& a, const FiberReport& b) {
        if (a.face_dim != b.face_dim) return a.face_dim > b.face_dim;
        return a.face < b.face;
    });
    return cert;
}

namespace {

struct TreeContainPred : SupportPredicate {
    explicit TreeContainPred(const std::vector<EdgeMask>& trees) : trees_(&trees) {}
    bool test(const SupportGraph& g) const override { return contains_any_tree(g, *trees_); }
    bool dead(const SupportGraph& partial, const SupportGraph& potential) const override {
        (void)partial;
        return !contains_any_tree(potential, *trees_);
    }
    const std::vector<EdgeMask>* trees_;
};

}  // namespace

CentralFiber top_components(const MultMatrix& R, const ThetaParam& th, const EnumOptions& opts) {
    if (!th.generic) throw NonGenericTheta("central fiber requires a generic theta");
    int k = R.k();
    if (k < 2) throw InvalidInput("central fiber needs at least two vertices");
    if (k > kMaxEnumVertices) throw InstanceTooLarge("central fiber supports at most 8 vertices");

    // acyclic orientations of the complete graph whose support holds a tree
    std::vector<EdgeMask> tournaments;
    SupportGraph partial(k);
    std::uint64_t nodes = 0;
    std::vector<std::pair<int, int>> upairs;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) upairs.push_back({i, j});
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (++nodes > opts.budget) throw BudgetExceeded("central fiber budget exceeded");
        if (has_directed_cycle(partial)) return;
        if (idx == upairs.size()) {
            if (contains_any_tree(partial, th.trees)) tournaments.push_back(partial.edges);
            return;
        }
        auto [i, j] = upairs[idx];
        partial.add(i, j);
        rec(idx + 1);
        partial.remove(i, j);
        partial.add(j, i);
        rec(idx + 1);
        partial.remove(j, i);
    };
    rec(0);

    CentralFiber fib;
    long long dim = R.pair_sum() - k + 1;
    for (EdgeMask tmask : tournaments) {
        std::vector<int> counts(opair_count(k), 0);
        for (int s = 0; s < opair_count(k); ++s)
            if (tmask >> s & 1) {
                auto [a, b] = opair_vertices(k, s);
                counts[s] = R.r(a, b);
            }
        TreeContainPred pred(th.trees);
        IntPoly kept = count_weighted(R, pred, 1, opts, tmask);
        for (int j = 0; j < k - 1; ++j)
            if (kept.coeff(j) != 0) throw CrossCheckFailure("component subgraph below tree size");
        IntPoly base(std::vector<Int>{-1, 0, 1});
        IntPoly pw = IntPoly::constant(1);
        IntPoly poincare;
        for (int j = k - 1; j <= kept.degree(); ++j) {
            if (kept.coeff(j) != 0) poincare += IntPoly::constant(kept.coeff(j)) * pw;
            pw *= base;
        }
        fib.components.push_back({SubMultigraph(R, counts), dim, poincare});
    }
    for (std::size_t a = 0; a < fib.components.size(); ++a)
        for (std::size_t b = a + 1; b < fib.components.size(); ++b) {
            std::vector<int> common(opair_count(k), 0);
            for (int s = 0; s < opair_count(k); ++s)
                common[s] = std::min(fib.components[a].graph.counts()[s],
                                     fib.components[b].graph.counts()[s]);
            fib.intersections.emplace_back(static_cast<int>(a), static_cast<int>(b),
                                           SubMultigraph(R, common));
        }
    return fib;
}

}  // namespace galepoly
