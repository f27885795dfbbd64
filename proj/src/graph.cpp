#include "galepoly/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <functional>
#include <sstream>
#include <thread>

namespace galepoly {

std::pair<int, int> opair_vertices(int k, int slot) {
    int u = slot / 2;
    int i = 1;
    while (u >= k - i) {
        u -= k - i;
        ++i;
    }
    int j = i + 1 + u;
    return (slot % 2 == 0) ? std::make_pair(i, j) : std::make_pair(j, i);
}

SupportGraph SupportGraph::from_mask(int k, EdgeMask m) {
    SupportGraph g(k);
    while (m) {
        int slot = __builtin_ctzll(m);
        m &= m - 1;
        auto [a, b] = opair_vertices(k, slot);
        g.add(a, b);
    }
    return g;
}

VertMask reach_to(const SupportGraph& g, int target) {
    VertMask m = VertMask(1) << target;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 1; v <= g.k; ++v) {
            if (m >> v & 1) continue;
            if (g.out[v] & m) {
                m |= VertMask(1) << v;
                changed = true;
            }
        }
    }
    return m;
}

bool is_rooted_at(const SupportGraph& g, int v) {
    return (reach_to(g, v) & all_vertices(g.k)) == all_vertices(g.k);
}

namespace {

// closure[v] = vertices reachable from v along at least one edge
void reach_closure(const SupportGraph& g, std::array<VertMask, kMaxVertices + 1>& reach) {
    for (int v = 1; v <= g.k; ++v) reach[v] = g.out[v];
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 1; v <= g.k; ++v) {
            VertMask add = 0;
            VertMask m = reach[v];
            while (m) {
                int w = __builtin_ctz(m);
                m &= m - 1;
                add |= reach[w];
            }
            if (add & ~reach[v]) {
                reach[v] |= add;
                changed = true;
            }
        }
    }
}

}  // namespace

bool has_directed_cycle(const SupportGraph& g) {
    std::array<VertMask, kMaxVertices + 1> reach;
    reach_closure(g, reach);
    for (int v = 1; v <= g.k; ++v)
        if (reach[v] >> v & 1) return true;
    return false;
}

int scc_ids(const SupportGraph& g, std::array<int, kMaxVertices + 1>& scc) {
    std::array<VertMask, kMaxVertices + 1> reach;
    reach_closure(g, reach);
    scc.fill(-1);
    int nc = 0;
    for (int v = 1; v <= g.k; ++v) {
        if (scc[v] != -1) continue;
        scc[v] = nc;
        for (int w = v + 1; w <= g.k; ++w)
            if (scc[w] == -1 && (reach[v] >> w & 1) && (reach[w] >> v & 1)) scc[w] = nc;
        ++nc;
    }
    return nc;
}

int weak_component_count(const SupportGraph& g) {
    std::array<int, kMaxVertices + 1> par;
    for (int v = 1; v <= g.k; ++v) par[v] = v;
    std::function<int(int)> find = [&](int v) { return par[v] == v ? v : par[v] = find(par[v]); };
    for (int v = 1; v <= g.k; ++v) {
        VertMask m = g.out[v];
        while (m) {
            int w = __builtin_ctz(m);
            m &= m - 1;
            par[find(v)] = find(w);
        }
    }
    int n = 0;
    for (int v = 1; v <= g.k; ++v)
        if (find(v) == v) ++n;
    return n;
}

bool is_naked(const SupportGraph& g) {
    std::array<VertMask, kMaxVertices + 1> reach;
    reach_closure(g, reach);
    for (int v = 1; v <= g.k; ++v) {
        VertMask m = g.out[v];
        while (m) {
            int w = __builtin_ctz(m);
            m &= m - 1;
            if (!(reach[w] >> v & 1)) return false;  // edge v->w lies on no cycle
        }
    }
    return true;
}

MultMatrix::MultMatrix(int k, std::vector<int> upper) : k_(k), upper_(std::move(upper)) {
    if (k < 1 || k > kMaxVertices) throw InvalidInput("vertex count must be in 1..16");
    if (static_cast<int>(upper_.size()) != upair_count(k))
        throw InvalidInput("multiplicity list must have k(k-1)/2 entries");
    for (int r : upper_)
        if (r < 1) throw InvalidInput("multiplicities must be positive");
}

MultMatrix MultMatrix::all_ones(int k) { return MultMatrix(k, std::vector<int>(upair_count(k), 1)); }

long long MultMatrix::pair_sum() const {
    long long s = 0;
    for (int r : upper_) s += r;
    return s;
}

MultMatrix MultMatrix::induced(const std::vector<int>& verts) const {
    int m = static_cast<int>(verts.size());
    std::vector<int> up(upair_count(m));
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) up[upair_index(m, a, b)] = r(verts[a - 1], verts[b - 1]);
    return MultMatrix(m, std::move(up));
}

std::string MultMatrix::key() const {
    std::ostringstream os;
    os << "k=" << k_ << ";r=";
    for (std::size_t i = 0; i < upper_.size(); ++i) {
        if (i) os << ",";
        os << upper_[i];
    }
    return os.str();
}

SubMultigraph::SubMultigraph(MultMatrix R)
    : R_(std::move(R)), c_(opair_count(R_.k()), 0) {}

SubMultigraph::SubMultigraph(MultMatrix R, std::vector<int> counts)
    : R_(std::move(R)), c_(std::move(counts)) {
    if (static_cast<int>(c_.size()) != opair_count(R_.k()))
        throw InvalidInput("count vector must have k(k-1) entries");
    for (int s = 0; s < opair_count(R_.k()); ++s) {
        auto [a, b] = opair_vertices(R_.k(), s);
        if (c_[s] < 0 || c_[s] > R_.r(a, b)) throw InvalidInput("edge count out of range");
    }
}

void SubMultigraph::set_count(int from, int to, int c) {
    if (c < 0 || c > R_.r(from, to)) throw InvalidInput("edge count out of range");
    c_[opair_index(R_.k(), from, to)] = c;
}

long long SubMultigraph::edge_total() const {
    long long e = 0;
    for (int c : c_) e += c;
    return e;
}

SupportGraph SubMultigraph::support() const {
    SupportGraph g(R_.k());
    for (int s = 0; s < opair_count(R_.k()); ++s)
        if (c_[s] > 0) {
            auto [a, b] = opair_vertices(R_.k(), s);
            g.add(a, b);
        }
    return g;
}

std::vector<std::vector<int>> support_scc(const SubMultigraph& g) {
    std::array<int, kMaxVertices + 1> scc;
    SupportGraph s = g.support();
    int nc = scc_ids(s, scc);
    std::vector<std::vector<int>> comps(nc);
    for (int v = 1; v <= g.k(); ++v) comps[scc[v]].push_back(v);
    return comps;
}

SubMultigraph naked_core(const SubMultigraph& g) {
    std::array<int, kMaxVertices + 1> scc;
    SupportGraph s = g.support();
    scc_ids(s, scc);
    SubMultigraph core(g.parent());
    for (int slot = 0; slot < opair_count(g.k()); ++slot) {
        if (g.counts()[slot] == 0) continue;
        auto [a, b] = opair_vertices(g.k(), slot);
        if (scc[a] == scc[b]) core.set_count(a, b, g.counts()[slot]);
    }
    return core;
}

bool is_acyclic(const SubMultigraph& g) { return !has_directed_cycle(g.support()); }

bool is_rooted_at(const SubMultigraph& g, int v) {
    if (v < 1 || v > g.k()) throw InvalidInput("root vertex out of range");
    return is_rooted_at(g.support(), v);
}

int component_count(const SubMultigraph& g) { return weak_component_count(g.support()); }

bool AcyclicRootedPred::test(const SupportGraph& g) const {
    return !has_directed_cycle(g) && is_rooted_at(g, 1);
}

bool AcyclicRootedPred::dead(const SupportGraph& partial, const SupportGraph& potential) const {
    return has_directed_cycle(partial) || !is_rooted_at(potential, 1);
}

bool RootedCyclePred::test(const SupportGraph& g) const {
    return has_directed_cycle(g) && is_rooted_at(g, 1);
}

bool RootedCyclePred::dead(const SupportGraph& partial, const SupportGraph& potential) const {
    (void)partial;
    return !is_rooted_at(potential, 1) || !has_directed_cycle(potential);
}

bool NakedPred::test(const SupportGraph& g) const { return is_naked(g); }

bool NakedPred::dead(const SupportGraph& partial, const SupportGraph& potential) const {
    // an edge already placed that cannot lie on a cycle even with every
    // remaining edge present never becomes naked
    std::array<VertMask, kMaxVertices + 1> reach;
    reach_closure(potential, reach);
    for (int v = 1; v <= partial.k; ++v) {
        VertMask m = partial.out[v];
        while (m) {
            int w = __builtin_ctz(m);
            m &= m - 1;
            if (!(reach[w] >> v & 1)) return true;
        }
    }
    return false;
}

namespace {

struct PairState {
    int i = 0, j = 0;
    bool fwd_ok = false, bwd_ok = false;
};

std::vector<PairState> allowed_pairs_of(const MultMatrix& R, EdgeMask allowed) {
    std::vector<PairState> ps;
    int k = R.k();
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            PairState p;
            p.i = i;
            p.j = j;
            p.fwd_ok = allowed >> opair_index(k, i, j) & 1;
            p.bwd_ok = allowed >> opair_index(k, j, i) & 1;
            if (p.fwd_ok || p.bwd_ok) ps.push_back(p);
        }
    return ps;
}

void check_enum_size(const MultMatrix& R) {
    if (R.k() > kMaxEnumVertices)
        throw InstanceTooLarge("support enumeration supports at most 8 vertices");
}

// weight of one chosen direction of a pair with multiplicity r
IntPoly direction_weight(int r, int floor) {
    std::vector<Int> c(r + 1, Int(0));
    for (int e = floor; e <= r; ++e) c[e] = binomial(r, e);
    return IntPoly(std::move(c));
}

struct WeightedEnum {
    const SupportPredicate& pred;
    std::vector<PairState> pairs;
    std::vector<IntPoly> wdir;     // per pair: weight of a single direction
    std::vector<IntPoly> wboth;    // per pair: weight of both directions
    std::uint64_t budget = 0;

    SupportGraph partial, potential;
    std::vector<IntPoly> stack;
    IntPoly acc;
    std::uint64_t nodes = 0;

    void run(std::size_t depth, std::size_t prod) {
        if (++nodes > budget) throw BudgetExceeded("support enumeration budget exceeded");
        if (depth == pairs.size()) {
            if (pred.test(partial)) acc += stack[prod];
            return;
        }
        if (pred.dead(partial, potential)) return;
        const PairState& p = pairs[depth];

        // absent
        if (p.fwd_ok) potential.remove(p.i, p.j);
        if (p.bwd_ok) potential.remove(p.j, p.i);
        run(depth + 1, prod);
        if (p.fwd_ok) potential.add(p.i, p.j);
        if (p.bwd_ok) potential.add(p.j, p.i);

        // one direction
        for (int dir = 0; dir < 2; ++dir) {
            bool ok = dir == 0 ? p.fwd_ok : p.bwd_ok;
            if (!ok) continue;
            int a = dir == 0 ? p.i : p.j;
            int b = dir == 0 ? p.j : p.i;
            int oa = dir == 0 ? p.j : p.i;
            int ob = dir == 0 ? p.i : p.j;
            bool other_ok = dir == 0 ? p.bwd_ok : p.fwd_ok;
            partial.add(a, b);
            if (other_ok) potential.remove(oa, ob);
            stack.push_back(stack[prod] * wdir[depth]);
            run(depth + 1, stack.size() - 1);
            stack.pop_back();
            if (other_ok) potential.add(oa, ob);
            partial.remove(a, b);
        }

        // both directions
        if (p.fwd_ok && p.bwd_ok) {
            partial.add(p.i, p.j);
            partial.add(p.j, p.i);
            stack.push_back(stack[prod] * wboth[depth]);
            run(depth + 1, stack.size() - 1);
            stack.pop_back();
            partial.remove(p.i, p.j);
            partial.remove(p.j, p.i);
        }
    }
};

struct EnumTask {
    SupportGraph partial, potential;
    IntPoly prod;
    std::size_t depth;
};

}  // namespace

IntPoly count_weighted(const MultMatrix& R, const SupportPredicate& pred, int edge_floor,
                       const EnumOptions& opts, EdgeMask allowed_pairs) {
    check_enum_size(R);
    if (edge_floor != 0 && edge_floor != 1) throw InvalidInput("edge floor must be 0 or 1");

    WeightedEnum en{pred, allowed_pairs_of(R, allowed_pairs), {}, {}, opts.budget,
                    SupportGraph(R.k()), SupportGraph(R.k()), {}, IntPoly(), 0};
    for (const PairState& p : en.pairs) {
        int r = R.r(p.i, p.j);
        IntPoly w = direction_weight(r, edge_floor);
        en.wboth.push_back(w * w);
        en.wdir.push_back(std::move(w));
        if (p.fwd_ok) en.potential.add(p.i, p.j);
        if (p.bwd_ok) en.potential.add(p.j, p.i);
    }
    en.stack.push_back(IntPoly::constant(1));

    int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || en.pairs.size() < 4) {
        en.run(0, 0);
        return en.acc;
    }

    // split the first few pair decisions into independent subtree tasks
    std::size_t prefix = std::min<std::size_t>(en.pairs.size(), 4);
    std::vector<EnumTask> tasks;
    std::function<void(std::size_t, const IntPoly&)> expand = [&](std::size_t depth,
                                                                  const IntPoly& prod) {
        if (++en.nodes > en.budget) throw BudgetExceeded("support enumeration budget exceeded");
        if (pred.dead(en.partial, en.potential)) return;
        if (depth == prefix) {
            tasks.push_back({en.partial, en.potential, prod, depth});
            return;
        }
        const PairState& p = en.pairs[depth];
        if (p.fwd_ok) en.potential.remove(p.i, p.j);
        if (p.bwd_ok) en.potential.remove(p.j, p.i);
        expand(depth + 1, prod);
        if (p.fwd_ok) en.potential.add(p.i, p.j);
        if (p.bwd_ok) en.potential.add(p.j, p.i);
        for (int dir = 0; dir < 2; ++dir) {
            bool ok = dir == 0 ? p.fwd_ok : p.bwd_ok;
            if (!ok) continue;
            int a = dir == 0 ? p.i : p.j;
            int b = dir == 0 ? p.j : p.i;
            bool other_ok = dir == 0 ? p.bwd_ok : p.fwd_ok;
            en.partial.add(a, b);
            if (other_ok) en.potential.remove(b, a);
            expand(depth + 1, prod * en.wdir[depth]);
            if (other_ok) en.potential.add(b, a);
            en.partial.remove(a, b);
        }
        if (p.fwd_ok && p.bwd_ok) {
            en.partial.add(p.i, p.j);
            en.partial.add(p.j, p.i);
            expand(depth + 1, prod * en.wboth[depth]);
            en.partial.remove(p.i, p.j);
            en.partial.remove(p.j, p.i);
        }
    };
    expand(0, IntPoly::constant(1));

    std::vector<IntPoly> results(tasks.size());
    std::vector<std::uint64_t> counts(tasks.size(), 0);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    auto worker = [&](int w) {
        try {
            for (;;) {
                std::size_t t = next.fetch_add(1);
                if (t >= tasks.size()) break;
                WeightedEnum sub{pred,        en.pairs,          en.wdir, en.wboth, en.budget,
                                 tasks[t].partial, tasks[t].potential, {},      IntPoly(), 0};
                sub.stack.push_back(tasks[t].prod);
                sub.run(tasks[t].depth, 0);
                results[t] = std::move(sub.acc);
                counts[t] = sub.nodes;
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::uint64_t total = en.nodes;
    IntPoly acc;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        total += counts[t];
        acc += results[t];
    }
    if (total > opts.budget) throw BudgetExceeded("support enumeration budget exceeded");
    return acc;
}

IntPoly count_weighted_bruteforce(const MultMatrix& R, const SupportPredicate& pred,
                                  int edge_floor, const EnumOptions& opts,
                                  EdgeMask allowed_pairs) {
    check_enum_size(R);
    int k = R.k();
    EdgeMask allowed = 0;
    for (int s = 0; s < opair_count(k); ++s)
        if (allowed_pairs >> s & 1) allowed |= EdgeMask(1) << s;

    std::vector<IntPoly> w(opair_count(k));
    for (int s = 0; s < opair_count(k); ++s) {
        auto [a, b] = opair_vertices(k, s);
        w[s] = direction_weight(R.r(a, b), edge_floor);
    }

    IntPoly acc;
    std::uint64_t nodes = 0;
    EdgeMask m = allowed;
    for (;;) {
        if (++nodes > opts.budget) throw BudgetExceeded("support enumeration budget exceeded");
        SupportGraph g = SupportGraph::from_mask(k, m);
        if (pred.test(g)) {
            IntPoly prod = IntPoly::constant(1);
            EdgeMask e = m;
            while (e) {
                int s = __builtin_ctzll(e);
                e &= e - 1;
                prod *= w[s];
            }
            acc += prod;
        }
        if (m == 0) break;
        m = (m - 1) & allowed;
    }
    return acc;
}

void for_each_support(const MultMatrix& R, const SupportPredicate& pred, const EnumOptions& opts,
                      EdgeMask allowed_pairs, const std::function<void(const SupportGraph&)>& leaf) {
    check_enum_size(R);
    std::vector<PairState> pairs = allowed_pairs_of(R, allowed_pairs);
    SupportGraph partial(R.k()), potential(R.k());
    for (const PairState& p : pairs) {
        if (p.fwd_ok) potential.add(p.i, p.j);
        if (p.bwd_ok) potential.add(p.j, p.i);
    }
    std::uint64_t nodes = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t depth) {
        if (++nodes > opts.budget) throw BudgetExceeded("support enumeration budget exceeded");
        if (depth == pairs.size()) {
            if (pred.test(partial)) leaf(partial);
            return;
        }
        if (pred.dead(partial, potential)) return;
        const PairState& p = pairs[depth];
        if (p.fwd_ok) potential.remove(p.i, p.j);
        if (p.bwd_ok) potential.remove(p.j, p.i);
        rec(depth + 1);
        if (p.fwd_ok) potential.add(p.i, p.j);
        if (p.bwd_ok) potential.add(p.j, p.i);
        for (int dir = 0; dir < 2; ++dir) {
            bool ok = dir == 0 ? p.fwd_ok : p.bwd_ok;
            if (!ok) continue;
            int a = dir == 0 ? p.i : p.j;
            int b = dir == 0 ? p.j : p.i;
            bool other_ok = dir == 0 ? p.bwd_ok : p.fwd_ok;
            partial.add(a, b);
            if (other_ok) potential.remove(b, a);
            rec(depth + 1);
            if (other_ok) potential.add(b, a);
            partial.remove(a, b);
        }
        if (p.fwd_ok && p.bwd_ok) {
            partial.add(p.i, p.j);
            partial.add(p.j, p.i);
            rec(depth + 1);
            partial.remove(p.i, p.j);
            partial.remove(p.j, p.i);
        }
    };
    rec(0);
}

}  // namespace galepoly
