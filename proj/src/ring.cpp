#include "galepoly/ring.hpp"

#include <algorithm>
#include <functional>

#include "galepoly/betti.hpp"
#include "galepoly/linalg.hpp"

namespace galepoly {

namespace {

using MPoly = std::map<Monomial, Int>;

MPoly mpoly_one(int vars) { return {{Monomial(vars, 0), Int(1)}}; }

// multiply by the linear form x_a - x_b (index -1 stands for x_k = 0)
MPoly mul_linear(const MPoly& p, int a, int b) {
    MPoly res;
    auto add_term = [&](Monomial m, int var, const Int& c) {
        if (var < 0) return;
        m[var] += 1;
        res[std::move(m)] += c;
    };
    for (const auto& [m, c] : p) {
        add_term(m, a, c);
        add_term(m, b, -c);
    }
    for (auto it = res.begin(); it != res.end();)
        it = it->second == 0 ? res.erase(it) : std::next(it);
    return res;
}

}  // namespace

GradedPresentation build_relations(const MultMatrix& R) {
    int k = R.k();
    if (k < 2) throw InvalidInput("ring presentation needs at least two vertices");
    GradedPresentation gp;
    gp.k = k;
    gp.num_vars = k - 1;
    // subsets of {2..k} joined with vertex 1 form block1; skip the full set
    for (std::uint32_t sub = 0; sub + 1 < (std::uint32_t(1) << (k - 1)); ++sub) {
        Relation rel;
        rel.block1.push_back(1);
        for (int v = 2; v <= k; ++v)
            if (sub >> (v - 2) & 1)
                rel.block1.push_back(v);
            else
                rel.block2.push_back(v);
        MPoly poly = mpoly_one(gp.num_vars);
        for (int i : rel.block1)
            for (int j : rel.block2) {
                rel.degree += R.r(i, j);
                for (int c = 0; c < R.r(i, j); ++c)
                    poly = mul_linear(poly, i == k ? -1 : i - 1, j == k ? -1 : j - 1);
            }
        rel.poly = std::move(poly);
        gp.relations.push_back(std::move(rel));
    }
    return gp;
}

namespace {

void monomials_of_degree(int vars, int deg, std::vector<Monomial>& out) {
    Monomial m(vars, 0);
    std::function<void(int, int)> rec = [&](int var, int rem) {
        if (var == vars - 1) {
            m[var] = rem;
            out.push_back(m);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            m[var] = e;
            rec(var + 1, rem - e);
        }
    };
    if (vars == 0) {
        if (deg == 0) out.push_back({});
        return;
    }
    rec(0, deg);
}

}  // namespace

IntPoly hilbert_function(const GradedPresentation& gp, int max_deg, const EnumOptions& opts) {
    std::vector<Int> dims(max_deg + 1);
    for (int m = 0; m <= max_deg; ++m) {
        std::vector<Monomial> basis;
        monomials_of_degree(gp.num_vars, m, basis);
        std::map<Monomial, int> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

        ZMat rows;
        for (const Relation& rel : gp.relations) {
            if (rel.degree > m) continue;
            std::vector<Monomial> mults;
            monomials_of_degree(gp.num_vars, m - static_cast<int>(rel.degree), mults);
            for (const Monomial& u : mults) {
                std::vector<Int> row(basis.size(), Int(0));
                for (const auto& [mon, c] : rel.poly) {
                    Monomial prod(gp.num_vars);
                    for (int v = 0; v < gp.num_vars; ++v) prod[v] = mon[v] + u[v];
                    row[index.at(prod)] = c;
                }
                rows.push_back(std::move(row));
            }
        }
        if (static_cast<std::uint64_t>(rows.size() + 1) * (basis.size() + 1) > opts.budget)
            throw BudgetExceeded("hilbert matrix exceeds the budget");
        int rank = rows.empty() ? 0 : rank_z_bareiss(rows);
        dims[m] = Int(static_cast<long>(basis.size())) - rank;
    }
    return IntPoly(std::move(dims));
}

RingCheck compare_to_g(const MultMatrix& R, const EnumOptions& opts) {
    RingCheck rc;
    rc.g = g_poly_recursive(R);
    int gdeg = rc.g.is_zero() ? 0 : rc.g.degree();
    rc.hilbert = hilbert_function(build_relations(R), gdeg + 1, opts);
    rc.matches = rc.hilbert == rc.g;
    return rc;
}

}  // namespace galepoly
