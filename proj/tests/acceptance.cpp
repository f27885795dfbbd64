// Acceptance suite: every release criterion in one binary, one pass/fail
// line each, exact values throughout. Exits nonzero if anything fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <vector>

#include "galepoly/betti.hpp"
#include "galepoly/geometry.hpp"
#include "galepoly/lattice.hpp"
#include "galepoly/ring.hpp"

using namespace galepoly;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double limit_seconds,
               const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs > limit_seconds) {
        ok = false;
        error = "time limit exceeded";
    }
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                secs, error.empty() ? "" : " -- ", error.c_str());
    if (!ok) ++failures;
}

IntPoly make_poly(std::initializer_list<long> coeffs) {
    std::vector<Int> c;
    for (long v : coeffs) c.push_back(Int(v));
    return IntPoly(std::move(c));
}

std::vector<MultMatrix> instances_up_to(int kmax, int rmax) {
    std::vector<MultMatrix> out;
    for (int k = 2; k <= kmax; ++k) {
        int pairs = upair_count(k);
        std::vector<int> up(pairs, 1);
        for (;;) {
            out.push_back(MultMatrix(k, up));
            int i = 0;
            while (i < pairs && up[i] == rmax) up[i++] = 1;
            if (i == pairs) break;
            ++up[i];
        }
    }
    return out;
}

std::vector<int> whole(const MultMatrix& R) { return std::vector<int>(opair_count(R.k()), 0); }

IntPoly at_t_squared(const IntPoly& p) {
    if (p.is_zero()) return p;
    std::vector<Int> c(2 * p.degree() + 1, Int(0));
    for (int i = 0; i <= p.degree(); ++i) c[2 * i] = p.coeff(i);
    return IntPoly(std::move(c));
}

}  // namespace

int main() {
    const IntPoly g_prism = make_poly({1, 2});
    const IntPoly h_prism = make_poly({1, 3, 3, 1});
    const MultMatrix prism = MultMatrix::all_ones(3);

    criterion(1, "prism g and h by all four methods", 1.0, [&] {
        bool ok = g_poly(prism) == g_prism;
        ok = ok && g_poly_recursive(prism) == g_prism;
        ok = ok && stanley_g(prism, whole(prism)) == g_prism;
        ok = ok && g_from_h(h_poly(prism), prism.dim()) == g_prism;
        ok = ok && h_poly(prism) == h_prism;
        ok = ok && h_poly_recursive(prism) == h_prism;
        ok = ok && stanley_h(prism, whole(prism)) == h_prism;
        return ok;
    });

    criterion(2, "rooted acyclic subgraph counts of the unit triangle", 0, [&] {
        IntPoly gh = g_hat(prism);
        return gh.coeff(0) == 3 && gh.coeff(1) == 2 && gh.degree() == 1;
    });

    criterion(3, "two-vertex h-polynomials are squared simplex factors", 0, [&] {
        for (int r = 1; r <= 5; ++r)
            if (h_poly(MultMatrix(2, {r})) != pow(p_poly(r), 2)) return false;
        return true;
    });

    criterion(4, "three-vertex h-polynomials are products of simplex factors", 10.0, [&] {
        for (int r12 = 1; r12 <= 3; ++r12)
            for (int r13 = 1; r13 <= 3; ++r13)
                for (int r23 = 1; r23 <= 3; ++r23) {
                    MultMatrix R(3, {r12, r13, r23});
                    IntPoly expect =
                        p_poly(r12 + r13) * p_poly(r12 + r23) * p_poly(r13 + r23);
                    if (h_poly(R) != expect) return false;
                    if (h_poly_recursive(R) != expect) return false;
                }
        return true;
    });

    criterion(5, "prism face lattice and square g-polynomial", 0, [&] {
        FaceLattice lat = enumerate_faces(prism);
        if (lat.f_vector != std::vector<Int>{Int(6), Int(9), Int(5)}) return false;
        int simplices = 0, squares = 0;
        for (const Face& f : lat.faces) {
            if (f.dim != 2) continue;
            long long e = 0;
            for (int c : f.core) e += c;
            if (e == 3 && stanley_g(prism, f.core) == make_poly({1})) ++simplices;
            if (e == 2 && stanley_g(prism, f.core) == make_poly({1, 1})) ++squares;
        }
        return simplices == 2 && squares == 3;
    });

    criterion(6, "fiber over a square-face point", 0, [&] {
        ThetaParam th = analyze_theta(prism, {2, -1, -1});
        std::vector<int> square(opair_count(3), 0);
        square[opair_index(3, 1, 2)] = 1;
        square[opair_index(3, 2, 1)] = 1;
        FiberReport rep = fiber_poincare(prism, square, th);
        return rep.poincare == make_poly({1, 0, 1});
    });

    criterion(7, "central fiber components for the unit four-vertex instance", 0, [&] {
        MultMatrix R = MultMatrix::all_ones(4);
        CentralFiber f1 = top_components(R, analyze_theta(R, theta_one(4)));
        if (f1.components.size() != 6) return false;
        for (const TopComponent& c : f1.components)
            if (c.poincare != make_poly({1, 0, 2, 0, 2, 0, 1})) return false;
        CentralFiber f2 = top_components(R, analyze_theta(R, {2, -3, 2, -1}));
        if (f2.components.size() != 6) return false;
        int p3 = 0;
        for (const TopComponent& c : f2.components)
            if (c.poincare == make_poly({1, 0, 1, 0, 1, 0, 1})) ++p3;
        return p3 == 2;
    });

    criterion(8, "smallness certificates, canonical and random parameters", 300.0, [&] {
        for (const MultMatrix& R : instances_up_to(4, 2)) {
            std::vector<std::vector<long long>> thetas{theta_one(R.k())};
            for (std::uint64_t s = 1; s <= 5; ++s)
                thetas.push_back(random_generic_theta(R, s * 1000 + R.total_copies()));
            for (const auto& theta : thetas) {
                SmallCertificate cert = certify_small(R, analyze_theta(R, theta));
                if (!cert.small) return false;
                for (const FiberReport& rep : cert.reports)
                    if (!rep.small_ok) return false;
            }
        }
        return true;
    });

    criterion(9, "cross-method agreement with shape invariants", 0, [&] {
        std::vector<MultMatrix> suite = instances_up_to(4, 2);
        suite.push_back(MultMatrix::all_ones(5));
        for (const MultMatrix& R : suite) {
            IntPoly g = g_poly(R);
            IntPoly h = h_poly(R);
            if (g_poly_recursive(R) != g) return false;
            if (stanley_g(R, whole(R)) != g) return false;
            if (face_g_graphical(R, whole(R)) != g) return false;
            if (g_from_h(h, R.dim()) != g) return false;
            if (h_poly_recursive(R) != h) return false;
            if (stanley_h(R, whole(R)) != h) return false;
            if (!is_palindromic(h) || h.degree() != R.dim()) return false;
            if (g.coeff(0) != 1 || h.coeff(0) != 1) return false;
            for (const Int& c : g.coeffs())
                if (c < 0) return false;
            for (const Int& c : h.coeffs())
                if (c < 0) return false;
        }
        return true;
    });

    criterion(10, "theta independence of the central fiber cohomology", 0, [&] {
        for (const MultMatrix& R : instances_up_to(4, 2)) {
            ThetaParam th1 = analyze_theta(R, theta_one(R.k()));
            IntPoly ref = fiber_poincare(R, whole(R), th1).poincare;
            if (ref != at_t_squared(g_poly_recursive(R))) return false;
            for (std::uint64_t s = 0; s < 2; ++s) {
                ThetaParam th =
                    analyze_theta(R, random_generic_theta(R, 31 * s + 7 + R.total_copies()));
                if (fiber_poincare(R, whole(R), th).poincare != ref) return false;
            }
        }
        return true;
    });

    criterion(11, "Hilbert function equals the g-polynomial", 0, [&] {
        for (int r = 1; r <= 4; ++r)
            if (!compare_to_g(MultMatrix(2, {r})).matches) return false;
        for (const MultMatrix& R : instances_up_to(3, 2))
            if (R.k() == 3 && !compare_to_g(R).matches) return false;
        return compare_to_g(MultMatrix::all_ones(4)).matches;
    });

    criterion(12, "geometry oracle validates every small instance", 0, [&] {
        for (const MultMatrix& R : instances_up_to(4, 2)) {
            GaleData gd = build_gale(R);
            if (!verify_gale(gd, 100)) return false;
            if (!verify_unimodular(gd)) return false;
            if (!verify_faces(gd, enumerate_faces(R))) return false;
        }
        return true;
    });

    criterion(13, "performance: counting at five vertices, recursions at eight", 70.0, [&] {
        MultMatrix five = MultMatrix::all_ones(5);
        auto t0 = std::chrono::steady_clock::now();
        IntPoly g5 = g_poly(five);
        IntPoly h5 = h_poly(five);
        double count_secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (count_secs > 60.0) return false;
        if (g_from_h(h5, five.dim()) != g5) return false;

        MultMatrix eight = MultMatrix::all_ones(8);
        t0 = std::chrono::steady_clock::now();
        IntPoly g8 = g_poly_recursive(eight);
        IntPoly h8 = h_poly_recursive(eight);
        double rec_secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (rec_secs > 10.0) return false;
        if (g8 != g_from_h(h8, eight.dim())) return false;
        if (!is_palindromic(h8) || h8.degree() != eight.dim()) return false;
        return intro_g(8) == g8 && intro_h(8) == h8;
    });

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
