#include <doctest.h>

#include <functional>
#include <vector>

#include "galepoly/betti.hpp"
#include "test_util.hpp"

using namespace galepoly;
using testutil::poly;

TEST_CASE("g_hat counts") {
    IntPoly gh = g_hat(MultMatrix::all_ones(3));
    CHECK(gh == poly({3, 2}));
    CHECK(g_hat(MultMatrix::all_ones(2)) == poly({1}));
    CHECK(g_hat(MultMatrix::all_ones(1)) == poly({1}));
}

TEST_CASE("g_poly") {
    CHECK(g_poly(MultMatrix::all_ones(3)) == poly({1, 2}));
    // k=2 with doubled edge: derived from h = (1+t)^2
    MultMatrix r2(2, {2});
    CHECK(g_poly(r2) == g_from_h(pow(p_poly(2), 2), r2.dim()));
    CHECK(g_poly(r2) == poly({1, 1}));
    CHECK(g_poly(MultMatrix::all_ones(1)) == poly({1}));
}

TEST_CASE("g recursion agrees with counting") {
    CHECK(g_poly_recursive(MultMatrix::all_ones(3)) == poly({1, 2}));
    CHECK(g_poly_recursive(MultMatrix::all_ones(1)) == poly({1}));
    for (int r12 = 1; r12 <= 4; ++r12) {
        MultMatrix R(2, {r12});
        CHECK(g_poly_recursive(R) == g_poly(R));
    }
    for (const MultMatrix& R : testutil::all_instances(3, 2))
        CHECK(g_poly_recursive(R) == g_poly(R));
}

TEST_CASE("h_hat counts") {
    MultMatrix R2 = MultMatrix::all_ones(2);
    CHECK(h_hat(R2) == poly({1}));  // only the 2-cycle
    IntPoly hh = h_hat(MultMatrix::all_ones(3));
    CHECK(shift(hh, Int(-1)) == poly({1, 3, 3, 1}));
    CHECK_THROWS_AS(h_hat(MultMatrix::all_ones(1)), InvalidInput);
}

TEST_CASE("h_poly products") {
    CHECK(h_poly(MultMatrix::all_ones(3)) == poly({1, 3, 3, 1}));
    for (int r = 1; r <= 4; ++r) CHECK(h_poly(MultMatrix(2, {r})) == pow(p_poly(r), 2));
    // three-vertex instances match the product of simplex factors
    for (const MultMatrix& R : testutil::all_instances(3, 3)) {
        IntPoly expect = IntPoly::constant(1);
        for (int i = 1; i <= 3; ++i) {
            long ri = 0;
            for (int j = 1; j <= 3; ++j)
                if (j != i) ri += R.r(i, j);
            expect *= p_poly(ri);
        }
        CHECK(h_poly(R) == expect);
    }
}

namespace {

// every set partition of {1..m}, as block index assignments
void all_partitions(int m, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> assign(m, 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == m) {
            fn(assign);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            assign[i] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
}

int admissible_partitions(int m) {
    int count = 0;
    all_partitions(m, [&](const std::vector<int>& assign) {
        int blocks = 0;
        for (int b : assign) blocks = std::max(blocks, b + 1);
        if (blocks < 2) return;
        std::vector<int> size(blocks, 0);
        for (int b : assign) ++size[b];
        for (int s : size)
            if (s < 2) return;
        ++count;
    });
    return count;
}

}  // namespace

TEST_CASE("h recursion") {
    // no partition of a 3-set into >=2 blocks of size >=2 exists
    CHECK(admissible_partitions(3) == 0);
    CHECK(h_poly_recursive(MultMatrix::all_ones(3)) == poly({1, 3, 3, 1}));

    // k=4: exactly the three 2+2 splits are subtracted
    CHECK(admissible_partitions(4) == 3);
    IntPoly expect = pow(p_poly(3), 4) - IntPoly::monomial(4, 3);
    CHECK(h_poly_recursive(MultMatrix::all_ones(4)) == expect);
    CHECK(h_poly(MultMatrix::all_ones(4)) == expect);

    for (int r = 1; r <= 3; ++r) {
        MultMatrix R(2, {r});
        CHECK(h_poly_recursive(R) == h_poly(R));
    }
    for (const MultMatrix& R : testutil::all_instances(3, 2))
        CHECK(h_poly_recursive(R) == h_poly(R));
}

TEST_CASE("intro specializations") {
    CHECK(intro_g(1) == poly({1}));
    CHECK(intro_h(3) == poly({1, 3, 3, 1}));
    CHECK(intro_g(3) == poly({1, 2}));
    CHECK(intro_h(1) == poly({1}));
    for (int k = 2; k <= 5; ++k) {
        MultMatrix R = MultMatrix::all_ones(k);
        CHECK(intro_g(k) == g_poly_recursive(R));
        CHECK(intro_h(k) == h_poly_recursive(R));
    }
    CHECK(intro_g(4) == g_poly(MultMatrix::all_ones(4)));
    CHECK(intro_h(4) == h_poly(MultMatrix::all_ones(4)));
}

TEST_CASE("polynomial shape invariants") {
    for (const MultMatrix& R : testutil::all_instances(3, 2)) {
        IntPoly g = g_poly(R), h = h_poly(R);
        CHECK(is_palindromic(h));
        CHECK(h.degree() == R.dim());
        CHECK(g.coeff(0) == 1);
        CHECK(h.coeff(0) == 1);
        CHECK(g.degree() <= R.dim() / 2);
        for (const Int& c : g.coeffs()) CHECK(c >= 0);
        for (const Int& c : h.coeffs()) CHECK(c >= 0);
        CHECK(g == g_from_h(h, R.dim()));
    }
}
