#include <doctest.h>

#include <algorithm>
#include <random>

#include "galepoly/betti.hpp"
#include "galepoly/linalg.hpp"
#include "galepoly/ring.hpp"
#include "test_util.hpp"

using namespace galepoly;
using testutil::poly;

TEST_CASE("relation shapes") {
    for (int k = 2; k <= 5; ++k) {
        GradedPresentation gp = build_relations(MultMatrix::all_ones(k));
        CHECK(gp.relations.size() == (std::size_t(1) << (k - 1)) - 1);
        CHECK(gp.num_vars == k - 1);
    }

    GradedPresentation g2 = build_relations(MultMatrix(2, {3}));
    REQUIRE(g2.relations.size() == 1);
    CHECK(g2.relations[0].degree == 3);
    CHECK(g2.relations[0].poly == std::map<Monomial, Int>{{{3}, Int(1)}});  // x^3

    GradedPresentation g4 = build_relations(MultMatrix::all_ones(4));
    std::vector<long long> degrees;
    for (const Relation& r : g4.relations) degrees.push_back(r.degree);
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<long long>{3, 3, 3, 3, 4, 4, 4});
}

TEST_CASE("three quadrics span the whole quadric space") {
    GradedPresentation gp = build_relations(MultMatrix::all_ones(3));
    REQUIRE(gp.relations.size() == 3);
    for (const Relation& r : gp.relations) CHECK(r.degree == 2);
    ZMat rows;
    // monomial order x^2, xy, y^2
    for (const Relation& r : gp.relations) {
        std::vector<Int> row(3, Int(0));
        for (const auto& [m, c] : r.poly) {
            if (m == Monomial{2, 0}) row[0] = c;
            if (m == Monomial{1, 1}) row[1] = c;
            if (m == Monomial{0, 2}) row[2] = c;
        }
        rows.push_back(std::move(row));
    }
    CHECK(rank_z_bareiss(rows) == 3);
}

TEST_CASE("hilbert functions") {
    CHECK(hilbert_function(build_relations(MultMatrix::all_ones(3)), 2) == poly({1, 2}));
    for (int r = 1; r <= 4; ++r)
        CHECK(hilbert_function(build_relations(MultMatrix(2, {r})), r + 1) == p_poly(r));
    CHECK(hilbert_function(build_relations(MultMatrix::all_ones(4)), 4) ==
          g_poly_recursive(MultMatrix::all_ones(4)));
}

TEST_CASE("hilbert equals g") {
    CHECK(compare_to_g(MultMatrix(2, {3})).matches);
    CHECK(compare_to_g(MultMatrix::all_ones(3)).matches);
    CHECK(compare_to_g(MultMatrix(3, {2, 1, 1})).matches);
    RingCheck rc = compare_to_g(MultMatrix::all_ones(3));
    CHECK(rc.hilbert == poly({1, 2}));
    CHECK(rc.g == poly({1, 2}));
}

TEST_CASE("hilbert shape") {
    for (const MultMatrix& R : testutil::all_instances(3, 2)) {
        RingCheck rc = compare_to_g(R);
        CHECK(rc.matches);
        CHECK(rc.hilbert.coeff(0) == 1);
        for (const Int& c : rc.hilbert.coeffs()) CHECK(c >= 0);
    }
}

TEST_CASE("exact rank tools") {
    ZMat m{{2, 4, 6}, {1, 2, 3}, {0, 1, 1}};
    CHECK(rank_z_bareiss(m) == 2);
    CHECK(det_z(ZMat{{1, 2}, {3, 4}}) == -2);
    CHECK(det_z(ZMat{{2, 0}, {0, 3}}) == 6);

    // modular fast path agrees with the exact rank
    std::mt19937_64 rng(55);
    for (int t = 0; t < 40; ++t) {
        std::size_t rows = 2 + rng() % 6, cols = 2 + rng() % 6;
        ZMat a(rows, std::vector<Int>(cols));
        for (auto& row : a)
            for (auto& x : row) x = Int(static_cast<long>(rng() % 19) - 9);
        int exact = rank_z_bareiss(a);
        CHECK(rank_mod_p(a, 2305843009213693951ull) == exact);  // 2^61 - 1
        CHECK(rank_mod_p(a, 1000000007ull) == exact);
        QMat q(rows, std::vector<Rat>(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) q[i][j] = Rat(a[i][j]);
        CHECK(rank_q(q) == exact);
    }
}

TEST_CASE("kernel basis") {
    // kernel of (1 1 1) is two-dimensional and orthogonal to the row
    ZMat a{{1, 1, 1}};
    ZMat ker = kernel_z(a);
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) {
        Int s = 0;
        for (const Int& x : v) s += x;
        CHECK(s == 0);
    }
}
