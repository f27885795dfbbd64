#pragma once

#include <map>
#include <vector>

#include "galepoly/errors.hpp"
#include "galepoly/graph.hpp"
#include "galepoly/poly.hpp"

namespace galepoly {

/*
 * Graded presentation of the cohomology ring of the central fiber: the
 * polynomial ring in x_i = eps_i - eps_k (i < k) modulo one relation per
 * unordered two-block partition D1 | D2 of the vertices, the product of
 * (eps_i - eps_j)^{r_ij} over crossing pairs. The Hilbert function of the
 * quotient is computed degreewise by exact rank.
 */

using Monomial = std::vector<int>;  // exponents of x_1 .. x_{k-1}

struct Relation {
    std::vector<int> block1, block2;  // vertex 1 lives in block1
    long long degree = 0;
    std::map<Monomial, Int> poly;
};

struct GradedPresentation {
    int k = 0;
    int num_vars = 0;
    std::vector<Relation> relations;  // 2^(k-1) - 1 of them
};

GradedPresentation build_relations(const MultMatrix& R);

// Coefficient of t^m = dim of the degree-m graded piece of the quotient,
// for m <= max_deg. Ranks are exact (fraction-free elimination).
IntPoly hilbert_function(const GradedPresentation& gp, int max_deg, const EnumOptions& opts = {});

struct RingCheck {
    bool matches = false;
    IntPoly hilbert;
    IntPoly g;
};

// Hilbert function up to deg(g)+1 against the g-polynomial.
RingCheck compare_to_g(const MultMatrix& R, const EnumOptions& opts = {});

}  // namespace galepoly
