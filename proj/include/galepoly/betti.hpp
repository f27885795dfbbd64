#pragma once

#include "galepoly/graph.hpp"
#include "galepoly/poly.hpp"

namespace galepoly {

/*
 * g- and h-polynomials of the Gale dual root polytope of an instance R,
 * by labelled-subgraph counting and by the two recursions. All results are
 * exact; the counting paths share the weighted support enumeration of the
 * graph layer.
 */

// Coefficient i = number of labelled acyclic sub-multigraphs of K_k(R) minus
// the out-edges of vertex 1, spanning, rooted at vertex 1, with k-1+i edge
// copies.
IntPoly g_hat(const MultMatrix& R, const EnumOptions& opts = {});

// Coefficient i = number of labelled sub-multigraphs of K_k(R), spanning,
// rooted at vertex 1, containing a directed cycle, with k+i edge copies.
IntPoly h_hat(const MultMatrix& R, const EnumOptions& opts = {});

IntPoly g_poly(const MultMatrix& R, const EnumOptions& opts = {});
IntPoly h_poly(const MultMatrix& R, const EnumOptions& opts = {});

// Inclusion-exclusion over the vertices without in-edges, memoized on the
// vertex subset.
IntPoly g_poly_recursive(const MultMatrix& R);

// Product of simplex factors minus the set-partition correction (blocks of
// size >= 2 only), memoized on the vertex subset.
IntPoly h_poly_recursive(const MultMatrix& R);

// Specializations for the unit-multiplicity instance, computed from the
// closed recursions in k alone.
IntPoly intro_g(int k);
IntPoly intro_h(int k);

}  // namespace galepoly
