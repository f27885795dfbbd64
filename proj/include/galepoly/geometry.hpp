#pragma once

#include <cstdint>
#include <vector>

#include "galepoly/graph.hpp"
#include "galepoly/lattice.hpp"
#include "galepoly/linalg.hpp"

namespace galepoly {

/*
 * Explicit Gale dual construction, used as the trusted oracle against the
 * combinatorial modules. Deliberately slow and simple; everything is exact.
 *
 * alphas lists the root copies in the fixed order (1,2),(2,1),(1,3),(3,1),...
 * with the vector e_i - e_j repeated r_ij times; the copy for e_i - e_j
 * corresponds to the directed edge j -> i. betas are the columns of an
 * integer kernel-lattice basis of the evaluation map x -> sum x_m alpha_m,
 * so they span a space of dimension n - k + 1.
 */
struct GaleData {
    MultMatrix R;
    ZMat alphas;                 // n vectors of length k
    ZMat betas;                  // n vectors of length n-k+1
    std::vector<int> edge_slot;  // ordered-pair slot of each copy
};

GaleData build_gale(const MultMatrix& R);

// Random-instance check of the duality: integer relations among the alphas
// correspond exactly to linear functionals on the betas.
bool verify_gale(const GaleData& gd, int trials, std::uint64_t seed = 20240901);

// Every linearly independent (k-1)-subset of the distinct alpha vectors has
// determinant +-1 with respect to the sum-zero integer lattice.
bool verify_unimodular(const GaleData& gd);

// Certifies the face correspondence against the lattice module: a positive
// rational relation on every claimed core support (built from directed cycle
// covers), a separating functional on sampled non-naked subsets, and an
// affine-rank check of face dimensions (all faces up to rank_sample_cap,
// a deterministic stride sample beyond).
bool verify_faces(const GaleData& gd, const FaceLattice& lat, int rank_sample_cap = 2000);

// Coordinates of theta in the basis formed by a spanning tree's roots.
// Throws when the solution is not unique or not integral.
std::vector<Int> theta_coords(const GaleData& gd, const std::vector<int>& tree_slots,
                              const std::vector<long long>& theta);

}  // namespace galepoly
