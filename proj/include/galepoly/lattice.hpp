#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "galepoly/errors.hpp"
#include "galepoly/graph.hpp"
#include "galepoly/poly.hpp"

namespace galepoly {

/*
 * Face lattice of the Gale dual polytope and everything living on it.
 *
 * A face is stored by its core: the counted sub-multigraph of edge copies
 * NOT spanning the face. A count vector is a face core exactly when its
 * support is naked, and dim F = n - e(core) - s(core). The whole polytope
 * has the empty core; the full multigraph is the core of the empty face
 * (dim -1). Count vectors stand for orbits of labelled faces under the
 * exchange of parallel copies; orbit_size carries the labelled count.
 */

struct Face {
    std::vector<int> core;  // counts by ordered-pair slot
    int dim = 0;
    Int orbit_size;
    std::string id;  // counts joined by commas
};

struct FaceLattice {
    MultMatrix R;
    std::vector<Face> faces;  // (dim desc, id asc); includes the polytope itself and the empty face
    std::vector<Int> f_vector;                // labelled counts, dimensions 0 .. dim-1
    std::vector<std::pair<int, int>> covers;  // (lower index, upper index), dim difference 1
    bool covers_complete = true;
};

std::string face_id(const std::vector<int>& core);
std::vector<int> parse_face_id(const MultMatrix& R, const std::string& id);
int face_dim(const MultMatrix& R, const std::vector<int>& core);

FaceLattice enumerate_faces(const MultMatrix& R, const EnumOptions& opts = {});

/*
 * GIT parameter. theta is generic when it avoids every simplicial-cone
 * boundary of the root configuration; trees then holds the oriented
 * spanning trees whose open basis cone contains theta (coordinates are
 * integral by unimodularity and computed by exact leaf stripping).
 */
struct ThetaParam {
    std::vector<long long> theta;
    bool generic = false;
    std::vector<EdgeMask> trees;
};

std::vector<long long> theta_one(int k);
ThetaParam analyze_theta(const MultMatrix& R, const std::vector<long long>& theta);
std::vector<long long> random_generic_theta(const MultMatrix& R, std::uint64_t seed);

// Stanley recursion over the face lattice. Both are evaluated through the
// block contraction of the core (strongly connected classes collapse to
// single vertices, parallel capacity inside classes becomes free prism
// directions), memoized on the contracted instance.
IntPoly stanley_h(const MultMatrix& R, const std::vector<int>& core, const EnumOptions& opts = {});
IntPoly stanley_g(const MultMatrix& R, const std::vector<int>& core, const EnumOptions& opts = {});

// Independent graph-theoretic route to the same polynomial: counts spanning
// sub-multigraphs rooted at vertex 1 whose maximal naked core equals the
// face core, graded by edge copies.
IntPoly face_g_graphical(const MultMatrix& R, const std::vector<int>& core,
                         const EnumOptions& opts = {});

struct FiberReport {
    std::string face;
    int face_dim = 0;
    IntPoly poincare;   // even grading; coefficient of t^(2l) = dim H^(2l)
    int fiber_dim = 0;
    long long stratum_codim = 0;
    bool small_ok = false;
    Int class_faces;    // face orbits sharing this report (1 for fiber_poincare)
};

FiberReport fiber_poincare(const MultMatrix& R, const std::vector<int>& core, const ThetaParam& th,
                           const EnumOptions& opts = {});

struct SmallCertificate {
    bool small = false;
    Int faces_checked;
    std::vector<FiberReport> reports;  // one per core-support class, worst face as representative
};

// Checks codim > 2 * fiber_dim on every nonempty face other than the whole
// polytope (whose stratum is handled by fiat); fiber data is shared across
// faces with the same core support, and the check per class is done at the
// worst (largest) edge count.
SmallCertificate certify_small(const MultMatrix& R, const ThetaParam& th,
                               const EnumOptions& opts = {});

struct TopComponent {
    SubMultigraph graph;
    long long dim = 0;
    IntPoly poincare;  // even grading
};

struct CentralFiber {
    std::vector<TopComponent> components;
    // (component index, component index, common edges)
    std::vector<std::tuple<int, int, SubMultigraph>> intersections;
};

// Irreducible components of the fiber over the cone point: maximal acyclic
// spanning sub-multigraphs whose support contains a theta-tree.
CentralFiber top_components(const MultMatrix& R, const ThetaParam& th,
                            const EnumOptions& opts = {});

}  // namespace galepoly
