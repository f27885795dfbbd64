#pragma once

#include <json.hpp>

#include "galepoly/geometry.hpp"
#include "galepoly/graph.hpp"
#include "galepoly/lattice.hpp"
#include "galepoly/poly.hpp"
#include "galepoly/ring.hpp"

namespace galepoly {

using Json = nlohmann::ordered_json;

// {"var":"t","coeffs":["1","2"]}, coefficients as decimal strings, lowest
// degree first; the zero polynomial has an empty list.
Json poly_json(const IntPoly& p);

// {"k":3,"edges":[{"from":2,"to":1,"copies":1},...]}
Json graph_json(const SubMultigraph& g);

Json int_json(const Int& v);  // number when it fits, decimal string otherwise

Json faces_json(const FaceLattice& lat);
Json fiber_json(const FiberReport& rep);
Json certificate_json(const ThetaParam& th, const SmallCertificate& cert);
Json components_json(const ThetaParam& th, const MultMatrix& R, const CentralFiber& fib);
Json ring_json(const GradedPresentation& gp, const RingCheck& rc);

}  // namespace galepoly
