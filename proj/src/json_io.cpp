#include "galepoly/json_io.hpp"

namespace galepoly {

Json poly_json(const IntPoly& p) {
    Json coeffs = Json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(c.get_str());
    return Json{{"var", "t"}, {"coeffs", coeffs}};
}

Json int_json(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Json graph_json(const SubMultigraph& g) {
    Json edges = Json::array();
    for (int s = 0; s < opair_count(g.k()); ++s) {
        if (g.counts()[s] == 0) continue;
        auto [from, to] = opair_vertices(g.k(), s);
        edges.push_back(Json{{"from", from}, {"to", to}, {"copies", g.counts()[s]}});
    }
    return Json{{"k", g.k()}, {"edges", edges}};
}

Json faces_json(const FaceLattice& lat) {
    Json faces = Json::array();
    for (const Face& f : lat.faces) {
        faces.push_back(Json{{"id", f.id},
                             {"dim", f.dim},
                             {"core", graph_json(SubMultigraph(lat.R, f.core))},
                             {"labelled_faces", int_json(f.orbit_size)}});
    }
    Json order = Json::array();
    for (auto [lo, hi] : lat.covers)
        order.push_back(Json::array({lat.faces[lo].id, lat.faces[hi].id}));
    Json fv = Json::array();
    for (const Int& c : lat.f_vector) fv.push_back(int_json(c));
    return Json{{"faces", faces},
                {"order", order},
                {"order_complete", lat.covers_complete},
                {"f_vector", fv}};
}

Json fiber_json(const FiberReport& rep) {
    return Json{{"face", rep.face},
                {"dim", rep.face_dim},
                {"poincare", poly_json(rep.poincare)},
                {"fiber_dim", rep.fiber_dim},
                {"stratum_codim", rep.stratum_codim},
                {"small_ok", rep.small_ok},
                {"class_faces", int_json(rep.class_faces)}};
}

Json certificate_json(const ThetaParam& th, const SmallCertificate& cert) {
    Json reports = Json::array();
    for (const FiberReport& r : cert.reports) reports.push_back(fiber_json(r));
    return Json{{"theta", th.theta},
                {"generic", th.generic},
                {"reports", reports},
                {"small", cert.small},
                {"faces_checked", int_json(cert.faces_checked)}};
}

Json components_json(const ThetaParam& th, const MultMatrix& R, const CentralFiber& fib) {
    (void)R;
    Json comps = Json::array();
    for (const TopComponent& c : fib.components) {
        comps.push_back(Json{{"graph", graph_json(c.graph)},
                             {"dim", c.dim},
                             {"poincare", poly_json(c.poincare)}});
    }
    Json inters = Json::array();
    for (const auto& [a, b, common] : fib.intersections)
        inters.push_back(Json{{"a", a}, {"b", b}, {"common", graph_json(common)}});
    return Json{{"theta", th.theta}, {"components", comps}, {"intersections", inters}};
}

Json ring_json(const GradedPresentation& gp, const RingCheck& rc) {
    Json rels = Json::array();
    for (const Relation& r : gp.relations) {
        rels.push_back(Json{{"partition", Json::array({r.block1, r.block2})},
                            {"degree", r.degree}});
    }
    return Json{{"relations", rels},
                {"hilbert", poly_json(rc.hilbert)},
                {"matches_g", rc.matches}};
}

}  // namespace galepoly
