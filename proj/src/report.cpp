#include "trikit/report.hpp"

namespace trikit {

namespace {

std::string big(const BigInt& b) { return b.str(); }

Json torsion_list(const std::vector<BigInt>& t) {
  Json out = Json::array();
  for (const auto& x : t) out.push_back(big(x));
  return out;
}

Json word_json(const Word& w) {
  Json out = Json::array();
  for (Letter l : w) out.push_back(l);
  return out;
}

}  // namespace

Json to_json(const SimplicialComplex& k, const Simplex& s) {
  Json out = Json::array();
  for (const auto& l : k.labels_of(s)) out.push_back(l);
  return out;
}

Json to_json(const Group& g) {
  return Json{{"betti", g.betti}, {"torsion", torsion_list(g.torsion)}};
}

Json to_json(const HomologyProfile& p) {
  Json groups = Json::array();
  for (int i = p.first_dim; i <= p.last_dim(); ++i) {
    Json g = to_json(p.at(i));
    g["dim"] = i;
    g["text"] = p.at(i).to_string(p.ring);
    groups.push_back(std::move(g));
  }
  return Json{{"ring", p.ring.name()},
              {"reduced", p.reduced},
              {"cohomology", p.cohomology},
              {"groups", std::move(groups)}};
}

Json to_json(const SimplicialComplex& k, const PseudomanifoldReport& r) {
  Json out{{"pure", r.pure},
           {"ridge_degree_two", r.ridge_degree_two},
           {"strongly_connected", r.strongly_connected},
           {"closed_pseudomanifold", r.ok()}};
  if (r.bad_ridge) out["bad_ridge"] = to_json(k, *r.bad_ridge);
  return out;
}

Json to_json(const GroupPresentation& p) {
  Json relators = Json::array();
  for (const auto& r : p.relators) relators.push_back(word_json(r));
  Json out{{"generators", p.generators}, {"relators", std::move(relators)}, {"text", p.to_string()}};
  if (!p.tree_edges.empty() || !p.generator_edges.empty()) {
    out["tree_edges"] = p.tree_edges;
    out["generator_edges"] = p.generator_edges;
  }
  return out;
}

Json to_json(const FreenessVerdict& v) {
  Json out{{"verdict", std::string(to_string(v.kind))}, {"text", v.to_string()}};
  if (v.kind == FreenessKind::free) out["rank"] = v.free_rank;
  if (v.kind == FreenessKind::not_free) out["reason"] = std::string(to_string(v.reason));
  out["abelianization"] = to_json(v.abelianization);
  out["simplified"] = to_json(v.simplified);
  if (!v.torsion.empty()) out["certificate"] = Json{{"torsion", torsion_list(v.torsion)}};
  if (v.quotient) {
    Json images = Json::array();
    for (const auto& perm : v.quotient->images) {
      Json p = Json::array();
      for (auto x : perm) p.push_back(static_cast<int>(x));
      images.push_back(std::move(p));
    }
    out["certificate"] = Json{{"symmetric_degree", v.quotient->degree}, {"images", std::move(images)}};
  }
  out["search_nodes"] = v.search_nodes;
  return out;
}

Json to_json(const SimplicialComplex& k, const CombinatorialityCertificate& c) {
  Json levels = Json::array();
  for (const auto& l : c.levels) {
    Json j{{"link_dim", l.link_dim},
           {"simplices_checked", l.simplices_checked},
           {"max_link_vertices", l.max_link_vertices},
           {"size_violations", l.size_violations},
           {"sphere_failures", l.sphere_failures},
           {"uses_recognizer", l.uses_recognizer}};
    if (l.allowed_vertices) j["allowed_vertices"] = *l.allowed_vertices;
    levels.push_back(std::move(j));
  }
  Json out{{"dim", c.dim},
           {"verdict", std::string(to_string(c.verdict))},
           {"levels", std::move(levels)},
           {"reason", c.reason}};
  if (c.witness) out["witness"] = to_json(k, *c.witness);
  return out;
}

Json to_json(const CheckReport& r) {
  Json comparisons = Json::array();
  for (const auto& c : r.comparisons) {
    comparisons.push_back(Json{{"kind", c.kind},
                               {"left_dim", c.left_dim},
                               {"right_dim", c.right_dim},
                               {"ring", c.ring.name()},
                               {"left", c.left.to_string(c.ring)},
                               {"right", c.right.to_string(c.ring)},
                               {"equal", c.equal},
                               {"flagged", c.flagged}});
  }
  return Json{{"check", r.check},
              {"passed", r.passed()},
              {"comparisons", std::move(comparisons)},
              {"notes", r.notes}};
}

Json to_json(const SimplicialComplex& k, const LocalHomologyReport& r) {
  return Json{{"simplex", to_json(k, r.simplex)},
              {"link_dim", r.link_dim},
              {"link_vertices", r.link_vertices},
              {"homology_sphere", r.homology_sphere},
              {"link_homology", to_json(r.link_homology)}};
}

Json to_json(const BoundReport& r) {
  Json hyps = Json::array();
  for (const auto& h : r.hypotheses)
    hyps.push_back(Json{{"name", h.name}, {"value", h.value}, {"status", std::string(to_string(h.status))}});
  Json out{{"tag", r.tag}, {"d", r.d}, {"hypotheses", std::move(hyps)}};
  out["bound"] = r.bound ? Json(*r.bound) : Json(nullptr);
  out["lower_bound"] = r.lower_bound;
  out["values"] = r.values;
  out["verdict"] = r.verdict;
  out["applicable"] = r.applicable;
  out["conditional"] = r.conditional;
  out["flags"] = r.flags;
  return out;
}

Json to_json(const Analysis& a) {
  Json reports = Json::array();
  for (const auto& r : a.reports) reports.push_back(to_json(r));
  Json out{{"dim", a.dim}, {"vertices", a.vertices}, {"homology", to_json(a.homology)}};
  if (a.pi1) out["pi1"] = to_json(*a.pi1);
  if (a.certificate) out["certificate_verdict"] = std::string(to_string(a.certificate->verdict));
  out["reports"] = std::move(reports);
  out["contradictions"] = a.contradictions;
  return out;
}

}  // namespace trikit
