#include "tubular/certificate.hpp"

#include "tubular/error.hpp"

namespace tubular {

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Json rational_json(const Rational& v) {
  if (v.get_den() == 1) return integer_json(v.get_num());
  return v.get_str();
}

namespace {

Json vec_json(const LatticeVec& v) { return Json::array({integer_json(v.p), integer_json(v.q)}); }

Json mat_json(const Mat2Q& m) {
  return Json::array({Json::array({rational_json(m.at(0, 0)), rational_json(m.at(0, 1))}),
                      Json::array({rational_json(m.at(1, 0)), rational_json(m.at(1, 1))})});
}

std::vector<std::string> generator_names(const Presentation& pres) {
  std::vector<std::string> names;
  for (const auto& gen : pres.generators) names.push_back(gen.name);
  return names;
}

}  // namespace

Json graph_json(const TubularGraph& g) {
  Json j;
  j["vertices"] = g.vertices;
  j["edges"] = Json::array();
  for (const Edge& e : g.edges)
    j["edges"].push_back({{"name", e.name},
                          {"src", g.vertices[e.src]},
                          {"dst", g.vertices[e.dst]},
                          {"inc_src", vec_json(e.inc_src)},
                          {"inc_dst", vec_json(e.inc_dst)}});
  return j;
}

Json presentation_json(const Presentation& pres) {
  const auto names = generator_names(pres);
  Json j;
  j["generators"] = names;
  j["relators"] = Json::array();
  for (const Word& r : pres.relators) j["relators"].push_back(format_word(r, names));
  j["generator_count"] = pres.generators.size();
  j["relator_count"] = pres.relators.size();
  j["deficiency"] = pres.deficiency();
  return j;
}

Json character_json(const Presentation& pres, const CharacterZ& chi) {
  const auto values = generator_values(pres, chi);
  Json j = Json::object();
  for (std::size_t i = 0; i < values.size(); ++i) j[pres.generators[i].name] = integer_json(values[i]);
  return j;
}

Json fbyc_json(const TubularGraph& g, const FbycResult& r) {
  const Presentation pres = presentation(g);
  Json j;
  j["free_by_cyclic"] = r.found();
  j["hom_rank"] = r.hom_rank;
  j["character"] = r.character ? character_json(pres, *r.character) : Json(nullptr);
  j["search_character"] = r.raw ? character_json(pres, *r.raw) : Json(nullptr);
  j["search_parameter"] = r.search_parameter ? integer_json(*r.search_parameter) : Json(nullptr);
  j["witness_edge"] = r.witness_edge ? Json(g.edges[*r.witness_edge].name) : Json(nullptr);
  if (r.character) {
    Json values = Json::object();
    for (std::size_t e = 0; e < g.edge_count(); ++e) values[g.edges[e].name] = integer_json(edge_value(g, *r.character, e));
    j["edge_values"] = values;
  } else {
    j["edge_values"] = nullptr;
  }
  return j;
}

Json equitable_json(const EquitableSet& set, const TubularGraph& g) {
  Json fam = Json::object();
  for (std::size_t v = 0; v < set.families.size(); ++v) {
    Json list = Json::array();
    for (const LatticeVec& x : set.families[v]) list.push_back(vec_json(x));
    fam[g.vertices[v]] = list;
  }
  return {{"families", fam}};
}

Json equitable_report_json(const EquitableReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["edge_sums"] = Json::array();
  for (const auto& b : r.edge_sums) j["edge_sums"].push_back(Json::array({integer_json(b.src_sum), integer_json(b.dst_sum)}));
  j["span_index"] = Json::array();
  for (const auto& s : r.span_index) j["span_index"].push_back(integer_json(s));
  return j;
}

Json cover_json(const CoverResult& c) {
  Json j;
  j["index"] = integer_json(c.index);
  j["modulus"] = c.modulus ? integer_json(*c.modulus) : Json(nullptr);
  j["graph"] = graph_json(c.cover);
  j["vertex_fiber"] = Json::array();
  for (std::size_t i = 0; i < c.vertex_fiber.size(); ++i) {
    const auto& f = c.vertex_fiber[i];
    j["vertex_fiber"].push_back({{"vertex", c.cover.vertices[i]},
                                 {"base_vertex", f.base_vertex},
                                 {"coset", integer_json(f.coset)},
                                 {"basis_change", mat_json(f.basis_change)}});
  }
  j["edge_fiber"] = Json::array();
  for (std::size_t i = 0; i < c.edge_fiber.size(); ++i) {
    const auto& f = c.edge_fiber[i];
    j["edge_fiber"].push_back({{"edge", c.cover.edges[i].name},
                               {"base_edge", f.base_edge},
                               {"coset", integer_json(f.coset)},
                               {"power", integer_json(f.power)}});
  }
  return j;
}

Json sta_json(const StaOutcome& s) {
  Json j;
  j["status"] = s.applicable() ? "certified" : "unknown";
  if (!s.applicable()) {
    j["reason"] = s.inapplicable_reason;
    j["total_index"] = nullptr;
    return j;
  }
  const STAWitness& w = *s.witness;
  j["total_index"] = integer_json(w.total_index);
  j["stage1"] = w.stage1 ? cover_json(*w.stage1) : Json(nullptr);
  j["stage2"] = cover_json(w.stage2);
  j["certified_properties"] = {{"all_inclusions_maximal", w.all_inclusions_maximal},
                               {"no_self_loops", w.no_self_loops}};
  j["reference_index"] = w.reference_index ? integer_json(*w.reference_index) : Json(nullptr);
  j["notes"] = w.notes;
  return j;
}

Json poly_json(const LaurentPoly& p) {
  Json coeffs = Json::array();
  for (const Integer& c : p.coefficients()) coeffs.push_back(integer_json(c));
  return {{"low_exponent", p.low_exponent()}, {"coefficients", coeffs}, {"text", p.to_string()}};
}

Json alexander_json(const AlexanderReport& r) {
  Json j;
  j["rows"] = r.rows;
  j["cols"] = r.cols;
  Json gv = Json::array();
  for (const Integer& v : r.generator_values) gv.push_back(integer_json(v));
  j["generator_values"] = gv;
  j["matrix"] = Json::array();
  for (const auto& row : r.matrix) {
    Json jr = Json::array();
    for (const LaurentPoly& p : row) jr.push_back(poly_json(p));
    j["matrix"].push_back(jr);
  }
  j["minors"] = Json::array();
  for (const LaurentPoly& p : r.minors) j["minors"].push_back(poly_json(p));
  j["alexander_poly"] = poly_json(r.alexander_poly);
  j["char_candidate"] = poly_json(r.candidate.poly);
  j["candidate_column"] = r.candidate.column;
  Json orders = Json::array();
  for (const auto& [d, mult] : r.split.orders)
    for (unsigned i = 0; i < mult; ++i) orders.push_back(d);
  j["cyclotomic_orders"] = orders;
  j["non_cyclotomic_remainder"] = poly_json(r.split.remainder);
  j["biorder_index"] = r.biorder ? integer_json(*r.biorder) : Json(nullptr);
  j["theorem_violation"] = r.theorem_violation;
  if (r.theorem_violation) j["diagnostic"] = r.diagnostic;
  j["fundamental_identity"] = r.fundamental_identity;
  j["minor_ratio_identity"] = r.minor_ratio_identity;
  return j;
}

Json f2_map_json(const Presentation& pres, const F2Map& f) {
  const std::vector<std::string> letters{"u", "v"};
  Json images = Json::object();
  for (std::size_t i = 0; i < pres.generators.size(); ++i) images[pres.generators[i].name] = format_word(f.images[i], letters);
  return {{"construction", f.construction}, {"images", images}, {"verified", verify_f2_map(pres, f)}};
}

Json largeness_json(const TubularGraph& g, const Largeness& l) {
  Json j;
  j["kind"] = to_string(l.kind);
  if (l.cover) j["cover"] = cover_json(*l.cover);
  if (l.map) j["map"] = f2_map_json(presentation(l.cover ? l.cover->cover : g), *l.map);
  return j;
}

Json empty_certificate(const std::string& source, const TubularGraph* g) {
  Json j;
  j["input"] = {{"source", source}, {"graph", g ? graph_json(*g) : Json(nullptr)}};
  for (const char* key : {"presentation", "fbyc", "equitable", "covers", "alexander", "classification"}) j[key] = nullptr;
  j["versions"] = {{"tubular", "0.1.0"}, {"gmp", gmp_version}, {"schema", 1}};
  return j;
}

Json classification_certificate(const std::string& source, const TubularGraph& g, const ClassificationReport& r) {
  Json j = empty_certificate(source, &g);
  j["presentation"] = presentation_json(presentation(g));
  j["fbyc"] = fbyc_json(g, r.fbyc);
  if (r.equitable) {
    Json e = equitable_json(r.equitable->set, g);
    e["multiplier"] = integer_json(r.equitable->multiplier);
    if (r.equitable_check) e["check"] = equitable_report_json(*r.equitable_check);
    j["equitable"] = e;
  }
  j["covers"] = {{"sta", sta_json(r.sta)}};
  if (r.alexander) j["alexander"] = alexander_json(*r.alexander);
  Json c;
  c["is_z2"] = r.is_z2;
  c["betti"] = r.betti;
  c["free_by_cyclic"] = r.fbyc.found();
  Json offenders = Json::array();
  for (const EdgeEnd& end : r.maximal.offenders)
    offenders.push_back({{"edge", g.edges[end.edge].name}, {"end", end.at_src ? "src" : "dst"}});
  c["maximal_inclusions"] = {{"maximal", r.maximal.maximal}, {"offenders", offenders}};
  c["acylindrically_hyperbolic"] = r.acylindrically_hyperbolic;
  if (r.residually_free.free)
    c["residually_free"] = {{"free", true}, {"n", r.residually_free.n}};
  else
    c["residually_free"] = {{"free", false}, {"reason", r.residually_free.reason}};
  c["largeness"] = largeness_json(g, r.largeness);
  c["sta"] = {{"status", r.sta_status()},
              {"total_index", r.sta.applicable() ? integer_json(r.sta.witness->total_index) : Json(nullptr)}};
  c["biorder_index"] = r.alexander && r.alexander->biorder ? integer_json(*r.alexander->biorder) : Json(nullptr);
  c["consistent"] = r.consistent();
  j["classification"] = c;
  return j;
}

EquitableSet equitable_from_json(const Json& j, const TubularGraph& g) {
  if (!j.is_object() || !j.contains("families") || !j["families"].is_object())
    throw Error(ErrorCode::ParseError, "equitable set JSON needs a \"families\" object");
  EquitableSet set;
  set.families.resize(g.vertex_count());
  const Json& fam = j["families"];
  for (auto it = fam.begin(); it != fam.end(); ++it) {
    auto v = g.find_vertex(it.key());
    if (!v) throw Error(ErrorCode::ParseError, "equitable set names unknown vertex " + it.key());
    if (!it.value().is_array()) throw Error(ErrorCode::ParseError, "family of " + it.key() + " is not a list");
    for (const Json& x : it.value()) {
      if (!x.is_array() || x.size() != 2) throw Error(ErrorCode::ParseError, "vectors must be [p, q] pairs");
      auto coord = [&](const Json& c) {
        if (c.is_number_integer()) return Integer(std::to_string(c.get<std::int64_t>()));
        if (c.is_string()) return Integer(c.get<std::string>());
        throw Error(ErrorCode::ParseError, "vector coordinates must be integers");
      };
      set.families[*v].push_back({coord(x[0]), coord(x[1])});
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (set.families[v].empty())
      throw Error(ErrorCode::MissingVertexFamily, "no family given for vertex " + g.vertices[v]);
  return set;
}

}  // namespace tubular
