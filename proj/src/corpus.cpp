#include "tubular/corpus.hpp"

#include <regex>

#include "tubular/error.hpp"

namespace tubular {

namespace {

TubularGraph one_vertex(const std::vector<Edge>& loops) {
  TubularGraph g;
  g.vertices = {"v"};
  g.edges = loops;
  return g;
}

Edge loop(const std::string& name, LatticeVec from, LatticeVec to) { return Edge{name, 0, 0, from, to}; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string opt_str(const std::optional<Integer>& v) { return v ? v->get_str() : "none"; }

}  // namespace

CorpusEntry corpus(const std::string& name) {
  CorpusEntry c;
  c.name = name;
  if (name == "burns") {
    c.presentation = "<a,b,t | [a,b], t a t^-1 = b>";
    c.graph = one_vertex({loop("t", {1, 0}, {0, 1})});
    c.expected = {true, true, true, Integer(2), Integer(1), LargenessKind::IndexTwoSurjects, Integer(1), std::nullopt};
    return c;
  }
  if (name == "gersten") {
    c.presentation = "<a,b,s,t | [a,b], s a s^-1 = a^-1 b^2, t a t^-1 = b>";
    c.graph = one_vertex({loop("s", {1, 0}, {-1, 2}), loop("t", {1, 0}, {0, 1})});
    c.expected = {true, true, true, Integer(4), Integer(1), LargenessKind::SurjectsF2, Integer(1), std::nullopt};
    return c;
  }
  if (name == "woodhouse") {
    c.presentation = "<a,b,s,t | [a,b], s ab s^-1 = a^2, t ab t^-1 = b^2>";
    c.graph = one_vertex({loop("s", {1, 1}, {2, 0}), loop("t", {1, 1}, {0, 2})});
    c.expected = {true, false, true, Integer(32), Integer(2), LargenessKind::SurjectsF2, Integer(2), Integer(8)};
    return c;
  }
  if (name == "wise-nonhopfian") {
    c.presentation = "<a,b,s,t | [a,b], s a s^-1 = a^2 b^2, t b t^-1 = a^2 b^2>";
    c.graph = one_vertex({loop("s", {1, 0}, {2, 2}), loop("t", {0, 1}, {2, 2})});
    c.expected = {false, false, true, std::nullopt, std::nullopt, LargenessKind::SurjectsF2, std::nullopt,
                  std::nullopt};
    return c;
  }
  static const std::regex family(R"(^wise-(simple|nonsimple)-(\d+)$)");
  std::smatch m;
  if (std::regex_match(name, m, family) && m[2].str().size() < 10) {
    const Integer n(m[2].str());
    if (n >= 2) {
      if (m[1] == "simple") {
        c.presentation = "<a,b,s,t | [a,b], s a^" + n.get_str() + " b s^-1 = ab, t a b^" + n.get_str() + " t^-1 = ab>";
        c.graph = one_vertex({loop("s", {n, 1}, {1, 1}), loop("t", {1, n}, {1, 1})});
        c.expected = {false, true, true, Integer(4), std::nullopt, LargenessKind::SurjectsF2, std::nullopt,
                      std::nullopt};
      } else {
        c.presentation = "<a,b,s,t | [a,b], s a^" + n.get_str() + " s^-1 = ab, t b^" + n.get_str() + " t^-1 = ab>";
        c.graph = one_vertex({loop("s", {n, 0}, {1, 1}), loop("t", {0, n}, {1, 1})});
        if (n == 2) {
          // Same group as the Woodhouse example.
          c.expected = {true, false, true, Integer(32), Integer(2), LargenessKind::SurjectsF2, Integer(2), Integer(8)};
        } else {
          c.expected = {false, false, true, std::nullopt, std::nullopt, LargenessKind::SurjectsF2, std::nullopt,
                        std::nullopt};
        }
      }
      return c;
    }
  }
  throw Error(ErrorCode::UnknownName, "unknown corpus entry '" + name + "'");
}

std::vector<std::string> default_corpus_names() {
  return {"burns",         "gersten",          "woodhouse",          "wise-simple-2", "wise-simple-3",
          "wise-nonsimple-2", "wise-nonsimple-3", "wise-nonhopfian"};
}

ClassificationReport classify_entry(const CorpusEntry& entry) {
  ClassificationReport r = classify_all(entry.graph);
  if (entry.expected.reference_sta_index && r.sta.applicable())
    compare_reference_index(*r.sta.witness, *entry.expected.reference_sta_index);
  return r;
}

std::vector<VerdictCheck> check_verdicts(const CorpusEntry& entry, const ClassificationReport& r) {
  std::vector<VerdictCheck> out;
  auto add = [&](std::string field, std::string expected, std::string actual) {
    const bool ok = expected == actual;
    out.push_back({std::move(field), std::move(expected), std::move(actual), ok});
  };
  const ExpectedVerdicts& e = entry.expected;
  add("fbyc", yes_no(e.fbyc), yes_no(r.fbyc.found()));
  add("maximal", yes_no(e.maximal), yes_no(r.maximal.maximal));
  add("acylindrically_hyperbolic", yes_no(e.acylindrically_hyperbolic), yes_no(r.acylindrically_hyperbolic));
  add("sta_index", opt_str(e.sta_index),
      r.sta.applicable() ? r.sta.witness->total_index.get_str() : std::string("none"));
  if (r.sta.applicable()) add("sta_certified", "yes", yes_no(r.sta.witness->certified()));
  add("biorder_index", opt_str(e.biorder_index),
      r.alexander ? opt_str(r.alexander->biorder) : std::string("none"));
  if (e.largeness) add("largeness", to_string(*e.largeness), to_string(r.largeness.kind));
  if (e.maximality_cover_index) {
    std::optional<Integer> actual;
    if (r.fbyc.found()) actual = maximality_cover(entry.graph, *r.fbyc.character).index;
    add("maximality_cover_index", opt_str(e.maximality_cover_index), opt_str(actual));
    if (r.fbyc.found()) {
      const CoverResult cover = maximality_cover(entry.graph, *r.fbyc.character);
      add("maximality_cover_primitive", "yes", yes_no(all_inclusions_primitive(cover.cover)));
      add("maximality_cover_fibers", "yes", yes_no(fiber_sums_consistent(entry.graph, cover)));
    }
  }
  if (r.fbyc.found()) {
    add("equitable_verified", "yes", yes_no(r.equitable_check && r.equitable_check->ok));
    add("cyclotomic_remainder", "1", r.alexander ? r.alexander->split.remainder.to_string() : std::string("none"));
  }
  if (r.largeness.map) {
    const Presentation pres =
        presentation(r.largeness.cover ? r.largeness.cover->cover : entry.graph);
    add("f2_map_verified", "yes", yes_no(verify_f2_map(pres, *r.largeness.map)));
  }
  if (e.reference_sta_index && r.sta.applicable()) {
    const STAWitness& w = *r.sta.witness;
    const bool differs = *e.reference_sta_index != w.total_index;
    add("reference_index_flagged", yes_no(differs), yes_no(w.reference_index && !w.notes.empty()));
  }
  add("report_consistent", "yes", yes_no(r.consistent()));
  return out;
}

}  // namespace tubular
