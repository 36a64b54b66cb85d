#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tubular/alexander.hpp"
#include "tubular/certificate.hpp"
#include "tubular/classify.hpp"
#include "tubular/corpus.hpp"
#include "tubular/error.hpp"
#include "tubular/text_format.hpp"

using namespace tubular;

namespace {

enum Exit { kOk = 0, kPropertyFailed = 1, kInputError = 2, kInapplicable = 3 };

struct Options {
  bool json = false;
  std::string input;
  std::string corpus_name;
  std::string graph_text;
  // equitable
  std::string verify_file;
  // cover
  bool maximal = false;
  bool homology2 = false;
  bool sta = false;
};

struct Source {
  std::string label;
  TubularGraph graph;
  std::optional<CorpusEntry> entry;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Source resolve(const Options& o) {
  const int given = !o.input.empty() + !o.corpus_name.empty() + !o.graph_text.empty();
  if (given != 1) throw Error(ErrorCode::ParseError, "give exactly one of --input, --corpus, --graph");
  Source s;
  if (!o.corpus_name.empty()) {
    s.entry = corpus(o.corpus_name);
    s.graph = s.entry->graph;
    s.label = "corpus:" + o.corpus_name;
  } else if (!o.input.empty()) {
    s.graph = parse_graph(read_file(o.input));
    s.label = "file:" + o.input;
  } else {
    std::string text = o.graph_text;
    std::replace(text.begin(), text.end(), ';', '\n');
    s.graph = parse_graph(text);
    s.label = "inline";
  }
  return s;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string names_line(const Presentation& pres, const CharacterZ& chi) {
  const auto values = generator_values(pres, chi);
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << pres.generators[i].name << "=" << values[i];
  return os.str();
}

void print_cover(const CoverResult& c) {
  std::cout << "index " << c.index << "\n";
  if (c.modulus) std::cout << "modulus " << *c.modulus << "\n";
  std::cout << serialize_graph(c.cover);
}

int cmd_validate(const Options& o) {
  Source s = resolve(o);
  const auto violations = validate(s.graph);
  if (o.json) {
    Json j = empty_certificate(s.label, &s.graph);
    Json list = Json::array();
    for (const auto& v : violations) list.push_back({{"kind", to_string(v.kind)}, {"detail", v.detail}});
    j["classification"] = {{"valid", violations.empty()}, {"violations", list}};
    emit(j);
  } else if (violations.empty()) {
    std::cout << "valid\n";
  } else {
    for (const auto& v : violations) std::cout << to_string(v.kind) << ": " << v.detail << "\n";
  }
  return violations.empty() ? kOk : kInputError;
}

int cmd_info(const Options& o) {
  Source s = resolve(o);
  const Presentation pres = presentation(s.graph);
  if (o.json) {
    Json j = empty_certificate(s.label, &s.graph);
    j["presentation"] = presentation_json(pres);
    emit(j);
    return kOk;
  }
  std::vector<std::string> names;
  for (const auto& gen : pres.generators) names.push_back(gen.name);
  std::cout << "vertices " << s.graph.vertex_count() << ", edges " << s.graph.edge_count() << ", betti "
            << betti(s.graph) << "\n";
  std::cout << "generators (" << pres.generators.size() << "):";
  for (const auto& n : names) std::cout << " " << n;
  std::cout << "\nrelators (" << pres.relators.size() << "):\n";
  for (const Word& r : pres.relators) std::cout << "  " << format_word(r, names) << "\n";
  return kOk;
}

int cmd_fbyc(const Options& o) {
  Source s = resolve(o);
  const FbycResult r = find_fbyc_character(s.graph);
  if (o.json) {
    Json j = empty_certificate(s.label, &s.graph);
    j["presentation"] = presentation_json(presentation(s.graph));
    j["fbyc"] = fbyc_json(s.graph, r);
    emit(j);
    return kOk;
  }
  if (r.found()) {
    std::cout << "free-by-cyclic: yes\ncharacter: " << names_line(presentation(s.graph), *r.character) << "\n";
  } else {
    std::cout << "free-by-cyclic: no\n";
    if (r.witness_edge) std::cout << "every homomorphism to Z vanishes on edge " << s.graph.edges[*r.witness_edge].name << "\n";
  }
  return kOk;
}

int cmd_equitable(const Options& o) {
  Source s = resolve(o);
  EquitableSet set;
  std::optional<EquitableConstruction> built;
  if (!o.verify_file.empty()) {
    Json doc = Json::parse(read_file(o.verify_file));
    // A full certificate from `equitable --json` carries the set under "equitable".
    if (doc.is_object() && !doc.contains("families") && doc.contains("equitable")) doc = doc["equitable"];
    set = equitable_from_json(doc, s.graph);
  } else {
    const FbycResult f = find_fbyc_character(s.graph);
    if (!f.found()) {
      if (o.json) emit(empty_certificate(s.label, &s.graph));
      std::cerr << "no character nonzero on all edge groups\n";
      return kInapplicable;
    }
    built = construct_equitable_detailed(s.graph, *f.character);
    set = built->set;
  }
  const EquitableReport rep = verify_equitable(s.graph, set);
  if (o.json) {
    Json j = empty_certificate(s.label, &s.graph);
    Json e = equitable_json(set, s.graph);
    if (built) e["multiplier"] = integer_json(built->multiplier);
    e["check"] = equitable_report_json(rep);
    j["equitable"] = e;
    emit(j);
  } else {
    for (std::size_t v = 0; v < s.graph.vertex_count(); ++v) {
      std::cout << s.graph.vertices[v] << ":";
      for (const LatticeVec& x : set.families[v]) std::cout << " " << x;
      std::cout << "  (span index " << rep.span_index[v] << ")\n";
    }
    for (std::size_t e = 0; e < s.graph.edge_count(); ++e)
      std::cout << "edge " << s.graph.edges[e].name << ": " << rep.edge_sums[e].src_sum << " = " << rep.edge_sums[e].dst_sum
                << (rep.edge_sums[e].balanced() ? "" : "  MISMATCH") << "\n";
    std::cout << (rep.ok ? "equitable\n" : "not equitable\n");
  }
  return rep.ok ? kOk : kPropertyFailed;
}

int cmd_cover(const Options& o) {
  Source s = resolve(o);
  const int modes = o.maximal + o.homology2 + o.sta;
  if (modes != 1) throw Error(ErrorCode::ParseError, "give exactly one of --maximal, --homology2, --sta");
  Json j = empty_certificate(s.label, &s.graph);
  if (o.homology2) {
    const CoverResult c = homology2_cover(s.graph);
    const bool ok = fiber_sums_consistent(s.graph, c);
    if (o.json) {
      j["covers"] = {{"homology2", cover_json(c)}};
      emit(j);
    } else {
      print_cover(c);
    }
    return ok ? kOk : kPropertyFailed;
  }
  if (o.maximal) {
    const FbycResult f = find_fbyc_character(s.graph);
    if (!f.found()) {
      if (o.json) emit(j);
      std::cerr << "no character nonzero on all edge groups\n";
      return kInapplicable;
    }
    const CoverResult c = maximality_cover(s.graph, *f.character);
    const bool ok = fiber_sums_consistent(s.graph, c) && all_inclusions_primitive(c.cover);
    if (o.json) {
      j["covers"] = {{"maximal", cover_json(c)}};
      emit(j);
    } else {
      print_cover(c);
    }
    return ok ? kOk : kPropertyFailed;
  }
  StaOutcome out = sta_pipeline(s.graph);
  if (out.applicable() && s.entry && s.entry->expected.reference_sta_index)
    compare_reference_index(*out.witness, *s.entry->expected.reference_sta_index);
  if (o.json) {
    j["covers"] = {{"sta", sta_json(out)}};
    emit(j);
  } else if (out.applicable()) {
    const STAWitness& w = *out.witness;
    std::cout << "total index " << w.total_index << "\n";
    if (w.stage1) std::cout << "maximality cover index " << w.stage1->index << "\n";
    std::cout << "homology cover index " << w.stage2.index << "\n";
    std::cout << "all inclusions maximal: " << (w.all_inclusions_maximal ? "yes" : "no")
              << ", no self loops: " << (w.no_self_loops ? "yes" : "no") << "\n";
    for (const auto& n : w.notes) std::cout << "note: " << n << "\n";
  } else {
    std::cout << "unknown: " << out.inapplicable_reason << "\n";
  }
  if (!out.applicable()) return kInapplicable;
  return out.witness->certified() ? kOk : kPropertyFailed;
}

int cmd_alexander(const Options& o) {
  Source s = resolve(o);
  const FbycResult f = find_fbyc_character(s.graph);
  if (!f.found()) {
    if (o.json) emit(empty_certificate(s.label, &s.graph));
    std::cerr << "no character nonzero on all edge groups\n";
    return kInapplicable;
  }
  const AlexanderReport r = alexander_report(s.graph, *f.character);
  if (o.json) {
    Json j = empty_certificate(s.label, &s.graph);
    j["presentation"] = presentation_json(presentation(s.graph));
    j["fbyc"] = fbyc_json(s.graph, f);
    j["alexander"] = alexander_json(r);
    emit(j);
  } else {
    std::cout << "matrix " << r.rows << " x " << r.cols << "\n";
    for (std::size_t j = 0; j < r.minors.size(); ++j) std::cout << "minor " << j << ": " << r.minors[j].to_string() << "\n";
    std::cout << "alexander polynomial: " << r.alexander_poly.to_string() << "\n";
    std::cout << "characteristic polynomial: " << r.candidate.poly.to_string() << "\n";
    std::cout << "cyclotomic orders:";
    for (const auto& [d, m] : r.split.orders) std::cout << " " << d << "^" << m;
    std::cout << "\nbiorder index: " << (r.biorder ? r.biorder->get_str() : std::string("none")) << "\n";
    if (r.theorem_violation) std::cout << "TheoremViolation: " << r.diagnostic << "\n";
  }
  const bool ok = !r.theorem_violation && r.fundamental_identity && r.minor_ratio_identity;
  return ok ? kOk : kPropertyFailed;
}

void print_report(const Source& s, const ClassificationReport& r) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "Z^2: " << yn(r.is_z2) << "\n";
  std::cout << "generators " << r.generator_count << ", relators " << r.relator_count << ", betti " << r.betti << "\n";
  std::cout << "free-by-cyclic: " << yn(r.fbyc.found());
  if (r.fbyc.found()) std::cout << " (" << names_line(presentation(s.graph), *r.fbyc.character) << ")";
  std::cout << "\nmaximal inclusions: " << yn(r.maximal.maximal) << "\n";
  std::cout << "acylindrically hyperbolic: " << yn(r.acylindrically_hyperbolic) << "\n";
  std::cout << "residually free: " << yn(r.residually_free.free);
  if (r.residually_free.free) std::cout << " (F_" << r.residually_free.n << " x Z)";
  std::cout << "\nlargeness: " << to_string(r.largeness.kind) << "\n";
  std::cout << "STA cover witness: " << r.sta_status();
  if (r.sta.applicable()) std::cout << ", index " << r.sta.witness->total_index;
  std::cout << "\n";
  if (r.sta.applicable())
    for (const auto& n : r.sta.witness->notes) std::cout << "  note: " << n << "\n";
  if (r.equitable_check) std::cout << "equitable set verified: " << yn(r.equitable_check->ok) << "\n";
  if (r.alexander) {
    std::cout << "characteristic polynomial: " << r.alexander->candidate.poly.to_string() << "\n";
    std::cout << "biorder index: " << (r.alexander->biorder ? r.alexander->biorder->get_str() : std::string("none")) << "\n";
  }
}

int cmd_classify(const Options& o) {
  Source s = resolve(o);
  const ClassificationReport r = s.entry ? classify_entry(*s.entry) : classify_all(s.graph);
  if (o.json)
    emit(classification_certificate(s.label, s.graph, r));
  else
    print_report(s, r);
  const bool violation = r.alexander && r.alexander->theorem_violation;
  return r.consistent() && !violation ? kOk : kPropertyFailed;
}

int cmd_surject(const Options& o) {
  Source s = resolve(o);
  const Largeness l = largeness(s.graph);
  if (o.json) {
    Json j = empty_certificate(s.label, &s.graph);
    j["classification"] = {{"largeness", largeness_json(s.graph, l)}};
    emit(j);
  } else {
    std::cout << to_string(l.kind) << "\n";
    if (l.cover) std::cout << "on the cover of index " << l.cover->index << ":\n" << serialize_graph(l.cover->cover);
    if (l.map) {
      const Presentation pres = presentation(l.cover ? l.cover->cover : s.graph);
      const std::vector<std::string> letters{"u", "v"};
      std::cout << "construction: " << l.map->construction << "\n";
      for (std::size_t i = 0; i < pres.generators.size(); ++i)
        std::cout << "  " << pres.generators[i].name << " -> " << format_word(l.map->images[i], letters) << "\n";
    }
  }
  if (l.map) {
    const Presentation pres = presentation(l.cover ? l.cover->cover : s.graph);
    if (!verify_f2_map(pres, *l.map)) return kPropertyFailed;
  }
  return kOk;
}

int cmd_corpus_check(const Options& o) {
  bool all_ok = true;
  Json entries = Json::array();
  for (const std::string& name : default_corpus_names()) {
    const CorpusEntry entry = corpus(name);
    const ClassificationReport r = classify_entry(entry);
    const auto checks = check_verdicts(entry, r);
    Json jc = Json::array();
    bool entry_ok = true;
    for (const auto& c : checks) {
      entry_ok = entry_ok && c.ok;
      jc.push_back({{"field", c.field}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
      if (!o.json)
        std::cout << (c.ok ? "ok   " : "FAIL ") << name << " " << c.field << ": expected " << c.expected << ", got "
                  << c.actual << "\n";
    }
    if (!o.json && r.sta.applicable())
      for (const auto& n : r.sta.witness->notes) std::cout << "note " << name << ": " << n << "\n";
    all_ok = all_ok && entry_ok;
    entries.push_back({{"name", name}, {"ok", entry_ok}, {"checks", jc}});
  }
  if (o.json) {
    Json j = empty_certificate("corpus", nullptr);
    j["classification"] = {{"corpus_check", {{"ok", all_ok}, {"entries", entries}}}};
    emit(j);
  } else {
    std::cout << (all_ok ? "corpus-check: all verdicts match\n" : "corpus-check: mismatches found\n");
  }
  return all_ok ? kOk : kPropertyFailed;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidGraph:
    case ErrorCode::Disconnected:
    case ErrorCode::UnknownName:
    case ErrorCode::MissingVertexFamily:
      return kInputError;
    case ErrorCode::CharacterZeroOnEdge:
    case ErrorCode::NonSurjectiveCharacter:
    case ErrorCode::ZeroEdgeValue:
      return kInapplicable;
    default:
      return kPropertyFailed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures and certificates for tubular groups"};
  app.require_subcommand(1);
  Options o;

  auto add_source = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Emit a JSON certificate");
    sub->add_option("--input", o.input, "Graph description file");
    sub->add_option("--corpus", o.corpus_name, "Built-in example name");
    sub->add_option("--graph", o.graph_text, "Inline graph description (';' separates lines)");
  };

  std::function<int()> action;
  auto bind = [&](CLI::App* sub, std::function<int(const Options&)> fn) {
    sub->callback([&action, fn, &o] { action = [fn, &o] { return fn(o); }; });
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the graph is a valid tubular graph of groups");
  add_source(validate_cmd);
  bind(validate_cmd, cmd_validate);

  auto* info_cmd = app.add_subcommand("info", "Print the presentation");
  add_source(info_cmd);
  bind(info_cmd, cmd_info);

  auto* fbyc_cmd = app.add_subcommand("fbyc", "Decide free-by-cyclic and print the character");
  add_source(fbyc_cmd);
  bind(fbyc_cmd, cmd_fbyc);

  auto* eq_cmd = app.add_subcommand("equitable", "Construct or verify an equitable set");
  add_source(eq_cmd);
  eq_cmd->add_option("--verify", o.verify_file, "JSON file ({\"families\": ...} or a certificate) to verify instead of constructing");
  bind(eq_cmd, cmd_equitable);

  auto* cover_cmd = app.add_subcommand("cover", "Build a finite cover");
  add_source(cover_cmd);
  cover_cmd->add_flag("--maximal", o.maximal, "Cover with all inclusions maximal");
  cover_cmd->add_flag("--homology2", o.homology2, "Mod-2 homology cover");
  cover_cmd->add_flag("--sta", o.sta, "Cover with maximal inclusions and no self loops (STA witness)");
  bind(cover_cmd, cmd_cover);

  auto* alex_cmd = app.add_subcommand("alexander", "Alexander matrix, minors and biorder index");
  add_source(alex_cmd);
  bind(alex_cmd, cmd_alexander);

  auto* classify_cmd = app.add_subcommand("classify", "Run every analysis");
  add_source(classify_cmd);
  bind(classify_cmd, cmd_classify);

  auto* surject_cmd = app.add_subcommand("surject-f2", "Explicit surjection onto F2, possibly from a double cover");
  add_source(surject_cmd);
  bind(surject_cmd, cmd_surject);

  auto* check_cmd = app.add_subcommand("corpus-check", "Compare the built-in corpus against its expected verdicts");
  check_cmd->add_flag("--json", o.json, "Emit JSON");
  bind(check_cmd, cmd_corpus_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_for(e);
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPropertyFailed;
  }
}
