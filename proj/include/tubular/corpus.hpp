#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tubular/classify.hpp"
#include "tubular/graph.hpp"

namespace tubular {

struct ExpectedVerdicts {
  bool fbyc = false;
  bool maximal = false;
  bool acylindrically_hyperbolic = true;
  /// Absent when no witness is expected (STA status unknown).
  std::optional<Integer> sta_index;
  std::optional<Integer> biorder_index;
  std::optional<LargenessKind> largeness;
  std::optional<Integer> maximality_cover_index;
  /// Index quoted in the literature, compared against sta_index with a note.
  std::optional<Integer> reference_sta_index;
};

struct CorpusEntry {
  std::string name;
  std::string presentation;  // human-readable relators
  TubularGraph graph;
  ExpectedVerdicts expected;
};

/// Names: burns, gersten, woodhouse, wise-simple-N, wise-nonsimple-N (N >= 2),
/// wise-nonhopfian. Throws UnknownName.
CorpusEntry corpus(const std::string& name);

/// Entries exercised by corpus-check.
std::vector<std::string> default_corpus_names();

/// classify_all plus comparison of the STA index with any reference index.
ClassificationReport classify_entry(const CorpusEntry& entry);

struct VerdictCheck {
  std::string field;
  std::string expected;
  std::string actual;
  bool ok = false;
};

/// Compares a classification against the expected verdicts, including the
/// maximality-cover certificate checks.
std::vector<VerdictCheck> check_verdicts(const CorpusEntry& entry, const ClassificationReport& report);

}  // namespace tubular
