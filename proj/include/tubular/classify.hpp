#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tubular/alexander.hpp"
#include "tubular/characters.hpp"
#include "tubular/covers.hpp"
#include "tubular/equitable.hpp"
#include "tubular/graph.hpp"

namespace tubular {

struct MaximalityReport {
  bool maximal = true;
  std::vector<EdgeEnd> offenders;
};

MaximalityReport maximal_inclusions(const TubularGraph& g);

/// Replaces every inclusion by its primitive part.
TubularGraph saturate(const TubularGraph& g);

/// Some vertex has two non-parallel incident inclusions.
bool acylindrically_hyperbolic(const TubularGraph& g);

struct ResidualFreeness {
  bool free = false;
  /// G is F_n x Z when free.
  std::size_t n = 0;
  std::string reason;
};

ResidualFreeness residually_free(const TubularGraph& g);

/// Rank of the abelianization of the group presented by pres.
std::size_t first_homology_rank(const Presentation& pres);

/// Generators of the free group of rank two.
inline constexpr std::size_t kU = 0;
inline constexpr std::size_t kV = 1;

/// Images of the presentation generators in F(u, v).
struct F2Map {
  std::vector<Word> images;
  /// Short name of the construction used.
  std::string construction;
};

/// Every relator dies and some two images do not commute. Throws
/// MissingGenerator.
bool verify_f2_map(const Presentation& pres, const F2Map& f);

/// An explicit surjection-witness onto a non-abelian subgroup of F2, verified
/// against presentation(g), or nullopt for a single vertex carrying one loop
/// with non-parallel ends (or no edges at all).
std::optional<F2Map> surject_f2(const TubularGraph& g);

enum class LargenessKind { SurjectsF2, IndexTwoSurjects, IsZ2 };

std::string to_string(LargenessKind kind);

struct Largeness {
  LargenessKind kind = LargenessKind::IsZ2;
  std::optional<F2Map> map;
  /// The cover carrying the map for IndexTwoSurjects.
  std::optional<CoverResult> cover;
};

Largeness largeness(const TubularGraph& g);

struct ClassificationReport {
  bool is_z2 = false;
  std::size_t betti = 0;
  std::size_t generator_count = 0;
  std::size_t relator_count = 0;
  FbycResult fbyc;
  MaximalityReport maximal;
  bool acylindrically_hyperbolic = false;
  ResidualFreeness residually_free;
  Largeness largeness;
  StaOutcome sta;
  std::optional<EquitableConstruction> equitable;
  std::optional<EquitableReport> equitable_check;
  std::optional<AlexanderReport> alexander;

  /// Verdict string for the STA witness: "certified" or "unknown".
  std::string sta_status() const { return sta.applicable() ? "certified" : "unknown"; }
  /// fbyc implies equitable and alexander; maximal implies an STA witness.
  bool consistent() const;
};

ClassificationReport classify_all(const TubularGraph& g);

}  // namespace tubular
