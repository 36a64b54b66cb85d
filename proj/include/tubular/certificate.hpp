#pragma once

#include <json.hpp>
#include <string>

#include "tubular/classify.hpp"

namespace tubular {

using Json = nlohmann::ordered_json;

/// JSON number when the value fits in 64 bits, decimal string otherwise.
Json integer_json(const Integer& v);
Json rational_json(const Rational& v);

Json graph_json(const TubularGraph& g);
Json presentation_json(const Presentation& pres);
Json character_json(const Presentation& pres, const CharacterZ& chi);
Json fbyc_json(const TubularGraph& g, const FbycResult& r);
Json equitable_json(const EquitableSet& set, const TubularGraph& g);
Json equitable_report_json(const EquitableReport& r);
Json cover_json(const CoverResult& c);
Json sta_json(const StaOutcome& s);
Json poly_json(const LaurentPoly& p);
Json alexander_json(const AlexanderReport& r);
Json f2_map_json(const Presentation& pres, const F2Map& f);
Json largeness_json(const TubularGraph& g, const Largeness& l);

/// Certificate with every top-level key present and set to null.
Json empty_certificate(const std::string& source, const TubularGraph* g);

/// Full certificate for a classification.
Json classification_certificate(const std::string& source, const TubularGraph& g, const ClassificationReport& r);

/// Reads {"families": {"vertex": [[p,q], ...], ...}}. Throws ParseError,
/// MissingVertexFamily.
EquitableSet equitable_from_json(const Json& j, const TubularGraph& g);

}  // namespace tubular
