#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "sdpt/census.hpp"
#include "sdpt/certify.hpp"
#include "sdpt/classify.hpp"
#include "sdpt/constructions.hpp"
#include "sdpt/semigroup.hpp"
#include "sdpt/tuple_algebra.hpp"

namespace sdpt {

using ojson = nlohmann::ordered_json;

// FNV-1a over the document text, as 16 hex digits.
std::string fingerprint_hash(const std::string& doc);

ojson cayley_json(const FiniteSemigroup& s);
FiniteSemigroup semigroup_from_json(const ojson& j);

// Stable content hash of a semigroup (over its canonical document).
std::string semigroup_hash(const FiniteSemigroup& s);

ojson tuple_algebra_json(const TupleAlgebra& t);
// Recomputes the closure and projection flags; a document carrying
// contradictory stored flags fails with kind "inconsistent-document".
TupleAlgebra tuple_algebra_from_json(const ojson& j);

// Either input kind, parsed from text. A plain semigroup arrives as
// itself; a tuple algebra additionally keeps its tuple form.
struct LoadedAlgebra {
  FiniteSemigroup semigroup{FiniteSemigroup::from_parts({"e"}, {0})};
  std::optional<TupleAlgebra> tuples;
};

LoadedAlgebra algebra_from_document(const std::string& doc);

ojson witness_family_json(const WitnessFamily& f);
ojson certificate_json(const Certificate& c);
ojson classification_json(const ClassificationReport& r);
ojson census_json(const CensusResult& r);
CensusResult census_from_json(const ojson& j);

// Structural summary of a semigroup: what it is, not what to do with it.
ojson analysis_json(const FiniteSemigroup& s);

// {"tool", "version", "schema"} for report headers.
ojson tool_meta();

}  // namespace sdpt
