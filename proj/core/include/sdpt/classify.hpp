#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sdpt/semigroup.hpp"

namespace sdpt {

enum class Verdict { countable, continuum, unclassified };

// "countable-SDPT", "continuum-SDPT", "unclassified".
std::string verdict_string(Verdict v);

// One condition checked on the way to the verdict, with the evidence
// that settled it.
struct RouteStep {
  std::string condition;
  bool holds = false;
  nlohmann::ordered_json witness;
};

struct ClassificationReport {
  Verdict verdict = Verdict::unclassified;
  std::string rule;      // stable identifier of the deciding case
  std::string citation;  // the fact the rule rests on, in one line
  std::vector<RouteStep> route;
  nlohmann::ordered_json witnesses;
  // Family builder that demonstrates the verdict, when one applies:
  // "tm", "wm", "hat", or empty.
  std::string suggested_construction;
};

// Decides how many subdirect powers the base admits up to isomorphism:
// countably many, continuum many, or outside the decided cases.
ClassificationReport classify(const FiniteSemigroup& s);

}  // namespace sdpt
