#include "sdpt/classify.hpp"

#include "sdpt/error.hpp"
#include "sdpt/structure.hpp"

namespace sdpt {

std::string verdict_string(Verdict v) {
  switch (v) {
    case Verdict::countable:
      return "countable-SDPT";
    case Verdict::continuum:
      return "continuum-SDPT";
    case Verdict::unclassified:
      return "unclassified";
  }
  fail("internal", "unreachable");
}

namespace {

nlohmann::ordered_json name_list(const FiniteSemigroup& s, const std::vector<int>& elems) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (int e : elems) out.push_back(s.name(e));
  return out;
}

}  // namespace

ClassificationReport classify(const FiniteSemigroup& s) {
  ClassificationReport report;
  auto& route = report.route;
  auto step = [&](const std::string& condition, bool holds,
                  nlohmann::ordered_json witness) -> bool {
    route.push_back({condition, holds, std::move(witness)});
    return holds;
  };
  auto decide = [&](Verdict verdict, const std::string& rule, const std::string& citation,
                    const std::string& suggestion) {
    report.verdict = verdict;
    report.rule = rule;
    report.citation = citation;
    report.suggested_construction = suggestion;
  };
  report.witnesses["order"] = s.size();

  const bool group = is_group(s);
  {
    nlohmann::ordered_json w;
    if (!group) {
      // Point at a row that misses a value.
      for (int x = 0; x < s.size() && w.empty(); ++x) {
        std::vector<bool> seen(static_cast<std::size_t>(s.size()), false);
        for (int y = 0; y < s.size(); ++y) seen[static_cast<std::size_t>(s.product(x, y))] = true;
        for (int v = 0; v < s.size(); ++v) {
          if (!seen[static_cast<std::size_t>(v)]) {
            w["row"] = s.name(x);
            w["missing"] = s.name(v);
            break;
          }
        }
      }
    }
    if (step("is-group", group, std::move(w))) {
      const bool abelian = is_commutative(s);
      step("is-abelian", abelian, {});
      if (abelian) {
        decide(Verdict::countable, "abelian-group",
               "finite abelian groups admit only countably many subdirect powers up to "
               "isomorphism",
               "");
      } else {
        decide(Verdict::continuum, "non-abelian-group",
               "Hickin-Plotkin and McKenzie: a finite non-abelian group admits continuum many "
               "subdirect powers",
               "");
      }
      return report;
    }
  }

  const auto band_dims = rectangular_band_dimensions(s);
  {
    nlohmann::ordered_json w;
    if (band_dims) {
      w["rows"] = band_dims->first;
      w["cols"] = band_dims->second;
    }
    if (step("rectangular-band", band_dims.has_value(), std::move(w))) {
      report.witnesses["rectangular_band"] = {band_dims->first, band_dims->second};
      decide(Verdict::countable, "rectangular-band",
             "rectangular bands admit only countably many subdirect powers up to isomorphism",
             "");
      return report;
    }
  }

  const bool commutative = is_commutative(s);
  {
    nlohmann::ordered_json w;
    if (!commutative) {
      for (int x = 0; x < s.size() && w.empty(); ++x)
        for (int y = x + 1; y < s.size(); ++y) {
          if (s.product(x, y) != s.product(y, x)) {
            w["left"] = s.name(x);
            w["right"] = s.name(y);
            break;
          }
        }
    }
    if (!step("is-commutative", commutative, std::move(w))) {
      decide(Verdict::unclassified, "unclassified",
             "not a group, not a rectangular band, not commutative: outside the decided cases",
             "");
      return report;
    }
  }

  const std::vector<int> idems = idempotents(s);
  report.witnesses["idempotents"] = name_list(s, idems);
  {
    nlohmann::ordered_json w;
    w["count"] = idems.size();
    w["elements"] = name_list(s, idems);
    if (step("multiple-idempotents", idems.size() >= 2, std::move(w))) {
      decide(Verdict::continuum, "multiple-idempotents",
             "a commutative base with at least two idempotents admits continuum many subdirect "
             "powers",
             "hat");
      return report;
    }
  }

  const ExtensionDecomposition dec = extension_decomposition(s);
  report.witnesses["kernel"] = name_list(s, dec.kernel);
  {
    nlohmann::ordered_json w;
    w["kernel_size"] = dec.kernel.size();
    if (step("kernel-group-trivial", dec.group_trivial, std::move(w))) {
      const auto cls = nilpotency_class(s);
      if (!cls) fail("internal", "a one-idempotent base with trivial kernel must be nilpotent");
      report.witnesses["nilpotency_class"] = *cls;
      nlohmann::ordered_json w2;
      w2["class"] = *cls;
      if (step("nilpotency-class-at-most-2", *cls <= 2, std::move(w2))) {
        decide(Verdict::countable, "null",
               "null and trivial commutative bases admit only countably many subdirect powers",
               "");
      } else {
        decide(Verdict::continuum, "nilpotent-class-ge-3",
               "a commutative nilpotent base of class at least 3 admits continuum many subdirect "
               "powers",
               "tm");
      }
      return report;
    }
  }

  // Nontrivial kernel group with a nontrivial quotient (a trivial quotient
  // would have made the base a group, handled above).
  if (dec.quotient_trivial) fail("internal", "a non-group base cannot have a trivial quotient");
  report.witnesses["quotient_class"] =
      dec.quotient_class ? nlohmann::ordered_json(*dec.quotient_class)
                         : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json w;
  w["quotient_size"] = dec.quotient.size();
  if (dec.quotient_class) w["quotient_class"] = *dec.quotient_class;
  step("nontrivial-group-by-nilpotent", true, std::move(w));
  decide(Verdict::continuum, "group-by-nilpotent-extension",
         "a nontrivial kernel group under a nontrivial nilpotent quotient admits continuum many "
         "subdirect powers",
         dec.quotient_class == 2 ? "wm" : "");
  return report;
}

}  // namespace sdpt
