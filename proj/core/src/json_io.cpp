#include "sdpt/json_io.hpp"

#include <cctype>

#include "sdpt/error.hpp"
#include "sdpt/structure.hpp"
#include "sdpt/version.hpp"

namespace sdpt {

std::string fingerprint_hash(const std::string& doc) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : doc) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

ojson cayley_json(const FiniteSemigroup& s) {
  ojson j;
  j["kind"] = "semigroup";
  j["elements"] = s.names();
  ojson table = ojson::array();
  for (int i = 0; i < s.size(); ++i) {
    ojson row = ojson::array();
    for (int k = 0; k < s.size(); ++k) row.push_back(s.product(i, k));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

FiniteSemigroup semigroup_from_json(const ojson& j) { return parse_semigroup(j.dump()); }

std::string semigroup_hash(const FiniteSemigroup& s) {
  return fingerprint_hash(cayley_json(s).dump());
}

ojson tuple_algebra_json(const TupleAlgebra& t) {
  ojson j;
  j["kind"] = "tuple-algebra";
  j["base"] = cayley_json(t.base());
  j["arity"] = t.arity();
  ojson members = ojson::array();
  for (int m = 0; m < t.size(); ++m) members.push_back(t.member(m));
  j["members"] = std::move(members);
  j["closed"] = t.closed();
  j["subdirect"] = t.closed() && is_subdirect(t);
  return j;
}

TupleAlgebra tuple_algebra_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("arity") || !j.contains("members")) {
    fail("syntax", "expected an object with 'base', 'arity' and 'members'");
  }
  const FiniteSemigroup base = semigroup_from_json(j["base"]);
  if (!j["arity"].is_number_integer()) fail("syntax", "'arity' must be an integer");
  const int arity = j["arity"].get<int>();
  if (!j["members"].is_array()) fail("syntax", "'members' must be an array of tuples");
  std::vector<Tuple> members;
  for (const auto& row : j["members"]) {
    if (!row.is_array()) fail("syntax", "'members' must be an array of tuples");
    Tuple t;
    for (const auto& cell : row) {
      if (!cell.is_number_integer()) fail("syntax", "tuple entries must be integers");
      t.push_back(cell.get<int>());
    }
    members.push_back(std::move(t));
  }
  TupleAlgebra alg = TupleAlgebra::make(base, arity, std::move(members));
  if (j.contains("closed") && j["closed"].is_boolean() && j["closed"].get<bool>() != alg.closed()) {
    fail("inconsistent-document", "the stored closure flag contradicts the member list");
  }
  if (j.contains("subdirect") && j["subdirect"].is_boolean()) {
    const bool actual = alg.closed() && is_subdirect(alg);
    if (j["subdirect"].get<bool>() != actual) {
      fail("inconsistent-document", "the stored projection flag contradicts the member list");
    }
  }
  return alg;
}

LoadedAlgebra algebra_from_document(const std::string& doc) {
  bool is_json = false;
  for (char c : doc) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    is_json = c == '{';
    break;
  }
  LoadedAlgebra out;
  if (is_json) {
    ojson j;
    try {
      j = ojson::parse(doc);
    } catch (const nlohmann::json::parse_error& e) {
      fail("syntax", std::string("invalid JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("members")) {
      out.tuples = tuple_algebra_from_json(j);
      out.semigroup = out.tuples->to_semigroup();
      return out;
    }
  }
  out.semigroup = parse_semigroup(doc);
  return out;
}

ojson witness_family_json(const WitnessFamily& f) {
  ojson j;
  j["kind"] = "witness-family";
  j["label"] = f.label;
  j["params"] = f.params;
  j["base"] = cayley_json(f.base);
  ojson gens = ojson::array();
  for (const EpSeq& g : f.generators) gens.push_back(epseq_literal(g));
  j["generators"] = std::move(gens);
  j["certificate_hint"] = f.certificate_hint;
  j["truncation"] = tuple_algebra_json(f.truncation);
  return j;
}

ojson certificate_json(const Certificate& c) {
  ojson j;
  j["kind"] = "certificate";
  j["invariant"] = c.kind;
  j["verdict"] = c.verdict;
  j["left"] = c.left;
  j["right"] = c.right;
  if (!c.replay.is_null()) j["replay"] = c.replay;
  return j;
}

ojson classification_json(const ClassificationReport& r) {
  ojson j;
  j["kind"] = "classification";
  j["verdict"] = verdict_string(r.verdict);
  j["rule"] = r.rule;
  j["citation"] = r.citation;
  j["suggested_construction"] = r.suggested_construction;
  ojson route = ojson::array();
  for (const RouteStep& s : r.route) {
    ojson step;
    step["condition"] = s.condition;
    step["holds"] = s.holds;
    step["witness"] = s.witness;
    route.push_back(std::move(step));
  }
  j["route"] = std::move(route);
  j["witnesses"] = r.witnesses;
  return j;
}

ojson census_json(const CensusResult& r) {
  ojson j;
  j["kind"] = "census";
  j["base"] = cayley_json(r.base);
  j["arity"] = r.arity;
  j["total"] = r.total;
  j["dedup_exact"] = r.dedup_exact;
  ojson classes = ojson::array();
  for (std::size_t i = 0; i < r.representatives.size(); ++i) {
    const TupleAlgebra& rep = r.representatives[i];
    ojson cls;
    cls["labeled_count"] = r.class_sizes[i];
    cls["order"] = rep.size();
    ojson members = ojson::array();
    for (int m = 0; m < rep.size(); ++m) members.push_back(rep.member(m));
    cls["members"] = std::move(members);
    classes.push_back(std::move(cls));
  }
  j["classes"] = std::move(classes);
  j["wall_ms"] = r.wall_ms;
  return j;
}

CensusResult census_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("arity") || !j.contains("classes")) {
    fail("syntax", "expected an object with 'base', 'arity' and 'classes'");
  }
  CensusResult r;
  r.base = semigroup_from_json(j["base"]);
  r.arity = j["arity"].get<int>();
  r.total = j.value("total", std::uint64_t{0});
  r.dedup_exact = j.value("dedup_exact", true);
  r.wall_ms = j.value("wall_ms", 0.0);
  for (const auto& cls : j["classes"]) {
    std::vector<Tuple> members;
    for (const auto& row : cls["members"]) {
      Tuple t;
      for (const auto& cell : row) t.push_back(cell.get<int>());
      members.push_back(std::move(t));
    }
    r.representatives.push_back(TupleAlgebra::make(r.base, r.arity, std::move(members)));
    r.class_sizes.push_back(cls["labeled_count"].get<std::uint64_t>());
  }
  return r;
}

ojson analysis_json(const FiniteSemigroup& s) {
  ojson j;
  j["kind"] = "analysis";
  j["order"] = s.size();
  j["elements"] = s.names();
  j["fingerprint"] = semigroup_hash(s);
  const bool commutative = is_commutative(s);
  j["commutative"] = commutative;
  j["group"] = is_group(s);
  j["band"] = is_band(s);
  j["semilattice"] = is_semilattice(s);
  const auto zero = zero_element(s);
  j["zero"] = zero ? ojson(s.name(*zero)) : ojson(nullptr);
  const std::vector<int> idems = idempotents(s);
  ojson idem_names = ojson::array();
  for (int e : idems) idem_names.push_back(s.name(e));
  j["idempotents"] = std::move(idem_names);

  ojson profiles = ojson::array();
  for (int e = 0; e < s.size(); ++e) {
    const auto [index, period] = monogenic_index_period(s, e);
    ojson p;
    p["element"] = s.name(e);
    p["index"] = index;
    p["period"] = period;
    profiles.push_back(std::move(p));
  }
  j["power_profiles"] = std::move(profiles);

  const auto dims = rectangular_band_dimensions(s);
  j["rectangular_band"] = dims ? ojson({{"rows", dims->first}, {"cols", dims->second}})
                               : ojson(nullptr);

  const MinimalIdeal kernel = minimal_ideal(s);
  ojson kj;
  ojson kernel_names = ojson::array();
  for (int e : kernel.members) kernel_names.push_back(s.name(e));
  kj["members"] = std::move(kernel_names);
  kj["group"] = kernel.group;
  j["minimal_ideal"] = std::move(kj);

  const auto cls = nilpotency_class(s);
  j["nilpotency_class"] = cls ? ojson(*cls) : ojson(nullptr);

  if (commutative) {
    const ArchimedeanDecomposition dec = archimedean(s);
    ojson comps = ojson::array();
    for (std::size_t c = 0; c < dec.components.size(); ++c) {
      ojson comp;
      comp["idempotent"] = s.name(dec.idempotent_of_component[c]);
      ojson members = ojson::array();
      for (int e : dec.components[c]) members.push_back(s.name(e));
      comp["members"] = std::move(members);
      comps.push_back(std::move(comp));
    }
    j["archimedean_components"] = std::move(comps);
    if (idems.size() == 1 && !is_group(s)) {
      const ExtensionDecomposition ext = extension_decomposition(s);
      ojson ej;
      ej["group_order"] = ext.group.size();
      ej["quotient_order"] = ext.quotient.size();
      ej["quotient_class"] = ext.quotient_class ? ojson(*ext.quotient_class) : ojson(nullptr);
      j["extension"] = std::move(ej);
    }
  }
  return j;
}

ojson tool_meta() {
  ojson j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["schema"] = kSchemaVersion;
  return j;
}

}  // namespace sdpt
