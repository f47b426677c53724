#include "sdpt/epseq.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "sdpt/error.hpp"
#include "sdpt/structure.hpp"

namespace sdpt {

EpSeq EpSeq::make(FiniteSemigroup base, std::vector<int> pre, std::vector<int> per) {
  if (per.empty()) fail("shape", "the period part cannot be empty");
  if (per.size() > kPeriodCap) fail("period-cap", "period longer than the cap");
  for (int v : pre) {
    if (v < 0 || v >= base.size()) fail("index-range", "sequence term out of range");
  }
  for (int v : per) {
    if (v < 0 || v >= base.size()) fail("index-range", "sequence term out of range");
  }
  // Primitive period: the shortest prefix whose repetition gives the word.
  for (std::size_t d = 1; d < per.size(); ++d) {
    if (per.size() % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < per.size() && repeats; ++i) repeats = per[i] == per[i % d];
    if (repeats) {
      per.resize(d);
      break;
    }
  }
  // Minimal preperiod: absorb a trailing pre term equal to the period's
  // last term by rotating the period right.
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
  }
  EpSeq s;
  s.base_ = std::move(base);
  s.pre_ = std::move(pre);
  s.per_ = std::move(per);
  return s;
}

EpSeq EpSeq::constant(FiniteSemigroup base, int value) {
  return make(std::move(base), {}, {value});
}

EpSeq ep_product(const EpSeq& a, const EpSeq& b) {
  if (!(a.base() == b.base())) fail("base-mismatch", "operands live over different bases");
  const std::size_t la = a.period().size();
  const std::size_t lb = b.period().size();
  const std::size_t l = std::lcm(la, lb);
  if (l > kPeriodCap) {
    fail("period-cap", "combined period " + std::to_string(l) + " exceeds the cap of " +
                           std::to_string(kPeriodCap));
  }
  const std::size_t pre_len = std::max(a.preperiod().size(), b.preperiod().size());
  std::vector<int> pre(pre_len);
  std::vector<int> per(l);
  for (std::size_t i = 0; i < pre_len; ++i) pre[i] = a.base().product(a.at(i), b.at(i));
  for (std::size_t i = 0; i < l; ++i) {
    per[i] = a.base().product(a.at(pre_len + i), b.at(pre_len + i));
  }
  return EpSeq::make(a.base(), std::move(pre), std::move(per));
}

bool ep_leq(const EpSeq& a, const EpSeq& b) {
  if (!(a.base() == b.base())) fail("base-mismatch", "operands live over different bases");
  if (!is_semilattice(a.base())) fail("not-semilattice", "the pointwise order needs a semilattice base");
  return ep_product(a, b) == a;
}

Tuple ep_truncate(const EpSeq& a, int arity) {
  if (arity < 1) fail("params", "arity must be at least 1");
  Tuple t(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i) t[static_cast<std::size_t>(i)] = a.at(static_cast<std::size_t>(i));
  return t;
}

EpSeq ep_phi(const EpSeq& a) {
  const ArchimedeanDecomposition dec = archimedean(a.base());
  const SemilatticeOrder sl = idempotent_semilattice(a.base());
  std::vector<int> local(static_cast<std::size_t>(a.base().size()), -1);
  for (int k = 0; k < sl.base.size(); ++k) {
    local[static_cast<std::size_t>(sl.ambient[static_cast<std::size_t>(k)])] = k;
  }
  auto map = [&](int v) { return local[static_cast<std::size_t>(dec.phi[static_cast<std::size_t>(v)])]; };
  std::vector<int> pre;
  pre.reserve(a.preperiod().size());
  for (int v : a.preperiod()) pre.push_back(map(v));
  std::vector<int> per;
  per.reserve(a.period().size());
  for (int v : a.period()) per.push_back(map(v));
  return EpSeq::make(sl.base, std::move(pre), std::move(per));
}

namespace {

std::vector<int> parse_name_list(const FiniteSemigroup& base, const std::string& part,
                                 bool allow_empty) {
  std::vector<int> out;
  std::string trimmed;
  for (char c : part) {
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  }
  if (trimmed.empty()) {
    if (allow_empty) return out;
    fail("syntax", "the period part cannot be empty");
  }
  std::size_t start = 0;
  while (start <= trimmed.size()) {
    const std::size_t comma = trimmed.find(',', start);
    const std::string name =
        trimmed.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (name.empty()) fail("syntax", "empty element name in the sequence literal");
    out.push_back(base.index_of(name));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

EpSeq parse_epseq(const FiniteSemigroup& base, const std::string& literal) {
  const std::size_t bar = literal.find('|');
  if (bar == std::string::npos) fail("syntax", "a sequence literal needs a '|' separator");
  if (literal.find('|', bar + 1) != std::string::npos) {
    fail("syntax", "a sequence literal has exactly one '|' separator");
  }
  std::vector<int> pre = parse_name_list(base, literal.substr(0, bar), true);
  std::vector<int> per = parse_name_list(base, literal.substr(bar + 1), false);
  return EpSeq::make(base, std::move(pre), std::move(per));
}

std::string epseq_literal(const EpSeq& a) {
  std::string out;
  for (std::size_t i = 0; i < a.preperiod().size(); ++i) {
    if (i) out += ",";
    out += a.base().name(a.preperiod()[i]);
  }
  out += "|";
  for (std::size_t i = 0; i < a.period().size(); ++i) {
    if (i) out += ",";
    out += a.base().name(a.period()[i]);
  }
  return out;
}

}  // namespace sdpt
