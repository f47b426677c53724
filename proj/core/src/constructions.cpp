#include "sdpt/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "sdpt/error.hpp"
#include "sdpt/structure.hpp"

namespace sdpt {

namespace {

long parse_positive(const std::string& text, const char* what) {
  if (text.empty() || text.size() > 12 ||
      !std::all_of(text.begin(), text.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
    fail("m-spec", std::string("expected a positive integer for the ") + what);
  }
  const long v = std::stol(text);
  if (v < 1) fail("m-spec", std::string("the ") + what + " must be positive");
  return v;
}

}  // namespace

MSpec MSpec::parse(const std::string& literal) {
  MSpec spec;
  std::string text;
  for (char c : literal) {
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  }
  if (text.empty()) fail("m-spec", "empty literal");
  if (text.back() == 'k') {
    spec.kind_ = Kind::multiples;
    spec.coeff_ = parse_positive(text.substr(0, text.size() - 1), "multiplier");
    return spec;
  }
  if (text.rfind(">=", 0) == 0) {
    spec.kind_ = Kind::offset;
    spec.offset_ = parse_positive(text.substr(2), "offset");
    return spec;
  }
  if (text.front() == '[' && text.back() == ']') {
    const std::string body = text.substr(1, text.size() - 2);
    const std::size_t semi = body.find(';');
    if (semi == std::string::npos || semi + 1 >= body.size() || body[semi + 1] != '+') {
      fail("m-spec", "expected '[v1,v2,...;+stride]'");
    }
    spec.kind_ = Kind::explicit_prefix;
    std::size_t start = 0;
    const std::string values = body.substr(0, semi);
    while (start <= values.size()) {
      const std::size_t comma = values.find(',', start);
      const std::string item =
          values.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      spec.prefix_vals_.push_back(parse_positive(item, "sequence value"));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (spec.prefix_vals_.empty()) fail("m-spec", "the prefix cannot be empty");
    for (std::size_t i = 1; i < spec.prefix_vals_.size(); ++i) {
      if (spec.prefix_vals_[i] <= spec.prefix_vals_[i - 1]) {
        fail("m-spec", "the prefix must be strictly increasing");
      }
    }
    spec.stride_ = parse_positive(body.substr(semi + 2), "stride");
    return spec;
  }
  fail("m-spec", "unrecognized literal '" + literal + "'");
}

std::string MSpec::literal() const {
  switch (kind_) {
    case Kind::multiples:
      return std::to_string(coeff_) + "k";
    case Kind::offset:
      return ">=" + std::to_string(offset_);
    case Kind::explicit_prefix: {
      std::string out = "[";
      for (std::size_t i = 0; i < prefix_vals_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(prefix_vals_[i]);
      }
      out += ";+" + std::to_string(stride_) + "]";
      return out;
    }
  }
  fail("internal", "unreachable");
}

long MSpec::value(int i) const {
  if (i < 1) fail("params", "sequence positions are 1-based");
  switch (kind_) {
    case Kind::multiples:
      return coeff_ * i;
    case Kind::offset:
      return offset_ + (i - 1);
    case Kind::explicit_prefix: {
      const std::size_t k = static_cast<std::size_t>(i);
      if (k <= prefix_vals_.size()) return prefix_vals_[k - 1];
      return prefix_vals_.back() + stride_ * static_cast<long>(k - prefix_vals_.size());
    }
  }
  fail("internal", "unreachable");
}

std::vector<long> MSpec::prefix(int count) const {
  std::vector<long> out;
  for (int i = 1; i <= count; ++i) out.push_back(value(i));
  return out;
}

bool MSpec::all_multiples_of_3() const {
  switch (kind_) {
    case Kind::multiples:
      return coeff_ % 3 == 0;
    case Kind::offset:
      return false;
    case Kind::explicit_prefix:
      return stride_ % 3 == 0 &&
             std::all_of(prefix_vals_.begin(), prefix_vals_.end(),
                         [](long v) { return v % 3 == 0; });
  }
  fail("internal", "unreachable");
}

namespace {

// The (zero, one) element indices of a two-element semilattice.
std::pair<int, int> chain2_poles(const FiniteSemigroup& base) {
  if (base.size() != 2 || !is_semilattice(base)) {
    fail("base", "expected a two-element semilattice base");
  }
  const int zero = base.product(0, 1);
  return {zero, 1 - zero};
}

}  // namespace

EpSeq between(const EpSeq& lo, const EpSeq& hi) {
  if (!(lo.base() == hi.base())) fail("base-mismatch", "operands live over different bases");
  const auto [zero, one] = chain2_poles(lo.base());
  if (!lo.preperiod().empty() || !hi.preperiod().empty()) {
    fail("recurring", "both operands must be purely periodic");
  }
  if (lo == hi || !ep_leq(lo, hi)) {
    fail("order", "the lower operand must sit strictly below the upper one");
  }
  const std::size_t k = std::lcm(lo.period().size(), hi.period().size());
  if (k > kPeriodCap / 2) fail("period-cap", "the doubled period would exceed the cap");
  std::size_t j = k;
  for (std::size_t i = 0; i < k; ++i) {
    if (lo.at(i) == zero && hi.at(i) == one) {
      j = i;
      break;
    }
  }
  if (j == k) fail("internal", "strictly comparable operands must differ in the window");
  std::vector<int> per(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    per[i] = lo.at(i);
    per[k + i] = lo.at(i);
  }
  per[k + j] = one;
  EpSeq mid = EpSeq::make(lo.base(), {}, std::move(per));
  if (!ep_leq(lo, mid) || lo == mid || !ep_leq(mid, hi) || mid == hi) {
    fail("internal", "the inserted sequence must sit strictly between the operands");
  }
  return mid;
}

std::vector<EpSeq> build_chain(const FiniteSemigroup& base2, int k) {
  const auto [zero, one] = chain2_poles(base2);
  if (k < 2) fail("params", "a chain needs at least two members");
  std::vector<EpSeq> chain = {EpSeq::constant(base2, zero), EpSeq::constant(base2, one)};
  std::vector<long> quota = {k - 2L};
  while (true) {
    std::size_t gap = quota.size();
    for (std::size_t i = 0; i < quota.size(); ++i) {
      if (quota[i] > 0 && (gap == quota.size() || quota[i] > quota[gap])) gap = i;
    }
    if (gap == quota.size()) break;
    const long q = quota[gap];
    EpSeq mid = between(chain[gap], chain[gap + 1]);
    chain.insert(chain.begin() + static_cast<std::ptrdiff_t>(gap) + 1, std::move(mid));
    quota[gap] = q / 2;  // upper half of the remaining demand
    quota.insert(quota.begin() + static_cast<std::ptrdiff_t>(gap), (q - 1) - q / 2);
  }
  if (static_cast<int>(chain.size()) != k) fail("internal", "chain length drifted");
  return chain;
}

std::vector<Tuple> truncate_seqs(const std::vector<EpSeq>& seqs, int arity) {
  std::vector<Tuple> out;
  std::set<Tuple> seen;
  for (const EpSeq& s : seqs) {
    Tuple t = ep_truncate(s, arity);
    if (!seen.insert(t).second) {
      fail("arity", "arity " + std::to_string(arity) +
                        " does not separate the sequences (collision at " + epseq_literal(s) + ")");
    }
    out.push_back(std::move(t));
  }
  return out;
}

EpSeq embed_binary(const EpSeq& p, const FiniteSemigroup& s, int zero_img, int one_img) {
  const auto [zero, one] = chain2_poles(p.base());
  if (zero_img < 0 || zero_img >= s.size() || one_img < 0 || one_img >= s.size() ||
      zero_img == one_img) {
    fail("params", "the image elements must be two distinct elements of the target");
  }
  auto map = [&, zero = zero](int v) { return v == zero ? zero_img : one_img; };
  std::vector<int> pre;
  for (int v : p.preperiod()) pre.push_back(map(v));
  std::vector<int> per;
  for (int v : p.period()) per.push_back(map(v));
  return EpSeq::make(s, std::move(pre), std::move(per));
}

TupleAlgebra adjoin_diagonal(const FiniteSemigroup& s, int arity, std::vector<Tuple> tuples) {
  for (int e = 0; e < s.size(); ++e) {
    tuples.emplace_back(static_cast<std::size_t>(arity), e);
  }
  return TupleAlgebra::make(s, arity, std::move(tuples));
}

TupleAlgebra idempotent_preimage(const FiniteSemigroup& s, const TupleAlgebra& u,
                                 std::size_t size_cap) {
  const SemilatticeOrder sl = idempotent_semilattice(s);
  if (!(u.base() == sl.base)) {
    fail("base-mismatch", "the upstairs algebra must live over the idempotent semilattice");
  }
  const ArchimedeanDecomposition dec = archimedean(s);
  std::vector<std::vector<int>> fiber(static_cast<std::size_t>(sl.base.size()));
  for (int x = 0; x < s.size(); ++x) {
    for (int k = 0; k < sl.base.size(); ++k) {
      if (sl.ambient[static_cast<std::size_t>(k)] == dec.phi[static_cast<std::size_t>(x)]) {
        fiber[static_cast<std::size_t>(k)].push_back(x);
        break;
      }
    }
  }
  std::size_t total = 0;
  for (int m = 0; m < u.size(); ++m) {
    std::size_t block = 1;
    for (int v : u.member(m)) {
      block *= fiber[static_cast<std::size_t>(v)].size();
      if (block > size_cap) break;
    }
    total += block;
    if (total > size_cap) {
      fail("size-cap", "the preimage exceeds the cap of " + std::to_string(size_cap));
    }
  }
  std::vector<Tuple> members;
  members.reserve(total);
  const int arity = u.arity();
  for (int m = 0; m < u.size(); ++m) {
    const Tuple& pattern = u.member(m);
    std::vector<std::size_t> pick(static_cast<std::size_t>(arity), 0);
    while (true) {
      Tuple t(static_cast<std::size_t>(arity));
      for (int c = 0; c < arity; ++c) {
        t[static_cast<std::size_t>(c)] =
            fiber[static_cast<std::size_t>(pattern[static_cast<std::size_t>(c)])]
                 [pick[static_cast<std::size_t>(c)]];
      }
      members.push_back(std::move(t));
      int c = 0;
      while (c < arity) {
        auto& idx = pick[static_cast<std::size_t>(c)];
        if (++idx < fiber[static_cast<std::size_t>(pattern[static_cast<std::size_t>(c)])].size()) {
          break;
        }
        idx = 0;
        ++c;
      }
      if (c == arity) break;
    }
  }
  return TupleAlgebra::make(s, arity, std::move(members));
}

WitnessFamily tilde_family(const FiniteSemigroup& s, int chain_len, int arity) {
  const SemilatticeOrder ord = semilattice_order(s);
  const int atom = minimal_nonzero(ord);
  const int zero = *ord.zero;
  const FiniteSemigroup base2 = subsemigroup(s, {zero, atom});
  WitnessFamily fam;
  for (const EpSeq& c : build_chain(base2, chain_len)) {
    fam.generators.push_back(embed_binary(c, s, zero, atom));
  }
  fam.truncation = adjoin_diagonal(s, arity, truncate_seqs(fam.generators, arity));
  fam.base = s;
  fam.label = "tilde";
  fam.certificate_hint = "principal-ideal-filter";
  fam.params["chain"] = chain_len;
  fam.params["arity"] = arity;
  fam.params["zero"] = s.name(zero);
  fam.params["atom"] = s.name(atom);
  return fam;
}

WitnessFamily hat_family(const FiniteSemigroup& s, const TupleAlgebra& u, std::size_t size_cap) {
  WitnessFamily fam;
  fam.truncation = idempotent_preimage(s, u, size_cap);
  fam.base = s;
  fam.label = "hat";
  fam.certificate_hint = "idempotent-semilattice";
  fam.params["arity"] = u.arity();
  fam.params["upstairs_size"] = u.size();
  nlohmann::ordered_json members = nlohmann::ordered_json::array();
  for (int m = 0; m < u.size(); ++m) members.push_back(u.member_name(m));
  fam.params["upstairs"] = std::move(members);
  return fam;
}

namespace {

// S^1, S^2, ..., S^limit as element sets.
std::vector<std::vector<bool>> power_layers(const FiniteSemigroup& s, int limit) {
  const int n = s.size();
  std::vector<std::vector<bool>> layers;
  layers.emplace_back(static_cast<std::size_t>(n), true);
  for (int k = 2; k <= limit; ++k) {
    std::vector<bool> next(static_cast<std::size_t>(n), false);
    const auto& prev = layers.back();
    for (int x = 0; x < n; ++x) {
      if (!prev[static_cast<std::size_t>(x)]) continue;
      for (int y = 0; y < n; ++y) next[static_cast<std::size_t>(s.product(x, y))] = true;
    }
    layers.push_back(std::move(next));
  }
  return layers;
}

}  // namespace

XYWitness choose_xy(const FiniteSemigroup& s) {
  if (!is_commutative(s)) fail("precondition", "the nilpotent construction needs a commutative base");
  const auto cls = nilpotency_class(s);
  if (!cls || *cls < 3) {
    fail("precondition", "the nilpotent construction needs nilpotency class at least 3");
  }
  const int c = *cls;
  const int zero = *zero_element(s);
  const auto layers = power_layers(s, c - 1);
  const auto& top = layers[static_cast<std::size_t>(c - 2)];     // S^(c-1)
  const auto& under = layers[static_cast<std::size_t>(c - 3)];   // S^(c-2)
  XYWitness wit;
  wit.x = -1;
  for (int e = 0; e < s.size(); ++e) {
    if (e != zero && top[static_cast<std::size_t>(e)]) {
      wit.x = e;
      break;
    }
  }
  if (wit.x < 0) fail("internal", "class c leaves the (c-1)-th power layer nonzero");
  wit.y = -1;
  for (int v = 0; v < s.size() && wit.y < 0; ++v) {
    if (v == zero || !under[static_cast<std::size_t>(v)]) continue;
    for (int w = 0; w < s.size(); ++w) {
      if (s.product(v, w) == wit.x) {
        wit.y = v;
        wit.word = {v, w};
        break;
      }
    }
  }
  if (wit.y < 0) fail("internal", "the top layer must be reachable from the layer below");
  return wit;
}

WitnessFamily t_m(const FiniteSemigroup& s, const MSpec& m, int index_count, int arity) {
  const XYWitness wit = choose_xy(s);
  if (index_count < 1) fail("params", "the index count must be at least 1");
  if (!m.all_multiples_of_3()) {
    fail("m-spec", "this family needs every sequence value divisible by 3");
  }
  const long deepest = index_count + m.value(index_count);
  if (arity < deepest) {
    fail("arity", "arity " + std::to_string(arity) + " is too small, need at least " +
                      std::to_string(deepest));
  }
  const int zero = *zero_element(s);
  const std::size_t n = static_cast<std::size_t>(arity);

  std::vector<Tuple> members;
  std::vector<EpSeq> gens;
  members.emplace_back(n, zero);
  gens.push_back(EpSeq::constant(s, zero));
  for (int i = 1; i <= arity; ++i) {
    for (int u = 0; u < s.size(); ++u) {
      if (u == zero) continue;
      Tuple t(n, zero);
      t[static_cast<std::size_t>(i - 1)] = u;
      members.push_back(t);
      std::vector<int> pre(static_cast<std::size_t>(i), zero);
      pre[static_cast<std::size_t>(i - 1)] = u;
      gens.push_back(EpSeq::make(s, std::move(pre), {zero}));
    }
  }
  for (int i = 1; i <= index_count; ++i) {
    const long mi = m.value(i);
    for (long j = 1; j <= mi; ++j) {
      Tuple t(n, zero);
      t[static_cast<std::size_t>(i - 1)] = wit.y;
      t[static_cast<std::size_t>(i - 1 + j)] = wit.x;
      members.push_back(t);
      std::vector<int> pre(static_cast<std::size_t>(i + j), zero);
      pre[static_cast<std::size_t>(i - 1)] = wit.y;
      pre[static_cast<std::size_t>(i - 1 + j)] = wit.x;
      gens.push_back(EpSeq::make(s, std::move(pre), {zero}));
    }
  }

  WitnessFamily fam;
  fam.truncation = TupleAlgebra::make(s, arity, std::move(members));
  fam.base = s;
  fam.generators = std::move(gens);
  fam.label = "tm";
  fam.certificate_hint = "divisor-spectrum";
  fam.params["m"] = m.literal();
  fam.params["index_count"] = index_count;
  fam.params["arity"] = arity;
  fam.params["x"] = s.name(wit.x);
  fam.params["y"] = s.name(wit.y);
  nlohmann::ordered_json word = nlohmann::ordered_json::array();
  for (int w : wit.word) word.push_back(s.name(w));
  fam.params["word"] = std::move(word);
  return fam;
}

XGWitness choose_xg(const FiniteSemigroup& s) {
  const ExtensionDecomposition dec = extension_decomposition(s);
  if (dec.group_trivial || dec.quotient_trivial || dec.quotient_class != 2) {
    fail("precondition",
         "the extension construction needs a nontrivial kernel group and a null quotient");
  }
  const int e = idempotents(s)[0];
  std::vector<bool> in_kernel(static_cast<std::size_t>(s.size()), false);
  for (int k : dec.kernel) in_kernel[static_cast<std::size_t>(k)] = true;
  XGWitness wit;
  wit.x = -1;
  for (int v = 0; v < s.size(); ++v) {
    if (!in_kernel[static_cast<std::size_t>(v)]) {
      wit.x = v;
      break;
    }
  }
  wit.x_under = s.product(e, wit.x);
  wit.g = -1;
  for (int v : dec.kernel) {
    if (v != e) {
      wit.g = v;
      break;
    }
  }
  return wit;
}

WitnessFamily w_m(const FiniteSemigroup& s, const MSpec& m, int p_count, int arity,
                  std::size_t size_cap) {
  const XGWitness wit = choose_xg(s);
  if (p_count < 1) fail("params", "the block count must be at least 1");
  if (m.value(1) <= s.size()) {
    fail("m-spec", "this family needs the first sequence value to exceed the base order");
  }
  const long deepest = p_count + m.value(p_count);
  if (arity < deepest) {
    fail("arity", "arity " + std::to_string(arity) + " is too small, need at least " +
                      std::to_string(deepest));
  }
  const MinimalIdeal kernel = minimal_ideal(s);
  const int e = idempotents(s)[0];
  const std::size_t order = kernel.members.size();
  long u_count = 0;
  for (int p = 1; p <= p_count; ++p) u_count += m.value(p);
  const std::size_t extras = static_cast<std::size_t>(s.size()) + static_cast<std::size_t>(u_count);
  if (extras >= size_cap) {
    fail("size-cap", "the family exceeds the cap of " + std::to_string(size_cap));
  }
  std::size_t block = 1;
  for (int c = 0; c < arity; ++c) {
    if (block > (size_cap - extras) / order) {
      fail("size-cap", "the kernel block exceeds the cap of " + std::to_string(size_cap));
    }
    block *= order;
  }

  const std::size_t n = static_cast<std::size_t>(arity);
  std::vector<Tuple> members;
  members.reserve(block + static_cast<std::size_t>(s.size()) + static_cast<std::size_t>(u_count));
  // Full kernel block.
  {
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      Tuple t(n);
      for (std::size_t c = 0; c < n; ++c) t[c] = kernel.members[pick[c]];
      members.push_back(std::move(t));
      std::size_t c = 0;
      while (c < n) {
        if (++pick[c] < order) break;
        pick[c] = 0;
        ++c;
      }
      if (c == n) break;
    }
  }
  std::vector<EpSeq> gens;
  for (int v = 0; v < s.size(); ++v) {
    members.emplace_back(n, v);
    gens.push_back(EpSeq::constant(s, v));
  }
  for (int p = 1; p <= p_count; ++p) {
    const long mp = m.value(p);
    for (long q = 1; q <= mp; ++q) {
      Tuple t(n, wit.x_under);
      for (int c = 0; c < p - 1; ++c) t[static_cast<std::size_t>(c)] = e;
      t[static_cast<std::size_t>(p - 1)] = wit.g;
      for (long c = p; c < p + q; ++c) t[static_cast<std::size_t>(c)] = wit.x;
      members.push_back(t);
      std::vector<int> pre(static_cast<std::size_t>(p + q));
      for (int c = 0; c < p - 1; ++c) pre[static_cast<std::size_t>(c)] = e;
      pre[static_cast<std::size_t>(p - 1)] = wit.g;
      for (long c = p; c < p + q; ++c) pre[static_cast<std::size_t>(c)] = wit.x;
      gens.push_back(EpSeq::make(s, std::move(pre), {wit.x_under}));
    }
  }

  WitnessFamily fam;
  fam.truncation = TupleAlgebra::make(s, arity, std::move(members));
  fam.base = s;
  fam.generators = std::move(gens);
  fam.label = "wm";
  fam.certificate_hint = "root-spectrum";
  fam.params["m"] = m.literal();
  fam.params["p_count"] = p_count;
  fam.params["arity"] = arity;
  fam.params["x"] = s.name(wit.x);
  fam.params["x_under"] = s.name(wit.x_under);
  fam.params["g"] = s.name(wit.g);
  fam.params["group_order"] = order;
  fam.params["exponent"] = order + 1;
  fam.params["group_block"] = true;
  return fam;
}

}  // namespace sdpt
