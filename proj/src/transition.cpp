#include "cytrans/transition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cytrans/errors.hpp"
#include "cytrans/keyvalue.hpp"
#include "cytrans/poly_text.hpp"

namespace cytrans {

long Fingerprint::alternating_sum() const {
  long s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * b[i];
  return s;
}

ExceptionalTree parse_tree_label(std::string_view label) {
  std::string s = trim_copy(label);
  if (s.size() < 2 || !std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("bad exceptional tree label '" + s + "'");
  const long n = std::stol(s.substr(1));
  const char kind = s[0];
  if ((kind == 'A' && n >= 1) || (kind == 'D' && n >= 4) || (kind == 'E' && n >= 6 && n <= 8)) return {s, n};
  throw ParseError("bad exceptional tree label '" + s + "'");
}

std::vector<ExceptionalTree> parse_tree_list(std::string_view text) {
  std::vector<ExceptionalTree> out;
  for (const auto& item : split_list(text)) {
    long copies = 1;
    std::string label = item;
    if (auto star = item.find('*'); star != std::string::npos) {
      std::string count = trim_copy(std::string_view(item).substr(0, star));
      std::size_t used = 0;
      try {
        copies = std::stol(count, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != count.size() || copies < 0) throw ParseError("bad tree multiplicity in '" + item + "'");
      label = trim_copy(std::string_view(item).substr(star + 1));
    }
    ExceptionalTree tree = parse_tree_label(label);
    for (long i = 0; i < copies; ++i) out.push_back(tree);
  }
  return out;
}

std::string format_tree_list(const std::vector<ExceptionalTree>& trees) {
  std::string out;
  std::size_t i = 0;
  while (i < trees.size()) {
    std::size_t j = i;
    while (j < trees.size() && trees[j] == trees[i]) ++j;
    if (!out.empty()) out += ", ";
    out += (j - i > 1 ? std::to_string(j - i) + "*" : "") + trees[i].label;
    i = j;
  }
  return out;
}

long SingularDatum::milnor_total() const {
  long s = 0;
  for (long m : milnor) s += m;
  return s;
}

long ResolutionDatum::curve_total() const {
  long s = 0;
  for (const auto& t : trees) s += t.curves;
  return s;
}

std::string to_string(TransitionType t) {
  switch (t) {
    case TransitionType::conifold:
      return "conifold";
    case TransitionType::small:
      return "small";
    case TransitionType::typeII:
      return "typeII";
    case TransitionType::other:
      return "other";
  }
  return "other";
}

TransitionType parse_transition_type(std::string_view s) {
  if (s == "conifold") return TransitionType::conifold;
  if (s == "small") return TransitionType::small;
  if (s == "typeII") return TransitionType::typeII;
  if (s == "other") return TransitionType::other;
  throw ParseError("unknown transition type '" + std::string(s) + "'");
}

SplittingFamily::SplittingFamily(LocalModel local, Polynomial deformed, std::vector<std::string> parameters,
                                 std::map<std::string, FieldElement> values, long expected_nodes_per_point)
    : local_(std::move(local)),
      deformed_(std::move(deformed)),
      parameters_(std::move(parameters)),
      values_(std::move(values)),
      expected_(expected_nodes_per_point) {
  for (const auto& p : parameters_)
    if (!deformed_.ring()->index_of(p)) throw DomainError("parameter '" + p + "' is not a variable of the family");
  for (const auto& [p, v] : values_)
    if (std::find(parameters_.begin(), parameters_.end(), p) == parameters_.end())
      throw DomainError("value given for unknown parameter '" + p + "'");
  if (expected_ <= 0) throw DomainError("expected node count must be positive");
  if (!(specialize({}) == local_.germ())) throw DomainError("family at parameter 0 differs from the local model");
}

Polynomial SplittingFamily::specialize(const std::map<std::string, FieldElement>& values) const {
  const RingPtr& target = local_.germ().ring();
  std::map<std::size_t, Polynomial> assignments;
  for (const auto& p : parameters_) {
    auto it = values.find(p);
    FieldElement v = it == values.end() ? target->field().zero() : it->second;
    assignments.emplace(*deformed_.ring()->index_of(p), Polynomial::constant(target, v));
  }
  if (assignments.empty()) return deformed_.in_ring(target);
  return substitute(deformed_, assignments);
}

namespace {

void check_nonnegative(const Fingerprint& fp) {
  for (std::size_t i = 0; i < fp.b.size(); ++i)
    if (fp.b[i] < 0)
      throw InconsistentData("derived b" + std::to_string(i) + "(" + fp.name + ") = " + std::to_string(fp.b[i]) +
                             " is negative");
}

Finding make(Finding::Severity s, std::string code, std::string message) {
  return Finding{s, std::move(code), std::move(message)};
}

}  // namespace

TransitionTable compute_table(const TransitionRecord& t) {
  TransitionTable table;
  table.smoothing = t.smoothing;
  if (t.type == TransitionType::typeII) {
    if (!t.resolution_fp || !t.singular_fp)
      throw InconsistentData("type II record '" + t.name + "' needs supplied resolution and singular fingerprints");
    table.resolution = *t.resolution_fp;
    table.singular = *t.singular_fp;
    table.derived = false;
    return table;
  }
  for (const auto& f : fingerprint_findings(t.smoothing))
    if (f.severity == Finding::Severity::error)
      throw InconsistentData("smoothing fingerprint fails: " + f.message);

  const Fingerprint& s = t.smoothing;
  const long mu = t.singular.milnor_total();
  const long e = t.resolution.curve_total();
  const long k = t.resolution.k;

  Fingerprint bar;
  bar.name = t.singular_name;
  bar.smooth = false;
  bar.chi = s.chi + mu;
  bar.b[2] = s.b[2];
  bar.b[4] = s.b[2] + k;
  bar.b[3] = 2 + bar.b[2] + bar.b[4] - bar.chi;
  bar.pi1 = t.singular_pi1;
  if (t.h1_theta_pair) bar.h1_theta = t.h1_theta_pair->first;

  Fingerprint y;
  y.name = t.resolution_name;
  y.chi = bar.chi + e;
  y.b[2] = s.b[2] + k;
  y.b[4] = y.b[2];
  y.b[3] = 2 + 2 * y.b[2] - y.chi;
  y.h11 = y.b[2];
  if (y.b[3] % 2 == 0) y.h21 = (y.b[3] - 2) / 2;
  y.pi1 = t.resolution_pi1;
  if (t.h1_theta_pair) y.h1_theta = t.h1_theta_pair->second;

  check_nonnegative(bar);
  check_nonnegative(y);
  table.resolution = std::move(y);
  table.singular = std::move(bar);
  return table;
}

std::string to_string(Finding::Severity s) {
  switch (s) {
    case Finding::Severity::error:
      return "ERROR";
    case Finding::Severity::warning:
      return "WARNING";
    case Finding::Severity::info:
      return "INFO";
  }
  return "INFO";
}

std::string Finding::to_string() const { return cytrans::to_string(severity) + " [" + code + "] " + message; }

std::vector<Finding> fingerprint_findings(const Fingerprint& fp) {
  using S = Finding::Severity;
  std::vector<Finding> out;
  const std::string& n = fp.name;
  auto num = [](long v) { return std::to_string(v); };
  if (fp.chi != fp.alternating_sum())
    out.push_back(make(S::error, "euler", n + ": chi=" + num(fp.chi) + " but alternating Betti sum is " +
                                               num(fp.alternating_sum())));
  if (fp.b[0] != 1 || fp.b[6] != 1) out.push_back(make(S::error, "betti", n + ": b0 and b6 must be 1"));
  if (fp.b[1] != 0 || fp.b[5] != 0) out.push_back(make(S::error, "betti", n + ": b1 and b5 must be 0"));
  if (!fp.smooth) return out;
  if (fp.b[2] != fp.b[4])
    out.push_back(make(S::error, "duality", n + ": b2=" + num(fp.b[2]) + " differs from b4=" + num(fp.b[4])));
  if (fp.b[3] % 2 != 0) out.push_back(make(S::error, "hodge", n + ": b3=" + num(fp.b[3]) + " is odd"));
  if (fp.h11 && *fp.h11 != fp.b[2])
    out.push_back(make(S::error, "hodge", n + ": h11=" + num(*fp.h11) + " differs from b2=" + num(fp.b[2])));
  if (fp.h21 && fp.b[3] != 2 + 2 * *fp.h21)
    out.push_back(make(S::error, "hodge", n + ": b3=" + num(fp.b[3]) + " differs from 2+2*h21=" +
                                              num(2 + 2 * *fp.h21)));
  if (fp.h11 && fp.h21 && fp.chi != 2 * (*fp.h11 - *fp.h21))
    out.push_back(make(S::error, "hodge", n + ": chi=" + num(fp.chi) + " differs from 2(h11-h21)=" +
                                              num(2 * (*fp.h11 - *fp.h21))));
  if (fp.h1_theta && fp.b[3] % 2 == 0 && *fp.h1_theta != (fp.b[3] - 2) / 2)
    out.push_back(make(S::warning, "h1_theta", n + ": h1Θ=" + num(*fp.h1_theta) + " vs expected h21=" +
                                                   num((fp.b[3] - 2) / 2)));
  return out;
}

std::vector<Finding> consistency_check(const TransitionRecord& t) {
  using S = Finding::Severity;
  std::vector<Finding> out;

  switch (t.type) {
    case TransitionType::conifold: {
      bool nodes = std::all_of(t.singular.milnor.begin(), t.singular.milnor.end(), [](long m) { return m == 1; });
      bool a1 = std::all_of(t.resolution.trees.begin(), t.resolution.trees.end(),
                            [](const ExceptionalTree& tr) { return tr.label == "A1"; });
      if (!nodes) out.push_back(make(S::error, "type", "conifold record with a non-node singular point"));
      if (!a1) out.push_back(make(S::error, "type", "conifold record with an exceptional tree other than A1"));
      break;
    }
    case TransitionType::small:
      if (!t.singular.terminal) out.push_back(make(S::error, "type", "small record with non-terminal singularities"));
      break;
    case TransitionType::typeII:
      if (!t.resolution.divisor || !t.resolution.trees.empty())
        out.push_back(make(S::error, "type", "type II record must carry one divisor contraction and no trees"));
      break;
    case TransitionType::other:
      break;
  }
  if (t.type != TransitionType::typeII && (t.resolution.k < 0 || t.resolution.k > t.resolution.curve_total()))
    out.push_back(make(S::error, "resolution", "k=" + std::to_string(t.resolution.k) + " outside [0, " +
                                                   std::to_string(t.resolution.curve_total()) + "]"));
  if (t.h1_theta_pair && t.h1_theta_pair->first > t.h1_theta_pair->second)
    out.push_back(make(S::error, "h1_pair", "h1Θ pair (" + std::to_string(t.h1_theta_pair->first) + "," +
                                                std::to_string(t.h1_theta_pair->second) +
                                                ") implies a negative image dimension"));

  TransitionTable table;
  try {
    table = compute_table(t);
  } catch (const InconsistentData& e) {
    out.push_back(make(S::error, "derivation", e.what()));
    return out;
  }
  for (const Fingerprint* fp : {&table.resolution, &table.singular, &table.smoothing})
    for (auto& f : fingerprint_findings(*fp)) out.push_back(std::move(f));

  if (table.derived) {
    auto compare = [&](const std::optional<Fingerprint>& supplied, const Fingerprint& derived) {
      if (!supplied) return;
      if (supplied->b != derived.b || supplied->chi != derived.chi)
        out.push_back(make(S::error, "supplied", derived.name + ": supplied Betti numbers or chi differ from the derived ones"));
      if (supplied->h11 && derived.h11 && *supplied->h11 != *derived.h11)
        out.push_back(make(S::error, "supplied", derived.name + ": supplied h11 differs from the derived one"));
      if (supplied->h21 && derived.h21 && *supplied->h21 != *derived.h21)
        out.push_back(make(S::error, "supplied", derived.name + ": supplied h21 differs from the derived one"));
    };
    compare(t.resolution_fp, table.resolution);
    compare(t.singular_fp, table.singular);
  }

  if (t.type == TransitionType::conifold && table.resolution.pi1 && table.smoothing.pi1 &&
      *table.resolution.pi1 != *table.smoothing.pi1)
    out.push_back(make(S::error, "pi1", "conifold transition changes the fundamental group (" +
                                            *table.resolution.pi1 + " vs " + *table.smoothing.pi1 + ")"));
  return out;
}

SplittingVerification verify_splitting_family(const SplittingFamily& s, const AnalysisOptions& options) {
  return verify_splitting_family(s, s.values(), options);
}

SplittingVerification verify_splitting_family(const SplittingFamily& s,
                                              const std::map<std::string, FieldElement>& values,
                                              const AnalysisOptions& options) {
  SplittingVerification v;
  v.expected = s.expected_nodes_per_point();
  Hypersurface h(s.specialize(values), Ambient::affine());
  v.report = analyze_singular_locus(h, options);
  v.verified = v.report.all_nodes && static_cast<long>(v.report.point_count) == v.expected;
  return v;
}

std::string to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::simple:
      return "Simple";
    case Verdict::Kind::not_simple:
      return "NotSimple";
    case Verdict::Kind::unknown:
      return "Unknown";
  }
  return "Unknown";
}

std::optional<Verdict::Kind> parse_verdict_kind(std::string_view s) {
  if (s == "Simple") return Verdict::Kind::simple;
  if (s == "NotSimple") return Verdict::Kind::not_simple;
  if (s == "Unknown") return Verdict::Kind::unknown;
  return std::nullopt;
}

std::string Verdict::to_string() const {
  std::string out = cytrans::to_string(kind) + ": " + reason;
  if (!missing.empty()) {
    out += " (missing: ";
    for (std::size_t i = 0; i < missing.size(); ++i) out += (i ? ", " : "") + missing[i];
    out += ")";
  }
  return out;
}

namespace {

std::optional<std::pair<std::string, std::string>> pi1_pair(const TransitionRecord& t) {
  std::optional<std::string> y = t.resolution_pi1;
  if (!y && t.resolution_fp) y = t.resolution_fp->pi1;
  if (!y || !t.smoothing.pi1) return std::nullopt;
  return std::make_pair(*y, *t.smoothing.pi1);
}

}  // namespace

std::vector<Verdict> all_rule_matches(const TransitionRecord& t, bool witness_verified) {
  using K = Verdict::Kind;
  std::vector<Verdict> out;
  if (t.type == TransitionType::conifold) out.push_back({K::simple, "R1", "conifold is simple by definition", {}});
  if (t.type == TransitionType::typeII) out.push_back({K::not_simple, "R2", "type II never simple", {}});
  if (auto p = pi1_pair(t); p && p->first != p->second)
    out.push_back({K::not_simple, "R3", "simple transitions preserve fundamental group", {}});
  if (t.type == TransitionType::small && t.h1_theta_pair && t.h1_theta_pair->first >= t.h1_theta_pair->second)
    out.push_back({K::not_simple, "R4", "violates necessary cohomological condition", {}});
  if (t.witness && witness_verified)
    out.push_back({K::simple, "R5", "explicit def-equivalence to conifold", {}});
  return out;
}

Verdict decide_simplicity(const TransitionRecord& t, const SplittingVerification* witness_check) {
  const bool verified = witness_check != nullptr && witness_check->verified;
  auto matches = all_rule_matches(t, verified);
  if (!matches.empty()) return matches.front();
  Verdict v{Verdict::Kind::unknown, "R6", "no rule decides", {}};
  if (!pi1_pair(t)) v.missing.push_back("pi1 labels");
  if (t.type == TransitionType::small && !t.h1_theta_pair) v.missing.push_back("h1_theta pair");
  if (!t.witness) v.missing.push_back("splitting-family witness");
  else if (!verified) v.missing.push_back("verified witness");
  return v;
}

Verdict decide_simplicity(const TransitionRecord& t, const AnalysisOptions& options) {
  // Rules R1-R4 do not need the witness.
  auto cheap = all_rule_matches(t, false);
  if (!cheap.empty() || !t.witness) return decide_simplicity(t, nullptr);
  SplittingVerification check = verify_splitting_family(*t.witness, options);
  return decide_simplicity(t, &check);
}

std::optional<long> dim_image_lambda_report(const TransitionRecord& t) {
  if (!t.h1_theta_pair) return std::nullopt;
  const long d = t.h1_theta_pair->second - t.h1_theta_pair->first;
  if (d < 0)
    throw InconsistentData("h1Θ(Ybar)=" + std::to_string(t.h1_theta_pair->first) + " exceeds h1Θ(Y)=" +
                           std::to_string(t.h1_theta_pair->second));
  return d;
}

Fingerprint parse_fingerprint(const Section& s, bool smooth_default) {
  Fingerprint fp;
  fp.smooth = smooth_default;
  if (const auto* kv = s.find("name")) fp.name = kv->value;
  const KeyValue& betti = s.require("betti");
  auto b = parse_long_list(betti);
  if (b.size() != 7) throw ParseError("betti needs 7 entries b0..b6", betti.line);
  std::copy(b.begin(), b.end(), fp.b.begin());
  if (std::any_of(b.begin(), b.end(), [](long x) { return x < 0; }))
    throw ParseError("Betti numbers must be nonnegative", betti.line);
  if (fp.b[1] != 0 || fp.b[5] != 0) throw ParseError("b1 and b5 must vanish", betti.line);
  fp.chi = s.find("chi") ? parse_long(s.require("chi")) : fp.alternating_sum();
  if (const auto* kv = s.find("h11")) fp.h11 = parse_long(*kv);
  if (const auto* kv = s.find("h21")) fp.h21 = parse_long(*kv);
  if (const auto* kv = s.find("h1_theta")) fp.h1_theta = parse_long(*kv);
  if (const auto* kv = s.find("pi1")) fp.pi1 = kv->value;
  if (const auto* kv = s.find("smooth")) fp.smooth = parse_bool(*kv);
  if (const auto* kv = s.find("kahler")) fp.kahler = parse_bool(*kv);
  return fp;
}

std::vector<KeyValue> fingerprint_entries(const Fingerprint& fp) {
  std::vector<KeyValue> out;
  std::string betti;
  for (std::size_t i = 0; i < fp.b.size(); ++i) betti += (i ? "," : "") + std::to_string(fp.b[i]);
  out.push_back({"betti", betti});
  out.push_back({"chi", std::to_string(fp.chi)});
  if (fp.h11) out.push_back({"h11", std::to_string(*fp.h11)});
  if (fp.h21) out.push_back({"h21", std::to_string(*fp.h21)});
  if (fp.h1_theta) out.push_back({"h1_theta", std::to_string(*fp.h1_theta)});
  if (fp.pi1) out.push_back({"pi1", *fp.pi1});
  out.push_back({"smooth", fp.smooth ? "true" : "false"});
  out.push_back({"kahler", fp.kahler ? "true" : "false"});
  return out;
}

namespace {

FieldElement parse_constant(const std::string& text, const RingPtr& ring, int line) {
  Polynomial p = parse_polynomial(text, ring);
  if (!p.is_constant() && !p.is_zero()) throw ParseError("parameter value '" + text + "' is not a constant", line);
  return p.constant_term();
}

SplittingFamily parse_witness(const Section& s) {
  try {
    FieldPtr field = NumberField::rationals();
    if (const auto* kv = s.find("field")) field = parse_field_header(kv->value);
    const KeyValue& vars_kv = s.require("vars");
    std::vector<std::string> vars = split_list(vars_kv.value);
    std::vector<std::string> params;
    if (const auto* kv = s.find("params")) params = split_list(kv->value);
    RingPtr local_ring = make_ring(vars, field);
    std::vector<std::string> all = vars;
    all.insert(all.end(), params.begin(), params.end());
    RingPtr family_ring = make_ring(all, field);

    const KeyValue& local_kv = s.require("local");
    std::optional<std::vector<long>> weights;
    if (const auto* kv = s.find("weights")) weights = parse_long_list(*kv);
    LocalModel local(parse_polynomial(local_kv.value, local_ring), weights);
    Polynomial deformed = parse_polynomial(s.require("deformed").value, family_ring);

    std::map<std::string, FieldElement> values;
    if (const auto* kv = s.find("values")) {
      for (const auto& item : split_list(kv->value)) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("values must read 'name=value'", kv->line);
        values.emplace(trim_copy(std::string_view(item).substr(0, eq)),
                       parse_constant(trim_copy(std::string_view(item).substr(eq + 1)), local_ring, kv->line));
      }
    }
    long expected = parse_long(s.require("expected_nodes"));
    return SplittingFamily(std::move(local), std::move(deformed), std::move(params), std::move(values), expected);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("[witness]: ") + e.what(), s.line);
  }
}

}  // namespace

TransitionRecord parse_transition(std::string_view text) {
  auto sections = parse_sections(text);
  TransitionRecord t;
  const Section& top = sections.front();
  t.name = top.require("name").value;
  {
    const KeyValue& kv = top.require("type");
    try {
      t.type = parse_transition_type(kv.value);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), kv.line);
    }
  }
  bool have_smoothing = false, have_singular = false, have_resolution = false;
  for (std::size_t i = 1; i < sections.size(); ++i) {
    const Section& s = sections[i];
    if (s.name == "smoothing") {
      t.smoothing = parse_fingerprint(s, true);
      if (t.smoothing.name.empty()) t.smoothing.name = "Ytilde";
      have_smoothing = true;
    } else if (s.name == "singular") {
      if (const auto* kv = s.find("name")) t.singular_name = kv->value;
      t.singular.count = parse_long(s.require("count"));
      if (t.singular.count < 0) throw ParseError("count must be nonnegative", s.line);
      if (const auto* kv = s.find("milnor")) {
        auto mu = parse_long_list(*kv);
        if (mu.size() == 1 && t.singular.count != 1) mu.assign(static_cast<std::size_t>(t.singular.count), mu[0]);
        if (static_cast<long>(mu.size()) != t.singular.count)
          throw ParseError("milnor list length differs from count", kv->line);
        if (std::any_of(mu.begin(), mu.end(), [](long m) { return m < 1; }))
          throw ParseError("Milnor numbers must be positive", kv->line);
        t.singular.milnor = std::move(mu);
      } else if (t.singular.count != 0) {
        throw ParseError("[singular] is missing 'milnor'", s.line);
      }
      if (const auto* kv = s.find("terminal")) t.singular.terminal = parse_bool(*kv);
      if (const auto* kv = s.find("cdv_type")) t.singular.cdv_type = kv->value;
      if (const auto* kv = s.find("pi1")) t.singular_pi1 = kv->value;
      have_singular = true;
    } else if (s.name == "resolution") {
      if (const auto* kv = s.find("name")) t.resolution_name = kv->value;
      if (const auto* kv = s.find("trees")) {
        try {
          t.resolution.trees = parse_tree_list(kv->value);
        } catch (const ParseError& e) {
          throw ParseError(e.what(), kv->line);
        }
      }
      if (const auto* kv = s.find("k")) t.resolution.k = parse_long(*kv);
      if (const auto* kv = s.find("k_provenance")) t.resolution.k_provenance = kv->value;
      if (const auto* kv = s.find("divisor")) t.resolution.divisor = parse_long(*kv) == 1;
      if (const auto* kv = s.find("pi1")) t.resolution_pi1 = kv->value;
      have_resolution = true;
    } else if (s.name == "resolution_fp") {
      t.resolution_fp = parse_fingerprint(s, true);
      if (t.resolution_fp->name.empty()) t.resolution_fp->name = t.resolution_name;
    } else if (s.name == "singular_fp") {
      t.singular_fp = parse_fingerprint(s, false);
      if (t.singular_fp->name.empty()) t.singular_fp->name = t.singular_name;
    } else if (s.name == "h1_theta") {
      t.h1_theta_pair = std::make_pair(parse_long(s.require("singular")), parse_long(s.require("resolution")));
    } else if (s.name == "witness") {
      t.witness = parse_witness(s);
    } else {
      throw ParseError("unknown section [" + s.name + "]", s.line);
    }
  }
  if (!have_smoothing) throw ParseError("missing [smoothing] section");
  if (!have_singular) throw ParseError("missing [singular] section");
  if (!have_resolution) throw ParseError("missing [resolution] section");
  return t;
}

std::string table_csv_header() { return "variety,h1_theta,b2,rho,b3,b4,chi"; }

std::string table_csv_row(const Fingerprint& fp) {
  std::ostringstream os;
  os << fp.name << "," << (fp.h1_theta ? std::to_string(*fp.h1_theta) : "") << "," << fp.b[2] << "," << fp.b[2]
     << "," << fp.b[3] << "," << fp.b[4] << "," << fp.chi;
  return os.str();
}

std::string format_fingerprint(const Fingerprint& fp) {
  std::ostringstream os;
  os << fp.name << ": b =";
  for (std::size_t i = 0; i < fp.b.size(); ++i) os << (i ? "," : " ") << fp.b[i];
  os << "  chi = " << fp.chi;
  if (fp.h11) os << "  h11 = " << *fp.h11;
  if (fp.h21) os << "  h21 = " << *fp.h21;
  if (fp.h1_theta) os << "  h1_theta = " << *fp.h1_theta;
  if (fp.pi1) os << "  pi1 = " << *fp.pi1;
  os << (fp.smooth ? "  smooth" : "  singular");
  return os.str();
}

}  // namespace cytrans
