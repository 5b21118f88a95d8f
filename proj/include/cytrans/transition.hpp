#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cytrans/keyvalue.hpp"
#include "cytrans/singularity.hpp"

namespace cytrans {

// Invariant tuple standing in for a deformation class.
struct Fingerprint {
  std::string name;
  std::array<long, 7> b{1, 0, 0, 0, 0, 0, 1};
  long chi = 0;
  std::optional<long> h11;
  std::optional<long> h21;
  std::optional<long> h1_theta;
  std::optional<std::string> pi1;  // opaque label, e.g. "trivial", "Z/5"
  bool smooth = true;
  bool kahler = true;

  long alternating_sum() const;
  bool operator==(const Fingerprint&) const = default;
};

struct ExceptionalTree {
  std::string label;  // A4, D5, E6, ...
  long curves = 0;

  bool operator==(const ExceptionalTree&) const = default;
};

// "A4" -> 4 curves; also D_n (n >= 4) and E6, E7, E8.
ExceptionalTree parse_tree_label(std::string_view label);
// "10*A4", "A2, A2", "6*A2, A1"
std::vector<ExceptionalTree> parse_tree_list(std::string_view text);
std::string format_tree_list(const std::vector<ExceptionalTree>& trees);

struct SingularDatum {
  long count = 0;
  std::vector<long> milnor;  // one entry per point
  bool terminal = true;
  std::optional<std::string> cdv_type;

  long milnor_total() const;
};

struct ResolutionDatum {
  std::vector<ExceptionalTree> trees;
  long k = 0;  // rank of the span of exceptional curve classes
  std::string k_provenance;
  bool divisor = false;  // contraction of one divisor to a point

  long curve_total() const;
};

enum class TransitionType { conifold, small, typeII, other };
std::string to_string(TransitionType t);
TransitionType parse_transition_type(std::string_view s);

// Local deformation with named parameters; the deformed polynomial lives in
// the ring of the germ's variables followed by the parameters.
class SplittingFamily {
 public:
  SplittingFamily(LocalModel local, Polynomial deformed, std::vector<std::string> parameters,
                  std::map<std::string, FieldElement> values, long expected_nodes_per_point);

  const LocalModel& local_model() const { return local_; }
  const Polynomial& deformed() const { return deformed_; }
  const std::vector<std::string>& parameters() const { return parameters_; }
  const std::map<std::string, FieldElement>& values() const { return values_; }
  long expected_nodes_per_point() const { return expected_; }

  // The deformed germ at the given parameter values (missing ones are 0).
  Polynomial specialize(const std::map<std::string, FieldElement>& values) const;

 private:
  LocalModel local_;
  Polynomial deformed_;
  std::vector<std::string> parameters_;
  std::map<std::string, FieldElement> values_;
  long expected_;
};

struct TransitionRecord {
  std::string name;
  TransitionType type = TransitionType::other;
  Fingerprint smoothing;
  SingularDatum singular;
  ResolutionDatum resolution;
  std::string singular_name = "Ybar";
  std::string resolution_name = "Y";
  std::optional<std::string> singular_pi1;
  std::optional<std::string> resolution_pi1;
  std::optional<Fingerprint> resolution_fp;
  std::optional<Fingerprint> singular_fp;
  std::optional<SplittingFamily> witness;
  std::optional<std::pair<long, long>> h1_theta_pair;  // (h1 Theta of Ybar, of Y)
};

struct TransitionTable {
  Fingerprint resolution;  // Y
  Fingerprint singular;    // Ybar
  Fingerprint smoothing;   // Ytilde
  bool derived = true;     // false when the fingerprints were taken as supplied
};

// Betti numbers and Euler characteristics of Y and Ybar from the smoothing and
// the singular and resolution data:
//   chi(Ybar) = chi(Yt) + sum mu_i        chi(Y) = chi(Ybar) + sum e_i
//   b2(Y) = b2(Yt) + k   b4(Y) = b2(Y)    b3(Y) = 2 + 2 b2(Y) - chi(Y)
//   b2(Ybar) = b2(Yt)    b4(Ybar) = b2(Y) b3(Ybar) = 2 + b2(Ybar) + b4(Ybar) - chi(Ybar)
// Type II records are not derived; their supplied fingerprints are echoed.
TransitionTable compute_table(const TransitionRecord& t);

struct Finding {
  enum class Severity { error, warning, info };
  Severity severity = Severity::info;
  std::string code;
  std::string message;

  std::string to_string() const;
  bool operator==(const Finding&) const = default;
};

std::string to_string(Finding::Severity s);

// Checks shared by records and web nodes; smooth fingerprints also get the
// smooth Calabi-Yau relations.
std::vector<Finding> fingerprint_findings(const Fingerprint& fp);

std::vector<Finding> consistency_check(const TransitionRecord& t);

struct SplittingVerification {
  SingularityReport report;
  long expected = 0;
  bool verified = false;
};

SplittingVerification verify_splitting_family(const SplittingFamily& s, const AnalysisOptions& options = {});
SplittingVerification verify_splitting_family(const SplittingFamily& s,
                                              const std::map<std::string, FieldElement>& values,
                                              const AnalysisOptions& options = {});

struct Verdict {
  enum class Kind { simple, not_simple, unknown };
  Kind kind = Kind::unknown;
  std::string rule;  // R1..R6
  std::string reason;
  std::vector<std::string> missing;

  std::string to_string() const;  // "NotSimple: violates necessary cohomological condition"
  bool operator==(const Verdict&) const = default;
};

std::string to_string(Verdict::Kind k);
std::optional<Verdict::Kind> parse_verdict_kind(std::string_view s);

// First matching rule of the cascade R1..R6. The witness is verified on
// demand unless a verification is passed in.
Verdict decide_simplicity(const TransitionRecord& t, const AnalysisOptions& options = {});
Verdict decide_simplicity(const TransitionRecord& t, const SplittingVerification* witness_check);

// Every rule of R1..R5 that matches, in order.
std::vector<Verdict> all_rule_matches(const TransitionRecord& t, bool witness_verified);

// h1(Theta_Y) - h1(Theta_Ybar); throws InconsistentData when negative.
std::optional<long> dim_image_lambda_report(const TransitionRecord& t);

TransitionRecord parse_transition(std::string_view text);

// Fingerprint keys of a section: name, betti, chi, h11, h21, h1_theta, pi1,
// smooth, kahler.
Fingerprint parse_fingerprint(const Section& s, bool smooth_default);
std::vector<KeyValue> fingerprint_entries(const Fingerprint& fp);

std::string table_csv_header();
std::string table_csv_row(const Fingerprint& fp);
std::string format_fingerprint(const Fingerprint& fp);

}  // namespace cytrans
