#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cytrans/groebner.hpp"
#include "cytrans/polynomial.hpp"
#include "cytrans/univariate.hpp"

namespace cytrans {

struct Ambient {
  enum class Kind { affine, projective, weighted_projective };
  Kind kind = Kind::affine;
  std::vector<long> weights;  // weighted_projective only

  static Ambient affine() { return {Kind::affine, {}}; }
  static Ambient projective() { return {Kind::projective, {}}; }
  static Ambient weighted(std::vector<long> w) { return {Kind::weighted_projective, std::move(w)}; }
  std::string to_string() const;
};

// Projective equations are checked homogeneous, weighted ones against the
// weights.
class Hypersurface {
 public:
  Hypersurface(Polynomial equation, Ambient ambient);

  const Polynomial& equation() const { return equation_; }
  const Ambient& ambient() const { return ambient_; }
  // 1 for affine, one per coordinate otherwise.
  std::size_t chart_count() const;

 private:
  Polynomial equation_;
  Ambient ambient_;
};

// Germ at the origin of affine space; the origin must be a critical point on
// the hypersurface.
class LocalModel {
 public:
  explicit LocalModel(Polynomial germ, std::optional<std::vector<long>> weights = std::nullopt);

  const Polynomial& germ() const { return germ_; }
  const std::optional<std::vector<long>>& weights() const { return weights_; }

 private:
  Polynomial germ_;
  std::optional<std::vector<long>> weights_;
};

struct AnalysisOptions {
  std::uint64_t seed = 1;
  BuchbergerOptions buchberger;
};

struct ChartReport {
  std::size_t chart = 0;
  std::string label;            // chart coordinate name, "affine" for affine ambient
  std::size_t point_count = 0;  // points attributed to this chart
  std::size_t multiplicity = 0;
  bool all_nodes = true;
  bool radical_certified = true;
  int certificate_attempts = 0;
};

struct SingularityReport {
  std::size_t point_count = 0;
  std::size_t multiplicity_total = 0;
  bool all_nodes = true;
  bool radical_certified = true;
  std::vector<ChartReport> charts;
};

struct LocalInvariants {
  std::size_t milnor = 0;
  std::size_t tyurina = 0;
  std::size_t hessian_corank = 0;
  std::optional<std::pair<std::vector<Rational>, Rational>> weighted_homogeneous;  // weights, degree
};

// {f, df/dx_j} for the chart equation (coordinate `chart` set to 1).
std::vector<Polynomial> singular_scheme(const Hypersurface& h, std::size_t chart);

SingularityReport analyze_singular_locus(const Hypersurface& h, const AnalysisOptions& options = {});

// Determinant of a square matrix of polynomials, reduced modulo gb.
Polynomial determinant_modulo(const std::vector<std::vector<Polynomial>>& matrix, const GroebnerBasis& gb);
std::vector<std::vector<Polynomial>> hessian_matrix(const Polynomial& f);

std::size_t milnor_number(const LocalModel& m, const BuchbergerOptions& options = {});
std::size_t tyurina_number(const LocalModel& m, const BuchbergerOptions& options = {});
std::size_t hessian_corank(const LocalModel& m);

// Rational weights q with every term of weighted degree 1, when they exist and
// are unique.
std::optional<std::vector<Rational>> quasi_homogeneous_weights(const Polynomial& f);

// prod(1/q_i - 1) for the germ's weights; absent when the germ is not
// quasi-homogeneous or the product is not an integer.
std::optional<long> milnor_orlik_check(const LocalModel& m);

// k for a cA_k germ of the shape Q(x0,x1) + B(x2,x3), Q a nondegenerate
// quadratic form and B a binary form of degree k+1 with mu = k^2. Nodes give 1.
std::optional<unsigned> classify_cA(const LocalModel& m, const BuchbergerOptions& options = {});

LocalInvariants local_invariants(const LocalModel& m, const BuchbergerOptions& options = {});

struct CuspidalFibers {
  std::size_t distinct_roots = 0;
  bool all_simple = false;
};

// Roots of B on the projective line, counting infinity when deg B < 6.
CuspidalFibers count_cuspidal_fibers(const UnivariatePolynomial& b);

// Base points over which both Weierstrass factors have cuspidal fibers: the
// II x II points of the fiber product.
std::size_t count_common_cuspidal_points(const UnivariatePolynomial& b1, const UnivariatePolynomial& b2);

// .hsf: polynomial document with `ambient: affine|projective|weighted 1,1,1,1,2`.
Hypersurface parse_hypersurface(std::string_view text);
// .lm: polynomial document with optional `weights: 5,5,2,2`.
LocalModel parse_local_model(std::string_view text);

std::string format_report(const SingularityReport& r, const Hypersurface& h);
std::string report_csv_header();
std::string report_csv_row(const std::string& name, const SingularityReport& r);

}  // namespace cytrans
