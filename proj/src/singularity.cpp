#include "cytrans/singularity.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "cytrans/errors.hpp"
#include "cytrans/poly_text.hpp"

namespace cytrans {

namespace {

Polynomial one(const RingPtr& ring) { return Polynomial::constant(ring, Rational(1)); }

// Exact rank of a matrix over the field.
std::size_t rank_of(std::vector<std::vector<FieldElement>> m, const NumberField& k) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && k.is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    auto inv = k.inv(m[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (k.is_zero(m[r][c])) continue;
      auto f = k.mul(m[r][c], inv);
      for (std::size_t j = c; j < cols; ++j) m[r][j] = k.sub(m[r][j], k.mul(f, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

std::string chart_name(const Ring& ring, std::size_t chart) { return ring.variable(chart); }

// Jacobian ideal basis, checked to have the origin as its only zero.
GroebnerBasis isolated_basis(std::vector<Polynomial> gens, const BuchbergerOptions& options) {
  GroebnerBasis gb = buchberger(gens, MonomialOrder::degrevlex(), options);
  if (!quotient_dimension(gb)) throw PositiveDimensional("critical point of the germ is not isolated");
  for (std::size_t v = 0; v < gb.ring()->size(); ++v) {
    UnivariatePolynomial m = minimal_polynomial(Polynomial::variable(gb.ring(), v), gb);
    if (!m.is_monomial())
      throw DomainError("origin is not the only critical point of the germ (eliminant in '" +
                        gb.ring()->variable(v) + "' is not a pure power)");
  }
  return gb;
}

std::vector<Polynomial> jacobian(const Polynomial& f) {
  std::vector<Polynomial> out;
  for (std::size_t v = 0; v < f.ring()->size(); ++v) out.push_back(partial_derivative(f, v));
  return out;
}

std::vector<long> parse_weights(const std::string& text) {
  std::vector<long> out;
  for (const auto& item : split_list(text)) {
    std::size_t used = 0;
    long w = 0;
    try {
      w = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || w <= 0) throw ParseError("weights must be positive integers, got '" + item + "'");
    out.push_back(w);
  }
  return out;
}

struct ChartWork {
  RingPtr ring;
  Polynomial equation;
  std::vector<Polynomial> scheme;
};

std::size_t rabinowitsch_multiplicity(const ChartWork& w, const GroebnerBasis& ideal, std::size_t chart,
                                      std::size_t stratum_points, const AnalysisOptions& options) {
  // Points of the stratum are those with x_0 = ... = x_{chart-1} = 0. Their
  // total multiplicity is dim k[x]/I - dim k[x,t]/(I, t*l - 1) for a linear
  // form l in those coordinates that vanishes on no other point of V(I).
  const std::size_t dim = quotient_dimension(ideal)->first;
  std::vector<std::string> names = w.ring->variables();
  std::string t = "t";
  while (std::find(names.begin(), names.end(), t) != names.end() || t == w.ring->field().generator()) t += "_";
  names.push_back(t);
  RingPtr ext = make_ring(names, w.ring->field_ptr());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(ext));

  std::mt19937_64 rng(options.seed + chart);
  std::uniform_int_distribution<int> coeff(1, 50);
  for (int attempt = 0; attempt < 3; ++attempt) {
    Polynomial l(w.ring);
    for (std::size_t j = 0; j < chart; ++j) {
      const int c = (chart == 1 && attempt == 0) ? 1 : coeff(rng);
      l += Polynomial::variable(w.ring, j).scaled(w.ring->field().from_rational(c));
    }
    std::vector<Polynomial> with_l = ideal.generators();
    with_l.push_back(l);
    GroebnerBasis cut = buchberger(with_l, MonomialOrder::degrevlex(), options.buchberger);
    if (count_distinct_points(cut, options.buchberger) != stratum_points) continue;
    std::vector<Polynomial> sat = gens;
    sat.push_back(Polynomial::variable(ext, names.size() - 1) * l.in_ring(ext) - one(ext));
    GroebnerBasis open = buchberger(sat, MonomialOrder::degrevlex(), options.buchberger);
    auto qd = quotient_dimension(open);
    if (!qd) throw std::logic_error("localized singular scheme is not zero-dimensional");
    return dim - qd->first;
  }
  throw InconsistentData("could not separate the chart stratum with a linear form");
}

ChartReport analyze_chart(const ChartWork& w, std::size_t chart, bool projective, const AnalysisOptions& options) {
  ChartReport report;
  report.chart = chart;
  GroebnerBasis ideal = buchberger(w.scheme, MonomialOrder::degrevlex(), options.buchberger);
  auto qd = quotient_dimension(ideal);
  if (!qd) throw PositiveDimensional("singular locus is positive-dimensional in chart " + std::to_string(chart));

  GroebnerBasis stratum = ideal;
  if (projective && chart > 0) {
    std::vector<Polynomial> gens = w.scheme;
    for (std::size_t j = 0; j < chart; ++j) gens.push_back(Polynomial::variable(w.ring, j));
    stratum = buchberger(gens, MonomialOrder::degrevlex(), options.buchberger);
  }
  if (stratum.is_unit()) return report;

  RadicalCertificate cert = certify_radical(stratum, options.seed + chart);
  report.certificate_attempts = cert.attempts;
  report.point_count = cert.certified ? cert.multiplicity : count_distinct_points(stratum, options.buchberger);

  if (!projective || chart == 0) {
    report.multiplicity = qd->first;
  } else {
    report.multiplicity = rabinowitsch_multiplicity(w, ideal, chart, report.point_count, options);
  }
  report.radical_certified = report.point_count == report.multiplicity;

  Polynomial det = determinant_modulo(hessian_matrix(w.equation), ideal);
  report.all_nodes = report.radical_certified && is_unit_modulo(det, stratum, options.buchberger);
  return report;
}

}  // namespace

std::string Ambient::to_string() const {
  switch (kind) {
    case Kind::affine:
      return "affine";
    case Kind::projective:
      return "projective";
    case Kind::weighted_projective: {
      std::string s = "weighted ";
      for (std::size_t i = 0; i < weights.size(); ++i) s += (i ? "," : "") + std::to_string(weights[i]);
      return s;
    }
  }
  return "affine";
}

Hypersurface::Hypersurface(Polynomial equation, Ambient ambient)
    : equation_(std::move(equation)), ambient_(std::move(ambient)) {
  if (equation_.is_zero()) throw DomainError("hypersurface equation is zero");
  switch (ambient_.kind) {
    case Ambient::Kind::affine:
      break;
    case Ambient::Kind::projective:
      if (!equation_.is_homogeneous()) throw DomainError("projective equation is not homogeneous");
      break;
    case Ambient::Kind::weighted_projective:
      if (ambient_.weights.size() != equation_.ring()->size())
        throw DomainError("weight count does not match the variable count");
      if (!is_weighted_homogeneous(equation_, ambient_.weights))
        throw DomainError("equation is not homogeneous for the given weights");
      break;
  }
}

std::size_t Hypersurface::chart_count() const {
  return ambient_.kind == Ambient::Kind::affine ? 1 : equation_.ring()->size();
}

LocalModel::LocalModel(Polynomial germ, std::optional<std::vector<long>> weights)
    : germ_(std::move(germ)), weights_(std::move(weights)) {
  const NumberField& k = germ_.field();
  if (!k.is_zero(germ_.constant_term())) throw DomainError("germ does not vanish at the origin");
  for (const auto& d : jacobian(germ_))
    if (!k.is_zero(d.constant_term())) throw DomainError("origin is not a critical point of the germ");
  if (weights_ && weights_->size() != germ_.ring()->size())
    throw DomainError("weight count does not match the variable count");
}

std::vector<Polynomial> singular_scheme(const Hypersurface& h, std::size_t chart) {
  const Polynomial& f = h.equation();
  if (h.ambient().kind == Ambient::Kind::affine) {
    std::vector<Polynomial> out{f};
    for (auto& d : jacobian(f)) out.push_back(std::move(d));
    return out;
  }
  if (chart >= f.ring()->size()) throw DomainError("chart index out of range");
  Polynomial fc = restrict_to_chart(f, chart);
  std::vector<Polynomial> out{fc};
  for (auto& d : jacobian(fc)) out.push_back(std::move(d));
  return out;
}

std::vector<std::vector<Polynomial>> hessian_matrix(const Polynomial& f) {
  const std::size_t n = f.ring()->size();
  std::vector<Polynomial> first = jacobian(f);
  std::vector<std::vector<Polynomial>> h(n, std::vector<Polynomial>(n, Polynomial(f.ring())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      h[i][j] = partial_derivative(first[i], j);
      h[j][i] = h[i][j];
    }
  return h;
}

Polynomial determinant_modulo(const std::vector<std::vector<Polynomial>>& matrix, const GroebnerBasis& gb) {
  const std::size_t n = matrix.size();
  if (n == 0) return one(gb.ring());
  if (n > 20) throw DomainError("determinant: matrix too large");
  std::vector<std::vector<Polynomial>> m;
  for (const auto& row : matrix) {
    if (row.size() != n) throw DomainError("determinant: matrix is not square");
    std::vector<Polynomial> r;
    for (const auto& e : row) r.push_back(normal_form(e, gb));
    m.push_back(std::move(r));
  }
  // Laplace expansion along rows, memoized on the set of used columns.
  std::unordered_map<std::uint32_t, Polynomial> memo;
  std::function<Polynomial(std::uint32_t)> minor = [&](std::uint32_t used) -> Polynomial {
    const std::size_t row = static_cast<std::size_t>(std::popcount(used));
    if (row == n) return one(gb.ring());
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    Polynomial acc(gb.ring());
    int position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      if (!m[row][c].is_zero()) {
        Polynomial term = m[row][c] * minor(used | (1u << c));
        acc = position % 2 == 0 ? acc + term : acc - term;
      }
      ++position;
    }
    acc = normal_form(acc, gb);
    memo.emplace(used, acc);
    return acc;
  };
  return minor(0);
}

SingularityReport analyze_singular_locus(const Hypersurface& h, const AnalysisOptions& options) {
  if (h.ambient().kind == Ambient::Kind::weighted_projective)
    throw DomainError("singular locus analysis supports affine and projective ambients only");
  const bool projective = h.ambient().kind == Ambient::Kind::projective;
  SingularityReport report;
  for (std::size_t chart = 0; chart < h.chart_count(); ++chart) {
    ChartWork w{nullptr, h.equation(), singular_scheme(h, chart)};
    if (projective) w.equation = restrict_to_chart(h.equation(), chart);
    w.ring = w.equation.ring();
    ChartReport c = analyze_chart(w, chart, projective, options);
    c.label = projective ? chart_name(*h.equation().ring(), chart) : "affine";
    report.point_count += c.point_count;
    report.multiplicity_total += c.multiplicity;
    report.all_nodes = report.all_nodes && c.all_nodes;
    report.radical_certified = report.radical_certified && c.radical_certified;
    report.charts.push_back(std::move(c));
  }
  return report;
}

std::size_t milnor_number(const LocalModel& m, const BuchbergerOptions& options) {
  return quotient_dimension(isolated_basis(jacobian(m.germ()), options))->first;
}

std::size_t tyurina_number(const LocalModel& m, const BuchbergerOptions& options) {
  isolated_basis(jacobian(m.germ()), options);
  std::vector<Polynomial> gens = jacobian(m.germ());
  gens.push_back(m.germ());
  GroebnerBasis gb = buchberger(gens, MonomialOrder::degrevlex(), options);
  return quotient_dimension(gb)->first;
}

std::size_t hessian_corank(const LocalModel& m) {
  const std::size_t n = m.germ().ring()->size();
  const NumberField& k = m.germ().field();
  std::vector<std::vector<FieldElement>> h(n, std::vector<FieldElement>(n, k.zero()));
  for (const auto& t : m.germ().terms()) {
    if (t.monomial.degree() != 2) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (t.monomial[i] == 2) h[i][i] = k.mul(t.coeff, k.from_rational(2));
      for (std::size_t j = i + 1; j < n; ++j)
        if (t.monomial[i] == 1 && t.monomial[j] == 1) h[i][j] = h[j][i] = t.coeff;
    }
  }
  return n - rank_of(std::move(h), k);
}

std::optional<std::vector<Rational>> quasi_homogeneous_weights(const Polynomial& f) {
  const std::size_t n = f.ring()->size();
  if (f.is_zero() || n == 0) return std::nullopt;
  // Augmented system: one row per term, sum_i e_i q_i = 1.
  std::vector<std::vector<Rational>> rows;
  for (const auto& t : f.terms()) {
    std::vector<Rational> row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = t.monomial[i];
    row[n] = 1;
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    Rational inv = 1 / rows[rank][c];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rational factor = rows[r][c];
      for (std::size_t j = 0; j <= n; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    pivots.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r][n] != 0) return std::nullopt;  // inconsistent
  if (rank != n) return std::nullopt;            // not unique
  std::vector<Rational> q(n);
  for (std::size_t r = 0; r < n; ++r) q[pivots[r]] = rows[r][n];
  if (std::any_of(q.begin(), q.end(), [](const Rational& x) { return x <= 0; })) return std::nullopt;
  return q;
}

namespace {

std::optional<std::vector<Rational>> model_weights(const LocalModel& m) {
  if (m.weights()) {
    auto d = is_weighted_homogeneous(m.germ(), *m.weights());
    if (!d || *d <= 0) return std::nullopt;
    std::vector<Rational> q;
    for (long w : *m.weights()) q.emplace_back(Rational(w, *d));
    for (auto& x : q) x.canonicalize();
    return q;
  }
  return quasi_homogeneous_weights(m.germ());
}

}  // namespace

std::optional<long> milnor_orlik_check(const LocalModel& m) {
  auto q = model_weights(m);
  if (!q) return std::nullopt;
  Rational mu = 1;
  for (const auto& x : *q) mu *= 1 / x - 1;
  if (mu.get_den() != 1 || mu <= 0 || !mu.get_num().fits_slong_p()) return std::nullopt;
  return mu.get_num().get_si();
}

std::optional<unsigned> classify_cA(const LocalModel& m, const BuchbergerOptions& options) {
  const std::size_t mu = milnor_number(m, options);
  if (mu == 1) return 1u;
  if (m.germ().ring()->size() != 4 || hessian_corank(m) > 2) return std::nullopt;

  const NumberField& k = m.germ().field();
  FieldElement a = k.zero(), b = k.zero(), c = k.zero();
  unsigned binary_degree = 0;
  for (const auto& t : m.germ().terms()) {
    const Monomial& e = t.monomial;
    const unsigned front = e[0] + e[1], back = e[2] + e[3];
    if (front > 0 && back > 0) return std::nullopt;
    if (front > 0) {
      if (front != 2) return std::nullopt;
      if (e[0] == 2) a = t.coeff;
      else if (e[1] == 2) c = t.coeff;
      else b = t.coeff;
    } else {
      if (binary_degree != 0 && back != binary_degree) return std::nullopt;
      binary_degree = back;
    }
  }
  // Nondegenerate Q: b^2 - 4ac != 0.
  FieldElement disc = k.sub(k.mul(b, b), k.mul(k.from_rational(4), k.mul(a, c)));
  if (k.is_zero(disc) || binary_degree < 3) return std::nullopt;
  const unsigned kk = binary_degree - 1;
  if (mu != static_cast<std::size_t>(kk) * kk) return std::nullopt;
  return kk;
}

LocalInvariants local_invariants(const LocalModel& m, const BuchbergerOptions& options) {
  LocalInvariants inv;
  inv.milnor = milnor_number(m, options);
  inv.tyurina = tyurina_number(m, options);
  inv.hessian_corank = hessian_corank(m);
  if (auto q = model_weights(m)) {
    mpz_class l = 1;
    for (const auto& x : *q) l = lcm(l, x.get_den());
    std::vector<Rational> w;
    for (const auto& x : *q) w.emplace_back(x * l);
    inv.weighted_homogeneous = std::make_pair(std::move(w), Rational(l));
    if (inv.tyurina != inv.milnor)
      throw InconsistentData("quasi-homogeneous germ with tau != mu");
  }
  if (inv.tyurina > inv.milnor) throw InconsistentData("tau exceeds mu");
  if ((inv.milnor == 1) != (inv.hessian_corank == 0))
    throw InconsistentData("node test disagrees between mu and the Hessian");
  return inv;
}

CuspidalFibers count_cuspidal_fibers(const UnivariatePolynomial& b) {
  if (b.is_zero()) throw DomainError("discriminant section B is zero");
  if (b.degree() > 6) throw DomainError("B must have degree at most 6");
  CuspidalFibers out;
  out.distinct_roots = static_cast<std::size_t>(squarefree_part(b).degree()) + (b.degree() < 6 ? 1 : 0);
  out.all_simple = b.degree() == 6 && is_squarefree(b);
  return out;
}

std::size_t count_common_cuspidal_points(const UnivariatePolynomial& b1, const UnivariatePolynomial& b2) {
  count_cuspidal_fibers(b1);
  count_cuspidal_fibers(b2);
  UnivariatePolynomial g = gcd(b1, b2);
  return static_cast<std::size_t>(squarefree_part(g).degree()) + (b1.degree() < 6 && b2.degree() < 6 ? 1 : 0);
}

Hypersurface parse_hypersurface(std::string_view text) {
  PolynomialDocument doc = parse_document(text);
  if (doc.polynomials.size() != 1) throw ParseError("hypersurface file must contain exactly one polynomial");
  const std::string* amb = doc.header("ambient");
  if (!amb) throw ParseError("missing 'ambient:' header");
  Ambient ambient;
  if (*amb == "affine") {
    ambient = Ambient::affine();
  } else if (*amb == "projective") {
    ambient = Ambient::projective();
  } else if (amb->rfind("weighted", 0) == 0) {
    ambient = Ambient::weighted(parse_weights(amb->substr(8)));
  } else {
    throw ParseError("unknown ambient '" + *amb + "'");
  }
  return Hypersurface(doc.polynomials.front(), ambient);
}

LocalModel parse_local_model(std::string_view text) {
  PolynomialDocument doc = parse_document(text);
  if (doc.polynomials.size() != 1) throw ParseError("local model file must contain exactly one polynomial");
  std::optional<std::vector<long>> weights;
  if (const std::string* w = doc.header("weights")) weights = parse_weights(*w);
  return LocalModel(doc.polynomials.front(), weights);
}

std::string format_report(const SingularityReport& r, const Hypersurface& h) {
  std::ostringstream os;
  os << "ambient: " << h.ambient().to_string() << "\n";
  os << "equation: " << to_string(h.equation()) << "\n";
  for (const auto& c : r.charts) {
    os << "chart " << c.label << ": points " << c.point_count << ", multiplicity " << c.multiplicity
       << ", nodes " << (c.all_nodes ? "true" : "false") << ", radical " << (c.radical_certified ? "true" : "false")
       << "\n";
  }
  os << r.point_count << " distinct singular " << (r.point_count == 1 ? "point" : "points")
     << ", all nodes: " << (r.all_nodes ? "true" : "false") << "\n";
  os << "multiplicity total: " << r.multiplicity_total << "\n";
  os << "radical certified: " << (r.radical_certified ? "true" : "false") << "\n";
  return os.str();
}

std::string report_csv_header() { return "name,point_count,multiplicity_total,all_nodes,radical_certified"; }

std::string report_csv_row(const std::string& name, const SingularityReport& r) {
  std::ostringstream os;
  os << name << "," << r.point_count << "," << r.multiplicity_total << "," << (r.all_nodes ? "true" : "false")
     << "," << (r.radical_certified ? "true" : "false");
  return os.str();
}

}  // namespace cytrans
