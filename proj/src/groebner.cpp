#include "cytrans/groebner.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "cytrans/errors.hpp"
#include "cytrans/poly_text.hpp"

namespace cytrans {

namespace {

using Terms = std::vector<Term>;

// Term-list arithmetic under a fixed monomial order. Term lists are sorted
// by decreasing monomial.
class TermAlgebra {
 public:
  TermAlgebra(const RingPtr& ring, const MonomialOrder& order)
      : ring_(ring), k_(ring->field()), n_(ring->size()), order_(order) {}

  const NumberField& field() const { return k_; }

  Terms ordered(const Polynomial& p) const {
    Terms t(p.terms().begin(), p.terms().end());
    if (order_.kind() != MonomialOrder::Kind::degrevlex || !order_.priority().empty())
      std::sort(t.begin(), t.end(),
                [this](const Term& a, const Term& b) { return order_.compare(a.monomial, b.monomial, n_) > 0; });
    return t;
  }

  Polynomial to_polynomial(Terms t) const { return Polynomial::from_terms(ring_, std::move(t)); }

  void make_monic(Terms& t) const {
    if (t.empty() || k_.is_one(t.front().coeff)) return;
    auto inv = k_.inv(t.front().coeff);
    for (auto& term : t) term.coeff = k_.mul(term.coeff, inv);
  }

  // h[start+1..] - c*m*g[1..], where h[start] cancels against c*m*lead(g).
  Terms cancel_lead(const Terms& h, std::size_t start, const FieldElement& c, const Monomial& m,
                    const Terms& g) const {
    Terms out;
    out.reserve(h.size() - start + g.size());
    std::size_t i = start + 1, j = 1;
    while (i < h.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(h[i++]);
        continue;
      }
      Monomial gm = g[j].monomial * m;
      if (i == h.size()) {
        out.push_back({gm, k_.neg(k_.mul(c, g[j].coeff))});
        ++j;
        continue;
      }
      auto cmp = order_.compare(h[i].monomial, gm, n_);
      if (cmp > 0) {
        out.push_back(h[i++]);
      } else if (cmp < 0) {
        out.push_back({gm, k_.neg(k_.mul(c, g[j].coeff))});
        ++j;
      } else {
        auto v = k_.sub(h[i].coeff, k_.mul(c, g[j].coeff));
        if (!k_.is_zero(v)) out.push_back({gm, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  Terms shifted(const Terms& f, const Monomial& m) const {
    Terms out;
    out.reserve(f.size());
    for (const auto& t : f) out.push_back({t.monomial * m, t.coeff});
    return out;
  }

  // S-polynomial of two monic term lists.
  Terms s_poly(const Terms& f, const Terms& g) const {
    Monomial l = Monomial::lcm(f.front().monomial, g.front().monomial);
    Terms h = shifted(f, l / f.front().monomial);
    return cancel_lead(h, 0, k_.one(), l / g.front().monomial, g);
  }

  // Reduction by monic reducers. Top reduction stops at the first
  // irreducible leading term; full reduction returns the normal form.
  template <typename FindReducer>
  Terms reduce(Terms h, const FindReducer& find, bool full) const {
    Terms result;
    std::size_t pos = 0;
    while (pos < h.size()) {
      const Terms* red = find(h[pos].monomial);
      if (red != nullptr) {
        FieldElement c = h[pos].coeff;
        Monomial m = h[pos].monomial / red->front().monomial;
        h = cancel_lead(h, pos, c, m, *red);
        pos = 0;
      } else if (!full) {
        return h;
      } else {
        result.push_back(std::move(h[pos]));
        ++pos;
      }
    }
    return full ? result : h;
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b, n_); }

 private:
  RingPtr ring_;
  const NumberField& k_;
  std::size_t n_;
  const MonomialOrder& order_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class BuchbergerState {
 public:
  explicit BuchbergerState(const TermAlgebra& alg) : alg_(alg) {}

  std::size_t add(Terms t) {
    polys_.push_back(std::move(t));
    lm_.push_back(polys_.back().front().monomial);
    active_.push_back(false);
    return polys_.size() - 1;
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(std::size_t h) {
    const Monomial& lh = lm_[h];
    std::vector<std::size_t> candidates;
    for (std::size_t g = 0; g < polys_.size(); ++g)
      if (active_[g] && g != h) candidates.push_back(g);

    std::vector<std::size_t> kept;
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
      const std::size_t g1 = candidates[idx];
      const Monomial l1 = Monomial::lcm(lh, lm_[g1]);
      bool keep = lh.coprime(lm_[g1]);
      if (!keep) {
        keep = true;
        for (std::size_t r = idx + 1; r < candidates.size() && keep; ++r)
          if (Monomial::lcm(lh, lm_[candidates[r]]).divides(l1)) keep = false;
        for (std::size_t g2 : kept)
          if (keep && Monomial::lcm(lh, lm_[g2]).divides(l1)) keep = false;
      }
      if (keep) kept.push_back(g1);
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (auto& p : pairs_) {
      const bool drop = lh.divides(p.lcm) && !(Monomial::lcm(lm_[p.i], lh) == p.lcm) &&
                        !(Monomial::lcm(lm_[p.j], lh) == p.lcm);
      if (!drop) next.push_back(std::move(p));
    }
    for (std::size_t g : kept)
      if (!lh.coprime(lm_[g])) next.push_back({g, h, Monomial::lcm(lm_[g], lh)});
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < polys_.size(); ++g)
      if (active_[g] && lh.divides(lm_[g])) active_[g] = false;
    active_[h] = true;
  }

  bool has_pairs() const { return !pairs_.empty(); }

  // Normal strategy: smallest lcm first, ties by index.
  Pair pop_pair() {
    std::size_t best = 0;
    for (std::size_t r = 1; r < pairs_.size(); ++r) {
      auto c = alg_.compare(pairs_[r].lcm, pairs_[best].lcm);
      if (c < 0 || (c == 0 && std::tie(pairs_[r].i, pairs_[r].j) < std::tie(pairs_[best].i, pairs_[best].j)))
        best = r;
    }
    Pair p = pairs_[best];
    pairs_[best] = std::move(pairs_.back());
    pairs_.pop_back();
    return p;
  }

  const Terms* find_reducer(const Monomial& m, std::size_t skip = SIZE_MAX) const {
    for (std::size_t g = 0; g < polys_.size(); ++g)
      if (active_[g] && g != skip && lm_[g].divides(m)) return &polys_[g];
    return nullptr;
  }

  const Terms& poly(std::size_t i) const { return polys_[i]; }
  std::vector<std::size_t> active_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < polys_.size(); ++g)
      if (active_[g]) out.push_back(g);
    return out;
  }

 private:
  const TermAlgebra& alg_;
  std::vector<Terms> polys_;
  std::vector<Monomial> lm_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

RingPtr common_ring(std::span<const Polynomial> gens) {
  if (gens.empty()) throw DomainError("ideal needs at least one generator");
  const RingPtr& ring = gens.front().ring();
  for (const auto& g : gens)
    if (!(*g.ring() == *ring)) throw RingMismatch("generators live in different rings");
  return ring;
}

GroebnerBasis unit_basis(const RingPtr& ring, const MonomialOrder& order, std::size_t reductions) {
  return GroebnerBasis(ring, order, {Polynomial::constant(ring, Rational(1))}, reductions);
}

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> generators,
                             std::size_t pair_reductions)
    : ring_(std::move(ring)), order_(std::move(order)), pair_reductions_(pair_reductions) {
  const std::size_t n = ring_->size();
  std::vector<std::pair<Monomial, Polynomial>> keyed;
  for (auto& g : generators)
    if (!g.is_zero()) keyed.emplace_back(leading_monomial(g, order_), std::move(g));
  std::sort(keyed.begin(), keyed.end(),
            [&](const auto& a, const auto& b) { return order_.compare(a.first, b.first, n) < 0; });
  for (auto& [m, g] : keyed) {
    leading_.push_back(m);
    generators_.push_back(std::move(g));
  }
}

bool GroebnerBasis::is_unit() const {
  return generators_.size() == 1 && generators_.front().is_constant() && !generators_.front().is_zero();
}

bool GroebnerBasis::contains(const Polynomial& f) const { return normal_form(f, *this).is_zero(); }

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw DomainError("zero polynomial has no leading monomial");
  const std::size_t n = f.ring()->size();
  const Monomial* best = &f.terms().front().monomial;
  for (const auto& t : f.terms())
    if (order.compare(t.monomial, *best, n) > 0) best = &t.monomial;
  return *best;
}

FieldElement leading_coefficient(const Polynomial& f, const MonomialOrder& order) {
  return f.coefficient(leading_monomial(f, order));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  TermAlgebra alg(f.ring(), order);
  Terms a = alg.ordered(f), b = alg.ordered(g);
  alg.make_monic(a);
  alg.make_monic(b);
  return alg.to_polynomial(alg.s_poly(a, b));
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                         const BuchbergerOptions& options) {
  RingPtr ring = common_ring(generators);
  TermAlgebra alg(ring, order);
  BuchbergerState state(alg);

  auto finder = [&state](const Monomial& m) { return state.find_reducer(m); };
  for (const auto& f : generators) {
    if (f.is_zero()) continue;
    Terms t = alg.reduce(alg.ordered(f), finder, false);
    if (t.empty()) continue;
    alg.make_monic(t);
    if (t.front().monomial.is_one()) return unit_basis(ring, order, 0);
    state.update(state.add(std::move(t)));
  }

  std::size_t reductions = 0;
  while (state.has_pairs()) {
    Pair p = state.pop_pair();
    if (++reductions > options.pair_budget)
      throw ResourceLimitExceeded("desk-scale exceeded: more than " + std::to_string(options.pair_budget) +
                                  " pair reductions");
    Terms h = alg.reduce(alg.s_poly(state.poly(p.i), state.poly(p.j)), finder, false);
    if (h.empty()) continue;
    alg.make_monic(h);
    if (h.front().monomial.is_one()) return unit_basis(ring, order, reductions);
    state.update(state.add(std::move(h)));
  }

  // Interreduce the minimal basis.
  std::vector<Polynomial> reduced;
  for (std::size_t g : state.active_indices()) {
    const Terms& poly = state.poly(g);
    Terms tail(poly.begin() + 1, poly.end());
    auto others = [&state, g](const Monomial& m) { return state.find_reducer(m, g); };
    Terms red = alg.reduce(std::move(tail), others, true);
    red.insert(red.begin(), poly.front());
    reduced.push_back(alg.to_polynomial(std::move(red)));
  }
  GroebnerBasis gb(ring, order, std::move(reduced), reductions);
  for (const auto& f : generators)
    if (!gb.contains(f)) throw std::logic_error("buchberger: input generator not in computed ideal");
  return gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!(*f.ring() == *gb.ring())) throw RingMismatch("normal_form: ring mismatch");
  TermAlgebra alg(gb.ring(), gb.order());
  std::vector<Terms> reducers;
  reducers.reserve(gb.generators().size());
  for (const auto& g : gb.generators()) reducers.push_back(alg.ordered(g));
  auto finder = [&](const Monomial& m) -> const Terms* {
    for (const auto& r : reducers)
      if (r.front().monomial.divides(m)) return &r;
    return nullptr;
  };
  return alg.to_polynomial(alg.reduce(alg.ordered(f), finder, true));
}

std::optional<std::pair<std::size_t, QuotientBasis>> quotient_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return std::make_pair(std::size_t{0}, QuotientBasis{});
  const std::size_t n = gb.ring()->size();
  const auto& lms = gb.leading_monomials();
  for (std::size_t v = 0; v < n; ++v) {
    bool bounded = std::any_of(lms.begin(), lms.end(),
                               [v](const Monomial& m) { return m.degree() > 0 && m.degree() == m[v]; });
    if (!bounded) return std::nullopt;
  }
  auto standard = [&lms](const Monomial& m) {
    return std::none_of(lms.begin(), lms.end(), [&m](const Monomial& l) { return l.divides(m); });
  };
  QuotientBasis basis;
  basis.standard_monomials.push_back(Monomial{});
  // Each monomial is generated once, by raising variables in nondecreasing
  // index order; standard monomials form an order ideal, so pruning is safe.
  std::vector<std::pair<Monomial, std::size_t>> stack{{Monomial{}, 0}};
  while (!stack.empty()) {
    auto [m, start] = stack.back();
    stack.pop_back();
    for (std::size_t v = start; v < n; ++v) {
      Monomial next = m * Monomial::variable(v);
      if (!standard(next)) continue;
      basis.standard_monomials.push_back(next);
      stack.emplace_back(next, v);
    }
  }
  std::sort(basis.standard_monomials.begin(), basis.standard_monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return gb.order().compare(a, b, n) < 0; });
  const std::size_t dim = basis.standard_monomials.size();
  return std::make_pair(dim, std::move(basis));
}

Polynomial eliminant(std::span<const Polynomial> generators, std::size_t keep_variable,
                     const BuchbergerOptions& options) {
  RingPtr ring = common_ring(generators);
  const std::size_t n = ring->size();
  if (keep_variable >= n) throw DomainError("eliminant: variable index out of range");
  GroebnerBasis grevlex = buchberger(generators, MonomialOrder::degrevlex(), options);
  if (!quotient_dimension(grevlex)) throw PositiveDimensional("eliminant: ideal is not zero-dimensional");

  std::vector<std::size_t> priority;
  for (std::size_t v = 0; v < n; ++v)
    if (v != keep_variable) priority.push_back(v);
  priority.push_back(keep_variable);
  auto order = MonomialOrder::block(n - 1).with_priority(priority);
  GroebnerBasis elim = buchberger(grevlex.generators(), order, options);
  for (const auto& g : elim.generators()) {
    bool univariate = std::all_of(g.terms().begin(), g.terms().end(), [keep_variable](const Term& t) {
      return t.monomial.degree() == t.monomial[keep_variable];
    });
    if (univariate) return g;
  }
  throw std::logic_error("eliminant: elimination basis has no univariate element");
}

UnivariatePolynomial minimal_polynomial(const Polynomial& g, const GroebnerBasis& gb) {
  auto qd = quotient_dimension(gb);
  if (!qd) throw PositiveDimensional("minimal_polynomial: ideal is not zero-dimensional");
  const NumberField& k = gb.ring()->field();
  const FieldPtr& kp = gb.ring()->field_ptr();
  const std::size_t dim = qd->first;
  if (dim == 0) return UnivariatePolynomial(kp, {k.one()});

  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < dim; ++i) index.emplace(qd->second.standard_monomials[i], i);

  struct Row {
    std::vector<FieldElement> vec;
    std::vector<FieldElement> combo;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  Polynomial gnf = normal_form(g, gb);
  Polynomial cur = Polynomial::constant(gb.ring(), Rational(1));
  for (std::size_t power = 0; power <= dim; ++power) {
    std::vector<FieldElement> vec(dim, k.zero());
    for (const auto& t : cur.terms()) vec[index.at(t.monomial)] = t.coeff;
    std::vector<FieldElement> combo(dim + 1, k.zero());
    combo[power] = k.one();
    for (const auto& r : rows) {
      if (k.is_zero(vec[r.pivot])) continue;
      FieldElement f = vec[r.pivot];
      for (std::size_t i = 0; i < dim; ++i)
        if (!k.is_zero(r.vec[i])) vec[i] = k.sub(vec[i], k.mul(f, r.vec[i]));
      for (std::size_t i = 0; i <= power; ++i)
        if (!k.is_zero(r.combo[i])) combo[i] = k.sub(combo[i], k.mul(f, r.combo[i]));
    }
    auto nz = std::find_if(vec.begin(), vec.end(), [&k](const FieldElement& x) { return !k.is_zero(x); });
    if (nz == vec.end()) {
      combo.resize(power + 1);
      return UnivariatePolynomial(kp, std::move(combo));
    }
    const std::size_t pivot = static_cast<std::size_t>(nz - vec.begin());
    FieldElement inv = k.inv(vec[pivot]);
    for (auto& x : vec)
      if (!k.is_zero(x)) x = k.mul(x, inv);
    for (auto& x : combo)
      if (!k.is_zero(x)) x = k.mul(x, inv);
    rows.push_back({std::move(vec), std::move(combo), pivot});
    cur = normal_form(gnf * cur, gb);
  }
  throw std::logic_error("minimal_polynomial: no dependency within the quotient dimension");
}

bool is_unit_modulo(const Polynomial& g, const GroebnerBasis& gb, const BuchbergerOptions& options) {
  if (gb.is_unit()) return true;
  Polynomial r = normal_form(g, gb);
  if (r.is_zero()) return false;
  if (r.is_constant()) return true;
  std::vector<Polynomial> gens = gb.generators();
  gens.push_back(r);
  return buchberger(gens, gb.order(), options).is_unit();
}

RadicalCertificate certify_radical(const GroebnerBasis& gb, std::uint64_t seed, int max_attempts) {
  RadicalCertificate cert;
  auto qd = quotient_dimension(gb);
  if (!qd) throw PositiveDimensional("certify_radical: ideal is not zero-dimensional");
  cert.multiplicity = qd->first;
  if (cert.multiplicity == 0) {
    cert.certified = true;
    return cert;
  }
  const RingPtr& ring = gb.ring();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-50, 50);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    cert.attempts = attempt;
    Polynomial form(ring);
    for (std::size_t v = 0; v < ring->size(); ++v) {
      int c = 0;
      while (c == 0) c = coeff(rng);
      form += Polynomial::variable(ring, v).scaled(ring->field().from_rational(c));
    }
    UnivariatePolynomial m = minimal_polynomial(form, gb);
    if (static_cast<std::size_t>(m.degree()) == cert.multiplicity && is_squarefree(m)) {
      cert.certified = true;
      cert.linear_form = form;
      return cert;
    }
  }
  return cert;
}

GroebnerBasis zero_dimensional_radical(const GroebnerBasis& gb, const BuchbergerOptions& options) {
  if (!quotient_dimension(gb)) throw PositiveDimensional("radical: ideal is not zero-dimensional");
  if (gb.is_unit()) return gb;
  std::vector<Polynomial> gens = gb.generators();
  bool added = false;
  for (std::size_t v = 0; v < gb.ring()->size(); ++v) {
    UnivariatePolynomial m = minimal_polynomial(Polynomial::variable(gb.ring(), v), gb);
    UnivariatePolynomial s = squarefree_part(m);
    if (s.degree() < m.degree()) {
      gens.push_back(s.to_polynomial(gb.ring(), v));
      added = true;
    }
  }
  if (!added) return gb;
  return buchberger(gens, gb.order(), options);
}

std::size_t count_distinct_points(const GroebnerBasis& gb, const BuchbergerOptions& options) {
  return quotient_dimension(zero_dimensional_radical(gb, options))->first;
}

std::string format_basis(const GroebnerBasis& gb) {
  PolynomialDocument doc{gb.ring(), gb.order(), {}, gb.generators()};
  return format_document(doc);
}

GroebnerBasis parse_basis(std::string_view text, const BuchbergerOptions& options) {
  PolynomialDocument doc = parse_document(text);
  if (doc.polynomials.empty()) throw ParseError("basis document has no polynomials");
  return buchberger(doc.polynomials, doc.order.value_or(MonomialOrder::degrevlex()), options);
}

}  // namespace cytrans
