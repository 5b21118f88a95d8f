#include "cytrans/polynomial.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "cytrans/errors.hpp"

namespace cytrans {

namespace {

const MonomialOrder& storage_order() {
  static const MonomialOrder order = MonomialOrder::degrevlex();
  return order;
}

}  // namespace

Ring::Ring(std::vector<std::string> variables, FieldPtr field)
    : vars_(std::move(variables)), field_(std::move(field)) {
  if (vars_.size() > kMaxVariables)
    throw DomainError("too many variables (limit " + std::to_string(kMaxVariables) + ")");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw DomainError("empty variable name");
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
    if (v == field_->generator()) throw DomainError("variable '" + v + "' shadows the field generator");
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

bool Ring::operator==(const Ring& other) const {
  return vars_ == other.vars_ && field_->same_as(*other.field_);
}

RingPtr make_ring(std::vector<std::string> variables, FieldPtr field) {
  return std::make_shared<const Ring>(std::move(variables), std::move(field));
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("polynomial needs a ring");
}

Polynomial Polynomial::constant(RingPtr ring, const FieldElement& c) {
  return monomial(std::move(ring), Monomial{}, c);
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  auto e = ring->field().from_rational(c);
  return monomial(std::move(ring), Monomial{}, e);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw DomainError("variable index out of range");
  auto one = ring->field().one();
  return monomial(std::move(ring), Monomial::variable(index), one);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const FieldElement& c) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const std::size_t n = p.ring_->size();
  const NumberField& k = p.field();
  std::sort(terms.begin(), terms.end(), [n](const Term& a, const Term& b) {
    return storage_order().compare(a.monomial, b.monomial, n) > 0;
  });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff = k.add(p.terms_.back().coeff, t.coeff);
      if (k.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!k.is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return field().zero();
}

void Polynomial::require_same_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
    throw RingMismatch("polynomials live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(o);
  const std::size_t n = ring_->size();
  const NumberField& k = field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    if (i == terms_.size()) {
      r.terms_.push_back(o.terms_[j++]);
      continue;
    }
    auto c = storage_order().compare(terms_[i].monomial, o.terms_[j].monomial, n);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      auto sum = k.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!k.is_zero(sum)) r.terms_.push_back({terms_[i].monomial, std::move(sum)});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(o);
  const NumberField& k = field();
  std::unordered_map<Monomial, FieldElement, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      auto prod = k.mul(a.coeff, b.coeff);
      auto [it, inserted] = acc.try_emplace(a.monomial * b.monomial, prod);
      if (!inserted) it->second = k.add(it->second, prod);
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!k.is_zero(c)) terms.push_back({m, std::move(c)});
  return from_terms(ring_, std::move(terms));
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  const NumberField& k = field();
  if (k.is_zero(c)) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = k.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!(*ring_ == *o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].monomial == o.terms_[i].monomial) || !(terms_[i].coeff == o.terms_[i].coeff))
      return false;
  return true;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (!ring_->field().same_as(target->field()))
    throw RingMismatch("coefficient fields differ");
  if (*ring_ == *target) {
    Polynomial r = *this;
    r.ring_ = target;
    return r;
  }
  std::vector<std::optional<std::size_t>> map(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) map[i] = target->index_of(ring_->variable(i));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!map[i]) throw RingMismatch("variable '" + ring_->variable(i) + "' not in target ring");
      m.set(*map[i], t.monomial[i]);
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var_index) {
  if (var_index >= f.ring()->size()) throw DomainError("partial_derivative: variable index out of range");
  const NumberField& k = f.field();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    unsigned e = t.monomial[var_index];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var_index, e - 1);
    out.push_back({m, k.mul(t.coeff, k.from_rational(e))});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

std::optional<long> is_weighted_homogeneous(const Polynomial& f, std::span<const long> weights) {
  if (weights.size() != f.ring()->size())
    throw DomainError("weight vector length differs from variable count");
  if (f.is_zero()) return 0;
  const long d = f.terms().front().monomial.weighted_degree(weights);
  for (const auto& t : f.terms())
    if (t.monomial.weighted_degree(weights) != d) return std::nullopt;
  return d;
}

Polynomial substitute(const Polynomial& f, const std::map<std::size_t, Polynomial>& assignments) {
  const Ring& source = *f.ring();
  RingPtr target = assignments.empty() ? f.ring() : assignments.begin()->second.ring();
  for (const auto& [var, image] : assignments) {
    if (var >= source.size()) throw DomainError("substitute: variable index out of range");
    if (!(*image.ring() == *target)) throw RingMismatch("substitute: assignments live in different rings");
  }
  if (!source.field().same_as(target->field())) throw RingMismatch("substitute: coefficient fields differ");

  std::vector<Polynomial> images;
  images.reserve(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (auto it = assignments.find(i); it != assignments.end()) {
      images.push_back(it->second);
      continue;
    }
    auto j = target->index_of(source.variable(i));
    if (!j) {
      // Only an error if the variable actually occurs.
      images.push_back(Polynomial(target));
      continue;
    }
    images.push_back(Polynomial::variable(target, *j));
  }
  std::vector<std::vector<Polynomial>> powers(source.size());
  auto power_of = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < source.size(); ++i) {
      unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (!assignments.count(i) && !target->index_of(source.variable(i)))
        throw RingMismatch("substitute: variable '" + source.variable(i) + "' has no image");
      term = term * power_of(i, e);
    }
    result += term;
  }
  return result;
}

RingPtr ring_without(const RingPtr& ring, std::span<const std::size_t> dropped) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < ring->size(); ++i)
    if (std::find(dropped.begin(), dropped.end(), i) == dropped.end()) vars.push_back(ring->variable(i));
  return make_ring(std::move(vars), ring->field_ptr());
}

Polynomial restrict_to_chart(const Polynomial& f, std::size_t chart, std::span<const std::size_t> zeroed) {
  std::vector<std::size_t> dropped(zeroed.begin(), zeroed.end());
  dropped.push_back(chart);
  RingPtr target = ring_without(f.ring(), dropped);
  std::map<std::size_t, Polynomial> assignments;
  assignments.emplace(chart, Polynomial::constant(target, Rational(1)));
  for (auto z : zeroed) assignments.emplace(z, Polynomial(target));
  return substitute(f, assignments);
}

}  // namespace cytrans
