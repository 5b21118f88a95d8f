#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cytrans/monomial.hpp"
#include "cytrans/number_field.hpp"

namespace cytrans {

// Variable names plus coefficient field.
class Ring {
 public:
  Ring(std::vector<std::string> variables, FieldPtr field);

  std::size_t size() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::string& variable(std::size_t i) const { return vars_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  const NumberField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  bool operator==(const Ring& other) const;

 private:
  std::vector<std::string> vars_;
  FieldPtr field_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables, FieldPtr field = NumberField::rationals());

struct Term {
  Monomial monomial;
  FieldElement coeff;
};

// Sparse polynomial with nonzero coefficients only. Terms are kept sorted by
// degrevlex, largest first; that is the storage order, not a contract.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const FieldElement& c);
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const FieldElement& c);
  // Terms may arrive in any order and with repeats; they are combined.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const NumberField& field() const { return ring_->field(); }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // -1 for the zero polynomial.
  int total_degree() const;
  FieldElement coefficient(const Monomial& m) const;
  FieldElement constant_term() const { return coefficient(Monomial{}); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const FieldElement& c) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& o) const;

  bool is_homogeneous() const;

  // Same polynomial viewed in `target`, matching variables by name. Throws
  // RingMismatch if a used variable is missing or the fields differ.
  Polynomial in_ring(const RingPtr& target) const;

 private:
  void require_same_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial partial_derivative(const Polynomial& f, std::size_t var_index);

// Degree d when every term has weighted degree d; the zero polynomial reports 0.
std::optional<long> is_weighted_homogeneous(const Polynomial& f, std::span<const long> weights);

// Replaces variables (by index in f's ring) with polynomials from one common
// target ring. Variables without an assignment map to the same-named variable
// of the target ring.
Polynomial substitute(const Polynomial& f, const std::map<std::size_t, Polynomial>& assignments);

// Dehomogenize at coordinate `chart` (set to 1) and optionally set the
// coordinates in `zeroed` to 0. The result lives in a ring without those
// variables.
Polynomial restrict_to_chart(const Polynomial& f, std::size_t chart,
                             std::span<const std::size_t> zeroed = {});

// Ring obtained by dropping the listed variables.
RingPtr ring_without(const RingPtr& ring, std::span<const std::size_t> dropped);

}  // namespace cytrans
