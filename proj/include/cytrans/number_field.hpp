#pragma once

#include <gmpxx.h>

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cytrans {

using Rational = mpq_class;

// An element of Q[t]/(m(t)) stored as the coefficients of 1, t, ..., t^(d-1).
struct FieldElement {
  std::vector<Rational> coeffs;

  bool operator==(const FieldElement& other) const { return coeffs == other.coeffs; }
};

// Q(a) presented by a monic irreducible minimal polynomial. Degree 1 is Q.
class NumberField {
 public:
  static std::shared_ptr<const NumberField> rationals();

  // `minimal_polynomial` lists coefficients from the constant term upward.
  // Throws DomainError unless it is monic, of degree >= 1 and irreducible.
  static std::shared_ptr<const NumberField> make(std::string generator,
                                                 std::vector<Rational> minimal_polynomial);

  const std::string& generator() const { return generator_; }
  std::size_t degree() const { return minpoly_.size() - 1; }
  std::span<const Rational> minimal_polynomial() const { return minpoly_; }
  bool is_rationals() const { return degree() == 1; }
  bool same_as(const NumberField& other) const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rational& r) const;
  FieldElement generator_element() const;

  bool is_zero(const FieldElement& a) const;
  bool is_one(const FieldElement& a) const;
  // True when the element lies in the prime field Q.
  bool is_rational(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, unsigned e) const;

  // Canonical text: a polynomial in the generator, highest power first.
  std::string to_string(const FieldElement& a) const;

 private:
  NumberField(std::string generator, std::vector<Rational> minpoly)
      : generator_(std::move(generator)), minpoly_(std::move(minpoly)) {}

  std::string generator_;
  std::vector<Rational> minpoly_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Irreducibility over Q for polynomials of degree <= 8 (coefficients from the
// constant term upward). Uses factor-degree sieving modulo small primes and a
// Kronecker search for the degrees that survive. Throws DomainError above
// degree 8.
bool is_irreducible_over_rationals(std::span<const Rational> poly);

}  // namespace cytrans
