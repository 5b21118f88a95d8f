#pragma once

#include <vector>

#include "cytrans/number_field.hpp"
#include "cytrans/polynomial.hpp"

namespace cytrans {

// Dense univariate polynomial over a number field, constant term first.
class UnivariatePolynomial {
 public:
  explicit UnivariatePolynomial(FieldPtr field) : field_(std::move(field)) {}
  UnivariatePolynomial(FieldPtr field, std::vector<FieldElement> coeffs);

  // `f` must involve at most the variable `var`.
  static UnivariatePolynomial from_polynomial(const Polynomial& f, std::size_t var);
  Polynomial to_polynomial(const RingPtr& ring, std::size_t var) const;

  const NumberField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  // -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const FieldElement& leading() const { return coeffs_.back(); }

  UnivariatePolynomial derivative() const;
  UnivariatePolynomial monic() const;
  UnivariatePolynomial operator*(const UnivariatePolynomial& o) const;
  UnivariatePolynomial operator-(const UnivariatePolynomial& o) const;
  bool operator==(const UnivariatePolynomial& o) const { return coeffs_ == o.coeffs_; }

  // True when the polynomial is c*t^k for some k.
  bool is_monomial() const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<FieldElement> coeffs_;

  friend void divmod(const UnivariatePolynomial& a, const UnivariatePolynomial& b,
                     UnivariatePolynomial& q, UnivariatePolynomial& r);
};

void divmod(const UnivariatePolynomial& a, const UnivariatePolynomial& b, UnivariatePolynomial& q,
            UnivariatePolynomial& r);

// Monic gcd; gcd(0, 0) = 0.
UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

// p / gcd(p, p'), made monic.
UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p);

bool is_squarefree(const UnivariatePolynomial& p);

}  // namespace cytrans
