#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cytrans/monomial.hpp"
#include "cytrans/polynomial.hpp"
#include "cytrans/univariate.hpp"

namespace cytrans {

inline constexpr std::size_t kDefaultPairBudget = 100000;

struct BuchbergerOptions {
  // Maximum number of S-pair reductions before ResourceLimitExceeded.
  std::size_t pair_budget = kDefaultPairBudget;
};

// Reduced Groebner basis: monic generators, no leading monomial divides
// another, tails fully reduced. Generators are sorted by increasing leading
// monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> generators,
                std::size_t pair_reductions);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Monomial>& leading_monomials() const { return leading_; }
  std::size_t pair_reductions() const { return pair_reductions_; }

  bool is_unit() const;
  bool contains(const Polynomial& f) const;

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> generators_;
  std::vector<Monomial> leading_;
  std::size_t pair_reductions_ = 0;
};

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);
FieldElement leading_coefficient(const Polynomial& f, const MonomialOrder& order);
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

// Buchberger's algorithm with the normal selection strategy and the
// Gebauer-Moeller pair criteria.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order,
                         const BuchbergerOptions& options = {});

// Fully reduced remainder of f modulo the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

struct QuotientBasis {
  std::vector<Monomial> standard_monomials;  // increasing in the basis order
};

// Size and monomial basis of k[x]/I when finite; nullopt when I is
// positive-dimensional.
std::optional<std::pair<std::size_t, QuotientBasis>> quotient_dimension(const GroebnerBasis& gb);

// Monic generator of I intersected with k[x_keep], via a block elimination
// order. Throws PositiveDimensional when I is not zero-dimensional.
Polynomial eliminant(std::span<const Polynomial> generators, std::size_t keep_variable,
                     const BuchbergerOptions& options = {});

// Minimal polynomial of multiplication by g on the finite-dimensional
// quotient k[x]/I, found from the first linear dependency among
// NF(1), NF(g), NF(g^2), ...
UnivariatePolynomial minimal_polynomial(const Polynomial& g, const GroebnerBasis& gb);

// True iff I + (g) is the unit ideal.
bool is_unit_modulo(const Polynomial& g, const GroebnerBasis& gb, const BuchbergerOptions& options = {});

// Radicality check with random linear forms: certified when some form's
// minimal polynomial is squarefree with degree equal to dim k[x]/I, which
// proves I radical with exactly that many points. A failed certificate after
// every attempt is not a proof of non-radicality.
struct RadicalCertificate {
  bool certified = false;
  std::size_t multiplicity = 0;
  int attempts = 0;
  std::optional<Polynomial> linear_form;  // the successful form
};

RadicalCertificate certify_radical(const GroebnerBasis& gb, std::uint64_t seed, int max_attempts = 3);

// sqrt(I) for zero-dimensional I, by adjoining the squarefree parts of the
// eliminants in every variable.
GroebnerBasis zero_dimensional_radical(const GroebnerBasis& gb, const BuchbergerOptions& options = {});

// Number of distinct points of V(I) over the algebraic closure.
std::size_t count_distinct_points(const GroebnerBasis& gb, const BuchbergerOptions& options = {});

// Polynomial document with an `order:` header; parse recomputes the basis.
std::string format_basis(const GroebnerBasis& gb);
GroebnerBasis parse_basis(std::string_view text, const BuchbergerOptions& options = {});

}  // namespace cytrans
