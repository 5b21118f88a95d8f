#include "cytrans/univariate.hpp"

#include "cytrans/errors.hpp"

namespace cytrans {

UnivariatePolynomial::UnivariatePolynomial(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && field_->is_zero(coeffs_.back())) coeffs_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::from_polynomial(const Polynomial& f, std::size_t var) {
  std::vector<FieldElement> coeffs;
  const NumberField& k = f.field();
  for (const auto& t : f.terms()) {
    if (t.monomial.degree() != t.monomial[var])
      throw DomainError("polynomial is not univariate in '" + f.ring()->variable(var) + "'");
    unsigned e = t.monomial[var];
    if (coeffs.size() <= e) coeffs.resize(e + 1, k.zero());
    coeffs[e] = t.coeff;
  }
  return UnivariatePolynomial(f.ring()->field_ptr(), std::move(coeffs));
}

Polynomial UnivariatePolynomial::to_polynomial(const RingPtr& ring, std::size_t var) const {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < coeffs_.size(); ++e)
    if (!field_->is_zero(coeffs_[e])) terms.push_back({Monomial::variable(var, e), coeffs_[e]});
  return Polynomial::from_terms(ring, std::move(terms));
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  std::vector<FieldElement> d;
  for (std::size_t e = 1; e < coeffs_.size(); ++e)
    d.push_back(field_->mul(coeffs_[e], field_->from_rational(e)));
  return UnivariatePolynomial(field_, std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (is_zero()) return *this;
  auto inv = field_->inv(leading());
  std::vector<FieldElement> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(field_->mul(x, inv));
  return UnivariatePolynomial(field_, std::move(c));
}

UnivariatePolynomial UnivariatePolynomial::operator*(const UnivariatePolynomial& o) const {
  if (is_zero() || o.is_zero()) return UnivariatePolynomial(field_);
  std::vector<FieldElement> r(coeffs_.size() + o.coeffs_.size() - 1, field_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r[i + j] = field_->add(r[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
  return UnivariatePolynomial(field_, std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::operator-(const UnivariatePolynomial& o) const {
  std::vector<FieldElement> r(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] = field_->sub(r[i], o.coeffs_[i]);
  return UnivariatePolynomial(field_, std::move(r));
}

bool UnivariatePolynomial::is_monomial() const {
  if (is_zero()) return false;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i)
    if (!field_->is_zero(coeffs_[i])) return false;
  return true;
}

void divmod(const UnivariatePolynomial& a, const UnivariatePolynomial& b, UnivariatePolynomial& q,
            UnivariatePolynomial& r) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const NumberField& k = a.field();
  std::vector<FieldElement> rem = a.coeffs_;
  std::vector<FieldElement> quot(rem.size() >= b.coeffs_.size() ? rem.size() - b.coeffs_.size() + 1 : 0,
                                 k.zero());
  const auto lead_inv = k.inv(b.leading());
  while (rem.size() >= b.coeffs_.size() && !rem.empty()) {
    const std::size_t shift = rem.size() - b.coeffs_.size();
    auto c = k.mul(rem.back(), lead_inv);
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
      rem[i + shift] = k.sub(rem[i + shift], k.mul(c, b.coeffs_[i]));
    quot[shift] = std::move(c);
    rem.pop_back();
    while (!rem.empty() && k.is_zero(rem.back())) rem.pop_back();
  }
  q = UnivariatePolynomial(a.field_ptr(), std::move(quot));
  r = UnivariatePolynomial(a.field_ptr(), std::move(rem));
}

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  UnivariatePolynomial x = a, y = b;
  while (!y.is_zero()) {
    UnivariatePolynomial q(a.field_ptr()), r(a.field_ptr());
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p) {
  if (p.degree() <= 0) return p.monic();
  UnivariatePolynomial g = gcd(p, p.derivative());
  UnivariatePolynomial q(p.field_ptr()), r(p.field_ptr());
  divmod(p, g, q, r);
  return q.monic();
}

bool is_squarefree(const UnivariatePolynomial& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace cytrans
