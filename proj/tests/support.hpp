#pragma once

#include <random>
#include <string>
#include <vector>

#include "cytrans/groebner.hpp"
#include "cytrans/keyvalue.hpp"
#include "cytrans/poly_text.hpp"

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(CYTRANS_DATA_DIR) + "/" + name; }

inline std::string data_text(const std::string& name) { return cytrans::read_text_file(data_path(name)); }

inline cytrans::RingPtr ring(std::vector<std::string> vars, cytrans::FieldPtr field = cytrans::NumberField::rationals()) {
  return cytrans::make_ring(std::move(vars), std::move(field));
}

inline cytrans::FieldPtr cyclotomic5() { return cytrans::parse_field_header("e; minpoly: e^4 + e^3 + e^2 + e + 1"); }

inline cytrans::Polynomial P(const cytrans::RingPtr& r, const std::string& text) {
  return cytrans::parse_polynomial(text, r);
}

inline std::vector<cytrans::Polynomial> Ps(const cytrans::RingPtr& r, const std::vector<std::string>& texts) {
  std::vector<cytrans::Polynomial> out;
  for (const auto& t : texts) out.push_back(P(r, t));
  return out;
}

inline cytrans::GroebnerBasis gb_of(const cytrans::RingPtr& r, const std::vector<std::string>& texts) {
  auto gens = Ps(r, texts);
  return cytrans::buchberger(gens, cytrans::MonomialOrder::degrevlex());
}

// Random polynomial with up to `terms` terms of total degree <= `degree`.
inline cytrans::Polynomial random_poly(const cytrans::RingPtr& R, std::mt19937_64& rng, int terms, unsigned degree, bool use_generator = false) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<unsigned> deg(0, degree);
  std::uniform_int_distribution<std::size_t> var(0, R->size() - 1);
  std::uniform_int_distribution<unsigned> gen_pow(0, 4);
  const cytrans::NumberField& K = R->field();
  std::vector<cytrans::Term> out;
  for (int t = 0; t < terms; ++t) {
    cytrans::Monomial m;
    for (unsigned d = deg(rng); d > 0; --d) m = m * cytrans::Monomial::variable(var(rng));
    cytrans::FieldElement c = K.from_rational(coeff(rng));
    if (use_generator) c = K.add(c, K.mul(K.from_rational(coeff(rng)), K.pow(K.generator_element(), gen_pow(rng))));
    out.push_back({m, c});
  }
  return cytrans::Polynomial::from_terms(R, std::move(out));
}

}  // namespace testing
