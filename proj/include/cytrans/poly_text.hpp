#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cytrans/monomial.hpp"
#include "cytrans/polynomial.hpp"

namespace cytrans {

// Parses an expression such as "u(u-2x)(u-3y)(x^2-y^2) - (z^5 - w^5)" in
// `ring`. Juxtaposition multiplies, `^` takes a nonnegative integer exponent,
// `/` divides by nonzero constants, and the field generator name denotes the
// generator element.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

// Canonical text, terms in decreasing `order`.
std::string to_string(const Polynomial& p, const MonomialOrder& order = MonomialOrder::degrevlex());
std::string to_string(const Monomial& m, const Ring& ring);

// "a; minpoly: a^4+a^3+a^2+a+1"
FieldPtr parse_field_header(std::string_view value);
std::string format_field_header(const NumberField& field);

// A header-plus-body file:
//
//   vars: x,y,z,w
//   field: e; minpoly: e^4 + e^3 + e^2 + e + 1     (optional)
//   order: degrevlex                               (optional)
//   <other key: value headers, kept in order>
//   <one polynomial per line>
//
// `#` starts a comment. A body line continues onto the next one when it ends
// in an operator or leaves a parenthesis open.
struct PolynomialDocument {
  RingPtr ring;
  std::optional<MonomialOrder> order;
  std::vector<std::pair<std::string, std::string>> headers;
  std::vector<Polynomial> polynomials;

  const std::string* header(std::string_view key) const;
};

PolynomialDocument parse_document(std::string_view text);
std::string format_document(const PolynomialDocument& doc);

// Splits "key: value" (key an identifier); returns nullopt for other lines.
std::optional<std::pair<std::string, std::string>> split_header_line(std::string_view line);
std::string trim_copy(std::string_view s);
std::vector<std::string> split_list(std::string_view s, char sep = ',');

}  // namespace cytrans
