#include "cytrans/poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cytrans/errors.hpp"

namespace cytrans {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool starts_factor(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool first = true;
    while (true) {
      char c = peek();
      bool negate = false;
      if (c == '+' || c == '-') {
        negate = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        ++pos_;
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        auto inv = ring_->field().inv(d.constant_term());
        acc = acc.scaled(inv);
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    Polynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 65535) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class value(std::string(text_.substr(start, pos_ - start)));
      return Polynomial::constant(ring_, Rational(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (auto idx = ring_->index_of(name)) return Polynomial::variable(ring_, *idx);
      if (!ring_->field().generator().empty() && name == ring_->field().generator())
        return Polynomial::constant(ring_, ring_->field().generator_element());
      pos_ = start;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail(c == '\0' ? "unexpected end of expression" : "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

bool line_continues(const std::string& line) {
  int depth = 0;
  for (char c : line) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
  }
  if (depth > 0) return true;
  std::string t = trim_copy(line);
  if (t.empty()) return false;
  char last = t.back();
  return last == '+' || last == '-' || last == '*' || last == '/' || last == '^';
}

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return std::string(line.substr(0, hash));
}

}  // namespace

std::string trim_copy(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_list(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss{std::string(s)};
  while (std::getline(ss, item, sep)) {
    item = trim_copy(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::optional<std::pair<std::string, std::string>> split_header_line(std::string_view line) {
  std::string t = trim_copy(line);
  std::size_t i = 0;
  if (t.empty() || !(std::isalpha(static_cast<unsigned char>(t[0])) || t[0] == '_')) return std::nullopt;
  while (i < t.size() && (std::isalnum(static_cast<unsigned char>(t[i])) || t[i] == '_')) ++i;
  std::size_t j = i;
  while (j < t.size() && t[j] == ' ') ++j;
  if (j >= t.size() || t[j] != ':') return std::nullopt;
  return std::make_pair(t.substr(0, i), trim_copy(std::string_view(t).substr(j + 1)));
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return ExpressionParser(text, ring).parse();
}

std::string to_string(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    unsigned e = m[i];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.variable(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) return "0";
  const Ring& ring = *p.ring();
  const NumberField& k = p.field();
  std::vector<const Term*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::stable_sort(terms.begin(), terms.end(), [&](const Term* a, const Term* b) {
    return order.compare(a->monomial, b->monomial, ring.size()) > 0;
  });
  std::string out;
  for (const Term* t : terms) {
    bool negative = false;
    std::string body;
    const bool unit_monomial = t->monomial.is_one();
    if (k.is_rational(t->coeff)) {
      Rational r = t->coeff.coeffs[0];
      negative = r < 0;
      Rational mag = abs(r);
      if (unit_monomial) {
        body = mag.get_str();
      } else if (mag == 1) {
        body = to_string(t->monomial, ring);
      } else {
        body = mag.get_str() + "*" + to_string(t->monomial, ring);
      }
    } else {
      body = "(" + k.to_string(t->coeff) + ")";
      if (!unit_monomial) body += "*" + to_string(t->monomial, ring);
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

FieldPtr parse_field_header(std::string_view value) {
  auto parts = split_list(value, ';');
  if (parts.size() != 2) throw ParseError("field header must read 'name; minpoly: <polynomial>'");
  const std::string& gen = parts[0];
  auto kv = split_header_line(parts[1]);
  if (!kv || kv->first != "minpoly") throw ParseError("field header must carry 'minpoly:'");
  RingPtr uni = make_ring({gen});
  Polynomial m = parse_polynomial(kv->second, uni);
  if (m.is_zero()) throw ParseError("zero minimal polynomial");
  std::vector<Rational> coeffs(static_cast<std::size_t>(m.total_degree()) + 1);
  for (const auto& t : m.terms()) coeffs[t.monomial[0]] = t.coeff.coeffs[0];
  return NumberField::make(gen, std::move(coeffs));
}

std::string format_field_header(const NumberField& field) {
  RingPtr uni = make_ring({field.generator()});
  std::vector<Term> terms;
  auto mp = field.minimal_polynomial();
  for (std::size_t e = 0; e < mp.size(); ++e)
    if (mp[e] != 0) terms.push_back({Monomial::variable(0, e), NumberField::rationals()->from_rational(mp[e])});
  return field.generator() + "; minpoly: " + to_string(Polynomial::from_terms(uni, std::move(terms)));
}

const std::string* PolynomialDocument::header(std::string_view key) const {
  for (const auto& [k, v] : headers)
    if (k == key) return &v;
  return nullptr;
}

PolynomialDocument parse_document(std::string_view text) {
  PolynomialDocument doc;
  std::vector<std::string> vars;
  bool have_vars = false;
  FieldPtr field = NumberField::rationals();
  std::vector<std::pair<int, std::string>> body;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  std::string pending;
  int pending_line = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    if (pending.empty()) {
      if (trim_copy(line).empty()) continue;
      if (auto kv = split_header_line(line)) {
        const auto& [key, value] = *kv;
        if (key == "vars") {
          vars = split_list(value);
          have_vars = true;
        } else if (key == "field") {
          try {
            field = parse_field_header(value);
          } catch (const Error& e) {
            throw ParseError(e.what(), lineno);
          }
        } else if (key == "order") {
          try {
            doc.order = MonomialOrder::parse(value);
          } catch (const std::exception& e) {
            throw ParseError(e.what(), lineno);
          }
        } else {
          doc.headers.emplace_back(key, value);
        }
        continue;
      }
      pending_line = lineno;
    }
    pending += (pending.empty() ? "" : " ") + trim_copy(line);
    if (!line_continues(pending)) {
      body.emplace_back(pending_line, pending);
      pending.clear();
    }
  }
  if (!pending.empty()) throw ParseError("unterminated polynomial", pending_line);
  if (!have_vars) throw ParseError("missing 'vars:' header");
  try {
    doc.ring = make_ring(vars, field);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  for (const auto& [ln, src] : body) {
    try {
      doc.polynomials.push_back(parse_polynomial(src, doc.ring));
    } catch (const Error& e) {
      throw ParseError(e.what(), ln);
    }
  }
  return doc;
}

std::string format_document(const PolynomialDocument& doc) {
  std::ostringstream os;
  os << "vars: ";
  for (std::size_t i = 0; i < doc.ring->size(); ++i) os << (i ? "," : "") << doc.ring->variable(i);
  os << "\n";
  if (!doc.ring->field().is_rationals()) os << "field: " << format_field_header(doc.ring->field()) << "\n";
  if (doc.order) os << "order: " << doc.order->to_string() << "\n";
  for (const auto& [k, v] : doc.headers) os << k << ": " << v << "\n";
  const MonomialOrder order = doc.order.value_or(MonomialOrder::degrevlex());
  for (const auto& p : doc.polynomials) os << to_string(p, order) << "\n";
  return os.str();
}

}  // namespace cytrans
