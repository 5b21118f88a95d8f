#include "cytrans/monomial.hpp"

#include <limits>
#include <sstream>

#include "cytrans/errors.hpp"

namespace cytrans {

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables)
    throw DomainError("too many variables (limit " + std::to_string(kMaxVariables) + ")");
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVariables) throw DomainError("variable index out of range");
  if (e > std::numeric_limits<std::uint16_t>::max()) throw DomainError("exponent overflow");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<std::uint16_t>(e);
}

long Monomial::weighted_degree(std::span<const long> weights) const {
  long d = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) d += weights[i] * exps_[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw DomainError("exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - other.exps_[i]);
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ULL;
  return h;
}

MonomialOrder MonomialOrder::with_priority(std::vector<std::size_t> priority) const {
  MonomialOrder o = *this;
  o.priority_ = std::move(priority);
  return o;
}

std::strong_ordering MonomialOrder::degrevlex_range(const Monomial& a, const Monomial& b,
                                                    std::size_t lo, std::size_t hi) const {
  unsigned da = 0, db = 0;
  for (std::size_t r = lo; r < hi; ++r) {
    da += a[var_at(r)];
    db += b[var_at(r)];
  }
  if (da != db) return da <=> db;
  // Smaller exponent in the last differing (least significant) variable wins.
  for (std::size_t r = hi; r-- > lo;) {
    unsigned ea = a[var_at(r)], eb = b[var_at(r)];
    if (ea != eb) return eb <=> ea;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b,
                                            std::size_t nvars) const {
  switch (kind_) {
    case Kind::degrevlex:
      return degrevlex_range(a, b, 0, nvars);
    case Kind::lex:
      for (std::size_t r = 0; r < nvars; ++r) {
        unsigned ea = a[var_at(r)], eb = b[var_at(r)];
        if (ea != eb) return ea <=> eb;
      }
      return std::strong_ordering::equal;
    case Kind::block: {
      const std::size_t s = std::min(split_, nvars);
      auto first = degrevlex_range(a, b, 0, s);
      if (first != std::strong_ordering::equal) return first;
      return degrevlex_range(a, b, s, nvars);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::degrevlex: os << "degrevlex"; break;
    case Kind::lex: os << "lex"; break;
    case Kind::block: os << "block(" << split_ << ")"; break;
  }
  if (!priority_.empty()) {
    os << "[";
    for (std::size_t i = 0; i < priority_.size(); ++i) os << (i ? "," : "") << priority_[i];
    os << "]";
  }
  return os.str();
}

MonomialOrder MonomialOrder::parse(const std::string& text) {
  std::string head = text;
  std::vector<std::size_t> priority;
  if (auto lb = text.find('['); lb != std::string::npos) {
    auto rb = text.find(']', lb);
    if (rb == std::string::npos) throw ParseError("unterminated priority list in order '" + text + "'");
    head = text.substr(0, lb);
    std::stringstream list(text.substr(lb + 1, rb - lb - 1));
    std::string item;
    while (std::getline(list, item, ',')) priority.push_back(std::stoul(item));
  }
  MonomialOrder o;
  if (head == "degrevlex") {
    o = degrevlex();
  } else if (head == "lex") {
    o = lex();
  } else if (head.rfind("block(", 0) == 0 && head.back() == ')') {
    o = block(std::stoul(head.substr(6, head.size() - 7)));
  } else {
    throw ParseError("unknown monomial order '" + text + "'");
  }
  return o.with_priority(std::move(priority));
}

}  // namespace cytrans
