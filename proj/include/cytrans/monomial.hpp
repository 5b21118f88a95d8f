#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace cytrans {

inline constexpr std::size_t kMaxVariables = 12;

// Exponent vector with inline storage. Unused slots are zero, so equality and
// hashing do not need the variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const { return degree_; }
  long weighted_degree(std::span<const long> weights) const;
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // `other` must divide *this.
  Monomial operator/(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// degrevlex, lex, or a two-block elimination order. `priority` lists variable
// indices from most to least significant; an empty priority means 0, 1, ...
// For `block`, the first `split` variables of the priority list form the
// eliminated block; each block is compared by degrevlex.
class MonomialOrder {
 public:
  enum class Kind { degrevlex, lex, block };

  MonomialOrder() = default;
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex, 0, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0, {}); }
  static MonomialOrder block(std::size_t split) { return MonomialOrder(Kind::block, split, {}); }
  MonomialOrder with_priority(std::vector<std::size_t> priority) const;

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }
  const std::vector<std::size_t>& priority() const { return priority_; }

  // Three-way comparison of monomials in `nvars` variables.
  std::strong_ordering compare(const Monomial& a, const Monomial& b, std::size_t nvars) const;

  // "degrevlex", "lex", "block(2)"; a priority list is appended as "[3,0,1,2]".
  std::string to_string() const;
  static MonomialOrder parse(const std::string& text);

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind kind, std::size_t split, std::vector<std::size_t> priority)
      : kind_(kind), split_(split), priority_(std::move(priority)) {}

  std::size_t var_at(std::size_t rank) const { return priority_.empty() ? rank : priority_[rank]; }
  std::strong_ordering degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                       std::size_t hi) const;

  Kind kind_ = Kind::degrevlex;
  std::size_t split_ = 0;
  std::vector<std::size_t> priority_;
};

}  // namespace cytrans
