#include "cytrans/number_field.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

#include "cytrans/errors.hpp"

namespace cytrans {

namespace {

using RatPoly = std::vector<Rational>;  // constant term first

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// Division with remainder; `b` must be nonzero.
void poly_divmod(RatPoly a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

// s with s*a = 1 modulo m, for a coprime to m.
RatPoly poly_inverse_mod(const RatPoly& a, const RatPoly& m) {
  RatPoly r0 = m, r1 = a, s0, s1{Rational(1)};
  trim(r1);
  while (!r1.empty() && r1.size() > 1) {
    RatPoly q, r;
    poly_divmod(r0, r1, q, r);
    RatPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw DomainError("element is not invertible modulo the minimal polynomial");
  Rational c = r1[0];
  for (auto& x : s1) x /= c;
  RatPoly q, rem;
  poly_divmod(s1, m, q, rem);
  return rem;
}

// ---- irreducibility helpers -------------------------------------------------

using ZPoly = std::vector<mpz_class>;  // constant term first

ZPoly primitive_integer_poly(std::span<const Rational> p) {
  mpz_class den = 1;
  for (const auto& c : p) den = lcm(den, mpz_class(c.get_den()));
  ZPoly z;
  z.reserve(p.size());
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_class v = c.get_num() * (den / c.get_den());
    g = gcd(g, v);
    z.push_back(v);
  }
  if (g != 0 && g != 1)
    for (auto& v : z) v /= g;
  return z;
}

using ModPoly = std::vector<long>;

void mod_trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

long mod_inv(long a, long p) {
  long r = 1, e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// Returns true and the quotient when `d` (monic) divides `a` modulo p.
bool mod_divides(const ModPoly& a, const ModPoly& d, long p, ModPoly& quotient) {
  ModPoly r = a;
  quotient.assign(a.size() - d.size() + 1, 0);
  while (r.size() >= d.size()) {
    const std::size_t shift = r.size() - d.size();
    long c = r.back();
    quotient[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) r[i + shift] = ((r[i + shift] - c * d[i]) % p + p) % p;
    r.pop_back();
    mod_trim(r);
  }
  return r.empty();
}

// Degrees of the irreducible factors of `a` (monic, degree >= 1) over F_p,
// with multiplicity, by trial division against all monic polynomials.
std::vector<int> mod_factor_degrees(ModPoly a, long p) {
  std::vector<int> degrees;
  int m = 1;
  while (static_cast<int>(a.size()) - 1 >= 2 * m) {
    bool found = false;
    long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    ModPoly cand(m + 1, 0);
    cand[m] = 1;
    for (long idx = 0; idx < count && !found; ++idx) {
      long v = idx;
      for (int i = 0; i < m; ++i) {
        cand[i] = v % p;
        v /= p;
      }
      ModPoly q;
      if (mod_divides(a, cand, p, q)) {
        degrees.push_back(m);
        a = std::move(q);
        found = true;
      }
    }
    if (!found) ++m;
  }
  if (a.size() > 1) degrees.push_back(static_cast<int>(a.size()) - 1);
  return degrees;
}

std::vector<bool> subset_sums(const std::vector<int>& parts, int n) {
  std::vector<bool> reach(n + 1, false);
  reach[0] = true;
  for (int d : parts)
    for (int s = n; s >= d; --s)
      if (reach[s - d]) reach[s] = true;
  return reach;
}

mpz_class eval(const ZPoly& f, long x) {
  mpz_class r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

std::vector<mpz_class> positive_divisors(const mpz_class& value) {
  mpz_class v = abs(value);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      small.push_back(d);
      if (d * d != v) large.push_back(v / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Lagrange interpolation through (xs[i], ys[i]) over Q.
RatPoly interpolate(const std::vector<long>& xs, const std::vector<mpz_class>& ys) {
  RatPoly result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RatPoly basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = poly_mul(basis, RatPoly{Rational(-xs[j]), Rational(1)});
      denom *= Rational(xs[i] - xs[j]);
    }
    Rational scale = Rational(ys[i]) / denom;
    for (auto& c : basis) c *= scale;
    RatPoly sum(std::max(result.size(), basis.size()));
    for (std::size_t k = 0; k < result.size(); ++k) sum[k] += result[k];
    for (std::size_t k = 0; k < basis.size(); ++k) sum[k] += basis[k];
    trim(sum);
    result = std::move(sum);
  }
  return result;
}

// Kronecker search for an integer factor of exact degree m.
bool has_factor_of_degree(const ZPoly& f, int m) {
  constexpr long kSearch = 30;
  constexpr long kComboBudget = 5'000'000;
  struct Point {
    long x;
    mpz_class value;
    std::vector<mpz_class> divisors;
  };
  std::vector<Point> points;
  const mpz_class limit("1000000000000000000");
  for (long x = -kSearch; x <= kSearch; ++x) {
    mpz_class v = eval(f, x);
    if (v == 0) return m == 1;  // integer root: linear factor
    if (abs(v) > limit) continue;
    points.push_back({x, v, positive_divisors(v)});
  }
  if (static_cast<int>(points.size()) < m + 1)
    throw DomainError("irreducibility test: not enough evaluation points");
  std::stable_sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    return a.divisors.size() < b.divisors.size();
  });
  points.resize(m + 1);

  long combos = 1;
  for (std::size_t i = 0; i < points.size(); ++i) {
    long c = static_cast<long>(points[i].divisors.size()) * (i == 0 ? 1 : 2);
    if (combos > kComboBudget / c) throw DomainError("irreducibility test budget exceeded");
    combos *= c;
  }

  std::vector<long> xs;
  for (const auto& p : points) xs.push_back(p.x);
  RatPoly frat;
  for (const auto& c : f) frat.emplace_back(c);

  std::vector<mpz_class> ys(points.size());
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == points.size()) {
      RatPoly g = interpolate(xs, ys);
      if (static_cast<int>(g.size()) - 1 != m) return false;
      for (const auto& c : g)
        if (c.get_den() != 1) return false;
      RatPoly q, r;
      poly_divmod(frat, g, q, r);
      return r.empty();
    }
    for (const auto& d : points[i].divisors) {
      ys[i] = d;
      if (search(i + 1)) return true;
      if (i == 0) continue;  // the overall sign of the factor is fixed by the first value
      ys[i] = -d;
      if (search(i + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace

bool is_irreducible_over_rationals(std::span<const Rational> poly) {
  RatPoly p(poly.begin(), poly.end());
  trim(p);
  if (p.size() < 2) throw DomainError("irreducibility test needs a polynomial of degree >= 1");
  const int n = static_cast<int>(p.size()) - 1;
  if (n > 8) throw DomainError("irreducibility test is limited to degree <= 8");
  if (n == 1) return true;
  ZPoly f = primitive_integer_poly(p);
  if (f[0] == 0) return false;

  std::vector<bool> candidate(n / 2 + 1, true);
  candidate[0] = false;
  for (long prime : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
    mpz_class lead = f.back() % prime;
    if (lead == 0) continue;
    ModPoly fp;
    for (const auto& c : f) {
      mpz_class r = c % prime;
      if (r < 0) r += prime;
      fp.push_back(r.get_si());
    }
    long inv = mod_inv(fp.back(), prime);
    for (auto& c : fp) c = c * inv % prime;
    auto reach = subset_sums(mod_factor_degrees(fp, prime), n);
    for (int m = 1; m <= n / 2; ++m)
      if (!reach[m]) candidate[m] = false;
  }
  for (int m = 1; m <= n / 2; ++m)
    if (candidate[m] && has_factor_of_degree(f, m)) return false;
  return true;
}

// ---- NumberField ------------------------------------------------------------

FieldPtr NumberField::rationals() {
  static const FieldPtr q(new NumberField("", {Rational(0), Rational(1)}));
  return q;
}

FieldPtr NumberField::make(std::string generator, std::vector<Rational> minimal_polynomial) {
  trim(minimal_polynomial);
  if (minimal_polynomial.size() < 2)
    throw DomainError("minimal polynomial must have degree >= 1");
  if (minimal_polynomial.back() != 1) throw DomainError("minimal polynomial must be monic");
  if (!is_irreducible_over_rationals(minimal_polynomial))
    throw DomainError("minimal polynomial is reducible over Q");
  if (minimal_polynomial.size() == 2 && minimal_polynomial[0] == 0 && generator.empty())
    return rationals();
  return FieldPtr(new NumberField(std::move(generator), std::move(minimal_polynomial)));
}

bool NumberField::same_as(const NumberField& other) const {
  if (this == &other) return true;
  if (degree() == 1 && other.degree() == 1) return true;
  return generator_ == other.generator_ && minpoly_ == other.minpoly_;
}

FieldElement NumberField::zero() const { return FieldElement{std::vector<Rational>(degree())}; }

FieldElement NumberField::one() const { return from_rational(1); }

FieldElement NumberField::from_rational(const Rational& r) const {
  FieldElement e = zero();
  e.coeffs[0] = r;
  return e;
}

FieldElement NumberField::generator_element() const {
  if (degree() == 1) return from_rational(-minpoly_[0]);
  FieldElement e = zero();
  e.coeffs[1] = 1;
  return e;
}

bool NumberField::is_zero(const FieldElement& a) const {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](const Rational& c) { return c == 0; });
}

bool NumberField::is_one(const FieldElement& a) const {
  if (a.coeffs[0] != 1) return false;
  return std::all_of(a.coeffs.begin() + 1, a.coeffs.end(), [](const Rational& c) { return c == 0; });
}

bool NumberField::is_rational(const FieldElement& a) const {
  return std::all_of(a.coeffs.begin() + 1, a.coeffs.end(), [](const Rational& c) { return c == 0; });
}

FieldElement NumberField::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

FieldElement NumberField::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  return r;
}

FieldElement NumberField::neg(const FieldElement& a) const {
  FieldElement r = a;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

FieldElement NumberField::mul(const FieldElement& a, const FieldElement& b) const {
  const std::size_t d = degree();
  if (d == 1) return FieldElement{{a.coeffs[0] * b.coeffs[0]}};
  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (b.coeffs[j] != 0) prod[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  // Reduce with t^d = -(m_0 + ... + m_{d-1} t^{d-1}).
  for (std::size_t k = prod.size(); k-- > d;) {
    if (prod[k] == 0) continue;
    const Rational c = prod[k];
    for (std::size_t i = 0; i < d; ++i)
      if (minpoly_[i] != 0) prod[k - d + i] -= c * minpoly_[i];
    prod[k] = 0;
  }
  prod.resize(d);
  return FieldElement{std::move(prod)};
}

FieldElement NumberField::inv(const FieldElement& a) const {
  if (is_zero(a)) throw DomainError("division by zero in number field");
  if (degree() == 1) return FieldElement{{1 / a.coeffs[0]}};
  RatPoly r = poly_inverse_mod(a.coeffs, minpoly_);
  r.resize(degree());
  return FieldElement{std::move(r)};
}

FieldElement NumberField::div(const FieldElement& a, const FieldElement& b) const {
  return mul(a, inv(b));
}

FieldElement NumberField::pow(const FieldElement& a, unsigned e) const {
  FieldElement result = one(), base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

std::string NumberField::to_string(const FieldElement& a) const {
  std::string out;
  for (std::size_t k = a.coeffs.size(); k-- > 0;) {
    const Rational& c = a.coeffs[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += generator_;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace cytrans
