#pragma once

// Exact coefficient fields: prime fields F_p, the rationals, and simple
// extensions F_p[t]/(m). Elements are plain values; every operation goes
// through the field object, which carries the context (p, minimal polynomial).

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "quadcusp/error.hpp"

namespace quadcusp {

template <class K>
concept Field = requires(const K& k, const typename K::value_type& a, std::int64_t n) {
  typename K::value_type;
  { k.zero() } -> std::same_as<typename K::value_type>;
  { k.one() } -> std::same_as<typename K::value_type>;
  { k.from_int(n) } -> std::same_as<typename K::value_type>;
  { k.add(a, a) } -> std::same_as<typename K::value_type>;
  { k.sub(a, a) } -> std::same_as<typename K::value_type>;
  { k.mul(a, a) } -> std::same_as<typename K::value_type>;
  { k.neg(a) } -> std::same_as<typename K::value_type>;
  { k.inv(a) } -> std::same_as<typename K::value_type>;
  { k.is_zero(a) } -> std::same_as<bool>;
  { k.equal(a, a) } -> std::same_as<bool>;
  { k.characteristic() } -> std::same_as<std::uint64_t>;
  { k.order() } -> std::same_as<std::uint64_t>;  // 0 for infinite fields
  { k.to_string(a) } -> std::same_as<std::string>;
};

template <class K>
using elem_t = typename K::value_type;

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Residue in [0, p).
struct Fp {
  std::uint64_t v = 0;
  friend bool operator==(Fp, Fp) = default;
};

class PrimeField {
 public:
  using value_type = Fp;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    require(p < (1ULL << 31), Errc::unsupported_field, "prime must be below 2^31");
    require(is_prime_u64(p), Errc::invalid_argument, std::to_string(p) + " is not prime");
  }

  std::uint64_t characteristic() const { return p_; }
  std::uint64_t order() const { return p_; }
  std::uint64_t prime() const { return p_; }

  Fp zero() const { return {0}; }
  Fp one() const { return {1 % p_}; }
  Fp from_int(std::int64_t n) const {
    auto r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return {static_cast<std::uint64_t>(r)};
  }
  Fp from_rational(const mpq_class& q) const {
    mpz_class num = q.get_num() % static_cast<unsigned long>(p_);
    mpz_class den = q.get_den() % static_cast<unsigned long>(p_);
    require(den != 0, Errc::invalid_argument, "denominator divisible by the characteristic");
    Fp n = from_int(num.get_si());
    Fp d = from_int(den.get_si());
    return mul(n, inv(d));
  }

  Fp add(Fp a, Fp b) const {
    auto s = a.v + b.v;
    return {s >= p_ ? s - p_ : s};
  }
  Fp sub(Fp a, Fp b) const { return {a.v >= b.v ? a.v - b.v : a.v + p_ - b.v}; }
  Fp neg(Fp a) const { return {a.v == 0 ? 0 : p_ - a.v}; }
  Fp mul(Fp a, Fp b) const { return {(a.v * b.v) % p_}; }
  Fp pow(Fp a, std::uint64_t e) const {
    Fp r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Fp inv(Fp a) const {
    require(a.v != 0, Errc::invalid_argument, "inverse of zero");
    return pow(a, p_ - 2);
  }
  bool is_zero(Fp a) const { return a.v == 0; }
  bool equal(Fp a, Fp b) const { return a.v == b.v; }

  Fp element(std::uint64_t index) const { return {index % p_}; }
  std::uint64_t index_of(Fp a) const { return a.v; }

  template <class Rng>
  Fp random(Rng& rng) const {
    std::uniform_int_distribution<std::uint64_t> dist(0, p_ - 1);
    return {dist(rng)};
  }

  /// Square root (Tonelli-Shanks); the smaller canonical representative.
  std::optional<Fp> sqrt(Fp a) const {
    if (a.v == 0) return Fp{0};
    if (p_ == 2) return a;
    if (pow(a, (p_ - 1) / 2).v != 1) return std::nullopt;
    std::uint64_t q = p_ - 1, s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    Fp z{2};
    while (pow(z, (p_ - 1) / 2).v == 1) z.v++;
    Fp c = pow(z, q), r = pow(a, (q + 1) / 2), t = pow(a, q);
    std::uint64_t m = s;
    while (t.v != 1) {
      std::uint64_t i = 0;
      Fp tt = t;
      while (tt.v != 1) {
        tt = mul(tt, tt);
        ++i;
      }
      Fp b = c;
      for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mul(b, b);
      r = mul(r, b);
      c = mul(b, b);
      t = mul(t, c);
      m = i;
    }
    Fp other = neg(r);
    return other.v < r.v ? other : r;
  }

  std::string to_string(Fp a) const { return std::to_string(a.v); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

class RationalField {
 public:
  using value_type = mpq_class;

  std::uint64_t characteristic() const { return 0; }
  std::uint64_t order() const { return 0; }

  mpq_class zero() const { return mpq_class(0); }
  mpq_class one() const { return mpq_class(1); }
  mpq_class from_int(std::int64_t n) const { return mpq_class(static_cast<long>(n)); }
  mpq_class from_rational(const mpq_class& q) const {
    mpq_class r(q);
    r.canonicalize();
    return r;
  }
  mpq_class add(const mpq_class& a, const mpq_class& b) const { return a + b; }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return a - b; }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return a * b; }
  mpq_class neg(const mpq_class& a) const { return -a; }
  mpq_class inv(const mpq_class& a) const {
    require(a != 0, Errc::invalid_argument, "inverse of zero");
    return 1 / a;
  }
  bool is_zero(const mpq_class& a) const { return a == 0; }
  bool equal(const mpq_class& a, const mpq_class& b) const { return a == b; }

  /// Evaluation points 0, 1, -1, 2, -2, ...
  mpq_class element(std::uint64_t index) const {
    auto h = static_cast<long>((index + 1) / 2);
    return mpq_class(index % 2 ? h : -h);
  }

  template <class Rng>
  mpq_class random(Rng& rng) const {
    std::uniform_int_distribution<long> dist(-50, 50);
    return mpq_class(dist(rng));
  }

  std::optional<mpq_class> sqrt(const mpq_class& a) const {
    if (a < 0) return std::nullopt;
    mpz_class n = a.get_num(), d = a.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
      return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return mpq_class(rn, rd);
  }

  std::string to_string(const mpq_class& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Element of F_p[t]/(m): coefficient vector of length deg m.
struct Fq {
  std::vector<std::uint32_t> c;
  friend bool operator==(const Fq&, const Fq&) = default;
};

/// F_p[t]/(m) with m monic irreducible. Irreducibility is the caller's
/// contract (checked by the factoring code that builds these).
class ExtensionField {
 public:
  using value_type = Fq;

  ExtensionField(PrimeField base, std::vector<Fp> monic_modulus)
      : base_(base), mod_(std::move(monic_modulus)) {
    require(mod_.size() >= 2, Errc::invalid_argument, "extension modulus must have degree >= 1");
    require(mod_.back().v == 1, Errc::invalid_argument, "extension modulus must be monic");
    deg_ = mod_.size() - 1;
    order_ = 1;
    for (std::size_t i = 0; i < deg_; ++i) {
      if (order_ > (std::uint64_t{1} << 62) / base_.prime()) {
        order_ = 0;  // too large to enumerate; treated as "big enough"
        break;
      }
      order_ *= base_.prime();
    }
  }

  const PrimeField& base() const { return base_; }
  const std::vector<Fp>& modulus() const { return mod_; }
  std::size_t degree() const { return deg_; }
  std::uint64_t characteristic() const { return base_.prime(); }
  /// 0 when p^deg does not fit in 62 bits.
  std::uint64_t order() const { return order_ == 0 ? std::uint64_t{1} << 62 : order_; }

  Fq zero() const { return Fq{std::vector<std::uint32_t>(deg_, 0)}; }
  Fq one() const {
    Fq r = zero();
    r.c[0] = 1;
    return r;
  }
  Fq from_int(std::int64_t n) const { return embed(base_.from_int(n)); }
  Fq embed(Fp a) const {
    Fq r = zero();
    r.c[0] = static_cast<std::uint32_t>(a.v);
    return r;
  }
  /// The class of t, a root of the modulus.
  Fq generator() const {
    Fq r = zero();
    if (deg_ == 1)
      r.c[0] = static_cast<std::uint32_t>(base_.neg(mod_[0]).v);
    else
      r.c[1] = 1;
    return r;
  }
  std::optional<Fp> project(const Fq& a) const {
    for (std::size_t i = 1; i < deg_; ++i)
      if (a.c[i] != 0) return std::nullopt;
    return Fp{a.c[0]};
  }

  Fq add(const Fq& a, const Fq& b) const {
    Fq r = zero();
    for (std::size_t i = 0; i < deg_; ++i) r.c[i] = static_cast<std::uint32_t>(base_.add({a.c[i]}, {b.c[i]}).v);
    return r;
  }
  Fq sub(const Fq& a, const Fq& b) const {
    Fq r = zero();
    for (std::size_t i = 0; i < deg_; ++i) r.c[i] = static_cast<std::uint32_t>(base_.sub({a.c[i]}, {b.c[i]}).v);
    return r;
  }
  Fq neg(const Fq& a) const {
    Fq r = zero();
    for (std::size_t i = 0; i < deg_; ++i) r.c[i] = static_cast<std::uint32_t>(base_.neg({a.c[i]}).v);
    return r;
  }
  Fq mul(const Fq& a, const Fq& b) const {
    const std::uint64_t p = base_.prime();
    std::vector<std::uint64_t> prod(2 * deg_ - 1, 0);
    for (std::size_t i = 0; i < deg_; ++i) {
      if (a.c[i] == 0) continue;
      for (std::size_t j = 0; j < deg_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a.c[i]} * b.c[j]) % p;
    }
    for (std::size_t k = prod.size(); k-- > deg_;) {
      std::uint64_t lead = prod[k];
      if (lead == 0) continue;
      for (std::size_t i = 0; i < deg_; ++i) {
        std::size_t idx = k - deg_ + i;
        prod[idx] = (prod[idx] + (p - lead) * mod_[i].v) % p;
      }
      prod[k] = 0;
    }
    Fq r = zero();
    for (std::size_t i = 0; i < deg_; ++i) r.c[i] = static_cast<std::uint32_t>(prod[i]);
    return r;
  }
  Fq inv(const Fq& a) const {
    require(!is_zero(a), Errc::invalid_argument, "inverse of zero");
    // Extended Euclid on (m, a) over F_p.
    using V = std::vector<Fp>;
    auto trim = [](V& v) {
      while (!v.empty() && v.back().v == 0) v.pop_back();
    };
    V r0 = mod_, r1(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r1[i] = Fp{a.c[i]};
    trim(r1);
    V s0{}, s1{base_.one()};
    while (!r1.empty()) {
      V q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, base_.zero());
      V rem = r0;
      Fp lead_inv = base_.inv(r1.back());
      while (rem.size() >= r1.size() && !rem.empty()) {
        std::size_t shift = rem.size() - r1.size();
        Fp coef = base_.mul(rem.back(), lead_inv);
        q[shift] = coef;
        for (std::size_t i = 0; i < r1.size(); ++i)
          rem[shift + i] = base_.sub(rem[shift + i], base_.mul(coef, r1[i]));
        trim(rem);
      }
      // s2 = s0 - q*s1
      V qs(q.size() + s1.size(), base_.zero());
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] = base_.add(qs[i + j], base_.mul(q[i], s1[j]));
      V s2(std::max(s0.size(), qs.size()), base_.zero());
      for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
      for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = base_.sub(s2[i], qs[i]);
      trim(s2);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 is a nonzero constant; inverse is s0 / r0.
    Fp c = base_.inv(r0[0]);
    Fq out = zero();
    for (std::size_t i = 0; i < s0.size() && i < deg_; ++i) out.c[i] = static_cast<std::uint32_t>(base_.mul(s0[i], c).v);
    return out;
  }
  bool is_zero(const Fq& a) const {
    for (auto x : a.c)
      if (x) return false;
    return true;
  }
  bool equal(const Fq& a, const Fq& b) const { return a.c == b.c; }

  /// Base-p digit enumeration of the elements.
  Fq element(std::uint64_t index) const {
    Fq r = zero();
    for (std::size_t i = 0; i < deg_ && index; ++i) {
      r.c[i] = static_cast<std::uint32_t>(index % base_.prime());
      index /= base_.prime();
    }
    return r;
  }

  template <class Rng>
  Fq random(Rng& rng) const {
    Fq r = zero();
    for (auto& x : r.c) x = static_cast<std::uint32_t>(base_.random(rng).v);
    return r;
  }

  /// Written as a polynomial in the adjoined root `a`.
  std::string to_string(const Fq& x) const {
    std::string out;
    for (std::size_t i = deg_; i-- > 0;) {
      if (x.c[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0 || x.c[i] != 1) out += std::to_string(x.c[i]);
      if (i > 0) {
        if (x.c[i] != 1) out += "*";
        out += "a";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  PrimeField base_;
  std::vector<Fp> mod_;
  std::size_t deg_ = 0;
  std::uint64_t order_ = 0;
};

template <class K>
inline constexpr bool is_prime_field_v = std::is_same_v<K, PrimeField>;
template <class K>
inline constexpr bool is_extension_field_v = std::is_same_v<K, ExtensionField>;
template <class K>
inline constexpr bool is_finite_field_v = is_prime_field_v<K> || is_extension_field_v<K>;

/// Characteristic guard shared by separability-sensitive operations.
template <Field K>
void require_separable(const K& k, std::int64_t degree, const char* what) {
  auto p = k.characteristic();
  if (p != 0 && p <= static_cast<std::uint64_t>(std::max<std::int64_t>(degree, 0)))
    fail(Errc::small_characteristic,
         std::string(what) + ": characteristic " + std::to_string(p) + " <= degree " + std::to_string(degree));
}

}  // namespace quadcusp
