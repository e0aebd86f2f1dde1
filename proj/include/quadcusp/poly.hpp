#pragma once

// Dense univariate polynomials as coefficient vectors (index = power).
// The zero polynomial is the empty vector; all results are trimmed.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "quadcusp/field.hpp"

namespace quadcusp {

template <class E>
using Poly = std::vector<E>;

/// Coefficient transport between a field and one of its extensions.
inline Fp lift(const PrimeField&, const PrimeField&, Fp a) { return a; }
inline Fq lift(const ExtensionField& to, const PrimeField&, Fp a) { return to.embed(a); }
inline Fq lift(const ExtensionField&, const ExtensionField&, const Fq& a) { return a; }
inline mpq_class lift(const RationalField&, const RationalField&, const mpq_class& a) { return a; }

namespace poly {

template <Field K>
Poly<elem_t<K>> trim(const K& k, Poly<elem_t<K>> a) {
  while (!a.empty() && k.is_zero(a.back())) a.pop_back();
  return a;
}

template <class E>
int degree(const Poly<E>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <Field K>
Poly<elem_t<K>> constant(const K& k, const elem_t<K>& c) {
  if (k.is_zero(c)) return {};
  return {c};
}

/// x^n (times c).
template <Field K>
Poly<elem_t<K>> monomial(const K& k, int n, elem_t<K> c) {
  if (k.is_zero(c)) return {};
  Poly<elem_t<K>> r(n + 1, k.zero());
  r[n] = std::move(c);
  return r;
}

template <Field K, class K0>
Poly<elem_t<K>> lift_poly(const K& to, const K0& from, const Poly<elem_t<K0>>& a) {
  Poly<elem_t<K>> r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(lift(to, from, c));
  return r;
}

template <Field K>
elem_t<K> coeff(const K& k, const Poly<elem_t<K>>& a, int i) {
  if (i < 0 || i >= static_cast<int>(a.size())) return k.zero();
  return a[i];
}

template <Field K>
elem_t<K> lead(const K& k, const Poly<elem_t<K>>& a) {
  return a.empty() ? k.zero() : a.back();
}

template <Field K>
bool equal(const K& k, const Poly<elem_t<K>>& a, const Poly<elem_t<K>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!k.equal(a[i], b[i])) return false;
  return true;
}

template <Field K>
Poly<elem_t<K>> add(const K& k, const Poly<elem_t<K>>& a, const Poly<elem_t<K>>& b) {
  Poly<elem_t<K>> r(std::max(a.size(), b.size()), k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.add(r[i], b[i]);
  return trim(k, std::move(r));
}

template <Field K>
Poly<elem_t<K>> sub(const K& k, const Poly<elem_t<K>>& a, const Poly<elem_t<K>>& b) {
  Poly<elem_t<K>> r(std::max(a.size(), b.size()), k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.sub(r[i], b[i]);
  return trim(k, std::move(r));
}

template <Field K>
Poly<elem_t<K>> scale(const K& k, const Poly<elem_t<K>>& a, const elem_t<K>& c) {
  Poly<elem_t<K>> r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(k.mul(x, c));
  return trim(k, std::move(r));
}

template <Field K>
Poly<elem_t<K>> mul(const K& k, const Poly<elem_t<K>>& a, const Poly<elem_t<K>>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<elem_t<K>> r(a.size() + b.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (k.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
  }
  return trim(k, std::move(r));
}

template <Field K>
Poly<elem_t<K>> pow(const K& k, Poly<elem_t<K>> a, unsigned e) {
  Poly<elem_t<K>> r{k.one()};
  while (e) {
    if (e & 1) r = mul(k, r, a);
    e >>= 1;
    if (e) a = mul(k, a, a);
  }
  return r;
}

/// Quotient and remainder; b must be nonzero.
template <Field K>
std::pair<Poly<elem_t<K>>, Poly<elem_t<K>>> divmod(const K& k, const Poly<elem_t<K>>& a,
                                                   const Poly<elem_t<K>>& b) {
  require(!b.empty(), Errc::invalid_argument, "polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly<elem_t<K>> r = a, q(a.size() - b.size() + 1, k.zero());
  auto li = k.inv(b.back());
  for (std::size_t s = q.size(); s-- > 0;) {
    const auto& top = r[s + b.size() - 1];
    if (k.is_zero(top)) continue;
    auto c = k.mul(top, li);
    q[s] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[s + i] = k.sub(r[s + i], k.mul(c, b[i]));
  }
  return {trim(k, std::move(q)), trim(k, std::move(r))};
}

template <Field K>
Poly<elem_t<K>> rem(const K& k, const Poly<elem_t<K>>& a, const Poly<elem_t<K>>& b) {
  return divmod(k, a, b).second;
}

template <Field K>
Poly<elem_t<K>> monic(const K& k, const Poly<elem_t<K>>& a) {
  if (a.empty()) return a;
  return scale(k, a, k.inv(a.back()));
}

/// Monic gcd; gcd(0, 0) = 0.
template <Field K>
Poly<elem_t<K>> gcd(const K& k, Poly<elem_t<K>> a, Poly<elem_t<K>> b) {
  while (!b.empty()) {
    auto r = rem(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(k, a);
}

template <Field K>
Poly<elem_t<K>> derivative(const K& k, const Poly<elem_t<K>>& a) {
  if (a.size() <= 1) return {};
  Poly<elem_t<K>> r(a.size() - 1, k.zero());
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = k.mul(k.from_int(static_cast<std::int64_t>(i)), a[i]);
  return trim(k, std::move(r));
}

template <Field K>
elem_t<K> eval(const K& k, const Poly<elem_t<K>>& a, const elem_t<K>& x) {
  auto acc = k.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = k.add(k.mul(acc, x), a[i]);
  return acc;
}

/// a(x + c).
template <Field K>
Poly<elem_t<K>> taylor_shift(const K& k, const Poly<elem_t<K>>& a, const elem_t<K>& c) {
  Poly<elem_t<K>> r = a;
  const auto n = r.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) r[j] = k.add(r[j], k.mul(c, r[j + 1]));
  return trim(k, std::move(r));
}

/// Multiplicity of x = c as a root of a (a nonzero).
template <Field K>
int root_multiplicity(const K& k, Poly<elem_t<K>> a, const elem_t<K>& c) {
  require(!a.empty(), Errc::zero_form, "root multiplicity of the zero polynomial");
  auto shifted = taylor_shift(k, a, c);
  int m = 0;
  while (m < static_cast<int>(shifted.size()) && k.is_zero(shifted[m])) ++m;
  return m;
}

/// (a^e) mod m.
template <Field K>
Poly<elem_t<K>> powmod(const K& k, Poly<elem_t<K>> a, std::uint64_t e, const Poly<elem_t<K>>& m) {
  Poly<elem_t<K>> r = rem(k, Poly<elem_t<K>>{k.one()}, m);
  a = rem(k, a, m);
  while (e) {
    if (e & 1) r = rem(k, mul(k, r, a), m);
    e >>= 1;
    if (e) a = rem(k, mul(k, a, a), m);
  }
  return r;
}

/// Interpolation through (xs[i], ys[i]) with distinct xs (Newton form).
template <Field K>
Poly<elem_t<K>> interpolate(const K& k, const std::vector<elem_t<K>>& xs, const std::vector<elem_t<K>>& ys) {
  const std::size_t n = xs.size();
  std::vector<elem_t<K>> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = k.mul(k.sub(dd[i], dd[i - 1]), k.inv(k.sub(xs[i], xs[i - j])));
      if (i == j) break;
    }
  Poly<elem_t<K>> r;
  for (std::size_t i = n; i-- > 0;) {
    // r = r * (x - xs[i]) + dd[i]
    Poly<elem_t<K>> next(r.size() + 1, k.zero());
    for (std::size_t t = 0; t < r.size(); ++t) {
      next[t + 1] = k.add(next[t + 1], r[t]);
      next[t] = k.sub(next[t], k.mul(xs[i], r[t]));
    }
    next[0] = k.add(next[0], dd[i]);
    r = trim(k, std::move(next));
  }
  return r;
}

template <Field K>
std::string to_string(const K& k, const Poly<elem_t<K>>& a, const std::string& var = "x") {
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (k.is_zero(a[i])) continue;
    std::string c = k.to_string(a[i]);
    bool compound = c.find_first_of("+a/") != std::string::npos && i > 0;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += c;
      continue;
    }
    if (c != "1") out += (compound ? "(" + c + ")" : c) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Squarefree decomposition

/// Yun's algorithm; requires char 0 or char > deg a. Returns the monic
/// factors a_1, a_2, ... with a = c * prod a_i^i (a_i may be 1).
template <Field K>
std::vector<Poly<elem_t<K>>> squarefree_decomposition(const K& k, const Poly<elem_t<K>>& a) {
  require(!a.empty(), Errc::zero_form, "squarefree decomposition of zero");
  require_separable(k, degree(a), "squarefree_decomposition");
  std::vector<Poly<elem_t<K>>> out;
  auto f = monic(k, a);
  if (degree(f) == 0) return out;
  auto df = derivative(k, f);
  auto g = gcd(k, f, df);
  auto b = divmod(k, f, g).first;
  auto c = divmod(k, df, g).first;
  auto d = sub(k, c, derivative(k, b));
  while (degree(b) > 0) {
    auto ai = gcd(k, b, d);
    out.push_back(ai);
    b = divmod(k, b, ai).first;
    c = divmod(k, d, ai).first;
    d = sub(k, c, derivative(k, b));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Factoring over F_p (odd p), used to realise points over the closure.

namespace detail {

/// p-th root of a polynomial whose derivative vanishes (over F_p).
inline Poly<Fp> pth_root(const PrimeField& k, const Poly<Fp>& a) {
  const auto p = k.prime();
  Poly<Fp> r((a.size() - 1) / p + 1, k.zero());
  for (std::size_t i = 0; i < a.size(); i += p) r[i / p] = a[i];
  return trim(k, std::move(r));
}

/// Squarefree decomposition valid in any characteristic over F_p: returns
/// pairs (monic squarefree factor, multiplicity).
inline std::vector<std::pair<Poly<Fp>, int>> squarefree_any_char(const PrimeField& k, const Poly<Fp>& a0) {
  std::vector<std::pair<Poly<Fp>, int>> out;
  auto a = monic(k, a0);
  if (degree(a) <= 0) return out;
  auto da = derivative(k, a);
  if (da.empty()) {
    for (auto& [f, m] : squarefree_any_char(k, pth_root(k, a)))
      out.emplace_back(f, m * static_cast<int>(k.prime()));
    return out;
  }
  auto c = gcd(k, a, da);
  auto w = divmod(k, a, c).first;
  int i = 1;
  while (degree(w) > 0) {
    auto y = gcd(k, w, c);
    auto z = divmod(k, w, y).first;
    if (degree(z) > 0) out.emplace_back(z, i);
    ++i;
    w = y;
    c = divmod(k, c, y).first;
  }
  if (degree(c) > 0) {
    for (auto& [f, m] : squarefree_any_char(k, pth_root(k, c)))
      out.emplace_back(f, m * static_cast<int>(k.prime()));
  }
  return out;
}

/// Splits a squarefree product of degree-d irreducibles (Cantor-Zassenhaus).
template <class Rng>
void equal_degree_split(const PrimeField& k, const Poly<Fp>& f, int d, Rng& rng, std::vector<Poly<Fp>>& out) {
  if (degree(f) == d) {
    out.push_back(f);
    return;
  }
  const auto p = k.prime();
  while (true) {
    Poly<Fp> a(degree(f), k.zero());
    for (auto& c : a) c = k.random(rng);
    a = trim(k, a);
    if (degree(a) <= 0) continue;
    auto g = gcd(k, a, f);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      equal_degree_split(k, g, d, rng, out);
      equal_degree_split(k, divmod(k, f, g).first, d, rng, out);
      return;
    }
    // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
    auto norm = a, frob = a;
    for (int i = 1; i < d; ++i) {
      frob = powmod(k, frob, p, f);
      norm = rem(k, mul(k, norm, frob), f);
    }
    auto b = powmod(k, norm, (p - 1) / 2, f);
    b = sub(k, b, Poly<Fp>{k.one()});
    g = gcd(k, b, f);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      equal_degree_split(k, g, d, rng, out);
      equal_degree_split(k, divmod(k, f, g).first, d, rng, out);
      return;
    }
  }
}

/// x^(p^e) mod f via repeated p-th powers.
inline Poly<Fp> frobenius_power(const PrimeField& k, const Poly<Fp>& xpow, const Poly<Fp>& f) {
  return powmod(k, xpow, k.prime(), f);
}

}  // namespace detail

/// A monic irreducible factor together with its multiplicity.
template <class E>
struct Factor {
  Poly<E> poly;
  int multiplicity = 1;
};

/// Complete factorisation over F_p into monic irreducibles. Requires odd p
/// (the equal-degree split uses the quadratic-character trick).
inline std::vector<Factor<Fp>> factor(const PrimeField& k, const Poly<Fp>& a, std::uint64_t seed = 0x5eed) {
  require(!a.empty(), Errc::zero_form, "factor of zero");
  require(k.prime() != 2, Errc::even_characteristic, "factoring over F_2 is not supported");
  std::mt19937_64 rng(seed);
  std::vector<Factor<Fp>> out;
  for (auto& [sf, mult] : detail::squarefree_any_char(k, a)) {
    // distinct-degree factorisation
    auto f = sf;
    Poly<Fp> x{k.zero(), k.one()};
    auto h = x;
    for (int d = 1; 2 * d <= degree(f); ++d) {
      h = detail::frobenius_power(k, h, f);
      auto g = gcd(k, sub(k, h, x), f);
      if (degree(g) > 0) {
        std::vector<Poly<Fp>> parts;
        detail::equal_degree_split(k, g, d, rng, parts);
        for (auto& q : parts) out.push_back({monic(k, q), mult});
        f = divmod(k, f, g).first;
        h = rem(k, h, f);
      }
    }
    if (degree(f) > 0) out.push_back({monic(k, f), mult});
  }
  std::sort(out.begin(), out.end(), [](const Factor<Fp>& l, const Factor<Fp>& r) {
    if (l.poly.size() != r.poly.size()) return l.poly.size() < r.poly.size();
    for (std::size_t i = l.poly.size(); i-- > 0;)
      if (l.poly[i].v != r.poly[i].v) return l.poly[i].v < r.poly[i].v;
    return l.multiplicity < r.multiplicity;
  });
  return out;
}

inline bool is_irreducible(const PrimeField& k, const Poly<Fp>& a) {
  if (degree(a) <= 0) return false;
  auto fs = factor(k, a);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

/// Degrees of the irreducible factors of a squarefree polynomial, via
/// gcd with x^(p^d) - x (distinct-degree census, no splitting).
inline std::vector<std::pair<int, int>> factor_degree_census(const PrimeField& k, const Poly<Fp>& a) {
  std::vector<std::pair<int, int>> out;  // (degree, count)
  auto f = monic(k, a);
  Poly<Fp> x{k.zero(), k.one()};
  auto h = x;
  for (int d = 1; degree(f) > 0; ++d) {
    if (2 * d > degree(f)) {
      out.emplace_back(degree(f), 1);
      break;
    }
    h = detail::frobenius_power(k, h, f);
    auto g = gcd(k, sub(k, h, x), f);
    if (degree(g) > 0) {
      out.emplace_back(d, degree(g) / d);
      f = divmod(k, f, g).first;
      h = rem(k, h, f);
    }
  }
  return out;
}

/// A monic irreducible polynomial of the given degree (seeded search).
inline Poly<Fp> random_irreducible(const PrimeField& k, int deg, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  while (true) {
    Poly<Fp> a(deg + 1, k.zero());
    for (int i = 0; i < deg; ++i) a[i] = k.random(rng);
    a[deg] = k.one();
    if (deg == 1 || (!k.is_zero(a[0]) && is_irreducible(k, a))) return a;
  }
}

}  // namespace poly
}  // namespace quadcusp
