#pragma once

// Bivariate polynomials f(u,v) stored by powers of v: byv[j] is the
// coefficient of v^j as a polynomial in u. Resultants eliminate v.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "quadcusp/matrix.hpp"
#include "quadcusp/poly.hpp"

namespace quadcusp {

template <class E>
using Bipoly = std::vector<Poly<E>>;

namespace bp {

template <Field K>
Bipoly<elem_t<K>> trim(const K& k, Bipoly<elem_t<K>> f) {
  for (auto& c : f) c = poly::trim(k, std::move(c));
  while (!f.empty() && f.back().empty()) f.pop_back();
  return f;
}

template <class E>
int deg_v(const Bipoly<E>& f) {
  return static_cast<int>(f.size()) - 1;
}

template <class E>
int deg_u(const Bipoly<E>& f) {
  int d = -1;
  for (const auto& c : f) d = std::max(d, poly::degree(c));
  return d;
}

/// Total degree in (u, v); -1 for zero.
template <class E>
int total_degree(const Bipoly<E>& f) {
  int d = -1;
  for (std::size_t j = 0; j < f.size(); ++j)
    if (!f[j].empty()) d = std::max(d, static_cast<int>(j) + poly::degree(f[j]));
  return d;
}

template <Field K>
elem_t<K> coeff(const K& k, const Bipoly<elem_t<K>>& f, int i, int j) {
  if (j < 0 || j >= static_cast<int>(f.size())) return k.zero();
  return poly::coeff(k, f[j], i);
}

/// Adds c * u^i v^j in place.
template <Field K>
void add_term(const K& k, Bipoly<elem_t<K>>& f, int i, int j, const elem_t<K>& c) {
  if (k.is_zero(c)) return;
  if (static_cast<int>(f.size()) <= j) f.resize(j + 1);
  auto& row = f[j];
  if (static_cast<int>(row.size()) <= i) row.resize(i + 1, k.zero());
  row[i] = k.add(row[i], c);
}

template <Field K>
Bipoly<elem_t<K>> add(const K& k, const Bipoly<elem_t<K>>& a, const Bipoly<elem_t<K>>& b) {
  Bipoly<elem_t<K>> r(std::max(a.size(), b.size()));
  for (std::size_t j = 0; j < r.size(); ++j) {
    Poly<elem_t<K>> x = j < a.size() ? a[j] : Poly<elem_t<K>>{};
    Poly<elem_t<K>> y = j < b.size() ? b[j] : Poly<elem_t<K>>{};
    r[j] = poly::add(k, x, y);
  }
  return trim(k, std::move(r));
}

template <Field K>
Bipoly<elem_t<K>> scale(const K& k, const Bipoly<elem_t<K>>& a, const elem_t<K>& c) {
  Bipoly<elem_t<K>> r;
  for (const auto& x : a) r.push_back(poly::scale(k, x, c));
  return trim(k, std::move(r));
}

template <Field K>
Bipoly<elem_t<K>> mul(const K& k, const Bipoly<elem_t<K>>& a, const Bipoly<elem_t<K>>& b) {
  if (a.empty() || b.empty()) return {};
  Bipoly<elem_t<K>> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = poly::add(k, r[i + j], poly::mul(k, a[i], b[j]));
  return trim(k, std::move(r));
}

template <Field K>
Bipoly<elem_t<K>> partial_u(const K& k, const Bipoly<elem_t<K>>& f) {
  Bipoly<elem_t<K>> r;
  for (const auto& c : f) r.push_back(poly::derivative(k, c));
  return trim(k, std::move(r));
}

template <Field K>
Bipoly<elem_t<K>> partial_v(const K& k, const Bipoly<elem_t<K>>& f) {
  Bipoly<elem_t<K>> r;
  for (std::size_t j = 1; j < f.size(); ++j)
    r.push_back(poly::scale(k, f[j], k.from_int(static_cast<std::int64_t>(j))));
  return trim(k, std::move(r));
}

template <Field K>
elem_t<K> eval(const K& k, const Bipoly<elem_t<K>>& f, const elem_t<K>& u, const elem_t<K>& v) {
  auto acc = k.zero();
  for (std::size_t j = f.size(); j-- > 0;) acc = k.add(k.mul(acc, v), poly::eval(k, f[j], u));
  return acc;
}

/// f(alpha, v) as a polynomial in v.
template <Field K>
Poly<elem_t<K>> specialize_u(const K& k, const Bipoly<elem_t<K>>& f, const elem_t<K>& alpha) {
  Poly<elem_t<K>> r;
  for (const auto& c : f) r.push_back(poly::eval(k, c, alpha));
  return poly::trim(k, std::move(r));
}

/// f(u, beta) as a polynomial in u.
template <Field K>
Poly<elem_t<K>> specialize_v(const K& k, const Bipoly<elem_t<K>>& f, const elem_t<K>& beta) {
  Poly<elem_t<K>> r;
  auto pw = k.one();
  for (const auto& c : f) {
    r = poly::add(k, r, poly::scale(k, c, pw));
    pw = k.mul(pw, beta);
  }
  return r;
}

template <Field K>
Bipoly<elem_t<K>> transpose(const K& k, const Bipoly<elem_t<K>>& f) {
  Bipoly<elem_t<K>> r;
  for (std::size_t j = 0; j < f.size(); ++j)
    for (std::size_t i = 0; i < f[j].size(); ++i) add_term(k, r, static_cast<int>(j), static_cast<int>(i), f[j][i]);
  return trim(k, std::move(r));
}

template <Field K, class K0>
Bipoly<elem_t<K>> lift_bipoly(const K& to, const K0& from, const Bipoly<elem_t<K0>>& f) {
  Bipoly<elem_t<K>> r;
  for (const auto& c : f) r.push_back(poly::lift_poly(to, from, c));
  return r;
}

/// f(a0 + a1 u + a2 v, b0 + b1 u + b2 v).
template <Field K>
Bipoly<elem_t<K>> substitute_affine(const K& k, const Bipoly<elem_t<K>>& f, const std::vector<elem_t<K>>& a,
                                    const std::vector<elem_t<K>>& b) {
  using B = Bipoly<elem_t<K>>;
  auto linear = [&](const std::vector<elem_t<K>>& c) {
    B l;
    add_term(k, l, 0, 0, c[0]);
    add_term(k, l, 1, 0, c[1]);
    add_term(k, l, 0, 1, c[2]);
    return trim(k, l);
  };
  const B lu = linear(a), lv = linear(b);
  const int du = deg_u(f), dv = deg_v(f);
  std::vector<B> pu{B{{k.one()}}}, pv{B{{k.one()}}};
  for (int i = 1; i <= du; ++i) pu.push_back(mul(k, pu.back(), lu));
  for (int j = 1; j <= dv; ++j) pv.push_back(mul(k, pv.back(), lv));
  B r;
  for (int j = 0; j <= dv; ++j)
    for (int i = 0; i < static_cast<int>(f[j].size()); ++i) {
      if (k.is_zero(f[j][i])) continue;
      r = add(k, r, scale(k, mul(k, pu[i], pv[j]), f[j][i]));
    }
  return r;
}

template <Field K>
std::string to_string(const K& k, const Bipoly<elem_t<K>>& f, const std::string& u = "u",
                      const std::string& v = "v") {
  std::string out;
  for (std::size_t j = f.size(); j-- > 0;)
    for (std::size_t i = f[j].size(); i-- > 0;) {
      if (k.is_zero(f[j][i])) continue;
      std::string c = k.to_string(f[j][i]), mono;
      auto var = [&](const std::string& x, std::size_t e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += x;
        if (e > 1) mono += "^" + std::to_string(e);
      };
      var(u, i);
      var(v, j);
      if (!out.empty()) out += " + ";
      if (mono.empty())
        out += c;
      else if (c == "1")
        out += mono;
      else
        out += (c.find_first_of("+/a") != std::string::npos ? "(" + c + ")" : c) + "*" + mono;
    }
  return out.empty() ? "0" : out;
}

}  // namespace bp

/// Determinant of a square matrix over K[u] (fraction-free Bareiss).
template <Field K>
Poly<elem_t<K>> det_poly(const K& k, std::vector<std::vector<Poly<elem_t<K>>>> m) {
  const std::size_t n = m.size();
  if (n == 0) return {k.one()};
  Poly<elem_t<K>> prev{k.one()};
  bool negate = false;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    if (m[c][c].empty()) {
      std::size_t r = c + 1;
      while (r < n && m[r][c].empty()) ++r;
      if (r == n) return {};
      std::swap(m[r], m[c]);
      negate = !negate;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        auto num = poly::sub(k, poly::mul(k, m[c][c], m[i][j]), poly::mul(k, m[i][c], m[c][j]));
        m[i][j] = poly::divmod(k, num, prev).first;
      }
      m[i][c] = {};
    }
    prev = m[c][c];
  }
  auto d = m[n - 1][n - 1];
  if (negate) d = poly::scale(k, d, k.neg(k.one()));
  return d;
}

/// Sylvester resultant Res_v(f, g) as a polynomial in u, taken with the
/// actual v-degrees of f and g.
template <Field K>
Poly<elem_t<K>> resultant_v(const K& k, const Bipoly<elem_t<K>>& f0, const Bipoly<elem_t<K>>& g0) {
  auto f = bp::trim(k, f0), g = bp::trim(k, g0);
  require(!(f.empty() && g.empty()), Errc::both_zero, "resultant of two zero polynomials");
  if (f.empty() || g.empty()) {
    // Res(0, c) = 1 for a nonzero constant c, else 0.
    const auto& other = f.empty() ? g : f;
    return bp::deg_v(other) == 0 ? Poly<elem_t<K>>{k.one()} : Poly<elem_t<K>>{};
  }
  const int m = bp::deg_v(f), n = bp::deg_v(g);
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Poly<elem_t<K>>>> s(size, std::vector<Poly<elem_t<K>>>(size));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) s[r][r + (m - j)] = f[j];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) s[n + r][r + (n - j)] = g[j];
  if (size == 0) return {k.one()};
  return det_poly(k, std::move(s));
}

// ---------------------------------------------------------------------------
// Common zeros over the algebraic closure of F_p.

/// A point over a finite extension E = F_p[t]/(m), standing for its whole
/// Galois orbit (of size deg m).
struct ClosurePoint {
  ExtensionField field;
  Fq u, v;

  int orbit_size() const { return static_cast<int>(field.degree()); }
  bool is_rational() const { return field.project(u).has_value() && field.project(v).has_value(); }
  std::string to_string() const {
    std::string s = "(" + field.to_string(u) + ", " + field.to_string(v) + ")";
    if (field.degree() > 1) s += " where a is a root of " + poly::to_string(field.base(), field.modulus(), "a");
    return s;
  }
};

/// Roots of a univariate polynomial over the closure, one per irreducible
/// factor: (extension, root).
inline std::vector<std::pair<ExtensionField, Fq>> closure_roots(const PrimeField& k, const Poly<Fp>& a,
                                                                std::uint64_t seed = 0x5eed) {
  std::vector<std::pair<ExtensionField, Fq>> out;
  if (poly::degree(a) <= 0) return out;
  for (auto& fac : poly::factor(k, a, seed)) {
    ExtensionField e(k, fac.poly);
    out.emplace_back(e, e.generator());
  }
  return out;
}

struct ZeroSet {
  enum class Status { finite, positive_dimensional, inconclusive };
  Status status = Status::finite;
  std::vector<ClosurePoint> points;   // orbit representatives (finite case)
  std::vector<ClosurePoint> witness;  // a point on a common curve (positive-dimensional case)
  int attempts = 0;
  int resultant_degree = -1;

  int degree() const {
    int d = 0;
    for (const auto& p : points) d += p.orbit_size();
    return d;
  }
};

namespace detail {

inline std::vector<ClosurePoint> fiber_witness(const PrimeField& k, const std::vector<Bipoly<Fp>>& polys) {
  for (std::uint64_t idx = 0; idx < k.order(); ++idx) {
    Fp alpha = k.element(idx);
    Poly<Fp> g;
    for (const auto& f : polys) g = poly::gcd(k, g, bp::specialize_u(k, f, alpha));
    if (g.empty()) {
      ExtensionField e(k, {k.zero(), k.one()});
      return {ClosurePoint{e, e.embed(alpha), e.zero()}};
    }
    if (poly::degree(g) >= 1) {
      auto roots = closure_roots(k, g);
      const auto& [e, beta] = roots.front();
      return {ClosurePoint{e, e.embed(alpha), beta}};
    }
  }
  return {};
}

}  // namespace detail

/// Common zeros in the affine plane of a list of polynomials over F_p.
/// A random shear u' = u + c v makes the projection to u' injective on the
/// zero set; it is re-drawn whenever two zeros share a fibre.
inline ZeroSet affine_common_zeros(const PrimeField& k, std::vector<Bipoly<Fp>> polys, std::uint64_t seed = 1) {
  ZeroSet out;
  std::vector<Bipoly<Fp>> nz;
  for (auto& f : polys) {
    f = bp::trim(k, std::move(f));
    if (!f.empty()) nz.push_back(std::move(f));
  }
  if (nz.empty()) {
    out.status = ZeroSet::Status::positive_dimensional;
    ExtensionField e(k, {k.zero(), k.one()});
    out.witness.push_back({e, e.zero(), e.zero()});
    return out;
  }
  for (const auto& f : nz)
    if (bp::total_degree(f) == 0) return out;  // a nonzero constant
  if (nz.size() == 1) {
    out.status = ZeroSet::Status::positive_dimensional;
    out.witness = detail::fiber_witness(k, nz);
    if (out.witness.empty()) {
      auto t = bp::transpose(k, nz[0]);
      auto w = detail::fiber_witness(k, {t});
      for (auto& p : w) std::swap(p.u, p.v);
      out.witness = w;
    }
    return out;
  }

  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 12;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    out.attempts = attempt + 1;
    Fp c = attempt == 0 ? k.zero() : k.random(rng);
    std::vector<Bipoly<Fp>> sheared;
    for (const auto& f : nz) sheared.push_back(bp::substitute_affine(k, f, {k.zero(), k.one(), k.neg(c)}, {k.zero(), k.zero(), k.one()}));
    Bipoly<Fp> a = sheared[0], b = sheared[1];
    for (std::size_t i = 1; i < sheared.size(); ++i) a = bp::add(k, a, bp::scale(k, sheared[i], k.random(rng)));
    for (std::size_t i = 0; i < sheared.size(); ++i)
      if (i != 1) b = bp::add(k, b, bp::scale(k, sheared[i], k.random(rng)));
    auto r = resultant_v(k, a, b);
    if (r.empty()) continue;
    out.resultant_degree = poly::degree(r);
    std::vector<ClosurePoint> pts;
    bool collision = false;
    for (auto& [e, alpha] : closure_roots(k, r, seed + attempt)) {
      Poly<Fq> g;
      for (const auto& f : sheared) g = poly::gcd(e, g, bp::specialize_u(e, bp::lift_bipoly(e, k, f), alpha));
      if (g.empty()) {
        out.status = ZeroSet::Status::positive_dimensional;
        Fq u0 = alpha;  // v = 0 on the vertical line u' = alpha
        out.witness.push_back({e, u0, e.zero()});
        out.points.clear();
        return out;
      }
      if (poly::degree(g) == 0) continue;
      auto sq = poly::divmod(e, g, poly::gcd(e, g, poly::derivative(e, g))).first;
      if (poly::degree(sq) != 1) {
        collision = true;
        break;
      }
      Fq beta = e.neg(sq[0]);
      pts.push_back({e, e.sub(alpha, e.mul(e.embed(c), beta)), beta});
    }
    if (collision) continue;
    out.points = std::move(pts);
    return out;
  }
  // Every draw produced a vanishing resultant or a fibre collision.
  out.points.clear();
  out.witness = detail::fiber_witness(k, nz);
  out.status = out.witness.empty() ? ZeroSet::Status::inconclusive : ZeroSet::Status::positive_dimensional;
  return out;
}

/// Over Q only emptiness can be certified (no factoring of the resultant).
inline ZeroSet affine_common_zeros(const RationalField& k, std::vector<Bipoly<mpq_class>> polys, std::uint64_t seed = 1) {
  ZeroSet out;
  std::vector<Bipoly<mpq_class>> nz;
  for (auto& f : polys) {
    f = bp::trim(k, std::move(f));
    if (!f.empty()) nz.push_back(std::move(f));
  }
  for (const auto& f : nz)
    if (bp::total_degree(f) == 0) return out;
  out.status = ZeroSet::Status::inconclusive;
  if (nz.size() < 2) return out;
  std::mt19937_64 rng(seed);
  Bipoly<mpq_class> a = nz[0], b = nz[1];
  for (std::size_t i = 2; i < nz.size(); ++i) {
    a = bp::add(k, a, bp::scale(k, nz[i], k.random(rng)));
    b = bp::add(k, b, bp::scale(k, nz[i], k.random(rng)));
  }
  auto r = resultant_v(k, a, b);
  out.attempts = 1;
  out.resultant_degree = poly::degree(r);
  if (poly::degree(r) == 0) out.status = ZeroSet::Status::finite;
  // Without a shear the leading coefficients may vanish together; a constant
  // resultant still excludes affine common zeros.
  return out;
}

/// Common roots of univariate polynomials over the closure of F_p; the
/// second member is true when all of them vanish identically.
inline std::pair<std::vector<std::pair<ExtensionField, Fq>>, bool> common_roots(const PrimeField& k,
                                                                               const std::vector<Poly<Fp>>& polys) {
  Poly<Fp> g;
  for (const auto& f : polys) g = poly::gcd(k, g, f);
  if (g.empty()) return {{}, true};
  return {closure_roots(k, g), false};
}

}  // namespace quadcusp
