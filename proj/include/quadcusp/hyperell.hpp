#pragma once

// Divisors on hyperelliptic curves y^2 = f(x), deg f = 2g + 2: the h^1
// recipe, Riemann-Roch spaces, base loci, the g^2_{g+3} pipeline and the
// h^0-based classification of linear series.

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quadcusp/projection.hpp"
#include "quadcusp/series.hpp"

namespace quadcusp {

template <class E>
struct HyperellipticCurve {
  Poly<E> f;
  int genus = 0;
};

template <Field K>
HyperellipticCurve<elem_t<K>> make_hyperelliptic(const K& k, Poly<elem_t<K>> f) {
  require(k.characteristic() != 2, Errc::even_characteristic, "characteristic 2 is not supported");
  f = poly::trim(k, std::move(f));
  const int n = poly::degree(f);
  require(n >= 6 && n % 2 == 0, Errc::invalid_argument, "f must have even degree 2g+2 with g >= 2");
  require(poly::degree(poly::gcd(k, f, poly::derivative(k, f))) == 0, Errc::invalid_argument, "f is not squarefree");
  return {std::move(f), n / 2 - 1};
}

template <class E>
struct HPoint {
  E x, y;
  bool weierstrass = false;
};

template <Field K>
HPoint<elem_t<K>> make_hpoint(const K& k, const HyperellipticCurve<elem_t<K>>& c, const elem_t<K>& x,
                              const elem_t<K>& y) {
  require(k.equal(k.mul(y, y), poly::eval(k, c.f, x)), Errc::point_not_on_curve, "y^2 != f(x)");
  return {x, y, k.is_zero(y)};
}

template <Field K>
HPoint<elem_t<K>> sigma(const K& k, const HPoint<elem_t<K>>& p) {
  return {p.x, k.neg(p.y), p.weierstrass};
}

template <Field K>
bool same_point(const K& k, const HPoint<elem_t<K>>& a, const HPoint<elem_t<K>>& b) {
  return k.equal(a.x, b.x) && k.equal(a.y, b.y);
}

/// The y+ / y- branch over x: y+ has the smaller canonical representative.
inline std::optional<HPoint<Fp>> branch_point(const PrimeField& k, const HyperellipticCurve<Fp>& c, Fp x, bool plus) {
  auto r = k.sqrt(poly::eval(k, c.f, x));
  if (!r) return std::nullopt;
  Fp lo = *r, hi = k.neg(*r);
  if (hi.v < lo.v) std::swap(lo, hi);
  return make_hpoint(k, c, x, plus ? lo : hi);
}

template <Field K>
std::string to_string(const K& k, const HPoint<elem_t<K>>& p) {
  return "(" + k.to_string(p.x) + "," + k.to_string(p.y) + ")";
}

/// An effective divisor with affine support, plus r copies of the
/// hyperelliptic class R placed at infinity (R = inf+ + inf-).
template <class E>
struct HDivisor {
  std::vector<std::pair<HPoint<E>, int>> terms;
  int r_infinity = 0;

  int degree() const {
    int d = 2 * r_infinity;
    for (const auto& t : terms) d += t.second;
    return d;
  }
};

template <Field K>
HDivisor<elem_t<K>> make_divisor(const K& k, const std::vector<std::pair<HPoint<elem_t<K>>, int>>& terms,
                                 int r_infinity = 0) {
  HDivisor<elem_t<K>> d;
  d.r_infinity = r_infinity;
  for (const auto& [p, m] : terms) {
    require(m >= 0, Errc::non_effective, "negative multiplicity");
    bool merged = false;
    for (auto& t : d.terms)
      if (same_point(k, t.first, p)) {
        t.second += m;
        merged = true;
      }
    if (!merged && m > 0) d.terms.push_back({p, m});
  }
  return d;
}

template <Field K>
int multiplicity(const K& k, const HDivisor<elem_t<K>>& d, const HPoint<elem_t<K>>& p) {
  for (const auto& t : d.terms)
    if (same_point(k, t.first, p)) return t.second;
  return 0;
}

template <Field K>
HDivisor<elem_t<K>> sigma(const K& k, const HDivisor<elem_t<K>>& d) {
  auto out = d;
  for (auto& t : out.terms) t.first = sigma(k, t.first);
  return out;
}

template <Field K>
std::string to_string(const K& k, const HDivisor<elem_t<K>>& d) {
  std::string s;
  for (const auto& [p, m] : d.terms) s += (s.empty() ? "" : " + ") + std::to_string(m) + "*" + to_string(k, p);
  if (d.r_infinity) s += (s.empty() ? "" : " + ") + std::to_string(d.r_infinity) + "*R";
  return s.empty() ? "0" : s;
}

struct WeierstrassReport {
  int rational = 0;
  int in_extensions = 0;
  std::vector<std::pair<int, int>> factor_census;  // (degree, count)
};

inline std::vector<HPoint<Fp>> weierstrass_points(const PrimeField& k, const HyperellipticCurve<Fp>& c,
                                                  WeierstrassReport* report = nullptr) {
  std::vector<HPoint<Fp>> out;
  WeierstrassReport rep;
  for (const auto& fac : poly::factor(k, c.f))
    if (poly::degree(fac.poly) == 1) out.push_back({k.neg(fac.poly[0]), k.zero(), true});
  rep.rational = static_cast<int>(out.size());
  rep.in_extensions = poly::degree(c.f) - rep.rational;
  rep.factor_census = poly::factor_degree_census(k, c.f);
  if (report) *report = rep;
  return out;
}

namespace detail {

template <class E>
struct Fibre {
  E x, y;
  bool weierstrass = false;
  int plus = 0, minus = 0;  // multiplicities at (x, y) and (x, -y)

  int pole_order() const { return weierstrass ? (plus + 1) / 2 : std::max(plus, minus); }
};

template <Field K>
std::vector<Fibre<elem_t<K>>> fibres(const K& k, const HDivisor<elem_t<K>>& d) {
  std::vector<Fibre<elem_t<K>>> out;
  for (const auto& [p, m] : d.terms) {
    require(m >= 0, Errc::non_effective, "negative multiplicity");
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& f) { return k.equal(f.x, p.x); });
    if (it == out.end()) {
      out.push_back({p.x, p.y, p.weierstrass, 0, 0});
      it = out.end() - 1;
    }
    if (k.equal(it->y, p.y)) it->plus += m;
    else it->minus += m;
  }
  return out;
}

inline int ceil_half(int n) { return n <= 0 ? 0 : (n + 1) / 2; }

}  // namespace detail

/// h^1(D) = max(0, g - deg(D')/2): D' rounds each Weierstrass multiplicity up
/// to even and gives both points of a conjugate pair the larger multiplicity.
template <Field K>
int h1_effective(const K& k, const HyperellipticCurve<elem_t<K>>& c, const HDivisor<elem_t<K>>& d) {
  require(d.r_infinity >= 0, Errc::non_effective, "negative multiple of R");
  int half = d.r_infinity;
  for (const auto& fb : detail::fibres(k, d)) half += fb.pole_order();
  return std::max(0, c.genus - half);
}

template <Field K>
int h0_effective(const K& k, const HyperellipticCurve<elem_t<K>>& c, const HDivisor<elem_t<K>>& d) {
  return d.degree() + 1 - c.genus + h1_effective(k, c, d);
}

template <class E>
struct RRSpace {
  HDivisor<E> divisor;
  Poly<E> delta;
  std::vector<std::pair<Poly<E>, Poly<E>>> basis;  // (A, B) for (A + B y) / delta
  int dimension = 0;
};

/// L(D) as {(A + B y)/delta}: regularity at infinity bounds the degrees of A
/// and B, the affine pole bounds are imposed through local expansions.
template <Field K>
RRSpace<elem_t<K>> rr_space(const K& k, const HyperellipticCurve<elem_t<K>>& c, const HDivisor<elem_t<K>>& d) {
  using E = elem_t<K>;
  require(k.characteristic() != 2, Errc::even_characteristic, "characteristic 2 is not supported");
  RRSpace<E> s;
  s.divisor = d;
  auto fb = detail::fibres(k, d);
  s.delta = poly::constant(k, k.one());
  for (const auto& f : fb)
    s.delta = poly::mul(k, s.delta, poly::pow(k, Poly<E>{k.neg(f.x), k.one()}, f.pole_order()));
  const int dd = poly::degree(s.delta);
  const int dA = dd + d.r_infinity, dB = dd - (c.genus + 1) + d.r_infinity;
  if (dA < 0) return s;
  const int nA = dA + 1, nB = std::max(0, dB + 1), n = nA + nB;
  std::vector<std::vector<E>> rows;
  auto shifted_monomial = [&](int i, const E& a) { return poly::taylor_shift(k, poly::monomial(k, i, k.one()), a); };
  for (const auto& f : fb) {
    const int cp = f.pole_order();
    if (f.weierstrass) {
      const int needA = detail::ceil_half(2 * cp - f.plus), needB = detail::ceil_half(2 * cp - f.plus - 1);
      for (int j = 0; j < needA; ++j) {
        std::vector<E> row(n, k.zero());
        for (int i = 0; i < nA; ++i) row[i] = poly::coeff(k, shifted_monomial(i, f.x), j);
        rows.push_back(std::move(row));
      }
      for (int j = 0; j < needB; ++j) {
        std::vector<E> row(n, k.zero());
        for (int i = 0; i < nB; ++i) row[nA + i] = poly::coeff(k, shifted_monomial(i, f.x), j);
        rows.push_back(std::move(row));
      }
      continue;
    }
    for (int branch = 0; branch < 2; ++branch) {
      const int need = cp - (branch == 0 ? f.plus : f.minus);
      if (need <= 0) continue;
      auto y = hensel_sqrt(k, c.f, f.x, branch == 0 ? f.y : k.neg(f.y), need);
      for (int j = 0; j < need; ++j) {
        std::vector<E> row(n, k.zero());
        for (int i = 0; i < nA; ++i) row[i] = poly::coeff(k, shifted_monomial(i, f.x), j);
        for (int i = 0; i < nB; ++i) {
          auto xi = series::from_poly(k, poly::monomial(k, i, k.one()), f.x, need);
          row[nA + i] = series::mul(k, xi, y).c[j];
        }
        rows.push_back(std::move(row));
      }
    }
  }
  Matrix<E> m = zero_matrix(k, rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int j = 0; j < n; ++j) m(r, j) = rows[r][j];
  for (const auto& v : kernel(k, m)) {
    Poly<E> a(v.begin(), v.begin() + nA), b(v.begin() + nA, v.end());
    s.basis.push_back({poly::trim(k, std::move(a)), poly::trim(k, std::move(b))});
  }
  s.dimension = static_cast<int>(s.basis.size());
  return s;
}

/// ord_P of (A + B y) / delta.
template <Field K>
int order_at(const K& k, const HyperellipticCurve<elem_t<K>>& c, const Poly<elem_t<K>>& delta,
             const std::pair<Poly<elem_t<K>>, Poly<elem_t<K>>>& h, const HPoint<elem_t<K>>& p) {
  const auto& [a, b] = h;
  require(!(a.empty() && b.empty()), Errc::zero_form, "order of the zero function");
  const int pole = poly::root_multiplicity(k, delta, p.x);
  if (p.weierstrass) {
    constexpr int inf = 1 << 29;
    const int oa = a.empty() ? inf : 2 * poly::root_multiplicity(k, a, p.x);
    const int ob = b.empty() ? inf : 2 * poly::root_multiplicity(k, b, p.x) + 1;
    return std::min(oa, ob) - 2 * pole;
  }
  auto norm = poly::sub(k, poly::mul(k, a, a), poly::mul(k, poly::mul(k, b, b), c.f));
  const int cap = poly::root_multiplicity(k, norm, p.x) + 1;
  auto y = hensel_sqrt(k, c.f, p.x, p.y, cap);
  auto val = series::add(k, series::from_poly(k, a, p.x, cap),
                         series::mul(k, series::from_poly(k, b, p.x, cap), y));
  return series::valuation(k, val) - pole;
}

/// F_p-rational affine base points of L(D): min over the basis of ord + D.
inline HDivisor<Fp> base_locus(const PrimeField& k, const HyperellipticCurve<Fp>& c, const RRSpace<Fp>& s) {
  require(s.dimension >= 1, Errc::zero_space, "empty linear system");
  Poly<Fp> g;
  for (const auto& [a, b] : s.basis)
    g = poly::gcd(k, g, poly::sub(k, poly::mul(k, a, a), poly::mul(k, poly::mul(k, b, b), c.f)));
  std::vector<Fp> xs;
  for (const auto& t : s.divisor.terms) xs.push_back(t.first.x);
  for (const auto& fac : poly::factor(k, g))
    if (poly::degree(fac.poly) == 1) xs.push_back(k.neg(fac.poly[0]));
  std::vector<std::pair<HPoint<Fp>, int>> out;
  for (const auto& x : xs)
    for (bool plus : {true, false}) {
      auto p = branch_point(k, c, x, plus);
      if (!p) continue;
      if (std::any_of(out.begin(), out.end(), [&](const auto& t) { return same_point(k, t.first, *p); })) continue;
      int m = 1 << 29;
      for (const auto& h : s.basis) m = std::min(m, order_at(k, c, s.delta, h, *p));
      m += multiplicity(k, s.divisor, *p);
      if (m > 0) out.push_back({*p, m});
      if (p->weierstrass) break;
    }
  return make_divisor(k, out);
}

/// A random non-Weierstrass F_p-point.
inline HPoint<Fp> sample_point(const PrimeField& k, const HyperellipticCurve<Fp>& c, std::mt19937_64& rng) {
  for (int tries = 0; tries < 10000; ++tries) {
    auto x = k.random(rng);
    auto p = branch_point(k, c, x, rng() & 1);
    if (p && !p->weierstrass) return *p;
  }
  fail(Errc::retries_exhausted, "no non-Weierstrass rational point found");
}

// ---------------------------------------------------------------------------
// The g^2_{g+3} of 2o + (g+1)p

struct A1Report {
  int genus = 0;
  std::string np_divisor;
  int h0_np = 0, h0_np_recipe = 0;
  std::pair<Poly<Fp>, Poly<Fp>> psi;  // u1 = (A + B y) / delta
  Poly<Fp> delta;
  BiForm<Fp> image;
  SurfacePoint<Fp> q;
  Fp image_at_q;
  ProjectionVerdict verdict;
  std::vector<std::vector<int>> profiles;
  int arithmetic_genus = 0;
  std::vector<std::string> singularities;
};

/// w = (u1, x): X -> P^1 x P^1 with u1 spanning L((g+1)p) together with 1,
/// then the projection of w(X) from q = (u1(p), x(o)).
inline A1Report theorem_a1_pipeline(const PrimeField& k, const HyperellipticCurve<Fp>& c, const HPoint<Fp>& o,
                                    const HPoint<Fp>& p) {
  require(o.weierstrass, Errc::not_weierstrass, "o is not a Weierstrass point: 2o is not in the g^1_2");
  require(!p.weierstrass, Errc::invalid_argument, "p must not be a Weierstrass point");
  const int g = c.genus;
  require(h1_effective(k, c, make_divisor(k, {{p, g}})) == 0, Errc::special_point, "h^1(gp) != 0");
  A1Report rep;
  rep.genus = g;
  auto np = make_divisor(k, {{o, 2}, {p, g + 1}});
  rep.np_divisor = to_string(k, np);
  rep.h0_np_recipe = h0_effective(k, c, np);
  rep.h0_np = rr_space(k, c, np).dimension;
  require(rep.h0_np == 4, Errc::invalid_argument, "h^0(N_p) != 4");

  auto l = rr_space(k, c, make_divisor(k, {{p, g + 1}}));
  require(l.dimension == 2, Errc::special_point, "h^0((g+1)p) != 2");
  auto it = std::find_if(l.basis.begin(), l.basis.end(), [](const auto& h) { return !h.second.empty(); });
  require(it != l.basis.end(), Errc::invalid_argument, "internal: L((g+1)p) has no function with a y-term");
  const Fp binv = k.inv(it->second[0]);
  rep.psi = {poly::scale(k, it->first, binv), poly::scale(k, it->second, binv)};
  rep.delta = l.delta;
  const auto& [a, b] = rep.psi;

  // (U delta - A)^2 = B^2 f, divided by delta
  auto norm = poly::sub(k, poly::mul(k, a, a), poly::mul(k, poly::mul(k, b, b), c.f));
  auto [n0, rem] = poly::divmod(k, norm, rep.delta);
  require(rem.empty(), Errc::invalid_argument, "internal: norm not divisible by delta");
  std::array<Poly<Fp>, 3> byU{n0, poly::scale(k, a, k.from_int(-2)), rep.delta};
  rep.image = zero_biform(k, 2, g + 1);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= g + 1; ++j) rep.image.c[rep.image.index(i, j)] = poly::coeff(k, byU[i], j);
  for (std::size_t i = rep.image.c.size(); i-- > 0;)
    if (!k.is_zero(rep.image.c[i])) {
      const Fp s = k.inv(rep.image.c[i]);
      for (auto& x : rep.image.c) x = k.mul(x, s);
      break;
    }

  const P1Point<Fp> u1p{k.zero(), k.one()}, u2o{k.one(), o.x};
  require(!same_point(k, u1p, u2o), Errc::coincident_q, "u1(p) = u2(o)");
  rep.q = quadric_point(k, u1p, u2o);
  rep.image_at_q = eval(k, rep.image, rep.q);
  rep.verdict = outer_injectivity_quadric(k, rep.image, rep.q);
  for (const auto& r : rep.verdict.rulings) rep.profiles.push_back(r.profile);
  rep.arithmetic_genus = (2 - 1) * (g + 1 - 1);
  rep.singularities = {"phi(o): ordinary cusp (multiplicity 2, unibranch)",
                       "phi(p): unibranch singularity of multiplicity " + std::to_string(g + 1)};
  return rep;
}

// ---------------------------------------------------------------------------

struct SeriesClass {
  std::string type;  // "I", "II", "III" or "not_injective_candidate"
  int h0 = 0;
  std::vector<std::string> notes;
};

/// Complete g^2_d (h^0 = 3) is type I. For h^0 = 4 the image lies on a
/// quadric; the cone branch D ~ 2R + E (E effective) is detected by
/// h^0(D - 2R) > 0 and is injective only for g = 2.
template <Field K>
SeriesClass classify_series(const K& k, const HyperellipticCurve<elem_t<K>>& c, const HDivisor<elem_t<K>>& d) {
  SeriesClass s;
  s.h0 = h0_effective(k, c, d);
  if (s.h0 == 3) {
    s.type = "I";
    s.notes.push_back("complete g^2_" + std::to_string(d.degree()));
  } else if (s.h0 == 4) {
    auto twisted = d;
    twisted.r_infinity -= 2;
    const int cone = rr_space(k, c, twisted).dimension;
    if (cone > 0) {
      s.type = c.genus == 2 ? "II" : "III";
      s.notes.push_back("cone branch: h^0(D - 2R) = " + std::to_string(cone));
      if (c.genus > 2) s.notes.push_back("cone branch with g > 2 is not very ample");
    } else {
      s.type = "II";
      s.notes.push_back("smooth quadric branch: h^0(D - 2R) = 0");
    }
    if (d.degree() != c.genus + 3) s.notes.push_back("degree differs from g + 3");
  } else {
    s.type = "not_injective_candidate";
    s.notes.push_back("h^0 = " + std::to_string(s.h0));
  }
  return s;
}

}  // namespace quadcusp
