#pragma once

// Forms on the smooth quadric P^1 x P^1 (bihomogeneous of bidegree (d1,d2))
// and on the cone X0*X2 = X1^2 (degree-d forms in the reduced basis), with
// points, affine charts and ruling restrictions.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "quadcusp/binary_form.hpp"
#include "quadcusp/bivariate.hpp"

namespace quadcusp {

enum class Ambient { smooth_quadric, cone };

inline const char* ambient_name(Ambient a) { return a == Ambient::smooth_quadric ? "smooth_quadric" : "cone"; }

/// c[i*(d2+1)+j] is the coefficient of x0^(d1-i) x1^i y0^(d2-j) y1^j.
template <class E>
struct BiForm {
  int d1 = 0, d2 = 0;
  std::vector<E> c;

  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * (d2 + 1) + j); }
};

/// Exponents of X0^a X1^e X2^b X3^g with e in {0,1}.
struct ConeMonomial {
  int a, e, b, g;
};

/// The reduced basis of degree-d forms on the cone, (d+1)^2 monomials,
/// ordered by the power of X3 and then lexicographically.
inline std::vector<ConeMonomial> cone_basis(int d) {
  require(d >= 0, Errc::degree_negative, "cone degree must be non-negative");
  std::vector<ConeMonomial> out;
  for (int g = 0; g <= d; ++g) {
    const int rest = d - g;
    for (int e = 0; e <= 1 && e <= rest; ++e)
      for (int a = rest - e; a >= 0; --a) out.push_back({a, e, rest - e - a, g});
  }
  return out;
}

inline int cone_basis_index(int d, const ConeMonomial& m) {
  auto basis = cone_basis(d);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].a == m.a && basis[i].e == m.e && basis[i].b == m.b && basis[i].g == m.g) return static_cast<int>(i);
  return -1;
}

template <class E>
struct ConeForm {
  int d = 0;
  std::vector<E> c;  // aligned with cone_basis(d)
};

template <Field K>
BiForm<elem_t<K>> zero_biform(const K& k, int d1, int d2) {
  require(d1 >= 0 && d2 >= 0, Errc::degree_negative, "bidegree must be non-negative");
  return {d1, d2, std::vector<elem_t<K>>(static_cast<std::size_t>((d1 + 1) * (d2 + 1)), k.zero())};
}

template <Field K>
ConeForm<elem_t<K>> zero_coneform(const K& k, int d) {
  return {d, std::vector<elem_t<K>>(static_cast<std::size_t>((d + 1) * (d + 1)), k.zero())};
}

template <Field K, class Form>
bool is_zero_vector(const K& k, const Form& f) {
  for (const auto& x : f.c)
    if (!k.is_zero(x)) return false;
  return true;
}

template <Field K, class K0>
BiForm<elem_t<K>> lift_form(const K& to, const K0& from, const BiForm<elem_t<K0>>& f) {
  BiForm<elem_t<K>> r{f.d1, f.d2, {}};
  for (const auto& x : f.c) r.c.push_back(lift(to, from, x));
  return r;
}

template <Field K, class K0>
ConeForm<elem_t<K>> lift_form(const K& to, const K0& from, const ConeForm<elem_t<K0>>& f) {
  ConeForm<elem_t<K>> r{f.d, {}};
  for (const auto& x : f.c) r.c.push_back(lift(to, from, x));
  return r;
}

// ---------------------------------------------------------------------------
// Points

template <class E>
struct SurfacePoint {
  Ambient ambient = Ambient::smooth_quadric;
  P1Point<E> x, y;        // quadric
  std::array<E, 4> X{};   // cone
  bool vertex = false;
};

template <Field K>
SurfacePoint<elem_t<K>> quadric_point(const K& k, const P1Point<elem_t<K>>& x, const P1Point<elem_t<K>>& y) {
  SurfacePoint<elem_t<K>> p;
  p.ambient = Ambient::smooth_quadric;
  p.x = normalize(k, x);
  p.y = normalize(k, y);
  p.X = {k.zero(), k.zero(), k.zero(), k.zero()};
  return p;
}

template <Field K>
SurfacePoint<elem_t<K>> cone_point(const K& k, std::array<elem_t<K>, 4> X) {
  int first = 0;
  while (first < 4 && k.is_zero(X[first])) ++first;
  require(first < 4, Errc::invalid_argument, "(0:0:0:0) is not a point of P^3");
  auto inv = k.inv(X[first]);
  for (auto& x : X) x = k.mul(x, inv);
  require(k.equal(k.mul(X[0], X[2]), k.mul(X[1], X[1])), Errc::point_not_on_curve,
          "point does not lie on the cone X0*X2 = X1^2");
  SurfacePoint<elem_t<K>> p;
  p.ambient = Ambient::cone;
  p.x = {k.one(), k.zero()};
  p.y = {k.one(), k.zero()};
  p.X = X;
  p.vertex = k.is_zero(X[0]) && k.is_zero(X[1]) && k.is_zero(X[2]);
  return p;
}

/// Image of a quadric point under the Segre map (x0y0 : x0y1 : x1y0 : x1y1).
template <Field K>
std::array<elem_t<K>, 4> segre(const K& k, const SurfacePoint<elem_t<K>>& p) {
  return {k.mul(p.x.s, p.y.s), k.mul(p.x.s, p.y.t), k.mul(p.x.t, p.y.s), k.mul(p.x.t, p.y.t)};
}

template <Field K>
bool same_point(const K& k, const SurfacePoint<elem_t<K>>& a, const SurfacePoint<elem_t<K>>& b) {
  if (a.ambient != b.ambient) return false;
  if (a.ambient == Ambient::smooth_quadric) return same_point(k, a.x, b.x) && same_point(k, a.y, b.y);
  for (int i = 0; i < 4; ++i)
    if (!k.equal(a.X[i], b.X[i])) return false;
  return true;
}

template <Field K>
std::string to_string(const K& k, const SurfacePoint<elem_t<K>>& p) {
  if (p.ambient == Ambient::smooth_quadric)
    return "((" + k.to_string(p.x.s) + ":" + k.to_string(p.x.t) + "),(" + k.to_string(p.y.s) + ":" +
           k.to_string(p.y.t) + "))";
  return "(" + k.to_string(p.X[0]) + ":" + k.to_string(p.X[1]) + ":" + k.to_string(p.X[2]) + ":" +
         k.to_string(p.X[3]) + ")";
}

// ---------------------------------------------------------------------------
// Evaluation

template <Field K>
elem_t<K> power(const K& k, elem_t<K> a, int e) {
  auto r = k.one();
  for (int i = 0; i < e; ++i) r = k.mul(r, a);
  return r;
}

template <Field K>
elem_t<K> eval(const K& k, const BiForm<elem_t<K>>& f, const SurfacePoint<elem_t<K>>& p) {
  auto acc = k.zero();
  for (int i = 0; i <= f.d1; ++i) {
    auto xm = k.mul(power(k, p.x.s, f.d1 - i), power(k, p.x.t, i));
    if (k.is_zero(xm)) continue;
    for (int j = 0; j <= f.d2; ++j) {
      const auto& c = f.c[f.index(i, j)];
      if (k.is_zero(c)) continue;
      acc = k.add(acc, k.mul(c, k.mul(xm, k.mul(power(k, p.y.s, f.d2 - j), power(k, p.y.t, j)))));
    }
  }
  return acc;
}

template <Field K>
elem_t<K> eval(const K& k, const ConeForm<elem_t<K>>& f, const std::array<elem_t<K>, 4>& X) {
  auto basis = cone_basis(f.d);
  auto acc = k.zero();
  for (std::size_t n = 0; n < basis.size(); ++n) {
    if (k.is_zero(f.c[n])) continue;
    const auto& m = basis[n];
    auto v = k.mul(k.mul(power(k, X[0], m.a), power(k, X[1], m.e)), k.mul(power(k, X[2], m.b), power(k, X[3], m.g)));
    acc = k.add(acc, k.mul(f.c[n], v));
  }
  return acc;
}

template <Field K>
elem_t<K> eval(const K& k, const ConeForm<elem_t<K>>& f, const SurfacePoint<elem_t<K>>& p) {
  return eval(k, f, p.X);
}

// ---------------------------------------------------------------------------
// Ruling restrictions

/// Restriction to {x} x P^1 (a line of class (1,0)): a form of degree d2 in y.
template <Field K>
BinaryForm<elem_t<K>> restrict_to_fibre_x(const K& k, const BiForm<elem_t<K>>& f, const P1Point<elem_t<K>>& x) {
  std::vector<elem_t<K>> c(f.d2 + 1, k.zero());
  for (int i = 0; i <= f.d1; ++i) {
    auto xm = k.mul(power(k, x.s, f.d1 - i), power(k, x.t, i));
    for (int j = 0; j <= f.d2; ++j) c[j] = k.add(c[j], k.mul(f.c[f.index(i, j)], xm));
  }
  return make_binary_form(k, std::move(c));
}

/// Restriction to P^1 x {y} (a line of class (0,1)): a form of degree d1 in x.
template <Field K>
BinaryForm<elem_t<K>> restrict_to_fibre_y(const K& k, const BiForm<elem_t<K>>& f, const P1Point<elem_t<K>>& y) {
  std::vector<elem_t<K>> c(f.d1 + 1, k.zero());
  for (int j = 0; j <= f.d2; ++j) {
    auto ym = k.mul(power(k, y.s, f.d2 - j), power(k, y.t, j));
    for (int i = 0; i <= f.d1; ++i) c[i] = k.add(c[i], k.mul(f.c[f.index(i, j)], ym));
  }
  return make_binary_form(k, std::move(c));
}

/// Restriction to the cone ruling through a non-vertex point p, written in
/// (lambda:mu) for lambda*(p0,p1,p2,0) + mu*(0,0,0,1). The point p itself is
/// (1:p3) and the vertex is (0:1).
template <Field K>
BinaryForm<elem_t<K>> restrict_to_ruling(const K& k, const ConeForm<elem_t<K>>& f, const SurfacePoint<elem_t<K>>& p) {
  require(!p.vertex, Errc::center_is_vertex, "the vertex lies on every ruling");
  auto basis = cone_basis(f.d);
  std::vector<elem_t<K>> c(f.d + 1, k.zero());
  for (std::size_t n = 0; n < basis.size(); ++n) {
    const auto& m = basis[n];
    auto v = k.mul(k.mul(power(k, p.X[0], m.a), power(k, p.X[1], m.e)), power(k, p.X[2], m.b));
    c[m.g] = k.add(c[m.g], k.mul(f.c[n], v));
  }
  return make_binary_form(k, std::move(c));
}

template <Field K>
P1Point<elem_t<K>> ruling_parameter(const K& k, const SurfacePoint<elem_t<K>>& p) {
  return {k.one(), p.X[3]};
}

// ---------------------------------------------------------------------------
// Affine charts

/// Chart of the quadric: xc = 0 means x0 = 1 (u = x1/x0), xc = 1 means
/// x1 = 1 (u = x0/x1); likewise yc for v.
struct QuadricChart {
  int xc = 0, yc = 0;
};

/// Chart of the cone: 0 means X0 = 1 with (u,v) = (X1,X3), X2 = u^2;
/// 1 means X2 = 1 with (u,v) = (X1,X3), X0 = u^2.
struct ConeChart {
  int which = 0;
};

/// Chart exponents of each coefficient's monomial.
inline std::vector<std::pair<int, int>> chart_exponents(int d1, int d2, QuadricChart ch) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= d1; ++i)
    for (int j = 0; j <= d2; ++j) out.emplace_back(ch.xc == 0 ? i : d1 - i, ch.yc == 0 ? j : d2 - j);
  return out;
}

inline std::vector<std::pair<int, int>> chart_exponents(int d, ConeChart ch) {
  std::vector<std::pair<int, int>> out;
  for (const auto& m : cone_basis(d))
    out.emplace_back(ch.which == 0 ? m.e + 2 * m.b : 2 * m.a + m.e, m.g);
  return out;
}

template <Field K>
Bipoly<elem_t<K>> dehomogenize(const K& k, const std::vector<elem_t<K>>& c,
                               const std::vector<std::pair<int, int>>& exps) {
  Bipoly<elem_t<K>> f;
  for (std::size_t n = 0; n < c.size(); ++n) bp::add_term(k, f, exps[n].first, exps[n].second, c[n]);
  return bp::trim(k, std::move(f));
}

template <Field K>
Bipoly<elem_t<K>> dehomogenize(const K& k, const BiForm<elem_t<K>>& f, QuadricChart ch) {
  return dehomogenize(k, f.c, chart_exponents(f.d1, f.d2, ch));
}

template <Field K>
Bipoly<elem_t<K>> dehomogenize(const K& k, const ConeForm<elem_t<K>>& f, ConeChart ch) {
  return dehomogenize(k, f.c, chart_exponents(f.d, ch));
}

/// The standard chart containing p and p's coordinates in it.
template <class E>
struct PointChart {
  std::vector<std::pair<int, int>> exps;
  E u0, v0;
};

template <Field K>
PointChart<elem_t<K>> standard_chart(const K& k, Ambient ambient, int d1, int d2,
                                     const SurfacePoint<elem_t<K>>& p) {
  if (ambient == Ambient::smooth_quadric) {
    require(p.ambient == Ambient::smooth_quadric, Errc::invalid_argument, "point is not on the quadric");
    QuadricChart ch{k.is_zero(p.x.s) ? 1 : 0, k.is_zero(p.y.s) ? 1 : 0};
    // normalized: in chart 1 the point sits at coordinate 0
    return {chart_exponents(d1, d2, ch), ch.xc == 0 ? p.x.t : k.zero(), ch.yc == 0 ? p.y.t : k.zero()};
  }
  require(p.ambient == Ambient::cone, Errc::invalid_argument, "point is not on the cone");
  require(!p.vertex, Errc::vertex_support, "the cone vertex cannot support a scheme");
  if (!k.is_zero(p.X[0])) {
    auto inv = k.inv(p.X[0]);
    return {chart_exponents(d1, ConeChart{0}), k.mul(p.X[1], inv), k.mul(p.X[3], inv)};
  }
  auto inv = k.inv(p.X[2]);
  return {chart_exponents(d1, ConeChart{1}), k.mul(p.X[1], inv), k.mul(p.X[3], inv)};
}

// ---------------------------------------------------------------------------
// Text

template <Field K>
std::string to_string(const K& k, const BiForm<elem_t<K>>& f) {
  std::string out;
  for (int i = 0; i <= f.d1; ++i)
    for (int j = 0; j <= f.d2; ++j) {
      const auto& c = f.c[f.index(i, j)];
      if (k.is_zero(c)) continue;
      std::string mono;
      auto var = [&](const char* v, int e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += v;
        if (e > 1) mono += "^" + std::to_string(e);
      };
      var("x0", f.d1 - i);
      var("x1", i);
      var("y0", f.d2 - j);
      var("y1", j);
      std::string cs = k.to_string(c);
      if (!out.empty()) out += " + ";
      if (mono.empty())
        out += cs;
      else if (cs == "1")
        out += mono;
      else
        out += (cs.find_first_of("+/a") != std::string::npos ? "(" + cs + ")" : cs) + "*" + mono;
    }
  return out.empty() ? "0" : out;
}

template <Field K>
std::string to_string(const K& k, const ConeForm<elem_t<K>>& f) {
  std::string out;
  auto basis = cone_basis(f.d);
  for (std::size_t n = 0; n < basis.size(); ++n) {
    if (k.is_zero(f.c[n])) continue;
    std::string mono;
    auto var = [&](const char* v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    var("X0", basis[n].a);
    var("X1", basis[n].e);
    var("X2", basis[n].b);
    var("X3", basis[n].g);
    std::string cs = k.to_string(f.c[n]);
    if (!out.empty()) out += " + ";
    if (mono.empty())
      out += cs;
    else if (cs == "1")
      out += mono;
    else
      out += (cs.find_first_of("+/a") != std::string::npos ? "(" + cs + ")" : cs) + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

}  // namespace quadcusp
