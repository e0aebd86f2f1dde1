#pragma once

// Zero-dimensional schemes on the quadric or the cone, encoded as linear
// functionals on the coefficient vectors of forms.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "quadcusp/forms.hpp"
#include "quadcusp/matrix.hpp"

namespace quadcusp {

/// Coefficient space of forms: bidegree (d1,d2) on the quadric, or degree
/// d1 on the cone (d2 unused).
struct FormSpace {
  Ambient ambient = Ambient::smooth_quadric;
  int d1 = 0, d2 = 0;

  int dimension() const {
    return ambient == Ambient::smooth_quadric ? (d1 + 1) * (d2 + 1) : (d1 + 1) * (d1 + 1);
  }
  std::string describe() const {
    return ambient == Ambient::smooth_quadric ? "(" + std::to_string(d1) + "," + std::to_string(d2) + ")"
                                              : std::to_string(d1);
  }
};

/// On the quadric, family 0 is the line {x} x P^1 (class (1,0)) and family 1
/// is P^1 x {y} (class (0,1)). On the cone the line is the ruling through
/// the support point and family is ignored.
template <class E>
struct RulingDivisor {
  int family = 0;
  SurfacePoint<E> point;
  int multiplicity = 1;
};

template <class E>
struct FatPoint {
  SurfacePoint<E> point;
};

/// Ideal (Y^2, Y X^(h+1), X^(2h+1)) in local coordinates with X along the
/// tangent direction (given in the standard chart at the point).
template <class E>
struct CuspScheme {
  SurfacePoint<E> point;
  E du, dv;
  int h = 1;
};

template <class E>
using SchemeGenerator = std::variant<RulingDivisor<E>, FatPoint<E>, CuspScheme<E>>;

template <class E>
const SurfacePoint<E>& support(const SchemeGenerator<E>& g) {
  return std::visit([](const auto& x) -> const SurfacePoint<E>& { return x.point; }, g);
}

template <class E>
int generator_degree(const SchemeGenerator<E>& g) {
  if (auto r = std::get_if<RulingDivisor<E>>(&g)) return r->multiplicity;
  if (std::holds_alternative<FatPoint<E>>(g)) return 3;
  return 3 * std::get<CuspScheme<E>>(g).h + 2;
}

template <class E>
struct ZeroScheme {
  Ambient ambient = Ambient::smooth_quadric;
  std::vector<SchemeGenerator<E>> generators;

  int degree() const {
    int d = 0;
    for (const auto& g : generators) d += generator_degree(g);
    return d;
  }
};

template <Field K>
RulingDivisor<elem_t<K>> ruling_divisor(const K& k, int family, const P1Point<elem_t<K>>& line,
                                        const SurfacePoint<elem_t<K>>& o, int m) {
  require(m >= 1, Errc::invalid_argument, "ruling divisor multiplicity must be positive");
  require(o.ambient == Ambient::smooth_quadric, Errc::invalid_argument, "use cone_ruling_divisor on the cone");
  require(family == 0 || family == 1, Errc::invalid_argument, "ruling family must be 0 or 1");
  const auto& coord = family == 0 ? o.x : o.y;
  require(same_point(k, coord, line), Errc::point_not_on_line, "point does not lie on the named ruling");
  return {family, o, m};
}

template <Field K>
RulingDivisor<elem_t<K>> cone_ruling_divisor(const K& k, const SurfacePoint<elem_t<K>>& o, int m) {
  (void)k;
  require(m >= 1, Errc::invalid_argument, "ruling divisor multiplicity must be positive");
  require(o.ambient == Ambient::cone, Errc::invalid_argument, "point is not on the cone");
  require(!o.vertex, Errc::vertex_support, "the cone vertex cannot support a ruling divisor");
  return {0, o, m};
}

template <Field K>
FatPoint<elem_t<K>> fat_point(const K& k, const SurfacePoint<elem_t<K>>& p) {
  (void)k;
  require(!p.vertex, Errc::vertex_support, "the cone vertex cannot support a fat point");
  return {p};
}

template <Field K>
CuspScheme<elem_t<K>> cusp_scheme(const K& k, const SurfacePoint<elem_t<K>>& p, const elem_t<K>& du,
                                  const elem_t<K>& dv, int h) {
  require(!p.vertex, Errc::vertex_support, "the cone vertex cannot support a cusp scheme");
  require(!(k.is_zero(du) && k.is_zero(dv)), Errc::zero_tangent, "tangent direction is zero");
  require(h >= 1, Errc::invalid_argument, "cusp order h must be positive");
  return {p, du, dv, h};
}

template <Field K>
ZeroScheme<elem_t<K>> make_scheme(const K& k, Ambient ambient, std::vector<SchemeGenerator<elem_t<K>>> gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    require(support(gens[i]).ambient == ambient, Errc::invalid_argument, "generator supported off the ambient surface");
    for (std::size_t j = 0; j < i; ++j)
      require(!same_point(k, support(gens[i]), support(gens[j])), Errc::overlapping_support,
              "scheme generators must have disjoint supports");
  }
  return {ambient, std::move(gens)};
}

// ---------------------------------------------------------------------------
// Local expansions

inline std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t b = 1;
  for (int i = 1; i <= r; ++i) b = b * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return b;
}

namespace detail {

template <class E>
using Grid = std::vector<std::vector<E>>;  // g[i][j]: coefficient of X^i Y^j

template <Field K>
Grid<elem_t<K>> grid_mul(const K& k, const Grid<elem_t<K>>& a, const Grid<elem_t<K>>& b) {
  const std::size_t I = a.size(), J = a[0].size();
  Grid<elem_t<K>> r(I, std::vector<elem_t<K>>(J, k.zero()));
  for (std::size_t i1 = 0; i1 < I; ++i1)
    for (std::size_t j1 = 0; j1 < J; ++j1) {
      if (k.is_zero(a[i1][j1])) continue;
      for (std::size_t i2 = 0; i1 + i2 < I; ++i2)
        for (std::size_t j2 = 0; j1 + j2 < J; ++j2)
          r[i1 + i2][j1 + j2] = k.add(r[i1 + i2][j1 + j2], k.mul(a[i1][j1], b[i2][j2]));
    }
  return r;
}

/// Powers 0..n of (c + dx X + dy Y), truncated to X^(I-1), Y^(J-1).
template <Field K>
std::vector<Grid<elem_t<K>>> linear_powers(const K& k, const elem_t<K>& c, const elem_t<K>& dx,
                                           const elem_t<K>& dy, int n, int I, int J) {
  Grid<elem_t<K>> one(I, std::vector<elem_t<K>>(J, k.zero())), lin = one;
  one[0][0] = k.one();
  lin[0][0] = c;
  if (I > 1) lin[1][0] = dx;
  if (J > 1) lin[0][1] = dy;
  std::vector<Grid<elem_t<K>>> out{one};
  for (int e = 1; e <= n; ++e) out.push_back(grid_mul(k, out.back(), lin));
  return out;
}

}  // namespace detail

/// Truncated Taylor coefficients of every chart monomial at (u0,v0) in local
/// coordinates (X,Y), where (u,v) = (u0,v0) + X*(tu,tv) + Y*(nu,nv).
template <Field K>
std::vector<detail::Grid<elem_t<K>>> local_expansions(const K& k, const PointChart<elem_t<K>>& chart,
                                                      const elem_t<K>& tu, const elem_t<K>& tv,
                                                      const elem_t<K>& nu, const elem_t<K>& nv, int I, int J) {
  int max_a = 0, max_b = 0;
  for (auto [a, b] : chart.exps) {
    max_a = std::max(max_a, a);
    max_b = std::max(max_b, b);
  }
  // (u0 + tu X + nu Y)^a  and  (v0 + tv X + nv Y)^b
  auto pu = detail::linear_powers(k, chart.u0, tu, nu, max_a, I, J);
  auto pv = detail::linear_powers(k, chart.v0, tv, nv, max_b, I, J);
  std::vector<detail::Grid<elem_t<K>>> out;
  out.reserve(chart.exps.size());
  for (auto [a, b] : chart.exps) out.push_back(detail::grid_mul(k, pu[a], pv[b]));
  return out;
}

/// Local frame for a cusp scheme: X along the tangent, Y along a fixed
/// complementary axis.
template <Field K>
std::array<elem_t<K>, 4> cusp_frame(const K& k, const elem_t<K>& du, const elem_t<K>& dv) {
  if (!k.is_zero(du)) return {du, dv, k.zero(), k.one()};
  return {du, dv, k.one(), k.zero()};
}

template <Field K>
std::vector<std::vector<elem_t<K>>> generator_rows(const K& k, const SchemeGenerator<elem_t<K>>& g,
                                                   const FormSpace& space) {
  using E = elem_t<K>;
  std::vector<std::vector<E>> rows;
  const auto& pt = support(g);
  if (auto r = std::get_if<RulingDivisor<E>>(&g)) {
    // weight(col) * d^r/dT^r of T^e at t0, for the restriction's chart polynomial
    std::vector<E> weight;
    std::vector<int> expo;
    E t0;
    if (space.ambient == Ambient::cone) {
      for (const auto& m : cone_basis(space.d1)) {
        weight.push_back(k.mul(k.mul(power(k, pt.X[0], m.a), power(k, pt.X[1], m.e)), power(k, pt.X[2], m.b)));
        expo.push_back(m.g);
      }
      t0 = pt.X[3];
    } else {
      const bool fam0 = r->family == 0;
      const auto& fixed = fam0 ? pt.x : pt.y;
      const auto& moving = fam0 ? pt.y : pt.x;
      const bool chart0 = !k.is_zero(moving.s);
      t0 = chart0 ? moving.t : k.zero();
      for (int i = 0; i <= space.d1; ++i)
        for (int j = 0; j <= space.d2; ++j) {
          const int fi = fam0 ? i : j, fd = fam0 ? space.d1 : space.d2;  // fixed-side index/degree
          const int mi = fam0 ? j : i, md = fam0 ? space.d2 : space.d1;
          weight.push_back(k.mul(power(k, fixed.s, fd - fi), power(k, fixed.t, fi)));
          expo.push_back(chart0 ? mi : md - mi);
        }
    }
    for (int order = 0; order < r->multiplicity; ++order) {
      std::vector<E> row;
      for (std::size_t n = 0; n < weight.size(); ++n) {
        const int e = expo[n];
        if (e < order || k.is_zero(weight[n])) {
          row.push_back(k.zero());
          continue;
        }
        // binomial(e, order) * t0^(e-order)
        const E binom = k.from_int(static_cast<std::int64_t>(binomial(e, order)));
        row.push_back(k.mul(weight[n], k.mul(binom, power(k, t0, e - order))));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }
  auto chart = standard_chart(k, space.ambient, space.d1, space.d2, pt);
  if (std::holds_alternative<FatPoint<E>>(g)) {
    auto ex = local_expansions(k, chart, k.one(), k.zero(), k.zero(), k.one(), 2, 2);
    for (auto [i, j] : {std::pair{0, 0}, std::pair{1, 0}, std::pair{0, 1}}) {
      std::vector<E> row;
      for (const auto& gr : ex) row.push_back(gr[i][j]);
      rows.push_back(std::move(row));
    }
    return rows;
  }
  const auto& cs = std::get<CuspScheme<E>>(g);
  auto fr = cusp_frame(k, cs.du, cs.dv);
  auto ex = local_expansions(k, chart, fr[0], fr[1], fr[2], fr[3], 2 * cs.h + 1, 2);
  for (int i = 0; i <= 2 * cs.h; ++i) {
    std::vector<E> row;
    for (const auto& gr : ex) row.push_back(gr[i][0]);
    rows.push_back(std::move(row));
  }
  for (int i = 0; i <= cs.h; ++i) {
    std::vector<E> row;
    for (const auto& gr : ex) row.push_back(gr[i][1]);
    rows.push_back(std::move(row));
  }
  return rows;
}

/// One row per functional of Z, one column per coefficient of the form space.
template <Field K>
Matrix<elem_t<K>> condition_matrix(const K& k, const ZeroScheme<elem_t<K>>& z, const FormSpace& space) {
  require(space.d1 >= 0 && space.d2 >= 0, Errc::degree_negative, "degree must be non-negative");
  require(space.ambient == Ambient::smooth_quadric || space.d1 >= 1, Errc::degree_negative,
          "cone degree must be at least 1");
  require(z.ambient == space.ambient, Errc::invalid_argument, "scheme and form space live on different surfaces");
  const std::size_t n = static_cast<std::size_t>(space.dimension());
  Matrix<elem_t<K>> m(static_cast<std::size_t>(z.degree()), n, k.zero());
  std::size_t r = 0;
  for (const auto& g : z.generators)
    for (auto& row : generator_rows(k, g, space)) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
      ++r;
    }
  return m;
}

/// Coefficients c_{2h+1,0} and c_{0,2} of a form at a cusp scheme's point; the
/// form has an A_2h point there when both are nonzero and the scheme's own
/// functionals vanish.
template <Field K>
std::pair<elem_t<K>, elem_t<K>> cusp_normal_form(const K& k, const std::vector<elem_t<K>>& coeffs,
                                                 const CuspScheme<elem_t<K>>& cs, const FormSpace& space) {
  auto chart = standard_chart(k, space.ambient, space.d1, space.d2, cs.point);
  auto fr = cusp_frame(k, cs.du, cs.dv);
  auto ex = local_expansions(k, chart, fr[0], fr[1], fr[2], fr[3], 2 * cs.h + 2, 3);
  auto a = k.zero(), b = k.zero();
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    a = k.add(a, k.mul(coeffs[n], ex[n][2 * cs.h + 1][0]));
    b = k.add(b, k.mul(coeffs[n], ex[n][0][2]));
  }
  return {a, b};
}

template <Field K>
std::string to_string(const K& k, const SchemeGenerator<elem_t<K>>& g) {
  using E = elem_t<K>;
  const auto& p = support(g);
  if (auto r = std::get_if<RulingDivisor<E>>(&g)) {
    std::string line = p.ambient == Ambient::cone ? "cone" : (r->family == 0 ? "(1,0)" : "(0,1)");
    return "ruling:" + line + "@" + to_string(k, p) + "^" + std::to_string(r->multiplicity);
  }
  if (std::holds_alternative<FatPoint<E>>(g)) return "fat@" + to_string(k, p);
  const auto& c = std::get<CuspScheme<E>>(g);
  return "cusp:h=" + std::to_string(c.h) + "@" + to_string(k, p) + ";tangent=(" + k.to_string(c.du) + "," +
         k.to_string(c.dv) + ")";
}

}  // namespace quadcusp
