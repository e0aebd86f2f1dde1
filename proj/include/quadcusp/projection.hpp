#pragma once

// Injectivity of linear projections of curves on the quadric and the cone:
// outer projections from surface points, inner projections from curve
// points (the sets A and B), finite-field censuses, and a checker for
// parametrized plane curves.

#include <optional>
#include <string>
#include <vector>

#include "quadcusp/linsys.hpp"

namespace quadcusp {

struct RulingRecord {
  std::string ruling;  // "(1,0)", "(0,1)" or "cone"
  std::string restriction;
  int distinct = 0;
  std::vector<int> profile;
  int multiplicity_at_point = -1;  // inner projections only
};

struct ProjectionVerdict {
  bool injective = false;
  std::vector<RulingRecord> rulings;
  std::optional<std::pair<std::string, std::string>> failure_witness;
  std::vector<std::string> warnings;
};

namespace detail {

template <Field K>
RulingRecord ruling_record(const K& k, const std::string& name, const BinaryForm<elem_t<K>>& r, const char* s,
                           const char* t) {
  auto prof = distinct_root_count(k, r);
  return {name, to_string(k, r, s, t), prof.count, prof.multiplicities, -1};
}

/// Two distinct roots of a binary form over F_p, possibly conjugate over an
/// extension, as strings of P^1 points.
inline std::optional<std::pair<std::string, std::string>> two_roots(const PrimeField& k, const BinaryForm<Fp>& r) {
  std::vector<std::string> pts;
  auto a = affine_part(k, r);
  if (r.degree > poly::degree(a)) pts.push_back("(0:1)");
  if (poly::degree(a) > 0) {
    for (auto& fac : poly::factor(k, a)) {
      ExtensionField e(k, fac.poly);
      auto root = e.generator();
      std::string where = e.degree() > 1 ? " where a is a root of " + poly::to_string(k, fac.poly, "a") : "";
      pts.push_back("(1:" + e.to_string(root) + ")" + where);
      if (e.degree() > 1) {
        // the Frobenius conjugate root^p
        Fq conj = e.one();
        for (std::uint64_t i = 0; i < k.prime(); ++i) conj = e.mul(conj, root);
        pts.push_back("(1:" + e.to_string(conj) + ")" + where);
      }
      if (pts.size() >= 2) break;
    }
  }
  if (pts.size() < 2) return std::nullopt;
  return std::pair{pts[0], pts[1]};
}

}  // namespace detail

/// Projection of a curve F = 0 of bidegree (d1,d2) from q on the quadric,
/// q off the curve: injective iff both rulings through q meet the curve in
/// a single point.
template <Field K>
ProjectionVerdict outer_injectivity_quadric(const K& k, const BiForm<elem_t<K>>& f, const SurfacePoint<elem_t<K>>& q) {
  require(!is_zero_vector(k, f), Errc::zero_form, "zero curve");
  require(!k.is_zero(eval(k, f, q)), Errc::center_on_curve, "the center lies on the curve");
  require_separable(k, std::max(f.d1, f.d2), "outer_injectivity_quadric");
  ProjectionVerdict v;
  v.warnings.push_back("irreducibility_assumed");
  auto r1 = restrict_to_fibre_x(k, f, q.x);
  auto r2 = restrict_to_fibre_y(k, f, q.y);
  v.rulings.push_back(detail::ruling_record(k, "(1,0)", r1, "y0", "y1"));
  v.rulings.push_back(detail::ruling_record(k, "(0,1)", r2, "x0", "x1"));
  v.injective = v.rulings[0].distinct == 1 && v.rulings[1].distinct == 1;
  if constexpr (is_prime_field_v<K>) {
    if (!v.injective) {
      const bool first = v.rulings[0].distinct > 1;
      auto w = detail::two_roots(k, first ? r1 : r2);
      if (w) {
        const std::string fixed = first ? "(" + k.to_string(q.x.s) + ":" + k.to_string(q.x.t) + ")"
                                        : "(" + k.to_string(q.y.s) + ":" + k.to_string(q.y.t) + ")";
        auto pt = [&](const std::string& moving) { return first ? "(" + fixed + "," + moving + ")" : "(" + moving + "," + fixed + ")"; };
        v.failure_witness = std::pair{pt(w->first), pt(w->second)};
      }
    }
  }
  return v;
}

/// Projection of a cone curve from a non-vertex point q of the cone off the
/// curve: injective iff the ruling through q meets the curve in one point.
template <Field K>
ProjectionVerdict outer_injectivity_cone(const K& k, const ConeForm<elem_t<K>>& g, const SurfacePoint<elem_t<K>>& q) {
  require(!is_zero_vector(k, g), Errc::zero_form, "zero curve");
  require(!q.vertex, Errc::center_is_vertex, "the center is the cone vertex");
  require(!k.is_zero(eval(k, g, q)), Errc::center_on_curve, "the center lies on the curve");
  require_separable(k, g.d, "outer_injectivity_cone");
  ProjectionVerdict v;
  v.warnings.push_back("irreducibility_assumed");
  auto r = restrict_to_ruling(k, g, q);
  v.rulings.push_back(detail::ruling_record(k, "cone", r, "lambda", "mu"));
  v.injective = v.rulings[0].distinct == 1;
  if constexpr (is_prime_field_v<K>) {
    if (!v.injective) {
      auto w = detail::two_roots(k, r);
      if (w) v.failure_witness = std::pair{"ruling point " + w->first, "ruling point " + w->second};
    }
  }
  return v;
}

struct InnerVerdict {
  bool inA = false;
  bool inB = false;
  std::vector<RulingRecord> rulings;
};

namespace detail {

/// A ruling through o meeting X in n points (o counted once) with
/// intersection multiplicity m at o: punctured injectivity needs n <= 2; the
/// extended map also needs the ruling not to be the tangent line at o while
/// carrying another point (m >= 2 and n >= 2).
inline void inner_decide(InnerVerdict& v) {
  v.inA = true;
  v.inB = true;
  for (const auto& r : v.rulings) {
    if (r.distinct > 2) v.inA = false;
    if (r.distinct >= 2 && r.multiplicity_at_point >= 2) v.inB = false;
  }
  v.inB = v.inB && v.inA;
}

template <Field K, class Form>
void require_smooth_at(const K& k, const Form& f, const std::vector<std::pair<int, int>>& exps, const elem_t<K>& u0,
                       const elem_t<K>& v0) {
  auto g = dehomogenize(k, f.c, exps);
  auto fu = bp::eval(k, bp::partial_u(k, g), u0, v0), fv = bp::eval(k, bp::partial_v(k, g), u0, v0);
  require(!(k.is_zero(fu) && k.is_zero(fv)), Errc::singular_point, "the point is singular on the curve");
}

}  // namespace detail

template <Field K>
InnerVerdict inner_membership_quadric(const K& k, const BiForm<elem_t<K>>& f, const SurfacePoint<elem_t<K>>& o) {
  require(!(f.d1 == 1 && f.d2 == 1), Errc::degenerate_bidegree, "bidegree (1,1) is excluded");
  require(!is_zero_vector(k, f), Errc::zero_form, "zero curve");
  require(k.is_zero(eval(k, f, o)), Errc::point_not_on_curve, "o is not on the curve");
  require_separable(k, std::max(f.d1, f.d2), "inner_membership_quadric");
  auto chart = standard_chart(k, Ambient::smooth_quadric, f.d1, f.d2, o);
  detail::require_smooth_at(k, f, chart.exps, chart.u0, chart.v0);
  InnerVerdict v;
  auto r1 = restrict_to_fibre_x(k, f, o.x);
  auto r2 = restrict_to_fibre_y(k, f, o.y);
  v.rulings.push_back(detail::ruling_record(k, "(1,0)", r1, "y0", "y1"));
  v.rulings.back().multiplicity_at_point = vanishing_order(k, r1, o.y);
  v.rulings.push_back(detail::ruling_record(k, "(0,1)", r2, "x0", "x1"));
  v.rulings.back().multiplicity_at_point = vanishing_order(k, r2, o.x);
  detail::inner_decide(v);
  return v;
}

template <Field K>
InnerVerdict inner_membership_cone(const K& k, const ConeForm<elem_t<K>>& g, const SurfacePoint<elem_t<K>>& o) {
  require(!o.vertex, Errc::center_is_vertex, "o is the cone vertex");
  require(!is_zero_vector(k, g), Errc::zero_form, "zero curve");
  require(k.is_zero(eval(k, g, o)), Errc::point_not_on_curve, "o is not on the curve");
  require_separable(k, g.d, "inner_membership_cone");
  auto chart = standard_chart(k, Ambient::cone, g.d, 0, o);
  detail::require_smooth_at(k, g, chart.exps, chart.u0, chart.v0);
  InnerVerdict v;
  auto r = restrict_to_ruling(k, g, o);
  v.rulings.push_back(detail::ruling_record(k, "cone", r, "lambda", "mu"));
  v.rulings.back().multiplicity_at_point = vanishing_order(k, r, ruling_parameter(k, o));
  detail::inner_decide(v);
  return v;
}

// ---------------------------------------------------------------------------
// Censuses over F_{p^j}

struct InnerSets {
  std::uint64_t p = 0;
  int extension_degree = 1;
  int points_on_curve = 0;  // smooth points over F_{p^j}
  int singular_points = 0;
  std::vector<std::string> smooth_members, A_members, B_members;
};

namespace detail {

template <Field K>
std::vector<P1Point<elem_t<K>>> p1_points(const K& k) {
  std::vector<P1Point<elem_t<K>>> out;
  for (std::uint64_t i = 0; i < k.order(); ++i) out.push_back({k.one(), k.element(i)});
  out.push_back({k.zero(), k.one()});
  return out;
}

template <Field K>
bool smooth_at(const K& k, const std::vector<elem_t<K>>& c, const std::vector<std::pair<int, int>>& exps,
               const elem_t<K>& u0, const elem_t<K>& v0) {
  auto g = dehomogenize(k, c, exps);
  return !(k.is_zero(bp::eval(k, bp::partial_u(k, g), u0, v0)) && k.is_zero(bp::eval(k, bp::partial_v(k, g), u0, v0)));
}

template <Field K>
void census_quadric_over(const K& k, const BiForm<elem_t<K>>& f, InnerSets& out) {
  auto pts = p1_points(k);
  for (const auto& x : pts)
    for (const auto& y : pts) {
      auto o = quadric_point(k, x, y);
      if (!k.is_zero(eval(k, f, o))) continue;
      auto chart = standard_chart(k, Ambient::smooth_quadric, f.d1, f.d2, o);
      if (!smooth_at(k, f.c, chart.exps, chart.u0, chart.v0)) {
        ++out.singular_points;
        continue;
      }
      ++out.points_on_curve;
      out.smooth_members.push_back(to_string(k, o));
      auto v = inner_membership_quadric(k, f, o);
      if (v.inA) out.A_members.push_back(to_string(k, o));
      if (v.inB) out.B_members.push_back(to_string(k, o));
    }
}

template <Field K>
void census_cone_over(const K& k, const ConeForm<elem_t<K>>& g, InnerSets& out) {
  std::vector<SurfacePoint<elem_t<K>>> pts;
  for (std::uint64_t i = 0; i < k.order(); ++i)
    for (std::uint64_t j = 0; j < k.order(); ++j) {
      auto s = k.element(i), v = k.element(j);
      pts.push_back(cone_point(k, {k.one(), s, k.mul(s, s), v}));
    }
  for (std::uint64_t j = 0; j < k.order(); ++j) pts.push_back(cone_point(k, {k.zero(), k.zero(), k.one(), k.element(j)}));
  for (const auto& o : pts) {
    if (!k.is_zero(eval(k, g, o))) continue;
    auto chart = standard_chart(k, Ambient::cone, g.d, 0, o);
    if (!smooth_at(k, g.c, chart.exps, chart.u0, chart.v0)) {
      ++out.singular_points;
      continue;
    }
    ++out.points_on_curve;
    out.smooth_members.push_back(to_string(k, o));
    auto v = inner_membership_cone(k, g, o);
    if (v.inA) out.A_members.push_back(to_string(k, o));
    if (v.inB) out.B_members.push_back(to_string(k, o));
  }
}

}  // namespace detail

/// Classifies every smooth F_{p^j}-point (j <= extension_cap) of the curve;
/// one record per j. Finite-field evidence only.
template <class Form>
std::vector<InnerSets> census_inner_sets(const PrimeField& k, const Form& f, int extension_cap = 1) {
  require(extension_cap >= 1, Errc::invalid_argument, "extension cap must be at least 1");
  std::vector<InnerSets> out;
  for (int j = 1; j <= extension_cap; ++j) {
    InnerSets s;
    s.p = k.prime();
    s.extension_degree = j;
    if (j == 1) {
      if constexpr (std::is_same_v<Form, BiForm<Fp>>) detail::census_quadric_over(k, f, s);
      else detail::census_cone_over(k, f, s);
    } else {
      ExtensionField e(k, poly::random_irreducible(k, j, 7));
      auto lf = lift_form(e, k, f);
      if constexpr (std::is_same_v<Form, BiForm<Fp>>) detail::census_quadric_over(e, lf, s);
      else detail::census_cone_over(e, lf, s);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parametrized plane curves

struct ClosureP1xP1 {
  ExtensionField field;
  P1Point<Fq> x, y;

  std::string to_string() const {
    auto p = [&](const P1Point<Fq>& q) { return "(" + field.to_string(q.s) + ":" + field.to_string(q.t) + ")"; };
    std::string s = "(" + p(x) + "," + p(y) + ")";
    if (field.degree() > 1) s += " where a is a root of " + poly::to_string(field.base(), field.modulus(), "a");
    return s;
  }
};

struct P1xP1ZeroSet {
  bool positive_dimensional = false;
  bool inconclusive = false;
  std::vector<ClosureP1xP1> points;
};

/// Common zeros on P^1 x P^1 of bihomogeneous forms over F_p, by pieces:
/// the chart x0 = y0 = 1, the lines y0 = 0 and x0 = 0, and the corner.
inline P1xP1ZeroSet p1xp1_common_zeros(const PrimeField& k, const std::vector<BiForm<Fp>>& forms, std::uint64_t seed = 1) {
  P1xP1ZeroSet out;
  std::vector<Bipoly<Fp>> affine;
  for (const auto& f : forms) affine.push_back(dehomogenize(k, f, QuadricChart{0, 0}));
  auto zs = affine_common_zeros(k, affine, seed);
  if (zs.status != ZeroSet::Status::finite) {
    out.positive_dimensional = zs.status == ZeroSet::Status::positive_dimensional;
    out.inconclusive = zs.status == ZeroSet::Status::inconclusive;
    return out;
  }
  for (const auto& p : zs.points)
    out.points.push_back({p.field, {p.field.one(), p.u}, {p.field.one(), p.v}});
  // y0 = 0: chart (x0=1, y1=1) on w = 0
  {
    std::vector<Poly<Fp>> line;
    for (const auto& f : forms) {
      auto g = dehomogenize(k, f, QuadricChart{0, 1});
      line.push_back(g.empty() ? Poly<Fp>{} : g[0]);
    }
    auto [roots, all] = common_roots(k, line);
    if (all) {
      out.positive_dimensional = true;
      return out;
    }
    for (auto& [e, r] : roots) out.points.push_back({e, {e.one(), r}, {e.zero(), e.one()}});
  }
  // x0 = 0: chart (x1=1, y0=1) on u = 0
  {
    std::vector<Poly<Fp>> line;
    for (const auto& f : forms) line.push_back(bp::specialize_u(k, dehomogenize(k, f, QuadricChart{1, 0}), k.zero()));
    auto [roots, all] = common_roots(k, line);
    if (all) {
      out.positive_dimensional = true;
      return out;
    }
    for (auto& [e, r] : roots) out.points.push_back({e, {e.zero(), e.one()}, {e.one(), r}});
  }
  {
    auto corner = quadric_point(k, {k.zero(), k.one()}, {k.zero(), k.one()});
    bool all = true;
    for (const auto& f : forms) all = all && k.is_zero(eval(k, f, corner));
    if (all) {
      ExtensionField e(k, {k.zero(), k.one()});
      out.points.push_back({e, {e.zero(), e.one()}, {e.zero(), e.one()}});
    }
  }
  return out;
}

struct ParametrizedVerdict {
  bool injective = false;
  bool positive_dimensional = false;
  std::vector<std::string> double_points;  // off-diagonal zeros; (x, y) and (y, x) both appear
  std::vector<std::string> cusp_params;
};

/// (phi_i(x) phi_j(y) - phi_j(x) phi_i(y)) / (x0 y1 - x1 y0) as a form of
/// bidegree (n-1, n-1).
inline BiForm<Fp> divided_minor(const PrimeField& k, const BinaryForm<Fp>& a, const BinaryForm<Fp>& b) {
  const int n = a.degree;
  // D(s, v) in the chart x0 = y0 = 1: coefficient of s^i v^j, with s = x1, v = y1
  Bipoly<Fp> d;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) bp::add_term(k, d, i, j, k.sub(k.mul(a.c[i], b.c[j]), k.mul(b.c[i], a.c[j])));
  d = bp::trim(k, d);
  // divide by (v - s): synthetic division in v over F_p[s]
  BiForm<Fp> q = zero_biform(k, n - 1, n - 1);
  if (d.empty()) return q;
  Bipoly<Fp> quot(d.size() > 1 ? d.size() - 1 : 0);
  Poly<Fp> carry;
  const Poly<Fp> s{k.zero(), k.one()};
  for (std::size_t j = d.size(); j-- > 1;) {
    carry = poly::add(k, d[j], poly::mul(k, s, carry));
    quot[j - 1] = carry;
  }
  auto remainder = poly::add(k, d[0], poly::mul(k, s, carry));
  require(remainder.empty(), Errc::invalid_argument, "internal: minor not divisible by the diagonal");
  for (std::size_t j = 0; j < quot.size(); ++j)
    for (std::size_t i = 0; i < quot[j].size(); ++i) q.c[q.index(static_cast<int>(i), static_cast<int>(j))] = quot[j][i];
  return q;
}

/// Injectivity of t -> (phi0(t) : phi1(t) : phi2(t)) on P^1: common zeros of
/// the divided minors off the diagonal are double points, on the diagonal
/// they are cusp parameters.
inline ParametrizedVerdict parametrized_injectivity(const PrimeField& k, const std::array<BinaryForm<Fp>, 3>& phi,
                                                    std::uint64_t seed = 1) {
  const int n = phi[0].degree;
  require(n >= 2 && phi[1].degree == n && phi[2].degree == n, Errc::invalid_argument,
          "parametrization needs three forms of a common degree n >= 2");
  require_separable(k, 2 * n, "parametrized_injectivity");
  {
    Poly<Fp> g;
    bool infinity = true;
    for (const auto& f : phi) {
      g = poly::gcd(k, g, affine_part(k, f));
      infinity = infinity && k.is_zero(f.c[n]);
    }
    require(poly::degree(g) <= 0 && !g.empty() && !infinity, Errc::not_coprime, "the forms have a common root");
  }
  std::vector<BiForm<Fp>> minors{divided_minor(k, phi[0], phi[1]), divided_minor(k, phi[0], phi[2]),
                                 divided_minor(k, phi[1], phi[2])};
  auto zs = p1xp1_common_zeros(k, minors, seed);
  ParametrizedVerdict v;
  if (zs.positive_dimensional || zs.inconclusive) {
    v.positive_dimensional = zs.positive_dimensional;
    v.injective = false;
    return v;
  }
  for (const auto& p : zs.points) {
    const auto& e = p.field;
    const bool diagonal = e.equal(e.mul(p.x.s, p.y.t), e.mul(p.x.t, p.y.s));
    if (diagonal)
      v.cusp_params.push_back(p.to_string());
    else
      v.double_points.push_back(p.to_string());
  }
  v.injective = v.double_points.empty();
  return v;
}

}  // namespace quadcusp
