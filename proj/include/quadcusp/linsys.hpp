#pragma once

// Linear systems |I_Z(a,b)| on the quadric and |I_Z(d)| on the cone:
// h0/h1 by exact rank, seeded members, smoothness certificates, and the
// constructions of smooth tangent curves, cone curves and cuspidal curves.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quadcusp/zeroschemes.hpp"

namespace quadcusp {

template <class E>
struct LinearSystem {
  FormSpace space;
  ZeroScheme<E> scheme;
  std::vector<std::vector<E>> basis;
  int h0 = 0;
  int h1 = 0;
};

template <Field K>
LinearSystem<elem_t<K>> system(const K& k, const FormSpace& space, const ZeroScheme<elem_t<K>>& z) {
  auto m = condition_matrix(k, z, space);
  LinearSystem<elem_t<K>> s;
  s.space = space;
  s.scheme = z;
  s.basis = kernel(k, std::move(m));
  s.h0 = static_cast<int>(s.basis.size());
  s.h1 = s.h0 - (space.dimension() - z.degree());
  return s;
}

template <Field K>
bool h1_vanishing_probe(const K& k, const FormSpace& space, const ZeroScheme<elem_t<K>>& z) {
  return system(k, space, z).h1 == 0;
}

/// Seeded combination of the basis; never the zero form.
template <Field K>
std::vector<elem_t<K>> random_member(const K& k, const LinearSystem<elem_t<K>>& s, std::uint64_t seed) {
  require(s.h0 >= 1, Errc::empty_system, "the linear system is empty (h0 = 0)");
  std::mt19937_64 rng(seed);
  const std::size_t n = static_cast<std::size_t>(s.space.dimension());
  while (true) {
    std::vector<elem_t<K>> f(n, k.zero());
    for (const auto& b : s.basis) {
      auto c = s.h0 == 1 ? k.one() : k.random(rng);
      for (std::size_t i = 0; i < n; ++i) f[i] = k.add(f[i], k.mul(c, b[i]));
    }
    for (const auto& x : f)
      if (!k.is_zero(x)) return f;
  }
}

template <Field K>
BiForm<elem_t<K>> as_biform(const FormSpace& s, std::vector<elem_t<K>> c) {
  return {s.d1, s.d2, std::move(c)};
}

template <Field K>
ConeForm<elem_t<K>> as_coneform(const FormSpace& s, std::vector<elem_t<K>> c) {
  return {s.d1, std::move(c)};
}

// ---------------------------------------------------------------------------
// Smoothness certificates

struct ChartCertificate {
  std::string chart;
  std::string method;  // "resultant" (full chart) or "gcd" (a line at infinity) or "evaluation"
  int resultant_degree = -1;
  int attempts = 0;
  int points_found = 0;
};

struct SmoothnessReport {
  enum class Verdict { smooth, singular, inconclusive };
  Verdict verdict = Verdict::smooth;
  std::vector<std::string> charts_checked;
  std::vector<ChartCertificate> certificate;
  std::optional<std::string> witness;  // singular point, possibly over an extension
  int excised = 0;                     // singular points matched against the excision list
  bool vertex_on_curve = false;        // cone only
};

inline const char* verdict_name(SmoothnessReport::Verdict v) {
  switch (v) {
    case SmoothnessReport::Verdict::smooth: return "smooth";
    case SmoothnessReport::Verdict::singular: return "singular";
    case SmoothnessReport::Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace detail {

/// Chart polynomials f, f_u, f_v.
template <Field K>
std::vector<Bipoly<elem_t<K>>> jacobian_system(const K& k, const Bipoly<elem_t<K>>& f) {
  return {f, bp::partial_u(k, f), bp::partial_v(k, f)};
}

template <Field K>
std::vector<Poly<elem_t<K>>> restrict_v0(const K& k, const std::vector<Bipoly<elem_t<K>>>& sys) {
  // f(u,0), f_u(u,0), f_v(u,0)
  (void)k;
  std::vector<Poly<elem_t<K>>> out;
  for (const auto& g : sys) out.push_back(g.empty() ? Poly<elem_t<K>>{} : g[0]);
  return out;
}

template <Field K>
std::vector<Poly<elem_t<K>>> restrict_u0(const K& k, const std::vector<Bipoly<elem_t<K>>>& sys) {
  std::vector<Poly<elem_t<K>>> out;
  for (const auto& g : sys) out.push_back(bp::specialize_u(k, g, k.zero()));
  return out;
}

/// Checks a closure point against the excision list (rational points given
/// as chart coordinates).
inline bool excised_point(const ClosurePoint& p, const std::vector<std::pair<Fp, Fp>>& excise) {
  auto u = p.field.project(p.u), v = p.field.project(p.v);
  if (!u || !v) return false;
  for (auto [a, b] : excise)
    if (a == *u && b == *v) return true;
  return false;
}

template <Field K>
bool verify_witness(const ExtensionField& e, const K& k, const std::vector<Bipoly<elem_t<K>>>& sys,
                    const ClosurePoint& p) {
  for (const auto& g : sys)
    if (!e.is_zero(bp::eval(e, bp::lift_bipoly(e, k, g), p.u, p.v))) return false;
  return true;
}

/// Runs one full affine chart; returns false when a non-excised singular
/// point (or inconclusive result) ends the certificate.
inline bool check_affine_chart(const PrimeField& k, const std::string& name, const Bipoly<Fp>& f,
                               const std::vector<std::pair<Fp, Fp>>& excise, std::uint64_t seed,
                               SmoothnessReport& rep) {
  auto sys = jacobian_system(k, f);
  auto zs = affine_common_zeros(k, sys, seed);
  rep.charts_checked.push_back(name);
  rep.certificate.push_back({name, "resultant", zs.resultant_degree, zs.attempts, static_cast<int>(zs.points.size())});
  if (zs.status == ZeroSet::Status::inconclusive) {
    rep.verdict = SmoothnessReport::Verdict::inconclusive;
    return false;
  }
  if (zs.status == ZeroSet::Status::positive_dimensional) {
    rep.verdict = SmoothnessReport::Verdict::singular;
    if (!zs.witness.empty()) rep.witness = name + " " + zs.witness.front().to_string();
    return false;
  }
  for (const auto& p : zs.points) {
    if (excised_point(p, excise)) {
      ++rep.excised;
      continue;
    }
    require(verify_witness(p.field, k, sys, p), Errc::invalid_argument, "internal: singular witness failed substitution");
    rep.verdict = SmoothnessReport::Verdict::singular;
    rep.witness = name + " " + p.to_string();
    return false;
  }
  return true;
}

/// Singular points on a line of a chart: common roots of the restricted
/// Jacobian system. `on_u` says whether the free coordinate is u (line v = 0)
/// or v (line u = 0).
inline bool check_line(const PrimeField& k, const std::string& name, const std::vector<Poly<Fp>>& restricted,
                       bool free_is_u, const std::vector<std::pair<Fp, Fp>>& excise, SmoothnessReport& rep) {
  rep.charts_checked.push_back(name);
  auto [roots, all_zero] = common_roots(k, restricted);
  rep.certificate.push_back({name, "gcd", -1, 1, static_cast<int>(roots.size())});
  if (all_zero) {
    rep.verdict = SmoothnessReport::Verdict::singular;
    rep.witness = name + " (whole line)";
    return false;
  }
  for (auto& [e, r] : roots) {
    ClosurePoint p{e, free_is_u ? r : e.zero(), free_is_u ? e.zero() : r};
    if (excised_point(p, excise)) {
      ++rep.excised;
      continue;
    }
    rep.verdict = SmoothnessReport::Verdict::singular;
    rep.witness = name + " " + p.to_string();
    return false;
  }
  return true;
}

/// Over Q: only certified emptiness counts.
inline bool check_affine_chart(const RationalField& k, const std::string& name, const Bipoly<mpq_class>& f,
                               const std::vector<std::pair<mpq_class, mpq_class>>&, std::uint64_t seed,
                               SmoothnessReport& rep) {
  auto zs = affine_common_zeros(k, jacobian_system(k, f), seed);
  rep.charts_checked.push_back(name);
  rep.certificate.push_back({name, "resultant", zs.resultant_degree, zs.attempts, 0});
  if (zs.status != ZeroSet::Status::finite) {
    rep.verdict = SmoothnessReport::Verdict::inconclusive;
    return false;
  }
  return true;
}

inline bool check_line(const RationalField& k, const std::string& name, const std::vector<Poly<mpq_class>>& restricted,
                       bool, const std::vector<std::pair<mpq_class, mpq_class>>&, SmoothnessReport& rep) {
  rep.charts_checked.push_back(name);
  Poly<mpq_class> g;
  for (const auto& f : restricted) g = poly::gcd(k, g, f);
  rep.certificate.push_back({name, "gcd", -1, 1, 0});
  if (poly::degree(g) != 0) {
    rep.verdict = SmoothnessReport::Verdict::inconclusive;
    return false;
  }
  return true;
}

template <Field K>
using Excision = std::vector<std::pair<elem_t<K>, elem_t<K>>>;

}  // namespace detail

/// Smoothness of a curve on P^1 x P^1. Points in `excise` (rational points
/// of the quadric) are allowed to be singular.
template <Field K>
SmoothnessReport smoothness_certificate(const K& k, const BiForm<elem_t<K>>& f,
                                        const std::vector<SurfacePoint<elem_t<K>>>& excise = {},
                                        std::uint64_t seed = 1) {
  require(!is_zero_vector(k, f), Errc::zero_form, "smoothness of the zero form");
  require_separable(k, f.d1 + f.d2, "smoothness_certificate");
  SmoothnessReport rep;
  // Excised points in the coordinates of each chart.
  auto in_chart = [&](QuadricChart ch) {
    detail::Excision<K> out;
    for (const auto& p : excise) {
      const auto& xs = p.x;
      const auto& ys = p.y;
      auto cu = ch.xc == 0 ? xs.s : xs.t, nu = ch.xc == 0 ? xs.t : xs.s;
      auto cv = ch.yc == 0 ? ys.s : ys.t, nv = ch.yc == 0 ? ys.t : ys.s;
      if (k.is_zero(cu) || k.is_zero(cv)) continue;
      out.emplace_back(k.mul(nu, k.inv(cu)), k.mul(nv, k.inv(cv)));
    }
    return out;
  };
  if (!detail::check_affine_chart(k, "x0=1,y0=1", dehomogenize(k, f, QuadricChart{0, 0}), in_chart({0, 0}), seed, rep))
    return rep;
  // y0 = 0, x0 != 0: chart (x0=1, y1=1), line w = 0
  {
    auto sys = detail::jacobian_system(k, dehomogenize(k, f, QuadricChart{0, 1}));
    if (!detail::check_line(k, "x0=1,y1=1 on y0=0", detail::restrict_v0(k, sys), true, in_chart({0, 1}), rep))
      return rep;
  }
  // x0 = 0, y0 != 0: chart (x1=1, y0=1), line u = 0
  {
    auto sys = detail::jacobian_system(k, dehomogenize(k, f, QuadricChart{1, 0}));
    if (!detail::check_line(k, "x1=1,y0=1 on x0=0", detail::restrict_u0(k, sys), false, in_chart({1, 0}), rep))
      return rep;
  }
  // the corner ((0:1),(0:1))
  {
    auto sys = detail::jacobian_system(k, dehomogenize(k, f, QuadricChart{1, 1}));
    rep.charts_checked.push_back("x1=1,y1=1 at the corner");
    rep.certificate.push_back({"x1=1,y1=1 at the corner", "evaluation", -1, 1, 0});
    bool all = true;
    for (const auto& g : sys) all = all && k.is_zero(bp::eval(k, g, k.zero(), k.zero()));
    if (all) {
      auto corner = quadric_point(k, {k.zero(), k.one()}, {k.zero(), k.one()});
      bool ex = false;
      for (const auto& p : excise) ex = ex || same_point(k, p, corner);
      if (ex) {
        ++rep.excised;
      } else {
        rep.verdict = SmoothnessReport::Verdict::singular;
        rep.witness = "((0:1),(0:1))";
      }
    }
  }
  return rep;
}

/// Smoothness of a curve on the cone away from the vertex (charts X0 = 1 and
/// X2 = 1); whether the vertex lies on the curve is reported separately.
template <Field K>
SmoothnessReport smoothness_certificate(const K& k, const ConeForm<elem_t<K>>& f,
                                        const std::vector<SurfacePoint<elem_t<K>>>& excise = {},
                                        std::uint64_t seed = 1) {
  require(!is_zero_vector(k, f), Errc::zero_form, "smoothness of the zero form");
  require_separable(k, 2 * f.d, "smoothness_certificate");
  SmoothnessReport rep;
  rep.vertex_on_curve = k.is_zero(eval(k, f, std::array<elem_t<K>, 4>{k.zero(), k.zero(), k.zero(), k.one()}));
  auto in_chart = [&](int which) {
    detail::Excision<K> out;
    for (const auto& p : excise) {
      const auto& c = p.X[which == 0 ? 0 : 2];
      if (k.is_zero(c)) continue;
      out.emplace_back(k.mul(p.X[1], k.inv(c)), k.mul(p.X[3], k.inv(c)));
    }
    return out;
  };
  if (!detail::check_affine_chart(k, "X0=1", dehomogenize(k, f, ConeChart{0}), in_chart(0), seed, rep)) return rep;
  auto sys = detail::jacobian_system(k, dehomogenize(k, f, ConeChart{1}));
  detail::check_line(k, "X2=1 on X0=0", detail::restrict_u0(k, sys), false, in_chart(1), rep);
  return rep;
}

// ---------------------------------------------------------------------------
// Constructions

struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

template <class E>
struct Construction {
  FormSpace space;
  std::vector<E> member;
  LinearSystem<E> system;
  SmoothnessReport smoothness;
  std::vector<CheckItem> checks;
  std::vector<std::string> notes;
  std::uint64_t seed = 0;
  int attempts = 0;
  int target_genus = 0;
  bool experimental = false;

  bool check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c.passed;
    return false;
  }
};

constexpr int kDefaultRetries = 32;

/// A smooth curve of bidegree (d1,d2) meeting L = {x_o} x P^1 only at o (with
/// multiplicity d2) and L' = P^1 x {y_o'} only at o' (multiplicity d1).
template <Field K>
Construction<elem_t<K>> construct_smooth_tangent_curve(const K& k, int d1, int d2, const SurfacePoint<elem_t<K>>& o,
                                                       const SurfacePoint<elem_t<K>>& o2, std::uint64_t seed,
                                                       int retries = kDefaultRetries) {
  require(1 <= d1 && d1 <= d2, Errc::invalid_argument, "need 1 <= d1 <= d2");
  require(!same_point(k, o.y, o2.y), Errc::invalid_argument, "o must differ from L cap L'");
  require(!same_point(k, o2.x, o.x), Errc::invalid_argument, "o' must differ from L cap L'");
  const FormSpace space{Ambient::smooth_quadric, d1, d2};
  auto z = make_scheme(k, Ambient::smooth_quadric,
                       {ruling_divisor(k, 0, o.x, o, d2), ruling_divisor(k, 1, o2.y, o2, d1)});
  Construction<elem_t<K>> out;
  out.space = space;
  out.system = system(k, space, z);
  out.target_genus = (d1 - 1) * (d2 - 1);
  for (int attempt = 0; attempt < retries; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    auto member = random_member(k, out.system, s);
    auto f = as_biform<K>(space, member);
    auto rl = restrict_to_fibre_x(k, f, o.x), rl2 = restrict_to_fibre_y(k, f, o2.y);
    if (is_zero_form(k, rl) || is_zero_form(k, rl2)) continue;
    const int m1 = vanishing_order(k, rl, o.y), m2 = vanishing_order(k, rl2, o2.x);
    if (m1 != d2 || m2 != d1) continue;
    auto rep = smoothness_certificate(k, f, {}, s);
    out.attempts = attempt + 1;
    if (rep.verdict != SmoothnessReport::Verdict::smooth) continue;
    out.member = std::move(member);
    out.smoothness = rep;
    out.seed = s;
    out.checks.push_back({"h0", out.system.h0 == d1 * d2 + 1, "h0 = " + std::to_string(out.system.h0)});
    out.checks.push_back({"smooth", true, "certificate over all four charts"});
    out.checks.push_back({"tangency_L", true, "vanishing order " + std::to_string(m1) + " at o"});
    out.checks.push_back({"tangency_L'", true, "vanishing order " + std::to_string(m2) + " at o'"});
    return out;
  }
  fail(Errc::retries_exhausted, "no smooth member with exact tangency in " + std::to_string(retries) + " draws");
}

/// A smooth curve of degree d on the cone meeting the ruling through p only
/// at p, and missing the vertex.
template <Field K>
Construction<elem_t<K>> construct_cone_curve(const K& k, int d, const SurfacePoint<elem_t<K>>& p, std::uint64_t seed,
                                             int retries = kDefaultRetries) {
  require(d >= 2, Errc::invalid_argument, "cone construction needs d >= 2");
  require(!p.vertex, Errc::vertex_support, "p must not be the vertex");
  const FormSpace space{Ambient::cone, d, 0};
  auto z = make_scheme(k, Ambient::cone, {cone_ruling_divisor(k, p, d)});
  Construction<elem_t<K>> out;
  out.space = space;
  out.system = system(k, space, z);
  out.target_genus = (d - 1) * (d - 1);
  for (int attempt = 0; attempt < retries; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    auto member = random_member(k, out.system, s);
    auto g = as_coneform<K>(space, member);
    auto restr = restrict_to_ruling(k, g, p);
    if (is_zero_form(k, restr)) continue;
    const int m = vanishing_order(k, restr, ruling_parameter(k, p));
    auto rep = smoothness_certificate(k, g, {}, s);
    out.attempts = attempt + 1;
    if (m != d || rep.vertex_on_curve || rep.verdict != SmoothnessReport::Verdict::smooth) continue;
    out.member = std::move(member);
    out.smoothness = rep;
    out.seed = s;
    out.checks.push_back({"vertex_avoided", true, "G(0:0:0:1) != 0"});
    out.checks.push_back({"single_ruling_point", true, "restriction has a single point of multiplicity " + std::to_string(m)});
    out.checks.push_back({"smooth", true, "charts X0=1 and X2=1"});
    return out;
  }
  fail(Errc::retries_exhausted, "no acceptable cone curve in " + std::to_string(retries) + " draws");
}

/// The layout Z1 u Z2 u A u B: Z1 = t2*o1 on L = {(1:0)} x P^1, Z2 = t1*o2
/// on R = P^1 x {(1:0)}, and cusp schemes of orders hA, hB at seeded random
/// points off L u R with seeded random tangents.
template <Field K>
ZeroScheme<elem_t<K>> cuspidal_layout(const K& k, int t1, int t2, int hA, int hB, std::uint64_t seed,
                                      std::vector<CuspScheme<elem_t<K>>>* cusps = nullptr) {
  std::mt19937_64 rng(seed);
  auto nonzero = [&] {
    while (true) {
      auto a = k.random(rng);
      if (!k.is_zero(a)) return a;
    }
  };
  const P1Point<elem_t<K>> base{k.one(), k.zero()};
  auto o1 = quadric_point(k, base, P1Point<elem_t<K>>{k.one(), nonzero()});
  auto o2 = quadric_point(k, P1Point<elem_t<K>>{k.one(), nonzero()}, base);
  auto qa = quadric_point(k, P1Point<elem_t<K>>{k.one(), nonzero()}, P1Point<elem_t<K>>{k.one(), nonzero()});
  auto qb = qa;
  while (same_point(k, qb, qa)) qb = quadric_point(k, P1Point<elem_t<K>>{k.one(), nonzero()}, P1Point<elem_t<K>>{k.one(), nonzero()});
  auto ca = cusp_scheme(k, qa, nonzero(), k.random(rng), hA);
  auto cb = cusp_scheme(k, qb, nonzero(), k.random(rng), hB);
  if (cusps) *cusps = {ca, cb};
  return make_scheme(k, Ambient::smooth_quadric,
                     {ruling_divisor(k, 0, base, o1, t2), ruling_divisor(k, 1, base, o2, t1), ca, cb});
}

inline bool below_paper_threshold(int d1, int d2) { return d1 < 16 || d2 < 16; }

/// A curve of bidegree (d1,d2) with an A_2alpha and an A_2beta point, smooth
/// elsewhere, in the layout of cuspidal_layout.
template <Field K>
Construction<elem_t<K>> construct_cuspidal_curve(const K& k, int d1, int d2, int alpha, int beta, std::uint64_t seed,
                                                 int retries = kDefaultRetries) {
  require(alpha + beta > 0, Errc::invalid_argument, "kappa = 0 is the smooth tangent case");
  require(alpha >= beta && beta >= 1, Errc::invalid_argument, "need alpha >= beta >= 1");
  require(1 <= d1 && d1 <= d2, Errc::invalid_argument, "need d1 <= d2");
  const int c = (d1 - 1) * (d1 - 2) / 2;
  const FormSpace space{Ambient::smooth_quadric, d1, d2};
  Construction<elem_t<K>> out;
  out.space = space;
  out.experimental = below_paper_threshold(d1, d2) || 3 * alpha + 2 > c;
  if (3 * alpha + 2 > c) out.notes.push_back("3*max(alpha,beta)+2 exceeds C(d1-1,2); no guarantee applies");
  out.target_genus = (d1 - 1) * (d2 - 1) - alpha - beta;
  out.notes.push_back("irreducibility assumed (connected with unibranch singular points), not machine-checked");
  for (int attempt = 0; attempt < retries; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    std::vector<CuspScheme<elem_t<K>>> cusps;
    auto z = cuspidal_layout(k, d1, d2, alpha, beta, s, &cusps);
    auto sys = system(k, space, z);
    out.attempts = attempt + 1;
    if (sys.h1 != 0 || sys.h0 == 0) continue;
    auto member = random_member(k, sys, s);
    std::vector<std::pair<elem_t<K>, elem_t<K>>> nf;
    bool normal = true;
    for (const auto& cs : cusps) {
      nf.push_back(cusp_normal_form(k, member, cs, space));
      normal = normal && !k.is_zero(nf.back().first) && !k.is_zero(nf.back().second);
    }
    if (!normal) continue;
    auto f = as_biform<K>(space, member);
    auto rep = smoothness_certificate(k, f, {cusps[0].point, cusps[1].point}, s);
    if (rep.verdict != SmoothnessReport::Verdict::smooth || rep.excised != 2) continue;
    out.system = std::move(sys);
    out.member = std::move(member);
    out.smoothness = rep;
    out.seed = s;
    out.checks.push_back({"h1_zero", true, "h1 = 0 for the full scheme"});
    out.checks.push_back({"smooth_off_cusps", true, "certificate with the two cusp points excised"});
    for (std::size_t i = 0; i < cusps.size(); ++i)
      out.checks.push_back({i == 0 ? "cusp_normal_form_A" : "cusp_normal_form_B", true,
                            "A" + std::to_string(2 * cusps[i].h) + " at " + to_string(k, cusps[i].point) +
                                ": c_{2h+1,0} = " + k.to_string(nf[i].first) + ", c_{0,2} = " + k.to_string(nf[i].second)});
    for (const auto& cs : cusps) out.notes.push_back("cusp " + to_string(k, SchemeGenerator<elem_t<K>>{cs}));
    return out;
  }
  fail(Errc::retries_exhausted, "no cuspidal member passed certification in " + std::to_string(retries) + " draws");
}

}  // namespace quadcusp
