#include <gtest/gtest.h>

#include <random>

#include "quadcusp/zeroschemes.hpp"

using namespace quadcusp;

namespace {

using Scheme = ZeroScheme<Fp>;
using Gen = SchemeGenerator<Fp>;

SurfacePoint<Fp> qp(const PrimeField& k, long a, long b, long c, long d) {
  return quadric_point(k, P1Point<Fp>{k.from_int(a), k.from_int(b)}, P1Point<Fp>{k.from_int(c), k.from_int(d)});
}

bool annihilates(const PrimeField& k, const Matrix<Fp>& m, const std::vector<Fp>& f) {
  for (const auto& x : apply(k, m, f))
    if (!k.is_zero(x)) return false;
  return true;
}

// all vectors of length n over F_p, by index
std::vector<Fp> nth_vector(const PrimeField& k, std::uint64_t idx, std::size_t n) {
  std::vector<Fp> f(n);
  for (auto& x : f) {
    x = k.from_int(static_cast<long>(idx % k.prime()));
    idx /= k.prime();
  }
  return f;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// the four partials of a bihomogeneous form, evaluated at a point
std::array<Fp, 4> gradient(const PrimeField& k, const BiForm<Fp>& f, const SurfacePoint<Fp>& p) {
  std::array<Fp, 4> g{k.zero(), k.zero(), k.zero(), k.zero()};
  for (int i = 0; i <= f.d1; ++i)
    for (int j = 0; j <= f.d2; ++j) {
      const Fp c = f.c[f.index(i, j)];
      const int e[4] = {f.d1 - i, i, f.d2 - j, j};
      const Fp base[4] = {p.x.s, p.x.t, p.y.s, p.y.t};
      for (int v = 0; v < 4; ++v) {
        if (e[v] == 0) continue;
        Fp term = k.mul(c, k.from_int(e[v]));
        for (int w = 0; w < 4; ++w) term = k.mul(term, power(k, base[w], w == v ? e[w] - 1 : e[w]));
        g[v] = k.add(g[v], term);
      }
    }
  return g;
}

std::size_t stacked_rank(const PrimeField& k, const Matrix<Fp>& a, const Matrix<Fp>& b) {
  Matrix<Fp> m(a.rows + b.rows, a.cols, k.zero());
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j) m(a.rows + i, j) = b(i, j);
  return rank(k, m);
}

// coefficients of a polynomial in chart coordinates (u,v) = (x1/x0, y1/y0) as a (d1,d2) form
BiForm<Fp> from_chart(const PrimeField& k, int d1, int d2, const Bipoly<Fp>& f) {
  auto F = zero_biform(k, d1, d2);
  for (std::size_t j = 0; j < f.size(); ++j)
    for (std::size_t i = 0; i < f[j].size(); ++i) F.c[F.index(static_cast<int>(i), static_cast<int>(j))] = f[j][i];
  return F;
}

// Y^2 - X^(2h+1) with u = a + du X, v = b + dv X + Y (du != 0)
Bipoly<Fp> cusp_model(const PrimeField& k, Fp a, Fp b, Fp du, Fp dv, int h) {
  const Fp idu = k.inv(du);
  Poly<Fp> X{k.mul(k.neg(a), idu), idu};  // (u - a)/du
  Bipoly<Fp> Y;                            // v - b - dv (u - a)/du
  bp::add_term(k, Y, 0, 0, k.neg(b));
  bp::add_term(k, Y, 0, 1, k.one());
  for (std::size_t i = 0; i < X.size(); ++i) bp::add_term(k, Y, static_cast<int>(i), 0, k.neg(k.mul(dv, X[i])));
  auto f = bp::mul(k, Y, Y);
  Poly<Fp> xp{k.one()};
  for (int e = 0; e < 2 * h + 1; ++e) xp = poly::mul(k, xp, X);
  for (std::size_t i = 0; i < xp.size(); ++i) bp::add_term(k, f, static_cast<int>(i), 0, k.neg(xp[i]));
  return f;
}

}  // namespace

TEST(RulingDivisor, TripleRootOnLine) {
  PrimeField k(101);
  auto o = qp(k, 1, 0, 0, 1);
  auto z = make_scheme(k, Ambient::smooth_quadric, {Gen{ruling_divisor(k, 0, P1Point<Fp>{k.one(), k.zero()}, o, 3)}});
  EXPECT_EQ(z.degree(), 3);
  const FormSpace sp{Ambient::smooth_quadric, 1, 3};
  auto m = condition_matrix(k, z, sp);
  EXPECT_EQ(m.rows, 3u);
  auto ker = kernel(k, m);
  // 4 forms vanish on L, plus s^3 on L itself
  EXPECT_EQ(ker.size(), 5u);
  for (const auto& f : ker) {
    auto r = restrict_to_fibre_x(k, BiForm<Fp>{1, 3, f}, o.x);
    if (!is_zero_form(k, r)) EXPECT_GE(vanishing_order(k, r, o.y), 3);
  }
}

// exhaustive over F_5: the functionals hold iff the restriction vanishes to order m at o
TEST(RulingDivisor, MatchesVanishingOrderExhaustively) {
  PrimeField k(5);
  const FormSpace sp{Ambient::smooth_quadric, 1, 2};
  const std::uint64_t total = ipow(5, 6);
  for (auto o : {qp(k, 1, 2, 1, 3), qp(k, 0, 1, 1, 4), qp(k, 1, 1, 0, 1)})
    for (int family = 0; family <= 1; ++family)
      for (int m = 1; m <= 3; ++m) {
        auto z = make_scheme(k, Ambient::smooth_quadric, {Gen{ruling_divisor(k, family, family == 0 ? o.x : o.y, o, m)}});
        auto mat = condition_matrix(k, z, sp);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
          BiForm<Fp> f{1, 2, nth_vector(k, idx, 6)};
          auto r = family == 0 ? restrict_to_fibre_x(k, f, o.x) : restrict_to_fibre_y(k, f, o.y);
          const bool expected = is_zero_form(k, r) || vanishing_order(k, r, family == 0 ? o.y : o.x) >= m;
          ASSERT_EQ(annihilates(k, mat, f.c), expected) << "family " << family << " m " << m << " form " << idx;
        }
      }
}

TEST(RulingDivisor, ConeMatchesVanishingOrder) {
  PrimeField k(5);
  const FormSpace sp{Ambient::cone, 2, 0};
  std::mt19937_64 rng(11);
  for (auto X : {std::array<long, 4>{1, 2, 4, 3}, std::array<long, 4>{0, 0, 1, 2}, std::array<long, 4>{1, 0, 0, 0}}) {
    auto p = cone_point(k, {k.from_int(X[0]), k.from_int(X[1]), k.from_int(X[2]), k.from_int(X[3])});
    for (int m = 1; m <= 3; ++m) {
      auto z = make_scheme(k, Ambient::cone, {Gen{cone_ruling_divisor(k, p, m)}});
      auto mat = condition_matrix(k, z, sp);
      auto ker = kernel(k, mat);
      std::vector<std::vector<Fp>> samples = ker;
      for (int n = 0; n < 300; ++n) {
        std::vector<Fp> f(9);
        for (auto& x : f) x = k.random(rng);
        samples.push_back(f);
        // and a random kernel member
        std::vector<Fp> g(9, k.zero());
        for (const auto& b : ker) {
          auto c = k.random(rng);
          for (int i = 0; i < 9; ++i) g[i] = k.add(g[i], k.mul(c, b[i]));
        }
        samples.push_back(g);
      }
      for (const auto& f : samples) {
        auto r = restrict_to_ruling(k, ConeForm<Fp>{2, f}, p);
        const bool expected = is_zero_form(k, r) || vanishing_order(k, r, ruling_parameter(k, p)) >= m;
        ASSERT_EQ(annihilates(k, mat, f), expected);
      }
    }
  }
}

TEST(RulingDivisor, SingleEvaluation) {
  PrimeField k(101);
  auto o = qp(k, 1, 7, 1, 9);
  auto z = make_scheme(k, Ambient::smooth_quadric, {Gen{ruling_divisor(k, 1, o.y, o, 1)}});
  const FormSpace sp{Ambient::smooth_quadric, 2, 2};
  auto m = condition_matrix(k, z, sp);
  ASSERT_EQ(m.rows, 1u);
  std::mt19937_64 rng(3);
  for (int n = 0; n < 20; ++n) {
    BiForm<Fp> f{2, 2, std::vector<Fp>(9)};
    for (auto& x : f.c) x = k.random(rng);
    EXPECT_EQ(apply(k, m, f.c)[0] == k.zero(), eval(k, f, o) == k.zero());
  }
}

TEST(RulingDivisor, TheoremConfigurationDegree) {
  PrimeField k(101);
  auto o = qp(k, 1, 0, 1, 5), o2 = qp(k, 1, 3, 1, 0);
  auto z = make_scheme(k, Ambient::smooth_quadric,
                       {Gen{ruling_divisor(k, 0, o.x, o, 3)}, Gen{ruling_divisor(k, 1, o2.y, o2, 2)}});
  EXPECT_EQ(z.degree(), 5);
  EXPECT_EQ(condition_matrix(k, z, FormSpace{Ambient::smooth_quadric, 2, 3}).rows, 5u);
}

TEST(RulingDivisor, Errors) {
  PrimeField k(101);
  auto o = qp(k, 1, 2, 1, 3);
  try {
    ruling_divisor(k, 0, P1Point<Fp>{k.one(), k.zero()}, o, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::point_not_on_line);
  }
  EXPECT_THROW(ruling_divisor(k, 0, o.x, o, 0), Error);
  auto v = cone_point(k, {k.zero(), k.zero(), k.zero(), k.one()});
  try {
    cone_ruling_divisor(k, v, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::vertex_support);
  }
}

TEST(FatPoint, BidegreeOneOneIsTheTwoRulings) {
  PrimeField k(101);
  for (auto p : {qp(k, 1, 4, 1, 9), qp(k, 0, 1, 1, 3), qp(k, 1, 5, 0, 1), qp(k, 0, 1, 0, 1)}) {
    auto z = make_scheme(k, Ambient::smooth_quadric, {Gen{fat_point(k, p)}});
    EXPECT_EQ(z.degree(), 3);
    auto ker = kernel(k, condition_matrix(k, z, FormSpace{Ambient::smooth_quadric, 1, 1}));
    ASSERT_EQ(ker.size(), 1u);
    // (x0 a1 - x1 a0)(y0 b1 - y1 b0)
    std::vector<Fp> want{k.mul(p.x.t, p.y.t), k.neg(k.mul(p.x.t, p.y.s)), k.neg(k.mul(p.x.s, p.y.t)),
                         k.mul(p.x.s, p.y.s)};
    Matrix<Fp> pair(2, 4, k.zero());
    for (int i = 0; i < 4; ++i) {
      pair(0, i) = ker[0][i];
      pair(1, i) = want[i];
    }
    EXPECT_EQ(rank(k, pair), 1u);
  }
}

// chart-free oracle: F(p) = 0 and the whole gradient vanishes
TEST(FatPoint, MatchesGradientExhaustively) {
  PrimeField k(5);
  const FormSpace sp{Ambient::smooth_quadric, 1, 2};
  for (auto p : {qp(k, 1, 2, 1, 3), qp(k, 0, 1, 1, 1), qp(k, 1, 4, 0, 1), qp(k, 0, 1, 0, 1)}) {
    auto mat = condition_matrix(k, make_scheme(k, Ambient::smooth_quadric, {Gen{fat_point(k, p)}}), sp);
    for (std::uint64_t idx = 0; idx < ipow(5, 6); ++idx) {
      BiForm<Fp> f{1, 2, nth_vector(k, idx, 6)};
      bool expected = k.is_zero(eval(k, f, p));
      for (auto g : gradient(k, f, p)) expected = expected && k.is_zero(g);
      ASSERT_EQ(annihilates(k, mat, f.c), expected);
    }
  }
}

TEST(FatPoint, ConeVertexRejected) {
  PrimeField k(101);
  auto v = cone_point(k, {k.zero(), k.zero(), k.zero(), k.one()});
  EXPECT_TRUE(v.vertex);
  EXPECT_THROW(fat_point(k, v), Error);
}

TEST(CuspScheme, Degrees) {
  PrimeField k(101);
  auto p = qp(k, 1, 3, 1, 4);
  for (int h = 1; h <= 4; ++h) {
    auto z = make_scheme(k, Ambient::smooth_quadric, {Gen{cusp_scheme(k, p, k.one(), k.from_int(2), h)}});
    EXPECT_EQ(z.degree(), 3 * h + 2);
    EXPECT_EQ(condition_matrix(k, z, FormSpace{Ambient::smooth_quadric, 6, 6}).rows, static_cast<std::size_t>(3 * h + 2));
  }
}

TEST(CuspScheme, ModelSingularitySatisfiesItsScheme) {
  PrimeField k(101);
  std::mt19937_64 rng(5);
  for (int h = 1; h <= 3; ++h)
    for (int trial = 0; trial < 5; ++trial) {
      Fp a = k.random(rng), b = k.random(rng), du = k.from_int(1 + trial), dv = k.random(rng);
      auto p = quadric_point(k, P1Point<Fp>{k.one(), a}, P1Point<Fp>{k.one(), b});
      auto cs = cusp_scheme(k, p, du, dv, h);
      const FormSpace sp{Ambient::smooth_quadric, 2 * h + 1, 2};
      auto F = from_chart(k, sp.d1, sp.d2, cusp_model(k, a, b, du, dv, h));
      auto mat = condition_matrix(k, make_scheme(k, Ambient::smooth_quadric, {Gen{cs}}), sp);
      EXPECT_TRUE(annihilates(k, mat, F.c));
      auto [c_next, c_yy] = cusp_normal_form(k, F.c, cs, sp);
      EXPECT_EQ(c_next, k.neg(k.one()));
      EXPECT_EQ(c_yy, k.one());
      // a different tangent does not contain the model
      auto other = cusp_scheme(k, p, du, k.add(dv, k.one()), h);
      EXPECT_FALSE(annihilates(k, condition_matrix(k, make_scheme(k, Ambient::smooth_quadric, {Gen{other}}), sp), F.c));
    }
}

TEST(CuspScheme, TangentScalingInvariance) {
  PrimeField k(101);
  const FormSpace sp{Ambient::smooth_quadric, 5, 5};
  for (auto p : {qp(k, 1, 3, 1, 4), qp(k, 0, 1, 1, 7)})
    for (auto [du, dv] : {std::pair<long, long>{1, 2}, {0, 1}, {3, 0}})
      for (int h = 1; h <= 2; ++h) {
        auto a = condition_matrix(
            k, make_scheme(k, Ambient::smooth_quadric, {Gen{cusp_scheme(k, p, k.from_int(du), k.from_int(dv), h)}}), sp);
        auto b = condition_matrix(
            k, make_scheme(k, Ambient::smooth_quadric,
                           {Gen{cusp_scheme(k, p, k.from_int(7 * du), k.from_int(7 * dv), h)}}), sp);
        EXPECT_EQ(rank(k, a), rank(k, b));
        EXPECT_EQ(stacked_rank(k, a, b), rank(k, a));
      }
}

TEST(CuspScheme, Errors) {
  PrimeField k(101);
  auto p = qp(k, 1, 3, 1, 4);
  try {
    cusp_scheme(k, p, k.zero(), k.zero(), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::zero_tangent);
  }
  EXPECT_THROW(cusp_scheme(k, p, k.one(), k.zero(), 0), Error);
  auto v = cone_point(k, {k.zero(), k.zero(), k.zero(), k.one()});
  EXPECT_THROW(cusp_scheme(k, v, k.one(), k.zero(), 1), Error);
}

TEST(ConditionMatrix, Shapes) {
  PrimeField k(101);
  Scheme empty{Ambient::smooth_quadric, {}};
  auto m = condition_matrix(k, empty, FormSpace{Ambient::smooth_quadric, 2, 3});
  EXPECT_EQ(m.rows, 0u);
  EXPECT_EQ(m.cols, 12u);
  EXPECT_EQ(kernel(k, m).size(), 12u);
  Scheme cone_empty{Ambient::cone, {}};
  EXPECT_EQ(condition_matrix(k, cone_empty, FormSpace{Ambient::cone, 2, 0}).cols, 9u);
  EXPECT_EQ(cone_basis(5).size(), 36u);
}

TEST(ConditionMatrix, RowCountIsDegree) {
  PrimeField k(101);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto pt = [&] {
      return quadric_point(k, P1Point<Fp>{k.one(), k.random(rng)}, P1Point<Fp>{k.one(), k.random(rng)});
    };
    auto a = pt(), b = pt(), c = pt();
    if (same_point(k, a, b) || same_point(k, a, c) || same_point(k, b, c)) continue;
    const int m = 1 + trial % 4, h = 1 + trial % 3;
    auto z = make_scheme(k, Ambient::smooth_quadric,
                         {Gen{ruling_divisor(k, trial % 2, trial % 2 ? a.y : a.x, a, m)}, Gen{fat_point(k, b)},
                          Gen{cusp_scheme(k, c, k.one(), k.random(rng), h)}});
    EXPECT_EQ(z.degree(), m + 3 + 3 * h + 2);
    for (int d = 1; d <= 4; ++d)
      EXPECT_EQ(condition_matrix(k, z, FormSpace{Ambient::smooth_quadric, d, d + 1}).rows,
                static_cast<std::size_t>(z.degree()));
  }
}

TEST(ConditionMatrix, Errors) {
  PrimeField k(101);
  Scheme empty{Ambient::smooth_quadric, {}};
  try {
    condition_matrix(k, empty, FormSpace{Ambient::smooth_quadric, -1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::degree_negative);
  }
  auto p = qp(k, 1, 3, 1, 4);
  try {
    make_scheme(k, Ambient::smooth_quadric, {Gen{fat_point(k, p)}, Gen{cusp_scheme(k, p, k.one(), k.one(), 1)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::overlapping_support);
  }
}
