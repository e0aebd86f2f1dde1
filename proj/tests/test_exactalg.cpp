#include <gtest/gtest.h>

#include <random>
#include <set>

#include "quadcusp/bivariate.hpp"
#include "quadcusp/binary_form.hpp"
#include "quadcusp/series.hpp"

using namespace quadcusp;

namespace {

Poly<Fp> P(const PrimeField& k, std::vector<long> c) {
  Poly<Fp> out;
  for (long x : c) out.push_back(k.from_int(x));
  return poly::trim(k, out);
}

Poly<Fp> random_poly(const PrimeField& k, int deg, std::mt19937_64& rng) {
  Poly<Fp> a;
  for (int i = 0; i <= deg; ++i) a.push_back(k.random(rng));
  if (k.is_zero(a.back())) a.back() = k.one();
  return a;
}

Fq power(const ExtensionField& e, Fq a, std::uint64_t n) {
  Fq r = e.one();
  for (; n; n >>= 1, a = e.mul(a, a))
    if (n & 1) r = e.mul(r, a);
  return r;
}

// all elements of an extension, by index
std::vector<Fq> all_elements(const ExtensionField& e) {
  std::vector<Fq> out;
  for (std::uint64_t i = 0; i < e.order(); ++i) out.push_back(e.element(i));
  return out;
}

}  // namespace

TEST(PrimeField, ArithmeticIsCanonical) {
  PrimeField k(101);
  EXPECT_EQ(k.from_int(-1).v, 100u);
  EXPECT_EQ(k.from_rational(mpq_class(1, 2)).v, 51u);
  for (std::uint64_t i = 1; i < 101; ++i) EXPECT_EQ(k.mul(k.element(i), k.inv(k.element(i))).v, 1u);
  EXPECT_THROW(k.inv(k.zero()), Error);
  EXPECT_THROW(PrimeField(100), Error);
}

TEST(PrimeField, SqrtSquaresBack) {
  PrimeField k(103);
  int squares = 0;
  for (std::uint64_t i = 0; i < 103; ++i) {
    auto r = k.sqrt(k.element(i));
    if (r) {
      ++squares;
      EXPECT_TRUE(k.equal(k.mul(*r, *r), k.element(i)));
    }
  }
  EXPECT_EQ(squares, 52);
}

TEST(RationalField, LowestTerms) {
  RationalField q;
  auto x = q.from_rational(mpq_class(6, -4));
  EXPECT_EQ(q.to_string(x), "-3/2");
  EXPECT_TRUE(q.equal(q.mul(x, q.inv(x)), q.one()));
}

TEST(ExtensionField, InverseAndFrobenius) {
  PrimeField k(7);
  ExtensionField e(k, poly::random_irreducible(k, 3, 4));
  EXPECT_EQ(e.order(), 343u);
  for (const auto& a : all_elements(e)) {
    if (e.is_zero(a)) continue;
    EXPECT_TRUE(e.equal(e.mul(a, e.inv(a)), e.one()));
    // a^(q-1) = 1
    EXPECT_TRUE(e.equal(power(e, a, 342), e.one()));
  }
}

TEST(Poly, GcdExamples) {
  PrimeField k(101);
  EXPECT_TRUE(poly::equal(k, poly::gcd(k, P(k, {-1, 0, 1}), P(k, {-1, 1})), P(k, {-1, 1})));
  EXPECT_TRUE(poly::equal(k, poly::gcd(k, P(k, {0, 0, 0, 1}), P(k, {0, 0, 1})), P(k, {0, 0, 1})));
  EXPECT_TRUE(poly::gcd(k, Poly<Fp>{}, Poly<Fp>{}).empty());
}

TEST(Poly, GcdFindsSharedFactor) {
  PrimeField k(7);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = poly::monic(k, random_poly(k, 2, rng));
    auto a = poly::mul(k, c, random_poly(k, 3, rng));
    auto b = poly::mul(k, c, random_poly(k, 2, rng));
    auto g = poly::gcd(k, a, b);
    // trial division: g divides both and c divides g
    EXPECT_TRUE(poly::rem(k, a, g).empty());
    EXPECT_TRUE(poly::rem(k, b, g).empty());
    EXPECT_TRUE(poly::rem(k, g, c).empty());
    EXPECT_TRUE(k.equal(poly::lead(k, g), k.one()));
  }
}

TEST(Poly, DivmodReconstructs) {
  PrimeField k(31);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    auto a = random_poly(k, 7, rng), b = random_poly(k, 3, rng);
    auto [q, r] = poly::divmod(k, a, b);
    EXPECT_LT(poly::degree(r), 3);
    EXPECT_TRUE(poly::equal(k, poly::add(k, poly::mul(k, q, b), r), a));
  }
}

TEST(Poly, InterpolationThroughPoints) {
  PrimeField k(101);
  std::vector<Fp> xs, ys;
  for (int i = 0; i < 6; ++i) {
    xs.push_back(k.from_int(3 * i + 1));
    ys.push_back(k.from_int(i * i * i - 7));
  }
  auto f = poly::interpolate(k, xs, ys);
  EXPECT_LE(poly::degree(f), 5);
  for (int i = 0; i < 6; ++i) EXPECT_TRUE(k.equal(poly::eval(k, f, xs[i]), ys[i]));
}

TEST(Poly, FactorisationMultipliesBackToIrreducibles) {
  PrimeField k(5);
  std::mt19937_64 rng(7);
  // all monic polynomials of degree <= 2 over F_5, for trial division
  std::vector<Poly<Fp>> small;
  for (int d = 1; d <= 2; ++d)
    for (int code = 0; code < (d == 1 ? 5 : 25); ++code) {
      Poly<Fp> m(d + 1, k.zero());
      m[d] = k.one();
      m[0] = k.element(code % 5);
      if (d == 2) m[1] = k.element(code / 5);
      small.push_back(m);
    }
  for (int trial = 0; trial < 40; ++trial) {
    auto a = poly::monic(k, random_poly(k, 1 + trial % 9, rng));
    if (trial % 3 == 0) a = poly::mul(k, a, poly::mul(k, P(k, {1, 1}), P(k, {1, 1})));
    Poly<Fp> prod = poly::constant(k, k.one());
    for (const auto& f : poly::factor(k, a)) {
      for (int i = 0; i < f.multiplicity; ++i) prod = poly::mul(k, prod, f.poly);
      // no factor of degree <= 4 has a proper divisor of degree <= 2
      if (poly::degree(f.poly) <= 4)
        for (const auto& s : small)
          if (poly::degree(s) < poly::degree(f.poly)) EXPECT_FALSE(poly::rem(k, f.poly, s).empty());
    }
    EXPECT_TRUE(poly::equal(k, prod, a));
  }
}

TEST(Poly, FactorHighDegreeSplits) {
  PrimeField k(101);
  auto f = poly::random_irreducible(k, 12, 3);
  EXPECT_TRUE(poly::is_irreducible(k, f));
  auto g = poly::mul(k, f, poly::random_irreducible(k, 10, 5));
  auto fs = poly::factor(k, g);
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(poly::degree(fs[0].poly) + poly::degree(fs[1].poly), 22);
}

TEST(Poly, SquarefreeDecompositionMultiplicities) {
  RationalField q;
  // (x-1)^3 (x+2)
  Poly<mpq_class> a{-1, 1};
  auto f = poly::mul(q, poly::pow(q, a, 3), Poly<mpq_class>{2, 1});
  auto parts = poly::squarefree_decomposition(q, f);
  ASSERT_GE(parts.size(), 3u);
  EXPECT_EQ(poly::degree(parts[0]), 1);
  EXPECT_EQ(poly::degree(parts[2]), 1);
}

TEST(BinaryForm, RootCountExamples) {
  PrimeField k(101);
  auto t2 = make_binary_form(k, std::vector<Fp>{k.zero(), k.zero(), k.one()});
  auto r = distinct_root_count(k, t2);
  EXPECT_EQ(r.count, 1);
  EXPECT_EQ(r.multiplicities, std::vector<int>{2});
  auto st = make_binary_form(k, std::vector<Fp>{k.zero(), k.one(), k.zero()});
  r = distinct_root_count(k, st);
  EXPECT_EQ(r.count, 2);
  EXPECT_EQ(r.multiplicities, (std::vector<int>{1, 1}));
  EXPECT_THROW(distinct_root_count(k, make_binary_form(k, std::vector<Fp>{k.zero(), k.zero()})), Error);
  PrimeField small(3);
  EXPECT_THROW(distinct_root_count(small, make_binary_form(small, std::vector<Fp>{small.one(), small.zero(), small.zero(), small.one()})), Error);
}

TEST(BinaryForm, VanishingOrderExamples) {
  PrimeField k(101);
  auto t2 = make_binary_form(k, std::vector<Fp>{k.zero(), k.zero(), k.one()});
  EXPECT_EQ(vanishing_order(k, t2, P1Point<Fp>{k.one(), k.zero()}), 2);
  auto smt = make_binary_form(k, std::vector<Fp>{k.one(), k.from_int(-1)});
  EXPECT_EQ(vanishing_order(k, smt, P1Point<Fp>{k.one(), k.one()}), 1);
  EXPECT_EQ(vanishing_order(k, smt, P1Point<Fp>{k.one(), k.zero()}), 0);
}

// Oracle: roots of a product of linear and quadratic factors, found by
// exhaustive search over F_{p^2}.
TEST(BinaryForm, RootCountMatchesExhaustiveSearch) {
  PrimeField k(101);
  ExtensionField e(k, poly::random_irreducible(k, 2, 9));
  auto elems = all_elements(e);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    Poly<Fp> a = poly::constant(k, k.one());
    int deg = 0;
    while (deg < 5) {
      auto f = (rng() % 2 && deg <= 3) ? random_poly(k, 2, rng) : random_poly(k, 1, rng);
      const int m = 1 + static_cast<int>(rng() % 2);
      if (deg + m * poly::degree(f) > 5) continue;
      for (int i = 0; i < m; ++i) a = poly::mul(k, a, f);
      deg += m * poly::degree(f);
    }
    // sometimes push a root to infinity: F = s^j * A(t/s) with degree 5 + j
    const int extra = trial % 3 == 0 ? 1 : 0;
    std::vector<Fp> c(6 + extra, k.zero());
    for (int i = 0; i <= 5; ++i) c[i] = a[i];
    auto form = make_binary_form(k, c);
    int count = extra;
    auto ea = poly::lift_poly(e, k, a);
    for (const auto& x : elems)
      if (e.is_zero(poly::eval(e, ea, x))) ++count;
    EXPECT_EQ(distinct_root_count(k, form).count, count);
    int sum = 0;
    for (int m : distinct_root_count(k, form).multiplicities) sum += m;
    EXPECT_EQ(sum, form.degree);
  }
}

TEST(BinaryForm, VanishingOrderAgreesWithRepeatedDivision) {
  PrimeField k(31);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    auto root = k.random(rng);
    const int m = static_cast<int>(rng() % 4);
    auto a = poly::mul(k, poly::pow(k, P(k, {0, 1}), 0), random_poly(k, 2, rng));
    for (int i = 0; i < m; ++i) a = poly::mul(k, a, Poly<Fp>{k.neg(root), k.one()});
    std::vector<Fp> c(a.begin(), a.end());
    auto f = make_binary_form(k, c);
    int expect = 0;
    auto b = a;
    while (true) {
      auto [q, r] = poly::divmod(k, b, Poly<Fp>{k.neg(root), k.one()});
      if (!r.empty()) break;
      ++expect;
      b = q;
    }
    EXPECT_EQ(vanishing_order(k, f, P1Point<Fp>{k.one(), root}), expect);
  }
}

TEST(Resultant, Examples) {
  PrimeField k(101);
  Bipoly<Fp> f, g, one;
  bp::add_term(k, f, 0, 2, k.one());
  bp::add_term(k, f, 1, 0, k.from_int(-1));
  bp::add_term(k, g, 0, 1, k.one());
  bp::add_term(k, one, 0, 0, k.one());
  auto r = resultant_v(k, f, g);
  // +-u
  ASSERT_EQ(poly::degree(r), 1);
  EXPECT_TRUE(k.is_zero(r[0]));
  EXPECT_TRUE(k.equal(r[1], k.one()) || k.equal(r[1], k.from_int(-1)));
  EXPECT_TRUE(poly::equal(k, resultant_v(k, f, one), poly::constant(k, k.one())));
  EXPECT_THROW(resultant_v(k, Bipoly<Fp>{}, Bipoly<Fp>{}), Error);
}

TEST(Resultant, SymmetricUpToSign) {
  PrimeField k(101);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    Bipoly<Fp> f, g;
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 2; ++j) {
        bp::add_term(k, f, i, j, k.random(rng));
        bp::add_term(k, g, i, j + (t % 2), k.random(rng));
      }
    auto a = resultant_v(k, f, g), b = resultant_v(k, g, f);
    EXPECT_TRUE(poly::equal(k, a, b) || poly::equal(k, a, poly::scale(k, b, k.from_int(-1))));
  }
}

// Oracle: exhaustive common-zero search over F_101 x F_101.
TEST(Resultant, RootsCoverExhaustiveCommonZeros) {
  PrimeField k(101);
  std::mt19937_64 rng(17);
  int with_zero = 0;
  for (int t = 0; t < 6; ++t) {
    // force a rational common zero at a random point
    const Fp u0 = k.random(rng), v0 = k.random(rng);
    Bipoly<Fp> f, g;
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 2; ++j) {
        bp::add_term(k, f, i, j, k.random(rng));
        bp::add_term(k, g, i, j, k.random(rng));
      }
    bp::add_term(k, f, 0, 0, k.neg(bp::eval(k, f, u0, v0)));
    bp::add_term(k, g, 0, 0, k.neg(bp::eval(k, g, u0, v0)));
    auto r = resultant_v(k, f, g);
    std::set<std::uint64_t> us;
    for (std::uint64_t a = 0; a < 101; ++a)
      for (std::uint64_t b = 0; b < 101; ++b)
        if (k.is_zero(bp::eval(k, f, k.element(a), k.element(b))) && k.is_zero(bp::eval(k, g, k.element(a), k.element(b))))
          us.insert(a);
    EXPECT_TRUE(us.count(u0.v));
    for (auto a : us) {
      ++with_zero;
      EXPECT_TRUE(k.is_zero(poly::eval(k, r, k.element(a))));
    }
  }
  EXPECT_GE(with_zero, 6);
}

TEST(CommonZeros, RationalPointsMatchExhaustiveSearch) {
  PrimeField k(31);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 8; ++t) {
    Bipoly<Fp> f, g;
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; i + j <= 2; ++j) {
        bp::add_term(k, f, i, j, k.random(rng));
        bp::add_term(k, g, i, j, k.random(rng));
      }
    std::set<std::pair<std::uint64_t, std::uint64_t>> brute;
    for (std::uint64_t a = 0; a < 31; ++a)
      for (std::uint64_t b = 0; b < 31; ++b)
        if (k.is_zero(bp::eval(k, f, k.element(a), k.element(b))) && k.is_zero(bp::eval(k, g, k.element(a), k.element(b))))
          brute.insert({a, b});
    auto zs = affine_common_zeros(k, {f, g}, t + 1);
    ASSERT_EQ(zs.status, ZeroSet::Status::finite);
    std::set<std::pair<std::uint64_t, std::uint64_t>> found;
    for (const auto& p : zs.points)
      if (p.is_rational()) found.insert({p.field.project(p.u)->v, p.field.project(p.v)->v});
    EXPECT_EQ(found, brute);
    EXPECT_LE(zs.degree(), 4);  // Bezout for two conics
  }
}

TEST(CommonZeros, PositiveDimensionalDetected) {
  PrimeField k(31);
  // f = (u - v) * (u + 1), g = (u - v) * (v + 2)
  Bipoly<Fp> l, a, b;
  bp::add_term(k, l, 1, 0, k.one());
  bp::add_term(k, l, 0, 1, k.from_int(-1));
  bp::add_term(k, a, 1, 0, k.one());
  bp::add_term(k, a, 0, 0, k.one());
  bp::add_term(k, b, 0, 1, k.one());
  bp::add_term(k, b, 0, 0, k.from_int(2));
  auto zs = affine_common_zeros(k, {bp::mul(k, l, a), bp::mul(k, l, b)});
  EXPECT_EQ(zs.status, ZeroSet::Status::positive_dimensional);
}

TEST(Matrix, RankNullity) {
  PrimeField k(13);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
    auto m = zero_matrix(k, r, c);
    for (auto& x : m.a) x = (rng() % 3 == 0) ? k.zero() : k.random(rng);
    auto ker = kernel(k, m);
    EXPECT_EQ(rank(k, m) + ker.size(), c);
    for (const auto& v : ker)
      for (const auto& y : apply(k, m, v)) EXPECT_TRUE(k.is_zero(y));
  }
}

TEST(HenselSqrt, BinomialSeriesOverQ) {
  RationalField q;
  auto y = hensel_sqrt(q, Poly<mpq_class>{1, 1}, mpq_class(0), mpq_class(1), 3);
  ASSERT_EQ(y.order, 3);
  EXPECT_EQ(y.c[0], 1);
  EXPECT_EQ(y.c[1], mpq_class(1, 2));
  EXPECT_EQ(y.c[2], mpq_class(-1, 8));
}

TEST(HenselSqrt, BranchAndErrors) {
  RationalField q;
  Poly<mpq_class> f{3, 1};  // f(1) = 4
  auto y = hensel_sqrt(q, f, mpq_class(1), mpq_class(-2), 4);
  EXPECT_EQ(y.c[0], -2);
  EXPECT_THROW(hensel_sqrt(q, f, mpq_class(1), mpq_class(3), 4), Error);
  EXPECT_THROW(hensel_sqrt(q, f, mpq_class(-3), mpq_class(0), 4), Error);
  PrimeField two(2);
  EXPECT_THROW(hensel_sqrt(two, Poly<Fp>{two.one()}, two.zero(), two.one(), 2), Error);
}

TEST(HenselSqrt, SquaresBackToF) {
  PrimeField k(101);
  std::mt19937_64 rng(6);
  int done = 0;
  while (done < 20) {
    auto f = random_poly(k, 6, rng);
    auto a = k.random(rng);
    auto b = k.sqrt(poly::eval(k, f, a));
    if (!b || k.is_zero(*b)) continue;
    auto y = hensel_sqrt(k, f, a, *b, 9);
    auto sq = series::mul(k, y, y);
    auto fs = series::from_poly(k, f, a, 9);
    for (int i = 0; i < 9; ++i) EXPECT_TRUE(k.equal(sq.c[i], fs.c[i]));
    ++done;
  }
}
