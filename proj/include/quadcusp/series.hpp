#pragma once

// Truncated power series in (x - center) and Hensel square roots.

#include <vector>

#include "quadcusp/poly.hpp"

namespace quadcusp {

template <class E>
struct TruncatedSeries {
  E center;
  int order = 0;
  std::vector<E> c;  // c[i] is the coefficient of (x - center)^i, i < order
};

namespace series {

template <Field K>
TruncatedSeries<elem_t<K>> from_poly(const K& k, const Poly<elem_t<K>>& f, const elem_t<K>& a, int order) {
  auto g = poly::taylor_shift(k, f, a);
  TruncatedSeries<elem_t<K>> s{a, order, std::vector<elem_t<K>>(order, k.zero())};
  for (int i = 0; i < order && i < static_cast<int>(g.size()); ++i) s.c[i] = g[i];
  return s;
}

template <Field K>
TruncatedSeries<elem_t<K>> mul(const K& k, const TruncatedSeries<elem_t<K>>& a, const TruncatedSeries<elem_t<K>>& b) {
  const int n = std::min(a.order, b.order);
  TruncatedSeries<elem_t<K>> r{a.center, n, std::vector<elem_t<K>>(n, k.zero())};
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j < n; ++j) r.c[i + j] = k.add(r.c[i + j], k.mul(a.c[i], b.c[j]));
  return r;
}

template <Field K>
TruncatedSeries<elem_t<K>> add(const K& k, const TruncatedSeries<elem_t<K>>& a, const TruncatedSeries<elem_t<K>>& b) {
  const int n = std::min(a.order, b.order);
  TruncatedSeries<elem_t<K>> r{a.center, n, std::vector<elem_t<K>>(n)};
  for (int i = 0; i < n; ++i) r.c[i] = k.add(a.c[i], b.c[i]);
  return r;
}

/// Index of the first nonzero coefficient, or order if none.
template <Field K>
int valuation(const K& k, const TruncatedSeries<elem_t<K>>& s) {
  for (int i = 0; i < s.order; ++i)
    if (!k.is_zero(s.c[i])) return i;
  return s.order;
}

template <Field K>
std::string to_string(const K& k, const TruncatedSeries<elem_t<K>>& s, const std::string& var = "x") {
  const std::string t = k.is_zero(s.center) ? var : "(" + var + " - " + k.to_string(s.center) + ")";
  std::string out;
  for (int i = 0; i < s.order; ++i) {
    if (k.is_zero(s.c[i])) continue;
    if (!out.empty()) out += " + ";
    out += k.to_string(s.c[i]);
    if (i >= 1) out += "*" + t;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return (out.empty() ? "0" : out) + " + O(" + t + "^" + std::to_string(s.order) + ")";
}

}  // namespace series

/// The branch Y of sqrt(f) near x = a with Y(a) = b, modulo (x - a)^order.
/// Newton's step Y <- (Y + f/Y)/2 fixes one coefficient at a time here:
/// 2 b y_n = f_n - sum_{0<i<n} y_i y_{n-i}.
template <Field K>
TruncatedSeries<elem_t<K>> hensel_sqrt(const K& k, const Poly<elem_t<K>>& f, const elem_t<K>& a, const elem_t<K>& b,
                                       int order) {
  require(k.characteristic() != 2, Errc::even_characteristic, "hensel_sqrt needs odd characteristic");
  require(order >= 1, Errc::invalid_argument, "order must be positive");
  require(!k.is_zero(b), Errc::branch_zero, "b = 0: a is a branch point");
  auto fs = series::from_poly(k, f, a, order);
  require(k.equal(fs.c[0], k.mul(b, b)), Errc::not_a_square, "f(a) != b^2");
  TruncatedSeries<elem_t<K>> y{a, order, std::vector<elem_t<K>>(order, k.zero())};
  y.c[0] = b;
  const auto inv2b = k.inv(k.add(b, b));
  for (int n = 1; n < order; ++n) {
    auto acc = fs.c[n];
    for (int i = 1; i < n; ++i) acc = k.sub(acc, k.mul(y.c[i], y.c[n - i]));
    y.c[n] = k.mul(acc, inv2b);
  }
  return y;
}

}  // namespace quadcusp
