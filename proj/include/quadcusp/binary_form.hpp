#pragma once

// Binary forms F(s,t) = sum c[i] s^(d-i) t^i and their root structure on P^1.
// A point (s:t) has affine coordinate t/s; infinity is (0:1).

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "quadcusp/poly.hpp"

namespace quadcusp {

template <class E>
struct BinaryForm {
  int degree = 0;
  std::vector<E> c;  // size degree+1
};

template <class E>
struct P1Point {
  E s, t;
};

template <Field K>
BinaryForm<elem_t<K>> make_binary_form(const K& k, std::vector<elem_t<K>> c) {
  require(!c.empty(), Errc::degree_negative, "binary form needs at least one coefficient");
  BinaryForm<elem_t<K>> f;
  f.degree = static_cast<int>(c.size()) - 1;
  f.c = std::move(c);
  (void)k;
  return f;
}

template <Field K>
bool is_zero_form(const K& k, const BinaryForm<elem_t<K>>& f) {
  for (const auto& x : f.c)
    if (!k.is_zero(x)) return false;
  return true;
}

/// Normalises (s:t) so the first nonzero coordinate is 1.
template <Field K>
P1Point<elem_t<K>> normalize(const K& k, const P1Point<elem_t<K>>& p) {
  if (!k.is_zero(p.s)) return {k.one(), k.mul(p.t, k.inv(p.s))};
  require(!k.is_zero(p.t), Errc::invalid_argument, "(0:0) is not a point of P^1");
  return {k.zero(), k.one()};
}

template <Field K>
bool same_point(const K& k, const P1Point<elem_t<K>>& a, const P1Point<elem_t<K>>& b) {
  return k.equal(k.mul(a.s, b.t), k.mul(a.t, b.s));
}

template <Field K>
elem_t<K> eval(const K& k, const BinaryForm<elem_t<K>>& f, const P1Point<elem_t<K>>& p) {
  auto acc = k.zero();
  auto tp = k.one();
  for (int i = 0; i <= f.degree; ++i) {
    auto sp = k.one();
    for (int j = 0; j < f.degree - i; ++j) sp = k.mul(sp, p.s);
    acc = k.add(acc, k.mul(f.c[i], k.mul(sp, tp)));
    tp = k.mul(tp, p.t);
  }
  return acc;
}

/// f(1, t) as a polynomial in t.
template <Field K>
Poly<elem_t<K>> affine_part(const K& k, const BinaryForm<elem_t<K>>& f) {
  return poly::trim(k, Poly<elem_t<K>>(f.c.begin(), f.c.end()));
}

struct RootProfile {
  int count = 0;
  std::vector<int> multiplicities;  // sorted descending
};

/// Number of distinct roots over the closure and their multiplicities.
template <Field K>
RootProfile distinct_root_count(const K& k, const BinaryForm<elem_t<K>>& f) {
  require(!is_zero_form(k, f), Errc::zero_form, "distinct_root_count of the zero form");
  require_separable(k, f.degree, "distinct_root_count");
  RootProfile out;
  auto a = affine_part(k, f);
  const int at_infinity = f.degree - poly::degree(a);
  if (at_infinity > 0) {
    out.count = 1;
    out.multiplicities.push_back(at_infinity);
  }
  if (poly::degree(a) > 0) {
    auto parts = poly::squarefree_decomposition(k, a);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const int roots = poly::degree(parts[i]);
      out.count += roots;
      for (int r = 0; r < roots; ++r) out.multiplicities.push_back(static_cast<int>(i) + 1);
    }
  }
  std::sort(out.multiplicities.rbegin(), out.multiplicities.rend());
  return out;
}

/// Multiplicity of pt as a root of f; 0 when f(pt) != 0.
template <Field K>
int vanishing_order(const K& k, const BinaryForm<elem_t<K>>& f, const P1Point<elem_t<K>>& pt) {
  require(!is_zero_form(k, f), Errc::zero_form, "vanishing_order of the zero form");
  auto q = normalize(k, pt);
  auto a = affine_part(k, f);
  if (k.is_zero(q.s)) return f.degree - poly::degree(a);
  return poly::root_multiplicity(k, a, q.t);
}

template <Field K>
std::string to_string(const K& k, const BinaryForm<elem_t<K>>& f, const std::string& s = "s",
                      const std::string& t = "t") {
  std::string out;
  for (int i = 0; i <= f.degree; ++i) {
    if (k.is_zero(f.c[i])) continue;
    std::string c = k.to_string(f.c[i]);
    std::string mono;
    auto var = [&](const std::string& v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    var(s, f.degree - i);
    var(t, i);
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

}  // namespace quadcusp
