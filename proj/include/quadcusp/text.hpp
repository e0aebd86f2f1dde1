#pragma once

// Text input: field specs, polynomials, points, divisors.
//
// Polynomials are sums of terms c*v^e*w^f... with integer or a/b
// coefficients, e.g. "x0*y1^2 - x1*y0^2", "x^6 - 1", "2/3*s^2*t".

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "quadcusp/hyperell.hpp"

namespace quadcusp {

using AnyField = std::variant<PrimeField, RationalField>;

inline AnyField parse_field(const std::string& spec) {
  if (spec == "q" || spec == "Q") return RationalField{};
  if (spec.rfind("p:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoull(spec.substr(2), &used);
      if (used != spec.size() - 2) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      fail(Errc::parse, "bad field spec '" + spec + "'");
    }
    return PrimeField(p);
  }
  fail(Errc::parse, "bad field spec '" + spec + "' (expected q or p:<prime>)");
}

inline std::string field_spec(const AnyField& f) {
  if (auto p = std::get_if<PrimeField>(&f)) return "p:" + std::to_string(p->prime());
  return "q";
}

struct Term {
  mpq_class coeff;
  std::map<std::string, int> exps;
};

namespace detail {

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  std::string integer() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) error("expected a number");
    return s_.substr(start, i_ - start);
  }
  std::string identifier() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    if (start == i_) error("expected a variable");
    return s_.substr(start, i_ - start);
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::parse, what + " at position " + std::to_string(i_) + " in '" + s_ + "'");
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

inline mpq_class number(Lexer& lx) {
  mpq_class q(lx.integer());
  if (lx.accept('/')) {
    mpz_class d(lx.integer());
    if (d == 0) lx.error("zero denominator");
    q /= d;
  }
  q.canonicalize();
  return q;
}

}  // namespace detail

inline std::vector<Term> parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
  detail::Lexer lx(text);
  std::vector<Term> out;
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    if (lx.accept('+')) {
    } else if (lx.accept('-')) {
      sign = -1;
    } else if (!first) {
      lx.error("expected '+' or '-'");
    }
    first = false;
    Term t{mpq_class(sign), {}};
    bool any = false;
    while (true) {
      const char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= detail::number(lx);
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        auto v = lx.identifier();
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) lx.error("unknown variable '" + v + "'");
        int e = 1;
        if (lx.accept('^')) e = std::stoi(lx.integer());
        t.exps[v] += e;
      } else {
        lx.error("expected a coefficient or variable");
      }
      any = true;
      if (!lx.accept('*')) break;
    }
    if (!any) lx.error("empty term");
    out.push_back(std::move(t));
  }
  if (out.empty()) fail(Errc::parse, "empty polynomial");
  return out;
}

namespace detail {

inline int exp_of(const Term& t, const std::string& v) {
  auto it = t.exps.find(v);
  return it == t.exps.end() ? 0 : it->second;
}

}  // namespace detail

/// Bidegree is read off the terms; all terms must agree.
template <Field K>
BiForm<elem_t<K>> parse_biform(const K& k, const std::string& text) {
  auto terms = parse_polynomial(text, {"x0", "x1", "y0", "y1"});
  const int d1 = detail::exp_of(terms[0], "x0") + detail::exp_of(terms[0], "x1");
  const int d2 = detail::exp_of(terms[0], "y0") + detail::exp_of(terms[0], "y1");
  auto f = zero_biform(k, d1, d2);
  for (const auto& t : terms) {
    const int i = detail::exp_of(t, "x1"), j = detail::exp_of(t, "y1");
    if (detail::exp_of(t, "x0") + i != d1 || detail::exp_of(t, "y0") + j != d2)
      fail(Errc::parse, "'" + text + "' is not bihomogeneous");
    auto& c = f.c[f.index(i, j)];
    c = k.add(c, k.from_rational(t.coeff));
  }
  return f;
}

/// Monomials are reduced modulo X0*X2 - X1^2 to the basis of cone_basis.
template <Field K>
ConeForm<elem_t<K>> parse_coneform(const K& k, const std::string& text) {
  auto terms = parse_polynomial(text, {"X0", "X1", "X2", "X3"});
  auto deg = [](const Term& t) {
    return detail::exp_of(t, "X0") + detail::exp_of(t, "X1") + detail::exp_of(t, "X2") + detail::exp_of(t, "X3");
  };
  const int d = deg(terms[0]);
  auto g = zero_coneform(k, d);
  for (const auto& t : terms) {
    if (deg(t) != d) fail(Errc::parse, "'" + text + "' is not homogeneous");
    int a = detail::exp_of(t, "X0"), e = detail::exp_of(t, "X1"), b = detail::exp_of(t, "X2");
    a += e / 2;
    b += e / 2;
    e %= 2;
    const int idx = cone_basis_index(d, {a, e, b, detail::exp_of(t, "X3")});
    g.c[idx] = k.add(g.c[idx], k.from_rational(t.coeff));
  }
  return g;
}

template <Field K>
Poly<elem_t<K>> parse_univariate(const K& k, const std::string& text, const std::string& var = "x") {
  Poly<elem_t<K>> f;
  for (const auto& t : parse_polynomial(text, {var})) {
    const int e = detail::exp_of(t, var);
    if (static_cast<int>(f.size()) <= e) f.resize(e + 1, k.zero());
    f[e] = k.add(f[e], k.from_rational(t.coeff));
  }
  return poly::trim(k, std::move(f));
}

template <Field K>
BinaryForm<elem_t<K>> parse_binary_form(const K& k, const std::string& text) {
  auto terms = parse_polynomial(text, {"s", "t"});
  const int d = detail::exp_of(terms[0], "s") + detail::exp_of(terms[0], "t");
  std::vector<elem_t<K>> c(d + 1, k.zero());
  for (const auto& t : terms) {
    const int j = detail::exp_of(t, "t");
    if (detail::exp_of(t, "s") + j != d) fail(Errc::parse, "'" + text + "' is not homogeneous");
    c[j] = k.add(c[j], k.from_rational(t.coeff));
  }
  return make_binary_form(k, std::move(c));
}

namespace detail {

template <Field K>
elem_t<K> element(const K& k, Lexer& lx) {
  const bool neg = lx.accept('-');
  auto v = k.from_rational(number(lx));
  return neg ? k.neg(v) : v;
}

template <Field K>
P1Point<elem_t<K>> p1(const K& k, Lexer& lx) {
  lx.expect('(');
  auto s = element(k, lx);
  lx.expect(':');
  auto t = element(k, lx);
  lx.expect(')');
  if (k.is_zero(s) && k.is_zero(t)) lx.error("(0:0) is not a point");
  return {s, t};
}

}  // namespace detail

template <Field K>
SurfacePoint<elem_t<K>> parse_quadric_point(const K& k, const std::string& text) {
  detail::Lexer lx(text);
  lx.expect('(');
  auto x = detail::p1(k, lx);
  lx.expect(',');
  auto y = detail::p1(k, lx);
  lx.expect(')');
  if (!lx.done()) lx.error("trailing input");
  return quadric_point(k, x, y);
}

template <Field K>
SurfacePoint<elem_t<K>> parse_cone_point(const K& k, const std::string& text) {
  detail::Lexer lx(text);
  lx.expect('(');
  std::array<elem_t<K>, 4> X;
  for (int i = 0; i < 4; ++i) {
    if (i) lx.expect(':');
    X[i] = detail::element(k, lx);
  }
  lx.expect(')');
  if (!lx.done()) lx.error("trailing input");
  try {
    return cone_point(k, X);
  } catch (const Error& e) {
    fail(Errc::parse, std::string("bad cone point: ") + e.what());
  }
}

template <Field K>
SurfacePoint<elem_t<K>> parse_surface_point(const K& k, Ambient a, const std::string& text) {
  return a == Ambient::smooth_quadric ? parse_quadric_point(k, text) : parse_cone_point(k, text);
}

/// "ruling:(1,0)@((1:0),(0:1))^3", "ruling:cone@(1:1:1:0)^2", "fat@p",
/// "cusp:h=2@p;tangent=(1,1)"; the inverse of to_string on generators.
template <Field K>
SchemeGenerator<elem_t<K>> parse_scheme_generator(const K& k, Ambient a, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  const auto at = s.find('@');
  if (at == std::string::npos) fail(Errc::parse, "expected '@' in scheme generator '" + text + "'");
  const std::string head = s.substr(0, at), rest = s.substr(at + 1);
  auto integer = [&](const std::string& t) {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail(Errc::parse, "expected an integer in scheme generator '" + text + "'");
    return std::stoi(t);
  };
  if (head == "fat") return fat_point(k, parse_surface_point(k, a, rest));
  if (head.rfind("ruling:", 0) == 0) {
    const std::string line = head.substr(7);
    const auto caret = rest.rfind('^');
    if (caret == std::string::npos) fail(Errc::parse, "expected '^m' in '" + text + "'");
    auto p = parse_surface_point(k, a, rest.substr(0, caret));
    const int m = integer(rest.substr(caret + 1));
    if (line == "cone") {
      if (a != Ambient::cone) fail(Errc::parse, "ruling:cone needs the cone ambient");
      return cone_ruling_divisor(k, p, m);
    }
    if (a != Ambient::smooth_quadric || (line != "(1,0)" && line != "(0,1)"))
      fail(Errc::parse, "ruling must be (1,0), (0,1) or cone in '" + text + "'");
    const int family = line == "(1,0)" ? 0 : 1;
    return ruling_divisor(k, family, family == 0 ? p.x : p.y, p, m);
  }
  if (head.rfind("cusp:h=", 0) == 0) {
    const int h = integer(head.substr(7));
    const auto semi = rest.find(";tangent=");
    if (semi == std::string::npos) fail(Errc::parse, "expected ';tangent=(du,dv)' in '" + text + "'");
    auto p = parse_surface_point(k, a, rest.substr(0, semi));
    const std::string tangent = rest.substr(semi + 9);
    detail::Lexer lx(tangent);
    lx.expect('(');
    auto du = detail::element(k, lx);
    lx.expect(',');
    auto dv = detail::element(k, lx);
    lx.expect(')');
    if (!lx.done()) lx.error("trailing input");
    return cusp_scheme(k, p, du, dv, h);
  }
  fail(Errc::parse, "unknown scheme generator '" + text + "'");
}

/// "(x,y)" with y a value, or "(x,y+)" / "(x,y-)" for the branch convention
/// of branch_point.
inline HPoint<Fp> parse_hpoint(const PrimeField& k, const HyperellipticCurve<Fp>& c, const std::string& text) {
  detail::Lexer lx(text);
  lx.expect('(');
  auto x = detail::element(k, lx);
  lx.expect(',');
  HPoint<Fp> p;
  if (lx.peek() == 'y') {
    lx.identifier();
    const bool plus = lx.accept('+');
    if (!plus && !lx.accept('-')) lx.error("expected y+ or y-");
    auto b = branch_point(k, c, x, plus);
    if (!b) fail(Errc::point_not_on_curve, "f(" + k.to_string(x) + ") is not a square in F_p");
    p = *b;
  } else {
    auto y = detail::element(k, lx);
    p = make_hpoint(k, c, x, y);
  }
  lx.expect(')');
  if (!lx.done()) lx.error("trailing input");
  return p;
}

/// "2*(0,0)+3*(7,y+)+1*R"; a bare point has multiplicity 1; "0" is the zero
/// divisor.
inline HDivisor<Fp> parse_hdivisor(const PrimeField& k, const HyperellipticCurve<Fp>& c, const std::string& text) {
  std::vector<std::pair<HPoint<Fp>, int>> terms;
  int r = 0;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s == "0") return make_divisor(k, terms);
  std::size_t i = 0;
  while (i < s.size()) {
    int m = 1;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) {
      m = std::stoi(s.substr(i, j - i));
      if (j >= s.size() || s[j] != '*') fail(Errc::parse, "expected '*' after multiplicity in '" + text + "'");
      i = j + 1;
    }
    if (i < s.size() && s[i] == 'R') {
      r += m;
      ++i;
    } else {
      auto close = s.find(')', i);
      if (i >= s.size() || s[i] != '(' || close == std::string::npos) fail(Errc::parse, "expected a point in '" + text + "'");
      terms.push_back({parse_hpoint(k, c, s.substr(i, close - i + 1)), m});
      i = close + 1;
    }
    if (i < s.size()) {
      if (s[i] != '+') fail(Errc::parse, "expected '+' in '" + text + "'");
      ++i;
    }
  }
  return make_divisor(k, terms, r);
}

}  // namespace quadcusp
