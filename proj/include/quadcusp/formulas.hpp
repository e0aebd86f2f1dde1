#pragma once

// Closed-form numerology: genus formulas, cusp bounds and validity ranges.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "quadcusp/error.hpp"

namespace quadcusp {

struct FormulaResult {
  mpq_class value;
  bool valid = true;
  std::string condition;
  bool specified = true;  // false when the value is not defined (kappa(3))

  bool integral() const { return value.get_den() == 1; }
};

inline FormulaResult plucker_genus(long d, long kappa) {
  require(d >= 1 && kappa >= 0, Errc::invalid_argument, "need d >= 1, kappa >= 0");
  FormulaResult r;
  r.value = mpq_class((d - 1) * (d - 2) / 2 - kappa);
  r.valid = r.value >= 0;
  r.condition = "(d-1)(d-2)/2 - kappa >= 0";
  return r;
}

inline FormulaResult castelnuovo_pi(long d) {
  require(d >= 3, Errc::d_too_small, "castelnuovo_pi needs d >= 3");
  const long eps = (d - 1) % 2, m = (d - 1 - eps) / 2;
  return {mpq_class(m * (m - 1) + m * eps), true, "d = 2m+1+eps, m = " + std::to_string(m) + ", eps = " + std::to_string(eps)};
}

inline FormulaResult vdk_dimension(long d, long kappa) {
  require(d >= 1 && kappa >= 0, Errc::invalid_argument, "need d >= 1, kappa >= 0");
  FormulaResult r;
  r.value = mpq_class((d * d + 3 * d) / 2 - 2 * kappa);
  r.valid = 9 * kappa < d * d + 6 * d + 8;
  r.condition = "9*kappa < d^2+6d+8: " + std::to_string(9 * kappa) + " < " + std::to_string(d * d + 6 * d + 8);
  return r;
}

inline FormulaResult barkats_condition(long d, long kappa) {
  require(d >= 4 && kappa >= 0, Errc::invalid_argument, "need d >= 4, kappa >= 0");
  const long lhs = 5 * kappa, rhs = (d + 2) * (d + 1) / 2 - d - 1;
  const bool ok = lhs <= rhs;
  return {mpq_class(ok ? 1 : 0), ok, "5*kappa <= (d+2)(d+1)/2-d-1: " + std::to_string(lhs) + " <= " + std::to_string(rhs)};
}

inline FormulaResult tono_bound(long g) {
  require(g >= 0, Errc::invalid_argument, "need g >= 0");
  mpq_class v(21 * g + 17, 2);
  v.canonicalize();
  return {v, true, "(21g+17)/2"};
}

/// First g with (g+2)(g+1)/2 - g > (21g+17)/2.
inline long tono_threshold() {
  long g = 0;
  while (2 * ((g + 2) * (g + 1) / 2 - g) <= 21 * g + 17) ++g;
  return g;
}

inline long binomial2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

inline long bb6_max_kappa(long d1) {
  const long c = binomial2(d1 - 1);
  return c < 2 ? 0 : 2 * ((c - 2) / 3);
}

inline FormulaResult bb6_genus(long d1, long d2, long kappa) {
  require(d1 >= 1 && d2 >= 1 && kappa >= 0, Errc::invalid_argument, "need d1, d2 >= 1, kappa >= 0");
  FormulaResult r;
  r.value = mpq_class(d1 * d2 - d1 - d2 + 1 - kappa);
  const long kmax = bb6_max_kappa(d1);
  if (kappa == 0) {
    r.condition = "kappa = 0: smooth curve of bidegree (d1,d2)";
  } else {
    r.valid = kappa <= kmax;
    r.condition = "0 < kappa <= 2h with 3h+2 <= C(d1-1,2); max admissible kappa = " + std::to_string(kmax);
  }
  return r;
}

inline FormulaResult shustin_kappa_lower(long d) {
  require(d >= 1, Errc::invalid_argument, "need d >= 1");
  FormulaResult r;
  if (d <= 6) {
    static const long table[] = {0, 0, 0, -1, 3, 5, 7};
    r.condition = "tabulated";
    if (d == 3) {
      r.specified = false;
      r.valid = false;
      r.condition = "kappa(3) unspecified";
      return r;
    }
    r.value = mpq_class(table[d]);
    return r;
  }
  const bool zero_three = d % 4 == 0 || d % 4 == 3;
  r.value = zero_three ? mpq_class(d * d - 3 * d + 4, 4) : mpq_class(d * d - 3 * d + 2, 4);
  r.value.canonicalize();
  r.condition = zero_three ? "(d^2-3d+4)/4, d = 0,3 mod 4" : "(d^2-3d+2)/4, d = 1,2 mod 4";
  return r;
}

inline long singularity_degree_a2h(long h) {
  require(h >= 0, Errc::invalid_argument, "need h >= 0");
  return h;
}

/// Dispatch by name for the command line.
inline FormulaResult evaluate_formula(const std::string& name, const std::vector<long>& args) {
  auto need = [&](std::size_t n) {
    require(args.size() == n, Errc::invalid_argument, name + " takes " + std::to_string(n) + " argument(s)");
  };
  if (name == "plucker_genus") return need(2), plucker_genus(args[0], args[1]);
  if (name == "castelnuovo_pi") return need(1), castelnuovo_pi(args[0]);
  if (name == "vdk_dimension") return need(2), vdk_dimension(args[0], args[1]);
  if (name == "barkats_condition") return need(2), barkats_condition(args[0], args[1]);
  if (name == "tono_bound") return need(1), tono_bound(args[0]);
  if (name == "bb6_genus") return need(3), bb6_genus(args[0], args[1], args[2]);
  if (name == "shustin_kappa_lower") return need(1), shustin_kappa_lower(args[0]);
  if (name == "singularity_degree_a2h") {
    need(1);
    return {mpq_class(singularity_degree_a2h(args[0])), true, "A_2h has singularity degree h"};
  }
  fail(Errc::invalid_argument, "unknown formula " + name);
}

}  // namespace quadcusp
