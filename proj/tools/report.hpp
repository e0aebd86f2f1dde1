#pragma once

// JSON encodings of library results for the command line.

#include <json.hpp>

#include "quadcusp/formulas.hpp"
#include "quadcusp/hyperell.hpp"

namespace quadcusp::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "quadcusp-report/1";

inline json to_json(const SmoothnessReport& r) {
  json j;
  j["verdict"] = verdict_name(r.verdict);
  j["charts_checked"] = r.charts_checked;
  j["certificate"] = json::array();
  for (const auto& c : r.certificate)
    j["certificate"].push_back({{"chart", c.chart},
                                {"method", c.method},
                                {"resultant_degree", c.resultant_degree},
                                {"attempts", c.attempts},
                                {"points_found", c.points_found}});
  j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  j["excised"] = r.excised;
  j["vertex_on_curve"] = r.vertex_on_curve;
  return j;
}

inline json to_json(const std::vector<CheckItem>& checks) {
  json a = json::array();
  for (const auto& c : checks) a.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return a;
}

inline json to_json(const RulingRecord& r) {
  json j{{"ruling", r.ruling}, {"restriction", r.restriction}, {"distinct", r.distinct}, {"profile", r.profile}};
  if (r.multiplicity_at_point >= 0) j["multiplicity_at_point"] = r.multiplicity_at_point;
  return j;
}

inline json to_json(const ProjectionVerdict& v) {
  json j;
  j["injective"] = v.injective;
  j["rulings"] = json::array();
  for (const auto& r : v.rulings) j["rulings"].push_back(to_json(r));
  j["failure_witness"] =
      v.failure_witness ? json::array({v.failure_witness->first, v.failure_witness->second}) : json(nullptr);
  return j;
}

inline json to_json(const InnerVerdict& v) {
  json j{{"inA", v.inA}, {"inB", v.inB}, {"rulings", json::array()}};
  for (const auto& r : v.rulings) j["rulings"].push_back(to_json(r));
  return j;
}

inline json to_json(const InnerSets& s) {
  return {{"p", s.p},
          {"extension_degree", s.extension_degree},
          {"points_on_curve", s.points_on_curve},
          {"singular_points", s.singular_points},
          {"A_count", s.A_members.size()},
          {"B_count", s.B_members.size()},
          {"A_members", s.A_members},
          {"B_members", s.B_members}};
}

inline json to_json(const FormulaResult& r) {
  json j;
  if (!r.specified) j["value"] = nullptr;
  else if (r.integral()) j["value"] = r.value.get_num().get_si();
  else j["value"] = r.value.get_str();
  j["valid"] = r.valid;
  j["condition"] = r.condition;
  return j;
}

inline json to_json(const PrimeField& k, const A1Report& r) {
  json j;
  j["genus"] = r.genus;
  j["N_p"] = r.np_divisor;
  j["h0_N_p"] = r.h0_np;
  j["h0_N_p_recipe"] = r.h0_np_recipe;
  j["u1"] = {{"A", poly::to_string(k, r.psi.first, "x")},
             {"B", poly::to_string(k, r.psi.second, "x")},
             {"delta", poly::to_string(k, r.delta, "x")}};
  j["image"] = to_string(k, r.image);
  j["image_bidegree"] = {r.image.d1, r.image.d2};
  j["q"] = to_string(k, r.q);
  j["image_at_q"] = k.to_string(r.image_at_q);
  j["projection"] = to_json(r.verdict);
  j["profiles"] = r.profiles;
  j["arithmetic_genus"] = r.arithmetic_genus;
  j["singularities"] = r.singularities;
  return j;
}

inline json to_json(const PrimeField& k, const RRSpace<Fp>& s) {
  json j;
  j["delta"] = poly::to_string(k, s.delta, "x");
  j["dimension"] = s.dimension;
  j["basis"] = json::array();
  for (const auto& [a, b] : s.basis)
    j["basis"].push_back({{"A", poly::to_string(k, a, "x")}, {"B", poly::to_string(k, b, "x")}});
  return j;
}

}  // namespace quadcusp::report
