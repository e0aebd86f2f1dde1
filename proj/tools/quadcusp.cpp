// quadcusp: command-line front end.
//
//   quadcusp construct --quadric 2 3 --field p:101 --seed 0
//   quadcusp construct --cone 3
//   quadcusp construct --quadric 4 4 --cusps 1 1
//   quadcusp construct --quadric 3 3 --scheme "fat@((1:1),(1:2))" --scheme "cusp:h=1@((1:3),(1:4));tangent=(1,1)"
//   quadcusp project-check --curve "x0*y1^2 - x1*y0^2" --center "((1:0),(0:1))"
//   quadcusp census --curve "x0*y1^2 - x1*y0^2" --field p:7 [--csv]
//   quadcusp hyperelliptic --f "x^6 - 1" --divisor "2*(0,y+)" [--basis]
//   quadcusp hyperelliptic --f "..." --pipeline --o "(0,0)" [--p "(5,y+)"]
//   quadcusp formulas castelnuovo_pi 6

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <random>

#include "quadcusp/text.hpp"
#include "report.hpp"

using namespace quadcusp;
using report::json;

namespace {

int exit_code(Errc e) {
  switch (e) {
    case Errc::parse:
    case Errc::invalid_argument:
      return 2;
    case Errc::retries_exhausted:
    case Errc::empty_system:
    case Errc::degree_negative:
    case Errc::overlapping_support:
    case Errc::zero_tangent:
    case Errc::vertex_support:
    case Errc::point_not_on_line:
      return 3;
    case Errc::small_characteristic:
    case Errc::even_characteristic:
    case Errc::unsupported_field:
      return 5;
    default:
      return 4;
  }
}

struct Run {
  std::string command;
  std::string field = "p:101";
  std::uint64_t seed = 0;
  bool timing = false;
  json inputs = json::object();
  json result = json::object();
  std::vector<std::string> warnings;

  json finish(double seconds) const {
    json j;
    j["schema"] = report::kSchema;
    j["command"] = command;
    j["inputs"] = inputs;
    j["field"] = field;
    j["seed"] = seed;
    j["result"] = result;
    j["timing"] = timing ? json(seconds) : json(nullptr);
    j["warnings"] = warnings;
    return j;
  }
};

void warn(Run& run, const std::string& w) {
  if (std::find(run.warnings.begin(), run.warnings.end(), w) == run.warnings.end()) run.warnings.push_back(w);
}

template <class F>
void with_field(const std::string& spec, F&& body) {
  auto f = parse_field(spec);
  std::visit([&](const auto& k) { body(k); }, f);
}

// --- construct --------------------------------------------------------------

struct ConstructArgs {
  std::vector<int> quadric, cusps;
  std::vector<std::string> scheme;
  int cone = 0;
  std::string point, point2;
  int retries = kDefaultRetries;
};

template <Field K>
json construction_json(const K& k, const Construction<elem_t<K>>& c) {
  json j;
  j["ambient"] = ambient_name(c.space.ambient);
  j["space"] = c.space.describe();
  if (c.space.ambient == Ambient::smooth_quadric) j["curve"] = to_string(k, as_biform<K>(c.space, c.member));
  else j["curve"] = to_string(k, as_coneform<K>(c.space, c.member));
  j["scheme"] = json::array();
  for (const auto& g : c.system.scheme.generators) j["scheme"].push_back(to_string(k, g));
  j["scheme_degree"] = c.system.scheme.degree();
  j["h0"] = c.system.h0;
  j["h1"] = c.system.h1;
  j["seed_used"] = c.seed;
  j["attempts"] = c.attempts;
  j["target_genus"] = c.target_genus;
  j["experimental"] = c.experimental;
  j["smoothness"] = report::to_json(c.smoothness);
  j["checks"] = report::to_json(c.checks);
  j["notes"] = c.notes;
  return j;
}

/// The linear system of an explicit scheme and one seeded member of it.
template <Field K>
void construct_from_scheme(Run& run, const K& k, const ConstructArgs& a) {
  using E = elem_t<K>;
  require(a.cusps.empty(), Errc::invalid_argument, "--scheme and --cusps are exclusive");
  require((a.quadric.size() == 2) != (a.cone > 0), Errc::invalid_argument, "--scheme needs --quadric d1 d2 or --cone d");
  const FormSpace space = a.cone > 0 ? FormSpace{Ambient::cone, a.cone, 0}
                                     : FormSpace{Ambient::smooth_quadric, a.quadric[0], a.quadric[1]};
  std::vector<SchemeGenerator<E>> gens;
  for (const auto& t : a.scheme) gens.push_back(parse_scheme_generator(k, space.ambient, t));
  auto z = make_scheme(k, space.ambient, gens);
  auto sys = system(k, space, z);
  json& r = run.result;
  r["ambient"] = ambient_name(space.ambient);
  r["space"] = space.describe();
  r["scheme"] = json::array();
  for (const auto& g : z.generators) r["scheme"].push_back(to_string(k, g));
  r["scheme_degree"] = z.degree();
  r["h0"] = sys.h0;
  r["h1"] = sys.h1;
  r["expected_h0"] = std::max(0, space.dimension() - z.degree());
  if (sys.h0 == 0) return;
  auto member = random_member(k, sys, run.seed);
  std::vector<SurfacePoint<E>> excise;
  for (const auto& g : z.generators)
    if (!std::holds_alternative<RulingDivisor<E>>(g)) excise.push_back(support(g));
  SmoothnessReport rep;
  if (space.ambient == Ambient::smooth_quadric) {
    auto f = as_biform<K>(space, member);
    r["curve"] = to_string(k, f);
    rep = smoothness_certificate(k, f, excise, run.seed);
  } else {
    auto g = as_coneform<K>(space, member);
    r["curve"] = to_string(k, g);
    rep = smoothness_certificate(k, g, excise, run.seed);
  }
  r["smoothness"] = report::to_json(rep);
}

void cmd_construct(Run& run, const ConstructArgs& a) {
  run.inputs["quadric"] = a.quadric;
  run.inputs["cone"] = a.cone;
  run.inputs["cusps"] = a.cusps;
  run.inputs["retries"] = a.retries;
  run.inputs["scheme"] = a.scheme;
  with_field(run.field, [&](const auto& k) {
    if (!a.scheme.empty()) {
      construct_from_scheme(run, k, a);
      return;
    }
    if (!a.cusps.empty()) {
      require(a.quadric.size() == 2 && a.cusps.size() == 2, Errc::invalid_argument, "--cusps needs --quadric d1 d2");
      auto c = construct_cuspidal_curve(k, a.quadric[0], a.quadric[1], a.cusps[0], a.cusps[1], run.seed, a.retries);
      run.result = construction_json(k, c);
      auto g = bb6_genus(a.quadric[0], a.quadric[1], a.cusps[0] + a.cusps[1]);
      run.result["genus"] = report::to_json(g);
      if (c.experimental) warn(run, "experimental_below_paper_threshold");
      warn(run, "irreducibility_assumed");
      return;
    }
    if (a.cone > 0) {
      auto p = a.point.empty() ? cone_point(k, {k.one(), k.one(), k.one(), k.zero()}) : parse_cone_point(k, a.point);
      run.inputs["point"] = to_string(k, p);
      auto c = construct_cone_curve(k, a.cone, p, run.seed, a.retries);
      run.result = construction_json(k, c);
      auto q = cone_point(k, {p.X[0], p.X[1], p.X[2], k.add(p.X[3], k.one())});
      run.result["projection_center"] = to_string(k, q);
      run.result["projection"] = report::to_json(outer_injectivity_cone(k, as_coneform<std::decay_t<decltype(k)>>(c.space, c.member), q));
      warn(run, "irreducibility_assumed");
      return;
    }
    require(a.quadric.size() == 2, Errc::invalid_argument, "give --quadric d1 d2, --cone d, or --cusps");
    using E = elem_t<std::decay_t<decltype(k)>>;
    auto o = a.point.empty() ? quadric_point(k, P1Point<E>{k.one(), k.zero()}, P1Point<E>{k.one(), k.one()})
                             : parse_quadric_point(k, a.point);
    auto o2 = a.point2.empty() ? quadric_point(k, P1Point<E>{k.one(), k.one()}, P1Point<E>{k.one(), k.zero()})
                               : parse_quadric_point(k, a.point2);
    run.inputs["point"] = to_string(k, o);
    run.inputs["point2"] = to_string(k, o2);
    auto c = construct_smooth_tangent_curve(k, a.quadric[0], a.quadric[1], o, o2, run.seed, a.retries);
    run.result = construction_json(k, c);
    auto q = quadric_point(k, o.x, o2.y);
    run.result["projection_center"] = to_string(k, q);
    run.result["projection"] =
        report::to_json(outer_injectivity_quadric(k, as_biform<std::decay_t<decltype(k)>>(c.space, c.member), q));
    warn(run, "irreducibility_assumed");
  });
}

// --- project-check / census ---------------------------------------------------

bool is_cone_text(const std::string& curve) { return curve.find('X') != std::string::npos; }

void cmd_project_check(Run& run, const std::string& curve, const std::string& center, bool inner) {
  run.inputs["curve"] = curve;
  run.inputs["center"] = center;
  run.inputs["mode"] = inner ? "inner" : "outer";
  with_field(run.field, [&](const auto& k) {
    if (is_cone_text(curve)) {
      auto g = parse_coneform(k, curve);
      auto q = parse_cone_point(k, center);
      if (inner) {
        run.result = report::to_json(inner_membership_cone(k, g, q));
      } else {
        auto v = outer_injectivity_cone(k, g, q);
        run.result = report::to_json(v);
        for (const auto& w : v.warnings) warn(run, w);
      }
      return;
    }
    auto f = parse_biform(k, curve);
    auto q = parse_quadric_point(k, center);
    if (inner) {
      run.result = report::to_json(inner_membership_quadric(k, f, q));
    } else {
      auto v = outer_injectivity_quadric(k, f, q);
      run.result = report::to_json(v);
      for (const auto& w : v.warnings) warn(run, w);
    }
  });
}

std::vector<InnerSets> run_census(const std::string& field, const std::string& curve, int cap) {
  auto f = parse_field(field);
  auto k = std::get_if<PrimeField>(&f);
  require(k != nullptr, Errc::unsupported_field, "census needs a prime field");
  if (is_cone_text(curve)) return census_inner_sets(*k, parse_coneform(*k, curve), cap);
  return census_inner_sets(*k, parse_biform(*k, curve), cap);
}

// --- hyperelliptic -------------------------------------------------------------

struct HyperArgs {
  std::string f, divisor, o, p;
  bool pipeline = false, basis = false;
};

void cmd_hyperelliptic(Run& run, const HyperArgs& a) {
  run.inputs["f"] = a.f;
  auto field = parse_field(run.field);
  auto kp = std::get_if<PrimeField>(&field);
  require(kp != nullptr, Errc::unsupported_field, "hyperelliptic computations need a prime field");
  const auto& k = *kp;
  require(k.prime() != 2, Errc::even_characteristic, "characteristic 2 is not supported");
  auto c = make_hyperelliptic(k, parse_univariate(k, a.f, "x"));
  WeierstrassReport wr;
  auto w = weierstrass_points(k, c, &wr);
  run.result["genus"] = c.genus;
  run.result["weierstrass"] = {{"rational", wr.rational}, {"in_extensions", wr.in_extensions}};
  json pts = json::array();
  for (const auto& p : w) pts.push_back(to_string(k, p));
  run.result["weierstrass"]["points"] = pts;
  if (a.pipeline) {
    run.inputs["o"] = a.o;
    require(!a.o.empty() || !w.empty(), Errc::not_weierstrass, "no rational Weierstrass point; pass --o");
    auto o = a.o.empty() ? w[0] : parse_hpoint(k, c, a.o);
    HPoint<Fp> p;
    if (a.p.empty()) {
      std::mt19937_64 rng(run.seed);
      p = sample_point(k, c, rng);
    } else {
      p = parse_hpoint(k, c, a.p);
    }
    run.inputs["p"] = to_string(k, p);
    run.result["pipeline"] = report::to_json(k, theorem_a1_pipeline(k, c, o, p));
    warn(run, "irreducibility_assumed");
    return;
  }
  require(!a.divisor.empty(), Errc::invalid_argument, "give --divisor or --pipeline");
  run.inputs["divisor"] = a.divisor;
  auto d = parse_hdivisor(k, c, a.divisor);
  run.result["divisor"] = to_string(k, d);
  run.result["degree"] = d.degree();
  run.result["h1"] = h1_effective(k, c, d);
  run.result["h0"] = h0_effective(k, c, d);
  auto cls = classify_series(k, c, d);
  run.result["classification"] = {{"type", cls.type}, {"h0", cls.h0}, {"notes", cls.notes}};
  if (a.basis) {
    auto s = rr_space(k, c, d);
    run.result["rr_space"] = report::to_json(k, s);
    if (s.dimension > 0) run.result["base_locus"] = to_string(k, base_locus(k, c, s));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadcusp: curves on quadrics, cuspidal projections, hyperelliptic series"};
  app.require_subcommand(1);
  Run run;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", run.field, "q or p:<prime>");
    sub->add_option("--seed", run.seed, "random seed");
    sub->add_flag("--timing", run.timing, "include wall-clock time in the report");
  };

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "construct a curve");
  common(construct);
  construct->add_option("--quadric", ca.quadric, "bidegree d1 d2")->expected(2);
  construct->add_option("--cone", ca.cone, "degree on the quadric cone");
  construct->add_option("--cusps", ca.cusps, "cusp orders alpha beta")->expected(2);
  construct->add_option("--point", ca.point, "tangency point o (or p on the cone)");
  construct->add_option("--point2", ca.point2, "second tangency point o'");
  construct->add_option("--retries", ca.retries, "draws before giving up");
  construct->add_option("--scheme", ca.scheme, "scheme generator, repeatable: ruling:(1,0)@p^m, fat@p, cusp:h=2@p;tangent=(1,1)");

  std::string curve, center;
  bool inner = false, csv = false;
  int cap = 1;
  auto* project = app.add_subcommand("project-check", "injectivity of a projection");
  common(project);
  project->add_option("--curve", curve, "curve polynomial")->required();
  project->add_option("--center", center, "center (outer) or curve point (inner)")->required();
  project->add_flag("--inner", inner, "inner projection from a curve point");

  auto* census = app.add_subcommand("census", "inner sets over finite fields");
  common(census);
  census->add_option("--curve", curve, "curve polynomial")->required();
  census->add_option("--extension", cap, "largest extension degree");
  census->add_flag("--csv", csv, "CSV instead of JSON");
  census->add_flag("--json", [&](std::int64_t) { csv = false; }, "JSON output (default)");

  HyperArgs ha;
  auto* hyper = app.add_subcommand("hyperelliptic", "divisors on y^2 = f(x)");
  common(hyper);
  hyper->add_option("--f", ha.f, "f(x) of degree 2g+2")->required();
  hyper->add_option("--divisor", ha.divisor, "e.g. 2*(0,0)+3*(7,y+)+1*R");
  hyper->add_flag("--basis", ha.basis, "include a Riemann-Roch basis and base locus");
  hyper->add_flag("--pipeline", ha.pipeline, "run the g^2_{g+3} construction");
  hyper->add_option("--o", ha.o, "Weierstrass point o");
  hyper->add_option("--p", ha.p, "non-Weierstrass point p");

  std::string formula;
  std::vector<long> fargs;
  auto* formulas = app.add_subcommand("formulas", "closed-form numerology");
  formulas->add_option("name", formula, "formula name")->required();
  formulas->add_option("args", fargs, "integer arguments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (construct->parsed()) {
      run.command = "construct";
      cmd_construct(run, ca);
    } else if (project->parsed()) {
      run.command = "project-check";
      cmd_project_check(run, curve, center, inner);
    } else if (census->parsed()) {
      run.command = "census";
      run.inputs = {{"curve", curve}, {"extension", cap}};
      auto sets = run_census(run.field, curve, cap);
      if (csv) {
        std::cout << "extension_degree,point,inA,inB\n";
        for (const auto& s : sets)
          for (const auto& p : s.smooth_members) {
            const bool a = std::find(s.A_members.begin(), s.A_members.end(), p) != s.A_members.end();
            const bool b = std::find(s.B_members.begin(), s.B_members.end(), p) != s.B_members.end();
            std::cout << s.extension_degree << ",\"" << p << "\"," << a << "," << b << "\n";
          }
        return 0;
      }
      run.result["levels"] = json::array();
      for (const auto& s : sets) run.result["levels"].push_back(report::to_json(s));
      run.result["evidence"] = "finite-field census; not a proof over the algebraic closure";
    } else if (hyper->parsed()) {
      run.command = "hyperelliptic";
      cmd_hyperelliptic(run, ha);
    } else if (formulas->parsed()) {
      run.command = "formulas";
      run.inputs = {{"name", formula}, {"args", fargs}};
      run.field = "none";
      run.result = report::to_json(evaluate_formula(formula, fargs));
    }
  } catch (const Error& e) {
    json j{{"schema", report::kSchema},
           {"command", run.command},
           {"inputs", run.inputs},
           {"error", {{"code", std::string(errc_name(e.code()))}, {"message", e.what()}}}};
    std::cout << j.dump(2) << "\n";
    std::cerr << "quadcusp: " << e.what() << "\n";
    return exit_code(e.code());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << run.finish(secs).dump(2) << "\n";
  return 0;
}
