#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "galilei/convergence.hpp"
#include "galilei/enveloping.hpp"
#include "galilei/group_sweeps.hpp"
#include "galilei/io.hpp"

namespace galilei::cli {

using nlohmann::json;

namespace {

constexpr const char* kHypothesisNote = "m=0: hypothesis violated";

std::string format_double(double x, const char* pattern) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

std::string defect_text(const json& defect, const char* pattern) {
  if (defect.is_null()) return "";
  if (defect.is_string()) return defect.get<std::string>();
  return format_double(defect.get<double>(), pattern);
}

json params_json(const ExtensionParams& p) { return params_to_json(p); }

Check exact_check(std::string name, const Rational& defect) {
  return {std::move(name), defect.str(), defect.is_zero(), ""};
}

Check float_check(std::string name, double defect, double tolerance) {
  return {std::move(name), defect, detail::nan_as_inf(defect) <= tolerance, ""};
}

Check skipped(std::string name, std::string note) { return {std::move(name), nullptr, true, std::move(note)}; }

Rational tensor_distance(const LieAlgebra& a, const LieAlgebra& b) {
  Rational worst;
  const auto& ta = a.structure_tensor();
  const auto& tb = b.structure_tensor();
  for (std::size_t i = 0; i < ta.size(); ++i) worst = max_abs(worst, ta[i] - tb[i]);
  return worst;
}

Rational commutator_defect(const EnvelopingAlgebra& env, const NOPoly& p) {
  Rational worst;
  for (std::size_t s = 0; s < slot::count; ++s) {
    const NOPoly commutator = no_commutator(env, NOPoly::generator(s), p);
    for (const auto& [m, c] : commutator.terms()) worst = max_abs(worst, c);
  }
  return worst;
}

std::string regime(const ExtensionParams& p) {
  if (!p.m.is_zero()) return p.l.is_zero() ? "l = 0, m != 0" : "l != 0, m != 0";
  return p.k.is_zero() ? "m = 0, k = 0" : "m = 0, k != 0";
}

json base_config(const RunConfig& config) {
  json j = params_json(config.params);
  j["format"] = config.format == Format::json ? "json" : config.format == Format::csv ? "csv" : "human";
  return j;
}

std::array<double, 2> random_velocity(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0), phi(-std::numbers::pi, std::numbers::pi);
  const double r = 0.9 * std::sqrt(unit(rng)), a = phi(rng);
  return {r * std::cos(a), r * std::sin(a)};
}

LimitExperiment sample_experiment(const std::string& name, std::uint64_t seed, std::size_t index) {
  std::mt19937_64 rng = sample_rng(seed, index);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  if (name == "thomas") {
    const auto v = random_velocity(rng), w = random_velocity(rng);
    return thomas_experiment(v, w, angle(rng));
  }
  if (name == "rotation-cocycle") {
    const auto v = random_velocity(rng);
    const double theta = angle(rng);
    const auto w = random_velocity(rng);
    return rotation_cocycle_experiment(v, theta, w, angle(rng));
  }
  const GroupElement g = random_element(rng, GroupKind::extended);
  const GroupElement h = random_element(rng, GroupKind::extended);
  return name == "mass" ? mass_experiment(g, h) : diagram_experiment(g, h);
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {"thomas", "rotation-cocycle", "mass", "diagram"};
  return names;
}

}  // namespace

bool Report::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

Report verify_algebra(const RunConfig& config) {
  Report r;
  r.command = "verify-algebra";
  r.config = base_config(config);

  LieAlgebra alg = make_galilei_algebra(config.params);
  ExtensionParams params = config.params;
  if (!config.algebra_file.empty()) {
    std::ifstream in(config.algebra_file);
    if (!in) throw ConfigError("cannot open algebra file '" + config.algebra_file + "'");
    try {
      LoadedAlgebra loaded = algebra_from_json(json::parse(in));
      alg = std::move(loaded.algebra);
      params = loaded.params;
    } catch (const json::exception& e) {
      throw ConfigError(std::string("algebra file: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    r.config = base_config(config);
    r.config.update(params_json(params));
    r.config["algebra_file"] = config.algebra_file;
  }

  r.checks.push_back(exact_check("antisymmetry", antisymmetry_defect(alg)));
  r.checks.push_back(exact_check("jacobi", jacobi_defect(alg)));
  if (alg.labels() != galilei_labels()) {
    r.checks.push_back(skipped("theorem1", "basis is not E, H, P1, P2, N1, N2, M"));
  } else if (params.m.is_zero()) {
    r.checks.push_back(skipped("theorem1", kHypothesisNote));
  } else {
    const LieAlgebra shifted = apply_basis_change(alg, theorem1_change(params));
    const LieAlgebra target = make_galilei_algebra({Rational(0), params.m, params.l});
    r.checks.push_back(exact_check("theorem1", tensor_distance(shifted, target)));
  }
  return r;
}

Report casimir(const RunConfig& config) {
  Report r;
  r.command = "casimir";
  r.config = base_config(config);
  r.config["max_degree"] = config.max_degree;

  const ExtensionParams& p = config.params;
  const EnvelopingAlgebra env(make_galilei_algebra(p));

  struct Candidate {
    std::string name;
    NOPoly poly;
    bool central;
  };
  std::vector<Candidate> candidates;
  if (!p.m.is_zero()) {
    candidates.push_back({"C1", casimir_c1(p), p.l.is_zero()});
    candidates.push_back({"C2", casimir_c2(p), p.l.is_zero()});
  } else {
    candidates.push_back({"P^2", casimir_c1_prime(), true});
    candidates.push_back({"NxP", casimir_c2_prime(), p.k.is_zero()});
  }

  json listed = json::array();
  for (const auto& c : candidates) {
    const Rational defect = commutator_defect(env, c.poly);
    Check check{"central:" + c.name, defect.str(), defect.is_zero() == c.central,
                c.central ? "expected central" : "expected not central"};
    r.checks.push_back(std::move(check));
    listed.push_back({{"name", c.name}, {"poly", c.poly.str()}, {"central", defect.is_zero()}});
  }

  const CentralizerBasis basis = centralizer_basis(env, config.max_degree);
  const std::size_t dim = basis.basis.size();
  if (config.max_degree >= 2) {
    std::size_t missing = 0;
    for (const auto& c : candidates) {
      if (c.central && !span_contains(basis.basis, c.poly)) ++missing;
    }
    r.checks.push_back({"centralizer:contains_central_candidates", std::to_string(missing), missing == 0, ""});
  }
  if (!p.m.is_zero() && !p.l.is_zero()) {
    r.checks.push_back({"centralizer:scalars_only", std::to_string(dim - 1), dim == 1, ""});
  } else if (!p.m.is_zero() && config.max_degree == 2) {
    const long diff = static_cast<long>(dim) - 3;
    r.checks.push_back({"centralizer:dimension_3", std::to_string(std::labs(diff)), diff == 0, "spanned by 1, C1, C2"});
  }

  json polys = json::array();
  for (const auto& b : basis.basis) polys.push_back(b.str());
  r.details = {{"regime", regime(p)},
               {"candidates", listed},
               {"centralizer", {{"max_degree", config.max_degree}, {"dimension", dim}, {"basis", polys}}}};
  return r;
}

Report group(const RunConfig& config) {
  Report r;
  r.command = "group";
  r.config = base_config(config);
  r.config["seed"] = config.seed;
  r.config["samples"] = config.samples;
  r.config["tolerance"] = config.tolerance;

  const ExtensionParams& p = config.params;
  const std::size_t n = config.samples;
  const std::uint64_t seed = config.seed;
  const double tol = config.tolerance;
  const ElementFunction zeta = [](const GroupElement& g) { return g.u[0] * g.v[1] + std::sin(g.theta) * g.tau; };

  std::vector<GroupKind> kinds = {GroupKind::covering};
  if (p.l.is_zero()) {
    kinds.insert(kinds.begin(), GroupKind::extended);
  } else {
    r.checks.push_back(skipped("extended", "l != 0 integrates only on the covering group"));
  }

  for (GroupKind kind : kinds) {
    const std::string prefix = std::string(to_string(kind)) + "/";
    r.checks.push_back(float_check(prefix + "associativity", max_associativity_defect(kind, p, n, seed), tol));
    r.checks.push_back(exact_check(prefix + "associativity_exact", max_exact_associativity_defect(kind, p, n, seed)));
    r.checks.push_back(float_check(prefix + "inverse", max_inverse_defect(kind, p, n, seed), tol));
    r.checks.push_back(float_check(prefix + "normalization", max_normalization_defect(kind, p, n, seed), tol));
    r.checks.push_back(
        float_check(prefix + "coboundary_associativity", max_coboundary_associativity_defect(kind, p, zeta, n, seed), tol));
    if (p.m.is_zero()) {
      r.checks.push_back(skipped(prefix + "theorem2", kHypothesisNote));
      r.checks.push_back(skipped(prefix + "theorem2_exact", kHypothesisNote));
    } else {
      r.checks.push_back(float_check(prefix + "theorem2",
                                     max_shift_homomorphism_defect(kind, p, kTheorem2ShiftSign, n, seed), tol));
      r.checks.push_back(exact_check(prefix + "theorem2_exact",
                                     max_exact_shift_homomorphism_defect(kind, p, kTheorem2ShiftSign, n, seed)));
    }
  }
  if (p.l.is_zero()) {
    r.checks.push_back(float_check("covering_consistency", max_covering_consistency_defect(p, n, seed), tol));
  }
  return r;
}

Report contract(const RunConfig& config) {
  Report r;
  r.command = "contract";
  r.config = {{"experiment", config.experiment},
              {"seed", config.seed},
              {"samples", config.samples},
              {"c_grid", config.c_grid},
              {"tolerance", config.tolerance}};
  r.csv_header = {"seed", "experiment", "sample", "c", "error", "zeta_magnitude"};

  std::vector<std::string> names;
  if (config.experiment == "all") {
    names = experiment_names();
  } else {
    names = {config.experiment};
  }

  r.details = json::object();
  for (const auto& name : names) {
    const auto reports = map_indices<ConvergenceReport>(config.samples, Execution::parallel, [&](std::size_t i) {
      return convergence_study(sample_experiment(name, config.seed, i), config.c_grid, Execution::serial);
    });

    double slope_defect = 0.0, zeta_defect = 0.0, limit_defect = 0.0;
    json samples = json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& rep = reports[i];
      slope_defect = std::max(slope_defect, detail::nan_as_inf(std::abs(rep.fitted_slope + 2.0)));
      if (!rep.zeta_magnitudes.empty()) {
        zeta_defect = std::max(zeta_defect, detail::nan_as_inf(std::abs(rep.zeta_slope - 2.0)));
      }
      const double relative = std::abs(rep.final_measured - rep.target) / std::max(std::abs(rep.target), 1e-9);
      limit_defect = std::max(limit_defect, detail::nan_as_inf(relative));

      json s = {{"sample", i}, {"target", rep.target}, {"final_measured", rep.final_measured},
                {"fitted_slope", rep.fitted_slope}};
      if (!rep.zeta_magnitudes.empty()) s["zeta_slope"] = rep.zeta_slope;
      samples.push_back(std::move(s));

      for (std::size_t j = 0; j < rep.c_grid.size(); ++j) {
        r.csv_rows.push_back({std::to_string(config.seed), name, std::to_string(i),
                              format_double(rep.c_grid[j], "%.17g"), format_double(rep.errors[j], "%.17g"),
                              rep.zeta_magnitudes.empty() ? "" : format_double(rep.zeta_magnitudes[j], "%.17g")});
      }
    }
    r.details[name] = samples;

    r.checks.push_back(float_check(name + "/slope", slope_defect, config.tolerance));
    if (name != "diagram") r.checks.push_back(float_check(name + "/limit_relative", limit_defect, 1e-3));
    if (name == "mass") r.checks.push_back(float_check(name + "/zeta_growth", zeta_defect, config.tolerance));
  }
  return r;
}

std::string render(const Report& report, const RunConfig& config) {
  std::ostringstream os;
  switch (config.format) {
    case Format::json: {
      json checks = json::array();
      for (const auto& c : report.checks) {
        json entry = {{"name", c.name}, {"defect", c.defect}, {"pass", c.pass}};
        if (!c.note.empty()) entry["note"] = c.note;
        checks.push_back(std::move(entry));
      }
      json out = {{"command", report.command}, {"config", report.config}, {"checks", checks}};
      if (!report.details.is_null()) out["details"] = report.details;
      out["pass"] = report.pass();
      os << out.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      if (!report.csv_header.empty()) {
        auto line = [&os](const std::vector<std::string>& cells) {
          for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
          os << '\n';
        };
        line(report.csv_header);
        for (const auto& row : report.csv_rows) line(row);
        break;
      }
      const auto p = config.params;
      os << "seed,k,m,l,check,defect,pass\n";
      for (const auto& c : report.checks) {
        os << config.seed << ',' << p.k << ',' << p.m << ',' << p.l << ',' << c.name << ','
           << defect_text(c.defect, "%.17g") << ',' << (c.defect.is_null() ? "skipped" : c.pass ? "true" : "false")
           << '\n';
      }
      break;
    }
    case Format::human: {
      os << report.command << '\n';
      for (const auto& c : report.checks) {
        const char* status = c.defect.is_null() ? "SKIP" : c.pass ? "PASS" : "FAIL";
        os << "  " << status << "  " << c.name;
        if (!c.defect.is_null()) os << "  defect=" << defect_text(c.defect, "%.3e");
        if (!c.note.empty()) os << "  (" << c.note << ")";
        os << '\n';
      }
      if (!report.details.is_null() && report.command != "contract") os << report.details.dump(2) << '\n';
      os << (report.pass() ? "PASS" : "FAIL") << '\n';
      break;
    }
  }
  return os.str();
}

namespace {

struct Options {
  std::string k = "1", m = "1", l = "0";
  std::uint64_t seed = 42;
  std::size_t group_samples = 1000;
  std::size_t contract_samples = 20;
  unsigned max_degree = 2;
  std::string c_grid = "1e2:1e6:logx10";
  double group_tolerance = 1e-12;
  double contract_tolerance = 0.1;
  std::string format = "json";
  std::string out;
  std::string experiment = "all";
  std::string algebra_file;
  std::string kind = "covering";
  std::string g = "{}", h = "{}";
};

constexpr unsigned kMaxDegreeCap = 4;

void add_params(CLI::App* app, Options& o) {
  app->add_option("--k", o.k, "boost-boost charge, rational p/q")->capture_default_str();
  app->add_option("--m", o.m, "mass charge, rational p/q")->capture_default_str();
  app->add_option("--l", o.l, "rotation-time charge, rational p/q")->capture_default_str();
}

void add_output(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"json", "csv", "human"}))
      ->capture_default_str();
  app->add_option("--out", o.out, "write the report to this file instead of stdout");
}

void add_seed(CLI::App* app, Options& o) { app->add_option("--seed", o.seed, "sampling seed")->capture_default_str(); }

void add_degree(CLI::App* app, Options& o) {
  app->add_option("--max-degree", o.max_degree, "degree bound of the centralizer search")
      ->check(CLI::Range(0u, kMaxDegreeCap))
      ->capture_default_str();
}

ExtensionParams parse_params(const Options& o) {
  try {
    return {Rational::parse(o.k), Rational::parse(o.m), Rational::parse(o.l)};
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

Format parse_format(const std::string& f) {
  if (f == "csv") return Format::csv;
  if (f == "human") return Format::human;
  return Format::json;
}

GroupElement parse_element(const std::string& text, const char* what) {
  try {
    return element_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw ConfigError(std::string(what) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(what) + ": " + e.what());
  }
}

Report combine(const std::vector<Report>& parts, const RunConfig& config) {
  Report all;
  all.command = "all";
  all.config = base_config(config);
  all.config["seed"] = config.seed;
  all.details = json::object();
  for (const auto& part : parts) {
    for (auto c : part.checks) {
      c.name = part.command + "/" + c.name;
      all.checks.push_back(std::move(c));
    }
    if (!part.details.is_null() && part.command != "contract") all.details[part.command] = part.details;
  }
  return all;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Extended 2+1 Galilei algebra and group toolkit"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify-algebra", "Jacobi, antisymmetry and the boost-shift isomorphism");
  add_params(verify, o);
  add_output(verify, o);
  verify->add_option("--algebra-file", o.algebra_file, "JSON algebra definition to check instead of the built-in one")
      ->check(CLI::ExistingFile);

  auto* cas = app.add_subcommand("casimir", "Casimir centrality and bounded-degree centralizer");
  add_params(cas, o);
  add_output(cas, o);
  add_degree(cas, o);

  auto* grp = app.add_subcommand("group", "cocycle, inverse, coboundary and isomorphism sweeps");
  add_params(grp, o);
  add_output(grp, o);
  add_seed(grp, o);
  grp->add_option("--samples", o.group_samples, "random samples per sweep")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  grp->add_option("--tolerance", o.group_tolerance, "defect tolerance of floating checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* con = app.add_subcommand("contract", "c -> infinity convergence experiments");
  add_output(con, o);
  add_seed(con, o);
  con->add_option("--samples", o.contract_samples, "random configurations per experiment")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  con->add_option("--c-grid", o.c_grid, "lo:hi:logxN or a comma-separated list")->capture_default_str();
  con->add_option("--tolerance", o.contract_tolerance, "allowed deviation of fitted slopes")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  con->add_option("--experiment", o.experiment, "which experiment to run")
      ->check(CLI::IsMember({"thomas", "rotation-cocycle", "mass", "diagram", "all"}))
      ->capture_default_str();

  auto* cmp = app.add_subcommand("compose", "product of two group elements");
  cmp->set_help_flag("--help", "Print this help message and exit");
  add_params(cmp, o);
  add_output(cmp, o);
  cmp->add_option("--kind", o.kind, "group kind")
      ->check(CLI::IsMember({"extended", "covering"}))
      ->capture_default_str();
  cmp->add_option("--g", o.g, R"(left factor, e.g. {"tau": 1, "v": [1, 0]})");
  cmp->add_option("--h", o.h, "right factor");

  auto* dump = app.add_subcommand("dump-algebra", "write the structure constants as an algebra file");
  add_params(dump, o);
  dump->add_option("--out", o.out, "write to this file instead of stdout");

  auto* suite = app.add_subcommand("all", "verify-algebra, casimir, group and contract with defaults");
  add_params(suite, o);
  add_output(suite, o);
  add_seed(suite, o);
  add_degree(suite, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    RunConfig config;
    config.seed = o.seed;
    config.max_degree = o.max_degree;
    config.format = parse_format(o.format);
    config.experiment = o.experiment;
    config.algebra_file = o.algebra_file;

    std::string text;
    bool pass = true;
    if (*con) {
      config.samples = o.contract_samples;
      config.tolerance = o.contract_tolerance;
      try {
        config.c_grid = parse_c_grid(o.c_grid);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
      if (config.c_grid.size() < 3) throw ConfigError("--c-grid needs at least 3 points for a slope fit");
      const Report r = contract(config);
      text = render(r, config);
      pass = r.pass();
    } else {
      config.params = parse_params(o);
      if (*verify) {
        const Report r = verify_algebra(config);
        text = render(r, config);
        pass = r.pass();
      } else if (*cas) {
        const Report r = casimir(config);
        text = render(r, config);
        pass = r.pass();
      } else if (*grp) {
        config.samples = o.group_samples;
        config.tolerance = o.group_tolerance;
        const Report r = group(config);
        text = render(r, config);
        pass = r.pass();
      } else if (*cmp) {
        const GroupKind kind = o.kind == "extended" ? GroupKind::extended : GroupKind::covering;
        try {
          require_consistent(kind, config.params);
        } catch (const std::invalid_argument& e) {
          throw ConfigError(e.what());
        }
        const GroupElement g = parse_element(o.g, "--g"), h = parse_element(o.h, "--h");
        Report r;
        r.command = "compose";
        r.config = base_config(config);
        r.config["kind"] = o.kind;
        r.details = {{"product", element_to_json(compose(kind, config.params, g, h))},
                     {"cocycle_exponent", cocycle_exponent(kind, config.params, g, h)}};
        text = render(r, config);
      } else if (*dump) {
        text = algebra_to_json(make_galilei_algebra(config.params), config.params).dump(2) + "\n";
      } else {
        RunConfig group_config = config, contract_config = config;
        group_config.samples = o.group_samples;
        group_config.tolerance = o.group_tolerance;
        contract_config.samples = o.contract_samples;
        contract_config.tolerance = o.contract_tolerance;
        contract_config.c_grid = default_c_grid();
        const Report r = combine({verify_algebra(config), casimir(config), group(group_config),
                                  contract(contract_config)},
                                 config);
        text = render(r, config);
        pass = r.pass();
      }
    }

    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out);
      if (!file) throw ConfigError("cannot write '" + o.out + "'");
      file << text;
    }
    return pass ? kPass : kCheckFailed;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace galilei::cli
