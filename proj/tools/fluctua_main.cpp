#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fluctua/acceptance.hpp"
#include "fluctua/cli_config.hpp"
#include "fluctua/fluctuation.hpp"
#include "fluctua/laws.hpp"
#include "fluctua/sparre.hpp"
#include "fluctua/special.hpp"
#include "fluctua/stats.hpp"

namespace {

using namespace fluctua;

// exit codes: 0 ok, 1 criterion failure, 2 usage, 3 domain, 4 unsupported
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ostream& open_sink(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

std::string iso_timestamp() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

struct LawArgs {
  std::string id;
  std::string grid = "0.01:5:200";
  std::string out;
  double z = 0.0;
  double delta = 1.0;
  double sigma2 = 1.0;
  double sigma = 1.0;
  double horizon = 1.0;
};

int cmd_law(const LawArgs& a) {
  std::vector<double> xs = parse_grid(a.grid);
  std::ofstream file;
  std::ostream& os = open_sink(file, a.out);
  std::vector<std::vector<double>> rows;
  if (a.id == "joint_zero") {
    rows.reserve(xs.size() * xs.size());
    for (double y : xs)
      for (double t : xs) rows.push_back({y, t, JointZeroLaw::pdf(y, t)});
    write_csv(os, {"y", "t", "pdf"}, rows);
    return 0;
  }
  std::function<double(double)> pdf, cdf;
  if (a.id == "A") {
    pdf = LawA::pdf;
    cdf = LawA::cdf;
  } else if (a.id == "gamma_half") {
    pdf = GammaHalfLaw::pdf;
    cdf = GammaHalfLaw::cdf;
  } else if (a.id == "arcsine") {
    pdf = ArcsineLaw::pdf;
    cdf = ArcsineLaw::cdf;
  } else if (a.id == "last_exit") {
    LastExitLaw law(a.delta, a.sigma, a.horizon);
    pdf = [law](double w) { return law.pdf(w); };
    cdf = [law](double w) { return law.cdf(w); };
  } else if (a.id == "first_passage") {
    FirstPassageLaw law(a.z > 0.0 ? a.z : 1.0, a.delta, a.sigma2);
    pdf = [law](double t) { return law.pdf(t); };
    cdf = [law](double t) { return law.cdf(t); };
  } else if (a.id == "occupation") {
    OccupationLaw law(a.z, a.delta, a.sigma2);
    pdf = [law](double t) { return law.pdf(t); };
    cdf = [law](double t) { return law.cdf(t); };
  } else {
    throw usage_error("unknown law id: " + a.id);
  }
  rows.reserve(xs.size());
  for (double x : xs) rows.push_back({x, pdf(x), cdf(x)});
  write_csv(os, {"x", "pdf", "cdf"}, rows);
  return 0;
}

struct GfArgs {
  double p = -1.0;  // set => +/-1 walk
  std::vector<int> offsets;
  std::vector<double> probs;
  std::size_t order = 32;
  std::size_t provider_range = 2000;
  std::string out;
};

int cmd_gf(const GfArgs& a) {
  LatticeStepLaw law = a.p >= 0.0 ? LatticeStepLaw::pm1(a.p)
                                  : LatticeStepLaw(a.offsets, a.probs);
  std::size_t range = std::max(a.order, a.provider_range);
  auto provider = SignProbProvider::from_lattice(law, range);
  LadderSummary lad = ladder_series(provider, a.order);
  TruncatedSeries one = TruncatedSeries::constant(1.0, a.order);
  TruncatedSeries prod = (one - lad.r) * (one - lad.a);
  TruncatedSeries lin = TruncatedSeries::one_minus_z(a.order);
  double resid = 0.0;
  for (std::size_t i = 0; i <= a.order; ++i)
    resid = std::max(resid, std::abs(prod[i] - lin[i]));
  // throws for nonpositive drift (exit 3): the occupation count is only
  // finite when the walk drifts up
  OccupationSeries occ = occupation_gf(provider, a.order);
  nlohmann::json j;
  j["order"] = a.order;
  j["drift"] = provider.delta();
  j["variance"] = provider.sigma2();
  j["r"] = lad.r.coeffs();
  j["a"] = lad.a.coeffs();
  j["r1"] = lad.r1;
  j["r1_bound"] = lad.r1_bound;
  j["mu"] = lad.mu;
  j["occupation"] = occ.pmf.coeffs();
  j["occupation_tail_bound"] = occ.tail_bound;
  j["occupation_mean"] = occ.mean_estimate;
  j["duality_residual"] = resid;
  std::ofstream file;
  std::ostream& os = open_sink(file, a.out);
  os << j.dump(2) << "\n";
  return 0;
}

struct McFlags {
  std::string config_path;
  std::string out;
  std::string samples_path;
  std::string ecdf_path;
  std::optional<std::string> family_kind, functional, target_law;
  std::optional<double> family_p, family_delta, family_sigma2,
      family_half_width, level, rule_epsilon, target_scale, target_spacing;
  std::optional<std::uint64_t> horizon, n_paths, seed, rule_max_steps;
  std::optional<unsigned> workers;
};

int cmd_mc(const McFlags& f) {
  McRunConfig cfg;
  cfg.seed = default_master_seed(cfg.seed);
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) throw usage_error("cannot read config file: " + f.config_path);
    nlohmann::json j = nlohmann::json::parse(in);
    // a previously emitted report embeds its resolved config; accept both
    if (j.is_object() && j.contains("config")) j = j["config"];
    apply_json(cfg, j);
  }
  if (f.family_kind) cfg.family_kind = *f.family_kind;
  if (f.family_p) cfg.family_p = *f.family_p;
  if (f.family_delta) cfg.family_delta = *f.family_delta;
  if (f.family_sigma2) cfg.family_sigma2 = *f.family_sigma2;
  if (f.family_half_width) cfg.family_half_width = *f.family_half_width;
  if (f.functional) cfg.functional = *f.functional;
  if (f.level) cfg.level = *f.level;
  if (f.horizon) cfg.horizon = *f.horizon;
  if (f.n_paths) cfg.n_paths = *f.n_paths;
  if (f.seed) cfg.seed = *f.seed;
  if (f.workers) cfg.workers = *f.workers;
  if (f.rule_epsilon) cfg.rule_epsilon = *f.rule_epsilon;
  if (f.rule_max_steps) cfg.rule_max_steps = *f.rule_max_steps;
  if (f.target_law) cfg.target_law = *f.target_law;
  if (f.target_scale) cfg.target_scale = *f.target_scale;
  if (f.target_spacing) cfg.target_spacing = *f.target_spacing;

  SimulationConfig sim_cfg = build_simulation(cfg);
  SimResult sim = simulate(sim_cfg);

  EmpiricalSample raw = EmpiricalSample::from_values(
      sim.primary, cfg.seed, config_digest(cfg));
  MomentReport mean = moment_report(raw, 1);

  nlohmann::json report;
  report["config"] = to_json(cfg);
  report["n"] = cfg.n_paths;
  report["exhausted"] = sim.exhausted;
  report["mean"] = mean.estimate;
  report["se"] = mean.se;
  report["digest"] = to_hex(sample_digest(sim.primary));
  report["timestamp"] = iso_timestamp();

  std::function<double(double)> target;
  EmpiricalSample scaled = raw;
  if (!cfg.target_law.empty()) {
    target = named_cdf(cfg.target_law);
    scaled = scaled_sample(sim, sim_cfg, cfg.target_spacing, cfg.target_scale);
    KSReport ks = ks_against(scaled, target);
    report["target"] = cfg.target_law;
    report["ks"] = ks.ks;
    report["ks_band"] = ks.band;
  }
  if (!f.samples_path.empty()) {
    std::ofstream file;
    std::ostream& os = open_sink(file, f.samples_path);
    std::vector<std::vector<double>> rows;
    rows.reserve(sim.primary.size());
    for (std::size_t i = 0; i < sim.primary.size(); ++i)
      rows.push_back({double(i), sim.primary[i]});
    write_csv(os, {"path", "value"}, rows);
  }
  if (!f.ecdf_path.empty()) {
    if (!target) throw usage_error("--ecdf needs target.law");
    std::ofstream file;
    std::ostream& os = open_sink(file, f.ecdf_path);
    std::vector<std::vector<double>> rows;
    rows.reserve(scaled.n());
    for (std::size_t i = 0; i < scaled.n(); ++i) {
      double x = scaled.values[i];
      rows.push_back({x, double(i + 1) / double(scaled.n()), target(x)});
    }
    write_csv(os, {"x", "ecdf", "cdf_target"}, rows);
  }
  std::ofstream file;
  std::ostream& os = open_sink(file, f.out);
  os << report.dump(2) << "\n";
  return 0;
}

struct VerifyArgs {
  std::vector<std::string> only;
  double epsilon = 1e-9;
  double paths_scale = 1.0;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
};

int cmd_verify(const VerifyArgs& a) {
  AcceptanceOptions opt;
  opt.seed = a.seed ? *a.seed : default_master_seed(opt.seed);
  opt.epsilon = a.epsilon;
  opt.paths_scale = a.paths_scale;
  opt.workers = a.workers;
  opt.only = a.only;
  std::vector<CriterionResult> results;
  try {
    results = run_acceptance(opt, std::cout);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  return all_passed(results) ? 0 : 1;
}

int cmd_sparre(const std::vector<std::string>& tokens) {
  std::vector<double> x;
  for (const std::string& tok : tokens) {
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
      throw usage_error("not a number: " + tok);
    x.push_back(v);
  }
  if (x.empty()) {
    double v;
    while (std::cin >> v) x.push_back(v);
  }
  std::vector<double> y = sparre_transform(x);
  std::vector<std::size_t> idx = negative_partial_sum_indices(x);
  std::vector<double> back = sparre_inverse(y);
  auto print_seq = [](const char* label, const std::vector<double>& v) {
    std::cout << label << ":";
    for (double t : v) std::cout << " " << format_sci(t);
    std::cout << "\n";
  };
  print_seq("input", x);
  print_seq("rearranged", y);
  std::cout << "negative_partial_sums: " << idx.size() << "\n";
  std::cout << "min_place: " << first_min_place(y) << "\n";
  std::cout << "inverse_roundtrip: " << (back == x ? "exact" : "MISMATCH")
            << "\n";
  return back == x ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "occupation, minimum and last-exit laws of small-drift random walks: "
      "closed forms, generating functions, seeded simulation"};
  app.require_subcommand(1);

  LawArgs law_args;
  CLI::App* law = app.add_subcommand(
      "law", "print pdf/cdf tables of the analytic laws as CSV");
  law->add_option("--law", law_args.id,
                  "A | gamma_half | arcsine | last_exit | first_passage | "
                  "occupation | joint_zero")
      ->required();
  law->add_option("--grid", law_args.grid, "evaluation grid a:b:n");
  law->add_option("--out", law_args.out, "output file (default stdout)");
  law->add_option("--z", law_args.z, "level (occupation, first_passage)");
  law->add_option("--delta", law_args.delta, "drift");
  law->add_option("--sigma2", law_args.sigma2, "step variance");
  law->add_option("--sigma", law_args.sigma, "diffusion scale (last_exit)");
  law->add_option("--horizon", law_args.horizon, "time horizon (last_exit)");

  GfArgs gf_args;
  CLI::App* gf = app.add_subcommand(
      "gf", "ladder and occupation generating functions of a lattice walk");
  gf->add_option("--p", gf_args.p, "+/-1 walk up-probability");
  gf->add_option("--offsets", gf_args.offsets,
                 "integer step support (with --probs)");
  gf->add_option("--probs", gf_args.probs, "step probabilities");
  gf->add_option("--order", gf_args.order, "series order K");
  gf->add_option("--provider-range", gf_args.provider_range,
                 "sign-probability range for the tail bounds");
  gf->add_option("--out", gf_args.out, "output file (default stdout)");

  McFlags mc_flags;
  CLI::App* mc = app.add_subcommand(
      "mc", "seeded parallel simulation of walk functionals");
  mc->add_option("--config", mc_flags.config_path,
                 "JSON config (flat dotted keys); a report file with an "
                 "embedded config is accepted too");
  mc->add_option("--out", mc_flags.out, "report file (default stdout)");
  mc->add_option("--samples", mc_flags.samples_path, "raw sample CSV");
  mc->add_option("--ecdf", mc_flags.ecdf_path,
                 "x,ecdf,cdf_target CSV (needs target.law)");
  mc->add_option("--family.kind", mc_flags.family_kind,
                 "pm1 | normal | uniform | lattice | tilted_normal | "
                 "tilted_lattice");
  mc->add_option("--family.p", mc_flags.family_p);
  mc->add_option("--family.delta", mc_flags.family_delta);
  mc->add_option("--family.sigma2", mc_flags.family_sigma2);
  mc->add_option("--family.half_width", mc_flags.family_half_width);
  mc->add_option("--functional", mc_flags.functional,
                 "z0 | z_level | min | last_zero | zeros_count | last_return");
  mc->add_option("--level", mc_flags.level);
  mc->add_option("--horizon", mc_flags.horizon);
  mc->add_option("--n_paths", mc_flags.n_paths);
  mc->add_option("--seed", mc_flags.seed);
  mc->add_option("--workers", mc_flags.workers);
  mc->add_option("--rule.epsilon", mc_flags.rule_epsilon);
  mc->add_option("--rule.max_steps", mc_flags.rule_max_steps);
  mc->add_option("--target.law", mc_flags.target_law,
                 "A | gamma_half | arcsine | exp1 | half_normal");
  mc->add_option("--target.scale", mc_flags.target_scale);
  mc->add_option("--target.spacing", mc_flags.target_spacing);

  VerifyArgs verify_args;
  CLI::App* verify =
      app.add_subcommand("verify", "run the acceptance criteria");
  verify->add_option("--only", verify_args.only, "criterion names")
      ->delimiter(',');
  verify->add_option("--epsilon", verify_args.epsilon,
                     "stopping-rule residual budget");
  verify->add_option("--paths-scale", verify_args.paths_scale,
                     "scale every path count");
  verify->add_option("--seed", verify_args.seed, "master seed");
  verify->add_option("--workers", verify_args.workers);

  CLI::App* sparre =
      app.add_subcommand("sparre", "rearrange a sequence and report the "
                                   "first minimum place (reads numbers from "
                                   "arguments or stdin)");
  sparre->allow_extras();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(law)) return cmd_law(law_args);
    if (app.got_subcommand(gf)) return cmd_gf(gf_args);
    if (app.got_subcommand(mc)) return cmd_mc(mc_flags);
    if (app.got_subcommand(verify)) return cmd_verify(verify_args);
    if (app.got_subcommand(sparre)) return cmd_sparre(sparre->remaining());
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const fluctua::unsupported_family_error& e) {
    std::cerr << "unsupported family: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
