// verify: run a suite or a single check and report.
//
//   verify circle-core [--out DIR] [--seed S] [--config FILE]
//   verify suite --config FILE
//   verify bernstein --manifold circle --n 8 --p 2 --k 1 --f monomial
//
// Exit codes: 0 all asserted checks passed, 1 a check failed, 2 usage or
// parameter error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "riesz/checks.hpp"
#include "riesz/suites.hpp"

using namespace riesz;

namespace {

struct Args {
  std::string manifold = "circle";
  std::string f;
  int n = -1, m = 0, k = -1, N = 0, l = -1, K = 10000, axis = 1, d = 3, cap = 20, group_grid = 8, degree = 10;
  std::string p = "2", q = "inf";
  double r = 0.0, omega = 0.0, eps = 0.0;
  std::uint64_t seed = 0x5EED;
  std::string formula;
  std::vector<int> indices, n_values = {8, 16, 32, 64, 128};
};

std::uint64_t env_seed(std::uint64_t fallback) {
  const char* s = std::getenv("RIESZ_SEED");
  if (!s || !*s) return fallback;
  return std::stoull(s, nullptr, 0);
}

BandLimited make_function(const Args& a, const ManifoldId& manifold, int n) {
  const std::string kind = !a.f.empty() ? a.f : manifold.is_sphere() ? "polynomial" : "monomial";
  if (manifold.kind == ManifoldKind::Circle) {
    if (kind == "monomial") return circle_exponential(n);
    if (kind == "fejer") return fejer_kernel(n);
    if (kind == "random") return random_bandlimited(manifold, n, a.seed, true);
  } else if (manifold.is_sphere()) {
    if (kind == "harmonic") return spherical_harmonic(n, a.m);
    if (kind == "sectoral") return spherical_harmonic(n, n);
    if (kind == "zonal") return spherical_harmonic(n, 0);
    if (kind == "zonal-kernel") return zonal_kernel(n);
    if (kind == "random") return random_bandlimited(manifold, n, a.seed, true);
    if (kind == "polynomial") return restrict_polynomial(random_polynomial(n, a.seed), n);
  } else if (kind == "random") {
    return random_bandlimited(manifold, n, a.seed, true);
  }
  throw std::invalid_argument("function family '" + kind + "' is not available on " + manifold.name());
}

std::vector<int> indices_for(const Args& a, const ManifoldId& manifold, int k) {
  return a.indices.empty() ? default_indices(manifold, k) : a.indices;
}

Json function_context(const Args& a, const ManifoldId& manifold) {
  Json c = {{"f", !a.f.empty() ? a.f : manifold.is_sphere() ? "polynomial" : "monomial"}};
  if (c["f"] == "random" || c["f"] == "polynomial") c["seed"] = a.seed;
  if (c["f"] == "harmonic") c["m"] = a.m;
  return c;
}

void add_common(CLI::App* sub, Args& a) {
  sub->add_option("--manifold", a.manifold, "circle, sphere2 or torusM")->capture_default_str();
  sub->add_option("--f", a.f, "test function family (monomial, fejer, random, harmonic, sectoral, zonal, zonal-kernel, polynomial)");
  sub->add_option("--seed", a.seed, "seed for random test functions");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inequality and identity harness for band-limited functions on the circle, tori and the sphere"};
  app.require_subcommand(1);
  Args a;

  // suites
  SuiteConfig suite_cfg;
  std::string config_path, out_dir;
  bool seed_given = false;
  std::uint64_t suite_seed = 0;
  auto add_suite_flags = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON suite configuration");
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--seed", suite_seed, "seed (overrides RIESZ_SEED and the config)")->each([&](const std::string&) {
      seed_given = true;
    });
  };
  std::map<CLI::App*, std::string> suite_commands;
  for (const std::string& name : suite_names()) {
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " suite");
    add_suite_flags(sub);
    suite_commands[sub] = name;
  }
  CLI::App* suite_from_config = app.add_subcommand("suite", "run the suite named in a JSON configuration");
  suite_from_config->add_option("--config", config_path, "JSON suite configuration")->required();
  suite_from_config->add_option("--out", out_dir, "output directory");

  // single checks
  std::map<CLI::App*, std::function<CheckReport()>> checks;

  CLI::App* bern = app.add_subcommand("bernstein", "||D..D f||_p <= n^k ||f||_p");
  add_common(bern, a);
  bern->add_option("--n", a.n, "band limit")->required();
  bern->add_option("--p", a.p, "exponent (number or inf)")->capture_default_str();
  bern->add_option("--k", a.k, "number of derivatives")->default_val(1);
  bern->add_option("--indices", a.indices, "generator indices (overrides --k)")->delimiter(',');
  checks[bern] = [&] {
    const ManifoldId mf = ManifoldId::parse(a.manifold);
    const auto idx = indices_for(a, mf, a.k);
    return bernstein_check(make_function(a, mf, a.n), a.n, NormParams::parse(a.p), idx, function_context(a, mf));
  };

  CLI::App* bn = app.add_subcommand("bn", "Bernstein-Nikolskii ratio");
  add_common(bn, a);
  bn->add_option("--n", a.n, "band limit")->required();
  bn->add_option("--p", a.p)->capture_default_str();
  bn->add_option("--q", a.q)->capture_default_str();
  bn->add_option("--k", a.k)->default_val(0);
  checks[bn] = [&] {
    const ManifoldId mf = ManifoldId::parse(a.manifold);
    if (a.f.empty()) a.f = mf.is_sphere() ? "zonal-kernel" : "fejer";
    const auto idx = indices_for(a, mf, a.k);
    return bn_check(make_function(a, mf, a.n), a.n, NormParams::parse(a.p), NormParams::parse(a.q), idx,
                    function_context(a, mf));
  };

  CLI::App* nsamp = app.add_subcommand("nikolskii-sampling", "continuous versus shifted sampled p-norms on the circle");
  add_common(nsamp, a);
  nsamp->add_option("--n", a.n, "band limit")->required();
  nsamp->add_option("--N", a.N, "number of samples")->required();
  nsamp->add_option("--p", a.p)->capture_default_str();
  checks[nsamp] = [&] {
    if (a.f.empty()) a.f = "fejer";
    const ManifoldId mf = ManifoldId::circle();
    return nikolskii_sampling_check(make_function(a, mf, a.n), a.n, a.N, NormParams::parse(a.p), function_context(a, mf));
  };

  CLI::App* chain = app.add_subcommand("chain", "lattice-sampled norms against continuous norms");
  add_common(chain, a);
  chain->add_option("--r", a.r, "lattice radius")->required();
  chain->add_option("--omega", a.omega, "band limit")->required();
  chain->add_option("--n", a.n, "degree of the test function (default omega)");
  chain->add_option("--m", a.m, "order of a spherical harmonic");
  chain->add_option("--p", a.p)->capture_default_str();
  chain->add_option("--q", a.q)->capture_default_str();
  chain->add_option("--l", a.l, "smoothness exponent")->default_val(2);
  chain->add_option("--group-grid", a.group_grid, "motions per axis")->capture_default_str();
  checks[chain] = [&] {
    const ManifoldId mf = ManifoldId::parse(a.manifold);
    const int n = a.n >= 0 ? a.n : static_cast<int>(a.omega);
    const Lattice lat = build_lattice(mf, a.r);
    return manifold_chain_check(make_function(a, mf, n), lat, a.omega, NormParams::parse(a.p), NormParams::parse(a.q),
                                a.l, a.group_grid, function_context(a, mf));
  };

  CLI::App* npq = app.add_subcommand("nikolskii-pq", "||f||_q against omega^{m/p-m/q} ||f||_p");
  add_common(npq, a);
  npq->add_option("--omega", a.omega, "band limit")->required();
  npq->add_option("--p", a.p)->capture_default_str();
  npq->add_option("--q", a.q)->capture_default_str();
  checks[npq] = [&] {
    const ManifoldId mf = ManifoldId::parse(a.manifold);
    if (a.f.empty()) a.f = mf.is_sphere() ? "zonal" : "fejer";
    return nikolskii_pq_check(make_function(a, mf, static_cast<int>(a.omega)), a.omega, NormParams::parse(a.p),
                              NormParams::parse(a.q), function_context(a, mf));
  };

  CLI::App* pars = app.add_subcommand("parseval", "spectral against generator sums of squares on the sphere");
  pars->add_option("--k", a.k, "power, 1 or 2")->required();
  pars->add_option("--l", a.l, "degree of Y_l^m (omit for a random function)");
  pars->add_option("--m", a.m, "order of Y_l^m");
  pars->add_option("--degree", a.degree, "degree of the random function")->capture_default_str();
  pars->add_option("--seed", a.seed);
  checks[pars] = [&] {
    if (a.l >= 0) return parseval_check(spherical_harmonic(a.l, a.m), a.k, Json{{"f", "harmonic"}, {"l", a.l}, {"m", a.m}});
    return parseval_check(random_bandlimited(ManifoldId::sphere(), a.degree, a.seed), a.k,
                          Json{{"f", "random"}, {"seed", a.seed}});
  };

  CLI::App* emb = app.add_subcommand("embedding", "Bernstein and eigenspace embeddings on the sphere");
  emb->add_option("--omega", a.omega, "band limit")->required();
  emb->add_option("--d", a.d, "number of generators")->capture_default_str();
  emb->add_option("--cap", a.cap, "largest degree")->capture_default_str();
  emb->add_option("--seed", a.seed);
  checks[emb] = [&] { return embedding_check(a.omega, a.d, a.cap, a.seed); };

  CLI::App* lan = app.add_subcommand("landau", "||D f|| <= eps ||D^2 f|| + (2/eps) ||f||");
  add_common(lan, a);
  lan->add_option("--n", a.n, "degree")->required();
  lan->add_option("--eps", a.eps, "epsilon > 0")->required();
  lan->add_option("--p", a.p)->capture_default_str();
  lan->add_option("--j", a.axis, "generator index")->capture_default_str();
  checks[lan] = [&] {
    const ManifoldId mf = ManifoldId::parse(a.manifold);
    if (a.f.empty()) a.f = "random";
    return landau_check(make_function(a, mf, a.n), GeneratorId{a.axis}, a.eps, NormParams::parse(a.p),
                        function_context(a, mf));
  };

  CLI::App* fit = app.add_subcommand("fejer-fit", "growth exponent of Fejer kernel norm ratios");
  fit->add_option("--p", a.p)->capture_default_str();
  fit->add_option("--q", a.q)->capture_default_str();
  fit->add_option("--k", a.k)->default_val(0);
  fit->add_option("--n-values", a.n_values)->delimiter(',')->capture_default_str();
  checks[fit] = [&] { return fejer_exponent_fit(NormParams::parse(a.p), NormParams::parse(a.q), a.k, a.n_values); };

  CLI::App* rex = app.add_subcommand("riesz-exactness", "translation formulas against exact generators");
  add_common(rex, a);
  rex->add_option("--n", a.n, "degree")->required();
  rex->add_option("--m", a.m, "order of Y_n^m on the sphere");
  rex->add_option("--axis", a.axis, "generator index")->capture_default_str();
  rex->add_option("--K", a.K, "series half-width")->capture_default_str();
  rex->add_option("--omega", a.omega, "band limit (default n)");
  rex->add_option("--formula", a.formula, "finite (circle) or series");
  checks[rex] = [&] {
    const ManifoldId mf = ManifoldId::parse(a.manifold);
    const std::string formula = !a.formula.empty() ? a.formula : mf.kind == ManifoldKind::Circle ? "finite" : "series";
    if (a.f.empty()) a.f = mf.is_sphere() ? "harmonic" : "random";
    const BandLimited f = make_function(a, mf, a.n);
    if (formula == "finite") return riesz_finite_check(f, a.n, function_context(a, mf));
    if (formula != "series") throw std::invalid_argument("formula must be finite or series");
    const double omega = a.omega > 0.0 ? a.omega : std::max(1, a.n);
    return riesz_exactness_check(f, GeneratorId{a.axis}, {omega, a.K}, SeriesMode::Spectral, function_context(a, mf));
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n";
    const CLI::App* failing = &app;
    for (const CLI::App* sub : app.get_subcommands()) failing = sub;
    std::cerr << failing->help();
    return 2;
  }

  try {
    CLI::App* chosen = app.get_subcommands().front();
    if (auto it = checks.find(chosen); it != checks.end()) {
      a.seed = chosen->count("--seed") ? a.seed : env_seed(a.seed);
      const CheckReport r = it->second();
      std::cout << to_json(r).dump(2) << '\n';
      return r.passed ? 0 : 1;
    }

    SuiteConfig cfg;
    if (!config_path.empty()) {
      std::ifstream is(config_path);
      if (!is) throw std::invalid_argument("cannot open config " + config_path);
      cfg = SuiteConfig::from_json(nlohmann::ordered_json::parse(is));
    }
    if (auto it = suite_commands.find(chosen); it != suite_commands.end()) {
      if (!cfg.suite.empty() && cfg.suite != it->second) {
        throw std::invalid_argument("config names suite '" + cfg.suite + "' but '" + it->second + "' was requested");
      }
      cfg.suite = it->second;
    }
    if (!is_suite(cfg.suite)) throw std::invalid_argument("unknown suite '" + cfg.suite + "'");
    cfg.seed = env_seed(cfg.seed);
    if (seed_given) cfg.seed = suite_seed;
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    return run_suite(cfg, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
