#include "riesz/suites.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "riesz/checks.hpp"
#include "riesz/svg.hpp"

namespace riesz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class T>
std::vector<T> or_default(const std::vector<T>& given, std::vector<T> fallback) {
  return given.empty() ? fallback : given;
}

std::vector<std::pair<NormParams, NormParams>> pq_pairs(const SuiteConfig& c) {
  std::vector<std::pair<NormParams, NormParams>> out;
  for (double p : or_default(c.p, {1.0, 2.0}))
    for (double q : or_default(c.q, {2.0, kInf}))
      if (p <= q) out.emplace_back(NormParams(p), NormParams(q));
  return out;
}

std::vector<NormParams> exponents(const std::vector<double>& given, std::vector<double> fallback) {
  std::vector<NormParams> out;
  for (double p : or_default(given, std::move(fallback))) out.emplace_back(p);
  return out;
}

bool wants(const SuiteConfig& c, ManifoldKind kind) { return !c.manifold || c.manifold->kind == kind; }

// sin(nt) = (e^{int} - e^{-int}) / 2i
BandLimited sine(int n) {
  BandLimited f(ManifoldId::circle(), n);
  f.circle(n) = cplx(0.0, -0.5);
  f.circle(-n) = cplx(0.0, 0.5);
  f.mark_real();
  return f;
}

Json family(const char* name) { return Json{{"f", name}}; }
Json family(const char* name, std::uint64_t seed) { return Json{{"f", name}, {"seed", seed}}; }

using Reports = std::vector<CheckReport>;

void circle_core(const SuiteConfig& c, Reports& out) {
  const ManifoldId circle = ManifoldId::circle();
  std::uint64_t seed = c.seed;

  for (int n : or_default(c.n, {1, 2, 3, 4, 8, 16, 32, 64})) {
    out.push_back(riesz_finite_check(sine(n), n, family("sine")));
    for (int i = 0; i < 2; ++i, ++seed)
      out.push_back(riesz_finite_check(random_bandlimited(circle, n, seed), n, family("random", seed)));
  }
  for (int n : or_default(c.n, {1, 4, 16}))
    for (int K : or_default(c.K, {100, 1000, 10000}))
      out.push_back(riesz_exactness_check(sine(n), GeneratorId{1}, {static_cast<double>(n), K}, SeriesMode::Spectral,
                                          family("sine")));

  const auto ps = exponents(c.p, {1.0, 2.0, kInf});
  for (int n : or_default(c.n, {4, 16, 64}))
    for (int k : or_default(c.k, {1, 2, 3})) {
      const std::vector<int> idx = default_indices(circle, k);
      const BandLimited rnd = random_bandlimited(circle, n, seed, true);
      for (const NormParams& p : ps) {
        out.push_back(bernstein_check(circle_exponential(n), n, p, idx, family("monomial")));
        out.push_back(bernstein_check(rnd, n, p, idx, family("random", seed)));
      }
      ++seed;
    }

  for (int n : or_default(c.n, {8, 32, 64}))
    for (int k : or_default(c.k, {0, 1, 2})) {
      const std::vector<int> idx = default_indices(circle, k);
      const BandLimited rnd = random_bandlimited(circle, n, seed, true);
      for (const auto& [p, q] : pq_pairs(c)) {
        out.push_back(bn_check(fejer_kernel(n), n, p, q, idx, family("fejer")));
        out.push_back(bn_check(rnd, n, p, q, idx, family("random", seed)));
      }
      ++seed;
    }

  for (int n : or_default(c.n, {4, 16, 32}))
    for (int N : {n, 2 * n, 2 * n + 1, 4 * n, 8 * n})
      for (const NormParams& p : ps) out.push_back(nikolskii_sampling_check(fejer_kernel(n), n, N, p, family("fejer")));

  for (int i = 0; i < 5; ++i, ++seed) {
    const BandLimited f = random_bandlimited(circle, 16, seed, true);
    for (double eps : {0.01, 0.1, 1.0, 10.0})
      for (const NormParams& p : ps) out.push_back(landau_check(f, GeneratorId{1}, eps, p, family("random", seed)));
  }
}

void sphere_core(const SuiteConfig& c, Reports& out) {
  const ManifoldId sphere = ManifoldId::sphere();
  std::uint64_t seed = c.seed;

  for (int i = 0; i < 3; ++i, ++seed) out.push_back(commutator_check(random_bandlimited(sphere, 8, seed), family("random", seed)));
  for (int deg : {4, 10, 20}) {
    out.push_back(laplacian_identity_check(random_bandlimited(sphere, deg, seed), family("random", seed)));
    ++seed;
  }

  const std::pair<int, int> harmonics[] = {{1, 0}, {2, 2}, {4, 2}, {8, 3}};
  for (const auto& [l, m] : harmonics)
    for (int axis = 1; axis <= 3; ++axis)
      for (int K : or_default(c.K, {100, 1000, 10000}))
        out.push_back(riesz_exactness_check(spherical_harmonic(l, m), GeneratorId{axis}, {static_cast<double>(l), K},
                                            SeriesMode::Spectral, Json{{"f", "harmonic"}, {"l", l}, {"m", m}}));
  out.push_back(riesz_exactness_check(spherical_harmonic(4, 2), GeneratorId{1}, {4.0, 100}, SeriesMode::Direct,
                                      Json{{"f", "harmonic"}, {"l", 4}, {"m", 2}}));

  for (int l = 0; l <= 8; ++l)
    out.push_back(riesz_laplacian_check(spherical_harmonic(l, l / 2), {static_cast<double>(std::max(l, 1)), 10000},
                                        1e-4, Json{{"f", "harmonic"}, {"l", l}, {"m", l / 2}}));

  for (int i = 0; i < 10; ++i, ++seed) {
    const BandLimited f = random_bandlimited(sphere, 10, seed);
    for (int k : {1, 2}) out.push_back(parseval_check(f, k, family("random", seed)));
  }

  const auto ps = exponents(c.p, {1.0, 2.0, kInf});
  for (int n : or_default(c.n, {4, 10, 20})) {
    const BandLimited f = restrict_polynomial(random_polynomial(n, seed), n);
    for (int k : or_default(c.k, {1, 2, 3})) {
      const std::vector<int> idx = default_indices(sphere, k);
      for (const NormParams& p : ps) out.push_back(bernstein_check(f, n, p, idx, family("polynomial", seed)));
    }
    ++seed;
    const int three[1] = {3};
    for (const NormParams& p : ps) out.push_back(bernstein_check(spherical_harmonic(n, n), n, p, three, family("sectoral")));
  }

  for (const auto& [p, q] : pq_pairs(c)) {
    std::vector<double> constants;
    const int one[1] = {1};
    for (int n : or_default(c.n, {4, 8, 16})) {
      out.push_back(bn_check(zonal_kernel(n), n, p, q, one, family("zonal-kernel")));
      constants.push_back(out.back().ratio);
    }
    out.push_back(make_stability("bn-stability",
                                 Json{{"manifold", "sphere2"}, {"f", "zonal-kernel"}, {"p", json_number(p.p())},
                                      {"q", json_number(q.p())}, {"k", 1}},
                                 constants, "max over n <= 2 median"));
  }

  for (double omega : {2.0, 12.0, 42.0, 420.0}) out.push_back(embedding_check(omega, 3, 20, seed));
  ++seed;

  for (int i = 0; i < 5; ++i, ++seed) {
    const BandLimited f = random_bandlimited(sphere, 8, seed, true);
    for (int j = 1; j <= 3; ++j)
      for (double eps : {0.01, 0.1, 1.0, 10.0})
        for (const NormParams& p : {NormParams(2.0), NormParams::inf()})
          out.push_back(landau_check(f, GeneratorId{j}, eps, p, family("random", seed)));
  }
}

void sampling(const SuiteConfig& c, Reports& out) {
  std::map<std::pair<int, double>, Lattice> lattices;
  auto lattice = [&](const ManifoldId& m, double r) -> const Lattice& {
    const auto key = std::make_pair(static_cast<int>(m.kind), r);
    auto it = lattices.find(key);
    if (it == lattices.end()) it = lattices.emplace(key, build_lattice(m, r)).first;
    return it->second;
  };
  std::vector<ManifoldId> manifolds;
  if (wants(c, ManifoldKind::Circle)) manifolds.push_back(ManifoldId::circle());
  if (wants(c, ManifoldKind::Sphere2)) manifolds.push_back(ManifoldId::sphere());

  for (const ManifoldId& m : manifolds)
    for (double r : or_default(c.r, {0.05, 0.1, 0.2, 0.4}))
      out.push_back(lattice_check(lattice(m, r), 20000, m.is_sphere() ? 36 : 4));

  // left inequality
  const NormParams p2(2.0);
  for (const ManifoldId& m : manifolds)
    for (double r : or_default(c.r, {0.05, 0.1, 0.2}))
      for (const NormParams& q : exponents(c.q, {2.0, kInf})) {
        if (q.p() < 2.0) continue;
        const Lattice& lat = lattice(m, r);
        if (m.is_sphere()) {
          out.push_back(manifold_chain_check(spherical_harmonic(8, 3), lat, 8.0, p2, q, 2, 8, Json{{"f", "harmonic"}, {"l", 8}, {"m", 3}}));
          out.push_back(manifold_chain_check(zonal_kernel(8), lat, 8.0, p2, q, 2, 8, family("zonal-kernel")));
        } else {
          out.push_back(manifold_chain_check(circle_exponential(8), lat, 8.0, p2, q, 2, 8, family("monomial")));
          out.push_back(manifold_chain_check(fejer_kernel(8), lat, 8.0, p2, q, 2, 8, family("fejer")));
        }
      }

  // right-hand constant along omega with r omega fixed
  const double r_omega = 1.6;
  for (const ManifoldId& m : manifolds) {
    std::vector<double> constants;
    for (double omega : or_default(c.omega, {4.0, 8.0, 16.0, 32.0})) {
      const int w = static_cast<int>(omega);
      const BandLimited f = m.is_sphere() ? spherical_harmonic(w, 0) : fejer_kernel(w);
      CheckReport rep = manifold_chain_check(f, lattice(m, r_omega / omega), omega, p2, NormParams::inf(), 2, 8,
                                             Json{{"f", m.is_sphere() ? "zonal" : "fejer"}, {"sweep", "omega"}});
      constants.push_back(number_from_json(rep.extra["right_constant"]));
      out.push_back(std::move(rep));
    }
    out.push_back(make_stability("chain-right-stability",
                                 Json{{"manifold", m.name()}, {"f", m.is_sphere() ? "zonal" : "fejer"},
                                      {"p", 2}, {"l", 2}, {"r_omega", r_omega}},
                                 constants, "max over omega <= 2 median"));
  }

  // omega^{m/p - m/q} growth
  for (const ManifoldId& m : manifolds) {
    const std::vector<double> pvals = m.is_sphere() ? std::vector<double>{2.0} : std::vector<double>{1.0, 2.0};
    for (double pv : pvals) {
      std::vector<double> ratios;
      for (double omega : or_default(c.omega, {4.0, 8.0, 16.0, 32.0})) {
        const int w = static_cast<int>(omega);
        const BandLimited f = m.is_sphere() ? spherical_harmonic(w, 0) : fejer_kernel(w);
        out.push_back(nikolskii_pq_check(f, omega, NormParams(pv), NormParams::inf(), family(m.is_sphere() ? "zonal" : "fejer")));
        ratios.push_back(out.back().ratio);
      }
      out.push_back(make_stability("nikolskii-pq-stability",
                                   Json{{"manifold", m.name()}, {"f", m.is_sphere() ? "zonal" : "fejer"},
                                        {"p", pv}, {"q", "inf"}},
                                   ratios, "max over omega <= 2 median"));
    }
  }
}

void asymptotics(const SuiteConfig& c, Reports& out) {
  const std::vector<int> ns = or_default(c.n, {8, 16, 32, 64, 128});
  for (int k : or_default(c.k, {0, 1}))
    for (const auto& [p, q] : pq_pairs(c)) out.push_back(fejer_exponent_fit(p, q, k, ns));
  for (int n : ns) out.push_back(bn_check(fejer_kernel(n), n, NormParams(1.0), NormParams::inf(), {}, family("fejer")));
}

}  // namespace

SuiteConfig SuiteConfig::from_json(const nlohmann::ordered_json& j) {
  SuiteConfig c;
  if (!j.is_object()) throw std::invalid_argument("suite config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    auto numbers = [&]() {
      std::vector<double> v;
      for (const auto& x : value) v.push_back(number_from_json(x));
      if (v.empty()) throw std::invalid_argument("sweep '" + key + "' must be nonempty");
      return v;
    };
    auto integers = [&]() {
      std::vector<int> v;
      for (const auto& x : value) v.push_back(x.get<int>());
      if (v.empty()) throw std::invalid_argument("sweep '" + key + "' must be nonempty");
      return v;
    };
    if (key == "suite") c.suite = value.get<std::string>();
    else if (key == "manifold") c.manifold = ManifoldId::parse(value.get<std::string>());
    else if (key == "seed") c.seed = value.get<std::uint64_t>();
    else if (key == "output_dir") c.output_dir = value.get<std::string>();
    else if (key == "n") c.n = integers();
    else if (key == "k") c.k = integers();
    else if (key == "K") c.K = integers();
    else if (key == "p") c.p = numbers();
    else if (key == "q") c.q = numbers();
    else if (key == "r") c.r = numbers();
    else if (key == "omega") c.omega = numbers();
    else throw std::invalid_argument("unknown config key '" + key + "'");
  }
  for (double p : c.p) NormParams{p};
  for (double q : c.q) NormParams{q};
  return c;
}

nlohmann::ordered_json SuiteConfig::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  if (manifold) j["manifold"] = manifold->name();
  j["seed"] = seed;
  j["output_dir"] = output_dir;
  auto put = [&](const char* key, const auto& v) {
    if (v.empty()) return;
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (auto x : v) a.push_back(json_number(static_cast<double>(x)));
    j[key] = std::move(a);
  };
  put("n", n);
  put("k", k);
  put("K", K);
  put("p", p);
  put("q", q);
  put("r", r);
  put("omega", omega);
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"circle-core", "sphere-core", "sampling", "asymptotics"};
  return names;
}

bool is_suite(const std::string& name) {
  for (const std::string& s : suite_names())
    if (s == name) return true;
  return false;
}

std::vector<CheckReport> run_checks(const SuiteConfig& config) {
  Reports out;
  if (config.suite == "circle-core") circle_core(config, out);
  else if (config.suite == "sphere-core") sphere_core(config, out);
  else if (config.suite == "sampling") sampling(config, out);
  else if (config.suite == "asymptotics") asymptotics(config, out);
  else throw std::invalid_argument("unknown suite '" + config.suite + "'");
  return out;
}

int exit_status(const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports)
    if (r.asserted() && !r.passed) return 1;
  return 0;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write " + tmp);
    os << content;
    if (!os.flush()) throw std::runtime_error("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

int run_suite(const SuiteConfig& config, std::ostream& log) {
  const Reports reports = run_checks(config);
  std::filesystem::create_directories(config.output_dir);
  const std::filesystem::path dir(config.output_dir);

  std::ostringstream jsonl, csv;
  write_jsonl(jsonl, reports);
  write_csv(csv, reports);
  write_file_atomic((dir / "report.jsonl").string(), jsonl.str());
  write_file_atomic((dir / "report.csv").string(), csv.str());
  write_file_atomic((dir / "config.json").string(), config.to_json().dump(2) + "\n");

  std::map<std::string, Reports> families;
  for (const CheckReport& r : reports) families[r.check_name].push_back(r);
  for (const auto& [name, group] : families)
    write_file_atomic((dir / (name + ".svg")).string(), ratio_plot_svg(config.suite + ": " + name, group));

  std::size_t failed = 0;
  for (const CheckReport& r : reports)
    if (r.asserted() && !r.passed) {
      ++failed;
      log << "FAIL " << to_json(r).dump() << '\n';
    }
  log << config.suite << ": " << reports.size() << " reports, " << failed << " asserted failures, output in "
      << config.output_dir << '\n';
  return exit_status(reports);
}

}  // namespace riesz
