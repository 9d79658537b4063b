#include "riesz/checks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/tools/minima.hpp>

namespace riesz {

namespace {

Json with_context(Json params, const Json& context) {
  if (context.is_object())
    for (const auto& [key, value] : context.items())
      if (!params.contains(key)) params[key] = value;
  return params;
}

Json index_list(std::span<const int> indices) {
  Json a = Json::array();
  for (int i : indices) a.push_back(i);
  return a;
}

double relative_gap(const BandLimited& a, const BandLimited& b) {
  const double scale = l2_norm(b);
  const double gap = l2_norm(a - b);
  return scale > 0.0 ? gap / scale : gap;
}

void require_order(NormParams p, NormParams q) {
  if (p.p() > q.p()) throw std::invalid_argument("require p <= q");
}

}  // namespace

std::vector<int> default_indices(const ManifoldId& manifold, int k) {
  std::vector<int> idx;
  for (int i = 0; i < k; ++i) idx.push_back(1 + i % manifold.dim_d());
  return idx;
}

CheckReport bernstein_check(const BandLimited& f, int n, NormParams p, std::span<const int> indices, Json context) {
  if (f.effective_degree() > n) throw std::invalid_argument("function degree exceeds n");
  const BandLimited df = apply_generators(f, indices);
  const NormEstimate top = norm_estimate(df, p);
  const NormEstimate base = norm_estimate(f, p);
  const double k = static_cast<double>(indices.size());
  Json params = {{"manifold", f.manifold().name()}, {"n", n}, {"p", json_number(p.p())}, {"k", indices.size()},
                 {"indices", index_list(indices)}};
  CheckReport r = make_inequality("bernstein", with_context(std::move(params), context), top.value,
                                  std::pow(static_cast<double>(n), k) * base.value, 1e-8);
  r.extra["method"] = base.method;
  r.extra["discrepancy"] = json_number(std::max(top.discrepancy, base.discrepancy));
  return r;
}

CheckReport bn_check(const BandLimited& f, int n, NormParams p, NormParams q, std::span<const int> indices,
                     Json context) {
  require_order(p, q);
  if (f.effective_degree() > n) throw std::invalid_argument("function degree exceeds n");
  const double m = f.manifold().dim_m();
  const double k = static_cast<double>(indices.size());
  const double lhs = norm(apply_generators(f, indices), q);
  const double growth = std::pow(static_cast<double>(n), k + m * (p.inverse() - q.inverse()));
  const double base = norm(f, p);
  Json params = {{"manifold", f.manifold().name()}, {"n", n}, {"p", json_number(p.p())}, {"q", json_number(q.p())},
                 {"k", indices.size()}, {"indices", index_list(indices)}};
  params = with_context(std::move(params), context);
  if (f.manifold().kind == ManifoldKind::Circle) return make_inequality("bn", std::move(params), lhs, 3.0 * growth * base, 1e-8);
  return make_record("bn", std::move(params), lhs, growth * base, "empirical constant; stability asserted by aggregate");
}

double shifted_sample_norm(const BandLimited& T, int N, NormParams p) {
  if (T.manifold().kind != ManifoldKind::Circle) throw std::invalid_argument("sampling chain lives on the circle");
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  const double h = kTwoPi / N;
  auto at = [&](double u) {
    if (p.is_inf()) {
      double best = 0.0;
      for (int k = 1; k <= N; ++k) best = std::max(best, std::abs(eval(T, Point::circle(k * h - u))));
      return best;
    }
    std::vector<double> terms(static_cast<std::size_t>(N));
    for (int k = 1; k <= N; ++k) terms[static_cast<std::size_t>(k - 1)] = std::pow(std::abs(eval(T, Point::circle(k * h - u))), p.p());
    return std::pow(h * pairwise_sum(terms), 1.0 / p.p());
  };
  const int offsets = 8 * N;
  const double du = h / offsets;
  std::vector<double> vals(static_cast<std::size_t>(offsets));
  for (int j = 0; j < offsets; ++j) vals[static_cast<std::size_t>(j)] = at(j * du);
  double best = *std::max_element(vals.begin(), vals.end());
  std::vector<int> order(static_cast<std::size_t>(offsets));
  for (int j = 0; j < offsets; ++j) order[static_cast<std::size_t>(j)] = j;
  const std::size_t starts = std::min<std::size_t>(3, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(starts), order.end(),
                    [&](int a, int b) { return vals[static_cast<std::size_t>(a)] > vals[static_cast<std::size_t>(b)]; });
  for (std::size_t s = 0; s < starts; ++s) {
    const double c = order[s] * du;
    boost::uintmax_t iters = 200;
    const auto res = boost::math::tools::brent_find_minima([&](double u) { return -at(u); }, c - du, c + du, 40, iters);
    best = std::max(best, -res.second);
  }
  return best;
}

CheckReport nikolskii_sampling_check(const BandLimited& T, int n, int N, NormParams p, Json context) {
  if (T.effective_degree() > n) throw std::invalid_argument("function degree exceeds n");
  const double h = kTwoPi / N;
  const double full = norm(T, p);
  const double sampled = shifted_sample_norm(T, N, p);
  const bool left_asserted = N >= 2 * n + 1;
  const bool left_ok = full <= sampled * (1.0 + 1e-8);
  Json params = {{"n", n}, {"N", N}, {"p", json_number(p.p())}};
  CheckReport r = make_inequality("nikolskii-sampling", with_context(std::move(params), context), sampled,
                                  (1.0 + n * h) * full, 1e-8);
  r.extra["norm"] = json_number(full);
  r.extra["left_ratio"] = json_number(safe_ratio(full, sampled));
  r.extra["left_asserted"] = left_asserted;
  r.extra["left_holds"] = left_ok;
  if (left_asserted && !left_ok) {
    r.passed = false;
    r.notes = "left inequality violated";
  } else if (!left_asserted) {
    r.notes = left_ok ? "left inequality not asserted (undersampled); held" : "left inequality not asserted (undersampled); failed";
  }
  return r;
}

CheckReport manifold_chain_check(const BandLimited& f, const Lattice& lat, double omega, NormParams p, NormParams q,
                                 int l, int group_grid_size, Json context) {
  require_order(p, q);
  const double m = lat.manifold.dim_m();
  if (!(l > m * p.inverse())) throw std::invalid_argument("require l > m/p");
  if (f.effective_degree(1e-12) > omega * (1.0 + 1e-12)) throw std::invalid_argument("function not admissible for omega");
  const double fq = norm(f, q);
  const double sampled_q = sup_sampled_pnorm(f, lat, q, group_grid_size);
  const double fp = p.p() == q.p() ? fq : norm(f, p);
  const double sampled_p = p.p() == q.p() ? sampled_q : sup_sampled_pnorm(f, lat, p, group_grid_size);
  const double right_constant = sampled_p / ((1.0 + std::pow(lat.r * omega, l)) * fp);
  Json params = {{"manifold", lat.manifold.name()}, {"r", lat.r}, {"centers", lat.centers.size()}, {"omega", omega},
                 {"p", json_number(p.p())}, {"q", json_number(q.p())}, {"l", l}, {"group_grid", group_grid_size}};
  CheckReport r = make_inequality("chain", with_context(std::move(params), context), fq,
                                  std::pow(4.0, m) * sampled_q, 1e-8);
  r.extra["constant_free_ratio"] = json_number(safe_ratio(fq, sampled_q));
  r.extra["right_constant"] = json_number(right_constant);
  return r;
}

CheckReport nikolskii_pq_check(const BandLimited& f, double omega, NormParams p, NormParams q, Json context) {
  require_order(p, q);
  const double m = f.manifold().dim_m();
  const double fq = norm(f, q);
  const double fp = p.p() == q.p() ? fq : norm(f, p);
  Json params = {{"manifold", f.manifold().name()}, {"omega", omega}, {"p", json_number(p.p())},
                 {"q", json_number(q.p())}};
  return make_record("nikolskii-pq", with_context(std::move(params), context), fq,
                     std::pow(omega, m * (p.inverse() - q.inverse())) * fp);
}

CheckReport parseval_check(const BandLimited& f, int k, Json context) {
  if (k != 1 && k != 2) throw std::invalid_argument("parseval_check supports k in {1, 2}");
  std::vector<double> blocks;
  for (const SpectrumBlock& b : spectrum(f).blocks) blocks.push_back(std::pow(b.lambda, k) * b.norm * b.norm);
  const double lhs = pairwise_sum(blocks);
  const int d = f.manifold().dim_d();
  std::vector<double> tuples;
  std::vector<int> idx(static_cast<std::size_t>(k), 1);
  while (true) {
    const double v = l2_norm(apply_generators(f, idx));
    tuples.push_back(v * v);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == d) idx[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
  }
  const double rhs = pairwise_sum(tuples);
  Json params = {{"manifold", f.manifold().name()}, {"degree", f.degree()}, {"k", k}};
  return make_identity("parseval", with_context(std::move(params), context), lhs, rhs, 1e-9);
}

CheckReport embedding_check(double omega, int d, int degree_cap, std::uint64_t seed, Json context) {
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  const ManifoldId sphere = ManifoldId::sphere();
  // (a) lambda <= d w^2 with w the largest single-step L^2 ratio
  double worst_a = 0.0;
  for (int l = 0; l <= degree_cap; ++l)
    for (int m = -l; m <= l; ++m) {
      const BandLimited y = spherical_harmonic(l, m);
      double w2 = 0.0;
      for (int j = 1; j <= 3; ++j) {
        const double v = l2_norm(apply_generator(y, GeneratorId{j}));
        w2 = std::max(w2, v * v);
      }
      const double lambda = l * (l + 1.0);
      if (lambda > 0.0) worst_a = std::max(worst_a, lambda / (d * w2));
    }

  // (b) phi in E_omega
  std::vector<BandLimited> members;
  int top = -1;
  for (int l = 0; l <= degree_cap && l * (l + 1.0) <= omega; ++l) {
    top = l;
    for (int m = 0; m <= l; ++m) members.push_back(spherical_harmonic(l, m));  // |Y_l^-m| = |Y_l^m|
  }
  if (top >= 0)
    for (int i = 0; i < 3; ++i) members.push_back(random_bandlimited(sphere, top, seed + static_cast<std::uint64_t>(i)));
  double worst_b = 0.0;
  const NormParams ps[] = {NormParams(1.0), NormParams(2.0), NormParams::inf()};
  for (const BandLimited& phi : members)
    for (const NormParams& p : ps) {
      const double base = norm(phi, p);
      BandLimited lk = phi;
      for (int k = 1; k <= 2; ++k) {
        lk = laplacian_exact(lk);
        const double bound = std::pow(d * omega, 2.0 * k) * base;
        worst_b = std::max(worst_b, safe_ratio(norm(lk, p), bound));
      }
    }
  Json params = {{"omega", omega}, {"d", d}, {"degree_cap", degree_cap}, {"seed", seed}};
  CheckReport r = make_inequality("embedding", with_context(std::move(params), context), std::max(worst_a, worst_b), 1.0,
                                  1e-10, "E_omega read as eigenvalues <= omega");
  r.extra["spectrum_ratio"] = json_number(worst_a);
  r.extra["power_ratio"] = json_number(worst_b);
  r.extra["members"] = members.size();
  return r;
}

CheckReport landau_check(const BandLimited& f, GeneratorId j, double eps, NormParams p, Json context) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const BandLimited d1 = apply_generator(f, j);
  const BandLimited d2 = apply_generator(d1, j);
  const double lhs = norm(d1, p);
  const double rhs = eps * norm(d2, p) + (2.0 / eps) * norm(f, p);
  Json params = {{"manifold", f.manifold().name()}, {"degree", f.degree()}, {"j", j.j}, {"eps", eps},
                 {"p", json_number(p.p())}};
  return make_inequality("landau", with_context(std::move(params), context), lhs, rhs, 1e-10);
}

CheckReport fejer_exponent_fit(NormParams p, NormParams q, int k, std::span<const int> n_values, Json context) {
  require_order(p, q);
  if (n_values.size() < 3) throw std::invalid_argument("exponent fit needs at least 3 values of n");
  std::vector<double> xs, ys;
  Json ratios = Json::array();
  const std::vector<int> idx(static_cast<std::size_t>(k), 1);
  for (int n : n_values) {
    if (n < 2) throw std::invalid_argument("exponent fit needs n >= 2");
    const BandLimited F = fejer_kernel(n);
    const double ratio = norm(apply_generators(F, idx), q) / norm(F, p);
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(ratio));
    ratios.push_back(json_number(ratio));
  }
  const double mx = pairwise_sum(xs) / static_cast<double>(xs.size());
  const double my = pairwise_sum(ys) / static_cast<double>(ys.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  const double expected = k + p.inverse() - q.inverse();
  Json ns = Json::array();
  for (int n : n_values) ns.push_back(n);
  Json params = {{"p", json_number(p.p())}, {"q", json_number(q.p())}, {"k", k}, {"n_values", ns}};
  CheckReport r = make_inequality("fejer-fit", with_context(std::move(params), context), std::abs(slope - expected), 0.1,
                                  0.0);
  r.extra["slope"] = slope;
  r.extra["expected"] = expected;
  r.extra["ratios"] = std::move(ratios);
  return r;
}

CheckReport riesz_finite_check(const BandLimited& T, int n, Json context) {
  const double rel = relative_gap(riesz_finite_circle(T, n), apply_generator(T, GeneratorId{1}));
  Json params = {{"formula", "finite"}, {"manifold", "circle"}, {"n", n}, {"degree", T.degree()}};
  return make_inequality("riesz-exactness", with_context(std::move(params), context), rel, 1e-10, 0.0,
                         "relative L2 error");
}

CheckReport riesz_exactness_check(const BandLimited& f, GeneratorId j, const RieszConfig& cfg, SeriesMode mode,
                                  Json context) {
  const QuadratureRule rule = build_quadrature(f.manifold(), 2 * f.degree());
  const BandLimited approx = riesz_series(f, j, cfg, rule, mode);
  const double err = l2_norm(approx - apply_generator(f, j));
  const double tail = tail_bound(cfg);
  const double fn = l2_norm(f);
  Json params = {{"formula", mode == SeriesMode::Spectral ? "series" : "series-direct"},
                 {"manifold", f.manifold().name()}, {"degree", f.degree()}, {"axis", j.j}, {"omega", cfg.omega},
                 {"K", cfg.K}};
  CheckReport r = make_inequality("riesz-exactness", with_context(std::move(params), context), err, tail * fn, 1e-8);
  const double target = l2_norm(apply_generator(f, j));
  r.extra["relative_error"] = json_number(target > 0.0 ? err / target : err);
  r.extra["tail_bound"] = json_number(tail);
  return r;
}

CheckReport laplacian_identity_check(const BandLimited& f, Json context) {
  BandLimited sum(f.manifold(), f.degree());
  for (int j = 1; j <= f.manifold().dim_d(); ++j) {
    const int twice[2] = {j, j};
    sum -= apply_generators(f, twice);
  }
  const double rel = relative_gap(sum, laplacian_exact(f));
  Json params = {{"manifold", f.manifold().name()}, {"degree", f.degree()}};
  return make_inequality("laplacian-identity", with_context(std::move(params), context), rel, 1e-10, 0.0,
                         "relative L2 gap");
}

CheckReport riesz_laplacian_check(const BandLimited& f, const RieszConfig& cfg, double rtol, Json context) {
  const QuadratureRule rule = build_quadrature(f.manifold(), 2 * f.degree());
  const BandLimited exact = laplacian_exact(f);
  const BandLimited approx = riesz_laplacian(f, cfg, rule);
  const double scale = l2_norm(exact);
  const double gap = l2_norm(approx - exact);
  const double rel = scale > 0.0 ? gap / scale : gap / std::max(1e-300, l2_norm(f));
  Json params = {{"manifold", f.manifold().name()}, {"degree", f.degree()}, {"omega", cfg.omega}, {"K", cfg.K}};
  return make_inequality("riesz-laplacian", with_context(std::move(params), context), rel, rtol, 0.0,
                         "relative L2 error");
}

CheckReport commutator_check(const BandLimited& f, Json context) {
  if (!f.manifold().is_sphere()) throw std::invalid_argument("commutator check is for the sphere");
  const int ab[2] = {1, 2}, ba[2] = {2, 1};
  const BandLimited lhs = apply_generators(f, ab) - apply_generators(f, ba);
  const BandLimited rhs = -1.0 * apply_generator(f, GeneratorId{3});
  const double scale = std::max(l2_norm(rhs), l2_norm(f));
  const double gap = l2_norm(lhs - rhs);
  Json params = {{"degree", f.degree()}};
  return make_inequality("commutator", with_context(std::move(params), context), scale > 0.0 ? gap / scale : gap, 1e-12,
                         0.0, "[D1,D2] = -D3");
}

CheckReport lattice_check(const Lattice& lat, int probes, int multiplicity_bound, Json context) {
  const LatticeCheck c = verify_lattice(lat, probes);
  Json params = {{"manifold", lat.manifold.name()}, {"r", lat.r}, {"centers", lat.centers.size()}, {"probes", probes}};
  CheckReport r = make_inequality("lattice", with_context(std::move(params), context), c.multiplicity,
                                  multiplicity_bound, 0.0);
  r.passed = r.passed && c.disjoint && c.cover;
  r.extra["disjoint"] = c.disjoint;
  r.extra["cover"] = c.cover;
  r.extra["separation_over_2r"] = json_number(c.min_separation / (2.0 * lat.r));
  r.extra["gap_over_2r"] = json_number(c.max_probe_gap / (2.0 * lat.r));
  if (!c.disjoint) r.notes += "balls overlap; ";
  if (!c.cover) r.notes += "cover fails; ";
  return r;
}

}  // namespace riesz
