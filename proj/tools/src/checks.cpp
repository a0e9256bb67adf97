#include "dirmet_tools/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "dirmet/constructions.hpp"
#include "dirmet/gallery.hpp"
#include "dirmet/io.hpp"
#include "dirmet_tools/ensemble.hpp"
#include "dirmet_tools/oracles.hpp"

namespace dirmet::tools {
namespace {

using nlohmann::json;

constexpr std::size_t kMaxRecorded = 3;

std::string num(double v) { return io::format_number(v); }
std::string num(ExtReal v) { return to_string(v); }

json value_json(ExtReal v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

json space_json(const FiniteDSpace& s) {
  return json::parse(io::space_to_json(s));
}

CheckResult begin(std::string id, std::string title) {
  CheckResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  return r;
}

void record(CheckResult& r, json instance) {
  r.passed = false;
  if (r.failures.size() < kMaxRecorded) r.failures.push_back(std::move(instance));
}

// Shared by the axiom, base and reversal checks.
std::vector<FiniteDSpace> graph_ensemble(std::uint64_t seed) {
  auto rng = stream(seed, 1);
  EnsembleOptions opts;
  opts.min_points = 2;
  opts.max_points = 40;
  std::vector<FiniteDSpace> out;
  for (int g = 0; g < 50; ++g) out.push_back(random_space(rng, opts));
  return out;
}

// Pairs with at most three points a side.
std::vector<std::pair<FiniteDSpace, FiniteDSpace>> small_pairs(
    std::uint64_t seed, std::uint64_t salt, std::size_t count) {
  auto rng = stream(seed, salt);
  EnsembleOptions opts;
  opts.min_points = 1;
  opts.max_points = 3;
  opts.min_edge_probability = 0.2;
  opts.max_edge_probability = 0.8;
  std::vector<std::pair<FiniteDSpace, FiniteDSpace>> out;
  for (std::size_t i = 0; i < count; ++i) {
    FiniteDSpace x = random_space(rng, opts);
    FiniteDSpace y = random_space(rng, opts);
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

}  // namespace

CheckResult check_zigzag_axioms(const CheckContext& ctx) {
  CheckResult r = begin("zigzag-axioms", "zigzag metric axioms on 50 random graphs");
  r.time_limit = 10.0;
  std::size_t triples = 0;
  for (const FiniteDSpace& s : graph_ensemble(ctx.seed)) {
    const ExtendedDistanceMatrix zz = compute_zigzag(s);
    const std::size_t n = s.size();
    std::string broken;
    for (std::size_t i = 0; i < n && broken.empty(); ++i) {
      if (zz(i, i) != ExtReal::zero()) broken = "diagonal at " + std::to_string(i);
      for (std::size_t j = 0; j < n && broken.empty(); ++j) {
        if (zz(i, j) != zz(j, i)) broken = "symmetry";
        if (i != j && zz(i, j).is_finite() && !(zz(i, j).value() > 0.0)) {
          broken = "identity of indiscernibles";
        }
        for (std::size_t k = 0; k < n && broken.empty(); ++k) {
          ++triples;
          if (!approx_le(zz(i, k), zz(i, j) + zz(j, k), ctx.tol)) {
            broken = "triangle " + std::to_string(i) + "," + std::to_string(j) +
                     "," + std::to_string(k);
          }
        }
      }
    }
    if (!broken.empty()) record(r, {{"violation", broken}, {"space", space_json(s)}});
  }
  r.detail = std::to_string(triples) + " triples checked";
  return r;
}

CheckResult check_zigzag_above_base(const CheckContext& ctx) {
  CheckResult r = begin("zigzag-above-base", "zigzag distance dominates the base metric");
  std::size_t entries = 0, violations = 0;
  for (const FiniteDSpace& s : graph_ensemble(ctx.seed)) {
    const ExtendedDistanceMatrix zz = compute_zigzag(s);
    std::size_t here = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        ++entries;
        if (!approx_le(s.base()(i, j), zz(i, j), ctx.tol)) ++here;
      }
    }
    if (here > 0) {
      violations += here;
      record(r, {{"violations", here}, {"space", space_json(s)}});
    }
  }
  r.detail = std::to_string(entries) + " entries, " + std::to_string(violations) +
             " violations";
  return r;
}

CheckResult check_reversal(const CheckContext& ctx) {
  CheckResult r = begin("reversal", "reversal keeps the zigzag metric and the GH class");
  for (const FiniteDSpace& s : graph_ensemble(ctx.seed)) {
    const DirectedMetricSpace a(s);
    const DirectedMetricSpace b(reverse(s));
    if (!approx_equal(a.zz(), b.zz(), ctx.tol) || !(b.reach() == a.reach().transpose())) {
      record(r, {{"violation", "zz or reach of the reverse"}, {"space", space_json(s)}});
    }
  }
  auto rng = stream(ctx.seed, 3);
  EnsembleOptions opts;
  opts.min_points = 1;
  opts.max_points = 4;
  opts.connected = true;
  int exact_zero = 0;
  for (int t = 0; t < 20; ++t) {
    const FiniteDSpace s = random_space(rng, opts);
    const DirectedMetricSpace a(s);
    const DirectedMetricSpace b(reverse(s));
    const DistanceReport gh = gh_distance(a, b, ctx.budget);
    if (gh.exact && gh.value == ExtReal::zero()) {
      ++exact_zero;
    } else {
      record(r, {{"violation", "gh(s, reverse s) != 0"},
                 {"value", value_json(gh.value)},
                 {"exact", gh.exact},
                 {"space", space_json(s)}});
    }
  }
  r.detail = "50 zz/reach comparisons; gh = 0 exactly on " +
             std::to_string(exact_zero) + "/20 connected spaces";
  return r;
}

CheckResult check_inequality_chain(const CheckContext& ctx) {
  CheckResult r = begin("inequality-chain", "gh_base <= gh <= dis <= cdis on 30 small pairs");
  r.time_limit = 60.0;
  std::size_t directed_ok = 0, base_ok = 0, conclusive = 0;
  for (const auto& [sx, sy] : small_pairs(ctx.seed, 4, 30)) {
    const DirectedMetricSpace x(sx), y(sy);
    const ChainReport c = verify_chain(x, y, ctx.budget);
    const bool directed = approx_le(c.gh.value, c.dis.value, ctx.tol) &&
                          approx_le(c.dis.value, c.cdis.value, ctx.tol);
    const bool base = approx_le(c.gh_base.value, c.gh.value, ctx.tol);
    conclusive += c.conclusive ? 1 : 0;
    directed_ok += directed ? 1 : 0;
    base_ok += base ? 1 : 0;
    if (!c.conclusive || !directed || !base) {
      record(r, {{"conclusive", c.conclusive},
                 {"gh_base", value_json(c.gh_base.value)},
                 {"gh", value_json(c.gh.value)},
                 {"dis", value_json(c.dis.value)},
                 {"cdis", value_json(c.cdis.value)},
                 {"x", space_json(sx)},
                 {"y", space_json(sy)}});
    }
  }
  r.detail = "exhaustive on " + std::to_string(conclusive) +
             "/30; gh <= dis <= cdis on " + std::to_string(directed_ok) +
             "/30; gh_base <= gh on " + std::to_string(base_ok) + "/30";
  return r;
}

CheckResult check_source_sink(const CheckContext& ctx) {
  CheckResult r = begin("source-sink", "source-sink interval against its reverse");
  constexpr std::size_t k = 8;
  const FiniteDSpace s = gallery::source_sink_interval(k);
  const DirectedMetricSpace x(s), xr(reverse(s));

  const DistanceReport dis = distortion_distance(x, xr, ctx.budget);
  const double slack = 2.0 / static_cast<double>(k);
  const bool dis_ok = dis.value.is_finite() && std::fabs(dis.value.value() - 0.5) <= slack;
  const ExtReal replay = evaluate_certificate(DistanceKind::kDistortion, dis.certificate, x, xr);
  const bool replay_ok = approx_equal(replay, dis.value, ctx.tol);

  const DistanceReport cdis = dcorrespondence_distance(x, xr, ctx.budget);
  const bool cdis_ok = cdis.exact && cdis.value.is_infinite();

  const FiniteDSpace small = gallery::source_sink_interval(2);
  const DirectedMetricSpace y(small), yr(reverse(small));
  SearchBudget wide = ctx.budget;
  wide.exhaustive_gh = std::max<std::size_t>(wide.exhaustive_gh, small.size() * small.size());
  const DistanceReport gh = gh_distance(y, yr, wide);
  const bool gh_ok = gh.exact && gh.value == ExtReal::zero();

  if (!dis_ok || !replay_ok) {
    record(r, {{"violation", "dis outside 0.5 +- 2/k or certificate mismatch"},
               {"value", value_json(dis.value)},
               {"replayed", value_json(replay)}});
  }
  if (!cdis_ok) record(r, {{"violation", "cdis not inf"}, {"value", value_json(cdis.value)}});
  if (!gh_ok) record(r, {{"violation", "gh not 0 at k = 2"}, {"value", value_json(gh.value)}});
  r.detail = "dis = " + num(dis.value) + " (lower bound " + num(dis.lower_bound) +
             ", exact " + (dis.exact ? "yes" : "no") + "), cdis = " + num(cdis.value) +
             ", gh(k=2) = " + num(gh.value);
  return r;
}

CheckResult check_directed_square(const CheckContext&) {
  CheckResult r = begin("directed-square", "identity between base and zigzag square, k = 64");
  gallery::GridSpec spec;
  spec.k = 64;
  const FiniteDSpace s = gallery::directed_square_grid(spec);
  const ZigzagEngine engine(s);
  const std::size_t n = s.size();
  ExtReal dis = ExtReal::zero(), codis = ExtReal::zero();
  ExtReal diam_zz = ExtReal::zero(), diam_base = ExtReal::zero();
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<ExtReal> zz = engine.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      const ExtReal d = s.base()(i, j);
      // f = g = identity: dis(f) compares d(i, j) with zz(f i, f j) and the
      // codistortion compares d(i, g j) with zz(f i, j).
      dis = max(dis, abs_diff(d, zz[j]));
      codis = max(codis, abs_diff(s.base()(i, j), zz[j]));
      diam_zz = max(diam_zz, zz[j]);
      diam_base = max(diam_base, d);
    }
  }
  const double target_dis = 2.0 - std::sqrt(2.0);
  const double target_gh = 1.0 - std::sqrt(2.0) / 2.0;
  const ExtReal lower = 0.5 * abs_diff(diam_zz, diam_base);
  const ExtReal upper = 0.5 * max(dis, codis);
  auto near = [](ExtReal v, double t, double tol) {
    return v.is_finite() && std::fabs(v.value() - t) <= tol;
  };
  if (!near(dis, target_dis, 0.03) || !near(codis, target_dis, 0.03) ||
      !near(lower, target_gh, 0.015) || !near(upper, target_gh, 0.015)) {
    record(r, {{"dis", value_json(dis)},
               {"codis", value_json(codis)},
               {"gh_lower", value_json(lower)},
               {"gh_upper", value_json(upper)}});
  }
  r.detail = "dis = " + num(dis) + ", codis = " + num(codis) + ", gh in [" +
             num(lower) + ", " + num(upper) + "]";
  return r;
}

CheckResult check_torus_balls(const CheckContext& ctx) {
  CheckResult r = begin("torus-balls", "flat torus ball inclusions, k = 32");
  r.time_limit = 30.0;
  gallery::GridSpec spec;
  spec.k = 32;
  const FiniteDSpace s = gallery::flat_torus_grid(spec);
  const ZigzagEngine engine(s);
  const double band = 1.0 / static_cast<double>(spec.k);
  const double radii[] = {0.15, 0.3, 0.45};
  std::size_t checks = 0, violations = 0;
  for (std::size_t ci = 0; ci < spec.k; ci += spec.k / 4) {
    for (std::size_t cj = 0; cj < spec.k; cj += spec.k / 4) {
      const std::size_t c = gallery::grid_index(ci, cj, spec.k);
      const std::vector<ExtReal> zz = engine.row(c);
      for (double rad : radii) {
        std::size_t here = 0;
        for (std::size_t p = 0; p < s.size(); ++p) {
          const ExtReal d = s.base()(c, p);
          ++checks;
          const bool in_small = approx_le(d, ExtReal(rad * std::sqrt(2.0) / 2.0), ctx.tol);
          const bool in_zz = approx_le(zz[p], ExtReal(rad), ctx.tol);
          if (in_small && !approx_le(zz[p], ExtReal(rad + band), ctx.tol)) ++here;
          if (in_zz && !approx_le(d, ExtReal(rad + band), ctx.tol)) ++here;
        }
        if (here > 0) {
          violations += here;
          record(r, {{"center", s.label(c)}, {"radius", rad}, {"violations", here}});
        }
      }
    }
  }
  r.detail = std::to_string(checks) + " memberships, " + std::to_string(violations) +
             " outside the band";
  return r;
}

CheckResult check_open_book(const CheckContext&) {
  CheckResult r = begin("open-book", "open book zz(a, b) = 1/n for n = 1..10, m = 3");
  double previous = 0.0;
  for (std::size_t n = 1; n <= 10; ++n) {
    const ExtReal ab = zigzag_row(gallery::open_book(n, 3), 0)[1];
    const double want = 1.0 / static_cast<double>(n);
    const bool equal = approx_equal(ab, ExtReal(want), 1e-9);
    const bool decreasing = n == 1 || (ab.is_finite() && ab.value() < previous);
    if (!equal || !decreasing) {
      record(r, {{"n", n}, {"zz_ab", value_json(ab)}, {"expected", want}});
    }
    previous = ab.value();
  }
  r.detail = "zz(a, b) at n = 10 is " + num(previous);
  return r;
}

CheckResult check_disometry(const CheckContext& ctx) {
  CheckResult r = begin("disometry", "distortion 0 exactly for relabelings, >= 0.05 otherwise");
  auto rng = stream(ctx.seed, 9);
  EnsembleOptions opts;
  opts.min_points = 3;
  opts.max_points = 5;
  opts.min_edge_probability = 0.1;
  opts.max_edge_probability = 0.5;
  opts.connected = true;
  std::size_t iso_ok = 0, far_ok = 0;
  for (int t = 0; t < 20; ++t) {
    const FiniteDSpace sx = random_space(rng, opts);
    const FiniteDSpace sy = relabel(sx, random_permutation(rng, sx.size()));
    const DirectedMetricSpace x(sx), y(sy);
    const DistanceReport d = distortion_distance(x, y, ctx.budget);
    bool ok = d.exact && approx_equal(d.value, ExtReal::zero(), ctx.tol);
    if (ok) {
      const auto& maps = std::get<MapPair>(d.certificate);
      const VertexMap f(x, y, maps.forward), g(y, x, maps.backward);
      ok = is_disometry(f) && is_disometry(g);
      for (std::size_t i = 0; i < sx.size() && ok; ++i) ok = g(f(i)) == i && f(g(i)) == i;
    }
    if (ok) {
      ++iso_ok;
    } else {
      record(r, {{"kind", "relabeled"}, {"value", value_json(d.value)},
                 {"x", space_json(sx)}, {"y", space_json(sy)}});
    }
  }
  for (int t = 0; t < 20; ++t) {
    const FiniteDSpace sx = random_space(rng, opts);
    const FiniteDSpace sy = relabel(lengthen_edges(sx, rng, 0.1, 0.3),
                                    random_permutation(rng, sx.size()));
    const DirectedMetricSpace x(sx), y(sy);
    const DistanceReport d = distortion_distance(x, y, ctx.budget);
    if (d.exact && approx_le(ExtReal(0.05), d.value, ctx.tol)) {
      ++far_ok;
    } else {
      record(r, {{"kind", "perturbed"}, {"value", value_json(d.value)},
                 {"exact", d.exact}, {"x", space_json(sx)}, {"y", space_json(sy)}});
    }
  }
  r.detail = "isometric " + std::to_string(iso_ok) + "/20, perturbed " +
             std::to_string(far_ok) + "/20";
  return r;
}

CheckResult check_gh_oracle(const CheckContext& ctx) {
  CheckResult r = begin("gh-oracle", "branch and bound against naive correspondence listing");
  std::size_t agree = 0, total = 0;
  for (const auto& [sx, sy] : small_pairs(ctx.seed, 10, 30)) {
    const DirectedMetricSpace x(sx), y(sy);
    const std::pair<ExtendedDistanceMatrix, ExtendedDistanceMatrix> cases[] = {
        {x.zz(), y.zz()},
        {sx.base().materialize(), sy.base().materialize()}};
    for (const auto& [dx, dy] : cases) {
      ++total;
      const DistanceReport gh = gh_distance(dx, dy, ctx.budget);
      const ExtReal naive = naive_gh(dx, dy);
      if (gh.exact && approx_equal(gh.value, naive, ctx.tol)) {
        ++agree;
      } else {
        record(r, {{"gh", value_json(gh.value)}, {"naive", value_json(naive)},
                   {"x", space_json(sx)}, {"y", space_json(sy)}});
      }
    }
  }
  r.detail = std::to_string(agree) + "/" + std::to_string(total) + " agree";
  return r;
}

CheckResult check_grid_oracle(const CheckContext& ctx) {
  CheckResult r = begin("grid-oracle", "grid zigzag distances against the continuous square");
  constexpr std::size_t coarse = 32;
  const double rho = gallery::approximation_ratio(gallery::GridSpec::default_steps());
  double previous = std::numeric_limits<double>::infinity();
  std::string detail;
  for (std::size_t k : {32u, 64u, 128u}) {
    gallery::GridSpec spec;
    spec.k = k;
    const FiniteDSpace s = gallery::directed_square_grid(spec);
    const ZigzagEngine engine(s);
    const std::size_t scale = k / coarse;
    double err = 0.0;
    for (std::size_t a = 0; a <= coarse; ++a) {
      for (std::size_t b = 0; b <= coarse; ++b) {
        const std::vector<ExtReal> zz =
            engine.row(gallery::grid_index(a * scale, b * scale, k + 1));
        const Point2 p{static_cast<double>(a) / coarse, static_cast<double>(b) / coarse};
        for (std::size_t c = 0; c <= coarse; ++c) {
          for (std::size_t d = 0; d <= coarse; ++d) {
            const Point2 q{static_cast<double>(c) / coarse, static_cast<double>(d) / coarse};
            const ExtReal got = zz[gallery::grid_index(c * scale, d * scale, k + 1)];
            const double want = gallery::square_zigzag_oracle(p, q);
            err = std::max(err, got.is_finite() ? std::fabs(got.value() - want)
                                                : std::numeric_limits<double>::infinity());
          }
        }
      }
    }
    const double bound = 1.0 / static_cast<double>(k) + (rho - 1.0) * 2.0;
    if (!(err <= bound) || err > previous + ctx.tol) {
      record(r, {{"k", k}, {"error", err}, {"bound", bound}, {"previous", previous}});
    }
    previous = err;
    detail += (detail.empty() ? "" : ", ") + ("k=" + std::to_string(k) + ": " + num(err));
  }
  r.detail = "max error on the 1/32 lattice " + detail + " (ratio " + num(rho) + ")";
  return r;
}

namespace {

using CheckFn = CheckResult (*)(const CheckContext&);

const std::map<std::string, CheckFn, std::less<>>& registry() {
  static const std::map<std::string, CheckFn, std::less<>> table{
      {"zigzag-axioms", check_zigzag_axioms},
      {"zigzag-above-base", check_zigzag_above_base},
      {"reversal", check_reversal},
      {"inequality-chain", check_inequality_chain},
      {"source-sink", check_source_sink},
      {"directed-square", check_directed_square},
      {"torus-balls", check_torus_balls},
      {"open-book", check_open_book},
      {"disometry", check_disometry},
      {"gh-oracle", check_gh_oracle},
      {"grid-oracle", check_grid_oracle},
  };
  return table;
}

}  // namespace

bool is_suite(std::string_view name) {
  return name == "core" || name == "distances" || name == "examples" || name == "all";
}

std::vector<std::string> suite_checks(std::string_view name) {
  if (name == "core") return {"zigzag-axioms", "zigzag-above-base", "reversal"};
  if (name == "distances") return {"inequality-chain", "disometry", "gh-oracle"};
  if (name == "examples") {
    return {"source-sink", "directed-square", "torus-balls", "open-book", "grid-oracle"};
  }
  if (name == "all") {
    return {"zigzag-axioms",  "zigzag-above-base", "reversal",
            "inequality-chain", "source-sink",     "directed-square",
            "torus-balls",    "open-book",         "disometry",
            "gh-oracle",      "grid-oracle"};
  }
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

CheckResult run_check(std::string_view id, const CheckContext& ctx) {
  const auto it = registry().find(id);
  if (it == registry().end()) {
    throw std::invalid_argument("unknown check: " + std::string(id));
  }
  const auto start = std::chrono::steady_clock::now();
  CheckResult r = it->second(ctx);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

json suite_report(std::string_view suite, const CheckContext& ctx,
                  const std::vector<CheckResult>& results) {
  json checks = json::array();
  bool all = true;
  for (const CheckResult& r : results) {
    all = all && r.passed;
    checks.push_back({{"id", r.id},
                      {"title", r.title},
                      {"passed", r.passed},
                      {"detail", r.detail},
                      {"failures", r.failures}});
  }
  return {{"command", "verify"},
          {"suite", suite},
          {"seed", ctx.seed},
          {"passed", all},
          {"checks", std::move(checks)}};
}

}  // namespace dirmet::tools
