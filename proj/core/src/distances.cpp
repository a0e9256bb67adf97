#include "dirmet/distances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

namespace dirmet {

std::string_view to_string(DistanceKind kind) {
  switch (kind) {
    case DistanceKind::kGromovHausdorff:
      return "gh";
    case DistanceKind::kDistortion:
      return "dis";
    case DistanceKind::kDCorrespondence:
      return "cdis";
  }
  return "?";
}

namespace {

using Matrix = ExtendedDistanceMatrix;

ExtReal half(ExtReal v) { return 0.5 * v; }

void require_nonempty(std::size_t nx, std::size_t ny) {
  if (nx == 0 || ny == 0) {
    throw std::invalid_argument("distance between empty spaces");
  }
}

ExtReal diameter_bound(const Matrix& dx, const Matrix& dy) {
  return half(abs_diff(diameter(dx), diameter(dy)));
}

// ---------------------------------------------------------------------------
// Correspondence branch and bound
// ---------------------------------------------------------------------------

/// Minimizes distortion over relations that cover both sides, optionally
/// restricted to allowed cells and to pairwise d-compatible pairs. Cells
/// (x, y) are decided in ascending order; a pair is included before it is
/// excluded.
class CorrespondenceSearch {
 public:
  CorrespondenceSearch(const Matrix& dx, const Matrix& dy)
      : dx_(dx), dy_(dy), nx_(dx.size()), ny_(dy.size()) {}

  void restrict_to(const std::vector<bool>* allowed,
                   const ReachabilityPreorder* rx,
                   const ReachabilityPreorder* ry) {
    allowed_ = allowed;
    rx_ = rx;
    ry_ = ry;
  }

  void set_incumbent(ExtReal value, std::vector<PointPair> pairs) {
    best_ = value;
    best_pairs_ = std::move(pairs);
    found_ = true;
  }

  void run() {
    col_count_.assign(ny_, 0);
    chosen_.clear();
    dfs(0, ExtReal::zero(), false);
  }

  bool found() const { return found_; }
  ExtReal best() const { return best_; }
  const std::vector<PointPair>& best_pairs() const { return best_pairs_; }

 private:
  bool prunes(ExtReal partial) const { return found_ && partial >= best_; }

  void dfs(std::size_t cell, ExtReal partial, bool row_covered) {
    if (cell == nx_ * ny_) {
      if (!prunes(partial)) set_incumbent(partial, chosen_);
      return;
    }
    const std::size_t x = cell / ny_;
    const std::size_t y = cell % ny_;
    const bool row_ends = y + 1 == ny_;

    if (allowed_ == nullptr || (*allowed_)[cell]) {
      ExtReal next = partial;
      bool compatible = true;
      for (const PointPair& q : chosen_) {
        if (rx_ != nullptr && !dcompatible(*rx_, *ry_, {x, y}, q)) {
          compatible = false;
          break;
        }
        next = max(next, abs_diff(dx_(x, q.first), dy_(y, q.second)));
        if (prunes(next)) break;
      }
      if (compatible && !prunes(next)) {
        chosen_.push_back({x, y});
        ++col_count_[y];
        dfs(cell + 1, next, row_ends ? false : true);
        --col_count_[y];
        chosen_.pop_back();
      }
    }

    const bool row_ok = !row_ends || row_covered;
    const bool col_ok = x + 1 < nx_ || col_count_[y] > 0;
    if (row_ok && col_ok) dfs(cell + 1, partial, row_ends ? false : row_covered);
  }

  const Matrix& dx_;
  const Matrix& dy_;
  std::size_t nx_, ny_;
  const std::vector<bool>* allowed_ = nullptr;
  const ReachabilityPreorder* rx_ = nullptr;
  const ReachabilityPreorder* ry_ = nullptr;

  std::vector<PointPair> chosen_;
  std::vector<int> col_count_;
  bool found_ = false;
  ExtReal best_ = ExtReal::infinity();
  std::vector<PointPair> best_pairs_;
};

// ---------------------------------------------------------------------------
// Map enumeration
// ---------------------------------------------------------------------------

/// Incident edges of each point, in both directions.
struct Incidence {
  explicit Incidence(const FiniteDSpace& s) : out(s.size()), in(s.size()) {
    for (const Edge& e : s.edges()) {
      out[e.src].push_back(e.dst);
      in[e.dst].push_back(e.src);
    }
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::vector<std::size_t>> in;
};

/// Depth-first enumeration of maps X -> Y in lexicographic order, with
/// optional d-map filtering and pruning on partial distortion.
class MapEnumerator {
 public:
  MapEnumerator(const Matrix& dx, const Matrix& dy, const Incidence* incidence,
                const ReachabilityPreorder* reach_y)
      : dx_(dx), dy_(dy), inc_(incidence), reach_y_(reach_y) {}

  /// Calls visit(f, dis) for every map with dis < bound() at the time it is
  /// completed. `bound` is re-read at every node so callers may tighten it.
  /// Returns false if `node_cap` nodes were expanded before finishing.
  template <typename Bound, typename Visit>
  bool run(Bound bound, Visit visit, std::size_t node_cap) {
    f_.assign(dx_.size(), 0);
    nodes_ = 0;
    cap_ = node_cap;
    aborted_ = false;
    dfs(0, ExtReal::zero(), bound, visit);
    return !aborted_;
  }

 private:
  bool consistent(std::size_t x, std::size_t y) const {
    if (inc_ == nullptr) return true;
    for (std::size_t v : inc_->out[x]) {
      if (v < x && !(*reach_y_)(y, f_[v])) return false;
    }
    for (std::size_t u : inc_->in[x]) {
      if (u < x && !(*reach_y_)(f_[u], y)) return false;
    }
    return true;
  }

  template <typename Bound, typename Visit>
  void dfs(std::size_t x, ExtReal partial, Bound& bound, Visit& visit) {
    if (aborted_) return;
    if (++nodes_ > cap_) {
      aborted_ = true;
      return;
    }
    if (x == f_.size()) {
      visit(f_, partial);
      return;
    }
    for (std::size_t y = 0; y < dy_.size(); ++y) {
      if (!consistent(x, y)) continue;
      f_[x] = y;
      ExtReal next = partial;
      for (std::size_t u = 0; u < x && next < bound(); ++u) {
        next = max(next, abs_diff(dx_(x, u), dy_(y, f_[u])));
      }
      if (next < bound()) dfs(x + 1, next, bound, visit);
      if (aborted_) return;
    }
  }

  const Matrix& dx_;
  const Matrix& dy_;
  const Incidence* inc_;
  const ReachabilityPreorder* reach_y_;
  std::vector<std::size_t> f_;
  std::size_t nodes_ = 0;
  std::size_t cap_ = 0;
  bool aborted_ = false;
};

/// Exact min over (d-)maps of dis(f), or nullopt if the node cap is hit.
std::optional<ExtReal> min_map_distortion(const Matrix& dx, const Matrix& dy,
                                          const Incidence* inc,
                                          const ReachabilityPreorder* reach_y,
                                          std::size_t node_cap) {
  // Maps of infinite distortion are never completed, so "none found"
  // means every map has infinite distortion.
  ExtReal best = ExtReal::infinity();
  MapEnumerator e(dx, dy, inc, reach_y);
  const bool complete = e.run(
      [&] { return best; },
      [&](const std::vector<std::size_t>&, ExtReal dis) { best = min(best, dis); },
      node_cap);
  if (!complete) return std::nullopt;
  return best;
}

// ---------------------------------------------------------------------------
// Map-pair objective and local search
// ---------------------------------------------------------------------------

/// max{dis f, dis g, codis(f, g)} with a smooth tie-breaker for local search.
struct Score {
  ExtReal worst = ExtReal::zero();
  std::size_t infinite_terms = 0;
  double sum_sq = 0.0;

  void add(ExtReal term) {
    worst = max(worst, term);
    if (term.is_infinite()) {
      ++infinite_terms;
    } else {
      sum_sq += term.value() * term.value();
    }
  }

  bool better_than(const Score& o) const {
    if (worst != o.worst) return worst < o.worst;
    if (infinite_terms != o.infinite_terms) {
      return infinite_terms < o.infinite_terms;
    }
    return sum_sq < o.sum_sq - 1e-12;
  }
};

Score score_pair(const std::vector<std::size_t>& f,
                 const std::vector<std::size_t>& g, const Matrix& dx,
                 const Matrix& dy) {
  Score s;
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (std::size_t x2 = x + 1; x2 < f.size(); ++x2) {
      s.add(abs_diff(dx(x, x2), dy(f[x], f[x2])));
    }
  }
  for (std::size_t y = 0; y < g.size(); ++y) {
    for (std::size_t y2 = y + 1; y2 < g.size(); ++y2) {
      s.add(abs_diff(dy(y, y2), dx(g[y], g[y2])));
    }
  }
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (std::size_t y = 0; y < g.size(); ++y) {
      s.add(abs_diff(dx(x, g[y]), dy(f[x], y)));
    }
  }
  return s;
}

ExtReal pair_objective(const std::vector<std::size_t>& f,
                       const std::vector<std::size_t>& g, const Matrix& dx,
                       const Matrix& dy) {
  return max(max(map_distortion(f, dx, dy), map_distortion(g, dy, dx)),
             codistortion(f, g, dx, dy));
}

/// Side of a map pair with its optional d-map constraint.
struct MapSide {
  const Matrix* from;
  const Matrix* to;
  const Incidence* inc = nullptr;             // edges of the source space
  const ReachabilityPreorder* reach = nullptr;  // target preorder

  bool feasible(const std::vector<std::size_t>& f, std::size_t x,
                std::size_t y) const {
    if (inc == nullptr) return true;
    for (std::size_t v : inc->out[x]) {
      if (!(*reach)(y, f[v])) return false;
    }
    for (std::size_t u : inc->in[x]) {
      if (!(*reach)(f[u], y)) return false;
    }
    return true;
  }
};

struct PairSearchResult {
  std::vector<std::size_t> f, g;
  ExtReal value = ExtReal::infinity();
};

class PairLocalSearch {
 public:
  PairLocalSearch(MapSide fwd, MapSide bwd, std::uint64_t seed)
      : fwd_(fwd), bwd_(bwd), rng_(seed) {}

  /// Seeds plus `restarts` random restarts; keeps the best pair found.
  PairSearchResult run(const std::vector<PairSearchResult>& seeds,
                       std::size_t restarts) {
    PairSearchResult best;
    auto consider = [&](std::vector<std::size_t> f, std::vector<std::size_t> g) {
      improve(f, g);
      const ExtReal v = pair_objective(f, g, *fwd_.from, *fwd_.to);
      if (best.f.empty() || v < best.value) best = {f, g, v};
    };
    for (const auto& s : seeds) consider(s.f, s.g);
    for (std::size_t r = 0; r < restarts; ++r) {
      consider(random_map(fwd_), random_map(bwd_));
    }
    return best;
  }

 private:
  std::size_t uniform(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  /// A constant map perturbed by feasible random moves.
  std::vector<std::size_t> random_map(const MapSide& side) {
    const std::size_t n = side.from->size();
    const std::size_t m = side.to->size();
    std::vector<std::size_t> f(n, uniform(m));
    for (std::size_t t = 0; t < 4 * n; ++t) {
      const std::size_t x = uniform(n);
      const std::size_t y = uniform(m);
      if (side.feasible(f, x, y)) f[x] = y;
    }
    return f;
  }

  Score score(const std::vector<std::size_t>& f,
              const std::vector<std::size_t>& g) const {
    return score_pair(f, g, *fwd_.from, *fwd_.to);
  }

  /// One pass of best pointwise moves on `f`; `f_is_forward` selects which
  /// side of the pair is being moved.
  bool sweep(std::vector<std::size_t>& f, std::vector<std::size_t>& g,
             bool f_is_forward, Score& current) {
    const MapSide& side = f_is_forward ? fwd_ : bwd_;
    bool moved = false;
    for (std::size_t x = 0; x < f.size(); ++x) {
      const std::size_t old = f[x];
      std::size_t best_y = old;
      Score best_score = current;
      for (std::size_t y = 0; y < side.to->size(); ++y) {
        if (y == old || !side.feasible(f, x, y)) continue;
        f[x] = y;
        const Score s = f_is_forward ? score(f, g) : score(g, f);
        if (s.better_than(best_score)) {
          best_score = s;
          best_y = y;
        }
      }
      f[x] = best_y;
      if (best_y != old) {
        current = best_score;
        moved = true;
      }
    }
    return moved;
  }

  void improve(std::vector<std::size_t>& f, std::vector<std::size_t>& g) {
    Score current = score(f, g);
    for (int round = 0; round < 64; ++round) {
      const bool a = sweep(f, g, true, current);
      const bool b = sweep(g, f, false, current);
      if (!a && !b) break;
    }
  }

  MapSide fwd_, bwd_;
  std::mt19937_64 rng_;
};

/// The best pair of constant maps; constant maps are always d-maps.
PairSearchResult best_constant_pair(const Matrix& dx, const Matrix& dy) {
  PairSearchResult best;
  for (std::size_t x0 = 0; x0 < dx.size(); ++x0) {
    for (std::size_t y0 = 0; y0 < dy.size(); ++y0) {
      std::vector<std::size_t> f(dx.size(), y0), g(dy.size(), x0);
      const ExtReal v = pair_objective(f, g, dx, dy);
      if (best.f.empty() || v < best.value) best = {f, g, v};
    }
  }
  return best;
}

std::vector<PointPair> relation_of(const std::vector<std::size_t>& f,
                                   const std::vector<std::size_t>& g) {
  std::vector<PointPair> r;
  for (std::size_t x = 0; x < f.size(); ++x) r.push_back({x, f[x]});
  for (std::size_t y = 0; y < g.size(); ++y) r.push_back({g[y], y});
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

ExtReal map_lower_bound(const Matrix& dx, const Matrix& dy,
                        const Incidence* inc_x, const ReachabilityPreorder* ry,
                        const Incidence* inc_y, const ReachabilityPreorder* rx,
                        std::size_t cap) {
  ExtReal lb = diameter_bound(dx, dy);
  if (auto a = min_map_distortion(dx, dy, inc_x, ry, cap)) lb = max(lb, half(*a));
  if (auto b = min_map_distortion(dy, dx, inc_y, rx, cap)) lb = max(lb, half(*b));
  return lb;
}

}  // namespace

// ---------------------------------------------------------------------------
// Gromov-Hausdorff
// ---------------------------------------------------------------------------

DistanceReport gh_distance(const ExtendedDistanceMatrix& dx,
                           const ExtendedDistanceMatrix& dy,
                           const SearchBudget& budget) {
  require_nonempty(dx.size(), dy.size());
  DistanceReport report;
  PairLocalSearch ls({&dx, &dy}, {&dy, &dx}, budget.seed);
  PairSearchResult best = ls.run({best_constant_pair(dx, dy)}, budget.restarts);
  auto relation = relation_of(best.f, best.g);
  if (dx.size() * dy.size() <= budget.exhaustive_gh) {
    // The local-search relation is a correspondence; it only tightens the
    // initial bound.
    CorrespondenceSearch search(dx, dy);
    const ExtReal start = distortion(relation, dx, dy);
    search.set_incumbent(start, std::move(relation));
    search.run();
    report.value = half(search.best());
    report.lower_bound = report.value;
    report.exact = true;
    report.certificate = search.best_pairs();
    return report;
  }
  report.value = half(distortion(relation, dx, dy));
  report.certificate = std::move(relation);
  report.lower_bound = min(report.value,
                           map_lower_bound(dx, dy, nullptr, nullptr, nullptr,
                                           nullptr, budget.lower_bound_nodes));
  // A search value that meets the bound is optimal.
  report.exact = report.lower_bound == report.value;
  return report;
}

DistanceReport gh_distance(const DirectedMetricSpace& x,
                           const DirectedMetricSpace& y,
                           const SearchBudget& budget) {
  return gh_distance(x.zz(), y.zz(), budget);
}

// ---------------------------------------------------------------------------
// Distortion distance over d-map pairs
// ---------------------------------------------------------------------------

DistanceReport distortion_distance(const DirectedMetricSpace& x,
                                   const DirectedMetricSpace& y,
                                   const SearchBudget& budget) {
  require_nonempty(x.size(), y.size());
  const Matrix& dx = x.zz();
  const Matrix& dy = y.zz();
  const Incidence inc_x(x.space());
  const Incidence inc_y(y.space());

  PairSearchResult best = best_constant_pair(dx, dy);
  DistanceReport report;

  const double log_pairs = static_cast<double>(x.size()) *
                               std::log(static_cast<double>(y.size())) +
                           static_cast<double>(y.size()) *
                               std::log(static_cast<double>(x.size()));
  if (log_pairs <= std::log(budget.exhaustive_map_pairs) + 1e-12) {
    struct Scored {
      std::vector<std::size_t> map;
      ExtReal dis;
    };
    auto collect = [&](const Matrix& a, const Matrix& b, const Incidence& inc,
                       const ReachabilityPreorder& reach) {
      std::vector<Scored> out;
      MapEnumerator e(a, b, &inc, &reach);
      e.run([&] { return best.value; },
            [&](const std::vector<std::size_t>& f, ExtReal dis) {
              out.push_back({f, dis});
            },
            static_cast<std::size_t>(-1));
      std::stable_sort(out.begin(), out.end(),
                       [](const Scored& p, const Scored& q) { return p.dis < q.dis; });
      return out;
    };
    const auto fs = collect(dx, dy, inc_x, y.reach());
    const auto gs = collect(dy, dx, inc_y, x.reach());
    for (const Scored& f : fs) {
      if (!(f.dis < best.value)) break;
      for (const Scored& g : gs) {
        if (!(g.dis < best.value)) break;
        ExtReal worst = max(f.dis, g.dis);
        for (std::size_t i = 0; i < f.map.size() && worst < best.value; ++i) {
          for (std::size_t j = 0; j < g.map.size(); ++j) {
            worst = max(worst, abs_diff(dx(i, g.map[j]), dy(f.map[i], j)));
          }
        }
        if (worst < best.value) best = {f.map, g.map, worst};
      }
    }
    report.value = half(best.value);
    report.lower_bound = report.value;
    report.exact = true;
  } else {
    PairLocalSearch ls({&dx, &dy, &inc_x, &y.reach()},
                       {&dy, &dx, &inc_y, &x.reach()}, budget.seed);
    PairSearchResult found = ls.run({best}, budget.restarts);
    if (found.value < best.value) best = found;
    report.value = half(best.value);
    report.lower_bound =
        min(report.value,
            map_lower_bound(dx, dy, &inc_x, &y.reach(), &inc_y, &x.reach(),
                            budget.lower_bound_nodes));
    report.exact = report.lower_bound == report.value;
  }
  report.certificate = MapPair{best.f, best.g};
  return report;
}

// ---------------------------------------------------------------------------
// d-correspondence distortion distance
// ---------------------------------------------------------------------------

namespace {

/// Removes pairs that cannot belong to any d-correspondence: a live pair
/// needs, for every point on either side, some live partner pair that is
/// d-compatible with it. Iterated to a fixed point.
std::vector<bool> propagate(const ReachabilityPreorder& rx,
                            const ReachabilityPreorder& ry) {
  const std::size_t nx = rx.size();
  const std::size_t ny = ry.size();
  std::vector<bool> live(nx * ny, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < live.size(); ++p) {
      if (!live[p]) continue;
      const PointPair pp{p / ny, p % ny};
      std::vector<bool> hit_x(nx, false), hit_y(ny, false);
      for (std::size_t q = 0; q < live.size(); ++q) {
        if (!live[q]) continue;
        const PointPair qq{q / ny, q % ny};
        if (hit_x[qq.first] && hit_y[qq.second]) continue;
        if (dcompatible(rx, ry, pp, qq)) {
          hit_x[qq.first] = true;
          hit_y[qq.second] = true;
        }
      }
      const bool ok = std::all_of(hit_x.begin(), hit_x.end(), [](bool b) { return b; }) &&
                      std::all_of(hit_y.begin(), hit_y.end(), [](bool b) { return b; });
      if (!ok) {
        live[p] = false;
        changed = true;
      }
    }
  }
  return live;
}

bool covers(const std::vector<bool>& live, std::size_t nx, std::size_t ny) {
  for (std::size_t x = 0; x < nx; ++x) {
    bool any = false;
    for (std::size_t y = 0; y < ny && !any; ++y) any = live[x * ny + y];
    if (!any) return false;
  }
  for (std::size_t y = 0; y < ny; ++y) {
    bool any = false;
    for (std::size_t x = 0; x < nx && !any; ++x) any = live[x * ny + y];
    if (!any) return false;
  }
  return true;
}

/// Randomized greedy construction of d-correspondences from live pairs.
std::optional<std::vector<PointPair>> greedy_dcorrespondence(
    const Matrix& dx, const Matrix& dy, const ReachabilityPreorder& rx,
    const ReachabilityPreorder& ry, const std::vector<bool>& live,
    std::size_t restarts, std::uint64_t seed) {
  const std::size_t nx = dx.size();
  const std::size_t ny = dy.size();
  std::mt19937_64 rng(seed);
  std::optional<std::vector<PointPair>> best;
  ExtReal best_value = ExtReal::infinity();

  for (std::size_t r = 0; r <= restarts; ++r) {
    // Points to cover: every x, then every y, in a shuffled order.
    std::vector<std::size_t> order(nx + ny);
    std::iota(order.begin(), order.end(), 0);
    if (r > 0) std::shuffle(order.begin(), order.end(), rng);
    std::vector<PointPair> chosen;
    std::vector<bool> cov_x(nx, false), cov_y(ny, false);
    ExtReal current = ExtReal::zero();
    bool failed = false;
    for (std::size_t item : order) {
      const bool is_x = item < nx;
      const std::size_t pt = is_x ? item : item - nx;
      if (is_x ? cov_x[pt] : cov_y[pt]) continue;
      std::optional<PointPair> pick;
      ExtReal pick_value = ExtReal::infinity();
      const std::size_t other_n = is_x ? ny : nx;
      for (std::size_t o = 0; o < other_n; ++o) {
        const PointPair cand = is_x ? PointPair{pt, o} : PointPair{o, pt};
        if (!live[cand.first * ny + cand.second]) continue;
        ExtReal v = current;
        bool ok = true;
        for (const PointPair& q : chosen) {
          if (!dcompatible(rx, ry, cand, q)) {
            ok = false;
            break;
          }
          v = max(v, abs_diff(dx(cand.first, q.first), dy(cand.second, q.second)));
        }
        if (ok && (!pick || v < pick_value)) {
          pick = cand;
          pick_value = v;
        }
      }
      if (!pick) {
        failed = true;
        break;
      }
      chosen.push_back(*pick);
      cov_x[pick->first] = true;
      cov_y[pick->second] = true;
      current = pick_value;
    }
    if (!failed && (!best || current < best_value)) {
      best = chosen;
      best_value = current;
    }
  }
  return best;
}

}  // namespace

DistanceReport dcorrespondence_distance(const DirectedMetricSpace& x,
                                        const DirectedMetricSpace& y,
                                        const SearchBudget& budget) {
  require_nonempty(x.size(), y.size());
  const Matrix& dx = x.zz();
  const Matrix& dy = y.zz();
  DistanceReport report;

  const std::vector<bool> live = propagate(x.reach(), y.reach());
  if (!covers(live, x.size(), y.size())) {
    report.value = ExtReal::infinity();
    report.lower_bound = ExtReal::infinity();
    report.exact = true;
    return report;
  }

  if (x.size() * y.size() <= budget.exhaustive_cdis) {
    CorrespondenceSearch search(dx, dy);
    search.restrict_to(&live, &x.reach(), &y.reach());
    search.run();
    report.exact = true;
    if (search.found()) {
      report.value = half(search.best());
      report.certificate = search.best_pairs();
    }
    report.lower_bound = report.value;
    return report;
  }

  auto found = greedy_dcorrespondence(dx, dy, x.reach(), y.reach(), live,
                                      budget.restarts, budget.seed);
  if (found) {
    report.value = half(distortion(*found, dx, dy));
    report.certificate = std::move(*found);
  }
  const Incidence inc_x(x.space());
  const Incidence inc_y(y.space());
  report.lower_bound =
      min(report.value, map_lower_bound(dx, dy, &inc_x, &y.reach(), &inc_y,
                                        &x.reach(), budget.lower_bound_nodes));
  report.exact = report.lower_bound == report.value;
  return report;
}

// ---------------------------------------------------------------------------

ExtReal evaluate_certificate(DistanceKind kind, const Certificate& cert,
                             const DirectedMetricSpace& x,
                             const DirectedMetricSpace& y) {
  if (std::holds_alternative<std::monostate>(cert)) return ExtReal::infinity();
  if (const auto* pairs = std::get_if<std::vector<PointPair>>(&cert)) {
    if (kind == DistanceKind::kDistortion) {
      throw std::invalid_argument("distortion certificates are map pairs");
    }
    return half(distortion(*pairs, x.zz(), y.zz()));
  }
  const auto& maps = std::get<MapPair>(cert);
  if (kind != DistanceKind::kDistortion) {
    throw std::invalid_argument("map-pair certificate for a relation distance");
  }
  VertexMap f(x, y, maps.forward);
  VertexMap g(y, x, maps.backward);
  return half(max(max(distortion(f), distortion(g)), codistortion(f, g)));
}

ChainReport verify_chain(const DirectedMetricSpace& x,
                         const DirectedMetricSpace& y,
                         const SearchBudget& budget) {
  ChainReport c;
  c.gh_base = gh_distance(x.space().base().materialize(),
                          y.space().base().materialize(), budget);
  c.gh = gh_distance(x, y, budget);
  c.dis = distortion_distance(x, y, budget);
  c.cdis = dcorrespondence_distance(x, y, budget);
  c.conclusive = c.gh_base.exact && c.gh.exact && c.dis.exact && c.cdis.exact;
  c.holds = approx_le(c.gh_base.value, c.gh.value) &&
            approx_le(c.gh.value, c.dis.value) &&
            approx_le(c.dis.value, c.cdis.value);
  return c;
}

}  // namespace dirmet
