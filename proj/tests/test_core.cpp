#include <gtest/gtest.h>

#include <cmath>

#include "dirmet/constructions.hpp"
#include "dirmet/gallery.hpp"
#include "dirmet/io.hpp"
#include "dirmet/zigzag.hpp"
#include "dirmet_tools/ensemble.hpp"
#include "support.hpp"

using namespace dirmet;
using testing_support::brute_zigzag;

namespace {

FiniteDSpace two_points(double base, double edge) {
  ExtendedDistanceMatrix m(2);
  m.set_symmetric(0, 1, ExtReal(base));
  return FiniteDSpace(index_labels(2), BaseMetric(m), {{0, 1, edge}});
}

std::vector<FiniteDSpace> random_spaces(std::uint64_t seed, std::size_t count,
                                        std::size_t max_points) {
  auto rng = tools::stream(seed, 99);
  tools::EnsembleOptions opts;
  opts.min_points = 1;
  opts.max_points = max_points;
  std::vector<FiniteDSpace> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(tools::random_space(rng, opts));
  return out;
}

}  // namespace

// --- ExtReal ----------------------------------------------------------------

TEST(ExtReal, SaturatesAtInfinity) {
  const ExtReal inf = ExtReal::infinity();
  EXPECT_TRUE((ExtReal(2.0) + inf).is_infinite());
  EXPECT_EQ(ExtReal(2.0) + ExtReal(3.0), ExtReal(5.0));
  EXPECT_TRUE((0.5 * inf).is_infinite());
}

TEST(ExtReal, ExtendedAbsDiff) {
  const ExtReal inf = ExtReal::infinity();
  EXPECT_EQ(abs_diff(inf, inf), ExtReal::zero());
  EXPECT_TRUE(abs_diff(inf, ExtReal(1.0)).is_infinite());
  EXPECT_TRUE(abs_diff(ExtReal(1.0), inf).is_infinite());
  EXPECT_EQ(abs_diff(ExtReal(1.0), ExtReal(3.5)), ExtReal(2.5));
}

TEST(ExtReal, CheckedRejectsNegative) {
  EXPECT_THROW(ExtReal::checked(-1.0), std::invalid_argument);
  EXPECT_THROW(ExtReal::checked(std::nan("")), std::invalid_argument);
}

TEST(ExtReal, FormatsInf) {
  EXPECT_EQ(to_string(ExtReal::infinity()), "inf");
  EXPECT_EQ(to_string(ExtReal(0.25)), "0.25");
}

// --- FiniteDSpace validation ------------------------------------------------

TEST(FiniteDSpace, RejectsEdgeShorterThanBase) {
  EXPECT_THROW(two_points(2.0, 1.0), std::invalid_argument);
}

TEST(FiniteDSpace, RejectsSelfLoop) {
  ExtendedDistanceMatrix m(2);
  m.set_symmetric(0, 1, ExtReal(1.0));
  EXPECT_THROW(FiniteDSpace(index_labels(2), BaseMetric(m), {{1, 1, 1.0}}),
               std::invalid_argument);
}

TEST(FiniteDSpace, RejectsAsymmetricBase) {
  ExtendedDistanceMatrix m(2);
  m(0, 1) = ExtReal(1.0);
  m(1, 0) = ExtReal(2.0);
  EXPECT_THROW(FiniteDSpace(index_labels(2), BaseMetric(m), {}), std::invalid_argument);
}

TEST(FiniteDSpace, RejectsTriangleViolation) {
  ExtendedDistanceMatrix m(3);
  m.set_symmetric(0, 1, ExtReal(1.0));
  m.set_symmetric(1, 2, ExtReal(1.0));
  m.set_symmetric(0, 2, ExtReal(5.0));
  EXPECT_THROW(FiniteDSpace(index_labels(3), BaseMetric(m), {}), std::invalid_argument);
}

TEST(FiniteDSpace, RejectsZeroDistanceBetweenDistinctPoints) {
  ExtendedDistanceMatrix m(2);
  m.set_symmetric(0, 1, ExtReal(0.0));
  EXPECT_THROW(FiniteDSpace(index_labels(2), BaseMetric(m), {}), std::invalid_argument);
}

TEST(FiniteDSpace, FromEdgesMakesEdgesGeodesic) {
  const auto s = FiniteDSpace::from_edges(index_labels(3), {{0, 1, 1.0}, {2, 1, 2.0}});
  EXPECT_EQ(s.base()(0, 2), ExtReal(3.0));
  EXPECT_EQ(s.base()(2, 1), ExtReal(2.0));
}

// --- compute_zigzag ---------------------------------------------------------

TEST(Zigzag, SingleEdge) {
  const auto zz = compute_zigzag(two_points(1.0, 1.0));
  EXPECT_EQ(zz(0, 1), ExtReal(1.0));
  EXPECT_EQ(zz(1, 0), ExtReal(1.0));
}

TEST(Zigzag, ThroughCommonTarget) {
  const auto s = FiniteDSpace::from_edges(index_labels(3), {{0, 1, 1.0}, {2, 1, 1.0}});
  const auto zz = compute_zigzag(s);
  EXPECT_EQ(zz(0, 2), ExtReal(2.0));
  EXPECT_DOUBLE_EQ(brute_zigzag(s, 0, 2), 2.0);
}

TEST(Zigzag, SourceSinkEndsThroughOrigin) {
  const auto zz = compute_zigzag(gallery::source_sink_interval(1));
  EXPECT_EQ(zz(0, 2), ExtReal(2.0));
}

TEST(Zigzag, MatchesWalkEnumerationOnSmallGraphs) {
  for (const auto& s : random_spaces(5, 25, 6)) {
    const auto zz = compute_zigzag(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        const double want = i == j ? 0.0 : brute_zigzag(s, i, j);
        if (std::isinf(want)) {
          EXPECT_TRUE(zz(i, j).is_infinite());
        } else {
          EXPECT_NEAR(zz(i, j).value(), want, 1e-12);
        }
      }
    }
  }
}

TEST(Zigzag, ExtendedMetricOnRandomGraphs) {
  for (const auto& s : random_spaces(11, 30, 30)) {
    const auto zz = compute_zigzag(s);
    const MetricCheck c = check_extended_metric(zz);
    EXPECT_TRUE(c.ok) << c.violated << " at " << c.i << "," << c.j << "," << c.k;
  }
}

TEST(Zigzag, DominatesBase) {
  for (const auto& s : random_spaces(12, 30, 30)) {
    const auto zz = compute_zigzag(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        EXPECT_TRUE(approx_le(s.base()(i, j), zz(i, j)));
      }
    }
  }
}

TEST(Zigzag, FiniteExactlyWithinWeakComponents) {
  const auto s = disjoint_union(gallery::directed_interval(2), gallery::hollow_square());
  const DirectedMetricSpace z(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      EXPECT_EQ(z.zz()(i, j).is_finite(), (i < 3) == (j < 3));
      if (z.reach()(i, j)) EXPECT_TRUE(z.zz()(i, j).is_finite());
    }
  }
}

TEST(Zigzag, ReachableBoundedByEdgeLength) {
  for (const auto& s : random_spaces(13, 20, 15)) {
    const auto zz = compute_zigzag(s);
    for (const Edge& e : s.edges()) EXPECT_LE(zz(e.src, e.dst).value(), e.length);
  }
}

// --- reachability -----------------------------------------------------------

TEST(Reachability, SingleEdge) {
  const auto r = compute_reachability(two_points(1.0, 1.0));
  EXPECT_TRUE(r(0, 0));
  EXPECT_TRUE(r(1, 1));
  EXPECT_TRUE(r(0, 1));
  EXPECT_FALSE(r(1, 0));
}

TEST(Reachability, CycleIsComplete) {
  const auto s = FiniteDSpace::from_edges(index_labels(3),
                                          {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}});
  const auto r = compute_reachability(s);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(r(i, j));
  }
}

TEST(Reachability, SourceSinkArmsAreIncomparable) {
  const auto s = gallery::source_sink_interval(3);
  const auto r = compute_reachability(s);
  const auto closure = testing_support::closure_by_squaring(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) EXPECT_EQ(r(i, j), closure[i][j]);
  }
  const std::size_t origin = 3, left = 0, right = 6;
  for (std::size_t j = 0; j < s.size(); ++j) EXPECT_TRUE(r(origin, j));
  EXPECT_FALSE(r(left, right));
  EXPECT_FALSE(r(right, left));
}

TEST(Reachability, MatchesSquaringOnRandomGraphs) {
  for (const auto& s : random_spaces(14, 20, 20)) {
    const auto r = compute_reachability(s);
    const auto closure = testing_support::closure_by_squaring(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) ASSERT_EQ(r(i, j), closure[i][j]);
    }
  }
}

// --- constructions ----------------------------------------------------------

TEST(Reverse, IsAnInvolution) {
  for (const auto& s : random_spaces(15, 10, 10)) EXPECT_EQ(reverse(reverse(s)), s);
}

TEST(Reverse, FlipsEdges) {
  const auto r = reverse(two_points(1.0, 1.5));
  ASSERT_EQ(r.edges().size(), 1u);
  EXPECT_EQ(r.edges()[0], (Edge{1, 0, 1.5}));
}

TEST(Reverse, KeepsZigzagAndTransposesReach) {
  auto rng = tools::stream(16, 0);
  tools::EnsembleOptions opts;
  opts.min_points = opts.max_points = 6;
  opts.connected = true;
  const auto s = tools::random_space(rng, opts);
  const DirectedMetricSpace a(s), b(reverse(s));
  EXPECT_EQ(a.zz(), b.zz());
  EXPECT_EQ(b.reach(), a.reach().transpose());
}

TEST(DisjointUnion, CrossDistancesAreInfinite) {
  const auto one = FiniteDSpace(index_labels(1), BaseMetric(ExtendedDistanceMatrix(1)), {});
  const auto u = disjoint_union(one, one);
  ASSERT_EQ(u.size(), 2u);
  EXPECT_TRUE(compute_zigzag(u)(0, 1).is_infinite());
}

TEST(DisjointUnion, SizeAndBlockReach) {
  const auto a = gallery::directed_interval(2);
  const auto b = gallery::source_sink_interval(1);
  const auto u = disjoint_union(a, b);
  EXPECT_EQ(u.size(), a.size() + b.size());
  const auto r = compute_reachability(u);
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      if ((i < a.size()) != (j < a.size())) EXPECT_FALSE(r(i, j));
    }
  }
}

TEST(Product, UnitIsOnePoint) {
  const auto one = FiniteDSpace(index_labels(1), BaseMetric(ExtendedDistanceMatrix(1)), {});
  const auto a = gallery::source_sink_interval(2);
  const auto p = product(a, one);
  EXPECT_EQ(p.size(), a.size());
  EXPECT_EQ(compute_zigzag(p), compute_zigzag(a));
  EXPECT_EQ(p.edges().size(), a.edges().size());
}

TEST(Product, TwoIntervalsGiveTheSquare) {
  const auto i1 = gallery::directed_interval(1);
  const auto sq = product(i1, i1);
  ASSERT_EQ(sq.size(), 4u);
  const auto zz = compute_zigzag(sq);
  // Index i * 2 + j holds (i, j).
  EXPECT_EQ(zz(2, 1), ExtReal(2.0));
  EXPECT_EQ(sq.label(2), "(1,0)");
}

TEST(Product, SizeMultiplies) {
  const auto a = gallery::directed_interval(3);
  const auto b = gallery::hollow_square();
  EXPECT_EQ(product(a, b).size(), a.size() * b.size());
}

TEST(Quotient, SingletonsPreserveZigzag) {
  for (const auto& s : random_spaces(17, 10, 10)) {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < s.size(); ++i) classes.push_back({i});
    const auto q = quotient(s, classes);
    EXPECT_EQ(q.space.size(), s.size());
    EXPECT_TRUE(approx_equal(compute_zigzag(q.space), compute_zigzag(s)));
  }
}

TEST(Quotient, GluedIntervalIsACircle) {
  constexpr std::size_t k = 8;
  const auto line = gallery::directed_interval(k);
  std::vector<std::vector<std::size_t>> classes{{0, k}};
  for (std::size_t i = 1; i < k; ++i) classes.push_back({i});
  const auto q = quotient(line, classes);
  ASSERT_EQ(q.space.size(), k);
  const auto zz = compute_zigzag(q.space);
  EXPECT_NEAR(zz(0, k / 2).value(), 0.5, 1e-12);
  EXPECT_NEAR(zz(0, k / 2).value(), brute_zigzag(q.space, 0, k / 2), 1e-12);
  EXPECT_NEAR(zz(1, k - 1).value(), 2.0 / k, 1e-12);
}

TEST(Quotient, SquareGluedIsTheTorus) {
  gallery::GridSpec spec;
  spec.k = 8;
  spec.steps = gallery::GridSpec::unit_steps();
  const std::size_t k = spec.k;
  const auto square = gallery::directed_square_grid(spec);
  std::vector<std::vector<std::size_t>> classes(k * k);
  for (std::size_t j = 0; j <= k; ++j) {
    for (std::size_t i = 0; i <= k; ++i) {
      classes[gallery::grid_index(i % k, j % k, k)].push_back(
          gallery::grid_index(i, j, k + 1));
    }
  }
  const auto glued = quotient(square, classes);
  const auto torus = gallery::flat_torus_grid(spec);
  ASSERT_EQ(glued.space.size(), torus.size());
  EXPECT_TRUE(approx_equal(compute_zigzag(glued.space), compute_zigzag(torus)));
}

TEST(Quotient, RejectsBadPartitions) {
  const auto s = gallery::directed_interval(2);
  EXPECT_THROW(quotient(s, {{0, 1}, {}, {2}}), std::invalid_argument);
  EXPECT_THROW(quotient(s, {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(quotient(s, {{0, 1}, {1, 2}}), std::invalid_argument);
}

TEST(Quotient, DropsLoopsAndMapsClasses) {
  const auto s = gallery::directed_interval(2);
  const auto q = quotient(s, {{0, 1}, {2}});
  EXPECT_EQ(q.class_of, (std::vector<std::size_t>{0, 0, 1}));
  ASSERT_EQ(q.space.edges().size(), 1u);
  EXPECT_EQ(q.space.edges()[0].src, 0u);
}

// --- diameter ---------------------------------------------------------------

TEST(Diameter, Cases) {
  EXPECT_EQ(diameter(ExtendedDistanceMatrix(1)), ExtReal::zero());
  EXPECT_THROW(diameter(ExtendedDistanceMatrix(0)), std::invalid_argument);
  const auto sq = compute_zigzag(gallery::directed_square_grid({1}));
  EXPECT_NEAR(diameter(sq).value(), 2.0, 1e-12);
  const auto u = disjoint_union(gallery::directed_interval(1), gallery::directed_interval(1));
  EXPECT_TRUE(diameter(compute_zigzag(u)).is_infinite());
}

// --- io ---------------------------------------------------------------------

TEST(Io, RoundTrip) {
  const auto s = disjoint_union(gallery::source_sink_interval(2), gallery::hollow_square());
  const auto back = io::parse_space(io::space_to_json(s));
  EXPECT_EQ(back.labels(), s.labels());
  EXPECT_EQ(back.edges(), s.edges());
  EXPECT_EQ(back.base().materialize(), s.base().materialize());
}

TEST(Io, DefaultsBaseAndLabels) {
  const auto s = io::parse_space(R"({"labels": ["a", "b", "c"], "edges": [[0, 1, 1], [2, 1, 2]]})");
  EXPECT_EQ(s.base()(0, 2), ExtReal(3.0));
  const auto t = io::parse_space(R"({"base": [[0, "inf"], ["inf", 0]]})");
  EXPECT_EQ(t.labels(), index_labels(2));
  EXPECT_TRUE(t.base()(0, 1).is_infinite());
}

TEST(Io, ReportsLineOfSyntaxError) {
  try {
    io::parse_space("{\n\"labels\": [\"a\"],\n\"edges\": [[0, 1,]]\n}");
    FAIL() << "expected a format error";
  } catch (const io::FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Io, ReportsField) {
  try {
    io::parse_space(R"({"labels": ["a", "b"], "edges": [[0, 5, 1]]})");
    FAIL() << "expected a format error";
  } catch (const io::FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("edges[0][1]"), std::string::npos) << e.what();
  }
  EXPECT_THROW(io::parse_space(R"({"base": [[0, -1], [-1, 0]]})"), io::FormatError);
  EXPECT_THROW(io::parse_space(R"({"labels": ["a", "b"], "edges": [[0, 1, 1, 4]]})"),
               io::FormatError);
  EXPECT_THROW(io::parse_space(R"({"edges": []})"), io::FormatError);
}

TEST(Io, Csv) {
  const DirectedMetricSpace z(disjoint_union(gallery::directed_interval(1),
                                             gallery::directed_interval(1)));
  const std::string csv = io::matrix_csv(z.zz());
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "0,1,inf,inf");
  const std::string reach = io::reachability_csv(z.reach());
  EXPECT_EQ(reach.substr(0, reach.find('\n')), "1,1,0,0");
}

TEST(Io, MissingFile) {
  EXPECT_THROW(io::load_space("/nonexistent/space.json"), io::IoError);
}
