#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "hec/analysis.hpp"
#include "oracles.hpp"

using namespace hec;

namespace {

std::vector<std::string> to_labels(const Hypergraph& h, const std::vector<VertexId>& ids) {
  std::vector<std::string> out;
  for (VertexId v : ids) out.push_back(h.label(v));
  return out;
}

CentralityVector fake_scores(Method m, std::vector<double> scores) {
  CentralityVector cv;
  cv.method = m;
  cv.scores = std::move(scores);
  return cv;
}

}  // namespace

TEST_CASE("pearson units and reference values", "[analysis]") {
  const std::vector<double> u{1, 2, 3, 4};
  SECTION("self correlation") {
    CHECK(std::abs(pearson(u, u) - 1.0) <= 1e-12);
  }
  SECTION("perfect negative relation") {
    const std::vector<double> v{9, 8, 7, 6};  // 10 - u
    CHECK(std::abs(pearson(u, v) + 1.0) <= 1e-12);
  }
  SECTION("textbook formula agreement") {
    const std::vector<double> v{1, 2, 3, 10};
    CHECK(std::abs(pearson(u, v) - oracles::textbook_pearson(u, v)) <= 1e-12);
  }
  SECTION("bad input") {
    CHECK_THROWS_AS(pearson(u, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(pearson({1}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(pearson(u, {5, 5, 5, 5}), std::domain_error);
  }
}

TEST_CASE("correlation matrix structure", "[analysis]") {
  SECTION("identical methods correlate perfectly") {
    const auto cv = fake_scores(Method::DC, {1, 2, 3, 4});
    const auto cv2 = fake_scores(Method::HDC, {1, 2, 3, 4});
    const CorrelationMatrix cm = correlation_matrix({cv, cv2});
    for (const auto& row : cm.values)
      for (double v : row) CHECK(std::abs(v - 1.0) <= 1e-12);
  }
  SECTION("degree vs hyperdegree on the sunflower") {
    const Hypergraph h = oracles::sunflower();
    const auto dc = degree_centrality(h);
    const auto hdc = hyperdegree_centrality(h);
    const CorrelationMatrix cm = correlation_matrix({dc, hdc});
    const double expect = oracles::textbook_pearson(dc.scores, hdc.scores);
    CHECK(cm.values[0][1] == Catch::Approx(expect).margin(1e-12));
    CHECK(cm.values[1][0] == cm.values[0][1]);
    CHECK(cm.values[0][0] == 1.0);
  }
  SECTION("full matrix is symmetric with unit diagonal") {
    const Hypergraph h = oracles::sunflower();
    std::vector<CentralityVector> cvs;
    for (Method m : all_methods) cvs.push_back(compute_centrality(m, h));
    const CorrelationMatrix cm = correlation_matrix(cvs);
    REQUIRE(cm.values.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(cm.values[i][i] == 1.0);
      for (std::size_t j = 0; j < 5; ++j) {
        CHECK(cm.values[i][j] == cm.values[j][i]);
        CHECK(std::abs(cm.values[i][j]) <= 1.0 + 1e-12);
      }
    }
  }
  SECTION("method order equivariance") {
    const Hypergraph h = oracles::sunflower();
    const auto a = degree_centrality(h);
    const auto b = hyperdegree_centrality(h);
    const auto c = cc_centrality(h);
    const CorrelationMatrix abc = correlation_matrix({a, b, c});
    const CorrelationMatrix cab = correlation_matrix({c, a, b});
    CHECK(abc.values[0][1] == cab.values[1][2]);  // (a,b)
    CHECK(abc.values[0][2] == cab.values[0][1]);  // (a,c)
    CHECK(abc.values[1][2] == cab.values[0][2]);  // (b,c)
  }
  SECTION("needs two methods") {
    CHECK_THROWS_AS(correlation_matrix({fake_scores(Method::DC, {1, 2})}),
                    std::invalid_argument);
  }
  SECTION("correlation ignores score normalization") {
    const Hypergraph h = oracles::sunflower();
    const auto dc = degree_centrality(h);
    auto dc_scaled = dc;
    for (double& v : dc_scaled.scores) v /= 17.0;
    const auto target = hec_centrality(h);
    CHECK(pearson(dc.scores, target.scores) ==
          Catch::Approx(pearson(dc_scaled.scores, target.scores)).margin(1e-12));
  }
}

TEST_CASE("ranking and top-k selection", "[analysis]") {
  const Hypergraph h = oracles::sunflower();
  SECTION("the hub tops the tensor ranking") {
    const auto top = top_k(h, hec_centrality(h), 1);
    CHECK(to_labels(h, top) == std::vector<std::string>{"1"});
  }
  SECTION("k = n returns everything") {
    const auto top = top_k(h, degree_centrality(h), 7);
    CHECK(top.size() == 7);
  }
  SECTION("ties break by ascending label") {
    const auto top = top_k(h, hyperdegree_centrality(h), 2);
    CHECK(to_labels(h, top) == std::vector<std::string>{"1", "2"});
    const auto order = ranked_vertices(h, hyperdegree_centrality(h));
    CHECK(to_labels(h, order) ==
          std::vector<std::string>{"1", "2", "3", "4", "5", "6", "7"});
  }
  SECTION("k bounds") {
    CHECK_THROWS_AS(top_k(h, degree_centrality(h), 0), std::out_of_range);
    CHECK_THROWS_AS(top_k(h, degree_centrality(h), 8), std::out_of_range);
  }
}

TEST_CASE("jaccard index", "[analysis]") {
  CHECK(jaccard({1, 2, 3}, {2, 3, 4}) == 0.5);
  CHECK(jaccard({1, 2, 3}, {1, 2, 3}) == 1.0);
  CHECK(jaccard({1, 2}, {3, 4}) == 0.0);
  CHECK_THROWS_AS(jaccard({}, {}), std::invalid_argument);

  SECTION("symmetry and growth under shared elements") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<VertexId> vd(0, 30);
    for (int trial = 0; trial < 20; ++trial) {
      std::set<VertexId> sa, sb;
      for (int i = 0; i < 8; ++i) sa.insert(vd(rng)), sb.insert(vd(rng));
      const std::vector<VertexId> a(sa.begin(), sa.end()), b(sb.begin(), sb.end());
      CHECK(jaccard(a, b) == jaccard(b, a));
      CHECK((jaccard(a, b) == 1.0) == (a == b));

      VertexId fresh = 100 + trial;  // outside the draw range, common to both
      std::vector<VertexId> a2 = a, b2 = b;
      a2.push_back(fresh);
      b2.push_back(fresh);
      CHECK(jaccard(a2, b2) >= jaccard(a, b));
    }
  }
}

TEST_CASE("attack curves from a fixed ranking", "[analysis]") {
  const Hypergraph h = oracles::sunflower();
  const auto order = ranked_vertices(h, hec_centrality(h));
  const AttackCurve curve = attack_curve(h, order, "HEC");

  REQUIRE(curve.points.size() == 8);
  CHECK(curve.points.front() == std::pair<double, double>{0.0, 1.0});
  CHECK(curve.points.back() == std::pair<double, double>{1.0, 0.0});
  // the hub goes first; the survivors split into components of sizes 1, 2, 3
  CHECK(curve.points[1].first == Catch::Approx(1.0 / 7.0).epsilon(1e-14));
  CHECK(curve.points[1].second == Catch::Approx(3.0 / 7.0).epsilon(1e-14));
}

TEST_CASE("equal rankings give equal curves", "[analysis]") {
  const Hypergraph h = oracles::sunflower();
  const auto o1 = ranked_vertices(h, degree_centrality(h));
  const auto o2 = ranked_vertices(h, fake_scores(Method::CC, degree_centrality(h).scores));
  CHECK(attack_curve(h, o1).points == attack_curve(h, o2).points);
}

TEST_CASE("attack order must be a permutation", "[analysis]") {
  const Hypergraph h = oracles::sunflower();
  CHECK_THROWS_AS(attack_curve(h, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(attack_curve(h, {0, 0, 1, 2, 3, 4, 5}), std::invalid_argument);
}

TEST_CASE("random baseline is deterministic", "[analysis]") {
  const Hypergraph h = oracles::sunflower();
  const AttackCurve a = random_attack_curve(h, 99, 25);
  const AttackCurve b = random_attack_curve(h, 99, 25);
  CHECK(a.points == b.points);
  CHECK(a.seed == 99);
  CHECK(a.runs == 25);
  CHECK(a.strategy == "random");
  CHECK(a.points.back() == std::pair<double, double>{1.0, 0.0});

  const AttackCurve c = random_attack_curve(h, 100, 25);
  CHECK(a.points != c.points);
}

TEST_CASE("averaging is a no-op on a fully symmetric hypergraph", "[analysis]") {
  const Hypergraph h = parse_hyperedge_list("1 2 3\n");
  const AttackCurve averaged = random_attack_curve(h, 5, 10);
  const AttackCurve single = attack_curve(h, {0, 1, 2});
  for (std::size_t t = 0; t < averaged.points.size(); ++t) {
    CHECK(averaged.points[t].first == single.points[t].first);
    CHECK(averaged.points[t].second == Catch::Approx(single.points[t].second).margin(1e-14));
  }
}

TEST_CASE("random baseline approaches the exact expectation", "[analysis]") {
  const Hypergraph h = oracles::sunflower();
  const std::size_t runs = 4000;
  const AttackCurve emp = random_attack_curve(h, 424242, runs);
  for (std::size_t t = 0; t <= 7; ++t) {
    const double mean = oracles::exact_random_attack_expectation(h, t);
    const double var = oracles::exact_random_attack_variance(h, t);
    const double margin = std::max(3.0 * std::sqrt(var / static_cast<double>(runs)), 1e-12);
    CHECK(emp.points[t].second == Catch::Approx(mean).margin(margin));
  }
}
