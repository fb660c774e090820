#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "hec/tensor.hpp"
#include "oracles.hpp"

using namespace hec;

namespace {

double max_rel_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double scale = std::max({std::abs(a[i]), std::abs(b[i]), 1e-300});
    worst = std::max(worst, std::abs(a[i] - b[i]) / scale);
  }
  return worst;
}

}  // namespace

TEST_CASE("entry coefficients", "[tensor]") {
  SECTION("pair edges always get weight one") {
    const TensorCoefficient c = coefficient(2, 6);
    CHECK(c.exact == mpq_class(1));
    CHECK(c.value == 1.0);
    CHECK(c.arrangements == 1);
  }
  SECTION("uniform case reduces to 1/(k-1)!") {
    const TensorCoefficient c = coefficient(4, 3);
    CHECK(c.exact == mpq_class(1, 6));
    CHECK(c.arrangements == 6);
  }
  SECTION("mixed order") {
    const TensorCoefficient c = coefficient(3, 6);
    CHECK(c.exact == mpq_class(1, 20));
    CHECK(c.value == Catch::Approx(0.05).epsilon(1e-15));
    CHECK(c.arrangements == 20);
  }
  SECTION("divisibility is enforced") {
    CHECK_THROWS_AS(coefficient(3, 5), std::invalid_argument);
    CHECK_THROWS_AS(coefficient(1, 4), std::invalid_argument);
  }
}

TEST_CASE("coefficient times arrangement count is exactly one", "[tensor]") {
  for (std::size_t k = 2; k <= 7; ++k) {
    const std::uint64_t s = 60;  // divisible by 1..6
    const TensorCoefficient c = coefficient(k, s);
    CHECK(c.exact * mpq_class(c.arrangements) == mpq_class(1));
  }
  // s = 24 overflows in 64-bit factorial terms only past s = 20; exact path stays exact
  const TensorCoefficient big = coefficient(2, 24);
  CHECK(big.exact == mpq_class(1));
}

TEST_CASE("implicit apply on known inputs", "[tensor]") {
  SECTION("all-ones vector counts incident edges") {
    const auto out = apply_adjacency(oracles::sunflower(), std::vector<double>(7, 1.0));
    CHECK(out == std::vector<double>{3, 1, 1, 1, 1, 1, 1});
  }
  SECTION("pair edge is a matrix product") {
    const Hypergraph h = parse_hyperedge_list("1 2\n");
    const auto out = apply_adjacency(h, {2.0, 5.0});
    CHECK(out[0] == Catch::Approx(5.0).epsilon(1e-14));
    CHECK(out[1] == Catch::Approx(2.0).epsilon(1e-14));
  }
  SECTION("printed eigenvector yields one common eigenvalue ratio") {
    const Hypergraph h = oracles::sunflower();
    const auto& y = oracles::sunflower_hec;
    const auto out = apply_adjacency(h, y);
    std::vector<double> ratios;
    for (std::size_t i = 0; i < 7; ++i) ratios.push_back(out[i] / std::pow(y[i], 6.0));
    const double mid = ratios.front();
    for (double r : ratios) CHECK(r == Catch::Approx(mid).epsilon(1e-3));
  }
}

TEST_CASE("apply rejects bad vectors", "[tensor]") {
  const Hypergraph h = oracles::sunflower();
  CHECK_THROWS_AS(apply_adjacency(h, std::vector<double>(7, 0.0)), std::domain_error);
  std::vector<double> y(7, 1.0);
  y[3] = -0.5;
  CHECK_THROWS_AS(apply_adjacency(h, y), std::domain_error);
  CHECK_THROWS_AS(apply_adjacency(h, std::vector<double>(6, 1.0)), std::invalid_argument);
}

TEST_CASE("dense materialization of small tensors", "[tensor]") {
  SECTION("pair edge gives the adjacency matrix") {
    const DenseTensor t = materialize_dense(parse_hyperedge_list("1 2\n"));
    REQUIRE(t.order == 2);
    REQUIRE(t.dim == 2);
    CHECK(t.entries == std::vector<double>{0, 1, 1, 0});
  }
  SECTION("one triple edge puts 1/2 at each of the 6 arrangements") {
    const DenseTensor t = materialize_dense(parse_hyperedge_list("1 2 3\n"));
    REQUIRE(t.order == 3);
    std::size_t nonzero = 0;
    for (double v : t.entries)
      if (v != 0.0) {
        CHECK(v == 0.5);
        ++nonzero;
      }
    CHECK(nonzero == 6);
    // head 0 owns exactly (0,1,2) and (0,2,1)
    CHECK(t.entries[0 * 9 + 1 * 3 + 2] == 0.5);
    CHECK(t.entries[0 * 9 + 2 * 3 + 1] == 0.5);
    CHECK(t.entries[0 * 9 + 1 * 3 + 1] == 0.0);
  }
  SECTION("a pair edge inside a sizes-{2,3} hypergraph repeats the tail") {
    // s = 2, so edge {0,1} contributes at (0,1,1) with weight (2!)^1 / 2! = 1
    const DenseTensor t = materialize_dense(parse_hyperedge_list("1 2\n1 2 3\n"));
    REQUIRE(t.order == 3);
    REQUIRE(t.dim == 3);
    CHECK(t.entries[0 * 9 + 1 * 3 + 1] == 1.0);
    CHECK(t.entries[1 * 9 + 0 * 3 + 0] == 1.0);
    CHECK(t.entries[0 * 9 + 1 * 3 + 2] == 0.5);  // from the triple edge
  }
  SECTION("entry cap refuses honestly") {
    CHECK_THROWS_AS(materialize_dense(oracles::sunflower(), 1000), std::length_error);
  }
}

TEST_CASE("dense apply is a literal contraction", "[tensor]") {
  SECTION("matrix case") {
    const DenseTensor t{2, 2, {0, 1, 1, 0}};
    CHECK(dense_apply(t, {2, 5}) == std::vector<double>{5, 2});
  }
  SECTION("zero tensor") {
    const DenseTensor t{3, 2, std::vector<double>(8, 0.0)};
    CHECK(dense_apply(t, {1.5, 2.5}) == std::vector<double>{0, 0});
  }
  SECTION("dimension mismatch") {
    const DenseTensor t{2, 2, {0, 1, 1, 0}};
    CHECK_THROWS_AS(dense_apply(t, {1, 2, 3}), std::invalid_argument);
  }
}

TEST_CASE("implicit and dense applies agree", "[tensor]") {
  std::mt19937_64 rng(991);
  for (int trial = 0; trial < 12; ++trial) {
    std::uniform_int_distribution<std::size_t> nd(4, 6);
    const std::size_t n = nd(rng);
    const Hypergraph h = trial % 2 == 0
                             ? oracles::random_connected_hypergraph(rng, n, {2, 3, 4}, 2)
                             : oracles::random_connected_hypergraph(rng, n, {2, 3}, 2);
    const auto y = oracles::random_positive_vector(rng, n);
    const auto implicit_out = apply_adjacency(h, y);
    const auto dense_out = dense_apply(materialize_dense(h), y);
    CHECK(max_rel_diff(implicit_out, dense_out) <= 1e-12);
  }
}

TEST_CASE("apply is homogeneous of degree s", "[tensor]") {
  std::mt19937_64 rng(992);
  const Hypergraph h = oracles::random_connected_hypergraph(rng, 6, {2, 3, 4}, 2);
  const double s = static_cast<double>(lcm_order(h));
  const auto y = oracles::random_positive_vector(rng, 6);
  for (double c : {0.25, 3.0}) {
    std::vector<double> scaled = y;
    for (double& v : scaled) v *= c;
    const auto lhs = apply_adjacency(h, scaled);
    auto rhs = apply_adjacency(h, y);
    for (double& v : rhs) v *= std::pow(c, s);
    CHECK(max_rel_diff(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("apply commutes with vertex relabeling", "[tensor]") {
  std::mt19937_64 rng(993);
  const std::size_t n = 6;
  const Hypergraph h = oracles::random_connected_hypergraph(rng, n, {2, 3, 4}, 2);
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);

  std::vector<std::vector<VertexId>> mapped_edges;
  for (const auto& e : h.edges()) {
    std::vector<VertexId> edge;
    for (VertexId v : e.vertices) edge.push_back(perm[v]);
    mapped_edges.push_back(edge);
  }
  const Hypergraph g = oracles::make_hypergraph(n, mapped_edges);

  const auto y = oracles::random_positive_vector(rng, n);
  std::vector<double> y_mapped(n);
  for (std::size_t i = 0; i < n; ++i) y_mapped[perm[i]] = y[i];

  const auto out_h = apply_adjacency(h, y);
  const auto out_g = apply_adjacency(g, y_mapped);
  for (std::size_t i = 0; i < n; ++i)
    CHECK(out_g[perm[i]] == Catch::Approx(out_h[i]).epsilon(1e-12));
}

TEST_CASE("2-uniform apply reduces to the adjacency matrix product", "[tensor]") {
  std::mt19937_64 rng(994);
  const Hypergraph h = oracles::random_connected_graph(rng, 12, 10);
  const auto a = oracles::adjacency_matrix(h);
  const auto y = oracles::random_positive_vector(rng, 12);
  const auto out = apply_adjacency(h, y);
  for (std::size_t i = 0; i < 12; ++i) {
    double expect = 0.0;
    for (std::size_t j = 0; j < 12; ++j) expect += a[i][j] * y[j];
    CHECK(out[i] == Catch::Approx(expect).epsilon(1e-12));
  }
}
