#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hec/centrality.hpp"
#include "hec/hypergraph.hpp"

namespace hec {

/// Sample Pearson correlation coefficient. Throws if either input is
/// constant (the coefficient is undefined).
inline double pearson(const std::vector<double>& u, const std::vector<double>& v) {
  if (u.size() != v.size()) throw std::invalid_argument("pearson: length mismatch");
  const std::size_t n = u.size();
  if (n < 2) throw std::invalid_argument("pearson: need at least 2 points");
  double mu = 0.0, mv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mu += u[i];
    mv += v[i];
  }
  mu /= static_cast<double>(n);
  mv /= static_cast<double>(n);
  double suu = 0.0, svv = 0.0, suv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double du = u[i] - mu;
    const double dv = v[i] - mv;
    suu += du * du;
    svv += dv * dv;
    suv += du * dv;
  }
  if (suu == 0.0 || svv == 0.0)
    throw std::domain_error("pearson: correlation undefined for a constant vector");
  return suv / (std::sqrt(suu) * std::sqrt(svv));
}

struct CorrelationMatrix {
  std::vector<Method> methods;
  std::vector<std::vector<double>> values;  // symmetric, unit diagonal
};

inline CorrelationMatrix correlation_matrix(const std::vector<CentralityVector>& cvs) {
  if (cvs.size() < 2) throw std::invalid_argument("correlation_matrix: need at least 2 methods");
  for (const auto& cv : cvs)
    if (cv.scores.size() != cvs.front().scores.size())
      throw std::invalid_argument("correlation_matrix: score vectors differ in length");
  CorrelationMatrix cm;
  cm.values.assign(cvs.size(), std::vector<double>(cvs.size(), 1.0));
  for (const auto& cv : cvs) cm.methods.push_back(cv.method);
  for (std::size_t i = 0; i < cvs.size(); ++i)
    for (std::size_t j = i + 1; j < cvs.size(); ++j)
      cm.values[i][j] = cm.values[j][i] = pearson(cvs[i].scores, cvs[j].scores);
  return cm;
}

/// All vertices ordered by descending score; ties broken by ascending
/// original label.
inline std::vector<VertexId> ranked_vertices(const Hypergraph& h, const CentralityVector& cv) {
  if (cv.scores.size() != h.vertex_count())
    throw std::invalid_argument("ranked_vertices: score vector does not match hypergraph");
  std::vector<VertexId> order(h.vertex_count());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    if (cv.scores[a] != cv.scores[b]) return cv.scores[a] > cv.scores[b];
    return h.label(a) < h.label(b);
  });
  return order;
}

/// First k of the ranked order, returned sorted by id as a plain vertex set.
inline std::vector<VertexId> top_k(const Hypergraph& h, const CentralityVector& cv, std::size_t k) {
  if (k < 1 || k > h.vertex_count())
    throw std::out_of_range("top_k: k must be between 1 and the vertex count");
  std::vector<VertexId> order = ranked_vertices(h, cv);
  order.resize(k);
  std::sort(order.begin(), order.end());
  return order;
}

/// |A n B| / |A u B| for sorted, duplicate-free id vectors.
inline double jaccard(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  if (a.empty() && b.empty()) throw std::invalid_argument("jaccard: both sets empty");
  std::size_t inter = 0, i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) ++inter, ++i, ++j;
    else if (a[i] < b[j]) ++i;
    else ++j;
  }
  const std::size_t uni = a.size() + b.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

struct AttackCurve {
  std::string strategy;
  std::vector<std::pair<double, double>> points;  // (fraction removed, relative LCC size)
  std::uint64_t seed = 0;   // random strategy only
  std::size_t runs = 0;     // random strategy only
};

namespace detail {

inline std::size_t largest_component_size(const Hypergraph& h) {
  std::size_t best = 0;
  if (h.vertex_count() == 0) return 0;
  for (const auto& comp : connected_components(h)) best = std::max(best, comp.size());
  return best;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// In-place Fisher-Yates driven by an explicit engine; avoids std::shuffle so
/// the permutation stream is identical across standard libraries.
inline void seeded_shuffle(std::vector<VertexId>& v, std::mt19937_64& eng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(eng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace detail

/// Relative LCC size after removing the first t vertices of a fixed order,
/// for t = 0..n. The ranking is static: every point removes a prefix of the
/// same order from the intact hypergraph.
inline AttackCurve attack_curve(const Hypergraph& h, const std::vector<VertexId>& order,
                                std::string strategy = "") {
  const std::size_t n = h.vertex_count();
  if (n == 0) throw std::invalid_argument("attack_curve: empty hypergraph");
  {
    std::vector<bool> seen(n, false);
    if (order.size() != n) throw std::invalid_argument("attack order must list every vertex once");
    for (VertexId v : order) {
      if (v >= n || seen[v]) throw std::invalid_argument("attack order is not a permutation");
      seen[v] = true;
    }
  }
  AttackCurve curve;
  curve.strategy = std::move(strategy);
  curve.points.reserve(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    const std::vector<VertexId> victims(order.begin(), order.begin() + t);
    const Hypergraph residual = t == 0 ? h : remove_vertices(h, victims);
    const double lcc = static_cast<double>(detail::largest_component_size(residual));
    curve.points.emplace_back(static_cast<double>(t) / static_cast<double>(n),
                              lcc / static_cast<double>(n));
  }
  return curve;
}

/// Pointwise average of attack curves over `runs` uniformly random removal
/// orders. Run r draws its own engine seed from (seed, r), so the result is
/// reproducible and independent of evaluation order.
inline AttackCurve random_attack_curve(const Hypergraph& h, std::uint64_t seed, std::size_t runs) {
  if (runs < 1) throw std::invalid_argument("random_attack_curve: runs must be at least 1");
  const std::size_t n = h.vertex_count();
  std::vector<double> acc(n + 1, 0.0);
  std::vector<VertexId> order(n);
  for (std::size_t r = 0; r < runs; ++r) {
    std::iota(order.begin(), order.end(), VertexId{0});
    std::mt19937_64 eng(detail::splitmix64(seed ^ detail::splitmix64(static_cast<std::uint64_t>(r))));
    detail::seeded_shuffle(order, eng);
    const AttackCurve one = attack_curve(h, order);
    for (std::size_t t = 0; t <= n; ++t) acc[t] += one.points[t].second;
  }
  AttackCurve curve;
  curve.strategy = "random";
  curve.seed = seed;
  curve.runs = runs;
  curve.points.reserve(n + 1);
  for (std::size_t t = 0; t <= n; ++t)
    curve.points.emplace_back(static_cast<double>(t) / static_cast<double>(n),
                              acc[t] / static_cast<double>(runs));
  return curve;
}

}  // namespace hec
