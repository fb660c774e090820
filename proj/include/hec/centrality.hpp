#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hec/hypergraph.hpp"
#include "hec/solver.hpp"

namespace hec {

enum class Method { HEC, DC, HDC, CC, VC };

inline constexpr std::array<Method, 5> all_methods{Method::HEC, Method::DC, Method::HDC,
                                                   Method::CC, Method::VC};

inline const char* to_string(Method m) {
  switch (m) {
    case Method::HEC: return "HEC";
    case Method::DC: return "DC";
    case Method::HDC: return "HDC";
    case Method::CC: return "CC";
    case Method::VC: return "VC";
  }
  return "?";
}

inline std::optional<Method> method_from_string(const std::string& name) {
  for (Method m : all_methods)
    if (name == to_string(m)) return m;
  return std::nullopt;
}

struct CentralityVector {
  Method method{};
  std::vector<double> scores;              // indexed by vertex id
  std::optional<EigenPair> solver_info;    // present for HEC
};

/// Simple undirected graph as sorted neighbor lists.
struct Graph {
  std::vector<std::vector<VertexId>> adj;

  std::size_t size() const { return adj.size(); }
};

inline bool is_connected(const Graph& g) {
  const std::size_t n = g.size();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t visited = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : g.adj[v])
      if (!seen[u]) {
        seen[u] = true;
        ++visited;
        stack.push_back(u);
      }
  }
  return visited == n;
}

/// Every hyperedge becomes a clique; co-membership multiplicities are
/// discarded, so the result is simple and unweighted.
inline Graph clique_expansion(const Hypergraph& h) {
  Graph g;
  g.adj.resize(h.vertex_count());
  for (const auto& e : h.edges())
    for (std::size_t a = 0; a < e.vertices.size(); ++a)
      for (std::size_t b = a + 1; b < e.vertices.size(); ++b) {
        g.adj[e.vertices[a]].push_back(e.vertices[b]);
        g.adj[e.vertices[b]].push_back(e.vertices[a]);
      }
  for (auto& nb : g.adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return g;
}

/// One node per hyperedge; nodes adjacent iff the hyperedges share a vertex.
inline Graph line_graph(const Hypergraph& h) {
  Graph g;
  g.adj.resize(h.edge_count());
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    const auto& inc = h.incident_edges(v);
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b) {
        g.adj[inc[a]].push_back(inc[b]);
        g.adj[inc[b]].push_back(inc[a]);
      }
  }
  for (auto& nb : g.adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return g;
}

struct MatrixEigenResult {
  double lambda = 0.0;        // spectral radius of the adjacency matrix
  std::vector<double> vec;    // positive eigenvector, max-normalized
  std::size_t iterations = 0;
  double gap = 0.0;
  bool converged = false;
};

/// Power iteration on A + I with Collatz-Wielandt bracketing, the matrix
/// counterpart of dominant_eigenpair. Requires a connected graph.
inline MatrixEigenResult perron_vector(const Graph& g, double tolerance = 1e-10,
                                       std::size_t max_iterations = 10000) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const std::size_t n = g.size();
  if (n == 0) throw std::invalid_argument("empty graph");
  if (!is_connected(g)) throw not_connected_error("graph is disconnected");

  MatrixEigenResult result;
  std::vector<double> y(n, 1.0), x(n);
  for (std::size_t t = 1; t <= max_iterations; ++t) {
    double lower = std::numeric_limits<double>::infinity();
    double upper = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = y[i];  // identity shift
      for (VertexId j : g.adj[i]) acc += y[j];
      x[i] = acc;
      const double ratio = acc / y[i];
      lower = std::min(lower, ratio);
      upper = std::max(upper, ratio);
    }
    result.iterations = t;
    result.gap = (upper - lower) / upper;
    result.lambda = upper - 1.0;
    double xmax = 0.0;
    for (double v : x) xmax = std::max(xmax, v);
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] / xmax;
    if (result.gap <= tolerance) {
      result.converged = true;
      break;
    }
  }
  result.vec = std::move(y);
  return result;
}

/// v / ||v||_p for p >= 1.
inline std::vector<double> normalize_to_unit_p_norm(std::vector<double> v, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("p must be at least 1");
  return detail::p_normalized(std::move(v), p);
}

inline CentralityVector hec_centrality(const Hypergraph& h, const SolverOptions& opts = {}) {
  if (!is_connected(h))
    throw not_connected_error(
        "HEC requires a connected hypergraph; apply largest_component first or rerun with "
        "largest-component extraction enabled");
  CentralityVector cv;
  cv.method = Method::HEC;
  EigenPair pair = dominant_eigenpair(h, opts);
  cv.scores = pair.y;
  cv.solver_info = std::move(pair);
  return cv;
}

inline CentralityVector degree_centrality(const Hypergraph& h) {
  CentralityVector cv;
  cv.method = Method::DC;
  cv.scores.resize(h.vertex_count());
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    cv.scores[v] = static_cast<double>(h.neighbors(v).size());
  return cv;
}

inline CentralityVector hyperdegree_centrality(const Hypergraph& h) {
  CentralityVector cv;
  cv.method = Method::HDC;
  cv.scores.resize(h.vertex_count());
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    cv.scores[v] = static_cast<double>(h.incident_edges(v).size());
  return cv;
}

/// Eigenvector centrality of the clique expansion, renormalized to the unit
/// (s+1)-norm of the originating hypergraph.
inline CentralityVector cc_centrality(const Hypergraph& h, double tolerance = 1e-10,
                                      std::size_t max_iterations = 10000) {
  Graph g = clique_expansion(h);
  if (!is_connected(g))
    throw not_connected_error("CC requires a connected clique expansion; extract the largest "
                              "component of the hypergraph first");
  MatrixEigenResult r = perron_vector(g, tolerance, max_iterations);
  CentralityVector cv;
  cv.method = Method::CC;
  cv.scores = normalize_to_unit_p_norm(std::move(r.vec), static_cast<double>(lcm_order(h)) + 1.0);
  return cv;
}

/// Eigenvector centrality over the line graph, each hyperedge's score split
/// evenly among its vertices, then (s+1)-normalized.
inline CentralityVector vc_centrality(const Hypergraph& h, double tolerance = 1e-10,
                                      std::size_t max_iterations = 10000) {
  if (h.edge_count() == 0) throw std::invalid_argument("VC needs at least one hyperedge");
  Graph lg = line_graph(h);
  if (!is_connected(lg))
    throw not_connected_error("VC requires a connected line graph; extract the largest "
                              "component of the hypergraph first");
  MatrixEigenResult r = perron_vector(lg, tolerance, max_iterations);
  CentralityVector cv;
  cv.method = Method::VC;
  cv.scores.assign(h.vertex_count(), 0.0);
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const double share = r.vec[e] / static_cast<double>(h.edge(e).size());
    for (VertexId v : h.edge(e).vertices) cv.scores[v] += share;
  }
  cv.scores = normalize_to_unit_p_norm(std::move(cv.scores), static_cast<double>(lcm_order(h)) + 1.0);
  return cv;
}

inline CentralityVector compute_centrality(Method m, const Hypergraph& h,
                                           const SolverOptions& opts = {}) {
  switch (m) {
    case Method::HEC: return hec_centrality(h, opts);
    case Method::DC: return degree_centrality(h);
    case Method::HDC: return hyperdegree_centrality(h);
    case Method::CC: return cc_centrality(h, opts.tolerance, opts.max_iterations);
    case Method::VC: return vc_centrality(h, opts.tolerance, opts.max_iterations);
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace hec
