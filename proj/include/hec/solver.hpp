#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hec/hypergraph.hpp"
#include "hec/tensor.hpp"

namespace hec {

struct SolverOptions {
  double tolerance = 1e-10;          // relative gap (upper - lower) / upper
  std::size_t max_iterations = 10000;
  std::optional<std::vector<double>> initial_vector;  // strictly positive, length n
};

/// Collatz-Wielandt bounds on the spectral radius of the shifted tensor,
/// one entry per iteration.
struct IterationBounds {
  double lower = 0.0;
  double upper = 0.0;
};

struct EigenPair {
  double lambda = 0.0;               // spectral radius estimate, shift removed
  std::vector<double> y;             // positive eigenvector, unit (s+1)-norm
  std::size_t iterations = 0;
  double gap = 0.0;                  // final (upper - lower) / upper
  bool converged = false;
  std::vector<IterationBounds> history;  // shifted-tensor bounds per iteration
};

namespace detail {

inline std::vector<double> p_normalized(std::vector<double> v, double p) {
  double maxabs = 0.0;
  for (double x : v) maxabs = std::max(maxabs, std::abs(x));
  if (maxabs == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  double sum = 0.0;
  for (double x : v) sum += std::pow(std::abs(x) / maxabs, p);
  const double norm = maxabs * std::pow(sum, 1.0 / p);
  for (double& x : v) x /= norm;
  return v;
}

}  // namespace detail

/// Shifted power iteration for the spectral radius and positive eigenvector
/// of the adjacency tensor. Iterates x = (A + I) y^s in implicit form (the
/// shift contributes y_i^s), renormalizes y = x^[1/s] / max(x^[1/s]), and
/// brackets the shifted spectral radius by min/max of x_i / y_i^s. Stops at
/// relative gap <= tolerance. The returned lambda refers to A itself and y is
/// rescaled to unit (s+1)-norm.
inline EigenPair dominant_eigenpair(const Hypergraph& h, const SolverOptions& opts = {}) {
  if (!(opts.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (opts.max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
  const std::size_t n = h.vertex_count();
  if (n == 0) throw std::invalid_argument("empty hypergraph");
  if (!is_connected(h))
    throw not_connected_error(
        "hypergraph is disconnected: a unique positive eigenvector exists only for "
        "connected hypergraphs; extract the largest component first");

  const std::uint64_t s = lcm_order(h);
  const double sd = static_cast<double>(s);

  std::vector<double> y;
  if (opts.initial_vector) {
    y = *opts.initial_vector;
    if (y.size() != n) throw std::invalid_argument("initial vector length does not match vertex count");
    double ymax = 0.0;
    for (double v : y) {
      if (!(v > 0.0)) throw std::invalid_argument("initial vector must be strictly positive");
      ymax = std::max(ymax, v);
    }
    for (double& v : y) v /= ymax;
  } else {
    y.assign(n, 1.0);
  }

  EigenPair result;
  std::vector<double> ypow(n), x(n), logx(n);
  for (std::size_t t = 1; t <= opts.max_iterations; ++t) {
    x = apply_adjacency(h, y);
    double lower = std::numeric_limits<double>::infinity();
    double upper = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      ypow[i] = std::pow(y[i], sd);
      x[i] += ypow[i];
      const double ratio = x[i] / ypow[i];
      lower = std::min(lower, ratio);
      upper = std::max(upper, ratio);
    }
    result.history.push_back({lower, upper});
    result.iterations = t;
    result.gap = (upper - lower) / upper;
    result.lambda = upper - 1.0;

    // y <- x^[1/s], max-normalized; done in the log domain
    double logmax = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      logx[i] = std::log(x[i]) / sd;
      logmax = std::max(logmax, logx[i]);
    }
    for (std::size_t i = 0; i < n; ++i) y[i] = std::exp(logx[i] - logmax);

    if (result.gap <= opts.tolerance) {
      result.converged = true;
      break;
    }
  }

  result.y = detail::p_normalized(std::move(y), sd + 1.0);
  return result;
}

/// Max-norm of A y^s - lambda * y^[s] for the pair's own lambda and y.
inline double residual(const Hypergraph& h, const EigenPair& pair) {
  const std::uint64_t s = lcm_order(h);
  const std::vector<double> ay = apply_adjacency(h, pair.y);
  double worst = 0.0;
  for (std::size_t i = 0; i < ay.size(); ++i)
    worst = std::max(worst, std::abs(ay[i] - pair.lambda * std::pow(pair.y[i], static_cast<double>(s))));
  return worst;
}

}  // namespace hec
