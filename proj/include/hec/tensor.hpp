#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "hec/hypergraph.hpp"

namespace hec {

/// Nonzero entry value of the adjacency tensor for an edge of cardinality k
/// in a hypergraph with lcm order s, kept exact. Each head vertex of such an
/// edge owns `arrangements` index sequences, and value * arrangements == 1.
struct TensorCoefficient {
  std::size_t edge_cardinality = 0;  // k
  std::uint64_t lcm_order = 0;       // s
  mpq_class exact;                   // [(s/(k-1))!]^(k-1) / s!
  mpz_class arrangements;            // s! / ((s/(k-1))!)^(k-1)
  double value = 0.0;
};

inline TensorCoefficient coefficient(std::size_t k, std::uint64_t s) {
  if (k < 2) throw std::invalid_argument("edge cardinality must be at least 2");
  if (s < 1) throw std::invalid_argument("lcm order must be at least 1");
  if (s % (k - 1) != 0)
    throw std::invalid_argument("lcm order " + std::to_string(s) +
                                " is not divisible by cardinality - 1 = " + std::to_string(k - 1));
  const std::uint64_t q = s / (k - 1);
  mpz_class q_fact, s_fact, denom;
  mpz_fac_ui(q_fact.get_mpz_t(), static_cast<unsigned long>(q));
  mpz_fac_ui(s_fact.get_mpz_t(), static_cast<unsigned long>(s));
  mpz_pow_ui(denom.get_mpz_t(), q_fact.get_mpz_t(), static_cast<unsigned long>(k - 1));

  TensorCoefficient c;
  c.edge_cardinality = k;
  c.lcm_order = s;
  c.exact = mpq_class(denom, s_fact);
  c.exact.canonicalize();
  c.arrangements = s_fact / denom;
  c.value = c.exact.get_d();
  return c;
}

/// Contraction of the adjacency tensor with y^s, computed edge by edge
/// without materializing the tensor. Component i sums, over the edges
/// containing i, the product of the other member scores raised to s/(k-1).
/// Powers are evaluated in the log domain; y must be strictly positive.
inline std::vector<double> apply_adjacency(const Hypergraph& h, const std::vector<double>& y) {
  const std::size_t n = h.vertex_count();
  if (y.size() != n) throw std::invalid_argument("vector length does not match vertex count");
  std::vector<double> logy(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(y[i] > 0.0)) throw std::domain_error("apply_adjacency requires a strictly positive vector");
    logy[i] = std::log(y[i]);
  }
  const std::uint64_t s = lcm_order(h);
  std::vector<double> out(n, 0.0);
  for (const auto& e : h.edges()) {
    const double q = static_cast<double>(s / (e.size() - 1));
    double log_prod = 0.0;
    for (VertexId v : e.vertices) log_prod += logy[v];
    for (VertexId v : e.vertices) out[v] += std::exp(q * (log_prod - logy[v]));
  }
  return out;
}

/// Fully materialized adjacency tensor, for small-scale verification only.
/// Row-major over (i1, ..., i_{order}); entry index i1*n^s + i2*n^(s-1) + ...
struct DenseTensor {
  std::size_t order = 0;  // s + 1
  std::size_t dim = 0;    // n
  std::vector<double> entries;
};

inline DenseTensor materialize_dense(const Hypergraph& h, std::size_t max_entries = 100'000'000) {
  const std::size_t n = h.vertex_count();
  const std::uint64_t s = lcm_order(h);
  unsigned __int128 count = 1;
  for (std::uint64_t i = 0; i < s + 1; ++i) {
    count *= n;
    if (count > max_entries)
      throw std::length_error("dense tensor needs more than " + std::to_string(max_entries) +
                              " entries (n=" + std::to_string(n) + ", order=" + std::to_string(s + 1) + ")");
  }

  DenseTensor t;
  t.order = static_cast<std::size_t>(s + 1);
  t.dim = n;
  t.entries.assign(static_cast<std::size_t>(count), 0.0);

  for (const auto& e : h.edges()) {
    const std::size_t k = e.size();
    const std::uint64_t q = s / (k - 1);
    const double value = coefficient(k, s).value;
    for (VertexId head : e.vertices) {
      std::vector<VertexId> tail;
      tail.reserve(static_cast<std::size_t>(s));
      for (VertexId v : e.vertices)
        if (v != head)
          for (std::uint64_t r = 0; r < q; ++r) tail.push_back(v);
      // tail is sorted, so next_permutation walks every distinct arrangement
      do {
        std::size_t idx = head;
        for (VertexId v : tail) idx = idx * n + v;
        t.entries[idx] = value;
      } while (std::next_permutation(tail.begin(), tail.end()));
    }
  }
  return t;
}

/// Literal contraction: for each component, sums entry * product over all
/// dim^(order-1) index tuples. Quadratic-and-worse by design; oracle only.
inline std::vector<double> dense_apply(const DenseTensor& t, const std::vector<double>& y) {
  const std::size_t n = t.dim;
  if (y.size() != n) throw std::invalid_argument("vector length does not match tensor dimension");
  const std::size_t tail_len = t.order - 1;
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < tail_len; ++i) tuples *= n;

  std::vector<double> out(n, 0.0);
  std::vector<std::size_t> digits(tail_len, 0);
  for (std::size_t flat = 0; flat < tuples; ++flat) {
    double prod = 1.0;
    for (std::size_t d : digits) prod *= y[d];
    for (std::size_t i = 0; i < n; ++i) {
      const double a = t.entries[i * tuples + flat];
      if (a != 0.0) out[i] += a * prod;
    }
    for (std::size_t pos = tail_len; pos-- > 0;) {
      if (++digits[pos] < n) break;
      digits[pos] = 0;
    }
  }
  return out;
}

}  // namespace hec
