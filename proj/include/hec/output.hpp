#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "hec/analysis.hpp"
#include "hec/centrality.hpp"
#include "hec/hypergraph.hpp"

namespace hec {

/// Shortest decimal form that round-trips the exact double, so repeated runs
/// emit byte-identical files.
inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  double parsed = 0.0;
  for (int prec = 1; prec <= 16; ++prec) {
    char shorter[32];
    std::snprintf(shorter, sizeof(shorter), "%.*g", prec, x);
    std::sscanf(shorter, "%lf", &parsed);
    if (parsed == x) return shorter;
  }
  return buf;
}

struct JaccardRow {
  Method method_a;
  Method method_b;
  std::size_t k;
  double value;
};

/// Jaccard of top-k vertex sets for every unordered method pair, at each k.
inline std::vector<JaccardRow> jaccard_table(const Hypergraph& h,
                                             const std::vector<CentralityVector>& cvs,
                                             const std::vector<std::size_t>& ks) {
  std::vector<JaccardRow> rows;
  for (std::size_t k : ks)
    for (std::size_t i = 0; i < cvs.size(); ++i)
      for (std::size_t j = i + 1; j < cvs.size(); ++j)
        rows.push_back({cvs[i].method, cvs[j].method, k,
                        jaccard(top_k(h, cvs[i], k), top_k(h, cvs[j], k))});
  return rows;
}

inline void write_label_map_csv(std::ostream& out, const Hypergraph& h) {
  out << "id,label\n";
  for (VertexId v = 0; v < h.vertex_count(); ++v) out << v << ',' << h.label(v) << '\n';
}

/// Long-format score table: vertex_label,method,score,rank. Rank is the
/// 1-based position under the deterministic tie rule.
inline void write_score_csv(std::ostream& out, const Hypergraph& h,
                            const std::vector<CentralityVector>& cvs) {
  out << "vertex_label,method,score,rank\n";
  for (const auto& cv : cvs) {
    std::vector<std::size_t> rank(h.vertex_count());
    const auto order = ranked_vertices(h, cv);
    for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos + 1;
    for (VertexId v = 0; v < h.vertex_count(); ++v)
      out << h.label(v) << ',' << to_string(cv.method) << ',' << format_double(cv.scores[v])
          << ',' << rank[v] << '\n';
  }
}

inline void write_correlation_csv(std::ostream& out, const CorrelationMatrix& cm) {
  out << "method";
  for (Method m : cm.methods) out << ',' << to_string(m);
  out << '\n';
  for (std::size_t i = 0; i < cm.methods.size(); ++i) {
    out << to_string(cm.methods[i]);
    for (std::size_t j = 0; j < cm.methods.size(); ++j) out << ',' << format_double(cm.values[i][j]);
    out << '\n';
  }
}

inline void write_jaccard_csv(std::ostream& out, const std::vector<JaccardRow>& rows) {
  out << "method_a,method_b,k,jaccard\n";
  for (const auto& r : rows)
    out << to_string(r.method_a) << ',' << to_string(r.method_b) << ',' << r.k << ','
        << format_double(r.value) << '\n';
}

inline void write_attack_csv(std::ostream& out, const std::vector<AttackCurve>& curves) {
  out << "strategy,fraction_removed,lcc_relative\n";
  for (const auto& c : curves)
    for (const auto& [fraction, lcc] : c.points)
      out << c.strategy << ',' << format_double(fraction) << ',' << format_double(lcc) << '\n';
}

/// FNV-1a over raw bytes; recorded in run manifests so a rerun can verify it
/// consumed the same input.
inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001B3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace hec
