#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hec {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& msg, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  explicit parse_error(const std::string& msg) : std::runtime_error(msg), line_(0) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

class not_connected_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A hyperedge: sorted, duplicate-free vertex ids, always >= 2 of them.
struct Hyperedge {
  std::vector<VertexId> vertices;

  std::size_t size() const { return vertices.size(); }
  bool contains(VertexId v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  }
  bool operator==(const Hyperedge& other) const = default;
};

/// Immutable hypergraph over dense vertex ids 0..n-1. Each id maps back to the
/// original string label it was parsed from. Edges are deduplicated; the
/// incidence lists are built once at construction.
class Hypergraph {
public:
  Hypergraph() = default;

  /// Builds from labels and raw edges. Edges are canonicalized: vertices
  /// sorted and deduplicated within each edge, edges of fewer than two
  /// distinct vertices dropped, duplicate edges collapsed (first occurrence
  /// kept). Throws std::invalid_argument on out-of-range vertex ids.
  Hypergraph(std::vector<std::string> labels, const std::vector<std::vector<VertexId>>& raw_edges)
      : labels_(std::move(labels)) {
    const std::size_t n = labels_.size();
    std::set<std::vector<VertexId>> seen;
    for (const auto& raw : raw_edges) {
      std::vector<VertexId> vs = raw;
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      if (!vs.empty() && vs.back() >= n)
        throw std::invalid_argument("edge references vertex id " + std::to_string(vs.back()) +
                                    " but only " + std::to_string(n) + " vertices exist");
      if (vs.size() < 2) continue;
      if (seen.insert(vs).second) edges_.push_back(Hyperedge{std::move(vs)});
    }
    incidence_.resize(n);
    for (EdgeId e = 0; e < edges_.size(); ++e)
      for (VertexId v : edges_[e].vertices) incidence_[v].push_back(e);
  }

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const Hyperedge& edge(EdgeId e) const { return edges_[e]; }
  const std::string& label(VertexId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<EdgeId>& incident_edges(VertexId v) const { return incidence_[v]; }

  /// Union of e \ {v} over all edges e containing v, sorted.
  std::vector<VertexId> neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (EdgeId e : incidence_[v])
      for (VertexId u : edges_[e].vertices)
        if (u != v) out.push_back(u);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

private:
  std::vector<std::string> labels_;
  std::vector<Hyperedge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

struct ParseReport {
  std::size_t lines_read = 0;
  std::size_t dropped_short_lines = 0;       // lines with < 2 distinct vertices
  std::size_t duplicate_edges = 0;           // lines repeating an earlier edge
  std::size_t duplicate_vertex_tokens = 0;   // repeated tokens within one line
};

/// Parses the hyperedge-list text format: one hyperedge per line, vertex
/// label tokens separated by whitespace or commas, '#' starts a comment line,
/// blank lines ignored. Labels are interned in first-appearance order.
inline Hypergraph parse_hyperedge_list(std::istream& in, ParseReport* report = nullptr) {
  ParseReport rep;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> labels;
  std::vector<std::vector<VertexId>> edges;
  std::set<std::vector<VertexId>> seen;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv = line;
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t' || sv.front() == '\r'))
      sv.remove_prefix(1);
    if (sv.empty() || sv.front() == '#') continue;
    ++rep.lines_read;

    std::vector<std::string> tokens;
    std::string tok;
    for (char c : line) {
      if (c == ' ' || c == '\t' || c == ',' || c == '\r') {
        if (!tok.empty()) tokens.push_back(std::move(tok)), tok.clear();
      } else if (static_cast<unsigned char>(c) < 0x20) {
        throw parse_error("control character in vertex token", lineno);
      } else {
        tok.push_back(c);
      }
    }
    if (!tok.empty()) tokens.push_back(std::move(tok));

    std::vector<VertexId> edge;
    for (auto& t : tokens) {
      auto [it, inserted] = ids.try_emplace(t, static_cast<VertexId>(labels.size()));
      if (inserted) labels.push_back(t);
      edge.push_back(it->second);
    }
    std::sort(edge.begin(), edge.end());
    const std::size_t before = edge.size();
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    rep.duplicate_vertex_tokens += before - edge.size();
    if (edge.size() < 2) {
      ++rep.dropped_short_lines;
      continue;
    }
    if (!seen.insert(edge).second) {
      ++rep.duplicate_edges;
      continue;
    }
    edges.push_back(std::move(edge));
  }

  if (edges.empty()) throw parse_error("input contains no hyperedges");

  // Drop labels that only appeared on dropped lines, re-densifying ids.
  std::vector<bool> used(labels.size(), false);
  for (const auto& e : edges)
    for (VertexId v : e) used[v] = true;
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    std::vector<VertexId> remap(labels.size());
    std::vector<std::string> kept;
    for (VertexId v = 0; v < labels.size(); ++v)
      if (used[v]) {
        remap[v] = static_cast<VertexId>(kept.size());
        kept.push_back(std::move(labels[v]));
      }
    for (auto& e : edges)
      for (auto& v : e) v = remap[v];
    labels = std::move(kept);
  }

  if (report) *report = rep;
  return Hypergraph(std::move(labels), edges);
}

inline Hypergraph parse_hyperedge_list(const std::string& text, ParseReport* report = nullptr) {
  std::istringstream in(text);
  return parse_hyperedge_list(in, report);
}

/// Writes one line per edge, labels space-separated. Reparsing the output
/// reproduces the same labeled edge structure.
inline void serialize_edge_list(const Hypergraph& h, std::ostream& out) {
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.vertices.size(); ++i) {
      if (i) out << ' ';
      out << h.label(e.vertices[i]);
    }
    out << '\n';
  }
}

struct HypergraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::size_t> cardinality_set;   // sorted distinct edge sizes
  std::size_t rank = 0;
  std::uint64_t s = 1;                        // lcm of (size - 1) over the cardinality set
  bool connected = false;
};

namespace detail {

inline std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t q = a / g;
  if (b != 0 && q > std::numeric_limits<std::uint64_t>::max() / b)
    throw std::overflow_error("lcm of (cardinality - 1) values exceeds 64 bits");
  return q * b;
}

}  // namespace detail

/// lcm over (|e| - 1) for the distinct edge sizes; 1 for an edgeless hypergraph.
inline std::uint64_t lcm_order(const Hypergraph& h) {
  std::uint64_t s = 1;
  std::set<std::size_t> sizes;
  for (const auto& e : h.edges()) sizes.insert(e.size());
  for (std::size_t k : sizes) s = detail::checked_lcm(s, static_cast<std::uint64_t>(k - 1));
  return s;
}

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex id. Isolated vertices form singleton components.
inline std::vector<std::vector<VertexId>> connected_components(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  std::vector<std::vector<VertexId>> comps;
  std::vector<bool> vseen(n, false);
  std::vector<bool> eseen(h.edge_count(), false);
  for (VertexId root = 0; root < n; ++root) {
    if (vseen[root]) continue;
    std::vector<VertexId> comp{root};
    vseen[root] = true;
    std::vector<VertexId> stack{root};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : h.incident_edges(v)) {
        if (eseen[e]) continue;
        eseen[e] = true;
        for (VertexId u : h.edge(e).vertices)
          if (!vseen[u]) {
            vseen[u] = true;
            comp.push_back(u);
            stack.push_back(u);
          }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Hypergraph& h) {
  if (h.vertex_count() <= 1) return true;
  return connected_components(h).size() == 1;
}

inline HypergraphStats stats(const Hypergraph& h) {
  HypergraphStats st;
  st.n = h.vertex_count();
  st.m = h.edge_count();
  std::set<std::size_t> sizes;
  for (const auto& e : h.edges()) sizes.insert(e.size());
  st.cardinality_set.assign(sizes.begin(), sizes.end());
  st.rank = sizes.empty() ? 0 : *sizes.rbegin();
  st.s = lcm_order(h);
  st.connected = is_connected(h);
  return st;
}

/// Induced sub-hypergraph on the surviving vertices. Labels are kept, ids
/// re-densified in the order survivors appear; edges shrink to their
/// surviving subset and disappear below two vertices.
inline Hypergraph remove_vertices(const Hypergraph& h, const std::vector<VertexId>& victims) {
  const std::size_t n = h.vertex_count();
  std::vector<bool> removed(n, false);
  for (VertexId v : victims) {
    if (v >= n) throw std::invalid_argument("victim vertex id out of range");
    removed[v] = true;
  }
  std::vector<std::string> labels;
  std::vector<VertexId> remap(n, 0);
  for (VertexId v = 0; v < n; ++v)
    if (!removed[v]) {
      remap[v] = static_cast<VertexId>(labels.size());
      labels.push_back(h.label(v));
    }
  std::vector<std::vector<VertexId>> edges;
  edges.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    std::vector<VertexId> shrunk;
    for (VertexId v : e.vertices)
      if (!removed[v]) shrunk.push_back(remap[v]);
    if (shrunk.size() >= 2) edges.push_back(std::move(shrunk));
  }
  return Hypergraph(std::move(labels), edges);
}

/// Sub-hypergraph induced by the largest component; ties go to the component
/// containing the smallest vertex id.
inline Hypergraph largest_component(const Hypergraph& h) {
  auto comps = connected_components(h);
  if (comps.size() <= 1) return h;
  std::size_t best = 0;
  for (std::size_t i = 1; i < comps.size(); ++i)
    if (comps[i].size() > comps[best].size()) best = i;  // earlier index wins ties
  std::vector<bool> keep(h.vertex_count(), false);
  for (VertexId v : comps[best]) keep[v] = true;
  std::vector<VertexId> victims;
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    if (!keep[v]) victims.push_back(v);
  return remove_vertices(h, victims);
}

/// Keeps only edges whose cardinality is in `allowed`; the vertex set is
/// unchanged, so vertices may become isolated.
inline Hypergraph filter_by_cardinality(const Hypergraph& h, const std::set<std::size_t>& allowed) {
  std::vector<std::vector<VertexId>> edges;
  for (const auto& e : h.edges())
    if (allowed.count(e.size())) edges.push_back(e.vertices);
  return Hypergraph(h.labels(), edges);
}

}  // namespace hec
