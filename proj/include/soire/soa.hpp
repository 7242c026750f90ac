#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "soire/regex.hpp"
#include "soire/samples.hpp"

namespace soire {

/// Generalized single occurrence automaton: a digraph with distinguished
/// source/sink and internal vertices labeled by pairwise alphabet-disjoint
/// expressions. Accepts the words spelled by label sequences along
/// src-to-snk paths.
///
/// Internal vertices carry a rank (first-appearance order of their leftmost
/// underlying symbol in the sample set they were built from); every query that
/// returns a vertex collection orders it by rank, which is what makes the
/// inference pipeline deterministic.
class Soa {
 public:
  using VertexId = std::int32_t;

  static constexpr VertexId kSrc = 0;
  static constexpr VertexId kSnk = 1;

  /// 2T-INF: one vertex per distinct symbol, edges from adjacent sample pairs,
  /// src->w[0], w[last]->snk, and src->snk for epsilon-words.
  static Soa build(const SampleSet& samples);

  std::size_t vertex_count() const;
  std::size_t edge_count() const;
  bool is_vertex(VertexId v) const;
  bool has_edge(VertexId from, VertexId to) const;

  /// All vertices: src, snk, then internal vertices in rank order.
  std::vector<VertexId> vertices() const;
  std::vector<VertexId> internal_vertices() const;

  const Regex& label(VertexId v) const;
  std::int64_t rank(VertexId v) const;

  std::vector<VertexId> pred(VertexId v) const;
  std::vector<VertexId> succ(VertexId v) const;

  /// Vertices reachable from v's outgoing edges (v itself only if on a cycle).
  std::vector<VertexId> reach(VertexId v) const;

  /// Internal vertices whose only predecessor is src.
  std::vector<VertexId> first() const;

  bool has_cycle() const;

  /// Strongly connected components that contain a cycle (size >= 2, or a
  /// single self-looped vertex), ordered by minimum member rank.
  std::vector<std::vector<VertexId>> cyclic_components() const;

  /// Vertices u such that every src->snk path visiting u visits v first
  /// (v itself included). Requires an acyclic graph.
  std::vector<VertexId> exclusive(VertexId v) const;

  /// Replaces U by a fresh vertex carrying `label`; edges are redirected,
  /// internal edges (including the would-be self-loop) are dropped, parallel
  /// edges are merged. Returns the new vertex.
  VertexId contract(const std::vector<VertexId>& group, Regex label);

  /// Adds an epsilon-labeled vertex e and reroutes every edge src->v with
  /// |pred(v)| > 1 through it. No-op when no edge qualifies.
  void add_epsilon();

  /// Merges v into the source: src inherits v's outgoing edges, v disappears.
  void absorb_into_source(VertexId v);

  /// New automaton over copies of U with fresh src/snk: internal edges are
  /// copied, boundary edges become src/snk edges. This graph is unchanged.
  Soa extract(const std::vector<VertexId>& group) const;

  std::string to_dot(const Alphabet& alphabet) const;

 private:
  Soa() = default;

  VertexId new_vertex(Regex label, std::int64_t rank);
  void add_edge(VertexId from, VertexId to);
  void remove_vertex(VertexId v);
  void check_internal(const std::vector<VertexId>& group) const;
  std::vector<VertexId> sorted_by_rank(const std::set<VertexId>& vs) const;

  struct Vertex {
    Regex label;
    std::int64_t rank = 0;
    bool alive = false;
  };

  std::vector<Vertex> verts_;
  std::vector<std::set<VertexId>> out_;
  std::vector<std::set<VertexId>> in_;
  std::int64_t next_rank_ = 0;
};

}  // namespace soire
