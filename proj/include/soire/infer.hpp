#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "soire/regex.hpp"
#include "soire/samples.hpp"
#include "soire/soa.hpp"

namespace soire {

using SymbolPair = std::pair<SymbolId, SymbolId>;
using PairSet = std::set<SymbolPair>;

/// Ordered pairs <x,y> with x strictly before y in some word (x != y).
PairSet partial_order_pairs(const SampleSet& samples);

/// Symmetric part of partial_order_pairs: both orders observed.
PairSet conflict_pairs(const SampleSet& samples);

/// Undirected graph over symbols whose edges are order conflicts. Nodes keep
/// the first-appearance order they were constructed with.
class ConstraintGraph {
 public:
  ConstraintGraph(std::vector<SymbolId> nodes_in_order, const PairSet& conflicts);

  bool empty() const { return nodes_.empty(); }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const;
  const std::vector<SymbolId>& nodes() const { return nodes_; }
  bool adjacent(SymbolId a, SymbolId b) const;
  std::vector<SymbolPair> edges() const;

  void remove(const std::vector<SymbolId>& group);

 private:
  std::vector<SymbolId> nodes_;
  std::map<SymbolId, std::set<SymbolId>> adj_;
};

/// Deterministic maximal independent set, in node order.
///
/// Up to 24 nodes this is an exact maximum independent set with canonical
/// tie-breaks (fewest residual edges, then earliest nodes); beyond that a
/// greedy approximation keeps the run bounded. Throws on an empty graph.
std::vector<SymbolId> max_independent_set(const ConstraintGraph& graph);

/// Repeatedly extracts max_independent_set until no node remains. The result
/// partitions the node set; operand order of inferred interleavings follows
/// this extraction order.
std::vector<std::vector<SymbolId>> independent_set_partition(ConstraintGraph graph);

struct InferStats {
  int max_recursion_depth = 0;
};

struct InferOptions {
  std::function<void(const std::string&)> trace;
  InferStats* stats = nullptr;
};

/// Infers an interleaving expression for samples drawn from one strongly
/// connected component. Epsilon-words (samples that bypass the component) are
/// dropped on entry; projections onto the independent sets keep theirs, which
/// is what makes absent operands optional.
Regex merge(const SampleSet& samples, const InferOptions& options = {});

/// Converts a (generalized) single occurrence automaton of `samples` into an
/// expression accepting every sample. Deterministic; branch decisions follow
/// vertex rank order.
Regex soa_to_soire(const SampleSet& samples, Soa automaton,
                   const InferOptions& options = {});

/// Full pipeline: 2T-INF construction, conversion, cleanup.
Regex infer_soire(const SampleSet& samples, const InferOptions& options = {});

}  // namespace soire
