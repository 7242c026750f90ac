#include "soire/infer.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "soire/simplify.hpp"
#include "soire/text.hpp"

namespace soire {

PairSet partial_order_pairs(const SampleSet& samples) {
  auto order = samples.symbols_in_order();
  std::unordered_map<SymbolId, int> idx;
  for (std::size_t i = 0; i < order.size(); ++i) idx[order[i]] = static_cast<int>(i);
  int n = static_cast<int>(order.size());
  std::vector<char> mat(static_cast<std::size_t>(n) * n, 0);
  std::vector<char> seen(n, 0);
  std::vector<int> seen_list;
  for (const Word& w : samples.words()) {
    seen_list.clear();
    for (SymbolId s : w) {
      int j = idx.at(s);
      for (int i : seen_list) {
        if (i != j) mat[static_cast<std::size_t>(i) * n + j] = 1;
      }
      if (!seen[j]) {
        seen[j] = 1;
        seen_list.push_back(j);
      }
    }
    for (int i : seen_list) seen[i] = 0;
  }
  PairSet out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (mat[static_cast<std::size_t>(i) * n + j]) {
        out.emplace(order[i], order[j]);
      }
    }
  }
  return out;
}

PairSet conflict_pairs(const SampleSet& samples) {
  PairSet por = partial_order_pairs(samples);
  PairSet out;
  for (const auto& [x, y] : por) {
    if (por.count({y, x})) out.emplace(x, y);
  }
  return out;
}

ConstraintGraph::ConstraintGraph(std::vector<SymbolId> nodes_in_order,
                                 const PairSet& conflicts)
    : nodes_(std::move(nodes_in_order)) {
  for (SymbolId s : nodes_) adj_[s];
  for (const auto& [x, y] : conflicts) {
    if (x == y) continue;
    if (!adj_.count(x) || !adj_.count(y)) {
      throw std::invalid_argument("conflict pair outside the node set");
    }
    adj_[x].insert(y);
    adj_[y].insert(x);
  }
}

std::size_t ConstraintGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& [_, nbrs] : adj_) twice += nbrs.size();
  return twice / 2;
}

bool ConstraintGraph::adjacent(SymbolId a, SymbolId b) const {
  auto it = adj_.find(a);
  return it != adj_.end() && it->second.count(b) > 0;
}

std::vector<SymbolPair> ConstraintGraph::edges() const {
  std::vector<SymbolPair> out;
  std::unordered_map<SymbolId, std::size_t> pos;
  for (std::size_t i = 0; i < nodes_.size(); ++i) pos[nodes_[i]] = i;
  for (SymbolId a : nodes_) {
    for (SymbolId b : adj_.at(a)) {
      if (pos.at(a) < pos.at(b)) out.emplace_back(a, b);
    }
  }
  return out;
}

void ConstraintGraph::remove(const std::vector<SymbolId>& group) {
  std::set<SymbolId> gone(group.begin(), group.end());
  for (SymbolId s : group) {
    auto it = adj_.find(s);
    if (it == adj_.end()) continue;
    for (SymbolId nbr : it->second) adj_[nbr].erase(s);
    adj_.erase(it);
  }
  std::erase_if(nodes_, [&](SymbolId s) { return gone.count(s) > 0; });
}

namespace {

constexpr std::size_t kExactMisLimit = 24;

// All maximal independent sets via Bron-Kerbosch with pivoting on the
// complement graph; node indices keep graph order.
void maximal_independent_sets(const std::vector<std::set<int>>& nonadj, int n,
                              std::vector<int>& chosen, std::set<int> cand,
                              std::set<int> done,
                              std::vector<std::vector<int>>& out) {
  if (cand.empty() && done.empty()) {
    out.push_back(chosen);
    return;
  }
  int pivot = -1;
  std::size_t best = 0;
  for (const auto* side : {&cand, &done}) {
    for (int u : *side) {
      std::size_t cnt = 0;
      for (int v : cand) {
        if (nonadj[u].count(v)) ++cnt;
      }
      if (pivot == -1 || cnt > best) {
        pivot = u;
        best = cnt;
      }
    }
  }
  std::vector<int> branch;
  for (int v : cand) {
    if (!nonadj[pivot].count(v)) branch.push_back(v);
  }
  for (int v : branch) {
    std::set<int> next_cand, next_done;
    for (int u : cand) {
      if (nonadj[v].count(u)) next_cand.insert(u);
    }
    for (int u : done) {
      if (nonadj[v].count(u)) next_done.insert(u);
    }
    chosen.push_back(v);
    maximal_independent_sets(nonadj, n, chosen, std::move(next_cand),
                             std::move(next_done), out);
    chosen.pop_back();
    cand.erase(v);
    done.insert(v);
  }
}

std::vector<int> greedy_independent_set(const ConstraintGraph& g) {
  const auto& nodes = g.nodes();
  std::vector<int> picked;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    bool ok = true;
    for (int j : picked) {
      if (g.adjacent(nodes[i], nodes[j])) {
        ok = false;
        break;
      }
    }
    if (ok) picked.push_back(static_cast<int>(i));
  }
  return picked;
}

}  // namespace

std::vector<SymbolId> max_independent_set(const ConstraintGraph& graph) {
  if (graph.empty()) throw std::invalid_argument("empty constraint graph");
  const auto& nodes = graph.nodes();
  int n = static_cast<int>(nodes.size());

  std::vector<int> winner;
  if (nodes.size() > kExactMisLimit) {
    winner = greedy_independent_set(graph);
  } else {
    std::vector<std::set<int>> nonadj(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && !graph.adjacent(nodes[i], nodes[j])) nonadj[i].insert(j);
      }
    }
    std::vector<std::vector<int>> all;
    std::set<int> cand;
    for (int i = 0; i < n; ++i) cand.insert(i);
    std::vector<int> chosen;
    maximal_independent_sets(nonadj, n, chosen, std::move(cand), {}, all);

    // Canonical pick: largest, then fewest edges among the untouched nodes
    // (keeps later extractions coarse), then earliest nodes.
    auto residual_edges = [&](const std::vector<int>& set) {
      std::set<int> in(set.begin(), set.end());
      std::size_t cnt = 0;
      for (int i = 0; i < n; ++i) {
        if (in.count(i)) continue;
        for (int j = i + 1; j < n; ++j) {
          if (!in.count(j) && graph.adjacent(nodes[i], nodes[j])) ++cnt;
        }
      }
      return cnt;
    };
    std::size_t winner_residual = 0;
    std::vector<int> key;
    for (auto& s : all) {
      std::sort(s.begin(), s.end());
      if (winner.empty()) {
        winner = s;
        winner_residual = residual_edges(s);
        continue;
      }
      if (s.size() != winner.size()) {
        if (s.size() > winner.size()) {
          winner = s;
          winner_residual = residual_edges(s);
        }
        continue;
      }
      std::size_t res = residual_edges(s);
      if (res < winner_residual ||
          (res == winner_residual && s < winner)) {
        winner = s;
        winner_residual = res;
      }
    }
  }

  std::sort(winner.begin(), winner.end());
  std::vector<SymbolId> out;
  out.reserve(winner.size());
  for (int i : winner) out.push_back(nodes[i]);
  return out;
}

std::vector<std::vector<SymbolId>> independent_set_partition(
    ConstraintGraph graph) {
  std::vector<std::vector<SymbolId>> out;
  while (!graph.empty()) {
    out.push_back(max_independent_set(graph));
    graph.remove(out.back());
  }
  return out;
}

namespace {

void note_depth(const InferOptions& opt, int depth) {
  if (opt.stats && depth > opt.stats->max_recursion_depth) {
    opt.stats->max_recursion_depth = depth;
  }
}

std::string describe(const Soa& a, const std::vector<Soa::VertexId>& vs,
                     const Alphabet& alphabet) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += print(a.label(vs[i]), alphabet);
  }
  return out + "}";
}

Regex merge_impl(const SampleSet& samples, const InferOptions& opt, int depth);

Regex soa_to_soire_impl(const SampleSet& samples, Soa& a,
                        const InferOptions& opt, int depth) {
  note_depth(opt, depth);
  const Alphabet& alphabet = samples.alphabet();
  auto trace = [&](const std::string& line) {
    if (opt.trace) opt.trace(line);
  };

  std::vector<Regex> chain;
  auto finish = [&](Regex terminal) {
    if (chain.empty()) return terminal;
    chain.push_back(std::move(terminal));
    return Regex::concatenation(std::move(chain));
  };

  // Every branch strictly shrinks the graph or is followed by one that does.
  const std::size_t step_limit = 8 * (a.vertex_count() + a.edge_count()) + 64;
  for (std::size_t step = 0;; ++step) {
    if (step > step_limit) {
      throw std::logic_error("soa_to_soire failed to make progress");
    }
    if (a.edge_count() == 0) return finish(Regex::empty());
    if (a.vertex_count() == 2) return finish(Regex::epsilon());

    auto components = a.cyclic_components();
    if (!components.empty()) {
      const auto& group = components.front();
      if (group.size() == 1) {
        Regex lbl = Regex::plus(a.label(group[0]));
        trace("contract-plus " + describe(a, group, alphabet) + " -> " +
              print(lbl, alphabet));
        a.contract(group, std::move(lbl));
        continue;
      }
      std::set<SymbolId> symbols;
      for (Soa::VertexId v : group) {
        auto s = symbols_of(a.label(v));
        symbols.insert(s.begin(), s.end());
      }
      SampleSet sub = project(samples, symbols).without_epsilon_words();
      Regex lbl;
      if (conflict_pairs(sub).empty()) {
        // No conflicting orders to decompose on; recursing would rebuild the
        // identical subproblem. Generalize the cycle as (x1|...|xk)+.
        std::vector<Regex> ops;
        for (Soa::VertexId v : group) ops.push_back(a.label(v));
        lbl = Regex::plus(Regex::alternation(std::move(ops)));
        trace("contract-cycle " + describe(a, group, alphabet) + " -> " +
              print(lbl, alphabet));
      } else {
        lbl = merge_impl(sub, opt, depth + 1);
        trace("contract-merge " + describe(a, group, alphabet) + " -> " +
              print(lbl, alphabet));
      }
      a.contract(group, std::move(lbl));
      continue;
    }

    auto heads = a.first();
    if (heads != a.succ(Soa::kSrc)) {
      trace("add-epsilon");
      a.add_epsilon();
      continue;
    }

    if (heads.size() == 1) {
      trace("split-first " + print(a.label(heads[0]), alphabet));
      chain.push_back(a.label(heads[0]));
      a.absorb_into_source(heads[0]);
      continue;
    }

    // A dominated block is contracted only when it has a unique continuation
    // edge; then the contraction is language-exact.
    bool contracted = false;
    for (Soa::VertexId v : heads) {
      auto block = a.exclusive(v);
      if (block.size() <= 1) continue;
      std::set<Soa::VertexId> members(block.begin(), block.end());
      int exits = 0;
      for (Soa::VertexId u : block) {
        for (Soa::VertexId t : a.succ(u)) {
          if (!members.count(t)) ++exits;
        }
      }
      if (exits != 1) continue;
      Soa sub = a.extract(block);
      Regex lbl = soa_to_soire_impl(samples, sub, opt, depth + 1);
      trace("contract-block " + describe(a, block, alphabet) + " -> " +
            print(lbl, alphabet));
      a.contract(block, std::move(lbl));
      contracted = true;
      break;
    }
    if (contracted) continue;

    // Disjunction: pick the pair of heads with subset-maximal common reach;
    // ties resolve to the earliest pair in rank order.
    std::vector<std::set<Soa::VertexId>> reach_sets;
    reach_sets.reserve(heads.size());
    for (Soa::VertexId v : heads) {
      auto r = a.reach(v);
      reach_sets.emplace_back(r.begin(), r.end());
    }
    struct Candidate {
      std::size_t i, j;
      std::set<Soa::VertexId> common;
    };
    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i < heads.size(); ++i) {
      for (std::size_t j = i + 1; j < heads.size(); ++j) {
        std::set<Soa::VertexId> common;
        std::set_intersection(reach_sets[i].begin(), reach_sets[i].end(),
                              reach_sets[j].begin(), reach_sets[j].end(),
                              std::inserter(common, common.begin()));
        candidates.push_back({i, j, std::move(common)});
      }
    }
    const Candidate* pick = nullptr;
    for (const auto& c : candidates) {
      bool dominated = false;
      for (const auto& d : candidates) {
        if (&d != &c && c.common != d.common &&
            std::includes(d.common.begin(), d.common.end(), c.common.begin(),
                          c.common.end())) {
          dominated = true;
          break;
        }
      }
      if (!dominated) {
        pick = &c;
        break;
      }
    }
    Soa::VertexId u = heads[pick->i], v = heads[pick->j];
    Regex lbl = Regex::alternation({a.label(u), a.label(v)});
    trace("contract-or " + describe(a, {u, v}, alphabet) + " -> " +
          print(lbl, alphabet));
    a.contract({u, v}, std::move(lbl));
  }
}

Regex merge_impl(const SampleSet& samples, const InferOptions& opt, int depth) {
  note_depth(opt, depth);
  SampleSet s = samples.without_epsilon_words();
  if (s.empty()) {
    throw std::invalid_argument("merge requires a nonempty sample set");
  }
  ConstraintGraph graph(s.symbols_in_order(), conflict_pairs(s));
  auto partition = independent_set_partition(std::move(graph));
  std::vector<Regex> parts;
  parts.reserve(partition.size());
  for (const auto& mis : partition) {
    std::set<SymbolId> keep(mis.begin(), mis.end());
    SampleSet sub = project(s, keep);
    Soa automaton = Soa::build(sub);
    parts.push_back(soa_to_soire_impl(sub, automaton, opt, depth + 1));
  }
  return simplify(Regex::interleaving(std::move(parts)));
}

}  // namespace

Regex merge(const SampleSet& samples, const InferOptions& options) {
  return merge_impl(samples, options, 0);
}

Regex soa_to_soire(const SampleSet& samples, Soa automaton,
                   const InferOptions& options) {
  return soa_to_soire_impl(samples, automaton, options, 0);
}

Regex infer_soire(const SampleSet& samples, const InferOptions& options) {
  Soa automaton = Soa::build(samples);
  return simplify(soa_to_soire_impl(samples, automaton, options, 0));
}

}  // namespace soire
