#include "soire/soa.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "soire/text.hpp"

namespace soire {

Soa::VertexId Soa::new_vertex(Regex label, std::int64_t rank) {
  VertexId id = static_cast<VertexId>(verts_.size());
  verts_.push_back({std::move(label), rank, true});
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

void Soa::add_edge(VertexId from, VertexId to) {
  out_[from].insert(to);
  in_[to].insert(from);
}

void Soa::remove_vertex(VertexId v) {
  for (VertexId t : out_[v]) in_[t].erase(v);
  for (VertexId s : in_[v]) out_[s].erase(v);
  out_[v].clear();
  in_[v].clear();
  verts_[v].alive = false;
}

Soa Soa::build(const SampleSet& samples) {
  Soa a;
  a.new_vertex(Regex::epsilon(), -2);  // src
  a.new_vertex(Regex::epsilon(), -1);  // snk
  std::unordered_map<SymbolId, VertexId> vertex_of;
  for (SymbolId s : samples.symbols_in_order()) {
    vertex_of.emplace(s, a.new_vertex(Regex::symbol(s), a.next_rank_++));
  }
  for (const Word& w : samples.words()) {
    if (w.empty()) {
      a.add_edge(kSrc, kSnk);
      continue;
    }
    a.add_edge(kSrc, vertex_of.at(w.front()));
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      a.add_edge(vertex_of.at(w[i]), vertex_of.at(w[i + 1]));
    }
    a.add_edge(vertex_of.at(w.back()), kSnk);
  }
  return a;
}

std::size_t Soa::vertex_count() const {
  std::size_t n = 0;
  for (const auto& v : verts_) n += v.alive ? 1 : 0;
  return n;
}

std::size_t Soa::edge_count() const {
  std::size_t n = 0;
  for (const auto& s : out_) n += s.size();
  return n;
}

bool Soa::is_vertex(VertexId v) const {
  return v >= 0 && v < static_cast<VertexId>(verts_.size()) && verts_[v].alive;
}

bool Soa::has_edge(VertexId from, VertexId to) const {
  return is_vertex(from) && out_[from].count(to) > 0;
}

std::vector<Soa::VertexId> Soa::internal_vertices() const {
  std::vector<VertexId> vs;
  for (VertexId v = 2; v < static_cast<VertexId>(verts_.size()); ++v) {
    if (verts_[v].alive) vs.push_back(v);
  }
  std::sort(vs.begin(), vs.end(), [&](VertexId a, VertexId b) {
    return std::pair(verts_[a].rank, a) < std::pair(verts_[b].rank, b);
  });
  return vs;
}

std::vector<Soa::VertexId> Soa::vertices() const {
  std::vector<VertexId> vs{kSrc, kSnk};
  auto internal = internal_vertices();
  vs.insert(vs.end(), internal.begin(), internal.end());
  return vs;
}

const Regex& Soa::label(VertexId v) const {
  if (!is_vertex(v)) throw std::invalid_argument("unknown vertex");
  return verts_[v].label;
}

std::int64_t Soa::rank(VertexId v) const {
  if (!is_vertex(v)) throw std::invalid_argument("unknown vertex");
  return verts_[v].rank;
}

std::vector<Soa::VertexId> Soa::sorted_by_rank(const std::set<VertexId>& vs) const {
  std::vector<VertexId> out(vs.begin(), vs.end());
  std::sort(out.begin(), out.end(), [&](VertexId a, VertexId b) {
    return std::pair(verts_[a].rank, a) < std::pair(verts_[b].rank, b);
  });
  return out;
}

std::vector<Soa::VertexId> Soa::pred(VertexId v) const {
  if (!is_vertex(v)) throw std::invalid_argument("unknown vertex");
  return sorted_by_rank(in_[v]);
}

std::vector<Soa::VertexId> Soa::succ(VertexId v) const {
  if (!is_vertex(v)) throw std::invalid_argument("unknown vertex");
  return sorted_by_rank(out_[v]);
}

std::vector<Soa::VertexId> Soa::reach(VertexId v) const {
  if (!is_vertex(v)) throw std::invalid_argument("unknown vertex");
  std::set<VertexId> seen;
  std::vector<VertexId> stack(out_[v].begin(), out_[v].end());
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    if (!seen.insert(u).second) continue;
    for (VertexId t : out_[u]) {
      if (!seen.count(t)) stack.push_back(t);
    }
  }
  return sorted_by_rank(seen);
}

std::vector<Soa::VertexId> Soa::first() const {
  std::set<VertexId> out;
  for (VertexId v : internal_vertices()) {
    if (in_[v].size() == 1 && *in_[v].begin() == kSrc) out.insert(v);
  }
  return sorted_by_rank(out);
}

namespace {

// Iterative Tarjan; vertex sets are tiny but recursion depth is unbounded in
// principle.
struct TarjanState {
  int index = -1;
  int lowlink = 0;
  bool on_stack = false;
};

}  // namespace

std::vector<std::vector<Soa::VertexId>> Soa::cyclic_components() const {
  std::vector<std::vector<VertexId>> components;
  std::unordered_map<VertexId, TarjanState> st;
  std::vector<VertexId> stack;
  int counter = 0;

  auto all = vertices();
  for (VertexId root : all) st[root];

  struct Frame {
    VertexId v;
    std::vector<VertexId> succs;
    std::size_t next = 0;
  };

  for (VertexId root : all) {
    if (st[root].index != -1) continue;
    std::vector<Frame> call;
    call.push_back({root, {out_[root].begin(), out_[root].end()}});
    st[root].index = st[root].lowlink = counter++;
    st[root].on_stack = true;
    stack.push_back(root);
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < f.succs.size()) {
        VertexId w = f.succs[f.next++];
        if (st[w].index == -1) {
          st[w].index = st[w].lowlink = counter++;
          st[w].on_stack = true;
          stack.push_back(w);
          call.push_back({w, {out_[w].begin(), out_[w].end()}});
        } else if (st[w].on_stack) {
          st[f.v].lowlink = std::min(st[f.v].lowlink, st[w].index);
        }
        continue;
      }
      if (st[f.v].lowlink == st[f.v].index) {
        std::vector<VertexId> comp;
        for (;;) {
          VertexId w = stack.back();
          stack.pop_back();
          st[w].on_stack = false;
          comp.push_back(w);
          if (w == f.v) break;
        }
        bool cyclic = comp.size() > 1 ||
                      (comp.size() == 1 && has_edge(comp[0], comp[0]));
        if (cyclic) {
          std::sort(comp.begin(), comp.end(), [&](VertexId a, VertexId b) {
            return std::pair(verts_[a].rank, a) < std::pair(verts_[b].rank, b);
          });
          components.push_back(std::move(comp));
        }
      }
      VertexId done = f.v;
      call.pop_back();
      if (!call.empty()) {
        st[call.back().v].lowlink =
            std::min(st[call.back().v].lowlink, st[done].lowlink);
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [&](const auto& a, const auto& b) {
              return std::pair(verts_[a.front()].rank, a.front()) <
                     std::pair(verts_[b.front()].rank, b.front());
            });
  return components;
}

bool Soa::has_cycle() const { return !cyclic_components().empty(); }

std::vector<Soa::VertexId> Soa::exclusive(VertexId v) const {
  if (!is_vertex(v) || v == kSrc || v == kSnk) {
    throw std::invalid_argument("exclusive: not an internal vertex");
  }
  if (has_cycle()) {
    throw std::invalid_argument("exclusive requires an acyclic graph");
  }
  // Dominator sets over the DAG, in topological order from src.
  std::map<VertexId, std::set<VertexId>> dom;
  std::map<VertexId, std::size_t> pending;
  std::vector<VertexId> ready{kSrc};
  for (VertexId u : vertices()) {
    if (u != kSrc) pending[u] = in_[u].size();
  }
  dom[kSrc] = {kSrc};
  std::size_t head = 0;
  while (head < ready.size()) {
    VertexId u = ready[head++];
    for (VertexId t : out_[u]) {
      auto it = dom.find(t);
      if (it == dom.end()) {
        std::set<VertexId> d = dom[u];
        d.insert(t);
        dom.emplace(t, std::move(d));
      } else {
        std::set<VertexId> inter;
        std::set_intersection(it->second.begin(), it->second.end(),
                              dom[u].begin(), dom[u].end(),
                              std::inserter(inter, inter.begin()));
        inter.insert(t);
        it->second = std::move(inter);
      }
      if (--pending[t] == 0) ready.push_back(t);
    }
  }
  std::set<VertexId> out;
  for (VertexId u : internal_vertices()) {
    auto it = dom.find(u);
    if (it != dom.end() && it->second.count(v)) out.insert(u);
  }
  out.insert(v);
  return sorted_by_rank(out);
}

void Soa::check_internal(const std::vector<VertexId>& group) const {
  if (group.empty()) throw std::invalid_argument("empty vertex set");
  for (VertexId v : group) {
    if (!is_vertex(v) || v == kSrc || v == kSnk) {
      throw std::invalid_argument("vertex set must contain live internal vertices");
    }
  }
}

Soa::VertexId Soa::contract(const std::vector<VertexId>& group, Regex label) {
  check_internal(group);
  std::set<VertexId> members(group.begin(), group.end());
  std::int64_t rank = verts_[*group.begin()].rank;
  for (VertexId v : group) rank = std::min(rank, verts_[v].rank);
  VertexId merged = new_vertex(std::move(label), rank);
  for (VertexId v : group) {
    for (VertexId t : out_[v]) {
      if (!members.count(t)) add_edge(merged, t);
    }
    for (VertexId s : in_[v]) {
      if (!members.count(s)) add_edge(s, merged);
    }
  }
  for (VertexId v : group) remove_vertex(v);
  return merged;
}

void Soa::add_epsilon() {
  std::vector<VertexId> redirect;
  for (VertexId v : out_[kSrc]) {
    if (in_[v].size() > 1) redirect.push_back(v);
  }
  if (redirect.empty()) return;
  VertexId eps = new_vertex(Regex::epsilon(), next_rank_++);
  for (VertexId v : redirect) {
    out_[kSrc].erase(v);
    in_[v].erase(kSrc);
    add_edge(eps, v);
  }
  add_edge(kSrc, eps);
}

void Soa::absorb_into_source(VertexId v) {
  if (!is_vertex(v) || v == kSrc || v == kSnk) {
    throw std::invalid_argument("absorb_into_source: not an internal vertex");
  }
  for (VertexId t : out_[v]) {
    if (t != v) add_edge(kSrc, t);
  }
  remove_vertex(v);
}

Soa Soa::extract(const std::vector<VertexId>& group) const {
  check_internal(group);
  std::set<VertexId> members(group.begin(), group.end());
  Soa sub;
  sub.new_vertex(Regex::epsilon(), -2);
  sub.new_vertex(Regex::epsilon(), -1);
  std::map<VertexId, VertexId> remap;
  std::int64_t max_rank = 0;
  for (VertexId v : sorted_by_rank(members)) {
    remap[v] = sub.new_vertex(verts_[v].label, verts_[v].rank);
    max_rank = std::max(max_rank, verts_[v].rank + 1);
  }
  sub.next_rank_ = max_rank;
  for (VertexId v : group) {
    bool entry = false, exit = false;
    for (VertexId s : in_[v]) {
      if (members.count(s)) sub.add_edge(remap.at(s), remap.at(v));
      else entry = true;
    }
    for (VertexId t : out_[v]) {
      if (!members.count(t)) exit = true;
    }
    if (entry) sub.add_edge(kSrc, remap.at(v));
    if (exit) sub.add_edge(remap.at(v), kSnk);
  }
  return sub;
}

std::string Soa::to_dot(const Alphabet& alphabet) const {
  std::ostringstream os;
  os << "digraph soa {\n  rankdir=LR;\n";
  os << "  src [shape=box, style=filled, fillcolor=lightblue];\n";
  os << "  snk [shape=doublecircle, style=filled, fillcolor=lightgreen];\n";
  auto node_name = [](VertexId v) {
    if (v == kSrc) return std::string("src");
    if (v == kSnk) return std::string("snk");
    return "v" + std::to_string(v);
  };
  for (VertexId v : internal_vertices()) {
    os << "  " << node_name(v) << " [label=\"" << print(verts_[v].label, alphabet)
       << "\"];\n";
  }
  for (VertexId v : vertices()) {
    for (VertexId t : sorted_by_rank(out_[v])) {
      os << "  " << node_name(v) << " -> " << node_name(t) << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace soire
