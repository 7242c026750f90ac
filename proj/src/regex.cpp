#include "soire/regex.hpp"

#include <algorithm>
#include <stdexcept>

namespace soire {

struct Regex::Node {
  RegexKind kind;
  SymbolId sym = 0;
  std::vector<Regex> children;
};

namespace {

bool is_nary(RegexKind k) {
  return k == RegexKind::kUnion || k == RegexKind::kConcat ||
         k == RegexKind::kInterleave;
}

}  // namespace

Regex Regex::empty() {
  static const Regex r{std::make_shared<Node>(Node{RegexKind::kEmpty})};
  return r;
}

Regex Regex::epsilon() {
  static const Regex r{std::make_shared<Node>(Node{RegexKind::kEpsilon})};
  return r;
}

Regex Regex::symbol(SymbolId id) {
  return Regex{std::make_shared<Node>(Node{RegexKind::kSymbol, id})};
}

// The n-ary builders flatten same-kind children and normalize kEmpty so it
// never survives as a subterm.
Regex Regex::alternation(std::vector<Regex> children) {
  std::vector<Regex> flat;
  for (auto& c : children) {
    if (c.kind() == RegexKind::kUnion) {
      for (const auto& g : c.children()) flat.push_back(g);
    } else if (!c.is_empty()) {  // L(emptyset | r) = L(r)
      flat.push_back(std::move(c));
    }
  }
  if (flat.empty()) return empty();
  if (flat.size() == 1) return flat.front();
  return Regex{std::make_shared<Node>(Node{RegexKind::kUnion, 0, std::move(flat)})};
}

Regex Regex::concatenation(std::vector<Regex> children) {
  std::vector<Regex> flat;
  for (auto& c : children) {
    if (c.is_empty()) return empty();
    if (c.kind() == RegexKind::kConcat) {
      for (const auto& g : c.children()) flat.push_back(g);
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.empty()) return epsilon();
  if (flat.size() == 1) return flat.front();
  return Regex{std::make_shared<Node>(Node{RegexKind::kConcat, 0, std::move(flat)})};
}

Regex Regex::interleaving(std::vector<Regex> children) {
  std::vector<Regex> flat;
  for (auto& c : children) {
    if (c.is_empty()) return empty();
    if (c.kind() == RegexKind::kInterleave) {
      for (const auto& g : c.children()) flat.push_back(g);
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.empty()) return epsilon();
  if (flat.size() == 1) return flat.front();
  return Regex{
      std::make_shared<Node>(Node{RegexKind::kInterleave, 0, std::move(flat)})};
}

Regex Regex::star(Regex child) {
  if (child.is_empty()) return epsilon();  // L(emptyset*) = {eps}
  return Regex{std::make_shared<Node>(Node{RegexKind::kStar, 0, {std::move(child)}})};
}

Regex Regex::plus(Regex child) {
  if (child.is_empty()) return empty();
  return Regex{std::make_shared<Node>(Node{RegexKind::kPlus, 0, {std::move(child)}})};
}

Regex Regex::opt(Regex child) {
  if (child.is_empty()) return epsilon();
  return Regex{std::make_shared<Node>(Node{RegexKind::kOpt, 0, {std::move(child)}})};
}

RegexKind Regex::kind() const { return node_->kind; }

SymbolId Regex::symbol_id() const {
  if (kind() != RegexKind::kSymbol) throw std::logic_error("not a symbol node");
  return node_->sym;
}

std::span<const Regex> Regex::children() const { return node_->children; }

const Regex& Regex::child() const {
  if (node_->children.size() != 1) throw std::logic_error("not a unary node");
  return node_->children.front();
}

bool Regex::equal(const Regex& a, const Regex& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case RegexKind::kEmpty:
    case RegexKind::kEpsilon:
      return true;
    case RegexKind::kSymbol:
      return a.node_->sym == b.node_->sym;
    default: {
      auto ca = a.children(), cb = b.children();
      if (ca.size() != cb.size()) return false;
      for (std::size_t i = 0; i < ca.size(); ++i) {
        if (!equal(ca[i], cb[i])) return false;
      }
      return true;
    }
  }
}

namespace {

void key_rec(const Regex& r, bool sort_commutative, std::string& out) {
  switch (r.kind()) {
    case RegexKind::kEmpty:
      out += '0';
      return;
    case RegexKind::kEpsilon:
      out += 'e';
      return;
    case RegexKind::kSymbol:
      out += 's';
      out += std::to_string(r.symbol_id());
      return;
    case RegexKind::kStar:
    case RegexKind::kPlus:
    case RegexKind::kOpt: {
      out += r.kind() == RegexKind::kStar  ? '*'
             : r.kind() == RegexKind::kPlus ? '+'
                                            : '?';
      out += '(';
      key_rec(r.child(), sort_commutative, out);
      out += ')';
      return;
    }
    default: {
      char tag = r.kind() == RegexKind::kUnion    ? '|'
                 : r.kind() == RegexKind::kConcat ? '.'
                                                  : '&';
      out += tag;
      out += '(';
      bool commutative = r.kind() != RegexKind::kConcat;
      if (sort_commutative && commutative) {
        std::vector<std::string> keys;
        keys.reserve(r.children().size());
        for (const auto& c : r.children()) {
          std::string k;
          key_rec(c, sort_commutative, k);
          keys.push_back(std::move(k));
        }
        std::sort(keys.begin(), keys.end());
        for (const auto& k : keys) {
          out += k;
          out += ',';
        }
      } else {
        for (const auto& c : r.children()) {
          key_rec(c, sort_commutative, out);
          out += ',';
        }
      }
      out += ')';
      return;
    }
  }
}

}  // namespace

std::string Regex::commutative_key() const {
  std::string out;
  key_rec(*this, true, out);
  return out;
}

std::string Regex::structural_key() const {
  std::string out;
  key_rec(*this, false, out);
  return out;
}

bool equal_commutative(const Regex& a, const Regex& b) {
  return a.commutative_key() == b.commutative_key();
}

namespace {

void collect_leaves(const Regex& r, std::vector<SymbolId>& out) {
  if (r.kind() == RegexKind::kSymbol) {
    out.push_back(r.symbol_id());
    return;
  }
  for (const auto& c : r.children()) collect_leaves(c, out);
}

}  // namespace

bool is_soire(const Regex& r) {
  std::vector<SymbolId> leaves;
  collect_leaves(r, leaves);
  std::sort(leaves.begin(), leaves.end());
  return std::adjacent_find(leaves.begin(), leaves.end()) == leaves.end();
}

std::set<SymbolId> symbols_of(const Regex& r) {
  std::vector<SymbolId> leaves;
  collect_leaves(r, leaves);
  return {leaves.begin(), leaves.end()};
}

int symbol_leaf_count(const Regex& r) {
  std::vector<SymbolId> leaves;
  collect_leaves(r, leaves);
  return static_cast<int>(leaves.size());
}

}  // namespace soire
