#pragma once

#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "soire/alphabet.hpp"

namespace soire {

enum class RegexKind {
  kEmpty,       // matches nothing
  kEpsilon,     // matches the empty word
  kSymbol,      // one alphabet symbol
  kUnion,       // n-ary disjunction, flattened
  kConcat,      // n-ary concatenation, flattened
  kInterleave,  // n-ary shuffle, flattened
  kStar,
  kPlus,
  kOpt,
};

/// Immutable regular expression with interleaving.
///
/// Values are cheap handles to shared, immutable nodes; safe to copy across
/// threads. The factory functions keep two structural invariants: n-ary nodes
/// are flattened (no Union child of a Union, etc.) and have at least two
/// children, and kEmpty never appears as a strict subterm.
class Regex {
 public:
  Regex() : Regex(epsilon()) {}

  static Regex empty();
  static Regex epsilon();
  static Regex symbol(SymbolId id);
  static Regex alternation(std::vector<Regex> children);
  static Regex concatenation(std::vector<Regex> children);
  static Regex interleaving(std::vector<Regex> children);
  static Regex star(Regex child);
  static Regex plus(Regex child);
  static Regex opt(Regex child);

  RegexKind kind() const;
  SymbolId symbol_id() const;
  std::span<const Regex> children() const;
  const Regex& child() const;

  bool is_empty() const { return kind() == RegexKind::kEmpty; }
  bool is_epsilon() const { return kind() == RegexKind::kEpsilon; }

  /// Deep structural equality (operand order matters everywhere).
  friend bool operator==(const Regex& a, const Regex& b) { return equal(a, b); }

  /// Serialization used for hashing and order-insensitive comparison; Union
  /// and Interleave children are sorted, Concat children are not.
  std::string commutative_key() const;

  /// Structural key with operand order preserved.
  std::string structural_key() const;

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  explicit Regex(NodePtr node) : node_(std::move(node)) {}

  static bool equal(const Regex& a, const Regex& b);

  NodePtr node_;
};

/// True iff operand order of Union/Interleave is the only difference.
bool equal_commutative(const Regex& a, const Regex& b);

/// True iff no symbol occurs at two leaves.
bool is_soire(const Regex& r);

/// Distinct symbols occurring in r.
std::set<SymbolId> symbols_of(const Regex& r);

/// Number of symbol leaves (with multiplicity).
int symbol_leaf_count(const Regex& r);

}  // namespace soire
