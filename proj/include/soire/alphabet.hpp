#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace soire {

using SymbolId = std::uint32_t;

/// A word is a finite sequence of interned symbol ids (possibly empty).
using Word = std::vector<SymbolId>;

/// Interning table mapping symbol names to dense, stable ids.
///
/// Names must be non-empty and must not contain whitespace, expression
/// metacharacters (| & ? * + ( ) and the concatenation dot), or the reserved
/// epsilon/empty-set glyphs.
class Alphabet {
 public:
  Alphabet() = default;

  /// Returns the id of `name`, interning it first if unseen.
  SymbolId intern(std::string_view name);

  std::optional<SymbolId> find(std::string_view name) const;

  const std::string& name(SymbolId id) const { return names_.at(id); }

  std::size_t size() const { return names_.size(); }

  const std::vector<std::string>& names() const { return names_; }

  static bool valid_name(std::string_view name);

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, SymbolId> index_;
};

}  // namespace soire
