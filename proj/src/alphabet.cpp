#include "soire/alphabet.hpp"

#include <cctype>
#include <stdexcept>

namespace soire {

namespace {

constexpr std::string_view kForbiddenAscii = "|&?*+()";

}  // namespace

bool Alphabet::valid_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    if (kForbiddenAscii.find(c) != std::string_view::npos) return false;
  }
  // Reserved glyphs (UTF-8): middle dot, epsilon, empty set.
  for (std::string_view glyph : {"·", "ε", "∅"}) {
    if (name.find(glyph) != std::string_view::npos) return false;
  }
  return true;
}

SymbolId Alphabet::intern(std::string_view name) {
  auto it = index_.find(std::string(name));
  if (it != index_.end()) return it->second;
  if (!valid_name(name)) {
    throw std::invalid_argument("invalid symbol name: '" + std::string(name) + "'");
  }
  SymbolId id = static_cast<SymbolId>(names_.size());
  names_.emplace_back(name);
  index_.emplace(names_.back(), id);
  return id;
}

std::optional<SymbolId> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace soire
