#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

#include "soire/regex.hpp"

namespace soire {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at byte " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

/// Parses an expression over the given interning table, interning new symbols.
///
/// Metacharacters: | & ? * + ( ) and the explicit concatenation dot (U+00B7);
/// concatenation may also be implicit. "ε"/"EPS" denote the empty word,
/// "∅"/"EMPTY" the empty language. A maximal run of name characters is one
/// symbol if the run is already interned, otherwise it is split into
/// single-character symbols; multi-character names must be whitespace-separated.
Regex parse(std::string_view text, Alphabet& alphabet);

/// Canonical text form: minimal parentheses, implicit concatenation, operand
/// order preserved. Deterministic; parse(print(r)) == r.
/// `display_names` optionally overrides symbol spellings (abbreviation maps).
std::string print(const Regex& r, const Alphabet& alphabet,
                  const std::unordered_map<SymbolId, std::string>* display_names =
                      nullptr);

/// Token count of the canonical form, counting symbols, all operators, one
/// explicit concatenation dot between adjacent Concat operands, and both
/// parentheses of every printed group.
int layout_length(const Regex& r);

/// Splits a whitespace-separated word over the table; runs resolve like in
/// parse(). Unknown characters are interned.
Word parse_word(std::string_view text, Alphabet& alphabet);

}  // namespace soire
