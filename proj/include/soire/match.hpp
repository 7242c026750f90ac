#pragma once

#include <set>

#include "soire/regex.hpp"

namespace soire {

/// True iff the empty word is in L(r).
bool nullable(const Regex& r);

/// ACI-canonical form: Union children sorted and deduplicated, Interleave
/// children sorted, unit/zero laws applied. Language-preserving; keeps the
/// derivative closure finite.
Regex normalize(const Regex& r);

/// Brzozowski derivative extended to interleaving:
/// d_a(r & s) = (d_a r) & s | r & (d_a s).
Regex derivative(const Regex& r, SymbolId a);

/// Membership by repeated derivation.
bool matches(const Regex& r, const Word& w);

/// All interleavings of u and v; size is C(|u|+|v|, |u|) when the two words
/// share no symbol.
std::set<Word> shuffle(const Word& u, const Word& v);

}  // namespace soire
