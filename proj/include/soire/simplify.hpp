#pragma once

#include "soire/regex.hpp"

namespace soire {

/// Language-preserving cleanup, applied to fixpoint:
///   r|eps -> r? (or r itself when r is already nullable), (r?)? -> r?,
///   (r+)? -> r*, (r*)? -> r*, (r?)+ -> r*, (r*)+ -> r*, (r+)* -> r*,
///   eps units dropped from Concat/Interleave, singleton n-ary -> child.
Regex simplify(const Regex& r);

}  // namespace soire
