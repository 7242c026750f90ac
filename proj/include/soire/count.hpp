#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "soire/regex.hpp"

namespace soire {

struct CountOptions {
  std::size_t state_limit = 1'000'000;
};

struct StateLimitError : std::runtime_error {
  explicit StateLimitError(std::size_t limit)
      : std::runtime_error("counting automaton exceeded the state limit of " +
                           std::to_string(limit) + " states") {}
};

/// Deterministic automaton over the expression's alphabet, built by iterated
/// derivatives on ACI-normalized expressions. Determinism removes counting
/// ambiguity (e.g. the factorization ambiguity of (a?b?)*), so path counts
/// are exact distinct-word counts.
class CountingDfa {
 public:
  static CountingDfa build(const Regex& r, const CountOptions& options = {});

  std::size_t state_count() const { return accepting_.size(); }
  const std::vector<SymbolId>& alphabet() const { return alphabet_; }

  bool accepts(const Word& w) const;

  /// counts[l] = number of distinct accepted words of length l, 0 <= l <= max_len.
  std::vector<mpz_class> count_by_length(int max_len) const;

 private:
  std::vector<SymbolId> alphabet_;
  // transitions_[state][symbol index] = target state or -1 (reject)
  std::vector<std::vector<int>> transitions_;
  std::vector<bool> accepting_;
};

/// Exact per-length counts of distinct words in L(r), lengths 0..max_len.
std::vector<mpz_class> count_words(const Regex& r, int max_len,
                                   const CountOptions& options = {});

/// 2m+1 where m is the number of symbol leaves of r.
int ell_max(const Regex& r);

}  // namespace soire
