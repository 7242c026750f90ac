#include "soire/count.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "soire/match.hpp"

namespace soire {

CountingDfa CountingDfa::build(const Regex& r, const CountOptions& options) {
  CountingDfa dfa;
  auto symbols = symbols_of(r);
  dfa.alphabet_.assign(symbols.begin(), symbols.end());

  std::map<std::string, int> state_of;
  std::vector<Regex> states;
  auto add_state = [&](const Regex& q) {
    auto [it, inserted] = state_of.emplace(q.structural_key(),
                                           static_cast<int>(states.size()));
    if (inserted) {
      if (states.size() >= options.state_limit) {
        throw StateLimitError(options.state_limit);
      }
      states.push_back(q);
      dfa.transitions_.emplace_back(dfa.alphabet_.size(), -1);
      dfa.accepting_.push_back(nullable(q));
    }
    return it->second;
  };

  add_state(normalize(r));
  for (std::size_t q = 0; q < states.size(); ++q) {
    for (std::size_t k = 0; k < dfa.alphabet_.size(); ++k) {
      Regex d = normalize(derivative(states[q], dfa.alphabet_[k]));
      if (d.is_empty()) continue;
      dfa.transitions_[q][k] = add_state(d);
    }
  }
  return dfa;
}

bool CountingDfa::accepts(const Word& w) const {
  int q = 0;
  for (SymbolId s : w) {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), s);
    if (it == alphabet_.end() || *it != s) return false;
    q = transitions_[q][it - alphabet_.begin()];
    if (q < 0) return false;
  }
  return accepting_[q];
}

std::vector<mpz_class> CountingDfa::count_by_length(int max_len) const {
  std::vector<mpz_class> counts(max_len + 1, 0);
  std::vector<mpz_class> ways(state_count(), 0);
  ways[0] = 1;
  for (int len = 0;; ++len) {
    mpz_class total = 0;
    for (std::size_t q = 0; q < ways.size(); ++q) {
      if (accepting_[q]) total += ways[q];
    }
    counts[len] = total;
    if (len == max_len) break;
    std::vector<mpz_class> next(state_count(), 0);
    for (std::size_t q = 0; q < ways.size(); ++q) {
      if (ways[q] == 0) continue;
      for (int t : transitions_[q]) {
        if (t >= 0) next[t] += ways[q];
      }
    }
    ways = std::move(next);
  }
  return counts;
}

std::vector<mpz_class> count_words(const Regex& r, int max_len,
                                   const CountOptions& options) {
  return CountingDfa::build(r, options).count_by_length(max_len);
}

int ell_max(const Regex& r) { return 2 * symbol_leaf_count(r) + 1; }

}  // namespace soire
