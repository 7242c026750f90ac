#pragma once

#include <iosfwd>
#include <memory>
#include <set>
#include <vector>

#include "soire/alphabet.hpp"

namespace soire {

/// Ordered collection of sample words over a shared interning table.
/// Duplicates and insertion order are preserved; both matter downstream
/// (multiplicities for datacost, first-appearance order for determinism).
class SampleSet {
 public:
  SampleSet() : alphabet_(std::make_shared<Alphabet>()) {}
  explicit SampleSet(std::shared_ptr<Alphabet> alphabet)
      : alphabet_(std::move(alphabet)) {}

  void add(Word w) { words_.push_back(std::move(w)); }

  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  Alphabet& alphabet() { return *alphabet_; }
  const Alphabet& alphabet() const { return *alphabet_; }
  const std::shared_ptr<Alphabet>& alphabet_ptr() const { return alphabet_; }

  /// Symbols in order of first appearance across the words.
  std::vector<SymbolId> symbols_in_order() const;

  std::set<SymbolId> symbol_set() const;

  SampleSet deduplicated() const;

  /// Copy without empty words.
  SampleSet without_epsilon_words() const;

 private:
  std::shared_ptr<Alphabet> alphabet_;
  std::vector<Word> words_;
};

/// Projects every word onto `keep`; empty projections become epsilon-words.
/// Order and multiplicity are preserved; the interning table is shared.
SampleSet project(const SampleSet& samples, const std::set<SymbolId>& keep);

/// One word per line, tokens whitespace-separated, blank line = epsilon-word,
/// lines starting with '#' ignored.
SampleSet read_samples(std::istream& in,
                       std::shared_ptr<Alphabet> alphabet = nullptr);

}  // namespace soire
