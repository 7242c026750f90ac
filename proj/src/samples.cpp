#include "soire/samples.hpp"

#include <istream>
#include <sstream>
#include <string>
#include <unordered_set>

namespace soire {

std::vector<SymbolId> SampleSet::symbols_in_order() const {
  std::vector<SymbolId> order;
  std::unordered_set<SymbolId> seen;
  for (const auto& w : words_) {
    for (SymbolId s : w) {
      if (seen.insert(s).second) order.push_back(s);
    }
  }
  return order;
}

std::set<SymbolId> SampleSet::symbol_set() const {
  std::set<SymbolId> out;
  for (const auto& w : words_) out.insert(w.begin(), w.end());
  return out;
}

SampleSet SampleSet::deduplicated() const {
  SampleSet out(alphabet_);
  std::set<Word> seen;
  for (const auto& w : words_) {
    if (seen.insert(w).second) out.add(w);
  }
  return out;
}

SampleSet SampleSet::without_epsilon_words() const {
  SampleSet out(alphabet_);
  for (const auto& w : words_) {
    if (!w.empty()) out.add(w);
  }
  return out;
}

SampleSet project(const SampleSet& samples, const std::set<SymbolId>& keep) {
  SampleSet out(samples.alphabet_ptr());
  for (const auto& w : samples.words()) {
    Word p;
    for (SymbolId s : w) {
      if (keep.count(s)) p.push_back(s);
    }
    out.add(std::move(p));
  }
  return out;
}

SampleSet read_samples(std::istream& in, std::shared_ptr<Alphabet> alphabet) {
  SampleSet out(alphabet ? std::move(alphabet) : std::make_shared<Alphabet>());
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() == '#') continue;
    Word w;
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) w.push_back(out.alphabet().intern(tok));
    // A blank line is an epsilon-word; trailing whitespace-only lines count too.
    out.add(std::move(w));
  }
  return out;
}

}  // namespace soire
