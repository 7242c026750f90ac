#pragma once

// Shared helpers for the test suites: deterministic random generators and
// small independent oracles (bounded language enumeration, an independent
// shuffle and nesting-depth recursion) used to cross-check the library.

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "soire/infer.hpp"
#include "soire/match.hpp"
#include "soire/regex.hpp"
#include "soire/samples.hpp"
#include "soire/text.hpp"

namespace testutil {

using soire::Alphabet;
using soire::Regex;
using soire::SampleSet;
using soire::SymbolId;
using soire::Word;

using Rng = std::mt19937_64;

constexpr std::uint64_t kSeed = 20260810;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// ---- independent language enumeration (the brute-force oracle) ----

using Lang = std::set<Word>;

inline Lang concat_bounded(const Lang& a, const Lang& b, std::size_t max_len) {
  Lang out;
  for (const auto& u : a) {
    for (const auto& v : b) {
      if (u.size() + v.size() > max_len) continue;
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.insert(std::move(w));
    }
  }
  return out;
}

inline void shuffle_into(const Word& u, std::size_t i, const Word& v,
                         std::size_t j, Word& acc, Lang& out) {
  if (i == u.size() && j == v.size()) {
    out.insert(acc);
    return;
  }
  if (i < u.size()) {
    acc.push_back(u[i]);
    shuffle_into(u, i + 1, v, j, acc, out);
    acc.pop_back();
  }
  if (j < v.size()) {
    acc.push_back(v[j]);
    shuffle_into(u, i, v, j + 1, acc, out);
    acc.pop_back();
  }
}

inline Lang shuffle_bounded(const Lang& a, const Lang& b, std::size_t max_len) {
  Lang out;
  for (const auto& u : a) {
    for (const auto& v : b) {
      if (u.size() + v.size() > max_len) continue;
      Word acc;
      shuffle_into(u, 0, v, 0, acc, out);
    }
  }
  return out;
}

// All words of L(r) of length <= max_len, by structural recursion; shares no
// code with the derivative matcher or the counting automaton.
inline Lang enumerate_language(const Regex& r, std::size_t max_len) {
  using soire::RegexKind;
  switch (r.kind()) {
    case RegexKind::kEmpty:
      return {};
    case RegexKind::kEpsilon:
      return {Word{}};
    case RegexKind::kSymbol:
      return max_len >= 1 ? Lang{Word{r.symbol_id()}} : Lang{};
    case RegexKind::kUnion: {
      Lang out;
      for (const auto& c : r.children()) {
        Lang sub = enumerate_language(c, max_len);
        out.insert(sub.begin(), sub.end());
      }
      return out;
    }
    case RegexKind::kConcat: {
      Lang out{Word{}};
      for (const auto& c : r.children()) {
        out = concat_bounded(out, enumerate_language(c, max_len), max_len);
      }
      return out;
    }
    case RegexKind::kInterleave: {
      Lang out{Word{}};
      for (const auto& c : r.children()) {
        out = shuffle_bounded(out, enumerate_language(c, max_len), max_len);
      }
      return out;
    }
    case RegexKind::kStar:
    case RegexKind::kPlus: {
      Lang base = enumerate_language(r.child(), max_len);
      Lang closure{Word{}};
      for (;;) {
        Lang next = concat_bounded(closure, base, max_len);
        std::size_t before = closure.size();
        closure.insert(next.begin(), next.end());
        if (closure.size() == before) break;
      }
      if (r.kind() == RegexKind::kStar) return closure;
      return concat_bounded(base, closure, max_len);
    }
    default:  // Opt
    {
      Lang out = enumerate_language(r.child(), max_len);
      out.insert(Word{});
      return out;
    }
  }
}

// Independent re-statement of the three nesting-depth rules.
inline int nd_oracle(const Regex& r) {
  using soire::RegexKind;
  switch (r.kind()) {
    case RegexKind::kEmpty:
    case RegexKind::kEpsilon:
    case RegexKind::kSymbol:
      return 0;
    case RegexKind::kStar:
    case RegexKind::kPlus:
    case RegexKind::kOpt:
      return 1 + nd_oracle(r.child());
    default: {
      int m = 0;
      for (const auto& c : r.children()) m = std::max(m, nd_oracle(c));
      return m;
    }
  }
}

// ---- random instances ----

inline Word random_word(Rng& rng, int alphabet_size, int max_len) {
  Word w(rand_int(rng, 0, max_len));
  for (auto& s : w) s = static_cast<SymbolId>(rand_int(rng, 0, alphabet_size - 1));
  return w;
}

inline SampleSet random_samples(Rng& rng, int max_alphabet, int max_word_len,
                                int max_words, bool allow_epsilon = true) {
  auto alphabet = std::make_shared<Alphabet>();
  int k = rand_int(rng, 1, max_alphabet);
  for (int i = 0; i < k; ++i) alphabet->intern(std::string(1, char('a' + i)));
  SampleSet s(alphabet);
  int n = rand_int(rng, 1, max_words);
  for (int i = 0; i < n; ++i) {
    Word w = random_word(rng, k, max_word_len);
    if (!allow_epsilon && w.empty()) w.push_back(0);
    s.add(std::move(w));
  }
  return s;
}

// Random expression over symbols 0..alphabet_size-1; repeats allowed.
inline Regex random_regex(Rng& rng, int alphabet_size, int depth) {
  if (depth == 0 || rand_int(rng, 0, 3) == 0) {
    if (rand_int(rng, 0, 7) == 0) return Regex::epsilon();
    return Regex::symbol(static_cast<SymbolId>(rand_int(rng, 0, alphabet_size - 1)));
  }
  switch (rand_int(rng, 0, 5)) {
    case 0: {
      std::vector<Regex> kids;
      for (int i = rand_int(rng, 2, 3); i > 0; --i) {
        kids.push_back(random_regex(rng, alphabet_size, depth - 1));
      }
      return Regex::alternation(std::move(kids));
    }
    case 1: {
      std::vector<Regex> kids;
      for (int i = rand_int(rng, 2, 3); i > 0; --i) {
        kids.push_back(random_regex(rng, alphabet_size, depth - 1));
      }
      return Regex::concatenation(std::move(kids));
    }
    case 2: {
      std::vector<Regex> kids;
      for (int i = 2; i > 0; --i) {
        kids.push_back(random_regex(rng, alphabet_size, depth - 1));
      }
      return Regex::interleaving(std::move(kids));
    }
    case 3:
      return Regex::star(random_regex(rng, alphabet_size, depth - 1));
    case 4:
      return Regex::plus(random_regex(rng, alphabet_size, depth - 1));
    default:
      return Regex::opt(random_regex(rng, alphabet_size, depth - 1));
  }
}

// Random expression in which every symbol occurs at most once.
inline Regex random_soire(Rng& rng, int alphabet_size, int depth) {
  std::vector<SymbolId> pool(alphabet_size);
  for (int i = 0; i < alphabet_size; ++i) pool[i] = static_cast<SymbolId>(i);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::size_t next = 0;
  // Recursive shape with leaves drawn from the shuffled pool.
  std::function<Regex(int)> gen = [&](int d) -> Regex {
    if (next >= pool.size() || d == 0 || rand_int(rng, 0, 2) == 0) {
      if (next >= pool.size() || rand_int(rng, 0, 6) == 0) return Regex::epsilon();
      return Regex::symbol(pool[next++]);
    }
    switch (rand_int(rng, 0, 5)) {
      case 0:
      case 1: {
        std::vector<Regex> kids;
        for (int i = rand_int(rng, 2, 3); i > 0; --i) kids.push_back(gen(d - 1));
        return rand_int(rng, 0, 1) ? Regex::alternation(std::move(kids))
                                   : Regex::concatenation(std::move(kids));
      }
      case 2: {
        std::vector<Regex> kids{gen(d - 1), gen(d - 1)};
        return Regex::interleaving(std::move(kids));
      }
      case 3:
        return Regex::star(gen(d - 1));
      case 4:
        return Regex::plus(gen(d - 1));
      default:
        return Regex::opt(gen(d - 1));
    }
  };
  return gen(depth);
}

// ---- fixture sample sets ----

// The twelve-word running example (the corrected fifth word spells the
// automaton the worked figures show).
inline SampleSet running_example() {
  auto alphabet = std::make_shared<Alphabet>();
  SampleSet s(alphabet);
  for (const char* w : {"begk", "aabengk", "abegjj", "beg", "beghk", "behgj",
                        "belhg", "bheg", "bfcmd", "bfdm", "afmcd", "adf"}) {
    Word word;
    for (const char* p = w; *p; ++p) word.push_back(alphabet->intern(std::string(1, *p)));
    s.add(std::move(word));
  }
  return s;
}

inline SampleSet samples_from(std::initializer_list<const char*> words,
                              std::shared_ptr<Alphabet> alphabet = nullptr) {
  if (!alphabet) alphabet = std::make_shared<Alphabet>();
  SampleSet s(alphabet);
  for (const char* w : words) {
    Word word;
    for (const char* p = w; *p; ++p) {
      word.push_back(alphabet->intern(std::string(1, *p)));
    }
    s.add(std::move(word));
  }
  return s;
}

inline Word word_from(const char* letters, Alphabet& alphabet) {
  Word w;
  for (const char* p = letters; *p; ++p) {
    w.push_back(alphabet.intern(std::string(1, *p)));
  }
  return w;
}

}  // namespace testutil
