#include "soire/match.hpp"

#include <algorithm>
#include <map>

namespace soire {

bool nullable(const Regex& r) {
  switch (r.kind()) {
    case RegexKind::kEmpty:
    case RegexKind::kSymbol:
      return false;
    case RegexKind::kEpsilon:
    case RegexKind::kStar:
    case RegexKind::kOpt:
      return true;
    case RegexKind::kPlus:
      return nullable(r.child());
    case RegexKind::kUnion:
      return std::any_of(r.children().begin(), r.children().end(),
                         [](const Regex& c) { return nullable(c); });
    default:  // Concat, Interleave
      return std::all_of(r.children().begin(), r.children().end(),
                         [](const Regex& c) { return nullable(c); });
  }
}

Regex normalize(const Regex& r) {
  switch (r.kind()) {
    case RegexKind::kEmpty:
    case RegexKind::kEpsilon:
    case RegexKind::kSymbol:
      return r;
    case RegexKind::kStar: {
      Regex c = normalize(r.child());
      if (c.is_epsilon()) return Regex::epsilon();
      // (r*)* = (r+)* = (r?)* = r*
      if (c.kind() == RegexKind::kStar) return c;
      if (c.kind() == RegexKind::kPlus || c.kind() == RegexKind::kOpt) {
        return Regex::star(c.child());
      }
      return Regex::star(std::move(c));
    }
    case RegexKind::kPlus: {
      Regex c = normalize(r.child());
      if (c.is_epsilon()) return Regex::epsilon();
      if (c.kind() == RegexKind::kStar) return c;
      if (c.kind() == RegexKind::kOpt) return Regex::star(c.child());
      if (c.kind() == RegexKind::kPlus) return c;
      return Regex::plus(std::move(c));
    }
    case RegexKind::kOpt: {
      Regex c = normalize(r.child());
      if (nullable(c)) return c;
      return Regex::opt(std::move(c));
    }
    case RegexKind::kConcat: {
      std::vector<Regex> parts;
      for (const auto& c : r.children()) {
        Regex n = normalize(c);
        if (n.is_empty()) return Regex::empty();
        if (!n.is_epsilon()) parts.push_back(std::move(n));
      }
      return Regex::concatenation(std::move(parts));
    }
    case RegexKind::kInterleave: {
      std::vector<Regex> parts;
      for (const auto& c : r.children()) {
        Regex n = normalize(c);
        if (n.is_empty()) return Regex::empty();
        if (!n.is_epsilon()) parts.push_back(std::move(n));
      }
      std::sort(parts.begin(), parts.end(), [](const Regex& a, const Regex& b) {
        return a.structural_key() < b.structural_key();
      });
      return Regex::interleaving(std::move(parts));
    }
    default: {  // Union
      std::vector<Regex> parts;
      for (const auto& c : r.children()) {
        Regex n = normalize(c);
        if (!n.is_empty()) parts.push_back(std::move(n));
      }
      std::sort(parts.begin(), parts.end(), [](const Regex& a, const Regex& b) {
        return a.structural_key() < b.structural_key();
      });
      parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
      return Regex::alternation(std::move(parts));
    }
  }
}

Regex derivative(const Regex& r, SymbolId a) {
  switch (r.kind()) {
    case RegexKind::kEmpty:
    case RegexKind::kEpsilon:
      return Regex::empty();
    case RegexKind::kSymbol:
      return r.symbol_id() == a ? Regex::epsilon() : Regex::empty();
    case RegexKind::kUnion: {
      std::vector<Regex> parts;
      for (const auto& c : r.children()) parts.push_back(derivative(c, a));
      return Regex::alternation(std::move(parts));
    }
    case RegexKind::kConcat: {
      auto cs = r.children();
      std::vector<Regex> alts;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        std::vector<Regex> tail{derivative(cs[i], a)};
        tail.insert(tail.end(), cs.begin() + i + 1, cs.end());
        alts.push_back(Regex::concatenation(std::move(tail)));
        if (!nullable(cs[i])) break;
      }
      return Regex::alternation(std::move(alts));
    }
    case RegexKind::kInterleave: {
      auto cs = r.children();
      std::vector<Regex> alts;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        std::vector<Regex> ops(cs.begin(), cs.end());
        ops[i] = derivative(cs[i], a);
        alts.push_back(Regex::interleaving(std::move(ops)));
      }
      return Regex::alternation(std::move(alts));
    }
    case RegexKind::kStar:
      return Regex::concatenation({derivative(r.child(), a), r});
    case RegexKind::kPlus:
      return Regex::concatenation({derivative(r.child(), a),
                                   Regex::star(r.child())});
    default:  // Opt
      return derivative(r.child(), a);
  }
}

bool matches(const Regex& r, const Word& w) {
  Regex d = normalize(r);
  for (SymbolId a : w) {
    if (d.is_empty()) return false;
    d = normalize(derivative(d, a));
  }
  return nullable(d);
}

namespace {

void shuffle_rec(const Word& u, std::size_t i, const Word& v, std::size_t j,
                 Word& acc, std::set<Word>& out) {
  if (i == u.size() && j == v.size()) {
    out.insert(acc);
    return;
  }
  if (i < u.size()) {
    acc.push_back(u[i]);
    shuffle_rec(u, i + 1, v, j, acc, out);
    acc.pop_back();
  }
  if (j < v.size()) {
    acc.push_back(v[j]);
    shuffle_rec(u, i, v, j + 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::set<Word> shuffle(const Word& u, const Word& v) {
  std::set<Word> out;
  Word acc;
  acc.reserve(u.size() + v.size());
  shuffle_rec(u, 0, v, 0, acc, out);
  return out;
}

}  // namespace soire
