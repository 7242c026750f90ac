#include "soire/simplify.hpp"

#include "soire/match.hpp"

namespace soire {

namespace {

// One local rewrite at the root; children are already simplified.
Regex rewrite(const Regex& r) {
  switch (r.kind()) {
    case RegexKind::kUnion: {
      bool had_eps = false;
      std::vector<Regex> rest;
      for (const auto& c : r.children()) {
        if (c.is_epsilon()) had_eps = true;
        else rest.push_back(c);
      }
      if (!had_eps) return r;
      if (rest.empty()) return Regex::epsilon();
      Regex body = Regex::alternation(std::move(rest));
      return nullable(body) ? body : Regex::opt(std::move(body));
    }
    case RegexKind::kConcat:
    case RegexKind::kInterleave: {
      std::vector<Regex> rest;
      for (const auto& c : r.children()) {
        if (!c.is_epsilon()) rest.push_back(c);
      }
      if (rest.size() == r.children().size()) return r;
      return r.kind() == RegexKind::kConcat
                 ? Regex::concatenation(std::move(rest))
                 : Regex::interleaving(std::move(rest));
    }
    case RegexKind::kOpt: {
      const Regex& c = r.child();
      if (nullable(c)) return c;  // covers (r?)? and (r*)?
      if (c.kind() == RegexKind::kPlus) return Regex::star(c.child());
      return r;
    }
    case RegexKind::kPlus: {
      const Regex& c = r.child();
      if (c.is_epsilon()) return Regex::epsilon();
      if (c.kind() == RegexKind::kOpt) return Regex::star(c.child());
      if (c.kind() == RegexKind::kStar) return c;
      return r;
    }
    case RegexKind::kStar: {
      const Regex& c = r.child();
      if (c.is_epsilon()) return Regex::epsilon();
      if (c.kind() == RegexKind::kPlus || c.kind() == RegexKind::kOpt ||
          c.kind() == RegexKind::kStar) {
        return Regex::star(c.child());
      }
      return r;
    }
    default:
      return r;
  }
}

}  // namespace

Regex simplify(const Regex& r) {
  Regex out = r;
  if (!out.children().empty()) {
    std::vector<Regex> kids;
    kids.reserve(out.children().size());
    for (const auto& c : out.children()) kids.push_back(simplify(c));
    switch (out.kind()) {
      case RegexKind::kUnion: out = Regex::alternation(std::move(kids)); break;
      case RegexKind::kConcat: out = Regex::concatenation(std::move(kids)); break;
      case RegexKind::kInterleave:
        out = Regex::interleaving(std::move(kids));
        break;
      case RegexKind::kStar: out = Regex::star(std::move(kids.front())); break;
      case RegexKind::kPlus: out = Regex::plus(std::move(kids.front())); break;
      default: out = Regex::opt(std::move(kids.front())); break;
    }
  }
  for (;;) {
    Regex next = rewrite(out);
    if (next == out) return out;
    out = simplify(next);
  }
}

}  // namespace soire
