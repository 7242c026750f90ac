#include "soire/text.hpp"

#include <cctype>
#include <vector>

namespace soire {

namespace {

constexpr std::string_view kDotGlyph = "·";
constexpr std::string_view kEpsGlyph = "ε";
constexpr std::string_view kEmptyGlyph = "∅";

enum class TokKind {
  kSymbol,
  kEpsilon,
  kEmptySet,
  kBar,
  kAmp,
  kDot,
  kOpt,
  kStar,
  kPlus,
  kLParen,
  kRParen,
  kEnd,
};

struct Token {
  TokKind kind;
  SymbolId sym = 0;
  std::size_t pos = 0;
};

bool is_meta_byte(char c) {
  return c == '|' || c == '&' || c == '?' || c == '*' || c == '+' || c == '(' ||
         c == ')';
}

std::size_t utf8_len(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xe) return 3;
  if ((lead >> 3) == 0x1e) return 4;
  return 1;  // malformed; consume one byte
}

std::size_t codepoint_count(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size(); i += utf8_len(s[i])) ++n;
  return n;
}

class Lexer {
 public:
  Lexer(std::string_view text, Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {
    run();
  }

  std::vector<Token> take() { return std::move(tokens_); }

 private:
  void run() {
    std::size_t i = 0;
    while (i < text_.size()) {
      char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (is_meta_byte(c)) {
        tokens_.push_back({meta_kind(c), 0, i});
        ++i;
        continue;
      }
      if (glyph_at(i, kDotGlyph)) {
        tokens_.push_back({TokKind::kDot, 0, i});
        i += kDotGlyph.size();
        continue;
      }
      if (glyph_at(i, kEpsGlyph)) {
        tokens_.push_back({TokKind::kEpsilon, 0, i});
        i += kEpsGlyph.size();
        continue;
      }
      if (glyph_at(i, kEmptyGlyph)) {
        tokens_.push_back({TokKind::kEmptySet, 0, i});
        i += kEmptyGlyph.size();
        continue;
      }
      std::size_t start = i;
      while (i < text_.size() && name_byte_at(i)) i += utf8_len(text_[i]);
      if (i == start) {
        throw ParseError("unknown character", i);
      }
      resolve_run(text_.substr(start, i - start), start);
    }
    tokens_.push_back({TokKind::kEnd, 0, text_.size()});
  }

  static TokKind meta_kind(char c) {
    switch (c) {
      case '|': return TokKind::kBar;
      case '&': return TokKind::kAmp;
      case '?': return TokKind::kOpt;
      case '*': return TokKind::kStar;
      case '+': return TokKind::kPlus;
      case '(': return TokKind::kLParen;
      default: return TokKind::kRParen;
    }
  }

  bool glyph_at(std::size_t i, std::string_view glyph) const {
    return text_.substr(i, glyph.size()) == glyph;
  }

  bool name_byte_at(std::size_t i) const {
    char c = text_[i];
    if (std::isspace(static_cast<unsigned char>(c)) || is_meta_byte(c)) return false;
    return !glyph_at(i, kDotGlyph) && !glyph_at(i, kEpsGlyph) &&
           !glyph_at(i, kEmptyGlyph);
  }

  // A maximal run that is already interned is one symbol; the ASCII aliases
  // stand for epsilon/empty-set unless shadowed by an interned name; any other
  // run is split into single-character symbols.
  void resolve_run(std::string_view run, std::size_t pos) {
    if (auto id = alphabet_.find(run)) {
      tokens_.push_back({TokKind::kSymbol, *id, pos});
      return;
    }
    if (run == "EPS") {
      tokens_.push_back({TokKind::kEpsilon, 0, pos});
      return;
    }
    if (run == "EMPTY") {
      tokens_.push_back({TokKind::kEmptySet, 0, pos});
      return;
    }
    for (std::size_t i = 0; i < run.size();) {
      std::size_t n = utf8_len(run[i]);
      tokens_.push_back(
          {TokKind::kSymbol, alphabet_.intern(run.substr(i, n)), pos + i});
      i += n;
    }
  }

  std::string_view text_;
  Alphabet& alphabet_;
  std::vector<Token> tokens_;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Regex parse_expression() {
    Regex r = parse_union();
    expect(TokKind::kEnd, "unexpected trailing input");
    return r;
  }

 private:
  Regex parse_union() {
    std::vector<Regex> parts{parse_interleave()};
    while (peek().kind == TokKind::kBar) {
      ++pos_;
      parts.push_back(parse_interleave());
    }
    return Regex::alternation(std::move(parts));
  }

  Regex parse_interleave() {
    std::vector<Regex> parts{parse_concat()};
    while (peek().kind == TokKind::kAmp) {
      ++pos_;
      parts.push_back(parse_concat());
    }
    return Regex::interleaving(std::move(parts));
  }

  Regex parse_concat() {
    std::vector<Regex> parts;
    if (!starts_atom(peek().kind)) {
      throw ParseError("expected expression", peek().pos);
    }
    parts.push_back(parse_postfix());
    for (;;) {
      if (peek().kind == TokKind::kDot) {
        ++pos_;
        if (!starts_atom(peek().kind)) {
          throw ParseError("expected expression after concatenation dot",
                           peek().pos);
        }
        parts.push_back(parse_postfix());
      } else if (starts_atom(peek().kind)) {
        parts.push_back(parse_postfix());
      } else {
        break;
      }
    }
    return Regex::concatenation(std::move(parts));
  }

  Regex parse_postfix() {
    Regex r = parse_atom();
    for (;;) {
      switch (peek().kind) {
        case TokKind::kOpt: r = Regex::opt(std::move(r)); ++pos_; break;
        case TokKind::kStar: r = Regex::star(std::move(r)); ++pos_; break;
        case TokKind::kPlus: r = Regex::plus(std::move(r)); ++pos_; break;
        default: return r;
      }
    }
  }

  Regex parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::kSymbol:
        ++pos_;
        return Regex::symbol(t.sym);
      case TokKind::kEpsilon:
        ++pos_;
        return Regex::epsilon();
      case TokKind::kEmptySet:
        ++pos_;
        return Regex::empty();
      case TokKind::kLParen: {
        ++pos_;
        Regex r = parse_union();
        expect(TokKind::kRParen, "missing ')'");
        return r;
      }
      default:
        throw ParseError("expected expression", t.pos);
    }
  }

  static bool starts_atom(TokKind k) {
    return k == TokKind::kSymbol || k == TokKind::kEpsilon ||
           k == TokKind::kEmptySet || k == TokKind::kLParen;
  }

  const Token& peek() const { return tokens_[pos_]; }

  void expect(TokKind k, const char* msg) {
    if (peek().kind != k) throw ParseError(msg, peek().pos);
    ++pos_;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---- canonical layout ----

enum class PKind { kName, kMeta, kDot };

struct PTok {
  PKind kind;
  std::string text;
};

int prec(const Regex& r) {
  switch (r.kind()) {
    case RegexKind::kUnion: return 0;
    case RegexKind::kInterleave: return 1;
    case RegexKind::kConcat: return 2;
    case RegexKind::kStar:
    case RegexKind::kPlus:
    case RegexKind::kOpt: return 3;
    default: return 4;
  }
}

using NameFn = std::string (*)(SymbolId, const void*);

void layout_rec(const Regex& r, int ctx, std::vector<PTok>& out, NameFn name,
                const void* name_ctx) {
  int p = prec(r);
  bool parens = p < ctx;
  if (parens) out.push_back({PKind::kMeta, "("});
  switch (r.kind()) {
    case RegexKind::kEmpty:
      out.push_back({PKind::kMeta, std::string(kEmptyGlyph)});
      break;
    case RegexKind::kEpsilon:
      out.push_back({PKind::kMeta, std::string(kEpsGlyph)});
      break;
    case RegexKind::kSymbol:
      out.push_back({PKind::kName, name(r.symbol_id(), name_ctx)});
      break;
    case RegexKind::kStar:
    case RegexKind::kPlus:
    case RegexKind::kOpt:
      layout_rec(r.child(), 3, out, name, name_ctx);
      out.push_back({PKind::kMeta, r.kind() == RegexKind::kStar  ? "*"
                                   : r.kind() == RegexKind::kPlus ? "+"
                                                                  : "?"});
      break;
    case RegexKind::kUnion:
    case RegexKind::kInterleave:
    case RegexKind::kConcat: {
      int child_ctx = p + 1;
      const char* sep = r.kind() == RegexKind::kUnion        ? "|"
                        : r.kind() == RegexKind::kInterleave ? "&"
                                                             : nullptr;
      bool first = true;
      for (const auto& c : r.children()) {
        if (!first) {
          if (sep) out.push_back({PKind::kMeta, sep});
          else out.push_back({PKind::kDot, std::string(kDotGlyph)});
        }
        first = false;
        layout_rec(c, child_ctx, out, name, name_ctx);
      }
      break;
    }
  }
  if (parens) out.push_back({PKind::kMeta, ")"});
}

std::string table_name(SymbolId id, const void* ctx) {
  return static_cast<const Alphabet*>(ctx)->name(id);
}

struct DisplayCtx {
  const Alphabet* alphabet;
  const std::unordered_map<SymbolId, std::string>* names;
};

std::string display_name(SymbolId id, const void* ctx) {
  const auto* d = static_cast<const DisplayCtx*>(ctx);
  if (d->names) {
    auto it = d->names->find(id);
    if (it != d->names->end()) return it->second;
  }
  return d->alphabet->name(id);
}

// Adjacent single-character symbols re-lex as one run; spaces are needed when
// any name is multi-character or a joined run collides with an interned name.
bool needs_spacing(const std::vector<PTok>& toks, const Alphabet& alphabet) {
  std::string run;
  int run_tokens = 0;
  auto check_run = [&]() {
    bool collides =
        run_tokens > 1 && alphabet.find(run).has_value();
    run.clear();
    run_tokens = 0;
    return collides;
  };
  for (const auto& t : toks) {
    if (t.kind == PKind::kName) {
      if (codepoint_count(t.text) > 1) return true;
      run += t.text;
      ++run_tokens;
    } else if (t.kind != PKind::kDot) {
      if (check_run()) return true;
    }
  }
  return check_run();
}

}  // namespace

Regex parse(std::string_view text, Alphabet& alphabet) {
  Parser parser(Lexer(text, alphabet).take());
  return parser.parse_expression();
}

std::string print(const Regex& r, const Alphabet& alphabet,
                  const std::unordered_map<SymbolId, std::string>* display_names) {
  std::vector<PTok> toks;
  DisplayCtx ctx{&alphabet, display_names};
  layout_rec(r, 0, toks, display_name, &ctx);
  bool spaced = needs_spacing(toks, alphabet);
  std::string out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].kind == PKind::kDot) {
      if (spaced && i > 0 && toks[i - 1].kind == PKind::kName &&
          i + 1 < toks.size() && toks[i + 1].kind == PKind::kName) {
        out += ' ';
      }
      continue;
    }
    out += toks[i].text;
  }
  return out;
}

int layout_length(const Regex& r) {
  std::vector<PTok> toks;
  auto name = [](SymbolId, const void*) { return std::string("x"); };
  layout_rec(r, 0, toks, static_cast<NameFn>(name), nullptr);
  return static_cast<int>(toks.size());
}

Word parse_word(std::string_view text, Alphabet& alphabet) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::string_view run = text.substr(start, i - start);
    if (auto id = alphabet.find(run)) {
      w.push_back(*id);
    } else {
      for (std::size_t j = 0; j < run.size();) {
        std::size_t n = utf8_len(run[j]);
        w.push_back(alphabet.intern(run.substr(j, n)));
        j += n;
      }
    }
  }
  return w;
}

}  // namespace soire
