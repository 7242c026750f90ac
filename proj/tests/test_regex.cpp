#include "doctest.h"

#include "soire/match.hpp"
#include "soire/regex.hpp"
#include "soire/simplify.hpp"
#include "soire/text.hpp"

#include "testutil.hpp"

using namespace soire;
using testutil::Rng;

namespace {

Regex sym(Alphabet& a, const char* name) { return Regex::symbol(a.intern(name)); }

}  // namespace

TEST_CASE("parse builds flattened trees with the documented precedence") {
  Alphabet a;
  Regex r = parse("a(bc)?d+", a);
  REQUIRE(r.kind() == RegexKind::kConcat);
  REQUIRE(r.children().size() == 3);
  CHECK(r.children()[0] == sym(a, "a"));
  CHECK(r.children()[1] ==
        Regex::opt(Regex::concatenation({sym(a, "b"), sym(a, "c")})));
  CHECK(r.children()[2] == Regex::plus(sym(a, "d")));

  CHECK(parse("ε", a) == Regex::epsilon());
  CHECK(parse("EPS", a) == Regex::epsilon());
  CHECK(parse("∅", a) == Regex::empty());
  CHECK(parse("EMPTY", a) == Regex::empty());

  Regex t = parse("acfu(l?&m?)", a);
  REQUIRE(t.kind() == RegexKind::kConcat);
  REQUIRE(t.children().size() == 5);
  CHECK(t.children()[4] ==
        Regex::interleaving({Regex::opt(sym(a, "l")), Regex::opt(sym(a, "m"))}));

  // & binds tighter than | and looser than concatenation.
  Regex u = parse("ab&c|d", a);
  REQUIRE(u.kind() == RegexKind::kUnion);
  CHECK(u.children()[0] ==
        Regex::interleaving(
            {Regex::concatenation({sym(a, "a"), sym(a, "b")}), sym(a, "c")}));
  CHECK(u.children()[1] == sym(a, "d"));

  // Same-operator nesting flattens.
  CHECK(parse("a|b|c", a).children().size() == 3);
  CHECK(parse("a&b&c", a).children().size() == 3);
  CHECK(parse("a·b·c", a) == parse("abc", a));
}

TEST_CASE("parse resolves multi-character names against the table") {
  Alphabet a;
  a.intern("author");
  a.intern("title");
  Regex r = parse("author title?", a);
  REQUIRE(r.kind() == RegexKind::kConcat);
  CHECK(r.children()[0].symbol_id() == *a.find("author"));

  // An uninterned run splits per character.
  Regex s = parse("authortitle", a);  // not interned as a whole
  CHECK(symbol_leaf_count(s) == 11);
}

TEST_CASE("parse reports positions for malformed input") {
  Alphabet a;
  CHECK_THROWS_AS(parse("", a), ParseError);
  CHECK_THROWS_AS(parse("a|", a), ParseError);
  CHECK_THROWS_AS(parse("(a", a), ParseError);
  CHECK_THROWS_AS(parse("?a", a), ParseError);
  CHECK_THROWS_AS(parse("a)", a), ParseError);
  try {
    parse("ab(cd", a);
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("print emits canonical minimal-parenthesis text") {
  Alphabet a;
  auto roundtrip = [&](const char* text) {
    Regex r = parse(text, a);
    CHECK(print(r, a) == text);
  };
  roundtrip("acfu(l?&m?)");
  roundtrip("ε");
  roundtrip("∅");
  roundtrip("j+|k");
  roundtrip("a*b?(fm?&c?d|e(n|l)?g&h?)(j+|k)?");
  roundtrip("b*((a+(q*|d?)|m)&c(o*|f)&l*)|r");
  roundtrip("a(bc)?d+");

  // Multi-character names get separators.
  Alphabet b;
  b.intern("author");
  b.intern("title");
  Regex r = parse("author title+", b);
  CHECK(print(r, b) == "author title+");
  CHECK(parse(print(r, b), b) == r);
}

TEST_CASE("print avoids runs that would re-lex as an interned name") {
  Alphabet a;
  a.intern("ab");  // a collision candidate
  Regex r = Regex::concatenation({sym(a, "a"), sym(a, "b")});
  std::string text = print(r, a);
  CHECK(parse(text, a) == r);
}

TEST_CASE("is_soire detects repeated symbols") {
  Alphabet a;
  CHECK(is_soire(parse("a?(b?c&d*(e|f)?)", a)));
  CHECK_FALSE(is_soire(parse("a+b&c+b", a)));
  CHECK(is_soire(Regex::epsilon()));
}

TEST_CASE("shuffle matches the recursive definition") {
  Alphabet a;
  Word ab = testutil::word_from("ab", a);
  Word c = testutil::word_from("c", a);
  Word cd = testutil::word_from("cd", a);

  std::set<Word> expect = {testutil::word_from("cab", a),
                           testutil::word_from("acb", a),
                           testutil::word_from("abc", a)};
  CHECK(shuffle(ab, c) == expect);
  CHECK(shuffle(Word{}, c) == std::set<Word>{c});
  CHECK(shuffle(c, Word{}) == std::set<Word>{c});
  CHECK(shuffle(ab, cd).size() == 6);
}

TEST_CASE("matches agrees with the shuffle semantics") {
  Alphabet a;
  Regex r = parse("ab&c", a);
  CHECK(matches(r, testutil::word_from("cab", a)));
  CHECK(matches(r, testutil::word_from("acb", a)));
  CHECK(matches(r, testutil::word_from("abc", a)));
  CHECK_FALSE(matches(r, testutil::word_from("cba", a)));
  CHECK_FALSE(matches(r, testutil::word_from("ab", a)));

  Regex s = parse("a(bc)?d+", a);
  CHECK(matches(s, testutil::word_from("add", a)));
  CHECK(matches(s, testutil::word_from("abcd", a)));
  CHECK_FALSE(matches(s, testutil::word_from("abd", a)));
  CHECK_FALSE(matches(Regex::empty(), Word{}));
  CHECK(matches(Regex::epsilon(), Word{}));
}

TEST_CASE("simplify applies the documented cleanups") {
  Alphabet a;
  Regex sa = sym(a, "a");
  Regex sb = sym(a, "b");
  Regex sc = sym(a, "c");

  CHECK(simplify(Regex::opt(Regex::plus(sa))) == Regex::star(sa));
  CHECK(simplify(Regex::alternation({sb, Regex::epsilon()})) == Regex::opt(sb));
  CHECK(simplify(Regex::opt(Regex::opt(sc))) == Regex::opt(sc));
  CHECK(simplify(Regex::opt(Regex::star(sa))) == Regex::star(sa));
  CHECK(simplify(Regex::plus(Regex::opt(sa))) == Regex::star(sa));
  CHECK(simplify(Regex::plus(Regex::star(sa))) == Regex::star(sa));
  CHECK(simplify(Regex::star(Regex::plus(sa))) == Regex::star(sa));
  CHECK(simplify(Regex::concatenation({Regex::epsilon(), sa})) == sa);
  CHECK(simplify(Regex::concatenation({sa, Regex::epsilon()})) == sa);
  CHECK(simplify(Regex::interleaving({Regex::epsilon(), sa})) == sa);

  // An alternative with epsilon collapses entirely when already nullable.
  Regex opts = Regex::interleaving({Regex::opt(sa), Regex::opt(sb)});
  CHECK(simplify(Regex::alternation({opts, Regex::epsilon()})) == opts);
}

TEST_CASE("roundtrip property: parse(print(r)) == r") {
  Rng rng(testutil::kSeed);
  Alphabet a;
  for (int i = 0; i < 6; ++i) a.intern(std::string(1, char('a' + i)));
  for (int round = 0; round < 1000; ++round) {
    Regex r = testutil::random_regex(rng, 6, 4);
    Alphabet scratch = a;
    CHECK(parse(print(r, a), scratch) == r);
  }
}

TEST_CASE("shuffle properties: symmetry and disjoint cardinality") {
  Rng rng(testutil::kSeed + 1);
  for (int round = 0; round < 1000; ++round) {
    int nu = testutil::rand_int(rng, 0, 5);
    int nv = testutil::rand_int(rng, 0, 5);
    Word u(nu), v(nv);
    for (auto& s : u) s = testutil::rand_int(rng, 0, 3);
    for (auto& s : v) s = testutil::rand_int(rng, 4, 7);  // disjoint
    auto sh = shuffle(u, v);
    CHECK(sh == shuffle(v, u));
    // C(|u|+|v|, |u|)
    unsigned long expect = 1;
    for (int i = 1; i <= nu; ++i) {
      expect = expect * static_cast<unsigned long>(nu + nv - i + 1) /
               static_cast<unsigned long>(i);
    }
    CHECK(sh.size() == expect);
  }
}

TEST_CASE("matcher agrees with brute-force enumeration") {
  Rng rng(testutil::kSeed + 2);
  for (int round = 0; round < 250; ++round) {
    int k = testutil::rand_int(rng, 1, 4);
    Regex r = testutil::random_regex(rng, k, 3);
    auto lang = testutil::enumerate_language(r, 6);
    for (const auto& w : lang) CHECK(matches(r, w));
    for (int probe = 0; probe < 40; ++probe) {
      Word w = testutil::random_word(rng, k, 6);
      CHECK(matches(r, w) == (lang.count(w) > 0));
    }
  }
}

TEST_CASE("simplify preserves the language") {
  Rng rng(testutil::kSeed + 3);
  for (int round = 0; round < 400; ++round) {
    int k = testutil::rand_int(rng, 1, 4);
    Regex r = testutil::random_regex(rng, k, 3);
    Regex s = simplify(r);
    CHECK(testutil::enumerate_language(r, 6) ==
          testutil::enumerate_language(s, 6));
  }
}

TEST_CASE("simplify keeps single-occurrence expressions single-occurrence") {
  Rng rng(testutil::kSeed + 4);
  for (int round = 0; round < 1000; ++round) {
    Regex r = testutil::random_soire(rng, 6, 3);
    REQUIRE(is_soire(r));
    CHECK(is_soire(simplify(r)));
  }
}
