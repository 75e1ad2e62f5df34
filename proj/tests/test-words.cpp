#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"

#include "rrm/laws.hpp"
#include "rrm/polycyclic.hpp"
#include "rrm/words.hpp"

#include "oracles.hpp"

using namespace rrm;
using Catch::Matchers::ContainsSubstring;

namespace {
  PrefixCode code(std::vector<Word> words, std::size_t n = 2) {
    return PrefixCode(n, std::move(words));
  }

  std::vector<BasicMap> basic_maps(std::size_t n, std::size_t maxlen) {
    std::vector<BasicMap> out{BasicMap::zero()};
    for (auto const& y : all_words(n, maxlen)) {
      for (auto const& x : all_words(n, maxlen)) {
        out.push_back(BasicMap::make(y, x));
      }
    }
    return out;
  }

  BasicMap random_basic(std::mt19937_64& rng, std::size_t n) {
    if (rng() % 10 == 0) {
      return BasicMap::zero();
    }
    return BasicMap::make(random_word(n, 3, rng), random_word(n, 3, rng));
  }
}  // namespace

TEST_CASE("Words 01: letters and word syntax", "[quick][words][01]") {
  REQUIRE(letter(0) == 'a');
  REQUIRE(letter(7) == 'h');
  REQUIRE(letter_index('c') == 2);
  REQUIRE(parse_word("~", 2).empty());
  REQUIRE(parse_word("abba", 2) == "abba");
  REQUIRE(to_string(Word()) == "~");
  REQUIRE(to_string(Word("ba")) == "ba");
  REQUIRE_THROWS_AS(parse_word("abc", 2), ParseError);
  REQUIRE_THROWS_AS(parse_word("", 2), ParseError);
  REQUIRE_THROWS_AS(parse_word("aA", 3), ParseError);
  REQUIRE_NOTHROW(check_alphabet(8));
  REQUIRE_THROWS_AS(check_alphabet(1), PreconditionError);
  REQUIRE_THROWS_AS(check_alphabet(9), PreconditionError);
  REQUIRE(all_words(2, 2)
          == std::vector<Word>{"", "a", "b", "aa", "ab", "ba", "bb"});
  REQUIRE(all_words(3, 3).size() == 1 + 3 + 9 + 27);
}

TEST_CASE("Words 02: prefix comparison", "[quick][words][02]") {
  REQUIRE(comparable("", "abb") == PrefixRelation::left_prefix);
  REQUIRE(comparable("ba", "bb") == PrefixRelation::incomparable);
  REQUIRE(comparable("b", "ba") == PrefixRelation::left_prefix);
  REQUIRE(comparable("ba", "b") == PrefixRelation::right_prefix);
  REQUIRE(comparable("ab", "ab") == PrefixRelation::equal);
  REQUIRE(incomparable("a", "b"));
  REQUIRE(!incomparable("a", "ab"));

  for (auto const& x : all_words(2, 3)) {
    for (auto const& y : all_words(2, 3)) {
      auto r = comparable(x, y);
      REQUIRE((r == PrefixRelation::left_prefix || r == PrefixRelation::equal)
              == oracle::starts_with(y, x));
      REQUIRE((r == PrefixRelation::right_prefix || r == PrefixRelation::equal)
              == oracle::starts_with(x, y));
    }
  }
}

TEST_CASE("Words 03: prefix codes", "[quick][words][03]") {
  auto X = code({"bb", "a", "ba"});
  REQUIRE(X.words() == std::vector<Word>{"a", "ba", "bb"});
  REQUIRE(to_string(X) == "{a, ba, bb}");
  REQUIRE(X.contains("ba"));
  REQUIRE(!X.contains("b"));
  REQUIRE(to_string(code({""})) == "{~}");
  REQUIRE(to_string(code({})) == "{}");
  REQUIRE_THROWS_WITH(code({"a", "ab"}), ContainsSubstring("a and ab"));
  REQUIRE_THROWS_AS(code({"c"}), PreconditionError);

  REQUIRE(parse_code("{a, ba, bb}", 2) == X);
  REQUIRE(parse_code("bb,ba,a", 2) == X);
  REQUIRE(parse_code("{~}", 2) == code({""}));
  REQUIRE(parse_code("{}", 2).empty());
  REQUIRE_THROWS_AS(parse_code("{a, ab}", 2), ParseError);
  REQUIRE_THROWS_AS(parse_code("{a, b", 2), ParseError);
  REQUIRE_THROWS_AS(parse_code("a,,b", 2), ParseError);
}

TEST_CASE("Words 04: maximal prefix codes", "[quick][words][04]") {
  REQUIRE(is_maximal_prefix_code(code({"a", "ba", "bb"})));
  REQUIRE(is_maximal_prefix_code(code({""})));
  REQUIRE(!is_maximal_prefix_code(code({"a", "ba"})));
  REQUIRE(!is_maximal_prefix_code(code({})));
  REQUIRE(!is_maximal_prefix_code(code({"a", "b"}, 3)));
  REQUIRE(is_maximal_prefix_code(code({"a", "b", "c"}, 3)));
  REQUIRE(kraft_sum_is_one(code({"a", "ba", "bb"})));
  REQUIRE(!kraft_sum_is_one(code({"a", "ba"})));

  // every prefix code of words of length <= 3 over two letters, and a
  // sample over three letters: the trie test, the Kraft sum and the
  // cover-every-long-word oracle agree
  auto const   words = all_words(2, 3);
  std::size_t  maximal = 0;
  for (std::uint32_t mask = 1; mask < (1u << words.size()); ++mask) {
    std::vector<Word> X;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (mask >> i & 1) {
        X.push_back(words[i]);
      }
    }
    if (!oracle::prefix_code(X)) {
      continue;
    }
    PrefixCode C(2, X);
    bool       trie = is_maximal_prefix_code(C);
    REQUIRE(trie == oracle::maximal_code(X, 2));
    REQUIRE(trie == kraft_sum_is_one(C));
    maximal += trie;
  }
  REQUIRE(maximal == 26);  // full binary trees of depth <= 3

  std::mt19937_64 rng(31);
  for (int k = 0; k < 300; ++k) {
    auto C = rng() % 2 ? random_maximal_code(3, 3, 4, rng)
                       : random_code(3, 3, rng);
    std::vector<Word> X(C.begin(), C.end());
    REQUIRE(is_maximal_prefix_code(C) == oracle::maximal_code(X, 3));
    REQUIRE(is_maximal_prefix_code(C) == kraft_sum_is_one(C));
  }
}

TEST_CASE("Words 05: carets", "[quick][words][05]") {
  REQUIRE(caret("b", 2) == std::vector<Word>{"ba", "bb"});
  REQUIRE(caret("", 3) == std::vector<Word>{"a", "b", "c"});
  auto X = code({"a", "ba", "bb"});
  REQUIRE(caret_reduce(X, "b") == code({"a", "b"}));
  REQUIRE(caret_expand(X, "a") == code({"aa", "ab", "ba", "bb"}));
  REQUIRE(caret_expand(code({"a", "b"}), "b") == X);
  REQUIRE(caret_expand(code({""}), "") == code({"a", "b"}));
  REQUIRE_THROWS_WITH(caret_expand(X, "b"), ContainsSubstring("b is not in"));
  REQUIRE_THROWS_WITH(caret_reduce(X, "a"), ContainsSubstring("aa is not in"));

  std::mt19937_64 rng(99);
  for (int k = 0; k < 200; ++k) {
    std::size_t n = 2 + rng() % 2;
    auto        C = random_maximal_code(n, 4, 5, rng);
    for (auto const& x : C) {
      auto E = caret_expand(C, x);
      REQUIRE(E.size() == C.size() + n - 1);
      REQUIRE(is_maximal_prefix_code(E));
      REQUIRE(caret_reduce(E, x) == C);
    }
  }
}

TEST_CASE("Words 06: carets reach every small maximal code",
          "[quick][words][06]") {
  std::size_t const                  max_words = 7;
  std::set<std::vector<Word>>        reached;
  std::vector<PrefixCode>            frontier{code({""})};
  auto lex = [](PrefixCode const& C) {
    std::vector<Word> w(C.begin(), C.end());
    std::sort(w.begin(), w.end());
    return w;
  };
  reached.insert(lex(frontier[0]));
  while (!frontier.empty()) {
    std::vector<PrefixCode> next;
    for (auto const& C : frontier) {
      if (C.size() + 1 > max_words) {
        continue;
      }
      for (auto const& x : C) {
        auto E = caret_expand(C, x);
        if (reached.insert(lex(E)).second) {
          next.push_back(E);
        }
      }
    }
    frontier = std::move(next);
  }
  auto expected = oracle::binary_maximal_codes(max_words);
  REQUIRE(expected.size() == 1 + 1 + 2 + 5 + 14 + 42 + 132);
  REQUIRE(reached == expected);
}

TEST_CASE("Words 07: polycyclic products", "[quick][words][07]") {
  auto m = [](std::string const& s) { return parse_basic_map(s, 2); };
  // (a b^-1)(ba a^-1) = aa a^-1, written b>a and a>ba
  REQUIRE(pn_mul(m("b>a"), m("a>ba")) == m("a>aa"));
  REQUIRE(to_string(pn_mul(m("b>a"), m("a>ba"))) == "a>aa");
  REQUIRE(pn_mul(m("b>a"), m("b>a")).is_zero);
  REQUIRE(pn_mul(m("~>~"), m("ab>b")) == m("ab>b"));
  REQUIRE(pn_mul(m("ab>b"), m("~>~")) == m("ab>b"));
  REQUIRE(pn_mul(m("0"), m("a>b")).is_zero);
  REQUIRE(to_string(BasicMap::zero()) == "0");
  REQUIRE(to_string(m("~>ab")) == "~>ab");
  REQUIRE_THROWS_AS(m("a>b>a"), ParseError);
  REQUIRE_THROWS_AS(m("ab"), ParseError);
  REQUIRE_THROWS_AS(m("c>a"), ParseError);

  REQUIRE(pn_leq(m("ba>aa"), m("b>a")));
  REQUIRE(!pn_leq(m("b>a"), m("ba>aa")));
  REQUIRE(!pn_leq(m("ba>ab"), m("b>a")));
  REQUIRE(pn_star(m("ab>b")) == m("ab>ab"));
  REQUIRE(pn_inverse(m("ab>b")) == m("b>ab"));
  REQUIRE(pn_left_compatible(m("a>a"), m("b>b")));
  REQUIRE(!pn_left_compatible(m("a>a"), m("a>b")));
  REQUIRE(pn_is_idempotent(m("ab>ab")));
  REQUIRE(!pn_is_idempotent(m("a>b")));

  // the words act on long probes, right to left
  auto act = [](BasicMap const& f, Word const& w) -> std::optional<Word> {
    if (f.is_zero || !oracle::starts_with(w, f.x)) {
      return std::nullopt;
    }
    return f.y + w.substr(f.x.size());
  };
  auto const maps   = basic_maps(2, 2);
  auto const probes = oracle::words_of_length(2, 4);
  for (auto const& f : maps) {
    for (auto const& g : maps) {
      auto fg = pn_mul(f, g);
      for (auto const& w : probes) {
        std::optional<Word> expect;
        if (auto gw = act(g, w)) {
          expect = act(f, *gw);
        }
        // fg may be defined only on a sub-cylinder of w's cylinder
        if (expect) {
          REQUIRE(act(fg, w + "ab") == *expect + "ab");
        } else {
          REQUIRE(!act(fg, w).has_value());
        }
      }
    }
  }
}

TEST_CASE("Words 08: P_2 is associative on short words",
          "[quick][words][08]") {
  auto const maps = basic_maps(2, 2);
  REQUIRE(maps.size() == 50);
  std::size_t failures = 0;
  for (auto const& f : maps) {
    for (auto const& g : maps) {
      auto fg = pn_mul(f, g);
      for (auto const& h : maps) {
        failures += pn_mul(fg, h) != pn_mul(f, pn_mul(g, h));
      }
    }
  }
  REQUIRE(failures == 0);

  std::mt19937_64 rng(5);
  for (int k = 0; k < 2000; ++k) {
    auto f = random_basic(rng, 3), g = random_basic(rng, 3),
         h = random_basic(rng, 3);
    REQUIRE(pn_mul(pn_mul(f, g), h) == pn_mul(f, pn_mul(g, h)));
  }
}

TEST_CASE("Words 09: the restriction axioms in P_n", "[quick][words][09]") {
  std::mt19937_64 rng(11);
  auto            st = [](BasicMap const& f) { return pn_star(f); };
  for (int k = 0; k < 2000; ++k) {
    std::size_t n = 2 + k % 2;
    auto        s = random_basic(rng, n), t = random_basic(rng, n);
    REQUIRE(st(st(s)) == st(s));
    REQUIRE(st(pn_mul(st(s), st(t))) == pn_mul(st(s), st(t)));
    REQUIRE(pn_mul(st(s), st(t)) == pn_mul(st(t), st(s)));
    REQUIRE(pn_mul(s, st(s)) == s);
    REQUIRE(st(pn_mul(s, t)) == st(pn_mul(st(s), t)));
    REQUIRE(pn_mul(st(t), s) == pn_mul(s, st(pn_mul(t, s))));
    // inverse semigroup identities
    auto si = pn_inverse(s);
    REQUIRE(pn_mul(pn_mul(s, si), s) == s);
    REQUIRE(pn_mul(si, s) == st(s));
    // order: f <= g iff f = g f*
    REQUIRE(pn_leq(s, t) == (pn_mul(t, st(s)) == s));
  }
}

TEST_CASE("Words 10: orthogonal sets are prefix codes", "[quick][words][10]") {
  std::vector<Word> abc{"a", "ba", "bb"};
  REQUIRE(orthogonal_set_check(abc));
  std::vector<Word> aab{"a", "ab"};
  REQUIRE(!orthogonal_set_check(aab));
  std::vector<Word> eps{""};
  REQUIRE(orthogonal_set_check(eps));

  auto const words = all_words(2, 3);
  REQUIRE(words.size() == 15);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      std::vector<Word> X{words[i], words[j]};
      REQUIRE(orthogonal_set_check(X) == oracle::prefix_code(X));
      REQUIRE(orthogonal_set_check(X) == is_prefix_code(X));
    }
  }
  std::mt19937_64 rng(3);
  for (int k = 0; k < 300; ++k) {
    std::vector<Word> X;
    for (int i = 0; i < 4; ++i) {
      X.push_back(random_word(3, 3, rng));
    }
    std::sort(X.begin(), X.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());
    REQUIRE(orthogonal_set_check(X) == oracle::prefix_code(X));
  }
}
