#ifndef RRM_WORDS_HPP_
#define RRM_WORDS_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rrm/errors.hpp"

// Words over A_n = {a, b, ...} (n <= 8) are plain strings of the letters
// 'a' + i. The empty word prints as "~".

namespace rrm {

  using Word = std::string;

  inline constexpr std::size_t MAX_ALPHABET = 8;

  inline char letter(std::size_t i) {
    return static_cast<char>('a' + i);
  }

  inline std::size_t letter_index(char c) {
    return static_cast<std::size_t>(c - 'a');
  }

  inline void check_alphabet(std::size_t n) {
    if (n < 2 || n > MAX_ALPHABET) {
      throw PreconditionError("alphabet size " + std::to_string(n)
                              + " is not in [2, 8]");
    }
  }

  inline bool is_word(std::string_view w, std::size_t n) {
    return std::all_of(w.begin(), w.end(), [n](char c) {
      return c >= 'a' && letter_index(c) < n;
    });
  }

  // "~" or a nonempty string over the first n letters.
  inline Word parse_word(std::string_view text, std::size_t n) {
    if (text == "~") {
      return Word();
    }
    if (text.empty() || !is_word(text, n)) {
      throw ParseError("bad word \"" + std::string(text)
                       + "\" over an alphabet of size " + std::to_string(n));
    }
    return Word(text);
  }

  inline std::string to_string(Word const& w) {
    return w.empty() ? std::string("~") : w;
  }

  // Length first, then lexicographic.
  inline bool length_lex_less(Word const& x, Word const& y) {
    if (x.size() != y.size()) {
      return x.size() < y.size();
    }
    return x < y;
  }

  inline bool is_prefix(Word const& x, Word const& y) {
    return x.size() <= y.size() && y.compare(0, x.size(), x) == 0;
  }

  enum class PrefixRelation { equal, left_prefix, right_prefix, incomparable };

  inline PrefixRelation comparable(Word const& x, Word const& y) {
    if (x == y) {
      return PrefixRelation::equal;
    }
    if (is_prefix(x, y)) {
      return PrefixRelation::left_prefix;
    }
    if (is_prefix(y, x)) {
      return PrefixRelation::right_prefix;
    }
    return PrefixRelation::incomparable;
  }

  inline bool incomparable(Word const& x, Word const& y) {
    return comparable(x, y) == PrefixRelation::incomparable;
  }

  inline std::vector<Word> caret(Word const& x, std::size_t n) {
    std::vector<Word> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(x + letter(i));
    }
    return out;
  }

  // All words of length at most max_length, in length-lex order.
  inline std::vector<Word> all_words(std::size_t n, std::size_t max_length) {
    std::vector<Word> out{Word()};
    for (std::size_t begin = 0, len = 0; len < max_length; ++len) {
      std::size_t end = out.size();
      for (std::size_t k = begin; k < end; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
          out.push_back(out[k] + letter(i));
        }
      }
      begin = end;
    }
    return out;
  }

  inline bool is_prefix_code(std::span<Word const> X) {
    for (std::size_t i = 0; i < X.size(); ++i) {
      for (std::size_t j = i + 1; j < X.size(); ++j) {
        if (!incomparable(X[i], X[j])) {
          return false;
        }
      }
    }
    return true;
  }

  // A finite set of pairwise prefix-incomparable words, sorted length-lex.
  class PrefixCode {
   public:
    PrefixCode() = default;

    PrefixCode(std::size_t n, std::vector<Word> words)
        : _n(n), _words(std::move(words)) {
      check_alphabet(n);
      std::sort(_words.begin(), _words.end(), length_lex_less);
      for (auto const& w : _words) {
        if (!is_word(w, n)) {
          throw PreconditionError("prefix code: \"" + w
                                  + "\" is not a word over the alphabet");
        }
      }
      for (std::size_t i = 0; i < _words.size(); ++i) {
        for (std::size_t j = i + 1; j < _words.size(); ++j) {
          if (!incomparable(_words[i], _words[j])) {
            throw PreconditionError("prefix code: " + to_string(_words[i])
                                    + " and " + to_string(_words[j])
                                    + " are comparable");
          }
        }
      }
    }

    [[nodiscard]] std::size_t alphabet_size() const {
      return _n;
    }

    [[nodiscard]] std::vector<Word> const& words() const {
      return _words;
    }

    [[nodiscard]] std::size_t size() const {
      return _words.size();
    }

    [[nodiscard]] bool empty() const {
      return _words.empty();
    }

    [[nodiscard]] bool contains(Word const& w) const {
      return std::binary_search(
          _words.begin(), _words.end(), w, length_lex_less);
    }

    [[nodiscard]] auto begin() const {
      return _words.begin();
    }

    [[nodiscard]] auto end() const {
      return _words.end();
    }

    friend bool operator==(PrefixCode const&, PrefixCode const&) = default;

   private:
    std::size_t       _n = 2;
    std::vector<Word> _words;
  };

  inline std::string to_string(PrefixCode const& X) {
    std::string out = "{";
    for (std::size_t i = 0; i < X.size(); ++i) {
      out += (i == 0 ? "" : ", ") + to_string(X.words()[i]);
    }
    return out + "}";
  }

  // "{a, ba, bb}" or "a,ba,bb"; "~" for the empty word.
  inline PrefixCode parse_code(std::string_view text, std::size_t n) {
    std::string s(text);
    if (!s.empty() && s.front() == '{') {
      if (s.back() != '}') {
        throw ParseError("bad code \"" + s + "\": missing '}'");
      }
      s = s.substr(1, s.size() - 2);
    }
    std::vector<Word> words;
    std::size_t       start = 0;
    bool              blank = s.find_first_not_of(" ") == std::string::npos;
    while (!blank) {
      auto comma = s.find(',', start);
      auto piece = s.substr(start, comma - start);
      auto b     = piece.find_first_not_of(' ');
      auto e     = piece.find_last_not_of(' ');
      words.push_back(parse_word(
          b == std::string::npos ? "" : piece.substr(b, e - b + 1), n));
      if (comma == std::string::npos) {
        break;
      }
      start = comma + 1;
    }
    try {
      return PrefixCode(n, std::move(words));
    } catch (PreconditionError const& e) {
      throw ParseError(e.what());
    }
  }

  namespace detail {
    // Every infinite string starting with p has a prefix in X[first, last),
    // the sorted-lex range of words extending p.
    inline bool covers(std::vector<Word> const& lex,
                       Word const&              p,
                       std::size_t              n) {
      auto it = std::lower_bound(lex.begin(), lex.end(), p);
      if (it == lex.end() || !is_prefix(p, *it)) {
        return false;
      }
      if (*it == p) {
        return true;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (!covers(lex, p + letter(i), n)) {
          return false;
        }
      }
      return true;
    }
  }  // namespace detail

  // Trie test: below every proper prefix of a code word all n branches
  // lead to code words.
  inline bool is_maximal_prefix_code(PrefixCode const& X) {
    std::vector<Word> lex = X.words();
    std::sort(lex.begin(), lex.end());
    return detail::covers(lex, Word(), X.alphabet_size());
  }

  // Kraft: sum over X of n^-|x| equals 1, in exact integer arithmetic.
  inline bool kraft_sum_is_one(PrefixCode const& X) {
    using boost::multiprecision::cpp_int;
    if (X.empty()) {
      return false;
    }
    std::size_t L = X.words().back().size();
    cpp_int     n = X.alphabet_size();
    cpp_int     sum = 0;
    for (auto const& x : X) {
      sum += boost::multiprecision::pow(n, static_cast<unsigned>(L - x.size()));
    }
    return sum == boost::multiprecision::pow(n, static_cast<unsigned>(L));
  }

  // X \ {x} together with xA_n.
  inline PrefixCode caret_expand(PrefixCode const& X, Word const& x) {
    if (!X.contains(x)) {
      throw PreconditionError("caret_expand: " + to_string(x)
                              + " is not in " + to_string(X));
    }
    std::vector<Word> words;
    for (auto const& w : X) {
      if (w != x) {
        words.push_back(w);
      }
    }
    for (auto& w : caret(x, X.alphabet_size())) {
      words.push_back(std::move(w));
    }
    return PrefixCode(X.alphabet_size(), std::move(words));
  }

  // (X \ xA_n) together with {x}.
  inline PrefixCode caret_reduce(PrefixCode const& X, Word const& x) {
    auto kids = caret(x, X.alphabet_size());
    for (auto const& k : kids) {
      if (!X.contains(k)) {
        throw PreconditionError("caret_reduce: " + to_string(k)
                                + " is not in " + to_string(X));
      }
    }
    std::vector<Word> words{x};
    for (auto const& w : X) {
      if (std::find(kids.begin(), kids.end(), w) == kids.end()) {
        words.push_back(w);
      }
    }
    return PrefixCode(X.alphabet_size(), std::move(words));
  }

}  // namespace rrm

#endif  // RRM_WORDS_HPP_
