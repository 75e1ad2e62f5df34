#ifndef RRM_CANTOR_HPP_
#define RRM_CANTOR_HPP_

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rrm/table_map.hpp"
#include "rrm/words.hpp"

// The Cantor algebra structure on Tot(H_n): unary alpha_i and n-ary lambda.

namespace rrm {

  namespace detail {
    inline void require_total(TableMap const& f, char const* who) {
      if (!is_total(f)) {
        throw PreconditionError(std::string(who) + ": " + to_string(f)
                                + " is not total");
      }
    }
  }  // namespace detail

  // w -> f(a_i w), with i counted from 0.
  inline TableMap alpha(TableMap const& f, std::size_t i) {
    detail::require_total(f, "alpha");
    if (i >= f.alphabet_size()) {
      throw PreconditionError("alpha: index " + std::to_string(i)
                              + " out of range");
    }
    return compose(f, TableMap(f.alphabet_size(), {{Word(), Word(1, letter(i))}}));
  }

  // a_i w -> f_i(w).
  inline TableMap lambda_op(std::vector<TableMap> const& fs) {
    if (fs.empty() || fs.size() != fs[0].alphabet_size()) {
      throw PreconditionError("lambda_op: expected one argument per letter");
    }
    std::size_t const n   = fs.size();
    TableMap          out = TableMap::zero(n);
    for (std::size_t i = 0; i < n; ++i) {
      detail::require_total(fs[i], "lambda_op");
      auto part = compose(fs[i], TableMap(n, {{Word(1, letter(i)), Word()}}));
      out       = *join(out, part);
    }
    return out;
  }

  // x | TERM.WORD | (TERM, ..., TERM)L
  struct CantorTerm {
    enum class Kind { generator, alpha_chain, lambda };

    Kind                    kind = Kind::generator;
    Word                    word;      // alpha_chain only
    std::vector<CantorTerm> children;  // base for alpha_chain, n for lambda

    static CantorTerm generator() {
      return CantorTerm{};
    }

    static CantorTerm chain(CantorTerm base, Word w) {
      if (w.empty()) {
        return base;
      }
      if (base.kind == Kind::alpha_chain) {
        base.word += w;
        return base;
      }
      return CantorTerm{Kind::alpha_chain, std::move(w), {std::move(base)}};
    }

    static CantorTerm lambda(std::vector<CantorTerm> children) {
      return CantorTerm{Kind::lambda, {}, std::move(children)};
    }

    friend bool operator==(CantorTerm const&, CantorTerm const&) = default;
  };

  inline std::string to_string(CantorTerm const& t) {
    switch (t.kind) {
      case CantorTerm::Kind::generator:
        return "x";
      case CantorTerm::Kind::alpha_chain:
        return to_string(t.children[0]) + "." + t.word;
      case CantorTerm::Kind::lambda: {
        std::string out = "(";
        for (std::size_t i = 0; i < t.children.size(); ++i) {
          out += (i == 0 ? "" : ",") + to_string(t.children[i]);
        }
        return out + ")L";
      }
    }
    return "";
  }

  namespace detail {
    class TermParser {
     public:
      TermParser(std::string_view text, std::size_t n) : _n(n) {
        for (char c : text) {
          if (c != ' ') {
            _s += c;
          }
        }
      }

      CantorTerm parse() {
        auto t = term();
        if (_pos != _s.size()) {
          fail("unexpected '" + std::string(1, _s[_pos]) + "'");
        }
        return t;
      }

     private:
      CantorTerm term() {
        CantorTerm t = primary();
        while (_pos < _s.size() && _s[_pos] == '.') {
          ++_pos;
          std::size_t start = _pos;
          while (_pos < _s.size() && _s[_pos] >= 'a' && _s[_pos] <= 'z') {
            ++_pos;
          }
          auto w = _s.substr(start, _pos - start);
          if (w.empty() || !is_word(w, _n)) {
            fail("bad word after '.'");
          }
          t = CantorTerm::chain(std::move(t), w);
        }
        return t;
      }

      // Any single lowercase letter names the generator.
      CantorTerm primary() {
        if (_pos >= _s.size()) {
          fail("unexpected end of term");
        }
        char c = _s[_pos];
        if (c >= 'a' && c <= 'z') {
          ++_pos;
          return CantorTerm::generator();
        }
        if (c != '(') {
          fail("unexpected '" + std::string(1, c) + "'");
        }
        ++_pos;
        std::vector<CantorTerm> kids{term()};
        while (_pos < _s.size() && _s[_pos] == ',') {
          ++_pos;
          kids.push_back(term());
        }
        if (_s.compare(_pos, 2, ")L") != 0) {
          fail("expected \")L\"");
        }
        _pos += 2;
        if (kids.size() != _n) {
          throw PreconditionError("term: lambda node with "
                                  + std::to_string(kids.size())
                                  + " arguments, expected "
                                  + std::to_string(_n));
        }
        return CantorTerm::lambda(std::move(kids));
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError("bad term at position " + std::to_string(_pos)
                         + ": " + what);
      }

      std::string _s;
      std::size_t _pos = 0;
      std::size_t _n;
    };
  }  // namespace detail

  inline CantorTerm parse_term(std::string_view text, std::size_t n) {
    check_alphabet(n);
    return detail::TermParser(text, n).parse();
  }

  inline TableMap eval_term(CantorTerm const& t, std::size_t n) {
    switch (t.kind) {
      case CantorTerm::Kind::generator:
        return TableMap::identity(n);
      case CantorTerm::Kind::alpha_chain: {
        auto f = eval_term(t.children.at(0), n);
        for (char c : t.word) {
          f = alpha(f, letter_index(c));
        }
        return f;
      }
      case CantorTerm::Kind::lambda: {
        if (t.children.size() != n) {
          throw PreconditionError("eval_term: lambda node with "
                                  + std::to_string(t.children.size())
                                  + " arguments, expected "
                                  + std::to_string(n));
        }
        std::vector<TableMap> fs;
        for (auto const& c : t.children) {
          fs.push_back(eval_term(c, n));
        }
        return lambda_op(fs);
      }
    }
    return TableMap::zero(n);
  }

  // A term for a total f: lambda over the carets of the domain code, with
  // x.y at the position of each row x > y.
  inline CantorTerm term_for(TableMap const& f) {
    detail::require_total(f, "term_for");
    std::size_t const n = f.alphabet_size();
    std::function<CantorTerm(Word const&)> build = [&](Word const& p) {
      for (auto const& r : f.rows()) {
        if (r.x == p) {
          return CantorTerm::chain(CantorTerm::generator(), r.y);
        }
      }
      std::vector<CantorTerm> kids;
      for (std::size_t i = 0; i < n; ++i) {
        kids.push_back(build(p + letter(i)));
      }
      return CantorTerm::lambda(std::move(kids));
    };
    return build(Word());
  }

  // The code read off the tree of lambda nodes once the variable leaves are
  // erased: the positions of the lambda nodes with no lambda children. A
  // term with no lambda gives {~}.
  inline PrefixCode skeleton_code(CantorTerm const& t, std::size_t n) {
    std::vector<Word>                                   out;
    std::function<void(CantorTerm const&, Word const&)> walk
        = [&](CantorTerm const& s, Word const& p) {
            bool leaf = true;
            for (std::size_t i = 0; i < s.children.size(); ++i) {
              if (s.kind == CantorTerm::Kind::lambda
                  && s.children[i].kind == CantorTerm::Kind::lambda) {
                leaf = false;
                walk(s.children[i], p + letter(i));
              }
            }
            if (leaf) {
              out.push_back(p);
            }
          };
    walk(t, Word());
    return PrefixCode(n, std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Endomorphisms and the 0-simplifying witness
  ////////////////////////////////////////////////////////////////////////

  // A random total element: a random maximal prefix code (by caret
  // expansions) with random images of length at most max_length.
  template <typename Rng>
  TableMap random_total(std::size_t n,
                        std::size_t max_length,
                        Rng&        rng,
                        std::size_t max_carets = 4) {
    PrefixCode X(n, {Word()});
    std::uniform_int_distribution<std::size_t> carets(0, max_carets);
    for (std::size_t k = carets(rng); k > 0; --k) {
      std::vector<Word> open;
      for (auto const& x : X) {
        if (x.size() < max_length) {
          open.push_back(x);
        }
      }
      if (open.empty()) {
        break;
      }
      std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
      X = caret_expand(X, open[pick(rng)]);
    }
    std::uniform_int_distribution<std::size_t> len(0, max_length);
    std::uniform_int_distribution<std::size_t> let(0, n - 1);
    std::vector<Row>                           rows;
    for (auto const& x : X) {
      Word y;
      for (std::size_t k = len(rng); k > 0; --k) {
        y += letter(let(rng));
      }
      rows.push_back({x, y});
    }
    return TableMap(n, std::move(rows));
  }

  struct EndoReport {
    std::size_t samples       = 0;
    std::size_t alpha_failures  = 0;
    std::size_t lambda_failures = 0;

    [[nodiscard]] bool passed() const {
      return alpha_failures == 0 && lambda_failures == 0;
    }
  };

  // theta(f) = g f commutes with every alpha_i and with lambda, on random
  // total samples.
  template <typename Rng>
  EndoReport endo_check(TableMap const& g, std::size_t samples, Rng& rng) {
    detail::require_total(g, "endo_check");
    std::size_t const n = g.alphabet_size();
    auto theta = [&](TableMap const& f) { return compose(g, f); };
    EndoReport report;
    report.samples = samples;
    for (std::size_t s = 0; s < samples; ++s) {
      auto f = random_total(n, n == 2 ? 3 : 2, rng);
      for (std::size_t i = 0; i < n; ++i) {
        if (!equals(theta(alpha(f, i)), alpha(theta(f), i))) {
          ++report.alpha_failures;
          break;
        }
      }
      std::vector<TableMap> fs, images;
      for (std::size_t i = 0; i < n; ++i) {
        fs.push_back(random_total(n, n == 2 ? 3 : 2, rng));
        images.push_back(theta(fs.back()));
      }
      if (!equals(theta(lambda_op(fs)), lambda_op(images))) {
        ++report.lambda_failures;
      }
    }
    return report;
  }

  // A total a with (e a)* = 1 for e the identity on the cylinders of X.
  inline TableMap zero_simplifying_witness(PrefixCode const& X) {
    if (X.empty()) {
      throw PreconditionError("zero_simplifying_witness: the code is empty");
    }
    return TableMap(X.alphabet_size(), {{Word(), X.words().front()}});
  }

  inline TableMap code_projection(PrefixCode const& X) {
    std::vector<Row> rows;
    for (auto const& x : X) {
      rows.push_back({x, x});
    }
    return TableMap(X.alphabet_size(), std::move(rows));
  }

}  // namespace rrm

#endif  // RRM_CANTOR_HPP_
