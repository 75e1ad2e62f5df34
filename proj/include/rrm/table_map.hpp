#ifndef RRM_TABLE_MAP_HPP_
#define RRM_TABLE_MAP_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rrm/polycyclic.hpp"
#include "rrm/words.hpp"

namespace rrm {

  // One row x > y of a table: the basic map xw -> yw.
  struct Row {
    Word x;
    Word y;

    friend bool operator==(Row const&, Row const&) = default;
  };

  // The element f^X_Y of H_n: xw -> yw for each row, where the domain words
  // X form a prefix code and the images Y are arbitrary. Rows are kept
  // sorted length-lex by domain word. The empty table is zero.
  class TableMap {
   public:
    TableMap() = default;

    TableMap(std::size_t n, std::vector<Row> rows)
        : _n(n), _rows(std::move(rows)) {
      check_alphabet(n);
      std::sort(_rows.begin(), _rows.end(), [](Row const& r, Row const& s) {
        return length_lex_less(r.x, s.x);
      });
      for (auto const& r : _rows) {
        if (!is_word(r.x, n) || !is_word(r.y, n)) {
          throw PreconditionError("table: row " + to_string(r.x) + ">"
                                  + to_string(r.y)
                                  + " is not over the alphabet");
        }
      }
      for (std::size_t i = 0; i < _rows.size(); ++i) {
        for (std::size_t j = i + 1; j < _rows.size(); ++j) {
          if (!incomparable(_rows[i].x, _rows[j].x)) {
            throw PreconditionError("table: domain words "
                                    + to_string(_rows[i].x) + " and "
                                    + to_string(_rows[j].x)
                                    + " are comparable");
          }
        }
      }
    }

    static TableMap zero(std::size_t n) {
      return TableMap(n, {});
    }

    static TableMap identity(std::size_t n) {
      return TableMap(n, {{Word(), Word()}});
    }

    [[nodiscard]] std::size_t alphabet_size() const {
      return _n;
    }

    [[nodiscard]] std::vector<Row> const& rows() const {
      return _rows;
    }

    [[nodiscard]] bool is_zero() const {
      return _rows.empty();
    }

    [[nodiscard]] PrefixCode domain() const {
      std::vector<Word> X;
      for (auto const& r : _rows) {
        X.push_back(r.x);
      }
      return PrefixCode(_n, std::move(X));
    }

    [[nodiscard]] std::vector<Word> images() const {
      std::vector<Word> Y;
      for (auto const& r : _rows) {
        Y.push_back(r.y);
      }
      return Y;
    }

    // f(w) if some domain word is a prefix of w.
    [[nodiscard]] std::optional<Word> apply(Word const& w) const {
      for (auto const& r : _rows) {
        if (is_prefix(r.x, w)) {
          return r.y + w.substr(r.x.size());
        }
      }
      return std::nullopt;
    }

    // Longest word in the table.
    [[nodiscard]] std::size_t depth() const {
      std::size_t d = 0;
      for (auto const& r : _rows) {
        d = std::max({d, r.x.size(), r.y.size()});
      }
      return d;
    }

    // Same rows; use equals for equality of the denoted maps.
    friend bool operator==(TableMap const&, TableMap const&) = default;

   private:
    std::size_t      _n = 2;
    std::vector<Row> _rows;
  };

  inline TableMap make(std::size_t n, std::vector<Row> rows) {
    return TableMap(n, std::move(rows));
  }

  inline std::string to_string(TableMap const& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.rows().size(); ++i) {
      auto const& r = f.rows()[i];
      out += (i == 0 ? "" : ", ") + to_string(r.x) + ">" + to_string(r.y);
    }
    return out + "]";
  }

  // "[x1>y1, x2>y2, ...]"; "[]" is zero.
  inline TableMap parse_table(std::string_view text, std::size_t n) {
    check_alphabet(n);
    std::string s;
    for (char c : text) {
      if (c != ' ') {
        s += c;
      }
    }
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
      throw ParseError("bad table \"" + std::string(text)
                       + "\": expected [x1>y1, ...]");
    }
    s = s.substr(1, s.size() - 2);
    std::vector<Row> rows;
    std::size_t      start = 0;
    while (!s.empty()) {
      auto comma = s.find(',', start);
      auto f     = parse_basic_map(s.substr(start, comma - start), n);
      if (f.is_zero) {
        throw ParseError("bad table \"" + std::string(text)
                         + "\": a row cannot be 0");
      }
      rows.push_back({f.x, f.y});
      if (comma == std::string::npos) {
        break;
      }
      start = comma + 1;
    }
    return TableMap(n, std::move(rows));
  }

  namespace detail {
    inline void same_alphabet(TableMap const& f, TableMap const& g) {
      if (f.alphabet_size() != g.alphabet_size()) {
        throw PreconditionError("tables over alphabets of sizes "
                                + std::to_string(f.alphabet_size()) + " and "
                                + std::to_string(g.alphabet_size()));
      }
    }
  }  // namespace detail

  // f o g: apply g first, then f.
  inline TableMap compose(TableMap const& f, TableMap const& g) {
    detail::same_alphabet(f, g);
    std::vector<Row> rows;
    for (auto const& [u, v] : g.rows()) {
      for (auto const& [x, y] : f.rows()) {
        if (is_prefix(x, v)) {
          rows.push_back({u, y + v.substr(x.size())});
        } else if (is_prefix(v, x)) {
          rows.push_back({u + x.substr(v.size()), y});
        }
      }
    }
    return TableMap(f.alphabet_size(), std::move(rows));
  }

  inline TableMap star(TableMap const& f) {
    std::vector<Row> rows;
    for (auto const& r : f.rows()) {
      rows.push_back({r.x, r.x});
    }
    return TableMap(f.alphabet_size(), std::move(rows));
  }

  inline bool is_partial_unit(TableMap const& f) {
    auto Y = f.images();
    return is_prefix_code(Y);
  }

  inline std::optional<TableMap> invert(TableMap const& f) {
    if (!is_partial_unit(f)) {
      return std::nullopt;
    }
    std::vector<Row> rows;
    for (auto const& r : f.rows()) {
      rows.push_back({r.y, r.x});
    }
    return TableMap(f.alphabet_size(), std::move(rows));
  }

  // Collapses carets {pa_1 > qa_1, ..., pa_n > qa_n} to p > q until none is
  // left, scanning the rows in order and restarting after each collapse.
  inline TableMap reduce(TableMap const& f) {
    std::size_t const n = f.alphabet_size();
    std::vector<Row>  rows = f.rows();
    auto              find = [&](Word const& x) {
      return std::find_if(
          rows.begin(), rows.end(), [&](Row const& r) { return r.x == x; });
    };
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto const& r : rows) {
        if (r.x.empty() || r.x.back() != 'a' || r.y.empty()
            || r.y.back() != 'a') {
          continue;
        }
        Word p = r.x.substr(0, r.x.size() - 1);
        Word q = r.y.substr(0, r.y.size() - 1);
        bool ok = true;
        for (std::size_t i = 1; i < n && ok; ++i) {
          auto it = find(p + letter(i));
          ok      = it != rows.end() && it->y == q + letter(i);
        }
        if (!ok) {
          continue;
        }
        std::vector<Row> next;
        for (auto const& s : rows) {
          if (s.x.size() != p.size() + 1 || !is_prefix(p, s.x)) {
            next.push_back(s);
          }
        }
        next.push_back({p, q});
        rows    = std::move(next);
        changed = true;
        break;
      }
    }
    return TableMap(n, std::move(rows));
  }

  inline bool equals(TableMap const& f, TableMap const& g) {
    return f.alphabet_size() == g.alphabet_size() && reduce(f) == reduce(g);
  }

  // The maps agree wherever both are defined.
  inline bool left_compatible(TableMap const& f, TableMap const& g) {
    detail::same_alphabet(f, g);
    for (auto const& [x, y] : f.rows()) {
      for (auto const& [u, v] : g.rows()) {
        if (is_prefix(u, x) && y != v + x.substr(u.size())) {
          return false;
        }
        if (is_prefix(x, u) && v != y + u.substr(x.size())) {
          return false;
        }
      }
    }
    return true;
  }

  // The union of two left-compatible maps, reduced.
  inline std::optional<TableMap> join(TableMap const& f, TableMap const& g) {
    if (!left_compatible(f, g)) {
      return std::nullopt;
    }
    std::vector<Row> rows;
    auto keep = [&](TableMap const& mine, TableMap const& other, bool ties) {
      for (auto const& r : mine.rows()) {
        bool covered = std::any_of(
            other.rows().begin(), other.rows().end(), [&](Row const& s) {
              return is_prefix(s.x, r.x) && (s.x != r.x || ties);
            });
        if (!covered) {
          rows.push_back(r);
        }
      }
    };
    keep(f, g, false);
    keep(g, f, true);
    return reduce(TableMap(f.alphabet_size(), std::move(rows)));
  }

  inline bool is_total(TableMap const& f) {
    return is_maximal_prefix_code(f.domain());
  }

  inline bool is_unit(TableMap const& f) {
    if (!is_total(f) || !is_partial_unit(f)) {
      return false;
    }
    return is_maximal_prefix_code(PrefixCode(f.alphabet_size(), f.images()));
  }

  inline TableMap from_basic_map(BasicMap const& b, std::size_t n) {
    if (b.is_zero) {
      return TableMap::zero(n);
    }
    return TableMap(n, {{b.x, b.y}});
  }

}  // namespace rrm

#endif  // RRM_TABLE_MAP_HPP_
