#ifndef RRM_POLYCYCLIC_HPP_
#define RRM_POLYCYCLIC_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rrm/words.hpp"

namespace rrm {

  // The element y x^-1 of the polycyclic monoid P_n, acting by xw -> yw, or
  // zero. Maps compose right to left.
  struct BasicMap {
    bool is_zero = false;
    Word y;
    Word x;

    static BasicMap zero() {
      return BasicMap{true, {}, {}};
    }

    static BasicMap make(Word y, Word x) {
      return BasicMap{false, std::move(y), std::move(x)};
    }

    friend bool operator==(BasicMap const&, BasicMap const&) = default;
  };

  inline std::string to_string(BasicMap const& f) {
    return f.is_zero ? std::string("0") : to_string(f.x) + ">" + to_string(f.y);
  }

  // "x>y" for y x^-1, or "0".
  inline BasicMap parse_basic_map(std::string_view text, std::size_t n) {
    if (text == "0") {
      return BasicMap::zero();
    }
    auto gt = text.find('>');
    if (gt == std::string_view::npos || text.find('>', gt + 1) != text.npos) {
      throw ParseError("bad basic map \"" + std::string(text)
                       + "\": expected x>y or 0");
    }
    return BasicMap::make(parse_word(text.substr(gt + 1), n),
                          parse_word(text.substr(0, gt), n));
  }

  // (y x^-1)(v u^-1) is zero when x and v are incomparable, y z u^-1 when
  // v = xz, and y (uz)^-1 when x = vz.
  inline BasicMap pn_mul(BasicMap const& f, BasicMap const& g) {
    if (f.is_zero || g.is_zero) {
      return BasicMap::zero();
    }
    if (is_prefix(f.x, g.y)) {
      return BasicMap::make(f.y + g.y.substr(f.x.size()), g.x);
    }
    if (is_prefix(g.y, f.x)) {
      return BasicMap::make(f.y, g.x + f.x.substr(g.y.size()));
    }
    return BasicMap::zero();
  }

  inline BasicMap pn_star(BasicMap const& f) {
    return f.is_zero ? f : BasicMap::make(f.x, f.x);
  }

  inline BasicMap pn_inverse(BasicMap const& f) {
    return f.is_zero ? f : BasicMap::make(f.x, f.y);
  }

  inline bool pn_is_idempotent(BasicMap const& f) {
    return f.is_zero || f.x == f.y;
  }

  // (y, x) = (vp, up) for some word p.
  inline bool pn_leq(BasicMap const& f, BasicMap const& g) {
    if (f.is_zero) {
      return true;
    }
    if (g.is_zero) {
      return false;
    }
    if (!is_prefix(g.y, f.y) || !is_prefix(g.x, f.x)) {
      return false;
    }
    return f.y.substr(g.y.size()) == f.x.substr(g.x.size());
  }

  inline bool pn_left_compatible(BasicMap const& f, BasicMap const& g) {
    return pn_is_idempotent(pn_mul(f, pn_inverse(g)));
  }

  // {x x^-1 : x in X} is pairwise orthogonal in P_n.
  inline bool orthogonal_set_check(std::span<Word const> X) {
    std::vector<Word> words(X.begin(), X.end());
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        auto e = BasicMap::make(words[i], words[i]);
        auto f = BasicMap::make(words[j], words[j]);
        if (!pn_mul(e, f).is_zero) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace rrm

#endif  // RRM_POLYCYCLIC_HPP_
