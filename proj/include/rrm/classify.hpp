#ifndef RRM_CLASSIFY_HPP_
#define RRM_CLASSIFY_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rrm/builders.hpp"
#include "rrm/monoid.hpp"

namespace rrm {

  struct Classification {
    bool                is_inverse       = false;
    bool                is_distributive  = false;
    bool                is_boolean       = false;
    bool                is_etale         = false;
    // Not applicable (nullopt) when the monoid has no zero.
    std::optional<bool> is_zero_simplifying;
    bool                is_fundamental   = false;
    std::size_t         projections      = 0;
    std::size_t         partial_units    = 0;
    std::size_t         total_elements   = 0;
  };

  inline bool is_inverse(FiniteRRMonoid const& M) {
    for (element_type a = 0; a < M.size(); ++a) {
      if (!M.is_partial_unit(a)) {
        return false;
      }
    }
    return true;
  }

  // Every left-compatible pair has a join and products distribute over such
  // joins from the right: (a v b)c = ac v bc. For an inverse monoid the
  // pairs are the compatible ones instead, which is the Boolean inverse
  // monoid notion.
  inline bool is_distributive(FiniteRRMonoid const& M) {
    auto const n       = static_cast<element_type>(M.size());
    bool const inverse = is_inverse(M);
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = a + 1; b < n; ++b) {
        if (inverse ? !M.compatible(a, b) : !M.left_compatible(a, b)) {
          continue;
        }
        auto j = M.join(a, b);
        if (!j) {
          return false;
        }
        for (element_type c = 0; c < n; ++c) {
          auto jc = M.join(M.product(a, c), M.product(b, c));
          if (!jc || *jc != M.product(*j, c)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // The complement of a projection e in the Boolean algebra of projections:
  // the projection f with ef = 0 and e v f = 1.
  inline std::optional<element_type> complement(FiniteRRMonoid const& M,
                                                element_type          e) {
    if (!M.zero()) {
      return std::nullopt;
    }
    for (auto f : projections(M)) {
      if (M.product(e, f) == *M.zero() && M.join(e, f) == M.one()) {
        return f;
      }
    }
    return std::nullopt;
  }

  // Distributive, with a zero, and the projections form a Boolean algebra.
  inline bool is_boolean(FiniteRRMonoid const& M) {
    if (!M.zero() || !is_distributive(M)) {
      return false;
    }
    auto const P = projections(M);
    for (auto e : P) {
      if (!complement(M, e)) {
        return false;
      }
    }
    for (auto e : P) {
      for (auto f : P) {
        for (auto g : P) {
          auto fg = M.join(f, g);
          auto rhs = M.join(M.product(e, f), M.product(e, g));
          if (!fg || !rhs || M.product(e, *fg) != *rhs) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Every element is the join of the partial units below it. (For a finite
  // Boolean monoid this is the same as being a finite join of some partial
  // units.)
  inline bool every_element_joins_partial_units(FiniteRRMonoid const& M) {
    for (element_type a = 0; a < M.size(); ++a) {
      std::vector<element_type> below;
      for (element_type x = 0; x < M.size(); ++x) {
        if (M.is_partial_unit(x) && M.leq(x, a)) {
          below.push_back(x);
        }
      }
      auto j = M.join(below);
      if (!j || *j != a) {
        return false;
      }
    }
    return true;
  }

  inline bool is_etale(FiniteRRMonoid const& M) {
    return is_boolean(M) && every_element_joins_partial_units(M);
  }

  // The additive ideal of Inv(M) generated by s: close {s} under
  // multiplication by partial units on either side and under compatible
  // joins.
  inline std::vector<bool> additive_ideal(FiniteRRMonoid const& M,
                                          element_type          s) {
    auto const        units = partial_units(M);
    std::vector<bool> in(M.size(), false);
    std::vector<element_type> members;
    std::vector<element_type> todo;
    auto                      add = [&](element_type x) {
      if (!in[x]) {
        in[x] = true;
        todo.push_back(x);
      }
    };
    add(s);
    while (!todo.empty()) {
      element_type x = todo.back();
      todo.pop_back();
      for (auto a : units) {
        add(M.product(a, x));
        add(M.product(x, a));
      }
      for (auto y : members) {
        if (M.compatible(x, y)) {
          if (auto j = M.join(x, y); j && M.is_partial_unit(*j)) {
            add(*j);
          }
        }
      }
      members.push_back(x);
    }
    return in;
  }

  // Inv(M) is 0-simplifying iff every nonzero partial unit generates all of
  // Inv(M) as an additive ideal.
  inline std::optional<bool> is_zero_simplifying(FiniteRRMonoid const& M) {
    if (!M.zero()) {
      return std::nullopt;
    }
    auto const units = partial_units(M);
    for (auto s : units) {
      if (s == *M.zero()) {
        continue;
      }
      auto in = additive_ideal(M, s);
      for (auto u : units) {
        if (!in[u]) {
          return false;
        }
      }
    }
    return true;
  }

  // Units of M: partial units g with g* = 1 = (g^-1)*.
  inline std::vector<element_type> units(FiniteRRMonoid const& M) {
    std::vector<element_type> out;
    for (auto g : partial_units(M)) {
      if (M.star(g) == M.one() && M.star(*M.inverse_of(g)) == M.one()) {
        out.push_back(g);
      }
    }
    return out;
  }

  // The action e -> (eg)* of the units on the projections is faithful.
  inline bool is_fundamental(FiniteRRMonoid const& M) {
    auto const U = units(M);
    auto const P = projections(M);
    std::vector<std::vector<element_type>> actions;
    for (auto g : U) {
      std::vector<element_type> act;
      for (auto e : P) {
        act.push_back(M.star(M.product(e, g)));
      }
      actions.push_back(std::move(act));
    }
    std::sort(actions.begin(), actions.end());
    return std::adjacent_find(actions.begin(), actions.end()) == actions.end();
  }

  inline Classification classify(FiniteRRMonoid const& M) {
    Classification c;
    c.projections    = projections(M).size();
    c.partial_units  = partial_units(M).size();
    c.total_elements = total_elements(M).size();
    c.is_inverse     = c.partial_units == M.size();
    c.is_distributive = is_distributive(M);
    c.is_boolean      = c.is_distributive && is_boolean(M);
    c.is_etale
        = c.is_boolean && every_element_joins_partial_units(M);
    c.is_zero_simplifying = is_zero_simplifying(M);
    c.is_fundamental      = is_fundamental(M);
    return c;
  }

  // Rewrites a left-compatible family with a join as a left-orthogonal family
  // with the same join: b_1 = a_1 and b_{k+1} = a_{k+1} e', where e' is the
  // complement of b_1* v ... v b_k*.
  inline std::vector<element_type>
  left_orthogonalize(FiniteRRMonoid const&         M,
                     std::span<element_type const> family) {
    if (!is_boolean(M)) {
      throw PreconditionError("left_orthogonalize: " + M.name()
                              + " is not a Boolean right restriction monoid");
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if (!M.left_compatible(family[i], family[j])) {
          throw PreconditionError("left_orthogonalize: "
                                  + M.element_name(family[i]) + " and "
                                  + M.element_name(family[j])
                                  + " are not left-compatible");
        }
      }
    }
    if (!M.join(family)) {
      throw PreconditionError("left_orthogonalize: the family has no join");
    }
    std::vector<element_type> out;
    if (family.empty()) {
      return out;
    }
    out.push_back(family[0]);
    element_type covered = M.star(family[0]);
    for (std::size_t i = 1; i < family.size(); ++i) {
      element_type b = M.product(family[i], *complement(M, covered));
      out.push_back(b);
      covered = *M.join(covered, M.star(b));
    }
    return out;
  }

  // The representation a -> (x -> ax on a*S) of M in the partial maps on
  // its own element set.
  struct CayleyEmbedding {
    std::vector<detail::partial_map> images;
    bool                             injective      = false;
    bool                             preserves_mul  = false;
    bool                             preserves_star = false;
  };

  inline CayleyEmbedding cayley_embed(FiniteRRMonoid const& M) {
    auto const      n = static_cast<element_type>(M.size());
    CayleyEmbedding result;
    for (element_type a = 0; a < n; ++a) {
      detail::partial_map f(n, UNDEFINED);
      for (element_type x = 0; x < n; ++x) {
        // x lies in a*S iff a* x = x
        if (M.product(M.star(a), x) == x) {
          f[x] = M.product(a, x);
        }
      }
      result.images.push_back(std::move(f));
    }
    auto const& img  = result.images;
    auto        sorted = img;
    std::sort(sorted.begin(), sorted.end());
    result.injective
        = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    result.preserves_mul  = true;
    result.preserves_star = true;
    for (element_type a = 0; a < n && result.preserves_mul; ++a) {
      for (element_type b = 0; b < n; ++b) {
        if (img[M.product(a, b)] != detail::compose(img[a], img[b])) {
          result.preserves_mul = false;
          break;
        }
      }
    }
    for (element_type a = 0; a < n; ++a) {
      if (img[M.star(a)] != detail::domain_identity(img[a])) {
        result.preserves_star = false;
      }
    }
    return result;
  }

}  // namespace rrm

#endif  // RRM_CLASSIFY_HPP_
