// Independent reference computations used by the tests. Nothing here calls
// the library algorithm it is used to check.

#ifndef RRM_TESTS_ORACLES_HPP_
#define RRM_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rrm/monoid.hpp"
#include "rrm/table_map.hpp"

namespace rrm::oracle {

  ////////////////////////////////////////////////////////////////////////
  // Counting formulas
  ////////////////////////////////////////////////////////////////////////

  inline std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  inline std::size_t factorial(std::size_t n) {
    return n <= 1 ? 1 : n * factorial(n - 1);
  }

  // |I_n| = sum_k C(n,k)^2 k!
  inline std::size_t symmetric_inverse_size(std::size_t n) {
    std::size_t s = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      s += binomial(n, k) * binomial(n, k) * factorial(k);
    }
    return s;
  }

  inline std::size_t power(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e-- > 0) {
      r *= b;
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Brute-force subsets of a small monoid
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<element_type> members(std::uint64_t mask,
                                           std::size_t   n) {
    std::vector<element_type> out;
    for (element_type i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        out.push_back(i);
      }
    }
    return out;
  }

  // x <= y straight from the definition x = y x*.
  inline bool below(FiniteRRMonoid const& M, element_type x, element_type y) {
    return M.product(y, M.star(x)) == x;
  }

  inline bool acceptable_mask(FiniteRRMonoid const& M, std::uint64_t mask) {
    if (mask == 0) {
      return false;
    }
    auto const mem = members(mask, M.size());
    for (auto a : mem) {
      for (element_type x = 0; x < M.size(); ++x) {
        if (below(M, x, a) && !(mask >> x & 1)) {
          return false;
        }
      }
      for (auto b : mem) {
        if (M.product(a, M.star(b)) != M.product(b, M.star(a))) {
          return false;
        }
      }
    }
    return true;
  }

  // All acceptable subsets, by scanning every subset. Only for |M| <= 20.
  inline std::vector<std::uint64_t> acceptable_masks(FiniteRRMonoid const& M) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << M.size()); ++m) {
      if (acceptable_mask(M, m)) {
        out.push_back(m);
      }
    }
    return out;
  }

  // Least upper bound by scanning all upper bounds.
  inline std::optional<element_type>
  lub(FiniteRRMonoid const& M, element_type a, element_type b) {
    std::vector<element_type> ub;
    for (element_type c = 0; c < M.size(); ++c) {
      if (below(M, a, c) && below(M, b, c)) {
        ub.push_back(c);
      }
    }
    for (auto c : ub) {
      if (std::all_of(ub.begin(), ub.end(), [&](auto d) {
            return below(M, c, d);
          })) {
        return c;
      }
    }
    return std::nullopt;
  }

  // a b^-1 and a^-1 b are both idempotent, for an inverse monoid.
  inline bool compatible_pair(FiniteRRMonoid const& M,
                              element_type          a,
                              element_type          b) {
    auto inv = [&](element_type x) -> element_type {
      for (element_type y = 0; y < M.size(); ++y) {
        if (M.product(M.product(x, y), x) == x
            && M.product(M.product(y, x), y) == y) {
          return y;
        }
      }
      return UNDEFINED;
    };
    auto idem = [&](element_type x) { return M.product(x, x) == x; };
    return idem(M.product(a, inv(b))) && idem(M.product(inv(a), b));
  }

  // Closure of a mask under joins of compatible pairs, by full rescans.
  inline std::uint64_t join_closure(FiniteRRMonoid const& M,
                                    std::uint64_t         mask) {
    bool changed = true;
    while (changed) {
      changed = false;
      auto mem = members(mask, M.size());
      for (auto a : mem) {
        for (auto b : mem) {
          if (!compatible_pair(M, a, b)) {
            continue;
          }
          auto j = lub(M, a, b);
          if (j && !(mask >> *j & 1)) {
            mask |= std::uint64_t(1) << *j;
            changed = true;
          }
        }
      }
    }
    return mask;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partial maps on finite sets
  ////////////////////////////////////////////////////////////////////////

  // Partial maps {0..n-1} -> {0..n-1} as vectors with -1 for undefined.
  using pmap = std::vector<int>;

  inline std::vector<pmap> every_partial_map(std::size_t n) {
    std::vector<pmap> out;
    pmap              f(n, -1);
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (i == n) {
        out.push_back(f);
        return;
      }
      for (int v = -1; v < static_cast<int>(n); ++v) {
        f[i] = v;
        go(i + 1);
      }
    };
    go(0);
    return out;
  }

  inline bool injective(pmap const& f) {
    std::set<int> seen;
    for (int v : f) {
      if (v >= 0 && !seen.insert(v).second) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cantor-space semantics of tables through probe words
  ////////////////////////////////////////////////////////////////////////

  inline bool starts_with(std::string const& w, std::string const& p) {
    return w.rfind(p, 0) == 0;
  }

  // Pairwise incomparable, by direct prefix tests.
  inline bool prefix_code(std::vector<std::string> const& X) {
    for (std::size_t i = 0; i < X.size(); ++i) {
      for (std::size_t j = 0; j < X.size(); ++j) {
        if (i != j && starts_with(X[j], X[i])) {
          return false;
        }
      }
    }
    return true;
  }

  inline std::vector<std::string> words_of_length(std::size_t n,
                                                  std::size_t L) {
    std::vector<std::string> out{""};
    for (std::size_t k = 0; k < L; ++k) {
      std::vector<std::string> next;
      for (auto const& w : out) {
        for (std::size_t i = 0; i < n; ++i) {
          next.push_back(w + static_cast<char>('a' + i));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  // X covers the Cantor space iff every word of the maximal length has a
  // prefix in X.
  inline bool maximal_code(std::vector<std::string> const& X,
                           std::size_t                     n) {
    if (X.empty() || !prefix_code(X)) {
      return false;
    }
    std::size_t L = 0;
    for (auto const& x : X) {
      L = std::max(L, x.size());
    }
    for (auto const& w : words_of_length(n, L)) {
      if (std::none_of(X.begin(), X.end(), [&](auto const& x) {
            return starts_with(w, x);
          })) {
        return false;
      }
    }
    return true;
  }

  // f(w), or nullopt when no domain word prefixes w.
  inline std::optional<std::string> eval(TableMap const& f,
                                         std::string const& w) {
    for (auto const& r : f.rows()) {
      if (starts_with(w, r.x)) {
        return r.y + w.substr(r.x.size());
      }
    }
    return std::nullopt;
  }

  inline std::size_t max_domain_length(TableMap const& f) {
    std::size_t L = 0;
    for (auto const& r : f.rows()) {
      L = std::max(L, r.x.size());
    }
    return L;
  }

  // Maps are equal iff they agree on all words of a length at least every
  // domain word length.
  inline bool same_map(TableMap const& f, TableMap const& g) {
    std::size_t L = std::max(max_domain_length(f), max_domain_length(g));
    for (auto const& w : words_of_length(f.alphabet_size(), L)) {
      if (eval(f, w) != eval(g, w)) {
        return false;
      }
    }
    return true;
  }

  // (f o g)(w) = f(g(w)) on long probes; checks a composed table against
  // the composition of the semantics.
  inline bool is_composite(TableMap const& fg,
                           TableMap const& f,
                           TableMap const& g) {
    std::size_t L = max_domain_length(g) + max_domain_length(f)
                    + max_domain_length(fg);
    for (auto const& w : words_of_length(f.alphabet_size(), L)) {
      std::optional<std::string> expect;
      if (auto gw = eval(g, w)) {
        expect = eval(f, *gw);
      }
      if (eval(fg, w) != expect) {
        return false;
      }
    }
    return true;
  }

  // Injective on the Cantor space iff the image cylinders are pairwise
  // incomparable.
  inline bool injective_map(TableMap const& f) {
    auto Y = f.images();
    return prefix_code(Y);
  }

  ////////////////////////////////////////////////////////////////////////
  // Maximal prefix codes by Kraft-pruned depth-first search
  ////////////////////////////////////////////////////////////////////////

  // All maximal prefix codes over {a, b} with at most max_words words, as
  // sorted word lists. A maximal code is the leaf set of a full binary
  // tree: either {""} or aX together with bY for smaller codes X and Y.
  inline std::set<std::vector<std::string>>
  binary_maximal_codes(std::size_t max_words) {
    // by_size[k] holds the codes with exactly k words
    std::vector<std::vector<std::vector<std::string>>> by_size(max_words + 1);
    if (max_words >= 1) {
      by_size[1].push_back({""});
    }
    for (std::size_t k = 2; k <= max_words; ++k) {
      for (std::size_t left = 1; left < k; ++left) {
        for (auto const& X : by_size[left]) {
          for (auto const& Y : by_size[k - left]) {
            std::vector<std::string> code;
            for (auto const& x : X) {
              code.push_back("a" + x);
            }
            for (auto const& y : Y) {
              code.push_back("b" + y);
            }
            std::sort(code.begin(), code.end());
            by_size[k].push_back(std::move(code));
          }
        }
      }
    }
    std::set<std::vector<std::string>> out;
    for (auto const& codes : by_size) {
      out.insert(codes.begin(), codes.end());
    }
    return out;
  }

}  // namespace rrm::oracle

#endif  // RRM_TESTS_ORACLES_HPP_
