#ifndef RRM_BUILDERS_HPP_
#define RRM_BUILDERS_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rrm/monoid.hpp"

namespace rrm {

  // Practical bound for build_PT / build_I: PT(4) already has 625 elements.
  inline constexpr std::size_t MAX_BUILD_POINTS = 4;

  namespace detail {
    // A partial self-map of {0, ..., n - 1}; UNDEFINED marks points outside
    // the domain.
    using partial_map = std::vector<element_type>;

    inline std::vector<std::pair<element_type, element_type>>
    graph(partial_map const& f) {
      std::vector<std::pair<element_type, element_type>> g;
      for (element_type x = 0; x < f.size(); ++x) {
        if (f[x] != UNDEFINED) {
          g.emplace_back(x, f[x]);
        }
      }
      return g;
    }

    inline std::string map_name(partial_map const& f) {
      std::string out = "{";
      bool        first = true;
      for (auto [x, y] : graph(f)) {
        if (!first) {
          out += ",";
        }
        first = false;
        out += std::to_string(x) + ">" + std::to_string(y);
      }
      return out + "}";
    }

    // (f g)(x) = f(g(x)): g is applied first.
    inline partial_map compose(partial_map const& f, partial_map const& g) {
      partial_map h(g.size(), UNDEFINED);
      for (std::size_t x = 0; x < g.size(); ++x) {
        if (g[x] != UNDEFINED) {
          h[x] = f[g[x]];
        }
      }
      return h;
    }

    inline partial_map domain_identity(partial_map const& f) {
      partial_map e(f.size(), UNDEFINED);
      for (element_type x = 0; x < f.size(); ++x) {
        if (f[x] != UNDEFINED) {
          e[x] = x;
        }
      }
      return e;
    }

    inline bool is_injective(partial_map const& f) {
      std::vector<bool> seen(f.size(), false);
      for (auto y : f) {
        if (y != UNDEFINED) {
          if (seen[y]) {
            return false;
          }
          seen[y] = true;
        }
      }
      return true;
    }

    // The right restriction monoid of the given partial maps under
    // composition, with star = identity on the domain. The maps are sorted by
    // their graphs, compared lexicographically as sequences of pairs.
    inline FiniteRRMonoid monoid_of_maps(std::vector<partial_map> maps,
                                         std::string              name) {
      std::sort(maps.begin(), maps.end(), [](auto const& f, auto const& g) {
        return graph(f) < graph(g);
      });
      std::map<partial_map, element_type> index;
      for (element_type i = 0; i < maps.size(); ++i) {
        index.emplace(maps[i], i);
      }
      std::vector<std::string>               names;
      std::vector<std::vector<element_type>> mul(maps.size());
      std::vector<element_type>              star;
      for (element_type i = 0; i < maps.size(); ++i) {
        names.push_back(map_name(maps[i]));
        for (element_type j = 0; j < maps.size(); ++j) {
          mul[i].push_back(index.at(compose(maps[i], maps[j])));
        }
        star.push_back(index.at(domain_identity(maps[i])));
      }
      std::size_t const n = maps.front().size();
      partial_map       id(n);
      for (element_type x = 0; x < n; ++x) {
        id[x] = x;
      }
      partial_map empty(n, UNDEFINED);
      return FiniteRRMonoid(std::move(name),
                            std::move(names),
                            std::move(mul),
                            std::move(star),
                            index.at(id),
                            index.at(empty));
    }

    inline std::vector<partial_map> all_partial_maps(std::size_t n) {
      std::vector<partial_map> out;
      partial_map              f(n, UNDEFINED);
      // odometer over {UNDEFINED, 0, ..., n - 1}^n
      while (true) {
        out.push_back(f);
        std::size_t x = 0;
        while (x < n) {
          if (f[x] == UNDEFINED) {
            f[x] = 0;
            break;
          } else if (f[x] + 1 < n) {
            ++f[x];
            break;
          }
          f[x] = UNDEFINED;
          ++x;
        }
        if (x == n) {
          break;
        }
      }
      return out;
    }

    inline void check_points(std::size_t n, char const* who) {
      if (n < 1 || n > MAX_BUILD_POINTS) {
        throw ResourceError(std::string(who) + ": n = " + std::to_string(n)
                            + " outside the supported range 1.."
                            + std::to_string(MAX_BUILD_POINTS));
      }
    }
  }  // namespace detail

  // PT(n): all partial self-maps of an n-set; (n + 1)^n elements.
  inline FiniteRRMonoid build_PT(std::size_t n) {
    detail::check_points(n, "build_PT");
    return detail::monoid_of_maps(detail::all_partial_maps(n),
                                  "PT" + std::to_string(n));
  }

  // I(n): the partial bijections of an n-set, the symmetric inverse monoid.
  inline FiniteRRMonoid build_I(std::size_t n) {
    detail::check_points(n, "build_I");
    auto maps = detail::all_partial_maps(n);
    std::erase_if(maps, [](auto const& f) { return !detail::is_injective(f); });
    return detail::monoid_of_maps(std::move(maps), "I" + std::to_string(n));
  }

  // The Boolean algebra of subsets of a k-set, as an inverse monoid in which
  // every element is a projection: product is intersection, star is the
  // identity.
  inline FiniteRRMonoid build_boolean_algebra(std::size_t atoms) {
    if (atoms > 6) {
      throw ResourceError("build_boolean_algebra: at most 6 atoms");
    }
    std::size_t const              n = std::size_t(1) << atoms;
    std::vector<std::string>       names;
    std::vector<std::vector<element_type>> mul(n);
    std::vector<element_type>      star;
    for (element_type a = 0; a < n; ++a) {
      std::string name = "{";
      for (std::size_t i = 0; i < atoms; ++i) {
        if (a & (1u << i)) {
          name += (name.size() > 1 ? "," : "") + std::to_string(i);
        }
      }
      names.push_back(name + "}");
      for (element_type b = 0; b < n; ++b) {
        mul[a].push_back(a & b);
      }
      star.push_back(a);
    }
    return FiniteRRMonoid("B" + std::to_string(atoms),
                          std::move(names),
                          std::move(mul),
                          std::move(star),
                          static_cast<element_type>(n - 1),
                          element_type(0));
  }

}  // namespace rrm

#endif  // RRM_BUILDERS_HPP_
