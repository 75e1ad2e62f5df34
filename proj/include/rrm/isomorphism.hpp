#ifndef RRM_ISOMORPHISM_HPP_
#define RRM_ISOMORPHISM_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rrm/monoid.hpp"

namespace rrm {

  inline constexpr std::size_t DEFAULT_ISOMORPHISM_BOUND = 128;

  namespace detail {
    using signature = std::array<std::size_t, 9>;

    // Isomorphism invariants of each element.
    inline std::vector<signature> signatures(FiniteRRMonoid const& M) {
      auto const             n = static_cast<element_type>(M.size());
      std::vector<signature> out(n);
      for (element_type a = 0; a < n; ++a) {
        std::size_t up = 0, fiber = 0, compat = 0, fixes = 0;
        for (element_type x = 0; x < n; ++x) {
          up += M.leq(a, x);
          fiber += M.star(x) == a;
          compat += M.left_compatible(a, x);
          fixes += M.product(a, x) == x;
        }
        // index + period of the cyclic submonoid, folded into one number
        std::vector<element_type> powers{a};
        element_type              p = M.product(a, a);
        while (std::find(powers.begin(), powers.end(), p) == powers.end()) {
          powers.push_back(p);
          p = M.product(p, a);
        }
        auto index = static_cast<std::size_t>(
            std::find(powers.begin(), powers.end(), p) - powers.begin());
        out[a] = {a == M.one(),
                  M.zero() == a,
                  M.is_projection(a),
                  M.down_count(a),
                  up,
                  M.down_count(M.star(a)),
                  fiber,
                  compat * 1024 + fixes,
                  index * 1024 + powers.size()};
      }
      return out;
    }

    class IsomorphismSearch {
     public:
      IsomorphismSearch(FiniteRRMonoid const& M, FiniteRRMonoid const& N)
          : _M(M), _N(N), _sigM(signatures(M)), _sigN(signatures(N)) {}

      std::optional<std::vector<element_type>> run() {
        auto a = _sigM, b = _sigN;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
          return std::nullopt;
        }
        choose_generators();
        std::vector<element_type> phi(_M.size(), UNDEFINED);
        std::vector<bool>         used(_N.size(), false);
        std::vector<element_type> known;
        if (!assign(phi, used, known, _M.one(), _N.one())) {
          return std::nullopt;
        }
        if (_M.zero() && _N.zero()
            && !assign(phi, used, known, *_M.zero(), *_N.zero())) {
          return std::nullopt;
        }
        if (search(0, phi, used, known)) {
          return _result;
        }
        return std::nullopt;
      }

     private:
      // Greedy generating set under product and star, rarest signatures
      // first so that the search branches as little as possible.
      void choose_generators() {
        std::map<signature, std::size_t> freq;
        for (auto const& s : _sigM) {
          ++freq[s];
        }
        std::vector<element_type> order(_M.size());
        for (element_type i = 0; i < _M.size(); ++i) {
          order[i] = i;
        }
        std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
          return freq[_sigM[x]] < freq[_sigM[y]];
        });
        std::vector<bool> reached(_M.size(), false);
        std::vector<element_type> closed;
        auto close = [&](element_type g) {
          std::vector<element_type> todo{g};
          if (!reached[g]) {
            reached[g] = true;
            closed.push_back(g);
          }
          while (!todo.empty()) {
            element_type x = todo.back();
            todo.pop_back();
            std::vector<element_type> fresh{_M.star(x)};
            for (auto y : closed) {
              fresh.push_back(_M.product(x, y));
              fresh.push_back(_M.product(y, x));
            }
            for (auto z : fresh) {
              if (!reached[z]) {
                reached[z] = true;
                closed.push_back(z);
                todo.push_back(z);
              }
            }
          }
        };
        close(_M.one());
        if (_M.zero()) {
          close(*_M.zero());
        }
        for (auto g : order) {
          if (!reached[g]) {
            _generators.push_back(g);
            close(g);
          }
        }
      }

      // Sets phi(x) = y and propagates through products and stars of
      // everything already mapped; false on any inconsistency.
      bool assign(std::vector<element_type>& phi,
                  std::vector<bool>&         used,
                  std::vector<element_type>& known,
                  element_type               x,
                  element_type               y) {
        std::vector<std::pair<element_type, element_type>> todo{{x, y}};
        while (!todo.empty()) {
          auto [u, v] = todo.back();
          todo.pop_back();
          if (phi[u] != UNDEFINED) {
            if (phi[u] != v) {
              return false;
            }
            continue;
          }
          if (used[v] || _sigM[u] != _sigN[v]) {
            return false;
          }
          phi[u]  = v;
          used[v] = true;
          known.push_back(u);
          todo.emplace_back(_M.star(u), _N.star(v));
          for (auto w : known) {
            todo.emplace_back(_M.product(u, w), _N.product(v, phi[w]));
            todo.emplace_back(_M.product(w, u), _N.product(phi[w], v));
          }
        }
        return true;
      }

      bool search(std::size_t                      k,
                  std::vector<element_type> const& phi,
                  std::vector<bool> const&         used,
                  std::vector<element_type> const& known) {
        if (k == _generators.size()) {
          _result = phi;
          return std::find(phi.begin(), phi.end(), UNDEFINED) == phi.end();
        }
        element_type g = _generators[k];
        if (phi[g] != UNDEFINED) {
          return search(k + 1, phi, used, known);
        }
        for (element_type h = 0; h < _N.size(); ++h) {
          if (used[h] || _sigN[h] != _sigM[g]) {
            continue;
          }
          auto phi2   = phi;
          auto used2  = used;
          auto known2 = known;
          if (assign(phi2, used2, known2, g, h)
              && search(k + 1, phi2, used2, known2)) {
            return true;
          }
        }
        return false;
      }

      FiniteRRMonoid const&     _M;
      FiniteRRMonoid const&     _N;
      std::vector<signature>    _sigM;
      std::vector<signature>    _sigN;
      std::vector<element_type> _generators;
      std::vector<element_type> _result;
    };
  }  // namespace detail

  // A bijection M -> N preserving product and star, if there is one.
  inline std::optional<std::vector<element_type>>
  find_isomorphism(FiniteRRMonoid const& M,
                   FiniteRRMonoid const& N,
                   std::size_t           bound = DEFAULT_ISOMORPHISM_BOUND) {
    if (M.size() > bound || N.size() > bound) {
      throw ResourceError("find_isomorphism: sizes " + std::to_string(M.size())
                          + " and " + std::to_string(N.size())
                          + " exceed the bound " + std::to_string(bound));
    }
    if (M.size() != N.size() || M.zero().has_value() != N.zero().has_value()) {
      return std::nullopt;
    }
    if (M.mul_rows() == N.mul_rows() && M.star_table() == N.star_table()
        && M.one() == N.one()) {
      std::vector<element_type> id(M.size());
      for (element_type a = 0; a < M.size(); ++a) {
        id[a] = a;
      }
      return id;
    }
    return detail::IsomorphismSearch(M, N).run();
  }

  // phi is a bijection M -> N preserving product, star and the identity.
  inline bool is_isomorphism(FiniteRRMonoid const&            M,
                             FiniteRRMonoid const&            N,
                             std::vector<element_type> const& phi) {
    if (phi.size() != M.size() || M.size() != N.size()) {
      return false;
    }
    std::vector<bool> hit(N.size(), false);
    for (auto y : phi) {
      if (y >= N.size() || hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    if (phi[M.one()] != N.one()) {
      return false;
    }
    for (element_type a = 0; a < M.size(); ++a) {
      if (phi[M.star(a)] != N.star(phi[a])) {
        return false;
      }
      for (element_type b = 0; b < M.size(); ++b) {
        if (phi[M.product(a, b)] != N.product(phi[a], phi[b])) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace rrm

#endif  // RRM_ISOMORPHISM_HPP_
