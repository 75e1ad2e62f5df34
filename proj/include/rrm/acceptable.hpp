#ifndef RRM_ACCEPTABLE_HPP_
#define RRM_ACCEPTABLE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "rrm/monoid.hpp"

namespace rrm {

  // A set of elements of a host FiniteRRMonoid, as a bitmask. When it is a
  // nonempty left-compatible order ideal it is an element of R(host).
  class AcceptableSet {
   public:
    using bits_type = boost::dynamic_bitset<std::uint64_t>;

    AcceptableSet() = default;

    explicit AcceptableSet(std::size_t host_size) : _bits(host_size) {}

    explicit AcceptableSet(bits_type bits) : _bits(std::move(bits)) {}

    [[nodiscard]] bool contains(element_type a) const {
      return _bits.test(a);
    }

    void insert(element_type a) {
      _bits.set(a);
    }

    [[nodiscard]] std::size_t size() const {
      return _bits.count();
    }

    [[nodiscard]] std::size_t host_size() const {
      return _bits.size();
    }

    [[nodiscard]] bool is_subset_of(AcceptableSet const& other) const {
      return _bits.is_subset_of(other._bits);
    }

    [[nodiscard]] std::vector<element_type> members() const {
      std::vector<element_type> out;
      for (auto i = _bits.find_first(); i != bits_type::npos;
           i      = _bits.find_next(i)) {
        out.push_back(static_cast<element_type>(i));
      }
      return out;
    }

    [[nodiscard]] bits_type const& bits() const {
      return _bits;
    }

    friend AcceptableSet operator|(AcceptableSet const& x,
                                   AcceptableSet const& y) {
      return AcceptableSet(x._bits | y._bits);
    }

    friend bool operator==(AcceptableSet const& x, AcceptableSet const& y) {
      return x._bits == y._bits;
    }

    // Canonical order: by cardinality, then by sorted member list.
    friend bool operator<(AcceptableSet const& x, AcceptableSet const& y) {
      auto cx = x.size(), cy = y.size();
      if (cx != cy) {
        return cx < cy;
      }
      return x.members() < y.members();
    }

   private:
    bits_type _bits;
  };

  inline bool is_order_ideal(FiniteRRMonoid const& M, AcceptableSet const& A) {
    for (auto a : A.members()) {
      for (element_type x = 0; x < M.size(); ++x) {
        if (M.leq(x, a) && !A.contains(x)) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool is_left_compatible_set(FiniteRRMonoid const&         M,
                                     std::span<element_type const> F) {
    for (std::size_t i = 0; i < F.size(); ++i) {
      for (std::size_t j = i + 1; j < F.size(); ++j) {
        if (!M.left_compatible(F[i], F[j])) {
          return false;
        }
      }
    }
    return true;
  }

  // Nonempty, downward closed and pairwise left-compatible.
  inline bool is_acceptable(FiniteRRMonoid const& M, AcceptableSet const& A) {
    auto mem = A.members();
    return !mem.empty() && is_order_ideal(M, A)
           && is_left_compatible_set(M, mem);
  }

  // F^ (down-closure) of a pairwise left-compatible family.
  inline AcceptableSet down_closure(FiniteRRMonoid const&         M,
                                    std::span<element_type const> F) {
    for (std::size_t i = 0; i < F.size(); ++i) {
      for (std::size_t j = i + 1; j < F.size(); ++j) {
        if (!M.left_compatible(F[i], F[j])) {
          throw PreconditionError("down_closure: " + M.element_name(F[i])
                                  + " and " + M.element_name(F[j])
                                  + " are not left-compatible");
        }
      }
    }
    AcceptableSet A(M.size());
    for (auto a : F) {
      for (element_type x = 0; x < M.size(); ++x) {
        if (M.leq(x, a)) {
          A.insert(x);
        }
      }
    }
    return A;
  }

  inline AcceptableSet down_closure(FiniteRRMonoid const& M,
                                    std::initializer_list<element_type> F) {
    std::vector<element_type> v(F);
    return down_closure(M, std::span<element_type const>(v));
  }

  // The maximal members of A, in increasing index order.
  inline std::vector<element_type> maximal_members(FiniteRRMonoid const& M,
                                                   AcceptableSet const&  A) {
    auto                      mem = A.members();
    std::vector<element_type> out;
    for (auto a : mem) {
      bool maximal = std::none_of(mem.begin(), mem.end(), [&](auto b) {
        return b != a && M.leq(a, b);
      });
      if (maximal) {
        out.push_back(a);
      }
    }
    return out;
  }

  // Setwise product {ab : a in A, b in B}.
  inline AcceptableSet set_product(FiniteRRMonoid const& M,
                                   AcceptableSet const&  A,
                                   AcceptableSet const&  B) {
    AcceptableSet out(M.size());
    auto          bm = B.members();
    for (auto a : A.members()) {
      for (auto b : bm) {
        out.insert(M.product(a, b));
      }
    }
    return out;
  }

  // A* = {a* : a in A}.
  inline AcceptableSet set_star(FiniteRRMonoid const& M,
                                AcceptableSet const&  A) {
    AcceptableSet out(M.size());
    for (auto a : A.members()) {
      out.insert(M.star(a));
    }
    return out;
  }

  // Calls f on every nonempty antichain of pairwise left-compatible elements
  // of M. These are exactly the sets of maximal members of the acceptable
  // sets, so each acceptable set is reached once. Stops early when f returns
  // false.
  inline void for_each_compatible_antichain(
      FiniteRRMonoid const&                                        M,
      std::function<bool(std::vector<element_type> const&)> const& f) {
    auto const                n = static_cast<element_type>(M.size());
    std::vector<element_type> chosen;
    bool                      stop = false;
    std::function<void(element_type)> extend = [&](element_type from) {
      for (element_type x = from; x < n && !stop; ++x) {
        bool ok = std::all_of(chosen.begin(), chosen.end(), [&](auto c) {
          return !M.leq(x, c) && !M.leq(c, x) && M.left_compatible(x, c);
        });
        if (!ok) {
          continue;
        }
        chosen.push_back(x);
        if (!f(chosen)) {
          stop = true;
        } else {
          extend(x + 1);
        }
        chosen.pop_back();
      }
    };
    extend(0);
  }

}  // namespace rrm

#endif  // RRM_ACCEPTABLE_HPP_
