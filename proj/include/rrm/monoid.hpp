#ifndef RRM_MONOID_HPP_
#define RRM_MONOID_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rrm/errors.hpp"

namespace rrm {

  // Elements of a finite monoid are dense indices 0, ..., size() - 1.
  using element_type = std::uint32_t;

  inline constexpr element_type UNDEFINED
      = std::numeric_limits<element_type>::max();

  // A finite monoid with a unary star operation, given by explicit tables.
  //
  // The constructor only checks that the tables are well formed (square,
  // every entry in range); whether the right restriction axioms hold is the
  // job of check_axioms. The natural partial order a <= b, defined by
  // a = b a*, and the partial-unit inverses are tabulated once on
  // construction, so that the object is immutable afterwards.
  class FiniteRRMonoid {
   public:
    FiniteRRMonoid(std::string                            name,
                   std::vector<std::string>               element_names,
                   std::vector<std::vector<element_type>> mul,
                   std::vector<element_type>              star,
                   element_type                           one,
                   std::optional<element_type>            zero)
        : _name(std::move(name)),
          _names(std::move(element_names)),
          _size(0),
          _mul(),
          _star(std::move(star)),
          _one(one),
          _zero(zero) {
      _size = mul.size();
      if (_size == 0) {
        throw StructuralError("mul: the table has no rows");
      }
      _mul.reserve(_size * _size);
      for (std::size_t i = 0; i < _size; ++i) {
        if (mul[i].size() != _size) {
          throw StructuralError("mul: row " + std::to_string(i) + " has "
                                + std::to_string(mul[i].size())
                                + " columns, expected "
                                + std::to_string(_size));
        }
        for (std::size_t j = 0; j < _size; ++j) {
          if (mul[i][j] >= _size) {
            throw StructuralError("mul: entry at row " + std::to_string(i)
                                  + ", column " + std::to_string(j) + " is "
                                  + std::to_string(mul[i][j])
                                  + ", out of range");
          }
          _mul.push_back(mul[i][j]);
        }
      }
      if (_star.size() != _size) {
        throw StructuralError("star: has " + std::to_string(_star.size())
                              + " entries, expected "
                              + std::to_string(_size));
      }
      for (std::size_t i = 0; i < _size; ++i) {
        if (_star[i] >= _size) {
          throw StructuralError("star: entry " + std::to_string(i)
                                + " is out of range");
        }
      }
      if (_one >= _size) {
        throw StructuralError("one: index out of range");
      }
      if (_zero.has_value() && *_zero >= _size) {
        throw StructuralError("zero: index out of range");
      }
      if (_names.empty()) {
        for (std::size_t i = 0; i < _size; ++i) {
          _names.push_back("e" + std::to_string(i));
        }
      } else if (_names.size() != _size) {
        throw StructuralError("elements: has " + std::to_string(_names.size())
                              + " names, expected " + std::to_string(_size));
      }
      init_order();
      init_inverses();
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _size;
    }

    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }

    [[nodiscard]] std::string const& element_name(element_type a) const {
      return _names[a];
    }

    [[nodiscard]] std::vector<std::string> const& element_names() const {
      return _names;
    }

    [[nodiscard]] element_type product(element_type a, element_type b) const {
      return _mul[a * _size + b];
    }

    [[nodiscard]] element_type star(element_type a) const {
      return _star[a];
    }

    [[nodiscard]] std::vector<element_type> const& star_table() const {
      return _star;
    }

    [[nodiscard]] element_type one() const noexcept {
      return _one;
    }

    [[nodiscard]] std::optional<element_type> zero() const noexcept {
      return _zero;
    }

    // a <= b iff a = b a*
    [[nodiscard]] bool leq(element_type a, element_type b) const {
      return _leq[a * _size + b] != 0;
    }

    [[nodiscard]] bool is_projection(element_type a) const {
      return _star[a] == a;
    }

    // a ~ b iff a b* = b a*
    [[nodiscard]] bool left_compatible(element_type a, element_type b) const {
      return product(a, _star[b]) == product(b, _star[a]);
    }

    // The unique b with b a = a* and a b = b*, if a is a partial unit.
    [[nodiscard]] std::optional<element_type> inverse_of(element_type a) const {
      if (_inverse[a] == UNDEFINED) {
        return std::nullopt;
      }
      return _inverse[a];
    }

    [[nodiscard]] bool is_partial_unit(element_type a) const {
      return _inverse[a] != UNDEFINED;
    }

    // Compatible in the inverse-semigroup sense: left-compatible and the
    // inverses are left-compatible. Only meaningful for partial units.
    [[nodiscard]] bool compatible(element_type a, element_type b) const {
      if (!is_partial_unit(a) || !is_partial_unit(b)) {
        return false;
      }
      return left_compatible(a, b) && left_compatible(_inverse[a], _inverse[b]);
    }

    // Number of elements below a in the natural partial order.
    [[nodiscard]] std::size_t down_count(element_type a) const {
      return _down_count[a];
    }

    // Least upper bound of {a, b}, if one exists.
    [[nodiscard]] std::optional<element_type> join(element_type a,
                                                   element_type b) const {
      element_type best = UNDEFINED;
      for (element_type c = 0; c < _size; ++c) {
        if (leq(a, c) && leq(b, c)
            && (best == UNDEFINED || _down_count[c] < _down_count[best])) {
          best = c;
        }
      }
      if (best == UNDEFINED) {
        return std::nullopt;
      }
      for (element_type c = 0; c < _size; ++c) {
        if (leq(a, c) && leq(b, c) && !leq(best, c)) {
          return std::nullopt;
        }
      }
      return best;
    }

    // Least upper bound of a nonempty family, folding binary joins. Returns
    // nullopt if some intermediate join is missing.
    [[nodiscard]] std::optional<element_type>
    join(std::span<element_type const> family) const {
      if (family.empty()) {
        return _zero;
      }
      element_type acc = family[0];
      for (std::size_t i = 1; i < family.size(); ++i) {
        auto j = join(acc, family[i]);
        if (!j) {
          return std::nullopt;
        }
        acc = *j;
      }
      return acc;
    }

    [[nodiscard]] std::vector<element_type> down_set(element_type a) const {
      std::vector<element_type> out;
      for (element_type x = 0; x < _size; ++x) {
        if (leq(x, a)) {
          out.push_back(x);
        }
      }
      return out;
    }

    [[nodiscard]] std::vector<std::vector<element_type>> mul_rows() const {
      std::vector<std::vector<element_type>> rows(
          _size, std::vector<element_type>(_size));
      for (std::size_t i = 0; i < _size; ++i) {
        for (std::size_t j = 0; j < _size; ++j) {
          rows[i][j] = _mul[i * _size + j];
        }
      }
      return rows;
    }

    friend bool operator==(FiniteRRMonoid const& x, FiniteRRMonoid const& y) {
      return x._name == y._name && x._names == y._names && x._mul == y._mul
             && x._star == y._star && x._one == y._one && x._zero == y._zero;
    }

   private:
    void init_order() {
      _leq.assign(_size * _size, 0);
      _down_count.assign(_size, 0);
      for (element_type a = 0; a < _size; ++a) {
        for (element_type b = 0; b < _size; ++b) {
          if (product(b, _star[a]) == a) {
            _leq[a * _size + b] = 1;
            ++_down_count[b];
          }
        }
      }
    }

    void init_inverses() {
      _inverse.assign(_size, UNDEFINED);
      for (element_type a = 0; a < _size; ++a) {
        for (element_type b = 0; b < _size; ++b) {
          if (product(b, a) == _star[a] && product(a, b) == _star[b]) {
            _inverse[a] = b;
            break;
          }
        }
      }
    }

    std::string                 _name;
    std::vector<std::string>    _names;
    std::size_t                 _size;
    std::vector<element_type>   _mul;
    std::vector<element_type>   _star;
    element_type                _one;
    std::optional<element_type> _zero;
    std::vector<std::uint8_t>   _leq;
    std::vector<std::size_t>    _down_count;
    std::vector<element_type>   _inverse;
  };

  ////////////////////////////////////////////////////////////////////////
  // Free-function forms of the basic order theory
  ////////////////////////////////////////////////////////////////////////

  inline bool leq(FiniteRRMonoid const& M, element_type a, element_type b) {
    return M.leq(a, b);
  }

  inline bool left_compatible(FiniteRRMonoid const& M,
                              element_type          a,
                              element_type          b) {
    return M.left_compatible(a, b);
  }

  // For left-compatible a, b the meet exists and equals a b*.
  inline element_type meet_of_compatible(FiniteRRMonoid const& M,
                                         element_type          a,
                                         element_type          b) {
    if (!M.left_compatible(a, b)) {
      throw PreconditionError("meet_of_compatible: " + M.element_name(a)
                              + " and " + M.element_name(b)
                              + " are not left-compatible");
    }
    return M.product(a, M.star(b));
  }

  inline std::optional<element_type> inverse_of(FiniteRRMonoid const& M,
                                                element_type          a) {
    return M.inverse_of(a);
  }

  // Inv(M), in increasing index order.
  inline std::vector<element_type> partial_units(FiniteRRMonoid const& M) {
    std::vector<element_type> out;
    for (element_type a = 0; a < M.size(); ++a) {
      if (M.is_partial_unit(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  inline std::vector<element_type> projections(FiniteRRMonoid const& M) {
    std::vector<element_type> out;
    for (element_type a = 0; a < M.size(); ++a) {
      if (M.is_projection(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  // Tot(M): elements with a* = 1.
  inline std::vector<element_type> total_elements(FiniteRRMonoid const& M) {
    std::vector<element_type> out;
    for (element_type a = 0; a < M.size(); ++a) {
      if (M.star(a) == M.one()) {
        out.push_back(a);
      }
    }
    return out;
  }

  // The submonoid on `elements` (which must contain one and be closed under
  // product and star), re-indexed in the given order.
  inline FiniteRRMonoid submonoid(FiniteRRMonoid const&           M,
                                  std::span<element_type const>   elements,
                                  std::string                     name) {
    std::vector<element_type> index(M.size(), UNDEFINED);
    for (element_type i = 0; i < elements.size(); ++i) {
      index[elements[i]] = i;
    }
    auto lookup = [&](element_type a) {
      if (index[a] == UNDEFINED) {
        throw PreconditionError("submonoid: not closed, "
                                + M.element_name(a) + " is missing");
      }
      return index[a];
    };
    std::vector<std::string>               names;
    std::vector<std::vector<element_type>> mul;
    std::vector<element_type>              star;
    for (auto a : elements) {
      names.push_back(M.element_name(a));
      std::vector<element_type> row;
      for (auto b : elements) {
        row.push_back(lookup(M.product(a, b)));
      }
      mul.push_back(std::move(row));
      star.push_back(lookup(M.star(a)));
    }
    std::optional<element_type> zero;
    if (M.zero() && index[*M.zero()] != UNDEFINED) {
      zero = index[*M.zero()];
    }
    return FiniteRRMonoid(std::move(name),
                          std::move(names),
                          std::move(mul),
                          std::move(star),
                          lookup(M.one()),
                          zero);
  }

}  // namespace rrm

#endif  // RRM_MONOID_HPP_
