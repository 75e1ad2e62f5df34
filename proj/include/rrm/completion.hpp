#ifndef RRM_COMPLETION_HPP_
#define RRM_COMPLETION_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rrm/acceptable.hpp"
#include "rrm/monoid.hpp"

namespace rrm {

  inline constexpr std::size_t DEFAULT_MAX_ACCEPTABLE = 4096;

  namespace detail {
    inline std::string set_name(FiniteRRMonoid const&            M,
                                std::vector<element_type> const& gens) {
      std::string out = "{";
      for (std::size_t i = 0; i < gens.size(); ++i) {
        out += (i == 0 ? "" : ", ") + M.element_name(gens[i]);
      }
      return out + "}";
    }

    // Elements of a monoid whose elements are sets of host elements.
    class SetIndex {
     public:
      SetIndex() = default;

      explicit SetIndex(std::vector<AcceptableSet> sets)
          : _sets(std::move(sets)) {
        for (element_type i = 0; i < _sets.size(); ++i) {
          _index.emplace(_sets[i].bits(), i);
        }
      }

      [[nodiscard]] std::optional<element_type>
      find(AcceptableSet const& A) const {
        auto it = _index.find(A.bits());
        if (it == _index.end()) {
          return std::nullopt;
        }
        return it->second;
      }

      [[nodiscard]] std::vector<AcceptableSet> const& sets() const {
        return _sets;
      }

     private:
      std::vector<AcceptableSet>                             _sets;
      std::map<AcceptableSet::bits_type, element_type>       _index;
    };
  }  // namespace detail

  // R(M) as a table monoid, together with the acceptable set behind each
  // element and the embedding iota(a) = a^.
  struct Completion {
    FiniteRRMonoid             monoid;
    std::vector<AcceptableSet> sets;
    std::vector<element_type>  iota;
    detail::SetIndex           index;

    [[nodiscard]] std::optional<element_type>
    find(AcceptableSet const& A) const {
      return index.find(A);
    }
  };

  // All acceptable sets of M, in canonical order.
  inline std::vector<AcceptableSet>
  acceptable_sets(FiniteRRMonoid const& M,
                  std::size_t           bound = DEFAULT_MAX_ACCEPTABLE) {
    std::vector<AcceptableSet> out;
    for_each_compatible_antichain(
        M, [&](std::vector<element_type> const& F) {
          out.push_back(down_closure(M, F));
          return out.size() <= bound;
        });
    if (out.size() > bound) {
      throw ResourceError("acceptable_sets: more than " + std::to_string(bound)
                          + " acceptable sets in " + M.name()
                          + " (raise --max-acceptable)");
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // R(M): the acceptable sets under setwise product and A* = {a*}, with
  // identity 1^.
  inline Completion completion(FiniteRRMonoid const& M,
                               std::size_t bound = DEFAULT_MAX_ACCEPTABLE) {
    auto             sets = acceptable_sets(M, bound);
    detail::SetIndex index(sets);
    auto             lookup = [&](AcceptableSet const& A, char const* what) {
      auto i = index.find(A);
      if (!i) {
        throw StructuralError(std::string("completion: ") + what
                              + " of acceptable sets is not acceptable in "
                              + M.name());
      }
      return *i;
    };
    std::vector<std::string>               names;
    std::vector<std::vector<element_type>> mul(sets.size());
    std::vector<element_type>              star;
    for (element_type i = 0; i < sets.size(); ++i) {
      names.push_back(detail::set_name(M, maximal_members(M, sets[i])));
      for (element_type j = 0; j < sets.size(); ++j) {
        mul[i].push_back(
            lookup(set_product(M, sets[i], sets[j]), "the product"));
      }
      star.push_back(lookup(set_star(M, sets[i]), "the star"));
    }
    std::vector<element_type> iota;
    for (element_type a = 0; a < M.size(); ++a) {
      iota.push_back(lookup(down_closure(M, {a}), "a principal ideal"));
    }
    std::optional<element_type> zero;
    if (M.zero()) {
      zero = iota[*M.zero()];
    }
    FiniteRRMonoid R("R(" + M.name() + ")",
                     std::move(names),
                     std::move(mul),
                     std::move(star),
                     iota[M.one()],
                     zero);
    return Completion{std::move(R), std::move(sets), std::move(iota),
                      std::move(index)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Nuclei
  ////////////////////////////////////////////////////////////////////////

  struct LawViolation {
    std::string               law;
    std::vector<element_type> witness;
  };

  struct NucleusReport {
    bool                      passed = true;
    std::vector<LawViolation> violations;  // first witness of each law

    [[nodiscard]] bool violates(std::string const& law) const {
      return std::any_of(violations.begin(),
                         violations.end(),
                         [&](auto const& v) { return v.law == law; });
    }
  };

  // Checks the nucleus laws for nu on every element of S:
  //
  //   N1  a <= nu(a)
  //   N2  a <= b  =>  nu(a) <= nu(b)
  //   N3  nu(nu(a)) = nu(a)
  //   N4  nu(a) nu(b) <= nu(ab)
  //   N5  e a projection  =>  nu(e) a projection
  //   N6  nu(a*) = nu(nu(a)*)
  inline NucleusReport check_nucleus(FiniteRRMonoid const&            S,
                                     std::vector<element_type> const& nu) {
    NucleusReport report;
    auto          fail = [&](char const* law, std::vector<element_type> w) {
      if (!report.violates(law)) {
        report.passed = false;
        report.violations.push_back({law, std::move(w)});
      }
    };
    auto const n = static_cast<element_type>(S.size());
    for (element_type a = 0; a < n; ++a) {
      if (!S.leq(a, nu[a])) {
        fail("N1", {a});
      }
      if (nu[nu[a]] != nu[a]) {
        fail("N3", {a});
      }
      if (S.is_projection(a) && !S.is_projection(nu[a])) {
        fail("N5", {a});
      }
      if (nu[S.star(a)] != nu[S.star(nu[a])]) {
        fail("N6", {a});
      }
      for (element_type b = 0; b < n; ++b) {
        if (S.leq(a, b) && !S.leq(nu[a], nu[b])) {
          fail("N2", {a, b});
        }
        if (!S.leq(S.product(nu[a], nu[b]), nu[S.product(a, b)])) {
          fail("N4", {a, b});
        }
      }
    }
    std::sort(report.violations.begin(),
              report.violations.end(),
              [](auto const& x, auto const& y) { return x.law < y.law; });
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Universal property of iota : M -> R(M)
  ////////////////////////////////////////////////////////////////////////

  // alpha : M -> T preserves product, star and the identity.
  inline bool is_homomorphism(FiniteRRMonoid const&            M,
                              FiniteRRMonoid const&            T,
                              std::vector<element_type> const& alpha) {
    if (alpha.size() != M.size() || alpha[M.one()] != T.one()) {
      return false;
    }
    for (element_type a = 0; a < M.size(); ++a) {
      if (alpha[a] >= T.size() || alpha[M.star(a)] != T.star(alpha[a])) {
        return false;
      }
      for (element_type b = 0; b < M.size(); ++b) {
        if (alpha[M.product(a, b)] != T.product(alpha[a], alpha[b])) {
          return false;
        }
      }
    }
    return true;
  }

  // beta : R(M) -> T is a homomorphism that preserves the joins of
  // left-compatible pairs (and the empty join, when both have a zero) and
  // satisfies beta . iota = alpha.
  inline bool is_complete_extension(Completion const&                R,
                                    FiniteRRMonoid const&            T,
                                    std::vector<element_type> const& alpha,
                                    std::vector<element_type> const& beta) {
    auto const& S = R.monoid;
    if (!is_homomorphism(S, T, beta)) {
      return false;
    }
    for (element_type a = 0; a < alpha.size(); ++a) {
      if (beta[R.iota[a]] != alpha[a]) {
        return false;
      }
    }
    if (S.zero() && T.zero() && beta[*S.zero()] != *T.zero()) {
      return false;
    }
    for (element_type A = 0; A < S.size(); ++A) {
      for (element_type B = A + 1; B < S.size(); ++B) {
        if (!S.left_compatible(A, B)) {
          continue;
        }
        auto j  = S.join(A, B);
        auto jt = T.join(beta[A], beta[B]);
        if (!j || !jt || beta[*j] != *jt) {
          return false;
        }
      }
    }
    return true;
  }

  // beta(A) = join of alpha(a) over a in A.
  inline std::vector<element_type>
  universal_extension(FiniteRRMonoid const&            M,
                      Completion const&                R,
                      FiniteRRMonoid const&            T,
                      std::vector<element_type> const& alpha) {
    if (!is_homomorphism(M, T, alpha)) {
      throw PreconditionError("universal_extension: alpha is not a "
                              "homomorphism of right restriction monoids");
    }
    std::vector<element_type> beta;
    for (auto const& A : R.sets) {
      std::vector<element_type> image;
      for (auto a : A.members()) {
        image.push_back(alpha[a]);
      }
      auto j = T.join(image);
      if (!j) {
        throw StructuralError("universal_extension: " + T.name()
                              + " has no join for the image of "
                              + detail::set_name(M, maximal_members(M, A)));
      }
      beta.push_back(*j);
    }
    return beta;
  }

}  // namespace rrm

#endif  // RRM_COMPLETION_HPP_
