#ifndef RRM_COMPANION_HPP_
#define RRM_COMPANION_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rrm/acceptable.hpp"
#include "rrm/classify.hpp"
#include "rrm/completion.hpp"
#include "rrm/isomorphism.hpp"
#include "rrm/monoid.hpp"

namespace rrm {

  ////////////////////////////////////////////////////////////////////////
  // The closure A -> A^v
  ////////////////////////////////////////////////////////////////////////

  // Joins of all compatible pairs of a host, tabulated once.
  class CompatibleJoins {
   public:
    explicit CompatibleJoins(FiniteRRMonoid const& M)
        : _M(&M), _n(M.size()), _join(_n * _n, UNDEFINED) {
      for (element_type a = 0; a < _n; ++a) {
        for (element_type b = a; b < _n; ++b) {
          if (!M.compatible(a, b)) {
            continue;
          }
          auto j = M.join(a, b);
          if (!j) {
            throw StructuralError("nucleus_closure: " + M.element_name(a)
                                  + " and " + M.element_name(b)
                                  + " are compatible but have no join in "
                                  + M.name());
          }
          _join[a * _n + b] = _join[b * _n + a] = *j;
        }
      }
    }

    // The join of a and b if they are compatible, UNDEFINED otherwise.
    [[nodiscard]] element_type operator()(element_type a,
                                          element_type b) const {
      return _join[a * _n + b];
    }

    [[nodiscard]] FiniteRRMonoid const& host() const {
      return *_M;
    }

   private:
    FiniteRRMonoid const*     _M;
    std::size_t               _n;
    std::vector<element_type> _join;
  };

  // The least superset of A closed under binary compatible joins.
  inline AcceptableSet nucleus_closure(CompatibleJoins const& joins,
                                       AcceptableSet          A) {
    auto                      members = A.members();
    std::vector<element_type> todo    = members;
    std::vector<element_type> seen;
    while (!todo.empty()) {
      element_type x = todo.back();
      todo.pop_back();
      for (auto y : seen) {
        element_type j = joins(x, y);
        if (j != UNDEFINED && !A.contains(j)) {
          A.insert(j);
          todo.push_back(j);
        }
      }
      seen.push_back(x);
    }
    return A;
  }

  inline AcceptableSet nucleus_closure(FiniteRRMonoid const& M,
                                       AcceptableSet const&  A) {
    if (!is_acceptable(M, A)) {
      throw PreconditionError("nucleus_closure: the argument is not an "
                              "acceptable set of "
                              + M.name());
    }
    return nucleus_closure(CompatibleJoins(M), A);
  }

  // The endofunction A -> A^v of R(M), as a table over its elements.
  inline std::vector<element_type> closure_nucleus(FiniteRRMonoid const& M,
                                                   Completion const&     R) {
    CompatibleJoins           joins(M);
    std::vector<element_type> nu;
    for (auto const& A : R.sets) {
      auto i = R.find(nucleus_closure(joins, A));
      if (!i) {
        throw StructuralError("closure_nucleus: a closure is not acceptable");
      }
      nu.push_back(*i);
    }
    return nu;
  }

  ////////////////////////////////////////////////////////////////////////
  // Etale(M)
  ////////////////////////////////////////////////////////////////////////

  // Etale(M) as a table monoid, with the closed set behind each element, its
  // maximal members, and a -> a^ (onto the partial units).
  struct Companion {
    FiniteRRMonoid                          monoid;
    std::vector<AcceptableSet>              sets;
    std::vector<std::vector<element_type>>  generators;
    std::vector<element_type>               iota;
    detail::SetIndex                        index;

    [[nodiscard]] std::optional<element_type>
    find(AcceptableSet const& A) const {
      return index.find(A);
    }
  };

  inline void require_boolean_inverse(FiniteRRMonoid const& M,
                                      char const*           who) {
    if (!is_inverse(M)) {
      throw PreconditionError(std::string(who) + ": " + M.name()
                              + " is not an inverse monoid");
    }
    if (!is_boolean(M)) {
      throw PreconditionError(std::string(who) + ": " + M.name()
                              + " is not Boolean");
    }
  }

  // Enumerates (F^)^v over the left-compatible antichains F of M; there is
  // one F per acceptable set, and bound caps their number.
  inline Companion etale_of(FiniteRRMonoid const& M,
                            std::size_t bound = DEFAULT_MAX_ACCEPTABLE) {
    require_boolean_inverse(M, "etale_of");
    CompatibleJoins joins(M);

    std::map<AcceptableSet::bits_type, AcceptableSet> found;
    std::size_t                                       visited = 0;
    for_each_compatible_antichain(
        M, [&](std::vector<element_type> const& F) {
          auto A = nucleus_closure(joins, down_closure(M, F));
          found.emplace(A.bits(), std::move(A));
          return ++visited <= bound;
        });
    if (visited > bound) {
      throw ResourceError("etale_of: more than " + std::to_string(bound)
                          + " acceptable sets in " + M.name()
                          + " (raise --max-acceptable)");
    }
    std::vector<AcceptableSet> sets;
    for (auto& [bits, A] : found) {
      sets.push_back(std::move(A));
    }
    std::sort(sets.begin(), sets.end());
    detail::SetIndex index(sets);

    auto lookup = [&](AcceptableSet const& A, char const* what) {
      auto i = index.find(nucleus_closure(joins, A));
      if (!i) {
        throw StructuralError(std::string("etale_of: the closure of ") + what
                              + " is not an enumerated element");
      }
      return *i;
    };

    std::vector<std::string>               names;
    std::vector<std::vector<element_type>> gens;
    std::vector<std::vector<element_type>> mul(sets.size());
    std::vector<element_type>              star;
    for (element_type i = 0; i < sets.size(); ++i) {
      gens.push_back(maximal_members(M, sets[i]));
      names.push_back(detail::set_name(M, gens.back()));
      for (element_type j = 0; j < sets.size(); ++j) {
        mul[i].push_back(lookup(set_product(M, sets[i], sets[j]), "a product"));
      }
      star.push_back(lookup(set_star(M, sets[i]), "a star"));
    }
    std::vector<element_type> iota;
    for (element_type a = 0; a < M.size(); ++a) {
      iota.push_back(lookup(down_closure(M, {a}), "a principal ideal"));
    }
    FiniteRRMonoid E("Etale(" + M.name() + ")",
                     std::move(names),
                     std::move(mul),
                     std::move(star),
                     iota[M.one()],
                     iota[*M.zero()]);
    return Companion{std::move(E), std::move(sets), std::move(gens),
                     std::move(iota), std::move(index)};
  }

  ////////////////////////////////////////////////////////////////////////
  // M = Inv(Etale(M))
  ////////////////////////////////////////////////////////////////////////

  struct InvIsoReport {
    std::size_t companion_size     = 0;
    std::size_t partial_units      = 0;
    // the partial units of Etale(M) are exactly the a^
    bool        units_are_principal = false;
    // a -> a^ is an isomorphism M -> Inv(Etale(M))
    bool        iota_is_isomorphism = false;

    [[nodiscard]] bool isomorphic() const {
      return units_are_principal && iota_is_isomorphism;
    }
  };

  inline InvIsoReport verify_inv_iso(FiniteRRMonoid const& M,
                                     Companion const&      E) {
    InvIsoReport report;
    report.companion_size = E.monoid.size();
    auto units            = partial_units(E.monoid);
    report.partial_units  = units.size();
    auto principal        = E.iota;
    std::sort(principal.begin(), principal.end());
    report.units_are_principal
        = std::adjacent_find(principal.begin(), principal.end())
              == principal.end()
          && principal == units;
    if (report.units_are_principal) {
      auto inv = submonoid(E.monoid, E.iota, "Inv(" + E.monoid.name() + ")");
      std::vector<element_type> id(M.size());
      for (element_type a = 0; a < M.size(); ++a) {
        id[a] = a;
      }
      report.iota_is_isomorphism = is_isomorphism(M, inv, id);
    }
    return report;
  }

  inline InvIsoReport verify_inv_iso(FiniteRRMonoid const& M) {
    return verify_inv_iso(M, etale_of(M));
  }

  ////////////////////////////////////////////////////////////////////////
  // Extending homomorphisms of Boolean inverse monoids
  ////////////////////////////////////////////////////////////////////////

  struct HomExtension {
    Companion                 source;
    Companion                 target;
    std::vector<element_type> phi;
  };

  // phi((F^)^v) = (theta(F)^)^v, for theta : M -> N preserving product,
  // star, the identity, zero and binary compatible joins.
  inline HomExtension extend_hom(FiniteRRMonoid const&            M,
                                 FiniteRRMonoid const&            N,
                                 std::vector<element_type> const& theta) {
    if (!is_homomorphism(M, N, theta)) {
      throw PreconditionError("extend_hom: theta does not preserve product, "
                              "star and the identity");
    }
    require_boolean_inverse(M, "extend_hom");
    require_boolean_inverse(N, "extend_hom");
    if (theta[*M.zero()] != *N.zero()) {
      throw PreconditionError("extend_hom: theta(" + M.element_name(*M.zero())
                              + ") is not zero");
    }
    for (element_type a = 0; a < M.size(); ++a) {
      for (element_type b = a + 1; b < M.size(); ++b) {
        if (!M.compatible(a, b)) {
          continue;
        }
        auto j  = M.join(a, b);
        auto jt = N.join(theta[a], theta[b]);
        if (!jt || theta[*j] != *jt) {
          throw PreconditionError(
              "extend_hom: theta does not preserve the join of "
              + M.element_name(a) + " and " + M.element_name(b));
        }
      }
    }
    HomExtension    out{etale_of(M), etale_of(N), {}};
    CompatibleJoins joins(N);
    for (auto const& F : out.source.generators) {
      std::vector<element_type> image;
      for (auto a : F) {
        image.push_back(theta[a]);
      }
      auto A = nucleus_closure(joins, down_closure(N, image));
      auto i = out.target.find(A);
      if (!i) {
        throw StructuralError("extend_hom: image is not an element of "
                              + out.target.monoid.name());
      }
      out.phi.push_back(*i);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // When is M its own companion?
  ////////////////////////////////////////////////////////////////////////

  struct FixedPointReport {
    bool companion_isomorphic           = false;
    bool left_compatible_are_compatible = false;

    [[nodiscard]] bool agree() const {
      return companion_isomorphic == left_compatible_are_compatible;
    }
  };

  inline FixedPointReport fixed_point_check(FiniteRRMonoid const& M) {
    FixedPointReport report;
    auto             E = etale_of(M);
    report.companion_isomorphic
        = E.monoid.size() == M.size()
          && find_isomorphism(E.monoid, M, std::max(M.size(),
                                                    DEFAULT_ISOMORPHISM_BOUND))
                 .has_value();
    report.left_compatible_are_compatible = true;
    for (element_type a = 0; a < M.size(); ++a) {
      for (element_type b = 0; b < M.size(); ++b) {
        if (M.left_compatible(a, b) && !M.compatible(a, b)) {
          report.left_compatible_are_compatible = false;
        }
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reconstructing T from a projection-pure theta : S -> T
  ////////////////////////////////////////////////////////////////////////

  // S_nu: the nu-closed elements of S with a.b = nu(ab), a° = nu(a*) and
  // identity nu(1). Elements are listed in increasing index order of S.
  struct NucleusQuotient {
    FiniteRRMonoid            monoid;
    std::vector<element_type> closed;
  };

  inline NucleusQuotient nucleus_quotient(FiniteRRMonoid const&            S,
                                          std::vector<element_type> const& nu) {
    std::vector<element_type> closed;
    std::vector<element_type> index(S.size(), UNDEFINED);
    for (element_type s = 0; s < S.size(); ++s) {
      if (nu[s] == s) {
        index[s] = static_cast<element_type>(closed.size());
        closed.push_back(s);
      }
    }
    auto at = [&](element_type s) {
      if (index[nu[s]] == UNDEFINED) {
        throw PreconditionError("nucleus_quotient: nu is not idempotent at "
                                + S.element_name(s));
      }
      return index[nu[s]];
    };
    std::vector<std::string>               names;
    std::vector<std::vector<element_type>> mul;
    std::vector<element_type>              star;
    for (auto a : closed) {
      names.push_back(S.element_name(a));
      std::vector<element_type> row;
      for (auto b : closed) {
        row.push_back(at(S.product(a, b)));
      }
      mul.push_back(std::move(row));
      star.push_back(at(S.star(a)));
    }
    std::optional<element_type> zero;
    if (S.zero()) {
      zero = at(*S.zero());
    }
    FiniteRRMonoid Snu(S.name() + "_nu",
                       std::move(names),
                       std::move(mul),
                       std::move(star),
                       at(S.one()),
                       zero);
    return NucleusQuotient{std::move(Snu), std::move(closed)};
  }

  struct ReconstructionReport {
    bool pure = false;
    // a pair with theta(a) ~ theta(b) but a !~ b, when not pure
    std::optional<std::pair<element_type, element_type>> purity_witness;
    // the five properties of theta_*, in order; empty when all hold
    std::vector<std::size_t>  failed_properties;
    bool                      theta_absorbs = false;  // theta = theta theta_* theta
    bool                      lower_absorbs = false;  // theta_* = theta_* theta theta_*
    bool                      is_nucleus    = false;
    std::size_t               quotient_size = 0;
    bool                      isomorphic    = false;  // alpha : S_nu -> T
    std::vector<element_type> lower;                  // theta_*
    std::vector<element_type> nu;

    // The reconstruction must succeed whenever theta is pure.
    [[nodiscard]] bool consistent() const {
      return !pure
             || (failed_properties.empty() && theta_absorbs && lower_absorbs
                 && is_nucleus && isomorphic);
    }
  };

  inline ReconstructionReport
  reconstruct_projection_pure(FiniteRRMonoid const&            S,
                              FiniteRRMonoid const&            T,
                              std::vector<element_type> const& theta) {
    if (!is_homomorphism(S, T, theta)) {
      throw PreconditionError("reconstruct_projection_pure: theta does not "
                              "preserve product, star and the identity");
    }
    std::vector<bool> hit(T.size(), false);
    for (auto t : theta) {
      hit[t] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      throw PreconditionError("reconstruct_projection_pure: theta is not "
                              "surjective");
    }
    for (element_type a = 0; a < S.size(); ++a) {
      for (element_type b = a + 1; b < S.size(); ++b) {
        if (!S.left_compatible(a, b)) {
          continue;
        }
        auto j  = S.join(a, b);
        auto jt = T.join(theta[a], theta[b]);
        if (!j || !jt || theta[*j] != *jt) {
          throw PreconditionError("reconstruct_projection_pure: theta does "
                                  "not preserve the join of "
                                  + S.element_name(a) + " and "
                                  + S.element_name(b));
        }
      }
    }

    ReconstructionReport report;
    for (element_type a = 0; a < S.size() && !report.purity_witness; ++a) {
      for (element_type b = a + 1; b < S.size(); ++b) {
        if (T.left_compatible(theta[a], theta[b])
            && !S.left_compatible(a, b)) {
          report.purity_witness = {a, b};
          break;
        }
      }
    }
    report.pure = !report.purity_witness;
    if (!report.pure) {
      return report;
    }

    for (element_type t = 0; t < T.size(); ++t) {
      std::vector<element_type> below;
      for (element_type s = 0; s < S.size(); ++s) {
        if (T.leq(theta[s], t)) {
          below.push_back(s);
        }
      }
      auto j = S.join(below);
      if (!j) {
        throw StructuralError("reconstruct_projection_pure: "
                              "theta_*(" + T.element_name(t) + ") has no join in "
                              + S.name());
      }
      report.lower.push_back(*j);
    }
    auto const& lo = report.lower;
    for (element_type s = 0; s < S.size(); ++s) {
      report.nu.push_back(lo[theta[s]]);
    }

    auto fail = [&](std::size_t k) {
      if (std::find(report.failed_properties.begin(),
                    report.failed_properties.end(),
                    k)
          == report.failed_properties.end()) {
        report.failed_properties.push_back(k);
      }
    };
    for (element_type t = 0; t < T.size(); ++t) {
      if (T.is_projection(t) && !S.is_projection(lo[t])) {
        fail(1);
      }
      if (!T.leq(theta[lo[t]], t)) {
        fail(5);
      }
      for (element_type u = 0; u < T.size(); ++u) {
        if (T.leq(t, u) && !S.leq(lo[t], lo[u])) {
          fail(2);
        }
        if (!S.leq(S.product(lo[t], lo[u]), lo[T.product(t, u)])) {
          fail(3);
        }
      }
    }
    for (element_type s = 0; s < S.size(); ++s) {
      if (!S.leq(s, report.nu[s])) {
        fail(4);
      }
    }
    std::sort(report.failed_properties.begin(), report.failed_properties.end());

    report.theta_absorbs = true;
    for (element_type s = 0; s < S.size(); ++s) {
      report.theta_absorbs &= theta[report.nu[s]] == theta[s];
    }
    report.lower_absorbs = true;
    for (element_type t = 0; t < T.size(); ++t) {
      report.lower_absorbs &= lo[theta[lo[t]]] == lo[t];
    }
    report.is_nucleus = check_nucleus(S, report.nu).passed;
    if (!report.is_nucleus) {
      return report;
    }
    auto Q               = nucleus_quotient(S, report.nu);
    report.quotient_size = Q.monoid.size();
    std::vector<element_type> alpha;
    for (auto s : Q.closed) {
      alpha.push_back(theta[s]);
    }
    report.isomorphic = is_isomorphism(Q.monoid, T, alpha);
    return report;
  }

  // The quotient R(M) -> Etale(M), A -> A^v.
  inline std::vector<element_type> closure_quotient(FiniteRRMonoid const& M,
                                                    Completion const&     R,
                                                    Companion const&      E) {
    CompatibleJoins           joins(M);
    std::vector<element_type> theta;
    for (auto const& A : R.sets) {
      auto i = E.find(nucleus_closure(joins, A));
      if (!i) {
        throw StructuralError("closure_quotient: a closure is not an element "
                              "of "
                              + E.monoid.name());
      }
      theta.push_back(*i);
    }
    return theta;
  }

}  // namespace rrm

#endif  // RRM_COMPANION_HPP_
