#ifndef RRM_AXIOMS_HPP_
#define RRM_AXIOMS_HPP_

#include <string>
#include <vector>

#include "rrm/monoid.hpp"

namespace rrm {

  struct AxiomViolation {
    std::string               axiom;    // "assoc", "identity", "zero", "RR1".."RR6"
    std::vector<element_type> witness;  // the offending tuple
  };

  struct AxiomReport {
    bool                        passed = true;
    std::vector<AxiomViolation> violations;
  };

  namespace detail {
    class ViolationLog {
     public:
      explicit ViolationLog(AxiomReport& report) : _report(report) {}

      // Only the first witness of each axiom is kept.
      void add(std::string axiom, std::vector<element_type> witness) {
        for (auto const& v : _report.violations) {
          if (v.axiom == axiom) {
            return;
          }
        }
        _report.passed = false;
        _report.violations.push_back({std::move(axiom), std::move(witness)});
      }

     private:
      AxiomReport& _report;
    };
  }  // namespace detail

  // Exhaustive check of associativity, the identity, the zero (if any) and
  // the right restriction axioms
  //
  //   RR1  (s*)* = s*          RR4  s s* = s
  //   RR2  (s* t*)* = s* t*    RR5  (st)* = (s* t)*
  //   RR3  s* t* = t* s*       RR6  t* s = s (ts)*
  //
  // Structural problems are reported by the FiniteRRMonoid constructor.
  inline AxiomReport check_axioms(FiniteRRMonoid const& M) {
    AxiomReport         report;
    detail::ViolationLog log(report);
    auto const          n    = static_cast<element_type>(M.size());
    auto                mul  = [&M](element_type a, element_type b) {
      return M.product(a, b);
    };
    auto st = [&M](element_type a) { return M.star(a); };

    for (element_type a = 0; a < n; ++a) {
      if (mul(M.one(), a) != a || mul(a, M.one()) != a) {
        log.add("identity", {a});
      }
    }
    if (M.zero()) {
      element_type z = *M.zero();
      if (st(z) != z) {
        log.add("zero", {z});
      }
      for (element_type a = 0; a < n; ++a) {
        if (mul(z, a) != z || mul(a, z) != z) {
          log.add("zero", {a});
        }
      }
    }
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = 0; b < n; ++b) {
        element_type ab = mul(a, b);
        for (element_type c = 0; c < n; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            log.add("assoc", {a, b, c});
            goto assoc_done;
          }
        }
      }
    }
  assoc_done:
    for (element_type s = 0; s < n; ++s) {
      if (st(st(s)) != st(s)) {
        log.add("RR1", {s});
      }
      if (mul(s, st(s)) != s) {
        log.add("RR4", {s});
      }
      for (element_type t = 0; t < n; ++t) {
        element_type p = mul(st(s), st(t));
        if (st(p) != p) {
          log.add("RR2", {s, t});
        }
        if (p != mul(st(t), st(s))) {
          log.add("RR3", {s, t});
        }
        if (st(mul(s, t)) != st(mul(st(s), t))) {
          log.add("RR5", {s, t});
        }
        if (mul(st(t), s) != mul(s, st(mul(t, s)))) {
          log.add("RR6", {s, t});
        }
      }
    }
    return report;
  }

}  // namespace rrm

#endif  // RRM_AXIOMS_HPP_
