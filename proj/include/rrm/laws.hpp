#ifndef RRM_LAWS_HPP_
#define RRM_LAWS_HPP_

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rrm/cantor.hpp"
#include "rrm/table_map.hpp"
#include "rrm/words.hpp"

// Seeded random elements of H_n and a self-check of its laws.

namespace rrm {

  // A random maximal prefix code reached from {~} by up to `carets` caret
  // expansions at words shorter than max_length.
  template <typename Rng>
  PrefixCode random_maximal_code(std::size_t n,
                                 std::size_t max_length,
                                 std::size_t carets,
                                 Rng&        rng) {
    PrefixCode X(n, {Word()});
    for (std::size_t k = 0; k < carets; ++k) {
      std::vector<Word> open;
      for (auto const& x : X) {
        if (x.size() < max_length) {
          open.push_back(x);
        }
      }
      if (open.empty()) {
        break;
      }
      std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
      X = caret_expand(X, open[pick(rng)]);
    }
    return X;
  }

  // A random nonempty prefix code: a random subset of a random maximal one.
  template <typename Rng>
  PrefixCode random_code(std::size_t n, std::size_t max_length, Rng& rng) {
    std::uniform_int_distribution<std::size_t> carets(0, 2 * max_length);
    auto              X = random_maximal_code(n, max_length, carets(rng), rng);
    std::vector<Word> kept;
    std::bernoulli_distribution keep(0.6);
    for (auto const& x : X) {
      if (keep(rng)) {
        kept.push_back(x);
      }
    }
    if (kept.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, X.size() - 1);
      kept.push_back(X.words()[pick(rng)]);
    }
    return PrefixCode(n, std::move(kept));
  }

  template <typename Rng>
  Word random_word(std::size_t n, std::size_t max_length, Rng& rng) {
    std::uniform_int_distribution<std::size_t> len(0, max_length);
    std::uniform_int_distribution<std::size_t> let(0, n - 1);
    Word                                       w;
    for (std::size_t k = len(rng); k > 0; --k) {
      w += letter(let(rng));
    }
    return w;
  }

  // A random element of H_n with words of length at most max_length. About
  // half of the samples are partial units, some are total, a few are zero.
  template <typename Rng>
  TableMap random_table(std::size_t n, std::size_t max_length, Rng& rng) {
    std::uniform_int_distribution<std::size_t> shape(0, 9);
    auto const                                 kind = shape(rng);
    if (kind == 0) {
      return TableMap::zero(n);
    }
    std::uniform_int_distribution<std::size_t> carets(0, 2 * max_length);
    PrefixCode X = kind < 5 ? random_maximal_code(n, max_length, carets(rng), rng)
                            : random_code(n, max_length, rng);
    std::vector<Word> Y;
    if (kind % 2 == 1) {
      // images drawn from a prefix code, so the result is a partial unit
      PrefixCode Z = random_maximal_code(n, max_length, 3 * max_length, rng);
      std::vector<Word> pool = Z.words();
      while (pool.size() < X.size()) {
        pool = caret_expand(PrefixCode(n, pool), pool.front()).words();
      }
      std::shuffle(pool.begin(), pool.end(), rng);
      Y.assign(pool.begin(), pool.begin() + X.size());
    } else {
      for (std::size_t i = 0; i < X.size(); ++i) {
        Y.push_back(random_word(n, max_length, rng));
      }
    }
    std::vector<Row> rows;
    for (std::size_t i = 0; i < X.size(); ++i) {
      rows.push_back({X.words()[i], Y[i]});
    }
    return TableMap(n, std::move(rows));
  }

  // f and g agree on every word of length L, for L at least the longest
  // domain word of either.
  inline bool agree_on_probes(TableMap const& f, TableMap const& g) {
    std::size_t L = 0;
    for (auto const* h : {&f, &g}) {
      for (auto const& r : h->rows()) {
        L = std::max(L, r.x.size());
      }
    }
    for (auto const& w : all_words(f.alphabet_size(), L)) {
      if (w.size() == L && f.apply(w) != g.apply(w)) {
        return false;
      }
    }
    return true;
  }

  struct LawCount {
    std::string name;
    std::size_t failures = 0;
  };

  struct LawReport {
    std::size_t           samples = 0;
    std::vector<LawCount> laws;

    [[nodiscard]] bool passed() const {
      return std::all_of(laws.begin(), laws.end(), [](auto const& l) {
        return l.failures == 0;
      });
    }
  };

  // Checks on `samples` random triples: associativity, RR1-RR6, reduce,
  // partial units, and CA1/CA2 on the total samples.
  template <typename Rng>
  LawReport check_h_laws(std::size_t n, std::size_t samples, Rng& rng) {
    check_alphabet(n);
    std::size_t const max_length = n == 2 ? 4 : 3;
    LawReport         report;
    report.samples = samples;
    for (auto name : {"assoc", "RR1", "RR2", "RR3", "RR4", "RR5", "RR6",
                      "reduce-idempotent", "reduce-semantics",
                      "partial-unit", "CA1", "CA2"}) {
      report.laws.push_back({name, 0});
    }
    auto fail = [&](std::size_t k, bool ok) {
      report.laws[k].failures += !ok;
    };
    for (std::size_t s = 0; s < samples; ++s) {
      auto f = random_table(n, max_length, rng);
      auto g = random_table(n, max_length, rng);
      auto h = random_table(n, max_length, rng);
      auto sf = star(f), sg = star(g);
      fail(0, equals(compose(compose(f, g), h), compose(f, compose(g, h))));
      fail(1, equals(star(sf), sf));
      fail(2, equals(star(compose(sf, sg)), compose(sf, sg)));
      fail(3, equals(compose(sf, sg), compose(sg, sf)));
      fail(4, equals(compose(f, sf), f));
      fail(5, equals(star(compose(f, g)), star(compose(sf, g))));
      fail(6, equals(compose(sg, f), compose(f, star(compose(g, f)))));
      auto r = reduce(f);
      fail(7, reduce(r) == r);
      fail(8, agree_on_probes(f, r));
      auto inv = invert(f);
      bool pu  = is_partial_unit(f) == inv.has_value();
      if (inv) {
        pu = pu && equals(compose(*inv, f), sf)
             && equals(compose(f, *inv), star(*inv));
      }
      fail(9, pu);
      if (is_total(f)) {
        std::vector<TableMap> parts;
        for (std::size_t i = 0; i < n; ++i) {
          parts.push_back(alpha(f, i));
        }
        fail(10, equals(lambda_op(parts), f));
        std::vector<TableMap> fs{f};
        for (std::size_t i = 1; i < n; ++i) {
          fs.push_back(random_total(n, max_length - 1, rng));
        }
        auto l = lambda_op(fs);
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
          ok = ok && equals(alpha(l, i), fs[i]);
        }
        fail(11, ok);
      }
    }
    return report;
  }

}  // namespace rrm

#endif  // RRM_LAWS_HPP_
