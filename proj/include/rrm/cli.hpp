#ifndef RRM_CLI_HPP_
#define RRM_CLI_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rrm/axioms.hpp"
#include "rrm/builders.hpp"
#include "rrm/cantor.hpp"
#include "rrm/classify.hpp"
#include "rrm/companion.hpp"
#include "rrm/completion.hpp"
#include "rrm/interchange.hpp"
#include "rrm/laws.hpp"
#include "rrm/polycyclic.hpp"
#include "rrm/report.hpp"
#include "rrm/table_map.hpp"

// The rrm command line. Exit status 0 on success, 1 when a mathematical
// check is falsified or an input fails validation, 2 on a parse error.

namespace rrm::cli {

  inline constexpr int EXIT_OK     = 0;
  inline constexpr int EXIT_FALSE  = 1;
  inline constexpr int EXIT_PARSE  = 2;

  inline std::string witness_text(FiniteRRMonoid const&            M,
                                  std::string const&               what,
                                  std::vector<element_type> const& w) {
    std::string out = what + " violated at (";
    for (std::size_t i = 0; i < w.size(); ++i) {
      out += (i == 0 ? "" : ", ") + M.element_name(w[i]);
    }
    return out + ")";
  }

  inline Report axiom_report(FiniteRRMonoid const& M) {
    auto                     ax = check_axioms(M);
    std::vector<std::string> lines;
    for (auto const& v : ax.violations) {
      lines.push_back(witness_text(M, v.axiom, v.witness));
    }
    Report r("axioms");
    r.set("monoid", M.name())
        .set("size", M.size())
        .set("passed", ax.passed)
        .set("violations", lines);
    return r;
  }

  inline Report classification_report(FiniteRRMonoid const& M) {
    auto   c = classify(M);
    Report r("analyze");
    r.set("monoid", M.name())
        .set("size", M.size())
        .set("is_inverse", c.is_inverse)
        .set("is_distributive", c.is_distributive)
        .set("is_boolean", c.is_boolean)
        .set("is_etale", c.is_etale)
        .set("is_fundamental", c.is_fundamental)
        .set("projections", c.projections)
        .set("partial_units", c.partial_units)
        .set("total_elements", c.total_elements);
    if (c.is_zero_simplifying) {
      r.set("is_zero_simplifying", *c.is_zero_simplifying);
    } else {
      r.set("is_zero_simplifying", nullptr);
    }
    return r;
  }

  class Runner {
   public:
    Runner(std::ostream& out, std::ostream& err) : _out(out), _err(err) {}

    int run(std::vector<std::string> const& args) {
      CLI::App app{"Right restriction monoids, companions and Cuntz tables",
                   "rrm"};
      app.require_subcommand(1);
      app.fallthrough();
      std::string format = "text";
      app.add_option("--report", format, "Output format: text or json")
          ->check(CLI::IsMember({"text", "json"}));
      app.add_option("--max-acceptable",
                     _max_acceptable,
                     "Cap on acceptable sets enumerated by companion and "
                     "completion");
      app.add_option("--seed", _seed, "Seed for the randomized suites");

      std::function<int()> action;
      define_commands(app, action);

      try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
      } catch (CLI::CallForHelp const&) {
        _out << app.help();
        return EXIT_OK;
      } catch (CLI::ParseError const& e) {
        _err << "rrm: " << e.what() << "\n";
        return EXIT_PARSE;
      }
      _format = parse_report_format(format);
      try {
        return action();
      } catch (ParseError const& e) {
        _err << "rrm: parse error: " << e.what() << "\n";
        return EXIT_PARSE;
      } catch (Error const& e) {
        _err << "rrm: " << e.what() << "\n";
        return EXIT_FALSE;
      }
    }

   private:
    void emit(Report const& r) {
      _out << r.render(_format);
    }

    // A one-value result: the bare value as text, or an object in JSON.
    void emit_value(std::string const& command, std::string const& value) {
      if (_format == ReportFormat::text) {
        _out << value << "\n";
      } else {
        emit(Report(command).set("result", value));
      }
    }

    void write_or_print(FiniteRRMonoid const& M, std::string const& path) {
      if (path.empty()) {
        _out << to_json_text(M);
      } else {
        write_monoid(M, path);
      }
    }

    void define_commands(CLI::App& app, std::function<int()>& action) {
      auto* axioms = app.add_subcommand("axioms", "Check RR1-RR6 and "
                                                  "associativity");
      axioms->add_option("file", _file)->required();
      axioms->callback([&] { action = [&] { return cmd_axioms(); }; });

      auto* analyze = app.add_subcommand("analyze", "Classify a monoid");
      analyze->add_option("file", _file)->required();
      analyze->callback([&] { action = [&] { return cmd_analyze(); }; });

      auto* companion
          = app.add_subcommand("companion", "Build Etale(M) of a Boolean "
                                            "inverse monoid");
      companion->add_option("file", _file)->required();
      companion->add_option("-o", _output, "Output file");
      companion->callback([&] { action = [&] { return cmd_companion(); }; });

      auto* completion = app.add_subcommand(
          "completion", "Build R(M) and check the closure nucleus on it");
      completion->add_option("file", _file)->required();
      completion->add_option("-o", _output, "Output file");
      completion->callback([&] { action = [&] { return cmd_completion(); }; });

      auto* verify = app.add_subcommand(
          "verify-inv", "Check M = Inv(Etale(M)) for a Boolean inverse monoid");
      verify->add_option("file", _file)->required();
      verify->callback([&] { action = [&] { return cmd_verify_inv(); }; });

      auto* gen = app.add_subcommand("gen", "Generate PT_n, I_n or a Boolean "
                                            "algebra");
      gen->add_option("family", _family, "pt, inv or ba")
          ->required()
          ->check(CLI::IsMember({"pt", "inv", "ba"}));
      gen->add_option("n", _count)->required();
      gen->add_option("-o", _output, "Output file");
      gen->callback([&] { action = [&] { return cmd_gen(); }; });

      auto* pn = app.add_subcommand("pn", "Polycyclic monoid arithmetic");
      auto* pn_mul_cmd = pn->add_subcommand("mul", "Product of basic maps");
      pn->require_subcommand(1);
      pn_mul_cmd->add_option("n", _count)->required();
      pn_mul_cmd->add_option("f", _h_args[0])->required();
      pn_mul_cmd->add_option("g", _h_args[1])->required();
      pn_mul_cmd->callback([&] { action = [&] { return cmd_pn_mul(); }; });

      auto* h = app.add_subcommand("h", "Tables of H_n");
      h->require_subcommand(1);
      struct HCommand {
        char const* name;
        int         arity;
        char const* help;
      };
      for (auto [name, arity, help] :
           {HCommand{"compose", 2, "Composite f g, caret-reduced"},
            HCommand{"reduce", 1, "Caret-reduced normal form"},
            HCommand{"invert", 1, "Inverse of a partial unit"},
            HCommand{"classify", 1, "Total, unit and partial-unit flags"}}) {
        auto*       sub = h->add_subcommand(name, help);
        std::string op  = name;
        sub->add_option("n", _count)->required();
        sub->add_option("f", _h_args[0])->required();
        if (arity == 2) {
          sub->add_option("g", _h_args[1])->required();
        }
        sub->callback([&, op] { action = [&, op] { return cmd_h(op); }; });
      }

      auto* cantor = app.add_subcommand("cantor", "Cantor algebra terms");
      cantor->require_subcommand(1);
      auto* eval = cantor->add_subcommand("eval", "Evaluate a term");
      eval->add_option("n", _count)->required();
      eval->add_option("term", _h_args[0])->required();
      eval->callback([&] { action = [&] { return cmd_cantor_eval(); }; });

      auto* witness = app.add_subcommand(
          "witness", "Total a with (ea)* = 1 for the projection e of a code");
      witness->add_option("n", _count)->required();
      witness->add_option("code", _h_args[0])->required();
      witness->callback([&] { action = [&] { return cmd_witness(); }; });

      auto* laws = app.add_subcommand("laws", "Randomized law suite for H_n");
      laws->add_option("n", _count)->required();
      laws->add_option("--samples", _samples, "Number of random triples");
      laws->callback([&] { action = [&] { return cmd_laws(); }; });
    }

    int cmd_axioms() {
      auto M = read_monoid(_file);
      auto r = axiom_report(M);
      emit(r);
      return r.data()["passed"].get<bool>() ? EXIT_OK : EXIT_FALSE;
    }

    int cmd_analyze() {
      auto M  = read_monoid(_file);
      auto ax = axiom_report(M);
      if (!ax.data()["passed"].get<bool>()) {
        emit(ax);
        return EXIT_FALSE;
      }
      emit(classification_report(M));
      return EXIT_OK;
    }

    int cmd_companion() {
      auto M = read_monoid(_file);
      auto E = etale_of(M, _max_acceptable);
      write_or_print(E.monoid, _output);
      if (!_output.empty()) {
        Report r("companion");
        r.set("monoid", M.name())
            .set("companion", E.monoid.name())
            .set("elements", E.monoid.size())
            .set("partial_units", partial_units(E.monoid).size())
            .set("output", _output);
        emit(r);
      }
      return EXIT_OK;
    }

    int cmd_completion() {
      auto M = read_monoid(_file);
      auto R = completion(M, _max_acceptable);
      write_or_print(R.monoid, _output);
      if (_output.empty()) {
        return EXIT_OK;
      }
      Report r("completion");
      r.set("monoid", M.name())
          .set("completion", R.monoid.name())
          .set("elements", R.monoid.size())
          .set("output", _output);
      bool ok = true;
      if (is_inverse(M) && is_boolean(M)) {
        auto                     nucleus = check_nucleus(R.monoid,
                                     closure_nucleus(M, R));
        std::vector<std::string> lines;
        for (auto const& v : nucleus.violations) {
          lines.push_back(witness_text(R.monoid, v.law, v.witness));
        }
        auto E     = etale_of(M, _max_acceptable);
        auto recon = reconstruct_projection_pure(
            R.monoid, E.monoid, closure_quotient(M, R, E));
        r.set("nucleus_passed", nucleus.passed)
            .set("nucleus_violations", lines)
            .set("quotient_pure", recon.pure)
            .set("quotient_isomorphic", recon.isomorphic)
            .set("reconstruction_consistent", recon.consistent());
        ok = nucleus.passed && recon.consistent();
      }
      emit(r);
      return ok ? EXIT_OK : EXIT_FALSE;
    }

    int cmd_verify_inv() {
      auto M   = read_monoid(_file);
      auto rep = verify_inv_iso(M, etale_of(M, _max_acceptable));
      Report r("verify-inv");
      r.set("monoid", M.name())
          .set("companion_size", rep.companion_size)
          .set("partial_units", rep.partial_units)
          .set("units_are_principal", rep.units_are_principal)
          .set("iota_is_isomorphism", rep.iota_is_isomorphism)
          .set("isomorphic", rep.isomorphic());
      emit(r);
      return rep.isomorphic() ? EXIT_OK : EXIT_FALSE;
    }

    int cmd_gen() {
      auto M = _family == "pt"    ? build_PT(_count)
               : _family == "inv" ? build_I(_count)
                                  : build_boolean_algebra(_count);
      write_or_print(M, _output);
      return EXIT_OK;
    }

    int cmd_pn_mul() {
      auto f = parse_basic_map(_h_args[0], alphabet());
      auto g = parse_basic_map(_h_args[1], alphabet());
      emit_value("pn mul", to_string(pn_mul(f, g)));
      return EXIT_OK;
    }

    int cmd_h(std::string const& op) {
      std::size_t n = alphabet();
      auto        f = parse_table(_h_args[0], n);
      if (op == "compose") {
        auto g = parse_table(_h_args[1], n);
        emit_value("h compose", to_string(reduce(compose(f, g))));
      } else if (op == "reduce") {
        emit_value("h reduce", to_string(reduce(f)));
      } else if (op == "invert") {
        auto inv = invert(f);
        if (!inv) {
          _err << "rrm: " << to_string(f)
               << " is not a partial unit (its images are not a prefix "
                  "code)\n";
          return EXIT_FALSE;
        }
        emit_value("h invert", to_string(reduce(*inv)));
      } else {
        Report r("h classify");
        r.set("table", to_string(f))
            .set("reduced", to_string(reduce(f)))
            .set("is_zero", f.is_zero())
            .set("is_total", is_total(f))
            .set("is_partial_unit", is_partial_unit(f))
            .set("is_unit", is_unit(f))
            .set("star", to_string(reduce(star(f))));
        emit(r);
      }
      return EXIT_OK;
    }

    int cmd_cantor_eval() {
      std::size_t n = alphabet();
      auto        t = parse_term(_h_args[0], n);
      auto        f = eval_term(t, n);
      if (_format == ReportFormat::text) {
        _out << to_string(f) << "\n";
      } else {
        Report r("cantor eval");
        r.set("term", to_string(t))
            .set("result", to_string(f))
            .set("domain_code", to_string(f.domain()))
            .set("skeleton_code", to_string(skeleton_code(t, n)));
        emit(r);
      }
      return EXIT_OK;
    }

    int cmd_witness() {
      std::size_t n    = alphabet();
      auto        X    = parse_code(_h_args[0], n);
      auto        a    = zero_simplifying_witness(X);
      auto        st   = star(compose(code_projection(X), a));
      bool        ok   = equals(st, TableMap::identity(n));
      Report      r("witness");
      r.set("code", to_string(X))
          .set("witness", to_string(a))
          .set("star_of_product", to_string(reduce(st)))
          .set("holds", ok);
      emit(r);
      return ok ? EXIT_OK : EXIT_FALSE;
    }

    int cmd_laws() {
      std::mt19937_64 rng(_seed);
      auto            rep = check_h_laws(alphabet(), _samples, rng);
      Report          r("laws");
      r.set("alphabet", _count).set("seed", _seed).set("samples", _samples);
      for (auto const& l : rep.laws) {
        r.set(l.name, l.failures);
      }
      r.set("passed", rep.passed());
      emit(r);
      return rep.passed() ? EXIT_OK : EXIT_FALSE;
    }

    std::size_t alphabet() const {
      check_alphabet(_count);
      return _count;
    }

    std::ostream&            _out;
    std::ostream&            _err;
    ReportFormat             _format         = ReportFormat::text;
    std::size_t              _max_acceptable = DEFAULT_MAX_ACCEPTABLE;
    std::uint64_t            _seed           = 0;
    std::size_t              _samples        = 1000;
    std::string              _file;
    std::string              _output;
    std::string              _family;
    std::size_t              _count = 0;
    std::string              _h_args[2];
  };

  inline int run(std::vector<std::string> const& args,
                 std::ostream&                   out,
                 std::ostream&                   err) {
    return Runner(out, err).run(args);
  }

}  // namespace rrm::cli

#endif  // RRM_CLI_HPP_
