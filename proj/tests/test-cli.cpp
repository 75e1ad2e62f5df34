#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"

#include "json.hpp"

#include "rrm/builders.hpp"
#include "rrm/cli.hpp"
#include "rrm/interchange.hpp"

using namespace rrm;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::StartsWith;

namespace {
  struct Outcome {
    int         code;
    std::string out;
    std::string err;

    nlohmann::json json() const {
      return nlohmann::json::parse(out);
    }
  };

  Outcome run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int                code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  // A scratch directory removed at the end of each test case.
  class Scratch {
   public:
    Scratch() {
      static int counter = 0;
      _dir = std::filesystem::temp_directory_path()
             / ("rrm-cli-test-" + std::to_string(::getpid()) + "-"
                + std::to_string(counter++));
      std::filesystem::create_directories(_dir);
    }

    ~Scratch() {
      std::error_code ec;
      std::filesystem::remove_all(_dir, ec);
    }

    std::string path(std::string const& name) const {
      return (_dir / name).string();
    }

   private:
    std::filesystem::path _dir;
  };

  std::string slurp(std::string const& path) {
    std::ifstream     in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
}  // namespace

TEST_CASE("CLI 01: gen, companion and verify-inv on I_2",
          "[quick][cli][01]") {
  Scratch s;
  auto    i2 = s.path("i2.json");
  auto    e  = s.path("e.json");
  REQUIRE(run({"gen", "inv", "2", "-o", i2}).code == cli::EXIT_OK);
  REQUIRE(read_monoid(i2) == build_I(2));

  auto c = run({"companion", i2, "-o", e});
  REQUIRE(c.code == cli::EXIT_OK);
  REQUIRE_THAT(c.out, ContainsSubstring("elements: 9"));
  auto E = read_monoid(e);
  REQUIRE(E.size() == 9);
  REQUIRE(E.name() == "Etale(I2)");

  auto v = run({"verify-inv", i2});
  REQUIRE(v.code == cli::EXIT_OK);
  REQUIRE_THAT(v.out, ContainsSubstring("isomorphic: true"));

  auto j = run({"--report", "json", "verify-inv", i2}).json();
  REQUIRE(j["command"] == "verify-inv");
  REQUIRE(j["companion_size"] == 9);
  REQUIRE(j["partial_units"] == 7);
  REQUIRE(j["units_are_principal"] == true);
  REQUIRE(j["iota_is_isomorphism"] == true);
  REQUIRE(j["isomorphic"] == true);

  auto printed = run({"companion", i2});
  REQUIRE(printed.code == cli::EXIT_OK);
  REQUIRE(from_json_text(printed.out) == E);
}

TEST_CASE("CLI 02: arithmetic commands", "[quick][cli][02]") {
  auto p = run({"pn", "mul", "2", "b>a", "a>ba"});
  REQUIRE(p.code == cli::EXIT_OK);
  REQUIRE(p.out == "a>aa\n");
  REQUIRE(run({"pn", "mul", "2", "b>a", "b>a"}).out == "0\n");
  auto pj = run({"--report", "json", "pn", "mul", "2", "b>a", "a>ba"}).json();
  REQUIRE(pj["result"] == "a>aa");

  auto r = run({"h", "reduce", "2", "[aa>ba, ab>bb, b>a]"});
  REQUIRE(r.code == cli::EXIT_OK);
  REQUIRE(r.out == "[a>b, b>a]\n");
  REQUIRE(run({"h", "compose", "2", "[a>b, b>a]", "[a>b, b>a]"}).out
          == "[~>~]\n");
  REQUIRE(run({"h", "compose", "2", "[b>a]", "[a>ba]"}).out == "[a>aa]\n");
  REQUIRE(run({"h", "invert", "2", "[a>ba, b>a]"}).out == "[a>b, ba>a]\n");

  auto bad = run({"h", "invert", "2", "[a>~, b>~]"});
  REQUIRE(bad.code == cli::EXIT_FALSE);
  REQUIRE(bad.out.empty());
  REQUIRE_THAT(bad.err, ContainsSubstring("not a partial unit"));

  auto c = run({"--report", "json", "h", "classify", "2", "[a>~, b>~]"}).json();
  REQUIRE(c["table"] == "[a>~, b>~]");
  REQUIRE(c["is_total"] == true);
  REQUIRE(c["is_unit"] == false);
  REQUIRE(c["is_partial_unit"] == false);
  REQUIRE(c["star"] == "[~>~]");
}

TEST_CASE("CLI 03: terms, witnesses and laws", "[quick][cli][03]") {
  auto e = run({"cantor", "eval", "2", "((x,y)L,((u,v)L,(s,t)L)L)L"});
  REQUIRE(e.code == cli::EXIT_OK);
  REQUIRE(e.out == "[aa>~, ab>~, baa>~, bab>~, bba>~, bbb>~]\n");
  auto ej = run({"--report", "json", "cantor", "eval", "2",
                 "((x,y)L,((u,v)L,(s,t)L)L)L"})
                .json();
  REQUIRE(ej["skeleton_code"] == "{a, ba, bb}");
  REQUIRE(ej["domain_code"] == "{aa, ab, baa, bab, bba, bbb}");
  REQUIRE(ej["term"] == "((x,x)L,((x,x)L,(x,x)L)L)L");

  auto w = run({"--report", "json", "witness", "2", "{ba, bb}"}).json();
  REQUIRE(w["witness"] == "[~>ba]");
  REQUIRE(w["star_of_product"] == "[~>~]");
  REQUIRE(w["holds"] == true);

  auto l = run({"--seed", "7", "--report", "json", "laws", "2", "--samples",
                "100"});
  REQUIRE(l.code == cli::EXIT_OK);
  auto lj = l.json();
  REQUIRE(lj["seed"] == 7);
  REQUIRE(lj["samples"] == 100);
  REQUIRE(lj["assoc"] == 0);
  REQUIRE(lj["CA2"] == 0);
  REQUIRE(lj["passed"] == true);
  // same seed, same report
  REQUIRE(run({"--seed", "7", "--report", "json", "laws", "2", "--samples",
               "100"})
              .out
          == l.out);
}

TEST_CASE("CLI 04: analyze and axioms", "[quick][cli][04]") {
  Scratch s;
  auto    pt = s.path("pt2.json");
  REQUIRE(run({"gen", "pt", "2", "-o", pt}).code == cli::EXIT_OK);
  auto a = run({"--report", "json", "analyze", pt}).json();
  REQUIRE(a["is_boolean"] == true);
  REQUIRE(a["is_etale"] == true);
  REQUIRE(a["is_inverse"] == false);
  REQUIRE(a["partial_units"] == 7);
  REQUIRE(a["size"] == 9);

  REQUIRE(run({"axioms", pt}).code == cli::EXIT_OK);

  // make the star of {0>1} the identity
  auto M    = build_PT(2);
  auto star = M.star_table();
  auto f    = static_cast<element_type>(
      std::find(M.element_names().begin(), M.element_names().end(), "{0>1}")
      - M.element_names().begin());
  star[f]   = M.one();
  FiniteRRMonoid broken(M.name(), M.element_names(), M.mul_rows(), star,
                        M.one(), M.zero());
  auto bad = s.path("bad.json");
  write_monoid(broken, bad);
  auto r = run({"axioms", bad});
  REQUIRE(r.code == cli::EXIT_FALSE);
  REQUIRE_THAT(r.out, ContainsSubstring("passed: false"));
  REQUIRE_THAT(r.out, ContainsSubstring("RR6 violated at ({0>1}, {0>1})"));
  REQUIRE(run({"analyze", bad}).code == cli::EXIT_FALSE);

  // a monoid without zero reports 0-simplicity as not applicable
  FiniteRRMonoid z2("Z2", {"1", "g"}, {{0, 1}, {1, 0}}, {0, 0}, 0,
                    std::nullopt);
  auto zp = s.path("z2.json");
  write_monoid(z2, zp);
  auto zt = run({"analyze", zp});
  REQUIRE_THAT(zt.out, ContainsSubstring("is_zero_simplifying: n/a"));
  REQUIRE(run({"--report", "json", "analyze", zp}).json()["is_zero_simplifying"]
              .is_null());
}

TEST_CASE("CLI 05: completion", "[quick][cli][05]") {
  Scratch s;
  auto    i2 = s.path("i2.json");
  auto    r2 = s.path("r2.json");
  REQUIRE(run({"gen", "inv", "2", "-o", i2}).code == cli::EXIT_OK);
  auto r = run({"--report", "json", "completion", i2, "-o", r2});
  REQUIRE(r.code == cli::EXIT_OK);
  auto j = r.json();
  REQUIRE(j["elements"] == 11);
  REQUIRE(j["nucleus_passed"] == true);
  REQUIRE(j["nucleus_violations"].empty());
  REQUIRE(j["quotient_pure"] == true);
  REQUIRE(j["reconstruction_consistent"] == true);
  REQUIRE(read_monoid(r2).size() == 11);

  auto capped = run({"--max-acceptable", "5", "companion", i2});
  REQUIRE(capped.code == cli::EXIT_FALSE);
  REQUIRE_THAT(capped.err, ContainsSubstring("--max-acceptable"));
}

TEST_CASE("CLI 06: interchange round trip", "[quick][cli][06]") {
  Scratch s;
  for (auto const* fam : {"pt", "inv", "ba"}) {
    auto first  = s.path(std::string(fam) + "1.json");
    auto second = s.path(std::string(fam) + "2.json");
    REQUIRE(run({"gen", fam, "2", "-o", first}).code == cli::EXIT_OK);
    write_monoid(read_monoid(first), second);
    REQUIRE(slurp(first) == slurp(second));
    REQUIRE(run({"gen", fam, "2"}).out == slurp(first));
  }
}

TEST_CASE("CLI 07: exit codes and diagnostics", "[quick][cli][07]") {
  auto none = run({});
  REQUIRE(none.code == cli::EXIT_PARSE);
  REQUIRE(run({"frobnicate"}).code == cli::EXIT_PARSE);
  REQUIRE(run({"--bogus", "pn", "mul", "2", "a>a", "a>a"}).code
          == cli::EXIT_PARSE);
  REQUIRE(run({"--report", "yaml", "pn", "mul", "2", "a>a", "a>a"}).code
          == cli::EXIT_PARSE);
  REQUIRE(run({"gen", "pt"}).code == cli::EXIT_PARSE);
  REQUIRE(run({"gen", "cube", "2"}).code == cli::EXIT_PARSE);

  auto word = run({"pn", "mul", "2", "c>a", "a>a"});
  REQUIRE(word.code == cli::EXIT_PARSE);
  REQUIRE(word.out.empty());
  REQUIRE_THAT(word.err, StartsWith("rrm: "));
  REQUIRE(run({"h", "reduce", "2", "[a>b"}).code == cli::EXIT_PARSE);
  REQUIRE(run({"cantor", "eval", "2", "(x,"}).code == cli::EXIT_PARSE);
  REQUIRE(run({"witness", "2", "{a, ab}"}).code == cli::EXIT_PARSE);

  // validation failures
  REQUIRE(run({"h", "reduce", "2", "[a>b, ab>a]"}).code == cli::EXIT_FALSE);
  REQUIRE(run({"cantor", "eval", "2", "(x,x,x)L"}).code == cli::EXIT_FALSE);
  REQUIRE(run({"pn", "mul", "1", "a>a", "a>a"}).code == cli::EXIT_FALSE);
  REQUIRE(run({"gen", "pt", "5"}).code == cli::EXIT_FALSE);
  REQUIRE(run({"witness", "2", "{}"}).code == cli::EXIT_FALSE);

  Scratch s;
  REQUIRE(run({"axioms", s.path("missing.json")}).code == cli::EXIT_PARSE);
  auto bad = s.path("bad.json");
  std::ofstream(bad) << "{\"name\": 3}";
  REQUIRE(run({"axioms", bad}).code == cli::EXIT_PARSE);

  auto pt = s.path("pt2.json");
  run({"gen", "pt", "2", "-o", pt});
  auto c = run({"companion", pt});
  REQUIRE(c.code == cli::EXIT_FALSE);
  REQUIRE_THAT(c.err, ContainsSubstring("not an inverse monoid"));

  auto help = run({"--help"});
  REQUIRE(help.code == cli::EXIT_OK);
  REQUIRE_THAT(help.out, ContainsSubstring("companion"));
}
