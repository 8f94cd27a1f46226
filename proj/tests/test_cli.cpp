#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "diagmaps/cli.hpp"
#include "diagmaps/json_io.hpp"

using namespace diagmaps;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    dir_ = std::filesystem::temp_directory_path() /
           ("diagmaps_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  ~TempDir() { std::filesystem::remove_all(dir_); }
  std::string file(const std::string& name, const std::string& content) {
    std::string path = (dir_ / name).string();
    std::ofstream(path) << content;
    return path;
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace

TEST_CASE("monoid table golden output") {
  RunResult r = run_cli({"monoid", "table"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "     | I    T    P'   P''\n"
        "-----+--------------------\n"
        "I    | I    T    P'   P''\n"
        "T    | T    I    P'   P''\n"
        "P'   | P'   P''  P'   P''\n"
        "P''  | P''  P'   P'   P''\n");
}

TEST_CASE("selfmaps output and exit codes") {
  RunResult r2 = run_cli({"selfmaps", "--n", "2"});
  CHECK(r2.code == 0);
  CHECK(r2.out.find("order 16") != std::string::npos);
  CHECK(r2.out.find("V_n = Z/2") != std::string::npos);
  CHECK(r2.out.find("table data") != std::string::npos);

  RunResult r3 = run_cli({"selfmaps", "--n", "3"});
  CHECK(r3.code == 0);
  CHECK(r3.out.find("linear extension of N") != std::string::npos);
  CHECK(r3.out.find("open") != std::string::npos);
  CHECK(r3.out.find("fibre order 144") != std::string::npos);

  RunResult bad = run_cli({"selfmaps", "--n", "99"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("outside the sphere table") != std::string::npos);

  RunResult unknown = run_cli({"selfmaps", "--n", "2", "--frobnicate"});
  CHECK(unknown.code == 2);

  RunResult missing = run_cli({"fgab", "group", "/nonexistent/file.json"});
  CHECK(missing.code == 2);
}

TEST_CASE("json outputs round-trip through the parsers") {
  TempDir tmp;
  std::string g = tmp.file("g.json", R"({"ambient_rank":2,"relations":[[4,0],[2,2]]})");

  SUBCASE("fgab group") {
    RunResult r = run_cli({"fgab", "group", g, "--json"});
    REQUIRE(r.code == 0);
    Json j = parse_json_text(r.out);
    FgAbGroup parsed = group_from_json(j);
    CHECK(parsed.canonical_form().to_string() == j.at("canonical").get<std::string>());
  }
  SUBCASE("gamma group and torsion") {
    for (std::string sub : {"group", "torsion"}) {
      RunResult r = run_cli({"gamma", sub, g, "--json"});
      REQUIRE(r.code == 0);
      Json j = parse_json_text(r.out);
      CHECK(group_from_json(j).canonical_form().to_string() ==
            j.at("canonical").get<std::string>());
    }
  }
  SUBCASE("fgab snf emits the exact factorization") {
    std::string m = tmp.file("m.json", R"({"matrix":[[6,4],[2,8]]})");
    RunResult r = run_cli({"fgab", "snf", m, "--json"});
    REQUIRE(r.code == 0);
    Json j = parse_json_text(r.out);
    IntMatrix s = matrix_from_json(j.at("s"));
    IntMatrix u = matrix_from_json(j.at("u"));
    IntMatrix v = matrix_from_json(j.at("v"));
    IntMatrix orig = IntMatrix::from_rows({{6, 4}, {2, 8}});
    CHECK(u * orig * v == s);
  }
}

TEST_CASE("byte-identical output across repeated runs") {
  std::vector<std::vector<std::string>> commands = {
      {"monoid", "check", "--n", "3", "--scope", "N", "--seed", "1729"},
      {"monoid", "check", "--n", "2", "--scope", "N"},
      {"orbits", "--target", "builtin:product:5", "--v", "diagonal"},
      {"selfmaps", "--n", "4", "--json"},
  };
  for (const auto& cmd : commands) {
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("monoid check reports the even-n counterexample over N") {
  RunResult r = run_cli({"monoid", "check", "--n", "2", "--scope", "N", "--json"});
  REQUIRE(r.code == 0);
  // The note line follows the JSON document; parse just the object.
  Json j = parse_json_text(r.out.substr(0, r.out.rfind("note:")));
  CHECK(j.at("passed").get<bool>() == false);
  CHECK(j.at("counterexample").contains("lhs_scalar"));

  RunResult ok = run_cli({"monoid", "check", "--n", "5", "--scope", "M"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("pass") != std::string::npos);
}

TEST_CASE("monoid compose through files") {
  TempDir tmp;
  std::string a = tmp.file("a.json", R"({"m":[[0,1],[1,0]],"x":{"coords":[1]},"y":{"coords":[0]}})");
  std::string b = tmp.file("b.json", R"({"m":[[0,1],[1,0]],"x":{"coords":[0]},"y":{"coords":[1]}})");
  RunResult r = run_cli({"monoid", "compose", "--n", "2", a, b});
  CHECK(r.code == 0);
  CHECK(r.out.find("(I,((2),(0)))") != std::string::npos);

  // Odd n requires the assume-split flag and watermarks the output.
  std::string c = tmp.file("c.json", R"({"m":[[1,0],[0,1]],"x":{"coords":[3]},"y":{"coords":[5]}})");
  RunResult refuse = run_cli({"monoid", "compose", "--n", "3", c, c});
  CHECK(refuse.code == 1);
  RunResult split = run_cli({"monoid", "compose", "--n", "3", c, c, "--assume-split"});
  CHECK(split.code == 0);
  CHECK(split.out.find("WARNING") != std::string::npos);

  // For even n, matrices outside M are a domain error.
  std::string d = tmp.file("d.json", R"({"m":[[2,-1],[0,1]],"x":{"coords":[0]},"y":{"coords":[0]}})");
  RunResult outside = run_cli({"monoid", "compose", "--n", "2", d, d});
  CHECK(outside.code == 1);
}

TEST_CASE("orbits command output") {
  RunResult r = run_cli({"orbits", "--target", "builtin:sphere:2", "--v", "id", "--json"});
  REQUIRE(r.code == 0);
  Json j = parse_json_text(r.out.substr(0, r.out.rfind("note:")));
  CHECK(j.at("phi_injective").get<bool>());
  CHECK(j.at("entries").size() == 2);
  for (const auto& e : j.at("entries")) {
    CHECK(e.at("quotient").get<std::string>() == "Z/2");
    CHECK(e.at("action").get<std::string>() == "0");
  }
}

TEST_CASE("gammaseq example round-trips into validate and isotropy") {
  TempDir tmp;
  std::string z6 = tmp.file("z6.json", R"({"ambient_rank":1,"relations":[[6]]})");
  RunResult ex = run_cli({"gammaseq", "example", "--pi3", z6, "--wu", "inf,4", "--json"});
  REQUIRE(ex.code == 0);
  Json j = parse_json_text(ex.out);
  CHECK(j.at("action").get<std::string>() == "Z/2");
  CHECK(j.at("nontrivial").get<bool>());

  std::string seq = tmp.file("seq.json", j.at("seq").dump());
  RunResult val = run_cli({"gammaseq", "validate", seq});
  CHECK(val.code == 0);
  CHECK(val.out.find("valid gamma sequence") != std::string::npos);
  CHECK(val.out.find("FAIL") == std::string::npos);

  std::string w = tmp.file("w.json", j.at("w").dump());
  std::string u = tmp.file("u.json", j.at("u_prime").dump());
  RunResult iso = run_cli({"gammaseq", "isotropy", seq, "--w", w, "--u", u, "--json"});
  REQUIRE(iso.code == 0);
  Json ij = parse_json_text(iso.out);
  CHECK(ij.at("action").get<std::string>() == "Z/2");
}

TEST_CASE("user-supplied target files work end to end") {
  TempDir tmp;
  // A finite synthetic target: pi_n = Z/2, pi_n1 = Z/2, pi_2n = Z/4,
  // pi_2n1 = Z/2, with P1n hitting the order-2 element and Pnn = 0.
  std::string target = tmp.file("t.json", R"({
    "n": 2,
    "pi_n":  {"ambient_rank":1,"relations":[[2]]},
    "pi_n1": {"ambient_rank":1,"relations":[[2]]},
    "pi_2n": {"ambient_rank":1,"relations":[[4]]},
    "pi_2n1":{"ambient_rank":1,"relations":[[2]]},
    "P1n": [[{"coords":[2]}]],
    "Pnn": [[{"coords":[0]}]],
    "tau_sign": -1
  })");
  std::string v = tmp.file("v.json", R"({"coords":[1]})");
  RunResult r = run_cli({"orbits", "--target", target, "--v", v});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("phi_injective: true") != std::string::npos);
  // No table-data note for user targets.
  CHECK(r.out.find("table data") == std::string::npos);

  std::string broken = tmp.file("broken.json", R"({
    "n": 2,
    "pi_n":  {"ambient_rank":1,"relations":[[2]]},
    "pi_n1": {"ambient_rank":1,"relations":[[2]]},
    "pi_2n": {"ambient_rank":1,"relations":[[4]]},
    "pi_2n1":{"ambient_rank":1,"relations":[[2]]},
    "P1n": [[{"coords":[1]}]],
    "Pnn": [[{"coords":[0]}]],
    "tau_sign": -1
  })");
  RunResult bad = run_cli({"orbits", "--target", broken, "--v", v});
  CHECK(bad.code == 2);  // P1n value of order 4 cannot be bilinear in a Z/2 slot
}
