#include <catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "knotd/cli.hpp"
#include "schema.hpp"

using namespace knotd;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_command(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

void require_valid(const std::string& schema_file, const std::string& text) {
  const auto v = schema::Validator::from_file(std::string(KNOTD_SCHEMA_DIR) + "/" + schema_file);
  const auto errors = v.validate(nlohmann::json::parse(text));
  for (const auto& e : errors) UNSCOPED_INFO(e);
  CHECK(errors.empty());
}
}  // namespace

TEST_CASE("dnorm of unknot surgeries is zero on every label") {
  const Run r = run({"dnorm", "--knot", "U", "--slope", "7/2", "--all-spinc"});
  CHECK(r.code == 0);
  CHECK(r.out == "0: 0\n1: 0\n2: 0\n3: 0\n4: 0\n5: 0\n6: 0\n");
}

TEST_CASE("d of the doubled trefoil at 1/2") {
  const Run r = run({"d", "--knot", "T(2,3) # rev(T(2,3))", "--slope", "1/2"});
  CHECK(r.code == 0);
  CHECK(r.out == "-2\n");
  const Run j = run({"d", "--knot", "T(2,3) # rev(T(2,3))", "--slope", "1/2", "--json"});
  require_valid("d-table.schema.json", j.out);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["d"]["0"] == "-2");
  CHECK(doc["dnorm"]["0"] == "-2");
  CHECK(doc["slope"] == "1/2");
}

TEST_CASE("lens-d and single labels") {
  CHECK(run({"lens-d", "--slope", "2", "--all-spinc"}).out == "0: 1/4\n1: -1/4\n");
  CHECK(run({"lens-d", "--slope", "5/2", "--spinc", "3"}).code == 0);
  const Run bad = run({"lens-d", "--slope", "5/2", "--spinc", "5"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("out of range") != std::string::npos);
  const Run j = run({"lens-d", "--slope", "-3/2", "--all-spinc", "--json"});
  require_valid("d-table.schema.json", j.out);
}

TEST_CASE("exit codes") {
  CHECK(run({"d", "--knot", "T(2,3)", "--slope", "0"}).code == 2);
  CHECK(run({"d", "--knot", "T(2,3)", "--slope", "0"}).err.find("0-surgery out of scope") != std::string::npos);
  CHECK(run({"d", "--knot", "T(2,4)", "--slope", "1"}).err.find("coprime") != std::string::npos);
  CHECK(run({"d", "--knot", "wh+(T(2,3))", "--slope", "1"}).code == 3);
  CHECK(run({"d", "--knot", "U", "--slope", "1", "--bogus"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"d", "--knot", "U", "--slope", "3", "--spinc", "1", "--all-spinc"}).code == 1);
}

TEST_CASE("vh") {
  const Run r = run({"vh", "--knot", "T(2,7)"});
  CHECK(r.out == "g = 3\nV: 2 1 1 0\nH: 0 1 1 2\n");
  require_valid("vh.schema.json", run({"vh", "--knot", "T(3,4) # mirror(T(2,3))", "--json"}).out);
  const Run user = run({"vh", "--knot", "wh+(T(2,3))", "--supply-profile", R"({"g":1,"V":[1,0],"H":[0,1]})", "--json"});
  CHECK(nlohmann::json::parse(user.out)["provenance"] == "user");
  CHECK(run({"vh", "--knot", "U", "--supply-profile", R"({"g":1,"V":[0,1],"H":[1,0]})"}).code == 2);
  CHECK(run({"vh", "--knot", "U", "--supply-profile", "{oops"}).code == 2);
}

TEST_CASE("calc") {
  CHECK(run({"calc", "slam-dunk", "--n", "3", "--slope", "2"}).out == "5/2\n");
  CHECK(run({"calc", "slam-dunk", "--n", "-2", "--slope", "0"}).code == 2);
  CHECK(run({"calc", "slap-shot", "--ell", "0", "--slope", "1", "--qprime", "1"}).out == "1/2\n");
  CHECK(run({"calc", "slap-shot", "--ell", "-1", "--slope", "3/2", "--qprime", "2"}).out == "-5/8\n");
  require_valid("slam-dunk.schema.json", run({"calc", "slam-dunk", "--n", "0", "--slope", "-1/2", "--json"}).out);
  require_valid("slap-shot.schema.json",
                run({"calc", "slap-shot", "--ell", "-1", "--slope", "3/2", "--qprime", "2", "--json"}).out);
  const Run chain = run({"calc", "chain", "--slope", "7/3", "--json"});
  require_valid("chain.schema.json", chain.out);
  const auto doc = nlohmann::json::parse(chain.out);
  CHECK(doc["det_a"] == "7");
  CHECK(doc["det_b"] == "3");
  CHECK(doc["matrix"] == nlohmann::json::parse(R"([["3","1","0"],["1","2","1"],["0","1","2"]])"));
  CHECK(run({"calc"}).code == 1);
}

TEST_CASE("branched double covers") {
  const Run r = run({"bdc", "--knot", "wh+(T(2,3))"});
  CHECK(r.code == 0);
  CHECK(r.out.find("S^3_{1/2}(T(2,3) # rev(T(2,3)))") != std::string::npos);
  CHECK(r.out.find("d(0) = -2") != std::string::npos);
  require_valid("bdc.schema.json", run({"bdc", "--knot", "P[-1](T(2,3))", "--json"}).out);
  require_valid("bdc.schema.json", run({"bdc", "--knot", "P[-1](wh+(T(2,3)))", "--json"}).out);
  CHECK(run({"bdc", "--knot", "P[0](U)"}).code == 2);
  CHECK(run({"bdc", "--knot", "T(2,3)"}).err.find("no surgery presentation implemented") != std::string::npos);
}

TEST_CASE("obstruct") {
  const Run w = run({"obstruct", "split", "--knot", "wh+(T(2,3))", "--json"});
  CHECK(w.code == 0);
  require_valid("report.schema.json", w.out);
  const auto doc = nlohmann::json::parse(w.out);
  CHECK(doc["verdict"] == "Obstructed");
  bool delta_seen = false;
  for (const auto& c : doc["checks"])
    if (c["name"] == "delta_2") {
      delta_seen = true;
      CHECK(c["value"] == "-2");
      CHECK(c["vanishes"] == false);
    }
  CHECK(delta_seen);

  CHECK(run({"obstruct", "split", "--knot", "U"}).out.find("verdict: NoObstructionFound") != std::string::npos);
  CHECK(run({"obstruct", "bing", "--knot", "wh+(T(2,3))"}).code == 3);
  const Run supplied = run({"obstruct", "bing", "--knot", "wh+(T(2,3))", "--supply-profile",
                            R"({"g":1,"V":[1,0],"H":[0,1]})", "--json"});
  CHECK(supplied.code == 0);
  require_valid("report.schema.json", supplied.out);
  CHECK(nlohmann::json::parse(supplied.out)["verdict"] == "Obstructed");

  const Run local = run({"obstruct", "local-knot", "--knot", "wh+(T(2,7))", "--ell", "-1", "--json"});
  require_valid("report.schema.json", local.out);
  CHECK(run({"obstruct", "local-knot", "--knot", "U"}).code == 1);
  CHECK(run({"obstruct", "split", "--knot", "U", "--supply-s", "2"}).out.find("Obstructed") != std::string::npos);
  CHECK(run({"obstruct", "split", "--knot", "U", "--supply-delta", "2=1/4", "--json"}).code == 0);
  CHECK(run({"obstruct", "split", "--knot", "U", "--supply-delta", "nonsense"}).code == 2);
  CHECK(run({"obstruct", "split", "--knot", "wh+(T(2,3))", "--supply-delta", "1=0"}).code == 2);
}

TEST_CASE("bound and family-check") {
  const Run b = run({"bound", "--slope", "-2", "--unknotting", "2,0", "--json"});
  CHECK(b.code == 0);
  require_valid("bound.schema.json", b.out);
  CHECK(nlohmann::json::parse(b.out)["lower"] == "-9/2");
  CHECK(run({"bound", "--slope", "3", "--unknotting", "1,0", "--side", "lower"}).code == 2);
  CHECK(run({"bound", "--slope", "3", "--unknotting", "x"}).code == 2);
  CHECK(run({"bound", "--slope", "3", "--unknotting", "1,0", "--side", "sideways"}).code == 1);

  const Run f = run({"family-check", "--ell", "-1", "--n-max", "10", "--json"});
  CHECK(f.code == 0);
  require_valid("family-check.schema.json", f.out);
  CHECK(nlohmann::json::parse(f.out)["threshold"] == 2);
  CHECK(run({"family-check", "--ell", "1"}).code == 2);
  CHECK(run({"family-check", "--ell", "-1"}).out.find("N0 = 2") != std::string::npos);
}

TEST_CASE("cache flag") {
  const auto file = std::filesystem::temp_directory_path() / ("knotd-cli-" + std::to_string(::getpid()) + ".jsonl");
  std::filesystem::remove(file);
  CHECK(run({"vh", "--knot", "T(2,5)", "--cache", file.string()}).code == 0);
  const auto line = [&] {
    std::ifstream in(file);
    std::string l;
    std::getline(in, l);
    return l;
  }();
  require_valid("cache-entry.schema.json", line);
  CHECK(run({"vh", "--knot", "rev(T(2,5))", "--cache", file.string()}).out == "g = 2\nV: 1 1 0\nH: 0 1 1\n");
  std::filesystem::remove(file);
}
