#include <doctest.h>

#include <hypform/json_io.hpp>

#include "cli_runner.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

using namespace hypform;
using hypform::testing::run_cli;

namespace {

Json output_of(const testing::CliResult& r) { return parse_json(r.out); }

std::filesystem::path scratch_file(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "hypform_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("invariants of span{f1,e2,f2}") {
  auto r = run_cli({"invariants", "--space", "sp", "--n", "2", "--subspace", "[[f1,e2,f2]]"});
  REQUIRE(r.exit_code == 0);
  Json j = output_of(r);
  CHECK(j["status"] == "verified");
  CHECK(j["p"] == 3);
  CHECK(j["two_r"] == 2);
  CHECK(j["radical_dim"] == 1);
  CHECK(j.contains("elapsed_ms"));
  CHECK(j.contains("tower_summary"));
}

TEST_CASE("transport with a rank mismatch is infeasible") {
  auto r = run_cli({"transport", "--space", "sp", "--n", "2", "--w1", "[e1,e2]", "--w2", "[e1,f1]"});
  CHECK(r.exit_code == 3);
  Json j = output_of(r);
  CHECK(j["status"] == "infeasible");
  CHECK(j["reason"] == "rank mismatch");
}

TEST_CASE("bm-check on the cat map") {
  auto r = run_cli({"bm-check", "--matrix", "[[2,1],[1,1]]"});
  REQUIRE(r.exit_code == 0);
  Json j = output_of(r);
  CHECK(j["hyperbolic"] == true);
  CHECK(j["brin_manning"] == true);
}

TEST_CASE("enumerate-validate") {
  auto r = run_cli({"enumerate-validate", "--space", "sp", "--n", "2"});
  CHECK(r.exit_code == 0);
  r = run_cli({"enumerate-validate", "--space", "sp", "--n", "0"});
  CHECK(r.exit_code == 0);
  CHECK(output_of(r)["status"] == "verified");
}

TEST_CASE("empty search exits 3") {
  auto r = run_cli({"search", "--generators", "[[[1,0],[0,1]]]", "--max-len", "3", "--predicate", "hyperbolic"});
  CHECK(r.exit_code == 3);
}

TEST_CASE("documents on stdin and in files") {
  auto r = run_cli({"invariants", "-i", "-"}, R"({"space":{"kind":"so","n":2},"subspace":["x1+y1","x2"]})");
  REQUIRE(r.exit_code == 0);
  Json j = output_of(r);
  CHECK(j["l"] == 1);
  CHECK(j["p"] == 1);
  CHECK(j["q"] == 0);
  auto path = scratch_file("arrange.json");
  r = run_cli({"arrange", "--space", "so", "--n", "3", "--w1", "[x1+y1,x2+y2]", "--w2", "[x1+y1,x2+y2]", "-o", path.string()});
  REQUIRE(r.exit_code == 0);
  CHECK(run_cli({"verify", "-i", path.string()}).exit_code == 0);
}

TEST_CASE("odd same-family Lagrangians report the SO obstruction") {
  auto r = run_cli({"arrange", "--space", "so", "--n", "3", "--w1", "[x1+y1,x2+y2,x3+y3]", "--w2", "[x1+y1,x2+y2,x3+y3]"});
  CHECK(r.exit_code == 3);
  CHECK(output_of(r)["reason"] == "SO obstruction");
}

TEST_CASE("verify rejects a tampered certificate") {
  auto r = run_cli({"invariants", "--space", "sp", "--n", "2", "--subspace", "[f1,e2,f2]"});
  REQUIRE(r.exit_code == 0);
  Json j = output_of(r);
  j["certificate"]["values"]["two_r"] = 0;
  auto path = scratch_file("tampered.json");
  std::ofstream(path) << j.dump();
  CHECK(run_cli({"verify", "-i", path.string()}).exit_code == 1);
}

TEST_CASE("fixed malformed inputs exit 2") {
  std::vector<std::vector<std::string>> cases{
      {"invariants", "--space", "sp", "--n", "2", "--subspace", "[z1]"},
      {"invariants", "--space", "sp", "--n", "two", "--subspace", "[e1]"},
      {"invariants", "--space", "gl", "--n", "2", "--subspace", "[e1]"},
      {"invariants", "--space", "sp", "--n", "2", "--subspace", "[e3]"},
      {"spec", "--matrix", "[[2,0],[0,1]]"},
      {"spec", "--matrix", "[[1,2],[3"},
      {"verify", "-i", "{\"kind\":"},
      {"verify", "-i", "/nonexistent/file.json"},
      {"frobnicate"},
      {},
      {"search", "--max-len", "0"},
      {"genpos", "--space", "sp", "--n", "2", "--first", "3,4", "--second", "1,0"},
      {"transport", "--space", "so", "--n", "2", "--w1", "[x1]"},
  };
  for (const auto& args : cases) {
    auto r = run_cli(args);
    CAPTURE(args.empty() ? std::string() : args.front());
    CHECK(r.exit_code == 2);
    CHECK_FALSE(r.crashed);
  }
}

TEST_CASE("random malformed inputs always exit 2") {
  std::mt19937_64 rng(0xc11);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)); };
  const std::vector<std::string> good{"e1", "f2", "e1+f1", "2*e2", "1/2*f1-e2"};
  const std::vector<std::string> bad{"z1", "e9", "e0", "f", "e1+", "*e1", "e1//2", "sqrt(-1)*e1", "1/0*e1", "e1 e2", "(e1"};
  const std::string junk = "[]{},:\"'e1f2x0-+*/\\ ";
  for (int i = 0; i < 60; ++i) {
    std::vector<std::string> args;
    switch (i % 5) {
      case 0: {
        std::string s = "[";
        std::size_t k = 1 + pick(3), at = pick(k);
        for (std::size_t j = 0; j < k; ++j) s += (j ? "," : "") + (j == at ? bad[pick(bad.size())] : good[pick(good.size())]);
        args = {"invariants", "--space", "sp", "--n", "2", "--subspace", s + "]"};
        break;
      }
      case 1: {
        std::string s = "[[";
        for (std::size_t j = 0, k = 1 + pick(10); j < k; ++j) s += junk[pick(junk.size())];
        args = {"spec", "--matrix", s};
        break;
      }
      case 2: {
        long a = 2 + static_cast<long>(pick(5)), b = static_cast<long>(pick(5));
        args = {"bm-check", "--matrix", "[[" + std::to_string(a) + "," + std::to_string(b) + "],[0,1]]"};
        break;
      }
      case 3: {
        std::string doc = R"({"space":{"kind":"sp","n":2},"subspace":["e1","f2"]})";
        doc.resize(pick(doc.size() - 1));
        args = {"invariants", "-i", doc.empty() ? "{" : doc};
        break;
      }
      default: {
        const std::vector<std::string> ns{"-1", "x", "2.5", "", "99999999999999999999", "3..", "..", "0x2"};
        args = {"perp", "--space", "so", "--n", ns[pick(ns.size())], "--subspace", "[x1]"};
      }
    }
    auto r = run_cli(args);
    CAPTURE(args.back());
    CHECK(r.exit_code == 2);
    CHECK_FALSE(r.crashed);
    CHECK_NOTHROW(parse_json(r.out));
  }
}
