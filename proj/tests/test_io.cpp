// Copyright 2026 The hausdorff-trees Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hausdorff/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "hausdorff/cli.hpp"
#include "hausdorff/random_tree.hpp"
#include "test_util.hpp"

namespace hausdorff {
namespace {

using testing::load_fixture;

std::string fixture_path(const std::string& name) {
  return std::string(HAUSDORFF_FIXTURE_DIR) + "/" + name;
}

/// Scratch directory shared by the CLI tests of this binary.
std::filesystem::path scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / "hausdorff_io_tests";
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST_CASE("parse_edge_list accepts a single-vertex document") {
  const Tree t = parse_edge_list("1\n");
  CHECK(t.vertex_count() == 1);
}

TEST_CASE("parse_edge_list accepts the 8-vertex fixture text") {
  const Tree t = parse_edge_list("8\n0 3\n1 3\n2 3\n3 7\n4 5\n5 6\n6 7\n");
  CHECK(t == load_fixture("fig5_t2.txt"));
}

TEST_CASE("parse_edge_list accepts comments and blank lines") {
  const Tree t = parse_edge_list("# a path\n\n3\n0 1  # first edge\n1 2\n");
  CHECK(t == testing::path_tree(3));
}

TEST_CASE("parse_edge_list reports a missing edge count") {
  try {
    parse_edge_list("3\n0 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("expected 2 edges, found 1") != std::string::npos);
  }
}

TEST_CASE("parse_edge_list reports malformed documents with line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    FAIL("expected ParseError");
    return -1;
  };
  CHECK(line_of("x\n") == 1);
  CHECK(line_of("2\n0 x\n") == 2);
  CHECK(line_of("3\n0 1\n1 2 3\n") == 3);
  CHECK(line_of("") == 0);
  // Structurally fine, but not a tree: the cycle is reported too.
  CHECK_THROWS_AS(parse_edge_list("4\n0 1\n1 2\n2 0\n"), ParseError);
}

TEST_CASE("serialize then parse reproduces the identical tree") {
  std::mt19937_64 rng(3131);
  for (int trial = 0; trial < 30; ++trial) {
    const Tree t = gen_random_tree(1 + static_cast<int>(rng() % 40), rng());
    CHECK(parse_edge_list(serialize_edge_list(t)) == t);
  }
}

TEST_CASE("gen_random_tree smallest cases") {
  CHECK(gen_random_tree(1, 9).vertex_count() == 1);
  const Tree two = gen_random_tree(2, 9);
  CHECK(two.edges() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("gen_random_tree is deterministic per seed") {
  const Tree a = gen_random_tree(8, 42);
  const Tree b = gen_random_tree(8, 42);
  CHECK(a == b);
  CHECK(a != gen_random_tree(8, 43));
}

TEST_CASE("gen_random_tree always yields a valid tree") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const Tree t = gen_random_tree(n, rng());
    CHECK(t.vertex_count() == n);  // construction already validated it
  }
}

TEST_CASE("gen_random_tree covers the labeled trees on 4 vertices uniformly") {
  // 4^2 = 16 labeled trees; chi-square on 10^4 samples, 15 degrees of
  // freedom, significance 0.001 -> critical value 37.697.
  std::map<std::string, int> counts;
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) {
    counts[serialize_edge_list(gen_random_tree(4, 500 + i))]++;
  }
  CHECK(counts.size() == 16);
  const double expected = samples / 16.0;
  double chi2 = 0.0;
  for (const auto& [key, observed] : counts) {
    const double d = observed - expected;
    chi2 += d * d / expected;
  }
  CHECK(chi2 < 37.697);
}

TEST_CASE("result documents round-trip through JSON") {
  ResultDocument doc;
  doc.distance = 2;
  doc.root1 = 10;
  doc.root2 = 7;
  doc.swapped = true;
  doc.mapping = {{0, 1}, {3, 4}, {10, 7}};
  doc.cover_distance = 2;
  const ResultDocument back = ResultDocument::from_json(doc.to_json());
  CHECK(back.distance == doc.distance);
  CHECK(back.root1 == doc.root1);
  CHECK(back.root2 == doc.root2);
  CHECK(back.swapped == doc.swapped);
  CHECK(back.mapping == doc.mapping);
  CHECK(back.cover_distance == doc.cover_distance);
}

TEST_CASE("result document parsing rejects junk") {
  CHECK_THROWS(ResultDocument::from_json("not json"));
  CHECK_THROWS(ResultDocument::from_json("{\"distance\": 1}"));
}

TEST_CASE("cli compute prints the fixture distances") {
  const CliRun fig5 = cli({"compute", fixture_path("fig5_t1.txt"), fixture_path("fig5_t2.txt")});
  CHECK(fig5.exit_code == kExitOk);
  CHECK(fig5.out == "1\n");

  const CliRun fig1 = cli({"compute", fixture_path("fig1_g.txt"), fixture_path("fig1_g1.txt")});
  CHECK(fig1.exit_code == kExitOk);
  CHECK(fig1.out == "2\n");

  const CliRun threaded = cli({"compute", fixture_path("fig5_t1.txt"),
                               fixture_path("fig5_t2.txt"), "--threads", "2"});
  CHECK(threaded.exit_code == kExitOk);
  CHECK(threaded.out == "1\n");
}

TEST_CASE("cli compute writes a result document that verify accepts") {
  const auto out_file = (scratch_dir() / "fig5_result.json").string();
  const CliRun computed = cli({"compute", fixture_path("fig5_t1.txt"),
                               fixture_path("fig5_t2.txt"), "--out", out_file});
  CHECK(computed.exit_code == kExitOk);

  const CliRun verified = cli({"verify", fixture_path("fig5_t1.txt"),
                               fixture_path("fig5_t2.txt"), out_file});
  CHECK(verified.exit_code == kExitOk);
  CHECK(verified.out.find("ok") == 0);

  // Tampering with the claimed distance must be caught.
  ResultDocument doc = ResultDocument::from_json(cli_detail::read_file(out_file));
  doc.distance = 0;
  doc.cover_distance = 0;
  const auto bad_file = (scratch_dir() / "fig5_bad.json").string();
  cli_detail::write_file(bad_file, doc.to_json());
  const CliRun rejected = cli({"verify", fixture_path("fig5_t1.txt"),
                               fixture_path("fig5_t2.txt"), bad_file});
  CHECK(rejected.exit_code == kExitMismatch);
}

TEST_CASE("cli compute then verify round-trips on random pairs") {
  std::mt19937_64 rng(717171);
  for (int trial = 0; trial < 6; ++trial) {
    const auto a_file = (scratch_dir() / ("rt_a" + std::to_string(trial) + ".txt")).string();
    const auto b_file = (scratch_dir() / ("rt_b" + std::to_string(trial) + ".txt")).string();
    const auto r_file = (scratch_dir() / ("rt_r" + std::to_string(trial) + ".json")).string();
    cli_detail::write_file(a_file, serialize_edge_list(gen_random_tree(
                                       1 + static_cast<int>(rng() % 30), rng())));
    cli_detail::write_file(b_file, serialize_edge_list(gen_random_tree(
                                       1 + static_cast<int>(rng() % 30), rng())));
    CHECK(cli({"compute", a_file, b_file, "--out", r_file}).exit_code == kExitOk);
    CHECK(cli({"verify", a_file, b_file, r_file}).exit_code == kExitOk);
  }
}

TEST_CASE("cli oracle agrees with the engine on small fixtures") {
  const auto a_file = (scratch_dir() / "small_a.txt").string();
  const auto b_file = (scratch_dir() / "small_b.txt").string();
  CHECK(cli({"gen", "--n", "7", "--seed", "5", "--out", a_file}).exit_code == kExitOk);
  CHECK(cli({"gen", "--n", "7", "--seed", "6", "--out", b_file}).exit_code == kExitOk);

  const CliRun run = cli({"oracle", a_file, b_file});
  CHECK(run.exit_code == kExitOk);
  std::istringstream lines(run.out);
  std::string label;
  int engine = -1;
  int oracle = -2;
  lines >> label >> engine >> label >> oracle;
  CHECK(engine == oracle);
}

TEST_CASE("cli oracle refuses trees above the size cap") {
  const auto big_file = (scratch_dir() / "big.txt").string();
  CHECK(cli({"gen", "--n", "10", "--seed", "5", "--out", big_file}).exit_code == kExitOk);
  const CliRun run = cli({"oracle", big_file, big_file});
  CHECK(run.exit_code == kExitResourceCap);
}

TEST_CASE("cli gen is deterministic and parseable") {
  const auto f1 = (scratch_dir() / "gen1.txt").string();
  const auto f2 = (scratch_dir() / "gen2.txt").string();
  CHECK(cli({"gen", "--n", "12", "--seed", "42", "--out", f1}).exit_code == kExitOk);
  CHECK(cli({"gen", "--n", "12", "--seed", "42", "--out", f2}).exit_code == kExitOk);
  CHECK(cli_detail::read_file(f1) == cli_detail::read_file(f2));
  CHECK(load_tree_file(f1).vertex_count() == 12);
}

TEST_CASE("cli bench prints one row per pair") {
  const CliRun run = cli({"bench", "--sizes", "8,12", "--seed", "3", "--reps", "2",
                          "--threads", "1"});
  CHECK(run.exit_code == kExitOk);
  std::istringstream lines(run.out);
  std::string line;
  int rows = 0;
  CHECK(std::getline(lines, line));
  CHECK(line == "n1 n2 seconds distance");
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 4);
}

TEST_CASE("cli usage errors exit with code 1") {
  CHECK(cli({}).exit_code == kExitUsage);
  CHECK(cli({"unknown"}).exit_code == kExitUsage);
  CHECK(cli({"compute", "only_one.txt"}).exit_code == kExitUsage);
  CHECK(cli({"compute", "missing_a.txt", "missing_b.txt"}).exit_code == kExitUsage);
  CHECK(cli({"gen", "--n", "5"}).exit_code == kExitUsage);
  CHECK(cli({"gen", "--n", "nope", "--seed", "1", "--out", "x.txt"}).exit_code == kExitUsage);
  CHECK(cli({"bench", "--sizes", ""}).exit_code == kExitUsage);
  CHECK(cli({"compute", "--threads"}).exit_code == kExitUsage);

  const CliRun help = cli({"--help"});
  CHECK(help.exit_code == kExitOk);
  CHECK(help.out.find("usage:") != std::string::npos);
}

TEST_CASE("cli compute rejects malformed tree files with a diagnostic") {
  const auto bad = (scratch_dir() / "bad_tree.txt").string();
  cli_detail::write_file(bad, "3\n0 1\n");
  const CliRun run = cli({"compute", bad, bad});
  CHECK(run.exit_code == kExitUsage);
  CHECK(run.err.find("expected 2 edges") != std::string::npos);
}

}  // namespace
}  // namespace hausdorff
