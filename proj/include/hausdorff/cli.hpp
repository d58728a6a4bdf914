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

#ifndef HAUSDORFF_CLI_HPP
#define HAUSDORFF_CLI_HPP

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hausdorff/engine.hpp"
#include "hausdorff/io.hpp"
#include "hausdorff/oracle.hpp"
#include "hausdorff/random_tree.hpp"
#include "hausdorff/tree.hpp"

namespace hausdorff {

// Exit codes shared by every subcommand.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitResourceCap = 3;

namespace cli_detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Minimal option scanner: positionals in order, plus the declared --flags.
class Args {
 public:
  explicit Args(std::vector<std::string> argv) : argv_(std::move(argv)) {}

  std::optional<std::string> take_option(const std::string& name) {
    for (std::size_t i = 0; i < argv_.size(); ++i) {
      if (argv_[i] == name) {
        if (i + 1 >= argv_.size()) {
          throw UsageError(name + " requires a value");
        }
        std::string value = argv_[i + 1];
        argv_.erase(argv_.begin() + i, argv_.begin() + i + 2);
        return value;
      }
    }
    return std::nullopt;
  }

  std::vector<std::string> positionals() const {
    for (const auto& a : argv_) {
      if (!a.empty() && a[0] == '-') {
        throw UsageError("unknown option '" + a + "'");
      }
    }
    return argv_;
  }

 private:
  std::vector<std::string> argv_;
};

inline int to_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageError("bad " + what + " '" + text + "'");
  }
}

inline std::uint64_t to_u64(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    std::uint64_t value = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageError("bad " + what + " '" + text + "'");
  }
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline const char* kUsage =
    "usage: hausdorff <command> [args]\n"
    "\n"
    "commands:\n"
    "  compute A B [--out FILE] [--threads N]   Hausdorff distance of two edge-list files\n"
    "  verify A B RESULT                        re-check a result document against its trees\n"
    "  oracle A B                               compare engine and brute-force oracle (small trees)\n"
    "  gen --n N --seed S --out FILE            write a random tree fixture\n"
    "  bench --sizes LIST --seed S [--reps R] [--threads N]\n"
    "                                           time random pairs per size\n";

inline int cmd_compute(Args args, std::ostream& out, std::ostream& err) {
  const auto out_path = args.take_option("--out");
  const int threads = to_int(args.take_option("--threads").value_or("0"), "--threads");
  const auto pos = args.positionals();
  if (pos.size() != 2) throw UsageError("compute expects two tree files");
  const Tree a = load_tree_file(pos[0]);
  const Tree b = load_tree_file(pos[1]);
  const HausdorffResult result = hausdorff_distance(a, b, threads);
  out << result.distance << "\n";
  if (out_path) {
    const CoverDistanceReport report = verify_mapping(a, b, result);
    if (!report.valid || report.cover_distance != result.distance) {
      err << "internal check failed: witness does not certify the distance\n";
      return kExitMismatch;
    }
    write_file(*out_path, ResultDocument::from_result(result, report).to_json());
  }
  return kExitOk;
}

inline int cmd_verify(Args args, std::ostream& out, std::ostream& err) {
  const auto pos = args.positionals();
  if (pos.size() != 3) throw UsageError("verify expects two tree files and a result file");
  const Tree a = load_tree_file(pos[0]);
  const Tree b = load_tree_file(pos[1]);
  const ResultDocument doc = ResultDocument::from_json(read_file(pos[2]));
  const CoverDistanceReport report = verify_mapping(a, b, doc.to_result());
  const bool consistent = report.valid &&
                          report.cover_distance == doc.distance &&
                          report.cover_distance == doc.cover_distance;
  out << (consistent ? "ok" : "invalid") << " distance=" << doc.distance
      << " cover_distance=" << report.cover_distance << "\n";
  if (!consistent) {
    err << (report.valid ? "cover distance does not match the claimed distance"
                         : "mapping is not a rooted top-down isomorphism")
        << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

inline int cmd_oracle(Args args, std::ostream& out, std::ostream& err) {
  const auto pos = args.positionals();
  if (pos.size() != 2) throw UsageError("oracle expects two tree files");
  const Tree a = load_tree_file(pos[0]);
  const Tree b = load_tree_file(pos[1]);
  int engine = 0;
  int oracle = 0;
  try {
    oracle = oracle_hausdorff(a, b);
    engine = hausdorff_distance(a, b).distance;
  } catch (const OracleLimitError& e) {
    err << e.what() << "\n";
    return kExitResourceCap;
  }
  out << "engine " << engine << "\n";
  out << "oracle " << oracle << "\n";
  if (engine != oracle) {
    err << "engine and oracle disagree\n";
    return kExitMismatch;
  }
  return kExitOk;
}

inline int cmd_gen(Args args, std::ostream& out, std::ostream& err) {
  const auto n_text = args.take_option("--n");
  const auto seed_text = args.take_option("--seed");
  const auto out_path = args.take_option("--out");
  if (!args.positionals().empty() || !n_text || !seed_text || !out_path) {
    throw UsageError("gen expects --n N --seed S --out FILE");
  }
  const int n = to_int(*n_text, "--n");
  if (n < 1) throw UsageError("--n must be at least 1");
  const std::uint64_t seed = to_u64(*seed_text, "--seed");
  const Tree tree = gen_random_tree(n, seed);
  write_file(*out_path, serialize_edge_list(tree));
  out << "wrote " << *out_path << " (n=" << n << ", seed=" << seed << ")\n";
  (void)err;
  return kExitOk;
}

inline int cmd_bench(Args args, std::ostream& out, std::ostream& err) {
  const auto sizes_text = args.take_option("--sizes");
  const std::uint64_t seed = to_u64(args.take_option("--seed").value_or("1"), "--seed");
  const int reps = to_int(args.take_option("--reps").value_or("1"), "--reps");
  const int threads = to_int(args.take_option("--threads").value_or("0"), "--threads");
  if (!args.positionals().empty() || !sizes_text) {
    throw UsageError("bench expects --sizes LIST [--seed S] [--reps R] [--threads N]");
  }
  if (reps < 1) throw UsageError("--reps must be at least 1");
  std::vector<int> sizes;
  std::stringstream list(*sizes_text);
  std::string item;
  while (std::getline(list, item, ',')) {
    sizes.push_back(to_int(item, "--sizes entry"));
    if (sizes.back() < 1) throw UsageError("sizes must be at least 1");
  }
  if (sizes.empty()) throw UsageError("--sizes list is empty");

  out << "n1 n2 seconds distance\n";
  std::uint64_t stream = seed;
  for (int n : sizes) {
    for (int rep = 0; rep < reps; ++rep) {
      const Tree a = gen_random_tree(n, stream++);
      const Tree b = gen_random_tree(n, stream++);
      const auto start = std::chrono::steady_clock::now();
      const HausdorffResult result = hausdorff_distance(a, b, threads);
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start;
      out << n << " " << n << " " << std::fixed << std::setprecision(6)
          << elapsed.count() << " " << result.distance << "\n";
    }
  }
  (void)err;
  return kExitOk;
}

}  // namespace cli_detail

/// Dispatches one CLI invocation. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  using namespace cli_detail;
  if (args.empty()) {
    err << kUsage;
    return kExitUsage;
  }
  const std::string command = args[0];
  Args rest(std::vector<std::string>(args.begin() + 1, args.end()));
  try {
    if (command == "compute") return cmd_compute(std::move(rest), out, err);
    if (command == "verify") return cmd_verify(std::move(rest), out, err);
    if (command == "oracle") return cmd_oracle(std::move(rest), out, err);
    if (command == "gen") return cmd_gen(std::move(rest), out, err);
    if (command == "bench") return cmd_bench(std::move(rest), out, err);
    if (command == "--help" || command == "help") {
      out << kUsage;
      return kExitOk;
    }
    err << "unknown command '" << command << "'\n" << kUsage;
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TreeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hausdorff

#endif  // HAUSDORFF_CLI_HPP
