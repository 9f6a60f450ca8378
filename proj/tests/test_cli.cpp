#include "findex/cli.hpp"
#include "findex/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace findex;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("findex_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("example1 subcommand") {
  const Run r = run({"example1", "--op", "S", "--n", "2", "--m", "2"});
  CHECK(r.status == exit_ok);
  CHECK(r.out == "236\n");
  CHECK(run({"example1", "--op", "T", "--n", "3", "--m", "2"}).out == "2822\n");
  CHECK(run({"example1", "--op", "S", "--n", "1", "--m", "2"}).status == exit_failure);
}

TEST_CASE("indices, derive, product and formula subcommands") {
  const std::string p3 = write_temp("p3.el", "n 3\n0 1\n1 2\n");
  const std::string p2 = write_temp("p2.el", "n 2\n0 1\n");

  const Run idx = run({"indices", p3});
  CHECK(idx.status == exit_ok);
  const auto j = nlohmann::json::parse(idx.out);
  CHECK(j["n"] == 3);
  CHECK(j["m1"] == 6);
  CHECK(j["m2"] == 4);
  CHECK(j["f"] == 10);
  CHECK(j["hm"] == 18);
  CHECK(j["rezm"] == 12);
  CHECK(j["xi4"] == 18);

  CHECK(run({"derive", p3, "--kind", "S"}).out == "n 5\n0 3\n1 3\n1 4\n2 4\n");

  const std::string out_file = write_temp("out.el", "");
  CHECK(run({"product", p2, p2, "--kind", "lex", "-o", out_file}).status == exit_ok);
  CHECK(same_edge_set(read_edge_list_file(out_file), complete_graph(4)));

  const Run prod = run({"product", p3, p2, "--kind", "S"});
  CHECK(parse_edge_list(prod.out).edge_count() == 19);

  CHECK(run({"formula", "--theorem", "T4-printed", p3, p2}).out == "1222\n");
  CHECK(run({"formula", "--theorem", "T4-corrected", p3, p2}).out == "2822\n");

  const std::string bad = write_temp("bad.el", "n 2\n0 1\n0 1\n");
  const Run err = run({"indices", bad});
  CHECK(err.status == exit_failure);
  CHECK(err.err.find("DuplicateEdge") != std::string::npos);
  CHECK(err.err.find("line 3") != std::string::npos);
  CHECK(run({"indices", "/nonexistent/file.el"}).status == exit_failure);
}

TEST_CASE("verify subcommand") {
  const Run r = run({"verify", "--paths", "3", "2"});
  CHECK(r.status == exit_ok);
  CHECK(r.err.find("1222 != 2822") != std::string::npos);

  std::istringstream lines(r.out);
  std::string line, last;
  int records = 0;
  while (std::getline(lines, line)) {
    last = line;
    ++records;
  }
  CHECK(records == 6);
  const auto summary = nlohmann::json::parse(last)["summary"];
  CHECK(summary["mismatches"] == 0);
  CHECK(summary["t4_printed_mismatches"] == 1);
  CHECK(summary["t4_printed_first_mismatch"]["formula_value"] == 1222);
  CHECK(summary["t4_printed_first_mismatch"]["direct_value"] == 2822);

  CHECK(run({"verify", "--mode", "exhaustive", "--max-n1", "3", "--max-n2", "2"}).status == exit_ok);

  const Run a = run({"verify", "--mode", "random", "--samples", "5", "--seed", "9", "--threads", "3"});
  const Run b = run({"verify", "--mode", "random", "--samples", "5", "--seed", "9"});
  CHECK(a.status == exit_ok);
  CHECK(a.out == b.out);
}

TEST_CASE("usage errors") {
  const Run unknown = run({"verify", "--bogus"});
  CHECK(unknown.status == exit_usage);
  CHECK(unknown.err.find("unknown option") != std::string::npos);

  const Run invalid = run({"example1", "--op", "X", "--n", "2", "--m", "2"});
  CHECK(invalid.status == exit_usage);
  CHECK(invalid.err.find("invalid value") != std::string::npos);

  CHECK(run({"verify", "--mode", "random", "--paths", "3", "2"}).status == exit_usage);
  CHECK(run({}).status == exit_usage);
  CHECK(run({"--help"}).status == exit_ok);
}
