#include "findex/cli.hpp"

#include "findex/closed_forms.hpp"
#include "findex/derived.hpp"
#include "findex/error.hpp"
#include "findex/io.hpp"
#include "findex/products.hpp"
#include "findex/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

namespace findex {

namespace {

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw std::runtime_error("cannot write " + out_path);
  file << text;
}

std::string usage_message(const CLI::ParseError& e) {
  const std::string what = e.what();
  if (dynamic_cast<const CLI::ExtrasError*>(&e) != nullptr) return "unknown option: " + what;
  if (dynamic_cast<const CLI::RequiredError*>(&e) != nullptr) return "missing argument: " + what;
  return "invalid value: " + what;
}

const std::vector<std::string> kind_names{"S", "R", "Q", "T"};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"F-index of lexicographic F-products: constructions, indices and checks",
               "findex"};
  app.require_subcommand(1);

  std::string file1;
  std::string file2;
  std::string kind_name;
  std::string out_path;

  auto* indices = app.add_subcommand("indices", "Degree-based indices of a graph (JSON)");
  indices->add_option("file", file1, "Edge-list file")->required();

  auto* derive_cmd = app.add_subcommand("derive", "Build S(G), R(G), Q(G) or T(G)");
  derive_cmd->add_option("file", file1, "Edge-list file")->required();
  derive_cmd->add_option("--kind", kind_name, "Derived graph")
      ->required()
      ->check(CLI::IsMember(kind_names));
  derive_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* product_cmd = app.add_subcommand("product", "Build G1[G2]_F or the plain G1[G2]");
  product_cmd->add_option("file1", file1, "Edge-list file for G1")->required();
  product_cmd->add_option("file2", file2, "Edge-list file for G2")->required();
  product_cmd->add_option("--kind", kind_name, "S, R, Q, T or lex")
      ->required()
      ->check(CLI::IsMember({"S", "R", "Q", "T", "lex"}));
  product_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

  std::string theorem_name;
  auto* formula_cmd = app.add_subcommand("formula", "Evaluate a closed form for G1, G2");
  formula_cmd->add_option("--theorem", theorem_name, "T1, T2, T3, T4-printed or T4-corrected")
      ->required()
      ->check(CLI::IsMember({"T1", "T2", "T3", "T4-printed", "T4-corrected"}));
  formula_cmd->add_option("file1", file1, "Edge-list file for G1")->required();
  formula_cmd->add_option("file2", file2, "Edge-list file for G2")->required();

  CorpusSpec spec;
  std::string mode_name;
  std::vector<std::size_t> paths;
  auto* verify_cmd = app.add_subcommand("verify", "Check the closed forms against brute force");
  auto* mode_opt = verify_cmd->add_option("--mode", mode_name, "exhaustive, families or random")
                       ->check(CLI::IsMember({"exhaustive", "families", "random"}));
  verify_cmd->add_option("--max-n1", spec.max_n1, "Largest G1 order")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-n2", spec.max_n2, "Largest G2 order")->check(CLI::PositiveNumber);
  auto* paths_opt = verify_cmd->add_option("--paths", paths, "Single pair P_N, P_M")
                        ->expected(2)
                        ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--samples", spec.sample_count, "Random pairs");
  verify_cmd->add_option("--seed", spec.seed, "Random seed");
  verify_cmd->add_option("--edge-prob", spec.edge_prob, "Random edge probability")
      ->check(CLI::Range(0.0, 1.0));
  verify_cmd->add_option("--ceiling", spec.ceiling, "Largest product vertex count")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--threads", spec.threads, "Worker threads")->check(CLI::PositiveNumber);

  std::int64_t poly_n = 0;
  std::int64_t poly_m = 0;
  auto* example_cmd = app.add_subcommand("example1", "Evaluate the published F(Pn[Pm]_F) polynomial");
  example_cmd->add_option("--op", kind_name, "S, R, Q or T")->required()->check(CLI::IsMember(kind_names));
  example_cmd->add_option("--n", poly_n, "Order of G1 = Pn")->required();
  example_cmd->add_option("--m", poly_m, "Order of G2 = Pm")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "findex: " << usage_message(e) << "\n";
    return exit_usage;
  }

  if (*paths_opt) {
    if (*mode_opt && mode_name != "families") {
      err << "findex: invalid value: --paths requires --mode families\n";
      return exit_usage;
    }
    mode_name = "families";
    spec.paths = std::pair{paths[0], paths[1]};
  }

  try {
    if (*indices) {
      out << to_json(report(read_edge_list_file(file1))).dump(2) << "\n";
    } else if (*derive_cmd) {
      const Graph g = read_edge_list_file(file1);
      emit(serialize_edge_list(derive(g, *parse_derived_kind(kind_name))), out_path, out);
    } else if (*product_cmd) {
      const Graph g1 = read_edge_list_file(file1);
      const Graph g2 = read_edge_list_file(file2);
      const Graph p = kind_name == "lex" ? lexicographic(g1, g2)
                                         : f_product(g1, g2, *parse_derived_kind(kind_name));
      emit(serialize_edge_list(p), out_path, out);
    } else if (*formula_cmd) {
      const InvariantReport r1 = report(read_edge_list_file(file1));
      const InvariantReport r2 = report(read_edge_list_file(file2));
      out << closed_form(*parse_theorem(theorem_name), r1, r2) << "\n";
    } else if (*example_cmd) {
      out << example1_polynomial(*parse_derived_kind(kind_name), poly_n, poly_m) << "\n";
    } else if (*verify_cmd) {
      if (mode_name == "families") {
        spec.mode = CorpusMode::families;
      } else if (mode_name == "random") {
        spec.mode = CorpusMode::random;
      } else {
        spec.mode = CorpusMode::exhaustive;
      }
      const SuiteResult result = run_suite(spec);
      for (const auto& rec : result.records) out << to_json(rec).dump() << "\n";
      nlohmann::ordered_json summary;
      summary["summary"] = summary_to_json(result);
      out << summary.dump() << "\n";

      const SuiteSummary& s = result.summary;
      err << "verify: " << s.checked << " checks, " << s.mismatches << " mismatches; T4-printed: "
          << s.printed_mismatches << " of " << s.printed_checked << " mismatched";
      if (s.first_printed_mismatch) {
        const auto& rec = result.records[*s.first_printed_mismatch];
        err << " (first: " << rec.g1_descriptor << " x " << rec.g2_descriptor << ": "
            << rec.formula_value << " != " << rec.direct_value << ")";
      }
      err << "\n";
      return s.mismatches == 0 ? exit_ok : exit_failure;
    }
  } catch (const Error& e) {
    err << "findex: error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_failure;
  } catch (const std::exception& e) {
    err << "findex: error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_ok;
}

}  // namespace findex
