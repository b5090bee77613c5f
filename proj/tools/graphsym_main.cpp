#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <string>

#include "graphsym/autgroup.hpp"
#include "graphsym/dimacs.hpp"
#include "graphsym/families.hpp"
#include "graphsym/graph.hpp"
#include "graphsym/isotest.hpp"
#include "graphsym/oracle.hpp"
#include "graphsym/report.hpp"
#include "graphsym/sequence.hpp"

namespace {

graphsym::Graph load_input(const std::string& text) {
  return graphsym::looks_like_family_spec(text) ? graphsym::parse_family_spec(text)
                                                : graphsym::read_graph_file(text);
}

int run_aut(const std::string& input, bool json, bool oracle, const graphsym::SearchOptions& options) {
  const graphsym::Graph g = load_input(input);
  graphsym::PartitionSequence seq = graphsym::generate_sequence(g);
  const graphsym::AutGroupResult result = graphsym::search_automorphisms(g, seq, options);

  if (oracle) {
    const graphsym::BruteAutResult ref = graphsym::brute_force_aut(g);
    if (result.order != ref.order || result.orbit_partition != ref.orbits) {
      std::cerr << "oracle mismatch: got order " << result.order.to_string() << ", reference "
                << ref.order << '\n';
      return 2;
    }
  }

  std::cout << (json ? graphsym::aut_report_json(input, g, seq, result)
                     : graphsym::aut_report_text(input, g, seq, result));
  return 0;
}

int run_iso(const std::string& input_a, const std::string& input_b, bool json, bool mapping,
            bool oracle, const graphsym::SearchOptions& options) {
  const graphsym::Graph a = load_input(input_a);
  const graphsym::Graph b = load_input(input_b);
  const graphsym::IsoResult result = graphsym::are_isomorphic(a, b, options);

  if (oracle) {
    const auto ref = graphsym::brute_force_iso(a, b);
    if (ref.has_value() != result.isomorphic) {
      std::cerr << "oracle mismatch: got " << (result.isomorphic ? "isomorphic" : "non-isomorphic")
                << ", reference disagrees\n";
      return 2;
    }
  }

  std::cout << (json ? graphsym::iso_report_json(input_a, input_b, a, b, result, true)
                     : graphsym::iso_report_text(input_a, input_b, a, b, result, mapping));
  return result.isomorphic ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph automorphism groups and isomorphism testing"};
  app.require_subcommand(1);

  std::string aut_input;
  bool aut_json = false;
  bool aut_oracle = false;
  bool aut_no_memo = false;
  CLI::App* aut = app.add_subcommand("aut", "automorphism group generators, order and orbits");
  aut->add_option("input", aut_input, "DIMACS file or family:NAME[:ARG...]")->required();
  aut->add_flag("--json", aut_json, "emit JSON instead of text");
  aut->add_flag("--oracle", aut_oracle, "cross-check against the exhaustive reference (small graphs)");
  aut->add_flag("--no-memo", aut_no_memo, "disable the failure memo");

  std::string iso_a;
  std::string iso_b;
  bool iso_json = false;
  bool iso_mapping = false;
  bool iso_oracle = false;
  bool iso_no_memo = false;
  CLI::App* iso = app.add_subcommand("iso", "test two graphs for isomorphism");
  iso->add_option("a", iso_a, "first graph: DIMACS file or family spec")->required();
  iso->add_option("b", iso_b, "second graph: DIMACS file or family spec")->required();
  iso->add_flag("--json", iso_json, "emit JSON instead of text");
  iso->add_flag("--mapping", iso_mapping, "print the vertex mapping in text mode");
  iso->add_flag("--oracle", iso_oracle, "cross-check against the exhaustive reference (small graphs)");
  iso->add_flag("--no-memo", iso_no_memo, "disable the failure memo");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    graphsym::SearchOptions options;
    if (aut->parsed()) {
      options.use_failure_memo = !aut_no_memo;
      return run_aut(aut_input, aut_json, aut_oracle, options);
    }
    options.use_failure_memo = !iso_no_memo;
    return run_iso(iso_a, iso_b, iso_json, iso_mapping, iso_oracle, options);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
