// Command-line driver: enumerate, count, verify, degree, catalog.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "commands.hpp"

using namespace pgenum::cli;

int main(int argc, char** argv) {
  CLI::App app{"Enumerate and inspect finite partial groups"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_run_flags = [&](CLI::App* sub, bool full) {
    sub->add_option("--order", cfg.order, "Order (number of elements)")->required();
    sub->add_flag("--indecomposable", cfg.indecomposable, "Keep indecomposable partial groups only");
    sub->add_option("--threads", cfg.threads, "Worker threads");
    sub->add_flag("-q,--quiet", cfg.quiet, "No progress on stderr");
    if (full) {
      sub->add_option("--max-dim", cfg.max_dim, "Largest dimension to produce");
      sub->add_flag("--bpg-only", cfg.bpg_only, "Emit BPGs only");
      sub->add_option("--out", cfg.out, "Output file, or directory for split files");
    }
  };

  auto* en = app.add_subcommand("enumerate", "Write every partial group of an order as JSON Lines");
  add_run_flags(en, true);
  auto* co = app.add_subcommand("count", "Count partial groups by free orbits and dimension");
  add_run_flags(co, false);

  std::string in, out, expect;
  auto* ve = app.add_subcommand("verify", "Validate a JSON Lines corpus");
  ve->add_option("--in", in, "File or directory")->required();
  ve->add_option("--expect", expect, "Compare counts with a published table")
      ->check(CLI::IsMember({"partial-groups", "indecomposable", "indecomposable-bpgs", "bpgs"}));
  auto* de = app.add_subcommand("degree", "Annotate partial group records with invariants");
  de->add_option("--in", in, "Input file")->required();
  de->add_option("--out", out, "Output file (default stdout)");
  auto* ca = app.add_subcommand("catalog", "Print the indecomposable partial groups of order <= 5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*en) return run_enumerate(cfg);
    if (*co) return run_count(cfg);
    if (*ve) return run_verify(in, expect);
    if (*de) return run_degree(in, out);
    if (*ca) return run_catalog();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}
