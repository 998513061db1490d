// slocc: classification, CHSH analysis, I(3322) scans and figure geometry
// for two-qubit operators.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace slocc::cli;

  CLI::App app{"SLOCC geometry of two qubits"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";
  std::vector<std::string> overrides;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tol-override", overrides, "Tolerance override KEY=VAL (psd, membership, witness, hull, inplane)");

  std::string input;
  std::string second;
  std::string out_dir;

  auto* classify = app.add_subcommand("classify", "Classify an operator");
  classify->add_option("input", input, "Operator JSON file")->required();

  auto* chsh = app.add_subcommand("chsh", "Optimal CHSH witness and SLOCC violation for a state");
  chsh->add_option("input", input, "State JSON file")->required();

  auto* duality = app.add_subcommand("duality", "Duality pairing of two operators");
  duality->add_option("first", input, "First operator JSON file")->required();
  duality->add_option("second", second, "Second operator JSON file")->required();

  auto* scan = app.add_subcommand("i3322-scan", "Random scan of I(3322) witnesses");
  std::uint64_t n = 0;
  scan->add_option("--n", n, "Number of configurations")->required();
  scan->add_option("--seed", cfg.seed, "Seed");
  scan->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
  scan->add_option("--out", out_dir, "Output directory")->required();

  auto* geometry = app.add_subcommand("geometry", "Emit figure geometry");
  geometry->add_option("--out", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  cfg.format = format == "csv" ? Format::Csv : Format::Json;
  cfg.n = n;
  for (const std::string& o : overrides) {
    if (!cfg.tol.apply(o)) {
      std::cerr << "error: bad --tol-override " << o << '\n';
      return kUsage;
    }
  }

  if (*classify) return cmd_classify(input, cfg, std::cout, std::cerr);
  if (*chsh) return cmd_chsh(input, cfg, std::cout, std::cerr);
  if (*duality) return cmd_duality(input, second, cfg, std::cout, std::cerr);
  if (*scan) return cmd_i3322_scan(out_dir, cfg, std::cout, std::cerr);
  if (*geometry) return cmd_geometry(out_dir, cfg, std::cout, std::cerr);
  return kUsage;
}
