#include <exception>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "gbv/complex.hpp"
#include "gbv/runner.hpp"

namespace {

struct RawOptions {
  std::string preset;
  std::string file;
  std::string lambda;
  std::string bivector;
  std::string degrees;
  std::string format = "table";
  int max_degree = 4;
  bool invariant = false;
  uint64_t seed = 12345;
};

void add_common(CLI::App* cmd, RawOptions& raw) {
  cmd->add_option("--format", raw.format, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--seed", raw.seed, "seed for the sampled identity checks");
}

void add_bialgebra_inputs(CLI::App* cmd, RawOptions& raw) {
  cmd->add_option("--preset", raw.preset,
                  "built-in bialgebra: aff2_trivial, aff2_case2, aff2_case3, sl2_standard, "
                  "sl3_standard");
  cmd->add_option("--file", raw.file, "bialgebra description in JSON");
  cmd->add_option("--lambda", raw.lambda, "cobracket scale for aff2_case3, a nonzero rational");
}

gbv::RunConfig to_config(const std::string& command, const RawOptions& raw) {
  gbv::RunConfig cfg;
  cfg.command = command;
  if (!raw.preset.empty()) cfg.preset = raw.preset;
  if (!raw.file.empty()) cfg.file = raw.file;
  if (!raw.lambda.empty()) cfg.lambda = gbv::parse_rational(raw.lambda);
  if (!raw.bivector.empty()) cfg.bivector = raw.bivector;
  if (!raw.degrees.empty()) {
    auto range = gbv::parse_degree_range(raw.degrees);
    if (!range) throw std::invalid_argument("--degrees wants a range like 0..3");
    cfg.degrees = range;
  }
  cfg.max_degree = raw.max_degree;
  cfg.invariant = raw.invariant;
  cfg.format = raw.format;
  cfg.seed = raw.seed;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Gerstenhaber/BV calculator for Lie bialgebras and polynomial "
               "Poisson structures"};
  app.require_subcommand(1);

  RawOptions raw;

  CLI::App* check = app.add_subcommand("check", "run the identity suite on a bialgebra");
  add_bialgebra_inputs(check, raw);
  add_common(check, raw);

  CLI::App* coh = app.add_subcommand("cohomology", "cobracket cohomology with representatives");
  add_bialgebra_inputs(coh, raw);
  add_common(coh, raw);
  coh->add_option("--degrees", raw.degrees, "degree range, e.g. 0..3 (default the whole complex)");
  coh->add_flag("--invariant", raw.invariant,
                "restrict to the biderivation-invariant subcomplex, with certificate");

  CLI::App* poisson =
      app.add_subcommand("poisson", "modular class and truncated cohomology of a Poisson bivector");
  add_common(poisson, raw);
  poisson->add_option("--bivector", raw.bivector,
                      "polynomial bivector, e.g. \"(x^2 + y^2) * dx^dy\"");
  poisson->add_option("--max-degree", raw.max_degree,
                      "coefficient degree window for the probe and the truncated complex");
  poisson->add_option("--degrees", raw.degrees, "exterior degree range, e.g. 0..2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    const std::string command = app.get_subcommands().front()->get_name();
    gbv::RunResult result = gbv::run(to_config(command, raw));
    std::cout << result.output;
    return result.exit_code;
  } catch (const gbv::DiagonalizabilityError& e) {
    std::cerr << "hypothesis failure: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "check failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
