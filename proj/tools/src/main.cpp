#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "derham/cli.hpp"
#include "derham/errors.hpp"

using namespace derham;

int main(int argc, char** argv) {
  CLI::App app{"Smoothness test and de Rham cohomology of projective varieties"};
  app.require_subcommand(1, 1);

  std::string input_path, catalog_name;
  int n = -1;
  std::vector<std::string> generators;
  cli::JobSpec job;
  int pole_order = 0;

  auto add_common = [&](CLI::App* sub) {
    auto* in = sub->add_option("--input", input_path, "JSON file {\"n\": int, \"generators\": [...]}");
    auto* cat = sub->add_option("--catalog", catalog_name, "Catalog variety name");
    auto* nn = sub->add_option("-n", n, "Ambient dimension for --generator");
    auto* gen = sub->add_option("-g,--generator", generators, "Homogeneous generator in X0..Xn (repeatable)");
    in->excludes(cat)->excludes(nn);
    cat->excludes(nn);
    gen->needs(nn);
    sub->add_option("--seed", job.seed, "Seed for probes and hyperplane search")->capture_default_str();
    sub->add_flag("--json", job.json, "Machine-readable output");
  };

  auto* smooth = app.add_subcommand("smooth", "Run the smoothness test");
  add_common(smooth);
  auto* betti = app.add_subcommand("betti", "Compute Betti numbers of the de Rham cohomology");
  add_common(betti);
  betti->add_option("--pole-order", pole_order, "Override the pole order s (checks stabilization at s+1)")
      ->check(CLI::PositiveNumber);
  betti->add_option("--budget", job.budget, "Hyperplane candidate budget")->capture_default_str();
  auto* hyper = app.add_subcommand("hyperplanes", "Find or verify a transversal family of hyperplanes");
  add_common(hyper);
  hyper->add_option("--budget", job.budget, "Hyperplane candidate budget")->capture_default_str();
  auto* comp = app.add_subcommand("complement", "De Rham cohomology of X minus the hyperplanes of one tuple");
  add_common(comp);
  comp->add_option("--chart-tuple", job.tuple, "Increasing hyperplane indices, e.g. 0,1")
      ->delimiter(',')
      ->required();
  comp->add_option("--pole-order", pole_order, "Pole order s")->check(CLI::PositiveNumber);
  comp->add_option("--budget", job.budget, "Hyperplane candidate budget")->capture_default_str();

  app.add_subcommand("catalog", "List the built-in varieties");

  app.allow_extras(false);
  app.set_help_all_flag("--help-all");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kInvalid;
  }

  job.command = app.get_subcommands().front()->get_name();
  if (job.command == "catalog") {
    for (const auto& e : cli::catalog()) std::cout << e.name << "  " << e.note << "\n";
    return 0;
  }
  if (pole_order > 0) job.pole_order = pole_order;
  try {
    if (!input_path.empty()) {
      job.input = cli::load_input_file(input_path);
    } else if (!catalog_name.empty()) {
      job.input = cli::catalog_input(cli::catalog_entry(catalog_name));
    } else if (n >= 0) {
      job.input.variety.n = n;
      for (const auto& g : generators) job.input.variety.generators.push_back(cli::parse_polynomial(g, n));
    } else {
      std::cerr << "one of --input, --catalog or -n is required\n";
      return cli::kInvalid;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return cli::kInvalid;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return cli::kInvalid;
  }
  return cli::run(job, std::cout, std::cerr);
}
