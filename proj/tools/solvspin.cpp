#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "solvspin/cli/run.hpp"

using namespace solvspin::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on left-invariant pseudo-Riemannian metrics and Killing spinors"};
  app.require_subcommand(1);

  JobSpec job;
  std::string format = "text";
  std::optional<int> eps0;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"validate", "check the Jacobi identity and the attached decomposition"},
      {"curvature", "Levi-Civita connection, Ricci tensor and scalar curvature"},
      {"nilsoliton", "solve for a nilsoliton derivation"},
      {"extend", "Einstein extension by the nilsoliton derivation"},
      {"killing-invariant", "left-invariant Killing spinors"},
      {"killing-halfspace", "polynomial Killing spinors on a hyperbolic half-space"},
      {"classify", "obstruction check on a pseudo-Iwasawa decomposition"}};

  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", job.inputs, "algebra files, directories, or 'halfspace n=.. r=.. signs=..'")
        ->required();
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--tol", job.tol, "tolerance for the float backend");
    if (name == "killing-halfspace") {
      sub->add_option("-K,--k-bound", job.k_bound, "bound on the power of t^(1/2)")->check(CLI::NonNegativeNumber);
      sub->add_option("-M,--m-bound", job.m_bound, "bound on the total x degree")->check(CLI::NonNegativeNumber);
    }
    if (name == "extend") {
      sub->add_option("--eps0", eps0, "sign of the new direction")->check(CLI::IsMember({-1, 1}));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInvalid;
  }

  job.command = *parse_command(app.get_subcommands().front()->get_name());
  job.format = format == "json" ? Format::Json : Format::Text;
  job.eps0 = eps0;
  try {
    job.backend = backend_from_env();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    auto result = run(job);
    std::cout << result.output;
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
