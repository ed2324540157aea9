#include <iostream>

#include "linequiv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto parsed = linequiv::cli::parse_command(args);
  if (!parsed.command) {
    (parsed.exit_code == 0 ? std::cout : std::cerr) << parsed.message;
    return parsed.exit_code;
  }
  auto report = linequiv::cli::run(*parsed.command);
  (report.exit_code >= linequiv::cli::kExitUsage ? std::cerr : std::cout) << report.render(parsed.command->json);
  return report.exit_code;
}
