#include <iostream>
#include <string>
#include <vector>

#include "transknot/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = transknot::cli::dispatch(args);
  std::ostream& os = outcome.exit_code == 2 ? std::cerr : std::cout;
  for (const auto& line : outcome.stdout_lines) os << line << '\n';
  return outcome.exit_code;
}
