#include <iostream>

#include "opslice/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  opslice::CliResult res = opslice::run_command(args);
  std::cout << res.report.dump(2) << "\n";
  return res.exit_code;
}
