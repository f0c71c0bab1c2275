#include <iostream>

#include "config.hpp"
#include "run.hpp"

int main(int argc, char** argv) {
  qxcli::RunConfig cfg;
  std::string help;
  try {
    if (!qxcli::parse_config(argc, argv, cfg, help)) {
      std::cout << help;
      return qxcli::kExitOk;
    }
  } catch (const qxcli::ConfigError& e) {
    std::cerr << "qxcorr: " << e.what() << '\n';
    if (e.code() == qxcli::kExitUsage) std::cerr << "run 'qxcorr --help' for usage\n";
    return e.code();
  }
  return qxcli::run(cfg, std::cout, std::cerr);
}
