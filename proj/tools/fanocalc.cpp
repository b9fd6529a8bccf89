#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return fanocalc::cli::run(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "fanocalc: internal error: " << e.what() << "\n";
    return 1;
  }
}
