#include <iostream>

#include "msa/service/cli.hpp"

int main(int argc, char** argv) {
  return msa::service::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
