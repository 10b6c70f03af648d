#include <iostream>
#include <vector>

#include "bgg/errors.hpp"
#include "bgg/jobspec.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> tokens(argv + 1, argv + argc);
  bgg::JobSpec job;
  try {
    job = bgg::parse_jobspec(tokens);
  } catch (const bgg::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return bgg::execute_job(job, std::cout, std::cerr);
}
