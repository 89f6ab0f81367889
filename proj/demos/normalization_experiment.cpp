/// Compares annealing success with and without min-max weight normalization
/// on a TSPLIB instance, mirroring the toolkit's experiment subcommand.

#include <fstream>
#include <iostream>

#include "quboforge/quboforge.hpp"

int main(int argc, char** argv) {
  const char* path = argc > 1 ? argv[1] : "tests/data/burma14.tsp";
  std::ifstream f(path);
  if (!f) {
    std::cerr << "cannot open " << path << "\n";
    return 2;
  }
  qf::Graph g = qf::parse_tsplib(f);
  std::cout << "instance " << g.name << ": n = " << g.n << "\n";

  for (bool normalize : {true, false}) {
    qf::QuboMatrix m = qf::build_tsp(g, {}, normalize);
    double total = 0;
    const int runs = 5;
    for (std::uint64_t seed = 1; seed <= runs; ++seed) {
      qf::AnnealSchedule s;
      s.seed = seed;
      qf::SolveReport rep = qf::simulated_anneal(m, g, s);
      total += rep.success_rate;
    }
    std::cout << (normalize ? "normalized  " : "unnormalized") << " mean success_rate "
              << total / runs << " over " << runs << " seeds\n";
  }
  return 0;
}
