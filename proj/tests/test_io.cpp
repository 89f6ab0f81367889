#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "quboforge/build.hpp"
#include "quboforge/graph.hpp"
#include "quboforge/io.hpp"
#include "quboforge/numfmt.hpp"
#include "quboforge/tsplib.hpp"

namespace {

qf::Graph load_g1() {
  std::ifstream f(QF_TEST_DATA_DIR "/g1.tsp");
  REQUIRE(f.good());
  return qf::parse_tsplib(f);
}

qf::BinaryAssignment random_bits(int dim, std::mt19937_64& rng) {
  qf::BinaryAssignment x(dim);
  for (auto& b : x) b = static_cast<std::uint8_t>(rng() & 1);
  return x;
}

qf::QuboMatrix write_read(const qf::QuboMatrix& m) {
  std::ostringstream os;
  qf::write_qubo(m, os);
  std::istringstream is(os.str());
  return qf::read_qubo(is);
}

}  // namespace

TEST_CASE("number formatting is shortest round-trip") {
  REQUIRE(qf::format_number(42.0) == "42");
  REQUIRE(qf::format_number(-8.0) == "-8");
  REQUIRE(qf::format_number(0.5) == "0.5");
  double third = 1.0 / 3.0;
  REQUIRE(std::stod(qf::format_number(third)) == third);
}

TEST_CASE("qubo export of the 2-vertex one-hot term") {
  std::ostringstream os;
  qf::write_qubo(qf::build_vertex_term(2), os, "vertex term");
  REQUIRE(os.str() ==
          "c vertex term\n"
          "c offset 2\n"
          "p qubo 0 4 4 2\n"
          "0 0 -1\n"
          "1 1 -1\n"
          "2 2 -1\n"
          "3 3 -1\n"
          "0 1 2\n"
          "2 3 2\n");
}

TEST_CASE("qubo files round-trip cell-exactly") {
  qf::Graph g1 = load_g1();
  std::mt19937_64 rng(8);
  for (bool normalize : {false, true}) {
    qf::QuboMatrix m = qf::build_tsp(g1, {}, normalize);
    qf::QuboMatrix upper = m.canonical_upper();
    qf::QuboMatrix back = write_read(m);
    REQUIRE(back.dim() == 16);
    REQUIRE(back.n() == 4);  // inferred from the square dimension
    REQUIRE(back.offset() == m.offset());
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j) REQUIRE(back.at(i, j) == upper.at(i, j));
    for (int rep = 0; rep < 100; ++rep) {
      qf::BinaryAssignment x = random_bits(16, rng);
      if (normalize)  // summation order differs across layouts
        REQUIRE(back.energy(x) == Catch::Approx(m.energy(x)).epsilon(1e-12));
      else
        REQUIRE(back.energy(x) == m.energy(x));
    }
  }
}

TEST_CASE("qubo reader folds lower-triangle entries and defaults the offset") {
  std::istringstream is(
      "p qubo 0 3 1 1\n"
      "1 1 -2\n"
      "2 0 5\n");
  qf::QuboMatrix m = qf::read_qubo(is);
  REQUIRE(m.offset() == 0.0);
  REQUIRE(m.n() == 0);  // 3 is not a perfect square
  REQUIRE(m.at(1, 1) == -2.0);
  REQUIRE(m.at(0, 2) == 5.0);
  REQUIRE(m.at(2, 0) == 0.0);
}

TEST_CASE("qubo reader rejects malformed input") {
  auto read = [](const char* text) {
    std::istringstream is(text);
    return qf::read_qubo(is);
  };
  REQUIRE_THROWS_AS(read("0 0 1\n"), qf::parse_error);  // entry before program line
  REQUIRE_THROWS_AS(read("p qubo 0\n"), qf::parse_error);
  REQUIRE_THROWS_AS(read("p qubo 0 4 1 0\n0 0\n"), qf::parse_error);
  REQUIRE_THROWS_AS(read("p qubo 0 4 1 0\n4 4 1\n"), qf::parse_error);  // index range
  REQUIRE_THROWS_AS(read("p qubo 0 4 2 0\n0 0 1\n"), qf::parse_error);  // count mismatch
  REQUIRE_THROWS_AS(read("c only a comment\n"), qf::parse_error);
}

TEST_CASE("qubo json round-trips with normalization stats") {
  qf::Graph g1 = load_g1();
  qf::NormalizationStats stats;
  qf::QuboMatrix m = qf::build_tsp(g1, {}, true, &stats);
  qf::json j = qf::qubo_to_json(m, &stats);
  REQUIRE(j.at("n") == 4);
  REQUIRE(j.at("dim") == 16);
  REQUIRE(j.at("offset") == 8.0);
  REQUIRE(j.at("m_min") == 0.0);
  REQUIRE(j.at("m_max") == 42.0);
  REQUIRE(j.at("entries").size() == static_cast<std::size_t>(m.nonzero_cells()));

  qf::QuboMatrix back = qf::qubo_from_json(j);
  REQUIRE(back.dim() == m.dim());
  REQUIRE(back.offset() == m.offset());
  for (int i = 0; i < 16; ++i)
    for (int j2 = 0; j2 < 16; ++j2) REQUIRE(back.at(i, j2) == m.at(i, j2));

  // stats are optional on both sides
  qf::json bare = qf::qubo_to_json(m);
  REQUIRE_FALSE(bare.contains("m_min"));
  REQUIRE(qf::qubo_from_json(bare).at(0, 1) == m.at(0, 1));
}

TEST_CASE("solver reports serialize with 1-based violations") {
  qf::SolveReport r;
  r.instance = "x";
  r.problem = "hcp";
  r.variables = 4;
  r.best_bits = {1, 0, 0, 1};
  r.best_energy = -2.0;
  r.offset = 4.0;
  r.cost = 3.0;
  r.cost_invalid_basis = true;
  r.valid = false;
  r.success_rate = 0.25;
  r.schedule = {10.0, 0.1, 100, 4, 7};
  r.violations.vertex_violations = {1};
  r.violations.position_violations = {0};
  r.violations.edge_violations = {{0, 1}};

  qf::json j = qf::report_to_json(r);
  for (const char* key : {"instance", "problem", "variables", "best_energy", "offset", "cost",
                          "cost_basis", "valid", "success_rate", "wall_time_ms", "schedule",
                          "seed", "rng", "bits", "violations"})
    REQUIRE(j.contains(key));
  REQUIRE(j.at("cost_basis") == "invalid-basis");
  REQUIRE(j.at("bits") == "1001");
  REQUIRE(j.at("seed") == 7);
  REQUIRE(j.at("schedule").at("sweeps") == 100);
  REQUIRE(j.at("violations").at("vertex") == qf::json::array({2}));
  REQUIRE(j.at("violations").at("position") == qf::json::array({1}));
  REQUIRE(j.at("violations").at("edge") == qf::json::array({{1, 2}}));

  r.cost_invalid_basis = false;
  REQUIRE(qf::report_to_json(r).at("cost_basis") == "valid");
}

TEST_CASE("experiment csv schema") {
  REQUIRE(qf::csv_header() ==
          "instance,n,m,k,problem,normalize,seed,best_energy,cost,valid,success_rate,"
          "wall_time_ms");

  qf::SolveReport r;
  r.instance = "g1";
  r.problem = "tsp";
  r.best_energy = -5.5;
  r.cost = 97.0;
  r.valid = true;
  r.success_rate = 0.5;
  r.wall_time_ms = 12.25;
  r.schedule.seed = 3;
  std::string row = qf::csv_row(r, qf::EdgeCensus{4, 12, 0}, true);
  REQUIRE(row == "g1,4,12,0,tsp,true,3,-5.5,97,true,0.5,12.25");
  std::string header = qf::csv_header();
  REQUIRE(std::count(row.begin(), row.end(), ',') ==
          std::count(header.begin(), header.end(), ','));
}
