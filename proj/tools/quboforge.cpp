/// Command-line front end: build, solve, census, oracle, decode, experiment.
///
/// Exit codes: 0 ran to completion (including invalid solutions), 1 usage
/// error, 2 parse/IO error, 3 refused (enumeration limits).

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "quboforge/quboforge.hpp"

namespace {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> inputs;
  std::string problem;  // "", "hcp", "tsp"
  double c1 = 1.0;
  double c2 = 1.0;
  bool normalize_on = false;
  bool normalize_off = false;
  std::string method;
  std::string format;
  std::string output;
  std::string bits;
  std::string normalize_mode = "both";  // experiment only
  std::string seeds = "1..10";          // experiment only
  qf::AnnealSchedule schedule;
  bool t_start_set = false;
};

std::string infer_problem(const std::string& path, const std::string& override_) {
  if (!override_.empty()) return override_;
  auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  return ext == ".hcp" ? "hcp" : "tsp";
}

qf::Graph load_instance(const std::string& path, const std::string& problem) {
  std::ifstream f(path);
  if (!f) throw io_error("cannot open input file: " + path);
  std::vector<std::string> warnings;
  qf::Graph g = problem == "hcp" ? qf::parse_hcp(f, &warnings) : qf::parse_tsplib(f, &warnings);
  for (const auto& w : warnings) std::cerr << path << ": warning: " << w << "\n";
  if (g.name.empty()) g.name = path;
  return g;
}

/// Weight gains must stay below the integrity-penalty scale or the solver
/// will trade constraint violations for cheaper tours.
void warn_penalty_balance(const qf::QuboMatrix& weight_part, double c1, double c2) {
  double max_entry = c2 * weight_part.max_abs_coeff();
  if (max_entry >= c1)
    std::cerr << "warning: weight term max entry " << qf::format_number(max_entry)
              << " >= c1 " << qf::format_number(c1)
              << "; weight gains can overpower integrity penalties"
              << " (consider --normalize or a larger --c1)\n";
}

struct BuiltProblem {
  qf::Graph graph;
  qf::QuboMatrix matrix;
  bool normalized = false;
};

BuiltProblem build_problem(const Options& opt, const std::string& input, const std::string& problem,
                           bool normalize) {
  qf::Graph g = load_instance(input, problem);
  qf::PenaltyConfig cfg{opt.c1, opt.c2};
  if (problem == "hcp") {
    qf::QuboMatrix m = qf::build_hcp(g, cfg);
    return {std::move(g), std::move(m), false};
  }
  qf::QuboMatrix m = qf::build_tsp(g, cfg, normalize);
  if (normalize) {
    qf::QuboMatrix nw = qf::min_max_normalize(qf::build_weight_term(g)).first;
    warn_penalty_balance(nw, opt.c1, opt.c2);
  } else {
    warn_penalty_balance(qf::build_weight_term(g), opt.c1, opt.c2);
  }
  return {std::move(g), std::move(m), normalize};
}

void write_output(const std::string& output, const std::string& content) {
  if (output.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(output);
  if (!f) throw io_error("cannot open output file: " + output);
  f << content;
}

std::string census_table(const qf::Graph& g, const std::string& problem, double c1, double c2,
                         bool normalize) {
  using qf::Term;
  qf::EdgeCensus ec = qf::edge_census(g);
  bool complete = ec.k == 0;
  std::ostringstream os;
  os << "instance " << g.name << ": n=" << ec.n << " m=" << ec.m << " k=" << ec.k << "\n";
  os << "term            linear quadratic total | expected linear quadratic total\n";
  auto row = [&](const char* label, const qf::QuboMatrix& m, Term t) {
    auto c = qf::census(m);
    auto e = qf::census_expected(ec.n, ec.m, ec.k, t, complete);
    os << label << std::setw(7) << c.linear << std::setw(10) << c.quadratic << std::setw(6)
       << c.total << " |" << std::setw(15) << e.linear << std::setw(10) << e.quadratic
       << std::setw(6) << e.total << "\n";
  };
  qf::PenaltyConfig cfg{c1, c2};
  row("vertex_one_hot  ", qf::build_vertex_term(ec.n), Term::vertex_one_hot);
  row("position_one_hot", qf::build_position_term(ec.n), Term::position_one_hot);
  row("missing_edge   *", qf::build_missing_edge_term(g), Term::missing_edge);
  if (problem == "tsp") row("tour_weight     ", qf::build_weight_term(g), Term::tour_weight);
  row("hcp             ", qf::build_hcp(g, cfg), Term::hcp);
  if (problem == "tsp") row("tsp             ", qf::build_tsp(g, cfg, normalize), Term::tsp);
  os << "# * expected missing_edge counts only missing-arc cells; the built term\n"
     << "#   also holds the per-vertex successor cells shared with vertex_one_hot.\n";
  return os.str();
}

int cmd_build(const Options& opt) {
  const std::string& input = opt.inputs.front();
  std::string problem = infer_problem(input, opt.problem);
  bool normalize = problem == "tsp" && !opt.normalize_off;
  std::string format = opt.format.empty() ? "json" : opt.format;
  if (format != "json" && format != "qubo")
    throw std::invalid_argument("build supports --format json or qubo");

  BuiltProblem bp = build_problem(opt, input, problem, normalize);
  std::string table = census_table(bp.graph, problem, opt.c1, opt.c2, normalize);

  std::string content;
  if (format == "qubo") {
    std::ostringstream os;
    qf::write_qubo(bp.matrix, os, {bp.graph.name + " " + problem + (normalize ? " normalized" : "")});
    content = os.str();
  } else {
    content = qf::qubo_to_json(bp.matrix).dump(2) + "\n";
  }
  write_output(opt.output, content);
  if (opt.output.empty())
    std::cerr << table;
  else
    std::cout << table;
  return 0;
}

int cmd_census(const Options& opt) {
  const std::string& input = opt.inputs.front();
  std::string problem = infer_problem(input, opt.problem);
  bool normalize = problem == "tsp" && !opt.normalize_off;
  qf::Graph g = load_instance(input, problem);
  write_output(opt.output, census_table(g, problem, opt.c1, opt.c2, normalize));
  return 0;
}

int cmd_oracle_impl(const Options& opt);

qf::SolveReport solve_one(const Options& opt, const std::string& input, const std::string& problem,
                          bool normalize, std::uint64_t seed) {
  BuiltProblem bp = build_problem(opt, input, problem, normalize);
  qf::AnnealSchedule s = opt.schedule;
  s.seed = seed;
  qf::SolveReport rep = qf::simulated_anneal(bp.matrix, bp.graph, s);
  rep.problem = problem;
  return rep;
}

int cmd_solve(const Options& opt) {
  const std::string& input = opt.inputs.front();
  std::string problem = infer_problem(input, opt.problem);
  bool normalize = problem == "tsp" && !opt.normalize_off;
  std::string method = opt.method.empty() ? "sa" : opt.method;

  qf::SolveReport rep;
  if (method == "sa") {
    rep = solve_one(opt, input, problem, normalize, opt.schedule.seed);
  } else if (method == "exact") {
    BuiltProblem bp = build_problem(opt, input, problem, normalize);
    auto clock_start = std::chrono::steady_clock::now();
    qf::ExactResult ex = qf::exact_ground_state(bp.matrix);
    rep.instance = bp.graph.name;
    rep.problem = problem;
    rep.variables = bp.matrix.dim();
    rep.best_bits = ex.witness;
    rep.best_energy = ex.energy;
    rep.offset = bp.matrix.offset();
    rep.schedule = qf::AnnealSchedule{0.0, 0.0, 0, 0, opt.schedule.seed};
    rep.rng = "exhaustive";
    qf::Decoded d = qf::decode(ex.witness, bp.graph);
    rep.valid = d.valid;
    rep.cost = d.cost;
    rep.cost_invalid_basis = d.cost_invalid_basis;
    rep.violations = d.report;
    rep.success_rate = rep.valid ? 1.0 : 0.0;
    rep.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - clock_start)
            .count();
  } else if (method == "oracle") {
    Options o = opt;
    o.method.clear();
    return cmd_oracle_impl(o);
  } else {
    throw std::invalid_argument("solve supports --method sa, exact, or oracle");
  }
  write_output(opt.output, qf::report_to_json(rep).dump(2) + "\n");
  return 0;
}

int cmd_oracle_impl(const Options& opt) {
  const std::string& input = opt.inputs.front();
  std::string problem = infer_problem(input, opt.problem);
  qf::Graph g = load_instance(input, problem);
  auto clock_start = std::chrono::steady_clock::now();
  nlohmann::json out;
  out["instance"] = g.name;
  out["problem"] = problem;
  if (problem == "hcp") {
    qf::HcpOracleResult r = qf::oracle_hcp(g);
    out["method"] = "backtracking";
    out["exists"] = r.exists;
    if (r.exists) {
      nlohmann::json tour = nlohmann::json::array();
      for (int v : r.witness) tour.push_back(v + 1);
      out["tour"] = tour;
    }
  } else {
    std::string method = opt.method.empty() ? "held_karp" : opt.method;
    qf::TspMethod m;
    if (method == "held_karp")
      m = qf::TspMethod::held_karp;
    else if (method == "permutation")
      m = qf::TspMethod::permutation;
    else
      throw std::invalid_argument("oracle supports --method held_karp or permutation");
    qf::TspOracleResult r = qf::oracle_tsp(g, m);
    out["method"] = method;
    out["feasible"] = r.feasible;
    if (r.feasible) {
      out["cost"] = r.tour.cost;
      nlohmann::json tour = nlohmann::json::array();
      for (int v : r.tour.order) tour.push_back(v + 1);
      out["tour"] = tour;
    }
  }
  out["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - clock_start)
          .count();
  write_output(opt.output, out.dump(2) + "\n");
  return 0;
}

int cmd_decode(const Options& opt) {
  const std::string& input = opt.inputs.front();
  std::string problem = infer_problem(input, opt.problem);
  qf::Graph g = load_instance(input, problem);

  std::string bits_text = opt.bits;
  if (bits_text == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    bits_text = ss.str();
  } else if (bits_text.find_first_not_of("01 \t\r\n") != std::string::npos) {
    std::ifstream f(bits_text);
    if (!f) throw io_error("cannot open bits file: " + bits_text);
    std::ostringstream ss;
    ss << f.rdbuf();
    bits_text = ss.str();
  }
  qf::BinaryAssignment x = qf::parse_bit_string(bits_text);
  if (static_cast<int>(x.size()) != g.n * g.n)
    throw std::invalid_argument("bit string length " + std::to_string(x.size()) +
                                " does not match n^2 = " + std::to_string(g.n * g.n));

  qf::Decoded d = qf::decode(x, g);
  nlohmann::json out;
  out["instance"] = g.name;
  out["problem"] = problem;
  out["valid"] = d.valid;
  out["cost"] = d.cost;
  out["cost_basis"] = d.cost_invalid_basis ? "invalid-basis" : "valid";
  if (d.valid) {
    nlohmann::json tour = nlohmann::json::array();
    for (int v : d.tour.order) tour.push_back(v + 1);
    out["tour"] = tour;
  }
  nlohmann::json vertex = nlohmann::json::array(), position = nlohmann::json::array(),
                 edge = nlohmann::json::array();
  for (int v : d.report.vertex_violations) vertex.push_back(v + 1);
  for (int p : d.report.position_violations) position.push_back(p + 1);
  for (auto [u, v] : d.report.edge_violations) edge.push_back({u + 1, v + 1});
  out["violations"] = {{"vertex", vertex}, {"position", position}, {"edge", edge}};
  write_output(opt.output, out.dump(2) + "\n");
  return 0;
}

std::vector<std::uint64_t> parse_seeds(const std::string& spec) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto dots = part.find("..");
    try {
      if (dots == std::string::npos) {
        seeds.push_back(std::stoull(part));
      } else {
        std::uint64_t lo = std::stoull(part.substr(0, dots));
        std::uint64_t hi = std::stoull(part.substr(dots + 2));
        if (hi < lo || hi - lo > 100000) throw std::invalid_argument("bad range");
        for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse --seeds '" + spec +
                                  "': expected e.g. 1..10 or 1,2,5");
    }
  }
  if (seeds.empty()) throw std::invalid_argument("--seeds produced an empty list");
  return seeds;
}

int cmd_experiment(const Options& opt) {
  struct Cell {
    std::string input;
    std::string problem;
    bool normalize;
    std::uint64_t seed;
  };

  std::vector<std::uint64_t> seeds = parse_seeds(opt.seeds);
  std::vector<bool> norm_axis;
  if (opt.normalize_mode == "both")
    norm_axis = {true, false};
  else if (opt.normalize_mode == "on")
    norm_axis = {true};
  else if (opt.normalize_mode == "off")
    norm_axis = {false};
  else
    throw std::invalid_argument("--normalize accepts on, off, or both");

  std::vector<Cell> cells;
  for (const auto& input : opt.inputs) {
    std::string problem = infer_problem(input, opt.problem);
    if (problem == "hcp") {
      if (opt.normalize_mode == "on")
        throw std::invalid_argument("hcp instances cannot be normalized: " + input);
      for (std::uint64_t s : seeds) cells.push_back({input, problem, false, s});
    } else {
      for (bool nm : norm_axis)
        for (std::uint64_t s : seeds) cells.push_back({input, problem, nm, s});
    }
  }

  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (const char* env = std::getenv("QUBO_FORGE_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) threads = std::min(threads, cap);
  }
  threads = std::min<int>(threads, static_cast<int>(cells.size()));

  std::vector<std::string> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
      const Cell& c = cells[i];
      try {
        BuiltProblem bp = build_problem(opt, c.input, c.problem, c.normalize);
        qf::EdgeCensus ec = qf::edge_census(bp.graph);
        qf::AnnealSchedule s = opt.schedule;
        s.seed = c.seed;
        qf::SolveReport rep = qf::simulated_anneal(bp.matrix, bp.graph, s);
        rep.problem = c.problem;
        rows[i] = qf::csv_row(rep, ec, c.normalize);
      } catch (const std::exception& e) {
        std::ostringstream os;
        os << c.input << ",,,," << c.problem << ',' << (c.normalize ? "true" : "false") << ','
           << c.seed << ",,,error: " << e.what() << ",,";
        rows[i] = os.str();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads - 1; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ostringstream out;
  out << qf::csv_header() << "\n";
  for (const auto& r : rows) out << r << "\n";
  write_output(opt.output, out.str());

  double norm_sum = 0, unnorm_sum = 0;
  int norm_cnt = 0, unnorm_cnt = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::istringstream row(rows[i]);
    std::string field;
    for (int f = 0; f <= 10 && std::getline(row, field, ','); ++f)
      ;  // field 10 = success_rate
    char* end = nullptr;
    double sr = std::strtod(field.c_str(), &end);
    if (end == field.c_str()) continue;
    if (cells[i].normalize) {
      norm_sum += sr;
      ++norm_cnt;
    } else {
      unnorm_sum += sr;
      ++unnorm_cnt;
    }
  }
  std::ostringstream agg;
  if (norm_cnt) agg << "aggregate success_rate normalized: " << norm_sum / norm_cnt << " over "
                    << norm_cnt << " cells\n";
  if (unnorm_cnt) agg << "aggregate success_rate unnormalized: " << unnorm_sum / unnorm_cnt
                      << " over " << unnorm_cnt << " cells\n";
  std::cerr << agg.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"QUBO toolkit for Hamiltonian-cycle and traveling-salesman instances"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool many_inputs = false) {
    if (many_inputs)
      sub->add_option("inputs", opt.inputs, "instance files (.tsp / .hcp)")->required();
    else
      sub->add_option("input", opt.inputs, "instance file (.tsp / .hcp)")
          ->required()
          ->expected(1);
    sub->add_option("--problem", opt.problem, "hcp or tsp (default: by file extension)")
        ->check(CLI::IsMember({"hcp", "tsp"}));
    sub->add_option("--c1", opt.c1, "integrity penalty constant (default 1)");
    return sub;
  };
  auto add_tsp_opts = [&](CLI::App* sub) {
    sub->add_option("--c2", opt.c2, "tour-weight constant (default 1)");
    sub->add_flag("--normalize", opt.normalize_on, "min-max normalize weights (default on)");
    sub->add_flag("--no-normalize", opt.normalize_off, "disable weight normalization");
    return sub;
  };
  auto add_schedule = [&](CLI::App* sub) {
    sub->add_option("--t-start", opt.schedule.t_start,
                    "start temperature (default 10 * max |coefficient|)");
    sub->add_option("--t-end", opt.schedule.t_end, "end temperature (default 0.01)");
    sub->add_option("--sweeps", opt.schedule.sweeps, "Metropolis sweeps per restart (default 2000)");
    sub->add_option("--restarts", opt.schedule.restarts, "independent restarts (default 20)");
    sub->add_option("--seed", opt.schedule.seed, "PRNG seed (default 42)");
    return sub;
  };

  CLI::App* build = add_tsp_opts(add_common(app.add_subcommand("build", "construct a QUBO matrix")));
  build->add_option("--format", opt.format, "json or qubo (default json)");
  build->add_option("-o,--output", opt.output, "output file (default stdout)");

  CLI::App* solve =
      add_schedule(add_tsp_opts(add_common(app.add_subcommand("solve", "search for a ground state"))));
  solve->add_option("--method", opt.method, "sa, exact, or oracle (default sa)");
  solve->add_option("-o,--output", opt.output, "report file (default stdout)");

  CLI::App* census_cmd = add_tsp_opts(add_common(
      app.add_subcommand("census", "print constraint counts next to the closed-form expectation")));
  census_cmd->add_option("-o,--output", opt.output, "output file (default stdout)");

  CLI::App* oracle = add_common(app.add_subcommand("oracle", "exact tour-space solver"));
  oracle->add_option("--method", opt.method, "held_karp or permutation (tsp only)");
  oracle->add_option("-o,--output", opt.output, "output file (default stdout)");

  CLI::App* decode_cmd =
      add_common(app.add_subcommand("decode", "validate and score a bit assignment"));
  decode_cmd
      ->add_option("--bits", opt.bits, "bit string, a file containing one, or - for stdin")
      ->required();
  decode_cmd->add_option("-o,--output", opt.output, "output file (default stdout)");

  CLI::App* experiment = add_schedule(add_common(
      app.add_subcommand("experiment", "batch SA runs over (instance x normalize x seed) cells"),
      true));
  experiment->add_option("--c2", opt.c2, "tour-weight constant (default 1)");
  experiment->add_option("--normalize", opt.normalize_mode, "on, off, or both (default both)")
      ->check(CLI::IsMember({"on", "off", "both"}));
  experiment->add_option("--seeds", opt.seeds, "seed list, e.g. 1..10 or 1,2,5 (default 1..10)");
  experiment->add_option("-o,--output", opt.output, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string& name = sub->get_name();

    if ((name == "build" || name == "solve" || name == "census") && !opt.inputs.empty() &&
        infer_problem(opt.inputs.front(), opt.problem) == "hcp") {
      if (sub->count("--c2") || sub->count("--normalize") || sub->count("--no-normalize"))
        throw std::invalid_argument("--c2 and --normalize do not apply to hcp instances");
    }

    if (name == "build") return cmd_build(opt);
    if (name == "solve") return cmd_solve(opt);
    if (name == "census") return cmd_census(opt);
    if (name == "oracle") return cmd_oracle_impl(opt);
    if (name == "decode") return cmd_decode(opt);
    if (name == "experiment") return cmd_experiment(opt);
    throw std::invalid_argument("unknown subcommand");
  } catch (const qf::limit_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const qf::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
