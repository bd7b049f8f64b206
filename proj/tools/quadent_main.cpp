#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "quadent/parser.hpp"
#include "quadent/pipeline.hpp"

using namespace quadent;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kNoAdmissible = 3, kDegenerate = 4 };

struct Flags {
  std::string catalog, file, diagonal, staircase, format = "text";
  int steps = 0;
  std::uint64_t prime = kDefaultPrime, seed = 1;
  int trials = 3;
  double tol = 1e-9;
  int max_degree = 4096;
  bool timings = false;
};

void add_system_flags(CLI::App* cmd, Flags& fl) {
  auto* cat = cmd->add_option("--catalog", fl.catalog, "Built-in system name");
  auto* file = cmd->add_option("--file", fl.file, "System source file");
  cat->excludes(file);
  cmd->add_option("--diagonal", fl.diagonal, "Evolve one direction: ++, +-, -+ or --");
  cmd->add_option("--staircase", fl.staircase, "Staircase l1,l2,N");
  cmd->add_option("--steps", fl.steps, "Diagonal staircase length")->check(CLI::PositiveNumber);
  cmd->add_option("--prime", fl.prime, "Prime modulus for evolution");
  cmd->add_option("--seed", fl.seed, "Random seed");
  cmd->add_option("--trials", fl.trials, "Independent random draws per direction")->check(CLI::PositiveNumber);
  cmd->add_option("--format", fl.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--tol", fl.tol, "Entropy tolerance");
  cmd->add_option("--max-degree", fl.max_degree, "Stop a sweep after the layer exceeding this degree (0: none)");
  cmd->add_flag("--timings", fl.timings, "Record wall-clock timings in the report");
}

SystemInput load(const Flags& fl) {
  if (!fl.catalog.empty()) return load_catalog(fl.catalog);
  if (!fl.file.empty()) return load_file(fl.file);
  throw CLI::ValidationError("one of --catalog or --file is required");
}

AnalyzeOptions options(const Flags& fl) {
  AnalyzeOptions o;
  if (!is_prime(fl.prime)) throw CLI::ValidationError("--prime: " + std::to_string(fl.prime) + " is not prime");
  o.prime = fl.prime;
  o.seed = fl.seed;
  o.trials = fl.trials;
  o.tol = fl.tol;
  o.max_degree = fl.max_degree;
  o.timings = fl.timings;
  if (fl.steps > 0) o.steps = fl.steps;
  if (!fl.diagonal.empty()) o.diagonal = Direction::parse(fl.diagonal);
  if (!fl.staircase.empty()) {
    StaircaseSpec s;
    char c1 = 0, c2 = 0;
    std::istringstream is(fl.staircase);
    if (!(is >> s.lambda1 >> c1 >> s.lambda2 >> c2 >> s.N) || c1 != ',' || c2 != ',' || s.lambda1 == 0 ||
        s.lambda2 == 0 || s.N < 1)
      throw CLI::ValidationError("--staircase expects l1,l2,N with nonzero l1, l2 and N >= 1");
    o.staircase = s;
  }
  return o;
}

std::vector<long> parse_sequence(const std::string& text) {
  std::vector<long> out;
  std::string tok;
  for (char ch : text + ",") {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!tok.empty()) {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad sequence term '" + tok + "'");
        out.push_back(v);
        tok.clear();
      }
    } else {
      tok += ch;
    }
  }
  return out;
}

int cmd_analyze(const Flags& fl) {
  SystemInput in = load(fl);
  Report r = analyze(in, options(fl));
  if (fl.format == "json") {
    std::cout << report_to_json(r);
  } else if (fl.format == "csv") {
    std::cout << "direction,component,k,degree\n";
    for (const auto& d : r.directions)
      for (const auto& c : d.components)
        for (std::size_t k = 0; k < c.sequence.size(); ++k)
          std::cout << d.direction << "," << c.name << "," << k << "," << c.sequence[k] << "\n";
  } else {
    std::cout << report_to_text(r);
  }
  if (r.directions.empty()) {
    std::cerr << "no admissible direction to evolve\n";
    return kNoAdmissible;
  }
  return kOk;
}

int cmd_admissibility(const Flags& fl) {
  SystemInput in = load(fl);
  AnalyzeOptions o = options(fl);
  PreparedSystem sys(parse_system(in.source));
  AdmissibilityReport adm = admissibility_report(sys, PrimeField(o.prime), o.seed, o.rank_trials);
  auto entries = describe_admissibility(sys, adm);
  if (fl.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : entries)
      j.push_back({{"direction", e.direction}, {"status", e.status}, {"rank", e.rank}, {"unknowns", e.unknowns},
                   {"update", e.update}});
    std::cout << nlohmann::json{{"schema", kReportSchema}, {"system", in.name}, {"admissibility", j}}.dump(2) << "\n";
  } else if (fl.format == "csv") {
    std::cout << "direction,status,rank\n";
    for (const auto& e : entries) std::cout << e.direction << "," << e.status << "," << e.rank << "\n";
  } else {
    for (const auto& e : entries) {
      std::cout << e.direction << "  " << e.status << "  (rank " << e.rank << "; unknowns " << e.unknowns << ")\n";
      for (const auto& u : e.update) std::cout << "    " << u << "\n";
    }
  }
  return adm.admissible().empty() ? kNoAdmissible : kOk;
}

int cmd_degrees(const Flags& fl) {
  SystemInput in = load(fl);
  AnalyzeOptions o = options(fl);
  PreparedSystem sys(parse_system(in.source));
  AdmissibilityReport adm = admissibility_report(sys, PrimeField(o.prime), o.seed, o.rank_trials);
  auto stairs = planned_staircases(adm.admissible(), in, o);
  if (stairs.empty()) {
    std::cerr << "no admissible direction matches the request\n";
    return kNoAdmissible;
  }
  // Without an explicit direction the first admissible one is used.
  const StaircaseSpec st = stairs.front();
  o.trials = 1;
  DirectionRun run = run_direction(sys, *adm.at(st.direction()).update, st, o);
  const DegreeGrid& g = run.grids.front();
  if (fl.format == "csv") {
    std::cout << grid_to_csv(g, sys.spec);
  } else if (fl.format == "json") {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : g.cells) cells.push_back({{"l", c.l}, {"m", c.m}, {"a", c.point.a}, {"b", c.point.b}, {"degrees", c.degrees}});
    nlohmann::json seqs;
    for (std::size_t k = 0; k < sys.spec.M(); ++k) seqs[sys.spec.fields[k]] = run.sequences.component(k);
    std::cout << nlohmann::json{{"schema", kReportSchema}, {"system", in.name}, {"direction", st.direction().name()},
                                {"staircase", {st.lambda1, st.lambda2, st.N}}, {"prime", g.prime}, {"seed", g.seed},
                                {"attempt", g.attempt}, {"truncated", g.truncated}, {"sequences", seqs}, {"cells", cells}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "direction " << st.direction().name() << ", staircase [" << st.lambda1 << "," << st.lambda2
              << "] N=" << st.N << (g.truncated ? " (truncated)" : "") << "\n";
    for (std::size_t k = 0; k < sys.spec.M(); ++k) {
      std::cout << sys.spec.fields[k] << ":";
      for (int d : run.sequences.component(k)) std::cout << " " << d;
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmd_fit(const std::string& seq_arg, const Flags& fl) {
  std::string text = seq_arg;
  if (text.empty() && !fl.file.empty()) text = load_file(fl.file).source;
  if (text.empty()) {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  }
  auto seq = parse_sequence(text);
  ComponentReport c = analyze_sequence("d", seq, fl.tol);
  if (fl.format == "json") {
    nlohmann::json j{{"schema", kReportSchema}, {"sequence", seq}, {"fitted", c.fitted}};
    if (c.fitted) {
      j["fit"] = {{"P", c.fit.P}, {"Q", c.fit.Q}, {"window", c.fit.window}, {"holdout", c.fit.holdout},
                  {"holdout_correct", c.fit.holdout_correct}};
      j["growth"] = c.growth;
      j["entropy"] = c.entropy;
      j["entropy_exact_zero"] = c.entropy_exact_zero;
      if (c.has_closed_form) j["closed_form"] = c.closed_form.text;
    } else {
      j["error"] = c.error;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << component_to_text(c);
  }
  return c.fitted ? kOk : kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Admissible directions, degree growth and algebraic entropy of quad-equation systems"};
  app.require_subcommand(1);
  Flags fl;
  std::string seq_arg;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full pipeline report");
  auto* degrees_cmd = app.add_subcommand("degrees", "Degree grid of one direction");
  auto* adm_cmd = app.add_subcommand("admissibility", "Admissible directions and update maps");
  auto* fit_cmd = app.add_subcommand("fit", "Fit a rational generating function to a sequence");
  for (auto* c : {analyze_cmd, degrees_cmd, adm_cmd}) add_system_flags(c, fl);
  fit_cmd->add_option("sequence", seq_arg, "Comma-separated terms (default: --file or stdin)");
  fit_cmd->add_option("--file", fl.file, "File holding the sequence");
  fit_cmd->add_option("--format", fl.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  fit_cmd->add_option("--tol", fl.tol, "Entropy tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*analyze_cmd) return cmd_analyze(fl);
    if (*degrees_cmd) return cmd_degrees(fl);
    if (*adm_cmd) return cmd_admissibility(fl);
    if (*fit_cmd) return cmd_fit(seq_arg, fl);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const DegenerateRun& e) {
    std::cerr << "degenerate runs exhausted: " << e.what() << "\n";
    return kDegenerate;
  } catch (const NoAdmissibleDirection& e) {
    std::cerr << e.what() << "\n";
    return kNoAdmissible;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
