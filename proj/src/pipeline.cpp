#include "quadent/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <future>
#include <sstream>

#include "quadent/parser.hpp"

namespace quadent {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::string> to_strings(const IntPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p) out.push_back(c.get_str());
  return out;
}

std::string field_at(const QuadSystemSpec& s, std::size_t k, int corner) {
  return s.fields[k] + "[" + std::to_string(corner_i(corner)) + "," + std::to_string(corner_j(corner)) + "]";
}

/// Scalar-vs-system degree chains checked when one of these systems is
/// analyzed: the scalar sequence (component -1) and the listed system
/// components, strictly increasing termwise.
struct CompareSpec {
  const char* system;
  const char* scalar;
  Direction dir;
  std::vector<int> chain;
  int k_from, k_to;
};

const std::vector<CompareSpec>& compare_specs() {
  static const std::vector<CompareSpec> specs{
      {"lsg2", "scalar-lsg", {-1, 1}, {-1, 0}, 1, 12},
      {"lsg2", "scalar-lsg", {-1, 1}, {-1, 1}, 1, 12},
      {"lmkdv2", "scalar-lmkdv", {-1, 1}, {-1, 1, 0}, 2, 12},
  };
  return specs;
}

std::vector<long> main_sequence(const PreparedSystem& sys, const UpdateMap& u, int steps, const AnalyzeOptions& opts,
                                std::size_t component) {
  AnalyzeOptions o = opts;
  o.trials = 1;
  auto run = run_direction(sys, u, StaircaseSpec::diagonal(u.dir, steps), o);
  return to_long(run.sequences.component(component));
}

std::vector<CompareReport> run_comparisons(const SystemInput& in, const PreparedSystem& sys,
                                           const AdmissibilityReport& adm, const AnalyzeOptions& opts) {
  std::vector<CompareReport> out;
  if (!in.entry) return out;
  for (const auto& cs : compare_specs()) {
    if (in.entry->name != cs.system) continue;
    const auto& dr = adm.at(cs.dir);
    if (!dr.update) continue;
    const int steps = std::max(cs.k_to, opts.steps.value_or(cs.k_to));
    PreparedSystem scalar(parse_system(load_catalog(cs.scalar).source));
    auto sadm = solve_direction(scalar, cs.dir);
    if (!sadm) continue;

    CompareReport r;
    std::vector<std::vector<long>> seqs;
    for (int c : cs.chain) {
      if (c < 0) {
        seqs.push_back(main_sequence(scalar, *sadm, steps, opts, 0));
        r.labels.push_back(std::string(cs.scalar) + " " + scalar.spec.fields[0]);
      } else {
        seqs.push_back(main_sequence(sys, *dr.update, steps, opts, static_cast<std::size_t>(c)));
        r.labels.push_back(std::string(cs.system) + " " + sys.spec.fields[static_cast<std::size_t>(c)]);
      }
    }
    r.relation = "d_k(" + r.labels[0] + ")";
    for (std::size_t i = 1; i < r.labels.size(); ++i) r.relation += " < d_k(" + r.labels[i] + ")";
    r.relation += " in " + cs.dir.name();
    r.k_from = cs.k_from;
    r.k_to = cs.k_to;
    r.holds = true;
    for (int k = cs.k_from; k <= cs.k_to && r.holds; ++k) {
      for (std::size_t i = 0; i + 1 < seqs.size(); ++i) {
        auto uk = static_cast<std::size_t>(k);
        if (uk >= seqs[i].size() || uk >= seqs[i + 1].size() || !(seqs[i][uk] < seqs[i + 1][uk])) {
          r.holds = false;
          r.first_violation = k;
          break;
        }
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<long> to_long(const std::vector<int>& v) { return {v.begin(), v.end()}; }

SystemInput load_catalog(const std::string& name) {
  const CatalogEntry* e = find_catalog_entry(name);
  if (!e) throw std::invalid_argument("unknown catalog entry '" + name + "'");
  return {e->name, e->source, e};
}

SystemInput load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return {path, ss.str(), nullptr};
}

std::vector<AdmissibilityEntry> describe_admissibility(const PreparedSystem& sys, const AdmissibilityReport& rep) {
  std::vector<AdmissibilityEntry> out;
  const auto& spec = sys.spec;
  auto name = [&](std::size_t v) {
    if (sys.layout.is_field_var(v)) return field_at(spec, sys.layout.var_component(v), sys.layout.var_corner(v));
    return var_name(spec, v);
  };
  for (const auto& d : rep.directions) {
    AdmissibilityEntry e;
    e.direction = d.dir.name();
    e.status = to_string(d.status);
    e.rank = d.rank;
    for (std::size_t k = 0; k < spec.M(); ++k) {
      if (k) e.unknowns += ", ";
      e.unknowns += field_at(spec, k, d.dir.unknown_corner());
    }
    if (d.update) {
      for (auto it = d.update->steps.rbegin(); it != d.update->steps.rend(); ++it) {
        e.update.push_back(field_at(spec, it->component, d.update->corner) + " = -(" + it->B.to_string(name) +
                           ") / (" + it->A.to_string(name) + ")");
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

DirectionRun run_direction(const PreparedSystem& sys, const UpdateMap& update, const StaircaseSpec& stair,
                           const AnalyzeOptions& opts) {
  DirectionRun run;
  run.dir = update.dir;
  run.stair = stair;
  for (int t = 0; t < std::max(opts.trials, 1); ++t) {
    EvolveOptions eo;
    eo.prime = opts.prime;
    eo.seed = derived_seed(opts.seed, 1000 * t);
    eo.check_coprime = opts.check_coprime;
    eo.max_degree = opts.max_degree;
    run.grids.push_back(evolve_degrees(sys, update, stair, eo));
  }
  run.sequences = extract_sequences(run.grids.front());
  for (std::size_t t = 1; t < run.grids.size(); ++t) {
    auto other = extract_sequences(run.grids[t]);
    if (other.classes.size() != run.sequences.classes.size()) {
      run.draws_agree = false;
      continue;
    }
    for (std::size_t c = 0; c < other.classes.size(); ++c) {
      if (other.classes[c].seq != run.sequences.classes[c].seq) run.draws_agree = false;
    }
  }
  return run;
}

ComponentReport analyze_sequence(const std::string& name, const std::vector<long>& seq, double tol) {
  ComponentReport c;
  c.name = name;
  c.sequence = seq;
  auto fit = fit_generating_function(seq);
  if (!fit) {
    c.error = seq.size() < 8 ? "fewer than 8 terms" : "no rational generating function validates on the holdout";
    return c;
  }
  c.fitted = true;
  c.fit = {to_strings(fit->P), to_strings(fit->Q), fit->order, fit->window, fit->holdout, fit->holdout_correct};
  try {
    GrowthClass g = entropy_from_fit(*fit, tol);
    c.growth = g.label();
    c.poly_degree = g.poly_degree;
    c.entropy = g.entropy;
    c.entropy_exact_zero = g.entropy_exact_zero;
  } catch (const RootFindingError& e) {
    c.error = e.what();
    return c;
  }
  if (auto qp = closed_form(*fit)) {
    c.has_closed_form = true;
    c.closed_form.period = qp->period;
    c.closed_form.start = qp->start;
    c.closed_form.oscillation_degree = qp->oscillation_degree();
    for (const auto& r : qp->residues) {
      std::vector<std::string> coeffs;
      for (const auto& a : r) coeffs.push_back(a.get_str());
      c.closed_form.residues.push_back(std::move(coeffs));
    }
    c.closed_form.text = qp->to_string();
  }
  return c;
}

std::vector<StaircaseSpec> planned_staircases(const std::vector<Direction>& admissible, const SystemInput& in,
                                              const AnalyzeOptions& opts) {
  const int steps = opts.steps.value_or(in.entry ? in.entry->steps : 16);
  std::vector<StaircaseSpec> out;
  for (Direction d : admissible) {
    if (opts.staircase) {
      if (opts.staircase->direction() == d) out.push_back(*opts.staircase);
    } else if (opts.diagonal) {
      if (*opts.diagonal == d) out.push_back(StaircaseSpec::diagonal(d, steps));
    } else {
      out.push_back(StaircaseSpec::diagonal(d, steps));
    }
  }
  return out;
}

Report analyze(const SystemInput& in, const AnalyzeOptions& opts) {
  const auto t_total = Clock::now();
  PreparedSystem sys(parse_system(in.source));
  PrimeField f(opts.prime);

  Report rep;
  rep.system = in.name;
  rep.source = to_source(sys.spec);
  rep.hash = fnv1a_hex(rep.source);
  rep.prime = opts.prime;
  rep.seed = opts.seed;
  rep.trials = opts.trials;
  rep.tol = opts.tol;

  auto t0 = Clock::now();
  AdmissibilityReport adm = admissibility_report(sys, f, opts.seed, opts.rank_trials);
  rep.admissibility = describe_admissibility(sys, adm);
  if (opts.timings) rep.timings["admissibility"] = seconds_since(t0);

  auto stairs = planned_staircases(adm.admissible(), in, opts);
  std::vector<std::future<std::pair<DirectionRun, double>>> jobs;
  for (const auto& st : stairs) {
    const UpdateMap& u = *adm.at(st.direction()).update;
    jobs.push_back(std::async(std::launch::async, [&sys, &u, st, &opts] {
      auto t = Clock::now();
      DirectionRun r = run_direction(sys, u, st, opts);
      return std::make_pair(std::move(r), seconds_since(t));
    }));
  }
  std::vector<DirectionRun> runs;
  for (auto& j : jobs) {
    auto [run, secs] = j.get();
    if (opts.timings) rep.timings["evolve " + run.dir.name()] = secs;
    runs.push_back(std::move(run));
  }

  t0 = Clock::now();
  std::vector<std::pair<Direction, std::vector<std::vector<long>>>> iso_input;
  for (const auto& run : runs) {
    DirectionReport d;
    d.direction = run.dir.name();
    d.lambda1 = run.stair.lambda1;
    d.lambda2 = run.stair.lambda2;
    d.steps = run.stair.N;
    d.draws_agree = run.draws_agree;
    d.shift_equivalent = run.sequences.shift_equivalent;
    for (const auto& g : run.grids) {
      d.seeds.push_back(g.seed);
      d.attempts.push_back(g.attempt);
      d.truncated = d.truncated || g.truncated;
      d.max_residual_gcd = std::max(d.max_residual_gcd, g.max_residual_gcd);
    }
    std::vector<std::vector<long>> comps;
    for (std::size_t k = 0; k < sys.spec.M(); ++k) {
      comps.push_back(to_long(run.sequences.component(k)));
      d.components.push_back(analyze_sequence(sys.spec.fields[k], comps.back(), opts.tol));
    }
    for (std::size_t c = 1; c < run.sequences.classes.size(); ++c) {
      SequenceClassReport sc;
      sc.ms = run.sequences.classes[c].ms;
      for (const auto& s : run.sequences.classes[c].seq) sc.sequences.push_back(to_long(s));
      d.other_classes.push_back(std::move(sc));
    }
    iso_input.emplace_back(run.dir, std::move(comps));
    rep.directions.push_back(std::move(d));
  }

  // Isotropy compares every admissible direction, so it is only assigned
  // when all of them were evolved.
  if (runs.size() == adm.admissible().size()) {
    IsotropyClass iso = classify_isotropy(iso_input);
    rep.isotropy.kind = iso.label();
    for (const auto& [pair, sigma] : iso.permutations) {
      PermutationReport p{pair.first, pair.second, {}};
      for (int s : sigma) p.sigma.push_back(sys.spec.fields[static_cast<std::size_t>(s)]);
      rep.isotropy.permutations.push_back(std::move(p));
    }
  } else {
    rep.isotropy.kind = "not computed (direction subset)";
  }
  if (opts.timings) rep.timings["fit"] = seconds_since(t0);

  if (!runs.empty()) rep.compare = run_comparisons(in, sys, adm, opts);
  if (opts.timings) rep.timings["total"] = seconds_since(t_total);
  return rep;
}

std::string grid_to_csv(const DegreeGrid& g, const QuadSystemSpec& spec) {
  std::ostringstream os;
  os << "l,m,component,degree\n";
  for (const auto& c : g.cells) {
    for (std::size_t k = 0; k < c.degrees.size(); ++k) {
      os << c.l << "," << c.m << "," << spec.fields[k] << "," << c.degrees[k] << "\n";
    }
  }
  return os.str();
}

}  // namespace quadent
