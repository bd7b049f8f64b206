#include "quadent/report.hpp"

#include <cstdio>
#include <sstream>

namespace quadent {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FitReport, P, Q, order, window, holdout, holdout_correct)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ClosedFormReport, period, start, oscillation_degree, residues, text)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ComponentReport, name, sequence, fitted, fit, growth, poly_degree, entropy,
                                   entropy_exact_zero, has_closed_form, closed_form, error)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SequenceClassReport, ms, sequences)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DirectionReport, direction, lambda1, lambda2, steps, seeds, attempts, draws_agree,
                                   truncated, shift_equivalent, max_residual_gcd, components, other_classes)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AdmissibilityEntry, direction, status, rank, unknowns, update)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PermutationReport, from, to, sigma)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(IsotropyReport, kind, permutations)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CompareReport, relation, labels, k_from, k_to, holds, first_violation)

void to_json(nlohmann::json& j, const Report& r) {
  j = nlohmann::json{{"schema", r.schema},     {"system", r.system},
                     {"hash", r.hash},         {"source", r.source},
                     {"prime", r.prime},       {"seed", r.seed},
                     {"trials", r.trials},     {"tol", r.tol},
                     {"admissibility", r.admissibility}, {"directions", r.directions},
                     {"isotropy", r.isotropy}, {"compare", r.compare}};
  if (!r.timings.empty()) j["timings"] = r.timings;
}

void from_json(const nlohmann::json& j, Report& r) {
  j.at("schema").get_to(r.schema);
  if (r.schema != kReportSchema) throw std::runtime_error("unsupported report schema " + std::to_string(r.schema));
  j.at("system").get_to(r.system);
  j.at("hash").get_to(r.hash);
  j.at("source").get_to(r.source);
  j.at("prime").get_to(r.prime);
  j.at("seed").get_to(r.seed);
  j.at("trials").get_to(r.trials);
  j.at("tol").get_to(r.tol);
  j.at("admissibility").get_to(r.admissibility);
  j.at("directions").get_to(r.directions);
  j.at("isotropy").get_to(r.isotropy);
  j.at("compare").get_to(r.compare);
  r.timings.clear();
  if (j.contains("timings")) j.at("timings").get_to(r.timings);
}

std::string report_to_json(const Report& r) { return nlohmann::json(r).dump(2) + "\n"; }

Report report_from_json(const std::string& text) { return nlohmann::json::parse(text).get<Report>(); }

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string join(const std::vector<long>& v, std::size_t limit = 0) {
  std::string out;
  for (std::size_t i = 0; i < v.size() && (limit == 0 || i < limit); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  if (limit && v.size() > limit) out += ",...";
  return out;
}

std::string poly_text(const std::vector<std::string>& c) {
  std::string out;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == "0") continue;
    bool neg = c[j][0] == '-';
    std::string mag = neg ? c[j].substr(1) : c[j];
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (j == 0 || mag != "1") out += mag;
    if (j > 0) out += (mag != "1" ? "*s" : "s") + (j > 1 ? "^" + std::to_string(j) : std::string());
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string component_to_text(const ComponentReport& c) {
  std::ostringstream os;
  os << "  " << c.name << ": " << join(c.sequence) << "\n";
  if (!c.fitted) {
    os << "    no rational fit" << (c.error.empty() ? "" : ": " + c.error) << "\n";
    return os.str();
  }
  os << "    g(s) = (" << poly_text(c.fit.P) << ") / (" << poly_text(c.fit.Q) << ")\n";
  os << "    holdout " << c.fit.holdout_correct << "/" << c.fit.holdout << ", growth " << c.growth;
  if (c.entropy_exact_zero) os << ", S = 0";
  else os << ", S = " << c.entropy;
  os << "\n";
  if (!c.error.empty()) os << "    " << c.error << "\n";
  if (c.has_closed_form) {
    os << "    d_k = " << c.closed_form.text;
    if (c.closed_form.oscillation_degree >= 0)
      os << "  [period-" << c.closed_form.period << " oscillation of order k^" << c.closed_form.oscillation_degree
         << "]";
    os << "\n";
  }
  return os.str();
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "system " << r.system << " (hash " << r.hash << ")\n";
  os << "prime " << r.prime << ", seed " << r.seed << ", trials " << r.trials << "\n\n";
  os << "admissibility\n";
  for (const auto& a : r.admissibility) {
    os << "  " << a.direction << "  " << a.status << " (rank " << a.rank << ", unknowns " << a.unknowns << ")\n";
    for (const auto& u : a.update) os << "      " << u << "\n";
  }
  for (const auto& d : r.directions) {
    os << "\ndirection " << d.direction << "  staircase [" << d.lambda1 << "," << d.lambda2 << "] N=" << d.steps;
    if (!d.draws_agree) os << "  (random draws disagree)";
    if (d.truncated) os << "  (truncated at degree cap)";
    os << "\n";
    for (const auto& c : d.components) os << component_to_text(c);
    for (const auto& oc : d.other_classes) {
      os << "  further m-class (m =";
      for (int m : oc.ms) os << " " << m;
      os << "):";
      for (const auto& s : oc.sequences) os << " [" << join(s, 12) << "]";
      os << "\n";
    }
  }
  os << "\nisotropy: " << r.isotropy.kind << "\n";
  for (const auto& p : r.isotropy.permutations) {
    os << "  " << p.from << " -> " << p.to << ":";
    for (const auto& s : p.sigma) os << " " << s;
    os << "\n";
  }
  for (const auto& c : r.compare) {
    os << "compare " << c.relation << " for " << c.k_from << " <= k <= " << c.k_to << ": "
       << (c.holds ? "holds" : "fails at k = " + std::to_string(c.first_violation)) << "\n";
  }
  for (const auto& [k, v] : r.timings) os << "time " << k << ": " << v << " s\n";
  return os.str();
}

}  // namespace quadent
