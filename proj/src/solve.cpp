#include "quadent/solve.hpp"

#include <algorithm>

namespace quadent {

Direction Direction::parse(const std::string& s) {
  if (s.size() != 2) throw std::invalid_argument("direction must be one of ++, +-, -+, --");
  auto sign = [&](char c) {
    if (c == '+') return 1;
    if (c == '-') return -1;
    throw std::invalid_argument("direction must be one of ++, +-, -+, --");
  };
  return {sign(s[0]), sign(s[1])};
}

const std::array<Direction, 4>& all_directions() {
  static const std::array<Direction, 4> dirs{Direction{1, 1}, Direction{1, -1}, Direction{-1, 1}, Direction{-1, -1}};
  return dirs;
}

PreparedSystem::PreparedSystem(QuadSystemSpec s) : spec(std::move(s)), layout(spec) {
  if (spec.M() > 8) throw std::invalid_argument("at most 8 components are supported");
  for (const auto& eq : spec.equations) forms.push_back(to_poly_form(eq, layout));
}

std::string to_string(AdmissibilityStatus s) {
  switch (s) {
    case AdmissibilityStatus::Admissible: return "admissible";
    case AdmissibilityStatus::RankDeficient: return "rank-deficient";
    case AdmissibilityStatus::NoLinearElimination: return "no-linear-elimination-found";
  }
  return "?";
}

std::vector<Direction> AdmissibilityReport::admissible() const {
  std::vector<Direction> out;
  for (const auto& d : directions) {
    if (d.status == AdmissibilityStatus::Admissible) out.push_back(d.dir);
  }
  return out;
}

const DirectionResult& AdmissibilityReport::at(Direction d) const {
  for (const auto& r : directions) {
    if (r.dir == d) return r;
  }
  throw std::out_of_range("direction not in report");
}

namespace {

int rank_mod_p(std::vector<std::vector<FieldElement>> a, const PrimeField& f) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (!a[r][c].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    FieldElement inv = f.inv(a[rank][c]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      FieldElement factor = f.mul(a[r][c], inv);
      for (int k = c; k < cols; ++k) a[r][k] = f.sub(a[r][k], f.mul(factor, a[rank][k]));
    }
    ++rank;
  }
  return rank;
}

struct Search {
  const VarLayout& lay;
  std::vector<std::size_t> unknown_vars;
  std::vector<UpdateStep> steps;

  bool is_unknown(std::size_t v) const {
    return std::find(unknown_vars.begin(), unknown_vars.end(), v) != unknown_vars.end();
  }

  // Remove factors that cannot vanish generically: powers of A, the integer
  // content, and monomials in variables other than the unknowns.
  MPoly simplify(MPoly e, const MPoly& A) const {
    if (e.is_zero()) return e;
    if (!A.is_constant()) {
      while (true) {
        auto q = e.divide_exact(A);
        if (!q) break;
        e = std::move(*q);
      }
    }
    Monomial mc = e.monomial_content();
    for (std::size_t v : unknown_vars) mc[v] = 0;
    e = e.divide_monomial(mc);
    return e.primitive();
  }

  bool dfs(std::vector<MPoly>& eqs, std::vector<bool>& used, std::vector<bool>& resolved) {
    if (std::all_of(resolved.begin(), resolved.end(), [](bool b) { return b; })) return true;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      if (used[i]) continue;
      for (std::size_t k = 0; k < unknown_vars.size(); ++k) {
        if (resolved[k]) continue;
        std::size_t u = unknown_vars[k];
        if (eqs[i].degree_in(u) != 1) continue;
        MPoly A = eqs[i].coeff_in(u, 1);
        MPoly B = eqs[i].coeff_in(u, 0);
        MPoly minusB = -B;

        std::vector<MPoly> next = eqs;
        bool ok = true;
        for (std::size_t j = 0; j < eqs.size() && ok; ++j) {
          if (used[j] || j == i) continue;
          int d = eqs[j].degree_in(u);
          if (d <= 0) continue;
          MPoly acc(lay.nvars());
          MPoly bpow = MPoly::constant(lay.nvars(), 1);
          for (int t = 0; t <= d; ++t) {
            MPoly c = eqs[j].coeff_in(u, t);
            if (!c.is_zero()) acc += c * bpow * A.pow(static_cast<unsigned>(d - t));
            if (t < d) bpow = bpow * minusB;
          }
          next[j] = simplify(std::move(acc), A);
          if (next[j].is_zero()) ok = false;
        }
        if (!ok) continue;
        std::vector<bool> used2 = used, resolved2 = resolved;
        used2[i] = true;
        resolved2[k] = true;
        // Every remaining equation must still constrain a remaining unknown.
        for (std::size_t j = 0; j < eqs.size() && ok; ++j) {
          if (used2[j]) continue;
          bool touches = false;
          for (std::size_t q = 0; q < unknown_vars.size(); ++q) {
            if (!resolved2[q] && next[j].depends_on(unknown_vars[q])) touches = true;
          }
          if (!touches) ok = false;
        }
        if (!ok) continue;
        steps.push_back({k, i, std::move(A), std::move(B)});
        if (dfs(next, used2, resolved2)) return true;
        steps.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

int jacobian_rank(const PreparedSystem& sys, Direction dir, int trials, const PrimeField& f, std::mt19937_64& rng) {
  const auto& lay = sys.layout;
  std::size_t M = lay.M;
  int corner = dir.unknown_corner();
  std::vector<std::vector<MPoly>> jac(M, std::vector<MPoly>(M));
  std::vector<MPoly> dens;
  for (std::size_t i = 0; i < M; ++i) {
    dens.push_back(sys.forms[i].den.expand(lay.nvars()));
    for (std::size_t k = 0; k < M; ++k) jac[i][k] = sys.forms[i].num.derivative(lay.field_var(corner, k));
  }
  int best = -1;
  std::vector<FieldElement> pt(lay.nvars());
  for (int t = 0; t < std::max(trials, 1); ++t) {
    for (auto& v : pt) v = f.random_nonzero(rng);
    bool degenerate = std::any_of(dens.begin(), dens.end(), [&](const MPoly& d) { return d.eval(f, pt).is_zero(); });
    if (degenerate) continue;
    std::vector<std::vector<FieldElement>> m(M, std::vector<FieldElement>(M));
    for (std::size_t i = 0; i < M; ++i) {
      for (std::size_t k = 0; k < M; ++k) m[i][k] = jac[i][k].eval(f, pt);
    }
    best = std::max(best, rank_mod_p(std::move(m), f));
  }
  if (best < 0) throw IllPosedSystem("every specialization makes a denominator vanish");
  return best;
}

std::optional<UpdateMap> solve_direction(const PreparedSystem& sys, Direction dir) {
  const auto& lay = sys.layout;
  int corner = dir.unknown_corner();
  Search s{lay, {}, {}};
  for (std::size_t k = 0; k < lay.M; ++k) s.unknown_vars.push_back(lay.field_var(corner, k));
  std::vector<MPoly> eqs;
  for (const auto& pf : sys.forms) eqs.push_back(s.simplify(pf.num, MPoly::constant(lay.nvars(), 1)));
  std::vector<bool> used(eqs.size(), false), resolved(lay.M, false);
  if (!s.dfs(eqs, used, resolved)) return std::nullopt;
  return UpdateMap{dir, corner, std::move(s.steps)};
}

AdmissibilityReport admissibility_report(const PreparedSystem& sys, const PrimeField& f, std::uint64_t seed,
                                         int rank_trials) {
  AdmissibilityReport rep;
  std::mt19937_64 rng(seed);
  for (Direction d : all_directions()) {
    DirectionResult r;
    r.dir = d;
    r.rank = jacobian_rank(sys, d, rank_trials, f, rng);
    if (r.rank < static_cast<int>(sys.layout.M)) {
      r.status = AdmissibilityStatus::RankDeficient;
    } else if ((r.update = solve_direction(sys, d))) {
      r.status = AdmissibilityStatus::Admissible;
    } else {
      r.status = AdmissibilityStatus::NoLinearElimination;
    }
    rep.directions.push_back(std::move(r));
  }
  return rep;
}

bool apply_update(const UpdateMap& u, const PrimeField& f, std::vector<FieldElement>& point) {
  std::size_t M = u.steps.size();
  for (auto it = u.steps.rbegin(); it != u.steps.rend(); ++it) {
    FieldElement a = it->A.eval(f, point);
    if (a.is_zero()) return false;
    FieldElement b = it->B.eval(f, point);
    point[static_cast<std::size_t>(u.corner) * M + it->component] = f.neg(f.mul(b, f.inv(a)));
  }
  return true;
}

bool verify_update(const PreparedSystem& sys, const UpdateMap& u, const PrimeField& f, std::mt19937_64& rng,
                   int points) {
  const auto& lay = sys.layout;
  std::vector<FieldElement> pt(lay.nvars());
  int done = 0, attempts = 0;
  while (done < points) {
    if (++attempts > 10 * points + 10) return false;
    for (auto& v : pt) v = f.random_nonzero(rng);
    if (!apply_update(u, f, pt)) continue;
    bool defined = true;
    for (const auto& eq : sys.spec.equations) {
      auto v = evaluate(f, eq, lay, pt);
      if (!v) {
        defined = false;
        break;
      }
      if (!v->is_zero()) return false;
    }
    if (defined) ++done;
  }
  return true;
}

}  // namespace quadent
