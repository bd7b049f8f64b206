#include "quadent/evolve.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace quadent {

namespace {

struct Term {
  FieldElement coef;
  std::vector<std::pair<std::size_t, unsigned>> scalars;  // (var, exponent)
  std::vector<unsigned> pair_exp;                         // aligned with CompiledStep::pair_vars
};

struct CompiledStep {
  std::size_t component;
  std::vector<std::size_t> pair_vars;  // field variables present in A or B
  std::vector<unsigned> max_exp;       // e_v
  std::vector<Term> a_terms, b_terms;
};

std::vector<Term> compile_terms(const MPoly& p, const VarLayout& lay, const std::vector<std::size_t>& pair_vars,
                                const PrimeField& f) {
  std::vector<Term> out;
  for (const auto& [mono, c] : p.terms()) {
    Term t{f.from_mpz(c), {}, std::vector<unsigned>(pair_vars.size(), 0)};
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      if (lay.is_field_var(v)) {
        auto it = std::find(pair_vars.begin(), pair_vars.end(), v);
        t.pair_exp[static_cast<std::size_t>(it - pair_vars.begin())] = mono[v];
      } else {
        t.scalars.emplace_back(v, mono[v]);
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<CompiledStep> compile(const UpdateMap& u, const VarLayout& lay, const PrimeField& f) {
  std::vector<CompiledStep> out;
  for (const auto& s : u.steps) {
    CompiledStep cs;
    cs.component = s.component;
    for (std::size_t v = 0; v < 4 * lay.M; ++v) {
      int e = std::max(s.A.degree_in(v), s.B.degree_in(v));
      if (e > 0) {
        cs.pair_vars.push_back(v);
        cs.max_exp.push_back(static_cast<unsigned>(e));
      }
    }
    cs.a_terms = compile_terms(s.A, lay, cs.pair_vars, f);
    cs.b_terms = compile_terms(s.B, lay, cs.pair_vars, f);
    out.push_back(std::move(cs));
  }
  return out;
}

// sum_t coef_t * scalars * prod_v num_v^{a} den_v^{e_v - a}
HomogPoly combine(const PrimeField& f, const std::vector<Term>& terms, const CompiledStep& cs,
                  const std::vector<FieldElement>& scalar_vals, const std::vector<std::vector<HomogPoly>>& npow,
                  const std::vector<std::vector<HomogPoly>>& dpow, int total_degree) {
  HomogPoly acc(total_degree, {});
  for (const auto& t : terms) {
    FieldElement c = t.coef;
    for (auto [v, e] : t.scalars) c = f.mul(c, f.pow(scalar_vals[v], e));
    if (c.is_zero()) continue;
    HomogPoly prod = HomogPoly::constant(c.value);
    for (std::size_t i = 0; i < cs.pair_vars.size(); ++i) {
      unsigned a = t.pair_exp[i];
      if (a > 0) prod = hp_mul(f, prod, npow[i][a]);
      if (cs.max_exp[i] - a > 0) prod = hp_mul(f, prod, dpow[i][cs.max_exp[i] - a]);
    }
    acc = hp_add(f, acc, prod);
  }
  return acc;
}

std::vector<HomogPoly> powers(const PrimeField& f, const HomogPoly& p, unsigned e) {
  std::vector<HomogPoly> out{HomogPoly::constant(1)};
  for (unsigned k = 1; k <= e; ++k) out.push_back(hp_mul(f, out.back(), p));
  return out;
}

}  // namespace

std::uint64_t derived_seed(std::uint64_t seed, int attempt) {
  if (attempt == 0) return seed;
  // splitmix64 step
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

DegreeGrid evolve_once(const PreparedSystem& sys, const UpdateMap& update, const StaircaseSpec& stair,
                       std::uint64_t prime, std::uint64_t seed, bool check_coprime, int max_degree) {
  PrimeField f(prime);
  const VarLayout& lay = sys.layout;
  const std::size_t M = lay.M;
  Range range = build_range(stair, update.dir);
  auto steps = compile(update, lay, f);
  std::mt19937_64 rng(seed);

  // Line initial data with one shared denominator per component.
  std::map<Point, std::vector<RationalPair>> val;
  std::vector<HomogPoly> shared_den;
  for (std::size_t k = 0; k < M; ++k) {
    auto a0 = f.random_nonzero(rng), b0 = f.random_nonzero(rng);
    shared_den.push_back(HomogPoly::linear(a0.value, b0.value));
  }
  for (Point p : range.initial) {
    std::vector<RationalPair> v;
    for (std::size_t k = 0; k < M; ++k) {
      auto a = f.random_nonzero(rng), b = f.random_nonzero(rng);
      v.push_back(reduce(f, {HomogPoly::linear(a.value, b.value), shared_den[k]}));
    }
    val.emplace(p, std::move(v));
  }

  // Generic parameters: nonzero and pairwise distinct.
  std::vector<FieldElement> scalar_vals(lay.nvars());
  {
    std::set<std::uint64_t> seen;
    for (std::size_t p = 0; p < lay.P; ++p) {
      FieldElement v;
      do v = f.random_nonzero(rng);
      while (!seen.insert(v.value).second);
      scalar_vals[lay.param_var(p)] = v;
    }
  }

  // Arbitrary functions: one random sequence each over the needed indices.
  int amin = 0, amax = 0, bmin = 0, bmax = 0;
  for (const auto& c : range.cells) {
    amin = std::min(amin, c.base.a);
    amax = std::max(amax, c.base.a);
    bmin = std::min(bmin, c.base.b);
    bmax = std::max(bmax, c.base.b);
  }
  std::vector<std::map<int, FieldElement>> fseq(lay.F);
  for (std::size_t fi = 0; fi < lay.F; ++fi) {
    bool on_l = sys.spec.funcs[fi].index_var == 'l';
    int lo = on_l ? amin : bmin, hi = on_l ? amax : bmax;
    for (int i = lo; i <= hi; ++i) fseq[fi][i] = f.random_nonzero(rng);
  }

  DegreeGrid g;
  g.dir = update.dir;
  g.stair = stair;
  g.prime = prime;
  g.seed = seed;
  for (std::size_t i = 0; i < range.initial.size(); ++i) {
    g.cells.push_back({range.initial[i], 0, static_cast<int>(i) + 1, std::vector<int>(M, 1)});
  }

  std::vector<const RationalPair*> pair_slot(4 * M, nullptr);
  std::vector<RationalPair> solved(M);
  bool over_cap = false;
  for (const auto& cell : range.cells) {
    if (over_cap && cell.layer != g.cells.back().l) {
      g.truncated = true;
      break;
    }
    for (int c = 0; c < 4; ++c) {
      if (c == update.corner) continue;
      Point p{cell.base.a + corner_i(c), cell.base.b + corner_j(c)};
      auto it = val.find(p);
      if (it == val.end()) throw std::logic_error("schedule reads an unwritten cell");
      for (std::size_t k = 0; k < M; ++k) pair_slot[lay.field_var(c, k)] = &it->second[k];
    }
    for (std::size_t fi = 0; fi < lay.F; ++fi) {
      int idx = sys.spec.funcs[fi].index_var == 'l' ? cell.base.a : cell.base.b;
      FieldElement v = fseq[fi].at(idx);
      scalar_vals[lay.func_var(fi, Parity::None)] = v;
      scalar_vals[lay.func_var(fi, Parity::L)] = (cell.base.a & 1) ? f.inv(v) : v;
      scalar_vals[lay.func_var(fi, Parity::M)] = (cell.base.b & 1) ? f.inv(v) : v;
    }
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      const CompiledStep& cs = *it;
      std::vector<std::vector<HomogPoly>> npow, dpow;
      int total = 0;
      for (std::size_t i = 0; i < cs.pair_vars.size(); ++i) {
        const RationalPair* rp = pair_slot[cs.pair_vars[i]];
        if (!rp) throw std::logic_error("update step references an unsolved component");
        npow.push_back(powers(f, rp->num, cs.max_exp[i]));
        dpow.push_back(powers(f, rp->den, cs.max_exp[i]));
        total += static_cast<int>(cs.max_exp[i]) * rp->degree();
      }
      HomogPoly A = combine(f, cs.a_terms, cs, scalar_vals, npow, dpow, total);
      if (A.is_zero()) throw DegenerateRun("leading coefficient vanished on the initial line");
      HomogPoly B = combine(f, cs.b_terms, cs, scalar_vals, npow, dpow, total);
      solved[cs.component] = reduce(f, {hp_scale(f, B, f.from_int(-1)), A});
      pair_slot[lay.field_var(update.corner, cs.component)] = &solved[cs.component];
    }
    std::vector<int> degs(M);
    for (std::size_t k = 0; k < M; ++k) {
      degs[k] = solved[k].degree();
      if (max_degree > 0 && degs[k] > max_degree) over_cap = true;
      if (check_coprime) {
        int gd = hp_gcd(f, solved[k].num, solved[k].den).degree();
        g.max_residual_gcd = std::max(g.max_residual_gcd, gd);
      }
    }
    val[cell.target] = solved;
    for (std::size_t k = 0; k < M; ++k) pair_slot[lay.field_var(update.corner, k)] = nullptr;
    g.cells.push_back({cell.target, cell.layer, cell.pos, std::move(degs)});
  }
  return g;
}

DegreeGrid evolve_degrees(const PreparedSystem& sys, const UpdateMap& update, const StaircaseSpec& stair,
                          const EvolveOptions& opts) {
  for (int attempt = 0; attempt < std::max(opts.max_attempts, 1); ++attempt) {
    try {
      DegreeGrid g = evolve_once(sys, update, stair, opts.prime, derived_seed(opts.seed, attempt), opts.check_coprime,
                                 opts.max_degree);
      g.seed = opts.seed;
      g.attempt = attempt;
      return g;
    } catch (const DegenerateRun&) {
      continue;
    } catch (const ZeroDivision&) {
      continue;
    }
  }
  throw DegenerateRun("all " + std::to_string(opts.max_attempts) + " attempts degenerated");
}

ExtractedSequences extract_sequences(const DegreeGrid& g) {
  std::map<int, std::map<int, const GridCell*>> by_m;  // m -> l -> cell
  std::size_t M = 0;
  for (const auto& c : g.cells) {
    M = c.degrees.size();
    if (c.l >= 1) by_m[c.m][c.l] = &c;
  }
  ExtractedSequences out;
  for (const auto& [m, col] : by_m) {
    std::vector<std::vector<int>> seq(M, std::vector<int>{1});
    int expect = 1;
    for (const auto& [l, cell] : col) {
      if (l != expect++) break;
      for (std::size_t k = 0; k < M; ++k) seq[k].push_back(cell->degrees[k]);
    }
    bool placed = false;
    for (auto& cls : out.classes) {
      bool compatible = true;
      for (std::size_t k = 0; k < M && compatible; ++k) {
        std::size_t n = std::min(cls.seq[k].size(), seq[k].size());
        compatible = std::equal(seq[k].begin(), seq[k].begin() + static_cast<long>(n), cls.seq[k].begin());
      }
      if (compatible) {
        cls.ms.push_back(m);
        if (seq[0].size() > cls.seq[0].size()) cls.seq = seq;
        placed = true;
        break;
      }
    }
    if (!placed) out.classes.push_back({{m}, seq});
  }
  if (out.classes.empty()) out.classes.push_back({{1}, std::vector<std::vector<int>>(M, std::vector<int>{1})});
  out.shift_equivalent = out.classes.size() == 1;
  return out;
}

}  // namespace quadent
