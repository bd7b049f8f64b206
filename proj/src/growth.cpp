#include "quadent/growth.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

namespace quadent {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

// Exact division by a polynomial with unit leading coefficient.
std::optional<IntPoly> divide_exact(IntPoly a, const IntPoly& b) {
  const mpz_class& lead = b.back();
  if (abs(lead) != 1) throw std::logic_error("divisor must have unit leading coefficient");
  if (a.size() < b.size()) {
    trim(a);
    if (a.empty()) return IntPoly{};
    return std::nullopt;
  }
  IntPoly q(a.size() - b.size() + 1, 0);
  for (int i = degree(a) - degree(b); i >= 0; --i) {
    mpz_class c = a[i + b.size() - 1] * lead;
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) return std::nullopt;
  trim(q);
  return q;
}

IntPoly cyclotomic_uncached(int d);

IntPoly cyclotomic(int d) {
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  IntPoly p = cyclotomic_uncached(d);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(d, std::move(p)).first->second;
}

IntPoly cyclotomic_uncached(int d) {
  IntPoly p(d + 1, 0);
  p[0] = -1;
  p[d] = 1;
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) p = *divide_exact(p, cyclotomic(e));
  }
  return p;
}

std::vector<mpq_class> bm_connection(const std::vector<mpq_class>& s, int& L) {
  std::vector<mpq_class> C{1}, B{1};
  L = 0;
  int m = 1;
  mpq_class b = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    mpq_class d = s[i];
    for (int j = 1; j <= L && j < static_cast<int>(C.size()); ++j) d += C[j] * s[i - j];
    if (d == 0) {
      ++m;
      continue;
    }
    mpq_class coef = d / b;
    std::vector<mpq_class> T = C;
    if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
    for (std::size_t j = 0; j < B.size(); ++j) C[j + m] -= coef * B[j];
    if (2 * L <= static_cast<int>(i)) {
      L = static_cast<int>(i) + 1 - L;
      B = std::move(T);
      b = d;
      m = 1;
    } else {
      ++m;
    }
  }
  while (C.size() > 1 && C.back() == 0) C.pop_back();
  return C;
}

std::complex<long double> horner(const IntPoly& p, std::complex<long double> z, std::complex<long double>* deriv) {
  std::complex<long double> v = 0, dv = 0;
  for (int i = degree(p); i >= 0; --i) {
    dv = dv * z + v;
    v = v * z + static_cast<long double>(p[i].get_d());
  }
  if (deriv) *deriv = dv;
  return v;
}

// Solve the square system V c = y over Q by Gaussian elimination.
RatPoly solve_linear(std::vector<std::vector<mpq_class>> V, std::vector<mpq_class> y) {
  const std::size_t n = y.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && V[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular interpolation system");
    std::swap(V[piv], V[col]);
    std::swap(y[piv], y[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || V[r][col] == 0) continue;
      mpq_class f = V[r][col] / V[col][col];
      for (std::size_t k = col; k < n; ++k) V[r][k] -= f * V[col][k];
      y[r] -= f * y[col];
    }
  }
  RatPoly c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = y[i] / V[i][i];
  return c;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::vector<mpz_class> expand_series(const IntPoly& P, const IntPoly& Q, std::size_t n) {
  if (Q.empty() || Q[0] != 1) throw std::invalid_argument("denominator must satisfy Q(0) = 1");
  std::vector<mpz_class> out(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    mpz_class v = k < P.size() ? P[k] : mpz_class(0);
    for (std::size_t j = 1; j < Q.size() && j <= k; ++j) v -= Q[j] * out[k - j];
    out[k] = v;
  }
  return out;
}

std::optional<GeneratingFunctionFit> fit_generating_function(const std::vector<mpz_class>& seq) {
  const int n = static_cast<int>(seq.size());
  if (n < 8) return std::nullopt;
  const int window = std::min((2 * n + 2) / 3, n - 3);
  std::vector<mpq_class> s(seq.begin(), seq.begin() + window);
  int L = 0;
  auto C = bm_connection(s, L);
  if (L > n / 3 || 2 * L > window) return std::nullopt;

  GeneratingFunctionFit fit;
  for (const auto& c : C) {
    if (c.get_den() != 1) return std::nullopt;
    fit.Q.push_back(c.get_num());
  }
  // P = Q * g mod s^L
  fit.P.assign(static_cast<std::size_t>(L), 0);
  for (int k = 0; k < L; ++k) {
    for (int j = 0; j <= k && j < static_cast<int>(fit.Q.size()); ++j) fit.P[k] += fit.Q[j] * seq[k - j];
  }
  trim(fit.P);
  trim(fit.Q);

  auto regen = expand_series(fit.P, fit.Q, seq.size());
  for (int k = 0; k < window; ++k) {
    if (regen[k] != seq[k]) return std::nullopt;
  }
  fit.order = L;
  fit.window = window;
  fit.holdout = n - window;
  for (int k = window; k < n; ++k) fit.holdout_correct += regen[k] == seq[k] ? 1 : 0;
  if (fit.holdout_correct != fit.holdout) return std::nullopt;
  return fit;
}

std::optional<GeneratingFunctionFit> fit_generating_function(const std::vector<long>& seq) {
  std::vector<mpz_class> z;
  z.reserve(seq.size());
  for (long v : seq) z.emplace_back(v);
  return fit_generating_function(z);
}

std::string GrowthClass::label() const {
  switch (kind) {
    case GrowthKind::Bounded: return "bounded";
    case GrowthKind::Linear: return "linear";
    case GrowthKind::Polynomial:
      if (poly_degree == 2) return "quadratic";
      if (poly_degree == 3) return "cubic";
      return "polynomial(degree " + std::to_string(poly_degree) + ")";
    case GrowthKind::Exponential: {
      std::ostringstream os;
      os.precision(10);
      os << "exponential(S=" << entropy << ")";
      return os.str();
    }
    case GrowthKind::Unclassified: break;
  }
  return "unclassified";
}

GrowthClass entropy_from_fit(const GeneratingFunctionFit& fit, double tol) {
  GrowthClass g;
  IntPoly Q = fit.Q;
  trim(Q);
  if (Q.empty() || Q[0] != 1) throw std::invalid_argument("denominator must satisfy Q(0) = 1");

  // Exact cyclotomic factorization. phi(d) >= sqrt(d/2) bounds the orders.
  IntPoly rest = Q;
  const int D = degree(Q);
  for (int d = 1; d <= 2 * D * D + 2 && degree(rest) > 0; ++d) {
    const IntPoly phi = cyclotomic(d);
    if (degree(phi) > degree(rest)) continue;
    while (true) {
      auto q = divide_exact(rest, phi);
      if (!q) break;
      rest = std::move(*q);
      ++g.cyclotomic[d];
    }
  }
  const bool unit_circle = degree(rest) == 0 && abs(rest[0]) == 1;

  if (unit_circle) {
    g.entropy = 0.0;
    g.entropy_exact_zero = true;
    int beta = 0;
    for (auto [d, mult] : g.cyclotomic) beta = std::max(beta, mult);
    g.poly_degree = std::max(beta - 1, 0);
    g.kind = beta <= 1 ? GrowthKind::Bounded : beta == 2 ? GrowthKind::Linear : GrowthKind::Polynomial;

    // Split into (1-s)^beta0 prod (1 - s^k): the largest remaining order d
    // can only come from the factor 1 - s^d.
    std::map<int, int> left = g.cyclotomic;
    bool ok = true;
    std::vector<int> ks;
    while (ok) {
      int top = 0;
      for (auto [d, mult] : left)
        if (d > 1 && mult > 0) top = d;
      if (top == 0) break;
      for (int e = 1; e <= top; ++e) {
        if (top % e != 0) continue;
        if (--left[e] < 0) ok = false;
      }
      ks.push_back(top);
    }
    if (ok) {
      g.beta0 = left[1];
      std::sort(ks.begin(), ks.end());
      g.unit_factors = ks;
    }
    return g;
  }

  const int deg = degree(Q);
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  const double lead = Q[deg].get_d();
  for (int i = 0; i < deg; ++i) comp(0, i) = -Q[deg - 1 - i].get_d() / lead;
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  if (es.info() != Eigen::Success) throw RootFindingError("companion eigenvalue iteration did not converge");

  // Newton polishing of each eigenvalue; the smallest polished modulus is
  // accepted once its relative residual is negligible.
  long double best = std::numeric_limits<long double>::infinity();
  long double best_resid = 0, best_raw = 0;
  for (int i = 0; i < deg; ++i) {
    std::complex<long double> z(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
    const long double raw = std::abs(z);
    for (int it = 0; it < 60; ++it) {
      std::complex<long double> dq;
      auto v = horner(Q, z, &dq);
      if (std::abs(dq) == 0) break;
      auto step = v / dq;
      z -= step;
      if (std::abs(step) <= 1e-18L * std::max<long double>(1, std::abs(z))) break;
    }
    long double scale = 0, zp = 1;
    for (const auto& c : Q) {
      scale += std::fabs(static_cast<long double>(c.get_d())) * zp;
      zp *= std::abs(z);
    }
    if (std::abs(z) < best) {
      best = std::abs(z);
      best_resid = std::abs(horner(Q, z, nullptr)) / scale;
      best_raw = raw;
    }
  }
  if (!(best > 0) || !std::isfinite(static_cast<double>(best)) || best_resid > 1e-6L) {
    std::ostringstream os;
    os << "minimum-modulus root not located; candidate bracket ["
       << static_cast<double>(std::min(best, best_raw)) << ", " << static_cast<double>(std::max(best, best_raw))
       << "]";
    throw RootFindingError(os.str());
  }
  g.min_root_modulus = static_cast<double>(best);
  g.entropy = std::max(0.0, -std::log(g.min_root_modulus));
  g.kind = g.entropy > tol ? GrowthKind::Exponential : GrowthKind::Unclassified;
  return g;
}

mpq_class QuasiPolynomial::eval(long k) const {
  const RatPoly& c = residues.at(static_cast<std::size_t>(k % period));
  mpq_class v = 0, kp = 1;
  for (const auto& a : c) {
    v += a * kp;
    kp *= k;
  }
  return v;
}

int QuasiPolynomial::oscillation_degree() const {
  std::size_t len = 0;
  for (const auto& r : residues) len = std::max(len, r.size());
  int deg = -1;
  for (std::size_t j = 0; j < len; ++j) {
    for (const auto& r : residues) {
      mpq_class a = j < r.size() ? r[j] : mpq_class(0);
      mpq_class b = j < residues[0].size() ? residues[0][j] : mpq_class(0);
      if (a != b) deg = static_cast<int>(j);
    }
  }
  return deg;
}

std::string ratpoly_to_string(const RatPoly& p, const std::string& var) {
  std::string out;
  for (int j = static_cast<int>(p.size()) - 1; j >= 0; --j) {
    const mpq_class& c = p[j];
    if (c == 0) continue;
    mpq_class a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = a == 1;
    if (!unit || j == 0) out += rational_str(a);
    if (j > 0) {
      if (!unit) out += "*";
      out += var;
      if (j > 1) out += "^" + std::to_string(j);
    }
  }
  return out.empty() ? "0" : out;
}

std::string poly_to_string(const IntPoly& p) {
  RatPoly r(p.begin(), p.end());
  return ratpoly_to_string(r, "s");
}

std::string QuasiPolynomial::to_string() const {
  std::string out;
  if (period == 1) {
    out = ratpoly_to_string(residues.at(0));
  } else {
    for (int r = 0; r < period; ++r) {
      if (r) out += "; ";
      out += "k = " + std::to_string(r) + " mod " + std::to_string(period) + ": " + ratpoly_to_string(residues[r]);
    }
  }
  if (start > 0) out += " (k >= " + std::to_string(start) + ")";
  return out;
}

std::optional<QuasiPolynomial> closed_form(const GeneratingFunctionFit& fit) {
  GrowthClass g = entropy_from_fit(fit);
  if (!g.entropy_exact_zero) return std::nullopt;

  QuasiPolynomial qp;
  int beta = 0;
  for (auto [d, mult] : g.cyclotomic) {
    qp.period = std::lcm(qp.period, d);
    beta = std::max(beta, mult);
  }
  IntPoly P = fit.P, Q = fit.Q;
  trim(P);
  trim(Q);
  qp.start = std::max(0, degree(P) - degree(Q) + 1);

  const int extra = 4;
  const std::size_t need = static_cast<std::size_t>(qp.start + qp.period * (beta + extra));
  auto terms = expand_series(P, Q, need);

  qp.residues.resize(static_cast<std::size_t>(qp.period));
  for (int r = 0; r < qp.period; ++r) {
    if (beta == 0) continue;
    int k = qp.start + ((r - qp.start % qp.period) + qp.period) % qp.period;
    std::vector<std::vector<mpq_class>> V;
    std::vector<mpq_class> y;
    for (int i = 0; i < beta; ++i, k += qp.period) {
      std::vector<mpq_class> row;
      mpq_class kp = 1;
      for (int j = 0; j < beta; ++j) {
        row.push_back(kp);
        kp *= k;
      }
      V.push_back(std::move(row));
      y.emplace_back(terms[k]);
    }
    qp.residues[r] = solve_linear(std::move(V), std::move(y));
    trim(qp.residues[r]);
  }
  for (std::size_t k = static_cast<std::size_t>(qp.start); k < terms.size(); ++k) {
    if (qp.eval(static_cast<long>(k)) != terms[k]) return std::nullopt;
  }
  return qp;
}

std::string IsotropyClass::label() const {
  switch (kind) {
    case IsotropyKind::NotApplicable: return "not applicable";
    case IsotropyKind::Anisotropic: return "anisotropic";
    case IsotropyKind::PermutationallyIsotropic: return "permutationally isotropic";
    case IsotropyKind::Isotropic: return "isotropic";
    case IsotropyKind::StronglyIsotropic: return "strongly isotropic";
  }
  return "?";
}

IsotropyClass classify_isotropy(const std::vector<std::pair<Direction, std::vector<std::vector<long>>>>& seqs) {
  IsotropyClass out;
  if (seqs.size() < 2) return out;
  std::size_t M = seqs.front().second.size();
  std::size_t len = std::numeric_limits<std::size_t>::max();
  for (const auto& [d, v] : seqs) {
    if (v.size() != M) throw std::invalid_argument("directions disagree on the number of components");
    for (const auto& s : v) len = std::min(len, s.size());
  }
  auto same = [len](const std::vector<long>& a, const std::vector<long>& b) {
    return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(len), b.begin());
  };

  bool strongly = true, iso = true;
  const auto& ref = seqs.front().second[0];
  for (const auto& [d, v] : seqs) {
    for (std::size_t k = 0; k < M; ++k) {
      strongly = strongly && same(v[k], ref);
      iso = iso && same(v[k], seqs.front().second[k]);
    }
  }
  if (strongly) {
    out.kind = IsotropyKind::StronglyIsotropic;
    return out;
  }
  if (iso) {
    out.kind = IsotropyKind::Isotropic;
    return out;
  }

  for (std::size_t i = 0; i < seqs.size(); ++i) {
    for (std::size_t j = i + 1; j < seqs.size(); ++j) {
      std::vector<int> sigma(M);
      std::iota(sigma.begin(), sigma.end(), 0);
      bool found = false;
      do {
        bool ok = true;
        for (std::size_t k = 0; k < M && ok; ++k) ok = same(seqs[j].second[sigma[k]], seqs[i].second[k]);
        if (ok) {
          found = true;
          break;
        }
      } while (std::next_permutation(sigma.begin(), sigma.end()));
      if (!found) {
        out.kind = IsotropyKind::Anisotropic;
        out.permutations.clear();
        return out;
      }
      out.permutations.push_back({{seqs[i].first.name(), seqs[j].first.name()}, sigma});
    }
  }
  out.kind = IsotropyKind::PermutationallyIsotropic;
  return out;
}

}  // namespace quadent
