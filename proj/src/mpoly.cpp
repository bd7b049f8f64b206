#include "quadent/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quadent {

MPoly MPoly::constant(std::size_t nvars, const mpz_class& c) {
  MPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  MPoly p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.add_term(m, 1);
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
}

void MPoly::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(std::max(a.nvars_, b.nvars_));
  Monomial m(r.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::scaled(const mpz_class& c) const {
  MPoly r(nvars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result = constant(nvars_, 1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  MPoly q(nvars_);
  MPoly rem = *this;
  const auto& [dm, dc] = *d.terms_.rbegin();
  Monomial qm(nvars_);
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.rbegin();
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (rm[i] < dm[i]) return std::nullopt;
      qm[i] = rm[i] - dm[i];
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t())) return std::nullopt;
    mpz_class qc = rc / dc;
    MPoly t(nvars_);
    t.add_term(qm, qc);
    q.add_term(qm, qc);
    rem -= t * d;
  }
  return q;
}

int MPoly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max<int>(d, m[var]);
  return d;
}

int MPoly::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (auto e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

MPoly MPoly::coeff_in(std::size_t var, int k) const {
  MPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] != k) continue;
    Monomial mm = m;
    mm[var] = 0;
    r.add_term(mm, c);
  }
  return r;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial mm = m;
    mm[var] -= 1;
    r.add_term(mm, c * m[var]);
  }
  return r;
}

mpz_class MPoly::content() const {
  mpz_class g = 0;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Monomial MPoly::monomial_content() const {
  if (terms_.empty()) return Monomial(nvars_, 0);
  Monomial r = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) r[i] = std::min(r[i], m[i]);
  }
  return r;
}

MPoly MPoly::divide_monomial(const Monomial& d) const {
  MPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (mm[i] < d[i]) throw std::domain_error("monomial does not divide polynomial");
      mm[i] -= d[i];
    }
    r.terms_.emplace(std::move(mm), c);
  }
  return r;
}

MPoly MPoly::primitive() const {
  if (is_zero()) return *this;
  mpz_class g = content();
  if (terms_.rbegin()->second < 0) g = -g;
  MPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c / g);
  return r;
}

FieldElement MPoly::eval(const PrimeField& f, const std::vector<FieldElement>& point) const {
  FieldElement acc{0};
  for (const auto& [m, c] : terms_) {
    FieldElement t = f.from_mpz(c);
    for (std::size_t i = 0; i < nvars_ && !t.is_zero(); ++i) {
      if (m[i] == 1) t = f.mul(t, point[i]);
      else if (m[i] > 1) t = f.mul(t, f.pow(point[i], m[i]));
    }
    acc = f.add(acc, t);
  }
  return acc;
}

std::string MPoly::to_string(const std::function<std::string(std::size_t)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    mpz_class a = abs(c);
    bool unit_mono = std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (a != 1 || unit_mono) {
      os << a.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << name(i);
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace quadent
