#include "bsw/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bsw {

namespace {
const std::vector<std::string>& names() {
  static const std::vector<std::string> n = [] {
    std::vector<std::string> r = {"q", "p0", "p1", "p", "xi", "z", "w", "t", "u", "v"};
    for (int l = 1; l <= 4; ++l) r.push_back("x" + std::to_string(l));
    for (int l = 1; l <= 4; ++l) r.push_back("X" + std::to_string(l));
    for (int l = 1; l <= 4; ++l) r.push_back("z" + std::to_string(l));
    return r;
  }();
  return n;
}

bool mono_gt(const Term& a, const Term& b) { return b.m < a.m; }
}  // namespace

const std::string& var_name(int v) { return names().at(v); }

int var_index(const std::string& name) {
  const auto& n = names();
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] == name) return static_cast<int>(i);
  return -1;
}

Poly combine_sorted(std::vector<Term>&& v) {
  Poly r;
  auto& out = r.t_;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
  return r;
}

Poly Poly::from_unsorted(std::vector<Term> v) {
  std::sort(v.begin(), v.end(), mono_gt);
  return combine_sorted(std::move(v));
}

Poly::Poly(long c) {
  if (c != 0) t_.push_back({Mono{}, mpq_class(c)});
}
Poly::Poly(const mpq_class& c) {
  if (sgn(c) != 0) t_.push_back({Mono{}, c});
}
Poly Poly::var(int v, int k) { return mono(Mono::of(v, k), 1); }
Poly Poly::mono(const Mono& m, const mpq_class& c) {
  Poly r;
  if (sgn(c) != 0) r.t_.push_back({m, c});
  return r;
}

mpq_class Poly::const_value() const {
  if (t_.empty()) return 0;
  if (!is_const()) throw std::logic_error("const_value of non-constant polynomial");
  return t_[0].c;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

static Poly merge(const Poly& a, const Poly& b, bool subtract) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  Poly r;
  auto& out = r.terms_mut();
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && y[j].m < x[i].m)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || x[i].m < y[j].m) {
      out.push_back(y[j++]);
      if (subtract) out.back().c = -out.back().c;
    } else {
      mpq_class c = subtract ? mpq_class(x[i].c - y[j].c) : mpq_class(x[i].c + y[j].c);
      if (sgn(c) != 0) out.push_back({x[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator+(const Poly& o) const { return merge(*this, o, false); }
Poly Poly::operator-(const Poly& o) const { return merge(*this, o, true); }

Poly Poly::scaled(const mpq_class& c) const {
  if (sgn(c) == 0) return Poly();
  Poly r = *this;
  for (auto& t : r.t_) t.c *= c;
  return r;
}

Poly Poly::shifted(const Mono& m) const {
  Poly r = *this;
  for (auto& t : r.t_) t.m = t.m * m;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (t_.empty() || o.t_.empty()) return Poly();
  if (t_.size() == 1) return o.shifted(t_[0].m).scaled(t_[0].c);
  if (o.t_.size() == 1) return shifted(o.t_[0].m).scaled(o.t_[0].c);
  std::vector<Term> v;
  v.reserve(t_.size() * o.t_.size());
  for (const auto& a : t_)
    for (const auto& b : o.t_) v.push_back({a.m * b.m, a.c * b.c});
  return from_unsorted(std::move(v));
}

Poly Poly::pow(unsigned k) const {
  Poly r(1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (std::size_t i = 0; i < t_.size(); ++i)
    if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
  return true;
}

bool Poly::operator<(const Poly& o) const {
  if (t_.size() != o.t_.size()) return t_.size() < o.t_.size();
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (t_[i].m != o.t_[i].m) return t_[i].m < o.t_[i].m;
    if (t_[i].c != o.t_[i].c) return t_[i].c < o.t_[i].c;
  }
  return false;
}

Mono Poly::min_exponents() const {
  Mono r;
  if (t_.empty()) return r;
  r = t_[0].m;
  for (const auto& t : t_)
    for (int i = 0; i < kNumVars; ++i) r.e[i] = std::min(r.e[i], t.m.e[i]);
  return r;
}

Mono Poly::max_exponents() const {
  Mono r;
  if (t_.empty()) return r;
  r = t_[0].m;
  for (const auto& t : t_)
    for (int i = 0; i < kNumVars; ++i) r.e[i] = std::max(r.e[i], t.m.e[i]);
  return r;
}

int Poly::degree_in(int v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : t_) {
    if (first || t.m.e[v] > d) d = t.m.e[v];
    first = false;
  }
  return d;
}

int Poly::min_degree_in(int v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : t_) {
    if (first || t.m.e[v] < d) d = t.m.e[v];
    first = false;
  }
  return d;
}

bool Poly::involves(int v) const {
  for (const auto& t : t_)
    if (t.m.e[v]) return true;
  return false;
}

std::vector<int> Poly::support() const {
  std::vector<int> r;
  for (int v = 0; v < kNumVars; ++v)
    if (involves(v)) r.push_back(v);
  return r;
}

bool Poly::divide_exact(const Poly& f, Poly& quot) const {
  if (f.is_zero()) throw std::domain_error("division by zero polynomial");
  quot = Poly();
  if (t_.empty()) return true;
  if (f.t_.size() == 1) {
    Mono inv = Mono{} / f.t_[0].m;
    quot = shifted(inv).scaled(1 / f.t_[0].c);
    return true;
  }
  // Work with polynomial representatives: shift both so that no variable has a
  // negative exponent and f has no monomial content.
  Mono fs = f.min_exponents();
  Poly ff = f.shifted(Mono{} / fs);
  Mono ps = min_exponents();
  Poly r = shifted(Mono{} / ps);
  const Term& lf = ff.t_[0];
  mpq_class lfc_inv = 1 / lf.c;
  std::vector<Term> q;
  while (!r.t_.empty()) {
    const Term& lr = r.t_[0];
    Mono qm = lr.m / lf.m;
    if (!qm.nonneg()) return false;
    mpq_class qc = lr.c * lfc_inv;
    r = r - ff.shifted(qm).scaled(qc);
    q.push_back({qm, qc});
  }
  // q is produced in decreasing order already.
  Poly res;
  res.t_ = std::move(q);
  quot = res.shifted(ps / fs);
  return true;
}

Poly Poly::map_monomial(const std::array<Mono, kNumVars>& img, const std::array<int, kNumVars>& sign) const {
  std::vector<Term> v;
  v.reserve(t_.size());
  for (const auto& t : t_) {
    Mono m;
    int s = 1;
    for (int i = 0; i < kNumVars; ++i) {
      int e = t.m.e[i];
      if (!e) continue;
      for (int j = 0; j < kNumVars; ++j)
        if (img[i].e[j]) m.e[j] = static_cast<Exp>(m.e[j] + e * img[i].e[j]);
      if (sign[i] < 0 && (e & 1)) s = -s;
    }
    v.push_back({m, s > 0 ? t.c : mpq_class(-t.c)});
  }
  return from_unsorted(std::move(v));
}

std::map<int, Poly> Poly::by_degree(int v) const {
  std::map<int, std::vector<Term>> g;
  for (const auto& t : t_) {
    Term c = t;
    c.m.e[v] = 0;
    g[t.m.e[v]].push_back(std::move(c));
  }
  std::map<int, Poly> r;
  for (auto& [d, ts] : g) r[d] = from_unsorted(std::move(ts));
  return r;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    mpq_class c = t.c;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool unit = (c == 1);
    bool printed = false;
    if (!unit || t.m.is_one()) {
      os << c.get_str();
      printed = true;
    }
    for (int i = 0; i < kNumVars; ++i) {
      int e = t.m.e[i];
      if (!e) continue;
      if (printed) os << "*";
      os << var_name(i);
      if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
      printed = true;
    }
  }
  return os.str();
}

Normalized normalize_factor(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("normalize_factor of zero");
  Normalized n;
  n.shift = f.min_exponents();
  Poly g = f.shifted(Mono{} / n.shift);
  mpz_class l = 1, gc = 0;
  for (const auto& t : g.terms()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
    mpz_gcd(gc.get_mpz_t(), gc.get_mpz_t(), t.c.get_num_mpz_t());
  }
  mpq_class s(gc, l);  // g = s * prim
  if (sgn(g.lead().c) < 0) s = -s;
  s.canonicalize();
  n.scale = s;
  n.prim = g.scaled(1 / s);
  return n;
}

Poly cyclotomic(int m) {
  if (m <= 0) throw std::invalid_argument("cyclotomic order must be positive");
  // Phi_m = prod_{d | m} (q^d - 1)^{mu(m/d)}; compute by dividing q^m - 1 by Phi_d, d | m, d < m.
  Poly r = Poly::var(var::q, m) - Poly(1);
  for (int d = 1; d < m; ++d) {
    if (m % d) continue;
    Poly qd;
    if (!r.divide_exact(cyclotomic(d), qd)) throw std::logic_error("cyclotomic division failed");
    r = qd;
  }
  return r;
}

Poly reduce_cyclotomic(const Poly& f, int m) {
  if (m <= 0 || f.is_zero()) return f;
  Poly phi = cyclotomic(m);
  int deg = phi.degree_in(var::q);
  auto groups = f.by_degree(var::q);
  // q^m = 1 modulo Phi_m, so fold exponents into [0, m).
  std::map<int, Poly> folded;
  for (auto& [d, c] : groups) {
    int e = ((d % m) + m) % m;
    folded[e] += c;
  }
  std::map<int, mpq_class> pc;
  for (const auto& t : phi.terms()) pc[t.m.e[var::q]] = t.c;
  for (int e = m - 1; e >= deg; --e) {
    auto it = folded.find(e);
    if (it == folded.end() || it->second.is_zero()) continue;
    Poly c = it->second;
    folded.erase(it);
    // q^e = q^{e-deg} * q^deg and q^deg = -(Phi - q^deg) since Phi is monic.
    for (const auto& [k, a] : pc)
      if (k != deg) folded[e - deg + k] -= c.scaled(a);
  }
  Poly r;
  for (auto& [e, c] : folded)
    if (!c.is_zero()) r += c.shifted(Mono::of(var::q, e));
  return r;
}

}  // namespace bsw
