#include "bsw/mrat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bsw {

namespace {

constexpr std::uint64_t kP = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulm(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(r & kP);
  std::uint64_t hi = static_cast<std::uint64_t>(r >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kP) s -= kP;
  return s;
}
std::uint64_t addm(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  if (s >= kP) s -= kP;
  return s;
}
std::uint64_t subm(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kP - b; }
std::uint64_t powm(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulm(r, a);
    a = mulm(a, a);
    e >>= 1;
  }
  return r;
}
std::uint64_t invm(std::uint64_t a) { return powm(a, kP - 2); }

std::uint64_t splitmix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Point {
  std::array<std::uint64_t, kNumVars> v{};
  std::array<std::uint64_t, kNumVars> vinv{};
};

const Point& point(int which) {
  static std::vector<Point> pts = [] {
    std::vector<Point> r(4);
    std::uint64_t s = 0x5eed1234abcdULL;
    for (auto& p : r)
      for (int i = 0; i < kNumVars; ++i) {
        std::uint64_t x = 0;
        while (x < 2) x = splitmix(s) % kP;
        p.v[i] = x;
        p.vinv[i] = invm(x);
      }
    return r;
  }();
  return pts[which % pts.size()];
}

bool mpq_mod(const mpq_class& c, std::uint64_t& out) {
  std::uint64_t n = mpz_fdiv_ui(c.get_num_mpz_t(), kP);
  std::uint64_t d = mpz_fdiv_ui(c.get_den_mpz_t(), kP);
  if (d == 0) return false;
  out = mulm(n, invm(d));
  return true;
}

std::uint64_t mono_mod(const Mono& m, const Point& pt, int skip) {
  std::uint64_t r = 1;
  for (int i = 0; i < kNumVars; ++i) {
    int e = m.e[i];
    if (!e || i == skip) continue;
    r = mulm(r, e > 0 ? powm(pt.v[i], static_cast<std::uint64_t>(e)) : powm(pt.vinv[i], static_cast<std::uint64_t>(-e)));
  }
  return r;
}

bool poly_mod(const Poly& f, const Point& pt, std::uint64_t& out) {
  std::uint64_t s = 0;
  for (const auto& t : f.terms()) {
    std::uint64_t c;
    if (!mpq_mod(t.c, c)) return false;
    s = addm(s, mulm(c, mono_mod(t.m, pt, -1)));
  }
  out = s;
  return true;
}

// Univariate image in variable v (shifted so the lowest exponent is 0).
bool uni_mod(const Poly& f, int v, const Point& pt, std::vector<std::uint64_t>& out) {
  int lo = f.min_degree_in(v), hi = f.degree_in(v);
  out.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& t : f.terms()) {
    std::uint64_t c;
    if (!mpq_mod(t.c, c)) return false;
    auto& slot = out[static_cast<std::size_t>(t.m.e[v] - lo)];
    slot = addm(slot, mulm(c, mono_mod(t.m, pt, v)));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return true;
}

int total_degree(const Poly& f) {
  int d = 0;
  for (const auto& t : f.terms()) {
    int s = 0;
    for (auto e : t.m.e) s += e;
    d = std::max(d, s);
  }
  return d;
}

// False only if f certainly does not divide n.
bool maybe_divides(const Poly& n, const Poly& f) {
  if (n.is_zero()) return true;
  int best = -1, bestdeg = 1 << 30;
  for (int v = 0; v < kNumVars; ++v) {
    if (!f.involves(v)) continue;
    if (!n.involves(v)) return false;
    int d = f.degree_in(v);
    if (d < bestdeg) {
      bestdeg = d;
      best = v;
    }
  }
  if (best < 0) return true;
  if (n.degree_in(best) - n.min_degree_in(best) < bestdeg) return false;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const Point& pt = point(attempt);
    std::vector<std::uint64_t> a, b;
    if (!uni_mod(n, best, pt, a) || !uni_mod(f, best, pt, b)) continue;
    if (b.size() != static_cast<std::size_t>(bestdeg + 1)) continue;  // leading coefficient vanished
    if (a.empty()) return true;
    std::uint64_t li = invm(b.back());
    std::size_t db = b.size() - 1;
    for (std::size_t i = a.size(); i-- > db;) {
      std::uint64_t c = mulm(a[i], li);
      if (!c) continue;
      for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = subm(a[i - db + j], mulm(c, b[j]));
    }
    for (std::size_t i = 0; i < db; ++i)
      if (a[i]) return false;
    return true;
  }
  return true;
}

void sort_merge(std::vector<Factor>& d) {
  std::sort(d.begin(), d.end(), [](const Factor& a, const Factor& b) { return a.f < b.f; });
  std::vector<Factor> out;
  for (auto& f : d) {
    if (!out.empty() && out.back().f == f.f)
      out.back().mult += f.mult;
    else
      out.push_back(std::move(f));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Factor& f) { return f.mult == 0; }), out.end());
  d = std::move(out);
}

// Rewrite factors of `target` that are divisible by a factor of `basis`.
// Returns the unit u with old expanded product = u * new expanded product.
mpq_class split_against(std::vector<Factor>& target, const std::vector<Factor>& basis) {
  mpq_class unit = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < target.size() && !changed; ++i) {
      int dg = total_degree(target[i].f);
      for (const auto& b : basis) {
        if (b.f == target[i].f || total_degree(b.f) >= dg) continue;
        bool subset = true;
        for (int v : b.f.support())
          if (!target[i].f.involves(v)) subset = false;
        if (!subset || !maybe_divides(target[i].f, b.f)) continue;
        Poly qt;
        if (!target[i].f.divide_exact(b.f, qt)) continue;
        int m = target[i].mult;
        Normalized nq = normalize_factor(qt);
        for (int k = 0; k < m; ++k) unit *= nq.scale;
        target[i].f = b.f;
        if (!nq.prim.is_const()) target.push_back({nq.prim, m});
        changed = true;
        break;
      }
    }
  }
  sort_merge(target);
  return unit;
}

int cyc_join(int a, int b) {
  if (a && b && a != b) throw std::invalid_argument("incompatible scalar fields (different orders of q)");
  return a ? a : b;
}

}  // namespace

MRat mrat_from_parts(Poly num, std::vector<Factor> den, int cyc) {
  MRat r;
  r.cyc_ = cyc;
  if (cyc) num = reduce_cyclotomic(num, cyc);
  if (num.is_zero()) return r;
  r.num_ = std::move(num);
  sort_merge(den);
  r.den_ = std::move(den);
  return r;
}

MRat MRat::from_num_den(const Poly& num, const Poly& den) {
  return MRat(num) * MRat(den).inv();
}

MRat MRat::with_cyc(int m) const {
  MRat r = *this;
  r.cyc_ = m;
  if (m) r.num_ = reduce_cyclotomic(r.num_, m);
  return r;
}

Poly MRat::den_expanded() const {
  Poly d(1);
  for (const auto& f : den_) d = d * f.f.pow(static_cast<unsigned>(f.mult));
  return d;
}

bool MRat::is_zero() const {
  if (num_.is_zero()) return true;
  if (cyc_) return reduce_cyclotomic(num_, cyc_).is_zero();
  return false;
}

void MRat::cancel(const std::vector<int>* which) {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (which && std::find(which->begin(), which->end(), static_cast<int>(i)) == which->end()) continue;
    auto& f = den_[i];
    while (f.mult > 0 && maybe_divides(num_, f.f)) {
      Poly qt;
      if (!num_.divide_exact(f.f, qt)) break;
      num_ = std::move(qt);
      --f.mult;
    }
  }
  den_.erase(std::remove_if(den_.begin(), den_.end(), [](const Factor& f) { return f.mult == 0; }), den_.end());
}

MRat MRat::operator-() const {
  MRat r = *this;
  r.num_ = -r.num_;
  return r;
}

MRat MRat::operator*(const MRat& o) const {
  int c = cyc_join(cyc_, o.cyc_);
  if (num_.is_zero() || o.num_.is_zero()) return mrat_from_parts(Poly(), {}, c);
  Poly an = num_, bn = o.num_;
  std::vector<Factor> ad = den_, bd = o.den_;
  auto cross = [](Poly& n, std::vector<Factor>& d) {
    for (auto& f : d) {
      while (f.mult > 0 && maybe_divides(n, f.f)) {
        Poly qt;
        if (!n.divide_exact(f.f, qt)) break;
        n = std::move(qt);
        --f.mult;
      }
    }
  };
  cross(an, bd);
  cross(bn, ad);
  for (auto& f : bd) ad.push_back(std::move(f));
  return mrat_from_parts(an * bn, std::move(ad), c);
}

MRat MRat::operator+(const MRat& o) const {
  int c = cyc_join(cyc_, o.cyc_);
  if (num_.is_zero()) return o.with_cyc(c);
  if (o.num_.is_zero()) return with_cyc(c);
  std::vector<Factor> ad = den_, bd = o.den_;
  Poly an = num_, bn = o.num_;
  if (!ad.empty() && !bd.empty()) {
    mpq_class ua = split_against(ad, bd);
    mpq_class ub = split_against(bd, ad);
    if (ua != 1) an = an.scaled(1 / ua);
    if (ub != 1) bn = bn.scaled(1 / ub);
  }
  // lcm of the two factor lists
  std::map<Poly, std::pair<int, int>> m;
  for (const auto& f : ad) m[f.f].first += f.mult;
  for (const auto& f : bd) m[f.f].second += f.mult;
  std::vector<Factor> L;
  Poly amul(1), bmul(1);
  for (const auto& [f, ab] : m) {
    int mx = std::max(ab.first, ab.second);
    L.push_back({f, mx});
    if (mx > ab.first) amul = amul * f.pow(static_cast<unsigned>(mx - ab.first));
    if (mx > ab.second) bmul = bmul * f.pow(static_cast<unsigned>(mx - ab.second));
  }
  Poly n = an * amul + bn * bmul;
  MRat r = mrat_from_parts(std::move(n), std::move(L), c);
  r.cancel();
  return r;
}

MRat MRat::operator-(const MRat& o) const { return *this + (-o); }

MRat MRat::inv() const {
  if (is_zero()) throw std::domain_error("division by zero rational function");
  Normalized nz = normalize_factor(num_);
  Poly n = den_expanded().shifted(Mono{} / nz.shift).scaled(1 / nz.scale);
  std::vector<Factor> d;
  if (!nz.prim.is_const()) d.push_back({nz.prim, 1});
  MRat r = mrat_from_parts(std::move(n), std::move(d), cyc_);
  r.cancel();
  return r;
}

MRat MRat::pow(int k) const {
  if (k < 0) return inv().pow(-k);
  MRat r = mrat_from_parts(Poly(1), {}, cyc_);
  if (k == 0) return r;
  if (den_.empty()) return mrat_from_parts(num_.pow(static_cast<unsigned>(k)), {}, cyc_);
  std::vector<Factor> d = den_;
  for (auto& f : d) f.mult *= k;
  return mrat_from_parts(num_.pow(static_cast<unsigned>(k)), std::move(d), cyc_);
}

MRat MRat::map_monomial(const std::array<Mono, kNumVars>& img, const std::array<int, kNumVars>& sign) const {
  Poly n = num_.map_monomial(img, sign);
  std::vector<Factor> d;
  for (const auto& f : den_) {
    Normalized nz = normalize_factor(f.f.map_monomial(img, sign));
    Mono inv;
    for (int i = 0; i < kNumVars; ++i) inv.e[i] = static_cast<Exp>(-nz.shift.e[i] * f.mult);
    mpq_class s = 1;
    for (int i = 0; i < f.mult; ++i) s *= nz.scale;
    n = n.shifted(inv).scaled(1 / s);
    if (!nz.prim.is_const()) d.push_back({nz.prim, f.mult});
  }
  return mrat_from_parts(std::move(n), std::move(d), cyc_);
}

namespace {
MRat subst_poly(const Poly& f, const std::map<int, MRat>& s, int cyc) {
  if (f.is_zero()) return mrat_from_parts(Poly(), {}, cyc);
  struct Slot {
    int v;
    int lo, hi;
    Poly n, d;  // value = n / d, d expanded
    const MRat* val;
    std::vector<Poly> npow, dpow;
  };
  std::vector<Slot> slots;
  for (const auto& [v, val] : s) {
    if (!f.involves(v)) continue;
    Slot sl{v, f.min_degree_in(v), f.degree_in(v), val.num(), val.den_expanded(), &val, {}, {}};
    int r = sl.hi - sl.lo;
    sl.npow.push_back(Poly(1));
    sl.dpow.push_back(Poly(1));
    for (int i = 1; i <= r; ++i) {
      sl.npow.push_back(sl.npow.back() * sl.n);
      sl.dpow.push_back(sl.dpow.back() * sl.d);
    }
    slots.push_back(std::move(sl));
  }
  if (slots.empty()) return mrat_from_parts(f, {}, cyc);
  Poly acc;
  for (const auto& t : f.terms()) {
    Mono rest = t.m;
    Poly term = Poly::mono(Mono{}, t.c);
    for (const auto& sl : slots) {
      int e = t.m.e[sl.v] - sl.lo;
      int r = sl.hi - sl.lo;
      rest.e[sl.v] = 0;
      term = term * sl.npow[static_cast<std::size_t>(e)] * sl.dpow[static_cast<std::size_t>(r - e)];
    }
    acc += term.shifted(rest);
  }
  MRat r = mrat_from_parts(std::move(acc), {}, cyc);
  for (const auto& sl : slots) {
    r = r * sl.val->pow(sl.lo);
    int rr = sl.hi - sl.lo;
    if (rr > 0 && !sl.val->den().empty()) {
      std::vector<Factor> d = sl.val->den();
      for (auto& fa : d) fa.mult *= rr;
      r = r * mrat_from_parts(Poly(1), std::move(d), cyc);
    }
  }
  return r;
}
}  // namespace

MRat MRat::subst(const std::map<int, MRat>& s) const {
  int c = cyc_;
  for (const auto& [v, val] : s) c = cyc_join(c, val.cyc());
  MRat r = subst_poly(num_, s, c);
  for (const auto& f : den_) {
    MRat g = subst_poly(f.f, s, c);
    r = r * g.inv().pow(f.mult);
  }
  return r;
}

bool MRat::involves(int v) const {
  if (num_.involves(v)) return true;
  for (const auto& f : den_)
    if (f.f.involves(v)) return true;
  return false;
}

std::vector<int> MRat::support() const {
  std::vector<int> r;
  for (int v = 0; v < kNumVars; ++v)
    if (involves(v)) r.push_back(v);
  return r;
}

namespace {
int lowest_nonzero(const Poly& f, int v, int cyc) {
  if (!cyc) return f.min_degree_in(v);
  for (const auto& [d, c] : f.by_degree(v))
    if (!reduce_cyclotomic(c, cyc).is_zero()) return d;
  throw std::domain_error("order of a zero function");
}
}  // namespace

int MRat::order_in(int v) const {
  if (is_zero()) throw std::domain_error("order of the zero function");
  int k = lowest_nonzero(num_, v, cyc_);
  for (const auto& f : den_) k -= f.mult * lowest_nonzero(f.f, v, cyc_);
  return k;
}

std::string MRat::str() const {
  if (den_.empty()) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ")/(";
  bool first = true;
  for (const auto& f : den_) {
    if (!first) os << "*";
    first = false;
    os << "(" << f.f.str() << ")";
    if (f.mult != 1) os << "^" << f.mult;
  }
  os << ")";
  return os.str();
}

bool ratfun_eq(const MRat& a, const MRat& b) {
  int c = cyc_join(a.cyc(), b.cyc());
  if (!c) {
    ModEval ea = mod_eval(a), eb = mod_eval(b);
    if (ea.ok && eb.ok && ea.value != eb.value) return false;
  }
  // Cross-multiplication over the lcm of the factor lists.
  std::map<Poly, std::pair<int, int>> m;
  for (const auto& f : a.den()) m[f.f].first += f.mult;
  for (const auto& f : b.den()) m[f.f].second += f.mult;
  Poly amul(1), bmul(1);
  for (const auto& [f, ab] : m) {
    int mx = std::max(ab.first, ab.second);
    if (mx > ab.first) amul = amul * f.pow(static_cast<unsigned>(mx - ab.first));
    if (mx > ab.second) bmul = bmul * f.pow(static_cast<unsigned>(mx - ab.second));
  }
  Poly d = a.num() * amul - b.num() * bmul;
  if (c) d = reduce_cyclotomic(d, c);
  return d.is_zero();
}

int laurent_order_at(const MRat& f, int v, const MRat& a) {
  if (f.is_zero()) throw std::domain_error("laurent_order_at: identically zero function");
  int fresh = -1;
  for (int cand : {var::t, var::u, var::v, var::w})
    if (cand != v && !f.involves(cand) && !a.involves(cand)) {
      fresh = cand;
      break;
    }
  if (fresh < 0) throw std::invalid_argument("laurent_order_at: no free local variable");
  MRat g = f.subst({{v, a + MRat::var(fresh)}});
  return g.order_in(fresh);
}

MRat qpow(int k) { return MRat::var(var::q, k); }

ModEval mod_eval(const Poly& f) {
  std::uint64_t r;
  if (!poly_mod(f, point(0), r)) return {false, 0};
  return {true, r};
}

ModEval mod_eval(const MRat& f) {
  std::uint64_t n;
  if (!poly_mod(f.num(), point(0), n)) return {false, 0};
  std::uint64_t d = 1;
  for (const auto& fa : f.den()) {
    std::uint64_t x;
    if (!poly_mod(fa.f, point(0), x) || x == 0) return {false, 0};
    d = mulm(d, powm(x, static_cast<std::uint64_t>(fa.mult)));
  }
  return {true, mulm(n, invm(d))};
}

namespace {
bool eval_poly_q(const Poly& f, const std::map<int, mpq_class>& pt, mpq_class& out) {
  mpq_class s = 0;
  for (const auto& t : f.terms()) {
    mpq_class term = t.c;
    for (int i = 0; i < kNumVars; ++i) {
      int e = t.m.e[i];
      if (!e) continue;
      auto it = pt.find(i);
      if (it == pt.end()) return false;
      if (sgn(it->second) == 0 && e < 0) return false;
      mpq_class b = e > 0 ? it->second : mpq_class(1 / it->second);
      for (int k = 0; k < std::abs(e); ++k) term *= b;
    }
    s += term;
  }
  out = s;
  return true;
}
}  // namespace

bool eval_rational(const MRat& f, const std::map<int, mpq_class>& point_values, mpq_class& out) {
  mpq_class n;
  if (!eval_poly_q(f.num(), point_values, n)) return false;
  mpq_class d = 1;
  for (const auto& fa : f.den()) {
    mpq_class x;
    if (!eval_poly_q(fa.f, point_values, x) || sgn(x) == 0) return false;
    for (int k = 0; k < fa.mult; ++k) d *= x;
  }
  out = n / d;
  return true;
}

}  // namespace bsw
