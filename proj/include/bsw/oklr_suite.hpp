#pragma once

// Defining relations of the (orientifold) KLR algebra, checked in any model that
// provides images of the generators. A model M supplies
//   Elem E(int nu), X(int l), T(int k)     (X, T summed over all ν; T(0) is τ_0)
//   Elem lmul(const MRat& f, const Elem&)  (left multiplication by f(x) on every summand)
//   bool is_zero(const Elem&), std::string str(const Elem&)
// with Elem closed under +, -, *.

#include <string>

#include "bsw/oklr.hpp"

namespace bsw {

namespace detail {
inline std::string clip(std::string s, std::size_t n = 400) {
  if (s.size() > n) s = s.substr(0, n) + " ...";
  return s;
}
}  // namespace detail

template <class M>
RelationReport relation_suite(const M& m, const OklrContext& c, bool klr_only = false) {
  using Elem = typename M::Elem;
  RelationReport rep;
  const int n = c.n;
  auto check = [&](const std::string& id, int nu, const Elem& lhs, const Elem& rhs) {
    Elem d = lhs - rhs;
    RelationResult r;
    r.id = id;
    r.nu = c.Q.seq_str(c.comp(nu));
    r.pass = m.is_zero(d);
    if (!r.pass) r.residual = detail::clip(m.str(d));
    rep.results.push_back(std::move(r));
  };
  std::vector<Elem> X, T;
  for (int l = 1; l <= n; ++l) X.push_back(m.X(l));
  for (int k = 0; k < n; ++k) T.push_back((k == 0 && klr_only) ? m.E(0) : m.T(k));
  auto x = [&](int l) -> const Elem& { return X[static_cast<std::size_t>(l - 1)]; };
  int k0 = klr_only ? 1 : 0;
  const int N = static_cast<int>(c.comps.size());

  for (int nu = 0; nu < N; ++nu) {
    const Composition& v = c.comp(nu);
    auto at = [&](int l) { return v[static_cast<std::size_t>(l - 1)]; };
    Elem e = m.E(nu);
    Elem zero = e - e;

    for (int mu = 0; mu < N; ++mu) check("idempotent", nu, m.E(nu) * m.E(mu), mu == nu ? e : zero);
    for (int l = 1; l <= n; ++l) check("x-idempotent x" + std::to_string(l), nu, x(l) * e, e * x(l));
    for (int k = k0; k < n; ++k) {
      int tgt = c.space->act(SignedPerm::gen(k, n), nu);
      check("tau-idempotent " + std::to_string(k), nu, T[k] * e, m.E(tgt) * T[k]);
    }
    for (int l = 1; l <= n; ++l)
      for (int l2 = l + 1; l2 <= n; ++l2) check("x-commute", nu, x(l) * (x(l2) * e), x(l2) * (x(l) * e));

    for (int k = 1; k < n; ++k) {
      MRat rhs = c.Qf(at(k), at(k + 1), xv(k + 1), xv(k));
      check("quadratic " + std::to_string(k), nu, T[k] * (T[k] * e), m.lmul(rhs, e));
    }
    if (!klr_only) check("quadratic 0", nu, T[0] * (T[0] * e), m.lmul(c.Q0(at(1), -xv(1)), e));

    for (int k = k0; k < n; ++k)
      for (int l = k + 2; l < n; ++l) check("commute " + std::to_string(k) + "," + std::to_string(l), nu, T[k] * (T[l] * e), T[l] * (T[k] * e));

    for (int k = 1; k + 2 <= n; ++k) {
      Elem lhs = T[k + 1] * (T[k] * (T[k + 1] * e)) - T[k] * (T[k + 1] * (T[k] * e));
      Elem rhs = zero;
      if (at(k) == at(k + 2)) {
        int i = at(k), j = at(k + 1);
        MRat f = (c.Qf(i, j, xv(k + 1), xv(k)) - c.Qf(i, j, xv(k + 1), xv(k + 2))) / (xv(k) - xv(k + 2));
        rhs = m.lmul(f, e);
      }
      check("braid " + std::to_string(k), nu, lhs, rhs);
    }

    if (!klr_only && n >= 2) {
      Elem t0e = T[0] * e, t1e = T[1] * e;
      Elem lhs = T[1] * (T[0] * (T[1] * t0e)) - T[0] * (T[1] * (T[0] * t1e));
      int i = at(1), j = at(2);
      bool fi = c.theta(i) == i, fj = c.theta(j) == j;
      Elem rhs = zero;
      if (i != j && j == c.theta(i)) {
        MRat f = (c.Q0(j, xv(2)) - c.Q0(i, xv(1))) / (xv(1) + xv(2));
        rhs = m.lmul(f, t1e);
      } else if (!fi && fj) {
        MRat f = (c.Qf(i, j, xv(2), -xv(1)) - c.Qf(i, j, -xv(2), -xv(1))) / xv(2);
        rhs = m.lmul(f, t0e);
      } else if (fi && fj && i != j) {
        MRat f = (c.Qf(i, j, xv(2), -xv(1)) - c.Qf(i, j, xv(2), xv(1))) / (xv(1) * xv(2));
        rhs = m.lmul(f, x(1) * t0e + e);
      }
      check("braid B", nu, lhs, rhs);
    }

    for (int k = 1; k < n; ++k) {
      bool eq = at(k) == at(k + 1);
      for (int l = 1; l <= n; ++l) {
        int sl = l == k ? k + 1 : (l == k + 1 ? k : l);
        Elem rhs = zero;
        if (eq && l == k) rhs = zero - e;
        if (eq && l == k + 1) rhs = e;
        check("mixed " + std::to_string(k) + " x" + std::to_string(l), nu, T[k] * (x(l) * e) - x(sl) * (T[k] * e), rhs);
      }
    }
    if (!klr_only) {
      Elem rhs = c.theta(at(1)) == at(1) ? zero - e - e : zero;
      check("mixed 0 x1", nu, T[0] * (x(1) * e) + x(1) * (T[0] * e), rhs);
      for (int l = 2; l <= n; ++l) check("mixed 0 x" + std::to_string(l), nu, T[0] * (x(l) * e), x(l) * (T[0] * e));
    }
  }
  return rep;
}

}  // namespace bsw
