#include "bsw/quiver.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bsw {

int EnhancedQuiver::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names[static_cast<std::size_t>(i)] == name) return i;
  throw std::out_of_range("no vertex named '" + name + "'");
}

int EnhancedQuiver::add_vertex(const std::string& name, std::optional<MRat> x, const std::string& tag) {
  names.push_back(name);
  tags.push_back(tag);
  label.push_back(std::move(x));
  int i = size() - 1;
  theta.push_back(i);
  lambda.push_back(0);
  resize_maps();
  return i;
}

void EnhancedQuiver::resize_maps() {
  std::size_t n = names.size();
  a.resize(n);
  for (auto& row : a) row.resize(n, 0);
  theta.resize(n);
  lambda.resize(n, 0);
  tags.resize(n);
  label.resize(n);
}

std::string EnhancedQuiver::seq_str(const std::vector<int>& nu) const {
  std::string s = "(";
  for (std::size_t k = 0; k < nu.size(); ++k) s += (k ? "," : "") + names[static_cast<std::size_t>(nu[k])];
  return s + ")";
}

ValidationReport validate(const EnhancedQuiver& Q, bool require_acyclic) {
  ValidationReport r;
  int n = Q.size();
  auto nm = [&](int i) { return Q.names[static_cast<std::size_t>(i)]; };
  for (int i = 0; i < n; ++i) {
    int t = Q.theta[i];
    if (t < 0 || t >= n || Q.theta[t] != i) r.violations.push_back("theta is not an involution at " + nm(i));
  }
  if (!r.ok()) return r;
  for (int i = 0; i < n; ++i) {
    if (Q.a[i][i] != 0) r.violations.push_back("loop at " + nm(i));
    for (int j = 0; j < n; ++j)
      if (Q.a[Q.theta[j]][Q.theta[i]] != Q.a[i][j])
        r.violations.push_back("contravariance fails for arrows " + nm(i) + "->" + nm(j));
    if (Q.lambda[i] < 0) r.violations.push_back("negative framing at " + nm(i));
    if (Q.fixed(i) && Q.lambda[i] != 0) r.violations.push_back("framing on theta-fixed vertex " + nm(i));
    if (!Q.fixed(i) && Q.lambda[i] != 0 && Q.lambda[Q.theta[i]] != 0)
      r.violations.push_back("framing on both " + nm(i) + " and theta(" + nm(i) + ")");
  }
  // Acyclicity (Kahn).
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (Q.a[i][j] && i != j) ++indeg[j];
  std::vector<int> stack;
  for (int i = 0; i < n; ++i)
    if (!indeg[i]) stack.push_back(i);
  int seen = 0;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    ++seen;
    for (int j = 0; j < n; ++j)
      if (Q.a[i][j] && i != j && --indeg[j] == 0) stack.push_back(j);
  }
  if (seen != n) (require_acyclic ? r.violations : r.warnings).push_back("oriented cycle");
  return r;
}

int dim_norm(const DimVector& b) {
  int s = 0;
  for (int x : b) s += x;
  return s;
}

bool is_self_dual(const EnhancedQuiver& Q, const DimVector& b) {
  for (int i = 0; i < Q.size(); ++i)
    if (b[i] != b[Q.theta[i]]) return false;
  return true;
}

bool fixed_even(const EnhancedQuiver& Q, const DimVector& b) {
  for (int i = 0; i < Q.size(); ++i)
    if (Q.fixed(i) && b[i] % 2) return false;
  return true;
}

DimVector theta_beta(const EnhancedQuiver& Q, const std::vector<int>& vertices) {
  DimVector b(static_cast<std::size_t>(Q.size()), 0);
  for (int i : vertices) {
    ++b[i];
    ++b[Q.theta[i]];
  }
  return b;
}

std::vector<Composition> compositions(const EnhancedQuiver& Q, const DimVector& b, bool isotropic) {
  if (static_cast<int>(b.size()) != Q.size()) throw std::invalid_argument("dimension vector size mismatch");
  if (isotropic && !is_self_dual(Q, b)) throw std::invalid_argument("isotropic compositions need a self-dual beta");
  if (isotropic && !fixed_even(Q, b)) throw std::invalid_argument("evenness violated at a theta-fixed vertex");
  int n = isotropic ? dim_norm(b) / 2 : dim_norm(b);
  std::vector<Composition> out;
  Composition cur;
  DimVector rem = b;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < Q.size(); ++i) {
      int t = isotropic ? Q.theta[i] : i;
      if (rem[i] < 1) continue;
      --rem[i];
      if (isotropic && rem[t] < 1) {
        ++rem[i];
        continue;
      }
      if (isotropic) --rem[t];
      cur.push_back(i);
      rec();
      cur.pop_back();
      if (isotropic) ++rem[t];
      ++rem[i];
    }
  };
  rec();
  return out;
}

std::vector<DimVector> all_theta_betas(const EnhancedQuiver& Q, int n) {
  std::vector<int> reps;
  for (int i = 0; i < Q.size(); ++i)
    if (Q.theta[i] >= i) reps.push_back(i);
  std::vector<DimVector> out;
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(theta_beta(Q, cur));
      return;
    }
    for (std::size_t r = from; r < reps.size(); ++r) {
      cur.push_back(reps[r]);
      rec(r);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

int generator_degree(const EnhancedQuiver& Q, GenKind kind, const Composition& nu, int k) {
  int n = static_cast<int>(nu.size());
  switch (kind) {
    case GenKind::E:
      return 0;
    case GenKind::X:
      if (k < 1 || k > n) throw std::out_of_range("x index out of range");
      return 2;
    case GenKind::Tau:
      if (k < 1 || k >= n) throw std::out_of_range("tau index out of range");
      if (nu[k - 1] == nu[k]) return -2;
      return Q.abar(nu[k - 1], nu[k]);
    case GenKind::Tau0:
      if (n < 1) throw std::out_of_range("tau_0 needs n >= 1");
      if (Q.fixed(nu[0])) return -2;
      return Q.theta_lambda(nu[0]);
  }
  return 0;
}

namespace {

std::string qpow_name(int sign, int e) {
  std::string s = sign < 0 ? "-" : "";
  if (e == 0) return s + "1";
  if (e == 1) return s + "q";
  return s + "q^" + std::to_string(e);
}

}  // namespace

BkrQuiver build_bkr_quiver(int ord, const XiSpec& xi, const MRat& p0, const MRat& p1, int bound) {
  if (ord < 0 || ord == 1 || ord == 2) throw std::invalid_argument("order of q must be infinite (0) or >= 3");
  int cyc = ord;
  MRat one = MRat(1).with_cyc(cyc);
  MRat p0c = p0.with_cyc(cyc), p1c = p1.with_cyc(cyc);
  for (const MRat* p : {&p0c, &p1c})
    if (ratfun_eq(*p, one) || ratfun_eq(*p, -one)) throw std::invalid_argument("p0, p1 must differ from +-1");
  BkrQuiver out;
  out.ord = ord;
  EnhancedQuiver& Q = out.Q;
  struct V {
    MRat x;
    std::string name;
  };
  std::vector<V> vs;
  for (int eps : {1, -1}) {
    for (int k = -bound; k <= bound; ++k) {
      MRat x;
      std::string name;
      if (xi.symbolic) {
        x = MRat::var(var::xi, eps) * qpow(2 * k);
        name = std::string(eps > 0 ? "xi" : "xi^-1") + (k ? "*q^" + std::to_string(2 * k) : "");
      } else {
        int e = eps * xi.qexp + 2 * k;
        int sg = xi.sign;  // (-1)^{-1} = -1
        x = MRat(sg) * qpow(e);
        name = qpow_name(sg, e);
      }
      x = x.with_cyc(cyc);
      bool dup = false;
      for (const auto& v : vs)
        if (ratfun_eq(v.x, x)) dup = true;
      if (!dup) vs.push_back({x, name});
    }
  }
  for (const auto& v : vs) Q.add_vertex(v.name, v.x);
  int n = Q.size();
  MRat q2 = qpow(2).with_cyc(cyc);
  for (int i = 0; i < n; ++i) {
    MRat inv = Q.label[i]->inv();
    for (int j = 0; j < n; ++j) {
      if (ratfun_eq(*Q.label[j], inv)) Q.theta[i] = j;
      if (ratfun_eq(*Q.label[j], q2 * *Q.label[i])) Q.a[i][j] = 1;
    }
  }
  for (int i = 0; i < n; ++i) {
    const MRat& x = *Q.label[i];
    Q.lambda[i] = (ratfun_eq(x, p1c) ? 1 : 0) + (ratfun_eq(x, -p0c) ? 1 : 0);
  }
  // Truncation can cut the theta partner only if the vertex set is not theta-stable.
  for (int i = 0; i < n; ++i)
    if (!ratfun_eq(*Q.label[Q.theta[i]], Q.label[i]->inv())) throw std::logic_error("truncated BKR vertex set is not theta-stable");

  std::vector<std::string> fixed;
  for (int i = 0; i < n; ++i)
    if (Q.fixed(i)) fixed.push_back(Q.names[i]);
  std::string fx = "{";
  for (std::size_t k = 0; k < fixed.size(); ++k) fx += (k ? "," : "") + fixed[k];
  fx += "}";
  BkrClassification& c = out.cls;
  c.fixed_points = fx;
  if (ord == 0) {
    if (xi.symbolic) {
      c.row = 3;
      c.type = "A_inf x A_inf";
    } else if (xi.qexp % 2 == 0) {
      c.row = 1;
      c.type = "A_inf";
    } else {
      c.row = 2;
      c.type = "A_inf";
    }
  } else if (ord % 2 == 0) {
    int m = ord / 2;
    if (xi.symbolic) {
      c.row = 6;
      c.type = "A_" + std::to_string(m) + "^(1) x A_" + std::to_string(m) + "^(1)";
    } else {
      // -1 = q^m, so ±q^e is q^(e) or q^(e+m).
      int e = xi.qexp + (xi.sign < 0 ? m : 0);
      c.row = (e % 2 == 0) ? 4 : 5;
      c.type = "A_" + std::to_string(m) + "^(1)";
    }
  } else {
    int m = ord;
    if (xi.symbolic) {
      c.row = 8;
      c.type = "A_" + std::to_string(m) + "^(1) x A_" + std::to_string(m) + "^(1)";
    } else if (xi.sign > 0) {
      c.row = 7;
      c.type = "A_" + std::to_string(m) + "^(1)";
    } else {
      c.row = 0;
      c.type = "A_" + std::to_string(m) + "^(1) (xi in -q^Z, not tabulated)";
    }
  }
  return out;
}

EnhancedQuiver quiver_from_jdatum(const JDatum& d) {
  std::size_t n = d.names.size();
  if (d.X.size() != n || d.theta.size() != n || (!d.tags.empty() && d.tags.size() != n))
    throw std::invalid_argument("J-datum: inconsistent vertex data");
  EnhancedQuiver Q;
  for (std::size_t i = 0; i < n; ++i) Q.add_vertex(d.names[i], d.X[i], d.tags.empty() ? "" : d.tags[i]);
  for (std::size_t i = 0; i < n; ++i) {
    int t = d.theta[i];
    if (t < 0 || static_cast<std::size_t>(t) >= n) throw std::invalid_argument("J-datum: theta out of range");
    Q.theta[i] = t;
    if (!ratfun_eq(d.X[static_cast<std::size_t>(t)] * d.X[i], MRat(1)))
      throw std::invalid_argument("J-datum: X(theta(" + d.names[i] + ")) != X(" + d.names[i] + ")^-1");
  }
  auto rden = [&](const std::string& a, const std::string& b) -> const MRat* {
    auto it = d.rden.find({a, b});
    if (it != d.rden.end()) return &it->second;
    if (d.assume_symmetric) {
      it = d.rden.find({b, a});
      if (it != d.rden.end()) return &it->second;
    }
    return nullptr;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const MRat* den = rden(Q.tags[i], Q.tags[j]);
      if (!den) throw std::invalid_argument("J-datum: no R-denominator for (" + Q.tags[i] + "," + Q.tags[j] + ")");
      MRat ratio = d.X[j] / d.X[i];
      int k = laurent_order_at(*den, var::z, ratio);
      Q.a[i][j] = std::max(k, 0);
    }
  std::vector<int> dK(n, 0);
  bool missing = false;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = d.kden.find(Q.tags[i]);
    if (it == d.kden.end()) {
      missing = true;
      continue;
    }
    dK[i] = std::max(0, laurent_order_at(it->second, var::z, d.X[i]));
  }
  if (missing) Q.notes.push_back("K-matrix pole data missing for some vertices; framing set to 0 there");
  for (std::size_t i = 0; i < n; ++i) {
    int src = d.framing == FramingConvention::ThetaTwisted ? Q.theta[i] : static_cast<int>(i);
    Q.lambda[i] = Q.fixed(static_cast<int>(i)) ? 0 : dK[static_cast<std::size_t>(src)];
  }
  return Q;
}

JDatum affine_d_datum(int N) {
  if (N < 5) throw std::invalid_argument("affine D datum needs N >= 5");
  JDatum d;
  std::string wN = "w" + std::to_string(N), wN1 = "w" + std::to_string(N - 1), w1 = "w1";
  int sgn = (N % 2) ? -1 : 1;
  for (int i = 0; i <= N; ++i) {
    d.names.push_back(std::to_string(i));
    d.theta.push_back(N - i);
    if (i == 0 || i == N)
      d.tags.push_back(wN);
    else if (i == 1 || i == N - 1)
      d.tags.push_back(wN1);
    else
      d.tags.push_back(w1);
    if (i <= 1)
      d.X.push_back(MRat(sgn) * qpow(-2 * (N - 2)));
    else if (i >= N - 1)
      d.X.push_back(MRat(sgn) * qpow(2 * (N - 2)));
    else
      d.X.push_back(qpow(2 * i - N));
  }
  MRat z = mvar(var::z);
  auto mq = [](int e) { return MRat((e % 2) ? -1 : 1) * qpow(e); };  // (-q)^e
  d.rden[{w1, w1}] = (z - qpow(2)) * (z - qpow(2 * N - 2));
  MRat spin(1), mixed(1);
  for (int s = 1; s <= N / 2; ++s) spin *= z - mq(4 * s - 2);
  for (int s = 1; s <= (N - 1) / 2; ++s) mixed *= z - mq(4 * s);
  d.rden[{wN, wN}] = spin;
  d.rden[{wN1, wN1}] = spin;
  d.rden[{w1, wN}] = z - mq(N);
  d.rden[{w1, wN1}] = z - mq(N);
  d.rden[{wN1, wN}] = mixed;
  d.assume_symmetric = true;
  return d;
}

std::string export_dot(const EnhancedQuiver& Q) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (int i = 0; i < Q.size(); ++i) {
    os << "  v" << i << " [label=\"" << Q.names[i];
    std::string tag = Q.tags[i];
    std::string x = Q.label[i] ? Q.label[i]->str() : "";
    if (!tag.empty() || !x.empty()) os << "\\n(" << tag << (tag.empty() ? "" : ", ") << x << ")";
    os << "\"";
    if (Q.lambda[i]) os << ", shape=doublecircle, xlabel=\"lambda=" << Q.lambda[i] << "\"";
    os << "];\n";
  }
  for (int i = 0; i < Q.size(); ++i)
    for (int j = 0; j < Q.size(); ++j)
      for (int m = 0; m < Q.a[i][j]; ++m) os << "  v" << i << " -> v" << j << ";\n";
  for (int i = 0; i < Q.size(); ++i) {
    int t = Q.theta[i];
    if (t > i) os << "  v" << i << " -> v" << t << " [style=dashed, dir=both];\n";
  }
  for (int i = 0; i < Q.size(); ++i)
    if (Q.lambda[i]) os << "  f" << i << " [shape=box, label=\"frame\"];\n  f" << i << " -> v" << i << " [label=\"" << Q.lambda[i] << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace bsw
