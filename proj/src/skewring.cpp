#include "bsw/skewring.hpp"

namespace bsw {

std::shared_ptr<const SkewSpace> SkewSpace::trivial(int n, VarConvention c) {
  auto sp = std::make_shared<SkewSpace>();
  sp->n = n;
  sp->conv = c;
  sp->comps = {Composition(static_cast<std::size_t>(n), 0)};
  sp->index[sp->comps[0]] = 0;
  return sp;
}

std::shared_ptr<const SkewSpace> SkewSpace::make(int n, VarConvention c, std::vector<Composition> comps, std::vector<int> theta) {
  auto sp = std::make_shared<SkewSpace>();
  sp->n = n;
  sp->conv = c;
  sp->comps = std::move(comps);
  sp->theta = std::move(theta);
  if (sp->theta.empty()) throw std::invalid_argument("SkewSpace::make needs an involution");
  for (std::size_t i = 0; i < sp->comps.size(); ++i) {
    if (static_cast<int>(sp->comps[i].size()) != n) throw std::invalid_argument("composition length differs from n");
    sp->index[sp->comps[i]] = static_cast<int>(i);
  }
  return sp;
}

int SkewSpace::find(const Composition& nu) const {
  auto it = index.find(nu);
  if (it == index.end()) throw std::out_of_range("composition not in the label set");
  return it->second;
}

int SkewSpace::act(const SignedPerm& w, int nu) const {
  if (is_trivial() || w.is_identity()) return nu;
  const auto& th = theta;
  return find(act_on_sequence(w, comps[static_cast<std::size_t>(nu)], [&th](int i) { return th[static_cast<std::size_t>(i)]; }));
}

std::vector<MRat> apply(const SkewElement& a, const std::vector<MRat>& v) {
  const auto& sp = a.space();
  if (static_cast<int>(v.size()) != sp->size()) throw std::invalid_argument("apply: vector length mismatch");
  std::vector<MRat> r(v.size());
  for (const auto& [k, f] : a.terms()) {
    int src = sp->act(k.second.inverse(), k.first);
    const MRat& x = v[static_cast<std::size_t>(src)];
    if (x.is_zero()) continue;
    r[static_cast<std::size_t>(k.first)] += f * act_on_variables(k.second, x, sp->conv);
  }
  return r;
}

bool regular_on_random_lines(const MRat& f, VarConvention conv, const std::vector<MRat>& base, int trials, std::mt19937_64& rng,
                             std::string* witness) {
  if (f.is_zero()) return true;
  if (f.involves(var::t)) throw std::invalid_argument("regularity test: coefficient already uses the line variable");
  std::uniform_int_distribution<int> dist(1, 997);
  std::bernoulli_distribution coin(0.5);
  int degenerate = 0, done = 0;
  while (done < trials) {
    if (degenerate > 4 * trials + 8) throw DegenerateSampling("coefficient undefined on every sampled line: " + f.str());
    std::map<int, MRat> sub;
    std::vector<int> dir;
    for (std::size_t l = 1; l <= base.size(); ++l) {
      int c = dist(rng) * (coin(rng) ? 1 : -1);
      dir.push_back(c);
      sub[strand_var(conv, static_cast<int>(l))] = base[l - 1] + MRat(c) * mvar(var::t);
    }
    MRat g;
    try {
      g = f.subst(sub);
    } catch (const std::domain_error&) {
      ++degenerate;
      continue;
    }
    ++done;
    if (g.is_zero()) continue;
    int ord = g.order_in(var::t);
    if (ord < 0) {
      if (witness) {
        std::ostringstream os;
        os << "pole of order " << -ord << " along direction (";
        for (std::size_t i = 0; i < dir.size(); ++i) os << (i ? "," : "") << dir[i];
        os << ") in " << f.str();
        *witness = os.str();
      }
      return false;
    }
  }
  return true;
}

namespace {

std::vector<MRat> test_functions(VarConvention conv, const std::vector<MRat>& base) {
  std::vector<MRat> loc;
  for (std::size_t l = 1; l <= base.size(); ++l) loc.push_back(mvar(strand_var(conv, static_cast<int>(l))) - base[l - 1]);
  std::vector<MRat> out{MRat(1)};
  for (std::size_t i = 0; i < loc.size(); ++i) {
    out.push_back(loc[i]);
    for (std::size_t j = i; j < loc.size(); ++j) out.push_back(loc[i] * loc[j]);
  }
  return out;
}

inline MRat scale_by(const MRat& f, const MRat& g) { return f * g; }
inline RatMatrix scale_by(const RatMatrix& f, const MRat& g) { return f.scaled(g); }

void entries(const MRat& f, std::vector<MRat>& out) { out.push_back(f); }
void entries(const RatMatrix& m, std::vector<MRat>& out) {
  for (const auto& row : m.rows())
    for (const auto& [c, v] : row) out.push_back(v);
}

template <class C>
RegularityResult regular_impl(const Skew<C>& a, const std::vector<std::vector<MRat>>& basepoints, int trials, std::mt19937_64& rng) {
  const auto& sp = a.space();
  if (sp->conv == VarConvention::Additive) throw std::invalid_argument("is_regular_at needs the multiplicative convention");
  if (static_cast<int>(basepoints.size()) != sp->size()) throw std::invalid_argument("is_regular_at: one basepoint per label needed");
  RegularityResult res;
  for (int src = 0; src < sp->size(); ++src) {
    Skew<C> part = a.restrict_source(src);
    if (part.is_zero()) continue;
    for (const MRat& g : test_functions(sp->conv, basepoints[static_cast<std::size_t>(src)])) {
      std::map<int, std::vector<C>> acc;
      for (const auto& [k, f] : part.terms()) acc[k.first].push_back(scale_by(f, act_on_variables(k.second, g, sp->conv)));
      for (auto& [tgt, parts] : acc) {
        C sum = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) sum = sum + parts[i];
        std::vector<MRat> es;
        entries(sum, es);
        for (const MRat& e : es) {
          std::string w;
          if (!regular_on_random_lines(e, sp->conv, basepoints[static_cast<std::size_t>(tgt)], trials, rng, &w)) {
            res.regular = false;
            res.witness = "source #" + std::to_string(src) + ", target #" + std::to_string(tgt) + ", test function " + g.str() + ": " + w;
            return res;
          }
        }
      }
    }
  }
  return res;
}

}  // namespace

RegularityResult is_regular_at(const SkewElement& a, const std::vector<std::vector<MRat>>& basepoints, int trials, std::mt19937_64& rng) {
  return regular_impl(a, basepoints, trials, rng);
}

RegularityResult is_regular_at(const Skew<RatMatrix>& a, const std::vector<std::vector<MRat>>& basepoints, int trials,
                               std::mt19937_64& rng) {
  return regular_impl(a, basepoints, trials, rng);
}

}  // namespace bsw
