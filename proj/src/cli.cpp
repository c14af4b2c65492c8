#include "bsw/cli.hpp"

#include <yaml-cpp/yaml.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "bsw/bkr.hpp"
#include "bsw/heckec.hpp"
#include "bsw/oklr.hpp"
#include "bsw/parse.hpp"
#include "bsw/rkmat.hpp"
#include "bsw/schurweyl.hpp"

namespace bsw {

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structured report: key=value records, one line per check, then a human summary.
struct Report {
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<std::string> records;
  RelationReport checks;

  void kv(const std::string& k, const std::string& v) { header.emplace_back(k, v); }
  void add(const RelationReport& r, const std::string& prefix = "") {
    for (auto res : r.results) {
      if (!prefix.empty()) res.id = prefix + ": " + res.id;
      checks.results.push_back(std::move(res));
    }
  }
  void add_check(const std::string& id, const std::string& nu, bool pass, const std::string& residual = "") {
    checks.results.push_back({id, nu, pass, residual});
  }
};

std::string one_line(std::string s) {
  for (char& ch : s)
    if (ch == '\n') ch = ' ';
  return s;
}

int emit(const Report& rep, const std::string& out_path, const std::string& sub) {
  std::ostringstream os;
  os << "# bsw report\n";
  for (const auto& [k, v] : rep.header) os << k << "=" << v << "\n";
  for (const auto& r : rep.records) os << r << "\n";
  std::size_t i = 0;
  for (const auto& r : rep.checks.results)
    os << "check." << i++ << " id=\"" << r.id << "\" nu=\"" << r.nu << "\" pass=" << (r.pass ? 1 : 0) << "\n";
  os << "checks=" << rep.checks.results.size() << "\nfailed=" << rep.checks.failures() << "\n";
  if (out_path.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(out_path);
    if (!f) throw ConfigError("cannot write report " + out_path);
    f << os.str();
  }
  std::cout << sub << ": " << rep.checks.results.size() << " checks, " << rep.checks.failures() << " failed\n";
  if (const RelationResult* f = rep.checks.first_failure()) {
    std::cout << "first counterexample: relation \"" << f->id << "\" at " << f->nu << "\n";
    if (!f->residual.empty()) std::cout << "residual: " << one_line(f->residual) << "\n";
    return 1;
  }
  return 0;
}

MRat expr(const std::string& s, const std::string& what) {
  try {
    return parse_mrat(s);
  } catch (const ParseError& e) {
    throw ConfigError("cannot parse " + what + " '" + s + "': " + e.what());
  }
}

KVariant variant_of(const std::string& s) {
  if (s == "mu1") return KVariant::Mu1;
  if (s == "restrictable") return KVariant::Restrictable;
  if (s == "nonrestrictable" || s == "non-restrictable") return KVariant::NonRestrictable;
  throw ConfigError("unknown variant '" + s + "' (mu1, restrictable, nonrestrictable)");
}

FramingConvention framing_of(const std::string& s) {
  if (s == "theta-twisted") return FramingConvention::ThetaTwisted;
  if (s == "at-vertex") return FramingConvention::AtVertex;
  throw ConfigError("unknown framing '" + s + "' (theta-twisted, at-vertex)");
}

// Bound b allows the odd labels |n| <= b.
int odd_bound(int b) {
  if (b < 1) throw ConfigError("bound must be positive");
  return b % 2 ? b : b - 1;
}

// Random nonzero rationals of height <= 10^4, distinct and different from +-1.
std::vector<mpq_class> sample_rationals(std::mt19937_64& rng, int count) {
  std::uniform_int_distribution<long> num(-10000, 10000), den(1, 10000);
  std::vector<mpq_class> out;
  while (static_cast<int>(out.size()) < count) {
    mpq_class r(num(rng), den(rng));
    r.canonicalize();
    if (r == 0 || r == 1 || r == -1) continue;
    if (std::find(out.begin(), out.end(), r) != out.end()) continue;
    out.push_back(r);
  }
  return out;
}

std::string qstr(const mpq_class& r) { return r.get_str(); }

EnhancedQuiver quiver_from_yaml(const YAML::Node& q) {
  if (!q || !q["vertices"] || !q["vertices"].IsSequence()) throw ConfigError("quiver: missing 'vertices' list");
  EnhancedQuiver Q;
  std::vector<std::string> partner;
  std::vector<int> lam;
  for (const auto& v : q["vertices"]) {
    if (!v["name"]) throw ConfigError("quiver: vertex without 'name'");
    std::string name = v["name"].as<std::string>();
    std::optional<MRat> label;
    if (v["label"]) label = expr(v["label"].as<std::string>(), "label of " + name);
    Q.add_vertex(name, label, v["tag"] ? v["tag"].as<std::string>() : "");
    partner.push_back(v["theta"] ? v["theta"].as<std::string>() : name);
    lam.push_back(v["lambda"] ? v["lambda"].as<int>() : 0);
  }
  for (int i = 0; i < Q.size(); ++i) {
    try {
      Q.theta[i] = Q.index_of(partner[static_cast<std::size_t>(i)]);
    } catch (const std::exception&) {
      throw ConfigError("quiver: unknown theta partner '" + partner[static_cast<std::size_t>(i)] + "'");
    }
    Q.lambda[i] = lam[static_cast<std::size_t>(i)];
  }
  if (q["arrows"]) {
    for (const auto& a : q["arrows"]) {
      std::string from, to;
      int mult = 1;
      if (a.IsSequence()) {
        if (a.size() < 2) throw ConfigError("quiver: arrow needs [from, to, mult]");
        from = a[0].as<std::string>();
        to = a[1].as<std::string>();
        if (a.size() > 2) mult = a[2].as<int>();
      } else {
        from = a["from"].as<std::string>();
        to = a["to"].as<std::string>();
        if (a["mult"]) mult = a["mult"].as<int>();
      }
      try {
        Q.a[Q.index_of(from)][Q.index_of(to)] += mult;
      } catch (const std::out_of_range&) {
        throw ConfigError("quiver: arrow " + from + " -> " + to + " names an unknown vertex");
      } catch (const std::invalid_argument&) {
        throw ConfigError("quiver: arrow " + from + " -> " + to + " names an unknown vertex");
      }
    }
  }
  ValidationReport v = validate(Q);
  if (!v.ok()) throw ConfigError("quiver: " + v.violations.front());
  return Q;
}

YAML::Node load_yaml(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file '" + path + "'");
  try {
    return YAML::Load(f);
  } catch (const YAML::Exception& e) {
    throw ConfigError("parse error in '" + path + "': " + e.what());
  }
}

// Scalar and list keys of a config file become flags placed before the command line ones,
// so explicit flags win. Tables (quiver) are read separately.
std::vector<std::string> config_tokens(const YAML::Node& y, const std::string& path) {
  std::vector<std::string> tok;
  if (!y.IsMap()) throw ConfigError("config '" + path + "' must be a key-value table");
  for (const auto& kv : y) {
    std::string key = kv.first.as<std::string>();
    if (key == "quiver") continue;
    const YAML::Node& v = kv.second;
    if (v.IsScalar()) {
      std::string s = v.as<std::string>();
      if (s == "true") {
        tok.push_back("--" + key);
        continue;
      }
      if (s == "false") continue;
      tok.push_back("--" + key);
      tok.push_back(s);
    } else if (v.IsSequence()) {
      std::string joined;
      for (const auto& e : v) joined += (joined.empty() ? "" : ",") + e.as<std::string>();
      tok.push_back("--" + key);
      tok.push_back(joined);
    } else {
      throw ConfigError("config key '" + key + "' must be a scalar or a list");
    }
  }
  return tok;
}

struct Common {
  std::string config, out;
  std::uint64_t seed = 1;
  std::string mode = "symbolic";
};

struct Params {
  int N = 2, n = 2, bound = 3, trials = 5, ord = 0, vertex = 1;
  std::string variant = "mu1", p0, p1, p, xi = "1", framing = "theta-twisted", orientation = "proof", reading, datum = "typeA";
  std::string quiver, dot, unit = "1";
  std::vector<std::string> beta;
  bool klr_only = false, onedim = false;
};

MRat p_or(const std::string& s, int v, const std::string& what) { return s.empty() ? mvar(v) : expr(s, what); }

void param_header(Report& rep, const Common& c, const std::string& sub) {
  rep.kv("subcommand", sub);
  rep.kv("seed", std::to_string(c.seed));
  rep.kv("mode", c.mode);
}

std::vector<int> int_labels(const std::vector<std::string>& v) {
  std::vector<int> r;
  for (const auto& s : v) {
    try {
      std::size_t pos = 0;
      r.push_back(std::stoi(s, &pos));
      if (pos != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw ConfigError("beta label '" + s + "' is not an integer");
    }
  }
  return r;
}

// --- subcommands -------------------------------------------------------------

int cmd_verify_rk(const Common& c, const Params& P) {
  Report rep;
  param_header(rep, c, "verify-rk");
  if (P.N < 2 || P.n < 1 || P.n > var::kMaxStrands) throw ConfigError("need N >= 2 and 1 <= n <= 4");
  KVariant v = variant_of(P.variant);
  MRat p0 = p_or(P.p0, var::p0, "p0"), p1 = p_or(P.p1, var::p1, "p1");
  RkOrientation o = P.orientation == "lemma" ? RkOrientation::Lemma : RkOrientation::Proof;
  if (P.orientation != "proof" && P.orientation != "lemma") throw ConfigError("orientation must be proof or lemma");
  rep.kv("N", std::to_string(P.N));
  rep.kv("n", std::to_string(P.n));
  rep.kv("variant", P.variant);
  rep.kv("p0", p0.str());
  rep.kv("p1", p1.str());
  RatMatrix R = rmat_fund(P.N), K = kmat(P.N, v, p0, p1);
  if (c.mode == "random") {
    std::mt19937_64 rng(c.seed);
    auto qs = sample_rationals(rng, 3), a = sample_rationals(rng, 3), b = sample_rationals(rng, 3);
    for (int s = 0; s < 3; ++s) {
      std::map<int, MRat> sub{{var::q, MRat(qs[s])}, {var::p0, MRat(a[s])}, {var::p1, MRat(b[s])}, {var::p, MRat(a[s])}};
      auto sp = [&](const RatMatrix& M) { return M.transform([&](const MRat& f) { return f.subst(sub); }); };
      std::string tag = "sample q=" + qstr(qs[s]) + " p0=" + qstr(a[s]) + " p1=" + qstr(b[s]);
      rep.records.push_back("sample." + std::to_string(s) + "=" + tag);
      rep.add(check_rk_identities(sp(R), sp(K), P.N, P.n, o), tag);
    }
  }
  MRat z = mvar(var::z);
  RatMatrix Rzz = R.transform([&](const MRat& f) { return f.subst({{var::w, z}}); });
  rep.add_check("R(z,z) = id", "-", Rzz == RatMatrix::identity(P.N * P.N));
  rep.add(check_rk_identities(R, K, P.N, P.n, o));
  return emit(rep, c.out, "verify-rk");
}

int cmd_verify_hecke(const Common& c, const Params& P) {
  Report rep;
  param_header(rep, c, "verify-hecke");
  if (P.n < 1 || P.n > 3) throw ConfigError("verify-hecke supports 1 <= n <= 3");
  MRat p0 = p_or(P.p0, var::p0, "p0"), p1 = p_or(P.p1, var::p1, "p1"), p = p_or(P.p, var::p, "p");
  rep.kv("n", std::to_string(P.n));
  rep.kv("N", std::to_string(P.N));
  rep.kv("p0", p0.str());
  rep.kv("p1", p1.str());
  if (c.mode == "random") {
    std::mt19937_64 rng(c.seed);
    auto a = sample_rationals(rng, 3), b = sample_rationals(rng, 3);
    for (int s = 0; s < 3; ++s) {
      std::string tag = "sample p0=" + qstr(a[s]) + " p1=" + qstr(b[s]);
      rep.records.push_back("sample." + std::to_string(s) + "=" + tag);
      rep.add(verify_hecke_relations(make_hecke_context(P.n, MRat(a[s]), MRat(b[s]))), tag);
      rep.add(finite_typeB_check(P.N, MRat(a[s]), P.n), tag + " finite B");
    }
  }
  HeckeContext h = make_hecke_context(P.n, p0, p1);
  rep.add(verify_hecke_relations(h));
  rep.add_check("Laurent lattice", "-", preserves_laurent_lattice(h));
  rep.add(finite_typeB_check(P.N, p, P.n), "finite B");
  return emit(rep, c.out, "verify-hecke");
}

JDatum datum_from(const Params& P, MRat& p0, MRat& p1) {
  KVariant v = variant_of(P.variant);
  p0 = p_or(P.p0, var::p0, "p0");
  p1 = p_or(P.p1, var::p1, "p1");
  if (v == KVariant::Mu1) {
    if (P.p0.empty() && !P.p1.empty()) p0 = p1;
    if (P.p0.empty() && P.p1.empty()) p0 = p_or(P.p, var::p, "p");
    p1 = p0;
  }
  if (P.datum == "typeA") return typeA_fund_datum(odd_bound(P.bound), P.N, v, p0, p1, framing_of(P.framing));
  if (P.datum == "affineD") return affine_d_datum(P.N);
  throw ConfigError("unknown datum '" + P.datum + "' (typeA, affineD)");
}

int cmd_build_quiver(const Common& c, const Params& P, const YAML::Node& cfg) {
  Report rep;
  param_header(rep, c, "build-quiver");
  EnhancedQuiver Q;
  if (!P.quiver.empty() || (cfg && cfg["quiver"])) {
    YAML::Node y = P.quiver.empty() ? cfg["quiver"] : load_yaml(P.quiver);
    Q = quiver_from_yaml(y["quiver"] ? y["quiver"] : y);
    rep.kv("source", P.quiver.empty() ? c.config : P.quiver);
  } else {
    MRat p0, p1;
    JDatum d = datum_from(P, p0, p1);
    Q = quiver_from_jdatum(d);
    rep.kv("datum", P.datum);
    rep.kv("bound", std::to_string(P.bound));
    rep.kv("N", std::to_string(P.N));
    if (P.datum == "typeA") {
      rep.kv("variant", P.variant);
      rep.kv("p0", p0.str());
      rep.kv("p1", p1.str());
      rep.kv("framing", P.framing);
    }
  }
  for (int i = 0; i < Q.size(); ++i) {
    std::ostringstream r;
    r << "vertex." << Q.names[i] << " label=" << (Q.label[i] ? Q.label[i]->str() : "-") << " theta=" << Q.names[Q.theta[i]]
      << " lambda=" << Q.lambda[i];
    rep.records.push_back(r.str());
  }
  for (int i = 0; i < Q.size(); ++i)
    for (int j = 0; j < Q.size(); ++j)
      if (Q.a[i][j]) rep.records.push_back("arrow " + Q.names[i] + " -> " + Q.names[j] + " mult=" + std::to_string(Q.a[i][j]));
  for (const auto& note : Q.notes) rep.records.push_back("note=" + note);
  ValidationReport v = validate(Q, P.datum == "typeA" && P.quiver.empty());
  for (const auto& w : v.warnings) rep.records.push_back("warning=" + w);
  for (const auto& e : v.violations) rep.add_check("validate", "-", false, e);
  if (v.ok()) rep.add_check("validate", "-", true);
  if (!P.dot.empty()) {
    std::ofstream f(P.dot);
    if (!f) throw ConfigError("cannot write " + P.dot);
    f << export_dot(Q);
    rep.kv("dot", P.dot);
  }
  return emit(rep, c.out, "build-quiver");
}

int cmd_verify_oklr(const Common& c, const Params& P, const YAML::Node& cfg) {
  Report rep;
  param_header(rep, c, "verify-oklr");
  if (c.mode == "random") throw ConfigError("random mode applies to verify-rk, verify-hecke, verify-bkr and verify-sw");
  EnhancedQuiver Q;
  TauZeroReading reading = TauZeroReading::Vertex;
  std::vector<std::string> beta = P.beta;
  if (!P.quiver.empty() || (cfg && cfg["quiver"])) {
    YAML::Node y = P.quiver.empty() ? cfg : load_yaml(P.quiver);
    Q = quiver_from_yaml(y["quiver"] ? y["quiver"] : y);
    if (beta.empty() && y["beta"])
      for (const auto& b : y["beta"]) beta.push_back(b.as<std::string>());
    if (P.reading.empty() && y["reading"] && y["reading"].as<std::string>() == "theta-source") reading = TauZeroReading::ThetaSource;
  } else {
    MRat p0, p1;
    Q = quiver_from_jdatum(datum_from(P, p0, p1));
    if (framing_of(P.framing) == FramingConvention::ThetaTwisted) reading = TauZeroReading::ThetaSource;
  }
  if (!P.reading.empty()) {
    if (P.reading == "vertex") reading = TauZeroReading::Vertex;
    else if (P.reading == "theta-source") reading = TauZeroReading::ThetaSource;
    else throw ConfigError("reading must be vertex or theta-source");
  }
  if (beta.empty()) throw ConfigError("verify-oklr needs --beta (vertex names)");
  std::vector<int> idx;
  for (const auto& b : beta) {
    try {
      idx.push_back(Q.index_of(b));
    } catch (const std::exception&) {
      throw ConfigError("beta names unknown vertex '" + b + "'");
    }
  }
  OklrContext o;
  try {
    o = make_oklr_context(Q, theta_beta(Q, idx), reading);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  rep.kv("n", std::to_string(o.n));
  rep.kv("compositions", std::to_string(o.comps.size()));
  rep.kv("reading", reading == TauZeroReading::Vertex ? "vertex" : "theta-source");
  rep.add(verify_relations(o));
  for (int nu = 0; nu < static_cast<int>(o.comps.size()); ++nu)
    for (GenKind g : {GenKind::X, GenKind::Tau0})
      rep.add_check(g == GenKind::X ? "grading x" : "grading tau 0", Q.seq_str(o.comp(nu)), check_grading(o, g, nu, 1));
  if (P.onedim) {
    for (int mu = 0; mu < static_cast<int>(o.comps.size()); ++mu) {
      OneDimResult r = onedim_admissible(o, mu);
      rep.records.push_back("onedim " + Q.seq_str(o.comp(mu)) + " admissible=" + (r.admissible ? "1" : "0") +
                            (r.witness.empty() ? "" : " witness=\"" + r.witness + "\""));
      rep.add_check("onedim agrees with relations", Q.seq_str(o.comp(mu)), r.suite_agrees);
    }
  }
  return emit(rep, c.out, "verify-oklr");
}

XiSpec xi_of(const std::string& s) {
  if (s == "symbolic" || s == "xi") return {true, 1, 0};
  MRat x = expr(s, "xi");
  for (int e = -24; e <= 24; ++e)
    for (int sg : {1, -1})
      if (ratfun_eq(x, qpow(e) * MRat(sg))) return {false, sg, e};
  throw ConfigError("xi must be +-q^e or 'symbolic'");
}

BkrReading bkr_reading_of(const std::string& s) {
  if (s.empty() || s == "target") return BkrReading::Target;
  if (s == "source-left") return BkrReading::SourceLeft;
  if (s == "right") return BkrReading::Right;
  throw ConfigError("reading must be target, source-left or right");
}

int cmd_verify_bkr(const Common& c, const Params& P) {
  Report rep;
  param_header(rep, c, "verify-bkr");
  XiSpec xi = xi_of(P.xi);
  MRat p0 = p_or(P.p0, var::p0, "p0"), p1 = p_or(P.p1, var::p1, "p1");
  rep.kv("ord", std::to_string(P.ord));
  rep.kv("xi", P.xi);
  rep.kv("p0", p0.str());
  rep.kv("p1", p1.str());
  if (P.beta.empty()) throw ConfigError("verify-bkr needs --beta (vertex names)");
  auto run = [&](const MRat& a, const MRat& b, const std::string& tag) {
    BkrQuiver bq;
    try {
      bq = build_bkr_quiver(P.ord, xi, a, b, P.bound);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    std::vector<int> idx;
    for (const auto& s : P.beta) {
      try {
        idx.push_back(bq.Q.index_of(s));
      } catch (const std::exception&) {
        throw ConfigError("beta names unknown vertex '" + s + "'");
      }
    }
    if (tag.empty()) {
      rep.kv("row", std::to_string(bq.cls.row));
      rep.kv("type", bq.cls.type);
    }
    BkrContext ctx;
    try {
      ctx = make_bkr_context(bq, theta_beta(bq.Q, idx), a, b, bkr_reading_of(P.reading));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    rep.add(verify_bkr(ctx, P.klr_only), tag);
  };
  if (c.mode == "random") {
    std::mt19937_64 rng(c.seed);
    auto a = sample_rationals(rng, 3), b = sample_rationals(rng, 3);
    for (int s = 0; s < 3; ++s) {
      std::string tag = "sample p0=" + qstr(a[s]) + " p1=" + qstr(b[s]);
      rep.records.push_back("sample." + std::to_string(s) + "=" + tag);
      run(MRat(a[s]), MRat(b[s]), tag);
    }
  }
  run(p0, p1, "");
  return emit(rep, c.out, "verify-bkr");
}

void sw_checks(Report& rep, const SwContext& ctx, int trials, std::mt19937_64& rng, const std::string& tag) {
  const EnhancedQuiver& Q = ctx.oklr.Q;
  int n = ctx.oklr.n;
  for (int nu = 0; nu < ctx.space->size(); ++nu) {
    std::string nus = Q.seq_str(ctx.oklr.comp(nu));
    auto stab = [&](GenKind g, int k, const std::string& id) {
      RegularityResult r = check_lattice_stability(ctx, g, nu, k, trials, rng);
      rep.checks.results.push_back({tag + "stable " + id, nus, r.regular, r.witness});
    };
    stab(GenKind::Tau0, 0, "tau 0");
    for (int k = 1; k < n; ++k) stab(GenKind::Tau, k, "tau " + std::to_string(k));
    for (int l = 1; l <= n; ++l) stab(GenKind::X, l, "x" + std::to_string(l));
    rep.add(check_klr_restriction(ctx, nu), tag + "restriction");
    // Negative control wherever K has a pole at the target basepoint.
    int tgt = ctx.space->act(SignedPerm::gen(0, n), nu);
    const MRat& x1 = ctx.X(ctx.oklr.comp(tgt)[0]);
    bool pole = false;
    for (const auto& row : ctx.K.rows())
      for (const auto& [col, f] : row)
        if (!f.is_zero() && laurent_order_at(f.subst({{var::z, mvar(var::t).inv()}}), var::t, x1) < 0) pole = true;
    if (pole) {
      RegularityResult r = check_regular(ctx, raw_k(ctx, nu), trials, rng);
      rep.add_check(tag + "negative control: raw K is not regular", nus, !r.regular);
      if (!r.regular) rep.records.push_back("pole_witness " + nus + " " + one_line(r.witness));
    }
  }
  rep.add(verify_sw_relations(ctx), tag + "relations");
}

int cmd_verify_sw(const Common& c, const Params& P) {
  Report rep;
  param_header(rep, c, "verify-sw");
  if (P.beta.empty()) throw ConfigError("verify-sw needs --beta (odd integer labels)");
  KVariant v = variant_of(P.variant);
  MRat p0, p1;
  (void)datum_from(P, p0, p1);
  std::vector<int> beta = int_labels(P.beta);
  int m = odd_bound(P.bound);
  FramingConvention f = framing_of(P.framing);
  rep.kv("N", std::to_string(P.N));
  rep.kv("variant", P.variant);
  rep.kv("p0", p0.str());
  rep.kv("p1", p1.str());
  rep.kv("trials", std::to_string(P.trials));
  std::mt19937_64 rng(c.seed);
  auto make = [&](const MRat& a, const MRat& b) {
    try {
      return make_sw_context(P.N, v, a, b, m, beta, f);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  };
  if (c.mode == "random") {
    auto a = sample_rationals(rng, 3), b = sample_rationals(rng, 3);
    for (int s = 0; s < 3; ++s) {
      std::string tag = "sample p0=" + qstr(a[s]) + " p1=" + qstr(b[s]) + ": ";
      rep.records.push_back("sample." + std::to_string(s) + "=" + tag.substr(0, tag.size() - 2));
      sw_checks(rep, make(MRat(a[s]), MRat(b[s])), P.trials, rng, tag);
    }
  }
  SwContext ctx = make(p0, p1);
  std::string lam;
  for (int i = 0; i < ctx.oklr.Q.size(); ++i)
    if (ctx.oklr.Q.lambda[i]) lam += (lam.empty() ? "" : ",") + ctx.oklr.Q.names[i] + ":" + std::to_string(ctx.oklr.Q.lambda[i]);
  rep.kv("framing", lam.empty() ? "zero" : lam);
  sw_checks(rep, ctx, P.trials, rng, "");
  return emit(rep, c.out, "verify-sw");
}

int cmd_coker(const Common& c, const Params& P) {
  Report rep;
  param_header(rep, c, "coker");
  KVariant v = variant_of(P.variant);
  MRat p0, p1;
  (void)datum_from(P, p0, p1);
  SwContext ctx;
  int idx = 0;
  CokerResult r;
  try {
    ctx = make_sw_context(P.N, v, p0, p1, odd_bound(P.bound), {P.vertex}, framing_of(P.framing));
    idx = ctx.oklr.Q.index_of(std::to_string(P.vertex));
    r = coker_k0(ctx, idx, expr(P.unit, "unit"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::out_of_range& e) {
    throw ConfigError(e.what());
  }
  rep.kv("N", std::to_string(P.N));
  rep.kv("variant", P.variant);
  rep.kv("p0", p0.str());
  rep.kv("p1", p1.str());
  rep.kv("vertex", std::to_string(P.vertex));
  rep.kv("X", ctx.X(idx).str());
  rep.kv("rank", std::to_string(r.rank));
  rep.kv("corank", std::to_string(r.corank));
  std::string b;
  for (int j : r.basis) b += (b.empty() ? "" : ",") + std::string("u") + std::to_string(j + 1);
  rep.kv("coker_basis", b.empty() ? "none" : b);
  for (std::size_t k = 0; k < r.left_null.size(); ++k) {
    std::string row;
    for (const auto& x : r.left_null[k]) row += (row.empty() ? "" : ", ") + x.str();
    rep.records.push_back("left_null." + std::to_string(k) + "=[" + row + "]");
  }
  for (int i = 0; i < ctx.N; ++i) {
    std::string row;
    for (int j = 0; j < ctx.N; ++j) row += (j ? ", " : "") + r.value.at(i, j).str();
    rep.records.push_back("value." + std::to_string(i) + "=[" + row + "]");
  }
  rep.add_check("corank = N - rank", "-", r.corank == ctx.N - r.rank);
  rep.add_check("left null space has dimension corank", "-", static_cast<int>(r.left_null.size()) == r.corank);
  return emit(rep, c.out, "coker");
}

}  // namespace

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CLI::App app{"Exact verification suites for oKLR, Hecke, R/K-matrix and Schur-Weyl data"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  Common com;
  Params P;
  if (const char* env = std::getenv("BSW_SEED")) {
    try {
      com.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: BSW_SEED must be a nonnegative integer\n";
      return 2;
    }
  }
  auto common = [&](CLI::App* s) {
    s->add_option("--config", com.config, "YAML config file; its keys act as flags");
    s->add_option("--out", com.out, "write the report here instead of stdout");
    s->add_option("--seed", com.seed, "random seed (default $BSW_SEED or 1)");
    s->add_option("--mode", com.mode, "symbolic or random")->check(CLI::IsMember({"symbolic", "random"}));
  };
  auto params = [&](CLI::App* s) {
    s->add_option("--N", P.N, "dimension of the fundamental representation");
    s->add_option("--variant", P.variant, "K-matrix variant: mu1, restrictable, nonrestrictable");
    s->add_option("--p0", P.p0, "parameter p0 (expression in q)");
    s->add_option("--p1", P.p1, "parameter p1 (expression in q)");
    s->add_option("--p", P.p, "parameter p of the mu1 variant");
    s->add_option("--bound", P.bound, "vertex labels |n| <= bound");
    s->add_option("--framing", P.framing, "theta-twisted or at-vertex");
  };
  CLI::App* rk = app.add_subcommand("verify-rk", "R/K identities");
  common(rk);
  params(rk);
  rk->add_option("--n", P.n, "number of tensor factors");
  rk->add_option("--orientation", P.orientation, "proof or lemma");
  CLI::App* he = app.add_subcommand("verify-hecke", "completed affine Hecke relations and finite type B");
  common(he);
  params(he);
  he->add_option("--n", P.n, "rank");
  CLI::App* ok = app.add_subcommand("verify-oklr", "oKLR relations in the polynomial representation");
  common(ok);
  params(ok);
  ok->add_option("--quiver", P.quiver, "YAML quiver file");
  ok->add_option("--datum", P.datum, "typeA or affineD when no quiver file is given");
  ok->add_option("--beta", P.beta, "vertex names i with beta = sum of theta-orbits")->delimiter(',');
  ok->add_option("--reading", P.reading, "vertex or theta-source");
  ok->add_flag("--onedim", P.onedim, "also classify one-dimensional modules");
  CLI::App* bk = app.add_subcommand("verify-bkr", "oKLR relations on BKR images");
  common(bk);
  bk->add_option("--ord", P.ord, "order of q (0 = generic)");
  bk->add_option("--xi", P.xi, "+-q^e or symbolic");
  bk->add_option("--p0", P.p0, "parameter p0");
  bk->add_option("--p1", P.p1, "parameter p1");
  bk->add_option("--bound", P.bound, "truncation of the vertex set");
  bk->add_option("--beta", P.beta, "vertex names")->delimiter(',');
  bk->add_option("--reading", P.reading, "coefficient reading: target, source-left, right");
  bk->add_flag("--klr-only", P.klr_only, "skip relations involving tau 0");
  CLI::App* sw = app.add_subcommand("verify-sw", "Schur-Weyl lattice stability, restriction and relations");
  common(sw);
  params(sw);
  sw->add_option("--beta", P.beta, "odd integer vertex labels")->delimiter(',');
  sw->add_option("--trials", P.trials, "random lines per regularity test");
  CLI::App* bq = app.add_subcommand("build-quiver", "build and validate an enhanced quiver");
  common(bq);
  params(bq);
  bq->add_option("--datum", P.datum, "typeA or affineD");
  bq->add_option("--quiver", P.quiver, "YAML quiver file");
  bq->add_option("--dot", P.dot, "write Graphviz DOT here");
  CLI::App* ck = app.add_subcommand("coker", "cokernel of the framed K-matrix at x_1 = 0");
  common(ck);
  params(ck);
  ck->add_option("--vertex", P.vertex, "vertex label n");
  ck->add_option("--unit", P.unit, "unit c_i(z) scaling K");

  YAML::Node cfg;
  try {
    // Config keys are spliced in right after the subcommand so explicit flags win.
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
      if (args[i] != "--config") continue;
      cfg = load_yaml(args[i + 1]);
      if (!args.empty()) {
        auto tok = config_tokens(cfg, args[i + 1]);
        args.insert(args.begin() + 1, tok.begin(), tok.end());
      }
      break;
    }
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const YAML::Exception& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return 2;
  }
  try {
    if (P.trials < 1 || P.bound < 1 || P.N < 1 || P.n < 1) throw ConfigError("bounds must be positive");
    if (*rk) return cmd_verify_rk(com, P);
    if (*he) return cmd_verify_hecke(com, P);
    if (*ok) return cmd_verify_oklr(com, P, cfg);
    if (*bk) return cmd_verify_bkr(com, P);
    if (*sw) return cmd_verify_sw(com, P);
    if (*bq) return cmd_build_quiver(com, P, cfg);
    if (*ck) return cmd_coker(com, P);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const YAML::Exception& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace bsw
