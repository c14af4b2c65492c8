#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bsw/mrat.hpp"

namespace bsw {

// Which vertex receives the framing from a K-matrix pole at X(i).
//   ThetaTwisted: λ(i) = d_{θ(i)}   (enhanced J-quiver definition)
//   AtVertex:     λ(i) = d_i        (the Hecke/BKR datum)
enum class FramingConvention { ThetaTwisted, AtVertex };

struct EnhancedQuiver {
  std::vector<std::string> names;
  std::vector<std::string> tags;  // module tag per vertex (may be empty)
  std::vector<std::optional<MRat>> label;  // X(i)
  std::vector<std::vector<int>> a;  // arrow multiplicities a[i][j] from i to j
  std::vector<int> theta;
  std::vector<int> lambda;
  std::vector<std::string> notes;

  int size() const { return static_cast<int>(names.size()); }
  int index_of(const std::string& name) const;  // throws if absent
  int add_vertex(const std::string& name, std::optional<MRat> x = std::nullopt, const std::string& tag = "");
  void resize_maps();
  bool fixed(int i) const { return theta[static_cast<std::size_t>(i)] == i; }
  int abar(int i, int j) const { return a[i][j] + a[j][i]; }
  int theta_lambda(int i) const { return lambda[i] + lambda[theta[i]]; }
  std::string seq_str(const std::vector<int>& nu) const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  bool ok() const { return violations.empty(); }
};

// Oriented cycles are legal for the cyclic BKR rows but not for J-quivers; with
// require_acyclic = false a cycle is only a warning.
ValidationReport validate(const EnhancedQuiver& Q, bool require_acyclic = false);

using DimVector = std::vector<int>;  // multiplicity per vertex index
using Composition = std::vector<int>;

int dim_norm(const DimVector& b);  // |β|
bool is_self_dual(const EnhancedQuiver& Q, const DimVector& b);
bool fixed_even(const EnhancedQuiver& Q, const DimVector& b);
// β = Σ ^θ i over the given vertices (with repetition).
DimVector theta_beta(const EnhancedQuiver& Q, const std::vector<int>& vertices);
// All compositions. Isotropic: Σ ^θν_k = β (throws on evenness/self-duality violations).
std::vector<Composition> compositions(const EnhancedQuiver& Q, const DimVector& b, bool isotropic);
// All self-dual β with |β|_θ = n (one ^θ-orbit multiset each).
std::vector<DimVector> all_theta_betas(const EnhancedQuiver& Q, int n);

enum class GenKind { E, X, Tau, Tau0 };
int generator_degree(const EnhancedQuiver& Q, GenKind kind, const Composition& nu, int k = 0);

// ξ for the BKR datum: either ε q^e or symbolic.
struct XiSpec {
  bool symbolic = false;
  int sign = 1;
  int qexp = 0;
};

struct BkrClassification {
  int row = 0;  // 1..8, 0 when the parameters fall outside the table
  std::string type;
  std::string fixed_points;
};

struct BkrQuiver {
  EnhancedQuiver Q;
  BkrClassification cls;
  int ord = 0;  // 0 for infinite order
};

// ord = 0 means q generic. p0, p1 are rational expressions in q (and ξ).
BkrQuiver build_bkr_quiver(int ord, const XiSpec& xi, const MRat& p0, const MRat& p1, int bound);

struct JDatum {
  std::vector<std::string> names;
  std::vector<std::string> tags;
  std::vector<MRat> X;
  std::vector<int> theta;
  // R-matrix denominators d_{V(i)V(j)}(z) keyed by module tags; z = var::z.
  std::map<std::pair<std::string, std::string>, MRat> rden;
  bool assume_symmetric = false;  // use d_ji when only d_ij is tabulated
  // K-matrix denominators d_{K,V(i)}(z) keyed by tag; missing -> λ = 0 with a note.
  std::map<std::string, MRat> kden;
  FramingConvention framing = FramingConvention::ThetaTwisted;
};

EnhancedQuiver quiver_from_jdatum(const JDatum& d);

// The tabulated affine type-D datum (N >= 5): vertices 0..N.
JDatum affine_d_datum(int N);

std::string export_dot(const EnhancedQuiver& Q);

}  // namespace bsw
