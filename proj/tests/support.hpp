#pragma once

#include <string>

#include "bsw/quiver.hpp"

// Linear A segment on odd integers -m..m, theta(n) = -n, arrows n -> n+2.
inline bsw::EnhancedQuiver a_segment(int m) {
  bsw::EnhancedQuiver Q;
  for (int n = -m; n <= m; n += 2) Q.add_vertex(std::to_string(n), bsw::qpow(n));
  int sz = Q.size();
  for (int i = 0; i < sz; ++i) {
    Q.theta[i] = sz - 1 - i;
    if (i + 1 < sz) Q.a[i][i + 1] = 1;
  }
  return Q;
}

// beta = sum of ^theta i over the named vertices.
inline bsw::DimVector beta_of(const bsw::EnhancedQuiver& Q, std::initializer_list<const char*> names) {
  std::vector<int> vs;
  for (const char* s : names) vs.push_back(Q.index_of(s));
  return bsw::theta_beta(Q, vs);
}
