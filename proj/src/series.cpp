#include "bsw/series.hpp"

#include <stdexcept>

namespace bsw {

TruncSeries::TruncSeries(int order, std::vector<MRat> coeffs) : d_(order), c_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("negative series order");
  c_.resize(static_cast<std::size_t>(order + 1));
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  TruncSeries r(std::min(d_, o.d_));
  for (int k = 0; k <= r.d_; ++k) r[k] = (*this)[k] + o[k];
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  TruncSeries r(std::min(d_, o.d_));
  for (int i = 0; i <= r.d_; ++i) {
    if ((*this)[i].is_zero()) continue;
    for (int j = 0; i + j <= r.d_; ++j) r[i + j] += (*this)[i] * o[j];
  }
  return r;
}

TruncSeries TruncSeries::compose(const TruncSeries& g) const {
  if (!g[0].is_zero()) throw std::invalid_argument("compose: inner series must vanish at 0");
  int d = std::min(d_, g.d_);
  TruncSeries r(d), pw(d);
  pw[0] = MRat(1);
  for (int k = 0; k <= d; ++k) {
    if (!(*this)[k].is_zero())
      for (int j = 0; j <= d; ++j) r[j] += (*this)[k] * pw[j];
    pw = pw * g;
  }
  return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
  int d = std::min(d_, o.d_);
  for (int k = 0; k <= d; ++k)
    if (!ratfun_eq((*this)[k], o[k])) return false;
  return true;
}

TruncSeries identity_series(int order) {
  TruncSeries r(order);
  if (order >= 1) r[1] = MRat(1);
  return r;
}

TruncSeries series_comp_inverse(const TruncSeries& f, int order) {
  if (order > f.order()) throw std::invalid_argument("series_comp_inverse: order exceeds input precision");
  if (!f[0].is_zero()) throw std::invalid_argument("series_comp_inverse: f(0) must be 0");
  if (order >= 1 && f[1].is_zero()) throw std::domain_error("series_comp_inverse: non-invertible linear coefficient");
  TruncSeries g(order);
  if (order == 0) return g;
  MRat a1inv = f[1].inv();
  g[1] = a1inv;
  // Fix g[k] so that the t^k coefficient of f(g) vanishes; only f[1]*g[k] involves g[k].
  for (int k = 2; k <= order; ++k) {
    TruncSeries fk(order);
    for (int i = 0; i <= order; ++i) fk[i] = f[i];
    MRat c = fk.compose(g)[k];
    g[k] = -(c * a1inv);
  }
  return g;
}

}  // namespace bsw
