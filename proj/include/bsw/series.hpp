#pragma once

#include <vector>

#include "bsw/mrat.hpp"

namespace bsw {

// Power series in one variable truncated at t^D (coefficients c[0..D]).
class TruncSeries {
 public:
  TruncSeries(int order, std::vector<MRat> coeffs = {});
  int order() const { return d_; }
  const MRat& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  MRat& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  // this(g(t)); requires g(0) = 0.
  TruncSeries compose(const TruncSeries& g) const;
  bool operator==(const TruncSeries& o) const;

 private:
  int d_;
  std::vector<MRat> c_;
};

TruncSeries identity_series(int order);
TruncSeries series_comp_inverse(const TruncSeries& f, int order);

}  // namespace bsw
