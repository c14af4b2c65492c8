#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bsw/mrat.hpp"

namespace bsw {

// Sparse square matrix over MRat. Column c is the image of basis vector c.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(int dim) : dim_(dim), rows_(static_cast<std::size_t>(dim)) {}
  static RatMatrix identity(int dim);
  static RatMatrix scalar(int dim, const MRat& c);

  int dim() const { return dim_; }
  MRat at(int r, int c) const;
  void set(int r, int c, const MRat& v);
  const std::vector<std::map<int, MRat>>& rows() const { return rows_; }

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator-() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix scaled(const MRat& c) const;
  bool is_zero() const;
  bool operator==(const RatMatrix& o) const { return (*this - o).is_zero(); }
  RatMatrix transform(const std::function<MRat(const MRat&)>& f) const;
  std::size_t nnz() const;
  std::string str() const;

 private:
  int dim_ = 0;
  std::vector<std::map<int, MRat>> rows_;
};

// A ⊗ B (Kronecker product, A acts on the left tensor factor).
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);
// Place a (d^2 x d^2) two-factor operator on factors k, k+1 (1-based) of (C^d)^{⊗n}.
RatMatrix on_factors(const RatMatrix& m, int d, int k, int n);
// Place a d x d operator on factor k of (C^d)^{⊗n}.
RatMatrix on_factor(const RatMatrix& m, int d, int k, int n);

}  // namespace bsw
