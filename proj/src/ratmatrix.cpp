#include "bsw/ratmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace bsw {

RatMatrix RatMatrix::identity(int dim) { return scalar(dim, MRat(1)); }

RatMatrix RatMatrix::scalar(int dim, const MRat& c) {
  RatMatrix m(dim);
  if (!c.is_zero())
    for (int i = 0; i < dim; ++i) m.rows_[static_cast<std::size_t>(i)][i] = c;
  return m;
}

MRat RatMatrix::at(int r, int c) const {
  const auto& row = rows_.at(static_cast<std::size_t>(r));
  auto it = row.find(c);
  return it == row.end() ? MRat() : it->second;
}

void RatMatrix::set(int r, int c, const MRat& v) {
  auto& row = rows_.at(static_cast<std::size_t>(r));
  if (v.is_zero())
    row.erase(c);
  else
    row[c] = v;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
  RatMatrix r = *this;
  for (int i = 0; i < dim_; ++i)
    for (const auto& [c, v] : o.rows_[static_cast<std::size_t>(i)]) {
      auto& row = r.rows_[static_cast<std::size_t>(i)];
      auto it = row.find(c);
      if (it == row.end()) {
        row[c] = v;
      } else {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
      }
    }
  return r;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix r = *this;
  for (auto& row : r.rows_)
    for (auto& [c, v] : row) v = -v;
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const { return *this + (-o); }

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
  RatMatrix r(dim_);
  for (int i = 0; i < dim_; ++i) {
    std::map<int, std::vector<MRat>> acc;
    for (const auto& [k, a] : rows_[static_cast<std::size_t>(i)])
      for (const auto& [c, b] : o.rows_[static_cast<std::size_t>(k)]) acc[c].push_back(a * b);
    for (auto& [c, terms] : acc) {
      MRat s = terms[0];
      for (std::size_t t = 1; t < terms.size(); ++t) s += terms[t];
      if (!s.is_zero()) r.rows_[static_cast<std::size_t>(i)][c] = s;
    }
  }
  return r;
}

RatMatrix RatMatrix::scaled(const MRat& c) const {
  if (c.is_zero()) return RatMatrix(dim_);
  RatMatrix r = *this;
  for (auto& row : r.rows_)
    for (auto& [k, v] : row) v = c * v;
  return r;
}

bool RatMatrix::is_zero() const {
  for (const auto& row : rows_)
    for (const auto& [c, v] : row)
      if (!v.is_zero()) return false;
  return true;
}

RatMatrix RatMatrix::transform(const std::function<MRat(const MRat&)>& f) const {
  RatMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (const auto& [c, v] : rows_[static_cast<std::size_t>(i)]) r.set(i, c, f(v));
  return r;
}

std::size_t RatMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < dim_; ++i)
    for (const auto& [c, v] : rows_[static_cast<std::size_t>(i)]) os << "[" << i << "," << c << "] " << v.str() << "\n";
  return os.str();
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  int da = a.dim(), db = b.dim();
  RatMatrix r(da * db);
  for (int i = 0; i < da; ++i)
    for (const auto& [j, x] : a.rows()[static_cast<std::size_t>(i)])
      for (int k = 0; k < db; ++k)
        for (const auto& [l, y] : b.rows()[static_cast<std::size_t>(k)]) r.set(i * db + k, j * db + l, x * y);
  return r;
}

RatMatrix on_factors(const RatMatrix& m, int d, int k, int n) {
  int left = 1, right = 1;
  for (int i = 1; i < k; ++i) left *= d;
  for (int i = k + 2; i <= n; ++i) right *= d;
  return kron(kron(RatMatrix::identity(left), m), RatMatrix::identity(right));
}

RatMatrix on_factor(const RatMatrix& m, int d, int k, int n) {
  int left = 1, right = 1;
  for (int i = 1; i < k; ++i) left *= d;
  for (int i = k + 1; i <= n; ++i) right *= d;
  return kron(kron(RatMatrix::identity(left), m), RatMatrix::identity(right));
}

}  // namespace bsw
