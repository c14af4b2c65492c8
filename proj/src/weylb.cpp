#include "bsw/weylb.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace bsw {

SignedPerm SignedPerm::identity(int n) {
  if (n < 0 || n > kMaxN) throw std::out_of_range("SignedPerm: n out of range");
  SignedPerm w;
  w.n_ = n;
  for (int l = 1; l <= n; ++l) w.img_[l - 1] = static_cast<std::int8_t>(l);
  return w;
}

SignedPerm SignedPerm::gen(int k, int n) {
  if (k < 0 || k >= n) throw std::out_of_range("generator index " + std::to_string(k) + " out of range for W_" + std::to_string(n));
  SignedPerm w = identity(n);
  if (k == 0) {
    w.img_[0] = -1;
  } else {
    w.img_[k - 1] = static_cast<std::int8_t>(k + 1);
    w.img_[k] = static_cast<std::int8_t>(k);
  }
  return w;
}

SignedPerm SignedPerm::from_images(const std::vector<int>& img) {
  SignedPerm w = identity(static_cast<int>(img.size()));
  std::vector<bool> seen(img.size() + 1, false);
  for (std::size_t i = 0; i < img.size(); ++i) {
    int a = std::abs(img[i]);
    if (a < 1 || a > static_cast<int>(img.size()) || seen[a]) throw std::invalid_argument("not a signed permutation");
    seen[a] = true;
    w.img_[i] = static_cast<std::int8_t>(img[i]);
  }
  return w;
}

int SignedPerm::operator()(int l) const {
  int a = std::abs(l);
  if (a < 1 || a > n_) throw std::out_of_range("SignedPerm index");
  int r = img_[a - 1];
  return l < 0 ? -r : r;
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  if (n_ != o.n_) throw std::invalid_argument("SignedPerm rank mismatch");
  SignedPerm r = identity(n_);
  for (int l = 1; l <= n_; ++l) r.img_[l - 1] = static_cast<std::int8_t>((*this)(o(l)));
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r = identity(n_);
  for (int l = 1; l <= n_; ++l) {
    int m = img_[l - 1];
    r.img_[std::abs(m) - 1] = static_cast<std::int8_t>(m < 0 ? -l : l);
  }
  return r;
}

bool SignedPerm::is_identity() const {
  for (int l = 1; l <= n_; ++l)
    if (img_[l - 1] != l) return false;
  return true;
}

bool SignedPerm::has_sign() const {
  for (int l = 1; l <= n_; ++l)
    if (img_[l - 1] < 0) return true;
  return false;
}

SignedPerm SignedPerm::shifted(int shift, int total) const {
  SignedPerm r = identity(total);
  for (int l = 1; l <= n_; ++l) {
    int m = img_[l - 1];
    r.img_[shift + l - 1] = static_cast<std::int8_t>(m < 0 ? m - shift : m + shift);
  }
  return r;
}

std::string SignedPerm::str() const {
  std::ostringstream os;
  os << "[";
  for (int l = 1; l <= n_; ++l) os << (l > 1 ? " " : "") << int(img_[l - 1]);
  os << "]";
  return os.str();
}

SignedPerm from_word(const std::vector<int>& word, int n) {
  SignedPerm w = SignedPerm::identity(n);
  for (int k : word) w = w * SignedPerm::gen(k, n);
  return w;
}

std::vector<int> act_on_sequence(const SignedPerm& w, const std::vector<int>& nu, const std::function<int(int)>& theta) {
  if (static_cast<int>(nu.size()) != w.n()) throw std::invalid_argument("act_on_sequence: length mismatch");
  std::vector<int> r(nu.size());
  for (int l = 1; l <= w.n(); ++l) {
    int m = w(l);
    r[static_cast<std::size_t>(std::abs(m) - 1)] = m < 0 ? theta(nu[static_cast<std::size_t>(l - 1)]) : nu[static_cast<std::size_t>(l - 1)];
  }
  return r;
}

int strand_var(VarConvention c, int l) {
  switch (c) {
    case VarConvention::Additive:
      return var::x(l);
    case VarConvention::Multiplicative:
      return var::X(l);
    case VarConvention::Spectral:
      return var::zs(l);
  }
  return -1;
}

MRat act_on_variables(const SignedPerm& w, const MRat& f, VarConvention c) {
  std::array<Mono, kNumVars> img;
  std::array<int, kNumVars> sg;
  for (int i = 0; i < kNumVars; ++i) {
    img[i] = Mono::of(i);
    sg[i] = 1;
  }
  for (int l = 1; l <= w.n(); ++l) {
    int m = w(l);
    int src = strand_var(c, l), dst = strand_var(c, std::abs(m));
    if (c == VarConvention::Additive) {
      img[src] = Mono::of(dst);
      sg[src] = m < 0 ? -1 : 1;
    } else {
      img[src] = Mono::of(dst, m < 0 ? -1 : 1);
    }
  }
  return f.map_monomial(img, sg);
}

}  // namespace bsw
