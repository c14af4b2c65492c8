#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bsw/mrat.hpp"

namespace bsw {

constexpr int kMaxN = var::kMaxStrands;

// Signed permutation of {1..n}: img[l-1] = ±w(l).
class SignedPerm {
 public:
  SignedPerm() = default;
  static SignedPerm identity(int n);
  static SignedPerm gen(int k, int n);  // s_0 or s_k
  static SignedPerm from_images(const std::vector<int>& img);

  int n() const { return n_; }
  int operator()(int l) const;  // signed image of ±l
  SignedPerm operator*(const SignedPerm& o) const;  // (w*o)(l) = w(o(l))
  SignedPerm inverse() const;
  bool is_identity() const;
  bool has_sign() const;  // any negated index

  bool operator==(const SignedPerm& o) const { return n_ == o.n_ && img_ == o.img_; }
  bool operator!=(const SignedPerm& o) const { return !(*this == o); }
  bool operator<(const SignedPerm& o) const { return n_ != o.n_ ? n_ < o.n_ : img_ < o.img_; }
  // Embed into W_{n+shift+extra} acting on indices shift+1..shift+n.
  SignedPerm shifted(int shift, int total) const;

  std::string str() const;

 private:
  int n_ = 0;
  std::array<std::int8_t, kMaxN> img_{};
};

SignedPerm from_word(const std::vector<int>& word, int n);

// Left action on sequences: (w·ν)_{|w(l)|} = θ^{[w(l)<0]}(ν_l).
std::vector<int> act_on_sequence(const SignedPerm& w, const std::vector<int>& nu, const std::function<int(int)>& theta);

enum class VarConvention {
  Additive,        // x_l, x_{-l} = -x_l
  Multiplicative,  // X_l, X_{-l} = X_l^{-1}
  Spectral         // z_l, z_{-l} = z_l^{-1}
};

// Variable index of strand l for the convention.
int strand_var(VarConvention c, int l);

MRat act_on_variables(const SignedPerm& w, const MRat& f, VarConvention c);

}  // namespace bsw
