#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tcl/errors.hpp"

namespace tcl {

// Hard cap on uniformity for element-wise group work: S_8 has 40320 elements,
// which keeps full coset tables and brute-force sweeps cheap.
inline constexpr int kMaxPermDegree = 8;

// A permutation of {1..r}, r <= kMaxPermDegree. Value type, totally ordered.
class Permutation {
 public:
  Permutation() : r_(1) { img_[0] = 1; }

  static Permutation identity(int r);
  // images[i-1] is the image of i (1-based values).
  static Permutation from_images(const std::vector<int>& images);
  // Accepts "(1 2 3)(4 5)", "(123)(45)", or "()" / "id".
  static Permutation from_cycles(int r, const std::string& text);

  int degree() const { return r_; }
  int apply(int i) const { return img_[i - 1]; }
  int operator()(int i) const { return apply(i); }

  Permutation compose(const Permutation& rhs) const;  // (this∘rhs)(i) = this(rhs(i))
  Permutation inverse() const;
  bool is_identity() const;
  int order() const;

  // Multiset of cycle lengths, sorted descending. Conjugacy in S_r is
  // equality of cycle types.
  std::vector<int> cycle_type() const;
  std::string cycle_string() const;

  // Position in S_r under the Lehmer-code ordering, 0..r!-1.
  uint32_t rank() const;
  static Permutation unrank(int r, uint32_t rank);
  static uint32_t factorial(int r);

  // Action on an ordered tuple: out[j-1] = in[inverse(j)-1], i.e. the entry at
  // position i moves to position pi(i).
  template <typename T>
  std::vector<T> act_tuple(const std::vector<T>& in) const {
    if (static_cast<int>(in.size()) != r_)
      throw dimension_error("act_tuple: tuple length != degree");
    Permutation inv = inverse();
    std::vector<T> out(in.size());
    for (int j = 1; j <= r_; ++j) out[j - 1] = in[inv.apply(j) - 1];
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  uint8_t r_;
  std::array<uint8_t, kMaxPermDegree> img_{};  // zero beyond r_
};

Permutation compose(const Permutation& p, const Permutation& q);

// The k-th power of the canonical r-cycle (1 2 ... r): i -> i + k (mod r).
// Its cycle type is (r/m)^m with m = gcd(r,k). Throws invalid_residue_error
// when k = 0 (mod r).
Permutation cyc_power(int r, int k);

}  // namespace tcl
