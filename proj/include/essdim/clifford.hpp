#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "essdim/group.hpp"

namespace essdim::clifford {

/// ±e_I in the Clifford algebra with e_i^2 = -1 and e_i e_j = -e_j e_i.
struct SignedSubset {
  int sign = 1;
  std::vector<unsigned> indices;  // strictly increasing, 1-based

  friend bool operator==(const SignedSubset&, const SignedSubset&) = default;
};

std::string to_string(const SignedSubset& x);

SignedSubset clifford_mul(const SignedSubset& x, const SignedSubset& y, unsigned n);

/// (-1)^{|I ∩ J|} for even subsets I, J.
int commutator_pairing(const std::vector<unsigned>& I, const std::vector<unsigned>& J);

/// Bitmask form: bit i-1 set iff e_i occurs. Returns the product mask and
/// whether the sign flips.
std::pair<std::uint32_t, bool> mask_mul(std::uint32_t x, std::uint32_t y);

/// The group {±e_I : |I| even} (even_only) or all {±e_I}, I ⊆ {1..n}.
/// Element 2k+s is the k-th admissible mask in increasing order, with sign
/// bit s (s = 1 for the negative element).
group::FiniteGroup gamma_group(unsigned n, bool even_only = true);

/// Inverse of the indexing above.
SignedSubset gamma_element(unsigned n, bool even_only, group::Elem g);
group::Elem gamma_index(unsigned n, bool even_only, const SignedSubset& x);

enum class CenterType { Z2, Z4, Z2xZ2 };

std::string_view to_string(CenterType t);

CenterType gamma_center_type(unsigned n);

/// Closed form: 2^{(n-1)/2} (n odd), 2^{(n-2)/2} (n = 2 mod 4), 2^{(n-2)/2} + 1 (4 | n).
std::uint64_t ed_gamma(unsigned n);

}  // namespace essdim::clifford
