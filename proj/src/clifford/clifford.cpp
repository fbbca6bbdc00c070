#include "essdim/clifford.hpp"

#include <bit>

namespace essdim::clifford {

namespace {

std::uint32_t to_mask(const std::vector<unsigned>& I, unsigned n) {
  std::uint32_t m = 0;
  unsigned prev = 0;
  for (unsigned i : I) {
    require(i >= 1 && i <= n, ErrorCode::IndexOutOfRange,
            "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    require(i > prev, ErrorCode::InvalidArgument, "indices must be strictly increasing");
    prev = i;
    m |= std::uint32_t{1} << (i - 1);
  }
  return m;
}

std::vector<unsigned> from_mask(std::uint32_t m) {
  std::vector<unsigned> out;
  for (unsigned i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i + 1);
  return out;
}

bool admissible(std::uint32_t mask, bool even_only) { return !even_only || std::popcount(mask) % 2 == 0; }

std::uint32_t mask_rank(std::uint32_t m, bool even_only) { return even_only ? m >> 1 : m; }

// k-th even mask: bits above 0 are k's bits shifted up, bit 0 fixes parity.
std::uint32_t mask_unrank(std::uint32_t k, bool even_only) {
  if (!even_only) return k;
  const std::uint32_t hi = k << 1;
  return hi | (std::popcount(hi) % 2);
}

}  // namespace

std::pair<std::uint32_t, bool> mask_mul(std::uint32_t x, std::uint32_t y) {
  // Moving each e_j of y left past the larger indices of x costs one sign
  // each; every shared index then contributes e_i^2 = -1.
  unsigned t = 0;
  for (std::uint32_t rest = y; rest; rest &= rest - 1) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(rest));
    t += static_cast<unsigned>(std::popcount(x >> (j + 1)));
  }
  t += static_cast<unsigned>(std::popcount(x & y));
  return {x ^ y, t % 2 == 1};
}

std::string to_string(const SignedSubset& x) {
  if (x.indices.empty()) return x.sign < 0 ? "-1" : "1";
  std::string s = x.sign < 0 ? "-e_{" : "e_{";
  for (std::size_t i = 0; i < x.indices.size(); ++i) s += (i ? "," : "") + std::to_string(x.indices[i]);
  return s + "}";
}

SignedSubset clifford_mul(const SignedSubset& x, const SignedSubset& y, unsigned n) {
  require(n <= 32, ErrorCode::InvalidArgument, "clifford_mul supports n <= 32");
  require(x.sign == 1 || x.sign == -1, ErrorCode::InvalidArgument, "sign must be +1 or -1");
  require(y.sign == 1 || y.sign == -1, ErrorCode::InvalidArgument, "sign must be +1 or -1");
  const auto [m, flip] = mask_mul(to_mask(x.indices, n), to_mask(y.indices, n));
  return SignedSubset{x.sign * y.sign * (flip ? -1 : 1), from_mask(m)};
}

int commutator_pairing(const std::vector<unsigned>& I, const std::vector<unsigned>& J) {
  require(I.size() % 2 == 0 && J.size() % 2 == 0, ErrorCode::OddSubset, "commutator pairing needs even subsets");
  std::size_t common = 0;
  for (unsigned i : I)
    for (unsigned j : J)
      if (i == j) ++common;
  return common % 2 ? -1 : 1;
}

SignedSubset gamma_element(unsigned n, bool even_only, group::Elem g) {
  const std::uint32_t m = mask_unrank(g / 2, even_only);
  require(m < (std::uint32_t{1} << n), ErrorCode::IndexOutOfRange, "element index out of range");
  return SignedSubset{g % 2 ? -1 : 1, from_mask(m)};
}

group::Elem gamma_index(unsigned n, bool even_only, const SignedSubset& x) {
  const std::uint32_t m = to_mask(x.indices, n);
  require(admissible(m, even_only), ErrorCode::InvalidArgument, "odd subset in the even group");
  return 2 * mask_rank(m, even_only) + (x.sign < 0 ? 1 : 0);
}

group::FiniteGroup gamma_group(unsigned n, bool even_only) {
  require(n >= 2, ErrorCode::InvalidArgument, "gamma_group needs n >= 2");
  const std::uint64_t order = std::uint64_t{1} << (even_only ? n : n + 1);
  require(n <= 16 && order <= group::FiniteGroup::kMaxOrder, ErrorCode::OrderCapExceeded,
          "gamma_group(" + std::to_string(n) + ") has order 2^" + std::to_string(even_only ? n : n + 1) +
              ", above the table cap " + std::to_string(group::FiniteGroup::kMaxOrder));
  const std::uint32_t count = static_cast<std::uint32_t>(order / 2);
  std::vector<std::uint32_t> masks(count);
  for (std::uint32_t k = 0; k < count; ++k) masks[k] = mask_unrank(k, even_only);
  std::vector<std::string> labels;
  for (std::uint32_t k = 0; k < count; ++k)
    for (int s = 0; s < 2; ++s) labels.push_back(to_string(SignedSubset{s ? -1 : 1, from_mask(masks[k])}));
  return group::FiniteGroup::from_rule(
      order,
      [&](group::Elem a, group::Elem b) {
        const auto [m, flip] = mask_mul(masks[a / 2], masks[b / 2]);
        const unsigned sign = (a % 2) ^ (b % 2) ^ (flip ? 1u : 0u);
        return static_cast<group::Elem>(2 * mask_rank(m, even_only) + sign);
      },
      std::move(labels));
}

std::string_view to_string(CenterType t) {
  switch (t) {
    case CenterType::Z2:
      return "Z2";
    case CenterType::Z4:
      return "Z4";
    case CenterType::Z2xZ2:
      return "Z2xZ2";
  }
  return "?";
}

CenterType gamma_center_type(unsigned n) {
  require(n >= 2, ErrorCode::InvalidArgument, "gamma_center_type needs n >= 2");
  if (n % 2) return CenterType::Z2;
  return n % 4 == 2 ? CenterType::Z4 : CenterType::Z2xZ2;
}

std::uint64_t ed_gamma(unsigned n) {
  require(n >= 2 && n <= 64, ErrorCode::InvalidArgument, "ed_gamma needs 2 <= n <= 64");
  if (n % 2) return std::uint64_t{1} << ((n - 1) / 2);
  const std::uint64_t base = std::uint64_t{1} << ((n - 2) / 2);
  return n % 4 == 2 ? base : base + 1;
}

}  // namespace essdim::clifford
