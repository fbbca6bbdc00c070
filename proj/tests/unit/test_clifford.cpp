#include <random>

#include "doctest.h"
#include "essdim/clifford.hpp"
#include "essdim/edim.hpp"
#include "essdim/oracles.hpp"

using namespace essdim;
using namespace essdim::clifford;

namespace {

std::vector<unsigned> subset_of(std::uint32_t mask) {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < 32; ++i)
    if (mask >> i & 1) out.push_back(i + 1);
  return out;
}

}  // namespace

TEST_CASE("clifford_mul examples") {
  const SignedSubset one{1, {}};
  const SignedSubset x{-1, {2, 5}};
  CHECK(clifford_mul(one, x, 6) == x);
  CHECK(clifford_mul(SignedSubset{1, {1}}, SignedSubset{1, {1}}, 3) == SignedSubset{-1, {}});
  CHECK(clifford_mul(SignedSubset{1, {1, 2}}, SignedSubset{1, {1, 3}}, 3) == SignedSubset{1, {2, 3}});
  CHECK(clifford_mul(SignedSubset{1, {1}}, SignedSubset{1, {2}}, 2) == SignedSubset{1, {1, 2}});
  CHECK(clifford_mul(SignedSubset{1, {2}}, SignedSubset{1, {1}}, 2) == SignedSubset{-1, {1, 2}});
  CHECK_THROWS_AS(clifford_mul(SignedSubset{1, {4}}, one, 3), Error);
  try {
    clifford_mul(SignedSubset{1, {0}}, one, 3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
}

TEST_CASE("clifford_mul matches token rewriting on all pairs, n <= 6") {
  for (unsigned n = 1; n <= 6; ++n)
    for (std::uint32_t a = 0; a < (1u << n); ++a)
      for (std::uint32_t b = 0; b < (1u << n); ++b)
        for (int sa : {1, -1}) {
          const auto got = clifford_mul(SignedSubset{sa, subset_of(a)}, SignedSubset{1, subset_of(b)}, n);
          const auto [sign, word] = oracles::token_rewrite_mul(sa, subset_of(a), 1, subset_of(b));
          CHECK(got.sign == sign);
          CHECK(got.indices == word);
        }
}

TEST_CASE("clifford_mul is associative on random triples") {
  std::mt19937_64 rng(7);
  for (unsigned n = 2; n <= 12; ++n)
    for (int k = 0; k < 2000; ++k) {
      const std::uint32_t m = (1u << n) - 1;
      const SignedSubset x{rng() % 2 ? 1 : -1, subset_of(static_cast<std::uint32_t>(rng()) & m)};
      const SignedSubset y{rng() % 2 ? 1 : -1, subset_of(static_cast<std::uint32_t>(rng()) & m)};
      const SignedSubset z{rng() % 2 ? 1 : -1, subset_of(static_cast<std::uint32_t>(rng()) & m)};
      CHECK(clifford_mul(clifford_mul(x, y, n), z, n) == clifford_mul(x, clifford_mul(y, z, n), n));
    }
}

TEST_CASE("commutator pairing") {
  CHECK(commutator_pairing({1, 2}, {3, 4}) == 1);
  CHECK(commutator_pairing({1, 2}, {2, 3}) == -1);
  CHECK(commutator_pairing({1, 2}, {1, 2}) == 1);
  CHECK_THROWS_AS(commutator_pairing({1}, {1, 2}), Error);
  for (unsigned n = 2; n <= 8; ++n)
    for (std::uint32_t a = 0; a < (1u << n); ++a) {
      if (std::popcount(a) % 2) continue;
      for (std::uint32_t b = 0; b < (1u << n); ++b) {
        if (std::popcount(b) % 2) continue;
        const SignedSubset x{1, subset_of(a)}, y{1, subset_of(b)};
        // inverses: e_I^{-1} = e_I^3
        const auto xi = clifford_mul(clifford_mul(x, x, n), x, n);
        const auto yi = clifford_mul(clifford_mul(y, y, n), y, n);
        const auto c = clifford_mul(clifford_mul(clifford_mul(x, y, n), xi, n), yi, n);
        CHECK(c.indices.empty());
        CHECK(c.sign == commutator_pairing(subset_of(a), subset_of(b)));
      }
    }
}

TEST_CASE("gamma groups") {
  const auto G2 = gamma_group(2);
  CHECK(G2.order() == 4);
  const auto G10 = gamma_group(10);
  CHECK(G10.order() == 1024);
  const auto D = group::derived_subgroup(G10);
  CHECK(D.order() == 2);
  CHECK(D.contains(gamma_index(10, true, SignedSubset{-1, {}})));
  const auto Z4 = group::center(gamma_group(4));
  CHECK(Z4.order() == 4);
  CHECK(group::abelian_invariants(Z4).invariant_factors == std::vector<std::uint64_t>{2, 2});
  CHECK_THROWS_AS(gamma_group(13), Error);
  CHECK_THROWS_AS(gamma_group(12, false), Error);
  CHECK(gamma_group(11, false).order() == 4096);

  for (unsigned n = 2; n <= 6; ++n)
    for (bool even : {true, false}) {
      const auto G = gamma_group(n, even);
      for (group::Elem g = 0; g < G.order(); ++g) CHECK(gamma_index(n, even, gamma_element(n, even, g)) == g);
    }
}

TEST_CASE("center types") {
  CHECK(gamma_center_type(7) == CenterType::Z2);
  CHECK(gamma_center_type(6) == CenterType::Z4);
  CHECK(gamma_center_type(8) == CenterType::Z2xZ2);
  const std::map<CenterType, std::vector<std::uint64_t>> shape = {
      {CenterType::Z2, {2}}, {CenterType::Z4, {4}}, {CenterType::Z2xZ2, {2, 2}}};
  for (unsigned n = 2; n <= 12; ++n) {
    const auto G = gamma_group(n);
    CHECK(G.order() == (1u << n));
    CHECK(group::derived_subgroup(G).order() == (n == 2 ? 1u : 2u));
    CHECK(group::abelian_invariants(group::center(G)).invariant_factors == shape.at(gamma_center_type(n)));
  }
}

TEST_CASE("ed_gamma closed form equals the p-group formula on the table") {
  CHECK(ed_gamma(5) == 4);
  CHECK(ed_gamma(6) == 4);
  CHECK(ed_gamma(8) == 9);
  edim::FieldProfile f;
  f.root_level[2] = 2;
  for (unsigned n = 2; n <= 10; ++n) {
    const auto b = edim::ed_pgroup(gamma_group(n), 2, f);
    CHECK(b.is_exact());
    CHECK(b.lower == static_cast<std::int64_t>(ed_gamma(n)));
  }
}

TEST_CASE("quotient by a non-(-1) central element is extraspecial") {
  for (unsigned n : {4u, 8u}) {
    const auto G = gamma_group(n);
    std::vector<unsigned> all;
    for (unsigned i = 1; i <= n; ++i) all.push_back(i);
    const group::Elem eta = gamma_index(n, true, SignedSubset{1, all});
    const group::Elem gen[] = {eta};
    const auto Q = group::quotient(G, group::generated_subgroup(G, gen)).group;
    CHECK(Q.order() == (1u << (n - 1)));
    CHECK(group::center(Q).order() == 2);
    CHECK(group::derived_subgroup(Q) == group::center(Q));
    const auto A = group::quotient(Q, group::center(Q)).group;
    CHECK(group::exponent(A) == 2);
  }
}
