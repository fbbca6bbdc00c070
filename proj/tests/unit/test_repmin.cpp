#include "doctest.h"
#include "essdim/group.hpp"
#include "essdim/oracles.hpp"
#include "essdim/repmin.hpp"
#include "essdim/symplectic.hpp"

using namespace essdim;
using namespace essdim::group;
using namespace essdim::repmin;

namespace {

Character character_on(const Subgroup& H, std::uint64_t e, const std::vector<std::pair<Elem, std::int64_t>>& vals) {
  std::vector<std::int64_t> v(H.parent().order(), -1);
  for (auto [g, x] : vals) v[g] = x;
  return Character{H, e, v};
}

std::uint64_t center_rank(const FiniteGroup& G) { return abelian_invariants(center(G)).rank(); }

}  // namespace

TEST_CASE("extend_character") {
  const auto C4 = cyclic(4);
  const Elem two[] = {2};
  const auto Z = generated_subgroup(C4, two);
  const auto chiZ = character_on(Z, 2, {{0, 0}, {2, 1}});
  CHECK(is_character(chiZ));
  const auto chi = extend_character(whole_group(C4), chiZ, 4);
  CHECK(is_character(chi));
  CHECK(chi(2) == 2);  // restricts: zeta_2 = zeta_4^2
  CHECK((chi(1) == 1 || chi(1) == 3));
  CHECK(chi(1) == 1);  // lexicographically smallest

  // H = Z: unchanged
  const auto same = extend_character(Z, chiZ, 2);
  CHECK(same.values == chiZ.values);

  const auto V = direct_product(cyclic(2), cyclic(2));  // codes 2a + b
  const Elem diag[] = {3};
  const auto D = generated_subgroup(V, diag);
  const auto chiD = character_on(D, 2, {{0, 0}, {3, 1}});
  const auto ext = extend_character(whole_group(V), chiD, 2);
  CHECK(is_character(ext));
  CHECK(ext(3) == 1);

  CHECK_THROWS_AS(extend_character(whole_group(C4), chiZ, 2), Error);
}

TEST_CASE("induction and kernels") {
  const auto Q = quaternion8();  // code 2*unit + sign; i = 2
  const Elem i_gen[] = {2};
  const auto H = generated_subgroup(Q, i_gen);
  CHECK(H.order() == 4);
  // faithful character of <i>: i -> zeta_4
  std::vector<std::pair<Elem, std::int64_t>> vals;
  Elem x = Q.identity();
  for (int k = 0; k < 4; ++k) {
    vals.push_back({x, k});
    x = Q.mul(x, 2);
  }
  const auto chi = character_on(H, 4, vals);
  CHECK(is_character(chi));
  const auto rho = induce_monomial(Q, H, chi);
  CHECK(rho.degree == 2);
  CHECK(is_homomorphism(rho, Q));
  CHECK(rep_kernel(rho, Q).is_trivial());

  // H = G gives the character itself
  const auto C4 = cyclic(4);
  const auto psi = character_on(whole_group(C4), 4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  const auto r1 = induce_monomial(C4, whole_group(C4), psi);
  CHECK(r1.degree == 1);
  for (Elem g = 0; g < 4; ++g) CHECK(r1.images[g].exponents[0] == psi(g));

  // regular representation = induced from the trivial subgroup
  const auto reg = induce_monomial(C4, trivial_subgroup(C4), character_on(trivial_subgroup(C4), 1, {{0, 0}}));
  CHECK(reg.degree == 4);
  CHECK(rep_kernel(reg, C4).is_trivial());

  // trivial rep: kernel is everything
  const auto triv = from_character(character_on(whole_group(C4), 1, {{0, 0}, {1, 0}, {2, 0}, {3, 0}}));
  CHECK(rep_kernel(triv, C4).order() == 4);
}

TEST_CASE("minimal faithful representation: examples") {
  const auto E = direct_product(direct_product(cyclic(3), cyclic(3)), cyclic(3));
  CHECK(minimal_faithful_rep(E, 3).degree == 3);
  CHECK(minimal_faithful_rep(quaternion8(), 2).degree == 2);
  const auto X = extraspecial(3, 2, ExtraspecialType::ExponentP);
  const auto rho = minimal_faithful_rep(X, 3);
  CHECK(rho.degree == 9);
  CHECK(rep_kernel(rho, X).is_trivial());
  CHECK(minimal_faithful_rep(heisenberg(3), 3).degree == 3);
  CHECK(minimal_faithful_rep(cyclic(1), 2).degree == 0);
  CHECK_THROWS_AS(minimal_faithful_rep(dihedral(3), 3), Error);
}

TEST_CASE("minimal faithful representation: degree formula and faithfulness") {
  const std::vector<std::pair<FiniteGroup, std::uint64_t>> groups = {
      {cyclic(16), 2},
      {direct_product(cyclic(8), cyclic(2)), 2},
      {direct_product(quaternion8(), cyclic(4)), 2},
      {direct_product(quaternion8(), cyclic(2)), 2},
      {direct_product(dihedral(4), cyclic(8)), 2},
      {extraspecial(2, 3, ExtraspecialType::Quaternion), 2},
      {extraspecial(3, 1, ExtraspecialType::ExponentP2), 3},
      {semidirect_cyclic(3, 4, 2), 3},
      {semidirect_cyclic(3, 3, 1), 3},
      {direct_product(heisenberg(3), cyclic(9)), 3},
      {jly_quotient(3, 2), 3},
  };
  for (const auto& [G, p] : groups) {
    const auto rho = minimal_faithful_rep(G, p);
    CHECK(is_homomorphism(rho, G));
    CHECK(rep_kernel(rho, G).is_trivial());
    const auto s = symplectic::sqrt_order(symplectic::commutator_form(G, p));
    CHECK(rho.degree == s + center_rank(G) - 1);
    CHECK(rho.degree == formula_degree(G, p));
  }
}

TEST_CASE("minimality sweep for small orders") {
  // No single induced linear character beats the formula degree.
  const std::vector<std::pair<FiniteGroup, std::uint64_t>> groups = {
      {quaternion8(), 2},
      {dihedral(4), 2},
      {direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)), 2},
      {heisenberg(3), 3},
      {extraspecial(3, 1, ExtraspecialType::ExponentP2), 3},
      {direct_product(quaternion8(), cyclic(2)), 2},
      {direct_product(quaternion8(), cyclic(4)), 2},
      {extraspecial(2, 2, ExtraspecialType::Dihedral), 2},
  };
  for (const auto& [G, p] : groups) CHECK(oracles::min_faithful_induced_degree(G) >= formula_degree(G, p));
  // and for groups with cyclic center the formula degree is attained by one induced character
  CHECK(oracles::min_faithful_induced_degree(quaternion8()) == 2);
  CHECK(oracles::min_faithful_induced_degree(heisenberg(3)) == 3);
}
