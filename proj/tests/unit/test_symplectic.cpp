#include "doctest.h"
#include "essdim/group.hpp"
#include "essdim/oracles.hpp"
#include "essdim/symplectic.hpp"

using namespace essdim;
using namespace essdim::group;
using namespace essdim::symplectic;

namespace {

// L^perp == L, checked by direct evaluation.
bool is_maximal_isotropic(const SymplecticModule& M, const Subgroup& L) {
  for (std::size_t a = 0; a < M.A.order(); ++a) {
    if (L.contains(Elem(a))) continue;
    bool orth = true;
    for (Elem x : L.members()) orth = orth && M.pairing(Elem(a), x) == 0;
    if (orth) return false;
  }
  return true;
}

struct Case {
  FiniteGroup G;
  std::uint64_t p;
};

std::vector<Case> cases() {
  return {{cyclic(8), 2},
          {quaternion8(), 2},
          {dihedral(4), 2},
          {heisenberg(3), 3},
          {heisenberg(5), 5},
          {extraspecial(2, 2, ExtraspecialType::Dihedral), 2},
          {extraspecial(2, 2, ExtraspecialType::Quaternion), 2},
          {extraspecial(3, 2, ExtraspecialType::ExponentP2), 3},
          {semidirect_cyclic(3, 2, 1), 3},
          {semidirect_cyclic(3, 4, 2), 3},
          {semidirect_cyclic(5, 2, 1), 5},
          {jly_quotient(2, 2), 2},
          {direct_product(quaternion8(), cyclic(4)), 2},
          {direct_product(heisenberg(3), cyclic(3)), 3}};
}

}  // namespace

TEST_CASE("commutator form basics") {
  const auto M0 = commutator_form(direct_product(cyclic(4), cyclic(2)), 2);
  CHECK(M0.A.order() == 1);
  CHECK(symplectic_basis(M0).r() == 0);
  CHECK(sqrt_order(M0) == 1);
  CHECK(lagrangian(M0, symplectic_basis(M0)).is_trivial());

  const auto H = heisenberg(3);
  const auto M = commutator_form(H, 3);
  CHECK(M.A.order() == 9);
  CHECK(M.n == 3);
  CHECK(oracles::snf_invariants(M.A, whole_group(M.A).members()) == std::vector<std::uint64_t>{3, 3});
  // some pair pairs to exactly z
  bool found = false;
  for (std::size_t a = 0; a < 9; ++a)
    for (std::size_t b = 0; b < 9; ++b) found = found || M.pairing(Elem(a), Elem(b)) == 1;
  CHECK(found);
  // direct commutator evaluation
  for (std::size_t g = 0; g < H.order(); ++g)
    for (std::size_t h = 0; h < H.order(); ++h)
      CHECK(H.commutator(Elem(g), Elem(h)) == H.pow(M.z, (long long)M.pairing(M.projection[g], M.projection[h])));

  const auto J = commutator_form(jly_quotient(2, 2), 2);
  CHECK(J.A.order() == 16);
  CHECK(J.n == 2);

  CHECK_THROWS_AS(commutator_form(dihedral(3), 3), Error);
  CHECK_THROWS_AS(commutator_form(dihedral(8), 2), Error);
}

TEST_CASE("symplectic basis examples") {
  const auto D5 = symplectic_basis(commutator_form(heisenberg(5), 5));
  CHECK(D5.d == std::vector<std::uint64_t>{5});
  for (auto type : {ExtraspecialType::Dihedral, ExtraspecialType::Quaternion}) {
    const auto M = commutator_form(extraspecial(2, 2, type), 2);
    const auto D = symplectic_basis(M);
    CHECK(D.d == std::vector<std::uint64_t>{2, 2});
    CHECK(sqrt_order(M, D) == 4);
    const auto L = lagrangian(M, D);
    CHECK(L.order() == 4);
    CHECK(is_isotropic(M, L));
  }
  CHECK(sqrt_order(commutator_form(extraspecial(3, 2, ExtraspecialType::ExponentP), 3)) == 9);
  // semidirect C_81 x| C_9: d = [9]
  CHECK(symplectic_basis(commutator_form(semidirect_cyclic(3, 4, 2), 3)).d == std::vector<std::uint64_t>{9});
}

TEST_CASE("decomposition invariants, lift independence, Lagrangian maximality") {
  for (const auto& c : cases()) {
    const auto M = commutator_form(c.G, c.p);
    const auto D = symplectic_basis(M);
    CHECK_FALSE(check_decomposition(M, D).has_value());
    const auto s = sqrt_order(M, D);
    CHECK(s * s == M.A.order());
    const auto L = lagrangian(M, D);
    CHECK(L.order() == s);
    CHECK(is_isotropic(M, L));
    if (M.A.order() <= 256) CHECK(is_maximal_isotropic(M, L));
    const auto M2 = commutator_form(c.G, c.p, LiftChoice::LargestMember);
    CHECK(M2.omega == M.omega);
    // generator independence of the d-invariants
    for (Elem z : M.Z.members()) {
      if (c.G.element_order(z) != M.n) continue;
      CHECK(symplectic_basis(commutator_form_with_generator(c.G, c.p, z)).d == D.d);
    }
  }
}

TEST_CASE("check_decomposition reports violations") {
  const auto M = commutator_form(heisenberg(3), 3);
  auto D = symplectic_basis(M);
  auto bad = D;
  bad.pairs[0].second = bad.pairs[0].first;
  CHECK(check_decomposition(M, bad).has_value());
  bad = D;
  bad.d[0] = 9;
  CHECK(check_decomposition(M, bad).has_value());
}
