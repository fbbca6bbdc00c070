#include <algorithm>

#include "doctest.h"
#include "essdim/group.hpp"
#include "essdim/oracles.hpp"

using namespace essdim;
using namespace essdim::group;

namespace {

std::vector<std::uint64_t> invariants(const FiniteGroup& G) { return abelian_invariants(G).invariant_factors; }

std::vector<FiniteGroup> sample_groups() {
  return {cyclic(12),
          direct_product(cyclic(2), cyclic(4)),
          quaternion8(),
          dihedral(4),
          dihedral(8),
          dihedral(3),
          heisenberg(3),
          heisenberg(5),
          extraspecial(2, 2, ExtraspecialType::Dihedral),
          extraspecial(2, 2, ExtraspecialType::Quaternion),
          extraspecial(3, 1, ExtraspecialType::ExponentP2),
          extraspecial(3, 2, ExtraspecialType::ExponentP),
          semidirect_cyclic(3, 2, 1),
          semidirect_cyclic(3, 3, 2),
          jly_group(2, 2),
          direct_product(quaternion8(), cyclic(4))};
}

}  // namespace

TEST_CASE("table validation rejects broken tables") {
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 1}, {"a", "b"}), Error);
  // Latin square with identity 0 but not associative (order 5 loop)
  std::vector<Elem> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(FiniteGroup(5, loop, {"0", "1", "2", "3", "4"}), Error);
  CHECK_THROWS_AS(cyclic(FiniteGroup::kMaxOrder + 1), Error);
  try {
    cyclic(5000);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderCapExceeded);
  }
}

TEST_CASE("center") {
  CHECK(center(cyclic(9)).order() == 9);
  const auto Q = quaternion8();
  const auto Z = center(Q);
  CHECK(Z.order() == 2);
  CHECK(Z.members() == oracles::brute_center(Q));
  CHECK(center(extraspecial(3, 1, ExtraspecialType::ExponentP)).order() == 3);
}

TEST_CASE("derived subgroup") {
  CHECK(derived_subgroup(cyclic(10)).is_trivial());
  CHECK(derived_subgroup(quaternion8()).members() == center(quaternion8()).members());
  const auto D8 = dihedral(8);  // order 16
  const auto D = derived_subgroup(D8);
  CHECK(D.order() == 4);
  CHECK(D.members() == oracles::brute_derived(D8));
  // dihedral(4) (order 8): derived = {1, r^2}
  CHECK(derived_subgroup(dihedral(4)).order() == 2);
}

TEST_CASE("center and derived agree with brute force on samples") {
  for (const auto& G : sample_groups()) {
    CHECK(center(G).members() == oracles::brute_center(G));
    CHECK(derived_subgroup(G).members() == oracles::brute_derived(G));
  }
}

TEST_CASE("quotient") {
  const auto Q = quaternion8();
  const auto V = quotient(Q, center(Q));
  CHECK(V.group.order() == 4);
  CHECK(exponent(V.group) == 2);
  CHECK(oracles::is_isomorphic(V.group, direct_product(cyclic(2), cyclic(2))));
  const auto same = quotient(Q, trivial_subgroup(Q));
  CHECK(oracles::is_isomorphic(same.group, Q));
  const auto E = extraspecial(2, 2, ExtraspecialType::Dihedral);
  const auto A = quotient(E, center(E));
  CHECK(A.group.order() == 16);
  CHECK(exponent(A.group) == 2);
  // not normal
  const auto S3 = dihedral(3);
  const Elem s = 3;  // reflection
  const Elem gen[] = {s};
  CHECK_THROWS_AS(quotient(S3, generated_subgroup(S3, gen)), Error);
  // projection is a homomorphism
  for (const auto& G : sample_groups()) {
    const auto D = derived_subgroup(G);
    const auto Qg = quotient(G, D);
    CHECK(Qg.group.order() * D.order() == G.order());
    CHECK(Qg.group.is_abelian());
    for (std::size_t a = 0; a < G.order(); a += 3)
      for (std::size_t b = 0; b < G.order(); b += 5)
        CHECK(Qg.projection[G.mul(Elem(a), Elem(b))] == Qg.group.mul(Qg.projection[a], Qg.projection[b]));
  }
}

TEST_CASE("exponent") {
  CHECK(exponent(cyclic(27)) == 27);
  CHECK(exponent(quaternion8()) == 4);
  CHECK(exponent(extraspecial(3, 1, ExtraspecialType::ExponentP)) == 3);
  CHECK(exponent(extraspecial(3, 1, ExtraspecialType::ExponentP2)) == 9);
}

TEST_CASE("abelian invariants") {
  CHECK(invariants(cyclic(12)) == std::vector<std::uint64_t>{12});
  CHECK(invariants(direct_product(cyclic(2), cyclic(4))) == std::vector<std::uint64_t>{4, 2});
  CHECK(invariants(direct_product(cyclic(2), cyclic(2))) == std::vector<std::uint64_t>{2, 2});
  CHECK(invariants(cyclic(1)).empty());
  CHECK_THROWS_AS(abelian_invariants(quaternion8()), Error);
  for (std::uint64_t n : {2u, 8u, 12u, 27u}) {
    const auto C = cyclic(n);
    CHECK(oracles::snf_invariants(C, whole_group(C).members()) == std::vector<std::uint64_t>{n});
  }
  CHECK(oracles::snf_invariants(quaternion8(), center(quaternion8()).members()) == std::vector<std::uint64_t>{2});
  const std::vector<std::vector<std::uint64_t>> shapes = {{6, 4}, {8, 4, 2}, {3, 9, 27}, {2, 3, 5}, {12, 18}, {16}, {4, 4}};
  for (const auto& shape : shapes) {
    FiniteGroup G = cyclic(shape[0]);
    for (std::size_t i = 1; i < shape.size(); ++i) G = direct_product(G, cyclic(shape[i]));
    const auto inv = invariants(G);
    CHECK(inv == oracles::snf_invariants(G, whole_group(G).members()));
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < inv.size(); ++i) {
      prod *= inv[i];
      if (i) CHECK(inv[i - 1] % inv[i] == 0);
    }
    CHECK(prod == G.order());
  }
  // reconstruction
  const auto G = direct_product(direct_product(cyclic(2), cyclic(4)), cyclic(2));
  FiniteGroup R = cyclic(1);
  for (auto d : invariants(G)) R = direct_product(R, cyclic(d));
  CHECK(oracles::is_isomorphic(G, R));
}

TEST_CASE("abelian basis coordinates") {
  const auto G = direct_product(cyclic(4), cyclic(6));
  const auto B = abelian_basis(whole_group(G));
  for (std::size_t g = 0; g < G.order(); ++g) CHECK(B.element(G, B.coordinates[g]) == g);
}

TEST_CASE("theorem hypothesis") {
  CHECK(is_theorem_hypothesis(direct_product(cyclic(4), cyclic(2)), 2));
  CHECK(is_theorem_hypothesis(quaternion8(), 2));
  CHECK_FALSE(is_theorem_hypothesis(dihedral(3), 3));
  CHECK_FALSE(is_theorem_hypothesis(dihedral(8), 2));  // derived subgroup not central
  CHECK(is_theorem_hypothesis(semidirect_cyclic(3, 2, 1), 3));
}

TEST_CASE("constructors") {
  const auto Q = extraspecial(2, 1, ExtraspecialType::Quaternion);
  CHECK(Q.order() == 8);
  CHECK(exponent(Q) == 4);
  CHECK(oracles::is_isomorphic(Q, quaternion8()));
  CHECK(oracles::is_isomorphic(extraspecial(2, 1, ExtraspecialType::Dihedral), dihedral(4)));
  CHECK_FALSE(oracles::is_isomorphic(quaternion8(), dihedral(4)));

  const auto J = jly_quotient(2, 2);
  CHECK(J.order() == 32);
  CHECK(center(J).order() == 2);
  CHECK(derived_subgroup(J) == center(J));

  const auto S = semidirect_cyclic(3, 2, 1);
  CHECK(S.order() == 27);
  CHECK_FALSE(S.is_abelian());
  CHECK(center(S).order() == 3);

  for (auto type : {ExtraspecialType::ExponentP, ExtraspecialType::ExponentP2}) {
    const auto E = extraspecial(3, 2, type);
    CHECK(E.order() == 243);
    CHECK(center(E).order() == 3);
    CHECK(derived_subgroup(E) == center(E));
  }
  CHECK(exponent(extraspecial(3, 2, ExtraspecialType::ExponentP)) == 3);
  CHECK(exponent(extraspecial(3, 2, ExtraspecialType::ExponentP2)) == 9);
  CHECK_FALSE(oracles::is_isomorphic(extraspecial(2, 2, ExtraspecialType::Dihedral),
                                     extraspecial(2, 2, ExtraspecialType::Quaternion)));
  CHECK_THROWS_AS(extraspecial(2, 1, ExtraspecialType::ExponentP), Error);
  CHECK_THROWS_AS(semidirect_cyclic(3, 2, 2), Error);
}

TEST_CASE("jly quotient matches the quotient of the product by H_n") {
  for (auto [p, n] : {std::pair{2ull, 1u}, {2ull, 2u}, {3ull, 1u}}) {
    const auto J = jly_group(p, n);
    const auto K = jly_kernel(J, p, n);
    CHECK(K.order() == ipow(p, n - 1));
    CHECK(is_normal(K));
    const auto Q = quotient(J, K);
    CHECK(oracles::is_isomorphic(Q.group, jly_quotient(p, n)));
  }
  // larger n: compare invariants that the iso oracle cannot reach
  const auto J = jly_group(2, 3);
  const auto Q = quotient(J, jly_kernel(J, 2, 3)).group;
  const auto E = jly_quotient(2, 3);
  CHECK(Q.order() == E.order());
  CHECK(center(Q).order() == 2);
  CHECK(derived_subgroup(Q) == center(Q));
}
