#include <cmath>
#include <functional>

#include "doctest.h"
#include "essdim/edim.hpp"
#include "essdim/oracles.hpp"
#include "essdim/repmin.hpp"

using namespace essdim;
using namespace essdim::edim;
using namespace essdim::group;

namespace {

FieldProfile profile(std::uint64_t ch, std::map<std::uint64_t, std::int64_t> levels, bool flag = false) {
  FieldProfile f;
  f.characteristic = ch;
  f.root_level = std::move(levels);
  f.two_adic_flag = flag;
  return f;
}

FieldProfile full_roots() {
  return profile(0, {{2, FieldProfile::kInfiniteLevel}, {3, FieldProfile::kInfiniteLevel},
                     {5, FieldProfile::kInfiniteLevel}, {7, FieldProfile::kInfiniteLevel}});
}

void check_exact(const EdBound& b, std::int64_t v) {
  CHECK(b.is_valid());
  CHECK(b.lower == v);
  CHECK(b.upper == v);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalError;
}

// sqrt|G/C(G)| + rank C(G) - 1 from brute-force center and Smith normal form.
std::int64_t formula_oracle(const FiniteGroup& G) {
  const auto Z = oracles::brute_center(G);
  const auto idx = G.order() / Z.size();
  const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(idx))));
  REQUIRE(static_cast<std::size_t>(root * root) == idx);
  return root + static_cast<std::int64_t>(oracles::snf_invariants(G, Z).size()) - 1;
}

}  // namespace

TEST_CASE("field profiles") {
  FieldProfile f;
  CHECK(f.level(2) == 1);  // -1 is always present away from characteristic 2
  CHECK(f.level(3) == 0);
  CHECK(profile(2, {}).level(2) == 0);
  CHECK(code_of([] { profile(3, {{3, 1}}).validate(); }) == ErrorCode::InconsistentProfile);
  CHECK(code_of([] { profile(4, {}).validate(); }) == ErrorCode::InconsistentProfile);
  CHECK(code_of([] { profile(2, {{2, 1}}).validate(); }) == ErrorCode::InconsistentProfile);
  CHECK_NOTHROW(profile(5, {{3, 2}}).validate());
}

TEST_CASE("ed of p-groups") {
  check_exact(ed_pgroup(extraspecial(3, 1, ExtraspecialType::ExponentP), 3, profile(0, {{3, 1}})), 3);
  check_exact(ed_pgroup(quaternion8(), 2, profile(0, {{2, 2}})), 2);
  const auto C5cubed = direct_product(direct_product(cyclic(5), cyclic(5)), cyclic(5));
  check_exact(ed_pgroup(C5cubed, 5, profile(7, {{5, 1}})), 3);

  // Without enough roots of unity only the lower bound survives.
  const auto b = ed_pgroup(quaternion8(), 2, profile(0, {}));
  CHECK(b.lower == 2);
  CHECK(b.upper == kPosInf);
  CHECK(b.is_valid());
  // exponent p^2 needs zeta_{p^2}
  const auto e9 = extraspecial(3, 1, ExtraspecialType::ExponentP2);
  CHECK(ed_pgroup(e9, 3, profile(0, {{3, 1}})).upper == kPosInf);
  check_exact(ed_pgroup(e9, 3, profile(0, {{3, 2}})), 3);

  CHECK(code_of([] { ed_pgroup(quaternion8(), 2, profile(2, {})); }) == ErrorCode::BadCharacteristic);
  CHECK(code_of([] { ed_pgroup(cyclic(6), 2, full_roots()); }) == ErrorCode::HypothesisFailed);
  CHECK(code_of([] { ed_pgroup(dihedral(8), 2, full_roots()); }) == ErrorCode::HypothesisFailed);
}

TEST_CASE("p-group value: formula, Cayley-table oracle and faithful representation agree") {
  std::vector<std::pair<FiniteGroup, std::uint64_t>> groups = {
      {cyclic(8), 2},
      {direct_product(cyclic(4), cyclic(2)), 2},
      {quaternion8(), 2},
      {dihedral(4), 2},
      {heisenberg(3), 3},
      {heisenberg(5), 5},
      {extraspecial(2, 2, ExtraspecialType::Dihedral), 2},
      {extraspecial(2, 2, ExtraspecialType::Quaternion), 2},
      {extraspecial(3, 1, ExtraspecialType::ExponentP2), 3},
      {direct_product(heisenberg(3), cyclic(3)), 3},
      {direct_product(quaternion8(), cyclic(4)), 2},
      {semidirect_cyclic(3, 2, 1), 3},
      {semidirect_cyclic(5, 2, 1), 5},
      {jly_quotient(2, 3), 2},
      {jly_quotient(3, 2), 3},
  };
  for (const auto& [G, p] : groups) {
    const auto b = ed_pgroup(G, p, full_roots());
    REQUIRE(b.is_exact());
    CHECK(b.lower == formula_oracle(G));
    const auto rank = static_cast<std::int64_t>(abelian_invariants(center(G)).rank());
    CHECK(b.lower == static_cast<std::int64_t>(ed_lower_ind(G, p)) + rank - 1);
    const auto rho = repmin::minimal_faithful_rep(G, p);
    CHECK(static_cast<std::int64_t>(rho.degree) == b.lower);
  }
}

TEST_CASE("ind lower bound and non-abelian floor") {
  CHECK(ed_lower_ind(direct_product(cyclic(4), cyclic(2)), 2) == 1);
  CHECK(ed_lower_ind(heisenberg(5), 5) == 5);
  CHECK(ed_lower_ind(heisenberg(7), 7) == 7);
  CHECK(ed_nonabelian_floor(quaternion8(), 2) == 2);
  CHECK(ed_nonabelian_floor(heisenberg(7), 7) == 7);
  CHECK(ed_nonabelian_floor(dihedral(4), 2) == 2);
  CHECK(code_of([] { ed_nonabelian_floor(cyclic(9), 3); }) == ErrorCode::AbelianInput);
  // Every non-abelian catalog p-group meets the floor.
  for (auto [G, p] : std::vector<std::pair<FiniteGroup, std::uint64_t>>{
           {quaternion8(), 2}, {heisenberg(3), 3}, {semidirect_cyclic(5, 2, 1), 5}, {extraspecial(3, 2, ExtraspecialType::ExponentP), 3}})
    CHECK(ed_pgroup(G, p, full_roots()).lower >= static_cast<std::int64_t>(ed_nonabelian_floor(G, p)));
}

TEST_CASE("cyclic and dihedral groups") {
  check_exact(ed_cyclic(3, 2, profile(0, {{3, 1}})), 3);
  check_exact(ed_cyclic(5, 2, profile(0, {{5, 3}})), 1);
  check_exact(ed_cyclic(2, 3, profile(0, {{2, 2}})), 2);
  check_exact(ed_cyclic(2, 5, profile(0, {{2, 1}}, true)), 16);
  // Hypothesis k(zeta_4) != k(zeta_8) not granted: only an interval.
  const auto open = ed_cyclic(2, 5, profile(0, {{2, 1}}));
  CHECK(open.lower == 1);
  CHECK(open.upper == 16);
  CHECK(open.is_valid());
  const auto none = ed_cyclic(3, 2, profile(0, {}));
  CHECK(none.lower == 1);
  CHECK(none.upper == kPosInf);
  CHECK(code_of([] { ed_cyclic(3, 2, profile(3, {})); }) == ErrorCode::BadCharacteristic);

  check_exact(ed_dihedral(3, 2, profile(0, {{3, 1}})), 3);
  check_exact(ed_dihedral(5, 1, profile(0, {{5, 1}})), 1);
  check_exact(ed_dihedral(7, 3, profile(0, {{7, 1}})), 49);
  CHECK(code_of([] { ed_dihedral(2, 3, profile(0, {{2, 3}})); }) == ErrorCode::EvenPrime);
  CHECK(code_of([] { ed_dihedral(3, 2, profile(0, {})); }) == ErrorCode::NoRootOfUnity);

  // Monotone in m while the level stays below m.
  for (std::uint64_t p : {3u, 5u, 7u})
    for (std::int64_t n = 1; n <= 3; ++n)
      for (unsigned m = static_cast<unsigned>(n) + 1; m <= 8; ++m) {
        const auto f = profile(0, {{p, n}});
        CHECK(ed_cyclic(p, m + 1, f).lower >= ed_cyclic(p, m, f).lower);
      }
}

TEST_CASE("semidirect products") {
  check_exact(ed_semidirect(3, 4, 2, profile(0, {{3, 1}})), 9);
  check_exact(ed_semidirect(5, 2, 1, profile(0, {{5, 1}})), 5);
  const auto u = ed_semidirect(3, 3, 2, profile(0, {{3, 1}}));
  CHECK_FALSE(u.is_exact());
  CHECK(u.lower == 3);
  CHECK(u.upper == kPosInf);
  CHECK(u.is_valid());
  CHECK(code_of([] { ed_semidirect(3, 4, 2, profile(0, {})); }) == ErrorCode::NoRootOfUnity);
  // Agrees with the p-group formula where both apply.
  for (auto [p, r, s] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{{3, 2, 1}, {3, 4, 2}, {5, 2, 1}, {3, 3, 1}})
    CHECK(ed_semidirect(p, r, s, full_roots()).lower == ed_pgroup(semidirect_cyclic(p, r, s), p, full_roots()).lower);
}

TEST_CASE("spin, pin and half-spin") {
  const auto s15 = ed_spin(15);
  CHECK(s15.lower == 23);
  CHECK(s15.upper == 128);
  const auto s16 = ed_spin(16);
  CHECK(s16.lower == 9);
  CHECK(s16.upper == 129);
  check_exact(ed_spin(7), 4);
  check_exact(ed_spin(14), 7);
  CHECK(code_of([] { ed_spin(2); }) == ErrorCode::BadDimension);
  for (unsigned n = 3; n <= 14; ++n) {
    const auto [lo, hi] = spin_interval_raw(n);
    const auto v = rost_value(n);
    REQUIRE(v.has_value());
    CHECK(lo <= *v);
    CHECK(*v <= hi);
  }
  CHECK_FALSE(rost_value(15).has_value());
  for (unsigned n = 3; n <= 60; ++n) {
    const auto b = ed_spin(n);
    CHECK(b.is_valid());
    CHECK(b.lower >= 0);
  }

  const auto p5 = ed_pin(5);  // 2^2 + 1 = 5 on top
  CHECK(p5.upper == 5);
  CHECK(p5.lower == 0);
  const auto p20 = ed_pin(20);
  CHECK(p20.upper == 1024);
  CHECK(p20.lower == 1024 - 190);

  const auto h16 = ed_hspin(16);
  CHECK(h16.upper == 128);
  CHECK(h16.lower == 8);
  CHECK(code_of([] { ed_hspin(6); }) == ErrorCode::BadDimension);
}

TEST_CASE("moduli of curves") {
  check_exact(ed_mgn(2, 0), 5);
  check_exact(ed_mgn(3, 2), 8);
  check_exact(ed_mgn(0, 0), 2);
  check_exact(ed_mgn(1, 1), 2);
  check_exact(ed_mgn(0, 2), 0);
  check_exact(ed_mgn(0, 5), 2);
  const auto inf = ed_mgn(1, 0);
  CHECK(inf.lower == kPosInf);
  CHECK(inf.upper == kPosInf);
  CHECK(inf.is_valid());
  check_exact(ed_hyperelliptic(3), 6);
  check_exact(ed_hyperelliptic(4), 9);
  CHECK(code_of([] { ed_hyperelliptic(1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("quotient gap family") {
  const auto f = full_roots();
  const auto g22 = jly_gap(2, 2, f);
  CHECK(g22.upper_G == 4);
  CHECK(g22.exact_quotient == 4);
  CHECK(g22.table_checked);
  const auto g25 = jly_gap(2, 5, f);
  CHECK(g25.upper_G == 10);
  CHECK(g25.exact_quotient == 32);
  CHECK(g25.table_checked);  // order 2^11
  const auto g33 = jly_gap(3, 3, f);
  CHECK(g33.upper_G == 9);
  CHECK(g33.exact_quotient == 27);
  CHECK(g33.table_checked);  // order 3^7
  CHECK_FALSE(jly_gap(3, 5, f).table_checked);
  // The gap eventually exceeds any fixed ratio.
  CHECK(jly_gap(2, 12, f).exact_quotient > 100 * jly_gap(2, 12, f).upper_G);
  // n p is n times the value for one order-p^3 factor.
  for (std::uint64_t p : {2u, 3u, 5u}) CHECK(ed_pgroup(jly_quotient(p, 1), p, f).lower == static_cast<std::int64_t>(p));
}

TEST_CASE("combining bounds") {
  const EdBound one{1, 1, {{"value", "x"}}};
  const auto sum = combine_bounds({one, one}, CombineRule::ProductUpper);
  CHECK(sum.upper == 2);
  CHECK(sum.lower == kNegInf);
  CHECK(sum.is_valid());
  const auto cut = combine_bounds({EdBound{3, 10, {{"lower", "a"}, {"upper", "a"}}}, EdBound{5, 7, {{"lower", "b"}, {"upper", "b"}}}},
                                  CombineRule::Intersect);
  CHECK(cut.lower == 5);
  CHECK(cut.upper == 7);
  CHECK(cut.is_valid());
  CHECK(code_of([] {
          combine_bounds({EdBound{3, 4, {{"value", "a"}}}, EdBound{5, 7, {{"value", "b"}}}}, CombineRule::Intersect);
        }) == ErrorCode::EmptyIntersection);
  CHECK(combine_bounds({one, EdBound{1, kPosInf, {{"lower", "y"}}}}, CombineRule::ProductUpper).upper == kPosInf);
}
