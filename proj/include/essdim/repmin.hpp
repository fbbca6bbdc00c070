#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "essdim/group.hpp"

namespace essdim::repmin {

using group::Elem;
using group::FiniteGroup;
using group::Subgroup;

/// Linear character with values zeta_e^k, stored as exponents k mod e.
struct Character {
  Subgroup domain;
  std::uint64_t e;
  std::vector<std::int64_t> values;  // indexed by parent element; -1 outside the domain

  std::uint64_t operator()(Elem g) const;
};

/// A monomial matrix: column i carries zeta_e^{exponents[i]} in row perm[i].
struct MonomialMatrix {
  std::vector<std::uint32_t> perm;
  std::vector<std::uint64_t> exponents;

  bool is_identity() const;
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

/// (x * y) as monomial matrices, exponents mod e.
MonomialMatrix compose(const MonomialMatrix& x, const MonomialMatrix& y, std::uint64_t e);

struct MonomialRep {
  std::size_t degree = 0;
  std::uint64_t e = 1;
  std::vector<MonomialMatrix> images;  // indexed by group element
};

/// Checks multiplicativity: on all pairs for |G| <= 512, otherwise on
/// (all g) x (generating set), which already implies the homomorphism property.
bool is_homomorphism(const MonomialRep& rep, const FiniteGroup& G);

/// Checks that chi is a homomorphism on its domain.
bool is_character(const Character& chi);

Character extend_character(const Subgroup& H, const Character& chi_sub, std::uint64_t e);

MonomialRep induce_monomial(const FiniteGroup& G, const Subgroup& H, const Character& chi);

Subgroup rep_kernel(const MonomialRep& rep, const FiniteGroup& G);

MonomialRep direct_sum(const MonomialRep& x, const MonomialRep& y);

/// Degree-1 monomial representation given by a character defined on all of G.
MonomialRep from_character(const Character& chi);

/// Faithful representation of degree sqrt|G/C(G)| + rank C(G) - 1 for a
/// p-group with central cyclic commutator subgroup.
MonomialRep minimal_faithful_rep(const FiniteGroup& G, std::uint64_t p);

/// Degree predicted for minimal_faithful_rep, computed from the symplectic
/// reduction and the center's invariants.
std::uint64_t formula_degree(const FiniteGroup& G, std::uint64_t p);

}  // namespace essdim::repmin
