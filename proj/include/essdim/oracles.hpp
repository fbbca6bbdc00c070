#pragma once

// Independent reference implementations used to cross-check the main code
// paths. Nothing here calls into the group/symplectic/witt algorithms beyond
// reading Cayley tables.

#include <cstdint>
#include <vector>

#include "essdim/group.hpp"

namespace essdim::oracles {

using group::Elem;
using group::FiniteGroup;

/// Sorted member lists.
std::vector<Elem> brute_center(const FiniteGroup& G);
std::vector<Elem> brute_derived(const FiniteGroup& G);
std::vector<Elem> brute_closure(const FiniteGroup& G, std::vector<Elem> gens);

/// Invariant factors (descending, each > 1) of the abelian group formed by
/// `members` inside G, via Smith normal form of its relation lattice.
std::vector<std::uint64_t> snf_invariants(const FiniteGroup& G, const std::vector<Elem>& members);

/// Exhaustive generator-image search; only for order <= 64.
bool is_isomorphic(const FiniteGroup& G, const FiniteGroup& H);

/// Clifford product by rewriting the concatenated index word:
/// e_i e_j -> -e_j e_i for i > j, e_i e_i -> -1.
std::pair<int, std::vector<unsigned>> token_rewrite_mul(int sx, const std::vector<unsigned>& x, int sy,
                                                        const std::vector<unsigned>& y);

/// +1 iff z^2 = a x^2 + b y^2 has a primitive solution mod p^3 (odd p).
int hilbert_by_search(std::int64_t a, std::int64_t b, std::uint64_t p);
/// Same at p = 2, searching mod 32.
int hilbert2_by_search(std::int64_t a, std::int64_t b);

}  // namespace essdim::oracles

namespace essdim::oracles {

/// All subgroups of G (order <= 64), as sorted member lists.
std::vector<std::vector<Elem>> all_subgroups(const FiniteGroup& G);

/// Smallest index [G:H] over pairs (H, linear character chi of H) with
/// Ind_H^G chi faithful, i.e. core_G(ker chi) trivial. Order <= 32.
std::size_t min_faithful_induced_degree(const FiniteGroup& G);

}  // namespace essdim::oracles
