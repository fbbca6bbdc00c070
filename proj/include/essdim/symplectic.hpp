#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "essdim/group.hpp"

namespace essdim::symplectic {

using group::Elem;
using group::FiniteGroup;
using group::Subgroup;

/// Commutator pairing on A = G/C(G) with values in the cyclic group Z = [G,G].
///
/// omega(a, b) is stored as the exponent e with [lift(a), lift(b)] = z^e.
struct SymplecticModule {
  FiniteGroup G;
  FiniteGroup A;
  std::vector<Elem> projection;  // G element -> A element
  std::vector<Elem> lift;        // A element -> G element
  Subgroup Z;                    // [G,G] inside G
  Elem z;                        // distinguished generator of Z
  std::uint64_t n;               // |Z|
  std::vector<std::uint64_t> omega;  // |A| x |A| exponents mod n

  std::uint64_t pairing(Elem a, Elem b) const { return omega[std::size_t{a} * A.order() + b]; }
  /// Order of omega(a, b) in Z.
  std::uint64_t pairing_order(Elem a, Elem b) const;
};

struct HyperbolicDecomposition {
  /// pairs[i] = (a_{i+1}, a_{r+i+1}) as elements of A.
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<std::uint64_t> d;
  std::size_t r() const noexcept { return d.size(); }
};

enum class LiftChoice { SmallestMember, LargestMember };

/// Requires is_theorem_hypothesis(G, p). Every module invariant is verified
/// before returning; ill-defined or degenerate forms raise InternalError.
SymplecticModule commutator_form(const FiniteGroup& G, std::uint64_t p,
                                 LiftChoice lift = LiftChoice::SmallestMember);

/// Same as commutator_form but with the pairing exponents taken relative to
/// a caller-chosen generator of [G,G].
SymplecticModule commutator_form_with_generator(const FiniteGroup& G, std::uint64_t p, Elem z,
                                                LiftChoice lift = LiftChoice::SmallestMember);

HyperbolicDecomposition symplectic_basis(const SymplecticModule& M);

/// Checks properties (a)-(e) of a hyperbolic decomposition by direct
/// evaluation of omega. Returns an empty optional when all hold, else a
/// description of the first violation.
std::optional<std::string> check_decomposition(const SymplecticModule& M, const HyperbolicDecomposition& D);

std::uint64_t sqrt_order(const SymplecticModule& M);
std::uint64_t sqrt_order(const SymplecticModule& M, const HyperbolicDecomposition& D);

/// Subgroup of A generated by a_1, ..., a_r; isotropic of order prod d_i.
Subgroup lagrangian(const SymplecticModule& M, const HyperbolicDecomposition& D);

bool is_isotropic(const SymplecticModule& M, const Subgroup& L);

}  // namespace essdim::symplectic
