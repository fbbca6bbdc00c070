#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "essdim/error.hpp"

namespace essdim::group {

using Elem = std::uint32_t;

/// A finite group stored as a dense Cayley table.
///
/// Copies are cheap: the table is shared and never mutated after construction.
/// The constructor validates the Latin-square, identity and inverse axioms, and
/// associativity exhaustively when the order is at most kAssociativityCheckLimit.
class FiniteGroup {
 public:
  static constexpr std::size_t kMaxOrder = 4096;
  static constexpr std::size_t kAssociativityCheckLimit = 512;

  FiniteGroup(std::size_t order, std::vector<Elem> table, std::vector<std::string> labels);

  /// Builds the table from a multiplication rule on codes 0..order-1.
  static FiniteGroup from_rule(std::size_t order, const std::function<Elem(Elem, Elem)>& mul,
                               std::vector<std::string> labels);

  std::size_t order() const noexcept { return data_->order; }
  Elem identity() const noexcept { return data_->identity; }
  Elem mul(Elem a, Elem b) const noexcept { return data_->table[std::size_t{a} * data_->order + b]; }
  Elem inv(Elem a) const noexcept { return data_->inverse[a]; }
  Elem pow(Elem a, long long k) const;
  Elem commutator(Elem a, Elem b) const noexcept { return mul(mul(a, b), mul(inv(a), inv(b))); }
  std::size_t element_order(Elem a) const;
  const std::string& label(Elem a) const { return data_->labels.at(a); }
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }
  bool is_abelian() const;
  std::span<const Elem> table() const noexcept { return data_->table; }

 private:
  struct Data {
    std::size_t order = 0;
    Elem identity = 0;
    std::vector<Elem> table;
    std::vector<Elem> inverse;
    std::vector<std::string> labels;
  };
  std::shared_ptr<const Data> data_;
};

/// A subgroup of a parent group, identified by its sorted member list.
class Subgroup {
 public:
  /// Validates closure; members need not be sorted.
  Subgroup(FiniteGroup parent, std::vector<Elem> members);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const std::vector<Elem>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Elem g) const { return g < in_.size() && in_[g]; }
  bool is_trivial() const noexcept { return members_.size() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  FiniteGroup parent_;
  std::vector<Elem> members_;
  std::vector<bool> in_;
};

struct AbelianInvariants {
  std::vector<std::uint64_t> invariant_factors;  // d_1, d_2, ... with d_{i+1} | d_i
  std::size_t rank() const noexcept { return invariant_factors.size(); }
};

/// Explicit direct-sum decomposition of an abelian subgroup into cyclic
/// groups of prime-power order.
struct AbelianBasis {
  std::vector<Elem> generators;
  std::vector<std::uint64_t> orders;
  /// coordinates[g] is the exponent vector of g (empty for non-members).
  std::vector<std::vector<std::uint64_t>> coordinates;

  Elem element(const FiniteGroup& G, std::span<const std::uint64_t> coords) const;
};

struct Quotient {
  FiniteGroup group;
  std::vector<Elem> projection;  // element of G -> coset index
  std::vector<Elem> section;     // coset index -> smallest member of the coset
};

// Structural queries.
Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup whole_group(const FiniteGroup& G);
Subgroup generated_subgroup(const FiniteGroup& G, std::span<const Elem> generators);
Subgroup center(const FiniteGroup& G);
Subgroup derived_subgroup(const FiniteGroup& G);
bool is_normal(const Subgroup& N);
Quotient quotient(const FiniteGroup& G, const Subgroup& N);
std::uint64_t exponent(const FiniteGroup& G);
std::uint64_t exponent(const Subgroup& H);
bool is_p_group(const FiniteGroup& G, std::uint64_t p);
bool is_theorem_hypothesis(const FiniteGroup& G, std::uint64_t p);
/// Greedy small generating set (each generator is the smallest element not yet covered).
std::vector<Elem> generating_set(const FiniteGroup& G);

AbelianBasis abelian_basis(const Subgroup& A);
AbelianInvariants abelian_invariants(const FiniteGroup& A);
AbelianInvariants abelian_invariants(const Subgroup& A);

// Constructors.
enum class ExtraspecialType {
  ExponentP,    // odd p: exponent p
  ExponentP2,   // odd p: exponent p^2
  Dihedral,     // p = 2: central product of D_4 copies ("plus" type)
  Quaternion,   // p = 2: Q_8 central product D_4 copies ("minus" type)
};

FiniteGroup cyclic(std::uint64_t n);
FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H);
FiniteGroup dihedral(std::uint64_t n);
FiniteGroup quaternion8();
FiniteGroup semidirect_cyclic(std::uint64_t p, unsigned r, unsigned s);
FiniteGroup extraspecial(std::uint64_t p, unsigned m, ExtraspecialType type);
FiniteGroup heisenberg(std::uint64_t p);
FiniteGroup jly_group(std::uint64_t p, unsigned n);
FiniteGroup jly_quotient(std::uint64_t p, unsigned n);
/// The subgroup H_n of the center of jly_group(p, n): tuples of central
/// elements (c_1, ..., c_n) with c_1 ... c_n = 1.
Subgroup jly_kernel(const FiniteGroup& jly, std::uint64_t p, unsigned n);

bool is_prime(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

}  // namespace essdim::group
