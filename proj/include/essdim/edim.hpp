#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "essdim/group.hpp"

namespace essdim::edim {

/// Extended integers: finite values plus the two sentinels below.
inline constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
inline constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max();
std::string ext_to_string(std::int64_t v);

/// Which roots of unity the base field contains.
struct FieldProfile {
  static constexpr std::int64_t kInfiniteLevel = std::numeric_limits<std::int64_t>::max();

  std::uint64_t characteristic = 0;
  std::map<std::uint64_t, std::int64_t> root_level;  // p -> n with zeta_{p^n} in k, zeta_{p^{n+1}} not
  bool two_adic_flag = false;                        // k(zeta_4) != k(zeta_8)

  /// Explicit level, else 1 for p = 2 in characteristic != 2 (-1 is always a root), else 0.
  std::int64_t level(std::uint64_t p) const;
  /// Throws InconsistentProfile when a root of unity of order p is claimed in characteristic p.
  void validate() const;
};

std::string to_string(const FieldProfile& f);

struct EdBound {
  std::int64_t lower = 0;
  std::int64_t upper = kPosInf;
  std::vector<std::pair<std::string, std::string>> provenance;  // (endpoint, citation)

  bool is_exact() const { return lower == upper && lower != kPosInf && lower != kNegInf; }
  /// lower <= upper and every finite endpoint is cited.
  bool is_valid() const;
};

std::string to_string(const EdBound& b);

EdBound ed_pgroup(const group::FiniteGroup& G, std::uint64_t p, const FieldProfile& profile);
std::uint64_t ed_lower_ind(const group::FiniteGroup& G, std::uint64_t p);
std::uint64_t ed_nonabelian_floor(const group::FiniteGroup& G, std::uint64_t p);

EdBound ed_cyclic(std::uint64_t p, unsigned m, const FieldProfile& profile);
EdBound ed_dihedral(std::uint64_t p, unsigned m, const FieldProfile& profile);
EdBound ed_semidirect(std::uint64_t p, unsigned r, unsigned s, const FieldProfile& profile);

/// The closed-form interval for Spin_n before any tightening; the lower end
/// may be negative.
std::pair<std::int64_t, std::int64_t> spin_interval_raw(unsigned n);
/// Exact value for 3 <= n <= 14, else nothing.
std::optional<std::int64_t> rost_value(unsigned n);

EdBound ed_spin(unsigned n);
EdBound ed_pin(unsigned n);
EdBound ed_hspin(unsigned n);

EdBound ed_mgn(unsigned g, unsigned n);
EdBound ed_hyperelliptic(unsigned g);

struct JlyGap {
  std::uint64_t upper_G;         // n p
  std::uint64_t exact_quotient;  // p^n
  bool table_checked;            // quotient value confirmed on the Cayley table
};

JlyGap jly_gap(std::uint64_t p, unsigned n, const FieldProfile& profile);

enum class CombineRule { ProductUpper, Intersect };
EdBound combine_bounds(const std::vector<EdBound>& bounds, CombineRule rule);

}  // namespace essdim::edim
