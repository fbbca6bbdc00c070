#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "essdim/group.hpp"

namespace essdim {

/// A named test group: a spec in the group mini-language and its prime.
/// Every entry is a p-group with central cyclic commutator subgroup.
struct CatalogEntry {
  std::string spec;
  std::uint64_t p;
  std::size_t order;
  group::FiniteGroup build() const;
};

/// Entries of order at most max_order, in a fixed order.
std::vector<CatalogEntry> catalog(std::size_t max_order = 1024);

}  // namespace essdim
