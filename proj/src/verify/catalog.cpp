#include "essdim/catalog.hpp"

#include "essdim/parse.hpp"

namespace essdim {

group::FiniteGroup CatalogEntry::build() const { return parse_group_spec(spec); }

std::vector<CatalogEntry> catalog(std::size_t max_order) {
  static const std::vector<CatalogEntry> kAll = {
      {"cyclic:2", 2, 2},
      {"cyclic:8", 2, 8},
      {"cyclic:9", 3, 9},
      {"cyclic:25", 5, 25},
      {"cyclic:7", 7, 7},
      {"product:(cyclic:2,cyclic:2)", 2, 4},
      {"product:(cyclic:4,cyclic:2)", 2, 8},
      {"product:(cyclic:8,cyclic:2)", 2, 16},
      {"product:(cyclic:2,cyclic:2,cyclic:2)", 2, 8},
      {"product:(cyclic:9,cyclic:3)", 3, 27},
      {"product:(cyclic:5,cyclic:5)", 5, 25},
      {"Q8", 2, 8},
      {"dihedral:4", 2, 8},
      {"heisenberg:p=3", 3, 27},
      {"heisenberg:p=5", 5, 125},
      {"heisenberg:p=7", 7, 343},
      {"extraspecial:p=2,m=2,exp=D", 2, 32},
      {"extraspecial:p=2,m=2,exp=Q", 2, 32},
      {"extraspecial:p=2,m=3,exp=D", 2, 128},
      {"extraspecial:p=2,m=3,exp=Q", 2, 128},
      {"extraspecial:p=2,m=4,exp=D", 2, 512},
      {"extraspecial:p=2,m=4,exp=Q", 2, 512},
      {"extraspecial:p=3,m=1,exp=p2", 3, 27},
      {"extraspecial:p=3,m=2,exp=p", 3, 243},
      {"extraspecial:p=3,m=2,exp=p2", 3, 243},
      {"extraspecial:p=5,m=1,exp=p2", 5, 125},
      {"semidirect:p=3,r=2,s=1", 3, 27},
      {"semidirect:p=3,r=3,s=1", 3, 81},
      {"semidirect:p=3,r=4,s=2", 3, 729},
      {"semidirect:p=5,r=2,s=1", 5, 125},
      {"semidirect:p=7,r=2,s=1", 7, 343},
      {"jly_quotient:p=2,n=2", 2, 32},
      {"jly_quotient:p=2,n=3", 2, 128},
      {"jly_quotient:p=2,n=4", 2, 512},
      {"jly_quotient:p=3,n=2", 3, 243},
      {"gamma:n=2", 2, 4},
      {"gamma:n=3", 2, 8},
      {"gamma:n=4", 2, 16},
      {"gamma:n=5", 2, 32},
      {"gamma:n=6", 2, 64},
      {"gamma:n=7", 2, 128},
      {"gamma:n=8", 2, 256},
      {"gamma:n=9", 2, 512},
      {"gamma:n=10", 2, 1024},
      {"gamma:n=3,full", 2, 16},
      {"gamma:n=6,full", 2, 128},
      {"gamma:n=9,full", 2, 1024},
      {"product:(Q8,cyclic:2)", 2, 16},
      {"product:(Q8,cyclic:4)", 2, 32},
      {"product:(heisenberg:p=3,cyclic:3)", 3, 81},
      {"product:(heisenberg:p=3,cyclic:9,cyclic:3)", 3, 729},
      {"product:(dihedral:4,cyclic:8)", 2, 64},
  };
  std::vector<CatalogEntry> out;
  for (const auto& e : kAll)
    if (e.order <= max_order) out.push_back(e);
  return out;
}

}  // namespace essdim
