#pragma once

#include <string>

#include "essdim/edim.hpp"
#include "essdim/group.hpp"

namespace essdim {

/// Group mini-language:
///   trivial | Q8 | cyclic:N | dihedral:N | heisenberg:p=P
///   extraspecial:p=P,m=M,exp=(p|p2|D|Q)  | semidirect:p=P,r=R,s=S
///   jly:p=P,n=N (the n-fold power of the order-p^3 group)
///   jly_quotient:p=P,n=N | gamma:n=N[,full] | product:(SPEC,SPEC,...)
/// Errors carry the 0-based character position.
group::FiniteGroup parse_group_spec(const std::string& s);

/// p when G is a nontrivial p-group, else 0.
std::uint64_t infer_prime(const group::FiniteGroup& G);

/// "char=0;level(2)=2;level(3)=inf;zeta48=true"
edim::FieldProfile parse_field_profile(const std::string& s);

}  // namespace essdim
