#include <functional>

#include "doctest.h"
#include "essdim/clifford.hpp"
#include "essdim/oracles.hpp"
#include "essdim/parse.hpp"

using namespace essdim;
using namespace essdim::group;

namespace {

std::string error_of(const std::function<void()>& f, ErrorCode expected = ErrorCode::ParseError) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.code() == expected);
    return e.what();
  }
  FAIL("no error raised");
  return {};
}

}  // namespace

TEST_CASE("group specs") {
  CHECK(parse_group_spec("trivial").order() == 1);
  CHECK(oracles::is_isomorphic(parse_group_spec("Q8"), quaternion8()));
  CHECK(oracles::is_isomorphic(parse_group_spec("cyclic:12"), cyclic(12)));
  CHECK(oracles::is_isomorphic(parse_group_spec("cyclic:n=12"), cyclic(12)));
  CHECK(oracles::is_isomorphic(parse_group_spec("dihedral:4"), dihedral(4)));
  CHECK(parse_group_spec("heisenberg:p=5").order() == 125);
  CHECK(parse_group_spec("extraspecial:p=3,m=2,exp=p").order() == 243);
  CHECK(oracles::is_isomorphic(parse_group_spec("extraspecial:p=2,m=1,exp=Q"), quaternion8()));
  CHECK(oracles::is_isomorphic(parse_group_spec(" extraspecial : p = 2 , m = 1 , exp = D "), dihedral(4)));
  CHECK(parse_group_spec("semidirect:p=3,r=2,s=1").order() == 27);
  CHECK(parse_group_spec("jly:p=2,n=2").order() == 64);
  CHECK(parse_group_spec("jly_quotient:p=3,n=2").order() == 243);
  CHECK(parse_group_spec("gamma:n=5").order() == 32);
  CHECK(parse_group_spec("gamma:n=5,full").order() == 64);
  CHECK(parse_group_spec("gamma:n=5,even=false").order() == 64);
}

TEST_CASE("products") {
  const auto G = parse_group_spec("product:(cyclic:2,cyclic:4)");
  CHECK(oracles::is_isomorphic(G, direct_product(cyclic(2), cyclic(4))));
  const auto H = parse_group_spec("product:(Q8, extraspecial:p=2,m=1,exp=D, trivial)");
  CHECK(H.order() == 64);
  const auto K = parse_group_spec("product:(product:(cyclic:3,cyclic:3),heisenberg:p=3)");
  CHECK(K.order() == 243);
  CHECK(infer_prime(K) == 3);
  CHECK(infer_prime(parse_group_spec("cyclic:6")) == 0);
  CHECK(infer_prime(parse_group_spec("trivial")) == 0);
  CHECK(infer_prime(parse_group_spec("gamma:n=4")) == 2);
}

TEST_CASE("group spec errors report positions") {
  CHECK(error_of([] { parse_group_spec("bogus:3"); }).find("position 0") != std::string::npos);
  CHECK(error_of([] { parse_group_spec("cyclic:"); }).find("position 7") != std::string::npos);
  CHECK(error_of([] { parse_group_spec("heisenberg:q=3"); }).find("missing parameter 'p'") != std::string::npos);
  CHECK(error_of([] { parse_group_spec("cyclic:4 x"); }).find("trailing") != std::string::npos);
  CHECK(error_of([] { parse_group_spec("product:(cyclic:2"); }).find("expected ')'") != std::string::npos);
  error_of([] { parse_group_spec("extraspecial:p=3,m=1,exp=Z"); });
  error_of([] { parse_group_spec("cyclic:4,color=red"); });
  error_of([] { parse_group_spec("heisenberg:p=3,p=5"); });
  error_of([] { parse_group_spec(""); });
  // Semantic errors come from the constructors.
  error_of([] { parse_group_spec("heisenberg:p=4"); }, ErrorCode::InvalidArgument);
}

TEST_CASE("field profiles") {
  const auto f = parse_field_profile("char=0;level(2)=2;level(3)=inf;zeta48=true");
  CHECK(f.characteristic == 0);
  CHECK(f.level(2) == 2);
  CHECK(f.level(3) == edim::FieldProfile::kInfiniteLevel);
  CHECK(f.level(5) == 0);
  CHECK(f.two_adic_flag);
  CHECK(parse_field_profile("").level(2) == 1);
  CHECK(parse_field_profile("char=7").characteristic == 7);
  CHECK(edim::to_string(f) == "char=0;level(2)=2;level(3)=inf;zeta48=true");
  error_of([] { parse_field_profile("char=3;level(3)=1"); }, ErrorCode::InconsistentProfile);
  error_of([] { parse_field_profile("char=6"); }, ErrorCode::InconsistentProfile);
  CHECK(error_of([] { parse_field_profile("char=0;level(4)=1"); }).find("prime") != std::string::npos);
  error_of([] { parse_field_profile("char=0;zeta48=maybe"); });
  error_of([] { parse_field_profile("colour=blue"); });
  error_of([] { parse_field_profile("char"); });
  error_of([] { parse_field_profile("char=0;char=2"); });
}
