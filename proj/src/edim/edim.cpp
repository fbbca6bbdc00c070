#include "essdim/edim.hpp"

#include <algorithm>

#include "essdim/symplectic.hpp"

namespace essdim::edim {

namespace {

constexpr const char* kPGroupExact =
    "p-group formula sqrt|G/C(G)| + rank C(G) - 1 (commutator central and cyclic, char != p, zeta_{exp G} in k)";
constexpr const char* kPGroupLower = "p-group lower bound sqrt|G/C(G)| + rank C(G) - 1 (char != p)";
constexpr const char* kFlorence = "Florence: ed C_{p^m} = p^{m-n} for n < m, 1 for n >= m";
constexpr const char* kLedet = "Ledet: ed D_{p^m} = ed C_{p^m} for odd p, zeta_p in k";
constexpr const char* kSemidirect = "ed(C_{p^r} x| C_{p^s}) = p^s for s <= r/2, zeta_p in k";
constexpr const char* kNonabelianFloor = "non-abelian p-group: ed >= p";
constexpr const char* kTrivialLower = "nontrivial group: ed >= 1";
constexpr const char* kSpin = "Spin bounds via G_n (char != 2, sqrt(-1) in k)";
constexpr const char* kRost = "Rost's table of ed Spin_n, 3 <= n <= 14";
constexpr const char* kPin = "Pin bounds via the preimage of the diagonal of O_n (char != 2, sqrt(-1) in k)";
constexpr const char* kHSpin = "half-spin bounds via G_n/<eta> (char != 2, zeta_4 in k)";
constexpr const char* kCurves = "moduli of curves M_{g,n} (char 0)";
constexpr const char* kHyperelliptic = "hyperelliptic curves H_g: 2g (g odd), 2g+1 (g even) (char 0)";
constexpr const char* kNonNegative = "ed >= 0";

std::int64_t pow_int(std::uint64_t p, unsigned k) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    require(!__builtin_mul_overflow(r, static_cast<std::int64_t>(p), &r), ErrorCode::InvalidArgument,
            "value exceeds 64-bit range");
  }
  return r;
}

EdBound exact(std::int64_t v, const std::string& cite) { return EdBound{v, v, {{"value", cite}}}; }

EdBound checked(EdBound b) {
  if (!b.is_valid()) fail(ErrorCode::InternalError, "malformed bound " + to_string(b));
  return b;
}

void check_odd_prime(std::uint64_t p) {
  require(group::is_prime(p), ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  require(p != 2, ErrorCode::EvenPrime, "p must be odd");
}

}  // namespace

std::string ext_to_string(std::int64_t v) {
  if (v == kPosInf) return "+inf";
  if (v == kNegInf) return "-inf";
  return std::to_string(v);
}

std::int64_t FieldProfile::level(std::uint64_t p) const {
  if (auto it = root_level.find(p); it != root_level.end()) return it->second;
  return p == 2 && characteristic != 2 ? 1 : 0;
}

void FieldProfile::validate() const {
  require(characteristic == 0 || group::is_prime(characteristic), ErrorCode::InconsistentProfile,
          "characteristic must be 0 or a prime");
  for (const auto& [p, n] : root_level) {
    require(group::is_prime(p), ErrorCode::InconsistentProfile, "level(" + std::to_string(p) + "): not a prime");
    require(n >= 0, ErrorCode::InconsistentProfile, "negative root level");
    require(!(p == characteristic && n >= 1), ErrorCode::InconsistentProfile,
            "no primitive " + std::to_string(p) + "-th root of unity exists in characteristic " + std::to_string(p));
  }
  require(!(characteristic == 2 && root_level.count(2) && root_level.at(2) > 0), ErrorCode::InconsistentProfile,
          "level(2) must be 0 in characteristic 2");
}

std::string to_string(const FieldProfile& f) {
  std::string s = "char=" + std::to_string(f.characteristic);
  for (const auto& [p, n] : f.root_level)
    s += ";level(" + std::to_string(p) + ")=" + (n == FieldProfile::kInfiniteLevel ? "inf" : std::to_string(n));
  if (f.two_adic_flag) s += ";zeta48=true";
  return s;
}

bool EdBound::is_valid() const {
  if (lower > upper || lower == kPosInf || upper == kNegInf) return lower == kPosInf && upper == kPosInf;
  auto cited = [&](const char* which) {
    return std::any_of(provenance.begin(), provenance.end(),
                       [&](const auto& e) { return e.first == which || e.first == "value"; });
  };
  if (lower != kNegInf && !cited("lower")) return false;
  if (upper != kPosInf && !cited("upper")) return false;
  return true;
}

std::string to_string(const EdBound& b) {
  if (b.is_exact()) return std::to_string(b.lower);
  return "[" + ext_to_string(b.lower) + ", " + ext_to_string(b.upper) + "]";
}

std::uint64_t ed_lower_ind(const group::FiniteGroup& G, std::uint64_t p) {
  return symplectic::sqrt_order(symplectic::commutator_form(G, p));
}

EdBound ed_pgroup(const group::FiniteGroup& G, std::uint64_t p, const FieldProfile& profile) {
  profile.validate();
  require(profile.characteristic != p, ErrorCode::BadCharacteristic, "characteristic equals p");
  require(group::is_theorem_hypothesis(G, p), ErrorCode::HypothesisFailed,
          "G must be a p-group whose commutator subgroup is central and cyclic");
  const auto rank = group::abelian_invariants(group::center(G)).rank();
  const std::int64_t v = static_cast<std::int64_t>(ed_lower_ind(G, p) + rank) - 1;

  std::uint64_t e = group::exponent(G);
  std::int64_t k = 0;
  for (; e > 1; e /= p) ++k;
  if (profile.level(p) >= k) return checked(exact(v, kPGroupExact));
  return checked(EdBound{v, kPosInf, {{"lower", kPGroupLower}}});
}

std::uint64_t ed_nonabelian_floor(const group::FiniteGroup& G, std::uint64_t p) {
  require(group::is_p_group(G, p), ErrorCode::HypothesisFailed, "G is not a p-group");
  require(!G.is_abelian(), ErrorCode::AbelianInput, "G is abelian");
  return p;
}

EdBound ed_cyclic(std::uint64_t p, unsigned m, const FieldProfile& profile) {
  profile.validate();
  require(group::is_prime(p), ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  require(m >= 1, ErrorCode::InvalidArgument, "m must be at least 1");
  require(profile.characteristic != p, ErrorCode::BadCharacteristic, "characteristic equals p");
  const std::int64_t n = profile.level(p);
  if (n == 0)
    return checked(EdBound{1, kPosInf, {{"lower", kTrivialLower}, {"upper", "no root of unity of order p in k"}}});
  if (n >= static_cast<std::int64_t>(m)) return checked(exact(1, kFlorence));
  if (p == 2 && n == 1 && !profile.two_adic_flag)
    return checked(EdBound{1, pow_int(2, m - 1),
                           {{"lower", kTrivialLower},
                            {"upper", std::string(kFlorence) + "; hypothesis k(zeta_4) != k(zeta_8) not assumed"}}});
  return checked(exact(pow_int(p, m - static_cast<unsigned>(n)), kFlorence));
}

EdBound ed_dihedral(std::uint64_t p, unsigned m, const FieldProfile& profile) {
  check_odd_prime(p);
  profile.validate();
  require(profile.level(p) >= 1, ErrorCode::NoRootOfUnity, "zeta_" + std::to_string(p) + " is not in k");
  EdBound b = ed_cyclic(p, m, profile);
  b.provenance.emplace_back(b.is_exact() ? "value" : "lower", kLedet);
  return b;
}

EdBound ed_semidirect(std::uint64_t p, unsigned r, unsigned s, const FieldProfile& profile) {
  check_odd_prime(p);
  profile.validate();
  require(s >= 1 && s < r, ErrorCode::InvalidArgument, "need 1 <= s < r");
  require(profile.characteristic != p, ErrorCode::BadCharacteristic, "characteristic equals p");
  require(profile.level(p) >= 1, ErrorCode::NoRootOfUnity, "zeta_" + std::to_string(p) + " is not in k");
  if (2 * s <= r) return checked(exact(pow_int(p, s), kSemidirect));
  // No exact formula applies; the group is non-abelian.
  return checked(EdBound{static_cast<std::int64_t>(p), kPosInf, {{"lower", kNonabelianFloor}}});
}

std::pair<std::int64_t, std::int64_t> spin_interval_raw(unsigned n) {
  require(n >= 3 && n <= 120, ErrorCode::BadDimension, "ed_spin needs 3 <= n <= 120");
  const std::int64_t top = pow_int(2, (n - 1) / 2);
  const std::int64_t extra = n % 4 == 0 ? 1 : 0;
  const std::int64_t dim = static_cast<std::int64_t>(n) * (n - 1) / 2;
  return {top - dim + extra, top + extra};
}

std::optional<std::int64_t> rost_value(unsigned n) {
  static constexpr std::int64_t kRost[] = {0, 0, 0, 0, 4, 5, 5, 4, 5, 6, 6, 7};
  if (n < 3 || n > 14) return std::nullopt;
  return kRost[n - 3];
}

EdBound ed_spin(unsigned n) {
  const auto [lo, hi] = spin_interval_raw(n);
  if (auto v = rost_value(n)) return checked(exact(*v, kRost));
  return checked(EdBound{std::max<std::int64_t>(lo, 0), hi, {{"lower", lo >= 0 ? kSpin : kNonNegative}, {"upper", kSpin}}});
}

EdBound ed_pin(unsigned n) {
  require(n >= 1 && n <= 120, ErrorCode::BadDimension, "ed_pin needs 1 <= n <= 120");
  const std::int64_t top = pow_int(2, n / 2) + (n % 4 == 1 ? 1 : 0);
  const std::int64_t lo = top - static_cast<std::int64_t>(n) * (n - 1) / 2;
  return checked(EdBound{std::max<std::int64_t>(lo, 0), top, {{"lower", lo >= 0 ? kPin : kNonNegative}, {"upper", kPin}}});
}

EdBound ed_hspin(unsigned n) {
  require(n >= 4 && n % 4 == 0 && n <= 120, ErrorCode::BadDimension, "ed_hspin needs n divisible by 4, 4 <= n <= 120");
  const std::int64_t top = pow_int(2, (n - 2) / 2);
  const std::int64_t lo = top - static_cast<std::int64_t>(n) * (n - 1) / 2;
  return checked(
      EdBound{std::max<std::int64_t>(lo, 0), top, {{"lower", lo >= 0 ? kHSpin : kNonNegative}, {"upper", kHSpin}}});
}

EdBound ed_mgn(unsigned g, unsigned n) {
  if ((g == 0 && n == 0) || (g == 1 && n == 1)) return exact(2, kCurves);
  if (g == 0 && (n == 1 || n == 2)) return exact(0, kCurves);
  if (g == 1 && n == 0) return EdBound{kPosInf, kPosInf, {{"value", kCurves}}};
  if (g == 2 && n == 0) return exact(5, kCurves);
  return exact(3 * static_cast<std::int64_t>(g) - 3 + n, kCurves);
}

EdBound ed_hyperelliptic(unsigned g) {
  require(g >= 2, ErrorCode::InvalidArgument, "hyperelliptic genus must be at least 2");
  return exact(g % 2 ? 2 * std::int64_t{g} : 2 * std::int64_t{g} + 1, kHyperelliptic);
}

JlyGap jly_gap(std::uint64_t p, unsigned n, const FieldProfile& profile) {
  require(group::is_prime(p), ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  require(n >= 1, ErrorCode::InvalidArgument, "n must be at least 1");
  JlyGap gap{n * p, static_cast<std::uint64_t>(pow_int(p, n)), false};
  std::uint64_t order = p;
  for (unsigned i = 0; i < 2 * n && order <= group::FiniteGroup::kMaxOrder; ++i) order *= p;
  if (order <= group::FiniteGroup::kMaxOrder) {
    const EdBound q = ed_pgroup(group::jly_quotient(p, n), p, profile);
    if (q.lower != static_cast<std::int64_t>(gap.exact_quotient))
      fail(ErrorCode::InternalError, "quotient value disagrees with the Cayley-table computation");
    gap.table_checked = true;
  }
  return gap;
}

EdBound combine_bounds(const std::vector<EdBound>& bounds, CombineRule rule) {
  require(!bounds.empty(), ErrorCode::InvalidArgument, "no bounds to combine");
  EdBound out;
  if (rule == CombineRule::ProductUpper) {
    out.lower = kNegInf;
    out.upper = 0;
    for (const auto& b : bounds) {
      if (b.upper == kPosInf || out.upper == kPosInf) {
        out.upper = kPosInf;
        continue;
      }
      require(!__builtin_add_overflow(out.upper, b.upper, &out.upper), ErrorCode::InvalidArgument, "overflow");
    }
    if (out.upper != kPosInf) out.provenance.emplace_back("upper", "ed(X x Y) <= ed X + ed Y");
    for (const auto& b : bounds)
      for (const auto& e : b.provenance)
        if (e.first != "lower") out.provenance.emplace_back("upper", e.second);
    return out;
  }
  out.lower = kNegInf;
  out.upper = kPosInf;
  for (const auto& b : bounds) {
    out.lower = std::max(out.lower, b.lower);
    out.upper = std::min(out.upper, b.upper);
    out.provenance.insert(out.provenance.end(), b.provenance.begin(), b.provenance.end());
  }
  require(out.lower <= out.upper, ErrorCode::EmptyIntersection,
          "intersection [" + ext_to_string(out.lower) + ", " + ext_to_string(out.upper) + "] is empty");
  return out;
}

}  // namespace essdim::edim
