#include <sstream>

#include "essdim/group.hpp"

namespace essdim::group {

namespace {

void check_cap(std::uint64_t order) {
  require(order <= FiniteGroup::kMaxOrder, ErrorCode::OrderCapExceeded,
          "requested order " + std::to_string(order) + " exceeds the table cap " +
              std::to_string(FiniteGroup::kMaxOrder));
}

void check_prime(std::uint64_t p) {
  require(is_prime(p), ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
}

// Overflow-safe order computation for cap checks.
std::uint64_t capped_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (r > FiniteGroup::kMaxOrder) return FiniteGroup::kMaxOrder + 1;
    r *= base;
  }
  return r;
}

}  // namespace

FiniteGroup cyclic(std::uint64_t n) {
  require(n >= 1, ErrorCode::InvalidArgument, "cyclic group order must be positive");
  check_cap(n);
  std::vector<std::string> labels;
  for (std::uint64_t k = 0; k < n; ++k) labels.push_back(k == 0 ? "1" : (k == 1 ? "g" : "g^" + std::to_string(k)));
  return FiniteGroup::from_rule(n, [n](Elem a, Elem b) { return static_cast<Elem>((a + b) % n); },
                                std::move(labels));
}

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H) {
  const std::uint64_t m = H.order();
  check_cap(G.order() * m);
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t h = 0; h < m; ++h)
      labels.push_back("(" + G.label(static_cast<Elem>(g)) + "," + H.label(static_cast<Elem>(h)) + ")");
  return FiniteGroup::from_rule(
      G.order() * m,
      [&](Elem a, Elem b) {
        return static_cast<Elem>(G.mul(a / m, b / m) * m + H.mul(a % m, b % m));
      },
      std::move(labels));
}

// r^a s^i, code a + n*i; s r s^-1 = r^-1.
FiniteGroup dihedral(std::uint64_t n) {
  require(n >= 1, ErrorCode::InvalidArgument, "dihedral parameter must be positive");
  check_cap(2 * n);
  std::vector<std::string> labels;
  for (std::uint64_t i = 0; i < 2; ++i)
    for (std::uint64_t a = 0; a < n; ++a) {
      std::string l = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
      if (i) l += "s";
      labels.push_back(l.empty() ? "1" : l);
    }
  return FiniteGroup::from_rule(
      2 * n,
      [n](Elem x, Elem y) {
        const std::uint64_t a = x % n, i = x / n, b = y % n, j = y / n;
        const std::uint64_t c = i ? (a + n - b) % n : (a + b) % n;
        return static_cast<Elem>(c + n * ((i + j) % 2));
      },
      std::move(labels));
}

// Unit quaternions; code = 2*unit + sign, unit in {1, i, j, k}.
FiniteGroup quaternion8() {
  // unit product table: u*v = sign * w
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const char* kNames[4] = {"1", "i", "j", "k"};
  std::vector<std::string> labels;
  for (int u = 0; u < 4; ++u)
    for (int s = 0; s < 2; ++s) labels.push_back(std::string(s ? "-" : "") + kNames[u]);
  return FiniteGroup::from_rule(
      8,
      [](Elem x, Elem y) {
        const int u = static_cast<int>(x / 2), v = static_cast<int>(y / 2);
        const int s = static_cast<int>(x % 2) ^ static_cast<int>(y % 2) ^ kSign[u][v];
        return static_cast<Elem>(2 * kUnit[u][v] + s);
      },
      std::move(labels));
}

FiniteGroup semidirect_cyclic(std::uint64_t p, unsigned r, unsigned s) {
  check_prime(p);
  require(p != 2, ErrorCode::InvalidArgument, "semidirect_cyclic needs an odd prime");
  require(s >= 1 && s < r, ErrorCode::InvalidArgument,
          "the automorphism group of C_{p^r} has a subgroup of order p^s only for 1 <= s <= r-1");
  check_cap(capped_pow(p, r + s));
  const std::uint64_t pr = ipow(p, r), ps = ipow(p, s);
  // t = 1 + p^{r-s} generates the order-p^s subgroup of (Z/p^r)^*.
  const std::uint64_t t = (1 + ipow(p, r - s)) % pr;
  std::vector<std::uint64_t> tpow(ps);
  tpow[0] = 1;
  for (std::uint64_t k = 1; k < ps; ++k) tpow[k] = tpow[k - 1] * t % pr;
  std::vector<std::string> labels;
  for (std::uint64_t b = 0; b < ps; ++b)
    for (std::uint64_t a = 0; a < pr; ++a) {
      std::string l;
      if (a) l += a == 1 ? "a" : "a^" + std::to_string(a);
      if (b) l += b == 1 ? "b" : "b^" + std::to_string(b);
      labels.push_back(l.empty() ? "1" : l);
    }
  return FiniteGroup::from_rule(
      pr * ps,
      [=, &tpow](Elem x, Elem y) {
        const std::uint64_t a = x % pr, b = x / pr, a2 = y % pr, b2 = y / pr;
        return static_cast<Elem>((a + tpow[b] * a2) % pr + pr * ((b + b2) % ps));
      },
      std::move(labels));
}

// Central extension of F_p^{2m} by Z/p given by a 2-cocycle. Code: c + p*v,
// v holding digits x_1..x_m, y_1..y_m in base p. The bilinear part sum x_i y'_i
// gives the commutator form; the type adds a symmetric correction:
// a carry on x_1 (exponent p^2, odd p) or x_1 x'_1 + y_1 y'_1 (quaternion, p = 2).
FiniteGroup extraspecial(std::uint64_t p, unsigned m, ExtraspecialType type) {
  check_prime(p);
  require(m >= 1, ErrorCode::InvalidArgument, "extraspecial needs m >= 1");
  const bool odd_type = type == ExtraspecialType::ExponentP || type == ExtraspecialType::ExponentP2;
  require(odd_type == (p != 2), ErrorCode::InvalidArgument,
          p == 2 ? "p = 2 extraspecial groups have type Dihedral or Quaternion"
                 : "odd p extraspecial groups have type ExponentP or ExponentP2");
  check_cap(capped_pow(p, 2 * m + 1));
  const std::uint64_t vsize = ipow(p, 2 * m);
  const std::uint64_t order = vsize * p;

  std::vector<std::uint64_t> place(2 * m);
  for (unsigned i = 0; i < 2 * m; ++i) place[i] = ipow(p, i);
  auto digit = [&](std::uint64_t v, unsigned i) { return (v / place[i]) % p; };

  std::vector<std::string> labels;
  for (std::uint64_t code = 0; code < order; ++code) {
    const std::uint64_t c = code % p, v = code / p;
    std::ostringstream os;
    os << "[x:";
    for (unsigned i = 0; i < m; ++i) os << digit(v, i);
    os << " y:";
    for (unsigned i = 0; i < m; ++i) os << digit(v, m + i);
    os << " z:" << c << "]";
    labels.push_back(os.str());
  }
  return FiniteGroup::from_rule(
      order,
      [=](Elem a, Elem b) {
        const std::uint64_t c1 = a % p, v1 = a / p, c2 = b % p, v2 = b / p;
        std::uint64_t c = c1 + c2;
        std::uint64_t v = 0;
        for (unsigned i = 0; i < 2 * m; ++i) v += ((digit(v1, i) + digit(v2, i)) % p) * place[i];
        for (unsigned i = 0; i < m; ++i) c += digit(v1, i) * digit(v2, m + i);
        switch (type) {
          case ExtraspecialType::ExponentP2:
            if (digit(v1, 0) + digit(v2, 0) >= p) c += 1;
            break;
          case ExtraspecialType::Quaternion:
            c += digit(v1, 0) * digit(v2, 0) + digit(v1, m) * digit(v2, m);
            break;
          default:
            break;
        }
        return static_cast<Elem>((c % p) + p * v);
      },
      std::move(labels));
}

FiniteGroup heisenberg(std::uint64_t p) {
  check_prime(p);
  return extraspecial(p, 1, p == 2 ? ExtraspecialType::Dihedral : ExtraspecialType::ExponentP);
}

FiniteGroup jly_group(std::uint64_t p, unsigned n) {
  check_prime(p);
  require(n >= 1, ErrorCode::InvalidArgument, "jly_group needs n >= 1");
  check_cap(capped_pow(p, 3 * n));
  const FiniteGroup gamma = heisenberg(p);
  FiniteGroup g = gamma;
  for (unsigned i = 1; i < n; ++i) g = direct_product(g, gamma);
  return g;
}

Subgroup jly_kernel(const FiniteGroup& jly, std::uint64_t p, unsigned n) {
  // In heisenberg(p) the central element z^c has code c; product codes are
  // base-p^3 numerals with the first factor most significant.
  const std::uint64_t q = p * p * p;
  require(jly.order() == ipow(q, n), ErrorCode::InvalidArgument, "group is not jly_group(p, n)");
  std::vector<Elem> members;
  const std::uint64_t tuples = ipow(p, n);
  for (std::uint64_t code = 0; code < tuples; ++code) {
    std::uint64_t sum = 0, idx = 0, rest = code;
    for (unsigned i = 0; i < n; ++i) {
      const std::uint64_t c = rest % p;
      rest /= p;
      sum += c;
      idx = idx * q + c;
    }
    if (sum % p == 0) members.push_back(static_cast<Elem>(idx));
  }
  return Subgroup(jly, std::move(members));
}

// Gamma^n / H_n directly: the central coordinates collapse to their sum, which
// leaves the cocycle sum_i x_i y'_i on F_p^{2n}.
FiniteGroup jly_quotient(std::uint64_t p, unsigned n) {
  check_prime(p);
  require(n >= 1, ErrorCode::InvalidArgument, "jly_quotient needs n >= 1");
  return extraspecial(p, n, p == 2 ? ExtraspecialType::Dihedral : ExtraspecialType::ExponentP);
}

}  // namespace essdim::group
