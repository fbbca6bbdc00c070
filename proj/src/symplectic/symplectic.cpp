#include "essdim/symplectic.hpp"

#include <numeric>
#include <sstream>

namespace essdim::symplectic {

std::uint64_t SymplecticModule::pairing_order(Elem a, Elem b) const {
  const std::uint64_t e = pairing(a, b);
  return n / std::gcd(e, n);
}

namespace {

std::uint64_t inverse_mod(std::uint64_t k, std::uint64_t m) {
  if (m == 1) return 0;
  for (std::uint64_t x = 1; x < m; ++x)
    if (k * x % m == 1) return x;
  fail(ErrorCode::InternalError, "no modular inverse");
}

Elem default_generator(const Subgroup& Z) {
  const FiniteGroup& G = Z.parent();
  Elem best = G.identity();
  std::size_t best_order = 1;
  for (Elem x : Z.members()) {  // members are sorted: first hit is the smallest index
    const std::size_t o = G.element_order(x);
    if (o > best_order) {
      best_order = o;
      best = x;
    }
  }
  return best;
}

void verify_module(const SymplecticModule& M, const std::vector<std::uint64_t>& dlog) {
  const FiniteGroup& G = M.G;
  const std::size_t na = M.A.order();
  // Representative independence: every commutator agrees with the table.
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t h = 0; h < G.order(); ++h) {
      const Elem c = G.commutator(static_cast<Elem>(g), static_cast<Elem>(h));
      if (!M.Z.contains(c) || dlog[c] != M.pairing(M.projection[g], M.projection[h]))
        fail(ErrorCode::InternalError, "commutator pairing depends on coset representatives");
    }
  for (std::size_t a = 0; a < na; ++a) {
    const Elem ea = static_cast<Elem>(a);
    if (M.pairing(ea, ea) != 0) fail(ErrorCode::InternalError, "pairing is not alternating");
    bool kernel = a != M.A.identity();
    for (std::size_t b = 0; b < na; ++b) {
      const Elem eb = static_cast<Elem>(b);
      if ((M.pairing(ea, eb) + M.pairing(eb, ea)) % M.n != 0)
        fail(ErrorCode::InternalError, "pairing is not skew");
      if (M.pairing(ea, eb) != 0) kernel = false;
    }
    if (kernel) fail(ErrorCode::InternalError, "pairing is degenerate");
  }
  // Additivity in the first slot on a generating set implies bilinearity.
  for (Elem s : group::generating_set(M.A))
    for (std::size_t b = 0; b < na; ++b)
      for (std::size_t c = 0; c < na; ++c) {
        const Elem sb = M.A.mul(s, static_cast<Elem>(b));
        if (M.pairing(sb, static_cast<Elem>(c)) !=
            (M.pairing(s, static_cast<Elem>(c)) + M.pairing(static_cast<Elem>(b), static_cast<Elem>(c))) % M.n)
          fail(ErrorCode::InternalError, "pairing is not bilinear");
      }
}

}  // namespace

SymplecticModule commutator_form_with_generator(const FiniteGroup& G, std::uint64_t p, Elem z, LiftChoice lift) {
  require(group::is_theorem_hypothesis(G, p), ErrorCode::HypothesisFailed,
          "G must be a p-group whose commutator subgroup is central and cyclic");
  const Subgroup C = group::center(G);
  group::Quotient Q = group::quotient(G, C);
  Subgroup D = group::derived_subgroup(G);
  require(D.contains(z) && G.element_order(z) == D.order(), ErrorCode::InvalidArgument,
          "z must generate the commutator subgroup");

  std::vector<Elem> section = Q.section;
  if (lift == LiftChoice::LargestMember)
    for (std::size_t g = 0; g < G.order(); ++g) section[Q.projection[g]] = static_cast<Elem>(g);

  std::vector<std::uint64_t> dlog(G.order(), 0);
  {
    Elem x = G.identity();
    for (std::uint64_t k = 0; k < D.order(); ++k) {
      dlog[x] = k;
      x = G.mul(x, z);
    }
  }

  const std::size_t na = Q.group.order();
  std::vector<std::uint64_t> omega(na * na);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b) omega[a * na + b] = dlog[G.commutator(section[a], section[b])];

  SymplecticModule M{G,         Q.group, std::move(Q.projection), std::move(section), std::move(D), z,
                     0,         std::move(omega)};
  M.n = M.Z.order();
  verify_module(M, dlog);
  return M;
}

SymplecticModule commutator_form(const FiniteGroup& G, std::uint64_t p, LiftChoice lift) {
  require(group::is_theorem_hypothesis(G, p), ErrorCode::HypothesisFailed,
          "G must be a p-group whose commutator subgroup is central and cyclic");
  return commutator_form_with_generator(G, p, default_generator(group::derived_subgroup(G)), lift);
}

// Greedy symplectic reduction: take the pair with the largest pairing order d
// in the current nondegenerate piece S, rescale the second element so the
// pairing is exactly z^{n/d}, and continue in the orthogonal complement.
HyperbolicDecomposition symplectic_basis(const SymplecticModule& M) {
  const FiniteGroup& A = M.A;
  std::vector<Elem> S(A.order());
  std::iota(S.begin(), S.end(), Elem{0});
  HyperbolicDecomposition D;
  while (S.size() > 1) {
    Elem a = 0, b = 0;
    std::uint64_t d = 1;
    for (Elem x : S)
      for (Elem y : S) {
        const std::uint64_t o = M.pairing_order(x, y);
        if (o > d) {
          d = o;
          a = x;
          b = y;
        }
      }
    if (d == 1) fail(ErrorCode::ReductionFailed, "degenerate piece left during reduction");
    const std::uint64_t step = M.n / d;
    const std::uint64_t k = M.pairing(a, b) / step;
    b = A.pow(b, static_cast<long long>(inverse_mod(k % d, d)));
    if (M.pairing(a, b) != step) fail(ErrorCode::ReductionFailed, "rescaling did not normalize the pairing");

    std::vector<Elem> rest;
    for (Elem x : S)
      if (M.pairing(x, a) == 0 && M.pairing(x, b) == 0) rest.push_back(x);
    if (rest.size() * d * d != S.size()) fail(ErrorCode::ReductionFailed, "orthogonal complement has wrong order");
    D.pairs.emplace_back(a, b);
    D.d.push_back(d);
    S = std::move(rest);
  }
  if (auto problem = check_decomposition(M, D)) fail(ErrorCode::ReductionFailed, *problem);
  return D;
}

std::optional<std::string> check_decomposition(const SymplecticModule& M, const HyperbolicDecomposition& D) {
  const FiniteGroup& A = M.A;
  const std::size_t r = D.r();
  if (D.pairs.size() != r) return "pair count does not match invariant count";
  for (std::size_t i = 0; i < r; ++i) {
    if (i > 0 && D.d[i - 1] % D.d[i] != 0) return "(a) d_i does not divide d_{i-1}";
  }
  if (r > 0 && D.d.back() <= 1) return "(a) d_r must exceed 1";
  for (std::size_t i = 0; i < r; ++i) {
    const auto [x, y] = D.pairs[i];
    if (A.element_order(x) != D.d[i] || A.element_order(y) != D.d[i]) return "(b) generator order differs from d_i";
    const Elem pair[2] = {x, y};
    if (group::generated_subgroup(A, pair).order() != D.d[i] * D.d[i]) return "(b) A_i is not (Z/d_i)^2";
    if (M.pairing(x, y) != M.n / D.d[i]) return "(d) omega(a_i, a_{r+i}) != z^{n/d_i}";
    for (std::size_t j = 0; j < r; ++j) {
      if (j == i) continue;
      const auto [u, v] = D.pairs[j];
      for (Elem s : {x, y})
        for (Elem t : {u, v})
          if (M.pairing(s, t) != 0) return "(c) A_i and A_j are not orthogonal";
    }
  }
  std::uint64_t prod = 1;
  std::vector<Elem> all;
  for (std::size_t i = 0; i < r; ++i) {
    prod *= D.d[i] * D.d[i];
    all.push_back(D.pairs[i].first);
    all.push_back(D.pairs[i].second);
  }
  if (prod != A.order()) return "(e) product of d_i^2 differs from |A|";
  if (group::generated_subgroup(A, all).order() != A.order()) return "(e) the A_i do not generate A";
  return std::nullopt;
}

std::uint64_t sqrt_order(const SymplecticModule& M, const HyperbolicDecomposition& D) {
  std::uint64_t prod = 1;
  for (std::uint64_t d : D.d) prod *= d;
  require(prod * prod == M.A.order(), ErrorCode::NotASquare,
          "|A| = " + std::to_string(M.A.order()) + " is not the square of prod d_i = " + std::to_string(prod));
  return prod;
}

std::uint64_t sqrt_order(const SymplecticModule& M) { return sqrt_order(M, symplectic_basis(M)); }

bool is_isotropic(const SymplecticModule& M, const Subgroup& L) {
  for (Elem x : L.members())
    for (Elem y : L.members())
      if (M.pairing(x, y) != 0) return false;
  return true;
}

Subgroup lagrangian(const SymplecticModule& M, const HyperbolicDecomposition& D) {
  std::vector<Elem> gens;
  std::uint64_t prod = 1;
  for (std::size_t i = 0; i < D.r(); ++i) {
    gens.push_back(D.pairs[i].first);
    prod *= D.d[i];
  }
  Subgroup L = group::generated_subgroup(M.A, gens);
  if (L.order() != prod || !is_isotropic(M, L))
    fail(ErrorCode::InternalError, "Lagrangian subgroup has the wrong order or is not isotropic");
  return L;
}

}  // namespace essdim::symplectic
