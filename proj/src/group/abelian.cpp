#include <algorithm>
#include <map>

#include "essdim/group.hpp"

namespace essdim::group {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

Elem AbelianBasis::element(const FiniteGroup& G, std::span<const std::uint64_t> coords) const {
  Elem x = G.identity();
  for (std::size_t i = 0; i < generators.size(); ++i)
    x = G.mul(x, G.pow(generators[i], static_cast<long long>(coords[i] % orders[i])));
  return x;
}

// Basis of each p-primary part by successive maximal-order lifting: pick h
// whose image in A/B has maximal order d, write h^d in the current basis,
// and divide the exponents by d (always possible at maximal order) to get
// a lift of order exactly d.
AbelianBasis abelian_basis(const Subgroup& A) {
  const FiniteGroup& G = A.parent();
  for (Elem a : A.members())
    for (Elem b : A.members())
      require(G.mul(a, b) == G.mul(b, a), ErrorCode::NotAbelian, "abelian_basis needs an abelian subgroup");

  AbelianBasis basis;
  basis.coordinates.assign(G.order(), {});
  if (A.order() == 1) {
    basis.coordinates[G.identity()] = {};
    return basis;
  }

  // Primary parts are handled one prime at a time; an element's coordinates
  // are the concatenation of its primary components' coordinates.
  std::vector<std::vector<std::uint64_t>> partial(G.order());
  partial[G.identity()] = {};
  std::vector<Elem> done{G.identity()};  // elements covered by generators so far

  for (std::uint64_t p : prime_factors(A.order())) {
    std::vector<Elem> primary;
    for (Elem a : A.members())
      if (is_power_of(G.element_order(a), p)) primary.push_back(a);

    // B = subgroup spanned by generators chosen for this prime.
    std::vector<Elem> B{G.identity()};
    std::map<Elem, std::vector<std::uint64_t>> local;  // coords within this prime's generators
    local[G.identity()] = {};
    std::vector<bool> inB(G.order(), false);
    inB[G.identity()] = true;
    std::vector<Elem> gens;
    std::vector<std::uint64_t> ords;

    while (B.size() < primary.size()) {
      Elem best = 0;
      std::uint64_t best_d = 0;
      for (Elem h : primary) {
        std::uint64_t d = 1;
        Elem x = h;
        while (!inB[x]) {
          x = G.mul(x, h);
          ++d;
        }
        if (d > best_d) {
          best_d = d;
          best = h;
        }
      }
      const Elem b = G.pow(best, static_cast<long long>(best_d));
      const auto& kb = local.at(b);
      Elem lift = best;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (kb[i] % best_d != 0) fail(ErrorCode::InternalError, "abelian basis lifting failed");
        lift = G.mul(lift, G.pow(gens[i], -static_cast<long long>(kb[i] / best_d)));
      }
      gens.push_back(lift);
      ords.push_back(best_d);
      // Extend B and coordinates: new elements are old * lift^t.
      const std::vector<Elem> oldB = B;
      for (auto& [e, c] : local) c.push_back(0);
      Elem pw = G.identity();
      for (std::uint64_t t = 1; t < best_d; ++t) {
        pw = G.mul(pw, lift);
        for (Elem e : oldB) {
          Elem x = G.mul(e, pw);
          if (inB[x]) fail(ErrorCode::InternalError, "abelian basis sum is not direct");
          inB[x] = true;
          B.push_back(x);
          auto c = local.at(e);
          c.back() = t;
          local[x] = std::move(c);
        }
      }
    }

    // Combine with earlier primes.
    std::vector<Elem> combined;
    std::vector<std::vector<std::uint64_t>> before;
    for (Elem e : done) before.push_back(partial[e]);
    for (std::size_t i = 0; i < done.size(); ++i) {
      const Elem e = done[i];
      for (Elem x : B) {
        Elem y = G.mul(e, x);
        auto c = before[i];
        const auto& lx = local.at(x);
        c.insert(c.end(), lx.begin(), lx.end());
        partial[y] = std::move(c);
        combined.push_back(y);
      }
    }
    done = std::move(combined);
    basis.generators.insert(basis.generators.end(), gens.begin(), gens.end());
    basis.orders.insert(basis.orders.end(), ords.begin(), ords.end());
  }

  if (done.size() != A.order()) fail(ErrorCode::InternalError, "abelian basis does not span");
  for (Elem e : done) basis.coordinates[e] = std::move(partial[e]);
  return basis;
}

AbelianInvariants abelian_invariants(const Subgroup& A) {
  const AbelianBasis basis = abelian_basis(A);
  // Group prime-power orders by prime, largest first, then multiply across
  // primes position by position.
  std::map<std::uint64_t, std::vector<std::uint64_t>> by_prime;
  for (std::uint64_t q : basis.orders) by_prime[prime_factors(q).front()].push_back(q);
  std::size_t len = 0;
  for (auto& [p, qs] : by_prime) {
    std::sort(qs.rbegin(), qs.rend());
    len = std::max(len, qs.size());
  }
  AbelianInvariants inv;
  inv.invariant_factors.assign(len, 1);
  for (auto& [p, qs] : by_prime)
    for (std::size_t i = 0; i < qs.size(); ++i) inv.invariant_factors[i] *= qs[i];
  return inv;
}

AbelianInvariants abelian_invariants(const FiniteGroup& A) {
  require(A.is_abelian(), ErrorCode::NotAbelian, "abelian_invariants needs an abelian group");
  return abelian_invariants(whole_group(A));
}

}  // namespace essdim::group
