#include "essdim/oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace essdim::oracles {

std::vector<Elem> brute_center(const FiniteGroup& G) {
  std::vector<Elem> out;
  const auto t = G.table();
  const std::size_t n = G.order();
  for (std::size_t a = 0; a < n; ++a) {
    bool central = true;
    for (std::size_t b = 0; b < n && central; ++b) central = t[a * n + b] == t[b * n + a];
    if (central) out.push_back(static_cast<Elem>(a));
  }
  return out;
}

std::vector<Elem> brute_closure(const FiniteGroup& G, std::vector<Elem> gens) {
  const std::size_t n = G.order();
  const auto t = G.table();
  std::vector<char> in(n, 0);
  Elem e = 0;
  for (std::size_t x = 0; x < n; ++x)
    if (t[x * n + x] == x) e = static_cast<Elem>(x);
  std::vector<Elem> members{e};
  in[e] = 1;
  // Finite group: closure under products is enough.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Elem g : gens) {
      const Elem y = t[std::size_t{members[i]} * n + g];
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Elem> brute_derived(const FiniteGroup& G) {
  const std::size_t n = G.order();
  const auto t = G.table();
  std::vector<Elem> inv(n);
  // identity: the unique idempotent
  Elem e = 0;
  for (std::size_t x = 0; x < n; ++x)
    if (t[x * n + x] == x) e = static_cast<Elem>(x);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (t[a * n + b] == e) inv[a] = static_cast<Elem>(b);
  std::vector<char> seen(n, 0);
  std::vector<Elem> comms;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elem ab = t[a * n + b];
      const Elem c = t[std::size_t{ab} * n + t[std::size_t{inv[a]} * n + inv[b]]];
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return brute_closure(G, comms);
}

namespace {

using i128 = __int128;

// Smith normal form diagonal of a square integer matrix, all arithmetic kept
// modulo-free but in 128 bits.
std::vector<i128> smith_diagonal(std::vector<std::vector<i128>> M) {
  const std::size_t k = M.size();
  auto abs128 = [](i128 x) { return x < 0 ? -x : x; };
  for (std::size_t d = 0; d < k; ++d) {
    for (;;) {
      // pivot: smallest nonzero |entry| in the lower-right block
      std::size_t pr = k, pc = k;
      for (std::size_t i = d; i < k; ++i)
        for (std::size_t j = d; j < k; ++j)
          if (M[i][j] != 0 && (pr == k || abs128(M[i][j]) < abs128(M[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == k) return {};  // singular
      std::swap(M[d], M[pr]);
      for (auto& row : M) std::swap(row[d], row[pc]);
      bool clean = true;
      for (std::size_t i = d + 1; i < k; ++i) {
        const i128 q = M[i][d] / M[d][d];
        for (std::size_t j = d; j < k; ++j) M[i][j] -= q * M[d][j];
        if (M[i][d] != 0) clean = false;
      }
      for (std::size_t j = d + 1; j < k; ++j) {
        const i128 q = M[d][j] / M[d][d];
        for (std::size_t i = d; i < k; ++i) M[i][j] -= q * M[i][d];
        if (M[d][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: the pivot must divide the rest of the block
      bool divides = true;
      for (std::size_t i = d + 1; i < k && divides; ++i)
        for (std::size_t j = d + 1; j < k && divides; ++j)
          if (M[i][j] % M[d][d] != 0) {
            for (std::size_t c = d; c < k; ++c) M[d][c] += M[i][c];
            divides = false;
          }
      if (divides) break;
    }
  }
  std::vector<i128> diag;
  for (std::size_t d = 0; d < k; ++d) diag.push_back(abs128(M[d][d]));
  return diag;
}

}  // namespace

std::vector<std::uint64_t> snf_invariants(const FiniteGroup& G, const std::vector<Elem>& members) {
  const std::size_t n = G.order();
  const auto t = G.table();
  const i128 order = static_cast<i128>(members.size());
  // Greedy generators of the subgroup.
  std::vector<Elem> gens;
  std::vector<Elem> span = brute_closure(G, {});
  for (Elem x : members)
    if (!std::binary_search(span.begin(), span.end(), x)) {
      gens.push_back(x);
      span = brute_closure(G, gens);
    }
  const std::size_t k = gens.size();
  if (k == 0) return {};

  // Spanning tree: coordinates for every member.
  std::vector<std::vector<i128>> coord(n);
  std::deque<Elem> queue{span.front()};
  coord[span.front()] = std::vector<i128>(k, 0);
  std::vector<std::vector<i128>> basis(k);  // row-echelon, row j has pivot column j
  auto insert = [&](std::vector<i128> v) {
    for (auto& x : v) x = ((x % order) + order) % order;
    for (std::size_t j = 0; j < k; ++j) {
      if (v[j] == 0) continue;
      if (basis[j].empty()) {
        basis[j] = v;
        return;
      }
      // extended gcd on pivots
      i128 a = basis[j][j], b = v[j], x0 = 1, y0 = 0, x1 = 0, y1 = 1;
      while (b != 0) {
        const i128 q = a / b;
        std::tie(a, b) = std::pair{b, a - q * b};
        std::tie(x0, x1) = std::pair{x1, x0 - q * x1};
        std::tie(y0, y1) = std::pair{y1, y0 - q * y1};
      }
      // a = g = x0*P + y0*V; x1*P + y1*V = 0
      std::vector<i128> r1(k), r2(k);
      for (std::size_t c = 0; c < k; ++c) {
        r1[c] = ((x0 * basis[j][c] + y0 * v[c]) % order + order) % order;
        r2[c] = ((x1 * basis[j][c] + y1 * v[c]) % order + order) % order;
      }
      if (r1[j] == 0) r1[j] = order;  // keep the pivot nonzero; order*e_j is in the lattice
      basis[j] = r1;
      v = r2;
    }
  };
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < k; ++i) {
      const Elem y = t[std::size_t{x} * n + gens[i]];
      std::vector<i128> cy = coord[x];
      cy[i] += 1;
      if (coord[y].empty()) {
        coord[y] = cy;
        queue.push_back(y);
      } else {
        std::vector<i128> rel(k);
        for (std::size_t c = 0; c < k; ++c) rel[c] = cy[c] - coord[y][c];
        insert(rel);
      }
    }
  }
  std::vector<std::vector<i128>> M;
  // order * e_j always lies in the relation lattice; missing pivots are that row.
  for (std::size_t j = 0; j < k; ++j) {
    if (basis[j].empty()) {
      basis[j].assign(k, 0);
      basis[j][j] = order;
    }
    M.push_back(basis[j]);
  }
  std::vector<std::uint64_t> out;
  for (i128 d : smith_diagonal(M))
    if (d > 1) out.push_back(static_cast<std::uint64_t>(d));
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool is_isomorphic(const FiniteGroup& G, const FiniteGroup& H) {
  if (G.order() != H.order()) return false;
  const std::size_t n = G.order();
  if (n > 64) fail(ErrorCode::InvalidArgument, "isomorphism oracle is capped at order 64");
  std::vector<std::size_t> og(n), oh(n);
  for (std::size_t x = 0; x < n; ++x) {
    og[x] = G.element_order(static_cast<Elem>(x));
    oh[x] = H.element_order(static_cast<Elem>(x));
  }
  {
    auto a = og, b = oh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  std::vector<Elem> gens;
  std::vector<Elem> span = brute_closure(G, {});
  for (std::size_t x = 0; x < n; ++x)
    if (!std::binary_search(span.begin(), span.end(), static_cast<Elem>(x))) {
      gens.push_back(static_cast<Elem>(x));
      span = brute_closure(G, gens);
    }
  std::vector<Elem> images(gens.size());
  // Extend gens -> images along words; fails if inconsistent or not injective.
  auto try_map = [&]() {
    constexpr Elem kUnset = ~Elem{0};
    std::vector<Elem> phi(n, kUnset);
    phi[G.identity()] = H.identity();
    std::deque<Elem> q{G.identity()};
    while (!q.empty()) {
      const Elem x = q.front();
      q.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Elem y = G.mul(x, gens[i]);
        const Elem py = H.mul(phi[x], images[i]);
        if (phi[y] == kUnset) {
          phi[y] = py;
          q.push_back(y);
        } else if (phi[y] != py) {
          return false;
        }
      }
    }
    std::vector<char> hit(n, 0);
    for (Elem v : phi) {
      if (hit[v]) return false;
      hit[v] = 1;
    }
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == gens.size()) return try_map();
    for (std::size_t h = 0; h < n; ++h) {
      if (oh[h] != og[gens[i]]) continue;
      images[i] = static_cast<Elem>(h);
      if (search(i + 1)) return true;
    }
    return false;
  };
  return search(0);
}

std::pair<int, std::vector<unsigned>> token_rewrite_mul(int sx, const std::vector<unsigned>& x, int sy,
                                                        const std::vector<unsigned>& y) {
  std::vector<unsigned> w = x;
  w.insert(w.end(), y.begin(), y.end());
  int sign = sx * sy;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1]) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        sign = -sign;
        changed = true;
        break;
      }
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  return {sign, w};
}

int hilbert_by_search(std::int64_t a, std::int64_t b, std::uint64_t p) {
  if (p == 2 || a == 0 || b == 0) fail(ErrorCode::InvalidArgument, "search oracle needs odd p and nonzero a, b");
  // Drop square factors first: the symbol only sees square classes.
  auto squarefree = [](std::int64_t v) {
    for (std::int64_t d = 2; d * d <= (v < 0 ? -v : v); ++d)
      while (v % (d * d) == 0) v /= d * d;
    return v;
  };
  a = squarefree(a);
  b = squarefree(b);
  const std::int64_t m = static_cast<std::int64_t>(p * p * p);
  std::vector<char> square(static_cast<std::size_t>(m), 0);
  for (std::int64_t z = 0; z < m; ++z) square[static_cast<std::size_t>(z * z % m)] = 1;
  auto md = [m](std::int64_t v) { return ((v % m) + m) % m; };
  const std::int64_t am = md(a), bm = md(b);
  // Primitive solutions up to unit scaling: x = 1, or x in pZ and y = 1
  // (if both x and y are divisible by p, so is z).
  for (std::int64_t y = 0; y < m; ++y)
    if (square[static_cast<std::size_t>(md(am + bm * (y * y % m)))]) return 1;
  for (std::int64_t x = 0; x < m; x += static_cast<std::int64_t>(p))
    if (square[static_cast<std::size_t>(md(am * (x * x % m) + bm))]) return 1;
  return -1;
}

int hilbert2_by_search(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) fail(ErrorCode::InvalidArgument, "search oracle needs nonzero a, b");
  auto squarefree = [](std::int64_t v) {
    for (std::int64_t d = 2; d * d <= (v < 0 ? -v : v); ++d)
      while (v % (d * d) == 0) v /= d * d;
    return v;
  };
  a = squarefree(a);
  b = squarefree(b);
  // With 2-adic valuations <= 1, a primitive solution mod 32 lifts (Hensel).
  constexpr std::int64_t m = 32;
  auto md = [](std::int64_t v) { return ((v % m) + m) % m; };
  for (std::int64_t x = 0; x < m; ++x)
    for (std::int64_t y = 0; y < m; ++y)
      for (std::int64_t z = 0; z < m; ++z) {
        if (x % 2 == 0 && y % 2 == 0 && z % 2 == 0) continue;
        if (md(a * x * x + b * y * y - z * z) == 0) return 1;
      }
  return -1;
}

}  // namespace essdim::oracles

namespace essdim::oracles {

std::vector<std::vector<Elem>> all_subgroups(const FiniteGroup& G) {
  if (G.order() > 64) fail(ErrorCode::InvalidArgument, "subgroup enumeration is capped at order 64");
  std::vector<std::vector<Elem>> found{brute_closure(G, {})};
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t x = 0; x < G.order(); ++x) {
      if (std::binary_search(found[i].begin(), found[i].end(), static_cast<Elem>(x))) continue;
      std::vector<Elem> gens = found[i];
      gens.push_back(static_cast<Elem>(x));
      auto S = brute_closure(G, gens);
      if (std::find(found.begin(), found.end(), S) == found.end()) found.push_back(std::move(S));
    }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return found;
}

std::size_t min_faithful_induced_degree(const FiniteGroup& G) {
  if (G.order() > 32) fail(ErrorCode::InvalidArgument, "minimality sweep is capped at order 32");
  const auto subs = all_subgroups(G);
  auto contains = [](const std::vector<Elem>& S, Elem x) { return std::binary_search(S.begin(), S.end(), x); };
  std::size_t best = G.order() + 1;
  for (const auto& H : subs) {
    const std::size_t index = G.order() / H.size();
    if (index >= best) continue;
    // Kernels of linear characters of H: subgroups N of H, normal in H, with H/N cyclic.
    for (const auto& N : subs) {
      if (H.size() % N.size() != 0) continue;
      bool inside = true;
      for (Elem x : N) inside = inside && contains(H, x);
      if (!inside) continue;
      bool normal = true;
      for (Elem h : H)
        for (Elem x : N) normal = normal && contains(N, G.mul(G.mul(h, x), G.inv(h)));
      if (!normal) continue;
      bool cyclic_quotient = false;
      for (Elem h : H) {
        std::vector<Elem> gens = N;
        gens.push_back(h);
        if (brute_closure(G, gens).size() == H.size()) {
          cyclic_quotient = true;
          break;
        }
      }
      if (!cyclic_quotient) continue;
      // core_G(N) trivial?
      bool core_trivial = true;
      for (Elem x : N) {
        if (x == G.identity()) continue;
        bool in_all = true;
        for (std::size_t g = 0; g < G.order() && in_all; ++g) {
          const Elem gi = G.inv(static_cast<Elem>(g));
          in_all = contains(N, G.mul(G.mul(gi, x), static_cast<Elem>(g)));
        }
        if (in_all) {
          core_trivial = false;
          break;
        }
      }
      if (core_trivial) best = index;
    }
  }
  return best;
}

}  // namespace essdim::oracles
