#include "essdim/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace essdim::group {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Elem> table, std::vector<std::string> labels) {
  require(order >= 1, ErrorCode::InvalidArgument, "group order must be positive");
  require(order <= kMaxOrder, ErrorCode::OrderCapExceeded,
          "order " + std::to_string(order) + " exceeds the table cap " + std::to_string(kMaxOrder));
  require(table.size() == order * order, ErrorCode::InvalidArgument, "table size does not match order");
  require(labels.size() == order, ErrorCode::InvalidArgument, "one label per element required");

  auto data = std::make_shared<Data>();
  data->order = order;
  data->table = std::move(table);
  data->labels = std::move(labels);
  const auto& t = data->table;

  // Latin square.
  std::vector<std::uint32_t> seen(order, 0);
  std::uint32_t stamp = 0;
  for (std::size_t i = 0; i < order; ++i) {
    ++stamp;
    for (std::size_t j = 0; j < order; ++j) {
      Elem v = t[i * order + j];
      require(v < order && seen[v] != stamp, ErrorCode::InvalidArgument, "table row is not a permutation");
      seen[v] = stamp;
    }
  }
  for (std::size_t j = 0; j < order; ++j) {
    ++stamp;
    for (std::size_t i = 0; i < order; ++i) {
      Elem v = t[i * order + j];
      require(seen[v] != stamp, ErrorCode::InvalidArgument, "table column is not a permutation");
      seen[v] = stamp;
    }
  }

  // Identity: the e with e*e = e.
  bool found = false;
  for (std::size_t e = 0; e < order; ++e) {
    if (t[e * order + e] == e) {
      data->identity = static_cast<Elem>(e);
      found = true;
      break;
    }
  }
  require(found, ErrorCode::InvalidArgument, "no identity element");
  const Elem id = data->identity;
  for (std::size_t j = 0; j < order; ++j) {
    require(t[id * order + j] == j && t[j * order + id] == j, ErrorCode::InvalidArgument,
            "identity is not two-sided");
  }

  data->inverse.assign(order, 0);
  for (std::size_t i = 0; i < order; ++i) {
    bool has = false;
    for (std::size_t j = 0; j < order; ++j) {
      if (t[i * order + j] == id) {
        require(t[j * order + i] == id, ErrorCode::InvalidArgument, "inverse is not two-sided");
        data->inverse[i] = static_cast<Elem>(j);
        has = true;
        break;
      }
    }
    require(has, ErrorCode::InvalidArgument, "element without inverse");
  }

  if (order <= kAssociativityCheckLimit) {
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b) {
        const Elem ab = t[a * order + b];
        const Elem* row_ab = &t[std::size_t{ab} * order];
        const Elem* row_a = &t[a * order];
        const Elem* row_b = &t[b * order];
        for (std::size_t c = 0; c < order; ++c) {
          if (row_ab[c] != row_a[row_b[c]])
            fail(ErrorCode::InvalidArgument, "multiplication is not associative");
        }
      }
  }
  data_ = std::move(data);
}

FiniteGroup FiniteGroup::from_rule(std::size_t order, const std::function<Elem(Elem, Elem)>& mul,
                                   std::vector<std::string> labels) {
  require(order <= kMaxOrder, ErrorCode::OrderCapExceeded,
          "order " + std::to_string(order) + " exceeds the table cap " + std::to_string(kMaxOrder));
  std::vector<Elem> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) table[a * order + b] = mul(static_cast<Elem>(a), static_cast<Elem>(b));
  return FiniteGroup(order, std::move(table), std::move(labels));
}

Elem FiniteGroup::pow(Elem a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem result = identity();
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t n = 1;
  Elem x = a;
  while (x != identity()) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

bool FiniteGroup::is_abelian() const {
  const std::size_t n = order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (mul(static_cast<Elem>(a), static_cast<Elem>(b)) != mul(static_cast<Elem>(b), static_cast<Elem>(a)))
        return false;
  return true;
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<Elem> members)
    : parent_(std::move(parent)), members_(std::move(members)), in_(parent_.order(), false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Elem g : members_) {
    require(g < parent_.order(), ErrorCode::InvalidArgument, "subgroup member out of range");
    in_[g] = true;
  }
  require(contains(parent_.identity()), ErrorCode::InvalidArgument, "subgroup must contain the identity");
  for (Elem a : members_) {
    require(in_[parent_.inv(a)], ErrorCode::InvalidArgument, "subgroup not closed under inversion");
    for (Elem b : members_)
      require(in_[parent_.mul(a, b)], ErrorCode::InvalidArgument, "subgroup not closed under multiplication");
  }
}

Subgroup trivial_subgroup(const FiniteGroup& G) { return Subgroup(G, {G.identity()}); }

Subgroup whole_group(const FiniteGroup& G) {
  std::vector<Elem> all(G.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return Subgroup(G, std::move(all));
}

namespace {

// Closure of a generating set by breadth-first right multiplication.
std::vector<Elem> closure(const FiniteGroup& G, std::span<const Elem> gens) {
  std::vector<bool> in(G.order(), false);
  std::vector<Elem> out{G.identity()};
  in[G.identity()] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem s : gens) {
      Elem x = G.mul(out[i], s);
      if (!in[x]) {
        in[x] = true;
        out.push_back(x);
      }
    }
  }
  return out;
}

}  // namespace

Subgroup generated_subgroup(const FiniteGroup& G, std::span<const Elem> generators) {
  return Subgroup(G, closure(G, generators));
}

Subgroup center(const FiniteGroup& G) {
  std::vector<Elem> z;
  const std::size_t n = G.order();
  for (std::size_t a = 0; a < n; ++a) {
    bool central = true;
    for (std::size_t b = 0; b < n && central; ++b)
      central = G.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == G.mul(static_cast<Elem>(b), static_cast<Elem>(a));
    if (central) z.push_back(static_cast<Elem>(a));
  }
  return Subgroup(G, std::move(z));
}

Subgroup derived_subgroup(const FiniteGroup& G) {
  const std::size_t n = G.order();
  std::vector<bool> is_comm(n, false);
  std::vector<Elem> comms;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Elem c = G.commutator(static_cast<Elem>(a), static_cast<Elem>(b));
      if (!is_comm[c]) {
        is_comm[c] = true;
        comms.push_back(c);
      }
    }
  return Subgroup(G, closure(G, comms));
}

bool is_normal(const Subgroup& N) {
  const FiniteGroup& G = N.parent();
  for (std::size_t g = 0; g < G.order(); ++g) {
    const Elem gi = G.inv(static_cast<Elem>(g));
    for (Elem n : N.members())
      if (!N.contains(G.mul(G.mul(static_cast<Elem>(g), n), gi))) return false;
  }
  return true;
}

Quotient quotient(const FiniteGroup& G, const Subgroup& N) {
  require(is_normal(N), ErrorCode::NotNormal, "subgroup is not normal");
  const std::size_t n = G.order();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> proj(n, kUnset);
  std::vector<Elem> section;
  for (std::size_t g = 0; g < n; ++g) {
    if (proj[g] != kUnset) continue;
    const Elem coset = static_cast<Elem>(section.size());
    section.push_back(static_cast<Elem>(g));
    for (Elem m : N.members()) proj[G.mul(static_cast<Elem>(g), m)] = coset;
  }
  const std::size_t q = section.size();
  std::vector<Elem> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) table[i * q + j] = proj[G.mul(section[i], section[j])];
  std::vector<std::string> labels;
  labels.reserve(q);
  for (Elem s : section) labels.push_back("[" + G.label(s) + "]");
  return Quotient{FiniteGroup(q, std::move(table), std::move(labels)), std::move(proj), std::move(section)};
}

std::uint64_t exponent(const FiniteGroup& G) {
  std::uint64_t e = 1;
  for (std::size_t g = 0; g < G.order(); ++g) e = std::lcm(e, G.element_order(static_cast<Elem>(g)));
  return e;
}

std::uint64_t exponent(const Subgroup& H) {
  std::uint64_t e = 1;
  for (Elem g : H.members()) e = std::lcm(e, H.parent().element_order(g));
  return e;
}

bool is_p_group(const FiniteGroup& G, std::uint64_t p) {
  std::uint64_t n = G.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_theorem_hypothesis(const FiniteGroup& G, std::uint64_t p) {
  if (!is_prime(p) || !is_p_group(G, p)) return false;
  const Subgroup D = derived_subgroup(G);
  const Subgroup Z = center(G);
  for (Elem d : D.members())
    if (!Z.contains(d)) return false;
  // A p-group is cyclic iff it has an element of full order.
  for (Elem d : D.members())
    if (G.element_order(d) == D.order()) return true;
  return false;
}

std::vector<Elem> generating_set(const FiniteGroup& G) {
  std::vector<Elem> gens;
  std::vector<Elem> covered = closure(G, gens);
  std::vector<bool> in(G.order(), false);
  for (Elem x : covered) in[x] = true;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (in[g]) continue;
    gens.push_back(static_cast<Elem>(g));
    covered = closure(G, gens);
    std::fill(in.begin(), in.end(), false);
    for (Elem x : covered) in[x] = true;
  }
  return gens;
}

}  // namespace essdim::group
