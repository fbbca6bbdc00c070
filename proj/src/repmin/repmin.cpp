#include "essdim/repmin.hpp"

#include <numeric>

#include "essdim/symplectic.hpp"

namespace essdim::repmin {

std::uint64_t Character::operator()(Elem g) const {
  const std::int64_t v = values.at(g);
  require(v >= 0, ErrorCode::InvalidArgument, "character evaluated outside its domain");
  return static_cast<std::uint64_t>(v);
}

bool MonomialMatrix::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != i || exponents[i] != 0) return false;
  return true;
}

MonomialMatrix compose(const MonomialMatrix& x, const MonomialMatrix& y, std::uint64_t e) {
  const std::size_t n = x.perm.size();
  MonomialMatrix out{std::vector<std::uint32_t>(n), std::vector<std::uint64_t>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.perm[i] = x.perm[y.perm[i]];
    out.exponents[i] = (y.exponents[i] + x.exponents[y.perm[i]]) % e;
  }
  return out;
}

bool is_homomorphism(const MonomialRep& rep, const FiniteGroup& G) {
  if (rep.images.size() != G.order()) return false;
  if (!rep.images[G.identity()].is_identity()) return false;
  std::vector<Elem> right;
  if (G.order() <= FiniteGroup::kAssociativityCheckLimit) {
    right.resize(G.order());
    std::iota(right.begin(), right.end(), Elem{0});
  } else {
    right = group::generating_set(G);
  }
  for (std::size_t g = 0; g < G.order(); ++g)
    for (Elem h : right)
      if (!(rep.images[G.mul(static_cast<Elem>(g), h)] == compose(rep.images[g], rep.images[h], rep.e)))
        return false;
  return true;
}

bool is_character(const Character& chi) {
  const FiniteGroup& G = chi.domain.parent();
  if (chi.values.size() != G.order() || chi.values[G.identity()] != 0) return false;
  for (Elem a : chi.domain.members())
    for (Elem b : chi.domain.members()) {
      if (chi.values[a] < 0 || chi.values[b] < 0) return false;
      const auto ab = chi.values[G.mul(a, b)];
      if (ab < 0 || static_cast<std::uint64_t>(ab) != (chi(a) + chi(b)) % chi.e) return false;
    }
  return true;
}

namespace {

std::vector<Elem> subgroup_generators(const Subgroup& S) {
  const FiniteGroup& G = S.parent();
  std::vector<Elem> gens;
  std::vector<bool> covered(G.order(), false);
  covered[G.identity()] = true;
  for (Elem g : S.members()) {
    if (covered[g]) continue;
    gens.push_back(g);
    const Subgroup span = group::generated_subgroup(G, gens);
    for (Elem x : span.members()) covered[x] = true;
  }
  return gens;
}

// Characters of an abelian subgroup, parametrized by t_i in [0, o_i) with
// value (e/o_i) t_i on basis generator i; lexicographic in the exponent vector.
class CharacterOdometer {
 public:
  CharacterOdometer(const group::AbelianBasis& basis, std::uint64_t e) : basis_(basis), e_(e) {
    for (std::uint64_t o : basis.orders)
      require(e % o == 0, ErrorCode::NotExtendable,
              "root order " + std::to_string(e) + " is not a multiple of a generator order " + std::to_string(o));
    t_.assign(basis.orders.size(), 0);
  }

  const std::vector<std::uint64_t>& t() const { return t_; }

  std::uint64_t value(Elem g) const {
    const auto& c = basis_.coordinates[g];
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < c.size(); ++i) v += c[i] % basis_.orders[i] * (e_ / basis_.orders[i]) * t_[i];
    return v % e_;
  }

  bool next() {
    for (std::size_t i = t_.size(); i-- > 0;) {
      if (++t_[i] < basis_.orders[i]) return true;
      t_[i] = 0;
    }
    return false;
  }

 private:
  const group::AbelianBasis& basis_;
  std::uint64_t e_;
  std::vector<std::uint64_t> t_;
};

Character character_from(const Subgroup& H, const CharacterOdometer& odo, std::uint64_t e) {
  std::vector<std::int64_t> values(H.parent().order(), -1);
  for (Elem h : H.members()) values[h] = static_cast<std::int64_t>(odo.value(h));
  return Character{H, e, std::move(values)};
}

}  // namespace

Character extend_character(const Subgroup& H, const Character& chi_sub, std::uint64_t e) {
  const Subgroup& S = chi_sub.domain;
  for (Elem s : S.members())
    require(H.contains(s), ErrorCode::InvalidArgument, "character domain is not inside H");
  require(e % chi_sub.e == 0, ErrorCode::NotExtendable, "target root order must be a multiple of the given one");
  const group::AbelianBasis basis = group::abelian_basis(H);
  const std::uint64_t scale = e / chi_sub.e;
  const std::vector<Elem> gens = subgroup_generators(S);

  CharacterOdometer odo(basis, e);
  do {
    bool ok = true;
    for (Elem s : gens)
      if (odo.value(s) != chi_sub(s) * scale % e) {
        ok = false;
        break;
      }
    if (ok) return character_from(H, odo, e);
  } while (odo.next());
  fail(ErrorCode::NotExtendable, "no character of H restricts to the given character");
}

MonomialRep induce_monomial(const FiniteGroup& G, const Subgroup& H, const Character& chi) {
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> coset(G.order(), kUnset);
  std::vector<Elem> transversal;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (coset[g] != kUnset) continue;
    const Elem k = static_cast<Elem>(transversal.size());
    transversal.push_back(static_cast<Elem>(g));
    for (Elem h : H.members()) coset[G.mul(static_cast<Elem>(g), h)] = k;
  }
  const std::size_t deg = transversal.size();
  MonomialRep rep{deg, chi.e, {}};
  rep.images.reserve(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) {
    MonomialMatrix m{std::vector<std::uint32_t>(deg), std::vector<std::uint64_t>(deg)};
    for (std::size_t i = 0; i < deg; ++i) {
      // g t_i = t_j h with h in H
      const Elem x = G.mul(static_cast<Elem>(g), transversal[i]);
      const Elem j = coset[x];
      const Elem h = G.mul(G.inv(transversal[j]), x);
      m.perm[i] = j;
      m.exponents[i] = chi(h);
    }
    rep.images.push_back(std::move(m));
  }
  return rep;
}

Subgroup rep_kernel(const MonomialRep& rep, const FiniteGroup& G) {
  std::vector<Elem> ker;
  for (std::size_t g = 0; g < G.order(); ++g)
    if (rep.images.at(g).is_identity()) ker.push_back(static_cast<Elem>(g));
  return Subgroup(G, std::move(ker));
}

MonomialRep direct_sum(const MonomialRep& x, const MonomialRep& y) {
  if (x.degree == 0) return y;
  if (y.degree == 0) return x;
  require(x.images.size() == y.images.size(), ErrorCode::InvalidArgument, "direct sum of reps of different groups");
  const std::uint64_t e = std::lcm(x.e, y.e);
  MonomialRep out{x.degree + y.degree, e, {}};
  out.images.reserve(x.images.size());
  for (std::size_t g = 0; g < x.images.size(); ++g) {
    MonomialMatrix m;
    for (std::size_t i = 0; i < x.degree; ++i) {
      m.perm.push_back(x.images[g].perm[i]);
      m.exponents.push_back(x.images[g].exponents[i] * (e / x.e));
    }
    for (std::size_t i = 0; i < y.degree; ++i) {
      m.perm.push_back(static_cast<std::uint32_t>(y.images[g].perm[i] + x.degree));
      m.exponents.push_back(y.images[g].exponents[i] * (e / y.e));
    }
    out.images.push_back(std::move(m));
  }
  return out;
}

MonomialRep from_character(const Character& chi) {
  const FiniteGroup& G = chi.domain.parent();
  require(chi.domain.order() == G.order(), ErrorCode::InvalidArgument, "character must be defined on all of G");
  MonomialRep rep{1, chi.e, {}};
  for (std::size_t g = 0; g < G.order(); ++g) rep.images.push_back(MonomialMatrix{{0}, {chi(static_cast<Elem>(g))}});
  return rep;
}

std::uint64_t formula_degree(const FiniteGroup& G, std::uint64_t p) {
  const auto M = symplectic::commutator_form(G, p);
  return symplectic::sqrt_order(M) + group::abelian_invariants(group::center(G)).rank() - 1;
}

// Ind_H^G(chi_0) + psi_1 + ... + psi_t, where H is the preimage of a Lagrangian
// subgroup, chi_0 is nontrivial on the order-p element of [G,G], and the psi_j
// are linear characters of G trivial on [G,G]. Their restrictions to the socle
// of C(G) are linearly independent, so the joint kernel meets C(G) trivially;
// a nontrivial normal subgroup of a p-group meets the center, hence faithful.
MonomialRep minimal_faithful_rep(const FiniteGroup& G, std::uint64_t p) {
  require(group::is_theorem_hypothesis(G, p), ErrorCode::HypothesisFailed,
          "G must be a p-group whose commutator subgroup is central and cyclic");
  if (G.order() == 1) return MonomialRep{0, 1, std::vector<MonomialMatrix>(1)};

  const std::uint64_t e = group::exponent(G);
  const auto M = symplectic::commutator_form(G, p);
  const auto D = symplectic::symplectic_basis(M);
  const Subgroup L = symplectic::lagrangian(M, D);

  std::vector<Elem> h_members;
  for (std::size_t g = 0; g < G.order(); ++g)
    if (L.contains(M.projection[g])) h_members.push_back(static_cast<Elem>(g));
  const Subgroup H(G, std::move(h_members));

  const Subgroup C = group::center(G);
  const group::AbelianBasis cb = group::abelian_basis(C);
  const std::size_t t = cb.orders.size();

  // Socle functionals as vectors over F_p; u = coordinates of the order-p
  // element of [G,G] in the socle basis c_i^{o_i/p}.
  std::vector<std::vector<std::uint64_t>> targets;
  if (M.n > 1) {
    const Elem delta = G.pow(M.z, static_cast<long long>(M.n / p));
    std::vector<std::uint64_t> u(t);
    for (std::size_t i = 0; i < t; ++i) u[i] = cb.coordinates[delta][i] / (cb.orders[i] / p) % p;
    std::size_t i0 = 0;
    while (i0 < t && u[i0] == 0) ++i0;
    if (i0 == t) fail(ErrorCode::InternalError, "commutator element not found in the center");
    std::uint64_t inv = 1;
    while (u[i0] * inv % p != 1) ++inv;
    std::vector<std::uint64_t> f0(t, 0);
    f0[i0] = 1;
    targets.push_back(f0);
    for (std::size_t j = 0; j < t; ++j) {
      if (j == i0) continue;
      std::vector<std::uint64_t> f(t, 0);
      f[j] = 1;
      f[i0] = (p - u[j] * inv % p) % p;
      targets.push_back(f);
    }
  } else {
    for (std::size_t j = 0; j < t; ++j) {
      std::vector<std::uint64_t> f(t, 0);
      f[j] = 1;
      targets.push_back(f);
    }
  }

  auto realize = [&](const std::vector<std::uint64_t>& f, bool trivial_on_commutators) -> Character {
    CharacterOdometer it(cb, e);
    do {
      bool ok = true;
      for (std::size_t i = 0; i < t && ok; ++i) ok = it.t()[i] % p == f[i];
      if (ok && trivial_on_commutators) ok = it.value(M.z) == 0;
      if (ok) return character_from(C, it, e);
    } while (it.next());
    fail(ErrorCode::InternalError, "no character of the center realizes the socle functional");
  };

  const Character chi0_C = realize(targets.front(), false);
  const Character chi0_H = extend_character(H, chi0_C, e);
  MonomialRep rep = induce_monomial(G, H, chi0_H);

  if (targets.size() > 1) {
    const group::Quotient Q = group::quotient(G, M.Z);
    std::vector<Elem> cq_members;
    for (Elem c : C.members()) cq_members.push_back(Q.projection[c]);
    const Subgroup Cq(Q.group, cq_members);
    const Subgroup Qall = group::whole_group(Q.group);
    for (std::size_t j = 1; j < targets.size(); ++j) {
      const Character psi_C = realize(targets[j], true);
      std::vector<std::int64_t> vq(Q.group.order(), -1);
      for (Elem c : C.members()) vq[Q.projection[c]] = static_cast<std::int64_t>(psi_C(c));
      const Character psi_Q = extend_character(Qall, Character{Cq, e, std::move(vq)}, e);
      std::vector<std::int64_t> vg(G.order());
      for (std::size_t g = 0; g < G.order(); ++g) vg[g] = static_cast<std::int64_t>(psi_Q(Q.projection[g]));
      rep = direct_sum(rep, from_character(Character{group::whole_group(G), e, std::move(vg)}));
    }
  }

  if (!is_homomorphism(rep, G)) fail(ErrorCode::InternalError, "constructed representation is not a homomorphism");
  if (!rep_kernel(rep, G).is_trivial()) fail(ErrorCode::InternalError, "constructed representation is not faithful");
  const std::uint64_t expected = symplectic::sqrt_order(M, D) + t - 1;
  if (rep.degree != expected) fail(ErrorCode::InternalError, "constructed representation has the wrong degree");
  return rep;
}

}  // namespace essdim::repmin
