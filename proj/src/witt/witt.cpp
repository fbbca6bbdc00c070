#include "essdim/witt.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>

namespace essdim::witt {

namespace {

std::vector<std::uint64_t> prime_factors_odd_multiplicity(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (k % 2) out.push_back(d);
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  for (; e; e >>= 1) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
  }
  return r;
}

int legendre(std::uint64_t x, std::uint64_t p) { return powmod(x, (p - 1) / 2, p) == 1 ? 1 : -1; }

// Unit part of c at the prime v, reduced mod m.
std::uint64_t unit_residue(const SquareClass& c, Place v, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (std::uint64_t q : c.primes)
    if (q != v) r = mulmod(r, q % m, m);
  return c.sign < 0 ? (m - r) % m : r;
}

bool has_prime(const SquareClass& c, Place v) { return std::binary_search(c.primes.begin(), c.primes.end(), v); }

Rational rep(const SquareClass& c) { return Rational(c.representative()); }

}  // namespace

std::string place_name(Place v) { return v == kInfinity ? "inf" : std::to_string(v); }

Rational parse_rational(const std::string& s) {
  auto parse_int = [&](std::string_view t) {
    std::int64_t x = 0;
    const char* first = t.data();
    if (!t.empty() && t.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), x);
    require(ec == std::errc() && ptr == t.data() + t.size() && first != ptr, ErrorCode::ParseError,
            "bad rational '" + s + "'");
    return x;
  };
  const std::string_view sv(s);
  const auto slash = sv.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(sv));
  const std::int64_t den = parse_int(sv.substr(slash + 1));
  require(den != 0, ErrorCode::ParseError, "zero denominator in '" + s + "'");
  return Rational(parse_int(sv.substr(0, slash)), den);
}

std::string to_string(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

SquareClass SquareClass::of(const Rational& r) {
  require(r.numerator() != 0, ErrorCode::InvalidArgument, "zero has no square class");
  auto absu = [](std::int64_t x) {
    return x < 0 ? static_cast<std::uint64_t>(-(x + 1)) + 1 : static_cast<std::uint64_t>(x);
  };
  SquareClass c;
  c.sign = r.numerator() < 0 ? -1 : 1;
  const auto pn = prime_factors_odd_multiplicity(absu(r.numerator()));
  const auto pd = prime_factors_odd_multiplicity(absu(r.denominator()));
  std::set_symmetric_difference(pn.begin(), pn.end(), pd.begin(), pd.end(), std::back_inserter(c.primes));
  return c;
}

std::int64_t SquareClass::representative() const {
  std::int64_t r = sign;
  for (std::uint64_t p : primes) {
    require(p <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) &&
                !__builtin_mul_overflow(r, static_cast<std::int64_t>(p), &r),
            ErrorCode::InvalidArgument, "square class representative overflows 64 bits");
  }
  return r;
}

SquareClass operator*(const SquareClass& x, const SquareClass& y) {
  SquareClass c;
  c.sign = x.sign * y.sign;
  std::set_symmetric_difference(x.primes.begin(), x.primes.end(), y.primes.begin(), y.primes.end(),
                                std::back_inserter(c.primes));
  return c;
}

std::string to_string(const SquareClass& c) {
  std::string s = c.sign < 0 ? "-" : "";
  if (c.primes.empty()) return s + "1";
  for (std::size_t i = 0; i < c.primes.size(); ++i) s += (i ? "*" : "") + std::to_string(c.primes[i]);
  return s;
}

int hilbert_symbol(const SquareClass& a, const SquareClass& b, Place v) {
  if (v == kInfinity) return a.sign < 0 && b.sign < 0 ? -1 : 1;
  require(v >= 2, ErrorCode::InvalidArgument, "place must be a prime or infinity");
  const bool alpha = has_prime(a, v), beta = has_prime(b, v);
  if (v == 2) {
    const std::uint64_t u = unit_residue(a, 2, 8), w = unit_residue(b, 2, 8);
    auto eps = [](std::uint64_t x) { return ((x - 1) / 2) % 2; };
    auto omega = [](std::uint64_t x) { return ((x * x - 1) / 8) % 2; };
    const std::uint64_t e = eps(u) * eps(w) + (alpha ? omega(w) : 0) + (beta ? omega(u) : 0);
    return e % 2 ? -1 : 1;
  }
  int s = 1;
  if (alpha && beta && v % 4 == 3) s = -s;
  if (beta) s *= legendre(unit_residue(a, v, v), v);
  if (alpha) s *= legendre(unit_residue(b, v, v), v);
  return s;
}

int hilbert_symbol(const Rational& a, const Rational& b, Place v) {
  return hilbert_symbol(SquareClass::of(a), SquareClass::of(b), v);
}

std::vector<Place> relevant_places(const std::vector<SquareClass>& classes) {
  std::set<Place> places{kInfinity, 2};
  for (const auto& c : classes) places.insert(c.primes.begin(), c.primes.end());
  return {places.begin(), places.end()};
}

QForm::QForm(std::vector<Rational> e) : entries(std::move(e)) {
  for (const auto& x : entries) require(x.numerator() != 0, ErrorCode::InvalidArgument, "quadratic form entries must be nonzero");
}

std::vector<SquareClass> QForm::classes() const {
  std::vector<SquareClass> out;
  for (const auto& x : entries) out.push_back(SquareClass::of(x));
  return out;
}

int QForm::signature() const {
  int s = 0;
  for (const auto& x : entries) s += x.numerator() > 0 ? 1 : -1;
  return s;
}

QForm parse_form(const std::string& s) {
  std::vector<Rational> entries;
  std::size_t start = 0;
  std::string body = s;
  if (!body.empty() && body.front() == '<' && body.back() == '>') body = body.substr(1, body.size() - 2);
  if (body.find_first_not_of(" ") == std::string::npos) return QForm{};
  while (start <= body.size()) {
    const auto comma = body.find(',', start);
    std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
    const Rational r = parse_rational(tok);
    require(r.numerator() != 0, ErrorCode::ParseError, "form entries must be nonzero");
    entries.push_back(r);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return QForm(std::move(entries));
}

std::string to_string(const QForm& q) {
  std::string s = "<";
  for (std::size_t i = 0; i < q.entries.size(); ++i) s += (i ? ", " : "") + to_string(q.entries[i]);
  return s + ">";
}

QForm orthogonal_sum(const QForm& x, const QForm& y) {
  QForm q = x;
  q.entries.insert(q.entries.end(), y.entries.begin(), y.entries.end());
  return q;
}

QForm scale(const QForm& q, const Rational& c) {
  QForm out;
  for (const auto& x : q.entries) out.entries.push_back(rep(SquareClass::of(x) * SquareClass::of(c)));
  return out;
}

QForm hyperbolic(std::size_t m) {
  QForm q;
  for (std::size_t i = 0; i < m; ++i) {
    q.entries.push_back(1);
    q.entries.push_back(-1);
  }
  return q;
}

int BrauerTwo::invariant_at(Place v) const {
  int s = 1;
  for (const auto& [a, b] : symbols) s *= hilbert_symbol(a, b, v);
  return s;
}

std::map<Place, int> BrauerTwo::local_invariants() const {
  std::vector<SquareClass> cls;
  for (const auto& [a, b] : symbols) {
    cls.push_back(a);
    cls.push_back(b);
  }
  std::map<Place, int> out;
  for (Place v : relevant_places(cls)) out[v] = invariant_at(v);
  return out;
}

std::vector<Place> BrauerTwo::ramified_places() const {
  std::vector<Place> out;
  for (const auto& [v, s] : local_invariants())
    if (s < 0) out.push_back(v);
  return out;
}

bool BrauerTwo::is_trivial() const { return ramified_places().empty(); }

bool same_class(const BrauerTwo& x, const BrauerTwo& y) {
  BrauerTwo both = x;
  both.symbols.insert(both.symbols.end(), y.symbols.begin(), y.symbols.end());
  return both.is_trivial();
}

SquareClass signed_det(const QForm& q) {
  SquareClass d;
  const std::size_t n = q.dim();
  if ((n * (n - (n ? 1 : 0)) / 2) % 2) d.sign = -1;
  for (const auto& c : q.classes()) d = d * c;
  return d;
}

BrauerTwo hasse_witt(const QForm& q) {
  const auto cls = q.classes();
  BrauerTwo c;
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = i + 1; j < cls.size(); ++j) c.symbols.emplace_back(cls[i], cls[j]);
  return c;
}

// For q in I^2 the Clifford invariant is the Hasse-Witt invariant twisted by
// that of the split form of the same dimension; comparing against
// hasse_witt(<1,-1>^m) directly avoids the (-1,-1) bookkeeping.
bool in_power_I(const QForm& q, int a) {
  require(a >= 1 && a <= 3, ErrorCode::InvalidArgument, "in_power_I supports a = 1, 2, 3");
  if (q.dim() % 2) return false;
  if (a == 1) return true;
  if (!signed_det(q).is_one()) return false;
  if (a == 2) return true;
  return same_class(hasse_witt(q), hasse_witt(hyperbolic(q.dim() / 2)));
}

bool witt_equivalent(const QForm& q1, const QForm& q2) {
  const QForm q = orthogonal_sum(q1, scale(q2, -1));
  if (q.dim() % 2 || q.signature() != 0) return false;
  if (!signed_det(q).is_one()) return false;
  return same_class(hasse_witt(q), hasse_witt(hyperbolic(q.dim() / 2)));
}

QForm pfister_form(const std::vector<Rational>& slots) {
  std::vector<SquareClass> entries{SquareClass{}};
  for (const auto& s : slots) {
    const SquareClass minus = SquareClass::of(-s);
    const std::size_t k = entries.size();
    for (std::size_t i = 0; i < k; ++i) entries.push_back(entries[i] * minus);
  }
  QForm q;
  for (const auto& c : entries) q.entries.push_back(rep(c));
  return q;
}

QForm PfisterExpr::expand() const {
  QForm q;
  for (const auto& t : terms) {
    require(t.slots.size() == fold, ErrorCode::InvalidArgument, "Pfister terms must share the same fold");
    const QForm p = pfister_form(t.slots);
    q = orthogonal_sum(q, t.sign > 0 ? p : scale(p, -1));
  }
  return q;
}

std::string to_string(const PfisterExpr& e) {
  if (e.terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    const auto& t = e.terms[i];
    s += i == 0 ? (t.sign < 0 ? "-" : "") : (t.sign < 0 ? " - " : " + ");
    s += "<<";
    for (std::size_t j = 0; j < t.slots.size(); ++j) s += (j ? ", " : "") + to_string(t.slots[j]);
    s += ">>";
  }
  return s;
}

PfisterExpr pfister_decompose_1(const QForm& q) {
  require(in_power_I(q, 1), ErrorCode::NotInI1, "form of odd dimension " + std::to_string(q.dim()));
  PfisterExpr e{1, {}};
  for (std::size_t i = 0; i + 1 < q.dim(); i += 2) {
    e.terms.push_back({1, {rep(SquareClass::of(-q.entries[i]))}});
    e.terms.push_back({-1, {rep(SquareClass::of(q.entries[i + 1]))}});
  }
  if (!witt_equivalent(e.expand(), q)) fail(ErrorCode::InternalError, "fold-1 decomposition failed to verify");
  return e;
}

PfisterExpr alternating_decompose_1(const QForm& q) {
  require(in_power_I(q, 1), ErrorCode::NotInI1, "form of odd dimension " + std::to_string(q.dim()));
  PfisterExpr e{1, {}};
  for (std::size_t i = 0; i < q.dim(); ++i)
    e.terms.push_back({(i + 1) % 2 ? -1 : 1, {rep(SquareClass::of(-q.entries[i]))}});
  return e;
}

PfisterExpr pfister_decompose_2(const QForm& q) {
  require(in_power_I(q, 2), ErrorCode::NotInI2, "form is not in I^2 (odd dimension or nontrivial signed determinant)");
  const auto a = q.classes();
  const std::size_t m = q.dim() / 2;
  std::vector<SquareClass> x(m), y(m);
  for (std::size_t k = 0; k < m; ++k) {
    x[k] = SquareClass::of(-1) * a[2 * k] * a[2 * k + 1];
    y[k] = k == 0 ? x[0] : y[k - 1] * x[k];
  }
  PfisterExpr e{2, {}};
  for (std::size_t k = 1; k < m; ++k) e.terms.push_back({1, {rep(y[k - 1]), rep(x[k])}});
  for (std::size_t k = 0; k < m; ++k) e.terms.push_back({-1, {rep(a[2 * k]), rep(x[k])}});
  if (!witt_equivalent(e.expand(), q)) fail(ErrorCode::InternalError, "fold-2 decomposition failed to verify");
  return e;
}

PfisterExpr displayed_decompose_2(const QForm& q) {
  require(in_power_I(q, 2), ErrorCode::NotInI2, "form is not in I^2 (odd dimension or nontrivial signed determinant)");
  const auto a = q.classes();
  PfisterExpr e{2, {}};
  SquareClass prefix = a[0];  // a_1 ... a_{i-1}
  for (std::size_t i = 2; i <= a.size(); ++i) {
    const SquareClass s1 = (i + 1) % 2 ? SquareClass::of(-1) * a[i - 1] : a[i - 1];
    const SquareClass s2 = (i * (i - 1) / 2 + 1) % 2 ? SquareClass::of(-1) * prefix : prefix;
    e.terms.push_back({i % 2 ? -1 : 1, {rep(s1), rep(s2)}});
    prefix = prefix * a[i - 1];
  }
  return e;
}

std::string to_string(FormalClass c) {
  std::string s;
  if (c & kMinusOne) s = "-";
  std::string body;
  for (unsigned bit = 1; bit < 64; ++bit) {
    if (!((c >> bit) & 1)) continue;
    body += (bit % 2 ? "a" : "b") + std::to_string((bit + 1) / 2);
  }
  return s + (body.empty() ? "1" : body);
}

std::string to_string(const FormalForm& q) {
  std::string s = "<";
  for (std::size_t i = 0; i < q.entries.size(); ++i) s += (i ? ", " : "") + to_string(q.entries[i]);
  return s + ">";
}

FormalForm generic_qn(unsigned n) {
  require(n >= 3 && n <= 61, ErrorCode::InvalidArgument, "generic_qn needs 3 <= n <= 61");
  if (n % 2 == 0) {
    FormalForm q = generic_qn(n - 1);
    q.entries.push_back(0);
    return q;
  }
  FormalForm q{{var_a(1), var_b(1), var_a(1) ^ var_b(1)}, 1};
  for (unsigned j = 2; 2 * j + 1 <= n; ++j) {
    const FormalClass c = var_a(j) ^ var_b(j);
    for (auto& e : q.entries) e ^= c;
    q.entries.push_back(var_a(j));
    q.entries.push_back(var_b(j));
    q.pairs = j;
  }
  return q;
}

FormalClass formal_signed_det(const FormalForm& q) {
  const std::size_t n = q.entries.size();
  FormalClass d = (n * (n - 1) / 2) % 2 ? kMinusOne : 0;
  for (FormalClass e : q.entries) d ^= e;
  return d;
}

namespace {

void toggle_symbol(std::set<std::pair<unsigned, unsigned>>& acc, FormalClass x, FormalClass y) {
  for (unsigned u = 0; u < 64; ++u) {
    if (!((x >> u) & 1)) continue;
    for (unsigned v = 0; v < 64; ++v) {
      if (!((y >> v) & 1)) continue;
      std::pair<unsigned, unsigned> key = u == v && u != 0 ? std::pair{0u, u} : std::pair{std::min(u, v), std::max(u, v)};
      if (!acc.erase(key)) acc.insert(key);
    }
  }
}

}  // namespace

FormalSymbols formal_hasse_witt(const FormalForm& q) {
  std::set<std::pair<unsigned, unsigned>> acc;
  for (std::size_t i = 0; i < q.entries.size(); ++i)
    for (std::size_t j = i + 1; j < q.entries.size(); ++j) toggle_symbol(acc, q.entries[i], q.entries[j]);
  return {acc.begin(), acc.end()};
}

FormalSymbols formal_quaternion_product(unsigned pairs) {
  std::set<std::pair<unsigned, unsigned>> acc;
  for (unsigned i = 1; i <= pairs; ++i) toggle_symbol(acc, var_a(i), var_b(i));
  return {acc.begin(), acc.end()};
}

FormalSymbols symbol_difference(const FormalSymbols& x, const FormalSymbols& y) {
  FormalSymbols out;
  std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

QForm specialize(const FormalForm& q, const std::vector<Rational>& values) {
  require(values.size() == 2 * q.pairs, ErrorCode::InvalidArgument,
          "need " + std::to_string(2 * q.pairs) + " specialization values");
  QForm out;
  for (FormalClass e : q.entries) {
    SquareClass c = (e & kMinusOne) ? SquareClass::of(-1) : SquareClass{};
    for (unsigned bit = 1; bit <= 2 * q.pairs; ++bit)
      if ((e >> bit) & 1) c = c * SquareClass::of(values[bit - 1]);
    out.entries.push_back(rep(c));
  }
  return out;
}

BrauerTwo quaternion_product(const std::vector<Rational>& values) {
  require(values.size() % 2 == 0, ErrorCode::InvalidArgument, "values come in (a_i, b_i) pairs");
  BrauerTwo c;
  for (std::size_t i = 0; i < values.size(); i += 2)
    c.symbols.emplace_back(SquareClass::of(values[i]), SquareClass::of(values[i + 1]));
  return c;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// floor(sqrt(x)) for x < 2^126.
unsigned __int128 isqrt(unsigned __int128 x) {
  unsigned __int128 lo = 0, hi = (unsigned __int128)1 << 63;
  while (lo < hi) {
    const unsigned __int128 mid = (lo + hi + 1) / 2;
    if (mid * mid <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

}  // namespace

std::string to_string(const QuadraticSurd& x) {
  if (x.is_rational()) return to_string(x.a);
  return to_string(x.a) + " + " + to_string(x.b) + "*sqrt(2)";
}

QuadraticSurd pfister3_lower_bound(unsigned n) {
  require(n >= 2 && n % 2 == 0, ErrorCode::InvalidArgument, "pfister3_lower_bound needs an even n >= 2");
  require(n <= 240, ErrorCode::InvalidArgument, "pfister3_lower_bound supports n <= 240");
  const std::int64_t c = static_cast<std::int64_t>(n) + 2;
  if (n % 4 == 0) {
    const std::int64_t num = (std::int64_t{1} << ((n + 4) / 4)) - c;
    return {Rational(num, 7), Rational(0), floor_div(num + 6, 7)};
  }
  // 2^{(n+4)/4} = 2^k sqrt(2) with k = (n+2)/4; the value is irrational.
  const unsigned k = (n + 2) / 4;
  const auto s = static_cast<std::int64_t>(isqrt((unsigned __int128)1 << (2 * k + 1)));
  return {Rational(-c, 7), Rational(std::int64_t{1} << k, 7), floor_div(s - c, 7) + 1};
}

}  // namespace essdim::witt
