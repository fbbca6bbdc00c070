#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "essdim/error.hpp"

namespace essdim::witt {

using Rational = boost::rational<std::int64_t>;

/// A completion of Q: a prime, or kInfinity for the reals.
using Place = std::uint64_t;
inline constexpr Place kInfinity = 0;

std::string place_name(Place v);

/// Rational parsing: "3", "-2/5".
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

/// Element of Q^*/Q^*2, stored as a sign and a sorted list of distinct primes.
struct SquareClass {
  int sign = 1;
  std::vector<std::uint64_t> primes;

  static SquareClass of(const Rational& r);
  static SquareClass of(std::int64_t n) { return of(Rational(n)); }

  bool is_one() const noexcept { return sign == 1 && primes.empty(); }
  /// Squarefree integer representative; throws InvalidArgument on overflow.
  std::int64_t representative() const;

  friend SquareClass operator*(const SquareClass& x, const SquareClass& y);
  friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

std::string to_string(const SquareClass& c);

int hilbert_symbol(const SquareClass& a, const SquareClass& b, Place v);
int hilbert_symbol(const Rational& a, const Rational& b, Place v);

/// 2, infinity and every prime dividing a or b: outside these the symbol is +1.
std::vector<Place> relevant_places(const std::vector<SquareClass>& classes);

/// Diagonal form over Q.
struct QForm {
  std::vector<Rational> entries;

  QForm() = default;
  explicit QForm(std::vector<Rational> e);
  std::size_t dim() const noexcept { return entries.size(); }
  std::vector<SquareClass> classes() const;
  int signature() const;
};

QForm parse_form(const std::string& s);  // "2,3,-1/2"
std::string to_string(const QForm& q);
QForm orthogonal_sum(const QForm& x, const QForm& y);
QForm scale(const QForm& q, const Rational& c);
QForm hyperbolic(std::size_t m);  // <1,-1>^m

/// Product of quaternion symbols in Br_2(Q).
struct BrauerTwo {
  std::vector<std::pair<SquareClass, SquareClass>> symbols;

  int invariant_at(Place v) const;
  /// Invariants at every relevant place of the symbols (those equal to +1 included).
  std::map<Place, int> local_invariants() const;
  std::vector<Place> ramified_places() const;
  bool is_trivial() const;
};

/// True iff the two classes have the same invariant at every place.
bool same_class(const BrauerTwo& x, const BrauerTwo& y);

SquareClass signed_det(const QForm& q);
BrauerTwo hasse_witt(const QForm& q);  // prod_{i<j} (a_i, a_j)

bool in_power_I(const QForm& q, int a);
bool witt_equivalent(const QForm& q1, const QForm& q2);

/// Signed sum of r-fold Pfister forms <<a_1,...,a_r>> = <1,-a_1> x ... x <1,-a_r>.
struct PfisterExpr {
  struct Term {
    int sign = 1;
    std::vector<Rational> slots;
  };
  unsigned fold = 0;
  std::vector<Term> terms;

  QForm expand() const;
};

QForm pfister_form(const std::vector<Rational>& slots);
std::string to_string(const PfisterExpr& e);

/// Pairs up entries: <a, b> = <<-a>> - <<b>>. Output verified; n terms.
PfisterExpr pfister_decompose_1(const QForm& q);
/// Alternating sum sum_i (-1)^i <<-a_i>>. Over Q this equals <-a_1, a_2, -a_3, ...>,
/// which is q only when -1 is a square; not verified against q.
PfisterExpr alternating_decompose_1(const QForm& q);

/// For q in I^2 of dimension n = 2m, with x_k = -a_{2k-1} a_{2k} and
/// y_k = x_1 ... x_k:
///   q = sum_{k=2}^m <<y_{k-1}, x_k>> - sum_{k=1}^m <<a_{2k-1}, x_k>>.
/// n - 1 terms; output verified.
PfisterExpr pfister_decompose_2(const QForm& q);
/// sum_{i=2}^n (-1)^i <<(-1)^{i+1} a_i, (-1)^{i(i-1)/2+1} a_1...a_{i-1}>>,
/// returned unverified: over Q it generally differs from q, but agrees with it
/// over every completion in which -1 is a square.
PfisterExpr displayed_decompose_2(const QForm& q);

/// Formal square classes over F_2 with basis bit 0 = -1, bit 2i-1 = a_i, bit 2i = b_i.
using FormalClass = std::uint64_t;
inline constexpr FormalClass kMinusOne = 1;
inline FormalClass var_a(unsigned i) { return FormalClass{1} << (2 * i - 1); }
inline FormalClass var_b(unsigned i) { return FormalClass{1} << (2 * i); }

struct FormalForm {
  std::vector<FormalClass> entries;
  unsigned pairs = 0;  // variables a_1, b_1, ..., a_pairs, b_pairs
};

std::string to_string(FormalClass c);
std::string to_string(const FormalForm& q);

/// q_3 = <a_1, b_1, a_1 b_1>, q_{2m+3} = <a_{m+1} b_{m+1}> q_{2m+1} + <a_{m+1}, b_{m+1}>;
/// for even n, q_n = q_{n-1} + <1>.
FormalForm generic_qn(unsigned n);

FormalClass formal_signed_det(const FormalForm& q);

/// Symbol sums in the exterior-like basis {(u, v) : u <= v} of bit indices,
/// reduced with (x, x) = (x, -1) for x != -1; stored as a sorted set of pairs
/// with multiplicities mod 2.
using FormalSymbols = std::vector<std::pair<unsigned, unsigned>>;
FormalSymbols formal_hasse_witt(const FormalForm& q);
FormalSymbols formal_quaternion_product(unsigned pairs);  // prod (a_i, b_i)
/// Symmetric difference, i.e. the quotient of two classes.
FormalSymbols symbol_difference(const FormalSymbols& x, const FormalSymbols& y);

/// values = {a_1, b_1, a_2, b_2, ...}.
QForm specialize(const FormalForm& q, const std::vector<Rational>& values);
BrauerTwo quaternion_product(const std::vector<Rational>& values);

/// (2^{(n+4)/4} - n - 2) / 7 as a + b sqrt(2) with rational a, b.
struct QuadraticSurd {
  Rational a;
  Rational b;  // coefficient of sqrt(2); zero when n = 0 mod 4
  std::int64_t ceiling;
  bool is_rational() const { return b.numerator() == 0; }
};

std::string to_string(const QuadraticSurd& x);
QuadraticSurd pfister3_lower_bound(unsigned n);

}  // namespace essdim::witt
