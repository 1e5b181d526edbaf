#pragma once

#include <string>
#include <utility>
#include <vector>

#include "solv/matrix.hpp"
#include "solv/rational.hpp"

namespace solv {

/// Integer polynomial, coefficients ascending by degree. The zero polynomial
/// has an empty coefficient vector and degree -1.
class ZPoly {
public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static ZPoly constant(const Int& v) { return ZPoly({v}); }
  static ZPoly x() { return ZPoly({Int(0), Int(1)}); }
  /// Builds c0 + c1 x + ... from an initializer of longs.
  static ZPoly of(std::initializer_list<long> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Int coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Int(0);
  }
  const Int& leading() const { return c_.back(); }
  const std::vector<Int>& coeffs() const { return c_; }

  Int eval(const Int& v) const;
  Rat eval(const Rat& v) const;

  ZPoly derivative() const;
  Int content() const;           // gcd of coefficients, sign of leading
  ZPoly primitive_part() const;  // this / content
  ZPoly pow(unsigned e) const;

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a);
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

  /// Exact division; throws if the remainder is nonzero.
  ZPoly divide_exact(const ZPoly& d) const;

  std::string str(const std::string& var = "x") const;

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

/// Rational polynomial used for Euclidean operations (gcd, Sturm chains,
/// residue arithmetic in number fields).
struct QPoly {
  std::vector<Rat> c;  // ascending

  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
  explicit QPoly(const ZPoly& p);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Rat coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : Rat(0);
  }
  const Rat& leading() const { return c.back(); }
  Rat eval(const Rat& v) const;
  QPoly derivative() const;
  QPoly monic() const;
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }
};

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly gcd(const QPoly& a, const QPoly& b);  // monic gcd
ZPoly clear_denominators(const QPoly& p);   // primitive integer multiple

/// Sturm chain of p; sign-variation counts certify real-root counts.
std::vector<QPoly> sturm_chain(const QPoly& p);
int sign_variations_at(const std::vector<QPoly>& chain, const Rat& x);
int sign_variations_at_plus_inf(const std::vector<QPoly>& chain);
int sign_variations_at_minus_inf(const std::vector<QPoly>& chain);
/// Number of distinct real roots of squarefree p in (a, b].
int sturm_count(const std::vector<QPoly>& chain, const Rat& a, const Rat& b);
int count_real_roots(const ZPoly& p);              // distinct, squarefree part
int count_positive_real_roots(const ZPoly& p);     // distinct roots in (0, inf)

struct RootInterval {
  Rat lo, hi;  // lo == hi encodes an exact rational root
  int mult = 1;
  bool exact() const { return lo == hi; }
  Rat mid() const { return (lo + hi) / 2; }
};

/// Disjoint isolating intervals for the distinct real roots of p, sorted by
/// position, with multiplicities from the squarefree decomposition.
std::vector<RootInterval> isolate_real_roots(const ZPoly& p);

/// Halves the interval while keeping the unique root of p inside.
void refine_interval(const ZPoly& squarefree, RootInterval& iv);

struct FactoredPoly {
  std::vector<std::pair<ZPoly, int>> factors;  // irreducible primitive, mult
  Int leading = 1;                             // signed integer content

  ZPoly expand() const;
};

/// Complete factorization into integer-irreducible factors. Degree after
/// stripping rational roots must be at most 4.
FactoredPoly factor_over_integers(const ZPoly& p);

/// Yun squarefree decomposition: p = leading * prod f_i ^ i.
std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& p);

/// Monic characteristic polynomial of a square integer matrix (dim <= 6).
ZPoly char_poly(const IntMat& m);

/// Companion matrix of a monic integer polynomial.
IntMat companion(const ZPoly& monic_poly);

}  // namespace solv
