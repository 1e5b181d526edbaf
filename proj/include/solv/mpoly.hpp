#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "solv/rational.hpp"

namespace solv {

/// Sparse multivariate polynomial over the rationals, for identities that are
/// symbolic in a handful of parameters (q of the Inoue S+- structure, the
/// unit-circle point (a, b), trig coefficients).
class MPoly {
public:
  MPoly() = default;
  MPoly(int v) { set_constant(Rat(v)); }  // NOLINT: Eigen scalar conversions
  MPoly(const Rat& v) { set_constant(v); }
  static MPoly var(int index, const Rat& scale = Rat(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // throws unless is_constant()
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

  Rat eval(const std::vector<Rat>& point) const;
  /// Substitutes x_index^2 -> sq everywhere (e.g. sin^2 = 1 - cos^2).
  MPoly reduce_square(int index, const MPoly& sq) const;
  /// Substitutes x_index -> value.
  MPoly substitute(int index, const MPoly& value) const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a);
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
  MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
  MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
  MPoly& operator*=(const MPoly& b) { return *this = *this * b; }

  std::string str(const std::vector<std::string>& names = {}) const;

private:
  void set_constant(const Rat& v);
  void add_term(std::vector<int> exps, const Rat& coeff);
  // exponent vectors are trimmed of trailing zeros so arity merges freely
  std::map<std::vector<int>, Rat> terms_;
};

}  // namespace solv

namespace Eigen {
template <>
struct NumTraits<solv::MPoly> : GenericNumTraits<solv::MPoly> {
  typedef solv::MPoly Real;
  typedef solv::MPoly NonInteger;
  typedef solv::MPoly Nested;
  static inline Real epsilon() { return solv::MPoly(); }
  static inline Real dummy_precision() { return solv::MPoly(); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 300,
    MulCost = 600
  };
};
}  // namespace Eigen
