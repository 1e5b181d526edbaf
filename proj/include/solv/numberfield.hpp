#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "solv/poly.hpp"
#include "solv/rational.hpp"

namespace solv {

/// Q[x]/(minpoly) for an irreducible integer polynomial of degree <= 3.
class NumberField {
public:
  explicit NumberField(ZPoly minpoly);

  const ZPoly& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  /// x^k reduced mod minpoly, k = 0 .. 2*deg-2.
  const QPoly& xpow(int k) const { return xpow_[static_cast<std::size_t>(k)]; }

  /// Isolating intervals of the real roots of minpoly (the real embeddings).
  const std::vector<RootInterval>& real_roots() const { return real_roots_; }

private:
  ZPoly minpoly_;
  std::vector<QPoly> xpow_;
  std::vector<RootInterval> real_roots_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field in the power basis. A null field means the
/// element is plain rational, so NFElem doubles as an Eigen scalar.
class NFElem {
public:
  NFElem() : coords_{Rat(0)} {}
  NFElem(int v) : coords_{Rat(v)} {}  // NOLINT: Eigen needs implicit S(0)/S(1)
  NFElem(const Rat& v) : coords_{v} {}
  NFElem(FieldPtr fld, std::vector<Rat> coords);

  static NFElem generator(const FieldPtr& fld);

  const FieldPtr& field() const { return fld_; }
  const std::vector<Rat>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // throws unless is_rational()
  QPoly as_poly() const;

  NFElem inv() const;

  friend NFElem operator+(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a, const NFElem& b);
  friend NFElem operator*(const NFElem& a, const NFElem& b);
  friend NFElem operator/(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a);
  friend bool operator==(const NFElem& a, const NFElem& b);
  friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

  NFElem& operator+=(const NFElem& b) { return *this = *this + b; }
  NFElem& operator-=(const NFElem& b) { return *this = *this - b; }
  NFElem& operator*=(const NFElem& b) { return *this = *this * b; }
  NFElem& operator/=(const NFElem& b) { return *this = *this / b; }

  std::string str() const;

private:
  static std::pair<FieldPtr, int> merged_field(const NFElem& a, const NFElem& b);
  FieldPtr fld_;  // null for rationals
  std::vector<Rat> coords_;
};

/// One real embedding of a field: an isolating interval for a real root of
/// the minimal polynomial, refined on demand for sign queries.
class RealEmbedding {
public:
  RealEmbedding(FieldPtr fld, RootInterval iv) : fld_(std::move(fld)), iv_(iv) {}

  const FieldPtr& field() const { return fld_; }
  const RootInterval& interval() const { return iv_; }
  void refine();

  /// Exact sign of the image of e under this embedding.
  int sign(const NFElem& e);
  int compare(const NFElem& a, const NFElem& b) { return sign(a - b); }

private:
  FieldPtr fld_;
  RootInterval iv_;
};

inline NFElem abs(const NFElem& e) { return e; }  // Eigen pivoting hook; unused

}  // namespace solv

namespace Eigen {
template <>
struct NumTraits<solv::NFElem> : GenericNumTraits<solv::NFElem> {
  typedef solv::NFElem Real;
  typedef solv::NFElem NonInteger;
  typedef solv::NFElem Nested;
  static inline Real epsilon() { return solv::NFElem(); }
  static inline Real dummy_precision() { return solv::NFElem(); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 300,
    MulCost = 500
  };
};
}  // namespace Eigen
