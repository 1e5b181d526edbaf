#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "solv/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<solv::Int> : GenericNumTraits<solv::Int> {
  typedef solv::Int Real;
  typedef solv::Int NonInteger;
  typedef solv::Int Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<solv::Rat> : GenericNumTraits<solv::Rat> {
  typedef solv::Rat Real;
  typedef solv::Rat NonInteger;
  typedef solv::Rat Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace solv {

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

inline IntMat identity_int(Eigen::Index n) {
  IntMat m = IntMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

/// Row echelon reduction over an exact field scalar. Returns the rank and
/// leaves the pivot column indices in `pivots` when requested.
template <class S>
Eigen::Index echelonize(Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& a,
                        std::vector<Eigen::Index>* pivots = nullptr) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!(a(i, c) == S(0))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    S inv = S(1) / a(r, c);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) = a(r, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == S(0)) continue;
      S f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

template <class S>
Eigen::Index rank(Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> a) {
  return echelonize(a);
}

inline Eigen::Index rank(const IntMat& a) { return rank(to_rat(a)); }

/// Basis of the right kernel, one column per basis vector.
template <class S>
Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> kernel_basis(
    Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> a) {
  using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index cols = a.cols();
  std::vector<Eigen::Index> pivots;
  const Eigen::Index r = echelonize(a, &pivots);
  std::vector<Eigen::Index> free_cols;
  {
    std::size_t p = 0;
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (p < pivots.size() && pivots[p] == c)
        ++p;
      else
        free_cols.push_back(c);
    }
  }
  Mat ker = Mat::Constant(cols, static_cast<Eigen::Index>(free_cols.size()), S(0));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index fc = free_cols[k];
    ker(fc, static_cast<Eigen::Index>(k)) = S(1);
    for (Eigen::Index i = 0; i < r; ++i)
      ker(pivots[static_cast<std::size_t>(i)], static_cast<Eigen::Index>(k)) =
          S(0) - a(i, fc);
  }
  return ker;
}

inline RatMat kernel_basis(const IntMat& a) { return kernel_basis(to_rat(a)); }

template <class S>
S det(Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> a) {
  if (a.rows() != a.cols()) throw DimensionError("det of non-square matrix");
  const Eigen::Index n = a.rows();
  S d(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (!(a(i, c) == S(0))) {
        piv = i;
        break;
      }
    if (piv < 0) return S(0);
    if (piv != c) {
      a.row(piv).swap(a.row(c));
      d = S(0) - d;
    }
    d = d * a(c, c);
    S inv = S(1) / a(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (a(i, c) == S(0)) continue;
      S f = a(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j) a(i, j) = a(i, j) - f * a(c, j);
    }
  }
  return d;
}

inline Int det(const IntMat& a) {
  Rat d = det(to_rat(a));
  return d.get_num();  // denominator is 1 for integer input
}

/// Solves a x = b over an exact field; throws if singular.
template <class S>
Eigen::Matrix<S, Eigen::Dynamic, 1> solve(
    const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<S, Eigen::Dynamic, 1>& b) {
  using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
  if (a.rows() != b.rows()) throw DimensionError("solve: shape mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<Eigen::Index> pivots;
  const Eigen::Index r = echelonize(aug, &pivots);
  Eigen::Matrix<S, Eigen::Dynamic, 1> x =
      Eigen::Matrix<S, Eigen::Dynamic, 1>::Constant(a.cols(), S(0));
  for (Eigen::Index i = 0; i < r; ++i) {
    if (pivots[static_cast<std::size_t>(i)] == a.cols())
      throw ArithmeticError("solve: inconsistent system");
    x(pivots[static_cast<std::size_t>(i)]) = aug(i, a.cols());
  }
  // verify (guards against under-determined systems returning a non-solution)
  Eigen::Matrix<S, Eigen::Dynamic, 1> res = a * x;
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    if (!(res(i) == b(i))) throw ArithmeticError("solve: no solution");
  return x;
}

template <class S>
Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> inverse(
    const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& a) {
  using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
  if (a.rows() != a.cols()) throw DimensionError("inverse of non-square matrix");
  const Eigen::Index n = a.rows();
  Mat aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = Mat::Constant(n, n, S(0));
  for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = S(1);
  if (echelonize(aug) != n) throw ArithmeticError("matrix not invertible");
  return aug.rightCols(n);
}

}  // namespace solv
