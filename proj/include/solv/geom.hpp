#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solv/liealg.hpp"
#include "solv/matrix.hpp"

namespace solv {

/// J acting on the basis, validated to satisfy J^2 = -I on an even dimension.
struct AlmostComplexStructure {
  RatMat j;

  explicit AlmostComplexStructure(RatMat m);
};

/// N(X_i, X_j) = [JX_i, JX_j] - J[JX_i, X_j] - J[X_i, JX_j] - [X_i, X_j].
/// Works over any catalog scalar (Rat, or MPoly for symbolic parameters).
template <class S>
Eigen::Matrix<S, Eigen::Dynamic, 1> nijenhuis(
    const BasicLieAlgebra<S>& g,
    const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& j, int i, int k) {
  using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
  if (i < 0 || k < 0 || i >= g.dim || k >= g.dim)
    throw InvalidInput("nijenhuis: index out of range");
  Vec ei = Vec::Constant(g.dim, S(0)), ek = ei;
  ei(i) = S(1);
  ek(k) = S(1);
  Vec ji = j * ei, jk = j * ek;
  Vec r = g.bracket(ji, jk);
  r = r - Vec(j * g.bracket(ji, ek));
  r = r - Vec(j * g.bracket(ei, jk));
  r = r - g.bracket(ei, ek);
  return r;
}

template <class S>
std::pair<bool, std::optional<std::pair<int, int>>> is_integrable(
    const BasicLieAlgebra<S>& g,
    const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& j) {
  for (int i = 0; i < g.dim; ++i)
    for (int k = i + 1; k < g.dim; ++k) {
      auto n = nijenhuis(g, j, i, k);
      for (int m = 0; m < g.dim; ++m)
        if (!(n(m) == S(0))) return {false, std::make_pair(i, k)};
    }
  return {true, std::nullopt};
}

inline std::pair<bool, std::optional<std::pair<int, int>>> is_integrable(
    const LieAlgebra& g, const AlmostComplexStructure& j) {
  return is_integrable<Rat>(g, j.j);
}

/// Element of the exterior algebra of the dual basis; keys are strictly
/// increasing 0-based index tuples.
class ExteriorForm {
public:
  ExteriorForm() = default;
  explicit ExteriorForm(int degree) : degree_(degree) {}
  /// Dual basis covector xi_i.
  static ExteriorForm covector(int i);
  /// Wedge monomial with coefficient, indices in any order (sign adjusted).
  static ExteriorForm monomial(std::vector<int> indices, const Rat& coeff);

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
  Rat coeff(const std::vector<int>& sorted_indices) const;

  void add_term(std::vector<int> indices, const Rat& coeff);

  friend ExteriorForm operator+(const ExteriorForm& a, const ExteriorForm& b);
  friend ExteriorForm operator-(const ExteriorForm& a, const ExteriorForm& b);
  friend ExteriorForm operator*(const Rat& s, const ExteriorForm& a);
  friend bool operator==(const ExteriorForm& a, const ExteriorForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  ExteriorForm wedge(const ExteriorForm& other) const;
  ExteriorForm pow(int e) const;

  std::string str(const std::vector<std::string>& names = {}) const;

private:
  int degree_ = 0;
  std::map<std::vector<int>, Rat> terms_;
};

/// Chevalley-Eilenberg complex: d_k as a matrix from degree k to k + 1 in the
/// lexicographic wedge-monomial bases.
struct CEComplex {
  int n = 0;
  std::vector<std::vector<std::vector<int>>> tuples;  // per-degree monomial bases
  std::vector<RatMat> d;                              // d[k]: deg k -> deg k+1

  RatVec to_vec(const ExteriorForm& f) const;
  ExteriorForm to_form(int degree, const RatVec& v) const;
};

/// Builds the complex with dxi(X, Y) = -xi([X, Y]); verifies d.d = 0 and the
/// sign-convention anchor before returning.
CEComplex ce_differential(const LieAlgebra& g);

ExteriorForm d(const LieAlgebra& g, const ExteriorForm& f);

std::vector<int> betti_numbers(const LieAlgebra& g);

struct CohomClass {
  int degree = 0;
  RatVec coords;  // relative to the ring's representative basis
};

class CohomologyRing {
public:
  explicit CohomologyRing(const LieAlgebra& g);

  const std::vector<int>& betti() const { return betti_; }
  const CEComplex& complex() const { return ce_; }
  /// Representative cocycle of a basis class.
  ExteriorForm representative(int degree, int index) const;
  /// Coordinates of a cocycle's class; throws if the form is not closed.
  CohomClass reduce(const ExteriorForm& cocycle) const;
  CohomClass cup(const CohomClass& x, const CohomClass& y) const;

private:
  CEComplex ce_;
  std::vector<int> betti_;
  std::vector<RatMat> reps_;     // per degree: columns are representative cocycles
  std::vector<RatMat> cobound_;  // per degree: columns span the coboundaries
};

bool is_symplectic(const LieAlgebra& g, const ExteriorForm& omega);

struct PseudoKahlerReport {
  bool ok = false;
  bool j_square = false;        // J^2 = -I
  bool closed = false;
  bool integrable = false;
  bool compatible = false;      // omega(J., J.) = omega
  bool nondegenerate = false;   // omega(., J.) nondegenerate
  std::string failed_condition;
};

/// Takes J as a raw matrix so that a broken J^2 = -I shows up as a report
/// entry instead of a constructor failure.
PseudoKahlerReport is_pseudo_kahler(const LieAlgebra& g, const ExteriorForm& omega,
                                    const RatMat& j);

/// Per k = 1..n, whether cup with [omega]^k maps H^(n-k) isomorphically to
/// H^(n+k). Requires is_symplectic.
std::vector<bool> hard_lefschetz(const LieAlgebra& g, const ExteriorForm& omega);

bool betti_parity_check(const LieAlgebra& g);

/// The 6-dimensional catalog entry's symplectic form
/// a1^a2 + b1^b2 + gamma^eta in the dual basis of {X1,X2,Y1,Y2,Z,W}.
ExteriorForm example5_symplectic_form();

}  // namespace solv
