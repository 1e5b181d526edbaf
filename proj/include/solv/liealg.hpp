#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "solv/matrix.hpp"
#include "solv/mpoly.hpp"
#include "solv/rational.hpp"

namespace solv {

/// Lie algebra given by structure constants. Only pairs i < j are stored;
/// antisymmetry is implicit. Scalar S is a commutative ring (Rat for the
/// catalog, MPoly for identities symbolic in parameters).
template <class S>
struct BasicLieAlgebra {
  using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

  int dim = 0;
  std::vector<std::string> labels;
  std::map<std::pair<int, int>, std::vector<S>> c;  // (i,j) with i < j, 0-based

  explicit BasicLieAlgebra(int n = 0) : dim(n) {
    for (int i = 0; i < n; ++i) labels.push_back("X" + std::to_string(i + 1));
  }

  void set_bracket(int i, int j, std::vector<S> coeffs) {
    if (i == j) throw DomainError("bracket [X,X] must vanish");
    if (i > j) {
      for (S& x : coeffs) x = S(0) - x;
      std::swap(i, j);
    }
    c[{i, j}] = std::move(coeffs);
  }

  Vec bracket_basis(int i, int j) const {
    Vec v = Vec::Constant(dim, S(0));
    if (i == j) return v;
    int sign = 1;
    if (i > j) {
      std::swap(i, j);
      sign = -1;
    }
    auto it = c.find({i, j});
    if (it == c.end()) return v;
    for (int m = 0; m < dim; ++m)
      v(m) = (sign > 0) ? it->second[static_cast<std::size_t>(m)]
                        : S(0) - it->second[static_cast<std::size_t>(m)];
    return v;
  }

  Vec bracket(const Vec& u, const Vec& v) const {
    Vec out = Vec::Constant(dim, S(0));
    for (const auto& [ij, coeffs] : c) {
      S f = u(ij.first) * v(ij.second) - u(ij.second) * v(ij.first);
      if (f == S(0)) continue;
      for (int m = 0; m < dim; ++m)
        out(m) = out(m) + f * coeffs[static_cast<std::size_t>(m)];
    }
    return out;
  }

  /// Matrix of ad X_i; column j holds [X_i, X_j].
  Mat ad(int i) const {
    Mat a = Mat::Constant(dim, dim, S(0));
    for (int j = 0; j < dim; ++j) a.col(j) = bracket_basis(i, j);
    return a;
  }

  Mat ad_of(const Vec& u) const {
    Mat a = Mat::Constant(dim, dim, S(0));
    for (int i = 0; i < dim; ++i) a = a + Mat(ad(i) * u(i));
    return a;
  }

  /// First triple (i, j, k) violating the Jacobi identity, if any.
  std::optional<std::tuple<int, int, int>> jacobi_witness() const {
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        for (int k = j + 1; k < dim; ++k) {
          Vec ei = Vec::Constant(dim, S(0)), ej = ei, ek = ei;
          ei(i) = S(1);
          ej(j) = S(1);
          ek(k) = S(1);
          Vec s = bracket(bracket(ei, ej), ek) + bracket(bracket(ej, ek), ei) +
                  bracket(bracket(ek, ei), ej);
          for (int m = 0; m < dim; ++m)
            if (!(s(m) == S(0))) return std::make_tuple(i, j, k);
        }
    return std::nullopt;
  }

  bool jacobi_ok() const { return !jacobi_witness().has_value(); }
};

using LieAlgebra = BasicLieAlgebra<Rat>;
using SymbolicLieAlgebra = BasicLieAlgebra<MPoly>;

std::vector<int> derived_series_dims(const LieAlgebra& g);
std::vector<int> lower_central_series_dims(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
bool is_unimodular(const LieAlgebra& g);

/// Basis (as columns) of the derived subalgebra [g, g].
RatMat derived_subalgebra(const LieAlgebra& g);

enum class Cert { True, False, Undetermined };

struct FlagCertificate {
  std::vector<RatMat> ideals;  // strictly increasing chain of ideals of g
  std::vector<std::string> step_eigenvalues;
  bool full_flag = false;  // false when certified by the weight-block argument
};

struct EigenTypeResult {
  Cert verdict = Cert::Undetermined;
  FlagCertificate certificate;  // populated for True of completely solvable
  std::string witness;          // populated for False / Undetermined
};

/// Adjoint representation has only real eigenvalues.
EigenTypeResult is_completely_solvable(const LieAlgebra& g);
/// Adjoint representation has only pure-imaginary (incl. zero) eigenvalues.
EigenTypeResult is_rigid_type(const LieAlgebra& g);

enum class CatalogTag {
  Torus4,
  Hyperelliptic4,
  PrimaryKodaira4,
  SecondaryKodaira4,
  InoueS0,
  InoueSpm4,
  Example4,
  Example5
};

struct CatalogId {
  CatalogTag tag;
  Rat a = 1, b = 1;  // InoueS0 parameters, b != 0
  Rat q = 0;         // InoueSpm4 parameter
  int k = 1, l = 1;  // Example4 sizes
};

struct CatalogEntry {
  std::string name;
  LieAlgebra algebra;
  std::optional<RatMat> j;  // distinguished almost complex structure, if any
};

CatalogEntry catalog(const CatalogId& id);
std::vector<CatalogId> catalog_all_ids();  // canonical parameter choices

/// Inoue S+- algebra with J symbolic in q (variable 0).
std::pair<SymbolicLieAlgebra, Eigen::Matrix<MPoly, Eigen::Dynamic, Eigen::Dynamic>>
catalog_inoue_spm_symbolic(bool corrected_j);
/// Corrected J for the Inoue S+- algebra at a rational q (see geom docs).
RatMat inoue_spm_corrected_j(const Rat& q);
/// Inoue S0 algebra with brackets symbolic in a (var 0) and b (var 1).
SymbolicLieAlgebra catalog_inoue_s0_symbolic();

/// Parse/emit the structure-constant JSON list format
/// [[i, j, ["c1", ...]], ...] with 1-based i < j.
LieAlgebra liealg_from_triples(
    int dim, const std::vector<std::tuple<int, int, std::vector<Rat>>>& triples);

}  // namespace solv
