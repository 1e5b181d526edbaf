#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "solv/matrix.hpp"

namespace solv {

enum class FiberKind { AbelianZ3, HeisenbergLambda, AbelianZ2 };

/// Fiber of the Mostow fibration: Z^3, the rank-3 Heisenberg-type group
/// Lambda_n with [g1, g2] = g3^n, or Z^2 for the rank-2 quotient form.
struct Fiber {
  FiberKind kind = FiberKind::AbelianZ3;
  int n = 1;  // HeisenbergLambda only
};

enum class Tri { Yes, No, Unknown };

struct TypeSet {
  Tri type_i = Tri::Unknown;
  bool type_ii = false;
  bool type_iii = false;
};

/// Extension 0 -> fiber -> Gamma -> Z^k -> 0 with monodromy data.
/// Constructed through the factory functions, which validate shapes,
/// unimodularity and the eps = det(B) compatibility.
class WangExtension {
public:
  /// k = 1, fiber Z^3, monodromy A in SL(3, Z).
  static WangExtension abelian(const IntMat& a);
  /// k = 1, fiber Lambda_n, induced action B in GL(2, Z) with center sign eps.
  static WangExtension heisenberg(int n, const IntMat& b, int eps,
                                  std::optional<std::pair<int, int>> offsets = {});
  /// k = 2, fiber Z^2, two commuting monodromies (torus bundle over torus).
  static WangExtension rank2(const IntMat& a1, const IntMat& a2);

  const Fiber& fiber() const { return fiber_; }
  int k() const { return k_; }
  const IntMat& monodromy() const { return mono_[0]; }
  const std::vector<IntMat>& monodromies() const { return mono_; }
  int eps() const { return eps_; }
  const std::optional<std::pair<int, int>>& offsets() const { return offsets_; }

private:
  WangExtension() = default;
  Fiber fiber_;
  int k_ = 1;
  std::vector<IntMat> mono_;
  int eps_ = 1;  // HeisenbergLambda only; equals det(B)
  std::optional<std::pair<int, int>> offsets_;
};

/// Matrix model of Lambda_n: returns (g1, g2, g3) upper unitriangular with
/// g3's corner entry 1/n; the relation [g1, g2] = g3^n and centrality of g3
/// are verified exactly before returning.
std::array<RatMat, 3> lambda_matrix_generators(int n);

/// Free rank of the abelianization of the extension group.
int abelianization_rank(const WangExtension& w);

TypeSet wang_types(const WangExtension& w);

/// Index-m pullback along mZ in Z (k = 1 only): monodromy raised to the m-th
/// power, fiber unchanged, offsets dropped.
WangExtension power_reduction(const WangExtension& w, int m);

}  // namespace solv
