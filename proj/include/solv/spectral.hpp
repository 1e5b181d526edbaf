#pragma once

#include <optional>
#include <vector>

#include "solv/poly.hpp"

namespace solv {

struct RealRootInfo {
  RootInterval interval;  // exact when the root is rational
  int multiplicity = 1;
  int sign = 0;
  bool equals_one = false;
  bool equals_minus_one = false;
};

struct ComplexPairInfo {
  std::optional<Rat> modulus_squared;               // when rational
  std::optional<std::pair<Rat, Rat>> modulus_squared_interval;  // otherwise
  bool on_unit_circle = false;
  std::optional<int> root_of_unity_order;
  int multiplicity = 1;
};

/// Exact root data of a unimodular integer matrix (dimension 2 or 3).
struct SpectralProfile {
  int degree = 0;
  ZPoly charpoly;
  FactoredPoly factored;
  std::vector<RealRootInfo> real_roots;
  std::vector<ComplexPairInfo> complex_pairs;
  int eigenspace_rank_at_1 = 0;
  int eigenspace_rank_at_minus_1 = 0;
  bool is_identity = false;
  bool is_unipotent = false;
  std::optional<int> unipotency_index;

  int real_root_count_with_multiplicity() const;
  bool has_root_one() const;
  bool has_negative_real_root() const;
  bool all_real_roots_positive() const;
};

SpectralProfile spectral_profile(const IntMat& m);

}  // namespace solv
