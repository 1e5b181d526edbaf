#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solv/matrix.hpp"
#include "solv/rational.hpp"

namespace solv {

enum class SurfaceTag {
  ComplexTorus,
  Hyperelliptic,
  InoueS0,
  PrimaryKodaira,
  SecondaryKodaira,
  InoueSPlus,
  InoueSMinus,
  NilmanifoldB2,
  T2BundleRealRoots,
  T3BundleRealRoots,
  OtherNotEnumerated
};

/// Rotation angle of the finite-order part of the monodromy.
enum class Eta { Pi, TwoPiOver3, PiOver2, PiOver3 };

struct SurfaceClass {
  SurfaceTag tag = SurfaceTag::OtherNotEnumerated;
  std::optional<Eta> eta;  // Hyperelliptic / SecondaryKodaira only

  friend bool operator==(const SurfaceClass& a, const SurfaceClass& b) {
    return a.tag == b.tag && a.eta == b.eta;
  }
};

enum class KodairaDim { MinusInfinity, Zero, One, NotApplicable };

struct ClassificationReport {
  SurfaceClass cls;
  int b1 = 0;
  bool admits_complex = false;
  bool admits_kaehler = false;
  KodairaDim kodaira = KodairaDim::NotApplicable;
  std::string witness;
  std::optional<std::pair<int, SurfaceClass>> finite_cover_hint;
};

struct HomogeneousRow {
  std::string model;
  std::string b1;  // integer or "odd"
  std::string surface;
  std::string kodaira;  // "-inf", "0", "1"
};

struct OrbifoldInput {
  int euler_base = 0;
  std::vector<int> multiplicities;  // each >= 2
};

enum class OrbifoldType { Hyperbolic, Flat, Spherical };

/// Torus-bundle classification from the monodromy A in SL(3, Z).
ClassificationReport classify_type_II(const IntMat& a);

/// Lambda_n-bundle classification from the induced action (B, eps).
ClassificationReport classify_type_III(int n, const IntMat& b, int eps);

bool admits_kaehler(const SurfaceClass& c);

/// Static table of complex surfaces with homogeneous diffeomorphism type.
std::vector<HomogeneousRow> homogeneous_surface_table();

std::pair<Rat, OrbifoldType> orbifold_euler(const OrbifoldInput& inp);

std::string surface_tag_name(SurfaceTag t);
std::string eta_name(Eta e);
std::string kodaira_name(KodairaDim k);

}  // namespace solv
