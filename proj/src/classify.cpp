#include "solv/classify.hpp"

#include <sstream>

#include "solv/error.hpp"
#include "solv/spectral.hpp"
#include "solv/wang.hpp"

namespace solv {

namespace {

std::optional<Eta> eta_from_order(int order) {
  switch (order) {
    case 2:
      return Eta::Pi;
    case 3:
      return Eta::TwoPiOver3;
    case 4:
      return Eta::PiOver2;
    case 6:
      return Eta::PiOver3;
    default:
      return std::nullopt;
  }
}

KodairaDim kodaira_of(SurfaceTag t) {
  switch (t) {
    case SurfaceTag::ComplexTorus:
    case SurfaceTag::Hyperelliptic:
    case SurfaceTag::PrimaryKodaira:
    case SurfaceTag::SecondaryKodaira:
      return KodairaDim::Zero;
    case SurfaceTag::InoueS0:
    case SurfaceTag::InoueSPlus:
    case SurfaceTag::InoueSMinus:
      return KodairaDim::MinusInfinity;
    default:
      return KodairaDim::NotApplicable;
  }
}

bool is_complex_class(SurfaceTag t) {
  switch (t) {
    case SurfaceTag::ComplexTorus:
    case SurfaceTag::Hyperelliptic:
    case SurfaceTag::InoueS0:
    case SurfaceTag::PrimaryKodaira:
    case SurfaceTag::SecondaryKodaira:
    case SurfaceTag::InoueSPlus:
    case SurfaceTag::InoueSMinus:
      return true;
    default:
      return false;
  }
}

std::string describe_profile(const SpectralProfile& sp) {
  std::ostringstream os;
  os << "charpoly " << sp.charpoly.str();
  os << "; real roots:";
  if (sp.real_roots.empty()) os << " none";
  for (const auto& r : sp.real_roots) {
    os << " [" << to_string(r.interval.lo) << "," << to_string(r.interval.hi) << "]x"
       << r.multiplicity;
  }
  if (!sp.complex_pairs.empty()) {
    os << "; complex pairs:";
    for (const auto& p : sp.complex_pairs) {
      if (p.modulus_squared)
        os << " |a|^2=" << to_string(*p.modulus_squared);
      else if (p.modulus_squared_interval)
        os << " |a|^2 in (" << to_string(p.modulus_squared_interval->first) << ","
           << to_string(p.modulus_squared_interval->second) << ")";
      if (p.root_of_unity_order) os << " order " << *p.root_of_unity_order;
    }
  }
  os << "; dim ker(A-I)=" << sp.eigenspace_rank_at_1
     << ", dim ker(A+I)=" << sp.eigenspace_rank_at_minus_1;
  return os.str();
}

ClassificationReport finish(SurfaceClass cls, int b1, std::string witness,
                            std::optional<std::pair<int, SurfaceClass>> hint = {}) {
  ClassificationReport r;
  r.cls = cls;
  r.b1 = b1;
  r.admits_complex = is_complex_class(cls.tag);
  r.admits_kaehler = admits_kaehler(cls);
  r.kodaira = kodaira_of(cls.tag);
  r.witness = std::move(witness);
  r.finite_cover_hint = std::move(hint);
  return r;
}

SurfaceClass unipotent_class_ii(const SpectralProfile& sp) {
  // triple root 1: rank(A - I) separates the two nilmanifold cases
  int rk = sp.degree - sp.eigenspace_rank_at_1;
  if (rk == 1) return {SurfaceTag::PrimaryKodaira, std::nullopt};
  return {SurfaceTag::NilmanifoldB2, std::nullopt};
}

}  // namespace

ClassificationReport classify_type_II(const IntMat& a) {
  if (a.rows() != 3 || a.cols() != 3)
    throw InvalidInput("classify_type_II expects a 3x3 matrix");
  if (det(a) != 1) throw InvalidInput("monodromy must lie in SL(3, Z)");
  SpectralProfile sp = spectral_profile(a);
  const std::string w = describe_profile(sp);
  const int b1 = 1 + sp.eigenspace_rank_at_1;

  if (sp.is_identity)
    return finish({SurfaceTag::ComplexTorus, std::nullopt}, 4, w);

  if (sp.is_unipotent) return finish(unipotent_class_ii(sp), b1, w);

  if (sp.has_root_one()) {
    // unit-circle complex pair: finite-order rotation block
    for (const auto& p : sp.complex_pairs) {
      if (p.on_unit_circle && p.root_of_unity_order) {
        SurfaceClass c{SurfaceTag::Hyperelliptic, eta_from_order(*p.root_of_unity_order)};
        return finish(c, b1, w);
      }
    }
    // double root -1
    bool minus_one_double = false;
    for (const auto& r : sp.real_roots)
      if (r.equals_minus_one && r.multiplicity == 2) minus_one_double = true;
    if (minus_one_double) {
      if (sp.eigenspace_rank_at_minus_1 == 2)
        return finish({SurfaceTag::Hyperelliptic, Eta::Pi}, b1, w);
      // non-diagonalizable -1: the square is unipotent
      IntMat a2 = IntMat(a * a);
      SpectralProfile sp2 = spectral_profile(a2);
      return finish({SurfaceTag::OtherNotEnumerated, std::nullopt}, b1, w,
                    std::make_pair(2, unipotent_class_ii(sp2)));
    }
    if (sp.has_negative_real_root()) {
      IntMat a2 = IntMat(a * a);
      ClassificationReport cover = classify_type_II(a2);
      return finish({SurfaceTag::OtherNotEnumerated, std::nullopt}, b1, w,
                    std::make_pair(2, cover.cls));
    }
    // root 1 plus two distinct positive real roots a, 1/a
    if (sp.all_real_roots_positive() && sp.real_root_count_with_multiplicity() == 3)
      return finish({SurfaceTag::T2BundleRealRoots, std::nullopt}, b1, w);
    return finish({SurfaceTag::OtherNotEnumerated, std::nullopt}, b1, w);
  }

  if (!sp.complex_pairs.empty())
    return finish({SurfaceTag::InoueS0, std::nullopt}, b1, w);

  if (sp.has_negative_real_root()) {
    IntMat a2 = IntMat(a * a);
    ClassificationReport cover = classify_type_II(a2);
    return finish({SurfaceTag::OtherNotEnumerated, std::nullopt}, b1, w,
                  std::make_pair(2, cover.cls));
  }

  if (sp.all_real_roots_positive() && sp.real_root_count_with_multiplicity() == 3)
    return finish({SurfaceTag::T3BundleRealRoots, std::nullopt}, b1, w);

  return finish({SurfaceTag::OtherNotEnumerated, std::nullopt}, b1, w);
}

ClassificationReport classify_type_III(int n, const IntMat& b, int eps) {
  WangExtension w = WangExtension::heisenberg(n, b, eps);  // validates eps = det B
  SpectralProfile sp = spectral_profile(b);
  const std::string wit = describe_profile(sp);
  const int b1 = abelianization_rank(w);
  const Int tr = b(0, 0) + b(1, 1);
  const Int d = det(b);

  if (sp.is_identity && eps == 1)
    return finish({SurfaceTag::PrimaryKodaira, std::nullopt}, b1, wit);

  if (sp.is_unipotent)
    return finish({SurfaceTag::NilmanifoldB2, std::nullopt}, b1, wit);

  if (d == 1) {
    bool minus_id = (b == IntMat(-identity_int(2)));
    if (minus_id) return finish({SurfaceTag::SecondaryKodaira, Eta::Pi}, b1, wit);
    if (tr == -1 || tr == 0 || tr == 1) {
      Eta eta = (tr == -1) ? Eta::TwoPiOver3 : (tr == 0) ? Eta::PiOver2 : Eta::PiOver3;
      return finish({SurfaceTag::SecondaryKodaira, eta}, b1, wit);
    }
    if (tr > 2) return finish({SurfaceTag::InoueSPlus, std::nullopt}, b1, wit);
    if (tr < -2)
      return finish({SurfaceTag::OtherNotEnumerated, std::nullopt}, b1, wit,
                    std::make_pair(2, SurfaceClass{SurfaceTag::InoueSPlus, std::nullopt}));
    // trace -2, B != -I: the square is unipotent != I
    return finish({SurfaceTag::OtherNotEnumerated, std::nullopt}, b1, wit,
                  std::make_pair(2, SurfaceClass{SurfaceTag::NilmanifoldB2, std::nullopt}));
  }

  // det B = -1
  if (tr != 0) return finish({SurfaceTag::InoueSMinus, std::nullopt}, b1, wit);
  // trace 0, det -1: B^2 = I, the double cover has B = I
  return finish({SurfaceTag::OtherNotEnumerated, std::nullopt}, b1, wit,
                std::make_pair(2, SurfaceClass{SurfaceTag::PrimaryKodaira, std::nullopt}));
}

bool admits_kaehler(const SurfaceClass& c) {
  return c.tag == SurfaceTag::ComplexTorus || c.tag == SurfaceTag::Hyperelliptic;
}

std::vector<HomogeneousRow> homogeneous_surface_table() {
  return {
      {"S^2 x T^2", "2", "Ruled Surface of genus 1", "-inf"},
      {"S^1 x_{Z_m} S^3/H", "1", "Hopf Surface", "-inf"},
      {"S^2 x S^2", "0", "Hirzebruch Surface of even type", "-inf"},
      {"CP^2", "0", "Complex Projective Space", "-inf"},
      {"Solvmanifold", "1", "Inoue Surface", "-inf"},
      {"Solvmanifold", "4", "Complex Torus", "0"},
      {"Solvmanifold", "3", "Primary Kodaira Surface", "0"},
      {"Solvmanifold", "2", "Hyperelliptic Surface", "0"},
      {"Solvmanifold", "1", "Secondary Kodaira Surface", "0"},
      {"S^1 x SL~_2(R)-lattice quotient", "odd", "Properly Elliptic Surface", "1"},
  };
}

std::pair<Rat, OrbifoldType> orbifold_euler(const OrbifoldInput& inp) {
  Rat v = inp.euler_base;
  for (int m : inp.multiplicities) {
    if (m < 2) throw InvalidInput("orbifold multiplicities must be >= 2");
    v -= Rat(1) - rat(1, m);
  }
  OrbifoldType t = (v < 0)   ? OrbifoldType::Hyperbolic
                   : (v > 0) ? OrbifoldType::Spherical
                             : OrbifoldType::Flat;
  return {v, t};
}

std::string surface_tag_name(SurfaceTag t) {
  switch (t) {
    case SurfaceTag::ComplexTorus:
      return "ComplexTorus";
    case SurfaceTag::Hyperelliptic:
      return "Hyperelliptic";
    case SurfaceTag::InoueS0:
      return "InoueS0";
    case SurfaceTag::PrimaryKodaira:
      return "PrimaryKodaira";
    case SurfaceTag::SecondaryKodaira:
      return "SecondaryKodaira";
    case SurfaceTag::InoueSPlus:
      return "InoueSPlus";
    case SurfaceTag::InoueSMinus:
      return "InoueSMinus";
    case SurfaceTag::NilmanifoldB2:
      return "NilmanifoldB2";
    case SurfaceTag::T2BundleRealRoots:
      return "T2BundleRealRoots";
    case SurfaceTag::T3BundleRealRoots:
      return "T3BundleRealRoots";
    case SurfaceTag::OtherNotEnumerated:
      return "OtherNotEnumerated";
  }
  return "?";
}

std::string eta_name(Eta e) {
  switch (e) {
    case Eta::Pi:
      return "pi";
    case Eta::TwoPiOver3:
      return "2pi/3";
    case Eta::PiOver2:
      return "pi/2";
    case Eta::PiOver3:
      return "pi/3";
  }
  return "?";
}

std::string kodaira_name(KodairaDim k) {
  switch (k) {
    case KodairaDim::MinusInfinity:
      return "-inf";
    case KodairaDim::Zero:
      return "0";
    case KodairaDim::One:
      return "1";
    case KodairaDim::NotApplicable:
      return "n/a";
  }
  return "?";
}

}  // namespace solv
