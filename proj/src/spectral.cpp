#include "solv/spectral.hpp"

#include "solv/error.hpp"
#include "solv/numberfield.hpp"

namespace solv {

int SpectralProfile::real_root_count_with_multiplicity() const {
  int n = 0;
  for (const auto& r : real_roots) n += r.multiplicity;
  return n;
}

bool SpectralProfile::has_root_one() const {
  for (const auto& r : real_roots)
    if (r.equals_one) return true;
  return false;
}

bool SpectralProfile::has_negative_real_root() const {
  for (const auto& r : real_roots)
    if (r.sign < 0) return true;
  return false;
}

bool SpectralProfile::all_real_roots_positive() const {
  for (const auto& r : real_roots)
    if (r.sign <= 0) return false;
  return true;
}

namespace {

RealRootInfo rational_root_info(const Rat& r, int mult) {
  RealRootInfo info;
  info.interval = {r, r, mult};
  info.multiplicity = mult;
  info.sign = sgn(r);
  info.equals_one = (r == 1);
  info.equals_minus_one = (r == -1);
  return info;
}

}  // namespace

SpectralProfile spectral_profile(const IntMat& m) {
  if (m.rows() != m.cols()) throw DimensionError("spectral_profile: non-square");
  const int n = static_cast<int>(m.rows());
  if (n != 2 && n != 3)
    throw DimensionError("spectral_profile: dimension must be 2 or 3");
  Int d = det(m);
  if (d != 1 && d != -1)
    throw Error("not_unimodular", "matrix determinant must be +-1");

  SpectralProfile sp;
  sp.degree = n;
  sp.charpoly = char_poly(m);
  sp.factored = factor_over_integers(sp.charpoly);

  for (const auto& [f, mult] : sp.factored.factors) {
    switch (f.degree()) {
      case 1: {
        Rat root = rat(-f.coeff(0), f.coeff(1));
        sp.real_roots.push_back(rational_root_info(root, mult));
        break;
      }
      case 2: {
        Int a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
        Int disc = b * b - 4 * a * c;
        if (disc < 0) {
          ComplexPairInfo pair;
          pair.multiplicity = mult;
          pair.modulus_squared = rat(c, a);
          pair.on_unit_circle = (*pair.modulus_squared == 1);
          if (pair.on_unit_circle && a == 1) {
            // Kronecker at degree 2: trace in {-1, 0, 1}
            if (b == 1)
              pair.root_of_unity_order = 3;
            else if (b == 0)
              pair.root_of_unity_order = 4;
            else if (b == -1)
              pair.root_of_unity_order = 6;
          }
          sp.complex_pairs.push_back(pair);
        } else {
          for (const auto& iv : isolate_real_roots(f)) {
            RealRootInfo info;
            info.interval = iv;
            info.multiplicity = mult;
            RootInterval tmp = iv;
            while (!tmp.exact() && sgn(tmp.lo) != sgn(tmp.hi))
              refine_interval(f, tmp);
            info.sign = tmp.exact() ? sgn(tmp.lo) : sgn(tmp.lo);
            info.equals_one = false;   // irreducible quadratic has no rational root
            info.equals_minus_one = false;
            sp.real_roots.push_back(info);
          }
        }
        break;
      }
      case 3: {
        auto real_ivs = isolate_real_roots(f);
        if (real_ivs.size() == 3) {
          for (const auto& iv : real_ivs) {
            RealRootInfo info;
            info.interval = iv;
            info.multiplicity = mult;
            RootInterval tmp = iv;
            while (!tmp.exact() && sgn(tmp.lo) != sgn(tmp.hi))
              refine_interval(f, tmp);
            info.sign = sgn(tmp.lo);
            sp.real_roots.push_back(info);
          }
        } else {
          // one real root c plus a complex pair with |alpha|^2 = -f0 / c
          RealRootInfo info;
          info.interval = real_ivs[0];
          info.multiplicity = mult;
          RootInterval tmp = real_ivs[0];
          while (!tmp.exact() && sgn(tmp.lo) != sgn(tmp.hi))
            refine_interval(f, tmp);
          info.sign = sgn(tmp.lo);
          sp.real_roots.push_back(info);

          ComplexPairInfo pair;
          pair.multiplicity = mult;
          // modulus^2 = product_of_roots / c = (-f0/f3) / c; tighten 1/c
          Rat prod = rat(-f.coeff(0), f.coeff(3));
          RootInterval civ = real_ivs[0];
          for (int i = 0; i < 24 && !civ.exact(); ++i) refine_interval(f, civ);
          if (civ.exact()) {
            pair.modulus_squared = prod / civ.lo;
            pair.on_unit_circle = (*pair.modulus_squared == 1);
          } else {
            Rat a = prod / civ.lo, b = prod / civ.hi;
            if (a > b) std::swap(a, b);
            pair.modulus_squared_interval = {a, b};
            pair.on_unit_circle = false;  // would force a rational root
          }
          sp.complex_pairs.push_back(pair);
        }
        break;
      }
      default:
        throw DomainError("unexpected factor degree in spectral profile");
    }
  }

  IntMat eye = identity_int(n);
  sp.eigenspace_rank_at_1 =
      static_cast<int>(kernel_basis(IntMat(m - eye)).cols());
  sp.eigenspace_rank_at_minus_1 =
      static_cast<int>(kernel_basis(IntMat(m + eye)).cols());
  sp.is_identity = (m == eye);
  // unipotent iff char poly = (x-1)^n
  ZPoly xm1 = ZPoly::of({-1, 1});
  if (sp.charpoly == xm1.pow(static_cast<unsigned>(n))) {
    sp.is_unipotent = true;
    IntMat p = m - eye;
    IntMat acc = eye;
    for (int k = 1; k <= n; ++k) {
      acc = IntMat(acc * p);
      bool zero = true;
      for (int i = 0; i < n && zero; ++i)
        for (int j = 0; j < n; ++j)
          if (acc(i, j) != 0) {
            zero = false;
            break;
          }
      if (zero) {
        sp.unipotency_index = k;
        break;
      }
    }
  }
  return sp;
}

}  // namespace solv
