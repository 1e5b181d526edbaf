#include "solv/wang.hpp"

#include "solv/error.hpp"
#include "solv/poly.hpp"

namespace solv {

namespace {

void require_square(const IntMat& m, int n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw InvalidInput(std::string(what) + ": expected " + std::to_string(n) + "x" +
                       std::to_string(n) + " matrix");
}

IntMat int_pow(const IntMat& a, int m) {
  IntMat r = identity_int(a.rows());
  for (int i = 0; i < m; ++i) r = IntMat(r * a);
  return r;
}

bool is_unipotent(const IntMat& a) {
  const Eigen::Index n = a.rows();
  IntMat p = IntMat(a - identity_int(n));
  IntMat acc = p;
  for (Eigen::Index k = 1; k < n; ++k) acc = IntMat(acc * p);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (acc(i, j) != 0) return false;
  return true;
}

}  // namespace

WangExtension WangExtension::abelian(const IntMat& a) {
  require_square(a, 3, "abelian monodromy");
  if (det(a) != 1) throw InvalidInput("monodromy must lie in SL(3, Z)");
  WangExtension w;
  w.fiber_ = {FiberKind::AbelianZ3, 1};
  w.k_ = 1;
  w.mono_ = {a};
  return w;
}

WangExtension WangExtension::heisenberg(int n, const IntMat& b, int eps,
                                        std::optional<std::pair<int, int>> offsets) {
  if (n < 1) throw InvalidInput("Lambda_n requires n >= 1");
  require_square(b, 2, "induced action B");
  Int d = det(b);
  if (d != 1 && d != -1) throw InvalidInput("B must lie in GL(2, Z)");
  // the automorphism sends [g1, g2] = g3^n to [phi(g1), phi(g2)] = g3^(n det B),
  // so the center scales by det B; eps must agree
  if (Int(eps) != d) throw InvalidInput("eps must equal det(B)");
  WangExtension w;
  w.fiber_ = {FiberKind::HeisenbergLambda, n};
  w.k_ = 1;
  w.mono_ = {b};
  w.eps_ = eps;
  w.offsets_ = offsets;
  return w;
}

WangExtension WangExtension::rank2(const IntMat& a1, const IntMat& a2) {
  require_square(a1, 2, "monodromy");
  require_square(a2, 2, "monodromy");
  for (const IntMat* m : {&a1, &a2}) {
    Int d = det(*m);
    if (d != 1 && d != -1) throw InvalidInput("monodromy must lie in GL(2, Z)");
  }
  IntMat comm = IntMat(a1 * a2) - IntMat(a2 * a1);
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j)
      if (comm(i, j) != 0) throw InvalidInput("rank-2 monodromies must commute");
  WangExtension w;
  w.fiber_ = {FiberKind::AbelianZ2, 1};
  w.k_ = 2;
  w.mono_ = {a1, a2};
  return w;
}

std::array<RatMat, 3> lambda_matrix_generators(int n) {
  if (n < 1) throw InvalidInput("lambda_matrix_generators requires n >= 1");
  auto elem = [](int i, int j, const Rat& v) {
    RatMat m = RatMat::Constant(3, 3, Rat(0));
    for (int d = 0; d < 3; ++d) m(d, d) = 1;
    m(i, j) = v;
    return m;
  };
  RatMat g1 = elem(0, 1, Rat(1));
  RatMat g2 = elem(1, 2, Rat(1));
  RatMat g3 = elem(0, 2, rat(1, n));
  // [g1, g2] = g3^n and g3 central
  RatMat comm = RatMat(RatMat(g1 * g2) * RatMat(inverse(g1) * inverse(g2)));
  RatMat g3n = to_rat(identity_int(3));
  for (int i = 0; i < n; ++i) g3n = RatMat(g3n * g3);
  if (comm != g3n) throw ArithmeticError("Heisenberg relation failed");
  if (RatMat(g1 * g3) != RatMat(g3 * g1) || RatMat(g2 * g3) != RatMat(g3 * g2))
    throw ArithmeticError("g3 is not central");
  return {g1, g2, g3};
}

int abelianization_rank(const WangExtension& w) {
  switch (w.fiber().kind) {
    case FiberKind::AbelianZ3:
    case FiberKind::HeisenbergLambda: {
      // center of Lambda_n is torsion in the abelianization ([g1,g2] = g3^n)
      const IntMat& m = w.monodromy();
      IntMat shifted = IntMat(m - identity_int(m.rows()));
      return w.k() + static_cast<int>(kernel_basis(shifted).cols());
    }
    case FiberKind::AbelianZ2: {
      // simultaneous fixed space of the commuting pair
      IntMat stacked(4, 2);
      stacked.topRows(2) = IntMat(w.monodromies()[0] - identity_int(2));
      stacked.bottomRows(2) = IntMat(w.monodromies()[1] - identity_int(2));
      return w.k() + static_cast<int>(kernel_basis(stacked).cols());
    }
  }
  throw DomainError("unreachable fiber kind");
}

TypeSet wang_types(const WangExtension& w) {
  TypeSet t;
  t.type_ii = (w.k() == 1 && w.fiber().kind == FiberKind::AbelianZ3);
  t.type_iii = (w.k() == 1 && w.fiber().kind == FiberKind::HeisenbergLambda);
  if (w.k() >= 2) {
    t.type_i = Tri::Yes;
    return t;
  }
  const IntMat& m = w.monodromy();
  if (is_unipotent(m)) {
    // nilpotent total group: nilmanifolds fiber over tori in all ranks
    t.type_i = Tri::Yes;
    return t;
  }
  if (w.fiber().kind == FiberKind::HeisenbergLambda) {
    IntMat b = m;
    Int d = det(b);
    bool example1_family = (w.eps() == 1 && b == identity_int(2));
    bool example3_family = false;
    if (w.eps() == -1 && d == -1 && b(0, 0) + b(1, 1) == 0) {
      IntMat b2 = IntMat(b * b);
      example3_family = (b2 == identity_int(2));
    }
    if (example1_family || example3_family) {
      t.type_i = Tri::Yes;
      return t;
    }
  }
  // a k = 2 re-presentation forces first Betti number at least 2
  if (abelianization_rank(w) < 2) {
    t.type_i = Tri::No;
    return t;
  }
  t.type_i = Tri::Unknown;
  return t;
}

WangExtension power_reduction(const WangExtension& w, int m) {
  if (m < 1) throw InvalidInput("power_reduction requires m >= 1");
  if (w.k() != 1) throw InvalidInput("power_reduction applies to k = 1 only");
  if (m == 1) return w;
  IntMat p = int_pow(w.monodromy(), m);
  if (w.fiber().kind == FiberKind::AbelianZ3) return WangExtension::abelian(p);
  Int d = det(p);
  return WangExtension::heisenberg(w.fiber().n, p, static_cast<int>(d.get_si()));
}

}  // namespace solv
