#include "solv/geom.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "solv/error.hpp"

namespace solv {

namespace {

/// Sorts indices, returning the permutation sign; nullopt on a repeat.
std::optional<std::pair<std::vector<int>, int>> normalize(std::vector<int> idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return std::nullopt;
  return std::make_pair(std::move(idx), sign);
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

/// d of a dual covector: dxi_i = -sum c_ab^i xi_a ^ xi_b.
ExteriorForm dxi(const LieAlgebra& g, int i) {
  ExteriorForm f(2);
  for (const auto& [ab, coeffs] : g.c) {
    const Rat& v = coeffs[static_cast<std::size_t>(i)];
    if (v != 0) f.add_term({ab.first, ab.second}, -v);
  }
  return f;
}

RatMat column_space_g(const RatMat& m) {
  std::vector<Eigen::Index> piv;
  RatMat e = m;
  echelonize(e, &piv);
  RatMat out(m.rows(), static_cast<Eigen::Index>(piv.size()));
  for (std::size_t k = 0; k < piv.size(); ++k)
    out.col(static_cast<Eigen::Index>(k)) = m.col(piv[k]);
  return out;
}

bool mat_is_zero(const RatMat& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

CEComplex build_ce(const LieAlgebra& g) {
  CEComplex ce;
  ce.n = g.dim;
  for (int k = 0; k <= g.dim; ++k) ce.tuples.push_back(combinations(g.dim, k));
  for (int k = 0; k < g.dim; ++k) {
    const auto& dom = ce.tuples[static_cast<std::size_t>(k)];
    RatMat m = RatMat::Constant(
        static_cast<Eigen::Index>(ce.tuples[static_cast<std::size_t>(k) + 1].size()),
        static_cast<Eigen::Index>(dom.size()), Rat(0));
    for (std::size_t c = 0; c < dom.size(); ++c) {
      ExteriorForm mono = ExteriorForm::monomial(dom[c], Rat(1));
      RatVec v = ce.to_vec(d(g, mono));
      m.col(static_cast<Eigen::Index>(c)) = v;
    }
    ce.d.push_back(m);
  }
  return ce;
}

}  // namespace

AlmostComplexStructure::AlmostComplexStructure(RatMat m) : j(std::move(m)) {
  if (j.rows() != j.cols()) throw InvalidInput("J must be square");
  if (j.rows() % 2 != 0) throw InvalidInput("J requires even dimension");
  RatMat sq = RatMat(j * j);
  for (Eigen::Index i = 0; i < j.rows(); ++i) sq(i, i) += 1;
  if (!mat_is_zero(sq)) throw InvalidInput("J^2 != -I");
}

ExteriorForm ExteriorForm::covector(int i) { return monomial({i}, Rat(1)); }

ExteriorForm ExteriorForm::monomial(std::vector<int> indices, const Rat& coeff) {
  ExteriorForm f(static_cast<int>(indices.size()));
  f.add_term(std::move(indices), coeff);
  return f;
}

Rat ExteriorForm::coeff(const std::vector<int>& sorted_indices) const {
  auto it = terms_.find(sorted_indices);
  return it == terms_.end() ? Rat(0) : it->second;
}

void ExteriorForm::add_term(std::vector<int> indices, const Rat& coeff) {
  if (coeff == 0) return;
  if (static_cast<int>(indices.size()) != degree_)
    throw InvalidInput("ExteriorForm: index tuple has wrong length");
  auto norm = normalize(std::move(indices));
  if (!norm) return;
  Rat v = (norm->second > 0) ? coeff : Rat(-coeff);
  auto it = terms_.find(norm->first);
  if (it == terms_.end()) {
    terms_.emplace(std::move(norm->first), v);
  } else {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

ExteriorForm operator+(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree_ != b.degree_) throw InvalidInput("form degree mismatch");
  ExteriorForm r = a;
  for (const auto& [k, v] : b.terms_) r.add_term(k, v);
  return r;
}

ExteriorForm operator-(const ExteriorForm& a, const ExteriorForm& b) {
  return a + (Rat(-1) * b);
}

ExteriorForm operator*(const Rat& s, const ExteriorForm& a) {
  ExteriorForm r(a.degree_);
  if (s == 0) return r;
  for (const auto& [k, v] : a.terms_) r.terms_[k] = s * v;
  return r;
}

ExteriorForm ExteriorForm::wedge(const ExteriorForm& other) const {
  ExteriorForm r(degree_ + other.degree_);
  for (const auto& [ka, va] : terms_)
    for (const auto& [kb, vb] : other.terms_) {
      std::vector<int> merged = ka;
      merged.insert(merged.end(), kb.begin(), kb.end());
      r.add_term(std::move(merged), va * vb);
    }
  return r;
}

ExteriorForm ExteriorForm::pow(int e) const {
  if (e < 0) throw InvalidInput("negative form power");
  ExteriorForm r = ExteriorForm::monomial({}, Rat(1));
  for (int i = 0; i < e; ++i) r = r.wedge(*this);
  return r;
}

std::string ExteriorForm::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(v);
    for (int i : k) {
      os << "*";
      if (i < static_cast<int>(names.size()))
        os << names[static_cast<std::size_t>(i)];
      else
        os << "e" << (i + 1);
    }
  }
  return os.str();
}

RatVec CEComplex::to_vec(const ExteriorForm& f) const {
  int k = f.degree();
  const auto& basis = tuples[static_cast<std::size_t>(k)];
  RatVec v = RatVec::Constant(static_cast<Eigen::Index>(basis.size()), Rat(0));
  for (const auto& [key, val] : f.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), key);
    if (it == basis.end() || *it != key)
      throw InvalidInput("form index out of range for this algebra");
    v(static_cast<Eigen::Index>(it - basis.begin())) = val;
  }
  return v;
}

ExteriorForm CEComplex::to_form(int degree, const RatVec& v) const {
  const auto& basis = tuples[static_cast<std::size_t>(degree)];
  ExteriorForm f(degree);
  for (Eigen::Index i = 0; i < v.rows(); ++i)
    if (v(i) != 0) f.add_term(basis[static_cast<std::size_t>(i)], v(i));
  return f;
}

ExteriorForm d(const LieAlgebra& g, const ExteriorForm& f) {
  ExteriorForm out(f.degree() + 1);
  for (const auto& [key, val] : f.terms()) {
    for (std::size_t m = 0; m < key.size(); ++m) {
      std::vector<int> rest;
      for (std::size_t t = 0; t < key.size(); ++t)
        if (t != m) rest.push_back(key[t]);
      Rat sign = (m % 2 == 0) ? val : Rat(-val);
      ExteriorForm partial = ExteriorForm::monomial(std::move(rest), sign);
      ExteriorForm term = dxi(g, key[m]).wedge(partial);
      out = out + term;
    }
  }
  return out;
}

namespace {

/// One-time anchor: on the 6-dim catalog algebra, d alpha_1 = gamma ^ alpha_1.
void check_sign_anchor() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    LieAlgebra g = catalog({CatalogTag::Example5}).algebra;
    ExteriorForm da1 = d(g, ExteriorForm::covector(0));
    ExteriorForm expected =
        ExteriorForm::covector(4).wedge(ExteriorForm::covector(0));
    if (!(da1 == expected))
      throw ArithmeticError("differential sign convention anchor failed");
  });
}

}  // namespace

CEComplex ce_differential(const LieAlgebra& g) {
  if (auto w = g.jacobi_witness())
    throw InvalidInput("algebra fails the Jacobi identity");
  check_sign_anchor();
  CEComplex ce = build_ce(g);
  for (std::size_t k = 0; k + 1 < ce.d.size(); ++k)
    if (!mat_is_zero(RatMat(ce.d[k + 1] * ce.d[k])))
      throw ArithmeticError("d.d != 0");
  return ce;
}

std::vector<int> betti_numbers(const LieAlgebra& g) {
  CEComplex ce = ce_differential(g);
  std::vector<int> b;
  for (int k = 0; k <= g.dim; ++k) {
    Eigen::Index dim_k =
        static_cast<Eigen::Index>(ce.tuples[static_cast<std::size_t>(k)].size());
    Eigen::Index rk_k = (k < g.dim) ? rank(RatMat(ce.d[static_cast<std::size_t>(k)])) : 0;
    Eigen::Index rk_prev =
        (k > 0) ? rank(RatMat(ce.d[static_cast<std::size_t>(k) - 1])) : 0;
    b.push_back(static_cast<int>(dim_k - rk_k - rk_prev));
  }
  return b;
}

CohomologyRing::CohomologyRing(const LieAlgebra& g) : ce_(ce_differential(g)) {
  const int n = g.dim;
  for (int k = 0; k <= n; ++k) {
    Eigen::Index dim_k =
        static_cast<Eigen::Index>(ce_.tuples[static_cast<std::size_t>(k)].size());
    RatMat ker;
    if (k < n)
      ker = kernel_basis(RatMat(ce_.d[static_cast<std::size_t>(k)]));
    else {
      ker = RatMat::Constant(dim_k, dim_k, Rat(0));
      for (Eigen::Index i = 0; i < dim_k; ++i) ker(i, i) = 1;
    }
    RatMat cob = (k > 0) ? column_space_g(RatMat(ce_.d[static_cast<std::size_t>(k) - 1]))
                         : RatMat(dim_k, 0);
    // extend the coboundaries to a basis of the cocycles
    RatMat acc = cob;
    std::vector<Eigen::Index> chosen;
    for (Eigen::Index c = 0; c < ker.cols(); ++c) {
      RatMat trial(dim_k, acc.cols() + 1);
      trial.leftCols(acc.cols()) = acc;
      trial.col(acc.cols()) = ker.col(c);
      if (rank(trial) > rank(acc)) {
        acc = trial;
        chosen.push_back(c);
      }
    }
    RatMat reps(dim_k, static_cast<Eigen::Index>(chosen.size()));
    for (std::size_t i = 0; i < chosen.size(); ++i)
      reps.col(static_cast<Eigen::Index>(i)) = ker.col(chosen[i]);
    reps_.push_back(reps);
    cobound_.push_back(cob);
    betti_.push_back(static_cast<int>(reps.cols()));
  }
}

ExteriorForm CohomologyRing::representative(int degree, int index) const {
  const RatMat& r = reps_[static_cast<std::size_t>(degree)];
  if (index < 0 || index >= r.cols()) throw InvalidInput("class index out of range");
  return ce_.to_form(degree, RatVec(r.col(index)));
}

CohomClass CohomologyRing::reduce(const ExteriorForm& cocycle) const {
  const int k = cocycle.degree();
  if (k < 0 || k > ce_.n) throw InvalidInput("degree out of range");
  RatVec v = ce_.to_vec(cocycle);
  if (k < ce_.n) {
    RatVec dv = ce_.d[static_cast<std::size_t>(k)] * v;
    for (Eigen::Index i = 0; i < dv.rows(); ++i)
      if (dv(i) != 0) throw InvalidInput("form is not closed");
  }
  const RatMat& r = reps_[static_cast<std::size_t>(k)];
  const RatMat& c = cobound_[static_cast<std::size_t>(k)];
  RatMat sys(v.rows(), r.cols() + c.cols());
  sys.leftCols(r.cols()) = r;
  sys.rightCols(c.cols()) = c;
  RatVec x = solve(sys, v);
  CohomClass cls;
  cls.degree = k;
  cls.coords = x.head(r.cols());
  return cls;
}

CohomClass CohomologyRing::cup(const CohomClass& x, const CohomClass& y) const {
  int deg = x.degree + y.degree;
  if (deg > ce_.n) return CohomClass{deg, RatVec(0)};
  ExteriorForm fx(x.degree), fy(y.degree);
  for (Eigen::Index i = 0; i < x.coords.rows(); ++i)
    if (x.coords(i) != 0)
      fx = fx + (x.coords(i) * representative(x.degree, static_cast<int>(i)));
  for (Eigen::Index i = 0; i < y.coords.rows(); ++i)
    if (y.coords(i) != 0)
      fy = fy + (y.coords(i) * representative(y.degree, static_cast<int>(i)));
  ExteriorForm prod = fx.wedge(fy);
  if (prod.is_zero()) {
    return CohomClass{deg,
                      RatVec::Constant(betti_[static_cast<std::size_t>(deg)], Rat(0))};
  }
  return reduce(prod);
}

bool is_symplectic(const LieAlgebra& g, const ExteriorForm& omega) {
  if (g.dim % 2 != 0) throw InvalidInput("symplectic check requires even dimension");
  if (omega.degree() != 2) throw InvalidInput("omega must be a 2-form");
  if (!d(g, omega).is_zero()) return false;
  return !omega.pow(g.dim / 2).is_zero();
}

namespace {

RatMat gram(const LieAlgebra& g, const ExteriorForm& omega) {
  RatMat m = RatMat::Constant(g.dim, g.dim, Rat(0));
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j) {
      Rat v = omega.coeff({i, j});
      m(i, j) = v;
      m(j, i) = -v;
    }
  return m;
}

}  // namespace

PseudoKahlerReport is_pseudo_kahler(const LieAlgebra& g, const ExteriorForm& omega,
                                    const RatMat& j) {
  PseudoKahlerReport rep;
  if (j.rows() != g.dim || j.cols() != g.dim)
    throw InvalidInput("J has wrong dimensions");
  RatMat sq = RatMat(j * j);
  for (Eigen::Index i = 0; i < j.rows(); ++i) sq(i, i) += 1;
  rep.j_square = mat_is_zero(sq);
  rep.closed = d(g, omega).is_zero();
  rep.integrable = rep.j_square && is_integrable<Rat>(g, j).first;
  RatMat m = gram(g, omega);
  rep.compatible = mat_is_zero(RatMat(RatMat(j.transpose() * m) * j) - m);
  rep.nondegenerate = (det(RatMat(m * j)) != 0);
  rep.ok = rep.j_square && rep.closed && rep.integrable && rep.compatible &&
           rep.nondegenerate;
  if (!rep.ok) {
    rep.failed_condition = !rep.j_square       ? "J^2 = -I"
                           : !rep.closed       ? "d omega = 0"
                           : !rep.integrable   ? "Nijenhuis tensor vanishes"
                           : !rep.compatible   ? "omega(J., J.) = omega"
                                               : "omega(., J.) nondegenerate";
  }
  return rep;
}

std::vector<bool> hard_lefschetz(const LieAlgebra& g, const ExteriorForm& omega) {
  if (!is_symplectic(g, omega)) throw DomainError("hard_lefschetz requires a symplectic form");
  CohomologyRing h(g);
  const int n2 = g.dim / 2;
  std::vector<bool> out;
  for (int k = 1; k <= n2; ++k) {
    ExteriorForm wk = omega.pow(k);
    const int lo = n2 - k, hi = n2 + k;
    int bl = h.betti()[static_cast<std::size_t>(lo)];
    int bh = h.betti()[static_cast<std::size_t>(hi)];
    if (bl != bh) {
      out.push_back(false);
      continue;
    }
    RatMat m = RatMat::Constant(bh, bl, Rat(0));
    bool ok = true;
    for (int c = 0; c < bl; ++c) {
      ExteriorForm prod = h.representative(lo, c).wedge(wk);
      try {
        CohomClass cls = h.reduce(prod);
        m.col(c) = cls.coords;
      } catch (const InvalidInput&) {
        ok = false;  // product of closed forms is closed; defensive
        break;
      }
    }
    out.push_back(ok && rank(m) == bl);
  }
  return out;
}

bool betti_parity_check(const LieAlgebra& g) {
  std::vector<int> b = betti_numbers(g);
  for (std::size_t k = 1; k < b.size(); k += 2)
    if (b[k] % 2 != 0) return false;
  return true;
}

ExteriorForm example5_symplectic_form() {
  ExteriorForm w(2);
  w.add_term({0, 1}, Rat(1));
  w.add_term({2, 3}, Rat(1));
  w.add_term({4, 5}, Rat(1));
  return w;
}

}  // namespace solv
