#include "solv/numberfield.hpp"

#include <sstream>

#include "solv/error.hpp"

namespace solv {

NumberField::NumberField(ZPoly minpoly) : minpoly_(std::move(minpoly)) {
  if (minpoly_.degree() < 1 || minpoly_.degree() > 3)
    throw InvalidInput("number field degree must be 1..3");
  // degree <= 3: irreducible over Z iff no rational root (degree 2, 3)
  if (minpoly_.degree() >= 2) {
    auto fac = factor_over_integers(minpoly_);
    if (fac.factors.size() != 1 || fac.factors[0].second != 1)
      throw InvalidInput("minimal polynomial is reducible: " + minpoly_.str());
  }
  QPoly mp(minpoly_);
  const int d = minpoly_.degree();
  for (int k = 0; k <= 2 * d - 2; ++k) {
    std::vector<Rat> c(static_cast<std::size_t>(k) + 1, Rat(0));
    c.back() = 1;
    xpow_.push_back(divmod(QPoly(std::move(c)), mp).second);
  }
  real_roots_ = isolate_real_roots(minpoly_);
}

NFElem::NFElem(FieldPtr fld, std::vector<Rat> coords)
    : fld_(std::move(fld)), coords_(std::move(coords)) {
  if (!fld_) throw InvalidInput("NFElem: null field");
  coords_.resize(static_cast<std::size_t>(fld_->degree()), Rat(0));
}

NFElem NFElem::generator(const FieldPtr& fld) {
  std::vector<Rat> c(static_cast<std::size_t>(fld->degree()), Rat(0));
  if (fld->degree() < 2)
    throw InvalidInput("generator of a degree-1 field is rational");
  c[1] = 1;
  return NFElem(fld, std::move(c));
}

bool NFElem::is_zero() const {
  for (const Rat& x : coords_)
    if (x != 0) return false;
  return true;
}

bool NFElem::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rat NFElem::rational_value() const {
  if (!is_rational()) throw DomainError("element is not rational");
  return coords_[0];
}

QPoly NFElem::as_poly() const { return QPoly(std::vector<Rat>(coords_)); }

std::pair<FieldPtr, int> NFElem::merged_field(const NFElem& a, const NFElem& b) {
  if (a.fld_ && b.fld_) {
    if (!(a.fld_->minpoly() == b.fld_->minpoly()))
      throw Error("field_mismatch", "operands live in different number fields");
    return {a.fld_, a.fld_->degree()};
  }
  if (a.fld_) return {a.fld_, a.fld_->degree()};
  if (b.fld_) return {b.fld_, b.fld_->degree()};
  return {nullptr, 1};
}

NFElem operator+(const NFElem& a, const NFElem& b) {
  auto [fld, d] = NFElem::merged_field(a, b);
  std::vector<Rat> c(static_cast<std::size_t>(d), Rat(0));
  for (std::size_t i = 0; i < a.coords_.size(); ++i) c[i] += a.coords_[i];
  for (std::size_t i = 0; i < b.coords_.size(); ++i) c[i] += b.coords_[i];
  NFElem r;
  r.fld_ = fld;
  r.coords_ = std::move(c);
  return r;
}

NFElem operator-(const NFElem& a) {
  NFElem r = a;
  for (Rat& x : r.coords_) x = -x;
  return r;
}

NFElem operator-(const NFElem& a, const NFElem& b) { return a + (-b); }

NFElem operator*(const NFElem& a, const NFElem& b) {
  auto [fld, d] = NFElem::merged_field(a, b);
  std::vector<Rat> prod(a.coords_.size() + b.coords_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coords_.size(); ++j)
      prod[i + j] += a.coords_[i] * b.coords_[j];
  }
  std::vector<Rat> c(static_cast<std::size_t>(d), Rat(0));
  if (!fld) {
    c[0] = prod[0];
  } else {
    for (std::size_t k = 0; k < prod.size(); ++k) {
      if (prod[k] == 0) continue;
      const QPoly& xp = fld->xpow(static_cast<int>(k));
      for (std::size_t i = 0; i < xp.c.size(); ++i) c[i] += prod[k] * xp.c[i];
    }
  }
  NFElem r;
  r.fld_ = fld;
  r.coords_ = std::move(c);
  return r;
}

NFElem NFElem::inv() const {
  if (is_zero()) throw ArithmeticError("division by zero in number field");
  if (!fld_ || is_rational()) {
    NFElem r = *this;
    r.coords_.assign(r.coords_.size(), Rat(0));
    r.coords_[0] = Rat(1) / coords_[0];
    return r;
  }
  // extended Euclid: u*g + v*minpoly = 1 with g the element's polynomial
  QPoly g = as_poly();
  QPoly m(fld_->minpoly());
  QPoly r0 = m, r1 = g;
  QPoly s0, s1(std::vector<Rat>{Rat(1)});
  while (!r1.is_zero()) {
    auto [q, rem] = divmod(r0, r1);
    QPoly s2 = s0 - q * s1;
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  // r0 = gcd = nonzero constant (minpoly irreducible)
  if (r0.degree() != 0) throw ArithmeticError("inverse failed: reducible modulus");
  QPoly u = s0;
  Rat scale = Rat(1) / r0.c[0];
  std::vector<Rat> c(static_cast<std::size_t>(fld_->degree()), Rat(0));
  for (std::size_t i = 0; i < u.c.size() && i < c.size(); ++i)
    c[i] = u.c[i] * scale;
  return NFElem(fld_, std::move(c));
}

NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inv(); }

bool operator==(const NFElem& a, const NFElem& b) {
  return (a - b).is_zero();
}

std::string NFElem::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ", ";
    os << to_string(coords_[i]);
  }
  os << "]";
  return os.str();
}

void RealEmbedding::refine() { refine_interval(fld_->minpoly(), iv_); }

namespace {
struct Interval {
  Rat lo, hi;
};
Interval iv_add(const Interval& a, const Interval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}
Interval iv_mul(const Interval& a, const Interval& b) {
  Rat v[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  Rat lo = v[0], hi = v[0];
  for (int i = 1; i < 4; ++i) {
    if (v[i] < lo) lo = v[i];
    if (v[i] > hi) hi = v[i];
  }
  return {lo, hi};
}
Interval iv_eval(const QPoly& p, const Interval& x) {
  Interval acc{Rat(0), Rat(0)};
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
    acc = iv_mul(acc, x);
    acc = iv_add(acc, Interval{*it, *it});
  }
  return acc;
}
}  // namespace

int RealEmbedding::sign(const NFElem& e) {
  if (e.is_zero()) return 0;
  if (e.is_rational()) return sgn(e.coords()[0]);
  if (!e.field() || !(e.field()->minpoly() == fld_->minpoly()))
    throw Error("field_mismatch", "embedding does not match element field");
  QPoly g = e.as_poly();
  for (int iter = 0; iter < 4096; ++iter) {
    if (iv_.exact()) {
      // rational root contradicts irreducibility for degree >= 2
      return sgn(g.eval(iv_.lo));
    }
    Interval img = iv_eval(g, {iv_.lo, iv_.hi});
    if (sgn(img.lo) > 0) return 1;
    if (sgn(img.hi) < 0) return -1;
    refine();
  }
  throw ArithmeticError("sign refinement did not converge");
}

}  // namespace solv
