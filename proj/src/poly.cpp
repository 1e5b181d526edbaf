#include "solv/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "solv/error.hpp"

namespace solv {

ZPoly ZPoly::of(std::initializer_list<long> coeffs) {
  std::vector<Int> v;
  v.reserve(coeffs.size());
  for (long x : coeffs) v.emplace_back(x);
  return ZPoly(std::move(v));
}

Int ZPoly::eval(const Int& v) const {
  Int r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + *it;
  return r;
}

Rat ZPoly::eval(const Rat& v) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + Rat(*it);
  return r;
}

ZPoly ZPoly::derivative() const {
  std::vector<Int> d;
  for (int i = 1; i < static_cast<int>(c_.size()); ++i) d.push_back(c_[i] * i);
  return ZPoly(std::move(d));
}

Int ZPoly::content() const {
  if (c_.empty()) return 0;
  Int g = 0;
  for (const Int& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (sgn(leading()) < 0) g = -g;
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (c_.empty()) return *this;
  Int g = content();
  std::vector<Int> v;
  v.reserve(c_.size());
  for (const Int& x : c_) v.push_back(x / g);
  return ZPoly(std::move(v));
}

ZPoly ZPoly::pow(unsigned e) const {
  ZPoly r = ZPoly::constant(1);
  for (unsigned i = 0; i < e; ++i) r = r * (*this);
  return r;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return ZPoly(std::move(v));
}

ZPoly operator-(const ZPoly& a) {
  std::vector<Int> v = a.c_;
  for (Int& x : v) x = -x;
  return ZPoly(std::move(v));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly();
  std::vector<Int> v(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return ZPoly(std::move(v));
}

ZPoly ZPoly::divide_exact(const ZPoly& d) const {
  auto [q, r] = divmod(QPoly(*this), QPoly(d));
  if (!r.is_zero()) throw ArithmeticError("inexact polynomial division");
  std::vector<Int> v;
  v.reserve(q.c.size());
  for (const Rat& x : q.c) {
    if (!is_integer(x)) throw ArithmeticError("non-integer quotient");
    v.push_back(x.get_num());
  }
  return ZPoly(std::move(v));
}

std::string ZPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& a = c_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    Int mag = abs(a);
    if (first) {
      if (sgn(a) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) {
      os << var;
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

QPoly::QPoly(const ZPoly& p) {
  c.reserve(p.coeffs().size());
  for (const Int& v : p.coeffs()) c.emplace_back(v);
}

Rat QPoly::eval(const Rat& v) const {
  Rat r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * v + *it;
  return r;
}

QPoly QPoly::derivative() const {
  std::vector<Rat> d;
  for (int i = 1; i < static_cast<int>(c.size()); ++i) d.push_back(c[i] * i);
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rat> v = c;
  Rat l = leading();
  for (Rat& x : v) x /= l;
  return QPoly(std::move(v));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rat> v(std::max(a.c.size(), b.c.size()), Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) v[i] += b.c[i];
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a) {
  std::vector<Rat> v = a.c;
  for (Rat& x : v) x = -x;
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rat> v(a.c.size() + b.c.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
  return QPoly(std::move(v));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  QPoly r = a;
  std::vector<Rat> q(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 1,
                     Rat(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Rat f = r.leading() / b.leading();
    q[static_cast<std::size_t>(k)] += f;
    for (int i = 0; i <= b.degree(); ++i)
      r.c[static_cast<std::size_t>(i + k)] -= f * b.c[static_cast<std::size_t>(i)];
    r.trim();
  }
  return {QPoly(std::move(q)), r};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

ZPoly clear_denominators(const QPoly& p) {
  Int lcm = 1;
  for (const Rat& x : p.c)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<Int> v;
  v.reserve(p.c.size());
  for (const Rat& x : p.c) {
    Rat y = x * Rat(lcm);
    v.push_back(y.get_num());
  }
  ZPoly out(std::move(v));
  return out.is_zero() ? out : out.primitive_part();
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  QPoly d = p.derivative();
  while (!d.is_zero()) {
    chain.push_back(d);
    QPoly r = -divmod(chain[chain.size() - 2], chain.back()).second;
    d = r;
  }
  return chain;
}

namespace {
int count_changes(const std::vector<int>& signs) {
  int n = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++n;
    prev = s;
  }
  return n;
}
}  // namespace

int sign_variations_at(const std::vector<QPoly>& chain, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const QPoly& p : chain) signs.push_back(sgn(p.eval(x)));
  return count_changes(signs);
}

int sign_variations_at_plus_inf(const std::vector<QPoly>& chain) {
  std::vector<int> signs;
  for (const QPoly& p : chain) signs.push_back(p.is_zero() ? 0 : sgn(p.leading()));
  return count_changes(signs);
}

int sign_variations_at_minus_inf(const std::vector<QPoly>& chain) {
  std::vector<int> signs;
  for (const QPoly& p : chain) {
    if (p.is_zero()) {
      signs.push_back(0);
    } else {
      int s = sgn(p.leading());
      if (p.degree() % 2 == 1) s = -s;
      signs.push_back(s);
    }
  }
  return count_changes(signs);
}

int sturm_count(const std::vector<QPoly>& chain, const Rat& a, const Rat& b) {
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

int count_real_roots(const ZPoly& p) {
  if (p.is_zero()) throw InvalidInput("zero polynomial");
  QPoly q(p);
  QPoly sf = divmod(q, gcd(q, q.derivative())).first;
  auto chain = sturm_chain(sf);
  return sign_variations_at_minus_inf(chain) - sign_variations_at_plus_inf(chain);
}

int count_positive_real_roots(const ZPoly& p) {
  if (p.is_zero()) throw InvalidInput("zero polynomial");
  QPoly q(p);
  QPoly sf = divmod(q, gcd(q, q.derivative())).first;
  auto chain = sturm_chain(sf);
  return sign_variations_at(chain, Rat(0)) - sign_variations_at_plus_inf(chain);
}

std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& p) {
  if (p.is_zero()) throw InvalidInput("zero polynomial");
  std::vector<std::pair<ZPoly, int>> out;
  QPoly a(p.primitive_part());
  QPoly d = a.derivative();
  QPoly g = gcd(a, d);
  if (g.degree() == 0) {
    out.emplace_back(p.primitive_part(), 1);
    return out;
  }
  // Yun's algorithm
  QPoly c = divmod(a, g).first;
  QPoly w = divmod(d, g).first;
  int i = 1;
  while (c.degree() > 0) {
    QPoly y = w - c.derivative();
    QPoly f = gcd(c, y);
    if (f.degree() > 0) out.emplace_back(clear_denominators(f), i);
    c = divmod(c, f).first;
    w = divmod(y, f).first;
    ++i;
  }
  return out;
}

namespace {

std::vector<Int> divisors_of(const Int& n_in) {
  Int n = abs(n_in);
  std::vector<Int> ds;
  if (n == 0) return ds;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d * d != n) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

// All rational roots of primitive p, as (num, den) with den > 0.
std::vector<Rat> rational_roots(const ZPoly& p) {
  std::vector<Rat> roots;
  if (p.coeff(0) == 0) roots.push_back(Rat(0));
  ZPoly q = p;
  while (q.coeff(0) == 0 && q.degree() > 0)
    q = q.divide_exact(ZPoly::x());
  if (q.degree() == 0) return roots;
  for (const Int& num : divisors_of(q.coeff(0))) {
    for (const Int& den : divisors_of(q.leading())) {
      for (int s : {1, -1}) {
        Rat r = rat(num * s, den);
        if (q.eval(r) == 0 &&
            std::find(roots.begin(), roots.end(), r) == roots.end())
          roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// den*x - num, primitive with positive leading coefficient
ZPoly linear_factor(const Rat& root) {
  return ZPoly({-root.get_num(), root.get_den()});
}

bool lex_less(const ZPoly& a, const ZPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

// Splits a primitive squarefree quartic with no rational roots into two
// quadratics if possible; returns empty when irreducible.
std::vector<ZPoly> split_quartic(const ZPoly& u) {
  const Int e = u.coeff(4), d = u.coeff(3), c = u.coeff(2), b = u.coeff(1),
            a0 = u.coeff(0);
  for (const Int& p2a : divisors_of(e)) {
    Int q2 = e / p2a;
    for (const Int& p0a : divisors_of(a0)) {
      for (int s0 : {1, -1}) {
        Int p0 = p0a * s0;
        if (p0 == 0) continue;
        Int q0 = a0 / p0;
        // solve p2*q1 + p1*q2 = d ; p1*q0 + p0*q1 = b
        Int detm = p2a * p0 - q2 * q0;
        if (detm != 0) {
          // p1 = (d*p0 - b*p2)/det ; q1 = (b*q2 - d*q0)/(-det) adjusted
          Int num_p1 = d * p0 - b * p2a;
          Int num_q1 = b * q2 - d * q0;
          if (num_p1 % detm != 0 || num_q1 % detm != 0) continue;
          Int p1 = num_p1 / detm;
          Int q1 = num_q1 / detm;
          if (p2a * q0 + p1 * q1 + p0 * q2 != c) continue;
          ZPoly f1({p0, p1, p2a}), f2({q0, q1, q2});
          if (f1 * f2 == u) return {f1.primitive_part(), f2.primitive_part()};
        } else {
          // degenerate: scan p1 over a crude coefficient bound
          Int bound = 2;
          for (int i = 0; i <= 4; ++i) bound += abs(u.coeff(i));
          for (Int p1 = -bound; p1 <= bound; ++p1) {
            Int rem = d - p1 * q2;
            if (rem % p2a != 0) continue;
            Int q1 = rem / p2a;
            if (p1 * q0 + p0 * q1 != b) continue;
            if (p2a * q0 + p1 * q1 + p0 * q2 != c) continue;
            ZPoly f1({p0, p1, p2a}), f2({q0, q1, q2});
            if (f1 * f2 == u) return {f1.primitive_part(), f2.primitive_part()};
          }
        }
      }
    }
  }
  return {};
}

// Factors a primitive squarefree polynomial with positive leading coefficient.
std::vector<ZPoly> factor_squarefree(ZPoly u) {
  std::vector<ZPoly> out;
  for (const Rat& r : rational_roots(u)) {
    ZPoly lf = linear_factor(r);
    out.push_back(lf);
    u = u.divide_exact(lf);
  }
  if (sgn(u.leading()) < 0) u = -u;  // sign folded into cofactors by caller
  switch (u.degree()) {
    case 0:
      break;
    case 1:
    case 2:
    case 3:
      out.push_back(u.primitive_part());
      break;
    case 4: {
      auto quads = split_quartic(u.primitive_part());
      if (quads.empty())
        out.push_back(u.primitive_part());
      else
        out.insert(out.end(), quads.begin(), quads.end());
      break;
    }
    default:
      throw DomainError("factorization not supported beyond degree 4");
  }
  return out;
}

}  // namespace

FactoredPoly factor_over_integers(const ZPoly& p) {
  if (p.is_zero()) throw InvalidInput("cannot factor the zero polynomial");
  FactoredPoly out;
  out.leading = p.content();
  ZPoly prim = p.primitive_part();
  std::map<std::vector<Int>, std::pair<ZPoly, int>> acc;
  for (const auto& [sf, mult] : squarefree_decomposition(prim)) {
    for (const ZPoly& f : factor_squarefree(sf)) {
      auto key = f.coeffs();
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, std::make_pair(f, mult));
      else
        it->second.second += mult;
    }
  }
  for (auto& [key, fm] : acc) out.factors.push_back(fm);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  // fix the unit: the product of primitive factors may differ from prim by -1
  ZPoly check = ZPoly::constant(1);
  for (const auto& [f, m] : out.factors) check = check * f.pow(static_cast<unsigned>(m));
  if (check == -prim) out.leading = -out.leading;
  return out;
}

ZPoly FactoredPoly::expand() const {
  ZPoly r = ZPoly::constant(leading);
  for (const auto& [f, m] : factors) r = r * f.pow(static_cast<unsigned>(m));
  return r;
}

std::vector<RootInterval> isolate_real_roots(const ZPoly& p) {
  if (p.is_zero()) throw InvalidInput("zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;
  std::vector<ZPoly> owner;  // squarefree factor each interval isolates

  for (const auto& [sf, mult] : squarefree_decomposition(p)) {
    QPoly q(sf);
    auto chain = sturm_chain(q);
    // Cauchy bound: all real roots lie strictly inside (-B, B)
    Rat maxc = 0;
    for (const Int& c : sf.coeffs()) {
      Rat a = abs(Rat(c) / Rat(sf.leading()));
      if (a > maxc) maxc = a;
    }
    Rat bound = maxc + 1;
    struct Seg {
      Rat lo, hi;
      int count;
    };
    std::vector<Seg> work{{-bound, bound,
                           sturm_count(chain, -bound, bound)}};
    while (!work.empty()) {
      Seg s = work.back();
      work.pop_back();
      if (s.count == 0) continue;
      if (s.count == 1 && q.eval(s.lo) != 0) {
        out.push_back({s.lo, s.hi, mult});
        owner.push_back(sf);
        continue;
      }
      Rat mid = (s.lo + s.hi) / 2;
      if (q.eval(mid) == 0) {
        out.push_back({mid, mid, mult});
        owner.push_back(sf);
        // shrink around the exact root so the halves exclude it
        Rat eps = (s.hi - s.lo) / 4;
        while (sturm_count(chain, mid - eps, mid + eps) > 1) eps /= 2;
        work.push_back({s.lo, mid - eps, sturm_count(chain, s.lo, mid - eps)});
        work.push_back({mid + eps, s.hi, sturm_count(chain, mid + eps, s.hi)});
      } else {
        work.push_back({s.lo, mid, sturm_count(chain, s.lo, mid)});
        work.push_back({mid, s.hi, sturm_count(chain, mid, s.hi)});
      }
    }
  }
  // separate overlapping intervals coming from different squarefree parts
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        if (out[i].hi <= out[j].lo || out[j].hi <= out[i].lo) continue;
        if (out[i].exact() && out[j].exact()) continue;  // distinct roots
        refine_interval(owner[i], out[i]);
        refine_interval(owner[j], out[j]);
        again = true;
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) {
              return a.lo + a.hi < b.lo + b.hi;
            });
  return out;
}

void refine_interval(const ZPoly& squarefree, RootInterval& iv) {
  if (iv.exact()) return;
  QPoly q(squarefree);
  Rat mid = iv.mid();
  Rat fm = q.eval(mid);
  if (fm == 0) {
    iv.lo = iv.hi = mid;
    return;
  }
  Rat flo = q.eval(iv.lo);
  if (flo == 0) {
    iv.lo = iv.hi = iv.lo;
    return;
  }
  if (sgn(flo) * sgn(fm) < 0)
    iv.hi = mid;
  else
    iv.lo = mid;
}

ZPoly char_poly(const IntMat& m) {
  if (m.rows() != m.cols()) throw DimensionError("char_poly: non-square matrix");
  const Eigen::Index n = m.rows();
  if (n > 6) throw DimensionError("char_poly: dimension > 6 unsupported");
  // Faddeev-LeVerrier over the rationals; coefficients land in Z.
  RatMat a = to_rat(m);
  RatMat mk = a;
  std::vector<Int> coeffs(static_cast<std::size_t>(n) + 1, Int(0));
  coeffs[static_cast<std::size_t>(n)] = 1;
  for (Eigen::Index k = 1; k <= n; ++k) {
    Rat tr = 0;
    for (Eigen::Index i = 0; i < n; ++i) tr += mk(i, i);
    Rat ck = -tr / Rat(static_cast<long>(k));
    if (!is_integer(ck)) throw ArithmeticError("char_poly: internal error");
    coeffs[static_cast<std::size_t>(n - k)] = ck.get_num();
    if (k < n) {
      for (Eigen::Index i = 0; i < n; ++i) mk(i, i) += ck;
      mk = (a * mk).eval();
    }
  }
  return ZPoly(std::move(coeffs));
}

IntMat companion(const ZPoly& p) {
  if (p.is_zero() || p.leading() != 1)
    throw InvalidInput("companion: polynomial must be monic");
  const int n = p.degree();
  if (n < 1) throw InvalidInput("companion: degree must be >= 1");
  IntMat m = IntMat::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -p.coeff(i);
  return m;
}

}  // namespace solv
