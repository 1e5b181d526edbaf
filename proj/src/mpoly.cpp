#include "solv/mpoly.hpp"

#include <sstream>

#include "solv/error.hpp"

namespace solv {

namespace {
void trim(std::vector<int>& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}
}  // namespace

void MPoly::set_constant(const Rat& v) {
  terms_.clear();
  if (v != 0) terms_[{}] = v;
}

MPoly MPoly::var(int index, const Rat& scale) {
  MPoly p;
  if (scale != 0) {
    std::vector<int> e(static_cast<std::size_t>(index) + 1, 0);
    e.back() = 1;
    p.terms_[std::move(e)] = scale;
  }
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat MPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw DomainError("MPoly is not constant");
  return terms_.begin()->second;
}

void MPoly::add_term(std::vector<int> exps, const Rat& coeff) {
  if (coeff == 0) return;
  trim(exps);
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exps), coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= point.size()) throw DomainError("MPoly::eval: missing variable");
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    }
    total += t;
  }
  return total;
}

MPoly MPoly::reduce_square(int index, const MPoly& sq) const {
  MPoly out = *this;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [e, c] : out.terms_) {
      if (static_cast<int>(e.size()) > index && e[static_cast<std::size_t>(index)] >= 2) {
        std::vector<int> rest = e;
        rest[static_cast<std::size_t>(index)] -= 2;
        MPoly mono;
        mono.add_term(rest, c);
        MPoly without = out;
        without.terms_.erase(e);
        out = without + mono * sq;
        changed = true;
        break;
      }
    }
  }
  return out;
}

MPoly MPoly::substitute(int index, const MPoly& value) const {
  MPoly out;
  for (const auto& [e, c] : terms_) {
    int exp = (static_cast<int>(e.size()) > index) ? e[static_cast<std::size_t>(index)] : 0;
    std::vector<int> rest = e;
    if (exp > 0) rest[static_cast<std::size_t>(index)] = 0;
    MPoly mono;
    mono.add_term(rest, c);
    for (int k = 0; k < exp; ++k) mono = mono * value;
    out = out + mono;
  }
  return out;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& a) {
  MPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  }
  return r;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*";
      if (i < names.size())
        os << names[i];
      else
        os << "x" << i;
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace solv
