#include "loopvertex/ratfunc.hpp"

#include <stdexcept>

namespace loopvertex {

FracSeries one_minus(const VarSetPtr& vars, const Exponents& m) {
  FracSeries s = FracSeries::constant(vars, 1);
  s.add_term(m, -1);
  return s;
}

RatFunc::RatFunc(FracSeries numerator) : num_(std::move(numerator)) {
  if (!num_.is_exact()) throw std::invalid_argument("rational function numerator must be exact");
}

RatFunc RatFunc::constant(VarSetPtr vars, const Cyclotomic& c) { return RatFunc(FracSeries::constant(vars, c)); }

RatFunc RatFunc::monomial(VarSetPtr vars, const Exponents& e, const Cyclotomic& c) {
  return RatFunc(FracSeries::monomial(vars, e, c));
}

RatFunc RatFunc::geometric(VarSetPtr vars, const Exponents& m, int power) {
  RatFunc r = constant(vars, 1);
  r.add_factor(m, power);
  return r;
}

void RatFunc::add_factor(const Exponents& m, int k) {
  if (k == 0) return;
  if (k < 0) {
    num_ = num_ * series_pow(one_minus(vars(), m), -k);
    return;
  }
  const Degree d = vars()->degree(m);
  if (m.is_zero()) throw std::domain_error("division by zero: factor 1 - 1");
  if (d == 0) throw std::domain_error("denominator factor of degree zero: 1 - " + num_.monomial_to_string(m));
  if (d < 0) {
    // 1/(1-M) = -M^{-1} / (1 - M^{-1})
    num_ = num_.shifted(m.times(-k)).scaled(Cyclotomic(k % 2 ? -1 : 1));
    den_[-m] += k;
    return;
  }
  den_[m] += k;
}

RatFunc& RatFunc::operator*=(const RatFunc& b) {
  num_ = num_ * b.num_;
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  for (const auto& [m, k] : b.den_) den_[m] += k;
  return *this;
}

RatFunc& RatFunc::operator+=(const RatFunc& b) {
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  FracSeries x = num_, y = b.num_;
  Denominator den = den_;
  for (const auto& [m, k] : b.den_) {
    auto it = den_.find(m);
    int a = it == den_.end() ? 0 : it->second;
    if (k > a) {
      x = x * series_pow(one_minus(vars(), m), k - a);
      den[m] = k;
    }
  }
  for (const auto& [m, a] : den_) {
    auto it = b.den_.find(m);
    int k = it == b.den_.end() ? 0 : it->second;
    if (a > k) y = y * series_pow(one_minus(vars(), m), a - k);
  }
  num_ = x + y;
  den_ = num_.is_zero() ? Denominator{} : den;
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& b) { return *this += -b; }

RatFunc RatFunc::operator-() const { return scaled(Cyclotomic(-1)); }

RatFunc RatFunc::scaled(const Cyclotomic& c) const {
  RatFunc r = *this;
  r.num_ = num_.scaled(c);
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

RatFunc RatFunc::shifted(const Exponents& m) const {
  RatFunc r = *this;
  r.num_ = num_.shifted(m);
  return r;
}

RatFunc RatFunc::pow(int k) const {
  if (k < 0) throw std::domain_error("negative power of a rational function");
  RatFunc r = constant(vars(), 1);
  for (int i = 0; i < k; ++i) r *= *this;
  return r;
}

RatFunc RatFunc::mapped(const std::function<Exponents(const Exponents&)>& f) const {
  FracSeries n(vars());
  for (const auto& [e, c] : num_.terms()) n.add_term(f(e), c);
  RatFunc r(n);
  for (const auto& [m, k] : den_) r.add_factor(f(m), k);
  return r;
}

RatFunc RatFunc::inverted() const {
  return mapped([](const Exponents& e) { return -e; });
}

FracSeries RatFunc::expand(Degree bound) const {
  if (num_.is_zero()) return FracSeries(vars(), kExact);
  const Degree v = num_.valuation();
  const Degree bd = bound - v;
  if (bd < 0) return FracSeries(vars(), bound);
  FracSeries d = FracSeries::constant(vars(), 1, bd);
  for (const auto& [m, k] : den_) {
    const Degree dm = vars()->degree(m);
    FracSeries g(vars(), bd);
    Exponents p;
    for (Degree deg = 0; deg <= bd; deg += dm) {
      g.add_term(p, 1);
      p += m;
    }
    for (int i = 0; i < k; ++i) d = mul(d, g, bd);
  }
  return mul(num_, d, bound);
}

std::optional<Mismatch> RatFunc::mismatch(const RatFunc& b) const {
  FracSeries x = num_, y = b.num_;
  for (const auto& [m, k] : b.den_) {
    auto it = den_.find(m);
    int a = it == den_.end() ? 0 : it->second;
    if (k > a) x = x * series_pow(one_minus(vars(), m), k - a);
  }
  for (const auto& [m, a] : den_) {
    auto it = b.den_.find(m);
    int k = it == b.den_.end() ? 0 : it->second;
    if (a > k) y = y * series_pow(one_minus(vars(), m), a - k);
  }
  return first_mismatch(x, y, kExact - 1);
}

}  // namespace loopvertex
