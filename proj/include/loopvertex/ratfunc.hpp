#pragma once

#include <functional>
#include <map>

#include "loopvertex/series.hpp"

namespace loopvertex {

// N / prod_M (1 - M)^{k_M}: N an exact Laurent polynomial, each M a monomial
// of positive degree.  Factors of negative degree are flipped on entry.
class RatFunc {
 public:
  using Denominator = std::map<Exponents, int>;

  RatFunc() = default;
  explicit RatFunc(FracSeries numerator);
  static RatFunc constant(VarSetPtr vars, const Cyclotomic& c);
  static RatFunc monomial(VarSetPtr vars, const Exponents& e, const Cyclotomic& c = 1);
  // 1 / (1 - M)^power
  static RatFunc geometric(VarSetPtr vars, const Exponents& m, int power = 1);

  const VarSetPtr& vars() const { return num_.vars(); }
  const FracSeries& numerator() const { return num_; }
  const Denominator& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // exact: the denominator expansion starts with 1
  Degree valuation() const { return num_.valuation(); }

  RatFunc& operator*=(const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b);
  RatFunc& operator-=(const RatFunc& b);
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  RatFunc operator-() const;
  RatFunc scaled(const Cyclotomic& c) const;
  RatFunc shifted(const Exponents& m) const;
  RatFunc pow(int k) const;

  // apply a linear map to every exponent vector (numerator and factors)
  RatFunc mapped(const std::function<Exponents(const Exponents&)>& f) const;
  // every variable to its inverse
  RatFunc inverted() const;

  // terms of degree <= bound
  FracSeries expand(Degree bound) const;
  bool equals(const RatFunc& b) const { return !mismatch(b).has_value(); }
  // first disagreement of the cross-multiplied numerators
  std::optional<Mismatch> mismatch(const RatFunc& b) const;

 private:
  FracSeries num_;
  Denominator den_;
  void add_factor(const Exponents& m, int k);
};

// 1 - M as an exact series
FracSeries one_minus(const VarSetPtr& vars, const Exponents& m);

}  // namespace loopvertex
