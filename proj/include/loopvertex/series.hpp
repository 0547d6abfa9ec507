#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "loopvertex/cyclotomic.hpp"

namespace loopvertex {

inline constexpr int kMaxVars = 8;

// Degrees are integers at the series' exponent scale.
using Degree = std::int64_t;
inline constexpr Degree kExact = std::numeric_limits<Degree>::max() / 4;

inline Degree deg_add(Degree a, Degree b) {
  if (a >= kExact || b >= kExact) return kExact;
  Degree s = a + b;
  return s >= kExact ? kExact : s;
}

struct Exponents {
  std::array<std::int32_t, kMaxVars> e{};

  std::int32_t& operator[](int i) { return e[i]; }
  std::int32_t operator[](int i) const { return e[i]; }
  bool is_zero() const;
  Exponents& operator+=(const Exponents& o);
  Exponents& operator-=(const Exponents& o);
  friend Exponents operator+(Exponents a, const Exponents& b) { return a += b; }
  friend Exponents operator-(Exponents a, const Exponents& b) { return a -= b; }
  Exponents operator-() const;
  Exponents times(std::int64_t k) const;
  friend auto operator<=>(const Exponents&, const Exponents&) = default;
  friend bool operator==(const Exponents&, const Exponents&) = default;
};

struct ExponentsHash {
  std::size_t operator()(const Exponents& x) const noexcept;
};

// Ordered variable names with integer grading weights; exponents are stored
// as numerators over `scale`.
class VarSet {
 public:
  static std::shared_ptr<const VarSet> make(std::vector<std::string> names, std::vector<int> weights, int scale);

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  int scale() const { return scale_; }
  int size() const { return static_cast<int>(names_.size()); }
  int index(const std::string& name) const;
  std::optional<int> find(const std::string& name) const;
  Degree degree(const Exponents& e) const;
  bool same_as(const VarSet& o) const;

 private:
  VarSet() = default;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  int scale_ = 1;
};
using VarSetPtr = std::shared_ptr<const VarSet>;

// q_0..q_{n-1}, weight 1, scale 2n
VarSetPtr q_vars(int n);
// x_1..x_{n-1}, u, weight 1, scale 2n
VarSetPtr xu_vars(int n);

class FracSeries {
 public:
  using Terms = std::map<Exponents, Cyclotomic>;

  FracSeries() = default;
  explicit FracSeries(VarSetPtr vars, Degree bound = kExact);
  static FracSeries constant(VarSetPtr vars, const Cyclotomic& c, Degree bound = kExact);
  static FracSeries monomial(VarSetPtr vars, const Exponents& e, const Cyclotomic& c = 1, Degree bound = kExact);
  static FracSeries variable(VarSetPtr vars, const std::string& name, Degree bound = kExact);

  const VarSetPtr& vars() const { return vars_; }
  Degree bound() const { return bound_; }
  bool is_exact() const { return bound_ >= kExact; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Degree degree(const Exponents& e) const { return vars_->degree(e); }
  // min degree of a stored term; kExact for zero
  Degree valuation() const;
  Degree max_degree() const;
  Cyclotomic coefficient(const Exponents& e) const;
  // terms above the bound are dropped
  void add_term(const Exponents& e, const Cyclotomic& c);

  FracSeries truncated(Degree b) const;
  FracSeries scaled(const Cyclotomic& c) const;
  // multiply by an exact monomial
  FracSeries shifted(const Exponents& m) const;
  FracSeries conj() const;
  // variable i goes to slot perm[i]
  FracSeries permuted(const std::vector<int>& perm) const;
  bool has_negative_exponents() const;

  FracSeries& operator+=(const FracSeries& b);
  FracSeries& operator-=(const FracSeries& b);
  friend FracSeries operator+(FracSeries a, const FracSeries& b) { return a += b; }
  friend FracSeries operator-(FracSeries a, const FracSeries& b) { return a -= b; }
  friend FracSeries operator*(const FracSeries& a, const FracSeries& b);
  FracSeries operator-() const;

  std::string monomial_to_string(const Exponents& e) const;
  std::string to_string() const;

 private:
  VarSetPtr vars_;
  Degree bound_ = kExact;
  Terms terms_;
  void check_compatible(const FracSeries& b) const;
  friend FracSeries mul(const FracSeries& a, const FracSeries& b, Degree cap);
};

// product known up to min(b1 + val(B), b2 + val(A), b1 + b2), capped
FracSeries mul(const FracSeries& a, const FracSeries& b, Degree cap = kExact);
// exp needs every term of positive degree; bound caps the result
FracSeries series_exp(const FracSeries& a, Degree bound = kExact);
// log needs a = 1 + (positive degree terms)
FracSeries series_log(const FracSeries& a);
// lowest degree part must be one monomial
FracSeries series_inverse(const FracSeries& a, Degree bound = kExact);
FracSeries series_pow(const FracSeries& a, long k, Degree bound = kExact);
// a = m (1 + y) with unit coefficient; m^r must stay on the lattice
FracSeries series_pow(const FracSeries& a, const Rational& r, Degree bound = kExact);

// zeta^{phase} exp(log), phase in turns; `order` is the coefficient field
struct ExpMonomial {
  Rational phase;
  FracSeries log;
  int order = 1;
};
using Binding = std::variant<FracSeries, ExpMonomial>;

// Substitute images for variables of `a`; unbound variables must exist in
// `target`.  Fractional powers are only allowed for ExpMonomial images.
FracSeries series_substitute(const FracSeries& a, const std::map<std::string, Binding>& bindings,
                             VarSetPtr target, Degree bound);

// exp(log) * zeta^phase as a series
FracSeries exp_monomial_series(const ExpMonomial& m, Degree bound);

struct Mismatch {
  Exponents exps;
  Degree degree = 0;
  Cyclotomic lhs;
  Cyclotomic rhs;
};

// first disagreement among terms of degree <= upto, in (degree, exps) order
std::optional<Mismatch> first_mismatch(const FracSeries& a, const FracSeries& b, Degree upto);

}  // namespace loopvertex
