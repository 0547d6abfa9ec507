#pragma once

#include <string>
#include <vector>

#include "loopvertex/rational.hpp"

namespace loopvertex {

// Q(zeta_L) as Q[x]/Phi_L.  Instances are interned and never freed.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int order);

  int order() const { return order_; }
  int degree() const { return degree_; }
  // Phi_L, low degree first, monic
  const std::vector<long>& modulus() const { return phi_; }
  // reduced residue of x^k, k taken mod L
  const std::vector<Rational>& power(long k) const;

 private:
  explicit CyclotomicField(int order);
  int order_;
  int degree_;
  std::vector<long> phi_;
  std::vector<std::vector<Rational>> powers_;
};

// smallest field holding xi_{2n} and sqrt(-1)
int ambient_order(int n);
long euler_phi(long m);

// An element of some Q(zeta_L).  Elements with no field attached are plain
// rationals and mix with any field.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(long v);  // NOLINT
  Cyclotomic(const Rational& v);  // NOLINT
  Cyclotomic(int order, std::vector<Rational> coeffs);

  // zeta_root^k viewed inside Q(zeta_order); root must divide order
  static Cyclotomic root_of_unity(int order, int root, long k);
  static Cyclotomic imag_unit(int order);

  // 1 for plain rationals
  int order() const;
  const CyclotomicField* field() const { return f_; }
  // full-length residue, padded to phi(order)
  std::vector<Rational> coeffs() const;

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  // throws unless rational
  Rational rational() const;
  bool is_one() const;

  Cyclotomic conj() const;
  Cyclotomic inverse() const;

  Cyclotomic& operator+=(const Cyclotomic& b);
  Cyclotomic& operator-=(const Cyclotomic& b);
  Cyclotomic& operator*=(const Cyclotomic& b);
  // *this += a * b without a temporary in the rational case
  void add_mul(const Cyclotomic& a, const Cyclotomic& b);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  Cyclotomic operator-() const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  // "1/2 + -3/1*z^2", z = zeta_order
  std::string to_string() const;
  // coefficient strings, full length
  std::vector<std::string> to_strings() const;

 private:
  const CyclotomicField* f_ = nullptr;
  std::vector<Rational> c_;  // trailing zeros trimmed

  void trim();
  void adopt(const CyclotomicField* g);
};

}  // namespace loopvertex
