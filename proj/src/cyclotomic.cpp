#include "loopvertex/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace loopvertex {

namespace {

using IntPoly = std::vector<long>;
using QPoly = std::vector<Rational>;

// exact division of monic integer polynomials
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    long c = a[k];
    q[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  return q;
}

IntPoly cyclotomic_poly(int m) {
  static std::map<int, IntPoly> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  IntPoly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = divide_exact(p, cyclotomic_poly(d));
  cache[m] = p;
  return p;
}

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void qdivmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  qtrim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const Rational lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    qtrim(a);
  }
  r = a;
}

QPoly qsub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly out(std::max(a.size(), q.size() + b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  qtrim(out);
  return out;
}

}  // namespace

long euler_phi(long m) {
  long r = m;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

int ambient_order(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return std::lcm(2 * n, 4);
}

CyclotomicField::CyclotomicField(int order) : order_(order) {
  phi_ = cyclotomic_poly(order);
  degree_ = static_cast<int>(phi_.size()) - 1;
  powers_.resize(order);
  QPoly cur(degree_, 0);
  cur[0] = 1;
  for (int k = 0; k < order; ++k) {
    powers_[k] = cur;
    // multiply by x and reduce
    Rational top = cur[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < degree_; ++i) cur[i] -= top * phi_[i];
  }
}

const CyclotomicField& CyclotomicField::get(int order) {
  if (order < 1) throw std::invalid_argument("field order must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = fields[order];
  if (!slot) slot.reset(new CyclotomicField(order));
  return *slot;
}

const std::vector<Rational>& CyclotomicField::power(long k) const {
  long r = k % order_;
  if (r < 0) r += order_;
  return powers_[r];
}

Cyclotomic::Cyclotomic(long v) {
  if (v != 0) c_.emplace_back(v);
}

Cyclotomic::Cyclotomic(const Rational& v) {
  if (v != 0) c_.push_back(v);
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs) : f_(&CyclotomicField::get(order)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) > f_->degree()) {
    // reduce an unreduced polynomial
    Cyclotomic acc;
    acc.f_ = f_;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      acc += Cyclotomic(order, f_->power(static_cast<long>(k))) * Cyclotomic(c_[k]);
    }
    *this = acc;
    return;
  }
  trim();
}

Cyclotomic Cyclotomic::root_of_unity(int order, int root, long k) {
  if (root < 1 || order % root != 0) throw std::invalid_argument("root of unity not in field");
  const auto& f = CyclotomicField::get(order);
  return Cyclotomic(order, f.power(k * (order / root)));
}

Cyclotomic Cyclotomic::imag_unit(int order) { return root_of_unity(order, 4, 1); }

int Cyclotomic::order() const { return f_ ? f_->order() : 1; }

std::vector<Rational> Cyclotomic::coeffs() const {
  std::vector<Rational> out(f_ ? f_->degree() : 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
  return out;
}

Rational Cyclotomic::rational() const {
  if (!is_rational()) throw std::domain_error("not a rational: " + to_string());
  return c_.empty() ? Rational(0) : c_[0];
}

bool Cyclotomic::is_one() const { return c_.size() == 1 && c_[0] == 1; }

void Cyclotomic::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Cyclotomic::adopt(const CyclotomicField* g) {
  if (!g || f_ == g) return;
  if (f_ && f_ != g)
    throw std::invalid_argument("mixing cyclotomic fields of order " + std::to_string(f_->order()) + " and " +
                                std::to_string(g->order()));
  f_ = g;
}

Cyclotomic Cyclotomic::conj() const {
  if (is_rational()) return *this;
  Cyclotomic out;
  out.f_ = f_;
  out.c_.assign(f_->degree(), 0);
  const int L = f_->order();
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const auto& p = f_->power(L - static_cast<long>(j));
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != 0) out.c_[i] += c_[j] * p[i];
  }
  out.trim();
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in coefficient field");
  if (is_rational()) return Cyclotomic(Rational(1) / c_[0]);
  QPoly phi(f_->modulus().begin(), f_->modulus().end());
  QPoly r0 = phi, r1 = c_, s0, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q, r;
    qdivmod(r0, r1, q, r);
    r0 = r1;
    r1 = r;
    QPoly s2 = qsub_mul(s0, q, s1);
    s0 = s1;
    s1 = s2;
  }
  // r0 is a nonzero constant since Phi is irreducible
  Rational g = r0[0];
  for (auto& x : s0) x /= g;
  QPoly q, rem;
  qdivmod(s0, phi, q, rem);
  Cyclotomic out;
  out.f_ = f_;
  out.c_ = rem;
  out.trim();
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& b) {
  adopt(b.f_);
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), 0);
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
  trim();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& b) {
  adopt(b.f_);
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), 0);
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
  trim();
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic out;
  if (a.f_ && b.f_ && a.f_ != b.f_) out.adopt(a.f_), out.adopt(b.f_);
  out.f_ = a.f_ ? a.f_ : b.f_;
  if (a.c_.empty() || b.c_.empty()) return out;
  if (a.c_.size() == 1 || b.c_.size() == 1) {
    const Cyclotomic& s = a.c_.size() == 1 ? a : b;
    const Cyclotomic& v = a.c_.size() == 1 ? b : a;
    out.c_.resize(v.c_.size());
    for (std::size_t i = 0; i < v.c_.size(); ++i) out.c_[i] = s.c_[0] * v.c_[i];
    out.trim();
    return out;
  }
  const auto* f = out.f_;
  const int deg = f->degree();
  std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  const auto& phi = f->modulus();
  for (std::size_t k = prod.size(); k-- > static_cast<std::size_t>(deg);) {
    if (prod[k] == 0) continue;
    Rational c = prod[k];
    for (int i = 0; i < deg; ++i)
      if (phi[i] != 0) prod[k - deg + i] -= c * phi[i];
    prod[k] = 0;
  }
  if (static_cast<int>(prod.size()) > deg) prod.resize(deg);
  out.c_ = std::move(prod);
  out.trim();
  return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& b) {
  *this = *this * b;
  return *this;
}

void Cyclotomic::add_mul(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.c_.empty() || b.c_.empty()) return;
  if (a.c_.size() == 1 && b.c_.size() == 1 && c_.size() <= 1) {
    thread_local Rational tmp;
    mpq_mul(tmp.get_mpq_t(), a.c_[0].get_mpq_t(), b.c_[0].get_mpq_t());
    if (c_.empty()) {
      c_.push_back(tmp);
    } else {
      mpq_add(c_[0].get_mpq_t(), c_[0].get_mpq_t(), tmp.get_mpq_t());
      if (sgn(c_[0]) == 0) c_.clear();
    }
    adopt(a.f_);
    adopt(b.f_);
    return;
  }
  *this += a * b;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.f_ && b.f_ && a.f_ != b.f_) return false;
  return a.c_ == b.c_;
}

std::string Cyclotomic::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
  }
  return os.str();
}

std::vector<std::string> Cyclotomic::to_strings() const {
  std::vector<std::string> out;
  for (const auto& x : coeffs()) out.push_back(rational_to_string(x));
  return out;
}

}  // namespace loopvertex
