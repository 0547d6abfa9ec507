#include "loopvertex/loopschur.hpp"

#include <map>
#include <stdexcept>

namespace loopvertex {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

std::int32_t on_lattice(int n, const Rational& p) {
  Rational x = p * (2 * n);
  if (x.get_den() != 1) throw std::domain_error("exponent " + p.get_str() + " outside (1/2n)Z");
  return static_cast<std::int32_t>(x.get_num().get_si());
}

}  // namespace

Exponents qmono(int n, long k, const Rational& power) {
  Exponents e;
  e[mod(k, n)] = on_lattice(n, power);
  return e;
}

Exponents qtotal(int n, const Rational& power) {
  Exponents e;
  for (int i = 0; i < n; ++i) e[i] = on_lattice(n, power);
  return e;
}

Exponents qrange(int n, long a, long b, const Rational& power) {
  Exponents e;
  for (long t = a; t <= b; ++t) e[mod(t, n)] += on_lattice(n, power);
  return e;
}

Exponents qinv_prefix(int n, long k) {
  if (k >= -1) return qrange(n, 0, k, -1);
  return qrange(n, k + 1, -1, 1);
}

namespace {

struct SsytState {
  const Partition* p;
  int n;
  long maxdeg;
  std::vector<std::pair<int, int>> boxes;
  std::vector<long> min_rest;  // lower bound on the entries still to place
  std::vector<std::vector<long>> t;
  std::map<Exponents, long> acc;
};

void fill(SsytState& s, std::size_t idx, long used, Exponents& e) {
  if (idx == s.boxes.size()) {
    ++s.acc[e];
    return;
  }
  auto [i, j] = s.boxes[idx];
  long lo = 0;
  if (j > 1) lo = std::max(lo, s.t[i - 1][j - 2]);
  if (i > 1) lo = std::max(lo, s.t[i - 2][j - 1] + 1);
  const int c = box_color(i, j, s.n);
  const int scale = 2 * s.n;
  for (long v = lo; used + v + s.min_rest[idx + 1] <= s.maxdeg; ++v) {
    s.t[i - 1][j - 1] = v;
    e[c] += static_cast<std::int32_t>(v * scale);
    fill(s, idx + 1, used + v, e);
    e[c] -= static_cast<std::int32_t>(v * scale);
  }
}

}  // namespace

FracSeries ssyt_loop_schur(const Partition& bar, int n, Degree bound) {
  auto vars = q_vars(n);
  FracSeries out(vars, bound);
  if (bound < 0) return out;
  SsytState s;
  s.p = &bar;
  s.n = n;
  s.maxdeg = bound / (2 * n);
  s.boxes = bar.boxes();
  s.min_rest.assign(s.boxes.size() + 1, 0);
  for (std::size_t k = s.boxes.size(); k-- > 0;) s.min_rest[k] = s.min_rest[k + 1] + (s.boxes[k].first - 1);
  for (int i = 1; i <= bar.length(); ++i) s.t.emplace_back(bar.row(i), 0);
  Exponents e;
  fill(s, 0, 0, e);
  for (const auto& [x, c] : s.acc) out.add_term(x, Cyclotomic(c));
  return out;
}

FracSeries ssyt_loop_schur(const NPartition& lambda, Degree bound) {
  return ssyt_loop_schur(n_quotient_inverse(lambda), lambda.n(), bound);
}

RatFunc hook_content_ratfunc(const Partition& bar, int n) {
  auto vars = q_vars(n);
  auto cd = color_data(bar, n);
  Exponents num;
  for (int i = 0; i < n; ++i) num[i] = cd.n_stat[i] * 2 * n;
  RatFunc r = RatFunc::monomial(vars, num);
  for (auto [i, j] : bar.boxes()) {
    auto h = colored_hook(bar, n, i, j);
    Exponents m;
    for (int c = 0; c < n; ++c) m[c] = h[c] * 2 * n;
    r *= RatFunc::geometric(vars, m);
  }
  return r;
}

FracSeries hook_content_loop_schur(const Partition& bar, int n, Degree bound) {
  return hook_content_ratfunc(bar, n).expand(bound);
}

FracSeries hook_content_loop_schur(const NPartition& lambda, Degree bound) {
  return hook_content_loop_schur(n_quotient_inverse(lambda), lambda.n(), bound);
}

Exponents hat_prefactor(const Partition& bar, int n) {
  Exponents e;
  for (auto [i, j] : bar.boxes()) e += qmono(n, j - i, frac(i - j, n));
  return e;
}

RatFunc loop_schur_hat_ratfunc(const Partition& bar, int n) {
  return hook_content_ratfunc(bar, n).shifted(hat_prefactor(bar, n));
}

RatFunc hhat(long l, long r, int n) {
  auto vars = q_vars(n);
  if (l < 0) return RatFunc(FracSeries(vars));
  Exponents num;
  for (long t = r; t <= r + l - 1; ++t) num += qmono(n, t, frac(-t, n));
  RatFunc out = RatFunc::monomial(vars, num);
  for (long i = 1; i <= l; ++i) out *= RatFunc::geometric(vars, qrange(n, l - i + r, l - 1 + r));
  return out;
}

FracSeries hhat_series(long l, long r, int n, Degree bound) { return hhat(l, r, n).expand(bound); }

namespace {

// Laplace expansion along rows with a subset table over columns
FracSeries series_det(const std::vector<std::vector<FracSeries>>& a, const VarSetPtr& vars, Degree cap) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return FracSeries::constant(vars, 1);
  if (m > 20) throw std::invalid_argument("determinant too large");
  // a minor on the first rows is later multiplied by entries of the rows
  // below, whose valuation may be negative: give it that much headroom
  std::vector<Degree> below(m + 1, 0);
  for (int i = m - 1; i >= 0; --i) {
    Degree lo = 0;
    for (const auto& e : a[i])
      if (!e.is_zero()) lo = std::min(lo, e.valuation());
    below[i] = below[i + 1] + lo;
  }
  std::vector<FracSeries> d(1u << m);
  d[0] = FracSeries::constant(vars, 1);
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    const int row = __builtin_popcount(mask) - 1;
    const Degree mcap = cap >= kExact ? kExact : cap - below[row + 1];
    FracSeries acc(vars, mcap);
    for (int j = 0; j < m; ++j) {
      if (!(mask & (1u << j))) continue;
      const auto& e = a[row][j];
      if (e.is_zero() && e.is_exact()) continue;
      FracSeries t = mul(e, d[mask & ~(1u << j)], mcap);
      if (__builtin_popcount(mask >> (j + 1)) % 2) t = -t;
      acc += t;
    }
    d[mask] = std::move(acc);
  }
  return d[(1u << m) - 1];
}

}  // namespace

FracSeries exact_det(const std::vector<std::vector<FracSeries>>& a) {
  if (a.empty()) throw std::invalid_argument("empty matrix needs variables");
  return series_det(a, a[0][0].vars(), kExact);
}

FracSeries loop_jacobi_trudi(const Partition& bar, int n, int m, Degree bound) {
  if (m < bar.length()) throw std::invalid_argument("Jacobi-Trudi size m is smaller than the length");
  auto vars = q_vars(n);
  // each permutation term has valuation at least the sum of row minima,
  // so that much relative precision per entry is always enough
  std::vector<std::vector<RatFunc>> h(m, std::vector<RatFunc>(m));
  Degree floor = 0;
  for (int i = 1; i <= m; ++i) {
    Degree lo = kExact;
    for (int j = 1; j <= m; ++j) {
      h[i - 1][j - 1] = hhat(bar.row(i) - i + j, 1 - j, n);
      if (!h[i - 1][j - 1].is_zero()) lo = std::min(lo, h[i - 1][j - 1].valuation());
    }
    if (lo == kExact) return FracSeries(vars, bound);  // a zero row
    floor += lo;
  }
  const Degree rel = bound - floor;
  if (rel < 0) return FracSeries(vars, bound);
  std::vector<std::vector<FracSeries>> a(m, std::vector<FracSeries>(m, FracSeries(vars)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (!h[i][j].is_zero()) a[i][j] = h[i][j].expand(h[i][j].valuation() + rel);
  return series_det(a, vars, bound).truncated(bound);
}

FracSeries f_factor(long a, long b, long r, int n) {
  if (b < 0) throw std::invalid_argument("f_factor needs b >= 0");
  auto vars = q_vars(n);
  Exponents mono;
  for (long t = r; t <= r + b - 1; ++t) mono += qmono(n, t, frac(t, n));
  FracSeries out = FracSeries::monomial(vars, mono);
  for (long i = 1; i <= b; ++i) out = out * one_minus(vars, qrange(n, r + i - 1, r + a - 1));
  return out;
}

RatFunc schur_det_ratfunc(const Partition& omega, const std::vector<Exponents>& spec, VarSetPtr vars) {
  const int m = static_cast<int>(spec.size());
  if (m < omega.length()) throw std::invalid_argument("schur_det: m smaller than the length of omega");
  std::vector<std::vector<FracSeries>> num(m, std::vector<FracSeries>(m, FracSeries(vars)));
  for (int i = 0; i < m; ++i)
    for (int j = 1; j <= m; ++j) num[i][j - 1] = FracSeries::monomial(vars, spec[i].times(m - j + omega.row(j)));
  RatFunc out(m ? exact_det(num) : FracSeries::constant(vars, 1));
  // 1/(z_i - z_k) = z_i^{-1} / (1 - z_k/z_i)
  for (int i = 0; i < m; ++i)
    for (int k = i + 1; k < m; ++k) {
      if (spec[i] == spec[k]) throw std::domain_error("degenerate Vandermonde: repeated monomial");
      out = out.shifted(-spec[i]) * RatFunc::geometric(vars, spec[k] - spec[i]);
    }
  return out;
}

FracSeries schur_det(const Partition& omega, const std::vector<Exponents>& spec, VarSetPtr vars, Degree bound) {
  return schur_det_ratfunc(omega, spec, std::move(vars)).expand(bound);
}

namespace {

RatFunc exact(const FracSeries& s) { return RatFunc(s); }

RatFunc hhat_product(const Partition& s, int n, int m, bool inverted) {
  RatFunc out = RatFunc::constant(q_vars(n), 1);
  for (int i = 1; i <= m; ++i) {
    RatFunc h = hhat(s.row(i) - i + m, 1 - m, n);
    out *= inverted ? h.inverted() : h;
  }
  return out;
}

// prod_j prod_{t=1-m}^{-j} q_t^{t/n}
Exponents f_prefactor(int n, int m) {
  Exponents e;
  for (int j = 1; j <= m; ++j)
    for (long t = 1 - m; t <= -j; ++t) e += qmono(n, t, frac(t, n));
  return e;
}

// prod_j e_{m-j}(1, q_1^{-1}, ..., (q_1...q_{m-j-1})^{-1})
Exponents e_product(int n, int m, int sign) {
  Exponents e;
  for (int j = 1; j <= m - 1; ++j)
    for (int k = 0; k <= m - j - 1; ++k) e += qrange(n, 1, k, sign);
  return e;
}

int e_sign(int m) {
  int s = 0;
  for (int j = 1; j <= m - 1; ++j) s += j;
  return s % 2 ? -1 : 1;
}

}  // namespace

RatFunc alternant_form(const Partition& s, int n, int m) {
  auto vars = q_vars(n);
  std::vector<std::vector<FracSeries>> f(m, std::vector<FracSeries>(m, FracSeries(vars)));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) f[i - 1][j - 1] = f_factor(s.row(i) - i + m, m - j, 1 - m, n);
  return hhat_product(s, n, m, false) * exact(exact_det(f));
}

RatFunc inverse_alphabet_form(const Partition& s, int n, int m) {
  if (m % n) throw std::invalid_argument("inverse-alphabet form needs n | m");
  auto vars = q_vars(n);
  std::vector<std::vector<FracSeries>> z(m, std::vector<FracSeries>(m, FracSeries(vars)));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) z[i - 1][j - 1] = FracSeries::monomial(vars, qrange(n, 1, s.row(i) + m - i).times(m - j));
  RatFunc out = hhat_product(s, n, m, false) * exact(exact_det(z));
  return out.shifted(f_prefactor(n, m) + e_product(n, m, -1)).scaled(e_sign(m));
}

Exponents inversion_monomial(const Partition& s, int n) {
  Exponents e = qtotal(n, frac(-s.size(), n));
  for (auto [i, j] : s.boxes()) e += qmono(n, j - i, frac(2 * (i - j), n) + (i - j));
  return e;
}

RatFunc inverted_prefactor_form(const Partition& s, int n, int m, bool literal_prefactor) {
  if (m % n) throw std::invalid_argument("inverted-prefactor form needs n | m");
  auto vars = q_vars(n);
  std::vector<std::vector<FracSeries>> z(m, std::vector<FracSeries>(m, FracSeries(vars)));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) z[i - 1][j - 1] = FracSeries::monomial(vars, qinv_prefix(n, s.row(i) + m - i).times(m - j));
  RatFunc out = hhat_product(s, n, m, true) * exact(exact_det(z));
  // the f-prefactor enters at q^{-1}, like every other factor of the inverse-alphabet form
  Exponents mono = qmono(n, 0, frac(m * (m - 1), 2)) + inversion_monomial(s, n) + e_product(n, m, 1);
  mono += literal_prefactor ? f_prefactor(n, m) : -f_prefactor(n, m);
  int sign = e_sign(m) * (s.size() % 2 ? -1 : 1);
  return out.shifted(mono).scaled(sign);
}

namespace {

RatFunc inverse_vandermonde(const std::vector<Exponents>& z, const VarSetPtr& vars) {
  RatFunc out = RatFunc::constant(vars, 1);
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t k = i + 1; k < z.size(); ++k) {
      if (z[i] == z[k]) throw std::domain_error("degenerate Vandermonde: repeated monomial");
      out = out.shifted(-z[i]) * RatFunc::geometric(vars, z[k] - z[i]);
    }
  return out;
}

// det(z_i^{m-j+omega_j}) without row s and column t (1-indexed)
FracSeries minor_det(const std::vector<Exponents>& z, const Partition& omega, int s, int t, const VarSetPtr& vars) {
  const int m = static_cast<int>(z.size());
  if (m == 1) return FracSeries::constant(vars, 1);
  std::vector<std::vector<FracSeries>> a;
  for (int i = 1; i <= m; ++i) {
    if (i == s) continue;
    std::vector<FracSeries> row;
    for (int j = 1; j <= m; ++j)
      if (j != t) row.push_back(FracSeries::monomial(vars, z[i - 1].times(m - j + omega.row(j))));
    a.push_back(std::move(row));
  }
  return exact_det(a);
}

}  // namespace

FiniteMForms finite_m_forms(const Partition& omega, const Partition& sb, int d, int n, int m) {
  if (m % n) throw std::invalid_argument("finite-m forms need n | m");
  if (m < sb.length() || m < omega.length()) throw std::invalid_argument("finite-m forms: m too small");
  if (d < 1) throw std::invalid_argument("finite-m forms need d >= 1");
  auto vars = q_vars(n);
  std::vector<Exponents> z;
  for (int i = 1; i <= m; ++i) z.push_back(qinv_prefix(n, sb.row(i) + m - i));
  const RatFunc vinv = inverse_vandermonde(z, vars);
  Exponents Q;
  for (int k = 1; k < n; ++k) Q += qmono(n, k, frac(k, n));
  const Exponents omega_mono = qtotal(n, -omega.content_sum());

  FiniteMForms out{RatFunc(FracSeries(vars)), RatFunc(FracSeries(vars)), RatFunc(FracSeries(vars))};
  FracSeries left(vars), row_expanded(vars);
  for (int s = 1; s <= m; ++s) {
    const long base = sb.row(s) - s;
    std::vector<Exponents> zs = z;
    zs[s - 1] = qinv_prefix(n, base + m + n * d);
    Exponents strip;
    for (long l = 1; l <= n * d; ++l) strip += qmono(n, base + l, -(frac(1, n) + 1) * (base + l));
    RatFunc poles = RatFunc::constant(vars, (n * d) % 2 ? -1 : 1);
    for (long l = 1; l <= n * d; ++l) poles *= RatFunc::geometric(vars, qrange(n, l, base + m + n * d, -1));

    // row-shifted form with the hat-h ratio already simplified
    Exponents m4 = qtotal(n, frac(m * omega.size(), n) - d) + omega_mono;
    for (long l = 1; l <= n * d; ++l) m4 += qmono(n, base + l, -frac(2, n) * (base + l) - (base + l));
    for (long l = 1; l <= n * d; ++l) m4 += qmono(n, base + l, frac(base + l, n));
    // a repeated row means sb + nd e_s is no strip; the determinant vanishes
    bool repeated = false;
    for (int i = 1; i <= m; ++i) repeated = repeated || (i != s && zs[i - 1] == zs[s - 1]);
    if (!repeated) out.row_shifted += schur_det_ratfunc(omega, zs, vars).shifted(m4) * poles;

    for (int t = 1; t <= m; ++t) {
      const int sgn = (s + t) % 2 ? -1 : 1;
      FracSeries minor = minor_det(z, omega, s, t, vars).scaled(sgn);
      if (minor.is_zero()) continue;
      Exponents ml = qtotal(n, frac(m * (omega.size() + d), n)) + omega_mono - Q.times(d) +
                     z[s - 1].times(m - t + omega.row(t) + d);
      for (int l = 1; l <= d; ++l) ml += qtotal(n, -(omega.row(t) - t + l));
      left += minor.shifted(ml);
      Exponents mr = strip + qtotal(n, frac(m * omega.size(), n) - d) + omega_mono + zs[s - 1].times(m + omega.row(t) - t);
      out.row_expanded += (RatFunc(minor.shifted(mr)) * poles);
    }
  }
  out.left = RatFunc(left) * vinv;
  out.row_expanded = out.row_expanded * vinv;
  return out;
}

std::vector<FormCheck> det_forms_check(const Partition& s, int n, int m, Degree bound) {
  if (m < s.length()) throw std::invalid_argument("det_forms_check: m smaller than the length");
  if (m % n) throw std::invalid_argument("det_forms_check: n must divide m");
  std::vector<FormCheck> out;
  RatFunc d2 = alternant_form(s, n, m);
  {
    FormCheck c{"alternant form = Jacobi-Trudi", false, std::nullopt, "modulo degree bound"};
    c.witness = first_mismatch(d2.expand(bound), loop_jacobi_trudi(s, n, m, bound), bound);
    c.pass = !c.witness;
    out.push_back(c);
  }
  RatFunc d4 = inverse_alphabet_form(s, n, m);
  {
    FormCheck c{"inverse-alphabet form = alternant form", false, std::nullopt, "exact rational functions"};
    c.witness = d4.mismatch(d2);
    c.pass = !c.witness;
    out.push_back(c);
  }
  {
    RatFunc sh = loop_schur_hat_ratfunc(s, n);
    RatFunc rhs = sh.inverted().shifted(inversion_monomial(s, n)).scaled(s.size() % 2 ? -1 : 1);
    FormCheck c{"inversion symmetry of s-hat", false, std::nullopt, "exact rational functions"};
    c.witness = sh.mismatch(rhs);
    c.pass = !c.witness;
    out.push_back(c);
  }
  {
    FormCheck c{"inverted-prefactor form = inverse-alphabet form", false, std::nullopt, "exact rational functions"};
    c.witness = inverted_prefactor_form(s, n, m).mismatch(d4);
    c.pass = !c.witness;
    const bool literal = inverted_prefactor_form(s, n, m, true).equals(d4);
    c.note += literal ? "; literal prefactor also agrees" : "; literal prefactor reading disagrees";
    out.push_back(c);
  }
  return out;
}

}  // namespace loopvertex
