#include "loopvertex/vertex.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace loopvertex {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

Cyclotomic zeta(int n, int root, long k) {
  const int L = ambient_order(n);
  return Cyclotomic::root_of_unity(L, root, mod(k, root));
}

Cyclotomic imag(int n) { return Cyclotomic::imag_unit(ambient_order(n)); }

Cyclotomic sign(long k) { return k % 2 ? Cyclotomic(-1) : Cyclotomic(1); }

Exponents lattice_total(int n, const Rational& p) {
  try {
    return qtotal(n, p);
  } catch (const std::domain_error&) {
    throw std::domain_error("framing exponent outside lattice: q^(" + p.get_str() + ")");
  }
}

Exponents lattice_mono(int n, long k, const Rational& p) {
  try {
    return qmono(n, k, p);
  } catch (const std::domain_error&) {
    throw std::domain_error("framing exponent outside lattice: q_" + std::to_string(mod(k, n)) + "^(" + p.get_str() +
                            ")");
  }
}

Rational ratio(const Rational& a, const Rational& b, const char* what) {
  if (b == 0) throw std::domain_error(std::string("framing ratio ") + what + " has zero denominator");
  return a / b;
}

}  // namespace

Exponents frakq(int n, long t) {
  if (t >= 0) return qrange(n, 1, t);
  return qrange(n, t + 1, 0, -1);
}


Exponents bar_exps(const Exponents& e, int n) {
  Exponents out;
  for (int i = 0; i < n; ++i) out[mod(-i, n)] = e[i];
  return out;
}

RatFunc bar(const RatFunc& f, int n) {
  return f.mapped([n](const Exponents& e) { return bar_exps(e, n); });
}

std::vector<Partition> partitions_between(const Partition& inner, const Partition& outer) {
  std::vector<Partition> out;
  if (!outer.contains(inner)) return out;
  std::vector<int> cur(outer.length(), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i > outer.length()) {
      out.emplace_back(cur);
      return;
    }
    int hi = outer.row(i);
    if (i > 1) hi = std::min(hi, cur[i - 2]);
    for (int v = inner.row(i); v <= hi; ++v) {
      cur[i - 1] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

namespace {

// the head letters frak q_{i-1-bar_i}
std::vector<Exponents> head_letters(const Partition& bar, int n) {
  std::vector<Exponents> h;
  for (int i = 1; i <= bar.length(); ++i) h.push_back(frakq(n, i - 1 - bar.row(i)));
  return h;
}

// horizontal strips kappa -> kappa' inside outer
void horizontal_strips(const Partition& kappa, const Partition& outer, std::vector<Partition>& out) {
  out.clear();
  std::vector<int> cur(outer.length(), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i > outer.length()) {
      out.emplace_back(cur);
      return;
    }
    int hi = outer.row(i);
    if (i > 1) hi = std::min(hi, kappa.row(i - 1));
    for (int v = kappa.row(i); v <= hi; ++v) {
      cur[i - 1] = v;
      rec(i + 1);
    }
  };
  rec(1);
}

// s_{nu/omega}(letters) for every nu inside outer, as exact polynomials
std::map<Partition, FracSeries> finite_skew(const Partition& omega, const Partition& outer,
                                            const std::vector<Exponents>& letters, const VarSetPtr& vars) {
  std::map<Partition, FracSeries> cur;
  cur.emplace(omega, FracSeries::constant(vars, 1));
  std::vector<Partition> strips;
  for (const auto& z : letters) {
    std::map<Partition, FracSeries> next;
    for (const auto& [kappa, val] : cur) {
      horizontal_strips(kappa, outer, strips);
      for (const auto& k2 : strips) {
        FracSeries t = val.shifted(z.times(k2.size() - kappa.size()));
        auto it = next.find(k2);
        if (it == next.end())
          next.emplace(k2, std::move(t));
        else
          it->second += t;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

// maj generating polynomial over standard fillings of outer / inner;
// i is a descent when i+1 sits in a lower row
std::map<long, long> syt_maj(const Partition& outer, const Partition& inner) {
  std::map<long, long> out;
  const int N = outer.size() - inner.size();
  std::vector<int> rows(inner.parts());
  rows.resize(outer.length(), 0);
  std::function<void(int, int, long)> rec = [&](int k, int prev_row, long maj) {
    if (k > N) {
      ++out[maj];
      return;
    }
    for (int i = 0; i < outer.length(); ++i) {
      if (rows[i] >= outer.row(i + 1)) continue;
      if (i > 0 && rows[i - 1] <= rows[i]) continue;
      ++rows[i];
      rec(k + 1, i, maj + (k > 1 && i > prev_row ? k - 1 : 0));
      --rows[i];
    }
  };
  rec(1, -1, 0);
  return out;
}

// s_{alpha/beta}(c, c q, c q^2, ...) with q the product of all q_i
RatFunc geometric_skew(const Partition& alpha, const Partition& beta, const Exponents& c, int n) {
  auto vars = q_vars(n);
  const int N = alpha.size() - beta.size();
  const Exponents q = qtotal(n, 1);
  FracSeries num(vars);
  for (auto [maj, cnt] : syt_maj(alpha, beta)) num.add_term(c.times(N) + q.times(maj), Cyclotomic(cnt));
  RatFunc r(num);
  for (int i = 1; i <= N; ++i) r *= RatFunc::geometric(vars, q.times(i));
  return r;
}

struct TailKey {
  Partition rho, nu;
  long t0;
  int n;
  auto operator<=>(const TailKey&) const = default;
};

// s_{rho/nu}(frak q_t : t >= t0): the tail splits into n geometric progressions
RatFunc tail_skew(const Partition& rho, const Partition& nu, long t0, int n) {
  static std::mutex mu;
  static std::map<TailKey, RatFunc> memo;
  TailKey key{rho, nu, t0, n};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  auto vars = q_vars(n);
  std::function<RatFunc(const Partition&, int)> chain = [&](const Partition& kappa, int r) -> RatFunc {
    if (r == n) return kappa == rho ? RatFunc::constant(vars, 1) : RatFunc(FracSeries(vars));
    RatFunc acc{FracSeries(vars)};
    for (const auto& k2 : partitions_between(kappa, rho)) {
      RatFunc rest = chain(k2, r + 1);
      if (rest.is_zero()) continue;
      RatFunc piece = k2 == kappa ? RatFunc::constant(vars, 1) : geometric_skew(k2, kappa, frakq(n, t0 + r), n);
      acc += piece * rest;
    }
    return acc;
  };
  RatFunc out = chain(nu, 0);
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, out);
  return out;
}

}  // namespace

Alphabet shifted_alphabet(const Partition& bar, int n) { return {head_letters(bar, n), bar.length()}; }

RatFunc skew_schur(const Partition& rho, const Partition& omega, const Alphabet& a, int n) {
  auto vars = q_vars(n);
  if (!rho.contains(omega)) return RatFunc(FracSeries(vars));
  auto heads = finite_skew(omega, rho, a.head, vars);
  RatFunc out{FracSeries(vars)};
  for (const auto& [nu, h] : heads) {
    RatFunc t = tail_skew(rho, nu, a.tail_start, n);
    if (t.is_zero()) continue;
    out += RatFunc(h) * t;
  }
  return out;
}

FracSeries skew_schur_window(const Partition& rho, const Partition& omega, const Alphabet& a, int n, int window,
                             Degree bound) {
  auto vars = q_vars(n);
  if (!rho.contains(omega)) return FracSeries(vars, bound);
  std::vector<Exponents> letters = a.head;
  for (int k = 0; k < window; ++k) letters.push_back(frakq(n, a.tail_start + k));
  auto all = finite_skew(omega, rho, letters, vars);
  auto it = all.find(rho);
  return it == all.end() ? FracSeries(vars, bound) : it->second.truncated(bound);
}

RatFunc shat_frak(const Partition& rho, const Partition& lambda_bar, int n) {
  Alphabet a = shifted_alphabet(lambda_bar, n);
  return skew_schur(rho, Partition{}, a, n).shifted(qtotal(n, -rho.content_sum()));
}

RatFunc dt_vertex_P(const Partition& rho_plus, const Partition& rho_minus, const NPartition& lambda) {
  const int n = lambda.n();
  auto vars = q_vars(n);
  const Partition lb = n_quotient_inverse(lambda);
  const Partition lt = lb.transpose();
  Alphabet a = shifted_alphabet(lb, n), at = shifted_alphabet(lt, n);
  std::vector<int> inter;
  for (int i = 1; i <= std::min(rho_plus.length(), rho_minus.length()); ++i)
    inter.push_back(std::min(rho_plus.row(i), rho_minus.row(i)));
  RatFunc sum{FracSeries(vars)};
  for (const auto& omega : partitions_between(Partition{}, Partition(inter))) {
    RatFunc t = bar(skew_schur(rho_plus, omega, a, n), n) * skew_schur(rho_minus, omega, at, n);
    sum += t.shifted(qmono(n, 0, -omega.size()));
  }
  return hook_content_ratfunc(lb, n) * sum;
}

std::string Framing::to_string() const {
  return rational_to_string(w1) + "," + rational_to_string(w2) + "," + rational_to_string(w3);
}

Framing parse_framing(const std::string& s) {
  std::vector<Rational> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(parse_rational(tok));
  if (v.size() != 3) throw std::invalid_argument("framing needs three weights a,b,c");
  if (v[0] + v[1] + v[2] != 0) throw std::invalid_argument("framing weights must sum to zero");
  return {v[0], v[1], v[2]};
}

Rational lambda_phase(const NPartition& lambda) {
  const int n = lambda.n();
  Rational t = -Rational(lambda.size()) * (frac(1, 2) + frac(1, 2 * n));
  for (int k = 0; k < n; ++k) t -= frac(k * lambda[k].size(), n);
  return t;
}

Cyclotomic lambda_root_power(const NPartition& lambda, const Rational& e) {
  Rational t = lambda_phase(lambda);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return root_from_turns((t - Rational(fl)) * e, lambda.n());
}

Cyclotomic root_from_turns(const Rational& turns, int n) {
  const int L = ambient_order(n);
  Rational t = turns * L;
  if (t.get_den() != 1) throw std::domain_error("framing exponent outside lattice: root of unity of turn " + turns.get_str());
  return Cyclotomic::root_of_unity(L, L, mod(t.get_num().get_si(), L));
}

RatFunc dt_vertex_framed(const Partition& rho_plus_in, const Partition& rho_minus_in, const NPartition& lambda,
                         Alpha alpha, const Framing& w) {
  const int n = lambda.n();
  if (w.w1 + w.w2 + w.w3 != 0) throw std::invalid_argument("framing weights must sum to zero");
  if (!lambda.empty() && w.w3 == 0) throw std::domain_error("lambda must be empty when w3 = 0");
  const Partition rp = alpha.plus == 1 ? rho_plus_in : rho_plus_in.transpose();
  const Partition rm = alpha.minus == 1 ? rho_minus_in : rho_minus_in.transpose();
  const Partition lb = n_quotient_inverse(lambda);

  Cyclotomic c = 1;
  Exponents m;
  if (!lambda.empty()) {
    const int d = lambda.size();
    c *= sign(d) * Cyclotomic(frac(chi_sym(lb, Partition(std::vector<int>(d, n))), dim_wreath(lambda)));
    c *= lambda_root_power(lambda, ratio(n * w.w1, w.w3, "n w1 / w3"));
    m += lattice_total(n, frac(d, 2));
    const Rational e = ratio(w.w1, w.w3, "w1 / w3");
    for (auto [i, j] : lb.boxes()) m += lattice_mono(n, j - i, e * (i - j));
  }
  c *= sign(rp.size() + rm.size());
  for (int k = 1; k < n; ++k) {
    m += lattice_mono(n, k, frac(-k, n) * rp.size());
    m += lattice_mono(n, k, frac(k - n, n) * rm.size());
  }
  m += lattice_total(n, frac(rp.size() + rm.size(), 2));
  if (rp.content_sum() != 0) m += lattice_total(n, -rp.content_sum() * ratio(w.w3, n * w.w1, "w3 / (n w1)"));
  if (rm.content_sum() != 0) m += lattice_total(n, -rm.content_sum() * ratio(w.w3, n * w.w2, "w3 / (n w2)"));
  return dt_vertex_P(rp, rm, lambda).shifted(m).scaled(c);
}

// ---- change of variables ------------------------------------------------

namespace {

struct CovData {
  std::vector<Rational> theta;   // per q_k, turns
  std::vector<FracSeries> logs;  // per q_k
};

const CovData& cov_data(int n, bool negate_q) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, CovData> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, negate_q);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto xu = xu_vars(n);
  const int S = xu->scale();
  CovData d;
  d.theta.assign(n, frac(-1, n));
  d.theta[0] = frac(n - 1, n) + (negate_q ? frac(1, 2) : Rational(0));
  d.logs.assign(n, FracSeries(xu));
  Exponents ue;
  ue[n - 1] = S;
  d.logs[0] = FracSeries::monomial(xu, ue, imag(n));
  for (int k = 1; k < n; ++k) {
    FracSeries s(xu);
    for (int i = 1; i < n; ++i) {
      Exponents xe;
      xe[i - 1] = S;
      Cyclotomic c = zeta(n, n, -i * k) * (zeta(n, 2 * n, i) - zeta(n, 2 * n, -i)) * Cyclotomic(frac(-1, n));
      s.add_term(xe, c);
    }
    d.logs[k] = s;
    d.logs[0] -= s;
  }
  return cache.emplace(key, std::move(d)).first->second;
}

}  // namespace

LinearImage cov_monomial(const Exponents& e, int n, bool negate_q) {
  const auto& d = cov_data(n, negate_q);
  LinearImage out{0, FracSeries(xu_vars(n))};
  for (int k = 0; k < n; ++k) {
    if (e[k] == 0) continue;
    Rational r = frac(e[k], 2 * n);
    out.phase += r * d.theta[k];
    out.log += d.logs[k].scaled(Cyclotomic(r));
  }
  return out;
}

namespace {

FracSeries image_series(const LinearImage& img, int n, const Cyclotomic& c, Degree bound) {
  return exp_monomial_series(ExpMonomial{img.phase, img.log, ambient_order(n)}, bound).scaled(c);
}

bool integral(const Rational& r) { return r.get_den() == 1; }

}  // namespace

FracSeries change_of_variables(const RatFunc& f, int n, Degree bound, bool negate_q) {
  auto xu = xu_vars(n);
  const int S = xu->scale();
  if (f.is_zero()) return FracSeries(xu, bound);
  long poles = 0;
  for (const auto& [m, k] : f.denominator())
    if (integral(cov_monomial(m, n, negate_q).phase)) poles += k;
  const Degree B = bound + static_cast<Degree>(poles) * S;

  FracSeries num(xu, B);
  for (const auto& [e, c] : f.numerator().terms()) num += image_series(cov_monomial(e, n, negate_q), n, c, B);

  FracSeries out = num;
  for (const auto& [m, k] : f.denominator()) {
    LinearImage img = cov_monomial(m, n, negate_q);
    FracSeries inv(xu);
    if (integral(img.phase)) {
      // 1/(1 - e^L) = -(1/L) sum_j B_j L^j / j!, L = c v a single monomial
      if (img.log.size() != 1) throw std::domain_error("pole at a non-monomial linear form");
      const auto& [v, c] = *img.log.terms().begin();
      const Degree dv = xu->degree(v);
      FracSeries s(xu, B + dv);
      Cyclotomic cp = 1;
      Rational fact = 1;
      Exponents p;
      for (int j = 0; static_cast<Degree>(j) * dv <= B + dv; ++j) {
        if (j > 0) {
          cp *= c;
          fact *= j;
          p += v;
        }
        s.add_term(p, cp * Cyclotomic(bernoulli(j) / fact));
      }
      inv = s.shifted(-v).scaled(-c.inverse());
    } else {
      FracSeries one_minus_img = FracSeries::constant(xu, 1, B) - image_series(img, n, 1, B);
      inv = series_inverse(one_minus_img, B);
    }
    for (int i = 0; i < k; ++i) out = mul(out, inv, B);
  }
  if (out.bound() < bound) throw std::logic_error("change of variables lost precision");
  return out.truncated(bound);
}

FracSeries E_series(int j, int n, Degree bound) {
  auto xu = xu_vars(n);
  FracSeries lin(xu);
  for (int i = 1; i < n; ++i) {
    Exponents xe;
    xe[i - 1] = xu->scale();
    lin.add_term(xe, -zeta(n, 2 * n, -i * (2 * j + 1)) * Cyclotomic(frac(1, n)));
  }
  return series_exp(lin, bound);
}

// ---- GW side ------------------------------------------------------------

Rational bernoulli(int k) {
  static std::mutex mu;
  static std::vector<Rational> b{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(b.size()) <= k) {
    const int m = static_cast<int>(b.size());
    // sum_{j<=m} C(m+1, j) B_j = 0
    Rational acc = 0;
    mpz_class binom = 1;
    for (int j = 0; j < m; ++j) {
      acc += Rational(binom) * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b.push_back(-acc / Rational(binom));
  }
  return b[k];
}

Rational fp_coefficient(int g) {
  mpz_class p2g, p2gm1, fact = 1;
  mpz_ui_pow_ui(p2g.get_mpz_t(), 2, 2 * g);
  for (int i = 2; i <= 2 * g; ++i) fact *= i;
  Rational r = Rational(2) * (Rational(p2g) / 2 - 1) * bernoulli(2 * g) / (Rational(p2g) * Rational(fact));
  return g % 2 ? r : Rational(-r);
}

namespace {

// sum_g c_g (d u)^{2g}
FracSeries fp_series(int d, int n, Degree bound) {
  auto xu = xu_vars(n);
  FracSeries s(xu, bound);
  Exponents ue;
  for (int g = 0; static_cast<Degree>(2 * g) * xu->scale() <= bound; ++g) {
    ue[n - 1] = 2 * g * xu->scale();
    mpz_class dp;
    mpz_ui_pow_ui(dp.get_mpz_t(), d, 2 * g);
    s.add_term(ue, Cyclotomic(fp_coefficient(g) * Rational(dp)));
  }
  return s;
}

Exponents u_power(int n, int k) {
  Exponents e;
  e[n - 1] = k * xu_vars(n)->scale();
  return e;
}

}  // namespace

FracSeries gw_one_leg(int d, bool plus_leg, int alpha, int n, Degree bound) {
  if (d < 1) throw std::invalid_argument("leg degree must be positive");
  auto xu = xu_vars(n);
  const Degree B = bound + xu->scale();
  FracSeries sum(xu, B);
  for (int j = 0; j < n; ++j) {
    FracSeries lin(xu);
    for (int i = 1; i < n; ++i) {
      Exponents xe;
      xe[i - 1] = xu->scale();
      Cyclotomic c = plus_leg ? -zeta(n, 2 * n, -i * (2 * j + 1)) : zeta(n, 2 * n, i * (2 * j + 1));
      lin.add_term(xe, c * Cyclotomic(frac(d, n)));
    }
    sum += series_exp(lin, B).scaled(zeta(n, n, static_cast<long>(j) * d));
  }
  Cyclotomic pre = sign(alpha == 1 ? 0 : d + 1) * imag(n) * zeta(n, 2 * n, d) * Cyclotomic(frac(1, d * d));
  return mul(sum, fp_series(d, n, B), B).shifted(u_power(n, -1)).scaled(pre).truncated(bound);
}

FracSeries gw_one_leg_direct(int d, bool plus_leg, int alpha, int n, Degree bound) {
  auto xu = xu_vars(n);
  const long D = bound >= 0 ? bound / xu->scale() : -1;
  FracSeries out(xu, bound);
  std::vector<int> m(n, 0);  // m[i], i = 1..n-1
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      long weighted = 0;
      for (int k = 1; k < n; ++k) weighted += static_cast<long>(k) * m[k];
      const long cond = plus_leg ? d - weighted : d + weighted;
      if (mod(cond, n) != 0) return;
      const long ns = plus_leg ? static_cast<long>(n) * used + d - weighted : d + weighted;
      Rational mfact = 1;
      Exponents xe;
      for (int k = 1; k < n; ++k) {
        for (int t = 2; t <= m[k]; ++t) mfact *= t;
        xe[k - 1] = m[k] * xu->scale();
      }
      for (int g = 0; 2 * g - 1 + used <= D; ++g) {
        // d^{2g-2+|m|} / n^{|m|-1}
        Rational c = fp_coefficient(g) / mfact;
        const int dp = 2 * g - 2 + used;
        for (int t = 0; t < std::abs(dp); ++t) c = dp > 0 ? Rational(c * d) : Rational(c / d);
        for (int t = 0; t < std::abs(used - 1); ++t) c = used > 1 ? Rational(c / n) : Rational(c * n);
        Cyclotomic v = sign(alpha == 1 ? 0 : d + 1) * imag(n) * zeta(n, 2 * n, ns) * Cyclotomic(c);
        Exponents e = xe;
        e[n - 1] = (2 * g - 1) * xu->scale();
        out.add_term(e, v);
      }
      return;
    }
    for (int k = 0; used + k - 1 <= D; ++k) {
      m[i] = k;
      rec(i + 1, used + k);
    }
    m[i] = 0;
  };
  rec(1, 0);
  return out;
}

Cyclotomic gw_two_leg(int d, Alpha alpha) {
  return sign(alpha.plus * alpha.minus == 1 ? 0 : d + 1) * Cyclotomic(frac(1, d));
}

FracSeries gw_sym_vertex_ws(const Partition& tau_plus, const Partition& tau_minus, Alpha alpha, int n,
                            Degree bound) {
  auto xu = xu_vars(n);
  const int parts = tau_plus.length() + tau_minus.length();
  const Degree B = bound + static_cast<Degree>(parts) * xu->scale();
  std::map<int, int> a, b;
  for (int p : tau_plus.parts()) ++a[p];
  for (int p : tau_minus.parts()) ++b[p];
  std::set<int> degs;
  for (auto [d, _] : a) degs.insert(d);
  for (auto [d, _] : b) degs.insert(d);
  FracSeries out = FracSeries::constant(xu, 1);
  for (int d : degs) {
    const int ad = a.count(d) ? a[d] : 0, bd = b.count(d) ? b[d] : 0;
    FracSeries A = ad ? gw_one_leg(d, true, alpha.plus, n, B) : FracSeries::constant(xu, 1);
    FracSeries Bm = bd ? gw_one_leg(d, false, alpha.minus, n, B) : FracSeries::constant(xu, 1);
    const Cyclotomic C = gw_two_leg(d, alpha);
    auto power_over_fact = [&](const FracSeries& s, int k) {
      FracSeries r = FracSeries::constant(xu, 1);
      Rational f = 1;
      for (int i = 1; i <= k; ++i) {
        r = mul(r, s, B);
        f *= i;
      }
      return r.scaled(Cyclotomic(1 / f));
    };
    FracSeries acc(xu, B);
    Cyclotomic ck = 1;
    Rational kf = 1;
    for (int k = 0; k <= std::min(ad, bd); ++k) {
      if (k > 0) {
        ck *= C;
        kf *= k;
      }
      acc += mul(power_over_fact(A, ad - k), power_over_fact(Bm, bd - k), B).scaled(ck * Cyclotomic(1 / kf));
    }
    out = mul(out, acc, B);
  }
  if (out.bound() < bound) throw std::logic_error("GW vertex lost precision");
  return out.truncated(bound);
}

FracSeries dt_sym_vertex_ws(const Partition& tau_plus, const Partition& tau_minus, Alpha alpha, int n, Degree bound,
                            bool negate_q) {
  auto vars = q_vars(n);
  const Rational zz = Rational(1) / (Rational(z_sym(tau_plus)) * Rational(z_sym(tau_minus)));
  RatFunc sum{FracSeries(vars)};
  for (const auto& rp : partitions_of(tau_plus.size()))
    for (const auto& rm : partitions_of(tau_minus.size())) {
      const long c = chi_sym(rp, tau_plus) * chi_sym(rm, tau_minus);
      if (c == 0) continue;
      sum += dt_vertex_framed(rp, rm, NPartition(n), alpha, Framing::symmetric(n)).scaled(Cyclotomic(c * zz));
    }
  return change_of_variables(sum, n, bound, negate_q);
}

// ---- framing, Hurwitz, central lemma ------------------------------------

namespace {

// the S_d central character, a rational number; kept field-free
Cyclotomic f_T_sym(const Partition& rho) {
  return central_chars(NPartition(std::vector<Partition>{rho})).f_T.rational();
}

FracSeries u_linear(int n, const Cyclotomic& c) {
  auto xu = xu_vars(n);
  Exponents ue;
  ue[n - 1] = xu->scale();
  return FracSeries::monomial(xu, ue, c);
}

FracSeries x_linear(int n, int i, const Cyclotomic& c) {
  auto xu = xu_vars(n);
  Exponents xe;
  xe[i - 1] = xu->scale();
  return FracSeries::monomial(xu, xe, c);
}

}  // namespace

FracSeries framing_prefactor_sym(const Partition& rho_plus, const Partition& rho_minus, Alpha alpha,
                                 const Framing& w, int n, Degree bound) {
  auto xu = xu_vars(n);
  FracSeries lin(xu);
  if (w.w3 != 0) {
    Cyclotomic c = Cyclotomic(alpha.plus) * f_T_sym(rho_plus) * Cyclotomic(ratio(w.w3, n * w.w1, "w3 / (n w1)")) +
                   Cyclotomic(alpha.minus) * f_T_sym(rho_minus) * Cyclotomic(ratio(w.w3, n * w.w2, "w3 / (n w2)"));
    lin = u_linear(n, -c * imag(n));
  }
  return series_exp(lin, bound);
}

FracSeries framing_monomial_sym(const Partition& rho_plus, const Partition& rho_minus, Alpha alpha,
                                const Framing& w, int n, Degree bound) {
  Exponents m;
  if (w.w3 != 0) {
    const Partition rp = alpha.plus == 1 ? rho_plus : rho_plus.transpose();
    const Partition rm = alpha.minus == 1 ? rho_minus : rho_minus.transpose();
    m += lattice_total(n, -rp.content_sum() * ratio(w.w3, n * w.w1, "w3 / (n w1)"));
    m += lattice_total(n, -rm.content_sum() * ratio(w.w3, n * w.w2, "w3 / (n w2)"));
  }
  return change_of_variables(RatFunc::monomial(q_vars(n), m), n, bound);
}

FracSeries framing_prefactor_asym(const Partition& rho, const NPartition& lambda, int alpha, const Framing& w,
                                  Degree bound) {
  const int n = lambda.n();
  auto xu = xu_vars(n);
  const Rational a = 1 - ratio(w.w3, n * w.w1, "w3 / (n w1)");
  const Rational b = frac(1, n) - ratio(w.w1, w.w3, "w1 / w3");
  FracSeries lin = u_linear(n, Cyclotomic(alpha) * f_T_sym(rho) * Cyclotomic(a) * imag(n));
  if (!lambda.empty()) {
    auto cc = central_chars(lambda);
    lin += u_linear(n, cc.f_T * imag(n) * Cyclotomic(b));
    for (int i = 1; i < n; ++i) lin += x_linear(n, i, cc.f[i] * zeta(n, 2 * n, -i) * Cyclotomic(b));
  }
  return series_exp(lin, bound);
}

FracSeries framing_monomial_asym(const Partition& rho, const NPartition& lambda, int alpha, const Framing& w,
                                 Degree bound) {
  const int n = lambda.n();
  const Partition r = alpha == 1 ? rho : rho.transpose();
  const Rational a = ratio(w.w3, n * w.w1, "w3 / (n w1)") - 1;
  const Rational e = ratio(n * w.w1, w.w3, "n w1 / w3") - 1;
  Exponents m = lattice_total(n, -r.content_sum() * a);
  Cyclotomic c = 1;
  if (!lambda.empty()) {
    c = lambda_root_power(lambda, e);
    for (auto [i, j] : n_quotient_inverse(lambda).boxes()) m += lattice_mono(n, j - i, frac(i - j, n) * e);
  }
  return change_of_variables(RatFunc::monomial(q_vars(n), m, c), n, bound);
}

FracSeries hurwitz_gen(const NPartition& nu, const NPartition& mu, const Rational& a, Degree bound) {
  const int n = nu.n();
  if (mu.n() != n) throw std::invalid_argument("hurwitz_gen: mismatched n");
  auto xu = xu_vars(n);
  FracSeries out(xu, bound);
  if (nu.size() != mu.size()) return out;
  const int d = nu.size();
  const Rational zz = Rational(1) / (Rational(z_wreath(mu)) * Rational(z_wreath(nu)));
  for (const auto& lam : npartitions_of(d, n)) {
    Cyclotomic w = chi_wreath(lam, mu) * chi_wreath(lam, nu) * Cyclotomic(zz);
    if (w.is_zero()) continue;
    auto cc = central_chars(lam);
    FracSeries lin = u_linear(n, cc.f_T * imag(n) * Cyclotomic(a));
    for (int i = 1; i < n; ++i) lin += x_linear(n, i, cc.f[i] * zeta(n, 2 * n, -i) * Cyclotomic(a));
    out += series_exp(lin, bound).scaled(w);
  }
  return out;
}

CentralCheck central_lemma_check(const NPartition& lambda) {
  const int n = lambda.n();
  auto cc = central_chars(lambda);
  CentralCheck r;
  r.lhs_phase = 0;
  r.lhs = u_linear(n, imag(n) * cc.f_T * Cyclotomic(frac(1, n)));
  for (int k = 1; k < n; ++k) r.lhs += x_linear(n, k, zeta(n, 2 * n, -k) * cc.f[k] * Cyclotomic(frac(1, n)));
  Exponents m;
  for (auto [i, j] : n_quotient_inverse(lambda).boxes()) m += qmono(n, j - i, frac(j - i, n));
  LinearImage img = cov_monomial(m, n);
  r.rhs_phase = -lambda_phase(lambda) + img.phase;
  r.rhs = img.log;
  r.pass = integral(r.rhs_phase - r.lhs_phase) && !first_mismatch(r.lhs, r.rhs, kExact - 1);
  return r;
}

Normalized normalize(const FracSeries& s) {
  Normalized out{Exponents{}, s};
  if (s.is_zero()) return out;
  const int nv = s.vars()->size();
  for (int i = 0; i < nv; ++i) {
    std::int32_t lo = 0;
    for (const auto& [e, c] : s.terms()) lo = std::min(lo, e[i]);
    out.prefactor[i] = lo;
  }
  out.series = s.shifted(-out.prefactor);
  return out;
}

}  // namespace loopvertex
