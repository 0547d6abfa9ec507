#include "loopvertex/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "loopvertex/serialize.hpp"

namespace loopvertex {

using json = nlohmann::ordered_json;

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

Cyclotomic xi(int n, long k) {
  const int L = ambient_order(n);
  return Cyclotomic::root_of_unity(L, n, mod(k, n));
}

json partition_json(const Partition& p) { return p.parts(); }
json npartition_json(const NPartition& l) {
  json a = json::array();
  for (const auto& c : l.components()) a.push_back(partition_json(c));
  return a;
}

Witness witness_from(const Mismatch& m, const VarSetPtr& vars) {
  FracSeries probe(vars);
  return {probe.monomial_to_string(m.exps), rational_to_string(frac(m.degree, vars->scale())), m.lhs.to_string(),
          m.rhs.to_string()};
}

// header of the case being evaluated on this thread, for error reports
thread_local CheckCase tl_current;
void begin(const CheckCase& c) { tl_current = CheckCase(c.identity, c.anchor, c.params); }

void set_result(CheckCase& c, const std::optional<Mismatch>& mm, const VarSetPtr& vars) {
  c.pass = !mm;
  if (mm) c.witness = witness_from(*mm, vars);
}

void set_value_result(CheckCase& c, const std::string& where, const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (c.witness) return;
  if (lhs == rhs) return;
  c.witness = Witness{where, "0/1", lhs.to_string(), rhs.to_string()};
}

Partition add_part(const Partition& p, int part) {
  std::vector<int> v = p.parts();
  v.push_back(part);
  std::sort(v.rbegin(), v.rend());
  return Partition(v);
}

Exponents q_frac_prefactor(int n) {
  Exponents e;
  for (int k = 1; k < n; ++k) e += qmono(n, k, frac(k, n));
  return e;
}

int sign_of(long k) { return k % 2 ? -1 : 1; }

// prod_k xi_n^{k|s_k|} chi_{s-bar}(n^{|s|}) / dim s
Cyclotomic strip_weight(const NPartition& s) {
  const int n = s.n();
  Cyclotomic c = 1;
  for (int k = 0; k < n; ++k) c *= xi(n, static_cast<long>(k) * s[k].size());
  const Partition sb = n_quotient_inverse(s);
  return c * Cyclotomic(frac(chi_sym(sb, Partition(std::vector<int>(s.size(), n))), dim_wreath(s)));
}

NPartition npartition_of_bar(const Partition& p, int n) {
  auto cq = n_quotient(p, n);
  if (!cq.core.empty()) throw std::logic_error("partition has a nonempty core");
  return cq.quotient;
}

std::vector<Partition> partitions_upto(int k) {
  std::vector<Partition> out;
  for (int s = 0; s <= k; ++s)
    for (auto& p : partitions_of(s)) out.push_back(p);
  return out;
}

std::vector<NPartition> npartitions_upto(int k, int n) {
  std::vector<NPartition> out;
  for (int s = 0; s <= k; ++s)
    for (auto& p : npartitions_of(s, n)) out.push_back(p);
  return out;
}

}  // namespace

json case_to_json(const CheckCase& c) {
  json j;
  j["identity"] = c.identity;
  j["anchor"] = c.anchor;
  j["params"] = c.params;
  j["pass"] = c.pass;
  if (c.witness) {
    j["witness"] = {{"monomial", c.witness->monomial},
                    {"degree", c.witness->degree},
                    {"lhs", c.witness->lhs},
                    {"rhs", c.witness->rhs}};
  } else {
    j["witness"] = nullptr;
  }
  j["note"] = c.note;
  return j;
}

CheckCase case_from_json(const json& j) {
  CheckCase c;
  c.identity = j.at("identity").get<std::string>();
  c.anchor = j.at("anchor").get<std::string>();
  c.params = j.at("params");
  c.pass = j.at("pass").get<bool>();
  if (!j.at("witness").is_null()) {
    const auto& w = j.at("witness");
    c.witness = Witness{w.at("monomial").get<std::string>(), w.at("degree").get<std::string>(),
                        w.at("lhs").get<std::string>(), w.at("rhs").get<std::string>()};
  }
  c.note = j.at("note").get<std::string>();
  return c;
}

// ---- loop Schur ------------------------------------------------------------

CheckCase check_loopschur_threeway(const NPartition& lambda, Degree qdegree) {
  const int n = lambda.n();
  const Partition bar = n_quotient_inverse(lambda);
  CheckCase c{"loop Schur: SSYT = hook-content = Jacobi-Trudi", "loop Schur function, hook-content lemma",
              {{"n", n}, {"lambda", npartition_json(lambda)}, {"lambda_bar", partition_json(bar)}, {"degree", qdegree}}};
  begin(c);
  auto vars = q_vars(n);
  const Degree B = qdeg(n, qdegree);
  FracSeries a = ssyt_loop_schur(bar, n, B);
  FracSeries b = hook_content_loop_schur(bar, n, B);
  const Exponents hat = hat_prefactor(bar, n);
  FracSeries jt = loop_jacobi_trudi(bar, n, bar.length(), B + vars->degree(hat)).shifted(-hat);
  auto m1 = first_mismatch(a, b, B);
  auto m2 = first_mismatch(a, jt, B);
  set_result(c, m1 ? m1 : m2, vars);
  if (m1) c.note = "SSYT vs hook-content";
  else if (m2) c.note = "SSYT vs Jacobi-Trudi";
  return c;
}

std::vector<CheckCase> check_det_forms(const Partition& sb, int n, int m, Degree qdegree) {
  std::vector<CheckCase> out;
  for (auto& f : det_forms_check(sb, n, m, qdeg(n, qdegree))) {
    CheckCase c{"determinantal form: " + f.name, "determinantal expressions of loop Schur functions",
                {{"n", n}, {"sigma_bar", partition_json(sb)}, {"m", m}, {"degree", qdegree}}};
    begin(c);
    c.pass = f.pass;
    if (f.witness) c.witness = witness_from(*f.witness, q_vars(n));
    c.note = f.note;
    out.push_back(std::move(c));
  }
  return out;
}

CheckCase check_finite_m_forms(const Partition& omega, const Partition& sb, int d, int n, int m, Degree qdegree) {
  CheckCase c{"column expansion = row expansion at finite m", "proof of the comb theorem, finite-m double sums",
              {{"n", n}, {"omega", partition_json(omega)}, {"sigma_bar", partition_json(sb)}, {"d", d}, {"m", m},
               {"degree", qdegree}}};
  begin(c);
  auto f = finite_m_forms(omega, sb, d, n, m);
  const Degree B = qdeg(n, qdegree);
  FracSeries l = f.left.expand(B), r = f.row_expanded.expand(B);
  auto mm = first_mismatch(l, r, B);
  set_result(c, mm, q_vars(n));
  // how far the two finite-m forms agree, in q-degree units
  c.note = "agree below q-degree " + (mm ? rational_to_string(frac(mm->degree, q_vars(n)->scale())) : std::string("bound"));
  return c;
}

CheckCase check_finite_m_stabilization(const Partition& omega, const Partition& sb, int d, int n,
                                        const std::vector<int>& ms, Degree qdegree) {
  CheckCase c{"finite-m forms stabilize as m grows", "proof of the comb theorem, large-m limit",
              {{"n", n}, {"omega", partition_json(omega)}, {"sigma_bar", partition_json(sb)}, {"d", d}, {"m", ms},
               {"degree", qdegree}}};
  begin(c);
  const Degree B = qdeg(n, qdegree);
  auto vars = q_vars(n);
  std::optional<Degree> prev;
  std::string seq;
  c.pass = true;
  for (int m : ms) {
    auto f = finite_m_forms(omega, sb, d, n, m);
    auto mm = first_mismatch(f.left.expand(B), f.row_expanded.expand(B), B);
    const Degree at = mm ? mm->degree : kExact;
    seq += (seq.empty() ? "" : ", ") + std::string("m=") + std::to_string(m) + ": " +
           (mm ? rational_to_string(frac(at, vars->scale())) : std::string("none"));
    if (prev && at <= *prev && at < kExact) {
      c.pass = false;
      if (!c.witness) c.witness = witness_from(*mm, vars);
    }
    prev = at;
  }
  c.note = "first disagreement " + seq;
  return c;
}

// ---- comb theorem and the reduction identity --------------------------------

CheckCase check_thm_comb(const Partition& omega, const NPartition& sigma, int d) {
  const int n = sigma.n();
  const Partition sb = n_quotient_inverse(sigma);
  CheckCase c{"comb theorem", "comb theorem, lambda-sum over |lambda| = |sigma| + d",
              {{"n", n}, {"omega", partition_json(omega)}, {"sigma", npartition_json(sigma)}, {"d", d}}};
  begin(c);
  auto vars = q_vars(n);
  RatFunc lhs{FracSeries(vars)}, rhs{FracSeries(vars)};
  for (const auto& st : add_border_strips(omega, d))
    lhs += bar(shat_frak(st.result, sb, n), n).scaled(sign_of(st.height));
  lhs = loop_schur_hat_ratfunc(sb, n) * lhs;
  for (const auto& st : add_border_strips(sb, n * d))
    rhs += (loop_schur_hat_ratfunc(st.result, n) * bar(shat_frak(omega, st.result, n), n)).scaled(sign_of(st.height));
  rhs = rhs.shifted(q_frac_prefactor(n).times(d));
  set_result(c, lhs.mismatch(rhs), vars);
  c.note = "exact; lambda-sum over |lambda| = |sigma| + d (the theorem display's |sigma| + n read as a typo)";
  return c;
}

namespace {

struct ReductionSides {
  RatFunc left, right;
};

// left: sum chi_rho(tau + d) c_s(mu) s^_s bar s^_{rho^a}(fq_{.-s})
// right: Q^d sum chi_rho(tau) c_l(mu + d) s^_l bar s^_{rho^a}(fq_{.-l})
ReductionSides reduction_sides(const Partition& tau, const NPartition& mu, int d, int alpha) {
  const int n = mu.n();
  auto vars = q_vars(n);
  ReductionSides r{RatFunc{FracSeries(vars)}, RatFunc{FracSeries(vars)}};
  const Partition taud = add_part(tau, d);
  const NPartition mud = mu.with_part(d, d);
  auto term = [&](const Partition& rho, const NPartition& s, const Cyclotomic& w) {
    const Partition sb = n_quotient_inverse(s);
    const Partition ra = alpha == 1 ? rho : rho.transpose();
    return (loop_schur_hat_ratfunc(sb, n) * bar(shat_frak(ra, sb, n), n)).scaled(w);
  };
  for (const auto& rho : partitions_of(taud.size())) {
    const long x = chi_sym(rho, taud);
    if (x == 0) continue;
    for (const auto& s : npartitions_of(mu.size(), n)) {
      Cyclotomic w = strip_weight(s) * chi_wreath(s, mu) * Cyclotomic(x);
      if (!w.is_zero()) r.left += term(rho, s, w);
    }
  }
  for (const auto& rho : partitions_of(tau.size())) {
    const long x = chi_sym(rho, tau);
    if (x == 0) continue;
    for (const auto& l : npartitions_of(mud.size(), n)) {
      Cyclotomic w = strip_weight(l) * chi_wreath(l, mud) * Cyclotomic(x);
      if (!w.is_zero()) r.right += term(rho, l, w);
    }
  }
  r.right = r.right.shifted(q_frac_prefactor(n).times(d));
  return r;
}

int sym_sign(const Partition& tau) { return sign_of(tau.size() - tau.length()); }

}  // namespace

CheckCase check_reduction(const Partition& tau, const NPartition& mu, int d, int alpha) {
  const int n = mu.n();
  CheckCase c{"reduction identity", "asymmetric reduction identity, derived from the comb theorem",
              {{"n", n}, {"tau", partition_json(tau)}, {"mu", npartition_json(mu)}, {"d", d}, {"alpha", alpha}}};
  begin(c);
  auto s = reduction_sides(tau, mu, d, alpha);
  RatFunc rhs = s.right.scaled(alpha == 1 ? 1 : sign_of(d + 1));
  set_result(c, s.left.mismatch(rhs), q_vars(n));
  c.note = "L = alpha^{d+1} R, exact rational functions";
  return c;
}

CheckCase check_reduction_flip(const Partition& tau, const NPartition& mu, int d) {
  const int n = mu.n();
  CheckCase c{"reduction identity: alpha = -1 via chi_{rho'} sign flip",
              "asymmetric reduction identity, transpose sign of S_d characters",
              {{"n", n}, {"tau", partition_json(tau)}, {"mu", npartition_json(mu)}, {"d", d}}};
  begin(c);
  auto plus = reduction_sides(tau, mu, d, 1);
  auto minus = reduction_sides(tau, mu, d, -1);
  auto m1 = minus.left.mismatch(plus.left.scaled(sym_sign(add_part(tau, d))));
  auto m2 = minus.right.mismatch(plus.right.scaled(sym_sign(tau)));
  set_result(c, m1 ? m1 : m2, q_vars(n));
  c.note = m1 ? "left side" : m2 ? "right side" : "direct alpha = -1 evaluation matches the flipped alpha = +1 sums";
  return c;
}

// ---- GW/DT ----------------------------------------------------------------

CheckCase check_sym_correspondence(const Partition& tp, const Partition& tm, Alpha alpha, int n, Degree xudegree,
                                   bool negate_q) {
  CheckCase c{"symmetric correspondence at w_s", "GW/DT correspondence, symmetric two-leg case",
              {{"n", n},
               {"tau_plus", partition_json(tp)},
               {"tau_minus", partition_json(tm)},
               {"alpha", {alpha.plus, alpha.minus}},
               {"degree", xudegree},
               {"negate_q", negate_q}}};
  begin(c);
  const Degree B = qdeg(n, xudegree);
  FracSeries gw = gw_sym_vertex_ws(tp, tm, alpha, n, B);
  FracSeries dt = dt_sym_vertex_ws(tp, tm, alpha, n, B, negate_q);
  set_result(c, first_mismatch(gw, dt, B), xu_vars(n));
  return c;
}

CheckCase check_gw_symmetry(const Partition& tp, const Partition& tm, Alpha alpha, int n, Degree xudegree) {
  CheckCase c{"GW vertex symmetry at w_s", "symmetry of the framed vertex under swapping legs",
              {{"n", n},
               {"tau_plus", partition_json(tp)},
               {"tau_minus", partition_json(tm)},
               {"alpha", {alpha.plus, alpha.minus}},
               {"degree", xudegree}}};
  begin(c);
  const Degree B = qdeg(n, xudegree);
  std::vector<int> perm(n);
  for (int i = 0; i + 1 < n; ++i) perm[i] = n - 2 - i;
  perm[n - 1] = n - 1;
  FracSeries lhs = gw_sym_vertex_ws(tp, tm, alpha, n, B);
  FracSeries rhs = gw_sym_vertex_ws(tm, tp, alpha.swapped(), n, B).permuted(perm);
  set_result(c, first_mismatch(lhs, rhs, B), xu_vars(n));
  return c;
}

CheckCase check_dt_symmetry(const Partition& rp, const Partition& rm, const NPartition& lambda, Alpha alpha,
                            const Framing& w) {
  const int n = lambda.n();
  CheckCase c{"DT vertex symmetry", "symmetry of the framed DT vertex under bar and swapping legs",
              {{"n", n},
               {"rho_plus", partition_json(rp)},
               {"rho_minus", partition_json(rm)},
               {"lambda", npartition_json(lambda)},
               {"alpha", {alpha.plus, alpha.minus}},
               {"w", w.to_string()}}};
  begin(c);
  NPartition lt = npartition_of_bar(n_quotient_inverse(lambda).transpose(), n);
  RatFunc lhs = dt_vertex_framed(rp, rm, lambda, alpha, w);
  RatFunc rhs = bar(dt_vertex_framed(rm, rp, lt, alpha.swapped(), w.swapped()), n);
  set_result(c, lhs.mismatch(rhs), q_vars(n));
  return c;
}

// ---- characters -------------------------------------------------------------

CheckCase check_sym_orthogonality(int d) {
  CheckCase c{"S_d orthogonality", "orthogonality of characters", {{"d", d}}};
  begin(c);
  auto ps = partitions_of(d);
  for (const auto& a : ps)
    for (const auto& b : ps) {
      Rational row = 0, col = 0;
      for (const auto& mu : ps) row += Rational(chi_sym(a, mu) * chi_sym(b, mu)) / Rational(z_sym(mu));
      for (const auto& l : ps) col += Rational(chi_sym(l, a) * chi_sym(l, b));
      set_value_result(c, "row " + a.to_string() + "," + b.to_string(), row, a == b ? 1 : 0);
      set_value_result(c, "column " + a.to_string() + "," + b.to_string(), col,
                       a == b ? Rational(z_sym(a)) : Rational(0));
    }
  c.pass = !c.witness;
  return c;
}

CheckCase check_wreath_orthogonality(int n, int d) {
  CheckCase c{"wreath orthogonality", "orthogonality of Z_n wr S_d characters", {{"n", n}, {"d", d}}};
  begin(c);
  const auto& t = char_table(n, d);
  const std::size_t k = t.irreps.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Cyclotomic row = 0, col = 0;
      for (std::size_t m = 0; m < k; ++m)
        row += t.values[a][m] * t.values[b][m].conj() * Cyclotomic(Rational(1) / Rational(z_wreath(t.classes[m])));
      for (std::size_t l = 0; l < k; ++l) col += t.values[l][a] * t.values[l][b].conj();
      set_value_result(c, "row " + t.irreps[a].to_string() + "," + t.irreps[b].to_string(), row, a == b ? 1 : 0);
      set_value_result(c, "column " + t.classes[a].to_string() + "," + t.classes[b].to_string(), col,
                       a == b ? Cyclotomic(z_wreath(t.classes[a])) : Cyclotomic(0));
    }
  c.pass = !c.witness;
  return c;
}

CheckCase check_conjugation_rule(int n, int d) {
  CheckCase c{"conjugation rule chi_{l'}(-mu)", "transpose of the quotient and opposite twistings",
              {{"n", n}, {"d", d}}};
  begin(c);
  for (const auto& l : npartitions_of(d, n)) {
    const NPartition lt = npartition_of_bar(n_quotient_inverse(l).transpose(), n);
    for (const auto& mu : npartitions_of(d, n)) {
      Cyclotomic w = sign_of(mu.size() + mu.length());
      for (int i = 0; i < n; ++i) w *= xi(n, -static_cast<long>(i) * mu[i].length());
      set_value_result(c, "lambda=" + l.to_string() + " mu=" + mu.to_string(), chi_wreath(lt, mu.negate()),
                       w * chi_wreath(l, mu));
    }
  }
  c.pass = !c.witness;
  return c;
}

CheckCase check_twist_rule(int n, int d) {
  CheckCase c{"twist rule", "regluing identity for twisted classes", {{"n", n}, {"d", d}}};
  begin(c);
  for (int k = 0; k < n; ++k)
    for (const auto& l : npartitions_of(d, n)) {
      long s = 0;
      for (int i = 0; i < n; ++i) s += static_cast<long>(i) * l[i].size();
      for (const auto& mu : npartitions_of(d, n)) {
        // part mu^i_j moves to component mu^i_j k - i
        NPartition tw(n);
        for (int i = 0; i < n; ++i)
          for (int p : mu[i].parts()) tw = tw.with_part(static_cast<int>(mod(static_cast<long>(p) * k - i, n)), p);
        set_value_result(c, "k=" + std::to_string(k) + " lambda=" + l.to_string() + " mu=" + mu.to_string(),
                         chi_wreath(l, tw), xi(n, -k * s) * chi_wreath(l, mu).conj());
      }
    }
  c.pass = !c.witness;
  return c;
}

CheckCase check_strip_expansion(const NPartition& lambda, const NPartition& mu, int d) {
  const int n = lambda.n();
  CheckCase c{"wreath strip expansion", "strip expansion of the weighted wreath characters",
              {{"n", n}, {"lambda", npartition_json(lambda)}, {"mu", npartition_json(mu)}, {"d", d}}};
  begin(c);
  Cyclotomic lhs = strip_weight(lambda) * chi_wreath(lambda, mu.with_part(d, d));
  Cyclotomic rhs = 0;
  for (const auto& st : remove_border_strips(n_quotient_inverse(lambda), n * d)) {
    NPartition s = npartition_of_bar(st.result, n);
    rhs += Cyclotomic(sign_of(st.height)) * strip_weight(s) * chi_wreath(s, mu);
  }
  set_value_result(c, "value", lhs, rhs);
  c.pass = !c.witness;
  return c;
}

// ---- framing, Hurwitz, central lemma, FP -------------------------------------

CheckCase check_framing_sym(const Partition& rp, const Partition& rm, Alpha alpha, const Framing& w, int n,
                            Degree xudegree) {
  CheckCase c{"symmetric framing prefactor", "framing dependence, symmetric two-leg vertex",
              {{"n", n},
               {"rho_plus", partition_json(rp)},
               {"rho_minus", partition_json(rm)},
               {"alpha", {alpha.plus, alpha.minus}},
               {"w", w.to_string()},
               {"degree", xudegree}}};
  begin(c);
  const Degree B = qdeg(n, xudegree);
  set_result(c, first_mismatch(framing_prefactor_sym(rp, rm, alpha, w, n, B), framing_monomial_sym(rp, rm, alpha, w, n, B), B),
             xu_vars(n));
  return c;
}

CheckCase check_framing_asym(const Partition& rho, const NPartition& lambda, int alpha, const Framing& w,
                             Degree xudegree) {
  const int n = lambda.n();
  CheckCase c{"asymmetric framing prefactor", "framing dependence, asymmetric two-leg vertex",
              {{"n", n},
               {"rho", partition_json(rho)},
               {"lambda", npartition_json(lambda)},
               {"alpha", alpha},
               {"w", w.to_string()},
               {"degree", xudegree}}};
  begin(c);
  const Degree B = qdeg(n, xudegree);
  set_result(c, first_mismatch(framing_prefactor_asym(rho, lambda, alpha, w, B), framing_monomial_asym(rho, lambda, alpha, w, B), B),
             xu_vars(n));
  return c;
}

CheckCase check_hurwitz(int n, int d, Degree xudegree) {
  CheckCase c{"wreath Hurwitz orthogonality and composition", "Burnside formula and orthogonality relations",
              {{"n", n}, {"d", d}, {"degree", xudegree}}};
  begin(c);
  const Degree B = qdeg(n, xudegree);
  auto vars = xu_vars(n);
  auto classes = npartitions_of(d, n);
  const Rational a = frac(1, 2), b = 2;
  std::map<std::pair<std::size_t, std::size_t>, FracSeries> ha, hb;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j) {
      FracSeries h0 = hurwitz_gen(classes[i], classes[j].negate(), 0, B);
      FracSeries want(vars, B);
      if (i == j) want.add_term(Exponents{}, Cyclotomic(Rational(1) / Rational(z_wreath(classes[j]))));
      auto mm = first_mismatch(h0, want, B);
      if (mm && !c.witness) {
        c.witness = witness_from(*mm, vars);
        c.note = "orthogonality at nu=" + classes[i].to_string() + " mu=" + classes[j].to_string();
      }
      ha[{i, j}] = hurwitz_gen(classes[i], classes[j], a, B);
      hb[{i, j}] = hurwitz_gen(classes[i], classes[j], b, B);
    }
  std::map<NPartition, std::size_t> index;
  for (std::size_t i = 0; i < classes.size(); ++i) index[classes[i]] = i;
  for (std::size_t i = 0; i < classes.size() && !c.witness; ++i)
    for (std::size_t j = 0; j < classes.size() && !c.witness; ++j) {
      FracSeries sum(vars, B);
      for (std::size_t s = 0; s < classes.size(); ++s)
        sum += mul(ha[{i, s}], hb[{index.at(classes[s].negate()), j}], B).scaled(Cyclotomic(z_wreath(classes[s])));
      auto mm = first_mismatch(sum, hurwitz_gen(classes[i], classes[j], a + b, B), B);
      if (mm) {
        c.witness = witness_from(*mm, vars);
        c.note = "composition at nu=" + classes[i].to_string() + " mu=" + classes[j].to_string();
      }
    }
  c.pass = !c.witness;
  return c;
}

CheckCase check_central(const NPartition& lambda) {
  const int n = lambda.n();
  CheckCase c{"central character lemma", "central character lemma, exact linear forms",
              {{"n", n}, {"lambda", npartition_json(lambda)}}};
  begin(c);
  auto r = central_lemma_check(lambda);
  c.pass = r.pass;
  c.note = "phases " + rational_to_string(r.lhs_phase) + " and " + rational_to_string(r.rhs_phase);
  if (!r.pass) {
    auto mm = first_mismatch(r.lhs, r.rhs, kExact - 1);
    if (mm) c.witness = witness_from(*mm, xu_vars(n));
    else c.witness = Witness{"1", "0/1", rational_to_string(r.lhs_phase), rational_to_string(r.rhs_phase)};
  }
  return c;
}

CheckCase check_fp_coefficients(int terms) {
  CheckCase c{"Faber-Pandharipande coefficients", "(t/2)csc(t/2) expansion", {{"terms", terms}}};
  begin(c);
  // invert sin(t/2)/(t/2) = sum (-1)^k (t/2)^{2k} / (2k+1)! directly
  std::vector<Rational> s(terms), inv(terms);
  Rational f = 1, p = 1;
  for (int k = 0; k < terms; ++k) {
    if (k > 0) {
      f *= (2 * k) * (2 * k + 1);
      p /= 4;
    }
    s[k] = sign_of(k) * p / f;
  }
  for (int k = 0; k < terms; ++k) {
    Rational acc = k == 0 ? Rational(1) : Rational(0);
    for (int j = 1; j <= k; ++j) acc -= s[j] * inv[k - j];
    inv[k] = acc;
  }
  for (int g = 0; g < terms; ++g)
    set_value_result(c, "t^" + std::to_string(2 * g), fp_coefficient(g), inv[g]);
  if (terms > 2) {
    set_value_result(c, "t^2 literal", fp_coefficient(1), frac(1, 24));
    set_value_result(c, "t^4 literal", fp_coefficient(2), frac(7, 5760));
  }
  c.pass = !c.witness;
  return c;
}

// ---- suites ---------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"loopschur", "det-forms",   "thm-comb",    "reduction",
                                                 "sym-corr",  "characters",  "framing",     "hurwitz",
                                                 "gw-symmetry", "dt-symmetry", "fp"};
  return names;
}

json default_config() {
  json j;
  j["loopschur"] = {{"n", {1, 2, 3}}, {"max_size", 8}, {"degree", 10}};
  j["det-forms"] = {{"n", {1, 2, 3}}, {"max_size", 4}, {"max_m", 4}, {"degree", 6},
                    {"finite_m_d", {1}}, {"finite_m_max_omega", 1}};
  j["thm-comb"] = {{"n", {1, 2, 3}}, {"d", {1, 2}}, {"max_omega", 2}, {"max_sigma", 2}};
  j["reduction"] = {{"n", {1, 2, 3}}, {"d", {1, 2}}, {"max_tau", 1}, {"max_mu", 1}};
  j["sym-corr"] = {{"n", {1, 2, 3}}, {"max_tau", 3}, {"degree", 5}, {"negate_q", {false}}};
  j["characters"] = {{"max_sym_d", 6}, {"n", {1, 2, 3}}, {"max_wreath_d", 4}, {"max_strip_mu", 2}, {"strip_d", {1}}};
  j["framing"] = {{"n", {1, 2, 3}}, {"max_rho", 3}, {"max_lambda", 2}, {"degree", 5}};
  j["hurwitz"] = {{"n", {1, 2, 3}}, {"max_d", 3}, {"degree", 3}, {"central_n", {1, 2, 3, 4}}, {"central_max", 3}};
  j["gw-symmetry"] = {{"n", {1, 2, 3}}, {"max_tau", 3}, {"degree", 5}};
  j["dt-symmetry"] = {{"n", {1, 2, 3}}, {"max_rho", 2}, {"max_lambda", 2}};
  j["fp"] = {{"terms", 8}};
  return j;
}

namespace {

using Task = std::function<std::vector<CheckCase>()>;

struct Params {
  const json& j;
  const std::string& suite;
  std::set<std::string> used;

  int get_int(const std::string& k) {
    used.insert(k);
    const auto& v = j.at(k);
    if (!v.is_number_integer()) throw ConfigError(suite + "." + k + " must be an integer");
    return v.get<int>();
  }
  std::vector<int> get_ints(const std::string& k) {
    used.insert(k);
    const auto& v = j.at(k);
    if (!v.is_array()) throw ConfigError(suite + "." + k + " must be an array of integers");
    std::vector<int> out;
    for (const auto& x : v) {
      if (!x.is_number_integer()) throw ConfigError(suite + "." + k + " must be an array of integers");
      out.push_back(x.get<int>());
    }
    return out;
  }
  std::vector<bool> get_bools(const std::string& k) {
    used.insert(k);
    const auto& v = j.at(k);
    if (!v.is_array()) throw ConfigError(suite + "." + k + " must be an array of booleans");
    std::vector<bool> out;
    for (const auto& x : v) {
      if (!x.is_boolean()) throw ConfigError(suite + "." + k + " must be an array of booleans");
      out.push_back(x.get<bool>());
    }
    return out;
  }
  std::vector<int> get_ns(const std::string& k) {
    auto v = get_ints(k);
    for (int n : v)
      if (n < 1 || n > kMaxVars) throw ConfigError(suite + "." + k + " entries must lie in [1, " + std::to_string(kMaxVars) + "]");
    return v;
  }
  void finish() {
    for (const auto& [k, _] : j.items())
      if (!used.count(k)) throw ConfigError("unknown key " + suite + "." + k);
  }
};

json merged(const std::string& suite, const json& config) {
  json base = default_config().at(suite);
  if (!config.contains(suite)) return base;
  const auto& over = config.at(suite);
  if (!over.is_object()) throw ConfigError(suite + " must be an object");
  for (const auto& [k, v] : over.items()) {
    if (!base.contains(k)) throw ConfigError("unknown key " + suite + "." + k);
    base[k] = v;
  }
  return base;
}

template <class F>
Task one(F f) {
  return [f]() { return std::vector<CheckCase>{f()}; };
}

std::vector<Task> tasks_for(const std::string& suite, const json& config) {
  json cfg = merged(suite, config);
  Params p{cfg, suite, {}};
  std::vector<Task> t;
  if (suite == "loopschur") {
    auto ns = p.get_ns("n");
    int maxs = p.get_int("max_size");
    int deg = p.get_int("degree");
    for (int n : ns)
      for (int k = 0; n * k <= maxs; ++k)
        for (const auto& l : npartitions_of(k, n)) t.push_back(one([=] { return check_loopschur_threeway(l, deg); }));
  } else if (suite == "det-forms") {
    auto ns = p.get_ns("n");
    int maxs = p.get_int("max_size"), maxm = p.get_int("max_m"), deg = p.get_int("degree");
    auto ds = p.get_ints("finite_m_d");
    int maxo = p.get_int("finite_m_max_omega");
    for (int n : ns)
      for (int k = 0; n * k <= maxs; ++k)
        for (const auto& s : npartitions_of(k, n)) {
          const Partition sb = n_quotient_inverse(s);
          for (int m = n; m <= maxm; m += n) {
            if (m < sb.length()) continue;
            t.push_back([=] { return check_det_forms(sb, n, m, deg); });
            for (int d : ds)
              for (const auto& om : partitions_upto(maxo))
                if (m >= om.length()) t.push_back(one([=] { return check_finite_m_forms(om, sb, d, n, m, deg); }));
          }
          std::vector<int> ms;
          for (int m = n; m <= maxm; m += n)
            if (m >= sb.length()) ms.push_back(m);
          if (ms.size() >= 2)
            for (int d : ds)
              for (const auto& om : partitions_upto(maxo))
                if (ms.front() >= om.length())
                  t.push_back(one([=] { return check_finite_m_stabilization(om, sb, d, n, ms, deg); }));
        }
  } else if (suite == "thm-comb") {
    auto ns = p.get_ns("n");
    auto ds = p.get_ints("d");
    int mo = p.get_int("max_omega"), ms = p.get_int("max_sigma");
    for (int n : ns)
      for (int d : ds)
        for (const auto& om : partitions_upto(mo))
          for (const auto& s : npartitions_upto(ms, n)) t.push_back(one([=] { return check_thm_comb(om, s, d); }));
  } else if (suite == "reduction") {
    auto ns = p.get_ns("n");
    auto ds = p.get_ints("d");
    int mt = p.get_int("max_tau"), mm = p.get_int("max_mu");
    for (int n : ns)
      for (int d : ds)
        for (const auto& tau : partitions_upto(mt))
          for (const auto& mu : npartitions_upto(mm, n)) {
            for (int a : {1, -1}) t.push_back(one([=] { return check_reduction(tau, mu, d, a); }));
            t.push_back(one([=] { return check_reduction_flip(tau, mu, d); }));
          }
  } else if (suite == "sym-corr") {
    auto ns = p.get_ns("n");
    int mt = p.get_int("max_tau"), deg = p.get_int("degree");
    auto neg = p.get_bools("negate_q");
    for (bool ng : neg)
      for (int n : ns)
        for (const auto& tp : partitions_upto(mt))
          for (const auto& tm : partitions_upto(mt))
            for (Alpha a : {Alpha{1, 1}, Alpha{1, -1}, Alpha{-1, 1}, Alpha{-1, -1}})
              t.push_back(one([=] { return check_sym_correspondence(tp, tm, a, n, deg, ng); }));
  } else if (suite == "characters") {
    int msd = p.get_int("max_sym_d");
    auto ns = p.get_ns("n");
    int mwd = p.get_int("max_wreath_d"), msm = p.get_int("max_strip_mu");
    auto sds = p.get_ints("strip_d");
    for (int d = 1; d <= msd; ++d) t.push_back(one([=] { return check_sym_orthogonality(d); }));
    for (int n : ns)
      for (int d = 1; d <= mwd; ++d) {
        t.push_back(one([=] { return check_wreath_orthogonality(n, d); }));
        t.push_back(one([=] { return check_conjugation_rule(n, d); }));
        t.push_back(one([=] { return check_twist_rule(n, d); }));
      }
    for (int n : ns)
      for (int d : sds)
        for (const auto& mu : npartitions_upto(msm, n))
          for (const auto& l : npartitions_of(mu.size() + d, n))
            t.push_back(one([=] { return check_strip_expansion(l, mu, d); }));
  } else if (suite == "framing") {
    auto ns = p.get_ns("n");
    int mr = p.get_int("max_rho"), ml = p.get_int("max_lambda"), deg = p.get_int("degree");
    for (int n : ns) {
      const std::vector<Framing> sym = {Framing{1, -2, 1}, Framing{-1, -1, 2}, Framing{2, -1, -1}};
      const std::vector<Framing> asym = {Framing{1, -1 - n, n}, Framing{1, n - 1, -n}, Framing{2, -2 - n, n}};
      for (const auto& w : sym)
        for (const auto& rp : partitions_upto(mr))
          for (const auto& rm : partitions_upto(mr))
            for (Alpha a : {Alpha{1, 1}, Alpha{1, -1}, Alpha{-1, 1}, Alpha{-1, -1}})
              t.push_back(one([=] { return check_framing_sym(rp, rm, a, w, n, deg); }));
      for (const auto& w : asym)
        for (const auto& rho : partitions_upto(mr))
          for (const auto& l : npartitions_upto(ml, n))
            for (int a : {1, -1}) t.push_back(one([=] { return check_framing_asym(rho, l, a, w, deg); }));
    }
  } else if (suite == "hurwitz") {
    auto ns = p.get_ns("n");
    int md = p.get_int("max_d"), deg = p.get_int("degree");
    auto cns = p.get_ns("central_n");
    int cm = p.get_int("central_max");
    for (int n : ns)
      for (int d = 0; d <= md; ++d) t.push_back(one([=] { return check_hurwitz(n, d, deg); }));
    for (int n : cns)
      for (const auto& l : npartitions_upto(cm, n)) t.push_back(one([=] { return check_central(l); }));
  } else if (suite == "gw-symmetry") {
    auto ns = p.get_ns("n");
    int mt = p.get_int("max_tau"), deg = p.get_int("degree");
    for (int n : ns)
      for (const auto& tp : partitions_upto(mt))
        for (const auto& tm : partitions_upto(mt))
          for (Alpha a : {Alpha{1, 1}, Alpha{1, -1}, Alpha{-1, -1}})
            t.push_back(one([=] { return check_gw_symmetry(tp, tm, a, n, deg); }));
  } else if (suite == "dt-symmetry") {
    auto ns = p.get_ns("n");
    int mr = p.get_int("max_rho"), ml = p.get_int("max_lambda");
    for (int n : ns)
      for (const auto& w : {Framing{1, -2, 1}, Framing{-2, 1, 1}, Framing{2, -1, -1}})
        for (const auto& l : npartitions_upto(ml, n))
          for (const auto& rp : partitions_upto(mr))
            for (const auto& rm : partitions_upto(mr))
              for (Alpha a : {Alpha{1, 1}, Alpha{1, -1}, Alpha{-1, -1}})
                t.push_back(one([=] { return check_dt_symmetry(rp, rm, l, a, w); }));
  } else if (suite == "fp") {
    int terms = p.get_int("terms");
    if (terms < 1) throw ConfigError("fp.terms must be positive");
    t.push_back(one([=] { return check_fp_coefficients(terms); }));
  } else {
    throw ConfigError("unknown suite " + suite);
  }
  p.finish();
  return t;
}

// the report collector: cases land in task order whatever the schedule
class Collector {
 public:
  explicit Collector(std::size_t n) : slots_(n) {}
  void put(std::size_t i, std::vector<CheckCase> cs) {
    std::lock_guard<std::mutex> lock(mu_);
    slots_[i] = std::move(cs);
  }
  std::vector<CheckCase> take() {
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<CheckCase> out;
    for (auto& s : slots_)
      for (auto& c : s) out.push_back(std::move(c));
    return out;
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<CheckCase>> slots_;
};

}  // namespace

bool Report::pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CheckCase& c) { return !c.pass; }));
}

json Report::to_json() const {
  json j;
  j["suites"] = suites;
  j["summary"] = {{"cases", cases.size()}, {"failures", failures()}, {"pass", pass()}};
  json arr = json::array();
  for (const auto& c : cases) arr.push_back(case_to_json(c));
  j["cases"] = arr;
  return j;
}

Report Report::from_json(const json& j) {
  Report r;
  r.suites = j.at("suites").get<std::vector<std::string>>();
  for (const auto& c : j.at("cases")) r.cases.push_back(case_from_json(c));
  return r;
}

std::string Report::summary() const {
  std::map<std::string, std::pair<int, int>> by;  // identity -> (cases, failures)
  std::vector<std::string> order;
  for (const auto& c : cases) {
    if (!by.count(c.identity)) order.push_back(c.identity);
    auto& e = by[c.identity];
    ++e.first;
    if (!c.pass) ++e.second;
  }
  std::ostringstream os;
  for (const auto& id : order) {
    auto [n, f] = by[id];
    os << (f ? "FAIL " : "ok   ") << id << ": " << (n - f) << "/" << n << " pass\n";
  }
  for (const auto& c : cases)
    if (!c.pass) {
      os << "  failed: " << c.identity << " " << c.params.dump();
      if (c.witness) os << " at " << c.witness->monomial << " (" << c.witness->lhs << " vs " << c.witness->rhs << ")";
      if (!c.note.empty()) os << " [" << c.note << "]";
      os << "\n";
    }
  os << cases.size() - failures() << "/" << cases.size() << " cases pass\n";
  return os.str();
}

Report run_suite(const std::string& suite, const json& config, int threads) {
  if (!config.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [k, _] : config.items())
    if (std::find(suite_names().begin(), suite_names().end(), k) == suite_names().end())
      throw ConfigError("unknown suite in config: " + k);
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw ConfigError("unknown suite " + suite);
  // only suites the config lists are run
  Report r;
  for (const auto& s : suite_names())
    if ((suite == "all" || suite == s) && config.contains(s)) r.suites.push_back(s);
  std::vector<Task> tasks;
  for (const auto& s : r.suites)
    for (auto& t : tasks_for(s, config)) tasks.push_back(std::move(t));

  Collector col(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      tl_current = CheckCase("evaluation error", "", json::object());
      try {
        col.put(i, tasks[i]());
      } catch (const std::exception& e) {
        CheckCase c = tl_current;
        c.pass = false;
        c.note = std::string("evaluation error: ") + e.what();
        col.put(i, {c});
      }
    }
  };
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  r.cases = col.take();
  return r;
}

}  // namespace loopvertex
