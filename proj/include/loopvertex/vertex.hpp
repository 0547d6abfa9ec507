#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopvertex/characters.hpp"
#include "loopvertex/loopschur.hpp"
#include "loopvertex/ratfunc.hpp"

namespace loopvertex {

// ---- q side -------------------------------------------------------------

// frak q_t: q_1...q_t for t >= 0, (q_{t+1}...q_0)^{-1} for t < 0
Exponents frakq(int n, long t);

// head monomials followed by frak q_t for every t >= tail_start
struct Alphabet {
  std::vector<Exponents> head;
  long tail_start = 0;
};
// frak q_{. - lambda}: frak q_{i-1-bar_i}, i = 1, 2, ...
Alphabet shifted_alphabet(const Partition& bar, int n);

// q_i <-> q_{-i}
Exponents bar_exps(const Exponents& e, int n);
RatFunc bar(const RatFunc& f, int n);

// every partition between inner and outer
std::vector<Partition> partitions_between(const Partition& inner, const Partition& outer);

// s_{rho/omega} on the alphabet, exactly; zero unless omega is inside rho
RatFunc skew_schur(const Partition& rho, const Partition& omega, const Alphabet& a, int n);
// same, on the first `window` tail letters only, truncated; independent oracle
FracSeries skew_schur_window(const Partition& rho, const Partition& omega, const Alphabet& a, int n, int window,
                             Degree bound);

// prod_{(i,j) in rho} q^{i-j} * s_rho(frak q_{. - lambda})
RatFunc shat_frak(const Partition& rho, const Partition& lambda_bar, int n);

// s_lambda(q) sum_omega q_0^{-|omega|} bar(s_{rho+/omega}(fq_{.-lambda})) s_{rho-/omega}(fq_{.-lambda'})
RatFunc dt_vertex_P(const Partition& rho_plus, const Partition& rho_minus, const NPartition& lambda);

struct Framing {
  Rational w1, w2, w3;
  static Framing symmetric(int n) { return {frac(1, n), frac(-1, n), 0}; }
  static Framing asymmetric(int n) { return {frac(1, n), -1 - frac(1, n), 1}; }
  Framing swapped() const { return {w2, w1, w3}; }
  std::string to_string() const;
};
Framing parse_framing(const std::string& s);

struct Alpha {
  int plus = 1;
  int minus = 1;
  Alpha swapped() const { return {minus, plus}; }
};

// the framed DT vertex as an exact rational function in q
RatFunc dt_vertex_framed(const Partition& rho_plus, const Partition& rho_minus, const NPartition& lambda, Alpha alpha,
                         const Framing& w);

// (-xi_{2n})^{-|lambda|} prod_k xi_n^{-k|lambda_k|} as turns, unreduced
Rational lambda_phase(const NPartition& lambda);
// that root raised to e, principal branch: turns reduced to [0, 1) first
Cyclotomic lambda_root_power(const NPartition& lambda, const Rational& e);
// zeta^{turns}; throws unless it lies in Q(zeta_L)
Cyclotomic root_from_turns(const Rational& turns, int n);

// ---- change of variables ------------------------------------------------

// image of a q-monomial: zeta^{phase} exp(log), log linear in (x, u)
struct LinearImage {
  Rational phase;  // turns
  FracSeries log;
};
LinearImage cov_monomial(const Exponents& e, int n, bool negate_q = false);
// series in (x, u), Laurent in u where a denominator has an integral phase
FracSeries change_of_variables(const RatFunc& f, int n, Degree bound, bool negate_q = false);

// E_j(x) = exp(-sum_i xi_{2n}^{-i(2j+1)} x_i / n)
FracSeries E_series(int j, int n, Degree bound);

// ---- GW side at w_s -----------------------------------------------------

// (t/2) csc(t/2) = sum_g c_g t^{2g}; c_g from Bernoulli numbers
Rational fp_coefficient(int g);
Rational bernoulli(int k);

// connected framed one-leg series at w_s; plus_leg picks tau+ or tau-
FracSeries gw_one_leg(int d, bool plus_leg, int alpha, int n, Degree bound);
// same series summed over (g, gamma) from the coefficient formula
FracSeries gw_one_leg_direct(int d, bool plus_leg, int alpha, int n, Degree bound);
// connected two-leg ((d),(d)) term
Cyclotomic gw_two_leg(int d, Alpha alpha);
// disconnected framed vertex V~^{.,alpha}_{tau+,tau-,0}(x, u; w_s)
FracSeries gw_sym_vertex_ws(const Partition& tau_plus, const Partition& tau_minus, Alpha alpha, int n, Degree bound);

// sum_{rho+-} P~^alpha_{rho+,rho-,0}(w_s) chi_{rho+}(tau+)/z chi_{rho-}(tau-)/z,
// summed as rational functions and then pushed to (x, u)
FracSeries dt_sym_vertex_ws(const Partition& tau_plus, const Partition& tau_minus, Alpha alpha, int n, Degree bound,
                            bool negate_q = false);

// ---- framing prefactors, Hurwitz series, central lemma -----------------

// symmetric: exp(-(a+ f_T(rho+) i u w3/(n w1) + a- f_T(rho-) i u w3/(n w2)))
FracSeries framing_prefactor_sym(const Partition& rho_plus, const Partition& rho_minus, Alpha alpha,
                                 const Framing& w, int n, Degree bound);
// DT monomial counterpart, pushed through the change of variables
FracSeries framing_monomial_sym(const Partition& rho_plus, const Partition& rho_minus, Alpha alpha,
                                const Framing& w, int n, Degree bound);
// asymmetric: exp(a f_T(rho) i u (1 - w3/(n w1)) + (f_T(l) i u + sum xi_{2n}^{-i} f_i(l) x_i)(1/n - w1/w3))
FracSeries framing_prefactor_asym(const Partition& rho, const NPartition& lambda, int alpha, const Framing& w,
                                  Degree bound);
FracSeries framing_monomial_asym(const Partition& rho, const NPartition& lambda, int alpha, const Framing& w,
                                 Degree bound);

// H~._{nu,mu}(a) in (x, u)
FracSeries hurwitz_gen(const NPartition& nu, const NPartition& mu, const Rational& a, Degree bound);

struct CentralCheck {
  bool pass = false;
  Rational lhs_phase, rhs_phase;
  FracSeries lhs, rhs;  // linear forms
};
CentralCheck central_lemma_check(const NPartition& lambda);

// JSON-friendly normal form: monomial prefactor pulled out so that every
// remaining exponent is nonnegative
struct Normalized {
  Exponents prefactor;
  FracSeries series;
};
Normalized normalize(const FracSeries& s);

}  // namespace loopvertex
