#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loopvertex/partition.hpp"
#include "loopvertex/ratfunc.hpp"

namespace loopvertex {

// Monomials in q_0..q_{n-1}; indices are taken mod n, powers must lie in (1/2n)Z.
Exponents qmono(int n, long k, const Rational& power);
// q = q_0 ... q_{n-1}
Exponents qtotal(int n, const Rational& power);
// prod_{t=a}^{b} q_t^power, empty when b < a
Exponents qrange(int n, long a, long b, const Rational& power = 1);
// q_0^{-1} ... q_k^{-1}, extended to k < -1 by P_{k-1} = P_k q_k
Exponents qinv_prefix(int n, long k);
// scaled degree d -> bound at scale 2n
inline Degree qdeg(int n, long d) { return 2 * static_cast<Degree>(n) * d; }

// entries >= 0, weakly increasing in rows, strictly down columns; box (i,j)
// with entry k contributes q_{(j-i) mod n}^k
FracSeries ssyt_loop_schur(const Partition& bar, int n, Degree bound);
FracSeries ssyt_loop_schur(const NPartition& lambda, Degree bound);

RatFunc hook_content_ratfunc(const Partition& bar, int n);
FracSeries hook_content_loop_schur(const Partition& bar, int n, Degree bound);
FracSeries hook_content_loop_schur(const NPartition& lambda, Degree bound);

// prod_{(i,j)} q_{j-i}^{(i-j)/n}: s-hat = this * s
Exponents hat_prefactor(const Partition& bar, int n);
RatFunc loop_schur_hat_ratfunc(const Partition& bar, int n);

RatFunc hhat(long l, long r, int n);
FracSeries hhat_series(long l, long r, int n, Degree bound);
// det(hhat_{bar_i - i + j}^{1-j}), 1 <= i,j <= m; equals s-hat to `bound`
FracSeries loop_jacobi_trudi(const Partition& bar, int n, int m, Degree bound);

// q_r^{r/n}...q_{r+b-1}^{(r+b-1)/n} prod_{i=1}^b (1 - q_{r+i-1}...q_{r+a-1})
FracSeries f_factor(long a, long b, long r, int n);

// det(z_i^{m-j+omega_j}) / det(z_i^{m-j}) for monomials z_1..z_m
RatFunc schur_det_ratfunc(const Partition& omega, const std::vector<Exponents>& spec, VarSetPtr vars);
FracSeries schur_det(const Partition& omega, const std::vector<Exponents>& spec, VarSetPtr vars, Degree bound);

// determinant of an exact matrix, permutation expansion
FracSeries exact_det(const std::vector<std::vector<FracSeries>>& a);

struct FormCheck {
  std::string name;
  bool pass = false;
  std::optional<Mismatch> witness;  // for series comparisons
  std::string note;
};

// alternant form vs Jacobi-Trudi (mod bound); then, as exact rational
// functions, inverse-alphabet vs alternant, the inversion symmetry, and
// inverted-prefactor vs inverse-alphabet
std::vector<FormCheck> det_forms_check(const Partition& sigma_bar, int n, int m, Degree bound);

// building blocks exposed for tests
RatFunc alternant_form(const Partition& sigma_bar, int n, int m);
RatFunc inverse_alphabet_form(const Partition& sigma_bar, int n, int m);
// literal_prefactor keeps the f-prefactor at q instead of q^{-1}; that
// reading is off by a nontrivial monomial whenever m > 1
RatFunc inverted_prefactor_form(const Partition& sigma_bar, int n, int m, bool literal_prefactor = false);
// Finite-m forms of the two sides of the strip identity behind the
// comb theorem, with alphabet z_i = (q_0 ... q_{bar_i+m-i})^{-1}.
// left: column expansion; row_shifted: determinant ratio with one row
// shifted by the strip; row_expanded: that ratio expanded along the row
// over the unshifted Vandermonde.  left is exact at every m, the row forms
// only agree with it as m grows.
struct FiniteMForms {
  RatFunc left, row_shifted, row_expanded;
};
FiniteMForms finite_m_forms(const Partition& omega, const Partition& sigma_bar, int d, int n, int m);

// the inversion factor (-1)^{|s|} q^{-|s|/n} prod q_{j-i}^{2(i-j)/n + i - j}
Exponents inversion_monomial(const Partition& sigma_bar, int n);

}  // namespace loopvertex
