#pragma once

#include <variant>
#include <vector>

#include "loopvertex/cyclotomic.hpp"
#include "loopvertex/partition.hpp"

namespace loopvertex {

// Murnaghan-Nakayama
long chi_sym(const Partition& rho, const Partition& tau);
// (-1)^height if rho / omega is a connected border strip of size d, else 0
int chi_rel(const Partition& rho, const Partition& omega, int d);

// Character of Z_n wr S_d.  Irrep lambda, class mu (part mu^i_j decorated
// xi_n^i).  Sum over colorings of the cycles by irrep components, with the
// linear character of component c taking xi^i to xi^{-c i}.  Values live in
// Q(zeta_L), L = ambient_order(n).
Cyclotomic chi_wreath(const NPartition& lambda, const NPartition& mu);
long dim_wreath(const NPartition& lambda);

struct CentralChars {
  Cyclotomic f_T;
  std::vector<Cyclotomic> f;  // f[i], i = 0..n-1
};
CentralChars central_chars(const NPartition& lambda);

struct CharTable {
  int n = 1;  // 1 means S_d
  int d = 0;
  std::vector<NPartition> irreps;
  std::vector<NPartition> classes;
  std::vector<std::vector<Cyclotomic>> values;  // [irrep][class]
};
// memoized, immutable once built; n = 1 gives S_d with one-component labels
const CharTable& char_table(int n, int d);

}  // namespace loopvertex
