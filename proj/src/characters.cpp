#include "loopvertex/characters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace loopvertex {

namespace {

long mn(const Partition& rho, const std::vector<int>& parts, std::size_t from,
        std::map<std::pair<Partition, std::size_t>, long>& memo) {
  if (from == parts.size()) return rho.empty() ? 1 : 0;
  auto key = std::make_pair(rho, from);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long total = 0;
  for (const auto& s : remove_border_strips(rho, parts[from]))
    total += (s.height % 2 ? -1 : 1) * mn(s.result, parts, from + 1, memo);
  memo.emplace(key, total);
  return total;
}

}  // namespace

long chi_sym(const Partition& rho, const Partition& tau) {
  if (rho.size() != tau.size()) throw std::invalid_argument("chi_sym: size mismatch");
  thread_local std::map<Partition, std::map<std::pair<Partition, std::size_t>, long>> memo;
  return mn(rho, tau.parts(), 0, memo[tau]);
}

int chi_rel(const Partition& rho, const Partition& omega, int d) {
  if (rho.size() != omega.size() + d) return 0;
  auto h = border_strip_height(rho, omega);
  if (!h) return 0;
  return *h % 2 ? -1 : 1;
}

namespace {

struct Cycle {
  int size;
  int deco;
};

// sum over colorings, recursing cycle by cycle
void colorings(const std::vector<Cycle>& cycles, std::size_t idx, const NPartition& lambda,
               std::vector<int>& remaining, std::vector<std::vector<int>>& assigned, long phase, int n,
               std::map<int, Rational>& acc) {
  if (idx == cycles.size()) {
    long prod = 1;
    for (int c = 0; c < n; ++c) {
      if (lambda[c].empty()) continue;
      std::vector<int> p = assigned[c];
      std::sort(p.rbegin(), p.rend());
      prod *= chi_sym(lambda[c], Partition(p));
      if (prod == 0) return;
    }
    acc[static_cast<int>(((phase % n) + n) % n)] += prod;
    return;
  }
  const Cycle& cy = cycles[idx];
  for (int c = 0; c < n; ++c) {
    if (remaining[c] < cy.size) continue;
    remaining[c] -= cy.size;
    assigned[c].push_back(cy.size);
    colorings(cycles, idx + 1, lambda, remaining, assigned, phase - static_cast<long>(c) * cy.deco, n, acc);
    assigned[c].pop_back();
    remaining[c] += cy.size;
  }
}

}  // namespace

Cyclotomic chi_wreath(const NPartition& lambda, const NPartition& mu) {
  const int n = lambda.n();
  if (mu.n() != n) throw std::invalid_argument("chi_wreath: n mismatch");
  if (lambda.size() != mu.size()) throw std::invalid_argument("chi_wreath: size mismatch");
  std::vector<Cycle> cycles;
  for (int i = 0; i < n; ++i)
    for (int p : mu[i].parts()) cycles.push_back({p, i});
  // big cycles first prunes faster
  std::stable_sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) { return a.size > b.size; });
  std::vector<int> remaining(n);
  for (int c = 0; c < n; ++c) remaining[c] = lambda[c].size();
  std::vector<std::vector<int>> assigned(n);
  std::map<int, Rational> acc;
  colorings(cycles, 0, lambda, remaining, assigned, 0, n, acc);
  const int L = ambient_order(n);
  Cyclotomic out;
  for (const auto& [k, v] : acc)
    if (v != 0) out += Cyclotomic::root_of_unity(L, n, k) * Cyclotomic(v);
  return out;
}

long dim_wreath(const NPartition& lambda) {
  std::vector<Partition> comps(lambda.n());
  comps[0] = Partition(std::vector<int>(lambda.size(), 1));
  return chi_wreath(lambda, NPartition(comps)).rational().get_num().get_si();
}

CentralChars central_chars(const NPartition& lambda) {
  const int n = lambda.n(), d = lambda.size();
  const long dim = dim_wreath(lambda);
  CentralChars cc;
  if (d >= 2) {
    std::vector<int> p(d - 2, 1);
    p.insert(p.begin(), 2);
    std::vector<Partition> comps(n);
    comps[0] = Partition(p);
    Cyclotomic chi = chi_wreath(lambda, NPartition(comps));
    cc.f_T = chi * Cyclotomic(frac(static_cast<long>(n) * d * (d - 1), 2 * dim));
  }
  cc.f.resize(n);
  for (int i = 0; i < n; ++i) {
    if (d == 0) continue;
    std::vector<Partition> comps(n);
    comps[0] = Partition(std::vector<int>(d - 1, 1));
    NPartition mu = NPartition(comps).with_part(i, 1);
    cc.f[i] = chi_wreath(lambda, mu) * Cyclotomic(frac(d, dim));
  }
  return cc;
}

const CharTable& char_table(int n, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<CharTable>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, d});
    if (it != cache.end()) return *it->second;
  }
  auto t = std::make_unique<CharTable>();
  t->n = n;
  t->d = d;
  t->irreps = npartitions_of(d, n);
  t->classes = t->irreps;
  for (const auto& l : t->irreps) {
    std::vector<Cyclotomic> row;
    for (const auto& m : t->classes)
      row.push_back(n == 1 ? Cyclotomic(chi_sym(l[0], m[0])) : chi_wreath(l, m));
    t->values.push_back(std::move(row));
  }
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, d}];
  if (!slot) slot = std::move(t);
  return *slot;
}

}  // namespace loopvertex
