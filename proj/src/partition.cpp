#include "loopvertex/partition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace loopvertex {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.row(i) > row(i)) return false;
  return true;
}

Partition Partition::transpose() const {
  std::vector<int> t(length() ? parts_[0] : 0, 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++t[j];
  return Partition(t);
}

std::vector<std::pair<int, int>> Partition::boxes() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= row(i); ++j) out.emplace_back(i, j);
  return out;
}

int Partition::content_sum() const {
  int s = 0;
  for (auto [i, j] : boxes()) s += j - i;
  return s;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < length(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

NPartition::NPartition(int n) : comps_(n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
}

NPartition::NPartition(std::vector<Partition> comps) : comps_(std::move(comps)) {
  if (comps_.empty()) throw std::invalid_argument("n-partition needs at least one component");
}

int NPartition::size() const {
  int s = 0;
  for (const auto& c : comps_) s += c.size();
  return s;
}

int NPartition::length() const {
  int s = 0;
  for (const auto& c : comps_) s += c.length();
  return s;
}

NPartition NPartition::negate() const {
  std::vector<Partition> out(n());
  for (int i = 0; i < n(); ++i) out[(n() - i) % n()] = comps_[i];
  return NPartition(out);
}

NPartition NPartition::with_part(int component, int part) const {
  auto out = comps_;
  auto& c = out.at(((component % n()) + n()) % n());
  std::vector<int> p = c.parts();
  p.push_back(part);
  std::sort(p.rbegin(), p.rend());
  c = Partition(p);
  return NPartition(out);
}

std::string NPartition::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n(); ++i) os << (i ? "," : "") << comps_[i].to_string();
  os << "]";
  return os.str();
}

namespace {

void gen_partitions(int remaining, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, maxpart); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void gen_npartitions(int remaining, int idx, int n, std::vector<Partition>& cur, std::vector<NPartition>& out) {
  if (idx == n - 1) {
    for (const auto& p : partitions_of(remaining)) {
      cur[idx] = p;
      out.emplace_back(cur);
    }
    return;
  }
  for (int s = remaining; s >= 0; --s)
    for (const auto& p : partitions_of(s)) {
      cur[idx] = p;
      gen_npartitions(remaining - s, idx + 1, n, cur, out);
    }
}

// beta set with `beads` beads
std::vector<int> beta_set(const Partition& p, int beads) {
  std::vector<int> b;
  for (int i = 1; i <= beads; ++i) b.push_back(p.row(i) - i + beads);
  return b;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int L = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 1; i <= L; ++i) parts.push_back(beta[i - 1] - (L - i));
  return Partition(parts);
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
  if (d < 0) return {};
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(d, d, cur, out);
  return out;
}

std::vector<NPartition> npartitions_of(int d, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<NPartition> out;
  if (d < 0) return out;
  std::vector<Partition> cur(n);
  gen_npartitions(d, 0, n, cur, out);
  return out;
}

namespace {

long factorial(int k) {
  long r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace

long z_sym(const Partition& tau) {
  std::map<int, int> mult;
  long r = 1;
  for (int p : tau.parts()) {
    ++mult[p];
    r *= p;
  }
  for (auto [p, m] : mult) r *= factorial(m);
  return r;
}

long z_wreath(const NPartition& mu) {
  long r = 1;
  for (const auto& c : mu.components()) {
    r *= z_sym(c);
    for (int i = 0; i < c.length(); ++i) r *= mu.n();
  }
  return r;
}

CoreQuotient n_quotient(const Partition& p, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const int beads = n * ((p.length() + n - 1) / n + 1);
  std::vector<int> beta = beta_set(p, beads);
  std::vector<std::vector<int>> runner(n);
  for (int b : beta) runner[b % n].push_back(b / n);
  std::vector<Partition> quot(n);
  std::vector<int> core_beta;
  for (int r = 0; r < n; ++r) {
    quot[r] = from_beta(runner[r]);
    for (int k = 0; k < static_cast<int>(runner[r].size()); ++k) core_beta.push_back(r + n * k);
  }
  return {from_beta(core_beta), NPartition(quot)};
}

Partition n_quotient_inverse(const NPartition& lambda) {
  const int n = lambda.n();
  int K = 1;
  for (const auto& c : lambda.components()) K = std::max(K, c.length() + 1);
  std::vector<int> beta;
  for (int r = 0; r < n; ++r)
    for (int j = 1; j <= K; ++j) beta.push_back(r + n * (lambda[r].row(j) + K - j));
  return from_beta(beta);
}

int box_color(int i, int j, int n) { return (((j - i) % n) + n) % n; }

ColorData color_data(const Partition& p, int n) {
  ColorData cd;
  cd.counts.assign(n, 0);
  cd.n_stat.assign(n, 0);
  for (int i = 1; i <= p.length(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= p.row(i); ++j) {
      int c = box_color(i, j, n);
      row.push_back(c);
      ++cd.counts[c];
      cd.n_stat[c] += i - 1;
    }
    cd.colors.push_back(row);
  }
  return cd;
}

int hook_length(const Partition& p, int i, int j) {
  if (!p.contains_box(i, j)) throw std::out_of_range("box outside diagram");
  return p.row(i) - j + p.transpose().row(j) - i + 1;
}

std::vector<int> colored_hook(const Partition& p, int n, int i, int j) {
  if (!p.contains_box(i, j)) throw std::out_of_range("box outside diagram");
  std::vector<int> h(n, 0);
  for (int b = j; b <= p.row(i); ++b) ++h[box_color(i, b, n)];
  for (int a = i + 1; p.contains_box(a, j); ++a) ++h[box_color(a, j, n)];
  return h;
}

std::vector<Strip> add_border_strips(const Partition& base, int k) {
  if (k < 1) throw std::invalid_argument("strip size must be positive");
  const int beads = base.length() + k;
  std::vector<int> beta = beta_set(base, beads);
  std::set<int> occ(beta.begin(), beta.end());
  std::vector<Strip> out;
  for (int b : beta) {
    if (occ.count(b + k)) continue;
    int between = 0;
    for (int x = b + 1; x < b + k; ++x) between += static_cast<int>(occ.count(x));
    std::vector<int> nb = beta;
    *std::find(nb.begin(), nb.end(), b) = b + k;
    out.push_back({from_beta(nb), between});
  }
  std::sort(out.begin(), out.end(), [](const Strip& x, const Strip& y) { return x.result > y.result; });
  return out;
}

std::vector<Strip> remove_border_strips(const Partition& base, int k) {
  if (k < 1) throw std::invalid_argument("strip size must be positive");
  const int beads = base.length();
  std::vector<int> beta = beta_set(base, beads);
  std::set<int> occ(beta.begin(), beta.end());
  std::vector<Strip> out;
  for (int b : beta) {
    if (b - k < 0 || occ.count(b - k)) continue;
    int between = 0;
    for (int x = b - k + 1; x < b; ++x) between += static_cast<int>(occ.count(x));
    std::vector<int> nb = beta;
    *std::find(nb.begin(), nb.end(), b) = b - k;
    out.push_back({from_beta(nb), between});
  }
  std::sort(out.begin(), out.end(), [](const Strip& x, const Strip& y) { return x.result > y.result; });
  return out;
}

std::optional<int> border_strip_height(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner) || outer.size() == inner.size()) return std::nullopt;
  std::set<std::pair<int, int>> cells;
  for (auto [i, j] : outer.boxes())
    if (!inner.contains_box(i, j)) cells.insert({i, j});
  for (auto [i, j] : cells)
    if (cells.count({i + 1, j}) && cells.count({i, j + 1}) && cells.count({i + 1, j + 1})) return std::nullopt;
  std::set<std::pair<int, int>> seen{*cells.begin()};
  std::vector<std::pair<int, int>> stack{*cells.begin()};
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    for (auto nb : {std::pair{i + 1, j}, std::pair{i - 1, j}, std::pair{i, j + 1}, std::pair{i, j - 1}})
      if (cells.count(nb) && seen.insert(nb).second) stack.push_back(nb);
  }
  if (seen.size() != cells.size()) return std::nullopt;
  std::set<int> rows;
  for (auto [i, j] : cells) rows.insert(i);
  return static_cast<int>(rows.size()) - 1;
}

}  // namespace loopvertex
