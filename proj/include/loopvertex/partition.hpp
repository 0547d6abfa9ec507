#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace loopvertex {

class Partition {
 public:
  Partition() = default;
  // weakly decreasing, nonnegative; trailing zeros dropped
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 1-indexed row length, 0 past the end
  int row(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  bool contains_box(int i, int j) const { return i >= 1 && j >= 1 && row(i) >= j; }
  bool contains(const Partition& inner) const;
  Partition transpose() const;
  // (row, col), 1-indexed, row by row
  std::vector<std::pair<int, int>> boxes() const;
  // sum of j - i over boxes
  int content_sum() const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// ordered n-tuple; component i carries decoration xi^i
class NPartition {
 public:
  NPartition() = default;
  explicit NPartition(int n);
  explicit NPartition(std::vector<Partition> comps);

  int n() const { return static_cast<int>(comps_.size()); }
  const Partition& operator[](int i) const { return comps_.at(i); }
  const std::vector<Partition>& components() const { return comps_; }
  int size() const;
  int length() const;
  bool empty() const { return size() == 0; }
  // opposite twistings: component i goes to -i mod n
  NPartition negate() const;
  // adds one part to component `component` (taken mod n)
  NPartition with_part(int component, int part) const;
  std::string to_string() const;

  friend auto operator<=>(const NPartition&, const NPartition&) = default;
  friend bool operator==(const NPartition&, const NPartition&) = default;

 private:
  std::vector<Partition> comps_;
};

// reverse lexicographic: (d), (d-1,1), ...
std::vector<Partition> partitions_of(int d);
std::vector<NPartition> npartitions_of(int d, int n);

long z_sym(const Partition& tau);
long z_wreath(const NPartition& mu);

struct CoreQuotient {
  Partition core;
  NPartition quotient;
};
// runner r collects beta-numbers with lambda_i - i = r mod n
CoreQuotient n_quotient(const Partition& p, int n);
Partition n_quotient_inverse(const NPartition& lambda);

// color of box (i, j) is (j - i) mod n
int box_color(int i, int j, int n);

struct ColorData {
  std::vector<std::vector<int>> colors;  // per row
  std::vector<int> counts;               // boxes per color
  std::vector<int> n_stat;               // sum_k (k-1) * #color-i boxes in row k
};
ColorData color_data(const Partition& p, int n);

int hook_length(const Partition& p, int i, int j);
// boxes of each color in the hook of (i, j)
std::vector<int> colored_hook(const Partition& p, int n, int i, int j);

// height = rows occupied - 1, so the sign is (-1)^height
struct Strip {
  Partition result;
  int height;
};
std::vector<Strip> add_border_strips(const Partition& base, int k);
std::vector<Strip> remove_border_strips(const Partition& base, int k);
// nullopt unless outer / inner is a nonempty connected border strip
std::optional<int> border_strip_height(const Partition& outer, const Partition& inner);

}  // namespace loopvertex
