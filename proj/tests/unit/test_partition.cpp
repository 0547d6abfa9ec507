#include <doctest.h>

#include <random>
#include <set>

#include "loopvertex/partition.hpp"
#include "loopvertex/rational.hpp"

using namespace loopvertex;

namespace {

NPartition np(std::vector<std::vector<int>> v) {
  std::vector<Partition> c;
  for (auto& p : v) c.emplace_back(p);
  return NPartition(c);
}

// empty core <=> colors balanced
bool balanced(const Partition& p, int n) {
  auto cd = color_data(p, n);
  for (int c : cd.counts)
    if (c != cd.counts[0]) return false;
  return true;
}

}  // namespace

TEST_CASE("transpose") {
  CHECK(Partition{2, 1}.transpose() == Partition{2, 1});
  CHECK(Partition{3}.transpose() == Partition{1, 1, 1});
  CHECK(Partition{}.transpose() == Partition{});
  for (int d = 0; d <= 8; ++d)
    for (const auto& p : partitions_of(d)) {
      CHECK(p.transpose().transpose() == p);
      CHECK(p.transpose().size() == p.size());
    }
  CHECK_THROWS(Partition{1, 2});
}

TEST_CASE("centralizer orders") {
  CHECK(z_sym(Partition{2, 1}) == 2);
  CHECK(z_sym(Partition{1, 1}) == 2);
  CHECK(z_sym(Partition{3, 3}) == 18);
  CHECK(z_wreath(np({{1}, {}})) == 2);
  CHECK(z_wreath(np({{1, 1}, {}})) == 8);
  CHECK(z_wreath(np({{}, {2}, {}})) == 6);
  // sum_mu 1/z_mu = 1 over classes of a group
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 4; ++d) {
      Rational s = 0;
      for (const auto& m : npartitions_of(d, n)) s += frac(1, z_wreath(m));
      CHECK(s == 1);
    }
}

TEST_CASE("negate") {
  CHECK(np({{1}, {2}}).negate() == np({{1}, {2}}));
  CHECK(np({{}, {2}, {}}).negate() == np({{}, {}, {2}}));
  CHECK(np({{1}, {1}, {1}}).negate() == np({{1}, {1}, {1}}));
  for (const auto& m : npartitions_of(3, 3)) CHECK(m.negate().negate() == m);
}

TEST_CASE("n-quotient bijection") {
  for (int n = 1; n <= 4; ++n)
    CHECK(n_quotient_inverse(NPartition(n)) == Partition{});
  CHECK(n_quotient(Partition{1}, 2).core == Partition{1});
  CHECK(n_quotient(Partition{1}, 2).quotient.empty());
  // brute force: partitions of 2 with empty 2-core carrying quotient ((1),())
  {
    std::vector<Partition> hits;
    for (const auto& p : partitions_of(2)) {
      auto cq = n_quotient(p, 2);
      if (cq.core.empty() && cq.quotient == np({{1}, {}})) hits.push_back(p);
    }
    REQUIRE(hits.size() == 1);
    CHECK(n_quotient_inverse(np({{1}, {}})) == hits[0]);
    // pinned convention: the component-0 box sits on the lambda_i - i = 0 runner
    CHECK(hits[0] == Partition{1, 1});
  }
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 5; ++d)
      for (const auto& l : npartitions_of(d, n)) {
        auto bar = n_quotient_inverse(l);
        CHECK(bar.size() == n * d);
        auto cq = n_quotient(bar, n);
        CHECK(cq.core.empty());
        CHECK(cq.quotient == l);
        CHECK(balanced(bar, n));
      }
  std::mt19937 rng(17);
  auto all = partitions_of(12);
  for (int t = 0; t < 100; ++t) {
    int d = std::uniform_int_distribution<int>(0, 12)(rng);
    auto ps = partitions_of(d);
    const auto& p = ps[std::uniform_int_distribution<std::size_t>(0, ps.size() - 1)(rng)];
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    auto cq = n_quotient(p, n);
    CHECK(balanced(p, n) == cq.core.empty());
    if (cq.core.empty()) CHECK(n_quotient_inverse(cq.quotient) == p);
    CHECK(cq.core.size() + n * cq.quotient.size() == p.size());
  }
}

TEST_CASE("colors and hooks") {
  // 4-row n=3 diagram: row 1 colors 0,1,2,0
  auto cd = color_data(Partition{4, 3, 2, 1}, 3);
  CHECK(cd.colors[0] == std::vector<int>{0, 1, 2, 0});
  auto c21 = color_data(Partition{2, 1}, 2);
  CHECK(c21.colors[0] == std::vector<int>{0, 1});
  CHECK(c21.colors[1] == std::vector<int>{1});
  CHECK(c21.n_stat == std::vector<int>{0, 1});
  for (const auto& p : partitions_of(6)) {
    int classical = 0;
    for (int k = 1; k <= p.length(); ++k) classical += (k - 1) * p.row(k);
    CHECK(color_data(p, 1).n_stat[0] == classical);
  }
  CHECK(colored_hook(Partition{1}, 1, 1, 1) == std::vector<int>{1});
  CHECK(colored_hook(Partition{2, 1}, 1, 1, 1) == std::vector<int>{3});
  CHECK(colored_hook(Partition{2, 1}, 2, 1, 1) == std::vector<int>{1, 2});
  CHECK_THROWS(colored_hook(Partition{2, 1}, 2, 2, 2));
  for (const auto& p : partitions_of(7))
    for (auto [i, j] : p.boxes()) {
      auto h = colored_hook(p, 3, i, j);
      CHECK(h[0] + h[1] + h[2] == hook_length(p, i, j));
    }
}

TEST_CASE("border strips") {
  auto s1 = add_border_strips(Partition{}, 1);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].result == Partition{1});
  CHECK(s1[0].height == 0);
  auto s2 = add_border_strips(Partition{}, 2);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0].result == Partition{2});
  CHECK(s2[0].height == 0);
  CHECK(s2[1].result == Partition{1, 1});
  CHECK(s2[1].height == 1);
  // brute force over all larger partitions
  for (int d = 0; d <= 6; ++d)
    for (const auto& base : partitions_of(d))
      for (int k = 1; k <= 4; ++k) {
        std::set<std::pair<Partition, int>> want, got;
        for (const auto& rho : partitions_of(d + k))
          if (auto h = border_strip_height(rho, base)) want.insert({rho, *h});
        for (const auto& s : add_border_strips(base, k)) got.insert({s.result, s.height});
        CHECK(want == got);
        std::set<std::pair<Partition, int>> rem;
        if (d >= k) {
          for (const auto& s : remove_border_strips(base, k)) rem.insert({s.result, s.height});
          std::set<std::pair<Partition, int>> wrem;
          for (const auto& om : partitions_of(d - k))
            if (auto h = border_strip_height(base, om)) wrem.insert({om, *h});
          CHECK(rem == wrem);
        }
      }
}
