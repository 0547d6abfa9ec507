#include <doctest.h>

#include "loopvertex/characters.hpp"

using namespace loopvertex;

namespace {

NPartition np(std::vector<std::vector<int>> v) {
  std::vector<Partition> c;
  for (auto& p : v) c.emplace_back(p);
  return NPartition(c);
}

NPartition one(const Partition& p) { return NPartition(std::vector<Partition>{p}); }

}  // namespace

TEST_CASE("symmetric group characters") {
  for (int d = 1; d <= 5; ++d)
    for (const auto& t : partitions_of(d)) CHECK(chi_sym(Partition{std::vector<int>{d}}, t) == 1);
  CHECK(chi_sym(Partition{1, 1}, Partition{2}) == -1);
  CHECK_THROWS(chi_sym(Partition{2}, Partition{1}));
  // S_4 column orthogonality
  auto ps = partitions_of(4);
  for (const auto& a : ps)
    for (const auto& b : ps) {
      long s = 0;
      for (const auto& r : ps) s += chi_sym(r, a) * chi_sym(r, b);
      CHECK(s == (a == b ? z_sym(a) : 0));
    }
}

TEST_CASE("relative characters") {
  for (int d = 1; d <= 5; ++d) {
    CHECK(chi_rel(Partition{std::vector<int>{d}}, Partition{}, d) == 1);
    CHECK(chi_rel(Partition(std::vector<int>(d, 1)), Partition{}, d) == (d % 2 ? 1 : -1));
  }
  CHECK(chi_rel(Partition{2}, Partition{1, 1}, 0) == 0);
  // chi_rho(tau + d) = sum_omega chi_{rho/omega}(d) chi_omega(tau)
  for (int s = 1; s <= 5; ++s)
    for (const auto& rho : partitions_of(s))
      for (int d = 1; d <= s; ++d)
        for (const auto& tau : partitions_of(s - d)) {
          std::vector<int> p = tau.parts();
          p.push_back(d);
          std::sort(p.rbegin(), p.rend());
          long lhs = chi_sym(rho, Partition(p));
          long rhs = 0;
          for (const auto& om : partitions_of(s - d)) rhs += chi_rel(rho, om, d) * chi_sym(om, tau);
          CHECK(lhs == rhs);
        }
}

TEST_CASE("wreath characters") {
  for (int d = 0; d <= 5; ++d)
    for (const auto& a : partitions_of(d))
      for (const auto& b : partitions_of(d)) CHECK(chi_wreath(one(a), one(b)) == Cyclotomic(chi_sym(a, b)));
  for (int n = 2; n <= 3; ++n)
    for (int d = 1; d <= 3; ++d) {
      std::vector<Partition> triv(n);
      triv[0] = Partition{std::vector<int>{d}};
      for (const auto& m : npartitions_of(d, n)) CHECK(chi_wreath(NPartition(triv), m) == Cyclotomic(1));
    }
  // n=2, d=2 orthogonality over the 5x5 table
  const auto& t = char_table(2, 2);
  REQUIRE(t.irreps.size() == 5);
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) {
      Cyclotomic s;
      for (std::size_t m = 0; m < 5; ++m)
        s += t.values[a][m] * t.values[b][m].conj() * Cyclotomic(frac(1, z_wreath(t.classes[m])));
      CHECK(s == Cyclotomic(a == b ? 1 : 0));
    }
  CHECK(dim_wreath(NPartition(2)) == 1);
  CHECK(dim_wreath(np({{1}, {}})) == 1);
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 4; ++d) {
      long s = 0, order = 1;
      for (int k = 1; k <= d; ++k) order *= k * n;
      for (const auto& l : npartitions_of(d, n)) s += dim_wreath(l) * dim_wreath(l);
      CHECK(s == order);
    }
}

TEST_CASE("central characters") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& l : npartitions_of(1, n)) CHECK(central_chars(l).f_T.is_zero());
  for (int d = 0; d <= 5; ++d)
    for (const auto& p : partitions_of(d)) {
      auto cc = central_chars(one(p));
      CHECK(cc.f_T == Cyclotomic(p.content_sum()));
    }
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 3; ++d)
      for (const auto& l : npartitions_of(d, n)) CHECK(central_chars(l).f[0] == Cyclotomic(d));
}
