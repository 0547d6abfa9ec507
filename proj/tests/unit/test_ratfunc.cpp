#include <doctest.h>

#include "loopvertex/ratfunc.hpp"

using namespace loopvertex;

namespace {

Exponents ex(std::initializer_list<int> v) {
  Exponents e;
  int i = 0;
  for (int x : v) e[i++] = x;
  return e;
}

}  // namespace

TEST_CASE("geometric expansion") {
  auto vs = q_vars(1);  // scale 2
  auto g = RatFunc::geometric(vs, ex({2}));
  auto s = g.expand(20);
  for (int k = 0; k <= 10; ++k) CHECK(s.coefficient(ex({2 * k})) == Cyclotomic(1));
  auto g2 = RatFunc::geometric(vs, ex({2}), 2).expand(20);
  for (int k = 0; k <= 10; ++k) CHECK(g2.coefficient(ex({2 * k})) == Cyclotomic(k + 1));
}

TEST_CASE("negative degree factors are flipped") {
  auto vs = q_vars(1);
  auto a = RatFunc::geometric(vs, ex({-2}));
  // 1/(1 - q^{-1}) = -q / (1 - q)
  auto b = RatFunc::geometric(vs, ex({2})).shifted(ex({2})).scaled(-1);
  CHECK(a.equals(b));
  CHECK(a.valuation() == 2);
  CHECK_THROWS(RatFunc::geometric(vs, ex({0})));
}

TEST_CASE("sums with different denominators") {
  auto vs = q_vars(2);  // q0, q1 at scale 4
  auto a = RatFunc::geometric(vs, ex({4, 0}));
  auto b = RatFunc::geometric(vs, ex({4, 4})).shifted(ex({0, 2}));
  auto s = a + b;
  auto direct = a.expand(24) + b.expand(24);
  CHECK(!first_mismatch(s.expand(24), direct, 24));
  CHECK((s - a).equals(b));
  CHECK(!(s.equals(a)));
}

TEST_CASE("inversion") {
  auto vs = q_vars(1);
  // 1/(1-q) at q^{-1} is -q/(1-q)
  auto a = RatFunc::geometric(vs, ex({2})).inverted();
  CHECK(a.equals(RatFunc::geometric(vs, ex({2})).shifted(ex({2})).scaled(-1)));
}
