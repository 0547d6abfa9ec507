#include <doctest.h>

#include <complex>
#include <random>

#include "loopvertex/cyclotomic.hpp"

using namespace loopvertex;

namespace {

// numeric oracle: evaluate at exp(2 pi i / L)
std::complex<double> eval(const Cyclotomic& a, int L) {
  auto c = a.coeffs();
  std::complex<double> z = std::polar(1.0, 2 * M_PI / L), acc = 0, p = 1;
  for (const auto& x : c) {
    acc += x.get_d() * p;
    p *= z;
  }
  return acc;
}

Cyclotomic random_element(std::mt19937& rng, int L) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<Rational> v(CyclotomicField::get(L).degree());
  for (auto& x : v) x = frac(num(rng), den(rng));
  return Cyclotomic(L, v);
}

}  // namespace

TEST_CASE("roots of unity") {
  auto i = Cyclotomic::root_of_unity(4, 4, 1);
  CHECK(i * i == Cyclotomic(-1));
  auto z6 = Cyclotomic::root_of_unity(12, 6, 1);
  CHECK(z6.conj() * z6 == Cyclotomic(1));
  for (int L : {1, 2, 4, 6, 8, 12, 20}) {
    CHECK(Cyclotomic::root_of_unity(L, L, L) == Cyclotomic(1));
    if (L % 2 == 0) CHECK(Cyclotomic::root_of_unity(L, L, L / 2) == Cyclotomic(-1));
    CHECK(static_cast<long>(Cyclotomic::root_of_unity(L, L, 1).coeffs().size()) == euler_phi(L));
  }
}

TEST_CASE("inverse via extended gcd") {
  auto z3 = Cyclotomic::root_of_unity(12, 3, 1);
  auto a = Cyclotomic(1) + z3;
  CHECK(a * a.inverse() == Cyclotomic(1));
  // 1 + xi_3 = -xi_3^2, so its inverse is -xi_3
  CHECK(a.inverse() == -z3);
  CHECK_THROWS_WITH(Cyclotomic().inverse(), "division by zero in coefficient field");
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  for (int L : {4, 8, 12, 20}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_element(rng, L), b = random_element(rng, L), c = random_element(rng, L);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK((a + b).conj() == a.conj() + b.conj());
      auto ab = eval(a * b, L), want = eval(a, L) * eval(b, L);
      CHECK(std::abs(ab - want) < 1e-9);
      CHECK(std::abs(eval(a.conj(), L) - std::conj(eval(a, L))) < 1e-9);
    }
  }
  CHECK(Cyclotomic(frac(3, 7)).conj() == Cyclotomic(frac(3, 7)));
}

TEST_CASE("rationals mix with any field, distinct fields do not") {
  auto z = Cyclotomic::root_of_unity(8, 8, 1);
  CHECK((z + Cyclotomic(1)).order() == 8);
  CHECK_THROWS(Cyclotomic::root_of_unity(12, 12, 1) + z);
}
