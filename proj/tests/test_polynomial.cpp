#include <gtest/gtest.h>

#include <random>

#include "ribbon/local/hnf.hpp"
#include "ribbon/local/poly.hpp"
#include "ribbon/sweep.hpp"

using namespace ribbon;
using namespace ribbon::local;

namespace {

Poly random_poly(std::mt19937_64& rng, const PrimeField& f, int max_deg) {
  std::uniform_int_distribution<Elem> c(0, f.modulus() - 1);
  std::vector<Elem> v(static_cast<std::size_t>(max_deg) + 1);
  for (auto& x : v) x = c(rng);
  return Poly(f, v);
}

}  // namespace

TEST(PrimeField, Arithmetic) {
  const PrimeField f(7);
  EXPECT_EQ(f.add(5, 4), 2u);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.neg(3), 4u);
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.reduce(-1), 6u);
  EXPECT_EQ(f.pow(3, 6), 1u);
  EXPECT_THROW(f.inv(0), InvalidInput);
}

TEST(PrimeField, RejectsNonPrimes) {
  EXPECT_THROW(PrimeField(1), InvalidInput);
  EXPECT_THROW(PrimeField(9), InvalidInput);
  EXPECT_THROW(PrimeField((std::uint64_t{1} << 31) + 11), InvalidInput);
  EXPECT_NO_THROW(PrimeField(2147483647));
}

TEST(PrimeField, LargePrimeProducts) {
  const PrimeField f(2147483647);
  const Elem a = 2147483646;
  EXPECT_EQ(f.mul(a, a), 1u);
  EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
}

TEST(Poly, BasicOps) {
  const PrimeField f(5);
  const Poly s = Poly::monomial(f, 1, 1);
  const Poly x = s * s + Poly::constant(f, 4);  // s^2 - 1
  EXPECT_EQ(x.degree(), 2);
  EXPECT_EQ(x.to_string(), "s^2 + 4");
  EXPECT_EQ(x.eval(1), 0u);
  EXPECT_EQ(x.order_at(1), 1);
  EXPECT_EQ(x.order_at(4), 1);
  EXPECT_EQ(x.order_at(2), 0);
  EXPECT_EQ(Poly::linear(f, 2).pow(3).order_at(2), 3);
  EXPECT_EQ(Poly(f).degree(), -1);
  EXPECT_THROW(Poly(f).order_at(0), InvalidInput);
  EXPECT_EQ(x.shifted(2), x * s * s);
}

TEST(Poly, DivisionIdentity) {
  const PrimeField f(101);
  std::mt19937_64 rng(sweep::seed_from_env());
  for (int i = 0; i < 200; ++i) {
    const Poly a = random_poly(rng, f, 8);
    Poly b = random_poly(rng, f, 4);
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW(divmod(Poly::constant(f, 1), Poly(f)), InvalidInput);
}

TEST(Poly, Gcd) {
  const PrimeField f(101);
  const Poly l1 = Poly::linear(f, 3);
  const Poly l2 = Poly::linear(f, 7);
  const Poly l3 = Poly::linear(f, 11);
  EXPECT_EQ(gcd((l1 * l2).scaled(5), (l2 * l3).scaled(9)), l2);
  EXPECT_EQ(gcd(l1, l3), Poly::constant(f, 1));
  EXPECT_TRUE(gcd(Poly(f), Poly(f)).is_zero());
}

TEST(Hnf, CanonicalShape) {
  const PrimeField f(101);
  const Poly s = Poly::monomial(f, 1, 1);
  const Poly one = Poly::constant(f, 1);
  const Poly zero(f);
  // rows (s^2, 0), (0, 1) from a scrambled basis of the same module
  PolyMatrix m = {{s * s, one}, {zero, one.scaled(3)}, {s * s * s, s}};
  const auto h = hermite_form(m);
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h[0][0], s * s);
  EXPECT_TRUE(h[0][1].is_zero());
  EXPECT_TRUE(h[1][0].is_zero());
  EXPECT_EQ(h[1][1], one);
}

TEST(Hnf, IdempotentAndOrderInsensitive) {
  const PrimeField f(5);
  std::mt19937_64 rng(sweep::seed_from_env() + 1);
  for (int i = 0; i < 200; ++i) {
    PolyMatrix m;
    for (int r = 0; r < 3; ++r) m.push_back({random_poly(rng, f, 3), random_poly(rng, f, 3)});
    const auto h = hermite_form(m);
    EXPECT_EQ(hermite_form(h), h);
    std::shuffle(m.begin(), m.end(), rng);
    EXPECT_EQ(hermite_form(m), h);
    // Unimodular row operation leaves the form unchanged.
    m.push_back(m[0]);
    const Poly q = random_poly(rng, f, 2);
    for (std::size_t j = 0; j < 2; ++j) m[1][j] = m[1][j] + q * m[0][j];
    EXPECT_EQ(hermite_form(m), h);
    for (std::size_t r = 0; r < h.size(); ++r) {
      // Pivots are monic and entries above a pivot have smaller degree.
      std::size_t c = 0;
      while (h[r][c].is_zero()) ++c;
      EXPECT_EQ(h[r][c].lead(), 1u);
      for (std::size_t above = 0; above < r; ++above) EXPECT_LT(h[above][c].degree(), h[r][c].degree());
    }
  }
}

TEST(Hnf, ZeroRowsDropped) {
  const PrimeField f(5);
  EXPECT_TRUE(hermite_form({{Poly(f), Poly(f)}}).empty());
  EXPECT_TRUE(hermite_form({}).empty());
}
