#include <gtest/gtest.h>

#include "ribbon/local/homology.hpp"

using namespace ribbon;
using namespace ribbon::local;

TEST(Ext, Examples) {
  EXPECT_EQ(ext1_dim(1, 101, 8), 2u);
  EXPECT_EQ(ext1_dim(0, 101, 4), 0u);
  EXPECT_EQ(ext1_dim(3, 5, 16), 6u);
}

TEST(Ext, IndependentOfTruncation) {
  for (int n = 0; n <= 5; ++n) {
    for (std::uint64_t p : {5ull, 7ull, 101ull}) {
      for (int T = 4 * n + 4; T <= 4 * n + 10; ++T) EXPECT_EQ(ext1_dim(n, p, T), 2u * n) << n << " " << p << " " << T;
    }
  }
}

TEST(Ext, Preconditions) {
  EXPECT_THROW(ext1_dim(3, 101, 4), InvalidInput);
  EXPECT_THROW(ext1_dim(3, 101, 15), InvalidInput);
  EXPECT_THROW(ext1_dim(-1, 101, 8), InvalidInput);
  EXPECT_THROW(ext1_dim(1, 4, 8), InvalidInput);
}

TEST(Endo, Examples) {
  EXPECT_EQ(endo_quotient_dim(2, 101, 6), 2u);
  EXPECT_EQ(endo_quotient_dim(0, 101, 2), 0u);
  EXPECT_EQ(endo_quotient_dim(4, 7, 10), 4u);
  for (int n = 0; n <= 5; ++n) {
    for (int T = 2 * n + 2; T <= 4 * n + 8; ++T) EXPECT_EQ(endo_quotient_dim(n, 5, T), static_cast<std::size_t>(n));
  }
  EXPECT_THROW(endo_quotient_dim(2, 101, 5), InvalidInput);
}

// D(x, y) = (t^n x0 u, t^n x0 + t^n (x1 - y0) u) for x = x0 + x1 u, y = y0 + y1 u.
// So ker D is free on (u, 1) and (0, u), and im D = t^n ker D. Below degree B
// the kernel has dimension 2B and the image inside it 2(B - n).
TEST(TruncatedComplex, KernelAndImageMatchClosedForm) {
  for (int n = 0; n <= 4; ++n) {
    const PrimeField f(101);
    const int T = 4 * n + 6;
    const TruncatedComplex cx(f, n, T);
    const DenseMatrix D = cx.differential();
    const int B = T - 2 * n;
    const auto low = cx.coordinates_below(B);
    EXPECT_EQ(low.size() - D.select_columns(low).rank(), static_cast<std::size_t>(2 * B));

    std::vector<std::size_t> high;
    for (std::size_t i = 0; i < cx.dim(); ++i) {
      if (cx.t_degree(i) >= B) high.push_back(i);
    }
    EXPECT_EQ(D.rank() - D.select_rows(high).rank(), static_cast<std::size_t>(2 * (B - n)));

    // The explicit kernel generators t^i (u, 1) and t^i (0, u).
    for (int i = 0; i < B; ++i) {
      DenseMatrix v(f, cx.dim(), 2);
      v.at(cx.index(0, 1, i), 0) = 1;
      v.at(cx.index(1, 0, i), 0) = 1;
      v.at(cx.index(1, 1, i), 1) = 1;
      EXPECT_TRUE((D * v).is_zero());
    }
  }
}

TEST(TruncatedComplex, ComposesToZero) {
  for (int n = 0; n <= 5; ++n) {
    for (std::uint64_t p : {5ull, 101ull}) {
      const int T = 4 * n + 4;
      const TruncatedComplex cx(PrimeField(p), n, T);
      EXPECT_TRUE(cx.composes_to_zero_below(T - 2 * n));
      EXPECT_TRUE(cx.composes_to_zero_below(T - n));
    }
  }
}

TEST(TruncatedComplex, ModuleAction) {
  const PrimeField f(5);
  const TruncatedComplex cx(f, 2, 8);
  auto one = cx.zero_elem();
  one[0][0] = 1;
  // eps . 1 = t^2 u
  const auto img = cx.act(EpsPoly::eps(f), one);
  EXPECT_EQ(img[1][2], 1u);
  EXPECT_EQ(img[0], std::vector<Elem>(8, 0));
  // eps . u = 0
  auto u = cx.zero_elem();
  u[1][0] = 1;
  const auto zero = cx.act(EpsPoly::eps(f), u);
  EXPECT_EQ(zero, cx.zero_elem());
}

TEST(TruncatedComplex, RejectsBadShape) {
  EXPECT_THROW(TruncatedComplex(PrimeField(5), -1, 8), InvalidInput);
  EXPECT_THROW(TruncatedComplex(PrimeField(5), 3, 3), InvalidInput);
}
