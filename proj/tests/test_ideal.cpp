#include <gtest/gtest.h>

#include <map>
#include <random>

#include "ribbon/local/ideal.hpp"
#include "ribbon/sweep.hpp"

using namespace ribbon;
using namespace ribbon::local;

namespace {

// Oracle: for an ideal A containing a known monic m in F_p[s], A/(m) is a
// subspace of R/(m) = F_p[s]/(m) (+) eps F_p[s]/(m), a 2 deg(m)-dimensional
// F_p-space. It is spanned by s^i g and s^i eps g for the generators g.
class QuotientOracle {
 public:
  QuotientOracle(PrimeField f, Poly m) : f_(f), m_(std::move(m)), D_(static_cast<std::size_t>(m_.degree())) {}

  std::size_t ambient_dim() const { return 2 * D_; }

  std::vector<std::vector<Elem>> span(const std::vector<EpsPoly>& gens) const {
    std::vector<std::vector<Elem>> rows;
    const EpsPoly eps = EpsPoly::eps(f_);
    for (const auto& g : gens) {
      for (std::size_t i = 0; i < D_; ++i) {
        const Poly si = Poly::monomial(f_, 1, i);
        rows.push_back(coords(si * g));
        rows.push_back(coords(si * (eps * g)));
      }
    }
    return rref(std::move(rows));
  }

  std::vector<std::vector<Elem>> span_with_m(std::vector<EpsPoly> gens) const {
    gens.emplace_back(m_);
    return span(gens);
  }

  /// Basis of U ∩ V from the Zassenhaus trick: echelonize [U | U ; V | 0].
  std::vector<std::vector<Elem>> intersect(const std::vector<std::vector<Elem>>& U,
                                           const std::vector<std::vector<Elem>>& V) const {
    const std::size_t n = ambient_dim();
    std::vector<std::vector<Elem>> rows;
    for (const auto& u : U) {
      auto r = u;
      r.insert(r.end(), u.begin(), u.end());
      rows.push_back(r);
    }
    for (const auto& v : V) {
      auto r = v;
      r.resize(2 * n, 0);
      rows.push_back(r);
    }
    std::vector<std::vector<Elem>> out;
    for (const auto& r : rref(std::move(rows))) {
      if (std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n), [](Elem x) { return x == 0; })) {
        out.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
      }
    }
    return rref(std::move(out));
  }

 private:
  std::vector<Elem> coords(const EpsPoly& x) const {
    std::vector<Elem> v(2 * D_, 0);
    const Poly r0 = divmod(x.p0(), m_).second;
    const Poly r1 = divmod(x.p1(), m_).second;
    for (std::size_t i = 0; i < D_; ++i) {
      v[i] = r0.coeff(i);
      v[D_ + i] = r1.coeff(i);
    }
    return v;
  }

  std::vector<std::vector<Elem>> rref(std::vector<std::vector<Elem>> rows) const {
    std::vector<std::vector<Elem>> out;
    if (rows.empty()) return out;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
      std::size_t piv = r;
      while (piv < rows.size() && rows[piv][c] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[r]);
      const Elem inv = f_.inv(rows[r][c]);
      for (auto& x : rows[r]) x = f_.mul(x, inv);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r || rows[i][c] == 0) continue;
        const Elem k = rows[i][c];
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f_.sub(rows[i][j], f_.mul(k, rows[r][j]));
      }
      ++r;
    }
    rows.resize(r);
    return rows;
  }

  PrimeField f_;
  Poly m_;
  std::size_t D_;
};

Poly random_poly(std::mt19937_64& rng, const PrimeField& f, int max_deg) {
  std::uniform_int_distribution<Elem> c(0, f.modulus() - 1);
  std::vector<Elem> v(static_cast<std::size_t>(max_deg) + 1);
  for (auto& x : v) x = c(rng);
  return Poly(f, v);
}

EpsPoly random_eps(std::mt19937_64& rng, const PrimeField& f, int max_deg) {
  return EpsPoly(random_poly(rng, f, max_deg), random_poly(rng, f, max_deg));
}

// Product of (s - c)^k over a few random roots.
Poly random_split(std::mt19937_64& rng, const PrimeField& f, std::map<Elem, int>& roots) {
  std::uniform_int_distribution<Elem> root(0, f.modulus() - 1);
  std::uniform_int_distribution<int> mult(1, 3), count(1, 3);
  Poly m = Poly::constant(f, 1);
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    const Elem c = root(rng);
    const int e = mult(rng);
    roots[c] += e;
    m = m * Poly::linear(f, c).pow(static_cast<unsigned>(e));
  }
  return m;
}

Poly sp(const PrimeField& f, std::size_t k) { return Poly::monomial(f, 1, k); }

}  // namespace

TEST(Ideal, HermiteExamples) {
  const PrimeField f(101);
  const Poly zero(f);
  const Poly one = Poly::constant(f, 1);
  const auto a = ideal_from_generators(f, {EpsPoly::eps(f), EpsPoly(sp(f, 2))});
  EXPECT_EQ(a.basis(), (PolyMatrix{{sp(f, 2), zero}, {zero, one}}));

  const auto unit = ideal_from_generators(f, {EpsPoly::one(f)});
  EXPECT_EQ(unit.basis(), (PolyMatrix{{one, zero}, {zero, one}}));
  EXPECT_EQ(ideal_colength(unit), 0);

  const auto c = ideal_from_generators(f, {EpsPoly(sp(f, 1), one)});
  EXPECT_EQ(c.basis(), (PolyMatrix{{sp(f, 1), one}, {zero, sp(f, 1)}}));
}

TEST(Ideal, Errors) {
  const PrimeField f(5);
  EXPECT_THROW(ideal_from_generators(f, {EpsPoly(Poly(f))}), ZeroIdeal);
  EXPECT_THROW(ideal_from_generators(f, {}), ZeroIdeal);
  const auto eps_only = ideal_from_generators(f, {EpsPoly::eps(f)});
  EXPECT_EQ(eps_only.rank(), 1u);
  EXPECT_THROW(ideal_colength(eps_only), RankDeficient);
  EXPECT_THROW(local_index_at(eps_only, 0), RankDeficient);
  EXPECT_THROW(ideal_from_generators(f, {EpsPoly::eps(PrimeField(7))}), InvalidInput);
}

TEST(Ideal, Colengths) {
  const PrimeField f(101);
  for (std::size_t n = 0; n <= 6; ++n) {
    EXPECT_EQ(ideal_colength(ideal_from_generators(f, {EpsPoly(sp(f, n)), EpsPoly::eps(f)})), static_cast<int>(n));
  }
  EXPECT_EQ(ideal_colength(ideal_from_generators(f, {EpsPoly(sp(f, 1), Poly::constant(f, 1))})), 2);
  // Principal ideal of a non-zerodivisor with 1-part of degree k: colength 2k.
  const Poly f0 = Poly::linear(f, 3) * Poly::linear(f, 9) * Poly::linear(f, 9);
  EXPECT_EQ(ideal_colength(ideal_from_generators(f, {EpsPoly(f0, sp(f, 5))})), 6);
}

TEST(Ideal, IntersectionWithUnitIdeal) {
  const PrimeField f(101);
  const Elem t = 7;
  const auto unit = ideal_from_generators(f, {EpsPoly::eps(f), EpsPoly(sp(f, 0))});
  const Poly lin = Poly::linear(f, t);
  const auto b = ideal_from_generators(f, {EpsPoly(Poly(f) - lin.scaled(t), Poly::constant(f, 1)), EpsPoly(lin * lin)});
  EXPECT_EQ(ideal_intersect(unit, b), b);
  EXPECT_EQ(ideal_intersect(b, unit), b);
}

TEST(Ideal, LocalIndexExamples) {
  const PrimeField f(101);
  EXPECT_EQ(local_index_at(ideal_from_generators(f, {EpsPoly(sp(f, 2)), EpsPoly::eps(f)}), 0), 2);
  EXPECT_EQ(local_index_at(ideal_from_generators(f, {EpsPoly(sp(f, 1), Poly::constant(f, 1))}), 0), 0);
  // (s^2, s eps) = s (s, eps)
  const auto a = ideal_from_generators(f, {EpsPoly(sp(f, 2)), EpsPoly(Poly(f), sp(f, 1))});
  EXPECT_EQ(local_index_at(a, 0), 1);
  EXPECT_EQ(local_colength(a, 0), 3);
  EXPECT_EQ(local_index_at(a, 5), 0);
}

TEST(Ideal, Containment) {
  const PrimeField f(5);
  const auto a = ideal_from_generators(f, {EpsPoly(sp(f, 3)), EpsPoly::eps(f)});
  EXPECT_TRUE(ideal_contains(a, EpsPoly(sp(f, 4), sp(f, 0))));
  EXPECT_FALSE(ideal_contains(a, EpsPoly(sp(f, 2))));
  EXPECT_TRUE(ideal_contains(a, EpsPoly(Poly(f))));
}

TEST(Ideal, SumAndScale) {
  const PrimeField f(101);
  const auto a = ideal_from_generators(f, {EpsPoly(sp(f, 3)), EpsPoly::eps(f)});
  const auto b = ideal_from_generators(f, {EpsPoly(sp(f, 2))});
  EXPECT_EQ(ideal_sum(a, b), ideal_from_generators(f, {EpsPoly(sp(f, 2)), EpsPoly::eps(f)}));
  const auto s_times_a = ideal_scale(EpsPoly(sp(f, 1)), a);
  EXPECT_EQ(s_times_a, ideal_from_generators(f, {EpsPoly(sp(f, 4)), EpsPoly(Poly(f), sp(f, 1))}));
}

// Colength, equality and intersection agree with linear algebra in R/(m).
TEST(Ideal, AgreesWithQuotientOracle) {
  std::mt19937_64 rng(sweep::seed_from_env() + 2);
  for (std::uint64_t p : {5ull, 101ull}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 60; ++trial) {
      std::map<Elem, int> roots;
      const Poly m = random_split(rng, f, roots);
      const QuotientOracle oracle(f, m);

      std::vector<EpsPoly> ga{EpsPoly(m)}, gb{EpsPoly(m)};
      for (int i = 0; i < 2; ++i) ga.push_back(random_eps(rng, f, 3));
      for (int i = 0; i < 2; ++i) gb.push_back(random_eps(rng, f, 3));
      const auto A = ideal_from_generators(f, ga);
      const auto B = ideal_from_generators(f, gb);

      const auto UA = oracle.span(ga);
      const auto UB = oracle.span(gb);
      EXPECT_EQ(static_cast<std::size_t>(ideal_colength(A)), oracle.ambient_dim() - UA.size());
      EXPECT_EQ(static_cast<std::size_t>(ideal_colength(B)), oracle.ambient_dim() - UB.size());
      EXPECT_EQ(A == B, UA == UB);
      // Regenerating from the Hermite basis yields the same subspace.
      EXPECT_EQ(oracle.span_with_m(A.generators()), UA);

      const auto meet = ideal_intersect(A, B);
      EXPECT_EQ(oracle.span_with_m(meet.generators()), oracle.intersect(UA, UB));
      EXPECT_EQ(ideal_intersect(B, A), meet);

      const auto both = ideal_sum(A, B);
      EXPECT_EQ(ideal_colength(both) + ideal_colength(meet), ideal_colength(A) + ideal_colength(B));

      // Local colengths over the roots of m add up.
      int total = 0;
      for (const auto& [c, e] : roots) total += local_colength(A, c);
      EXPECT_EQ(total, ideal_colength(A));
    }
  }
}

// Canonicity: generator order and duplicates do not change the ideal.
TEST(Ideal, GeneratorOrderInsensitive) {
  std::mt19937_64 rng(sweep::seed_from_env() + 3);
  const PrimeField f(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<EpsPoly> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_eps(rng, f, 3));
    if (std::all_of(gens.begin(), gens.end(), [](const EpsPoly& g) { return g.is_zero(); })) continue;
    const auto a = ideal_from_generators(f, gens);
    EXPECT_EQ(ideal_from_generators(f, a.generators()), a);
    std::shuffle(gens.begin(), gens.end(), rng);
    gens.push_back(gens.front());
    EXPECT_EQ(ideal_from_generators(f, gens), a);
    // Closure under eps: eps * g is in the ideal for every basis row g.
    for (const auto& g : a.generators()) EXPECT_TRUE(ideal_contains(a, EpsPoly::eps(f) * g));
  }
}

// colength(f A) = colength(A) + colength((f)) and local indices are twist invariant.
TEST(Ideal, Multiplicativity) {
  std::mt19937_64 rng(sweep::seed_from_env() + 4);
  for (std::uint64_t p : {5ull, 101ull}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 80; ++trial) {
      std::map<Elem, int> roots;
      const Poly m = random_split(rng, f, roots);
      const auto A = ideal_from_generators(f, {EpsPoly(m), random_eps(rng, f, 3), random_eps(rng, f, 2)});
      const auto twist = sweep::random_nonzerodivisor(rng, f, 3);
      const auto principal = ideal_from_generators(f, {twist});
      const auto fA = ideal_scale(twist, A);
      EXPECT_EQ(ideal_colength(fA), ideal_colength(A) + ideal_colength(principal));
      EXPECT_EQ(ideal_colength(principal), 2 * twist.p0().degree());
      for (const auto& [c, e] : roots) EXPECT_EQ(local_index_at(fA, c), local_index_at(A, c));
    }
  }
}

TEST(Ideal, IndexOfLocalModels) {
  const PrimeField f(101);
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto model = ideal_from_generators(f, {EpsPoly(sp(f, n)), EpsPoly::eps(f)});
    EXPECT_EQ(local_index_at(model, 0), static_cast<int>(n));
    // Shifted to s = c.
    const Elem c = 17;
    const auto moved = ideal_from_generators(f, {EpsPoly(Poly::linear(f, c).pow(static_cast<unsigned>(n))), EpsPoly::eps(f)});
    EXPECT_EQ(local_index_at(moved, c), static_cast<int>(n));
    EXPECT_EQ(local_index_at(moved, 0), 0);
  }
}
