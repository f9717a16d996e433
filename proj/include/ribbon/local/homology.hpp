#pragma once

// Finite-dimensional model of Hom(F_., I_n) for the 2-periodic free resolution
//
//   ... -> O_0^2 --M--> O_0^2 --M--> O_0^2 -> I_n -> 0,   M = [[eps, s^n], [0, -eps]]
//
// over O_0 = k[s, eps]/(eps^2), where I_n = O_n = k[t, u]/(u^2) is an O_0-module
// via s -> t, eps -> u t^n. Hom(O_0^2, I_n) = I_n^2 and every differential is
// (x, y) -> (x, y) * M. I_n is truncated at t-degree T; the differential raises
// t-degree by exactly n, so truncation noise lives only in the top n degrees.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ribbon/errors.hpp"
#include "ribbon/local/ideal.hpp"
#include "ribbon/local/linalg.hpp"

namespace ribbon::local {

class TruncatedComplex {
 public:
  TruncatedComplex(PrimeField f, int n, int truncation) : field_(f), n_(n), T_(truncation) {
    if (n < 0) throw InvalidInput("local index n must be non-negative");
    if (truncation <= n) throw InvalidInput("truncation must exceed n");
  }

  const PrimeField& field() const { return field_; }
  int n() const { return n_; }
  int truncation() const { return T_; }

  /// Coordinates of (I_n / t^T)^2: component c (0, 1), part q (0: 1-part, 1: u-part), degree i.
  std::size_t dim() const { return 4 * static_cast<std::size_t>(T_); }
  std::size_t index(int component, int part, int degree) const {
    return static_cast<std::size_t>((component * 2 + part) * T_ + degree);
  }
  int t_degree(std::size_t idx) const { return static_cast<int>(idx % static_cast<std::size_t>(T_)); }

  /// Entries of M as elements of O_0.
  std::array<std::array<EpsPoly, 2>, 2> relation_matrix() const {
    const Poly zero(field_);
    const EpsPoly eps = EpsPoly::eps(field_);
    return {{{eps, EpsPoly(Poly::monomial(field_, 1, static_cast<std::size_t>(n_)))},
             {EpsPoly(zero), EpsPoly(zero) - eps}}};
  }

  /// An element of I_n / t^T: (1-part, u-part) coefficient vectors of length T.
  using ModElem = std::array<std::vector<Elem>, 2>;

  ModElem zero_elem() const { return {std::vector<Elem>(T_, 0), std::vector<Elem>(T_, 0)}; }

  /// (a + b eps) . (x + y u) = a x + (a y + t^n b x) u, truncated.
  ModElem act(const EpsPoly& r, const ModElem& m) const {
    ModElem out = zero_elem();
    auto accumulate = [&](std::vector<Elem>& dst, const Poly& coeff, const std::vector<Elem>& src, int shift) {
      for (int i = 0; i <= coeff.degree(); ++i) {
        const Elem c = coeff.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        for (int j = 0; j + i + shift < T_; ++j) {
          const auto k = static_cast<std::size_t>(j + i + shift);
          dst[k] = field_.add(dst[k], field_.mul(c, src[static_cast<std::size_t>(j)]));
        }
      }
    };
    accumulate(out[0], r.p0(), m[0], 0);
    accumulate(out[1], r.p0(), m[1], 0);
    accumulate(out[1], r.p1(), m[0], n_);
    return out;
  }

  /// Matrix of the differential (x, y) -> (x, y) * M; column j is the image of basis vector j.
  DenseMatrix differential() const {
    const auto M = relation_matrix();
    DenseMatrix D(field_, dim(), dim());
    for (std::size_t col = 0; col < dim(); ++col) {
      std::array<ModElem, 2> src{zero_elem(), zero_elem()};
      const int comp = static_cast<int>(col / (2 * static_cast<std::size_t>(T_)));
      const int part = static_cast<int>((col / static_cast<std::size_t>(T_)) % 2);
      src[comp][part][static_cast<std::size_t>(t_degree(col))] = 1;
      for (int j = 0; j < 2; ++j) {
        ModElem img = zero_elem();
        for (int i = 0; i < 2; ++i) {
          const ModElem term = act(M[i][j], src[i]);
          for (int q = 0; q < 2; ++q) {
            for (int d = 0; d < T_; ++d) {
              img[q][d] = field_.add(img[q][d], term[q][d]);
            }
          }
        }
        for (int q = 0; q < 2; ++q) {
          for (int d = 0; d < T_; ++d) D.at(index(j, q, d), col) = img[q][d];
        }
      }
    }
    return D;
  }

  /// Coordinates of t-degree below `bound`.
  std::vector<std::size_t> coordinates_below(int bound) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (t_degree(i) < bound) out.push_back(i);
    }
    return out;
  }

  /// D o D vanishes on coordinates of t-degree below `bound`.
  bool composes_to_zero_below(int bound) const {
    const DenseMatrix D = differential();
    const auto low = coordinates_below(bound);
    return (D * D.select_columns(low)).is_zero();
  }

  /// dim (ker D ∩ W) / (im D ∩ W) for W = coordinates below `bound`.
  std::size_t homology_dim_below(int bound) const {
    const DenseMatrix D = differential();
    const auto low = coordinates_below(bound);
    std::vector<std::size_t> high;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (t_degree(i) >= bound) high.push_back(i);
    }
    const std::size_t kernel = low.size() - D.select_columns(low).rank();
    // im D ∩ W = D({x : D x has no high coordinates}) has dimension rank(D) - rank(high rows of D).
    const std::size_t image = D.rank() - D.select_rows(high).rank();
    return kernel - image;
  }

 private:
  PrimeField field_;
  int n_;
  int T_;
};

/// dim Ext^1_{O_0}(I_n, I_n), computed at truncations T and T + 2 on
/// t-degrees below T - 2n. Expected 2n.
inline std::size_t ext1_dim(int n, std::uint64_t p, int truncation) {
  if (n < 0) throw InvalidInput("n must be non-negative");
  if (truncation < 4 * n + 4) {
    throw InvalidInput("truncation " + std::to_string(truncation) + " below 4n+4 = " + std::to_string(4 * n + 4));
  }
  const PrimeField f(p);
  const std::size_t lo = TruncatedComplex(f, n, truncation).homology_dim_below(truncation - 2 * n);
  const std::size_t hi = TruncatedComplex(f, n, truncation + 2).homology_dim_below(truncation + 2 - 2 * n);
  if (lo != hi) {
    throw NotStabilized("Ext^1 dimension " + std::to_string(lo) + " at T=" + std::to_string(truncation) + " vs " +
                        std::to_string(hi) + " at T=" + std::to_string(truncation + 2));
  }
  return lo;
}

namespace detail {

// Length of End(I_n)/O_0 in t-degrees below T - n. End(I_n) = Hom(F_0, I_n) ∩ ker D,
// and O_0 acts through r -> (r . u, r . 1), the images of the two generators.
inline std::size_t endo_quotient_at(const PrimeField& f, int n, int T) {
  const TruncatedComplex cx(f, n, T);
  const int bound = T - n;
  const auto low = cx.coordinates_below(bound);
  const std::size_t endo = low.size() - cx.differential().select_columns(low).rank();

  using ModElem = TruncatedComplex::ModElem;
  ModElem gen_f = cx.zero_elem();
  gen_f[1][0] = 1;  // u
  ModElem gen_e = cx.zero_elem();
  gen_e[0][0] = 1;  // 1

  std::vector<std::vector<Elem>> images;
  for (int i = 0; i < T; ++i) {
    for (int part = 0; part < 2; ++part) {
      const Poly mono = Poly::monomial(f, 1, static_cast<std::size_t>(i));
      const EpsPoly r = part == 0 ? EpsPoly(mono) : EpsPoly(Poly(f), mono);
      const std::array<ModElem, 2> phi{cx.act(r, gen_f), cx.act(r, gen_e)};
      std::vector<Elem> v(cx.dim(), 0);
      bool inside = true;
      bool nonzero = false;
      for (int c = 0; c < 2; ++c) {
        for (int q = 0; q < 2; ++q) {
          for (int d = 0; d < T; ++d) {
            const Elem x = phi[c][q][d];
            if (!x) continue;
            nonzero = true;
            if (d >= bound) inside = false;
            v[cx.index(c, q, d)] = x;
          }
        }
      }
      if (inside && nonzero) images.push_back(std::move(v));
    }
  }
  DenseMatrix span(f, images.size(), cx.dim());
  for (std::size_t r = 0; r < images.size(); ++r) {
    for (std::size_t j = 0; j < cx.dim(); ++j) span.at(r, j) = images[r][j];
  }
  return endo - span.rank();
}

}  // namespace detail

/// Length of End(I_n)/O_0, computed at truncations T and T + 2. Expected n.
inline std::size_t endo_quotient_dim(int n, std::uint64_t p, int truncation) {
  if (n < 0) throw InvalidInput("n must be non-negative");
  if (truncation < 2 * n + 2) {
    throw InvalidInput("truncation " + std::to_string(truncation) + " below 2n+2 = " + std::to_string(2 * n + 2));
  }
  const PrimeField f(p);
  const std::size_t lo = detail::endo_quotient_at(f, n, truncation);
  const std::size_t hi = detail::endo_quotient_at(f, n, truncation + 2);
  if (lo != hi) {
    throw NotStabilized("End/O_0 length " + std::to_string(lo) + " at T=" + std::to_string(truncation) + " vs " +
                        std::to_string(hi) + " at T=" + std::to_string(truncation + 2));
  }
  return lo;
}

}  // namespace ribbon::local
