#pragma once

// Numerical invariants of a ribbon X (arithmetic genus g, reduced genus gbar)
// and of the two kinds of length-2 sheaves it carries: generalized line
// bundles, described by degree plus local-index multiset, and rank-2 bundles
// pushed forward from X_red.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ribbon/checked.hpp"
#include "ribbon/errors.hpp"

namespace ribbon {

class RibbonInvariants {
 public:
  std::int64_t g() const { return g_; }
  std::int64_t gbar() const { return gbar_; }
  /// Degree of the nilradical as a line bundle on X_red.
  std::int64_t degN() const { return checked::sub(checked::sub(checked::mul(2, gbar_), 1), g_); }

  /// Degree of a pushed-forward rank-2 bundle whose direct image has the
  /// Hilbert polynomial of a degree-d line bundle: e = d + 2 gbar - g - 1.
  std::int64_t vb_degree(std::int64_t d) const { return checked::add(d, degN()); }

  /// Largest index of a stable generalized line bundle; a semistable one may
  /// reach stable_index_bound() + 1.
  std::int64_t stable_index_bound() const { return checked::sub(g_, checked::mul(2, gbar_)); }

  friend bool operator==(const RibbonInvariants&, const RibbonInvariants&) = default;

 private:
  RibbonInvariants(std::int64_t g, std::int64_t gbar) : g_(g), gbar_(gbar) {}
  friend RibbonInvariants mk_ribbon(std::int64_t g, std::int64_t gbar);

  std::int64_t g_;
  std::int64_t gbar_;
};

inline RibbonInvariants mk_ribbon(std::int64_t g, std::int64_t gbar) {
  if (gbar < 0) throw InvalidInput("gbar must be non-negative, got " + std::to_string(gbar));
  return RibbonInvariants(g, gbar);
}

/// Multiset of positive integers kept as a weakly decreasing sequence.
class IndexMultiset {
 public:
  IndexMultiset() = default;
  explicit IndexMultiset(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    for (auto b : entries_) {
      if (b < 1) throw NonPositiveIndex("local index entries must be >= 1, got " + std::to_string(b));
    }
    std::sort(entries_.begin(), entries_.end(), std::greater<>());
  }

  std::span<const std::int64_t> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::int64_t sum() const {
    std::int64_t s = 0;
    for (auto b : entries_) s = checked::add(s, b);
    return s;
  }

  /// Comma-joined weakly decreasing entries; empty string for the empty multiset.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(entries_[i]);
    }
    return out;
  }

  friend bool operator==(const IndexMultiset&, const IndexMultiset&) = default;
  friend auto operator<=>(const IndexMultiset&, const IndexMultiset&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// Discrete invariant of a generalized line bundle: degree plus local indices.
class GLBDescriptor {
 public:
  std::int64_t d() const { return d_; }
  const IndexMultiset& indices() const { return indices_; }
  std::int64_t b() const { return indices_.sum(); }
  bool is_line_bundle() const { return indices_.empty(); }

  friend bool operator==(const GLBDescriptor&, const GLBDescriptor&) = default;

 private:
  GLBDescriptor(std::int64_t d, IndexMultiset indices) : d_(d), indices_(std::move(indices)) {}
  friend GLBDescriptor mk_glb(const RibbonInvariants&, std::int64_t, IndexMultiset);

  std::int64_t d_;
  IndexMultiset indices_;
};

/// Throws ParityViolation unless d - b is even.
inline GLBDescriptor mk_glb(const RibbonInvariants& /*ribbon*/, std::int64_t d, IndexMultiset indices) {
  const std::int64_t b = indices.sum();
  if (!checked::is_even(checked::sub(d, b))) {
    throw ParityViolation("degree " + std::to_string(d) + " minus index " + std::to_string(b) +
                          " is odd");
  }
  return GLBDescriptor(d, std::move(indices));
}

inline GLBDescriptor mk_glb(const RibbonInvariants& ribbon, std::int64_t d, std::vector<std::int64_t> indices) {
  return mk_glb(ribbon, d, IndexMultiset(std::move(indices)));
}

struct GLBInvariants {
  std::int64_t b;
  std::int64_t blowup_genus;  // genus of the associated blow-up ribbon
  std::int64_t deg_Ibar;      // degree of the maximal torsion-free quotient on X_red
  std::int64_t deg_F1;        // degree of the kernel F_1 of I -> Ibar
  std::int64_t e;             // deg_Ibar + deg_F1

  friend bool operator==(const GLBInvariants&, const GLBInvariants&) = default;
};

inline GLBInvariants glb_invariants(const RibbonInvariants& ribbon, const GLBDescriptor& glb) {
  using namespace checked;
  const std::int64_t b = glb.b();
  GLBInvariants inv{};
  inv.b = b;
  inv.blowup_genus = sub(ribbon.g(), b);
  inv.deg_Ibar = sub(glb.d(), b) / 2;
  inv.deg_F1 = add(add(glb.d(), b) / 2, ribbon.degN());
  inv.e = add(inv.deg_Ibar, inv.deg_F1);
  return inv;
}

enum class StabilityStatus { Stable, StrictlySemistable, Unstable, Unspecified };

struct SplitType {
  std::int64_t a;
  std::int64_t b;
  friend bool operator==(const SplitType&, const SplitType&) = default;
};

/// Rank-2 bundle on X_red pushed forward to X. On a rational X_red every such
/// bundle splits, so the split type is mandatory there. Elsewhere the split
/// type is optional and the stability status is carried as input data.
class VBDescriptor {
 public:
  std::int64_t e() const { return e_; }
  const std::optional<SplitType>& split() const { return split_; }
  StabilityStatus status() const { return status_; }

  friend bool operator==(const VBDescriptor&, const VBDescriptor&) = default;

 private:
  VBDescriptor(std::int64_t e, std::optional<SplitType> split, StabilityStatus status)
      : e_(e), split_(split), status_(status) {}
  friend VBDescriptor mk_vb(const RibbonInvariants&, std::int64_t, std::optional<SplitType>, StabilityStatus);

  std::int64_t e_;
  std::optional<SplitType> split_;
  StabilityStatus status_;
};

inline StabilityStatus split_status(const SplitType& s) {
  return s.a == s.b ? StabilityStatus::StrictlySemistable : StabilityStatus::Unstable;
}

inline VBDescriptor mk_vb(const RibbonInvariants& ribbon, std::int64_t e, std::optional<SplitType> split = std::nullopt,
                          StabilityStatus status = StabilityStatus::Unspecified) {
  if (split) {
    if (checked::add(split->a, split->b) != e) {
      throw InvalidInput("split type (" + std::to_string(split->a) + "," + std::to_string(split->b) +
                         ") does not sum to degree " + std::to_string(e));
    }
    const StabilityStatus derived = split_status(*split);
    if (status != StabilityStatus::Unspecified && status != derived) {
      throw InvalidInput("stability status contradicts the split type");
    }
    status = derived;
  } else if (ribbon.gbar() == 0) {
    throw InvalidInput("a rank-2 bundle on a rational curve needs its split type");
  }
  return VBDescriptor(e, split, status);
}

/// Hilbert polynomial leading*t + constant.
struct LinearPoly {
  std::int64_t leading;
  std::int64_t constant;
  friend bool operator==(const LinearPoly&, const LinearPoly&) = default;
};

/// P_d(t) = deg(L) t + d + 1 - g.
inline LinearPoly hilbert_poly(const RibbonInvariants& ribbon, std::int64_t degL, std::int64_t d) {
  if (degL < 1) throw InvalidInput("polarization degree must be >= 1");
  return {degL, checked::sub(checked::add(d, 1), ribbon.g())};
}

/// Closed range of integers; exact when lo == hi.
struct DimRange {
  std::int64_t lo;
  std::int64_t hi;
  bool exact() const { return lo == hi; }
  friend bool operator==(const DimRange&, const DimRange&) = default;
};

/// Possible values of h0(C, M) for a line bundle M of degree deg on a smooth
/// curve C of genus gbar, over all such M. Exact outside 0 <= deg <= 2 gbar - 2.
inline DimRange h0_line_bundle(std::int64_t deg, std::int64_t gbar) {
  using namespace checked;
  if (deg < 0) return {0, 0};
  if (gbar == 0) return {add(deg, 1), add(deg, 1)};
  if (deg > sub(mul(2, gbar), 2)) {
    const std::int64_t rr = sub(add(deg, 1), gbar);
    return {rr, rr};
  }
  // Riemann-Roch below, Clifford above; deg 0 gives {0 (nontrivial), 1 (trivial)}.
  return {std::max<std::int64_t>(0, sub(add(deg, 1), gbar)), add(deg / 2, 1)};
}

/// dim J^0(X) = h1(O_X) = g + h0(X_red, N). nullopt when h0(N) depends on
/// the moduli of N, i.e. 0 <= deg N <= 2 gbar - 2.
inline std::optional<std::int64_t> jacobian_dim(const RibbonInvariants& ribbon) {
  const DimRange h0 = h0_line_bundle(ribbon.degN(), ribbon.gbar());
  if (!h0.exact()) return std::nullopt;
  return checked::add(ribbon.g(), h0.lo);
}

}  // namespace ribbon
