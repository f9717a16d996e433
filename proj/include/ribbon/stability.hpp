#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "ribbon/core.hpp"
#include "ribbon/rational.hpp"

namespace ribbon {

enum class Verdict { Stable, StrictlySemistable, Unstable };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable: return "stable";
    case Verdict::StrictlySemistable: return "strictly-semistable";
    case Verdict::Unstable: return "unstable";
  }
  return "?";
}

/// Stable iff b < 1 + g - 2 gbar; strictly semistable at equality.
inline Verdict classify_glb(const RibbonInvariants& ribbon, const GLBDescriptor& glb) {
  const std::int64_t threshold = checked::add(ribbon.stable_index_bound(), 1);
  const std::int64_t b = glb.b();
  if (b < threshold) return Verdict::Stable;
  if (b == threshold) return Verdict::StrictlySemistable;
  return Verdict::Unstable;
}

/// nullopt when the descriptor carries no split type and no stability status.
inline std::optional<Verdict> classify_vb(const RibbonInvariants& /*ribbon*/, const VBDescriptor& vb) {
  switch (vb.status()) {
    case StabilityStatus::Stable: return Verdict::Stable;
    case StabilityStatus::StrictlySemistable: return Verdict::StrictlySemistable;
    case StabilityStatus::Unstable: return Verdict::Unstable;
    case StabilityStatus::Unspecified: return std::nullopt;
  }
  return std::nullopt;
}

struct Slopes {
  Rational mu_I;     // the generalized line bundle itself
  Rational mu_Ibar;  // its maximal torsion-free quotient on X_red
  Rational mu_F1;    // the kernel of I -> Ibar
};

/// Slopes a1/a0 with respect to a polarization of degree degL.
/// mu_I is the mean of the other two, so mu_I <= mu_Ibar iff mu_F1 <= mu_Ibar.
inline Slopes slopes(const RibbonInvariants& ribbon, std::int64_t degL, const GLBDescriptor& glb) {
  using namespace checked;
  if (degL < 1) throw InvalidInput("polarization degree must be >= 1");
  const std::int64_t d = glb.d();
  const std::int64_t b = glb.b();
  const std::int64_t g = ribbon.g();
  const std::int64_t gbar = ribbon.gbar();
  return Slopes{
      Rational(sub(add(d, 1), g), degL),
      Rational(sub(add(sub(d, b), 2), mul(2, gbar)), degL),
      Rational(sub(add(add(d, b), mul(2, gbar)), mul(2, g)), degL),
  };
}

struct SelfClass {
  friend bool operator==(const SelfClass&, const SelfClass&) = default;
};

/// Gr = F_1 (+) Ibar as a pair of line-bundle degrees on X_red.
struct SplitClass {
  std::int64_t deg_F1;
  std::int64_t deg_Ibar;
  friend bool operator==(const SplitClass&, const SplitClass&) = default;
};

using GrClass = std::variant<SelfClass, SplitClass>;

inline GrClass gr_class(const RibbonInvariants& ribbon, const GLBDescriptor& glb) {
  switch (classify_glb(ribbon, glb)) {
    case Verdict::Stable: return SelfClass{};
    case Verdict::StrictlySemistable: {
      const GLBInvariants inv = glb_invariants(ribbon, glb);
      return SplitClass{inv.deg_F1, inv.deg_Ibar};
    }
    case Verdict::Unstable: break;
  }
  throw UnstableInput("unstable sheaves have no Gr-equivalence class");
}

inline GrClass gr_class(const RibbonInvariants& ribbon, const VBDescriptor& vb) {
  const auto verdict = classify_vb(ribbon, vb);
  if (!verdict) throw InvalidInput("stability of the rank-2 bundle is unspecified");
  switch (*verdict) {
    case Verdict::Stable: return SelfClass{};
    case Verdict::StrictlySemistable:
      if (!checked::is_even(vb.e())) throw InvalidInput("odd-degree rank-2 bundles are never strictly semistable");
      return SplitClass{vb.e() / 2, vb.e() / 2};
    case Verdict::Unstable: break;
  }
  throw UnstableInput("unstable sheaves have no Gr-equivalence class");
}

}  // namespace ribbon
