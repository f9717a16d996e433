#pragma once

// Ideals of R = F_p[s, eps]/(eps^2). As an F_p[s]-module R is free on {1, eps},
// so an ideal is a submodule of F_p[s]^2 (coordinates: 1-part, eps-part) that
// is closed under multiplication by eps, i.e. under (a, b) -> (0, a). Ideals
// are stored by their canonical Hermite basis.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/errors.hpp"
#include "ribbon/local/hnf.hpp"
#include "ribbon/local/poly.hpp"

namespace ribbon::local {

/// p0 + p1 * eps.
class EpsPoly {
 public:
  EpsPoly(Poly p0, Poly p1) : p0_(std::move(p0)), p1_(std::move(p1)) {}
  explicit EpsPoly(Poly p0) : p0_(p0), p1_(Poly(p0.field())) {}

  static EpsPoly eps(PrimeField f) { return EpsPoly(Poly(f), Poly::constant(f, 1)); }
  static EpsPoly one(PrimeField f) { return EpsPoly(Poly::constant(f, 1)); }

  const Poly& p0() const { return p0_; }
  const Poly& p1() const { return p1_; }
  const PrimeField& field() const { return p0_.field(); }
  bool is_zero() const { return p0_.is_zero() && p1_.is_zero(); }
  /// Non-zerodivisors of R are exactly the elements with nonzero 1-part.
  bool is_nonzerodivisor() const { return !p0_.is_zero(); }

  friend EpsPoly operator+(const EpsPoly& a, const EpsPoly& b) { return {a.p0_ + b.p0_, a.p1_ + b.p1_}; }
  friend EpsPoly operator-(const EpsPoly& a, const EpsPoly& b) { return {a.p0_ - b.p0_, a.p1_ - b.p1_}; }
  friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
    return {a.p0_ * b.p0_, a.p0_ * b.p1_ + a.p1_ * b.p0_};
  }
  friend EpsPoly operator*(const Poly& a, const EpsPoly& b) { return {a * b.p0_, a * b.p1_}; }
  friend bool operator==(const EpsPoly&, const EpsPoly&) = default;

  std::string to_string() const {
    if (p1_.is_zero()) return p0_.to_string();
    std::string eps_part;
    if (p1_.degree() == 0) {
      eps_part = p1_.lead() == 1 ? "eps" : std::to_string(p1_.lead()) + "*eps";
    } else {
      eps_part = "(" + p1_.to_string() + ")*eps";
    }
    if (p0_.is_zero()) return eps_part;
    return p0_.to_string() + " + " + eps_part;
  }

 private:
  Poly p0_;
  Poly p1_;
};

class EpsIdeal {
 public:
  const PrimeField& field() const { return field_; }
  /// Hermite basis rows (1-part, eps-part); one row when the ideal lies in eps*R.
  const PolyMatrix& basis() const { return rows_; }
  std::size_t rank() const { return rows_.size(); }

  /// Monic generator of the projection to the 1-part; zero when rank 1.
  Poly one_part_generator() const { return rank() == 2 ? rows_[0][0] : Poly(field_); }

  /// Monic generator h with A ∩ eps F_p[s] = eps * (h).
  Poly eps_part_generator() const { return rows_.back()[1]; }

  std::vector<EpsPoly> generators() const {
    std::vector<EpsPoly> out;
    for (const auto& r : rows_) out.emplace_back(r[0], r[1]);
    return out;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) out += ", ";
      out += EpsPoly(rows_[i][0], rows_[i][1]).to_string();
    }
    return out + ")";
  }

  friend bool operator==(const EpsIdeal& a, const EpsIdeal& b) { return a.field_ == b.field_ && a.rows_ == b.rows_; }

 private:
  EpsIdeal(PrimeField f, PolyMatrix rows) : field_(f), rows_(std::move(rows)) {}
  friend EpsIdeal ideal_from_generators(PrimeField, const std::vector<EpsPoly>&);

  PrimeField field_;
  PolyMatrix rows_;
};

/// Smallest ideal containing `gens`: the F_p[s]-span of g and eps*g for every g.
inline EpsIdeal ideal_from_generators(PrimeField f, const std::vector<EpsPoly>& gens) {
  PolyMatrix rows;
  for (const auto& g : gens) {
    if (!(g.field() == f)) throw InvalidInput("generator over a different prime field");
    rows.push_back({g.p0(), g.p1()});
    rows.push_back({Poly(f), g.p0()});
  }
  PolyMatrix h = hermite_form(std::move(rows));
  if (h.empty()) throw ZeroIdeal("all generators are zero");
  return EpsIdeal(f, std::move(h));
}

inline bool ideal_equals(const EpsIdeal& a, const EpsIdeal& b) { return a == b; }

inline bool ideal_contains(const EpsIdeal& a, const EpsPoly& x) {
  std::vector<EpsPoly> gens = a.generators();
  gens.push_back(x);
  return ideal_from_generators(a.field(), gens) == a;
}

inline EpsIdeal ideal_sum(const EpsIdeal& a, const EpsIdeal& b) {
  auto gens = a.generators();
  for (auto& g : b.generators()) gens.push_back(std::move(g));
  return ideal_from_generators(a.field(), gens);
}

/// f * A.
inline EpsIdeal ideal_scale(const EpsPoly& f, const EpsIdeal& a) {
  std::vector<EpsPoly> gens;
  for (const auto& g : a.generators()) gens.push_back(f * g);
  return ideal_from_generators(a.field(), gens);
}

/// A ∩ B from the kernel of (x, y) -> x*A - y*B: echelonize [A | A ; B | 0]
/// and keep the right halves of rows whose left half vanished.
inline EpsIdeal ideal_intersect(const EpsIdeal& a, const EpsIdeal& b) {
  if (!(a.field() == b.field())) throw InvalidInput("ideals over different prime fields");
  const PrimeField& f = a.field();
  PolyMatrix stacked;
  for (const auto& r : a.basis()) stacked.push_back({r[0], r[1], r[0], r[1]});
  for (const auto& r : b.basis()) stacked.push_back({r[0], r[1], Poly(f), Poly(f)});
  std::vector<EpsPoly> gens;
  for (const auto& r : hermite_form(std::move(stacked))) {
    if (r[0].is_zero() && r[1].is_zero()) gens.emplace_back(r[2], r[3]);
  }
  return ideal_from_generators(f, gens);
}

/// dim_k R/A = deg det of the Hermite basis.
inline int ideal_colength(const EpsIdeal& a) {
  if (a.rank() < 2) throw RankDeficient("ideal inside eps*R has infinite colength");
  return a.basis()[0][0].degree() + a.basis()[1][1].degree();
}

/// Contribution of the point s = c to the colength.
inline int local_colength(const EpsIdeal& a, Elem c) {
  if (a.rank() < 2) throw RankDeficient("ideal inside eps*R has infinite colength");
  return a.basis()[0][0].order_at(c) + a.basis()[1][1].order_at(c);
}

/// Local index at s = c: ord_c of the 1-part generator minus ord_c of the
/// generator of A ∩ eps F_p[s]. Locally A = u*(s^n, eps) gives n.
inline int local_index_at(const EpsIdeal& a, Elem c) {
  if (a.rank() < 2) throw RankDeficient("local index needs an ideal of generic rank 2");
  return a.one_part_generator().order_at(c) - a.eps_part_generator().order_at(c);
}

}  // namespace ribbon::local
