#pragma once

// One-parameter families of ideals in F_p[s, eps]/(eps^2) with the parameter
// specialized to a nonzero scalar t (generic fiber) and to 0 (special fiber).

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "ribbon/errors.hpp"
#include "ribbon/local/ideal.hpp"

namespace ribbon::local {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct DeformationReport {
  int b = 0;
  std::uint64_t p = 0;
  Elem t = 0;
  std::string generic_fiber;
  std::string special_fiber;
  int generic_colength = 0;
  int special_colength = 0;
  int index_at_zero = 0;
  int index_at_t = 0;
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
};

namespace detail {

inline Elem require_unit(const PrimeField& f, std::int64_t t) {
  const Elem r = f.reduce(t);
  if (r == 0) throw InvalidInput("t must be nonzero in F_" + std::to_string(f.modulus()));
  return r;
}

inline std::string expect(long long got, long long want) {
  return "got " + std::to_string(got) + ", expected " + std::to_string(want);
}

}  // namespace detail

/// Generators of J_a: eps(s-a), s^b0 (eps - a^(b0+1)(s-a)), s^b0 (s-a)^2, eps - a s^(b0+1) + a^2 s^b0.
inline std::vector<EpsPoly> deformation_I_generators(const PrimeField& f, int b0, Elem a) {
  const Poly sb = Poly::monomial(f, 1, static_cast<std::size_t>(b0));
  const Poly lin = Poly::linear(f, a);
  const Poly zero(f);
  const Poly one = Poly::constant(f, 1);
  const Elem a_pow = f.pow(a, static_cast<std::uint64_t>(b0) + 1);
  return {
      EpsPoly(zero, lin),
      EpsPoly(zero - sb * lin.scaled(a_pow), sb),
      EpsPoly(sb * lin * lin),
      EpsPoly(Poly::monomial(f, static_cast<std::int64_t>(f.neg(a)), static_cast<std::size_t>(b0) + 1) +
                  sb.scaled(f.mul(a, a)),
              one),
  };
}

inline DeformationReport verify_deformation_I(int b0, std::uint64_t p, std::int64_t t_in) {
  if (b0 < 0) throw InvalidInput("b0 must be non-negative");
  const PrimeField f(p);
  const Elem t = detail::require_unit(f, t_in);
  DeformationReport rep;
  rep.b = b0;
  rep.p = p;
  rep.t = t;

  const EpsIdeal J = ideal_from_generators(f, deformation_I_generators(f, b0, t));
  const EpsIdeal at_zero = ideal_from_generators(f, deformation_I_generators(f, b0, 0));
  const Poly sb = Poly::monomial(f, 1, static_cast<std::size_t>(b0));
  const Poly lin = Poly::linear(f, t);
  const EpsIdeal left = ideal_from_generators(f, {EpsPoly::eps(f), EpsPoly(sb)});
  const EpsIdeal right = ideal_from_generators(
      f, {EpsPoly(Poly(f) - lin.scaled(f.pow(t, static_cast<std::uint64_t>(b0) + 1)), Poly::constant(f, 1)),
          EpsPoly(lin * lin)});
  const EpsIdeal expected_special =
      ideal_from_generators(f, {EpsPoly::eps(f), EpsPoly(Poly::monomial(f, 1, static_cast<std::size_t>(b0) + 2))});

  rep.generic_fiber = J.to_string();
  rep.special_fiber = at_zero.to_string();
  rep.generic_colength = ideal_colength(J);
  rep.special_colength = ideal_colength(at_zero);
  rep.index_at_zero = local_index_at(J, 0);
  rep.index_at_t = local_index_at(J, t);

  const EpsIdeal meet = ideal_intersect(left, right);
  rep.checks.push_back({"generic fiber equals intersection", J == meet, J.to_string() + " vs " + meet.to_string()});
  rep.checks.push_back({"special fiber", at_zero == expected_special,
                        at_zero.to_string() + " vs " + expected_special.to_string()});
  rep.checks.push_back({"generic colength", rep.generic_colength == b0 + 2, detail::expect(rep.generic_colength, b0 + 2)});
  rep.checks.push_back({"special colength", rep.special_colength == b0 + 2, detail::expect(rep.special_colength, b0 + 2)});
  rep.checks.push_back({"index at 0", rep.index_at_zero == b0, detail::expect(rep.index_at_zero, b0)});
  rep.checks.push_back({"index at t", rep.index_at_t == 0, detail::expect(rep.index_at_t, 0)});
  return rep;
}

/// (eps, s^b1 (s - a)).
inline std::vector<EpsPoly> deformation_II_generators(const PrimeField& f, int b1, Elem a) {
  return {EpsPoly::eps(f), EpsPoly(Poly::monomial(f, 1, static_cast<std::size_t>(b1)) * Poly::linear(f, a))};
}

inline DeformationReport verify_deformation_II(int b1, std::uint64_t p, std::int64_t t_in) {
  if (b1 < 1) throw NonPositiveIndex("b1 must be positive");
  const PrimeField f(p);
  const Elem t = detail::require_unit(f, t_in);
  DeformationReport rep;
  rep.b = b1;
  rep.p = p;
  rep.t = t;

  const EpsIdeal J = ideal_from_generators(f, deformation_II_generators(f, b1, t));
  const EpsIdeal at_zero = ideal_from_generators(f, deformation_II_generators(f, b1, 0));
  const EpsIdeal expected_special =
      ideal_from_generators(f, {EpsPoly::eps(f), EpsPoly(Poly::monomial(f, 1, static_cast<std::size_t>(b1) + 1))});

  rep.generic_fiber = J.to_string();
  rep.special_fiber = at_zero.to_string();
  rep.generic_colength = ideal_colength(J);
  rep.special_colength = ideal_colength(at_zero);
  rep.index_at_zero = local_index_at(J, 0);
  rep.index_at_t = local_index_at(J, t);

  rep.checks.push_back({"special fiber", at_zero == expected_special,
                        at_zero.to_string() + " vs " + expected_special.to_string()});
  rep.checks.push_back({"generic colength", rep.generic_colength == b1 + 1, detail::expect(rep.generic_colength, b1 + 1)});
  rep.checks.push_back({"special colength", rep.special_colength == b1 + 1, detail::expect(rep.special_colength, b1 + 1)});
  rep.checks.push_back({"index at 0", rep.index_at_zero == b1, detail::expect(rep.index_at_zero, b1)});
  rep.checks.push_back({"index at t", rep.index_at_t == 1, detail::expect(rep.index_at_t, 1)});
  return rep;
}

}  // namespace ribbon::local
