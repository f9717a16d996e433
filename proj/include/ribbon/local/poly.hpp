#pragma once

// Dense univariate polynomials over a prime field F_p, p < 2^31.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/errors.hpp"

namespace ribbon::local {

using Elem = std::uint64_t;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p > (std::uint64_t{1} << 31) || !is_prime(p)) {
      throw InvalidInput("modulus must be a prime <= 2^31, got " + std::to_string(p));
    }
  }

  std::uint64_t modulus() const { return p_; }

  Elem reduce(std::int64_t a) const {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = a % m;
    return static_cast<Elem>(r < 0 ? r + m : r);
  }
  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }

  Elem pow(Elem a, std::uint64_t k) const {
    Elem r = 1 % p_;
    a %= p_;
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }

  Elem inv(Elem a) const {
    if (a % p_ == 0) throw InvalidInput("inverse of zero in F_p");
    return pow(a, p_ - 2);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

class Poly {
 public:
  explicit Poly(PrimeField field) : field_(field) {}
  Poly(PrimeField field, std::vector<Elem> coeffs) : field_(field), c_(std::move(coeffs)) {
    for (auto& x : c_) x %= field_.modulus();
    trim();
  }

  static Poly constant(PrimeField f, std::int64_t c) { return Poly(f, {f.reduce(c)}); }

  /// c * s^k
  static Poly monomial(PrimeField f, std::int64_t c, std::size_t k) {
    std::vector<Elem> v(k + 1, 0);
    v[k] = f.reduce(c);
    return Poly(f, std::move(v));
  }

  /// s - c
  static Poly linear(PrimeField f, Elem c) { return Poly(f, {f.neg(c % f.modulus()), 1}); }

  const PrimeField& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Elem>& coeffs() const { return c_; }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(lead()));
  }

  Poly scaled(Elem k) const {
    std::vector<Elem> v(c_);
    for (auto& x : v) x = field_.mul(x, k);
    return Poly(field_, std::move(v));
  }

  Poly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Elem> v(k, 0);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(field_, std::move(v));
  }

  Poly pow(unsigned k) const {
    Poly r = constant(field_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  Elem eval(Elem x) const {
    Elem r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = field_.add(field_.mul(r, x), *it);
    return r;
  }

  /// Multiplicity of c as a root. The zero polynomial is rejected.
  int order_at(Elem c) const {
    if (is_zero()) throw InvalidInput("order of the zero polynomial is infinite");
    int k = 0;
    Poly q = *this;
    const Poly lin = linear(field_, c);
    while (true) {
      auto [quot, rem] = divmod(q, lin);
      if (!rem.is_zero()) return k;
      q = std::move(quot);
      ++k;
    }
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_.add(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(v));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_.sub(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(v));
  }

  Poly operator-() const { return Poly(field_) - *this; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        v[i + j] = a.field_.add(v[i + j], a.field_.mul(a.c_[i], b.c_[j]));
      }
    }
    return Poly(a.field_, std::move(v));
  }

  /// Euclidean division; b must be nonzero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw InvalidInput("polynomial division by zero");
    const PrimeField& f = a.field_;
    std::vector<Elem> rem(a.c_);
    if (a.degree() < b.degree()) return {Poly(f), a};
    std::vector<Elem> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
    const Elem inv_lead = f.inv(b.lead());
    for (int i = a.degree(); i >= b.degree(); --i) {
      const Elem c = f.mul(rem[static_cast<std::size_t>(i)], inv_lead);
      if (c == 0) continue;
      const auto shift = static_cast<std::size_t>(i - b.degree());
      quot[shift] = c;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[shift + j] = f.sub(rem[shift + j], f.mul(c, b.c_[j]));
    }
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  std::string to_string(const std::string& var = "s") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Elem c = c_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      if (!out.empty()) out += " + ";
      if (i == 0 || c != 1) out += std::to_string(c);
      if (i > 0) {
        if (c != 1) out += '*';
        out += var;
        if (i > 1) out += '^' + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  PrimeField field_;
  std::vector<Elem> c_;  // low degree first
};

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace ribbon::local
