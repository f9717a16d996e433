#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ribbon/local/poly.hpp"

namespace ribbon::local {

/// Dense row-major matrix over F_p.
class DenseMatrix {
 public:
  DenseMatrix(PrimeField f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Elem at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  DenseMatrix select_columns(std::span<const std::size_t> cols) const {
    DenseMatrix out(field_, rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols.size(); ++k) out.at(i, k) = at(i, cols[k]);
    }
    return out;
  }

  DenseMatrix select_rows(std::span<const std::size_t> rows) const {
    DenseMatrix out(field_, rows.size(), cols_);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      for (std::size_t j = 0; j < cols_; ++j) out.at(k, j) = at(rows[k], j);
    }
    return out;
  }

  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
    const PrimeField& f = x.field_;
    DenseMatrix out(f, x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i) {
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const Elem v = x.at(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(v, y.at(k, j)));
      }
    }
    return out;
  }

  bool is_zero() const {
    for (auto v : a_) {
      if (v) return false;
    }
    return true;
  }

  /// Gaussian elimination on a copy.
  std::size_t rank() const {
    std::vector<Elem> m(a_);
    auto el = [&](std::size_t i, std::size_t j) -> Elem& { return m[i * cols_ + j]; };
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
      std::size_t piv = r;
      while (piv < rows_ && el(piv, col) == 0) ++piv;
      if (piv == rows_) continue;
      if (piv != r) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(el(piv, j), el(r, j));
      }
      const Elem inv = field_.inv(el(r, col));
      for (std::size_t i = r + 1; i < rows_; ++i) {
        const Elem factor = field_.mul(el(i, col), inv);
        if (factor == 0) continue;
        for (std::size_t j = col; j < cols_; ++j) el(i, j) = field_.sub(el(i, j), field_.mul(factor, el(r, j)));
      }
      ++r;
    }
    return r;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> a_;
};

}  // namespace ribbon::local
