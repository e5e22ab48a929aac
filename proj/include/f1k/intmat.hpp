#pragma once

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "f1k/error.hpp"

namespace f1k {

using Int = boost::multiprecision::cpp_int;

// Dense matrix over Z with exact arithmetic. Sized for desk scale; the
// multiply and rank routines skip zero entries, which makes them fast on the
// near-permutation matrices that arise as functional-digraph adjacencies.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + static_cast<size_t>(j)]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + static_cast<size_t>(j)]; }

  bool operator==(const IntMatrix&) const = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::bad_dimension, "matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (int l = 0; l < b.rows_; ++l)
      for (int j = 0; j < b.cols_; ++j) {
        const Int& blj = b.at(l, j);
        if (blj == 0) continue;
        for (int i = 0; i < a.rows_; ++i)
          if (a.at(i, l) != 0) c.at(i, j) += a.at(i, l) * blj;
      }
    return c;
  }

  // Exact rank over Q: fraction-free Gaussian elimination by cross
  // multiplication, rows with a zero in the pivot column left untouched.
  int rank() const {
    std::vector<std::vector<Int>> m(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
      m[static_cast<size_t>(i)].resize(static_cast<size_t>(cols_));
      for (int j = 0; j < cols_; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = at(i, j);
    }
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int piv = -1;
      for (int i = r; i < rows_; ++i)
        if (m[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(r)]);
      const auto& pivot_row = m[static_cast<size_t>(r)];
      const Int p = pivot_row[static_cast<size_t>(c)];
      for (int i = r + 1; i < rows_; ++i) {
        auto& row = m[static_cast<size_t>(i)];
        const Int f = row[static_cast<size_t>(c)];
        if (f == 0) continue;
        for (int j = c; j < cols_; ++j) {
          row[static_cast<size_t>(j)] *= p;
          if (pivot_row[static_cast<size_t>(j)] != 0) row[static_cast<size_t>(j)] -= f * pivot_row[static_cast<size_t>(j)];
        }
      }
      ++r;
    }
    return r;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Kronecker product: entry ((i1,i2),(j1,j2)) = a(i1,j1) * b(i2,j2), pair
// (x,y) at index x*dim + y. This matches the row-major pair indexing of the
// smash product, so Adj(M ^ N) literally equals kronecker(Adj M, Adj N).
inline IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i1 = 0; i1 < a.rows(); ++i1)
    for (int j1 = 0; j1 < a.cols(); ++j1) {
      if (a.at(i1, j1) == 0) continue;
      for (int i2 = 0; i2 < b.rows(); ++i2)
        for (int j2 = 0; j2 < b.cols(); ++j2)
          if (b.at(i2, j2) != 0) k.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = a.at(i1, j1) * b.at(i2, j2);
    }
  return k;
}

}  // namespace f1k
