#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "extform/rational.hpp"

namespace extform {

// Dense rational matrix. Row echelon reduction runs fraction-free (Bareiss)
// on a denominator-cleared integer copy, so intermediate entries stay minors
// of the input; the backward pass then produces the canonical reduced
// echelon form with unit pivots. The row-update loops are OpenMP-parallel
// above a size threshold; *_serial variants are the reference used by tests
// and the benchmark.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator*(const Rational& c) const;
  Mat transpose() const;
  bool is_zero() const;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  // Reduced row echelon form; returns the pivot columns. The matrix is
  // canonical afterwards: two matrices with equal row spaces reduce to the
  // same RREF.
  std::vector<int> rref_inplace();
  std::vector<int> rref_inplace_serial();

  Mat rref() const;
  int rank() const;
  Rational det() const;  // Bareiss, square matrices
  std::optional<Mat> inverse() const;

  // Rows span the null space {x : A x = 0}; canonical w.r.t. the RREF.
  Mat null_space() const;
  // RREF with zero rows dropped.
  Mat row_space() const;

  // One exact solution of A x = b (free variables set to zero), or nullopt
  // when the system is inconsistent. b has one column per right-hand side.
  std::optional<Mat> solve(const Mat& b) const;

  // Appends rows of o below this.
  Mat stacked(const Mat& o) const;

 private:
  std::vector<int> rref_impl(bool parallel);
  int rows_, cols_;
  std::vector<Rational> a_;
};

inline Mat operator*(const Rational& c, const Mat& m) { return m * c; }

}  // namespace extform
