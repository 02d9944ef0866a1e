#include "extform/matrix.hpp"

#include <omp.h>

#include <algorithm>

namespace extform {

namespace {

// Work below this many entries is not worth a parallel region.
constexpr long kParallelThreshold = 4096;

}  // namespace

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Mat: shape mismatch in +");
  Mat r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Mat: shape mismatch in -");
  Mat r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Mat: shape mismatch in *");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (extform::is_zero(aik)) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (extform::is_zero(o.at(k, j))) continue;
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  return r;
}

Mat Mat::operator*(const Rational& c) const {
  Mat r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!extform::is_zero(x)) return false;
  return true;
}

std::vector<Rational> Mat::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("Mat: vector length mismatch");
  std::vector<Rational> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!extform::is_zero(at(i, j))) out[i] += at(i, j) * v[j];
  return out;
}

std::vector<int> Mat::rref_impl(bool parallel) {
  // Denominator-cleared integer copy.
  std::vector<mpz_class> z(a_.size());
  for (int i = 0; i < rows_; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < cols_; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < cols_; ++j) {
      const Rational& q = at(i, j);
      z[static_cast<std::size_t>(i) * cols_ + j] =
          q.get_num() * (l / q.get_den());
    }
  }
  auto zat = [&](int i, int j) -> mpz_class& {
    return z[static_cast<std::size_t>(i) * cols_ + j];
  };

  // Fraction-free forward elimination.
  std::vector<int> pivot_cols;
  std::vector<int> pivot_rows;
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int pr = -1;
    for (int i = r; i < rows_; ++i)
      if (sgn(zat(i, c)) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < cols_; ++j) std::swap(zat(r, j), zat(pr, j));
    auto eliminate = [&](int i) {
      mpz_class t;
      for (int j = c + 1; j < cols_; ++j) {
        t = zat(r, c) * zat(i, j) - zat(i, c) * zat(r, j);
        mpz_divexact(zat(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      zat(i, c) = 0;
    };
    // Entering a parallel region costs more than small updates; branch
    // outside the pragma so tiny matrices never touch the runtime.
    const long work = static_cast<long>(rows_ - r - 1) * (cols_ - c);
    if (parallel && work > kParallelThreshold) {
#pragma omp parallel for schedule(static)
      for (int i = r + 1; i < rows_; ++i) eliminate(i);
    } else {
      for (int i = r + 1; i < rows_; ++i) eliminate(i);
    }
    prev = zat(r, c);
    pivot_cols.push_back(c);
    pivot_rows.push_back(r);
    ++r;
  }

  // Backward pass over rationals: unit pivots, zeros above them.
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] = 0;
  for (int i = 0; i < r; ++i) {
    Rational inv(1);
    inv /= Rational(zat(i, pivot_cols[i]));
    for (int j = pivot_cols[i]; j < cols_; ++j)
      at(i, j) = Rational(zat(i, j)) * inv;
  }
  for (int i = r - 1; i >= 0; --i) {
    const int pc = pivot_cols[i];
    auto clear_above = [&](int k) {
      if (extform::is_zero(at(k, pc))) return;
      Rational f = at(k, pc);
      for (int j = pc; j < cols_; ++j) at(k, j) -= f * at(i, j);
    };
    const long work = static_cast<long>(i) * (cols_ - pc);
    if (parallel && work > kParallelThreshold) {
#pragma omp parallel for schedule(static)
      for (int k = 0; k < i; ++k) clear_above(k);
    } else {
      for (int k = 0; k < i; ++k) clear_above(k);
    }
  }
  return pivot_cols;
}

std::vector<int> Mat::rref_inplace() { return rref_impl(true); }
std::vector<int> Mat::rref_inplace_serial() { return rref_impl(false); }

Mat Mat::rref() const {
  Mat m = *this;
  m.rref_inplace();
  return m;
}

int Mat::rank() const {
  Mat m = *this;
  return static_cast<int>(m.rref_inplace().size());
}

Rational Mat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("Mat: det of non-square");
  if (rows_ == 0) return Rational(1);
  std::vector<mpz_class> z(a_.size());
  Rational scale(1);  // product of the row denominators cleared below
  for (int i = 0; i < rows_; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < cols_; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), at(i, j).get_den().get_mpz_t());
    scale *= Rational(l);
    for (int j = 0; j < cols_; ++j)
      z[static_cast<std::size_t>(i) * cols_ + j] =
          at(i, j).get_num() * (l / at(i, j).get_den());
  }
  auto zat = [&](int i, int j) -> mpz_class& {
    return z[static_cast<std::size_t>(i) * cols_ + j];
  };
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < rows_ - 1; ++k) {
    if (sgn(zat(k, k)) == 0) {
      int pr = -1;
      for (int i = k + 1; i < rows_; ++i)
        if (sgn(zat(i, k)) != 0) {
          pr = i;
          break;
        }
      if (pr < 0) return Rational(0);
      for (int j = 0; j < cols_; ++j) std::swap(zat(k, j), zat(pr, j));
      sign = -sign;
    }
    mpz_class t;
    for (int i = k + 1; i < rows_; ++i) {
      for (int j = k + 1; j < cols_; ++j) {
        t = zat(k, k) * zat(i, j) - zat(i, k) * zat(k, j);
        mpz_divexact(zat(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      zat(i, k) = 0;
    }
    prev = zat(k, k);
  }
  Rational d(zat(rows_ - 1, cols_ - 1));
  if (sign < 0) d = -d;
  return d / scale;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("Mat: inverse of non-square");
  Mat aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  auto piv = aug.rref_inplace();
  if (static_cast<int>(piv.size()) != rows_ || piv.back() != cols_ - 1)
    return std::nullopt;
  Mat inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

Mat Mat::null_space() const {
  Mat m = *this;
  auto piv = m.rref_inplace();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : piv) is_pivot[c] = true;
  const int nres = cols_ - static_cast<int>(piv.size());
  Mat ns(nres, cols_);
  int row = 0;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    ns.at(row, f) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i)
      ns.at(row, piv[i]) = -m.at(static_cast<int>(i), f);
    ++row;
  }
  return ns;
}

Mat Mat::row_space() const {
  Mat m = *this;
  auto piv = m.rref_inplace();
  Mat rs(static_cast<int>(piv.size()), cols_);
  for (int i = 0; i < rs.rows(); ++i)
    for (int j = 0; j < cols_; ++j) rs.at(i, j) = m.at(i, j);
  return rs;
}

std::optional<Mat> Mat::solve(const Mat& b) const {
  if (b.rows() != rows_) throw std::invalid_argument("Mat: solve shape mismatch");
  Mat aug(rows_, cols_ + b.cols());
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    for (int j = 0; j < b.cols(); ++j) aug.at(i, cols_ + j) = b.at(i, j);
  }
  auto piv = aug.rref_inplace();
  for (int c : piv)
    if (c >= cols_) return std::nullopt;  // pivot in the rhs block
  Mat x(cols_, b.cols());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      x.at(piv[i], j) = aug.at(static_cast<int>(i), cols_ + j);
  return x;
}

Mat Mat::stacked(const Mat& o) const {
  if (cols_ != o.cols_ && o.rows_ != 0)
    throw std::invalid_argument("Mat: stack width mismatch");
  Mat r(rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

}  // namespace extform
