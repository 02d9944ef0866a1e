#include "extform/subspace.hpp"

#include <stdexcept>

namespace extform {

Subspace Subspace::from_rows(const Mat& rows, int ambient, Variance v) {
  if (rows.rows() > 0 && rows.cols() != ambient)
    throw std::invalid_argument("Subspace: row width does not match ambient dim");
  Subspace s;
  s.ambient_ = ambient;
  s.variance_ = v;
  Mat m = rows;
  if (m.cols() == 0) m = Mat(0, ambient);
  s.basis_ = m.row_space();
  return s;
}

Subspace Subspace::zero(int ambient, Variance v) {
  return from_rows(Mat(0, ambient), ambient, v);
}

Subspace Subspace::full(int ambient, Variance v) {
  return from_rows(Mat::identity(ambient), ambient, v);
}

Subspace Subspace::span_of(const std::vector<ExteriorForm>& degree1,
                           int ambient) {
  Mat rows(static_cast<int>(degree1.size()), ambient);
  Variance v = Variance::Vector;
  for (std::size_t i = 0; i < degree1.size(); ++i) {
    if (degree1[i].degree() != 1 || degree1[i].dim() != ambient)
      throw std::invalid_argument("Subspace: span_of needs degree-1 objects");
    v = degree1[i].variance();
    auto c = degree1[i].coordinates();
    for (int j = 0; j < ambient; ++j) rows.at(static_cast<int>(i), j) = c[j];
  }
  return from_rows(rows, ambient, v);
}

std::vector<Rational> Subspace::basis_row(int i) const {
  std::vector<Rational> out(ambient_);
  for (int j = 0; j < ambient_; ++j) out[j] = basis_.at(i, j);
  return out;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  Mat row(1, ambient_);
  for (int j = 0; j < ambient_; ++j) row.at(0, j) = v[j];
  return basis_.stacked(row).rank() == dim();
}

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_) return false;
  return basis_.stacked(o.basis_).rank() == dim();
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && variance_ == o.variance_ &&
         basis_ == o.basis_;
}

Subspace Subspace::polar() const {
  Subspace s;
  s.ambient_ = ambient_;
  s.variance_ = variance_ == Variance::Form ? Variance::Vector : Variance::Form;
  s.basis_ = basis_.rows() == 0 ? Mat::identity(ambient_).row_space()
                                : basis_.null_space().row_space();
  return s;
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.ambient_ != ambient_ || o.variance_ != variance_)
    throw std::invalid_argument("Subspace: intersect mismatch");
  return polar().sum(o.polar()).polar();
}

Subspace Subspace::sum(const Subspace& o) const {
  if (o.ambient_ != ambient_ || o.variance_ != variance_)
    throw std::invalid_argument("Subspace: sum mismatch");
  return from_rows(basis_.stacked(o.basis_), ambient_, variance_);
}

}  // namespace extform
