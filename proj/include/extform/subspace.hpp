#pragma once

#include <vector>

#include "extform/form.hpp"
#include "extform/matrix.hpp"

namespace extform {

// Linear subspace of Q^n or of its dual, held as the reduced row echelon
// basis so that equal subspaces have identical representations.
class Subspace {
 public:
  Subspace() : ambient_(0), variance_(Variance::Vector) {}

  static Subspace from_rows(const Mat& rows, int ambient, Variance v);
  static Subspace zero(int ambient, Variance v);
  static Subspace full(int ambient, Variance v);
  static Subspace span_of(const std::vector<ExteriorForm>& degree1, int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  Variance variance() const { return variance_; }
  const Mat& basis() const { return basis_; }
  std::vector<Rational> basis_row(int i) const;

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const;

  // Annihilator in the dual space; flips the variance flag.
  Subspace polar() const;
  Subspace intersect(const Subspace& o) const;
  Subspace sum(const Subspace& o) const;

 private:
  int ambient_;
  Variance variance_;
  Mat basis_;  // RREF, no zero rows
};

}  // namespace extform
