#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "extform/index_set.hpp"
#include "extform/matrix.hpp"
#include "extform/rational.hpp"

namespace extform {

// Linear operator between rational spaces, stored as a target_dim x source_dim
// matrix. pullback(m, L) carries a form on the target space back to the
// source space.
using LinearMap = Mat;

enum class Variance { Form, Vector };

// Sparse exterior form (or multivector, per the variance flag) on Q^n:
// coefficients keyed by strictly increasing index tuples, no zeros stored.
// Degree-0 objects hold at most the empty key. Values are immutable in
// spirit: every operation returns a fresh object.
class ExteriorForm {
 public:
  ExteriorForm() : dim_(0), degree_(0), variance_(Variance::Form) {}
  ExteriorForm(int dim, int degree, Variance v = Variance::Form);

  static ExteriorForm scalar(int dim, const Rational& c,
                             Variance v = Variance::Form);
  // xi^{i1} ^ ... ^ xi^{ip}
  static ExteriorForm basis_form(int dim, const IndexSet& I);
  // e_{i1} ^ ... ^ e_{ip}
  static ExteriorForm basis_vector(int dim, const IndexSet& I);
  // Degree-1 object with the given coordinates.
  static ExteriorForm covector(const std::vector<Rational>& coeffs);
  static ExteriorForm vector(const std::vector<Rational>& coords);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  Variance variance() const { return variance_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<IndexSet, Rational>& terms() const { return terms_; }

  // Accumulates c on the (not necessarily sorted) tuple I; throws on repeated
  // entries inside I.
  void add(const IndexSet& I, const Rational& c);
  Rational coeff(const IndexSet& I) const;

  std::vector<Rational> coordinates() const;  // degree-1 objects only

  ExteriorForm operator+(const ExteriorForm& o) const;
  ExteriorForm operator-(const ExteriorForm& o) const;
  ExteriorForm operator-() const;
  ExteriorForm operator*(const Rational& c) const;
  bool operator==(const ExteriorForm& o) const;

  // True when o == t * this for a single rational t (both nonzero); stores t.
  bool proportional(const ExteriorForm& o, Rational* t = nullptr) const;

 private:
  int dim_, degree_;
  Variance variance_;
  std::map<IndexSet, Rational> terms_;
};

inline ExteriorForm operator*(const Rational& c, const ExteriorForm& f) {
  return f * c;
}

// Exterior product under the determinant convention: on decomposables,
// [xi^1 ^ ... ^ xi^p](v_1, ..., v_p) = det[xi^i(v_j)].
ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);

// Natural pairing of a p-form against an l-vector, contracting the maximal
// number of initial slots: a (p-l)-form when p >= l, an (l-p)-vector when
// l > p, and a degree-0 object when p == l. For l == 1 this is the interior
// product.
ExteriorForm contract(const ExteriorForm& form, const ExteriorForm& mv);

// Hodge star determined by a volume n-form omega: forms map to multivectors
// via the reciprocal n-vector, multivectors map to forms via omega itself.
ExteriorForm hodge_star(const ExteriorForm& x, const ExteriorForm& omega);
// Star with omega = xi^1 ^ ... ^ xi^n.
ExteriorForm hodge_star(const ExteriorForm& x);

ExteriorForm standard_volume_form(int n);

// Substitution of a linear map into every slot of a form.
ExteriorForm pullback(const ExteriorForm& form, const LinearMap& L);

// (A m)(v_1,...,v_p) = sum_i m(v_1,...,A v_i,...,v_p).
ExteriorForm derivation_action(const LinearMap& A, const ExteriorForm& form);

// Multilinear evaluation on column vectors, via iterated contraction.
Rational evaluate(const ExteriorForm& form,
                  const std::vector<std::vector<Rational>>& vectors);

ExteriorForm wedge_power(const ExteriorForm& a, int k);

}  // namespace extform
