#pragma once

#include <map>
#include <string>
#include <vector>

#include "extform/form.hpp"
#include "extform/rational.hpp"

namespace extform {

// Multivariate polynomial over Q in x1..xn, sparse monomial map keyed by
// exponent vectors.
class Polynomial {
 public:
  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int k);  // x_k, 1-based

  int nvars() const { return nvars_; }
  bool is_zero() const { return mono_.empty(); }
  bool is_constant() const;
  const std::map<std::vector<int>, Rational>& monomials() const { return mono_; }

  void add_monomial(const std::vector<int>& exps, const Rational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const;

  Polynomial pow(int k) const;
  Polynomial derivative(int k) const;  // d/dx_k, 1-based
  Rational eval(const std::vector<Rational>& point) const;

  std::string str() const;  // matches the CLI grammar

 private:
  int nvars_;
  std::map<std::vector<int>, Rational> mono_;
};

// Differential form on R^n with polynomial coefficients.
class PolyForm {
 public:
  PolyForm() : dim_(0), degree_(0) {}
  PolyForm(int dim, int degree) : dim_(dim), degree_(degree) {}

  static PolyForm from_constant(const ExteriorForm& f);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<IndexSet, Polynomial>& terms() const { return terms_; }

  void add(const IndexSet& I, const Polynomial& c);
  Polynomial coeff(const IndexSet& I) const;

  PolyForm operator+(const PolyForm& o) const;
  PolyForm operator-(const PolyForm& o) const;
  PolyForm operator*(const Polynomial& c) const;
  bool operator==(const PolyForm& o) const;

  // Pointwise value as an exact constant-coefficient form.
  ExteriorForm eval(const std::vector<Rational>& point) const;

 private:
  int dim_, degree_;
  std::map<IndexSet, Polynomial> terms_;
};

PolyForm poly_wedge(const PolyForm& a, const PolyForm& b);

// Coordinate exterior derivative d(f dx^I) = sum_k (d_k f) dx^k ^ dx^I.
PolyForm poly_d(const PolyForm& m);

// The (2m-2)-form zeta = zeta_1 + ... + zeta_m on R^{2m} with
// zeta_i = -phi_i^{m-1} chi_1 ^ ... ^ (chi_i omitted) ^ ... ^ chi_m,
// chi_i = dx^{2i-1} ^ dx^{2i}.
PolyForm duncl_zeta(int m, const std::vector<Polynomial>& phis);

// Closedness of zeta: equivalent to d_{2i-1} phi_i = d_{2i} phi_i = 0 for
// every i; both the criterion and d(zeta) are computed and compared.
bool duncl_zeta_closed(int m, const std::vector<Polynomial>& phis);

// Closedness of the dual 2-form sigma = sum phi_i^{1-m} phi chi_i, tested
// through the denominator-cleared identity
// (1-m)(d_k phi_i) phi + phi_i (d_k phi) = 0 for k outside {2i-1, 2i}.
bool duncl_sigma_closed(int m, const std::vector<Polynomial>& phis);

// phi_i = rho_1 ... rho_m / rho_i from per-block factors rho_j; the
// separated construction that always satisfies the sigma-closedness
// criterion.
std::vector<Polynomial> separated_phis(const std::vector<Polynomial>& rhos);

}  // namespace extform
