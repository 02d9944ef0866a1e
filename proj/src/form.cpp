#include "extform/form.hpp"

namespace extform {

ExteriorForm::ExteriorForm(int dim, int degree, Variance v)
    : dim_(dim), degree_(degree), variance_(v) {
  if (dim < 0 || degree < 0)
    throw std::invalid_argument("ExteriorForm: negative dimension or degree");
}

ExteriorForm ExteriorForm::scalar(int dim, const Rational& c, Variance v) {
  ExteriorForm f(dim, 0, v);
  f.add({}, c);
  return f;
}

ExteriorForm ExteriorForm::basis_form(int dim, const IndexSet& I) {
  ExteriorForm f(dim, static_cast<int>(I.size()), Variance::Form);
  f.add(I, Rational(1));
  return f;
}

ExteriorForm ExteriorForm::basis_vector(int dim, const IndexSet& I) {
  ExteriorForm f(dim, static_cast<int>(I.size()), Variance::Vector);
  f.add(I, Rational(1));
  return f;
}

ExteriorForm ExteriorForm::covector(const std::vector<Rational>& coeffs) {
  ExteriorForm f(static_cast<int>(coeffs.size()), 1, Variance::Form);
  for (int i = 0; i < f.dim_; ++i)
    if (!extform::is_zero(coeffs[i])) f.add({i + 1}, coeffs[i]);
  return f;
}

ExteriorForm ExteriorForm::vector(const std::vector<Rational>& coords) {
  ExteriorForm f(static_cast<int>(coords.size()), 1, Variance::Vector);
  for (int i = 0; i < f.dim_; ++i)
    if (!extform::is_zero(coords[i])) f.add({i + 1}, coords[i]);
  return f;
}

void ExteriorForm::add(const IndexSet& I, const Rational& c) {
  if (extform::is_zero(c)) return;
  auto sorted = sort_indices(I);
  if (!sorted) return;  // repeated index, alternation kills the term
  auto& [key, sign] = *sorted;
  if (static_cast<int>(key.size()) != degree_)
    throw std::invalid_argument("ExteriorForm: key length does not match degree");
  if (!in_range(key, dim_))
    throw std::invalid_argument("ExteriorForm: index out of range");
  Rational v = sign > 0 ? c : Rational(-c);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), std::move(v));
  } else {
    it->second += v;
    if (extform::is_zero(it->second)) terms_.erase(it);
  }
}

Rational ExteriorForm::coeff(const IndexSet& I) const {
  auto it = terms_.find(I);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Rational> ExteriorForm::coordinates() const {
  if (degree_ != 1)
    throw std::invalid_argument("ExteriorForm: coordinates need degree 1");
  std::vector<Rational> out(dim_);
  for (const auto& [I, c] : terms_) out[I[0] - 1] = c;
  return out;
}

ExteriorForm ExteriorForm::operator+(const ExteriorForm& o) const {
  if (dim_ != o.dim_ || degree_ != o.degree_ || variance_ != o.variance_)
    throw std::invalid_argument("ExteriorForm: mismatch in +");
  ExteriorForm r = *this;
  for (const auto& [I, c] : o.terms_) r.add(I, c);
  return r;
}

ExteriorForm ExteriorForm::operator-(const ExteriorForm& o) const {
  return *this + (-o);
}

ExteriorForm ExteriorForm::operator-() const {
  ExteriorForm r(dim_, degree_, variance_);
  for (const auto& [I, c] : terms_) r.terms_.emplace(I, -c);
  return r;
}

ExteriorForm ExteriorForm::operator*(const Rational& c) const {
  ExteriorForm r(dim_, degree_, variance_);
  if (extform::is_zero(c)) return r;
  for (const auto& [I, v] : terms_) r.terms_.emplace(I, v * c);
  return r;
}

bool ExteriorForm::operator==(const ExteriorForm& o) const {
  return dim_ == o.dim_ && degree_ == o.degree_ && variance_ == o.variance_ &&
         terms_ == o.terms_;
}

bool ExteriorForm::proportional(const ExteriorForm& o, Rational* t) const {
  if (dim_ != o.dim_ || degree_ != o.degree_ || variance_ != o.variance_)
    return false;
  if (is_zero() || o.is_zero()) return false;
  if (terms_.size() != o.terms_.size()) return false;
  Rational ratio = o.terms_.begin()->second / terms_.begin()->second;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (jt->second != it->second * ratio) return false;
  }
  if (t) *t = ratio;
  return true;
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("wedge: dimension mismatch");
  if (a.degree() > 0 && b.degree() > 0 && a.variance() != b.variance())
    throw std::invalid_argument("wedge: variance mismatch");
  Variance v = a.degree() > 0 ? a.variance() : b.variance();
  ExteriorForm r(a.dim(), a.degree() + b.degree(), v);
  for (const auto& [I, c] : a.terms())
    for (const auto& [J, d] : b.terms()) {
      auto merged = merge_indices(I, J);
      if (!merged) continue;
      r.add(merged->first, merged->second > 0 ? c * d : Rational(-(c * d)));
    }
  return r;
}

ExteriorForm wedge_power(const ExteriorForm& a, int k) {
  if (k < 0) throw std::invalid_argument("wedge_power: negative exponent");
  ExteriorForm r = ExteriorForm::scalar(a.dim(), Rational(1), a.variance());
  for (int i = 0; i < k; ++i) r = wedge(r, a);
  return r;
}

ExteriorForm contract(const ExteriorForm& form, const ExteriorForm& mv) {
  if (form.dim() != mv.dim())
    throw std::invalid_argument("contract: dimension mismatch");
  if (form.degree() > 0 && form.variance() != Variance::Form)
    throw std::invalid_argument("contract: first argument must be a form");
  if (mv.degree() > 0 && mv.variance() != Variance::Vector)
    throw std::invalid_argument("contract: second argument must be a multivector");
  const int p = form.degree(), l = mv.degree();
  const bool form_side = p >= l;
  ExteriorForm r(form.dim(), form_side ? p - l : l - p,
                 form_side ? Variance::Form : Variance::Vector);
  for (const auto& [I, c] : form.terms())
    for (const auto& [J, d] : mv.terms()) {
      auto rem = form_side ? remove_subset(I, J) : remove_subset(J, I);
      if (!rem) continue;
      r.add(rem->first, rem->second > 0 ? c * d : Rational(-(c * d)));
    }
  return r;
}

ExteriorForm standard_volume_form(int n) {
  return ExteriorForm::basis_form(n, full_set(n));
}

ExteriorForm hodge_star(const ExteriorForm& x, const ExteriorForm& omega) {
  const int n = x.dim();
  if (omega.dim() != n || omega.degree() != n || omega.is_zero())
    throw std::invalid_argument("hodge_star: omega must be a volume n-form");
  if (omega.variance() != Variance::Form && n > 0)
    throw std::invalid_argument("hodge_star: omega must be a form");
  const Rational c = omega.coeff(full_set(n));
  if (x.variance() == Variance::Vector) {
    return contract(omega, x);  // omega beta, a form
  }
  // alpha mu for the reciprocal n-vector alpha, alpha omega = 1; the result
  // lives in V^{n-p}, so a degree-0 outcome is a 0-vector.
  ExteriorForm alpha = ExteriorForm::basis_vector(n, full_set(n)) * (1 / c);
  ExteriorForm r = contract(x, alpha);
  if (r.degree() == 0 && r.variance() == Variance::Form)
    r = ExteriorForm::scalar(n, r.coeff({}), Variance::Vector);
  return r;
}

ExteriorForm hodge_star(const ExteriorForm& x) {
  return hodge_star(x, standard_volume_form(x.dim()));
}

ExteriorForm pullback(const ExteriorForm& form, const LinearMap& L) {
  if (form.variance() != Variance::Form && form.degree() > 0)
    throw std::invalid_argument("pullback: multivectors are not pulled back");
  if (L.rows() != form.dim())
    throw std::invalid_argument("pullback: map target does not match form space");
  const int s = L.cols();
  const int p = form.degree();
  ExteriorForm r(s, p, Variance::Form);
  if (p == 0) {
    r.add({}, form.coeff({}));
    return r;
  }
  if (p > s) return r;
  for (const auto& J : all_index_sets(s, p)) {
    Rational acc(0);
    Mat minor(p, p);
    for (const auto& [I, c] : form.terms()) {
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) minor.at(a, b) = L.at(I[a] - 1, J[b] - 1);
      Rational d = minor.det();
      if (!extform::is_zero(d)) acc += c * d;
    }
    r.add(J, acc);
  }
  return r;
}

ExteriorForm derivation_action(const LinearMap& A, const ExteriorForm& form) {
  const int n = form.dim();
  if (A.rows() != n || A.cols() != n)
    throw std::invalid_argument("derivation_action: operator shape mismatch");
  if (form.variance() != Variance::Form && form.degree() > 0)
    throw std::invalid_argument("derivation_action: expected a form");
  ExteriorForm r(n, form.degree(), Variance::Form);
  for (const auto& [I, c] : form.terms()) {
    for (std::size_t slot = 0; slot < I.size(); ++slot) {
      const int k = I[slot];
      for (int j = 1; j <= n; ++j) {
        const Rational& akj = A.at(k - 1, j - 1);
        if (extform::is_zero(akj)) continue;
        IndexSet rep = I;
        rep[slot] = j;
        r.add(rep, c * akj);
      }
    }
  }
  return r;
}

Rational evaluate(const ExteriorForm& form,
                  const std::vector<std::vector<Rational>>& vectors) {
  if (static_cast<int>(vectors.size()) != form.degree())
    throw std::invalid_argument("evaluate: argument count must equal degree");
  ExteriorForm cur = form;
  for (const auto& v : vectors) cur = contract(cur, ExteriorForm::vector(v));
  return cur.coeff({});
}

}  // namespace extform
