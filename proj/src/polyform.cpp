#include "extform/polyform.hpp"

#include <sstream>
#include <stdexcept>

namespace extform {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_monomial(std::vector<int>(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int k) {
  if (k < 1 || k > nvars)
    throw std::invalid_argument("Polynomial: variable index out of range");
  Polynomial p(nvars);
  std::vector<int> e(nvars, 0);
  e[k - 1] = 1;
  p.add_monomial(e, Rational(1));
  return p;
}

bool Polynomial::is_constant() const {
  if (mono_.empty()) return true;
  if (mono_.size() > 1) return false;
  for (int e : mono_.begin()->first)
    if (e != 0) return false;
  return true;
}

void Polynomial::add_monomial(const std::vector<int>& exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw std::invalid_argument("Polynomial: exponent arity mismatch");
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("Polynomial: negative exponent");
  if (extform::is_zero(c)) return;
  auto it = mono_.find(exps);
  if (it == mono_.end()) {
    mono_.emplace(exps, c);
  } else {
    it->second += c;
    if (extform::is_zero(it->second)) mono_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("Polynomial: arity mismatch in +");
  Polynomial r = *this;
  for (const auto& [e, c] : o.mono_) r.add_monomial(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : mono_) r.mono_.emplace(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("Polynomial: arity mismatch in *");
  Polynomial r(nvars_);
  for (const auto& [e1, c1] : mono_)
    for (const auto& [e2, c2] : o.mono_) {
      std::vector<int> e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_monomial(e, c1 * c2);
    }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(nvars_);
  if (extform::is_zero(c)) return r;
  for (const auto& [e, v] : mono_) r.mono_.emplace(e, v * c);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return nvars_ == o.nvars_ && mono_ == o.mono_;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("Polynomial: negative power");
  Polynomial r = constant(nvars_, Rational(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::derivative(int k) const {
  if (k < 1 || k > nvars_)
    throw std::invalid_argument("Polynomial: derivative index out of range");
  Polynomial r(nvars_);
  for (const auto& [e, c] : mono_) {
    if (e[k - 1] == 0) continue;
    std::vector<int> d = e;
    --d[k - 1];
    r.add_monomial(d, c * e[k - 1]);
  }
  return r;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("Polynomial: evaluation arity mismatch");
  Rational acc(0);
  for (const auto& [e, c] : mono_) {
    Rational term = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    acc += term;
  }
  return acc;
}

std::string Polynomial::str() const {
  if (mono_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : mono_) {
    Rational a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "- ";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    first = false;
    bool any_var = false;
    for (int i = 0; i < nvars_; ++i) any_var = any_var || e[i] > 0;
    if (!any_var || !(a == Rational(1))) os << to_string(a);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << " x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

PolyForm PolyForm::from_constant(const ExteriorForm& f) {
  PolyForm p(f.dim(), f.degree());
  for (const auto& [I, c] : f.terms())
    p.add(I, Polynomial::constant(f.dim(), c));
  return p;
}

void PolyForm::add(const IndexSet& I, const Polynomial& c) {
  if (c.is_zero()) return;
  if (c.nvars() != dim_)
    throw std::invalid_argument("PolyForm: coefficient arity mismatch");
  auto sorted = sort_indices(I);
  if (!sorted) return;
  auto& [key, sign] = *sorted;
  if (static_cast<int>(key.size()) != degree_ || !in_range(key, dim_))
    throw std::invalid_argument("PolyForm: bad index set");
  Polynomial v = sign > 0 ? c : -c;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), std::move(v));
  } else {
    Polynomial s = it->second + v;
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = std::move(s);
  }
}

Polynomial PolyForm::coeff(const IndexSet& I) const {
  auto it = terms_.find(I);
  return it == terms_.end() ? Polynomial(dim_) : it->second;
}

PolyForm PolyForm::operator+(const PolyForm& o) const {
  if (dim_ != o.dim_ || degree_ != o.degree_)
    throw std::invalid_argument("PolyForm: mismatch in +");
  PolyForm r = *this;
  for (const auto& [I, c] : o.terms_) r.add(I, c);
  return r;
}

PolyForm PolyForm::operator-(const PolyForm& o) const {
  if (dim_ != o.dim_ || degree_ != o.degree_)
    throw std::invalid_argument("PolyForm: mismatch in -");
  PolyForm r = *this;
  for (const auto& [I, c] : o.terms_) r.add(I, -c);
  return r;
}

PolyForm PolyForm::operator*(const Polynomial& c) const {
  PolyForm r(dim_, degree_);
  for (const auto& [I, v] : terms_) r.add(I, v * c);
  return r;
}

bool PolyForm::operator==(const PolyForm& o) const {
  return dim_ == o.dim_ && degree_ == o.degree_ && terms_ == o.terms_;
}

ExteriorForm PolyForm::eval(const std::vector<Rational>& point) const {
  ExteriorForm f(dim_, degree_, Variance::Form);
  for (const auto& [I, c] : terms_) f.add(I, c.eval(point));
  return f;
}

PolyForm poly_wedge(const PolyForm& a, const PolyForm& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("poly_wedge: dimension mismatch");
  PolyForm r(a.dim(), a.degree() + b.degree());
  for (const auto& [I, c] : a.terms())
    for (const auto& [J, d] : b.terms()) {
      auto merged = merge_indices(I, J);
      if (!merged) continue;
      Polynomial v = c * d;
      r.add(merged->first, merged->second > 0 ? v : -v);
    }
  return r;
}

PolyForm poly_d(const PolyForm& m) {
  PolyForm r(m.dim(), m.degree() + 1);
  for (const auto& [I, c] : m.terms())
    for (int k = 1; k <= m.dim(); ++k) {
      Polynomial dk = c.derivative(k);
      if (dk.is_zero()) continue;
      IndexSet key;
      key.reserve(I.size() + 1);
      key.push_back(k);
      key.insert(key.end(), I.begin(), I.end());
      r.add(key, dk);
    }
  return r;
}

namespace {

void check_duncl_args(int m, const std::vector<Polynomial>& phis) {
  if (m < 2) throw std::invalid_argument("duncl: need m >= 2");
  if (static_cast<int>(phis.size()) != m)
    throw std::invalid_argument("duncl: need exactly m functions");
  for (const auto& p : phis) {
    if (p.nvars() != 2 * m)
      throw std::invalid_argument("duncl: functions must live on R^{2m}");
    if (p.is_zero())
      throw std::invalid_argument("duncl: the functions must be nonzero");
  }
}

PolyForm chi(int m, int i) {  // dx^{2i-1} ^ dx^{2i}
  PolyForm f(2 * m, 2);
  f.add({2 * i - 1, 2 * i}, Polynomial::constant(2 * m, Rational(1)));
  return f;
}

}  // namespace

PolyForm duncl_zeta(int m, const std::vector<Polynomial>& phis) {
  check_duncl_args(m, phis);
  PolyForm zeta(2 * m, 2 * m - 2);
  for (int i = 1; i <= m; ++i) {
    PolyForm prod(2 * m, 0);
    prod.add({}, phis[i - 1].pow(m - 1) * Rational(-1));
    for (int j = 1; j <= m; ++j) {
      if (j == i) continue;
      prod = poly_wedge(prod, chi(m, j));
    }
    zeta = zeta + prod;
  }
  return zeta;
}

bool duncl_zeta_closed(int m, const std::vector<Polynomial>& phis) {
  check_duncl_args(m, phis);
  bool criterion = true;
  for (int i = 1; i <= m && criterion; ++i)
    criterion = phis[i - 1].derivative(2 * i - 1).is_zero() &&
                phis[i - 1].derivative(2 * i).is_zero();
  bool direct = poly_d(duncl_zeta(m, phis)).is_zero();
  if (criterion != direct)
    throw std::logic_error("duncl_zeta_closed: criterion and d(zeta) disagree");
  return criterion;
}

bool duncl_sigma_closed(int m, const std::vector<Polynomial>& phis) {
  check_duncl_args(m, phis);
  Polynomial phi = Polynomial::constant(2 * m, Rational(1));
  for (const auto& p : phis) phi = phi * p;
  for (int i = 1; i <= m; ++i) {
    for (int k = 1; k <= 2 * m; ++k) {
      if (k == 2 * i - 1 || k == 2 * i) continue;
      // denominator-cleared d_k [phi_i^{1-m} phi] = 0
      Polynomial lhs = phis[i - 1].derivative(k) * phi * Rational(1 - m) +
                       phis[i - 1] * phi.derivative(k);
      if (!lhs.is_zero()) return false;
    }
  }
  return true;
}

std::vector<Polynomial> separated_phis(const std::vector<Polynomial>& rhos) {
  const int m = static_cast<int>(rhos.size());
  if (m < 2) throw std::invalid_argument("separated_phis: need m >= 2");
  for (int j = 0; j < m; ++j) {
    if (rhos[j].nvars() != 2 * m)
      throw std::invalid_argument("separated_phis: rho arity mismatch");
    for (const auto& [e, c] : rhos[j].monomials())
      for (int v = 0; v < 2 * m; ++v)
        if (e[v] != 0 && v != 2 * j && v != 2 * j + 1)
          throw std::invalid_argument(
              "separated_phis: rho_j may only involve x^{2j-1}, x^{2j}");
  }
  std::vector<Polynomial> phis;
  for (int i = 0; i < m; ++i) {
    Polynomial p = Polynomial::constant(2 * m, Rational(1));
    for (int j = 0; j < m; ++j)
      if (j != i) p = p * rhos[j];
    phis.push_back(p);
  }
  return phis;
}

}  // namespace extform
