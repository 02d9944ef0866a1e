#include "extform/lie.hpp"

#include <stdexcept>

namespace extform {

void LieAlgebra::set_structure(int i, int j, int k, const Rational& coeff) {
  if (i < 1 || j < 1 || k < 1 || i > n_ || j > n_ || k > n_)
    throw std::invalid_argument("LieAlgebra: index out of range");
  if (i >= j)
    throw std::invalid_argument("LieAlgebra: structure constants need i < j");
  if (is_zero(coeff)) return;
  auto key = std::make_tuple(i, j, k);
  auto it = c_.find(key);
  if (it == c_.end()) {
    c_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (is_zero(it->second)) c_.erase(it);
  }
}

Rational LieAlgebra::c(int i, int j, int k) const {
  if (i == j) return Rational(0);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = c_.find(std::make_tuple(i, j, k));
  if (it == c_.end()) return Rational(0);
  return flip ? Rational(-it->second) : it->second;
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& u,
                                          const std::vector<Rational>& v) const {
  if (static_cast<int>(u.size()) != n_ || static_cast<int>(v.size()) != n_)
    throw std::invalid_argument("LieAlgebra: bracket arity mismatch");
  std::vector<Rational> out(n_);
  for (const auto& [key, coeff] : c_) {
    auto [i, j, k] = key;
    Rational f = u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1];
    if (!is_zero(f)) out[k - 1] += coeff * f;
  }
  return out;
}

Mat LieAlgebra::ad(const std::vector<Rational>& v) const {
  Mat A(n_, n_);
  for (int j = 1; j <= n_; ++j) {
    std::vector<Rational> ej(n_);
    ej[j - 1] = 1;
    auto col = bracket(v, ej);
    for (int i = 0; i < n_; ++i) A.at(i, j - 1) = col[i];
  }
  return A;
}

ValidationReport validate(const LieAlgebra& L) {
  const int n = L.dim();
  ValidationReport rep;
  rep.jacobi = true;
  for (int i = 1; i <= n && rep.jacobi; ++i)
    for (int j = i + 1; j <= n && rep.jacobi; ++j)
      for (int k = j + 1; k <= n && rep.jacobi; ++k) {
        std::vector<Rational> ei(n), ej(n), ek(n);
        ei[i - 1] = 1;
        ej[j - 1] = 1;
        ek[k - 1] = 1;
        auto s1 = L.bracket(L.bracket(ei, ej), ek);
        auto s2 = L.bracket(L.bracket(ej, ek), ei);
        auto s3 = L.bracket(L.bracket(ek, ei), ej);
        for (int t = 0; t < n; ++t)
          if (!is_zero(s1[t] + s2[t] + s3[t])) {
            rep.jacobi = false;
            break;
          }
      }
  rep.semisimple = !is_zero(killing_form(L).mat.det());
  return rep;
}

InvariantTensor2 killing_form(const LieAlgebra& L) {
  const int n = L.dim();
  InvariantTensor2 g;
  g.mat = Mat(n, n);
  g.tag = TensorSymmetry::Symmetric;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Rational acc(0);
      for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s) {
          Rational a = L.c(i, r, s);
          if (is_zero(a)) continue;
          acc += a * L.c(j, s, r);
        }
      g.mat.at(i - 1, j - 1) = acc;
      g.mat.at(j - 1, i - 1) = acc;
    }
  return g;
}

ExteriorForm cartan_3form(const LieAlgebra& L) {
  const int n = L.dim();
  Mat g = killing_form(L).mat;
  auto gamma = [&](int i, int j, int k) {
    Rational acc(0);
    for (int r = 1; r <= n; ++r) {
      Rational a = L.c(i, j, r);
      if (!is_zero(a)) acc += a * g.at(r - 1, k - 1);
    }
    return acc;
  };
  // Total antisymmetry is a consequence of invariance; verify it.
  ExteriorForm f(n, 3, Variance::Form);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        Rational v = gamma(i, j, k);
        if (!(gamma(j, k, i) == v) || !(gamma(k, i, j) == v) ||
            !(gamma(i, k, j) == -v))
          throw std::invalid_argument(
              "cartan_3form: result is not totally antisymmetric");
        f.add({i, j, k}, v);
      }
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      if (!is_zero(gamma(i, i, k)))
        throw std::invalid_argument("cartan_3form: gamma(i,i,k) != 0");
  return f;
}

ExteriorForm ce_differential(const LieAlgebra& L, const ExteriorForm& m) {
  const int n = L.dim();
  if (m.dim() != n)
    throw std::invalid_argument("ce_differential: dimension mismatch");
  if (m.degree() > 0 && m.variance() != Variance::Form)
    throw std::invalid_argument("ce_differential: expected a form");

  std::vector<ExteriorForm> dxi(n + 1, ExteriorForm(n, 2, Variance::Form));
  for (const auto& [key, coeff] : L.structure()) {
    auto [i, j, k] = key;
    dxi[k].add({i, j}, -coeff);
  }
  auto d_once = [&](const ExteriorForm& f) {
    ExteriorForm out(n, f.degree() + 1, Variance::Form);
    for (const auto& [I, c] : f.terms()) {
      for (std::size_t slot = 0; slot < I.size(); ++slot) {
        // prefix ^ d xi^{I_slot} ^ suffix, sign (-1)^slot
        ExteriorForm term = dxi[I[slot]];
        if (term.is_zero()) continue;
        IndexSet prefix(I.begin(), I.begin() + slot);
        IndexSet suffix(I.begin() + slot + 1, I.end());
        ExteriorForm w = wedge(ExteriorForm::basis_form(n, prefix),
                               wedge(term, ExteriorForm::basis_form(n, suffix)));
        Rational sign = (slot % 2 == 0) ? c : Rational(-c);
        out = out + w * sign;
      }
    }
    return out;
  };
  ExteriorForm dm = d_once(m);
  if (!d_once(dm).is_zero())
    throw std::invalid_argument(
        "ce_differential: d^2 != 0, structure constants violate Jacobi");
  return dm;
}

Rational CurvatureOperator::lowered_at(int i, int j, int k, int q) const {
  return lowered[((static_cast<std::size_t>(i) * n + j) * n + k) * n + q];
}

CurvatureOperator curvature_operator(const LieAlgebra& L) {
  const int n = L.dim();
  Mat g = killing_form(L).mat;
  auto ginv = g.inverse();
  if (!ginv)
    throw std::invalid_argument("curvature_operator: algebra is not semisimple");

  CurvatureOperator R;
  R.n = n;
  R.lowered.assign(static_cast<std::size_t>(n) * n * n * n, Rational(0));
  // 4 R_ijk^q = C_ij^r C_rk^q, lowered with g in the last slot.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<Rational> cij(n);
      bool any = false;
      for (int r = 1; r <= n; ++r) {
        cij[r - 1] = L.c(i + 1, j + 1, r);
        any = any || !is_zero(cij[r - 1]);
      }
      if (!any) continue;
      for (int k = 0; k < n; ++k) {
        std::vector<Rational> up(n);  // 4 R_ijk^q
        for (int r = 0; r < n; ++r) {
          if (is_zero(cij[r])) continue;
          for (int q = 1; q <= n; ++q) {
            Rational b = L.c(r + 1, k + 1, q);
            if (!is_zero(b)) up[q - 1] += cij[r] * b;
          }
        }
        for (int q = 0; q < n; ++q) {
          Rational acc(0);
          for (int s = 0; s < n; ++s)
            if (!is_zero(up[s])) acc += up[s] * g.at(s, q);
          if (!is_zero(acc))
            R.lowered[((static_cast<std::size_t>(i) * n + j) * n + k) * n + q] =
                acc / 4;
        }
      }
    }

  // Operator on (0,2)-tensors: [Rb]_ij = R_ipjq g^{pa} g^{qb} b_ab.
  R.op = Mat(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          Rational acc(0);
          for (int p = 0; p < n; ++p) {
            if (is_zero(ginv->at(p, a))) continue;
            for (int q = 0; q < n; ++q) {
              const Rational& r = R.lowered_at(i, p, j, q);
              if (!is_zero(r)) acc += r * ginv->at(p, a) * ginv->at(q, b);
            }
          }
          if (!is_zero(acc)) R.op.at(i * n + j, a * n + b) = acc;
        }

  // Restrictions: 2-form coordinates b_{ij}, i<j; symmetric coordinates
  // b_{ij}, i<=j. Consistency of the restrictions certifies that the
  // operator preserves both summands.
  const int nl = n * (n - 1) / 2, ns = n * (n + 1) / 2;
  std::vector<std::pair<int, int>> lpairs, spairs;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (i != j) lpairs.emplace_back(i, j);
      spairs.emplace_back(i, j);
    }
  R.lambda2 = Mat(nl, nl);
  for (int col = 0; col < nl; ++col) {
    auto [a, b] = lpairs[col];
    // image of E_ab - E_ba
    std::vector<Rational> img(n * n);
    for (int row = 0; row < n * n; ++row)
      img[row] = R.op.at(row, a * n + b) - R.op.at(row, b * n + a);
    for (int row = 0; row < nl; ++row) {
      auto [i, j] = lpairs[row];
      if (!(img[i * n + j] == -img[j * n + i]))
        throw std::logic_error("curvature_operator: image not antisymmetric");
      R.lambda2.at(row, col) = img[i * n + j];
    }
  }
  R.sym2 = Mat(ns, ns);
  for (int col = 0; col < ns; ++col) {
    auto [a, b] = spairs[col];
    std::vector<Rational> img(n * n);
    for (int row = 0; row < n * n; ++row) {
      img[row] = R.op.at(row, a * n + b);
      if (a != b) img[row] += R.op.at(row, b * n + a);
    }
    for (int row = 0; row < ns; ++row) {
      auto [i, j] = spairs[row];
      if (!(img[i * n + j] == img[j * n + i]))
        throw std::logic_error("curvature_operator: image not symmetric");
      R.sym2.at(row, col) = img[i * n + j];
    }
  }
  return R;
}

Lambda2Report lambda2_spectrum_check(const LieAlgebra& L) {
  const int n = L.dim();
  CurvatureOperator R = curvature_operator(L);
  Mat T = R.lambda2 * Rational(-8);
  Lambda2Report rep;
  rep.idempotent = (T * T == T);

  const int nl = n * (n - 1) / 2;
  Mat fix = (T - Mat::identity(nl)).null_space();
  rep.fix_dim = fix.rows();

  ExteriorForm gamma = cartan_3form(L);
  Mat span(n, nl);
  for (int v = 1; v <= n; ++v) {
    ExteriorForm contr = contract(gamma, ExteriorForm::basis_vector(n, {v}));
    int col = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        span.at(v - 1, col++) = contr.coeff({i + 1, j + 1});
  }
  rep.fix_space_matches =
      Subspace::from_rows(fix, nl, Variance::Vector) ==
      Subspace::from_rows(span, nl, Variance::Vector);
  return rep;
}

Sym2Report sym2_spectrum_check(const LieAlgebra& L) {
  const int n = L.dim();
  CurvatureOperator R = curvature_operator(L);
  Sym2Report rep;
  rep.hypothesis_met = (n >= 8);
  const int ns = n * (n + 1) / 2;
  Mat ker = (R.sym2 * Rational(8) - Mat::identity(ns)).null_space();
  rep.trivial_kernel = (ker.rows() == 0);
  return rep;
}

Mat cartan_contraction_identity(const LieAlgebra& L) {
  const int n = L.dim();
  ExteriorForm gamma = cartan_3form(L);
  auto ginv_opt = killing_form(L).mat.inverse();
  if (!ginv_opt)
    throw std::invalid_argument(
        "cartan_contraction_identity: algebra is not semisimple");
  const Mat& ginv = *ginv_opt;
  // dense gamma tensor
  std::vector<Rational> t(static_cast<std::size_t>(n) * n * n);
  auto tat = [&](int i, int j, int k) -> Rational& {
    return t[(static_cast<std::size_t>(i) * n + j) * n + k];
  };
  for (const auto& [I, c] : gamma.terms()) {
    const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                            {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    for (int p = 0; p < 6; ++p) {
      Rational v = p < 3 ? c : Rational(-c);
      tat(I[perm[p][0]] - 1, I[perm[p][1]] - 1, I[perm[p][2]] - 1) = v;
    }
  }
  // raise all three indices
  std::vector<Rational> up = t;
  auto raise_slot = [&](int slot) {
    std::vector<Rational> out(up.size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          int idx[3] = {a, b, c};
          Rational acc(0);
          for (int s = 0; s < n; ++s) {
            int src[3] = {a, b, c};
            src[slot] = s;
            const Rational& x =
                up[(static_cast<std::size_t>(src[0]) * n + src[1]) * n + src[2]];
            if (!is_zero(x)) acc += x * ginv.at(s, idx[slot]);
          }
          out[(static_cast<std::size_t>(a) * n + b) * n + c] = acc;
        }
    up = std::move(out);
  };
  raise_slot(0);
  raise_slot(1);
  raise_slot(2);
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational acc(0);
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          const Rational& low = tat(i, p, q);
          if (is_zero(low)) continue;
          acc += low * up[(static_cast<std::size_t>(p) * n + q) * n + j];
        }
      out.at(i, j) = acc;
    }
  return out;
}

bool isotropy_equals_ad(const LieAlgebra& L) {
  const int n = L.dim();
  ExteriorForm gamma = cartan_3form(L);
  Subspace h = isotropy_subspace(gamma);
  Mat ad_rows(n, n * n);
  for (int v = 1; v <= n; ++v) {
    std::vector<Rational> ev(n);
    ev[v - 1] = 1;
    Mat A = L.ad(ev);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ad_rows.at(v - 1, i * n + j) = A.at(i, j);
  }
  return h == Subspace::from_rows(ad_rows, n * n, Variance::Vector);
}

std::vector<Rational> NijenhuisTensor::value(int i, int j) const {
  std::vector<Rational> out(n_);
  for (int k = 0; k < n_; ++k) out[k] = at(i, j, k);
  return out;
}

bool NijenhuisTensor::is_zero() const {
  for (const auto& x : t_)
    if (!extform::is_zero(x)) return false;
  return true;
}

NijenhuisTensor nijenhuis(const LieAlgebra& L, const LinearMap& J) {
  const int n = L.dim();
  if (J.rows() != n || J.cols() != n)
    throw std::invalid_argument("nijenhuis: J shape mismatch");
  NijenhuisTensor N(n);
  std::vector<std::vector<Rational>> e(n), Je(n);
  for (int i = 0; i < n; ++i) {
    e[i].assign(n, Rational(0));
    e[i][i] = 1;
    Je[i] = J.apply(e[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto t1 = J.apply(L.bracket(Je[i], e[j]));
      auto t2 = J.apply(L.bracket(e[i], Je[j]));
      auto t3 = L.bracket(Je[i], Je[j]);
      auto t4 = L.bracket(e[i], e[j]);
      for (int k = 0; k < n; ++k) {
        Rational v = t1[k] + t2[k] - t3[k] + t4[k];
        N.at(i, j, k) = v;
        N.at(j, i, k) = -v;
      }
    }
  return N;
}

bool bracket_closed(const LieAlgebra& L, const Subspace& S) {
  if (S.ambient() != L.dim() || S.variance() != Variance::Vector)
    throw std::invalid_argument("bracket_closed: expected a subspace of V");
  for (int a = 0; a < S.dim(); ++a)
    for (int b = a + 1; b < S.dim(); ++b) {
      auto w = L.bracket(S.basis_row(a), S.basis_row(b));
      if (!S.contains(w)) return false;
    }
  return true;
}

}  // namespace extform
