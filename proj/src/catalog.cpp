#include <array>
#include <stdexcept>

#include "extform/lie.hpp"
#include "extform/threeform6.hpp"

namespace extform {

namespace {

// Structure constants from an explicit matrix basis: expands every
// commutator of basis elements in the basis again by solving the linear
// system once.
LieAlgebra from_matrix_basis(const std::vector<Mat>& basis, int msize) {
  const int n = static_cast<int>(basis.size());
  Mat coords(n, msize * msize);
  for (int b = 0; b < n; ++b)
    for (int i = 0; i < msize; ++i)
      for (int j = 0; j < msize; ++j)
        coords.at(b, i * msize + j) = basis[b].at(i, j);
  Mat coords_t = coords.transpose();

  LieAlgebra L(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Mat c = basis[a] * basis[b] - basis[b] * basis[a];
      Mat rhs(msize * msize, 1);
      for (int i = 0; i < msize; ++i)
        for (int j = 0; j < msize; ++j)
          rhs.at(i * msize + j, 0) = c.at(i, j);
      auto sol = coords_t.solve(rhs);
      if (!sol)
        throw std::logic_error("catalog: commutator left the span of the basis");
      for (int k = 0; k < n; ++k)
        L.set_structure(a + 1, b + 1, k + 1, sol->at(k, 0));
    }
  return L;
}

Mat elementary(int msize, int i, int j) {
  Mat e(msize, msize);
  e.at(i, j) = 1;
  return e;
}

// sl(3, R) in the basis E12, E13, E21, E23, E31, E32, H1 = E11 - E22,
// H2 = E22 - E33.
LieAlgebra make_sl3() {
  std::vector<Mat> basis = {
      elementary(3, 0, 1), elementary(3, 0, 2), elementary(3, 1, 0),
      elementary(3, 1, 2), elementary(3, 2, 0), elementary(3, 2, 1),
      elementary(3, 0, 0) - elementary(3, 1, 1),
      elementary(3, 1, 1) - elementary(3, 2, 2)};
  return from_matrix_basis(basis, 3);
}

// su(3) realified in gl(6, Q): X = P + iQ maps to [[P, -Q], [Q, P]].
// Basis: A_jk = E_jk - E_kj for j<k, S_jk = i(E_jk + E_kj) for j<k,
// D1 = i diag(1,-1,0), D2 = i diag(0,1,-1).
Mat realify(const Mat& p, const Mat& q) {
  const int m = p.rows();
  Mat r(2 * m, 2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      r.at(i, j) = p.at(i, j);
      r.at(i, m + j) = -q.at(i, j);
      r.at(m + i, j) = q.at(i, j);
      r.at(m + i, m + j) = p.at(i, j);
    }
  return r;
}

LieAlgebra make_su3() {
  std::vector<Mat> basis;
  Mat z(3, 3);
  for (int j = 0; j < 3; ++j)
    for (int k = j + 1; k < 3; ++k)
      basis.push_back(realify(elementary(3, j, k) - elementary(3, k, j), z));
  for (int j = 0; j < 3; ++j)
    for (int k = j + 1; k < 3; ++k)
      basis.push_back(realify(z, elementary(3, j, k) + elementary(3, k, j)));
  basis.push_back(realify(z, elementary(3, 0, 0) - elementary(3, 1, 1)));
  basis.push_back(realify(z, elementary(3, 1, 1) - elementary(3, 2, 2)));
  return from_matrix_basis(basis, 6);
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  LieAlgebra L(a.dim() + b.dim());
  for (const auto& [key, coeff] : a.structure()) {
    auto [i, j, k] = key;
    L.set_structure(i, j, k, coeff);
  }
  const int off = a.dim();
  for (const auto& [key, coeff] : b.structure()) {
    auto [i, j, k] = key;
    L.set_structure(i + off, j + off, k + off, coeff);
  }
  return L;
}

ExteriorForm signed_terms(int dim, int degree,
                          const std::vector<std::pair<IndexSet, int>>& terms) {
  ExteriorForm f(dim, degree, Variance::Form);
  for (const auto& [I, s] : terms) f.add(I, Rational(s));
  return f;
}

}  // namespace

LieAlgebra catalog_algebra(const std::string& name) {
  if (name == "sl2") {
    // (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
    LieAlgebra L(3);
    L.set_structure(1, 2, 2, Rational(2));
    L.set_structure(1, 3, 3, Rational(-2));
    L.set_structure(2, 3, 1, Rational(1));
    return L;
  }
  if (name == "su2") {
    // [e_i, e_j] = eps_ijk e_k
    LieAlgebra L(3);
    L.set_structure(1, 2, 3, Rational(1));
    L.set_structure(1, 3, 2, Rational(-1));
    L.set_structure(2, 3, 1, Rational(1));
    return L;
  }
  if (name == "sl3") return make_sl3();
  if (name == "su3") return make_su3();
  if (name == "sl3+sl3") return direct_sum(make_sl3(), make_sl3());
  if (name == "example-15a") {
    LieAlgebra L(6);
    L.set_structure(1, 2, 5, Rational(1));
    L.set_structure(1, 3, 6, Rational(1));
    return L;
  }
  if (name == "example-15b") {
    LieAlgebra L(6);
    L.set_structure(2, 4, 1, Rational(1));
    L.set_structure(2, 6, 3, Rational(-1));  // [e6, e2] = e3
    return L;
  }
  if (name == "example-15c") {
    LieAlgebra L(6);
    L.set_structure(1, 2, 6, Rational(1));
    L.set_structure(4, 5, 3, Rational(-1));  // [e5, e4] = e3
    return L;
  }
  throw std::invalid_argument("catalog_algebra: unknown name \"" + name + "\"");
}

ExteriorForm catalog_form(const std::string& name) {
  if (name == "g2-form") {
    return signed_terms(7, 3,
                        {{{1, 2, 3}, 1},
                         {{1, 4, 5}, 1},
                         {{1, 6, 7}, 1},
                         {{2, 4, 6}, 1},
                         {{2, 5, 7}, -1},
                         {{3, 4, 7}, -1},
                         {{3, 5, 6}, -1}});
  }
  if (name == "spin7-form") {
    return signed_terms(8, 4,
                        {{{1, 2, 3, 4}, 1},
                         {{1, 2, 5, 6}, 1},
                         {{1, 2, 7, 8}, 1},
                         {{1, 3, 5, 7}, 1},
                         {{1, 3, 6, 8}, -1},
                         {{1, 4, 5, 8}, -1},
                         {{1, 4, 6, 7}, -1},
                         {{2, 3, 5, 8}, -1},
                         {{2, 3, 6, 7}, -1},
                         {{2, 4, 5, 7}, -1},
                         {{2, 4, 6, 8}, 1},
                         {{3, 4, 5, 6}, 1},
                         {{3, 4, 7, 8}, 1},
                         {{5, 6, 7, 8}, 1}});
  }
  if (name == "example-15a-mu" || name == "canonical-3form-a")
    return canonical_3form(ThreeFormType::ComplexStable);
  if (name == "example-15b-mu" || name == "canonical-3form-b")
    return canonical_3form(ThreeFormType::Degenerate3);
  if (name == "example-15c-mu" || name == "canonical-3form-c")
    return canonical_3form(ThreeFormType::RealStable);
  if (name == "canonical-3form-d")
    return canonical_3form(ThreeFormType::OneDivisor);
  if (name == "canonical-3form-e")
    return canonical_3form(ThreeFormType::Decomposable);
  throw std::invalid_argument("catalog_form: unknown name \"" + name + "\"");
}

std::vector<std::string> catalog_algebra_names() {
  return {"sl2",          "su2",          "sl3",         "su3",
          "sl3+sl3",      "example-15a",  "example-15b", "example-15c"};
}

std::vector<std::string> catalog_form_names() {
  return {"g2-form",          "spin7-form",       "example-15a-mu",
          "example-15b-mu",   "example-15c-mu",   "canonical-3form-a",
          "canonical-3form-b", "canonical-3form-c", "canonical-3form-d",
          "canonical-3form-e"};
}

}  // namespace extform
