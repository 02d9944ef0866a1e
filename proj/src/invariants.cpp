#include "extform/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace extform {

namespace {

void require_form(const ExteriorForm& m, const char* who) {
  if (m.degree() > 0 && m.variance() != Variance::Form)
    throw std::invalid_argument(std::string(who) + ": expected a form");
}

// Matrix of v -> contract(m, v) in basis coordinates: one row per occurring
// (p-1)-index set, one column per basis vector.
Mat single_contraction_matrix(const ExteriorForm& m) {
  const int n = m.dim();
  std::map<IndexSet, int> row_of;
  std::vector<std::tuple<IndexSet, int, Rational>> entries;
  for (const auto& [I, c] : m.terms()) {
    for (std::size_t a = 0; a < I.size(); ++a) {
      IndexSet J;
      J.reserve(I.size() - 1);
      for (std::size_t b = 0; b < I.size(); ++b)
        if (b != a) J.push_back(I[b]);
      row_of.emplace(J, 0);
      entries.emplace_back(J, I[a], (a % 2 == 0) ? c : Rational(-c));
    }
  }
  int r = 0;
  for (auto& [k, v] : row_of) v = r++;
  Mat mat(r, n);
  for (auto& [J, col, val] : entries) mat.at(row_of[J], col - 1) += val;
  return mat;
}

// Matrix of xi -> xi ^ m: one row per occurring (p+1)-index set, one column
// per dual basis covector.
Mat wedge_matrix(const ExteriorForm& m) {
  const int n = m.dim();
  std::map<IndexSet, int> row_of;
  std::vector<std::tuple<IndexSet, int, Rational>> entries;
  for (const auto& [I, c] : m.terms()) {
    for (int i = 1; i <= n; ++i) {
      auto merged = merge_indices({i}, I);
      if (!merged) continue;
      row_of.emplace(merged->first, 0);
      entries.emplace_back(merged->first, i,
                           merged->second > 0 ? c : Rational(-c));
    }
  }
  int r = 0;
  for (auto& [k, v] : row_of) v = r++;
  Mat mat(r, n);
  for (auto& [K, col, val] : entries) mat.at(row_of[K], col - 1) += val;
  return mat;
}

}  // namespace

FormProfile profile(const ExteriorForm& m) {
  require_form(m, "profile");
  const int n = m.dim();
  const int p = m.degree();
  if (p < 1) throw std::invalid_argument("profile: degree must be at least 1");
  FormProfile out;
  if (m.is_zero()) {
    out.rank = 0;
    out.kernel = Subspace::full(n, Variance::Vector);
    out.image = Subspace::zero(n, Variance::Form);
    out.divisibility = Subspace::zero(n, Variance::Vector);
    out.divisor_space = Subspace::full(n, Variance::Form);
    return out;
  }
  out.kernel = Subspace::from_rows(single_contraction_matrix(m).null_space(), n,
                                   Variance::Vector);
  out.rank = n - out.kernel.dim();

  // Image: span of contractions against (p-1)-tuples drawn from the indices
  // occurring in m; tuples touching other indices contract to zero.
  std::set<int> support;
  for (const auto& [I, c] : m.terms()) support.insert(I.begin(), I.end());
  std::vector<int> sup(support.begin(), support.end());
  const int ns = static_cast<int>(sup.size());
  std::vector<std::vector<Rational>> rows;
  for (const auto& K : all_index_sets(ns, p - 1)) {
    IndexSet J(K.size());
    for (std::size_t a = 0; a < K.size(); ++a) J[a] = sup[K[a] - 1];
    ExteriorForm xi = contract(m, ExteriorForm::basis_vector(n, J));
    if (!xi.is_zero()) rows.push_back(xi.coordinates());
  }
  Mat im(static_cast<int>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < n; ++j) im.at(static_cast<int>(i), j) = rows[i][j];
  out.image = Subspace::from_rows(im, n, Variance::Form);

  out.divisor_space =
      Subspace::from_rows(wedge_matrix(m).null_space(), n, Variance::Form);
  out.divisibility = out.divisor_space.polar();
  out.decomposable = (out.rank == p);
  out.indivisible = (out.divisibility.dim() == n);
  if (out.rank == p + 1)
    throw std::logic_error("profile: impossible rank p+1, arithmetic bug");
  return out;
}

Subspace image_bruteforce(const ExteriorForm& m) {
  const int n = m.dim();
  std::vector<std::vector<Rational>> rows;
  for (const auto& J : all_index_sets(n, m.degree() - 1)) {
    ExteriorForm xi = contract(m, ExteriorForm::basis_vector(n, J));
    if (!xi.is_zero()) rows.push_back(xi.coordinates());
  }
  Mat im(static_cast<int>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < n; ++j) im.at(static_cast<int>(i), j) = rows[i][j];
  return Subspace::from_rows(im, n, Variance::Form);
}

std::vector<ExteriorForm> factor_decomposable(const ExteriorForm& m,
                                              const FormProfile& prof) {
  if (!prof.decomposable)
    throw std::invalid_argument("factor_decomposable: form is not decomposable");
  const int n = m.dim();
  const int p = m.degree();
  std::vector<ExteriorForm> out;
  ExteriorForm w = ExteriorForm::scalar(n, Rational(1), Variance::Form);
  for (int i = 0; i < p; ++i) {
    out.push_back(ExteriorForm::covector(prof.image.basis_row(i)));
    w = wedge(w, out.back());
  }
  Rational t;
  if (!w.proportional(m, &t))
    throw std::logic_error("factor_decomposable: image basis does not factor m");
  out.front() = out.front() * t;
  return out;
}

Factorization indivisible_factorization(const ExteriorForm& m,
                                        const FormProfile& prof) {
  if (m.is_zero())
    throw std::invalid_argument("indivisible_factorization: zero form");
  const int n = m.dim();
  const int s = prof.divisor_space.dim();

  // Full covector basis: D' rows first, then the lexicographically first
  // standard covectors keeping the rows independent.
  Mat P(n, n);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < n; ++j) P.at(i, j) = prof.divisor_space.basis().at(i, j);
  Mat complement(n - s, n);
  {
    int have = s;
    Mat probe(s, n);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < n; ++j) probe.at(i, j) = P.at(i, j);
    for (int j = 1; j <= n && have < n; ++j) {
      Mat row(1, n);
      row.at(0, j - 1) = 1;
      if (probe.stacked(row).rank() == have + 1) {
        probe = probe.stacked(row);
        P.at(have, j - 1) = 1;
        complement.at(have - s, j - 1) = 1;
        ++have;
      }
    }
    if (have != n)
      throw std::logic_error("indivisible_factorization: basis extension failed");
  }

  Mat Pinv = *P.inverse();
  ExteriorForm expanded = pullback(m, Pinv);

  // Every occurring index set must contain {1..s} (the divisor prefix).
  ExteriorForm zeta_reduced(n, m.degree() - s, Variance::Form);
  for (const auto& [I, c] : expanded.terms()) {
    for (int k = 0; k < s; ++k)
      if (I[k] != k + 1)
        throw std::logic_error(
            "indivisible_factorization: divisor prefix missing from a term");
    IndexSet rest(I.begin() + s, I.end());
    zeta_reduced.add(rest, c);
  }

  Factorization f;
  f.dual_basis = P;
  f.complement = complement;
  for (int i = 0; i < s; ++i) {
    std::vector<Rational> row(n);
    for (int j = 0; j < n; ++j) row[j] = P.at(i, j);
    f.theta.push_back(ExteriorForm::covector(row));
  }
  f.zeta = pullback(zeta_reduced, P);

  if (s == m.degree()) {
    // Decomposable case: absorb the leftover scalar into theta_1, zeta = 1.
    Rational c = f.zeta.coeff({});
    f.theta.front() = f.theta.front() * c;
    f.zeta = ExteriorForm::scalar(n, Rational(1), Variance::Form);
  }

  ExteriorForm check = f.zeta;
  for (auto it = f.theta.rbegin(); it != f.theta.rend(); ++it)
    check = wedge(*it, check);
  if (!(check == m))
    throw std::logic_error("indivisible_factorization: factors do not wedge back");
  return f;
}

namespace {

// Full antisymmetric coefficient matrix of a 2-form.
Mat gram_of_2form(const ExteriorForm& s) {
  const int n = s.dim();
  Mat g(n, n);
  for (const auto& [I, c] : s.terms()) {
    g.at(I[0] - 1, I[1] - 1) = c;
    g.at(I[1] - 1, I[0] - 1) = -c;
  }
  return g;
}

ExteriorForm two_object_from_matrix(const Mat& g, Variance v) {
  const int n = g.rows();
  ExteriorForm f(n, 2, v);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) f.add({i + 1, j + 1}, g.at(i, j));
  return f;
}

Rational factorial(int k) {
  Rational f(1);
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

ExteriorForm dual_of_2form(const ExteriorForm& s) {
  require_form(s, "dual_of_2form");
  if (s.degree() != 2)
    throw std::invalid_argument("dual_of_2form: degree must be 2");
  const int n = s.dim();
  if (n % 2 != 0)
    throw std::invalid_argument("dual_of_2form: odd dimension");
  const int mh = n / 2;
  auto inv = gram_of_2form(s).inverse();
  if (!inv) throw std::invalid_argument("dual_of_2form: degenerate 2-form");
  ExteriorForm beta = two_object_from_matrix(*inv, Variance::Vector);
  ExteriorForm omega = wedge_power(s, mh) * (1 / factorial(mh));
  return contract(omega, beta);
}

DualityResult two_form_from_indivisible(const ExteriorForm& m) {
  require_form(m, "two_form_from_indivisible");
  const int n = m.dim();
  if (n % 2 != 0 || n < 2)
    throw std::invalid_argument("two_form_from_indivisible: need even n >= 2");
  if (m.degree() != n - 2)
    throw std::invalid_argument("two_form_from_indivisible: degree must be n-2");
  if (m.is_zero())
    throw std::invalid_argument("two_form_from_indivisible: zero form");
  const int mh = n / 2;

  ExteriorForm beta = hodge_star(m);  // w.r.t. the standard volume form
  Mat b(n, n);
  for (const auto& [I, c] : beta.terms()) {
    b.at(I[0] - 1, I[1] - 1) = c;
    b.at(I[1] - 1, I[0] - 1) = -c;
  }
  auto binv = b.inverse();
  if (!binv)
    throw std::invalid_argument(
        "two_form_from_indivisible: form is divisible (degenerate bivector)");

  DualityResult r;
  r.sigma0 = two_object_from_matrix(*binv, Variance::Form);
  ExteriorForm pow = wedge_power(r.sigma0, mh) * (1 / factorial(mh));
  r.kappa = pow.coeff(full_set(n));
  r.t = r.kappa;
  r.sign_unique = (mh % 2 == 0);

  // dual(c * sigma0) = c^{mh-1} kappa m; normalize c^{mh-1} kappa = +-1.
  if (mh == 1) {
    r.exact_scale = Rational(1);
    r.float_scale = 1.0;
  } else {
    Rational target = 1 / r.kappa;
    auto root = exact_root(target, mh - 1);
    if (!root && !r.sign_unique) root = exact_root(-target, mh - 1);
    if (root) r.exact_scale = *root;
    double td = std::abs(target.get_d());
    r.float_scale = std::pow(td, 1.0 / (mh - 1));
  }

  ExteriorForm roundtrip = dual_of_2form(r.sigma0);
  if (!(roundtrip == m * r.t))
    throw std::logic_error("two_form_from_indivisible: roundtrip identity failed");
  return r;
}

LinearMap linear_darboux(const ExteriorForm& s) {
  require_form(s, "linear_darboux");
  if (s.degree() != 2)
    throw std::invalid_argument("linear_darboux: degree must be 2");
  const int n = s.dim();
  Mat g = gram_of_2form(s);

  std::vector<std::vector<Rational>> work;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> e(n);
    e[i] = 1;
    work.push_back(e);
  }
  auto pairing = [&](const std::vector<Rational>& u,
                     const std::vector<Rational>& v) {
    Rational acc(0);
    for (int i = 0; i < n; ++i) {
      if (is_zero(u[i])) continue;
      for (int j = 0; j < n; ++j)
        if (!is_zero(g.at(i, j)) && !is_zero(v[j])) acc += u[i] * g.at(i, j) * v[j];
    }
    return acc;
  };

  std::vector<std::vector<Rational>> darboux, kernel;
  while (!work.empty()) {
    int iu = -1, iv = -1;
    for (std::size_t a = 0; a < work.size() && iu < 0; ++a)
      for (std::size_t b = a + 1; b < work.size(); ++b)
        if (!is_zero(pairing(work[a], work[b]))) {
          iu = static_cast<int>(a);
          iv = static_cast<int>(b);
          break;
        }
    if (iu < 0) {
      kernel.insert(kernel.end(), work.begin(), work.end());
      break;
    }
    std::vector<Rational> u = work[iu], v = work[iv];
    Rational suv = pairing(u, v);
    for (auto& x : v) x /= suv;  // s(u, v) = 1
    std::vector<std::vector<Rational>> rest;
    for (std::size_t a = 0; a < work.size(); ++a) {
      if (static_cast<int>(a) == iu || static_cast<int>(a) == iv) continue;
      std::vector<Rational> w = work[a];
      Rational cu = pairing(w, u), cv = pairing(w, v);
      // w + s(w,u) v - s(w,v) u annihilates u and v
      for (int i = 0; i < n; ++i) w[i] += cu * v[i] - cv * u[i];
      rest.push_back(std::move(w));
    }
    darboux.push_back(std::move(u));
    darboux.push_back(std::move(v));
    work = std::move(rest);
  }

  Mat M(n, n);
  int col = 0;
  for (const auto& u : darboux) {
    for (int i = 0; i < n; ++i) M.at(i, col) = u[i];
    ++col;
  }
  for (const auto& u : kernel) {
    for (int i = 0; i < n; ++i) M.at(i, col) = u[i];
    ++col;
  }
  return M;
}

std::vector<LinearMap> isotropy_algebra(const ExteriorForm& m) {
  Subspace h = isotropy_subspace(m);
  const int n = m.dim();
  std::vector<LinearMap> out;
  for (int r = 0; r < h.dim(); ++r) {
    Mat A(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A.at(i, j) = h.basis().at(r, i * n + j);
    out.push_back(std::move(A));
  }
  // h is a Lie algebra: commutators stay inside.
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b) {
      Mat c = out[a] * out[b] - out[b] * out[a];
      Mat row(1, n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) row.at(0, i * n + j) = c.at(i, j);
      std::vector<Rational> v(n * n);
      for (int k = 0; k < n * n; ++k) v[k] = row.at(0, k);
      if (!h.contains(v))
        throw std::logic_error("isotropy_algebra: commutator escaped h");
    }
  return out;
}

Subspace isotropy_subspace(const ExteriorForm& m) {
  require_form(m, "isotropy_algebra");
  const int n = m.dim();
  // Unknowns A_{ab}, row-major. Equation rows keyed by the p-index sets
  // reachable from the terms of m under single-slot replacement.
  std::map<IndexSet, int> row_of;
  std::vector<std::tuple<IndexSet, int, int, Rational>> entries;
  for (const auto& [I, c] : m.terms()) {
    for (std::size_t slot = 0; slot < I.size(); ++slot) {
      for (int j = 1; j <= n; ++j) {
        IndexSet rep = I;
        rep[slot] = j;
        auto sorted = sort_indices(rep);
        if (!sorted) continue;
        row_of.emplace(sorted->first, 0);
        entries.emplace_back(sorted->first, I[slot], j,
                             sorted->second > 0 ? c : Rational(-c));
      }
    }
  }
  int r = 0;
  for (auto& [k, v] : row_of) v = r++;
  Mat sys(r, n * n);
  for (auto& [K, a, j, val] : entries)
    sys.at(row_of[K], (a - 1) * n + (j - 1)) += val;
  return Subspace::from_rows(sys.null_space(), n * n, Variance::Vector);
}

std::optional<Mat> skew_metric_certificate(const std::vector<LinearMap>& h) {
  if (h.empty())
    throw std::invalid_argument("skew_metric_certificate: empty generator list");
  const int n = h.front().rows();

  // Fast path: the identity certifies when every generator is antisymmetric.
  bool all_skew = true;
  for (const auto& A : h)
    if (!(A.transpose() + A).is_zero()) {
      all_skew = false;
      break;
    }
  if (all_skew) return Mat::identity(n);

  // Solve A^T g + g A = 0 over symmetric g; unknowns g_{ab}, a <= b.
  const int nu = n * (n + 1) / 2;
  auto uidx = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return a * n + b - a * (a + 1) / 2;
  };
  std::vector<std::vector<Rational>> rows;
  for (const auto& A : h) {
    if (A.rows() != n || A.cols() != n)
      throw std::invalid_argument("skew_metric_certificate: shape mismatch");
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        std::vector<Rational> row(nu);
        // (A^T g + g A)_{ij} = sum_s A_{si} g_{sj} + g_{is} A_{sj}
        for (int s = 0; s < n; ++s) {
          if (!is_zero(A.at(s, i))) row[uidx(s, j)] += A.at(s, i);
          if (!is_zero(A.at(s, j))) row[uidx(i, s)] += A.at(s, j);
        }
        rows.push_back(std::move(row));
      }
  }
  Mat sys(static_cast<int>(rows.size()), nu);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < nu; ++j) sys.at(static_cast<int>(i), j) = rows[i][j];
  Mat sol = sys.null_space();
  const int d = sol.rows();
  if (d == 0) return std::nullopt;
  double grid_size = std::pow(n + 1.0, d);
  if (grid_size > 2e5)
    throw std::runtime_error(
        "skew_metric_certificate: solution space too large to certify");

  auto assemble = [&](const std::vector<long>& t) {
    Mat g(n, n);
    for (int k = 0; k < d; ++k) {
      if (t[k] == 0) continue;
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
          Rational v = sol.at(k, uidx(a, b)) * t[k];
          g.at(a, b) += v;
          if (a != b) g.at(b, a) += v;
        }
    }
    return g;
  };

  // Deterministic grid {0..n}^d covers every monomial of the determinant
  // polynomial (per-variable degree <= n): if det vanishes on all of it, it
  // vanishes identically and no nondegenerate solution exists.
  std::vector<long> t(d, 0);
  while (true) {
    Mat g = assemble(t);
    if (!is_zero(g.det())) return g;
    int k = 0;
    while (k < d && t[k] == n) t[k++] = 0;
    if (k == d) break;
    ++t[k];
  }
  return std::nullopt;
}

}  // namespace extform
