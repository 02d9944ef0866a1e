#include "extform/threeform6.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace extform {

namespace {

void require_3form6(const ExteriorForm& m, const char* who) {
  if (m.dim() != 6 || m.degree() != 3 ||
      (m.degree() > 0 && m.variance() != Variance::Form))
    throw std::invalid_argument(std::string(who) +
                                ": expected a 3-form on dimension 6");
}

// xi ^ m is decomposable iff its dual bivector b satisfies b ^ b = 0.
bool wedge_decomposable(const ExteriorForm& xi, const ExteriorForm& m) {
  ExteriorForm b = hodge_star(wedge(xi, m));
  return wedge(b, b).is_zero();
}

Mat columns_to_mat(const std::vector<std::vector<Rational>>& cols) {
  const int n = static_cast<int>(cols.empty() ? 0 : cols.front().size());
  Mat M(n, static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int i = 0; i < n; ++i) M.at(i, static_cast<int>(c)) = cols[c][i];
  return M;
}

// Projection onto `onto` along `along` (complementary subspaces of Q^n).
Mat projector(const Subspace& onto, const Subspace& along) {
  const int n = onto.ambient();
  const int k = onto.dim();
  Mat B(n, n);  // columns: basis of onto, then basis of along
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) B.at(i, j) = onto.basis().at(j, i);
  for (int j = 0; j < along.dim(); ++j)
    for (int i = 0; i < n; ++i) B.at(i, k + j) = along.basis().at(j, i);
  auto Binv = B.inverse();
  if (!Binv) throw std::logic_error("projector: subspaces not complementary");
  Mat D(n, n);
  for (int j = 0; j < k; ++j) D.at(j, j) = 1;
  return B * D * *Binv;
}

int flat_index(int i, int j) { return i * 6 + j; }

Mat checked_inverse(const Mat& m, const char* who) {
  auto inv = m.inverse();
  if (!inv) throw std::logic_error(std::string(who) + ": singular basis matrix");
  return *inv;
}

// m(J., ., .) computed slot-wise.
ExteriorForm first_slot_action(const Mat& J, const ExteriorForm& m) {
  ExteriorForm out(6, 3, Variance::Form);
  for (const auto& I : all_index_sets(6, 3)) {
    std::vector<Rational> je(6);
    for (int i = 0; i < 6; ++i) je[i] = J.at(i, I[0] - 1);
    std::vector<Rational> e2(6), e3(6);
    e2[I[1] - 1] = 1;
    e3[I[2] - 1] = 1;
    out.add(I, evaluate(m, {je, e2, e3}));
  }
  return out;
}

}  // namespace

std::string type_name(ThreeFormType t) {
  switch (t) {
    case ThreeFormType::Zero: return "zero";
    case ThreeFormType::ComplexStable: return "complex-stable";
    case ThreeFormType::Degenerate3: return "degenerate";
    case ThreeFormType::RealStable: return "real-stable";
    case ThreeFormType::OneDivisor: return "one-divisor";
    case ThreeFormType::Decomposable: return "decomposable";
  }
  return "?";
}

char type_letter(ThreeFormType t) {
  switch (t) {
    case ThreeFormType::Zero: return '0';
    case ThreeFormType::ComplexStable: return 'a';
    case ThreeFormType::Degenerate3: return 'b';
    case ThreeFormType::RealStable: return 'c';
    case ThreeFormType::OneDivisor: return 'd';
    case ThreeFormType::Decomposable: return 'e';
  }
  return '?';
}

ExteriorForm canonical_3form(ThreeFormType t) {
  ExteriorForm m(6, 3, Variance::Form);
  const Rational one(1);
  switch (t) {
    case ThreeFormType::ComplexStable:
      m.add({1, 2, 3}, one);
      m.add({3, 4, 5}, one);
      m.add({5, 6, 1}, one);
      m.add({2, 4, 6}, one);
      break;
    case ThreeFormType::Degenerate3:
      m.add({1, 2, 3}, one);
      m.add({3, 4, 5}, one);
      m.add({5, 6, 1}, one);
      break;
    case ThreeFormType::RealStable:
      m.add({1, 2, 3}, one);
      m.add({4, 5, 6}, one);
      break;
    case ThreeFormType::OneDivisor:
      m.add({1, 2, 3}, one);
      m.add({4, 5, 1}, one);
      break;
    case ThreeFormType::Decomposable:
      m.add({1, 2, 3}, one);
      break;
    case ThreeFormType::Zero:
      break;
  }
  return m;
}

Discriminant hitchin_discriminant(const ExteriorForm& m) {
  require_3form6(m, "hitchin_discriminant");
  std::vector<std::vector<Rational>> cols;
  for (int j = 1; j <= 6; ++j) {
    ExteriorForm iv = contract(m, ExteriorForm::basis_vector(6, {j}));
    ExteriorForm five = wedge(iv, m);
    cols.push_back(hodge_star(five).coordinates());
  }
  Discriminant d;
  d.K = columns_to_mat(cols);
  d.volume = standard_volume_form(6);
  Mat K2 = d.K * d.K;
  Rational tr(0);
  for (int i = 0; i < 6; ++i) tr += K2.at(i, i);
  d.lambda = tr / 6;
  return d;
}

AlmostComplex almost_complex(const ExteriorForm& m) {
  require_3form6(m, "almost_complex");
  Discriminant d = hitchin_discriminant(m);
  if (sgn(d.lambda) >= 0)
    throw std::invalid_argument("almost_complex: form is not complex-stable");
  AlmostComplex out;
  out.K = d.K;
  out.lambda = d.lambda;
  // J = -K / sqrt(-lambda); the sign makes the canonical form come out as
  // J e4 = e1, J e6 = e3, J e2 = e5. Both signs square to -Id.
  auto s = exact_sqrt(-d.lambda);
  if (s) {
    Mat J = d.K * (Rational(-1) / *s);
    Mat J2 = J * J + Mat::identity(6);
    if (!J2.is_zero())
      throw std::logic_error("almost_complex: J^2 + Id != 0");
    out.J = J;
  }
  const double sd = std::sqrt(-d.lambda.get_d());
  out.J_float.resize(36);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      out.J_float[flat_index(i, j)] = -d.K.at(i, j).get_d() / sd;
  return out;
}

TypeBInvariants type_b_invariants(const ExteriorForm& m) {
  require_3form6(m, "type_b_invariants");
  Discriminant d = hitchin_discriminant(m);
  FormProfile prof = profile(m);
  if (prof.rank != 6 || sgn(d.lambda) != 0)
    throw std::invalid_argument("type_b_invariants: form is not of type b");

  // H is the image of K; its polar H' is the decomposability variety
  // {xi : xi ^ m decomposable}, verified below through the dual-bivector
  // rank-4 criterion.
  TypeBInvariants out;
  out.H = Subspace::from_rows(d.K.transpose(), 6, Variance::Vector);
  if (out.H.dim() != 3)
    throw std::logic_error("type_b_invariants: image of K is not a 3-plane");
  out.Hprime = out.H.polar();
  for (int r = 0; r < 3; ++r) {
    ExteriorForm xi = ExteriorForm::covector(out.Hprime.basis_row(r));
    if (!wedge_decomposable(xi, m))
      throw std::logic_error(
          "type_b_invariants: H' basis fails the decomposability criterion");
  }

  // Theta(v) = contract(m, v) lands in Lambda^2 H'; express it over the
  // echelon bases.
  std::vector<ExteriorForm> hp;
  for (int r = 0; r < 3; ++r)
    hp.push_back(ExteriorForm::covector(out.Hprime.basis_row(r)));
  const std::array<std::pair<int, int>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
  Mat coords(15, 3);  // Lambda^2 Q^6 coordinates of the three wedge pairs
  auto two_form_coords = [](const ExteriorForm& f) {
    std::vector<Rational> v(15);
    int k = 0;
    for (const auto& I : all_index_sets(6, 2)) v[k++] = f.coeff(I);
    return v;
  };
  for (int c = 0; c < 3; ++c) {
    auto v = two_form_coords(wedge(hp[pairs[c].first], hp[pairs[c].second]));
    for (int i = 0; i < 15; ++i) coords.at(i, c) = v[i];
  }
  Mat rhs(15, 3);
  for (int c = 0; c < 3; ++c) {
    ExteriorForm th =
        contract(m, ExteriorForm::vector(out.H.basis_row(c)));
    auto v = two_form_coords(th);
    for (int i = 0; i < 15; ++i) rhs.at(i, c) = v[i];
  }
  auto sol = coords.solve(rhs);
  if (!sol)
    throw std::logic_error("type_b_invariants: Theta image left Lambda^2 H'");
  out.theta = *sol;
  if (out.theta.rank() != 3)
    throw std::logic_error("type_b_invariants: Theta is singular");
  return out;
}

std::array<HalfPair, 2> type_c_invariants(const ExteriorForm& m) {
  require_3form6(m, "type_c_invariants");
  Discriminant d = hitchin_discriminant(m);
  if (sgn(d.lambda) <= 0)
    throw std::invalid_argument("type_c_invariants: form is not real-stable");
  auto s = exact_sqrt(d.lambda);
  if (!s)
    throw std::domain_error(
        "type_c_invariants: sqrt(lambda) is irrational; use the float path");

  auto eigenspace = [&](const Rational& ev) {
    Mat A = d.K - Mat::identity(6) * ev;
    return Subspace::from_rows(A.null_space(), 6, Variance::Vector);
  };
  Subspace hplus = eigenspace(*s), hminus = eigenspace(-*s);
  if (hplus.dim() != 3 || hminus.dim() != 3)
    throw std::logic_error("type_c_invariants: eigenspaces are not 3-planes");

  // eta for an eigenspace H kills H: pull m back through the projection onto
  // the other eigenspace.
  auto eta_for = [&](const Subspace& h, const Subspace& other) {
    return pullback(m, projector(other, h));
  };
  std::array<HalfPair, 2> out = {
      HalfPair{hplus, eta_for(hplus, hminus)},
      HalfPair{hminus, eta_for(hminus, hplus)}};
  if (!(out[0].eta + out[1].eta == m))
    throw std::logic_error("type_c_invariants: eta+ + eta- != m");
  for (const auto& half : out) {
    FormProfile p = profile(half.eta);
    if (!p.decomposable)
      throw std::logic_error("type_c_invariants: eta is not decomposable");
  }
  return out;
}

namespace {

// Orders the two halves deterministically (by term sequence of eta).
bool half_less(const HalfPair& x, const HalfPair& y) {
  auto &a = x.eta.terms(), &b = y.eta.terms();
  auto it = a.begin();
  auto jt = b.begin();
  for (; it != a.end() && jt != b.end(); ++it, ++jt) {
    if (it->first != jt->first) return it->first < jt->first;
    if (it->second != jt->second) return it->second < jt->second;
  }
  return a.size() < b.size();
}

// Extends the rows of `rows` (k x n, independent) to an invertible n x n
// matrix by greedily appending standard covectors, lexicographically first.
Mat extend_rows_to_basis(const Mat& rows) {
  const int n = rows.cols();
  Mat P(n, n);
  for (int i = 0; i < rows.rows(); ++i)
    for (int j = 0; j < n; ++j) P.at(i, j) = rows.at(i, j);
  int have = rows.rows();
  Mat probe = rows;
  for (int j = 1; j <= n && have < n; ++j) {
    Mat row(1, n);
    row.at(0, j - 1) = 1;
    if (probe.stacked(row).rank() == have + 1) {
      probe = probe.stacked(row);
      P.at(have, j - 1) = 1;
      ++have;
    }
  }
  if (have != n) throw std::logic_error("extend_rows_to_basis failed");
  return P;
}

Mat rows_from_covectors(const std::vector<ExteriorForm>& cov) {
  Mat rows(static_cast<int>(cov.size()),
           cov.empty() ? 0 : cov.front().dim());
  for (std::size_t i = 0; i < cov.size(); ++i) {
    auto v = cov[i].coordinates();
    for (std::size_t j = 0; j < v.size(); ++j)
      rows.at(static_cast<int>(i), static_cast<int>(j)) = v[j];
  }
  return rows;
}

NormalFormBasis basis_type_e(const ExteriorForm& m, const FormProfile& prof) {
  auto factors = factor_decomposable(m, prof);
  Mat P = extend_rows_to_basis(rows_from_covectors(factors));
  NormalFormBasis out;
  out.M = checked_inverse(P, "normal_form_basis");
  return out;
}

NormalFormBasis basis_type_d(const ExteriorForm& m, const FormProfile& prof) {
  Factorization f = indivisible_factorization(m, prof);
  const Subspace& D = prof.divisibility;  // dim 5
  // zeta restricted to D, in the coordinates of D's echelon basis.
  Mat inc(6, 5);
  for (int j = 0; j < 5; ++j)
    for (int i = 0; i < 6; ++i) inc.at(i, j) = D.basis().at(j, i);
  ExteriorForm zd = pullback(f.zeta, inc);
  Mat dar = linear_darboux(zd);  // 5x5, rank 4 part first

  std::vector<std::vector<Rational>> cols;
  // v0 with theta(v0) = 1, first standard basis vector not killed by theta.
  auto th = f.theta.front().coordinates();
  int j0 = 0;
  while (is_zero(th[j0])) ++j0;
  std::vector<Rational> v0(6);
  v0[j0] = 1 / th[j0];
  cols.push_back(v0);
  Mat dcols = inc * dar;
  for (int c = 0; c < 5; ++c) {
    std::vector<Rational> v(6);
    for (int i = 0; i < 6; ++i) v[i] = dcols.at(i, c);
    cols.push_back(v);
  }
  NormalFormBasis out;
  out.M = columns_to_mat(cols);
  return out;
}

NormalFormBasis basis_type_c_exact(std::array<HalfPair, 2> halves) {
  if (half_less(halves[1], halves[0])) std::swap(halves[0], halves[1]);
  // Columns: basis of ker(eta_0) paired with the block where eta_1 lives.
  // eta_0 vanishes on its own H, so the complementary H carries it as a
  // volume; order the triples so each eta restricts to the dual block.
  std::vector<std::vector<Rational>> cols;
  auto push_block = [&](const Subspace& h, const ExteriorForm& vol) {
    std::vector<std::vector<Rational>> b;
    for (int r = 0; r < 3; ++r) b.push_back(h.basis_row(r));
    Rational val = evaluate(vol, b);
    if (is_zero(val))
      throw std::logic_error("normal_form_basis: degenerate type-c block");
    for (auto& x : b.front()) x /= val;
    for (auto& v : b) cols.push_back(v);
  };
  // halves[0].eta lives on halves[1].H and vice versa.
  push_block(halves[1].H, halves[0].eta);
  push_block(halves[0].H, halves[1].eta);
  NormalFormBasis out;
  out.M = columns_to_mat(cols);
  return out;
}

NormalFormBasis basis_type_b(const ExteriorForm& m, const TypeBInvariants& inv) {
  // With beta^1, beta^2, beta^3 the echelon basis of H', solve
  //   m = chi_2 ^ (beta^2 ^ beta^1) + chi_4 ^ (beta^3 ^ beta^2)
  //     + chi_6 ^ (beta^1 ^ beta^3)
  // for the three covectors chi; then (beta^1, chi_2, beta^2, chi_4,
  // beta^3, chi_6) is the dual basis of the canonical expression.
  std::vector<ExteriorForm> beta;
  for (int r = 0; r < 3; ++r)
    beta.push_back(ExteriorForm::covector(inv.Hprime.basis_row(r)));
  const std::array<ExteriorForm, 3> blocks = {
      wedge(beta[1], beta[0]), wedge(beta[2], beta[1]), wedge(beta[0], beta[2])};

  auto keys = all_index_sets(6, 3);
  Mat A(static_cast<int>(keys.size()), 18);
  Mat rhs(static_cast<int>(keys.size()), 1);
  for (std::size_t r = 0; r < keys.size(); ++r)
    rhs.at(static_cast<int>(r), 0) = m.coeff(keys[r]);
  for (int t = 0; t < 3; ++t)
    for (int k = 1; k <= 6; ++k) {
      ExteriorForm col = wedge(ExteriorForm::basis_form(6, {k}), blocks[t]);
      for (std::size_t r = 0; r < keys.size(); ++r)
        A.at(static_cast<int>(r), t * 6 + (k - 1)) = col.coeff(keys[r]);
    }
  auto sol = A.solve(rhs);
  if (!sol)
    throw std::logic_error("normal_form_basis: type-b reconstruction failed");
  Mat P(6, 6);
  auto beta_row = [&](int r, int out_row) {
    auto v = inv.Hprime.basis_row(r);
    for (int j = 0; j < 6; ++j) P.at(out_row, j) = v[j];
  };
  beta_row(0, 0);
  beta_row(1, 2);
  beta_row(2, 4);
  for (int t = 0; t < 3; ++t)
    for (int j = 0; j < 6; ++j) P.at(2 * t + 1, j) = sol->at(t * 6 + j, 0);
  NormalFormBasis out;
  out.M = checked_inverse(P, "normal_form_basis");
  return out;
}

NormalFormBasis basis_type_a_exact(const ExteriorForm& m, const Mat& J) {
  // Greedy complex basis w1, w2, w3 of (V, J), then a complex rescale of w1
  // making the complex determinant form take value 1 on (w1, w2, w3). The
  // real basis (J w1, w3, J w2, w1, J w3, w2) then exhibits m as the real
  // part of the standard complex volume form.
  auto Jtimes = [&](const std::vector<Rational>& v) { return J.apply(v); };
  std::vector<std::vector<Rational>> w;
  Mat probe(0, 6);
  auto try_add = [&](const std::vector<Rational>& v) {
    Mat two(2, 6);
    auto jv = Jtimes(v);
    for (int j = 0; j < 6; ++j) {
      two.at(0, j) = v[j];
      two.at(1, j) = jv[j];
    }
    Mat cand = probe.stacked(two);
    if (cand.rank() == probe.rows() + 2) {
      probe = cand;
      w.push_back(v);
      return true;
    }
    return false;
  };
  for (int k = 0; k < 6 && w.size() < 3; ++k) {
    std::vector<Rational> e(6);
    e[k] = 1;
    try_add(e);
  }
  if (w.size() != 3)
    throw std::logic_error("normal_form_basis: complex basis search failed");

  // Omega = m - i m(J.,.,.) is complex-trilinear; evaluate on (w1,w2,w3).
  auto omega_value = [&](const std::vector<Rational>& u,
                         const std::vector<Rational>& v,
                         const std::vector<Rational>& t) {
    Rational re = evaluate(m, {u, v, t});
    Rational im = -evaluate(m, {Jtimes(u), v, t});
    return std::make_pair(re, im);
  };
  auto [cr, ci] = omega_value(w[0], w[1], w[2]);
  Rational norm = cr * cr + ci * ci;
  if (is_zero(norm))
    throw std::logic_error("normal_form_basis: degenerate complex volume");
  // w1 := (1/c) . w1 = (cr/|c|^2) w1 - (ci/|c|^2) J w1
  Rational ar = cr / norm, ai = -ci / norm;
  std::vector<Rational> w1(6), jw0 = Jtimes(w[0]);
  for (int i = 0; i < 6; ++i) w1[i] = ar * w[0][i] + ai * jw0[i];
  w[0] = w1;

  std::vector<std::vector<Rational>> cols = {
      Jtimes(w[0]), w[2], Jtimes(w[1]), w[0], Jtimes(w[2]), w[1]};
  NormalFormBasis out;
  out.M = columns_to_mat(cols);
  return out;
}

// Double-precision fallback for irrational square roots (types a and c).
// The residual is evaluated exactly on the dyadic rational matrix.
NormalFormBasis certify_float_basis(const ExteriorForm& m,
                                    const std::vector<std::array<double, 6>>& cols,
                                    ThreeFormType t) {
  Mat M(6, 6);
  for (int j = 0; j < 6; ++j)
    for (int i = 0; i < 6; ++i) {
      Rational q;
      mpq_set_d(q.get_mpq_t(), cols[j][i]);
      M.at(i, j) = q;
    }
  ExteriorForm diff = pullback(m, M) - canonical_3form(t);
  double res = 0.0;
  for (const auto& [I, c] : diff.terms())
    res = std::max(res, std::abs(c.get_d()));
  NormalFormBasis out;
  out.M = M;
  out.exact = false;
  out.residual = res;
  if (res >= 1e-9)
    throw std::runtime_error("normal_form_basis: float residual too large");
  return out;
}

NormalFormBasis basis_type_a_float(const ExteriorForm& m, const Discriminant& d) {
  std::array<std::array<double, 6>, 6> K;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) K[i][j] = d.K.at(i, j).get_d();
  const double s = std::sqrt(-d.lambda.get_d());
  auto Jtimes = [&](const std::array<double, 6>& v) {
    std::array<double, 6> r{};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) r[i] += -K[i][j] / s * v[j];
    return r;
  };
  // Greedy complex basis with a crude independence test.
  std::vector<std::array<double, 6>> basis;
  auto independent = [&](std::vector<std::array<double, 6>> rows) {
    const int k = static_cast<int>(rows.size());
    for (int c = 0, r = 0; c < 6 && r < k; ++c) {
      int pr = -1;
      double best = 1e-7;
      for (int i = r; i < k; ++i)
        if (std::abs(rows[i][c]) > best) {
          best = std::abs(rows[i][c]);
          pr = i;
        }
      if (pr < 0) continue;
      std::swap(rows[pr], rows[r]);
      for (int i = r + 1; i < k; ++i) {
        double f = rows[i][c] / rows[r][c];
        for (int j = 0; j < 6; ++j) rows[i][j] -= f * rows[r][j];
      }
      ++r;
      if (r == k) return true;
    }
    return false;
  };
  std::vector<std::array<double, 6>> w;
  for (int k = 0; k < 6 && w.size() < 3; ++k) {
    std::array<double, 6> e{};
    e[k] = 1.0;
    auto cand = basis;
    cand.push_back(e);
    cand.push_back(Jtimes(e));
    if (independent(cand)) {
      basis = cand;
      w.push_back(e);
    }
  }
  if (w.size() != 3)
    throw std::logic_error("normal_form_basis: float complex basis failed");

  auto eval_d = [&](const std::array<double, 6>& a, const std::array<double, 6>& b,
                    const std::array<double, 6>& c) {
    double acc = 0.0;
    for (const auto& [I, q] : m.terms()) {
      double det = a[I[0] - 1] * (b[I[1] - 1] * c[I[2] - 1] - b[I[2] - 1] * c[I[1] - 1]) -
                   a[I[1] - 1] * (b[I[0] - 1] * c[I[2] - 1] - b[I[2] - 1] * c[I[0] - 1]) +
                   a[I[2] - 1] * (b[I[0] - 1] * c[I[1] - 1] - b[I[1] - 1] * c[I[0] - 1]);
      acc += q.get_d() * det;
    }
    return acc;
  };
  const std::complex<double> cval(eval_d(w[0], w[1], w[2]),
                                  -eval_d(Jtimes(w[0]), w[1], w[2]));
  const std::complex<double> inv = 1.0 / cval;
  auto jw0 = Jtimes(w[0]);
  for (int i = 0; i < 6; ++i)
    w[0][i] = inv.real() * w[0][i] + inv.imag() * jw0[i];

  std::vector<std::array<double, 6>> cols = {Jtimes(w[0]), w[2], Jtimes(w[1]),
                                             w[0],         Jtimes(w[2]), w[1]};
  return certify_float_basis(m, cols, ThreeFormType::ComplexStable);
}

NormalFormBasis basis_type_c_float(const ExteriorForm& m, const Discriminant& d) {
  std::array<std::array<double, 6>, 6> K;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) K[i][j] = d.K.at(i, j).get_d();
  const double s = std::sqrt(d.lambda.get_d());

  // Columns of K -+ s span the eigenspaces for +-s; take three independent
  // ones per sign by pivoted elimination.
  auto span_cols = [&](double shift) {
    std::vector<std::array<double, 6>> cols;
    for (int j = 0; j < 6; ++j) {
      std::array<double, 6> v{};
      for (int i = 0; i < 6; ++i) v[i] = K[i][j] + (i == j ? shift : 0.0);
      cols.push_back(v);
    }
    // Greedy pick of 3 independent columns.
    std::vector<std::array<double, 6>> pick;
    std::vector<std::array<double, 6>> red;
    for (const auto& v : cols) {
      auto u = v;
      for (std::size_t r = 0; r < red.size(); ++r) {
        double dot = 0, nn = 0;
        for (int i = 0; i < 6; ++i) {
          dot += u[i] * red[r][i];
          nn += red[r][i] * red[r][i];
        }
        for (int i = 0; i < 6; ++i) u[i] -= dot / nn * red[r][i];
      }
      double norm = 0;
      for (int i = 0; i < 6; ++i) norm += u[i] * u[i];
      if (norm > 1e-12) {
        red.push_back(u);
        pick.push_back(v);
        if (pick.size() == 3) break;
      }
    }
    return pick;
  };
  auto eplus = span_cols(s);   // columns of K + sI span ker(K - sI)
  auto eminus = span_cols(-s);

  auto eval_d = [&](std::array<double, 6> a, std::array<double, 6> b,
                    std::array<double, 6> c) {
    double acc = 0.0;
    for (const auto& [I, q] : m.terms()) {
      double det = a[I[0] - 1] * (b[I[1] - 1] * c[I[2] - 1] - b[I[2] - 1] * c[I[1] - 1]) -
                   a[I[1] - 1] * (b[I[0] - 1] * c[I[2] - 1] - b[I[2] - 1] * c[I[0] - 1]) +
                   a[I[2] - 1] * (b[I[0] - 1] * c[I[1] - 1] - b[I[1] - 1] * c[I[0] - 1]);
      acc += q.get_d() * det;
    }
    return acc;
  };
  double q1 = eval_d(eminus[0], eminus[1], eminus[2]);
  for (int i = 0; i < 6; ++i) eminus[0][i] /= q1;
  double q2 = eval_d(eplus[0], eplus[1], eplus[2]);
  for (int i = 0; i < 6; ++i) eplus[0][i] /= q2;

  std::vector<std::array<double, 6>> cols = {eminus[0], eminus[1], eminus[2],
                                             eplus[0],  eplus[1],  eplus[2]};
  // (the canonical expression is symmetric under swapping the triples)
  return certify_float_basis(m, cols, ThreeFormType::RealStable);
}

}  // namespace

NormalFormBasis normal_form_basis(const ExteriorForm& m) {
  require_3form6(m, "normal_form_basis");
  if (m.is_zero())
    throw std::invalid_argument("normal_form_basis: zero form");
  FormProfile prof = profile(m);

  ThreeFormType t;
  Discriminant d = hitchin_discriminant(m);
  if (prof.rank == 3) {
    t = ThreeFormType::Decomposable;
  } else if (prof.rank == 5) {
    t = ThreeFormType::OneDivisor;
  } else if (prof.rank == 6) {
    int sg = sgn(d.lambda);
    t = sg < 0 ? ThreeFormType::ComplexStable
               : (sg > 0 ? ThreeFormType::RealStable : ThreeFormType::Degenerate3);
  } else {
    throw std::logic_error("normal_form_basis: impossible rank");
  }

  if (m == canonical_3form(t)) {
    NormalFormBasis out;
    out.M = Mat::identity(6);
    return out;
  }
  NormalFormBasis out;
  switch (t) {
    case ThreeFormType::Decomposable:
      out = basis_type_e(m, prof);
      break;
    case ThreeFormType::OneDivisor:
      out = basis_type_d(m, prof);
      break;
    case ThreeFormType::Degenerate3:
      out = basis_type_b(m, type_b_invariants(m));
      break;
    case ThreeFormType::RealStable:
      out = exact_sqrt(d.lambda) ? basis_type_c_exact(type_c_invariants(m))
                                 : basis_type_c_float(m, d);
      break;
    case ThreeFormType::ComplexStable: {
      AlmostComplex ac = almost_complex(m);
      out = ac.J ? basis_type_a_exact(m, *ac.J) : basis_type_a_float(m, d);
      break;
    }
    default:
      throw std::logic_error("normal_form_basis: unreachable");
  }
  if (out.exact && !(pullback(m, out.M) == canonical_3form(t)))
    throw std::logic_error("normal_form_basis: exact roundtrip failed");
  return out;
}

ClassificationResult classify(const ExteriorForm& m) {
  require_3form6(m, "classify");
  ClassificationResult out;
  if (m.is_zero()) {
    out.type = ThreeFormType::Zero;
    out.discriminant.K = Mat(6, 6);
    out.discriminant.lambda = 0;
    out.discriminant.volume = standard_volume_form(6);
    out.basis.M = Mat::identity(6);
    return out;
  }
  FormProfile prof = profile(m);
  out.discriminant = hitchin_discriminant(m);
  const int r = prof.rank;
  if (r == 3) {
    out.type = ThreeFormType::Decomposable;
    out.e_factors = factor_decomposable(m, prof);
  } else if (r == 5) {
    out.type = ThreeFormType::OneDivisor;
    out.divisibility = prof.divisibility;
    out.d_factorization = indivisible_factorization(m, prof);
  } else if (r == 6) {
    const int sg = sgn(out.discriminant.lambda);
    if (sg < 0) {
      out.type = ThreeFormType::ComplexStable;
      out.almost_complex = almost_complex(m);
      if (out.almost_complex->J)
        out.m_J = first_slot_action(*out.almost_complex->J, m);
    } else if (sg > 0) {
      out.type = ThreeFormType::RealStable;
      if (exact_sqrt(out.discriminant.lambda))
        out.c_invariants = type_c_invariants(m);
    } else {
      out.type = ThreeFormType::Degenerate3;
      out.b_invariants = type_b_invariants(m);
    }
  } else {
    // Nonzero 3-forms cannot have rank 1, 2 or 4; reaching this means the
    // arithmetic itself is broken.
    throw std::logic_error("classify: impossible rank for a nonzero 3-form");
  }
  out.basis = normal_form_basis(m);
  return out;
}

}  // namespace extform
