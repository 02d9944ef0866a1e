#include "doctest.h"
#include "extform/form.hpp"
#include "extform/rng.hpp"
#include "extform/threeform6.hpp"

using namespace extform;

namespace {

ExteriorForm xi(int dim, const IndexSet& I) {
  return ExteriorForm::basis_form(dim, I);
}
ExteriorForm ee(int dim, const IndexSet& I) {
  return ExteriorForm::basis_vector(dim, I);
}

std::vector<Rational> unit(int n, int i) {
  std::vector<Rational> v(n);
  v[i - 1] = 1;
  return v;
}

}  // namespace

TEST_CASE("wedge basis cases") {
  CHECK(wedge(xi(2, {1}), xi(2, {2})) == xi(2, {1, 2}));
  CHECK(wedge(xi(2, {1}), xi(2, {1})).is_zero());
  // (xi^12 + xi^34) ^ xi^5...^{p+2} is nonzero for p = 3
  ExteriorForm s = xi(5, {1, 2}) + xi(5, {3, 4});
  ExteriorForm w = wedge(s, xi(5, {5}));
  CHECK(!w.is_zero());
  CHECK(w == xi(5, {1, 2, 5}) + xi(5, {3, 4, 5}));
}

TEST_CASE("wedge rejects mismatches, degree-0 multiplies") {
  CHECK_THROWS_AS(wedge(xi(2, {1}), xi(3, {1})), std::invalid_argument);
  CHECK_THROWS_AS(wedge(xi(2, {1}), ee(2, {1})), std::invalid_argument);
  ExteriorForm half = ExteriorForm::scalar(3, rat(1, 2));
  CHECK(wedge(half, xi(3, {1, 2})) == xi(3, {1, 2}) * rat(1, 2));
  // degrees beyond n give the empty zero form
  CHECK(wedge(xi(2, {1, 2}), xi(2, {1, 2})).is_zero());
}

TEST_CASE("wedge anticommutativity a^b = (-1)^{pq} b^a") {
  Rng rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    int n = static_cast<int>(rng.uniform(1, 7));
    int p = static_cast<int>(rng.uniform(0, n));
    int q = static_cast<int>(rng.uniform(0, n));
    ExteriorForm a = rng.form(n, p, 3), b = rng.form(n, q, 3);
    int sign = (p * q) % 2 == 0 ? 1 : -1;
    CHECK(wedge(a, b) == wedge(b, a) * Rational(sign));
  }
}

TEST_CASE("wedge associativity") {
  Rng rng(6);
  for (int rep = 0; rep < 60; ++rep) {
    int n = static_cast<int>(rng.uniform(2, 7));
    ExteriorForm a = rng.form(n, static_cast<int>(rng.uniform(0, 2)), 2);
    ExteriorForm b = rng.form(n, static_cast<int>(rng.uniform(0, 2)), 2);
    ExteriorForm c = rng.form(n, static_cast<int>(rng.uniform(0, 2)), 2);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("determinant convention on decomposables") {
  // [xi^1 ^ ... ^ xi^p](v_1,...,v_p) = det[xi^i(v_j)], det oracle vs the
  // iterated-contraction evaluator.
  Rng rng(8);
  for (int rep = 0; rep < 100; ++rep) {
    int n = static_cast<int>(rng.uniform(1, 6));
    int p = static_cast<int>(rng.uniform(1, n));
    std::vector<std::vector<Rational>> covs, vecs;
    for (int k = 0; k < p; ++k) {
      covs.push_back({});
      vecs.push_back({});
      for (int j = 0; j < n; ++j) {
        covs[k].push_back(rng.rational());
        vecs[k].push_back(rng.rational());
      }
    }
    ExteriorForm w = ExteriorForm::scalar(n, Rational(1));
    for (const auto& c : covs) w = wedge(w, ExteriorForm::covector(c));
    Mat gram(p, p);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) {
        Rational acc(0);
        for (int k = 0; k < n; ++k) acc += covs[i][k] * vecs[j][k];
        gram.at(i, j) = acc;
      }
    CHECK(evaluate(w, vecs) == gram.det());
  }
}

TEST_CASE("contraction: dual bases, canonical type-a slices, single slots") {
  // contract(xi^1...n, e_1...n) = 1
  for (int n = 1; n <= 6; ++n)
    CHECK(contract(xi(n, full_set(n)), ee(n, full_set(n))) ==
          ExteriorForm::scalar(n, Rational(1)));
  // contract of the canonical complex-stable form with e_1
  ExteriorForm a = canonical_3form(ThreeFormType::ComplexStable);
  CHECK(contract(a, ee(6, {1})) == xi(6, {2, 3}) + xi(6, {5, 6}));
  // contract(xi^1 ^ xi^2, e_2) = -xi^1
  CHECK(contract(xi(2, {1, 2}), ee(2, {2})) == -xi(2, {1}));
  CHECK_THROWS_AS(contract(xi(2, {1}), ee(3, {1})), std::invalid_argument);
}

TEST_CASE("associative law [beta mu] mu' = beta [mu ^ mu']") {
  Rng rng(9);
  for (int rep = 0; rep < 150; ++rep) {
    int n = static_cast<int>(rng.uniform(2, 7));
    int l = static_cast<int>(rng.uniform(1, n));
    int p = static_cast<int>(rng.uniform(0, l));
    int pp = static_cast<int>(rng.uniform(0, l - p));
    ExteriorForm beta = rng.form(n, l, 3, Variance::Vector);
    ExteriorForm mu = rng.form(n, p, 3);
    ExteriorForm mup = rng.form(n, pp, 3);
    ExteriorForm lhs = contract(mup, contract(mu, beta));
    ExteriorForm rhs = contract(wedge(mu, mup), beta);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("hodge star: basis images and known values") {
  // star(xi^{i1..ip}) = e_{complement} up to the permutation parity
  CHECK(hodge_star(xi(4, {1, 3})) == -ee(4, {2, 4}));
  CHECK(hodge_star(ExteriorForm::scalar(6, Rational(1))) == ee(6, full_set(6)));
  CHECK(hodge_star(xi(3, {1, 2, 3})) ==
        ExteriorForm::scalar(3, Rational(1), Variance::Vector));
  // errors
  CHECK_THROWS_AS(hodge_star(xi(3, {1}), xi(3, {1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(hodge_star(xi(3, {1}), ExteriorForm(3, 3, Variance::Form)),
                  std::invalid_argument);
}

TEST_CASE("double star sign over all n <= 8") {
  Rng rng(10);
  for (int n = 1; n <= 8; ++n)
    for (int p = 0; p <= n; ++p) {
      Rational c = rng.nonzero_rational();
      ExteriorForm omega = standard_volume_form(n) * c;
      int sign = ((n - p) * p) % 2 == 0 ? 1 : -1;
      ExteriorForm f = rng.form(n, p, 3, Variance::Form);
      CHECK(hodge_star(hodge_star(f, omega), omega) == f * Rational(sign));
      ExteriorForm v = rng.form(n, p, 3, Variance::Vector);
      CHECK(hodge_star(hodge_star(v, omega), omega) == v * Rational(sign));
    }
}

TEST_CASE("pullback: identity, projections, functoriality") {
  ExteriorForm a = canonical_3form(ThreeFormType::ComplexStable);
  CHECK(pullback(a, Mat::identity(6)) == a);
  // projection Q^3 -> Q^2 killing the last coordinate pulls xi^12 back
  Mat proj(2, 3);
  proj.at(0, 0) = 1;
  proj.at(1, 1) = 1;
  ExteriorForm s = pullback(xi(2, {1, 2}), proj);
  CHECK(s == xi(3, {1, 2}));
  // pullback commutes with wedge
  Rng rng(12);
  for (int rep = 0; rep < 60; ++rep) {
    int n = static_cast<int>(rng.uniform(2, 6));
    Mat M = rng.invertible(n);
    ExteriorForm f = rng.form(n, static_cast<int>(rng.uniform(0, 2)), 2);
    ExteriorForm g = rng.form(n, static_cast<int>(rng.uniform(0, 2)), 2);
    CHECK(pullback(wedge(f, g), M) == wedge(pullback(f, M), pullback(g, M)));
  }
  // contravariant functoriality
  for (int rep = 0; rep < 40; ++rep) {
    Mat M = rng.invertible(4), N = rng.invertible(4);
    ExteriorForm f = rng.form(4, 2, 3);
    CHECK(pullback(pullback(f, M), N) == pullback(f, M * N));
  }
}

TEST_CASE("derivation action: Euler grading, elementary matrices, Leibniz") {
  ExteriorForm a = canonical_3form(ThreeFormType::ComplexStable);
  CHECK(derivation_action(Mat::identity(6), a) == a * Rational(3));

  // E_12 acting on xi^1 ^ xi^2: the only surviving replacement turns the
  // slot-1 covector into xi^2... computed by the multilinear oracle below.
  Mat e12(2, 2);
  e12.at(0, 1) = 1;
  ExteriorForm w = xi(2, {1, 2});
  ExteriorForm aw = derivation_action(e12, w);
  // oracle: (A mu)(v1, v2) = mu(Av1, v2) + mu(v1, Av2) on the basis
  Rational v = evaluate(w, {e12.apply(unit(2, 1)), unit(2, 2)}) +
               evaluate(w, {unit(2, 1), e12.apply(unit(2, 2))});
  CHECK(aw.coeff({1, 2}) == v);

  Rng rng(13);
  for (int rep = 0; rep < 60; ++rep) {
    int n = static_cast<int>(rng.uniform(2, 6));
    Mat A(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A.at(i, j) = rng.rational(2, 1);
    ExteriorForm f = rng.form(n, static_cast<int>(rng.uniform(1, 2)), 2);
    ExteriorForm g = rng.form(n, static_cast<int>(rng.uniform(1, n - 1)), 2);
    // Leibniz over wedge
    CHECK(derivation_action(A, wedge(f, g)) ==
          wedge(derivation_action(A, f), g) + wedge(f, derivation_action(A, g)));
    // multilinear-expansion oracle on random triples of basis slots
    ExteriorForm af = derivation_action(A, f);
    for (const auto& I : all_index_sets(n, f.degree())) {
      std::vector<std::vector<Rational>> args;
      for (int idx : I) args.push_back(unit(n, idx));
      Rational want(0);
      for (std::size_t s = 0; s < args.size(); ++s) {
        auto mod = args;
        mod[s] = A.apply(args[s]);
        want += evaluate(f, mod);
      }
      CHECK(af.coeff(I) == want);
    }
  }
}

TEST_CASE("sparse storage drops zeros and rejects bad keys") {
  ExteriorForm f(3, 2, Variance::Form);
  f.add({1, 2}, rat(1, 2));
  f.add({2, 1}, rat(1, 2));  // cancels via the sorting sign
  CHECK(f.is_zero());
  CHECK_THROWS_AS(f.add({1, 4}, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(f.add({1}, Rational(1)), std::invalid_argument);
  f.add({1, 1}, Rational(5));  // repeated index: alternation, no-op
  CHECK(f.is_zero());
}
