#include "extform/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

#include "extform/batch.hpp"
#include "extform/io.hpp"
#include "extform/lie.hpp"
#include "extform/polyform.hpp"
#include "extform/rng.hpp"

namespace extform {

namespace {

struct Checker {
  bool ok = true;
  int failures = 0;
  std::ostringstream details;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (++failures <= 8) details << (failures > 1 ? "; " : "") << what;
  }
};

CheckResult finish(const char* id, const char* description, const Checker& ck,
                   const std::string& note = "") {
  CheckResult r;
  r.id = id;
  r.description = description;
  r.pass = ck.ok;
  r.details = ck.ok ? note : ck.details.str();
  return r;
}

const std::array<ThreeFormType, 5> kTypes = {
    ThreeFormType::ComplexStable, ThreeFormType::Degenerate3,
    ThreeFormType::RealStable, ThreeFormType::OneDivisor,
    ThreeFormType::Decomposable};

// A complex-stable form whose -lambda is not a perfect square, exercising
// the certified double-precision normal-form path.
ExteriorForm irrational_stable_fixture() {
  ExteriorForm m = canonical_3form(ThreeFormType::ComplexStable);
  m.add({1, 2, 3}, Rational(1));  // coefficient 2 on xi^123, lambda = -8
  return m;
}

bool nondegenerate2(const ExteriorForm& s) {
  const int n = s.dim();
  Mat g(n, n);
  for (const auto& [I, c] : s.terms()) {
    g.at(I[0] - 1, I[1] - 1) = c;
    g.at(I[1] - 1, I[0] - 1) = -c;
  }
  return !is_zero(g.det());
}

CheckResult check_classification_fixtures(std::uint64_t seed) {
  Checker ck;
  for (std::size_t t = 0; t < kTypes.size(); ++t) {
    const ExteriorForm canon = canonical_3form(kTypes[t]);
    ClassificationResult base = classify(canon);
    ck.expect(base.type == kTypes[t],
              std::string("canonical form misclassified: ") +
                  type_letter(kTypes[t]));
    ck.expect(base.basis.M == Mat::identity(6),
              std::string("canonical basis not identity: ") +
                  type_letter(kTypes[t]));
    Rng rng(seed + 101 * t);
    for (int rep = 0; rep < 100; ++rep) {
      Mat M = rng.invertible(6);
      ExteriorForm pulled = pullback(canon, M);
      ClassificationResult res = classify(pulled);
      ck.expect(res.type == kTypes[t],
                std::string("pullback changed the type of ") +
                    type_letter(kTypes[t]));
      ck.expect(res.basis.exact,
                std::string("pullback lost the exact basis path: ") +
                    type_letter(kTypes[t]));
      ck.expect(pullback(pulled, res.basis.M) == canon,
                std::string("normal-form roundtrip failed: ") +
                    type_letter(kTypes[t]));
      if (!ck.ok) return finish("c1-classification-fixtures", "", ck);
    }
  }
  // Certified float path on an irrational complex-stable instance.
  ExteriorForm hard = irrational_stable_fixture();
  ClassificationResult res = classify(hard);
  ck.expect(res.type == ThreeFormType::ComplexStable,
            "irrational fixture misclassified");
  ck.expect(!exact_sqrt(-res.discriminant.lambda).has_value(),
            "irrational fixture has a rational square root");
  ck.expect(!res.basis.exact && res.basis.residual < 1e-9,
            "float basis residual exceeds 1e-9");
  return finish("c1-classification-fixtures",
                "five canonical types, 100 seeded pullbacks each, exact "
                "normal-form roundtrips, certified float path",
                ck);
}

CheckResult check_stable_form_identities(std::uint64_t) {
  Checker ck;
  // Type a: the complex-structure tensor of the canonical form.
  ExteriorForm a = canonical_3form(ThreeFormType::ComplexStable);
  AlmostComplex ac = almost_complex(a);
  ck.expect(ac.J.has_value(), "canonical J not exact");
  if (ac.J) {
    const Mat& J = *ac.J;
    auto col = [&](int j) {
      std::vector<Rational> v(6);
      for (int i = 0; i < 6; ++i) v[i] = J.at(i, j - 1);
      return v;
    };
    auto unit = [](int i) {
      std::vector<Rational> v(6);
      v[i - 1] = 1;
      return v;
    };
    ck.expect(col(4) == unit(1), "J e4 != e1");
    ck.expect(col(6) == unit(3), "J e6 != e3");
    ck.expect(col(2) == unit(5), "J e2 != e5");
    ck.expect((J * J + Mat::identity(6)).is_zero(), "J^2 != -Id");
    // m(J., J., .) = -m, exactly, on every index triple.
    for (const auto& I : all_index_sets(6, 3)) {
      std::vector<Rational> e3v(6);
      e3v[I[2] - 1] = 1;
      Rational lhs = evaluate(a, {col(I[0]), col(I[1]), e3v});
      ck.expect(lhs == -a.coeff(I), "m(J.,J.,.) != -m");
    }
  }
  // Type b: Theta on the canonical form.
  ExteriorForm b = canonical_3form(ThreeFormType::Degenerate3);
  auto theta_of = [&](int k) {
    return contract(b, ExteriorForm::basis_vector(6, {k}));
  };
  ck.expect(theta_of(2) == wedge(ExteriorForm::basis_form(6, {3}),
                                 ExteriorForm::basis_form(6, {1})),
            "Theta e2 != xi^3 ^ xi^1");
  ck.expect(theta_of(4) == wedge(ExteriorForm::basis_form(6, {5}),
                                 ExteriorForm::basis_form(6, {3})),
            "Theta e4 != xi^5 ^ xi^3");
  ck.expect(theta_of(6) == wedge(ExteriorForm::basis_form(6, {1}),
                                 ExteriorForm::basis_form(6, {5})),
            "Theta e6 != xi^1 ^ xi^5");
  return finish("c2-stable-form-identities",
                "exact J identities on the canonical complex-stable form and "
                "Theta images on the canonical degenerate form",
                ck);
}

CheckResult check_hodge_duality(std::uint64_t seed) {
  Checker ck;
  Rng rng(seed + 7);
  // Double star sign over all degrees and dimensions up to 8.
  for (int n = 1; n <= 8; ++n)
    for (int p = 0; p <= n; ++p)
      for (int rep = 0; rep < 3; ++rep) {
        Rational c = rng.nonzero_rational();
        ExteriorForm omega = standard_volume_form(n) * c;
        int sign = ((n - p) * p) % 2 == 0 ? 1 : -1;
        ExteriorForm f = rng.form(n, p, 3, Variance::Form);
        ExteriorForm ff = hodge_star(hodge_star(f, omega), omega);
        ck.expect(ff == f * Rational(sign), "double star sign failed on forms");
        ExteriorForm v = rng.form(n, p, 3, Variance::Vector);
        ExteriorForm vv = hodge_star(hodge_star(v, omega), omega);
        ck.expect(vv == v * Rational(sign), "double star sign failed on vectors");
      }
  // Low-dimensional duals.
  for (int rep = 0; rep < 10; ++rep) {
    ExteriorForm s2(2, 2, Variance::Form);
    s2.add({1, 2}, rng.nonzero_rational());
    ck.expect(dual_of_2form(s2) ==
                  ExteriorForm::scalar(2, Rational(-1)),
              "dual != -1 at n=2");
    ExteriorForm s4 = rng.form(4, 2, 4);
    if (nondegenerate2(s4))
      ck.expect(dual_of_2form(s4) == -s4, "dual != -sigma at n=4");
  }
  // n = 6 roundtrip, projective form.
  for (int rep = 0; rep < 25; ++rep) {
    ExteriorForm s = rng.form(6, 2, 6);
    if (!nondegenerate2(s)) continue;
    ExteriorForm mu = dual_of_2form(s);
    DualityResult dr = two_form_from_indivisible(mu);
    Rational t;
    ck.expect(dr.sigma0.proportional(s, &t), "recovered sigma not proportional");
    ck.expect(dual_of_2form(dr.sigma0) == mu * dr.t, "roundtrip scale failed");
  }
  // Forced + sign at n = 4 (even half-dimension).
  for (int rep = 0; rep < 10; ++rep) {
    ExteriorForm s = rng.form(4, 2, 3);
    if (!nondegenerate2(s)) continue;
    ExteriorForm mu = dual_of_2form(s);
    DualityResult dr = two_form_from_indivisible(mu);
    ck.expect(dr.sign_unique, "n=4 sign not resolved");
    ck.expect(dr.exact_scale.has_value(), "n=4 scale not rational");
    if (dr.exact_scale)
      ck.expect(dual_of_2form(dr.sigma0 * *dr.exact_scale) == mu,
                "n=4 normalized dual has the wrong sign");
  }
  return finish("c3-hodge-duality",
                "double-star sign for all n <= 8, low-dimension dual values, "
                "exact projective roundtrips, forced sign at n=4",
                ck);
}

CheckResult check_profile_laws(std::uint64_t seed) {
  Checker ck;
  Rng rng(seed + 13);
  std::vector<ExteriorForm> forms;
  forms.reserve(10000);
  for (int i = 0; i < 10000; ++i) {
    int n = static_cast<int>(rng.uniform(1, 6));
    int p = static_cast<int>(rng.uniform(1, n));
    long max_terms = 1;
    for (int k = 0; k < p; ++k) max_terms = max_terms * (n - k) / (k + 1);
    int terms = static_cast<int>(rng.uniform(0, std::min<long>(4, max_terms)));
    forms.push_back(rng.form(n, p, terms));
  }
  std::vector<FormProfile> profs = profile_many(forms);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const ExteriorForm& m = forms[i];
    const FormProfile& pr = profs[i];
    const int n = m.dim(), p = m.degree();
    ck.expect(pr.rank == n - pr.kernel.dim(), "rank != n - dim kernel");
    ck.expect(pr.rank != p + 1, "rank p+1 occurred");
    if (m.is_zero()) {
      ck.expect(pr.kernel.dim() == n && pr.divisibility.dim() == 0,
                "zero-form conventions violated");
      continue;
    }
    ck.expect(pr.image == pr.kernel.polar(), "image not polar to kernel");
    ck.expect(pr.divisibility.contains(pr.kernel), "Z not inside D");
    ck.expect(pr.decomposable == (pr.rank == p), "decomposability flag wrong");
    ck.expect(image_bruteforce(m) == pr.image,
              "brute-force image disagrees with production image");
    if (pr.decomposable) {
      auto factors = factor_decomposable(m, pr);
      ExteriorForm w = ExteriorForm::scalar(n, Rational(1), Variance::Form);
      for (const auto& f : factors) w = wedge(w, f);
      ck.expect(w == m, "decomposable factors do not wedge back");
    }
    if (!ck.ok) break;
  }
  return finish("c4-profile-laws",
                "rank/kernel/image/divisibility laws and the brute-force "
                "image oracle on 10000 seeded forms, n <= 6",
                ck);
}

CheckResult check_cartan_suite(std::uint64_t) {
  Checker ck;
  for (const char* name : {"sl3", "su3"}) {
    LieAlgebra L = catalog_algebra(name);
    const int n = L.dim();
    ValidationReport vr = validate(L);
    ck.expect(vr.jacobi, std::string(name) + ": Jacobi failed");
    ck.expect(vr.semisimple, std::string(name) + ": Killing degenerate");
    ExteriorForm gamma = cartan_3form(L);  // throws unless totally skew
    Mat norm = cartan_contraction_identity(L);
    ck.expect(norm == Mat::identity(n) * Rational(-1),
              std::string(name) + ": gamma_ipq gamma^{pqj} != -delta");
    ck.expect(ce_differential(L, gamma).is_zero(),
              std::string(name) + ": d gamma != 0");
    Lambda2Report l2 = lambda2_spectrum_check(L);
    ck.expect(l2.idempotent, std::string(name) + ": T = -8R not idempotent");
    ck.expect(l2.fix_dim == n, std::string(name) + ": fix-space dim != dim g");
    ck.expect(l2.fix_space_matches,
              std::string(name) + ": fix-space is not the contraction span");
    Sym2Report s2 = sym2_spectrum_check(L);
    ck.expect(s2.hypothesis_met && s2.trivial_kernel,
              std::string(name) + ": ker(8R - Id) on Sym^2 not trivial");
    ck.expect(isotropy_equals_ad(L),
              std::string(name) + ": isotropy of gamma != ad image");
    ck.expect(isotropy_algebra(gamma).size() == static_cast<std::size_t>(n),
              std::string(name) + ": isotropy dimension wrong");
  }
  return finish("c5-cartan-suite",
                "Jacobi, Killing, Cartan-form identities, curvature spectra "
                "and isotropy comparison on sl3 and su3",
                ck);
}

CheckResult check_exceptional_isotropy(std::uint64_t) {
  Checker ck;
  struct Case {
    const char* name;
    std::size_t nullity;
  } cases[] = {{"g2-form", 14}, {"spin7-form", 21}};
  for (const auto& c : cases) {
    ExteriorForm f = catalog_form(c.name);
    auto h = isotropy_algebra(f);
    ck.expect(h.size() == c.nullity,
              std::string(c.name) + ": isotropy dimension wrong");
    for (const auto& A : h)
      ck.expect((A.transpose() + A).is_zero(),
                std::string(c.name) + ": element not skew for the identity");
    auto g = skew_metric_certificate(h);
    ck.expect(g.has_value() && *g == Mat::identity(f.dim()),
              std::string(c.name) + ": identity certificate not found");
  }
  return finish("c6-exceptional-isotropy",
                "isotropy nullities 14 and 21 with the identity metric "
                "certifying skew-adjointness",
                ck);
}

CheckResult check_counterexamples(std::uint64_t) {
  Checker ck;
  const std::array<std::pair<const char*, ThreeFormType>, 3> cases = {
      std::make_pair("example-15a", ThreeFormType::ComplexStable),
      std::make_pair("example-15b", ThreeFormType::Degenerate3),
      std::make_pair("example-15c", ThreeFormType::RealStable)};
  for (const auto& [name, want] : cases) {
    LieAlgebra L = catalog_algebra(name);
    ExteriorForm mu = catalog_form(std::string(name) + "-mu");
    ck.expect(validate(L).jacobi, std::string(name) + ": Jacobi failed");
    ck.expect(ce_differential(L, mu).is_zero(),
              std::string(name) + ": d mu != 0");
    ck.expect(classify(mu).type == want,
              std::string(name) + ": mu has the wrong type");
  }
  // Non-integrability witnesses.
  {
    LieAlgebra L = catalog_algebra("example-15a");
    AlmostComplex ac = almost_complex(catalog_form("example-15a-mu"));
    NijenhuisTensor N = nijenhuis(L, *ac.J);
    std::vector<Rational> e5(6);
    e5[4] = 1;
    ck.expect(N.value(0, 1) == e5, "15a: N(e1, e2) != e5");
  }
  {
    LieAlgebra L = catalog_algebra("example-15b");
    Mat rows(3, 6);
    rows.at(0, 1) = 1;
    rows.at(1, 3) = 1;
    rows.at(2, 5) = 1;
    Subspace H = Subspace::from_rows(rows, 6, Variance::Vector);
    ck.expect(!bracket_closed(L, H), "15b: H unexpectedly bracket-closed");
  }
  {
    LieAlgebra L = catalog_algebra("example-15c");
    Mat plus(3, 6), minus(3, 6);
    plus.at(0, 3) = 1;
    plus.at(1, 4) = 1;
    plus.at(2, 5) = 1;
    minus.at(0, 0) = 1;
    minus.at(1, 1) = 1;
    minus.at(2, 2) = 1;
    ck.expect(!bracket_closed(L, Subspace::from_rows(plus, 6, Variance::Vector)),
              "15c: H+ unexpectedly bracket-closed");
    ck.expect(!bracket_closed(L, Subspace::from_rows(minus, 6, Variance::Vector)),
              "15c: H- unexpectedly bracket-closed");
  }
  return finish("c7-left-invariant-counterexamples",
                "closed invariant 3-forms of types a, b, c with the expected "
                "non-integrable structures",
                ck);
}

CheckResult check_duality_closedness_family(std::uint64_t seed) {
  Checker ck;
  const int m = 3, nv = 6;
  auto constants = [&](long v) {
    return std::vector<Polynomial>(m, Polynomial::constant(nv, Rational(v)));
  };
  // Unit functions: both closed.
  ck.expect(duncl_zeta_closed(m, constants(1)), "unit phi: zeta not closed");
  ck.expect(duncl_sigma_closed(m, constants(1)), "unit phi: sigma not closed");

  // phi_1 = 1 + (x3)^2 + (x5)^2: zeta closed, sigma not.
  std::vector<Polynomial> mixed = constants(1);
  {
    Polynomial x3 = Polynomial::variable(nv, 3), x5 = Polynomial::variable(nv, 5);
    mixed[0] = Polynomial::constant(nv, Rational(1)) + x3 * x3 + x5 * x5;
  }
  ck.expect(duncl_zeta_closed(m, mixed), "mixed phi: zeta not closed");
  ck.expect(poly_d(duncl_zeta(m, mixed)).is_zero(), "mixed phi: d zeta != 0");
  ck.expect(!duncl_sigma_closed(m, mixed), "mixed phi: sigma closed");

  // Separated construction passes the sigma criterion.
  std::vector<Polynomial> rhos;
  for (int j = 1; j <= m; ++j) {
    Polynomial x = Polynomial::variable(nv, 2 * j - 1);
    rhos.push_back(Polynomial::constant(nv, Rational(1)) + x * x);
  }
  auto sep = separated_phis(rhos);
  ck.expect(duncl_sigma_closed(m, sep), "separated phi: sigma not closed");
  ck.expect(duncl_zeta_closed(m, sep), "separated phi: zeta not closed");

  // Criterion-vs-direct agreement on seeded monomial families; the closed-
  // sigma => closed-zeta direction comes along for free.
  Rng rng(seed + 29);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<Polynomial> phis;
    for (int i = 0; i < m; ++i) {
      std::vector<int> exps(nv, 0);
      int nfac = static_cast<int>(rng.uniform(0, 2));
      for (int f = 0; f < nfac; ++f)
        exps[rng.uniform(0, nv - 1)] += static_cast<int>(rng.uniform(1, 2));
      Polynomial p(nv);
      p.add_monomial(exps, rng.nonzero_rational(5, 2));
      if (rng.uniform(0, 1))
        p = p + Polynomial::constant(nv, Rational(rng.uniform(1, 3)));
      if (p.is_zero()) p = Polynomial::constant(nv, Rational(1));
      phis.push_back(p);
    }
    bool zc = false;
    try {
      zc = duncl_zeta_closed(m, phis);  // throws if criterion != d(zeta)
    } catch (const std::logic_error&) {
      ck.expect(false, "criterion and direct d(zeta) disagree");
      break;
    }
    if (duncl_sigma_closed(m, phis))
      ck.expect(zc, "sigma closed but zeta not closed");
  }

  // Pointwise checks: zeta is indivisible with a nondegenerate dual.
  PolyForm zeta = duncl_zeta(m, mixed);
  for (const auto& pt :
       {std::vector<Rational>(nv, Rational(0)),
        std::vector<Rational>{rat(1), rat(1, 2), rat(-1), rat(2), rat(0), rat(3)}}) {
    ExteriorForm z = zeta.eval(pt);
    FormProfile pr = profile(z);
    ck.expect(pr.indivisible, "zeta not indivisible at a sample point");
    DualityResult dr = two_form_from_indivisible(z);
    ck.expect(dual_of_2form(dr.sigma0) == z * dr.t,
              "pointwise dual roundtrip failed");
  }
  return finish("c8-duality-closedness-family",
                "codegree-two family: closedness criteria, the one-sided "
                "implication, and pointwise duality",
                ck);
}

}  // namespace

VerificationReport run_verification(std::uint64_t seed, bool parallel) {
  using CheckFn = std::function<CheckResult(std::uint64_t)>;
  const std::vector<CheckFn> checks = {
      check_classification_fixtures, check_stable_form_identities,
      check_hodge_duality,           check_profile_laws,
      check_cartan_suite,            check_exceptional_isotropy,
      check_counterexamples,         check_duality_closedness_family};

  VerificationReport rep;
  rep.seed = seed;
  rep.checks.resize(checks.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (long i = 0; i < static_cast<long>(checks.size()); ++i) {
    try {
      rep.checks[i] = checks[i](seed);
    } catch (const std::exception& e) {
      rep.checks[i].id = "check-" + std::to_string(i);
      rep.checks[i].pass = false;
      rep.checks[i].details = std::string("exception: ") + e.what();
    }
  }
  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return rep;
}

std::string report_to_json(const VerificationReport& rep) {
  std::ostringstream os;
  os << "{\n  \"seed\": " << rep.seed << ",\n  \"checks\": [";
  bool first = true;
  for (const auto& c : rep.checks) {
    os << (first ? "\n" : ",\n");
    os << "    {\"id\": \"" << c.id << "\", \"pass\": "
       << (c.pass ? "true" : "false") << ", \"description\": \"" << c.description
       << "\", \"details\": \"" << c.details << "\"}";
    first = false;
  }
  os << "\n  ],\n  \"all_pass\": " << (rep.all_pass() ? "true" : "false")
     << "\n}\n";
  return os.str();
}

std::string report_summary(const VerificationReport& rep) {
  std::ostringstream os;
  for (const auto& c : rep.checks)
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.id
       << (c.details.empty() ? "" : "  -- " + c.details) << "\n";
  os << (rep.all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  return os.str();
}

}  // namespace extform
