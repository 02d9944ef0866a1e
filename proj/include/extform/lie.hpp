#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "extform/invariants.hpp"
#include "extform/subspace.hpp"

namespace extform {

// Lie algebra over Q given by antisymmetric structure constants C_ij^k,
// stored for i < j.
class LieAlgebra {
 public:
  explicit LieAlgebra(int n) : n_(n) {}

  int dim() const { return n_; }

  // [e_i, e_j] += coeff * e_k, 1-based, requires i < j.
  void set_structure(int i, int j, int k, const Rational& coeff);
  Rational c(int i, int j, int k) const;  // antisymmetric in i, j

  std::vector<Rational> bracket(const std::vector<Rational>& u,
                                const std::vector<Rational>& v) const;
  // ad(v) as a matrix, columns ad(v) e_j = [v, e_j].
  Mat ad(const std::vector<Rational>& v) const;

  const std::map<std::tuple<int, int, int>, Rational>& structure() const {
    return c_;
  }

 private:
  int n_;
  std::map<std::tuple<int, int, int>, Rational> c_;  // i < j only
};

struct ValidationReport {
  bool jacobi = false;
  bool semisimple = false;
};

ValidationReport validate(const LieAlgebra& L);

enum class TensorSymmetry { Symmetric, Skew, General };

struct InvariantTensor2 {
  Mat mat;
  TensorSymmetry tag = TensorSymmetry::General;
};

// Killing form g_ij = C_ir^s C_js^r.
InvariantTensor2 killing_form(const LieAlgebra& L);

// Cartan 3-form gamma_ijk = C_ij^r g_rk; throws if the result fails to be
// totally antisymmetric (invalid structure constants).
ExteriorForm cartan_3form(const LieAlgebra& L);

// Exterior derivative of an invariant form, as the degree-+1 derivation
// generated by d xi^k = -sum_{i<j} C_ij^k xi^i ^ xi^j. d o d = 0 is checked
// on every call.
ExteriorForm ce_differential(const LieAlgebra& L, const ExteriorForm& m);

// Curvature of the standard bi-invariant connection on a semisimple algebra:
// 4 R_ijk^q = C_ij^r C_rk^q, acting on (0,2)-tensors through g-index raising.
struct CurvatureOperator {
  int n = 0;
  std::vector<Rational> lowered;  // R_ijkq, index ((i n + j) n + k) n + q
  Mat op;                         // n^2 x n^2, row-major (0,2) coordinates
  Mat lambda2;                    // restriction to 2-forms, pairs i<j
  Mat sym2;                       // restriction to symmetric tensors, i<=j
  Rational lowered_at(int i, int j, int k, int q) const;
};

CurvatureOperator curvature_operator(const LieAlgebra& L);

// T = -8R on 2-forms is a projection whose fix-space is spanned by the
// contractions gamma(v, ., .).
struct Lambda2Report {
  bool idempotent = false;
  int fix_dim = 0;
  bool fix_space_matches = false;
  bool ok() const { return idempotent && fix_space_matches; }
};

Lambda2Report lambda2_spectrum_check(const LieAlgebra& L);

// ker(8R - Id) on symmetric 2-tensors is trivial for simple algebras of
// dimension >= 8; hypothesis_met records the dimension gate.
struct Sym2Report {
  bool trivial_kernel = false;
  bool hypothesis_met = false;
};

Sym2Report sym2_spectrum_check(const LieAlgebra& L);

// Isotropy algebra of the Cartan 3-form equals the span of the ad images.
bool isotropy_equals_ad(const LieAlgebra& L);

// The matrix gamma_ipq gamma^{pqj} (indices raised with the inverse Killing
// form); equals -Id for semisimple algebras.
Mat cartan_contraction_identity(const LieAlgebra& L);

// Nijenhuis tensor of a constant J on basis pairs:
// N(v,w) = J[Jv,w] + J[v,Jw] - [Jv,Jw] + [v,w].
class NijenhuisTensor {
 public:
  NijenhuisTensor(int n) : n_(n), t_(static_cast<std::size_t>(n) * n * n) {}
  Rational& at(int i, int j, int k) {
    return t_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
  }
  const Rational& at(int i, int j, int k) const {
    return t_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
  }
  std::vector<Rational> value(int i, int j) const;  // N(e_{i+1}, e_{j+1})
  bool is_zero() const;
  int dim() const { return n_; }

 private:
  int n_;
  std::vector<Rational> t_;
};

NijenhuisTensor nijenhuis(const LieAlgebra& L, const LinearMap& J);

// True iff [s, s'] lies in S for all basis pairs of S.
bool bracket_closed(const LieAlgebra& L, const Subspace& S);

// Built-in examples. Algebra names: sl2, su2, sl3, su3, sl3+sl3,
// example-15a, example-15b, example-15c. Form names: g2-form, spin7-form,
// example-15a-mu, example-15b-mu, example-15c-mu, canonical-3form-a .. -e.
LieAlgebra catalog_algebra(const std::string& name);
ExteriorForm catalog_form(const std::string& name);
std::vector<std::string> catalog_algebra_names();
std::vector<std::string> catalog_form_names();

}  // namespace extform
