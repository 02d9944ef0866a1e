#pragma once

#include <optional>
#include <vector>

#include "extform/form.hpp"
#include "extform/subspace.hpp"

namespace extform {

// The linear invariants of a single exterior form: kernel Z, image, rank,
// divisor space D' = {xi : xi ^ m = 0}, divisibility space D = polar of D'.
struct FormProfile {
  int rank = 0;
  Subspace kernel;          // Z, subspace of V
  Subspace image;           // subspace of V*
  Subspace divisibility;    // D, subspace of V
  Subspace divisor_space;   // D', subspace of V*
  bool decomposable = false;
  bool indivisible = false;
};

FormProfile profile(const ExteriorForm& m);

// Brute-force image: the span of all contractions against (p-1)-tuples of
// basis vectors, enumerated over the whole index range. Test oracle for the
// production path.
Subspace image_bruteforce(const ExteriorForm& m);

// m = theta_1 ^ ... ^ theta_p for a decomposable form; the factors span the
// image and wedge back to m exactly.
std::vector<ExteriorForm> factor_decomposable(const ExteriorForm& m,
                                              const FormProfile& prof);

// m = theta_1 ^ ... ^ theta_s ^ zeta with the theta_i spanning D' and zeta
// built from a fixed complement of D'; the restriction of zeta to D is
// indivisible and unique up to scale.
struct Factorization {
  std::vector<ExteriorForm> theta;  // s independent 1-forms spanning D'
  ExteriorForm zeta;                // (p-s)-form, built from the complement
  Mat complement;                   // the complement covectors used, as rows
  Mat dual_basis;                   // full covector basis: theta rows then complement
};

Factorization indivisible_factorization(const ExteriorForm& m,
                                        const FormProfile& prof);

// Dual (n-2)-form of a nondegenerate 2-form: omega beta for
// omega = (m!)^{-1} s^m and beta the reciprocal bivector of s.
ExteriorForm dual_of_2form(const ExteriorForm& s);

// Inverse direction, for an indivisible (n-2)-form. sigma0 is the exact
// projective representative; kappa the scale datum with
// (m!)^{-1} sigma0^m = kappa * omega0; the roundtrip dual_of_2form(sigma0)
// equals t * m exactly. When m_half is even the normalized sign is forced.
struct DualityResult {
  ExteriorForm sigma0;
  Rational kappa;
  Rational t;
  bool sign_unique = false;               // m_half even
  std::optional<Rational> exact_scale;    // c with dual(c*sigma0) = m, if rational
  double float_scale = 0.0;               // |c| in double precision
};

DualityResult two_form_from_indivisible(const ExteriorForm& m);

// Invertible M with pullback(s, M) = xi^1^xi^2 + ... + xi^{2r-1}^xi^{2r},
// by skew Gram-Schmidt. Works for any 2-form.
LinearMap linear_darboux(const ExteriorForm& s);

// Basis of the isotropy algebra h = {A : derivation_action(A, m) = 0},
// echelon-canonical in the row-major n^2 coordinates. Commutator closure is
// verified.
std::vector<LinearMap> isotropy_algebra(const ExteriorForm& m);

// Coordinatization of h as a subspace of the n^2-space.
Subspace isotropy_subspace(const ExteriorForm& m);

// Symmetric nondegenerate g with A^T g + g A = 0 for all A in h, or nullopt
// when the solution space contains no nondegenerate element (certified by
// grid evaluation of the determinant polynomial).
std::optional<Mat> skew_metric_certificate(const std::vector<LinearMap>& h);

}  // namespace extform
