#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "extform/invariants.hpp"

namespace extform {

// The five orbit types of nonzero 3-forms on Q^6, plus the zero form.
enum class ThreeFormType {
  Zero,
  ComplexStable,   // a
  Degenerate3,     // b
  RealStable,      // c
  OneDivisor,      // d
  Decomposable,    // e
};

std::string type_name(ThreeFormType t);
char type_letter(ThreeFormType t);  // 'a'..'e', '0' for Zero

// The canonical representative of each nonzero type.
ExteriorForm canonical_3form(ThreeFormType t);

// Quadratic-invariant operator K(v) = star((i_v m) ^ m) w.r.t. the standard
// volume form, and lambda = tr(K^2)/6. K is trace-free; the sign of lambda
// does not change under invertible pullbacks.
struct Discriminant {
  LinearMap K;
  Rational lambda;
  ExteriorForm volume;  // the volume form the star used
};

Discriminant hitchin_discriminant(const ExteriorForm& m);

// Type-a invariant: J with J^2 = -Id, m(J.,J.,.) = -m, normalized so the
// canonical form receives J e4 = e1, J e6 = e3, J e2 = e5. Exact when
// -lambda is a perfect rational square, otherwise (K, lambda) carry the
// scaled data and J_float the double-precision view.
struct AlmostComplex {
  std::optional<LinearMap> J;
  LinearMap K;
  Rational lambda;
  std::vector<double> J_float;  // row-major 6x6
};

AlmostComplex almost_complex(const ExteriorForm& m);

// Type-b invariants: H' = {xi : xi ^ m decomposable} (a 3-plane), H its
// polar, and the isomorphism Theta: H -> Lambda^2 H', v -> contract(m, v),
// as a 3x3 matrix over the echelon bases of H and H' (wedge pairs ordered
// (1,2), (1,3), (2,3)).
struct TypeBInvariants {
  Subspace H;
  Subspace Hprime;
  Mat theta;
};

TypeBInvariants type_b_invariants(const ExteriorForm& m);

// Type-c invariants: the unordered pair of 3-planes H+- (eigenspaces of K
// for +-sqrt(lambda)) with the decomposable halves eta+- of m = eta+ + eta-;
// each eta annihilates its own H. Exact only when lambda is a perfect
// square; otherwise a domain_error asks for the float path.
struct HalfPair {
  Subspace H;
  ExteriorForm eta;
};

std::array<HalfPair, 2> type_c_invariants(const ExteriorForm& m);

// Invertible M with pullback(m, M) equal to the canonical form of m's type.
// Exact for types b, d, e always, for a and c when the relevant square root
// is rational; otherwise M is a certified double-precision basis and
// residual bounds max |pullback(m, M) - canonical| (exactly evaluated).
struct NormalFormBasis {
  LinearMap M;
  bool exact = true;
  double residual = 0.0;
};

NormalFormBasis normal_form_basis(const ExteriorForm& m);

struct ClassificationResult {
  ThreeFormType type = ThreeFormType::Zero;
  Discriminant discriminant;
  NormalFormBasis basis;
  std::optional<AlmostComplex> almost_complex;        // type a
  std::optional<ExteriorForm> m_J;                    // m(J.,.,.), exact mode
  std::optional<TypeBInvariants> b_invariants;        // type b
  std::optional<std::array<HalfPair, 2>> c_invariants;  // type c, exact mode
  std::optional<Factorization> d_factorization;       // type d
  std::optional<Subspace> divisibility;               // type d
  std::optional<std::vector<ExteriorForm>> e_factors; // type e
};

ClassificationResult classify(const ExteriorForm& m);

}  // namespace extform
