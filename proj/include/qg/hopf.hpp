#pragma once

#include <filesystem>
#include <utility>
#include <vector>

#include "qg/algebra.hpp"
#include "qg/maps.hpp"
#include "qg/report.hpp"

namespace qg {

struct HopfStructure {
  AlgebraPtr alg;
  TensorMap delta;
  Character counit;
  AlgebraMap antipode;  // antihomomorphism
};

// Coproduct u -> sum u_ik (x) u_kj, counit u -> delta_ij, antipode
// u -> L^-1 A^-1 u^t A (L = 1 for SL_q). Requires a square kind (GAB, GLq, SLq).
HopfStructure build_hopf(AlgebraPtr alg);

Tensor apply_delta(const HopfStructure& h, const LocalizedElement& x);

// Relations for all structure maps, coassociativity, counit and antipode axioms on generators.
CheckReport verify_hopf_axioms(const HopfStructure& h);

// B A L u = u L D C in the ideal of the defining relations alone (no normality
// rule), i.e. L^-1 u L = B A u C^-1 D^-1 holds in the algebra.
CheckReport commutation_check(const PresentedAlgebra& alg);

// S^2 against both closed forms and against Phi * id * Phi^-1, where
// Phi(u) = B A^t, Phi(L) = lambda and Phi^-1 = Phi o S is its convolution inverse.
CheckReport antipode_squared_sovereign(const HopfStructure& h);

enum class Side { Left, Right };
// [xi]^l(x) = xi(x1) x2, [xi]^r(x) = xi(x2) x1.
AlgebraMap winding(const HopfStructure& h, const Character& xi, Side side);
// (f * g)(x) = f(x1) g(x2), evaluated on generators.
Character convolve(const HopfStructure& h, const Character& f, const Character& g);
AlgebraMap convolve(const HopfStructure& h, const AlgebraMap& f, const AlgebraMap& g);
AlgebraMap character_as_map(const Character& chi, const PresentedAlgebra& alg);
Character compose_character(const Character& chi, const AlgebraMap& f, const std::string& name = "");
// x -> L x L^-1
AlgebraMap conjugation_by_localizer(const PresentedAlgebra& alg);

struct NakayamaResult {
  AlgebraMap mu, mu_inv;
  Character xi, eta;
  CheckReport report;
};

// mu(u) = (A^t)^-1 A u B^t B^-1 with its inverse, xi = eps o mu, eta = eps o mu^-1,
// and S^-2 [eta S]^r = conj_L o mu.
NakayamaResult nakayama_G(const HopfStructure& h);

// S_{X,Y}: G(X|Y) -> G(Y|X), u -> L^-1 A_X^-1 u'^t A_Y, antihomomorphism.
AlgebraMap cogroupoid_antipode(const PresentedAlgebra& src, const PresentedAlgebra& dst);

struct GaloisResult {
  AlgebraPtr alg;       // G(A,B|C,D)
  AlgebraPtr opposite;  // G(C,D|A,B)
  AlgebraMap mu, mu_prime;
  CheckReport report;
};

GaloisResult nakayama_galois(const ScalarMatrix& a, const ScalarMatrix& b, const ScalarMatrix& c,
                             const ScalarMatrix& d, int degree_bound, const std::filesystem::path& cache_dir = {});

using MatrixPair = std::pair<ScalarMatrix, ScalarMatrix>;

// All cogroupoid diagrams on generators for every object tuple.
CheckReport cogroupoid_suite(const std::vector<MatrixPair>& objects, int degree_bound,
                             const std::filesystem::path& cache_dir = {});

struct LaurentIso {
  AlgebraPtr glq, slqz;
  AlgebraMap fwd, bwd;
  CheckReport report;
};

// O(GL_q(2)) -> O(SL_q(2))[z^{+-1}]: a, b, c, d, D -> a z, b z, c, d, z.
LaurentIso glq_slq_laurent_iso(const Scalar& q, int degree_bound, const std::filesystem::path& cache_dir = {});

}  // namespace qg
