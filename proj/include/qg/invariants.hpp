#pragma once

#include <string>
#include <vector>

#include "qg/matrix.hpp"

namespace qg {

struct MatrixInvariants {
  Scalar lambda;
  Scalar trace;  // tr(A B^t)
};

// Requires square invertible A, B of equal size n >= 2 with B^t A^t B A = lambda I.
// Also asserts A^t B^t A B = lambda I.
MatrixInvariants matrix_invariants(const ScalarMatrix& a, const ScalarMatrix& b);

struct NormalizedPair {
  ScalarMatrix a;
  ScalarMatrix b;
  Scalar scale;  // sqrt(1/lambda)
};

// (sqrt(1/lambda) A, B); throws LambdaNotSquare when sqrt(lambda) is irrational.
NormalizedPair normalize_pair(const ScalarMatrix& a, const ScalarMatrix& b);

enum class QuadraticForm {
  Minus,  // X^2 - s tr X + 1
  Plus,   // X^2 + s tr X + 1
};

struct GenericityReport {
  QuadraticForm form = QuadraticForm::Minus;
  Scalar linear_coeff;        // coefficient of X
  std::vector<Scalar> roots;  // rational roots with multiplicity, ascending
  bool has_q = false;
  bool satisfies_quadratic = false;
  bool generic = false;
};

// Throws NeedsFieldExtension when the roots are irrational.
GenericityReport genericity_check(const ScalarMatrix& a, const ScalarMatrix& b,
                                  const Scalar* q = nullptr,
                                  QuadraticForm form = QuadraticForm::Minus);

// Same check from precomputed invariants (lambda must be 1 after normalization).
GenericityReport genericity_from_invariants(const Scalar& lambda, const Scalar& trace,
                                            const Scalar* q, QuadraticForm form);

}  // namespace qg
