#include "qg/invariants.hpp"

#include <algorithm>

#include "qg/errors.hpp"

namespace qg {

MatrixInvariants matrix_invariants(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw Error(ErrorCode::NotSquare, "A and B must be square of equal size");
  if (a.rows() < 2) throw Error(ErrorCode::NotSquare, "size must be at least 2");
  if (!a.is_invertible()) throw Error(ErrorCode::NotInvertible, "A is singular");
  if (!b.is_invertible()) throw Error(ErrorCode::NotInvertible, "B is singular");
  ScalarMatrix m = b.transpose() * a.transpose() * b * a;
  Scalar lambda;
  if (!m.is_scalar_multiple_of_identity(&lambda))
    throw Error(ErrorCode::NotScalarMultiple, "B^t A^t B A = " + m.to_display());
  ScalarMatrix m2 = a.transpose() * b.transpose() * a * b;
  Scalar lambda2;
  if (!m2.is_scalar_multiple_of_identity(&lambda2) || lambda2 != lambda)
    throw Error(ErrorCode::NotScalarMultiple, "A^t B^t A B = " + m2.to_display());
  return {lambda, (a * b.transpose()).trace()};
}

NormalizedPair normalize_pair(const ScalarMatrix& a, const ScalarMatrix& b) {
  MatrixInvariants inv = matrix_invariants(a, b);
  auto root = rational_sqrt(Scalar(1) / inv.lambda);
  if (!root) throw Error(ErrorCode::LambdaNotSquare, "lambda = " + to_display(inv.lambda));
  return {a.scaled(*root), b, *root};
}

GenericityReport genericity_from_invariants(const Scalar& lambda, const Scalar& trace, const Scalar* q,
                                            QuadraticForm form) {
  if (lambda != 1) throw Error(ErrorCode::InvalidArgument, "genericity requires lambda = 1 after normalization");
  GenericityReport rep;
  rep.form = form;
  rep.linear_coeff = form == QuadraticForm::Minus ? Scalar(-trace) : Scalar(trace);
  // X^2 + p X + 1: discriminant p^2 - 4.
  Scalar p = rep.linear_coeff;
  Scalar disc = p * p - 4;
  auto root = rational_sqrt(disc);
  if (!root) throw Error(ErrorCode::NeedsFieldExtension, "discriminant " + to_display(disc) + " is not a rational square");
  Scalar r1 = (-p - *root) / 2, r2 = (-p + *root) / 2;
  rep.roots = {r1, r2};
  std::sort(rep.roots.begin(), rep.roots.end());
  rep.generic = true;
  for (const auto& r : rep.roots)
    if (r == 1 || r == -1) rep.generic = false;
  if (q) {
    rep.has_q = true;
    rep.satisfies_quadratic = (*q) * (*q) + p * (*q) + 1 == 0;
  }
  return rep;
}

GenericityReport genericity_check(const ScalarMatrix& a, const ScalarMatrix& b, const Scalar* q, QuadraticForm form) {
  NormalizedPair np = normalize_pair(a, b);
  MatrixInvariants inv = matrix_invariants(np.a, np.b);
  return genericity_from_invariants(inv.lambda, inv.trace, q, form);
}

}  // namespace qg
