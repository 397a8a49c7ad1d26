#include <doctest.h>

#include <random>

#include "qg/errors.hpp"
#include "qg/invariants.hpp"
#include "qg/ncpoly.hpp"
#include "qg/order.hpp"

using namespace qg;

namespace {

Word random_word(std::mt19937_64& rng, int gens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), g(0, gens - 1);
  Word w;
  for (int i = len(rng); i > 0; --i) w += letter(g(rng));
  return w;
}

NCPoly random_poly(std::mt19937_64& rng, int gens) {
  std::uniform_int_distribution<int> terms(0, 4), coef(-5, 5);
  NCPoly p;
  for (int i = terms(rng); i > 0; --i) p.add_term(random_word(rng, gens, 3), Scalar(coef(rng)) / (1 + i % 3));
  return p;
}

MonomialOrder five_gen_order() {
  return MonomialOrder({1, 1, 1, 1, 2}, {0, 1, 2, 3, 4},
                       {{OrderRefinement::Kind::Weight, {1, 1, 1, 1, 1}},
                        {OrderRefinement::Kind::Lex, {0, 0, 0, 0, 1}},
                        {OrderRefinement::Kind::Weight, {1, 0, 0, 1, 0}}});
}

}  // namespace

TEST_CASE("scalar parse and format") {
  CHECK(parse_scalar("3") == 3);
  CHECK(parse_scalar("-6/4") == Scalar(-3, 2));
  CHECK(to_string(Scalar(5)) == "5/1");
  CHECK(to_string(Scalar(-1, 2)) == "-1/2");
  CHECK(to_display(Scalar(5)) == "5");
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(parse_scalar("x"), Error);
  CHECK(*rational_sqrt(Scalar(9, 4)) == Scalar(3, 2));
  CHECK_FALSE(rational_sqrt(Scalar(2)).has_value());
}

TEST_CASE("matrix inverse and errors") {
  const ScalarMatrix aq = a_q(2);
  CHECK(aq * aq.inverse() == ScalarMatrix::identity(2));
  CHECK(aq.inverse() == ScalarMatrix{{0, Scalar(-1, 2)}, {1, 0}});
  try {
    ScalarMatrix(2, 3).inverse();
    FAIL("expected NotSquare");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSquare);
  }
  try {
    ScalarMatrix{{1, 2}, {2, 4}}.inverse();
    FAIL("expected NotInvertible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInvertible);
  }
}

TEST_CASE("matrix invariants") {
  // lambda = 1 and trace(A B^t) = -(q + 1/q) for the quantum pair.
  const auto inv = matrix_invariants(a_q(2), a_q(2).inverse());
  CHECK(inv.lambda == 1);
  CHECK(inv.trace == Scalar(-5, 2));
  const auto id = matrix_invariants(ScalarMatrix::identity(2), ScalarMatrix::identity(2));
  CHECK(id.lambda == 1);
  CHECK(id.trace == 2);
  try {
    matrix_invariants(ScalarMatrix{{1, 1}, {0, 1}}, ScalarMatrix::identity(2));
    FAIL("expected NotScalarMultiple");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotScalarMultiple);
  }
}

TEST_CASE("normalize pair") {
  const auto n = normalize_pair(ScalarMatrix::identity(2), ScalarMatrix::identity(2).scaled(2));
  CHECK(n.a == ScalarMatrix::identity(2).scaled(Scalar(1, 2)));
  CHECK(n.b == ScalarMatrix::identity(2).scaled(2));
  CHECK(matrix_invariants(n.a, n.b).lambda == 1);
  try {
    // B^t B = 2 I, so lambda = 2.
    normalize_pair(ScalarMatrix::identity(2), ScalarMatrix{{1, 1}, {-1, 1}});
    FAIL("expected LambdaNotSquare");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LambdaNotSquare);
  }
}

TEST_CASE("genericity") {
  const Scalar q2 = 2;
  const auto g = genericity_check(a_q(2), a_q(2).inverse(), &q2);
  REQUIRE(g.roots.size() == 2);
  CHECK(g.roots[0] == -2);
  CHECK(g.roots[1] == Scalar(-1, 2));
  CHECK(g.generic);
  const Scalar q1 = 1;
  const auto g1 = genericity_check(a_q(1), a_q(1).inverse(), &q1);
  REQUIRE(g1.roots.size() == 2);
  CHECK(g1.roots[0] == -1);
  CHECK(g1.roots[1] == -1);
  CHECK_FALSE(g1.generic);
  try {
    genericity_from_invariants(1, 3, nullptr, QuadraticForm::Minus);
    FAIL("expected NeedsFieldExtension");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NeedsFieldExtension);
  }
}

TEST_CASE("invariants agree with the transposed identity on random pairs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  int checked = 0;
  while (checked < 20) {
    ScalarMatrix a(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a(i, j) = d(rng);
    if (!a.is_invertible()) continue;
    const ScalarMatrix b = a.transpose().inverse().scaled(Scalar(1 + checked % 3));
    const auto inv = matrix_invariants(a, b);
    Scalar l1, l2;
    REQUIRE((b.transpose() * a.transpose() * b * a).is_scalar_multiple_of_identity(&l1));
    REQUIRE((a.transpose() * b.transpose() * a * b).is_scalar_multiple_of_identity(&l2));
    CHECK(inv.lambda == l1);
    CHECK(l1 == l2);
    ++checked;
  }
}

TEST_CASE("polynomial ring laws on random inputs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const NCPoly p = random_poly(rng, 3), q = random_poly(rng, 3), r = random_poly(rng, 3);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("monomial order is multiplicative and total") {
  std::mt19937_64 rng(13);
  const MonomialOrder ord = five_gen_order();
  for (int t = 0; t < 2000; ++t) {
    const Word a = random_word(rng, 5, 4), b = random_word(rng, 5, 4);
    const Word u = random_word(rng, 5, 2), v = random_word(rng, 5, 2);
    const int c = ord.compare(a, b);
    CHECK(c == -ord.compare(b, a));
    CHECK((c == 0) == (a == b));
    if (c < 0) CHECK(ord.less(u + a + v, u + b + v));
  }
}

TEST_CASE("order places the localizer to the right and above quadratic words") {
  const MonomialOrder ord = five_gen_order();
  CHECK(ord.less(make_word({0, 4}), make_word({4, 0})));
  CHECK(ord.less(make_word({4}), make_word({0, 3})));
  CHECK(ord.less(make_word({1, 2}), make_word({0, 3})));
  CHECK(ord.less(make_word({1, 2}), make_word({3, 0})));
  CHECK(ord.less(make_word({0, 1}), make_word({1, 0})));
  CHECK_THROWS_AS(MonomialOrder({1, 0}, {0, 1}), Error);
  CHECK_THROWS_AS(MonomialOrder({1, 1}, {0, 0}), Error);
}
