#include <doctest.h>

#include "qg/errors.hpp"
#include "qg/hopf.hpp"

using namespace qg;

namespace {

AlgebraPtr glq2() {
  AlgebraSpec s;
  s.kind = AlgebraKind::GLq;
  s.q = 2;
  s.degree_bound = 4;
  return build_presented(s);
}

ScalarMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  ScalarMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (auto r : rows) {
    std::size_t j = 0;
    for (int x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

std::string failures(const CheckReport& r) {
  std::string s;
  for (const auto& it : r.items)
    if (!it.passed) s += it.name + ": " + it.witness + "\n";
  return s;
}

}  // namespace

TEST_CASE("GL_q(2) Hopf axioms, sovereign and commutation") {
  const HopfStructure h = build_hopf(glq2());
  const CheckReport ax = verify_hopf_axioms(h);
  CHECK_MESSAGE(ax.passed(), failures(ax));
  const CheckReport sv = antipode_squared_sovereign(h);
  CHECK_MESSAGE(sv.passed(), failures(sv));
  const CheckReport cm = commutation_check(*h.alg);
  CHECK(cm.items.size() == 4);
  CHECK_MESSAGE(cm.passed(), failures(cm));

  const PresentedAlgebra& A = *h.alg;
  const AlgebraMap s2 = compose(h.antipode, h.antipode);
  CHECK(s2.images[0] == A.gen(0));
  CHECK(s2.images[1] == A.gen(1).scaled(Scalar(1) / 4));
  CHECK(s2.images[2] == A.gen(2).scaled(4));
  CHECK(s2.images[3] == A.gen(3));
  CHECK(A.mul(A.loc_power(-1), A.gen(0)) == A.mul(A.gen(0), A.loc_power(-1)));
}

TEST_CASE("SL_q(2) antipode") {
  AlgebraSpec s;
  s.kind = AlgebraKind::SLq;
  s.q = 2;
  s.degree_bound = 4;
  const HopfStructure h = build_hopf(build_presented(s));
  const PresentedAlgebra& A = *h.alg;
  CHECK(h.antipode.images[0] == A.gen(3));
  CHECK(h.antipode.images[1] == A.gen(1).scaled(Scalar(-1) / 2));
  CHECK(h.antipode.images[2] == A.gen(2).scaled(-2));
  CHECK(h.antipode.images[3] == A.gen(0));
  const CheckReport ax = verify_hopf_axioms(h);
  CHECK_MESSAGE(ax.passed(), failures(ax));
  const CheckReport sv = antipode_squared_sovereign(h);
  CHECK_MESSAGE(sv.passed(), failures(sv));
}

TEST_CASE("broken structure maps are detected") {
  HopfStructure h = build_hopf(glq2());
  const PresentedAlgebra& A = *h.alg;
  AlgebraMap shifted = identity_map(A);
  shifted.images[0] = A.gen(0) + A.one();
  CHECK_FALSE(map_respects_relations(shifted).passed());

  h.antipode.images[*A.localizer()] = A.loc_power(1);
  h.antipode.loc_inv_image = A.loc_power(-1);
  const CheckReport ax = verify_hopf_axioms(h);
  CHECK_FALSE(ax.passed());
  bool antipode_failed = false;
  for (const auto& it : ax.items)
    antipode_failed |= !it.passed && it.name.find("m(S x id) Delta on D") != std::string::npos;
  CHECK(antipode_failed);
}

TEST_CASE("literal Phi * id * Phi differs from S^2") {
  const HopfStructure h = build_hopf(glq2());
  const PresentedAlgebra& A = *h.alg;
  const ScalarMatrix m = A.b() * A.a().transpose();
  const Character phi = character_from_matrix("Phi", A, m, 1);
  const AlgebraMap conv =
      convolve(h, convolve(h, character_as_map(phi, A), identity_map(A)), character_as_map(phi, A));
  CHECK_FALSE(compare_on_generators("S^2 = Phi * id * Phi", compose(h.antipode, h.antipode), conv).passed());
}

TEST_CASE("windings compose by convolution") {
  const HopfStructure h = build_hopf(glq2());
  const PresentedAlgebra& A = *h.alg;
  const Character x1 = character_from_matrix("x1", A, mat({{3, 0}, {0, 1}}), 3);
  const Character x2 = character_from_matrix("x2", A, mat({{1, 0}, {0, 5}}), 5);
  const AlgebraMap lhs = compose(winding(h, x1, Side::Left), winding(h, x2, Side::Left));
  CHECK(compare_on_generators("[x1]^l [x2]^l = [x2 * x1]^l", lhs, winding(h, convolve(h, x2, x1), Side::Left)).passed());
  const AlgebraMap inv = winding(h, compose_character(x1, h.antipode), Side::Left);
  CHECK(compare_on_generators("inverse winding", compose(winding(h, x1, Side::Left), inv), identity_map(A)).passed());
}

TEST_CASE("GL_q(2) Nakayama automorphism") {
  const HopfStructure h = build_hopf(glq2());
  const PresentedAlgebra& A = *h.alg;
  const NakayamaResult n = nakayama_G(h);
  CHECK_MESSAGE(n.report.passed(), failures(n.report));
  CHECK(n.mu.images[0] == A.gen(0).scaled(4));
  CHECK(n.mu.images[1] == A.gen(1));
  CHECK(n.mu.images[2] == A.gen(2));
  CHECK(n.mu.images[3] == A.gen(3).scaled(Scalar(1) / 4));
  CHECK(n.mu.images[4] == A.loc_power(1));
  CHECK(*n.mu.loc_inv_image == A.loc_power(-1));
  CHECK(n.xi.images == std::vector<Scalar>{4, 0, 0, Scalar(1) / 4, 1});
}

TEST_CASE("seeded 3x3 instance at degree bound 4") {
  const ScalarMatrix a = mat({{1, 2, 0}, {0, 1, 1}, {1, 0, 1}});
  AlgebraSpec s;
  s.kind = AlgebraKind::GAB;
  s.a = a;
  s.b = a.transpose().inverse();
  s.degree_bound = 4;
  const HopfStructure h = build_hopf(build_presented(s));
  const CheckReport ax = verify_hopf_axioms(h);
  CHECK_MESSAGE(ax.passed(), failures(ax));
  const CheckReport sv = antipode_squared_sovereign(h);
  CHECK_MESSAGE(sv.passed(), failures(sv));
  const CheckReport cm = commutation_check(*h.alg);
  CHECK_MESSAGE(cm.passed(), failures(cm));
  const NakayamaResult n = nakayama_G(h);
  CHECK_MESSAGE(n.report.passed(), failures(n.report));
}

TEST_CASE("Galois object and cogroupoid for a conjugated pair") {
  const ScalarMatrix aq = a_q(2), bq = aq.inverse();
  const ScalarMatrix f = mat({{1, 1}, {0, 1}});
  const ScalarMatrix c = f.transpose() * aq * f, d = f.inverse() * bq * f.transpose().inverse();
  const GaloisResult g = nakayama_galois(aq, bq, c, d, 4, {});
  CHECK_MESSAGE(g.report.passed(), failures(g.report));
  const CheckReport cg = cogroupoid_suite({{aq, bq}, {c, d}}, 3, {});
  CHECK_MESSAGE(cg.passed(), failures(cg));
  CHECK(cg.items.size() > 100);
}

TEST_CASE("GL_q(2) is SL_q(2) with a central Laurent variable") {
  const LaurentIso iso = glq_slq_laurent_iso(2, 4, {});
  CHECK_MESSAGE(iso.report.passed(), failures(iso.report));
}
