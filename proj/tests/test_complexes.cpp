#include <doctest.h>

#include "qg/complexes.hpp"
#include "qg/errors.hpp"

using namespace qg;

namespace {

AlgebraPtr glq2(int bound = 6) {
  AlgebraSpec s;
  s.kind = AlgebraKind::GLq;
  s.q = 2;
  s.degree_bound = bound;
  return build_presented(s);
}

std::string failures(const CheckReport& r) {
  std::string s;
  for (const auto& it : r.items)
    if (!it.passed) s += it.name + ": " + it.witness + "\n";
  return s;
}

}  // namespace

TEST_CASE("YD resolution over GL_q(2) is a complex of YD modules") {
  const HopfStructure h = build_hopf(glq2());
  const YDResolution res = build_yd_resolution(h);
  CHECK(res.complex.ranks() == std::vector<std::size_t>{1, 5, 8, 5, 1});
  const CheckReport c = is_complex(res.complex);
  CHECK_MESSAGE(c.passed(), failures(c));
  const CheckReport g = gamma_identity_suite(h, res);
  CHECK_MESSAGE(g.passed(), failures(g));
  CHECK(g.items.size() == 19);
  const CheckReport gc = gamma_comodule_suite(h);
  CHECK_MESSAGE(gc.passed(), failures(gc));
  const CheckReport y = yd_morphism_suite(h, res);
  CHECK_MESSAGE(y.passed(), failures(y));
}

TEST_CASE("left resolution, transposed complex and the twist") {
  const HopfStructure h = build_hopf(glq2());
  const Complex left = build_left_resolution(h);
  const Complex dual = dualize_resolution(h);
  const CheckReport l = is_complex(left);
  CHECK_MESSAGE(l.passed(), failures(l));
  const CheckReport d = is_complex(dual);
  CHECK_MESSAGE(d.passed(), failures(d));
  const TwistResult t = build_twist_chainmap(h, dual, left);
  CHECK_MESSAGE(t.report.passed(), failures(t.report));
}

TEST_CASE("GL_q(2) complexes and the isomorphism g") {
  const GlqComplexes g = build_glq_complexes(2, 6, {});
  CHECK_MESSAGE(g.report.passed(), failures(g.report));
}

TEST_CASE("SL_q resolution and the Laurent cone") {
  AlgebraSpec s;
  s.kind = AlgebraKind::SLq;
  s.q = 2;
  s.degree_bound = 4;
  const AlgebraPtr slq = build_presented(s);
  const Complex c = build_slq_resolution(*slq);
  const CheckReport r = is_complex(c);
  CHECK_MESSAGE(r.passed(), failures(r));
  const ConeResult cone = laurent_cone(2, 6, {});
  CHECK_MESSAGE(cone.report.passed(), failures(cone.report));
  CHECK(cone.cone.ranks() == std::vector<std::size_t>{1, 5, 8, 5, 1});
}

TEST_CASE("exactness probe on the GL_q(2) resolution") {
  const HopfStructure h = build_hopf(glq2(8));
  const YDResolution res = build_yd_resolution(h);
  const ProbeResult p = probe_exactness(res.complex, {6, 2, 2});
  for (const auto& pos : p.positions)
    MESSAGE("position ", pos.position, " dim ", pos.domain_dim, " cycles ", pos.cycles_found, " lifted ",
            pos.cycles_lifted);
  CHECK_MESSAGE(p.report.passed(), failures(p.report));
}

TEST_CASE("augmentation witnesses lift through psi_1") {
  const HopfStructure h = build_hopf(glq2(8));
  const YDResolution res = build_yd_resolution(h);
  const PresentedAlgebra& A = *h.alg;
  for (const auto& w : {A.gen(0) - A.one(), A.loc_power(1) - A.one()}) {
    const auto pre = lift_through(res.complex.maps[0], {w}, {6, 2, 2});
    REQUIRE(pre.has_value());
    CHECK(apply_module_map(res.complex.maps[0], *pre) == std::vector<LocalizedElement>{w});
  }
  // 1 is not in the augmentation ideal.
  CHECK_FALSE(lift_through(res.complex.maps[0], {A.one()}, {6, 2, 2}).has_value());
}

TEST_CASE("Laurent cone probe and a truncated complex") {
  const ConeResult cone = laurent_cone(2, 7, {});
  const ProbeResult p = probe_exactness(cone.cone, {5, 2, 2});
  for (const auto& pos : p.positions)
    MESSAGE("position ", pos.position, " dim ", pos.domain_dim, " cycles ", pos.cycles_found, " lifted ",
            pos.cycles_lifted);
  CHECK_MESSAGE(p.report.passed(), failures(p.report));

  Complex cut = cone.phi;
  cut.maps.pop_back();
  const ProbeResult q = probe_exactness(cut, {5, 2, 2});
  REQUIRE(q.positions.size() == 3);
  CHECK(q.positions[2].cycles_found > 0);
  CHECK(q.positions[2].cycles_lifted == 0);
  CHECK_FALSE(q.report.passed());
}
