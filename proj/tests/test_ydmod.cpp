#include <doctest.h>

#include "qg/complexes.hpp"
#include "qg/ydmod.hpp"

using namespace qg;

namespace {

HopfStructure glq2_hopf(int bound = 4) {
  AlgebraSpec s;
  s.kind = AlgebraKind::GLq;
  s.q = 2;
  s.degree_bound = bound;
  return build_hopf(build_presented(s));
}

}  // namespace

TEST_CASE("fundamental, dual and trivial comodules") {
  const HopfStructure h = glq2_hopf();
  const PresentedAlgebra& A = *h.alg;
  const Comodule k = build_comodule(ComoduleKind::Trivial, h, "1");
  REQUIRE(k.dim() == 1);
  CHECK(k.coaction[0][0] == A.one());
  const Comodule v = build_comodule(ComoduleKind::Fundamental, h, "v");
  const Comodule vd = build_comodule(ComoduleKind::DualFundamental, h, "v");
  const ElemMatrix u = u_matrix(A);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(v.coaction[i][j] == u[i][j]);
      CHECK(vd.coaction[j][i] == h.antipode.apply(u[i][j]));
    }
  for (const Comodule& c : {k, v, vd, tensor_comodule({vd, v}), direct_sum({k, v}, "k+V")})
    CHECK_MESSAGE(verify_comodule(h, c).passed(), c.name);
}

TEST_CASE("comodule maps to the trivial comodule") {
  const HopfStructure h = glq2_hopf();
  const Comodule k = build_comodule(ComoduleKind::Trivial, h, "1");
  const Comodule v = build_comodule(ComoduleKind::Fundamental, h, "v");
  const Comodule vv = tensor_comodule({build_comodule(ComoduleKind::DualFundamental, h, "v"), v});
  CHECK(hom_to_trivial(k).dimension == 1);
  CHECK(hom_to_trivial(v).dimension == 0);
  const HomSpace hv = hom_to_trivial(vv);
  REQUIRE(hv.dimension == 1);
  CHECK(hv.basis[0] == std::vector<Scalar>{1, 0, 0, 1});
  CHECK(is_hom_to_trivial(vv, {1, 0, 0, 1}));
  CHECK_FALSE(is_hom_to_trivial(vv, {1, 0, 0, 0}));
}

TEST_CASE("gamma maps are comodule maps; a corrupted one is not") {
  const HopfStructure h = glq2_hopf();
  const PresentedAlgebra& A = *h.alg;
  const GammaMaps gm = build_gammas(h);
  CHECK(check_comodule_map(h, {"gamma_6", gm.k, gm.k, gm.g6}).passed());
  CHECK(check_comodule_map(h, {"gamma_2", gm.vv, gm.k, gm.v[2]}).passed());
  // Adding D on the trace pattern keeps a comodule map (D is grouplike and central); on one entry it does not.
  FreeModuleMap trace_shift = gm.v[2];
  for (std::size_t i = 0; i < 2; ++i) trace_shift.at(i * 2 + i, 0) += A.loc_power(1);
  CHECK(check_comodule_map(h, {"gamma_2 + D tr", gm.vv, gm.k, trace_shift}).passed());
  FreeModuleMap bad = gm.v[2];
  bad.at(0, 0) += A.loc_power(1);
  CHECK_FALSE(check_comodule_map(h, {"gamma_2 + D", gm.vv, gm.k, bad}).passed());
}

TEST_CASE("free YD module compatibility") {
  const HopfStructure h = glq2_hopf(8);
  const PresentedAlgebra& A = *h.alg;
  const Comodule v = build_comodule(ComoduleKind::Fundamental, h, "v");
  const Comodule k = build_comodule(ComoduleKind::Trivial, h, "1");
  const LocalizedElement b = A.gen(1), c = A.gen(2), L = A.loc_power(1);
  CHECK(yd_compatibility(h, v, 0, b, c).passed());
  CHECK(yd_compatibility(h, v, 1, L, A.mul(b, c)).passed());
  // Trivial V, x = 1: coaction of 1 (x) y is 1 (x) y2 (x) S(y1) y3.
  const auto co = boxtimes_coact(h, k, 0, A.one());
  REQUIRE(co.size() == 1);
  CHECK(co[0] == Tensor::pure({A.one(), A.one()}));
  const auto cl = boxtimes_coact(h, k, 0, L);
  CHECK(cl[0] == Tensor::pure({L, A.one()}));
}
