#include <doctest.h>

#include "qg/cohomology.hpp"
#include "qg/errors.hpp"

using namespace qg;

namespace {

HopfStructure glq2_hopf() {
  AlgebraSpec s;
  s.kind = AlgebraKind::GLq;
  s.q = 2;
  s.degree_bound = 4;
  return build_hopf(build_presented(s));
}

}  // namespace

TEST_CASE("bialgebra cohomology of GL_q(2)") {
  const HopfStructure h = glq2_hopf();
  const YDResolution res = build_yd_resolution(h);
  const CohomologyResult c = bialgebra_cohomology(res, std::vector<std::size_t>{1, 2, 2, 2, 1});
  CHECK(c.cochains.dims == std::vector<std::size_t>{1, 2, 2, 2, 1});
  CHECK(c.ranks == std::vector<std::size_t>{0, 1, 1, 0});
  CHECK(c.dims == std::vector<std::size_t>{1, 1, 0, 1, 1});
  CHECK(c.report.passed());
  for (const auto& m : c.cochains.maps) MESSAGE(m.to_display());
  const GsReport gs = gs_dimension_report(c, res.complex.length());
  CHECK(gs.upper == 4);
  CHECK(gs.lower == 4);
  CHECK(gs.verdict == "cd_GS = 4");
}

TEST_CASE("cohomology is independent of the Hom bases") {
  const HopfStructure h = glq2_hopf();
  const YDResolution res = build_yd_resolution(h);
  for (std::uint64_t seed : {1u, 7u, 42u}) {
    const CohomologyResult c = bialgebra_cohomology(res, std::nullopt, seed);
    CHECK(c.ranks == std::vector<std::size_t>{0, 1, 1, 0});
    CHECK(c.dims == std::vector<std::size_t>{1, 1, 0, 1, 1});
  }
}

TEST_CASE("unexpected Hom dimensions halt the pipeline") {
  const HopfStructure h = glq2_hopf();
  const YDResolution res = build_yd_resolution(h);
  try {
    bialgebra_cohomology(res, std::vector<std::size_t>{1, 2, 2, 2, 2});
    FAIL("expected UnexpectedHomDimension");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnexpectedHomDimension);
  }
}

TEST_CASE("gs report with vanishing top cohomology is inconclusive") {
  CohomologyResult c;
  c.dims = {1, 1, 0, 1, 0};
  const GsReport gs = gs_dimension_report(c, 4);
  CHECK(gs.lower == 3);
  CHECK(gs.verdict == "inconclusive (lower<upper)");
}
