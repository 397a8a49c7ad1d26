#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qg/complexes.hpp"

namespace qg {

// Cochain complex of scalar matrices on row vectors; maps[i] : C^i -> C^{i+1}.
struct ScalarComplex {
  std::vector<std::size_t> dims;
  std::vector<ScalarMatrix> maps;
};

struct CohomologyResult {
  ScalarComplex cochains;
  std::vector<std::size_t> ranks;  // rank of each map, in degree order
  std::vector<std::size_t> dims;   // dim H^0 .. H^top
  std::vector<std::vector<std::vector<Scalar>>> hom_bases;  // per degree, functionals on P_i's comodule
  CheckReport report;
};

// Applies Hom_YD(-, k) along the resolution: C^i = Hom_comod(V_i, k) for P_i = V_i boxtimes G, and
// f -> (f (x) eps) o psi_{i+1}. With basis_seed set, every Hom basis is replaced by a random
// invertible recombination first. Throws UnexpectedHomDimension when a Hom space deviates
// from expected_dims (if given).
CohomologyResult bialgebra_cohomology(const YDResolution& res,
                                      const std::optional<std::vector<std::size_t>>& expected_dims = std::nullopt,
                                      std::optional<std::uint64_t> basis_seed = std::nullopt);

struct GsReport {
  std::size_t upper = 0;  // length of the resolution
  std::size_t lower = 0;  // top degree with nonzero cohomology
  std::string verdict;
};
GsReport gs_dimension_report(const CohomologyResult& c, std::size_t resolution_length);

}  // namespace qg
