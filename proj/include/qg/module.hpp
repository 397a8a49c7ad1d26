#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qg/maps.hpp"
#include "qg/report.hpp"

namespace qg {

enum class ModuleSide { Right, Left };

// Map between free modules of finite rank acting on row coordinate vectors.
//   Right: e_r (x) x  ->  sum_c e_c (x) entries[r][c] * t(x)
//   Left:  x (x) e_r  ->  sum_c t(x) * entries[r][c] (x) e_c
// t is the twist (identity when absent); with a twist the map is t-semilinear.
struct FreeModuleMap {
  std::string name;
  const PresentedAlgebra* alg = nullptr;
  ModuleSide side = ModuleSide::Right;
  std::size_t source_rank = 0, target_rank = 0;
  std::vector<std::vector<LocalizedElement>> entries;
  std::shared_ptr<const AlgebraMap> twist;

  FreeModuleMap() = default;
  FreeModuleMap(std::string name, const PresentedAlgebra& alg, ModuleSide side, std::size_t source_rank,
                std::size_t target_rank);

  LocalizedElement& at(std::size_t r, std::size_t c) { return entries[r][c]; }
  const LocalizedElement& at(std::size_t r, std::size_t c) const { return entries[r][c]; }
  bool is_zero() const;
  int max_entry_degree() const;
};

FreeModuleMap identity_module_map(const PresentedAlgebra& alg, std::size_t rank, ModuleSide side);
FreeModuleMap scalar_module_map(const std::string& name, const PresentedAlgebra& alg, ModuleSide side,
                                const ScalarMatrix& m);
// second o first. Throws InvalidArgument on rank or side mismatch.
FreeModuleMap then(const FreeModuleMap& first, const FreeModuleMap& second, const std::string& name = "");
FreeModuleMap operator+(const FreeModuleMap& a, const FreeModuleMap& b);
FreeModuleMap operator-(const FreeModuleMap& a, const FreeModuleMap& b);
FreeModuleMap scaled(const FreeModuleMap& a, const Scalar& c);

// Block assembly; blocks[i][j] maps source summand i to target summand j, nullptr is zero.
FreeModuleMap block_map(const std::string& name, const PresentedAlgebra& alg, ModuleSide side,
                        const std::vector<std::size_t>& source_ranks, const std::vector<std::size_t>& target_ranks,
                        const std::vector<std::vector<const FreeModuleMap*>>& blocks);
// New source index i is old source_perm[i]; likewise for targets. Empty keeps the order.
FreeModuleMap permuted(const FreeModuleMap& m, const std::vector<std::size_t>& source_perm,
                       const std::vector<std::size_t>& target_perm);

// Entrywise equality plus agreement of twists on generators (absent twist = identity).
CheckReport compare_module_maps(const std::string& label, const FreeModuleMap& a, const FreeModuleMap& b);
CheckReport zero_module_map(const std::string& label, const FreeModuleMap& a);

// Inverse via Gauss-Jordan with unit pivots c*L^k. A twisted map needs the inverse
// of its twist, which becomes the twist of the result. Throws NotInvertible.
FreeModuleMap inverse_module_map(const FreeModuleMap& m, std::shared_ptr<const AlgebraMap> twist_inverse = nullptr);

}  // namespace qg
