#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qg/hopf.hpp"
#include "qg/module.hpp"
#include "qg/ydmod.hpp"

namespace qg {

// maps[i] : C_{i+1} -> C_i; the augmentation is a character on C_0 (rank 1).
struct Complex {
  std::string name;
  const PresentedAlgebra* alg = nullptr;
  ModuleSide side = ModuleSide::Right;
  std::vector<FreeModuleMap> maps;
  std::optional<Character> augmentation;
  std::vector<std::vector<std::string>> labels;  // basis labels per degree, optional

  std::size_t length() const { return maps.size(); }
  std::vector<std::size_t> ranks() const;
};

// components[i] : S_i -> T_i
struct ChainMap {
  std::string name;
  std::vector<FreeModuleMap> components;
};

CheckReport is_complex(const Complex& c);
// Squares d^T_i f_i = f_{i-1} d^S_i for every i >= 1.
CheckReport verify_chain_map(const ChainMap& f, const Complex& source, const Complex& target);
// Row vector of elements pushed through the map.
std::vector<LocalizedElement> apply_module_map(const FreeModuleMap& m, const std::vector<LocalizedElement>& x);

struct YDResolution {
  Complex complex;
  // Comodule summands of each P_i in basis order; P_i = (direct sum) summands[i] boxtimes H.
  std::vector<std::vector<Comodule>> summands;
};

// Ranks (1, n^2+1, 2n^2, n^2+1, 1); P1 = k + W*W, P2 = V*V + W*W, P3 = V*V + k.
YDResolution build_yd_resolution(const HopfStructure& h);
// The comodule maps gamma_1..gamma_7 as right-module maps.
struct GammaMaps {
  Comodule vv, ww, k;
  std::vector<FreeModuleMap> v, w;  // index 1..5, slot 0 unused
  FreeModuleMap g6, g7;
};
GammaMaps build_gammas(const HopfStructure& h);
// The composition identities among the gamma maps and agreement of the resolution maps
// with their gamma assembly.
CheckReport gamma_identity_suite(const HopfStructure& h, const YDResolution& res);
// Each gamma is a comodule map into its free YD module. Expensive for dense n >= 3 instances.
CheckReport gamma_comodule_suite(const HopfStructure& h);
// Each psi_i is a YD morphism between the free YD modules of the resolution.
CheckReport yd_morphism_suite(const HopfStructure& h, const YDResolution& res);

// Left resolution phi of k; Q1 = k + V*V, Q2 = W*W + V*V, Q3 = W*W + k (each tensored with G).
Complex build_left_resolution(const HopfStructure& h);
// The transposed complex psi^t on the same modules: maps = (psi^t_4, psi^t_3, psi^t_2, psi^t_1).
Complex dualize_resolution(const HopfStructure& h);
struct TwistResult {
  AlgebraMap nu, nu_inv;
  ChainMap f, f_inv;
  CheckReport report;
};
// nu-semilinear chain isomorphism psi^t -> phi.
TwistResult build_twist_chainmap(const HopfStructure& h, const Complex& dual, const Complex& left);

// Free resolution of k over SL_q(2) (or the same maps over SL_q(2)[z^{+-1}]), ranks (1,4,4,1).
Complex build_slq_resolution(const PresentedAlgebra& alg);

struct ConeResult {
  AlgebraPtr alg;
  Complex phi;
  ChainMap f;
  Complex cone;
  CheckReport report;
};
// cone_n = X_{n-1} + Y_n with d(x, y) = (-d x, -f x + d y); f : X -> Y.
Complex mapping_cone(const std::string& name, const Complex& x, const Complex& y, const ChainMap& f);
// Mapping cone of multiplication by (z - 1) on the SL_q resolution extended to SL_q(2)[z^{+-1}].
ConeResult laurent_cone(const Scalar& q, int degree_bound, const std::filesystem::path& cache_dir);

struct GlqComplexes {
  AlgebraPtr alg;
  Complex c2, c3;  // P1 ordered W*W + k
  ChainMap g, g_inv;
  CheckReport report;
};
GlqComplexes build_glq_complexes(const Scalar& q, int degree_bound, const std::filesystem::path& cache_dir);

struct ProbeOptions {
  int weight_bound = 6;   // N
  int slack = 2;          // cycles are taken in degree <= N - slack
  int laurent_window = 2; // localizer exponents >= -window
};
struct ProbePosition {
  std::size_t position = 0;
  std::size_t domain_dim = 0;
  std::size_t cycles_found = 0;
  std::size_t cycles_lifted = 0;
  std::vector<std::string> unlifted;  // witnesses, truncated
};
struct ProbeResult {
  std::vector<ProbePosition> positions;
  CheckReport report;
};
// Exact truncated exactness check at every position of the augmented complex.
ProbeResult probe_exactness(const Complex& c, const ProbeOptions& opt);
// Preimage of y under m within filtration degree <= bound, verified exactly.
std::optional<std::vector<LocalizedElement>> lift_through(const FreeModuleMap& m, const std::vector<LocalizedElement>& y,
                                                          const ProbeOptions& opt);

}  // namespace qg
