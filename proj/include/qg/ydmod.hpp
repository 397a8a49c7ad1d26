#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qg/hopf.hpp"
#include "qg/module.hpp"

namespace qg {

// Finite-dimensional right comodule: rho(v_i) = sum_k v_k (x) coaction[k][i].
struct Comodule {
  std::string name;
  const PresentedAlgebra* alg = nullptr;
  std::vector<std::string> labels;
  std::vector<std::vector<LocalizedElement>> coaction;
  std::size_t dim() const { return labels.size(); }
};

enum class ComoduleKind { Trivial, Fundamental, DualFundamental };

// Fundamental: coaction u. Dual: rho(v_i*) = sum_j v_j* (x) S(u_ij).
Comodule build_comodule(ComoduleKind kind, const HopfStructure& h, const std::string& prefix = "v");
// rho(x (x) y) = x0 (x) y0 (x) x1 y1; basis index is row-major over the factors.
Comodule tensor_comodule(const std::vector<Comodule>& factors);
Comodule direct_sum(const std::vector<Comodule>& parts, const std::string& name);
// Counit and coassociativity of the coaction matrix.
CheckReport verify_comodule(const HopfStructure& h, const Comodule& v);

// gamma: V -> U boxtimes H with gamma(v_i) = sum_k u_k (x) map.entries[i][k]. The
// right-module map map is its extension v (x) x -> gamma(v) x.
struct ComoduleMap {
  std::string name;
  Comodule source, target;
  FreeModuleMap map;
};

// Products S(x1) c_{k,index} keyed by (x1, k, index); only valid for a single comodule.
struct CoactMemo {
  std::map<std::tuple<LocTerm, std::size_t, std::size_t>, LocalizedElement> left;
};

// Coaction of the free YD module U boxtimes H on u_index (x) x:
//   sum u_k (x) x2 (x) S(x1) c_{k,index} x3, returned as one H (x) H tensor per k.
std::vector<Tensor> boxtimes_coact(const HopfStructure& h, const Comodule& u, std::size_t index,
                                   const LocalizedElement& x, CoactMemo* memo = nullptr);
// Both sides of delta((v (x) x) . y) = (v (x) x)_0 . y2 (x) S(y1) (v (x) x)_1 y3 for the free YD module.
CheckReport yd_compatibility(const HopfStructure& h, const Comodule& u, std::size_t index, const LocalizedElement& x,
                             const LocalizedElement& y);
CheckReport check_comodule_map(const HopfStructure& h, const ComoduleMap& g);
// Right-module structure is built in; checks the comodule condition on generators v (x) 1.
CheckReport check_yd_morphism(const HopfStructure& h, const FreeModuleMap& psi, const Comodule& source,
                              const Comodule& target);

// Comodule maps V -> k as scalar rows f with sum_k f_k c_{ki} = f_i.
struct HomSpace {
  std::size_t dimension = 0;
  std::vector<std::vector<Scalar>> basis;
};
HomSpace hom_to_trivial(const Comodule& v);
// True when f is a comodule map V -> k.
bool is_hom_to_trivial(const Comodule& v, const std::vector<Scalar>& f);

}  // namespace qg
