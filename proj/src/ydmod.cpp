#include "qg/ydmod.hpp"

#include <map>

#include "qg/errors.hpp"
#include "qg/linalg.hpp"

namespace qg {

namespace {

LocalizedElement elem(const LocTerm& t) { return LocalizedElement::term(t.first, t.second); }

// Iterated coproduct x1 (x) x2 (x) x3.
Tensor delta2(const HopfStructure& h, const LocalizedElement& x) {
  Tensor out(3);
  const Tensor d = h.delta.apply(x);
  for (const auto& [k, c] : d.terms()) {
    const Tensor d1 = h.delta.apply_term(k[0]);
    for (const auto& [k1, c1] : d1.terms()) out.add_term({k1[0], k1[1], k[1]}, c * c1);
  }
  return out;
}

std::string tensor_list_diff(const PresentedAlgebra& alg, const std::vector<Tensor>& a, const std::vector<Tensor>& b,
                             const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Tensor d = a[k] - b[k];
    if (d.is_zero()) continue;
    if (!s.empty()) s += "; ";
    s += labels[k] + ": " + alg.to_string(d);
  }
  return s;
}

}  // namespace

Comodule build_comodule(ComoduleKind kind, const HopfStructure& h, const std::string& prefix) {
  const PresentedAlgebra& A = *h.alg;
  Comodule v;
  v.alg = &A;
  const std::size_t n = A.rows();
  switch (kind) {
    case ComoduleKind::Trivial:
      v.name = "k";
      v.labels = {"1"};
      v.coaction = {{A.one()}};
      break;
    case ComoduleKind::Fundamental:
      v.name = prefix;
      v.coaction.assign(n, std::vector<LocalizedElement>(n));
      for (std::size_t i = 0; i < n; ++i) {
        v.labels.push_back(prefix + std::to_string(i + 1));
        for (std::size_t k = 0; k < n; ++k) v.coaction[k][i] = A.gen(A.u(k, i));
      }
      break;
    case ComoduleKind::DualFundamental:
      v.name = prefix + "*";
      v.coaction.assign(n, std::vector<LocalizedElement>(n));
      for (std::size_t i = 0; i < n; ++i) {
        v.labels.push_back(prefix + std::to_string(i + 1) + "*");
        for (std::size_t j = 0; j < n; ++j) v.coaction[j][i] = h.antipode.images[A.u(i, j)];
      }
      break;
  }
  return v;
}

Comodule tensor_comodule(const std::vector<Comodule>& factors) {
  if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "empty tensor product");
  Comodule acc = factors.front();
  for (std::size_t f = 1; f < factors.size(); ++f) {
    const Comodule& w = factors[f];
    const PresentedAlgebra& A = *acc.alg;
    Comodule t;
    t.alg = acc.alg;
    t.name = acc.name + " (x) " + w.name;
    const std::size_t p = acc.dim(), r = w.dim();
    t.coaction.assign(p * r, std::vector<LocalizedElement>(p * r));
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = 0; b < r; ++b) t.labels.push_back(acc.labels[a] + "(x)" + w.labels[b]);
    for (std::size_t a2 = 0; a2 < p; ++a2)
      for (std::size_t b2 = 0; b2 < r; ++b2)
        for (std::size_t a = 0; a < p; ++a)
          for (std::size_t b = 0; b < r; ++b)
            t.coaction[a2 * r + b2][a * r + b] = A.mul(acc.coaction[a2][a], w.coaction[b2][b]);
    acc = std::move(t);
  }
  return acc;
}

Comodule direct_sum(const std::vector<Comodule>& parts, const std::string& name) {
  Comodule s;
  s.name = name;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.dim();
  s.coaction.assign(total, std::vector<LocalizedElement>(total));
  std::size_t off = 0;
  for (const auto& p : parts) {
    s.alg = p.alg;
    for (std::size_t i = 0; i < p.dim(); ++i) {
      s.labels.push_back(p.labels[i]);
      for (std::size_t k = 0; k < p.dim(); ++k) s.coaction[off + k][off + i] = p.coaction[k][i];
    }
    off += p.dim();
  }
  return s;
}

CheckReport verify_comodule(const HopfStructure& h, const Comodule& v) {
  const PresentedAlgebra& A = *h.alg;
  CheckReport rep;
  rep.suite = "comodule " + v.name;
  const std::size_t r = v.dim();
  for (std::size_t m = 0; m < r; ++m)
    for (std::size_t i = 0; i < r; ++i) {
      const std::string at = "[" + v.labels[m] + "," + v.labels[i] + "]";
      const Scalar e = h.counit.apply(v.coaction[m][i]);
      rep.add("counit " + at, e == (m == i ? 1 : 0), to_display(e));
      Tensor rhs(2);
      for (std::size_t k = 0; k < r; ++k) rhs.add_scaled(Tensor::pure({v.coaction[m][k], v.coaction[k][i]}), 1);
      const Tensor d = h.delta.apply(v.coaction[m][i]) - rhs;
      rep.add("coassociativity " + at, d.is_zero(), A.to_string(d));
    }
  return rep;
}

std::vector<Tensor> boxtimes_coact(const HopfStructure& h, const Comodule& u, std::size_t index,
                                   const LocalizedElement& x, CoactMemo* memo) {
  const PresentedAlgebra& A = *h.alg;
  CoactMemo local;
  CoactMemo& m = memo ? *memo : local;
  std::vector<Tensor> out(u.dim(), Tensor(2));
  const Tensor d = delta2(h, x);
  for (const auto& [key, c] : d.terms()) {
    const LocalizedElement x2 = elem(key[1]), x3 = elem(key[2]);
    for (std::size_t k = 0; k < u.dim(); ++k) {
      const LocalizedElement& ck = u.coaction[k][index];
      if (ck.is_zero()) continue;
      auto it = m.left.find({key[0], k, index});
      if (it == m.left.end())
        it = m.left.emplace(std::make_tuple(key[0], k, index), A.mul(h.antipode.apply_term(key[0]), ck)).first;
      out[k].add_scaled(Tensor::pure({x2, A.mul(it->second, x3)}), c);
    }
  }
  return out;
}

CheckReport yd_compatibility(const HopfStructure& h, const Comodule& u, std::size_t index, const LocalizedElement& x,
                             const LocalizedElement& y) {
  const PresentedAlgebra& A = *h.alg;
  CheckReport rep;
  rep.suite = "YD compatibility";
  const std::vector<Tensor> lhs = boxtimes_coact(h, u, index, A.mul(x, y));
  const std::vector<Tensor> first = boxtimes_coact(h, u, index, x);
  const Tensor dy = delta2(h, y);
  std::vector<Tensor> rhs(u.dim(), Tensor(2));
  for (std::size_t k = 0; k < u.dim(); ++k)
    for (const auto& [p, c] : first[k].terms())
      for (const auto& [yk, cy] : dy.terms()) {
        const LocalizedElement left = A.mul(elem(p[0]), elem(yk[1]));
        const LocalizedElement right = A.mul(A.mul(h.antipode.apply_term(yk[0]), elem(p[1])), elem(yk[2]));
        rhs[k].add_scaled(Tensor::pure({left, right}), c * cy);
      }
  rep.add("delta((" + u.labels[index] + " (x) " + A.to_string(x) + ") . " + A.to_string(y) + ")", lhs == rhs,
          tensor_list_diff(A, lhs, rhs, u.labels));
  return rep;
}

CheckReport check_comodule_map(const HopfStructure& h, const ComoduleMap& g) {
  const PresentedAlgebra& A = *h.alg;
  CheckReport rep;
  rep.suite = "comodule map " + g.name;
  const Comodule& v = g.source;
  const Comodule& u = g.target;
  // Coactions are linear in the entry; cache them per (target index, term).
  CoactMemo memo;
  std::map<std::pair<std::size_t, LocTerm>, std::vector<Tensor>> coacts;
  if (g.map.source_rank != v.dim() || g.map.target_rank != u.dim())
    throw Error(ErrorCode::InvalidArgument, g.name + " does not match its comodules");
  for (std::size_t i = 0; i < v.dim(); ++i) {
    std::vector<Tensor> lhs(u.dim(), Tensor(2)), rhs(u.dim(), Tensor(2));
    for (std::size_t m = 0; m < v.dim(); ++m) {
      if (v.coaction[m][i].is_zero()) continue;
      for (std::size_t k = 0; k < u.dim(); ++k)
        if (!g.map.at(m, k).is_zero()) lhs[k].add_scaled(Tensor::pure({g.map.at(m, k), v.coaction[m][i]}), 1);
    }
    for (std::size_t k2 = 0; k2 < u.dim(); ++k2)
      for (const auto& [t, c] : g.map.at(i, k2).terms()) {
        auto it = coacts.find({k2, t});
        if (it == coacts.end())
          it = coacts.emplace(std::make_pair(k2, t), boxtimes_coact(h, u, k2, LocalizedElement::term(t.first, t.second), &memo))
                   .first;
        for (std::size_t k = 0; k < u.dim(); ++k) rhs[k].add_scaled(it->second[k], c);
      }
    rep.add(g.name + " on " + v.labels[i], lhs == rhs, tensor_list_diff(A, lhs, rhs, u.labels));
  }
  return rep;
}

CheckReport check_yd_morphism(const HopfStructure& h, const FreeModuleMap& psi, const Comodule& source,
                              const Comodule& target) {
  if (psi.side != ModuleSide::Right || psi.twist)
    throw Error(ErrorCode::InvalidArgument, psi.name + " is not a right-module map between free YD modules");
  return check_comodule_map(h, ComoduleMap{psi.name, source, target, psi});
}

HomSpace hom_to_trivial(const Comodule& v) {
  // Unknowns f_k (rows); one column per (i, canonical term) equation.
  std::map<std::pair<std::size_t, LocTerm>, std::size_t> cols;
  const LocTerm unit{Word(), 0};
  for (std::size_t i = 0; i < v.dim(); ++i) {
    cols.try_emplace({i, unit}, cols.size());
    for (std::size_t k = 0; k < v.dim(); ++k)
      for (const auto& [t, c] : v.coaction[k][i].terms()) cols.try_emplace({i, t}, cols.size());
  }
  ScalarMatrix m(v.dim(), cols.size());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    for (std::size_t k = 0; k < v.dim(); ++k)
      for (const auto& [t, c] : v.coaction[k][i].terms()) m(k, cols.at({i, t})) += c;
    m(i, cols.at({i, unit})) -= 1;
  }
  HomSpace hs;
  hs.basis = left_nullspace(m);
  hs.dimension = hs.basis.size();
  return hs;
}

bool is_hom_to_trivial(const Comodule& v, const std::vector<Scalar>& f) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    LocalizedElement s;
    for (std::size_t k = 0; k < v.dim(); ++k) s.add_scaled(v.coaction[k][i], f[k]);
    s.add_term({Word(), 0}, -f[i]);
    if (!s.is_zero()) return false;
  }
  return true;
}

}  // namespace qg
