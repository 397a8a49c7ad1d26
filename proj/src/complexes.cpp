#include "qg/complexes.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "qg/errors.hpp"
#include "qg/invariants.hpp"
#include "qg/linalg.hpp"

namespace qg {

std::vector<std::size_t> Complex::ranks() const {
  std::vector<std::size_t> r;
  if (maps.empty()) return r;
  r.push_back(maps[0].target_rank);
  for (const auto& m : maps) r.push_back(m.source_rank);
  return r;
}

CheckReport is_complex(const Complex& c) {
  CheckReport rep;
  rep.suite = c.name + " is a complex";
  for (std::size_t i = 1; i < c.maps.size(); ++i) {
    const auto& hi = c.maps[i];
    const auto& lo = c.maps[i - 1];
    const std::string label = "d_" + std::to_string(i) + " d_" + std::to_string(i + 1) + " = 0";
    if (hi.target_rank != lo.source_rank) {
      rep.add(label, false, "rank mismatch");
      continue;
    }
    rep.merge(zero_module_map(label, then(hi, lo)));
  }
  if (c.augmentation && !c.maps.empty()) {
    const auto& d1 = c.maps[0];
    bool ok = d1.target_rank == 1;
    std::string witness;
    for (std::size_t r = 0; ok && r < d1.source_rank; ++r) {
      const Scalar e = c.augmentation->apply(d1.at(r, 0));
      if (e != 0) {
        ok = false;
        witness = "row " + std::to_string(r) + ": " + to_display(e);
      }
    }
    rep.add("eps d_1 = 0", ok, witness);
  }
  return rep;
}

CheckReport verify_chain_map(const ChainMap& f, const Complex& source, const Complex& target) {
  CheckReport rep;
  rep.suite = f.name + " is a chain map";
  if (f.components.size() != source.maps.size() + 1 || source.maps.size() != target.maps.size()) {
    rep.add("lengths", false, "component count does not match the complexes");
    return rep;
  }
  for (std::size_t i = 1; i < f.components.size(); ++i) {
    const auto lhs = then(source.maps[i - 1], f.components[i - 1]);
    const auto rhs = then(f.components[i], target.maps[i - 1]);
    rep.merge(compare_module_maps("square " + std::to_string(i), lhs, rhs));
  }
  return rep;
}

std::vector<LocalizedElement> apply_module_map(const FreeModuleMap& m, const std::vector<LocalizedElement>& x) {
  if (x.size() != m.source_rank) throw Error(ErrorCode::InvalidArgument, "vector rank does not match " + m.name);
  const PresentedAlgebra& A = *m.alg;
  std::vector<LocalizedElement> out(m.target_rank);
  for (std::size_t r = 0; r < m.source_rank; ++r) {
    if (x[r].is_zero()) continue;
    const LocalizedElement tx = m.twist ? m.twist->apply(x[r]) : x[r];
    for (std::size_t c = 0; c < m.target_rank; ++c) {
      if (m.at(r, c).is_zero()) continue;
      out[c] += m.side == ModuleSide::Right ? A.mul(m.at(r, c), tx) : A.mul(tx, m.at(r, c));
    }
  }
  return out;
}

// ---------------------------------------------------------------- YD resolution

namespace {

Scalar delta(std::size_t i, std::size_t j) { return i == j ? 1 : 0; }

// Shared data for the G(A, B) transcriptions.
struct GData {
  const PresentedAlgebra& alg;
  std::size_t n, nn;
  ScalarMatrix A, B, At, Bt, Binv, Ainv, AtB, ABt, BtAt, BA;
  Scalar lambda;
  ElemMatrix u, uBt, AuBt, Atu, AtuB;
  LocalizedElement L, one;

  explicit GData(const PresentedAlgebra& a)
      : alg(a), n(a.rows()), nn(a.rows() * a.rows()), A(a.a()), B(a.b()), At(A.transpose()), Bt(B.transpose()),
        Binv(B.inverse()), Ainv(A.inverse()), AtB(At * B), ABt(A * Bt), BtAt(Bt * At), BA(B * A),
        lambda(matrix_invariants(A, B).lambda), u(u_matrix(a)), uBt(u * Bt), AuBt(A * uBt), Atu(At * u),
        AtuB(Atu * B), L(a.loc_power(1)), one(a.one()) {}

  std::size_t ix(std::size_t i, std::size_t j) const { return i * n + j; }
  LocalizedElement c(const Scalar& s) const { return LocalizedElement(s); }
  // (1/lambda) (B^t A^t)_ik (B A)_lj D - delta_ik delta_jl
  LocalizedElement g7(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return L.scaled(BtAt(i, k) * BA(l, j) / lambda) - c(delta(i, k) * delta(j, l));
  }
};

FreeModuleMap right_map(const GData& g, const std::string& name, std::size_t sr, std::size_t tr) {
  return FreeModuleMap(name, g.alg, ModuleSide::Right, sr, tr);
}

FreeModuleMap left_map(const GData& g, const std::string& name, std::size_t sr, std::size_t tr) {
  return FreeModuleMap(name, g.alg, ModuleSide::Left, sr, tr);
}

}  // namespace

YDResolution build_yd_resolution(const HopfStructure& h) {
  const GData g(*h.alg);
  const std::size_t n = g.n, nn = g.nn;
  YDResolution res;
  Complex& cx = res.complex;
  cx.name = "YD resolution of k over " + h.alg->name();
  cx.alg = h.alg.get();
  cx.side = ModuleSide::Right;
  cx.augmentation = h.counit;

  // psi_1 : k + W*W -> k
  FreeModuleMap p1 = right_map(g, "psi_1", 1 + nn, 1);
  p1.at(0, 0) = g.L - g.one;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p1.at(1 + g.ix(i, j), 0) = g.c(delta(i, j)) - g.u[i][j];

  // psi_2 : V*V + W*W -> k + W*W
  FreeModuleMap p2 = right_map(g, "psi_2", 2 * nn, 1 + nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t v = g.ix(i, j), w = nn + g.ix(i, j);
      p2.at(v, 0) = g.u[i][j] - g.c(delta(i, j));
      p2.at(w, 0) = g.c(-delta(i, j));
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          p2.at(v, 1 + g.ix(k, l)) = g.g7(i, j, k, l);
          p2.at(w, 1 + g.ix(k, l)) =
              g.c(-delta(i, k) * delta(j, l)) - g.uBt[i][l].scaled(g.Binv(j, k));
        }
    }

  // psi_3 : V*V + k -> V*V + W*W
  FreeModuleMap p3 = right_map(g, "psi_3", nn + 1, 2 * nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t v = g.ix(i, j);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          p3.at(v, g.ix(k, l)) = g.c(delta(i, k) * delta(j, l)) + g.uBt[i][l].scaled(g.Binv(j, k));
          p3.at(v, nn + g.ix(k, l)) = g.g7(i, j, k, l);
        }
      p3.at(nn, v) = g.c(g.AtB(i, j));
      p3.at(nn, nn + v) = g.AuBt[i][j] - g.c(g.AtB(i, j));
    }

  // psi_4 : k -> V*V + k
  FreeModuleMap p4 = right_map(g, "psi_4", 1, nn + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p4.at(0, g.ix(i, j)) = g.c(g.AtB(i, j)) - g.AuBt[i][j];
  p4.at(0, nn) = g.L - g.one;

  cx.maps = {p1, p2, p3, p4};

  const Comodule k = build_comodule(ComoduleKind::Trivial, h, "1");
  const Comodule vv = tensor_comodule({build_comodule(ComoduleKind::DualFundamental, h, "v"),
                                       build_comodule(ComoduleKind::Fundamental, h, "v")});
  const Comodule ww = tensor_comodule({build_comodule(ComoduleKind::DualFundamental, h, "w"),
                                       build_comodule(ComoduleKind::Fundamental, h, "w")});
  res.summands = {{k}, {k, ww}, {vv, ww}, {vv, k}, {k}};
  for (const auto& parts : res.summands) {
    std::vector<std::string> labels;
    for (const auto& p : parts) labels.insert(labels.end(), p.labels.begin(), p.labels.end());
    cx.labels.push_back(std::move(labels));
  }
  return res;
}

GammaMaps build_gammas(const HopfStructure& h) {
  const GData g(*h.alg);
  const std::size_t n = g.n, nn = g.nn;
  GammaMaps gm;
  gm.k = build_comodule(ComoduleKind::Trivial, h, "1");
  gm.vv = tensor_comodule({build_comodule(ComoduleKind::DualFundamental, h, "v"),
                           build_comodule(ComoduleKind::Fundamental, h, "v")});
  gm.ww = tensor_comodule({build_comodule(ComoduleKind::DualFundamental, h, "w"),
                           build_comodule(ComoduleKind::Fundamental, h, "w")});
  for (const char* tag : {"V", "W"}) {
    auto& out = std::string(tag) == "V" ? gm.v : gm.w;
    const std::string s = std::string("^") + tag;
    out.resize(6);
    out[1] = right_map(g, "gamma_1" + s, nn, 1);
    out[2] = right_map(g, "gamma_2" + s, nn, 1);
    out[3] = right_map(g, "gamma_3" + s, nn, nn);
    out[4] = right_map(g, "gamma_4" + s, 1, nn);
    out[5] = right_map(g, "gamma_5" + s, 1, nn);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t r = g.ix(i, j);
        out[1].at(r, 0) = g.c(delta(i, j));
        out[2].at(r, 0) = g.u[i][j];
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) out[3].at(r, g.ix(k, l)) = g.uBt[i][l].scaled(g.Binv(j, k));
        out[4].at(0, r) = g.c(g.AtB(i, j));
        out[5].at(0, r) = g.AuBt[i][j];
      }
  }
  gm.g6 = right_map(g, "gamma_6", 1, 1);
  gm.g6.at(0, 0) = g.L - g.one;
  gm.g7 = right_map(g, "gamma_7", nn, nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) gm.g7.at(g.ix(i, j), g.ix(k, l)) = g.g7(i, j, k, l);
  return gm;
}

CheckReport gamma_comodule_suite(const HopfStructure& h) {
  CheckReport rep;
  rep.suite = "gamma comodule maps";
  const GammaMaps gm = build_gammas(h);
  for (int t = 0; t < 2; ++t) {
    const auto& m = t == 0 ? gm.v : gm.w;
    const Comodule& U = t == 0 ? gm.vv : gm.ww;
    const std::vector<std::pair<Comodule, Comodule>> ends = {{U, gm.k}, {U, gm.k}, {U, U}, {gm.k, U}, {gm.k, U}};
    for (int i = 1; i <= 5; ++i)
      rep.merge(check_comodule_map(h, {m[i].name, ends[i - 1].first, ends[i - 1].second, m[i]}), "comodule map: ");
  }
  rep.merge(check_comodule_map(h, {"gamma_6", gm.k, gm.k, gm.g6}), "comodule map: ");
  rep.merge(check_comodule_map(h, {"gamma_7", gm.vv, gm.ww, gm.g7}), "comodule map: ");
  return rep;
}

CheckReport gamma_identity_suite(const HopfStructure& h, const YDResolution& res) {
  CheckReport rep;
  rep.suite = "gamma identities";
  const GammaMaps gm = build_gammas(h);
  const PresentedAlgebra& A = *h.alg;
  const std::size_t nn = gm.vv.dim();

  // "ga gb" is the composite ga o gb, i.e. then(gb, ga).
  auto eq = [&](const std::string& label, const FreeModuleMap& lhs, const FreeModuleMap& rhs) {
    const auto r = compare_module_maps(label, lhs, rhs);
    rep.add("identity " + label, r.passed(), r.passed() ? "" : r.items.front().witness);
  };
  for (int t = 0; t < 2; ++t) {
    const auto& m = t == 0 ? gm.v : gm.w;
    const std::string U = t == 0 ? "V" : "W";
    eq("g1 g3 = g2 (" + U + ")", then(m[3], m[1]), m[2]);
    eq("g3 g4 = g5 (" + U + ")", then(m[4], m[3]), m[5]);
    eq("g3 g5 = g4 + g4 g6 (" + U + ")", then(m[5], m[3]), m[4] + then(gm.g6, m[4]));
    eq("g2 g3 = g1 + g6 g1 (" + U + ")", then(m[3], m[2]), m[1] + then(m[1], gm.g6));
  }
  eq("g1V g4V = g1W g4W", then(gm.v[4], gm.v[1]), then(gm.w[4], gm.w[1]));
  eq("g2V g4V = g1W g5W", then(gm.v[4], gm.v[2]), then(gm.w[5], gm.w[1]));
  eq("g7 g4V = g4W g6", then(gm.v[4], gm.g7), then(gm.g6, gm.w[4]));
  eq("g7 g5V = g5W g6", then(gm.v[5], gm.g7), then(gm.g6, gm.w[5]));
  eq("g2V g3V = g1V + g1W g7", then(gm.v[3], gm.v[2]), gm.v[1] + then(gm.g7, gm.w[1]));
  eq("g7 g3V = g3W g7", then(gm.v[3], gm.g7), then(gm.g7, gm.w[3]));
  eq("g6 g2V = g2W g7", then(gm.v[2], gm.g6), then(gm.g7, gm.w[2]));

  // Second route: the resolution maps assembled from the gammas.
  const auto id = identity_module_map(A, nn, ModuleSide::Right);
  const auto neg = [](const FreeModuleMap& m) { return scaled(m, -1); };
  const auto w12 = gm.w[1] - gm.w[2];
  const auto v21 = gm.v[2] - gm.v[1];
  const auto nw1 = neg(gm.w[1]);
  const auto nidw3 = neg(id) - gm.w[3];
  const auto idv3 = id + gm.v[3];
  const auto w54 = gm.w[5] - gm.w[4];
  const auto v45 = gm.v[4] - gm.v[5];
  const auto R = ModuleSide::Right;
  const auto a1 = block_map("psi_1 from gammas", A, R, {1, nn}, {1}, {{&gm.g6}, {&w12}});
  const auto a2 = block_map("psi_2 from gammas", A, R, {nn, nn}, {1, nn}, {{&v21, &gm.g7}, {&nw1, &nidw3}});
  const auto a3 = block_map("psi_3 from gammas", A, R, {nn, 1}, {nn, nn}, {{&idv3, &gm.g7}, {&gm.v[4], &w54}});
  const auto a4 = block_map("psi_4 from gammas", A, R, {1}, {nn, 1}, {{&v45, &gm.g6}});
  const std::vector<const FreeModuleMap*> assembled = {&a1, &a2, &a3, &a4};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto r = compare_module_maps("psi_" + std::to_string(i + 1), *assembled[i], res.complex.maps[i]);
    rep.add("psi_" + std::to_string(i + 1) + " = gamma assembly", r.passed(),
            r.passed() ? "" : r.items.front().name + ": " + r.items.front().witness);
  }
  return rep;
}

CheckReport yd_morphism_suite(const HopfStructure& h, const YDResolution& res) {
  CheckReport rep;
  rep.suite = "YD morphisms";
  for (std::size_t i = 0; i < res.complex.maps.size(); ++i) {
    const Comodule src = direct_sum(res.summands[i + 1], "P" + std::to_string(i + 1));
    const Comodule dst = direct_sum(res.summands[i], "P" + std::to_string(i));
    rep.merge(check_yd_morphism(h, res.complex.maps[i], src, dst), res.complex.maps[i].name + ": ");
  }
  return rep;
}

// ---------------------------------------------------------------- left complexes

Complex build_left_resolution(const HopfStructure& h) {
  const GData g(*h.alg);
  const std::size_t n = g.n, nn = g.nn;
  Complex cx;
  cx.name = "left resolution phi over " + h.alg->name();
  cx.alg = h.alg.get();
  cx.side = ModuleSide::Left;
  cx.augmentation = h.counit;

  // phi_1 : k + V*V -> k
  FreeModuleMap f1 = left_map(g, "phi_1", 1 + nn, 1);
  f1.at(0, 0) = g.L - g.one;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f1.at(1 + g.ix(i, j), 0) = g.c(delta(j, i)) - g.u[j][i];

  // phi_2 : W*W + V*V -> k + V*V
  FreeModuleMap f2 = left_map(g, "phi_2", 2 * nn, 1 + nn);
  // phi_3 : W*W + k -> W*W + V*V
  FreeModuleMap f3 = left_map(g, "phi_3", nn + 1, 2 * nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t w = g.ix(i, j), v = nn + g.ix(i, j);
      f2.at(w, 0) = g.u[j][i] - g.c(delta(j, i));
      f2.at(v, 0) = g.c(-delta(j, i));
      f3.at(nn, w) = g.c(g.ABt(j, i));
      f3.at(nn, nn + w) = g.AtuB[j][i] - g.c(g.ABt(j, i));
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const LocalizedElement t7 = g.g7(k, l, i, j);  // (1/lambda)(B^tA^t)_ki (BA)_jl D - delta
          f2.at(w, 1 + g.ix(k, l)) = t7;
          f2.at(v, 1 + g.ix(k, l)) = g.c(-delta(i, k) * delta(j, l)) - g.Atu[l][i].scaled(g.Ainv(k, j));
          f3.at(w, g.ix(k, l)) = g.c(delta(i, k) * delta(j, l)) + g.Atu[l][i].scaled(g.Ainv(k, j));
          f3.at(w, nn + g.ix(k, l)) = t7;
        }
    }

  // phi_4 : k -> W*W + k
  FreeModuleMap f4 = left_map(g, "phi_4", 1, nn + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f4.at(0, g.ix(i, j)) = g.c(g.ABt(j, i)) - g.AtuB[j][i];
  f4.at(0, nn) = g.L - g.one;

  cx.maps = {f1, f2, f3, f4};
  return cx;
}

Complex dualize_resolution(const HopfStructure& h) {
  const GData g(*h.alg);
  const std::size_t n = g.n, nn = g.nn;
  Complex cx;
  cx.name = "transposed resolution psi^t over " + h.alg->name();
  cx.alg = h.alg.get();
  cx.side = ModuleSide::Left;

  // psi^t_4 : k + V*V -> k
  FreeModuleMap t4 = left_map(g, "psi^t_4", 1 + nn, 1);
  t4.at(0, 0) = g.L - g.one;
  // psi^t_3 : W*W + V*V -> k + V*V
  FreeModuleMap t3 = left_map(g, "psi^t_3", 2 * nn, 1 + nn);
  // psi^t_2 : W*W + k -> W*W + V*V
  FreeModuleMap t2 = left_map(g, "psi^t_2", nn + 1, 2 * nn);
  // psi^t_1 : k -> W*W + k
  FreeModuleMap t1 = left_map(g, "psi^t_1", 1, nn + 1);
  t1.at(0, nn) = g.L - g.one;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t w = g.ix(i, j), v = nn + g.ix(i, j);
      t4.at(1 + w, 0) = g.c(g.AtB(j, i)) - g.AuBt[j][i];
      t3.at(w, 0) = g.AuBt[j][i] - g.c(g.AtB(j, i));
      t3.at(v, 0) = g.c(g.AtB(j, i));
      t2.at(nn, w) = g.c(-delta(i, j));
      t2.at(nn, nn + w) = g.u[j][i] - g.c(delta(j, i));
      t1.at(0, w) = g.c(delta(j, i)) - g.u[j][i];
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const LocalizedElement t7 = g.g7(k, l, i, j);
          t3.at(w, 1 + g.ix(k, l)) = t7;
          t3.at(v, 1 + g.ix(k, l)) = g.c(delta(i, k) * delta(j, l)) + g.uBt[l][i].scaled(g.Binv(k, j));
          t2.at(w, g.ix(k, l)) = g.c(-delta(i, k) * delta(j, l)) - g.uBt[l][i].scaled(g.Binv(k, j));
          t2.at(w, nn + g.ix(k, l)) = t7;
        }
    }
  cx.maps = {t4, t3, t2, t1};
  return cx;
}

TwistResult build_twist_chainmap(const HopfStructure& h, const Complex& dual, const Complex& left) {
  const GData g(*h.alg);
  const std::size_t n = g.n, nn = g.nn;
  const PresentedAlgebra& A = g.alg;
  TwistResult tr;
  const ScalarMatrix pl = g.Ainv * g.At, pr = g.B * g.Bt.inverse();
  const LocalizedElement li = A.loc_power(-1);
  tr.nu = map_from_matrix("nu", A, A, (pl * g.u) * pr, g.L, li, Variance::Homomorphism);
  tr.nu_inv = map_from_matrix("nu^-1", A, A, (pl.inverse() * g.u) * pr.inverse(), g.L, li, Variance::Homomorphism);
  auto nu = std::make_shared<const AlgebraMap>(tr.nu);
  auto nu_inv = std::make_shared<const AlgebraMap>(tr.nu_inv);

  CheckReport& rep = tr.report;
  rep.suite = "twist chain map psi^t -> phi";
  rep.merge(map_respects_relations(tr.nu), "nu: ");
  rep.merge(compare_on_generators("nu o nu^-1 = id", compose(tr.nu, tr.nu_inv), identity_map(A)));
  rep.merge(compare_on_generators("nu^-1 o nu = id", compose(tr.nu_inv, tr.nu), identity_map(A)));
  {
    const Character eta = compose_character(h.counit, tr.nu, "eps o nu");
    const Character expect = character_from_matrix("eta", A, pl * pr, 1);
    rep.merge(compare_on_generators("eps o nu = eta", eta, expect));
  }

  auto twisted = [&](const std::string& name, std::size_t rank) {
    FreeModuleMap m(name, A, ModuleSide::Left, rank, rank);
    m.twist = nu;
    return m;
  };
  // Block (i, j) -> (p, q) with coefficient sign * B_pi A_qj.
  auto fill_v = [&](FreeModuleMap& m, std::size_t off, const Scalar& sign) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q)
            m.at(off + g.ix(i, j), off + g.ix(p, q)) = g.c(sign * g.B(p, i) * g.A(q, j));
  };
  FreeModuleMap f0 = twisted("f_0", 1), f1 = twisted("f_1", 1 + nn), f2 = twisted("f_2", 2 * nn),
                f3 = twisted("f_3", nn + 1), f4 = twisted("f_4", 1);
  f0.at(0, 0) = g.one;
  f1.at(0, 0) = g.one;
  fill_v(f1, 1, 1);
  fill_v(f2, 0, 1);
  fill_v(f2, nn, -1);
  fill_v(f3, 0, -1);
  f3.at(nn, nn) = g.c(-1);
  f4.at(0, 0) = g.c(-1);
  tr.f = {"f", {f0, f1, f2, f3, f4}};
  rep.merge(verify_chain_map(tr.f, dual, left));

  tr.f_inv.name = "f^-1";
  for (std::size_t i = 0; i < tr.f.components.size(); ++i) {
    const auto& fi = tr.f.components[i];
    FreeModuleMap inv = inverse_module_map(fi, nu_inv);
    inv.name = fi.name + "^-1";
    const auto id = identity_module_map(A, fi.source_rank, ModuleSide::Left);
    rep.merge(compare_module_maps(fi.name + " then inverse = id", then(fi, inv), id));
    rep.merge(compare_module_maps("inverse then " + fi.name + " = id", then(inv, fi), id));
    tr.f_inv.components.push_back(std::move(inv));
  }
  return tr;
}

// ---------------------------------------------------------------- SL_q and the cone

Complex build_slq_resolution(const PresentedAlgebra& alg) {
  if (alg.kind() != AlgebraKind::SLq && alg.kind() != AlgebraKind::SLqLaurent)
    throw Error(ErrorCode::InvalidArgument, "SL_q resolution needs an SL_q algebra");
  const Scalar q = alg.q(), qi = Scalar(1) / q;
  const auto a = alg.gen(0), b = alg.gen(1), c = alg.gen(2), d = alg.gen(3);
  const LocalizedElement one = alg.one();
  auto s = [](const Scalar& x) { return LocalizedElement(x); };
  Complex cx;
  cx.name = "resolution of k over " + alg.name();
  cx.alg = &alg;
  cx.side = ModuleSide::Right;

  FreeModuleMap p1("phi_1", alg, ModuleSide::Right, 4, 1);
  p1.at(0, 0) = a - one;
  p1.at(1, 0) = b;
  p1.at(2, 0) = c;
  p1.at(3, 0) = d - one;

  FreeModuleMap p2("phi_2", alg, ModuleSide::Right, 4, 4);
  p2.at(0, 0) = one;
  p2.at(0, 2) = b.scaled(-qi);
  p2.at(0, 3) = a;
  p2.at(1, 0) = b;
  p2.at(1, 1) = one - a.scaled(q);
  p2.at(2, 2) = one - d.scaled(qi);
  p2.at(2, 3) = c;
  p2.at(3, 0) = d;
  p2.at(3, 1) = c.scaled(-q);
  p2.at(3, 3) = one;

  FreeModuleMap p3("phi_3", alg, ModuleSide::Right, 1, 4);
  p3.at(0, 0) = s(-q) + d.scaled(qi);
  p3.at(0, 1) = -c;
  p3.at(0, 2) = -b;
  p3.at(0, 3) = s(-qi) + a.scaled(q);

  cx.maps = {p1, p2, p3};
  cx.augmentation = character_from_matrix("eps", alg, ScalarMatrix::identity(2), 1);
  cx.labels = {{"1"}, {"v11", "v12", "v21", "v22"}, {"w11", "w12", "w21", "w22"}, {"1"}};
  return cx;
}

Complex mapping_cone(const std::string& name, const Complex& x, const Complex& y, const ChainMap& f) {
  const auto rx = x.ranks(), ry = y.ranks();
  const std::size_t k = x.maps.size();
  if (y.maps.size() != k || f.components.size() != k + 1)
    throw Error(ErrorCode::InvalidArgument, "cone needs complexes and chain map of equal length");
  const PresentedAlgebra& A = *x.alg;
  Complex cx;
  cx.name = name;
  cx.alg = x.alg;
  cx.side = x.side;
  cx.augmentation = y.augmentation;
  std::vector<FreeModuleMap> neg_dx, neg_f;
  for (const auto& m : x.maps) neg_dx.push_back(scaled(m, -1));
  for (const auto& m : f.components) neg_f.push_back(scaled(m, -1));
  // cone_n = X_{n-1} + Y_n; differential cone_n -> cone_{n-1}.
  for (std::size_t nidx = 1; nidx <= k + 1; ++nidx) {
    std::vector<std::size_t> src, dst;
    const bool src_x = true, src_y = nidx <= k;
    const bool dst_x = nidx >= 2;
    if (src_x) src.push_back(rx[nidx - 1]);
    if (src_y) src.push_back(ry[nidx]);
    if (dst_x) dst.push_back(rx[nidx - 2]);
    dst.push_back(ry[nidx - 1]);
    std::vector<std::vector<const FreeModuleMap*>> blocks;
    {
      std::vector<const FreeModuleMap*> row;
      if (dst_x) row.push_back(&neg_dx[nidx - 2]);
      row.push_back(&neg_f[nidx - 1]);
      blocks.push_back(row);
    }
    if (src_y) {
      std::vector<const FreeModuleMap*> row;
      if (dst_x) row.push_back(nullptr);
      row.push_back(&y.maps[nidx - 1]);
      blocks.push_back(row);
    }
    cx.maps.push_back(block_map("cone_d" + std::to_string(nidx), A, x.side, src, dst, blocks));
  }
  return cx;
}

ConeResult laurent_cone(const Scalar& q, int degree_bound, const std::filesystem::path& cache_dir) {
  AlgebraSpec spec;
  spec.kind = AlgebraKind::SLqLaurent;
  spec.q = q;
  spec.degree_bound = degree_bound;
  spec.cache_dir = cache_dir;
  ConeResult r;
  r.alg = build_presented(spec);
  const PresentedAlgebra& A = *r.alg;
  r.phi = build_slq_resolution(A);
  r.phi.augmentation = character_from_matrix("eps", A, ScalarMatrix::identity(2), 1);
  const LocalizedElement zm1 = A.loc_power(1) - A.one();
  r.f.name = "z - 1";
  for (std::size_t rank : r.phi.ranks()) {
    FreeModuleMap m("(z-1)", A, ModuleSide::Right, rank, rank);
    for (std::size_t i = 0; i < rank; ++i) m.at(i, i) = zm1;
    r.f.components.push_back(std::move(m));
  }
  r.cone = mapping_cone("cone of z - 1 over " + A.name(), r.phi, r.phi, r.f);
  r.report.suite = "Laurent cone";
  r.report.merge(is_complex(r.phi), "phi: ");
  r.report.merge(verify_chain_map(r.f, r.phi, r.phi), "z - 1: ");
  r.report.merge(is_complex(r.cone), "cone: ");
  return r;
}

// ---------------------------------------------------------------- GL_q(2)

GlqComplexes build_glq_complexes(const Scalar& q, int degree_bound, const std::filesystem::path& cache_dir) {
  AlgebraSpec spec;
  spec.kind = AlgebraKind::GLq;
  spec.q = q;
  spec.degree_bound = degree_bound;
  spec.cache_dir = cache_dir;
  GlqComplexes out;
  out.alg = build_presented(spec);
  const PresentedAlgebra& A = *out.alg;
  const HopfStructure h = build_hopf(out.alg);
  const YDResolution res = build_yd_resolution(h);
  const auto R = ModuleSide::Right;
  const std::vector<std::size_t> p1_perm = {1, 2, 3, 4, 0};

  out.c2 = res.complex;
  out.c2.name = "YD resolution over GL_q(2), P1 = W*W + k";
  out.c2.maps[0] = permuted(res.complex.maps[0], p1_perm, {});
  out.c2.maps[1] = permuted(res.complex.maps[1], {}, p1_perm);
  out.c2.labels[1] = {"w11", "w12", "w21", "w22", "1"};

  const Scalar qi = Scalar(1) / q;
  const auto a = A.gen(0), b = A.gen(1), c = A.gen(2), d = A.gen(3);
  const LocalizedElement L = A.loc_power(1), Li = A.loc_power(-1), one = A.one();
  const auto mul = [&](const LocalizedElement& x, const LocalizedElement& y) { return A.mul(x, y); };
  const auto s = [](const Scalar& x) { return LocalizedElement(x); };
  const LocalizedElement aLi = mul(a, Li), bLi = mul(b, Li);
  enum { V11, V12, V21, V22 };
  enum { W11 = 4, W12, W21, W22 };

  // psi-bar_1 : W*W + k -> k
  FreeModuleMap b1("psibar_1", A, R, 5, 1);
  b1.at(0, 0) = one - aLi;
  b1.at(1, 0) = -bLi;
  b1.at(2, 0) = -c;
  b1.at(3, 0) = one - d;
  b1.at(4, 0) = L - one;

  // psi-bar_2 : V*V + W*W -> W*W + k
  FreeModuleMap b2("psibar_2", A, R, 8, 5);
  const std::size_t K1 = 4;
  b2.at(V11, K1) = aLi - one;
  b2.at(V12, K1) = bLi;
  b2.at(V21, K1) = c;
  b2.at(V22, K1) = d - one;
  for (std::size_t i = 0; i < 4; ++i) b2.at(i, i) = L - one;
  b2.at(W11, 0) = s(-1);
  b2.at(W11, 2) = bLi.scaled(qi);
  b2.at(W11, 3) = -aLi;
  b2.at(W12, 0) = -bLi;
  b2.at(W12, 1) = aLi.scaled(q) - one;
  b2.at(W21, 2) = d.scaled(qi) - one;
  b2.at(W21, 3) = -c;
  b2.at(W22, 0) = -d;
  b2.at(W22, 1) = c.scaled(q);
  b2.at(W22, 3) = s(-1);

  // psi-bar_3 : V*V + k -> V*V + W*W
  FreeModuleMap b3("psibar_3", A, R, 5, 8);
  b3.at(V11, V11) = one;
  b3.at(V11, V21) = bLi.scaled(-qi);
  b3.at(V11, V22) = aLi;
  b3.at(V12, V11) = bLi;
  b3.at(V12, V12) = one - aLi.scaled(q);
  b3.at(V21, V21) = one - d.scaled(qi);
  b3.at(V21, V22) = c;
  b3.at(V22, V11) = d;
  b3.at(V22, V12) = c.scaled(-q);
  b3.at(V22, V22) = one;
  for (std::size_t i = 0; i < 4; ++i) b3.at(i, 4 + i) = L - one;
  b3.at(4, W11) = s(q) - d.scaled(qi);
  b3.at(4, W12) = c;
  b3.at(4, W21) = bLi;
  b3.at(4, W22) = s(qi) - aLi.scaled(q);

  // psi-bar_4 : k -> V*V + k
  FreeModuleMap b4("psibar_4", A, R, 1, 5);
  b4.at(0, V11) = s(-q) + d.scaled(qi);
  b4.at(0, V12) = -c;
  b4.at(0, V21) = -bLi;
  b4.at(0, V22) = s(-qi) + aLi.scaled(q);
  b4.at(0, 4) = L - one;

  out.c3.name = "simplified resolution over GL_q(2)";
  out.c3.alg = &A;
  out.c3.side = R;
  out.c3.augmentation = h.counit;
  out.c3.maps = {b1, b2, b3, b4};
  out.c3.labels = out.c2.labels;

  // g_i : c2 -> c3, rows are source basis vectors.
  FreeModuleMap g0("g_0", A, R, 1, 1);
  g0.at(0, 0) = one;
  FreeModuleMap g1("g_1", A, R, 5, 5);
  g1.at(0, 0) = L;
  g1.at(0, 4) = s(-1);
  g1.at(1, 1) = L;
  g1.at(2, 2) = one;
  g1.at(3, 3) = one;
  g1.at(4, 4) = one;
  FreeModuleMap g2("g_2", A, R, 8, 8);
  g2.at(V11, V11) = L;
  g2.at(V12, V12) = L;
  g2.at(V21, V21) = one;
  g2.at(V22, V22) = one;
  g2.at(W11, W11) = L;
  g2.at(W12, W12) = mul(L, L);
  g2.at(W21, W21) = one;
  g2.at(W22, W22) = L;
  g2.at(W12, V12) = L;
  g2.at(W22, V22) = one;
  FreeModuleMap g3("g_3", A, R, 5, 5);
  g3.at(V11, V11) = L;
  g3.at(V12, V12) = mul(L, L);
  g3.at(V21, V21) = one;
  g3.at(V22, V22) = L;
  g3.at(4, 4) = L;
  g3.at(4, V12) = mul(c, L);
  g3.at(4, V22) = a.scaled(-q);
  FreeModuleMap g4("g_4", A, R, 1, 1);
  g4.at(0, 0) = L;
  out.g = {"g", {g0, g1, g2, g3, g4}};

  CheckReport& rep = out.report;
  rep.suite = "GL_q(2) complexes";
  rep.merge(is_complex(out.c2), "c2: ");
  rep.merge(is_complex(out.c3), "c3: ");
  rep.merge(verify_chain_map(out.g, out.c2, out.c3));
  out.g_inv.name = "g^-1";
  for (const auto& gi : out.g.components) {
    FreeModuleMap inv = inverse_module_map(gi);
    inv.name = gi.name + "^-1";
    const auto id = identity_module_map(A, gi.source_rank, R);
    rep.merge(compare_module_maps(gi.name + " then inverse = id", then(gi, inv), id));
    rep.merge(compare_module_maps("inverse then " + gi.name + " = id", then(inv, gi), id));
    out.g_inv.components.push_back(std::move(inv));
  }
  rep.merge(verify_chain_map(out.g_inv, out.c3, out.c2), "inverse: ");
  return out;
}

// ---------------------------------------------------------------- exactness probe

namespace {

using Coord = std::pair<std::size_t, LocTerm>;

struct Indexer {
  std::map<Coord, std::size_t> index;
  std::vector<Coord> coords;
  std::size_t at(const Coord& c) {
    auto [it, inserted] = index.try_emplace(c, coords.size());
    if (inserted) coords.push_back(c);
    return it->second;
  }
};

SparseVec to_sparse(const std::map<std::size_t, Scalar>& m) {
  SparseVec v;
  v.reserve(m.size());
  for (const auto& [i, c] : m)
    if (c != 0) v.emplace_back(i, c);
  return v;
}

// Basis (slot, v L^k) of a free module of the given rank in filtration degree <= bound.
std::vector<Coord> truncated_basis(const PresentedAlgebra& A, std::size_t rank, int bound, int window) {
  std::vector<Coord> out;
  if (bound < 0) return out;
  const auto& order = A.order();
  std::vector<Word> words;
  for (const auto& w : enumerate_normal_words(A.rewrite(), bound)) {
    if (A.localizer() && w.find(static_cast<char>(*A.localizer())) != Word::npos) continue;
    words.push_back(w);
  }
  const int wl = A.localizer() ? order.weight(letter(*A.localizer())) : 0;
  for (std::size_t r = 0; r < rank; ++r)
    for (const auto& w : words) {
      const int base = order.weight(w);
      if (!A.localizer()) {
        out.push_back({r, {w, 0}});
        continue;
      }
      for (int k = -window; k <= 0 || base + k * wl <= bound; ++k)
        if (base + std::abs(k) * wl <= bound) out.push_back({r, {w, k}});
    }
  return out;
}

// Image of the basis vector e_slot (x) term under m, accumulated into coordinates.
std::map<std::size_t, Scalar> image_of(const FreeModuleMap& m, const Coord& b, Indexer& idx) {
  const PresentedAlgebra& A = *m.alg;
  const LocalizedElement x = LocalizedElement::term(b.second.first, b.second.second);
  const LocalizedElement tx = m.twist ? m.twist->apply(x) : x;
  std::map<std::size_t, Scalar> out;
  for (std::size_t c = 0; c < m.target_rank; ++c) {
    const auto& e = m.at(b.first, c);
    if (e.is_zero()) continue;
    const LocalizedElement y = m.side == ModuleSide::Right ? A.mul(e, tx) : A.mul(tx, e);
    for (const auto& [t, coef] : y.terms()) {
      Scalar& slot = out[idx.at({c, t})];
      slot += coef;
    }
  }
  return out;
}

std::vector<LocalizedElement> as_vector(std::size_t rank, const std::vector<Coord>& basis, const SparseVec& coeffs) {
  std::vector<LocalizedElement> v(rank);
  for (const auto& [i, c] : coeffs) v[basis[i].first].add_term(basis[i].second, c);
  return v;
}

std::string vector_string(const PresentedAlgebra& A, const std::vector<LocalizedElement>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + A.to_string(v[i]);
  return s + ")";
}

struct LiftSpace {
  std::vector<Coord> basis;
  Echelon ech;
};

// Images of every basis vector of m's source in degree <= bound, coordinates in idx.
LiftSpace lift_space(const FreeModuleMap& m, const ProbeOptions& opt, Indexer& idx) {
  LiftSpace ls;
  ls.basis = truncated_basis(*m.alg, m.source_rank, opt.weight_bound, opt.laurent_window);
  for (std::size_t t = 0; t < ls.basis.size(); ++t) ls.ech.insert(to_sparse(image_of(m, ls.basis[t], idx)), {{t, 1}});
  return ls;
}

}  // namespace

std::optional<std::vector<LocalizedElement>> lift_through(const FreeModuleMap& m, const std::vector<LocalizedElement>& y,
                                                          const ProbeOptions& opt) {
  Indexer idx;
  std::map<std::size_t, Scalar> target;
  for (std::size_t c = 0; c < y.size(); ++c)
    for (const auto& [t, coef] : y[c].terms()) target[idx.at({c, t})] += coef;
  const LiftSpace ls = lift_space(m, opt, idx);
  const auto sol = ls.ech.solve(to_sparse(target));
  if (!sol) return std::nullopt;
  auto pre = as_vector(m.source_rank, ls.basis, *sol);
  if (apply_module_map(m, pre) != y) throw Error(ErrorCode::InvalidArgument, "lift verification failed for " + m.name);
  return pre;
}

ProbeResult probe_exactness(const Complex& c, const ProbeOptions& opt) {
  ProbeResult res;
  res.report.suite = "exactness probe of " + c.name;
  const PresentedAlgebra& A = *c.alg;
  const auto ranks = c.ranks();
  const int cycle_bound = opt.weight_bound - opt.slack;
  for (std::size_t p = 0; p < ranks.size(); ++p) {
    ProbePosition pos;
    pos.position = p;
    if (p == 0 && !c.augmentation) continue;
    Indexer dom;  // coordinates of C_p
    const auto basis = truncated_basis(A, ranks[p], cycle_bound, opt.laurent_window);
    pos.domain_dim = basis.size();
    for (const auto& b : basis) dom.at(b);

    // Kernel of the outgoing map on the truncated basis.
    Indexer cod;
    Echelon ech;
    std::vector<SparseVec> cycles;
    for (std::size_t t = 0; t < basis.size(); ++t) {
      std::map<std::size_t, Scalar> img;
      if (p == 0) {
        const Scalar e = c.augmentation->apply_term(basis[t].second);
        if (e != 0) img[0] = e;
      } else {
        img = image_of(c.maps[p - 1], basis[t], cod);
      }
      auto k = ech.insert(to_sparse(img), {{t, 1}});
      if (k) cycles.push_back(std::move(*k));
    }
    pos.cycles_found = cycles.size();

    if (p < c.maps.size() && !cycles.empty()) {
      const FreeModuleMap& d = c.maps[p];
      const LiftSpace ls = lift_space(d, opt, dom);
      for (const auto& z : cycles) {
        SparseVec zc;
        {
          std::map<std::size_t, Scalar> m;
          for (const auto& [t, coef] : z) m[dom.at(basis[t])] += coef;
          zc = to_sparse(m);
        }
        const auto sol = ls.ech.solve(zc);
        const auto cyc = as_vector(ranks[p], basis, z);
        bool lifted = false;
        if (sol) lifted = apply_module_map(d, as_vector(d.source_rank, ls.basis, *sol)) == cyc;
        if (lifted)
          ++pos.cycles_lifted;
        else if (pos.unlifted.size() < 3)
          pos.unlifted.push_back(vector_string(A, cyc));
      }
    } else if (!cycles.empty()) {
      for (std::size_t i = 0; i < cycles.size() && i < 3; ++i)
        pos.unlifted.push_back(vector_string(A, as_vector(ranks[p], basis, cycles[i])));
    }
    res.report.add("position " + std::to_string(p) + ": " + std::to_string(pos.cycles_lifted) + "/" +
                       std::to_string(pos.cycles_found) + " cycles lift",
                   pos.cycles_lifted == pos.cycles_found, pos.unlifted.empty() ? "" : pos.unlifted.front());
    res.positions.push_back(std::move(pos));
  }
  return res;
}

}  // namespace qg
