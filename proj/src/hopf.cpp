#include "qg/hopf.hpp"

#include "qg/errors.hpp"
#include "qg/invariants.hpp"

namespace qg {

namespace {

LocalizedElement elem(const LocTerm& t) { return LocalizedElement::term(t.first, t.second); }

LocalizedElement gen_elem(const PresentedAlgebra& alg, int g) { return g < 0 ? alg.loc_power(-1) : alg.gen(g); }

bool square_kind(AlgebraKind k) { return k == AlgebraKind::GAB || k == AlgebraKind::GLq || k == AlgebraKind::SLq; }

// Compares an image matrix of a map with an expected element matrix.
void compare_u_images(CheckReport& rep, const std::string& what, const AlgebraMap& f, const ElemMatrix& expected) {
  const PresentedAlgebra& s = *f.source;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      const int g = s.u(i, j);
      const LocalizedElement diff = f.images[g] - expected[i][j];
      rep.add(what + " on " + s.gen_names()[g], diff.is_zero(), f.target.str(diff));
    }
}

ElemMatrix conj_matrix(const PresentedAlgebra& alg, const ElemMatrix& x) {
  if (!alg.localizer()) return x;
  return times_element(times_element(x, alg.loc_power(-1), alg, true), alg.loc_power(1), alg, false);
}

}  // namespace

// ---------------------------------------------------------------- structure

AlgebraMap cogroupoid_antipode(const PresentedAlgebra& src, const PresentedAlgebra& dst) {
  if (dst.rows() != src.cols() || dst.cols() != src.rows())
    throw Error(ErrorCode::InvalidArgument, "antipode target has the wrong shape");
  const ScalarMatrix ax_inv = src.a().inverse();
  const ScalarMatrix& ay = src.kind() == AlgebraKind::GABCD ? src.c() : src.a();
  const ElemMatrix ut = transpose(u_matrix(dst));
  ElemMatrix img = (ax_inv * ut) * ay;
  if (src.localizer()) img = times_element(img, dst.loc_power(-1), dst, true);
  AlgebraMap s = map_from_matrix("S", src, dst, img, dst.is_localized() ? dst.loc_power(-1) : dst.one(),
                                 dst.is_localized() ? dst.loc_power(1) : dst.one(), Variance::Antihomomorphism);
  return s;
}

HopfStructure build_hopf(AlgebraPtr alg) {
  if (!square_kind(alg->kind())) throw Error(ErrorCode::InvalidArgument, alg->name() + " has no Hopf structure");
  const PresentedAlgebra& A = *alg;
  const std::size_t n = A.rows();
  HopfStructure h;
  h.alg = alg;
  h.delta.name = "Delta";
  h.delta.source = &A;
  h.delta.target = TensorRing{{&A, &A}};
  h.delta.images.assign(A.num_gens(), Tensor(2));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Tensor t(2);
      for (std::size_t k = 0; k < n; ++k)
        t.add_term({LocTerm{letter(A.u(i, k)), 0}, LocTerm{letter(A.u(k, j)), 0}}, 1);
      h.delta.images[A.u(i, j)] = t;
    }
  if (A.localizer()) {
    h.delta.images[*A.localizer()] = Tensor::pure({A.loc_power(1), A.loc_power(1)});
    h.delta.loc_inv_image = Tensor::pure({A.loc_power(-1), A.loc_power(-1)});
  }
  h.counit = character_from_matrix("eps", A, ScalarMatrix::identity(n), 1);
  h.antipode = cogroupoid_antipode(A, A);
  return h;
}

Tensor apply_delta(const HopfStructure& h, const LocalizedElement& x) { return h.delta.apply(x); }

CheckReport verify_hopf_axioms(const HopfStructure& h) {
  const PresentedAlgebra& A = *h.alg;
  CheckReport rep;
  rep.suite = "hopf axioms " + A.name();
  rep.merge(map_respects_relations(h.delta), "Delta: ");
  rep.merge(map_respects_relations(h.counit), "eps: ");
  rep.merge(map_respects_relations(h.antipode), "S: ");
  const TensorRing t3{{&A, &A, &A}};
  for (int g : generator_ids(A)) {
    const std::string lab = generator_label(A, g);
    const Tensor& d = h.delta.image(g);
    Tensor left(3), right(3);
    LocalizedElement eps_left, eps_right, s_left, s_right;
    for (const auto& [k, c] : d.terms()) {
      const Tensor d1 = h.delta.apply_term(k[0]), d2 = h.delta.apply_term(k[1]);
      for (const auto& [k1, c1] : d1.terms()) left.add_term({k1[0], k1[1], k[1]}, c * c1);
      for (const auto& [k2, c2] : d2.terms()) right.add_term({k[0], k2[0], k2[1]}, c * c2);
      eps_left.add_scaled(elem(k[1]), c * h.counit.apply_term(k[0]));
      eps_right.add_scaled(elem(k[0]), c * h.counit.apply_term(k[1]));
      s_left.add_scaled(A.mul(h.antipode.apply_term(k[0]), elem(k[1])), c);
      s_right.add_scaled(A.mul(elem(k[0]), h.antipode.apply_term(k[1])), c);
    }
    const LocalizedElement x = gen_elem(A, g);
    const LocalizedElement e1 = LocalizedElement(h.counit.image(g));
    rep.add("coassociativity on " + lab, left == right, t3.str(left - right));
    rep.add("(eps x id) Delta on " + lab, eps_left == x, A.to_string(eps_left - x));
    rep.add("(id x eps) Delta on " + lab, eps_right == x, A.to_string(eps_right - x));
    rep.add("m(S x id) Delta on " + lab, s_left == e1, A.to_string(s_left - e1));
    rep.add("m(id x S) Delta on " + lab, s_right == e1, A.to_string(s_right - e1));
  }
  return rep;
}

CheckReport commutation_check(const PresentedAlgebra& alg) {
  CheckReport rep;
  rep.suite = "commutation " + alg.name();
  if (!alg.localizer() || alg.kind() == AlgebraKind::SLqLaurent) return rep;
  const int L = *alg.localizer();
  // Relations alone, without the normality rule.
  const RewriteSystem rs = complete_truncated(alg.relations(), alg.order(), 3);
  const ScalarMatrix ba = alg.b() * alg.a(), dc = alg.d() * alg.c();
  for (std::size_t i = 0; i < alg.rows(); ++i)
    for (std::size_t j = 0; j < alg.cols(); ++j) {
      NCPoly p;
      for (std::size_t k = 0; k < alg.rows(); ++k) p.add_term(make_word({L, alg.u(k, j)}), ba(i, k));
      for (std::size_t k = 0; k < alg.cols(); ++k) p.add_term(make_word({alg.u(i, k), L}), -dc(k, j));
      const Membership m = ideal_member(p, rs);
      rep.add("(BA D u - u D DC)_" + std::to_string(i + 1) + std::to_string(j + 1), m == Membership::Yes,
              std::string(membership_name(m)) + ": " + rs.normal_form_unchecked(p).to_string(alg.gen_names()));
    }
  return rep;
}

// ---------------------------------------------------------------- convolution and windings

AlgebraMap character_as_map(const Character& chi, const PresentedAlgebra& alg) {
  AlgebraMap f;
  f.name = chi.name;
  f.source = chi.source;
  f.target = LocRing{&alg};
  for (const auto& s : chi.images) f.images.push_back(LocalizedElement(s));
  if (chi.loc_inv_image) f.loc_inv_image = LocalizedElement(*chi.loc_inv_image);
  return f;
}

Character compose_character(const Character& chi, const AlgebraMap& f, const std::string& name) {
  if (f.target.alg != chi.source) throw Error(ErrorCode::InvalidArgument, "character composed with a map into another algebra");
  Character r;
  r.name = name.empty() ? chi.name + " o " + f.name : name;
  r.source = f.source;
  for (const auto& img : f.images) r.images.push_back(chi.apply(img));
  if (f.loc_inv_image) r.loc_inv_image = chi.apply(*f.loc_inv_image);
  return r;
}

AlgebraMap winding(const HopfStructure& h, const Character& xi, Side side) {
  const PresentedAlgebra& A = *h.alg;
  AlgebraMap f;
  f.name = std::string("[") + xi.name + (side == Side::Left ? "]^l" : "]^r");
  f.source = &A;
  f.target = LocRing{&A};
  auto image = [&](const Tensor& d) {
    LocalizedElement out;
    for (const auto& [k, c] : d.terms()) {
      if (side == Side::Left)
        out.add_scaled(elem(k[1]), c * xi.apply_term(k[0]));
      else
        out.add_scaled(elem(k[0]), c * xi.apply_term(k[1]));
    }
    return out;
  };
  for (const auto& d : h.delta.images) f.images.push_back(image(d));
  if (h.delta.loc_inv_image) f.loc_inv_image = image(*h.delta.loc_inv_image);
  return f;
}

Character convolve(const HopfStructure& h, const Character& f, const Character& g) {
  Character r;
  r.name = f.name + " * " + g.name;
  r.source = h.alg.get();
  auto image = [&](const Tensor& d) {
    Scalar out = 0;
    for (const auto& [k, c] : d.terms()) out += c * f.apply_term(k[0]) * g.apply_term(k[1]);
    return out;
  };
  for (const auto& d : h.delta.images) r.images.push_back(image(d));
  if (h.delta.loc_inv_image) r.loc_inv_image = image(*h.delta.loc_inv_image);
  return r;
}

AlgebraMap convolve(const HopfStructure& h, const AlgebraMap& f, const AlgebraMap& g) {
  const PresentedAlgebra& T = *f.target.alg;
  AlgebraMap r;
  r.name = f.name + " * " + g.name;
  r.source = h.alg.get();
  r.target = f.target;
  auto image = [&](const Tensor& d) {
    LocalizedElement out;
    for (const auto& [k, c] : d.terms()) out.add_scaled(T.mul(f.apply_term(k[0]), g.apply_term(k[1])), c);
    return out;
  };
  for (const auto& d : h.delta.images) r.images.push_back(image(d));
  if (h.delta.loc_inv_image) r.loc_inv_image = image(*h.delta.loc_inv_image);
  return r;
}

AlgebraMap conjugation_by_localizer(const PresentedAlgebra& alg) {
  AlgebraMap f = identity_map(alg);
  f.name = "conj_L";
  if (!alg.localizer()) return f;
  const LocalizedElement l = alg.loc_power(1), li = alg.loc_power(-1);
  for (auto& img : f.images) img = alg.mul(alg.mul(l, img), li);
  *f.loc_inv_image = alg.mul(alg.mul(l, *f.loc_inv_image), li);
  return f;
}

// ---------------------------------------------------------------- S^2

CheckReport antipode_squared_sovereign(const HopfStructure& h) {
  const PresentedAlgebra& A = *h.alg;
  CheckReport rep;
  rep.suite = "antipode squared " + A.name();
  const ScalarMatrix a = A.a(), b = A.b(), at = a.transpose();
  const Scalar lambda = matrix_invariants(a, b).lambda;
  const AlgebraMap s2 = compose(h.antipode, h.antipode, "S^2");
  const ElemMatrix u = u_matrix(A);

  // S^2(u) = L^-1 A^-1 A^t u (A^t)^-1 A L
  const ElemMatrix form1 = conj_matrix(A, (a.inverse() * at) * u * (at.inverse() * a));
  // S^2(u) = B A^t u (A^t)^-1 B^-1
  const ScalarMatrix m = b * at;
  const ElemMatrix form2 = (m * u) * m.inverse();
  compare_u_images(rep, "S^2 = L^-1 A^-1 A^t u (A^t)^-1 A L", s2, form1);
  compare_u_images(rep, "S^2 = B A^t u (A^t)^-1 B^-1", s2, form2);
  if (A.localizer()) {
    const int L = *A.localizer();
    rep.add("S^2(L) = L", s2.images[L] == A.loc_power(1), A.to_string(s2.images[L]));
    rep.add("S^2(L^-1) = L^-1", *s2.loc_inv_image == A.loc_power(-1), A.to_string(*s2.loc_inv_image));
  }

  const Character phi = character_from_matrix("Phi", A, m, lambda);
  rep.merge(map_respects_relations(phi), "Phi: ");
  const Character phi_bar = compose_character(phi, h.antipode, "Phi o S");
  const Character phi_inv_expected = character_from_matrix("Phi^-1", A, m.inverse(), 1 / lambda);
  rep.merge(compare_on_generators("Phi o S = (B A^t)^-1", phi_bar, phi_inv_expected));
  rep.merge(compare_on_generators("Phi * (Phi o S) = eps", convolve(h, phi, phi_bar), h.counit));
  const AlgebraMap conv =
      convolve(h, convolve(h, character_as_map(phi, A), identity_map(A)), character_as_map(phi_bar, A));
  rep.merge(compare_on_generators("S^2 = Phi * id * Phi^-1", s2, conv));
  return rep;
}

// ---------------------------------------------------------------- Nakayama

NakayamaResult nakayama_G(const HopfStructure& h) {
  const PresentedAlgebra& A = *h.alg;
  if (A.kind() != AlgebraKind::GAB && A.kind() != AlgebraKind::GLq)
    throw Error(ErrorCode::InvalidArgument, "Nakayama automorphism requires a G(A,B) algebra");
  NakayamaResult r;
  r.report.suite = "nakayama " + A.name();
  CheckReport& rep = r.report;
  const ScalarMatrix a = A.a(), b = A.b(), at = a.transpose(), bt = b.transpose();
  const ScalarMatrix p = at.inverse() * a, q = bt * b.inverse();
  const ElemMatrix u = u_matrix(A);
  const LocalizedElement l = A.loc_power(1), li = A.loc_power(-1);

  r.mu = map_from_matrix("mu", A, A, (p * u) * q, l, li, Variance::Homomorphism);
  r.mu_inv = map_from_matrix("mu^-1", A, A, (p.inverse() * u) * q.inverse(), l, li, Variance::Homomorphism);
  rep.merge(map_respects_relations(r.mu), "mu: ");
  rep.merge(map_respects_relations(r.mu_inv), "mu^-1: ");
  const AlgebraMap id = identity_map(A);
  rep.merge(compare_on_generators("mu o mu^-1 = id", compose(r.mu, r.mu_inv), id));
  rep.merge(compare_on_generators("mu^-1 o mu = id", compose(r.mu_inv, r.mu), id));

  r.xi = compose_character(h.counit, r.mu, "xi");
  rep.merge(compare_on_generators("eps o mu = (A^t)^-1 A B^t B^-1", r.xi,
                                  character_from_matrix("xi", A, p * q, 1)));
  r.eta = character_from_matrix("eta", A, a.inverse() * at * b * bt.inverse(), 1);
  rep.merge(map_respects_relations(r.eta), "eta: ");
  rep.merge(compare_on_generators("eps o mu^-1 = eta", compose_character(h.counit, r.mu_inv), r.eta));

  // S^-2(u) = M^-1 u M with M = B A^t; verified as the inverse of S^2.
  const ScalarMatrix m = b * at;
  const AlgebraMap s2 = compose(h.antipode, h.antipode, "S^2");
  const AlgebraMap sm2 = map_from_matrix("S^-2", A, A, (m.inverse() * u) * m, l, li, Variance::Homomorphism);
  rep.merge(compare_on_generators("S^2 o S^-2 = id", compose(s2, sm2), id));
  rep.merge(compare_on_generators("S^-2 o S^2 = id", compose(sm2, s2), id));

  const Character eta_s = compose_character(r.eta, h.antipode, "eta S");
  const AlgebraMap lhs = compose(sm2, winding(h, eta_s, Side::Right), "S^-2 [eta S]^r");
  const AlgebraMap conj = conjugation_by_localizer(A);
  const AlgebraMap rhs = compose(conj, r.mu, "conj_L o mu");
  rep.merge(compare_on_generators("S^-2 [eta S]^r = conj_L o mu", lhs, rhs));
  for (int g : generator_ids(A)) {
    const LocalizedElement x = gen_elem(A, g);
    const LocalizedElement d = A.mul(conj.image(g), l) - A.mul(l, x);
    rep.add("conj_L(x) L = L x on " + generator_label(A, g), d.is_zero(), A.to_string(d));
  }
  if (A.kind() == AlgebraKind::GLq) {
    const AlgebraMap s2xi = compose(s2, winding(h, r.xi, Side::Left), "S^2 [xi]^l");
    rep.merge(compare_on_generators("S^2 [xi]^l = mu", s2xi, r.mu));
  }
  return r;
}

// ---------------------------------------------------------------- Galois objects

GaloisResult nakayama_galois(const ScalarMatrix& a, const ScalarMatrix& b, const ScalarMatrix& c,
                             const ScalarMatrix& d, int degree_bound, const std::filesystem::path& cache_dir) {
  GaloisResult r;
  CheckReport& rep = r.report;
  rep.suite = "galois";
  AlgebraSpec spec;
  spec.kind = AlgebraKind::GABCD;
  spec.degree_bound = degree_bound;
  spec.cache_dir = cache_dir;
  spec.a = a;
  spec.b = b;
  spec.c = c;
  spec.d = d;
  spec.name = "G(A,B|C,D)";
  r.alg = build_presented(spec);
  spec.a = c;
  spec.b = d;
  spec.c = a;
  spec.d = b;
  spec.name = "G(C,D|A,B)";
  r.opposite = build_presented(spec);
  const PresentedAlgebra& G = *r.alg;

  try {
    const auto i1 = matrix_invariants(a, b), i2 = matrix_invariants(c, d);
    rep.add("invariants match", i1.lambda == i2.lambda && i1.trace == i2.trace,
            "lambda " + to_display(i1.lambda) + " vs " + to_display(i2.lambda) + ", trace " + to_display(i1.trace) +
                " vs " + to_display(i2.trace));
  } catch (const Error& e) {
    rep.add("invariants match", false, e.what());
  }
  for (const PresentedAlgebra* alg : {r.alg.get(), r.opposite.get()}) {
    try {
      const int deg = nonzero_witness(alg->rewrite());
      rep.add(alg->name() + " nonzero up to degree " + std::to_string(deg), true);
    } catch (const Error& e) {
      rep.add(alg->name() + " nonzero", false, e.what());
    }
    rep.add(alg->name() + " localizer regular", alg->localizer_regular(), "a rule lead contains D past position 0");
  }

  const ScalarMatrix at_inv_a = a.transpose().inverse() * a;
  const ElemMatrix u = u_matrix(G);
  const LocalizedElement l = G.loc_power(1), li = G.loc_power(-1);
  r.mu = map_from_matrix("mu", G, G, (at_inv_a * u) * (d.transpose() * d.inverse()), l, li, Variance::Homomorphism);
  r.mu_prime = map_from_matrix("mu'", G, G, ((a.transpose().inverse() * b.inverse()) * u) * (d.transpose() * c), l,
                               li, Variance::Homomorphism);
  rep.merge(map_respects_relations(r.mu), "mu: ");
  rep.merge(map_respects_relations(r.mu_prime), "mu': ");
  rep.merge(compare_on_generators("sigma o mu = mu'", compose(conjugation_by_localizer(G), r.mu), r.mu_prime));
  rep.merge(commutation_check(G));

  const AlgebraMap s_ab = cogroupoid_antipode(G, *r.opposite);
  const AlgebraMap s_cd = cogroupoid_antipode(*r.opposite, G);
  rep.merge(map_respects_relations(s_ab), "S_{AB,CD}: ");
  rep.merge(map_respects_relations(s_cd), "S_{CD,AB}: ");
  const AlgebraMap ss = compose(s_cd, s_ab, "S_{CD,AB} S_{AB,CD}");
  const AlgebraMap closed = map_from_matrix("closed form", G, G,
                                            ((a.inverse() * b.transpose().inverse()) * u) * (d.transpose() * c), l, li,
                                            Variance::Homomorphism);
  rep.merge(compare_on_generators("S_{CD,AB} S_{AB,CD} = A^-1 (B^t)^-1 u D^t C", ss, closed));
  return r;
}

// ---------------------------------------------------------------- cogroupoid

CheckReport cogroupoid_suite(const std::vector<MatrixPair>& objects, int degree_bound,
                             const std::filesystem::path& cache_dir) {
  CheckReport rep;
  rep.suite = "cogroupoid";
  const std::size_t k = objects.size();
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "cogroupoid suite needs at least two objects");
  std::vector<std::vector<AlgebraPtr>> g(k, std::vector<AlgebraPtr>(k));
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      AlgebraSpec spec;
      spec.kind = AlgebraKind::GABCD;
      spec.a = objects[x].first;
      spec.b = objects[x].second;
      spec.c = objects[y].first;
      spec.d = objects[y].second;
      spec.degree_bound = degree_bound;
      spec.cache_dir = cache_dir;
      spec.name = "G(" + std::to_string(x) + "|" + std::to_string(y) + ")";
      g[x][y] = build_presented(spec);
    }
  auto name = [](std::size_t x, std::size_t y) { return std::to_string(x) + std::to_string(y); };

  // Delta^z_{x,y}: G(x|y) -> G(x|z) (x) G(z|y)
  auto delta = [&](std::size_t x, std::size_t y, std::size_t z) {
    const PresentedAlgebra& S = *g[x][y];
    const PresentedAlgebra& L = *g[x][z];
    const PresentedAlgebra& R = *g[z][y];
    TensorMap f;
    f.name = "Delta^" + std::to_string(z) + "_" + name(x, y);
    f.source = &S;
    f.target = TensorRing{{&L, &R}};
    f.images.assign(S.num_gens(), Tensor(2));
    for (std::size_t i = 0; i < S.rows(); ++i)
      for (std::size_t j = 0; j < S.cols(); ++j) {
        Tensor t(2);
        for (std::size_t m = 0; m < L.cols(); ++m)
          t.add_term({LocTerm{letter(L.u(i, m)), 0}, LocTerm{letter(R.u(m, j)), 0}}, 1);
        f.images[S.u(i, j)] = t;
      }
    f.images[*S.localizer()] = Tensor::pure({L.loc_power(1), R.loc_power(1)});
    f.loc_inv_image = Tensor::pure({L.loc_power(-1), R.loc_power(-1)});
    return f;
  };
  auto counit = [&](std::size_t x) {
    const PresentedAlgebra& S = *g[x][x];
    return character_from_matrix("eps_" + std::to_string(x), S, ScalarMatrix::identity(S.rows()), 1);
  };
  auto antipode = [&](std::size_t x, std::size_t y) {
    AlgebraMap s = cogroupoid_antipode(*g[x][y], *g[y][x]);
    s.name = "S_" + name(x, y);
    return s;
  };

  for (std::size_t x = 0; x < k; ++x) {
    rep.merge(map_respects_relations(counit(x)), counit(x).name + ": ");
    for (std::size_t y = 0; y < k; ++y) {
      try {
        nonzero_witness(g[x][y]->rewrite());
        rep.add(g[x][y]->name() + " nonzero", true);
      } catch (const Error& e) {
        rep.add(g[x][y]->name() + " nonzero", false, e.what());
      }
      rep.merge(map_respects_relations(antipode(x, y)), "S_" + name(x, y) + ": ");
      for (std::size_t z = 0; z < k; ++z) rep.merge(map_respects_relations(delta(x, y, z)), delta(x, y, z).name + ": ");
    }
  }

  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      const PresentedAlgebra& S = *g[x][y];
      const std::vector<int> ids = generator_ids(S);
      // coassociativity
      for (std::size_t z = 0; z < k; ++z)
        for (std::size_t t = 0; t < k; ++t) {
          const TensorMap d_xy_t = delta(x, y, t), d_xt_z = delta(x, t, z);
          const TensorMap d_xy_z = delta(x, y, z), d_zy_t = delta(z, y, t);
          const TensorRing ring{{g[x][z].get(), g[z][t].get(), g[t][y].get()}};
          for (int id : ids) {
            Tensor left(3), right(3);
            for (const auto& [key, c] : d_xy_t.image(id).terms()) {
              const Tensor d1 = d_xt_z.apply_term(key[0]);
              for (const auto& [k1, c1] : d1.terms()) left.add_term({k1[0], k1[1], key[1]}, c * c1);
            }
            for (const auto& [key, c] : d_xy_z.image(id).terms()) {
              const Tensor d2 = d_zy_t.apply_term(key[1]);
              for (const auto& [k2, c2] : d2.terms()) right.add_term({key[0], k2[0], k2[1]}, c * c2);
            }
            rep.add("coassociativity " + name(x, y) + " via " + std::to_string(z) + std::to_string(t) + " on " +
                        generator_label(S, id),
                    left == right, ring.str(left - right));
          }
        }
      // counit triangles
      const TensorMap dx = delta(x, y, x), dy = delta(x, y, y);
      const Character ex = counit(x), ey = counit(y);
      for (int id : ids) {
        LocalizedElement l1, r1;
        for (const auto& [key, c] : dx.image(id).terms()) l1.add_scaled(elem(key[1]), c * ex.apply_term(key[0]));
        for (const auto& [key, c] : dy.image(id).terms()) r1.add_scaled(elem(key[0]), c * ey.apply_term(key[1]));
        const LocalizedElement gx = gen_elem(S, id);
        rep.add("(eps x id) Delta " + name(x, y) + " on " + generator_label(S, id), l1 == gx, S.to_string(l1 - gx));
        rep.add("(id x eps) Delta " + name(x, y) + " on " + generator_label(S, id), r1 == gx, S.to_string(r1 - gx));
      }
      // Delta^z_{y,x} S_{x,y} = (S_{z,y} (x) S_{x,z}) flip Delta^z_{x,y}
      const AlgebraMap sxy = antipode(x, y);
      for (std::size_t z = 0; z < k; ++z) {
        const TensorMap d_yx_z = delta(y, x, z), d_xy_z = delta(x, y, z);
        const AlgebraMap szy = antipode(z, y), sxz = antipode(x, z);
        const TensorRing ring{{g[y][z].get(), g[z][x].get()}};
        for (int id : ids) {
          const Tensor lhs = d_yx_z.apply(sxy.image(id));
          Tensor rhs(2);
          for (const auto& [key, c] : d_xy_z.image(id).terms())
            rhs.add_scaled(Tensor::pure({szy.apply_term(key[1]), sxz.apply_term(key[0])}), c);
          rep.add("Delta S " + name(x, y) + " via " + std::to_string(z) + " on " + generator_label(S, id), lhs == rhs,
                  ring.str(lhs - rhs));
        }
      }
    }

  // antipode diagrams: m(S_{x,y} (x) id) Delta^y_{x,x} = eps_x 1 = m(id (x) S_{y,x}) Delta^y_{x,x}
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      const PresentedAlgebra& S = *g[x][x];
      const TensorMap d = delta(x, x, y);
      const AlgebraMap sxy = antipode(x, y), syx = antipode(y, x);
      const Character ex = counit(x);
      for (int id : generator_ids(S)) {
        LocalizedElement left, right;
        for (const auto& [key, c] : d.image(id).terms()) {
          left.add_scaled(g[y][x]->mul(sxy.apply_term(key[0]), elem(key[1])), c);
          right.add_scaled(g[x][y]->mul(elem(key[0]), syx.apply_term(key[1])), c);
        }
        const LocalizedElement e1(ex.image(id));
        rep.add("m(S_" + name(x, y) + " x id) Delta on " + generator_label(S, id), left == e1,
                g[y][x]->to_string(left - e1));
        rep.add("m(id x S_" + name(y, x) + ") Delta on " + generator_label(S, id), right == e1,
                g[x][y]->to_string(right - e1));
      }
    }
  return rep;
}

// ---------------------------------------------------------------- GL_q vs SL_q[z]

LaurentIso glq_slq_laurent_iso(const Scalar& q, int degree_bound, const std::filesystem::path& cache_dir) {
  if (q == 0) throw Error(ErrorCode::InvalidArgument, "q must be nonzero");
  LaurentIso r;
  AlgebraSpec gs;
  gs.kind = AlgebraKind::GLq;
  gs.q = q;
  gs.degree_bound = degree_bound;
  gs.cache_dir = cache_dir;
  r.glq = build_presented(gs);
  AlgebraSpec ss = gs;
  ss.kind = AlgebraKind::SLqLaurent;
  r.slqz = build_presented(ss);
  const PresentedAlgebra& G = *r.glq;
  const PresentedAlgebra& Z = *r.slqz;
  enum { A = 0, B = 1, C = 2, D = 3 };

  r.fwd.name = "fwd";
  r.fwd.source = &G;
  r.fwd.target = LocRing{&Z};
  const LocalizedElement z = Z.loc_power(1), zi = Z.loc_power(-1);
  r.fwd.images = {Z.mul(Z.gen(A), z), Z.mul(Z.gen(B), z), Z.gen(C), Z.gen(D), z};
  r.fwd.loc_inv_image = zi;

  r.bwd.name = "bwd";
  r.bwd.source = &Z;
  r.bwd.target = LocRing{&G};
  const LocalizedElement dd = G.loc_power(1), di = G.loc_power(-1);
  r.bwd.images = {G.mul(G.gen(A), di), G.mul(G.gen(B), di), G.gen(C), G.gen(D), dd};
  r.bwd.loc_inv_image = di;

  CheckReport& rep = r.report;
  rep.suite = "GL_q(2) = SL_q(2)[z^+-1]";
  rep.merge(map_respects_relations(r.fwd), "fwd: ");
  rep.merge(map_respects_relations(r.bwd), "bwd: ");
  NCPoly qdet = NCPoly::monomial(make_word({A, D})) - NCPoly::monomial(make_word({B, C}), q);
  const LocalizedElement fd = r.fwd.apply_poly(qdet) - z;
  rep.add("fwd(ad - q bc) = z", fd.is_zero(), Z.to_string(fd));
  rep.merge(compare_on_generators("bwd o fwd = id", compose(r.bwd, r.fwd), identity_map(G)));
  rep.merge(compare_on_generators("fwd o bwd = id", compose(r.fwd, r.bwd), identity_map(Z)));
  return r;
}

}  // namespace qg
