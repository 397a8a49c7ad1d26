#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qg/algebra.hpp"
#include "qg/errors.hpp"
#include "qg/report.hpp"

namespace qg {

// Target rings for generator-defined maps.
struct LocRing {
  const PresentedAlgebra* alg = nullptr;
  using Elem = LocalizedElement;
  Elem one() const { return LocalizedElement(1); }
  Elem zero() const { return LocalizedElement(); }
  Elem mul(const Elem& x, const Elem& y) const { return alg->mul(x, y); }
  bool is_zero(const Elem& x) const { return x.is_zero(); }
  std::string str(const Elem& x) const { return alg->to_string(x); }
};

struct TensorRing {
  std::vector<const PresentedAlgebra*> algs;
  using Elem = Tensor;
  Elem one() const { return Tensor::one(algs.size()); }
  Elem zero() const { return Tensor(algs.size()); }
  Elem mul(const Elem& x, const Elem& y) const { return tensor_mul(algs, x, y); }
  bool is_zero(const Elem& x) const { return x.is_zero(); }
  std::string str(const Elem& x) const { return tensor_to_string(algs, x); }
};

struct ScalarRing {
  using Elem = Scalar;
  Elem one() const { return 1; }
  Elem zero() const { return 0; }
  Elem mul(const Elem& x, const Elem& y) const { return x * y; }
  bool is_zero(const Elem& x) const { return x == 0; }
  std::string str(const Elem& x) const { return to_display(x); }
};

inline void accumulate(LocalizedElement& acc, const LocalizedElement& x, const Scalar& c) { acc.add_scaled(x, c); }
inline void accumulate(Tensor& acc, const Tensor& x, const Scalar& c) { acc.add_scaled(x, c); }
inline void accumulate(Scalar& acc, const Scalar& x, const Scalar& c) { acc += x * c; }

enum class Variance { Homomorphism, Antihomomorphism };

// Map out of a presented algebra, determined by generator images (and the
// image of the inverse localizer). Antihomomorphisms reverse products.
template <typename Ring>
struct GenMap {
  using Elem = typename Ring::Elem;

  std::string name;
  const PresentedAlgebra* source = nullptr;
  Ring target;
  Variance variance = Variance::Homomorphism;
  std::vector<Elem> images;          // one per source generator
  std::optional<Elem> loc_inv_image;  // image of L^-1

  Elem apply_word(const Word& w) const {
    Elem r = target.one();
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Elem& g = images.at(gen_at(w, i));
      r = variance == Variance::Homomorphism ? target.mul(r, g) : target.mul(g, r);
    }
    return r;
  }

  Elem apply_loc_power(int k) const {
    Elem r = target.one();
    if (k == 0) return r;
    if (!source->localizer()) throw Error(ErrorCode::InvalidArgument, "source has no localizer");
    const Elem& g = k > 0 ? images.at(*source->localizer()) : loc_inv_image.value();
    for (int i = 0; i < std::abs(k); ++i) r = target.mul(r, g);
    return r;
  }

  Elem apply_term(const LocTerm& t) const {
    const Elem v = apply_word(t.first), l = apply_loc_power(t.second);
    return variance == Variance::Homomorphism ? target.mul(v, l) : target.mul(l, v);
  }

  Elem apply(const LocalizedElement& x) const {
    Elem out = target.zero();
    for (const auto& [t, c] : x.terms()) accumulate(out, apply_term(t), c);
    return out;
  }

  Elem apply_poly(const NCPoly& p) const {
    Elem out = target.zero();
    for (const auto& [w, c] : p.terms()) accumulate(out, apply_word(w), c);
    return out;
  }

  // Image of generator g, with g == -1 meaning L^-1.
  const Elem& image(int g) const { return g < 0 ? loc_inv_image.value() : images.at(g); }
};

using AlgebraMap = GenMap<LocRing>;
using TensorMap = GenMap<TensorRing>;
using Character = GenMap<ScalarRing>;

// Generator labels of an algebra, with -1 standing for L^-1 when localized.
std::vector<int> generator_ids(const PresentedAlgebra& alg);
std::string generator_label(const PresentedAlgebra& alg, int g);

// Every defining relation, normality rule and L L^-1 = 1 = L^-1 L maps to zero.
template <typename Ring>
CheckReport map_respects_relations(const GenMap<Ring>& f) {
  CheckReport rep;
  rep.suite = f.name + " respects relations";
  const PresentedAlgebra& s = *f.source;
  for (std::size_t i = 0; i < s.relations().size(); ++i) {
    const auto img = f.apply_poly(s.relations()[i]);
    rep.add(s.relation_labels()[i], f.target.is_zero(img), f.target.str(img));
  }
  for (std::size_t i = 0; i < s.normality_relations().size(); ++i) {
    const auto img = f.apply_poly(s.normality_relations()[i]);
    rep.add("normality " + std::to_string(i + 1), f.target.is_zero(img), f.target.str(img));
  }
  if (s.localizer()) {
    const auto& l = f.images.at(*s.localizer());
    const auto& li = f.loc_inv_image.value();
    auto d1 = f.target.mul(l, li);
    auto d2 = f.target.mul(li, l);
    accumulate(d1, f.target.one(), -1);
    accumulate(d2, f.target.one(), -1);
    rep.add("L L^-1 = 1", f.target.is_zero(d1), f.target.str(d1));
    rep.add("L^-1 L = 1", f.target.is_zero(d2), f.target.str(d2));
  }
  return rep;
}

// Compares two maps on every generator (including L^-1).
template <typename Ring>
CheckReport compare_on_generators(const std::string& name, const GenMap<Ring>& f, const GenMap<Ring>& g) {
  CheckReport rep;
  rep.suite = name;
  for (int id : generator_ids(*f.source)) {
    auto d = f.image(id);
    accumulate(d, g.image(id), -1);
    rep.add(name + " on " + generator_label(*f.source, id), f.target.is_zero(d), f.target.str(d));
  }
  return rep;
}

// Identity and composition of localized maps.
AlgebraMap identity_map(const PresentedAlgebra& alg);
// (g o f)(x) = g(f(x)); variance composes.
AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f, const std::string& name = "");
// Map with u_ij -> u_image[i][j] and L^{+-1} -> loc images (ignored without a localizer).
AlgebraMap map_from_matrix(const std::string& name, const PresentedAlgebra& source, const PresentedAlgebra& target,
                           const ElemMatrix& u_image, const LocalizedElement& loc_image,
                           const LocalizedElement& loc_inv_image, Variance variance);
Character character_from_matrix(const std::string& name, const PresentedAlgebra& source, const ScalarMatrix& u_image,
                                const Scalar& loc_image);

}  // namespace qg
