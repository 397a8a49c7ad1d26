#include "qg/maps.hpp"

namespace qg {

std::vector<int> generator_ids(const PresentedAlgebra& alg) {
  std::vector<int> ids;
  for (std::size_t g = 0; g < alg.num_gens(); ++g) ids.push_back(static_cast<int>(g));
  if (alg.localizer()) ids.push_back(-1);
  return ids;
}

std::string generator_label(const PresentedAlgebra& alg, int g) {
  if (g < 0) return alg.gen_names().at(*alg.localizer()) + "^-1";
  return alg.gen_names().at(g);
}

AlgebraMap identity_map(const PresentedAlgebra& alg) {
  AlgebraMap f;
  f.name = "id";
  f.source = &alg;
  f.target = LocRing{&alg};
  for (std::size_t g = 0; g < alg.num_gens(); ++g) f.images.push_back(alg.gen(static_cast<int>(g)));
  if (alg.localizer()) f.loc_inv_image = alg.loc_power(-1);
  return f;
}

AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f, const std::string& name) {
  if (f.target.alg != g.source) throw Error(ErrorCode::InvalidArgument, "composition of incompatible maps");
  AlgebraMap h;
  h.name = name.empty() ? g.name + " o " + f.name : name;
  h.source = f.source;
  h.target = g.target;
  h.variance = f.variance == g.variance ? Variance::Homomorphism : Variance::Antihomomorphism;
  for (const auto& img : f.images) h.images.push_back(g.apply(img));
  if (f.loc_inv_image) h.loc_inv_image = g.apply(*f.loc_inv_image);
  return h;
}

AlgebraMap map_from_matrix(const std::string& name, const PresentedAlgebra& source, const PresentedAlgebra& target,
                           const ElemMatrix& u_image, const LocalizedElement& loc_image,
                           const LocalizedElement& loc_inv_image, Variance variance) {
  AlgebraMap f;
  f.name = name;
  f.source = &source;
  f.target = LocRing{&target};
  f.variance = variance;
  f.images.assign(source.num_gens(), LocalizedElement());
  if (u_image.size() != source.rows() || (!u_image.empty() && u_image[0].size() != source.cols()))
    throw Error(ErrorCode::InvalidArgument, name + ": image matrix has the wrong shape");
  for (std::size_t i = 0; i < source.rows(); ++i)
    for (std::size_t j = 0; j < source.cols(); ++j) f.images[source.u(i, j)] = u_image[i][j];
  if (source.localizer()) {
    f.images[*source.localizer()] = loc_image;
    f.loc_inv_image = loc_inv_image;
  }
  return f;
}

Character character_from_matrix(const std::string& name, const PresentedAlgebra& source, const ScalarMatrix& u_image,
                                const Scalar& loc_image) {
  Character f;
  f.name = name;
  f.source = &source;
  f.images.assign(source.num_gens(), Scalar(0));
  for (std::size_t i = 0; i < source.rows(); ++i)
    for (std::size_t j = 0; j < source.cols(); ++j) f.images[source.u(i, j)] = u_image(i, j);
  if (source.localizer()) {
    if (loc_image == 0) throw Error(ErrorCode::InvalidArgument, name + ": localizer must map to a unit");
    f.images[*source.localizer()] = loc_image;
    f.loc_inv_image = 1 / loc_image;
  }
  return f;
}

}  // namespace qg
