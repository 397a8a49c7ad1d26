#include "qg/cohomology.hpp"

#include <random>

#include "qg/errors.hpp"
#include "qg/linalg.hpp"

namespace qg {

namespace {

// Block-diagonal Hom basis of a direct sum of comodules.
std::vector<std::vector<Scalar>> hom_basis(const std::vector<Comodule>& parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.dim();
  std::vector<std::vector<Scalar>> out;
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (const auto& f : hom_to_trivial(p).basis) {
      std::vector<Scalar> row(total, Scalar(0));
      for (std::size_t i = 0; i < f.size(); ++i) row[off + i] = f[i];
      out.push_back(std::move(row));
    }
    off += p.dim();
  }
  return out;
}

// Random invertible recombination of the rows (unit lower triangular times a permutation-free
// upper triangular with nonzero diagonal).
std::vector<std::vector<Scalar>> recombine(const std::vector<std::vector<Scalar>>& basis, std::mt19937_64& rng) {
  const std::size_t k = basis.size();
  std::uniform_int_distribution<int> dist(-5, 5), nz(1, 5);
  ScalarMatrix lower = ScalarMatrix::identity(k), upper = ScalarMatrix::identity(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (j < i) lower(i, j) = dist(rng);
      if (j > i) upper(i, j) = dist(rng);
      if (j == i) upper(i, j) = nz(rng) * (dist(rng) < 0 ? -1 : 1);
    }
  const ScalarMatrix m = lower * upper;
  std::vector<std::vector<Scalar>> out(k, std::vector<Scalar>(k ? basis[0].size() : 0, Scalar(0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t c = 0; c < basis[j].size(); ++c) out[i][c] += m(i, j) * basis[j][c];
  return out;
}

SparseVec dense_to_sparse(const std::vector<Scalar>& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.emplace_back(i, v[i]);
  return s;
}

}  // namespace

CohomologyResult bialgebra_cohomology(const YDResolution& res, const std::optional<std::vector<std::size_t>>& expected_dims,
                                      std::optional<std::uint64_t> basis_seed) {
  const Complex& cx = res.complex;
  if (!cx.augmentation) throw Error(ErrorCode::InvalidArgument, "cohomology needs an augmented resolution");
  const Character& eps = *cx.augmentation;
  CohomologyResult out;
  out.report.suite = "bialgebra cohomology";
  std::optional<std::mt19937_64> rng;
  if (basis_seed) rng.emplace(*basis_seed);

  for (std::size_t i = 0; i < res.summands.size(); ++i) {
    auto basis = hom_basis(res.summands[i]);
    if (rng) basis = recombine(basis, *rng);
    out.hom_bases.push_back(std::move(basis));
    out.cochains.dims.push_back(out.hom_bases.back().size());
  }
  if (expected_dims && *expected_dims != out.cochains.dims) {
    std::string got;
    for (auto d : out.cochains.dims) got += (got.empty() ? "" : ",") + std::to_string(d);
    throw Error(ErrorCode::UnexpectedHomDimension, "Hom(P_i, k) dimensions are (" + got + ")");
  }

  // D_{i+1} : C^i -> C^{i+1}, f -> g with g_r = sum_c eps(psi[r][c]) f_c.
  for (std::size_t i = 0; i + 1 < res.summands.size(); ++i) {
    const FreeModuleMap& psi = cx.maps[i];
    const auto& src = out.hom_bases[i];
    const auto& dst = out.hom_bases[i + 1];
    Echelon ech;
    for (std::size_t t = 0; t < dst.size(); ++t) ech.insert(dense_to_sparse(dst[t]), {{t, 1}});
    ScalarMatrix d(src.size(), dst.size());
    for (std::size_t s = 0; s < src.size(); ++s) {
      std::vector<Scalar> g(psi.source_rank, Scalar(0));
      for (std::size_t r = 0; r < psi.source_rank; ++r)
        for (std::size_t c = 0; c < psi.target_rank; ++c)
          if (src[s][c] != 0 && !psi.at(r, c).is_zero()) g[r] += eps.apply(psi.at(r, c)) * src[s][c];
      const auto coords = ech.solve(dense_to_sparse(g));
      if (!coords)
        throw Error(ErrorCode::UnexpectedHomDimension,
                    "induced functional from degree " + std::to_string(i) + " is not a comodule map");
      for (const auto& [t, c] : *coords) d(s, t) = c;
    }
    out.cochains.maps.push_back(std::move(d));
  }

  for (const auto& m : out.cochains.maps) out.ranks.push_back(matrix_rank(m));
  const std::size_t top = out.cochains.dims.size();
  for (std::size_t i = 0; i < top; ++i) {
    const std::size_t in = i > 0 ? out.ranks[i - 1] : 0;
    const std::size_t outr = i < out.ranks.size() ? out.ranks[i] : 0;
    out.dims.push_back(out.cochains.dims[i] - in - outr);
  }
  for (std::size_t i = 0; i + 1 < out.cochains.maps.size(); ++i) {
    const ScalarMatrix prod = out.cochains.maps[i] * out.cochains.maps[i + 1];
    out.report.add("D_" + std::to_string(i + 2) + " D_" + std::to_string(i + 1) + " = 0", prod.is_zero(),
                   prod.to_display());
  }
  return out;
}

GsReport gs_dimension_report(const CohomologyResult& c, std::size_t resolution_length) {
  GsReport r;
  r.upper = resolution_length;
  for (std::size_t i = 0; i < c.dims.size(); ++i)
    if (c.dims[i] != 0) r.lower = i;
  r.verdict = r.lower == r.upper ? "cd_GS = " + std::to_string(r.upper) : "inconclusive (lower<upper)";
  return r;
}

}  // namespace qg
