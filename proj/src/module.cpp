#include "qg/module.hpp"

#include "qg/errors.hpp"

namespace qg {

namespace {

const PresentedAlgebra& algebra_of(const FreeModuleMap& m) {
  if (!m.alg) throw Error(ErrorCode::InvalidArgument, "module map " + m.name + " has no algebra");
  return *m.alg;
}

// x * y in the ring the module map composes over (the opposite ring for right modules).
LocalizedElement ring_mul(const PresentedAlgebra& alg, ModuleSide side, const LocalizedElement& x,
                          const LocalizedElement& y) {
  return side == ModuleSide::Left ? alg.mul(x, y) : alg.mul(y, x);
}

std::optional<LocalizedElement> unit_inverse(const LocalizedElement& x) {
  if (x.terms().size() != 1) return std::nullopt;
  const auto& [t, c] = *x.terms().begin();
  if (!t.first.empty()) return std::nullopt;
  return LocalizedElement::term(Word(), -t.second, 1 / c);
}

}  // namespace

FreeModuleMap::FreeModuleMap(std::string n, const PresentedAlgebra& a, ModuleSide s, std::size_t sr, std::size_t tr)
    : name(std::move(n)), alg(&a), side(s), source_rank(sr), target_rank(tr),
      entries(sr, std::vector<LocalizedElement>(tr)) {}

bool FreeModuleMap::is_zero() const {
  for (const auto& row : entries)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

int FreeModuleMap::max_entry_degree() const {
  int m = 0;
  for (const auto& row : entries)
    for (const auto& e : row)
      if (!e.is_zero()) m = std::max(m, alg->filtration_degree(e));
  return m;
}

FreeModuleMap identity_module_map(const PresentedAlgebra& alg, std::size_t rank, ModuleSide side) {
  FreeModuleMap m("id", alg, side, rank, rank);
  for (std::size_t i = 0; i < rank; ++i) m.at(i, i) = alg.one();
  return m;
}

FreeModuleMap scalar_module_map(const std::string& name, const PresentedAlgebra& alg, ModuleSide side,
                                const ScalarMatrix& s) {
  FreeModuleMap m(name, alg, side, s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (s(i, j) != 0) m.at(i, j) = LocalizedElement(s(i, j));
  return m;
}

FreeModuleMap then(const FreeModuleMap& first, const FreeModuleMap& second, const std::string& name) {
  if (first.side != second.side) throw Error(ErrorCode::InvalidArgument, "composing maps of different sides");
  if (first.target_rank != second.source_rank)
    throw Error(ErrorCode::InvalidArgument, "rank mismatch composing " + first.name + " and " + second.name);
  if (first.alg != second.alg) throw Error(ErrorCode::InvalidArgument, "composing maps over different algebras");
  const PresentedAlgebra& alg = algebra_of(first);
  FreeModuleMap out(name.empty() ? second.name + " o " + first.name : name, alg, first.side, first.source_rank,
                    second.target_rank);
  for (std::size_t r = 0; r < first.source_rank; ++r)
    for (std::size_t c = 0; c < first.target_rank; ++c) {
      const LocalizedElement& f = first.at(r, c);
      if (f.is_zero()) continue;
      const LocalizedElement tf = second.twist ? second.twist->apply(f) : f;
      for (std::size_t d = 0; d < second.target_rank; ++d) {
        const LocalizedElement& g = second.at(c, d);
        if (g.is_zero()) continue;
        out.at(r, d) += ring_mul(alg, first.side, tf, g);
      }
    }
  if (first.twist && second.twist)
    out.twist = std::make_shared<AlgebraMap>(compose(*second.twist, *first.twist));
  else
    out.twist = second.twist ? second.twist : first.twist;
  return out;
}

namespace {

FreeModuleMap combine(const FreeModuleMap& a, const FreeModuleMap& b, const Scalar& sign) {
  if (a.source_rank != b.source_rank || a.target_rank != b.target_rank || a.side != b.side)
    throw Error(ErrorCode::InvalidArgument, "adding module maps of different shapes");
  FreeModuleMap out = a;
  out.name = a.name + (sign > 0 ? " + " : " - ") + b.name;
  for (std::size_t r = 0; r < a.source_rank; ++r)
    for (std::size_t c = 0; c < a.target_rank; ++c) out.at(r, c).add_scaled(b.at(r, c), sign);
  return out;
}

}  // namespace

FreeModuleMap operator+(const FreeModuleMap& a, const FreeModuleMap& b) { return combine(a, b, 1); }
FreeModuleMap operator-(const FreeModuleMap& a, const FreeModuleMap& b) { return combine(a, b, -1); }

FreeModuleMap scaled(const FreeModuleMap& a, const Scalar& c) {
  FreeModuleMap out = a;
  for (auto& row : out.entries)
    for (auto& e : row) e = e.scaled(c);
  return out;
}

FreeModuleMap block_map(const std::string& name, const PresentedAlgebra& alg, ModuleSide side,
                        const std::vector<std::size_t>& source_ranks, const std::vector<std::size_t>& target_ranks,
                        const std::vector<std::vector<const FreeModuleMap*>>& blocks) {
  std::size_t sr = 0, tr = 0;
  for (auto r : source_ranks) sr += r;
  for (auto r : target_ranks) tr += r;
  FreeModuleMap out(name, alg, side, sr, tr);
  std::size_t r0 = 0;
  for (std::size_t i = 0; i < source_ranks.size(); ++i) {
    std::size_t c0 = 0;
    for (std::size_t j = 0; j < target_ranks.size(); ++j) {
      const FreeModuleMap* b = blocks.at(i).at(j);
      if (b) {
        if (b->source_rank != source_ranks[i] || b->target_rank != target_ranks[j])
          throw Error(ErrorCode::InvalidArgument, "block " + b->name + " has the wrong shape in " + name);
        for (std::size_t r = 0; r < b->source_rank; ++r)
          for (std::size_t c = 0; c < b->target_rank; ++c) out.at(r0 + r, c0 + c) = b->at(r, c);
      }
      c0 += target_ranks[j];
    }
    r0 += source_ranks[i];
  }
  return out;
}

FreeModuleMap permuted(const FreeModuleMap& m, const std::vector<std::size_t>& sp, const std::vector<std::size_t>& tp) {
  FreeModuleMap out = m;
  for (std::size_t r = 0; r < m.source_rank; ++r)
    for (std::size_t c = 0; c < m.target_rank; ++c)
      out.at(r, c) = m.at(sp.empty() ? r : sp[r], tp.empty() ? c : tp[c]);
  return out;
}

CheckReport compare_module_maps(const std::string& label, const FreeModuleMap& a, const FreeModuleMap& b) {
  CheckReport rep;
  rep.suite = label;
  if (a.source_rank != b.source_rank || a.target_rank != b.target_rank) {
    rep.add(label + " shapes", false,
            std::to_string(a.source_rank) + "x" + std::to_string(a.target_rank) + " vs " +
                std::to_string(b.source_rank) + "x" + std::to_string(b.target_rank));
    return rep;
  }
  const PresentedAlgebra& alg = algebra_of(a);
  for (std::size_t r = 0; r < a.source_rank; ++r)
    for (std::size_t c = 0; c < a.target_rank; ++c) {
      const LocalizedElement d = a.at(r, c) - b.at(r, c);
      rep.add(label + " [" + std::to_string(r) + "," + std::to_string(c) + "]", d.is_zero(), alg.to_string(d));
    }
  if (a.twist || b.twist) {
    const AlgebraMap id = identity_map(alg);
    rep.merge(compare_on_generators(label + " twist", a.twist ? *a.twist : id, b.twist ? *b.twist : id));
  }
  return rep;
}

CheckReport zero_module_map(const std::string& label, const FreeModuleMap& a) {
  CheckReport rep;
  rep.suite = label;
  const PresentedAlgebra& alg = algebra_of(a);
  for (std::size_t r = 0; r < a.source_rank; ++r)
    for (std::size_t c = 0; c < a.target_rank; ++c)
      rep.add(label + " [" + std::to_string(r) + "," + std::to_string(c) + "]", a.at(r, c).is_zero(),
              alg.to_string(a.at(r, c)));
  return rep;
}

FreeModuleMap inverse_module_map(const FreeModuleMap& m, std::shared_ptr<const AlgebraMap> twist_inverse) {
  if (m.source_rank != m.target_rank) throw Error(ErrorCode::NotSquare, m.name + " is not square");
  if (m.twist && !twist_inverse) throw Error(ErrorCode::InvalidArgument, m.name + " needs the inverse twist");
  const PresentedAlgebra& alg = algebra_of(m);
  const std::size_t n = m.source_rank;
  // Solve X * M = I in the ring R the maps compose over (then(M, X) = id means
  // sum_c M[r][c] * X[c][d] = delta in R). Row operations on [M | I] from the left.
  // With a twist t, then(M, X) has entries sum_c s(M[r][c]) X[c][d] with s = twist of X,
  // so untwist M first: N = s(M) and invert N plainly.
  std::vector<std::vector<LocalizedElement>> a(n, std::vector<LocalizedElement>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = twist_inverse ? twist_inverse->apply(m.at(r, c)) : m.at(r, c);
    a[r][n + r] = alg.one();
  }
  auto mul = [&](const LocalizedElement& x, const LocalizedElement& y) { return ring_mul(alg, m.side, x, y); };
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    std::optional<LocalizedElement> inv;
    for (; p < n; ++p)
      if ((inv = unit_inverse(a[p][col]))) break;
    if (p == n) throw Error(ErrorCode::NotInvertible, m.name + " has no unit pivot in column " + std::to_string(col));
    std::swap(a[p], a[col]);
    for (auto& e : a[col]) e = mul(*inv, e);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const LocalizedElement f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c)
        if (!a[col][c].is_zero()) a[r][c] -= mul(f, a[col][c]);
    }
  }
  FreeModuleMap out(m.name + "^-1", alg, m.side, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = a[r][n + c];
  out.twist = twist_inverse;
  return out;
}

}  // namespace qg
