#include "qg/linalg.hpp"

namespace qg {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::map<std::size_t, Scalar> to_map(const SparseVec& v) { return {v.begin(), v.end()}; }

SparseVec to_vec(const std::map<std::size_t, Scalar>& m) { return {m.begin(), m.end()}; }

void axpy_into(std::map<std::size_t, Scalar>& x, const Scalar& c, const SparseVec& y) {
  for (const auto& [i, v] : y) {
    auto [it, inserted] = x.try_emplace(i, c * v);
    if (!inserted) {
      it->second += c * v;
      if (it->second == 0) x.erase(it);
    }
  }
}

}  // namespace

SparseVec sparse_axpy(const SparseVec& x, const Scalar& c, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, c * y[j].second);
      ++j;
    } else {
      Scalar s = x[i].second + c * y[j].second;
      if (s != 0) out.emplace_back(x[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

std::size_t Echelon::reduce(std::map<std::size_t, Scalar>& v, std::map<std::size_t, Scalar>* tag) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) return it->first;
    const std::size_t lead = it->first;
    const Scalar c = -it->second / row->second.vec.front().second;
    axpy_into(v, c, row->second.vec);
    if (tag) axpy_into(*tag, c, row->second.tag);
    it = v.lower_bound(lead);
  }
  return npos;
}

std::optional<SparseVec> Echelon::insert(const SparseVec& v, const SparseVec& tag) {
  auto work = to_map(v);
  auto wtag = to_map(tag);
  const std::size_t lead = reduce(work, &wtag);
  if (lead == npos) return to_vec(wtag);
  rows_.emplace(lead, Row{to_vec(work), to_vec(wtag)});
  return std::nullopt;
}

std::optional<SparseVec> Echelon::solve(const SparseVec& v) const {
  auto work = to_map(v);
  std::map<std::size_t, Scalar> tag;
  if (reduce(work, &tag) != npos) return std::nullopt;
  // work + combination = 0, so v = -combination.
  SparseVec out;
  for (const auto& [i, c] : tag) out.emplace_back(i, -c);
  return out;
}

std::vector<std::vector<Scalar>> left_nullspace(const ScalarMatrix& m) {
  Echelon e;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVec row;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) row.emplace_back(c, m(r, c));
    auto dep = e.insert(row, {{r, Scalar(1)}});
    if (!dep) continue;
    std::vector<Scalar> x(m.rows());
    for (const auto& [i, c] : *dep) x[i] = c;
    basis.push_back(std::move(x));
  }
  // Reduced echelon form on the basis so the result is canonical.
  ScalarMatrix b(basis.size(), m.rows());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) b(i, j) = basis[i][j];
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.rows() && pivot_row < basis.size(); ++col) {
    std::size_t p = pivot_row;
    while (p < basis.size() && b(p, col) == 0) ++p;
    if (p == basis.size()) continue;
    for (std::size_t j = 0; j < m.rows(); ++j) std::swap(b(p, j), b(pivot_row, j));
    const Scalar inv = 1 / b(pivot_row, col);
    for (std::size_t j = 0; j < m.rows(); ++j) b(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i == pivot_row || b(i, col) == 0) continue;
      const Scalar f = b(i, col);
      for (std::size_t j = 0; j < m.rows(); ++j) b(i, j) -= f * b(pivot_row, j);
    }
    ++pivot_row;
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) basis[i][j] = b(i, j);
  return basis;
}

std::size_t matrix_rank(const ScalarMatrix& m) {
  Echelon e;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVec row;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) row.emplace_back(c, m(r, c));
    e.insert(row, {});
  }
  return e.rank();
}

}  // namespace qg
