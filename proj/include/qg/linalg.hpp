#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qg/matrix.hpp"

namespace qg {

// Sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

SparseVec sparse_axpy(const SparseVec& x, const Scalar& c, const SparseVec& y);  // x + c*y

// Incremental row echelon form over Q. Each stored row carries a tag vector
// recording which inserted vectors it combines, so membership queries return
// explicit coefficients.
class Echelon {
 public:
  // Inserts v with tag t. Returns nullopt when v is independent, otherwise the
  // reduced tag, i.e. a combination of inserted tags whose vectors sum to 0.
  std::optional<SparseVec> insert(const SparseVec& v, const SparseVec& tag);
  // Coefficients on inserted tags expressing v, or nullopt when v is outside the span.
  std::optional<SparseVec> solve(const SparseVec& v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    SparseVec vec, tag;
  };
  // Reduces in place; returns the first index that has no pivot, or npos when v reduces to 0.
  std::size_t reduce(std::map<std::size_t, Scalar>& v, std::map<std::size_t, Scalar>* tag) const;
  std::map<std::size_t, Row> rows_;  // keyed by leading index
};

// Basis of {x : x * M = 0} (row vectors), each vector scaled so its first nonzero entry is 1.
std::vector<std::vector<Scalar>> left_nullspace(const ScalarMatrix& m);
std::size_t matrix_rank(const ScalarMatrix& m);

}  // namespace qg
