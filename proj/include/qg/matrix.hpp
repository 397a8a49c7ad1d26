#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qg/scalar.hpp"

namespace qg {

class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols);
  ScalarMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static ScalarMatrix identity(std::size_t n);
  static ScalarMatrix parse(const std::vector<std::vector<std::string>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ScalarMatrix transpose() const;
  // Throws Error(NotSquare) or Error(NotInvertible).
  ScalarMatrix inverse() const;
  Scalar trace() const;
  bool is_invertible() const;
  bool is_zero() const;
  // Returns true and sets lambda when the matrix equals lambda * I.
  bool is_scalar_multiple_of_identity(Scalar* lambda) const;

  ScalarMatrix operator*(const ScalarMatrix& o) const;
  ScalarMatrix operator+(const ScalarMatrix& o) const;
  ScalarMatrix operator-(const ScalarMatrix& o) const;
  ScalarMatrix scaled(const Scalar& s) const;
  bool operator==(const ScalarMatrix& o) const;

  std::vector<std::vector<std::string>> to_strings() const;
  std::string to_display() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// Invertible n x n integer matrix with entries in [-range, range], drawn from
// std::mt19937_64(seed) as (draw mod (2 range + 1)) - range, row-major; singular draws are discarded.
ScalarMatrix random_invertible_matrix(std::size_t n, std::uint64_t seed, int range = 2);

// A_q = [[0, 1], [-q, 0]].
ScalarMatrix a_q(const Scalar& q);

}  // namespace qg
