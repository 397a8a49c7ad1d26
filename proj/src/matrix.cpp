#include "qg/matrix.hpp"

#include <random>
#include <sstream>

#include "qg/errors.hpp"

namespace qg {

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

ScalarMatrix::ScalarMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
    for (const auto& x : r) data_.push_back(x);
  }
}

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ScalarMatrix ScalarMatrix::parse(const std::vector<std::vector<std::string>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  ScalarMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::InvalidArgument, "ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = parse_scalar(rows[i][j]);
  }
  return m;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ScalarMatrix ScalarMatrix::inverse() const {
  if (!is_square()) throw Error(ErrorCode::NotSquare, "inverse of non-square matrix");
  std::size_t n = rows_;
  ScalarMatrix a = *this;
  ScalarMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::NotInvertible, "singular matrix " + to_display());
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    Scalar p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Scalar f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

bool ScalarMatrix::is_invertible() const {
  if (!is_square()) return false;
  try {
    (void)inverse();
    return true;
  } catch (const Error&) {
    return false;
  }
}

Scalar ScalarMatrix::trace() const {
  if (!is_square()) throw Error(ErrorCode::NotSquare, "trace of non-square matrix");
  Scalar t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool ScalarMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool ScalarMatrix::is_scalar_multiple_of_identity(Scalar* lambda) const {
  if (!is_square() || rows_ == 0) return false;
  Scalar l = (*this)(0, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? l : Scalar(0))) return false;
  if (lambda) *lambda = l;
  return true;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  ScalarMatrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
    }
  return m;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  ScalarMatrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
  return m;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  ScalarMatrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
  return m;
}

ScalarMatrix ScalarMatrix::scaled(const Scalar& s) const {
  ScalarMatrix m = *this;
  for (auto& x : m.data_) x *= s;
  return m;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::vector<std::vector<std::string>> ScalarMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = to_string((*this)(i, j));
  return out;
}

std::string ScalarMatrix::to_display() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << qg::to_display((*this)(i, j));
    }
  }
  os << "]";
  return os.str();
}

ScalarMatrix a_q(const Scalar& q) {
  ScalarMatrix m(2, 2);
  m(0, 1) = 1;
  m(1, 0) = -q;
  return m;
}

ScalarMatrix random_invertible_matrix(std::size_t n, std::uint64_t seed, int range) {
  if (n == 0 || range <= 0) throw Error(ErrorCode::InvalidArgument, "random matrix needs n > 0 and range > 0");
  std::mt19937_64 rng(seed);
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(range) + 1;
  for (;;) {
    ScalarMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % span) - range;
    if (m.is_invertible()) return m;
  }
}

}  // namespace qg
