#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qg/order.hpp"
#include "qg/scalar.hpp"
#include "qg/word.hpp"

namespace qg {

// Finitely supported Word -> Scalar map; zero coefficients are never stored.
// Iteration order is byte order of the words, which is deterministic but
// unrelated to any monomial order.
class NCPoly {
 public:
  using Terms = std::map<Word, Scalar>;

  NCPoly() = default;
  explicit NCPoly(const Scalar& c);
  static NCPoly monomial(const Word& w, const Scalar& c = 1);
  static NCPoly gen(Gen g, const Scalar& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(const Word& w) const;
  // Scalar part when the polynomial is a constant; nullopt otherwise.
  bool is_constant() const;

  void add_term(const Word& w, const Scalar& c);
  void add_scaled(const NCPoly& o, const Scalar& c);
  // this += c * left * o * right
  void add_product(const Word& left, const NCPoly& o, const Word& right, const Scalar& c);

  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator-() const;
  NCPoly operator*(const NCPoly& o) const;
  NCPoly scaled(const Scalar& c) const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }

  int max_weight(const MonomialOrder& order) const;  // -1 for zero
  // Largest word under the order; requires !is_zero().
  Word lead(const MonomialOrder& order) const;
  // Terms sorted descending by the order.
  std::vector<std::pair<Word, Scalar>> sorted(const MonomialOrder& order) const;

  // Substitute each generator by an image polynomial.
  NCPoly substitute(const std::vector<NCPoly>& images) const;

  std::string to_string(const std::vector<std::string>& names, const MonomialOrder* order = nullptr) const;

 private:
  Terms terms_;
};

std::string word_to_string(const Word& w, const std::vector<std::string>& names);

// Elements of the k-fold tensor power of the free algebra; componentwise product.
class TensorPoly {
 public:
  using Key = std::vector<Word>;
  explicit TensorPoly(std::size_t arity = 2) : arity_(arity) {}

  std::size_t arity() const { return arity_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, const Scalar& c);
  TensorPoly operator+(const TensorPoly& o) const;
  TensorPoly operator-(const TensorPoly& o) const;
  TensorPoly operator*(const TensorPoly& o) const;
  bool operator==(const TensorPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

  static TensorPoly pure(const std::vector<NCPoly>& factors);

 private:
  std::size_t arity_;
  std::map<Key, Scalar> terms_;
};

}  // namespace qg
