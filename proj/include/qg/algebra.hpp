#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qg/matrix.hpp"
#include "qg/ncpoly.hpp"
#include "qg/rewrite.hpp"

namespace qg {

// v * L^k with v a localizer-free normal word and L the localizer.
using LocTerm = std::pair<Word, int>;

// Element of the localization, stored in the canonical Laurent form
// sum c * v * L^k. Canonical forms are unique, so equality is structural.
class LocalizedElement {
 public:
  using Terms = std::map<LocTerm, Scalar>;

  LocalizedElement() = default;
  explicit LocalizedElement(const Scalar& c);
  static LocalizedElement term(const Word& v, int k = 0, const Scalar& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // True and *c set when the element is a scalar multiple of 1.
  bool is_scalar(Scalar* c = nullptr) const;
  Scalar coeff(const LocTerm& t) const;

  void add_term(const LocTerm& t, const Scalar& c);
  void add_scaled(const LocalizedElement& o, const Scalar& c);
  LocalizedElement operator+(const LocalizedElement& o) const;
  LocalizedElement operator-(const LocalizedElement& o) const;
  LocalizedElement operator-() const;
  LocalizedElement scaled(const Scalar& c) const;
  LocalizedElement& operator+=(const LocalizedElement& o);
  LocalizedElement& operator-=(const LocalizedElement& o);
  bool operator==(const LocalizedElement& o) const { return terms_ == o.terms_; }

  int min_exponent() const;  // 0 for zero
  int max_exponent() const;

 private:
  Terms terms_;
};

// Finite sums of pure tensors of canonical terms; slot i lives in its own algebra.
class Tensor {
 public:
  using Key = std::vector<LocTerm>;
  explicit Tensor(std::size_t arity = 2) : arity_(arity) {}
  static Tensor one(std::size_t arity);
  static Tensor pure(const std::vector<LocalizedElement>& factors);

  std::size_t arity() const { return arity_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Key& k, const Scalar& c);
  void add_scaled(const Tensor& o, const Scalar& c);
  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor scaled(const Scalar& c) const;
  bool operator==(const Tensor& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

 private:
  std::size_t arity_;
  std::map<Key, Scalar> terms_;
};

enum class AlgebraKind { GAB, GABCD, SLq, GLq, SLqLaurent };
const char* kind_name(AlgebraKind k);
AlgebraKind parse_kind(const std::string& s);

struct AlgebraSpec {
  AlgebraKind kind = AlgebraKind::GAB;
  ScalarMatrix a, b, c, d;  // c, d only for GABCD
  Scalar q = 2;             // SLq, GLq, SLqLaurent
  int degree_bound = 6;
  std::filesystem::path cache_dir;  // empty disables the cache
  std::string name;
};

// Quotient of the free algebra by the defining relations, optionally localized
// at a normal generator L (D for the G family, z for SL_q[z^{+-1}]), with
// L x = sigma(x) L.
class PresentedAlgebra {
 public:
  AlgebraKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int u(std::size_t i, std::size_t j) const { return static_cast<int>(i * cols_ + j); }
  std::size_t num_gens() const { return names_.size(); }
  const std::vector<std::string>& gen_names() const { return names_; }
  std::optional<int> localizer() const { return localizer_; }
  bool is_localized() const { return localizer_.has_value(); }

  const ScalarMatrix& a() const { return a_; }
  const ScalarMatrix& b() const { return b_; }
  const ScalarMatrix& c() const { return c_; }
  const ScalarMatrix& d() const { return d_; }
  const Scalar& q() const { return q_; }

  const MonomialOrder& order() const { return order_; }
  const std::vector<NCPoly>& relations() const { return relations_; }
  const std::vector<std::string>& relation_labels() const { return relation_labels_; }
  const std::vector<NCPoly>& normality_relations() const { return normality_; }
  const RewriteSystem& rewrite() const { return *rs_; }
  bool cache_hit() const { return cache_hit_; }
  // sigma(x) for each localizer-free generator x; the localizer slot is unused.
  const std::vector<NCPoly>& sigma() const { return sigma_; }
  const std::vector<NCPoly>& sigma_inverse() const { return sigma_inv_; }
  bool sigma_is_identity() const { return sigma_identity_; }

  // No rule lead contains the localizer except as its first letter.
  bool localizer_regular() const;

  LocalizedElement one() const { return LocalizedElement(1); }
  LocalizedElement gen(int g) const;
  LocalizedElement loc_power(int k) const;
  LocalizedElement from_poly(const NCPoly& p) const;
  LocalizedElement mul(const LocalizedElement& x, const LocalizedElement& y) const;
  LocalizedElement pow(const LocalizedElement& x, int e) const;
  // sigma^k on a localizer-free polynomial.
  NCPoly apply_sigma(const NCPoly& p, int k) const;

  // Numerator over L^den, den >= 0 minimal.
  std::pair<NCPoly, int> fraction(const LocalizedElement& x) const;
  int filtration_degree(const LocalizedElement& x) const;
  std::string to_string(const LocalizedElement& x) const;
  std::string to_string(const Tensor& t) const;

  LocalizedElement mul_terms(const LocTerm& x, const LocTerm& y) const;

  friend std::shared_ptr<const PresentedAlgebra> build_presented(const AlgebraSpec& spec);

 private:
  PresentedAlgebra() = default;

  AlgebraKind kind_ = AlgebraKind::GAB;
  std::string name_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::string> names_;
  std::optional<int> localizer_;
  ScalarMatrix a_, b_, c_, d_;
  Scalar q_ = 1;
  MonomialOrder order_;
  std::vector<NCPoly> relations_;
  std::vector<std::string> relation_labels_;
  std::vector<NCPoly> normality_;
  std::vector<NCPoly> sigma_, sigma_inv_;
  bool sigma_identity_ = true;
  std::shared_ptr<const RewriteSystem> rs_;
  bool cache_hit_ = false;

  struct TermKeyHash {
    std::size_t operator()(const std::pair<LocTerm, LocTerm>& k) const;
  };
  mutable std::unordered_map<std::pair<LocTerm, LocTerm>, LocalizedElement, TermKeyHash> mul_memo_;
  mutable std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
};

using AlgebraPtr = std::shared_ptr<const PresentedAlgebra>;

// Validates matrices, builds relations (plus the derived normality rule for
// localized kinds) and completes them to the requested bound.
AlgebraPtr build_presented(const AlgebraSpec& spec);

// Relations of the G family as polynomials: u^t A u - C D and u D' u^t - B D
// (with D' the fourth matrix), entrywise, u of size n x m.
std::vector<NCPoly> gabcd_relations(const ScalarMatrix& a, const ScalarMatrix& b, const ScalarMatrix& c,
                                    const ScalarMatrix& d, std::vector<std::string>* labels = nullptr);

// Matrices of algebra elements.
using ElemMatrix = std::vector<std::vector<LocalizedElement>>;
ElemMatrix u_matrix(const PresentedAlgebra& alg);
ElemMatrix transpose(const ElemMatrix& x);
ElemMatrix operator*(const ScalarMatrix& m, const ElemMatrix& x);
ElemMatrix operator*(const ElemMatrix& x, const ScalarMatrix& m);
ElemMatrix times_element(const ElemMatrix& x, const LocalizedElement& e, const PresentedAlgebra& alg, bool left);

// Tensor products: slot i multiplied in algs[i].
Tensor tensor_mul(const std::vector<const PresentedAlgebra*>& algs, const Tensor& x, const Tensor& y);
std::string tensor_to_string(const std::vector<const PresentedAlgebra*>& algs, const Tensor& t);

}  // namespace qg
