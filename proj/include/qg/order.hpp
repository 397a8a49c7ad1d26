#pragma once

#include <string>
#include <vector>

#include "qg/word.hpp"

namespace qg {

// One tie-break level applied after the primary weight.
//   Weight: compare the sum of per-generator values.
//   Lex:    compare lengths, then the value sequences left to right.
struct OrderRefinement {
  enum class Kind { Weight, Lex };
  Kind kind = Kind::Weight;
  std::vector<int> values;
  bool operator==(const OrderRefinement&) const = default;
};

// Weighted-degree order: primary weight, then refinements in sequence, then
// lexicographic by generator precedence (precedence[0] is the smallest letter).
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(std::vector<int> weights, std::vector<int> precedence,
                std::vector<OrderRefinement> refinements = {});

  std::size_t num_gens() const { return weights_.size(); }
  int weight(Gen g) const { return weights_[g]; }
  int weight(const Word& w) const;
  const std::vector<int>& weights() const { return weights_; }
  const std::vector<int>& precedence() const { return precedence_; }
  const std::vector<OrderRefinement>& refinements() const { return refinements_; }

  // <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Word& a, const Word& b) const;
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder& o) const {
    return weights_ == o.weights_ && precedence_ == o.precedence_ && refinements_ == o.refinements_;
  }

 private:
  std::vector<int> weights_;
  std::vector<int> precedence_;
  std::vector<int> rank_;
  std::vector<OrderRefinement> refinements_;
};

struct OrderLess {
  const MonomialOrder* order;
  bool operator()(const Word& a, const Word& b) const { return order->compare(a, b) < 0; }
};

}  // namespace qg
