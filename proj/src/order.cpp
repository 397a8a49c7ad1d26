#include "qg/order.hpp"

#include "qg/errors.hpp"

namespace qg {

MonomialOrder::MonomialOrder(std::vector<int> weights, std::vector<int> precedence,
                             std::vector<OrderRefinement> refinements)
    : weights_(std::move(weights)), precedence_(std::move(precedence)), refinements_(std::move(refinements)) {
  std::size_t n = weights_.size();
  if (precedence_.size() != n) throw Error(ErrorCode::InvalidArgument, "precedence must list every generator once");
  rank_.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    int g = precedence_[i];
    if (g < 0 || static_cast<std::size_t>(g) >= n || rank_[g] != -1)
      throw Error(ErrorCode::InvalidArgument, "precedence must list every generator once");
    rank_[g] = static_cast<int>(i);
  }
  for (int w : weights_)
    if (w <= 0) throw Error(ErrorCode::InvalidArgument, "generator weights must be positive");
  for (const auto& r : refinements_)
    if (r.values.size() != n) throw Error(ErrorCode::InvalidArgument, "refinement arity mismatch");
}

int MonomialOrder::weight(const Word& w) const {
  int s = 0;
  for (unsigned char c : w) s += weights_[c];
  return s;
}

int MonomialOrder::compare(const Word& a, const Word& b) const {
  int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb ? -1 : 1;
  for (const auto& r : refinements_) {
    if (r.kind == OrderRefinement::Kind::Weight) {
      int sa = 0, sb = 0;
      for (unsigned char c : a) sa += r.values[c];
      for (unsigned char c : b) sb += r.values[c];
      if (sa != sb) return sa < sb ? -1 : 1;
    } else {
      if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
      for (std::size_t i = 0; i < a.size(); ++i) {
        int va = r.values[static_cast<unsigned char>(a[i])], vb = r.values[static_cast<unsigned char>(b[i])];
        if (va != vb) return va < vb ? -1 : 1;
      }
    }
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ra = rank_[static_cast<unsigned char>(a[i])], rb = rank_[static_cast<unsigned char>(b[i])];
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  return 0;
}

}  // namespace qg
