#include "qg/ncpoly.hpp"

#include <algorithm>
#include <sstream>

#include "qg/errors.hpp"

namespace qg {

NCPoly::NCPoly(const Scalar& c) {
  if (c != 0) terms_.emplace(Word(), c);
}

NCPoly NCPoly::monomial(const Word& w, const Scalar& c) {
  NCPoly p;
  p.add_term(w, c);
  return p;
}

NCPoly NCPoly::gen(Gen g, const Scalar& c) { return monomial(letter(g), c); }

Scalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

bool NCPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void NCPoly::add_scaled(const NCPoly& o, const Scalar& c) {
  if (c == 0) return;
  for (const auto& [w, x] : o.terms_) add_term(w, x * c);
}

void NCPoly::add_product(const Word& left, const NCPoly& o, const Word& right, const Scalar& c) {
  if (c == 0) return;
  for (const auto& [w, x] : o.terms_) add_term(left + w + right, x * c);
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r = *this;
  r += o;
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly r = *this;
  r -= o;
  return r;
}

NCPoly NCPoly::operator-() const { return scaled(-1); }

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
  NCPoly r;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) r.add_term(w1 + w2, c1 * c2);
  return r;
}

NCPoly NCPoly::scaled(const Scalar& c) const {
  NCPoly r;
  if (c == 0) return r;
  for (const auto& [w, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, x * c);
  return r;
}

int NCPoly::max_weight(const MonomialOrder& order) const {
  int m = -1;
  for (const auto& [w, c] : terms_) m = std::max(m, order.weight(w));
  return m;
}

Word NCPoly::lead(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "lead of zero polynomial");
  const Word* best = nullptr;
  for (const auto& [w, c] : terms_)
    if (!best || order.compare(w, *best) > 0) best = &w;
  return *best;
}

std::vector<std::pair<Word, Scalar>> NCPoly::sorted(const MonomialOrder& order) const {
  std::vector<std::pair<Word, Scalar>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return order.compare(a.first, b.first) > 0; });
  return v;
}

NCPoly NCPoly::substitute(const std::vector<NCPoly>& images) const {
  NCPoly out;
  for (const auto& [w, c] : terms_) {
    NCPoly acc(c);
    for (unsigned char g : w) acc = acc * images.at(g);
    out += acc;
  }
  return out;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += "*";
    s += names.at(static_cast<unsigned char>(w[i]));
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string NCPoly::to_string(const std::vector<std::string>& names, const MonomialOrder* order) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Word, Scalar>> v;
  if (order)
    v = sorted(*order);
  else
    v.assign(terms_.begin(), terms_.end());
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : v) {
    Scalar a = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (w.empty()) {
      os << to_display(a);
    } else {
      if (a != 1) os << to_display(a) << "*";
      os << word_to_string(w, names);
    }
  }
  return os.str();
}

void TensorPoly::add_term(const Key& k, const Scalar& c) {
  if (k.size() != arity_) throw Error(ErrorCode::InvalidArgument, "tensor arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorPoly TensorPoly::operator+(const TensorPoly& o) const {
  TensorPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

TensorPoly TensorPoly::operator-(const TensorPoly& o) const {
  TensorPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

TensorPoly TensorPoly::operator*(const TensorPoly& o) const {
  if (arity_ != o.arity_) throw Error(ErrorCode::InvalidArgument, "tensor arity mismatch");
  TensorPoly r(arity_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      Key k(arity_);
      for (std::size_t i = 0; i < arity_; ++i) k[i] = k1[i] + k2[i];
      r.add_term(k, c1 * c2);
    }
  return r;
}

TensorPoly TensorPoly::pure(const std::vector<NCPoly>& factors) {
  TensorPoly r(factors.size());
  r.add_term(Key(factors.size()), 1);
  for (std::size_t slot = 0; slot < factors.size(); ++slot) {
    TensorPoly next(factors.size());
    for (const auto& [k, c] : r.terms_)
      for (const auto& [w, x] : factors[slot].terms()) {
        Key nk = k;
        nk[slot] = w;
        next.add_term(nk, c * x);
      }
    r = std::move(next);
  }
  return r;
}

}  // namespace qg
