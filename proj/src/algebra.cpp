#include "qg/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "qg/cache.hpp"
#include "qg/errors.hpp"
#include "qg/invariants.hpp"

namespace qg {

// ---------------------------------------------------------------- LocalizedElement

LocalizedElement::LocalizedElement(const Scalar& c) {
  if (c != 0) terms_.emplace(LocTerm{Word(), 0}, c);
}

LocalizedElement LocalizedElement::term(const Word& v, int k, const Scalar& c) {
  LocalizedElement e;
  e.add_term({v, k}, c);
  return e;
}

bool LocalizedElement::is_scalar(Scalar* c) const {
  if (terms_.empty()) {
    if (c) *c = 0;
    return true;
  }
  if (terms_.size() != 1) return false;
  const auto& [t, x] = *terms_.begin();
  if (!t.first.empty() || t.second != 0) return false;
  if (c) *c = x;
  return true;
}

Scalar LocalizedElement::coeff(const LocTerm& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void LocalizedElement::add_term(const LocTerm& t, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LocalizedElement::add_scaled(const LocalizedElement& o, const Scalar& c) {
  if (c == 0) return;
  for (const auto& [t, x] : o.terms_) add_term(t, x * c);
}

LocalizedElement LocalizedElement::operator+(const LocalizedElement& o) const {
  LocalizedElement r = *this;
  r += o;
  return r;
}

LocalizedElement LocalizedElement::operator-(const LocalizedElement& o) const {
  LocalizedElement r = *this;
  r -= o;
  return r;
}

LocalizedElement LocalizedElement::operator-() const { return scaled(-1); }

LocalizedElement LocalizedElement::scaled(const Scalar& c) const {
  LocalizedElement r;
  r.add_scaled(*this, c);
  return r;
}

LocalizedElement& LocalizedElement::operator+=(const LocalizedElement& o) {
  add_scaled(o, 1);
  return *this;
}

LocalizedElement& LocalizedElement::operator-=(const LocalizedElement& o) {
  add_scaled(o, -1);
  return *this;
}

int LocalizedElement::min_exponent() const {
  int m = 0;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    m = first ? t.second : std::min(m, t.second);
    first = false;
  }
  return m;
}

int LocalizedElement::max_exponent() const {
  int m = 0;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    m = first ? t.second : std::max(m, t.second);
    first = false;
  }
  return m;
}

// ---------------------------------------------------------------- Tensor

Tensor Tensor::one(std::size_t arity) {
  Tensor t(arity);
  t.add_term(Key(arity, LocTerm{Word(), 0}), 1);
  return t;
}

Tensor Tensor::pure(const std::vector<LocalizedElement>& factors) {
  Tensor r = one(factors.size());
  for (std::size_t slot = 0; slot < factors.size(); ++slot) {
    Tensor next(factors.size());
    for (const auto& [k, c] : r.terms_)
      for (const auto& [t, x] : factors[slot].terms()) {
        Key nk = k;
        nk[slot] = t;
        next.add_term(nk, c * x);
      }
    r = std::move(next);
  }
  return r;
}

void Tensor::add_term(const Key& k, const Scalar& c) {
  if (k.size() != arity_) throw Error(ErrorCode::InvalidArgument, "tensor arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Tensor::add_scaled(const Tensor& o, const Scalar& c) {
  if (o.arity_ != arity_) throw Error(ErrorCode::InvalidArgument, "tensor arity mismatch");
  if (c == 0) return;
  for (const auto& [k, x] : o.terms_) add_term(k, x * c);
}

Tensor Tensor::operator+(const Tensor& o) const {
  Tensor r = *this;
  r.add_scaled(o, 1);
  return r;
}

Tensor Tensor::operator-(const Tensor& o) const {
  Tensor r = *this;
  r.add_scaled(o, -1);
  return r;
}

Tensor Tensor::scaled(const Scalar& c) const {
  Tensor r(arity_);
  r.add_scaled(*this, c);
  return r;
}

Tensor tensor_mul(const std::vector<const PresentedAlgebra*>& algs, const Tensor& x, const Tensor& y) {
  const std::size_t n = x.arity();
  if (y.arity() != n || algs.size() != n) throw Error(ErrorCode::InvalidArgument, "tensor arity mismatch");
  Tensor out(n);
  std::vector<LocalizedElement> slot(n);
  for (const auto& [k1, c1] : x.terms()) {
    for (const auto& [k2, c2] : y.terms()) {
      bool zero = false;
      for (std::size_t i = 0; i < n && !zero; ++i) {
        slot[i] = algs[i]->mul_terms(k1[i], k2[i]);
        zero = slot[i].is_zero();
      }
      if (zero) continue;
      Tensor p = Tensor::pure(slot);
      out.add_scaled(p, c1 * c2);
    }
  }
  return out;
}

std::string tensor_to_string(const std::vector<const PresentedAlgebra*>& algs, const Tensor& t) {
  if (t.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t.terms()) {
    os << (first ? "" : " + ") << "(" << to_display(c) << ")";
    first = false;
    for (std::size_t i = 0; i < k.size(); ++i)
      os << (i == 0 ? " " : " (x) ") << algs[i]->to_string(LocalizedElement::term(k[i].first, k[i].second));
  }
  return os.str();
}

// ---------------------------------------------------------------- kinds

const char* kind_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::GAB: return "GAB";
    case AlgebraKind::GABCD: return "GABCD";
    case AlgebraKind::SLq: return "SLq";
    case AlgebraKind::GLq: return "GLq";
    case AlgebraKind::SLqLaurent: return "SLqLaurent";
  }
  return "?";
}

AlgebraKind parse_kind(const std::string& s) {
  for (AlgebraKind k : {AlgebraKind::GAB, AlgebraKind::GABCD, AlgebraKind::SLq, AlgebraKind::GLq,
                        AlgebraKind::SLqLaurent})
    if (s == kind_name(k)) return k;
  throw Error(ErrorCode::ConfigInvalid, "unknown algebra kind '" + s + "'");
}

// ---------------------------------------------------------------- relations

std::vector<NCPoly> gabcd_relations(const ScalarMatrix& a, const ScalarMatrix& b, const ScalarMatrix& c,
                                    const ScalarMatrix& d, std::vector<std::string>* labels) {
  const std::size_t n = a.rows(), m = c.rows();
  const int det = static_cast<int>(n * m);
  auto u = [&](std::size_t i, std::size_t j) { return static_cast<int>(i * m + j); };
  std::vector<NCPoly> rels;
  // (u^t A u)_ij - C_ij D, i, j < m
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      NCPoly r;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) r.add_term(make_word({u(k, i), u(l, j)}), a(k, l));
      r.add_term(letter(det), -c(i, j));
      rels.push_back(std::move(r));
      if (labels) labels->push_back("(u^t A u - C D)_" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  // (u D u^t)_ij - B_ij D, i, j < n
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      NCPoly r;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) r.add_term(make_word({u(i, k), u(j, l)}), d(k, l));
      r.add_term(letter(det), -b(i, j));
      rels.push_back(std::move(r));
      if (labels) labels->push_back("(u D u^t - B D)_" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  return rels;
}

namespace {

std::vector<NCPoly> slq_relations(const Scalar& q, std::vector<std::string>* labels) {
  enum { A = 0, B = 1, C = 2, D = 3 };
  auto m = [](std::initializer_list<int> w, const Scalar& c = 1) { return NCPoly::monomial(make_word(w), c); };
  *labels = {"ab - q ba", "ac - q ca", "bc - cb", "bd - q db", "cd - q dc", "ad - q bc - 1", "da - q^-1 bc - 1"};
  return {m({A, B}) - m({B, A}, q), m({A, C}) - m({C, A}, q),
          m({B, C}) - m({C, B}),    m({B, D}) - m({D, B}, q),
          m({C, D}) - m({D, C}, q), m({A, D}) - m({B, C}, q) - NCPoly(1),
          m({D, A}) - m({B, C}, 1 / q) - NCPoly(1)};
}

void require_invertible(const ScalarMatrix& m, const char* what) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, std::string(what) + " is not square");
  if (!m.is_invertible()) throw Error(ErrorCode::NotInvertible, std::string(what) + " is not invertible");
}

MonomialOrder g_family_order(std::size_t n, std::size_t m) {
  const std::size_t N = n * m;
  std::vector<int> weights(N + 1, 1), prec(N + 1), ones(N + 1, 1), cls(N + 1, 0), diag(N + 1, 0);
  weights[N] = 2;
  cls[N] = 1;
  for (std::size_t i = 0; i <= N; ++i) prec[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < std::min(n, m); ++i) diag[i * m + i] = 1;
  return MonomialOrder(weights, prec,
                       {{OrderRefinement::Kind::Weight, ones},
                        {OrderRefinement::Kind::Lex, cls},
                        {OrderRefinement::Kind::Weight, diag}});
}

}  // namespace

// ---------------------------------------------------------------- build

AlgebraPtr build_presented(const AlgebraSpec& spec) {
  std::shared_ptr<PresentedAlgebra> alg(new PresentedAlgebra());
  alg->kind_ = spec.kind;
  alg->name_ = spec.name.empty() ? kind_name(spec.kind) : spec.name;
  std::vector<NCPoly> gens_for_gb;

  if (spec.kind == AlgebraKind::GAB || spec.kind == AlgebraKind::GLq || spec.kind == AlgebraKind::GABCD) {
    ScalarMatrix a = spec.a, b = spec.b, c, d;
    if (spec.kind == AlgebraKind::GLq) {
      if (spec.q == 0) throw Error(ErrorCode::InvalidArgument, "q must be nonzero");
      a = a_q(spec.q);
      b = a.inverse();
      alg->q_ = spec.q;
    }
    require_invertible(a, "A");
    require_invertible(b, "B");
    if (a.rows() != b.rows()) throw Error(ErrorCode::InvalidArgument, "A and B must have the same size");
    if (spec.kind == AlgebraKind::GABCD) {
      c = spec.c;
      d = spec.d;
      require_invertible(c, "C");
      require_invertible(d, "D");
      if (c.rows() != d.rows()) throw Error(ErrorCode::InvalidArgument, "C and D must have the same size");
    } else {
      if (a.rows() < 2) throw Error(ErrorCode::InvalidArgument, "matrix size must be at least 2");
      matrix_invariants(a, b);
      c = a;
      d = b;
    }
    const std::size_t n = a.rows(), m = c.rows(), N = n * m;
    alg->rows_ = n;
    alg->cols_ = m;
    alg->a_ = a;
    alg->b_ = b;
    alg->c_ = c;
    alg->d_ = d;
    if (spec.kind == AlgebraKind::GLq) {
      alg->names_ = {"a", "b", "c", "d", "D"};
    } else {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) alg->names_.push_back("u" + std::to_string(i + 1) + std::to_string(j + 1));
      alg->names_.push_back("D");
    }
    alg->localizer_ = static_cast<int>(N);
    alg->order_ = g_family_order(n, m);
    alg->relations_ = gabcd_relations(a, b, c, d, &alg->relation_labels_);
    // D u = sigma(u) D with sigma(u) = A^-1 B^-1 u D C.
    const ScalarMatrix left = a.inverse() * b.inverse(), right = d * c;
    const ScalarMatrix ileft = left.inverse(), iright = right.inverse();
    alg->sigma_identity_ = left == ScalarMatrix::identity(n) && right == ScalarMatrix::identity(m);
    alg->sigma_.assign(N + 1, NCPoly());
    alg->sigma_inv_.assign(N + 1, NCPoly());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        NCPoly s, si;
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < m; ++l) {
            s.add_term(letter(static_cast<int>(k * m + l)), left(i, k) * right(l, j));
            si.add_term(letter(static_cast<int>(k * m + l)), ileft(i, k) * iright(l, j));
          }
        const int g = static_cast<int>(i * m + j);
        alg->sigma_[g] = s;
        alg->sigma_inv_[g] = si;
        NCPoly rule = NCPoly::monomial(make_word({static_cast<int>(N), g}));
        rule.add_product(Word(), s, letter(static_cast<int>(N)), -1);
        alg->normality_.push_back(std::move(rule));
      }
  } else if (spec.kind == AlgebraKind::SLq || spec.kind == AlgebraKind::SLqLaurent) {
    if (spec.q == 0) throw Error(ErrorCode::InvalidArgument, "q must be nonzero");
    alg->q_ = spec.q;
    alg->rows_ = alg->cols_ = 2;
    alg->names_ = {"a", "b", "c", "d"};
    alg->relations_ = slq_relations(spec.q, &alg->relation_labels_);
    alg->a_ = a_q(spec.q);
    alg->b_ = alg->a_.inverse();
    if (spec.kind == AlgebraKind::SLq) {
      alg->order_ = MonomialOrder({1, 1, 1, 1}, {0, 1, 2, 3}, {{OrderRefinement::Kind::Weight, {1, 0, 0, 1}}});
    } else {
      alg->names_.push_back("z");
      alg->localizer_ = 4;
      alg->order_ = MonomialOrder({1, 1, 1, 1, 1}, {0, 1, 2, 3, 4},
                                  {{OrderRefinement::Kind::Lex, {0, 0, 0, 0, 1}},
                                   {OrderRefinement::Kind::Weight, {1, 0, 0, 1, 0}}});
      alg->sigma_.assign(5, NCPoly());
      alg->sigma_inv_.assign(5, NCPoly());
      for (int g = 0; g < 4; ++g) {
        alg->sigma_[g] = alg->sigma_inv_[g] = NCPoly::gen(static_cast<Gen>(g));
        alg->normality_.push_back(NCPoly::monomial(make_word({4, g})) - NCPoly::monomial(make_word({g, 4})));
      }
    }
  }
  gens_for_gb = alg->relations_;
  gens_for_gb.insert(gens_for_gb.end(), alg->normality_.begin(), alg->normality_.end());
  int max_rel = 0;
  for (const auto& r : gens_for_gb) max_rel = std::max(max_rel, r.max_weight(alg->order_));
  if (spec.degree_bound < max_rel)
    throw Error(ErrorCode::ExceedsCertifiedDegree, "degree bound " + std::to_string(spec.degree_bound) +
                                                       " is below the relation weight " + std::to_string(max_rel));
  alg->rs_ = std::make_shared<const RewriteSystem>(
      complete_cached(gens_for_gb, alg->order_, spec.degree_bound, spec.cache_dir, &alg->cache_hit_));
  return alg;
}

// ---------------------------------------------------------------- arithmetic

bool PresentedAlgebra::localizer_regular() const {
  if (!localizer_) return true;
  const char L = static_cast<char>(*localizer_);
  for (const auto& r : rs_->rules()) {
    const auto pos = r.lead.find(L, 1);
    if (pos != Word::npos) return false;
  }
  return true;
}

LocalizedElement PresentedAlgebra::gen(int g) const {
  if (localizer_ && g == *localizer_) return LocalizedElement::term(Word(), 1);
  return LocalizedElement::term(letter(g), 0);
}

LocalizedElement PresentedAlgebra::loc_power(int k) const {
  if (!localizer_ && k != 0) throw Error(ErrorCode::InvalidArgument, name_ + " has no localizer");
  return LocalizedElement::term(Word(), k);
}

LocalizedElement PresentedAlgebra::from_poly(const NCPoly& p) const {
  const NCPoly nf = rs_->normal_form(p);
  LocalizedElement out;
  for (const auto& [w, c] : nf.terms()) {
    std::size_t end = w.size();
    if (localizer_) {
      const char L = static_cast<char>(*localizer_);
      while (end > 0 && w[end - 1] == L) --end;
      if (w.find(L) < end)
        throw Error(ErrorCode::InvalidArgument, "localizer is not normal in " + name_ + " up to the certified degree");
    }
    out.add_term({w.substr(0, end), static_cast<int>(w.size() - end)}, c);
  }
  return out;
}

NCPoly PresentedAlgebra::apply_sigma(const NCPoly& p, int k) const {
  if (k == 0 || sigma_identity_) return p;
  NCPoly r = p;
  const auto& images = k > 0 ? sigma_ : sigma_inv_;
  for (int i = 0; i < std::abs(k); ++i) r = r.substitute(images);
  return r;
}

std::size_t PresentedAlgebra::TermKeyHash::operator()(const std::pair<LocTerm, LocTerm>& k) const {
  std::size_t h = std::hash<std::string>()(k.first.first);
  h = h * 1000003u ^ std::hash<int>()(k.first.second);
  h = h * 1000003u ^ std::hash<std::string>()(k.second.first);
  h = h * 1000003u ^ std::hash<int>()(k.second.second);
  return h;
}

LocalizedElement PresentedAlgebra::mul_terms(const LocTerm& x, const LocTerm& y) const {
  const auto key = std::make_pair(x, y);
  {
    std::lock_guard<std::mutex> lock(*mu_);
    auto it = mul_memo_.find(key);
    if (it != mul_memo_.end()) return it->second;
  }
  LocalizedElement out;
  if (y.first.empty()) {
    out = LocalizedElement::term(x.first, x.second + y.second);
  } else if (x.first.empty() && x.second == 0) {
    out = LocalizedElement::term(y.first, y.second);
  } else {
    // (v1 L^k1)(v2 L^k2) = v1 sigma^k1(v2) L^(k1+k2)
    NCPoly p;
    p.add_product(x.first, apply_sigma(NCPoly::monomial(y.first), x.second), Word(), 1);
    const LocalizedElement r = from_poly(p);
    for (const auto& [t, c] : r.terms()) out.add_term({t.first, t.second + x.second + y.second}, c);
  }
  std::lock_guard<std::mutex> lock(*mu_);
  mul_memo_.emplace(key, out);
  return out;
}

LocalizedElement PresentedAlgebra::mul(const LocalizedElement& x, const LocalizedElement& y) const {
  LocalizedElement out;
  for (const auto& [t1, c1] : x.terms())
    for (const auto& [t2, c2] : y.terms()) out.add_scaled(mul_terms(t1, t2), c1 * c2);
  return out;
}

LocalizedElement PresentedAlgebra::pow(const LocalizedElement& x, int e) const {
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative power");
  LocalizedElement r = one();
  for (int i = 0; i < e; ++i) r = mul(r, x);
  return r;
}

std::pair<NCPoly, int> PresentedAlgebra::fraction(const LocalizedElement& x) const {
  const int den = std::max(0, -x.min_exponent());
  NCPoly num;
  for (const auto& [t, c] : x.terms()) {
    Word w = t.first;
    if (t.second + den > 0) w += Word(static_cast<std::size_t>(t.second + den), static_cast<char>(*localizer_));
    num.add_term(w, c);
  }
  return {num, den};
}

int PresentedAlgebra::filtration_degree(const LocalizedElement& x) const {
  int deg = -1;
  const int lw = localizer_ ? order_.weight(static_cast<Gen>(*localizer_)) : 0;
  for (const auto& [t, c] : x.terms()) deg = std::max(deg, order_.weight(t.first) + lw * std::abs(t.second));
  return deg;
}

std::string PresentedAlgebra::to_string(const LocalizedElement& x) const {
  if (x.is_zero()) return "0";
  std::vector<std::pair<LocTerm, Scalar>> v(x.terms().begin(), x.terms().end());
  std::sort(v.begin(), v.end(), [&](const auto& p, const auto& q) {
    if (p.first.second != q.first.second) return p.first.second > q.first.second;
    return order_.compare(p.first.first, q.first.first) > 0;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : v) {
    const Scalar a = abs(c);
    os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
    first = false;
    std::string mono;
    if (!t.first.empty()) mono = word_to_string(t.first, names_);
    if (t.second != 0) {
      if (!mono.empty()) mono += "*";
      mono += names_.at(*localizer_);
      if (t.second != 1) mono += "^" + std::to_string(t.second);
    }
    if (mono.empty())
      os << to_display(a);
    else if (a == 1)
      os << mono;
    else
      os << to_display(a) << "*" << mono;
  }
  return os.str();
}

std::string PresentedAlgebra::to_string(const Tensor& t) const {
  std::vector<const PresentedAlgebra*> algs(t.arity(), this);
  return tensor_to_string(algs, t);
}

// ---------------------------------------------------------------- matrices of elements

ElemMatrix u_matrix(const PresentedAlgebra& alg) {
  ElemMatrix x(alg.rows(), std::vector<LocalizedElement>(alg.cols()));
  for (std::size_t i = 0; i < alg.rows(); ++i)
    for (std::size_t j = 0; j < alg.cols(); ++j) x[i][j] = alg.gen(alg.u(i, j));
  return x;
}

ElemMatrix transpose(const ElemMatrix& x) {
  if (x.empty()) return x;
  ElemMatrix t(x[0].size(), std::vector<LocalizedElement>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x[i].size(); ++j) t[j][i] = x[i][j];
  return t;
}

ElemMatrix operator*(const ScalarMatrix& m, const ElemMatrix& x) {
  const std::size_t cols = x.empty() ? 0 : x[0].size();
  if (m.cols() != x.size()) throw Error(ErrorCode::InvalidArgument, "matrix size mismatch");
  ElemMatrix r(m.rows(), std::vector<LocalizedElement>(cols));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < x.size(); ++k) r[i][j].add_scaled(x[k][j], m(i, k));
  return r;
}

ElemMatrix operator*(const ElemMatrix& x, const ScalarMatrix& m) {
  const std::size_t cols = x.empty() ? 0 : x[0].size();
  if (cols != m.rows()) throw Error(ErrorCode::InvalidArgument, "matrix size mismatch");
  ElemMatrix r(x.size(), std::vector<LocalizedElement>(m.cols()));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t k = 0; k < cols; ++k) r[i][j].add_scaled(x[i][k], m(k, j));
  return r;
}

ElemMatrix times_element(const ElemMatrix& x, const LocalizedElement& e, const PresentedAlgebra& alg, bool left) {
  ElemMatrix r = x;
  for (auto& row : r)
    for (auto& v : row) v = left ? alg.mul(e, v) : alg.mul(v, e);
  return r;
}

}  // namespace qg
