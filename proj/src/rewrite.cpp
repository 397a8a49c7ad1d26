#include "qg/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "qg/errors.hpp"

namespace qg {

namespace {

bool contains_subword(const Word& hay, const Word& needle) {
  return needle.size() <= hay.size() && hay.find(needle) != Word::npos;
}

struct OverlapItem {
  int weight;
  Word word;
  Word lead1;
  Word lead2;
  std::size_t k;  // length of the shared part: suffix of lead1 == prefix of lead2
};

// For leads l1 = x y and l2 = y z with |y| = k, calls f(k, x y z).
template <typename F>
void for_each_overlap(const Word& l1, const Word& l2, F&& f) {
  const std::size_t m = std::min(l1.size(), l2.size());
  for (std::size_t k = 1; k < m; ++k) {
    if (l1.compare(l1.size() - k, k, l2, 0, k) == 0) f(k, l1 + l2.substr(k));
  }
}

NCPoly s_poly(const Word& l1, const NCPoly& t1, const Word& l2, const NCPoly& t2, std::size_t k) {
  const Word x = l1.substr(0, l1.size() - k);
  const Word z = l2.substr(k);
  NCPoly s;
  s.add_product(Word(), t1, z, 1);
  s.add_product(x, t2, Word(), -1);
  return s;
}

class Completer {
 public:
  Completer(const MonomialOrder& order, int bound)
      : order_(order), bound_(bound), queue_(QueueLess{&order_}) {}

  void run(const std::vector<NCPoly>& relations, CompletionStats* stats) {
    insert_batch(relations);
    while (!collapse_ && !queue_.empty()) {
      const int w = queue_.begin()->weight;
      std::vector<NCPoly> pending;
      while (!queue_.empty() && queue_.begin()->weight == w) {
        OverlapItem it = *queue_.begin();
        queue_.erase(queue_.begin());
        auto r1 = rules_.find(it.lead1);
        auto r2 = rules_.find(it.lead2);
        if (r1 == rules_.end() || r2 == rules_.end()) continue;
        ++stats_.overlaps_processed;
        NCPoly s = reduce(s_poly(it.lead1, r1->second, it.lead2, r2->second, it.k));
        if (!s.is_zero()) pending.push_back(std::move(s));
      }
      ++stats_.batches;
      if (!pending.empty()) insert_batch(pending);
    }
    if (stats) *stats = stats_;
  }

  RewriteSystem result() const {
    std::vector<RewriteRule> rules;
    if (collapse_) {
      rules.push_back({Word(), NCPoly()});
      return RewriteSystem(order_, std::move(rules), bound_, true, true);
    }
    for (const auto& [lead, tail] : rules_) rules.push_back({lead, tail});
    std::sort(rules.begin(), rules.end(),
              [&](const RewriteRule& a, const RewriteRule& b) { return order_.less(a.lead, b.lead); });
    // Complete when every overlap among the final rules lies within the bound,
    // since all of those have been resolved.
    bool complete = true;
    for (const auto& a : rules) {
      for (const auto& b : rules) {
        for_each_overlap(a.lead, b.lead, [&](std::size_t, const Word& w) {
          if (order_.weight(w) > bound_) complete = false;
        });
        if (!complete) break;
      }
      if (!complete) break;
    }
    return RewriteSystem(order_, std::move(rules), bound_, complete, false);
  }

 private:
  struct QueueLess {
    const MonomialOrder* order;
    bool operator()(const OverlapItem& a, const OverlapItem& b) const {
      if (a.weight != b.weight) return a.weight < b.weight;
      const int c = order->compare(a.word, b.word);
      if (c != 0) return c < 0;
      return std::tie(a.lead1, a.lead2, a.k) < std::tie(b.lead1, b.lead2, b.k);
    }
  };

  const NCPoly& reduce_word(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    NCPoly out;
    bool matched = false;
    for (std::size_t i = 0; i < w.size() && !matched; ++i) {
      const std::size_t lim = std::min(max_len_, w.size() - i);
      for (std::size_t l = 1; l <= lim; ++l) {
        auto r = rules_.find(w.substr(i, l));
        if (r == rules_.end()) continue;
        const Word pre = w.substr(0, i);
        const Word post = w.substr(i + l);
        for (const auto& [tw, c] : r->second.terms()) out.add_scaled(reduce_word(pre + tw + post), c);
        matched = true;
        break;
      }
    }
    if (!matched) out = NCPoly::monomial(w);
    return memo_.emplace(w, std::move(out)).first->second;
  }

  NCPoly reduce(const NCPoly& p) {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) out.add_scaled(reduce_word(w), c);
    return out;
  }

  bool lead_reducible(const Word& w) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::size_t lim = std::min(max_len_, w.size() - i);
      for (std::size_t l = 1; l <= lim; ++l)
        if (rules_.count(w.substr(i, l))) return true;
    }
    return false;
  }

  // Reduced row echelon form over the words: distinct monic leads, no row
  // containing another row's lead.
  std::vector<NCPoly> echelon(std::vector<NCPoly> polys) const {
    std::map<Word, NCPoly, OrderLess> rows(OrderLess{&order_});
    for (auto& p : polys) {
      for (const auto& [lead, row] : rows) {
        const Scalar c = p.coeff(lead);
        if (c != 0) p.add_scaled(row, -c);
      }
      if (p.is_zero()) continue;
      const Word lead = p.lead(order_);
      p = p.scaled(1 / p.coeff(lead));
      for (auto& [l, row] : rows) {
        const Scalar c = row.coeff(lead);
        if (c != 0) row.add_scaled(p, -c);
      }
      rows.emplace(lead, std::move(p));
    }
    std::vector<NCPoly> out;
    for (auto& [l, row] : rows) out.push_back(std::move(row));
    return out;
  }

  void add_rule(const Word& lead, NCPoly tail) {
    rules_.emplace(lead, std::move(tail));
    max_len_ = std::max(max_len_, lead.size());
    ++stats_.rules_added;
    for (const auto& [other, t] : rules_) {
      enqueue(lead, other);
      if (other != lead) enqueue(other, lead);
    }
  }

  void enqueue(const Word& l1, const Word& l2) {
    for_each_overlap(l1, l2, [&](std::size_t k, const Word& w) {
      const int wt = order_.weight(w);
      if (wt <= bound_) queue_.insert(OverlapItem{wt, w, l1, l2, k});
    });
  }

  void insert_batch(std::vector<NCPoly> pending) {
    while (!pending.empty() && !collapse_) {
      std::vector<NCPoly> reduced;
      for (const auto& p : pending) {
        NCPoly r = reduce(p);
        if (!r.is_zero()) reduced.push_back(std::move(r));
      }
      pending.clear();
      std::vector<NCPoly> rows = echelon(std::move(reduced));
      std::sort(rows.begin(), rows.end(),
                [&](const NCPoly& a, const NCPoly& b) { return order_.less(a.lead(order_), b.lead(order_)); });
      bool changed = false;
      for (auto& row : rows) {
        const Word lead = row.lead(order_);
        if (lead.empty()) {
          collapse_ = true;
          return;
        }
        if (changed && lead_reducible(lead)) {
          pending.push_back(std::move(row));
          continue;
        }
        for (auto it = rules_.begin(); it != rules_.end();) {
          if (contains_subword(it->first, lead)) {
            NCPoly back = NCPoly::monomial(it->first) - it->second;
            pending.push_back(std::move(back));
            it = rules_.erase(it);
            ++stats_.rules_removed;
          } else {
            ++it;
          }
        }
        NCPoly tail = NCPoly::monomial(lead) - row;
        add_rule(lead, std::move(tail));
        changed = true;
      }
      memo_.clear();
    }
    if (collapse_) return;
    for (auto& [lead, tail] : rules_) tail = reduce(tail);
  }

  const MonomialOrder& order_;
  int bound_;
  std::unordered_map<Word, NCPoly> rules_;
  std::size_t max_len_ = 0;
  std::unordered_map<Word, NCPoly> memo_;
  std::set<OverlapItem, QueueLess> queue_;
  CompletionStats stats_;
  bool collapse_ = false;
};

}  // namespace

RewriteSystem::RewriteSystem(MonomialOrder order, std::vector<RewriteRule> rules, int certified_degree, bool complete,
                             bool unit_collapse)
    : order_(std::move(order)),
      rules_(std::move(rules)),
      certified_degree_(certified_degree),
      complete_(complete),
      unit_collapse_(unit_collapse) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    lead_index_.emplace(rules_[i].lead, i);
    max_lead_len_ = std::max(max_lead_len_, rules_[i].lead.size());
  }
}

bool RewriteSystem::certifies(const NCPoly& p) const { return certifies_weight(p.max_weight(order_)); }

const RewriteRule* RewriteSystem::find_match(const Word& w, std::size_t* pos) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::size_t lim = std::min(max_lead_len_, w.size() - i);
    for (std::size_t l = 1; l <= lim; ++l) {
      auto it = lead_index_.find(w.substr(i, l));
      if (it != lead_index_.end()) {
        *pos = i;
        return &rules_[it->second];
      }
    }
  }
  return nullptr;
}

bool RewriteSystem::is_reducible(const Word& w) const {
  if (unit_collapse_) return true;
  std::size_t pos = 0;
  return find_match(w, &pos) != nullptr;
}

bool RewriteSystem::has_reducible_suffix(const Word& w) const {
  if (unit_collapse_) return true;
  const std::size_t lim = std::min(max_lead_len_, w.size());
  for (std::size_t l = 1; l <= lim; ++l)
    if (lead_index_.count(w.substr(w.size() - l))) return true;
  return false;
}

NCPoly RewriteSystem::nf_word_locked(const Word& w) const {
  // Iterative worklist so deep rewrite chains do not exhaust the stack.
  std::vector<Word> stack{w};
  while (!stack.empty()) {
    const Word cur = stack.back();
    if (memo_.count(cur)) {
      stack.pop_back();
      continue;
    }
    std::size_t pos = 0;
    const RewriteRule* r = find_match(cur, &pos);
    if (!r) {
      memo_.emplace(cur, NCPoly::monomial(cur));
      stack.pop_back();
      continue;
    }
    const Word pre = cur.substr(0, pos);
    const Word post = cur.substr(pos + r->lead.size());
    bool ready = true;
    for (const auto& [tw, c] : r->tail.terms()) {
      Word next = pre + tw + post;
      if (!memo_.count(next)) {
        stack.push_back(std::move(next));
        ready = false;
      }
    }
    if (!ready) continue;
    NCPoly out;
    for (const auto& [tw, c] : r->tail.terms()) out.add_scaled(memo_.at(pre + tw + post), c);
    memo_.emplace(cur, std::move(out));
    stack.pop_back();
  }
  return memo_.at(w);
}

NCPoly RewriteSystem::normal_form_word(const Word& w) const {
  if (unit_collapse_) return NCPoly();
  std::lock_guard<std::mutex> lock(*mu_);
  return nf_word_locked(w);
}

NCPoly RewriteSystem::normal_form_unchecked(const NCPoly& p) const {
  if (unit_collapse_) return NCPoly();
  std::lock_guard<std::mutex> lock(*mu_);
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    if (!memo_.count(w)) nf_word_locked(w);
    out.add_scaled(memo_.at(w), c);
  }
  return out;
}

NCPoly RewriteSystem::normal_form(const NCPoly& p) const {
  if (!certifies(p))
    throw Error(ErrorCode::ExceedsCertifiedDegree, "weight " + std::to_string(p.max_weight(order_)) +
                                                       " exceeds certified degree " +
                                                       std::to_string(certified_degree_));
  return normal_form_unchecked(p);
}

RewriteSystem complete_truncated(const std::vector<NCPoly>& relations, const MonomialOrder& order, int degree_bound,
                                 CompletionStats* stats) {
  if (degree_bound < 0) throw Error(ErrorCode::InvalidArgument, "degree bound must be non-negative");
  Completer c(order, degree_bound);
  c.run(relations, stats);
  return c.result();
}

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::Yes: return "Yes";
    case Membership::No: return "No";
    case Membership::Uncertified: return "Uncertified";
  }
  return "?";
}

Membership ideal_member(const NCPoly& p, const RewriteSystem& rs) {
  if (!rs.certifies(p)) return Membership::Uncertified;
  return rs.normal_form_unchecked(p).is_zero() ? Membership::Yes : Membership::No;
}

std::vector<Word> enumerate_normal_words(const RewriteSystem& rs, int max_weight) {
  std::vector<Word> out;
  if (rs.unit_collapse() || max_weight < 0) return out;
  const MonomialOrder& ord = rs.order();
  std::vector<Word> frontier{Word()};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      out.push_back(w);
      for (std::size_t g = 0; g < ord.num_gens(); ++g) {
        Word e = w + letter(static_cast<int>(g));
        if (ord.weight(e) > max_weight || rs.has_reducible_suffix(e)) continue;
        next.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), OrderLess{&ord});
  return out;
}

int nonzero_witness(const RewriteSystem& rs) {
  if (rs.unit_collapse() || rs.normal_form_unchecked(NCPoly(1)).is_zero())
    throw Error(ErrorCode::UnitCollapse, "1 reduces to 0: the presented algebra is zero");
  return rs.certified_degree();
}

ConfluenceReport verify_confluence(const RewriteSystem& rs, int max_weight) {
  ConfluenceReport rep;
  const auto& rules = rs.rules();
  for (const auto& a : rules) {
    for (const auto& b : rules) {
      for_each_overlap(a.lead, b.lead, [&](std::size_t k, const Word& w) {
        if (rs.order().weight(w) > max_weight) return;
        ++rep.overlaps_checked;
        NCPoly s = rs.normal_form_unchecked(s_poly(a.lead, a.tail, b.lead, b.tail, k));
        if (!s.is_zero()) rep.failures.push_back("overlap of weight " + std::to_string(rs.order().weight(w)));
      });
    }
  }
  return rep;
}

}  // namespace qg
