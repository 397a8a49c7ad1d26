#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "qg/ncpoly.hpp"
#include "qg/order.hpp"

namespace qg {

// lead -> tail, monic, every tail word strictly smaller than lead.
struct RewriteRule {
  Word lead;
  NCPoly tail;
  bool operator==(const RewriteRule&) const = default;
};

struct CompletionStats {
  std::size_t overlaps_processed = 0;
  std::size_t rules_added = 0;
  std::size_t rules_removed = 0;
  std::size_t batches = 0;
};

// Frozen rewrite system. Normal forms of words are memoized; the memo is
// guarded by a mutex so concurrent readers are safe.
class RewriteSystem {
 public:
  RewriteSystem(MonomialOrder order, std::vector<RewriteRule> rules, int certified_degree, bool complete,
                bool unit_collapse);

  const MonomialOrder& order() const { return order_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  int certified_degree() const { return certified_degree_; }
  // True when no overlap of any weight is left unresolved: a genuine Groebner basis.
  bool complete() const { return complete_; }
  bool unit_collapse() const { return unit_collapse_; }

  bool certifies(const NCPoly& p) const;
  bool certifies_weight(int w) const { return complete_ || w <= certified_degree_; }

  // Throws ExceedsCertifiedDegree when weight(p) exceeds the certified degree.
  NCPoly normal_form(const NCPoly& p) const;
  NCPoly normal_form_unchecked(const NCPoly& p) const;
  NCPoly normal_form_word(const Word& w) const;
  bool is_reducible(const Word& w) const;
  // True when some lead is a suffix of w.
  bool has_reducible_suffix(const Word& w) const;

  std::size_t max_lead_length() const { return max_lead_len_; }

 private:
  const RewriteRule* find_match(const Word& w, std::size_t* pos) const;
  NCPoly nf_word_locked(const Word& w) const;

  MonomialOrder order_;
  std::vector<RewriteRule> rules_;
  std::unordered_map<Word, std::size_t> lead_index_;
  std::size_t max_lead_len_ = 0;
  int certified_degree_ = 0;
  bool complete_ = false;
  bool unit_collapse_ = false;
  mutable std::unordered_map<Word, NCPoly> memo_;
  mutable std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
};

// Truncated two-sided completion: resolves every overlap whose overlap word has
// weight <= degree_bound. Overlaps are processed in batches of equal weight,
// ordered by (weight, overlap word under the order); the rule set is
// interreduced after every batch. A collapse (1 in the ideal) is recorded in
// the result rather than thrown.
RewriteSystem complete_truncated(const std::vector<NCPoly>& relations, const MonomialOrder& order, int degree_bound,
                                 CompletionStats* stats = nullptr);

enum class Membership { Yes, No, Uncertified };
const char* membership_name(Membership m);

Membership ideal_member(const NCPoly& p, const RewriteSystem& rs);

// All irreducible words of weight <= max_weight, ascending in the order.
std::vector<Word> enumerate_normal_words(const RewriteSystem& rs, int max_weight);

// Throws UnitCollapse when 1 reduces to 0; otherwise returns the certified degree.
int nonzero_witness(const RewriteSystem& rs);

struct ConfluenceReport {
  std::size_t overlaps_checked = 0;
  std::vector<std::string> failures;
};

// Recomputes every overlap of weight <= max_weight and checks it resolves.
ConfluenceReport verify_confluence(const RewriteSystem& rs, int max_weight);

}  // namespace qg
