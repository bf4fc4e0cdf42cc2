#pragma once
// Vanishing sums of roots of unity: construction, minimality, rotation
// canonicalization and the enumeration of all minimal relations of small weight.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polydiag/exactnum.hpp"

namespace polydiag::relations {

using exactnum::CycSum;
using exactnum::CyclotomicCache;
using exactnum::RootOfUnity;

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// A relation sum_i a_i * eta_i = 0 with distinct roots eta_i and a_i >= 1.
class Relation {
 public:
  using Terms = std::map<RootOfUnity, int>;

  // Throws std::invalid_argument unless the multiset sums to exactly zero.
  explicit Relation(const std::vector<std::pair<RootOfUnity, int>>& terms) {
    for (const auto& [root, mult] : terms) {
      if (mult <= 0) throw std::invalid_argument("relation multiplicities must be positive");
      terms_[root.reduced()] += mult;
    }
    if (terms_.empty()) throw std::invalid_argument("relation must have at least one term");
    finish();
    if (!exactnum::cyc_is_zero(to_cycsum())) {
      throw std::invalid_argument("terms do not sum to zero: " + str());
    }
  }

  const Terms& terms() const { return terms_; }
  int weight() const { return weight_; }
  std::int64_t ring_order() const { return order_; }
  std::size_t size() const { return terms_.size(); }

  bool contains(const RootOfUnity& root) const { return terms_.count(root) != 0; }
  int multiplicity(const RootOfUnity& root) const {
    auto it = terms_.find(root);
    return it == terms_.end() ? 0 : it->second;
  }

  CycSum to_cycsum() const {
    CycSum s(order_);
    for (const auto& [root, mult] : terms_) s.add_root(root, mult);
    return s;
  }

  Relation rotated(const RootOfUnity& by) const {
    Relation out;
    for (const auto& [root, mult] : terms_) out.terms_.emplace(root * by, mult);
    out.finish();
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [root, mult] : terms_) {
      if (!first) os << " + ";
      first = false;
      if (mult != 1) os << mult << "*";
      os << root;
    }
    return os.str();
  }

  friend bool operator==(const Relation& a, const Relation& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const Relation& a, const Relation& b) {
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                                        b.terms_.end());
  }

 private:
  Relation() = default;

  void finish() {
    weight_ = 0;
    order_ = 1;
    for (const auto& [root, mult] : terms_) {
      weight_ += mult;
      order_ = exactnum::lcm64(order_, root.reduced().order());
    }
  }

  friend Relation build_unchecked(Terms terms);

  Terms terms_;
  int weight_ = 0;
  std::int64_t order_ = 1;
};

inline Relation build_unchecked(Relation::Terms terms) {
  Relation r;
  r.terms_ = std::move(terms);
  r.finish();
  return r;
}

// 1 + z_p + ... + z_p^(p-1) = 0.
inline Relation base_relation(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  std::vector<std::pair<RootOfUnity, int>> terms;
  for (std::int64_t e = 0; e < p; ++e) terms.emplace_back(RootOfUnity(p, e), 1);
  return Relation(terms);
}

struct Subtrahend {
  Relation relation;   // already rotated so that it contains `anchor`
  RootOfUnity anchor;  // the single root shared with the outer relation
};

// (S : T_1, ..., T_j): subtract each T_i from S, cancelling the shared anchor
// and turning the remaining roots of T_i into their negatives.
inline Relation compose(const Relation& outer, const std::vector<Subtrahend>& subtrahends) {
  Relation::Terms terms = outer.terms();
  std::set<RootOfUnity> used_anchors;
  std::vector<std::pair<RootOfUnity, int>> added;
  for (const Subtrahend& sub : subtrahends) {
    const RootOfUnity anchor = sub.anchor.reduced();
    if (!used_anchors.insert(anchor).second) {
      throw std::invalid_argument("anchor " + std::to_string(anchor.exponent()) + "/" +
                                  std::to_string(anchor.order()) + " used twice");
    }
    if (outer.multiplicity(anchor) == 0) {
      throw std::invalid_argument("anchor is not a root of the outer relation");
    }
    if (sub.relation.multiplicity(anchor) != 1) {
      throw std::invalid_argument("subtrahend must contain its anchor exactly once");
    }
    for (const auto& [root, mult] : sub.relation.terms()) {
      if (root == anchor) continue;
      if (outer.contains(root)) {
        throw std::invalid_argument("subtrahend shares more than its anchor with the outer relation");
      }
      added.emplace_back(root.negated(), mult);
    }
    auto it = terms.find(anchor);
    if (--it->second == 0) terms.erase(it);
  }
  for (const auto& [root, mult] : added) terms[root] += mult;
  std::vector<std::pair<RootOfUnity, int>> flat(terms.begin(), terms.end());
  return Relation(flat);
}

// Minimal: no sub-multiset 0 <= b_i <= a_i, other than 0 and a, sums to zero.
inline bool is_minimal(const Relation& r, CyclotomicCache& cache) {
  std::vector<std::pair<std::int64_t, int>> terms;
  const std::int64_t n = r.ring_order();
  for (const auto& [root, mult] : r.terms()) terms.emplace_back(root.exponent_in(n), mult);
  const auto& tester = cache.get(n);

  // Mixed-radix counter over b. A sub-multiset vanishes iff its complement
  // does, so only b with b_0 <= a_0 / 2 (lexicographically "lower half") needs
  // checking, but the plain scan is cheap enough at weight <= 12.
  std::vector<int> b(terms.size(), 0);
  std::vector<std::pair<std::int64_t, std::int64_t>> sparse;
  sparse.reserve(terms.size());
  while (true) {
    std::size_t i = 0;
    while (i < b.size() && b[i] == terms[i].second) {
      b[i] = 0;
      ++i;
    }
    if (i == b.size()) break;
    ++b[i];
    bool full = true;
    int picked = 0;
    sparse.clear();
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (b[k] != terms[k].second) full = false;
      if (b[k] != 0) {
        sparse.emplace_back(terms[k].first, b[k]);
        picked += b[k];
      }
    }
    if (full) continue;
    if (picked < 2) continue;
    if (tester.is_zero_terms(sparse)) return false;
  }
  return true;
}

inline bool is_minimal(const Relation& r) {
  CyclotomicCache cache;
  return is_minimal(r, cache);
}

// Lexicographically least rotation; equal for rotation-equivalent relations.
inline Relation canonical_form(const Relation& r) {
  // The least rotation contains the root 1, so it is one of the rotations that
  // send some term to 1.
  const Relation* best = nullptr;
  Relation current = r;
  Relation winner = r;
  for (const auto& [root, mult] : r.terms()) {
    current = r.rotated(root.inverse());
    if (best == nullptr || current < winner) {
      winner = current;
      best = &winner;
    }
  }
  return winner;
}

// ---------------------------------------------------------------------------
// Relation types and the enumeration

// Composition tree (R_p : T_1, ..., T_j). A leaf is R_p itself.
struct RelationType {
  std::int64_t prime = 2;
  std::vector<RelationType> subtrahends;  // sorted, see normalize()

  int weight() const {
    int w = static_cast<int>(prime);
    for (const auto& t : subtrahends) w += t.weight() - 2;
    return w;
  }

  int max_subtrahend_weight() const {
    int w = 0;
    for (const auto& t : subtrahends) w = std::max(w, t.weight());
    return w;
  }

  // Nested label, e.g. "(R_7:(R_5:R_3),R_3)" or "(R_5:2R_3)".
  std::string label() const {
    if (subtrahends.empty()) return "R_" + std::to_string(prime);
    std::string out = "(R_" + std::to_string(prime) + ":";
    bool first = true;
    for (std::size_t i = 0; i < subtrahends.size();) {
      std::size_t j = i;
      while (j < subtrahends.size() && subtrahends[j] == subtrahends[i]) ++j;
      if (!first) out += ",";
      first = false;
      if (j - i > 1) out += std::to_string(j - i);
      out += subtrahends[i].label();
      i = j;
    }
    return out + ")";
  }

  // Heavier subtrahends first, ties broken by label.
  void normalize() {
    std::sort(subtrahends.begin(), subtrahends.end(), [](const RelationType& a, const RelationType& b) {
      if (a.weight() != b.weight()) return a.weight() > b.weight();
      return a.label() < b.label();
    });
  }

  friend bool operator==(const RelationType& a, const RelationType& b) {
    return a.prime == b.prime && a.subtrahends == b.subtrahends;
  }
};

struct RelationClass {
  RelationType type;
  std::string label;
  std::size_t count = 0;
};

struct ClassEntry {
  RelationClass cls;
  std::vector<Relation> relations;  // canonical forms, sorted
};

inline constexpr int kMaxEnumerationWeight = 12;

namespace detail {

struct KnownClass {
  RelationType type;
  std::vector<Relation> relations;
  // Distinct rotations of the class members that contain the root 1.
  std::vector<Relation> anchored_at_one;
};

inline std::vector<Relation> anchored_variants(const std::vector<Relation>& members) {
  std::vector<Relation> out;
  for (const Relation& rel : members) {
    for (const auto& [root, mult] : rel.terms()) {
      if (mult != 1) continue;
      Relation v = rel.rotated(root.inverse());
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All multisets (as nondecreasing index lists) of candidate classes with total
// cost <= budget and size <= max_count.
inline void cost_multisets(const std::vector<int>& costs, int budget, std::size_t max_count,
                           std::size_t start, std::vector<std::size_t>& current,
                           std::vector<std::vector<std::size_t>>& out) {
  out.push_back(current);
  if (current.size() == max_count) return;
  for (std::size_t i = start; i < costs.size(); ++i) {
    if (costs[i] > budget) continue;
    current.push_back(i);
    cost_multisets(costs, budget - costs[i], max_count, i, current, out);
    current.pop_back();
  }
}

}  // namespace detail

// All minimal relations of weight <= max_weight up to rotation, grouped by
// composition type. Candidates come from the (R_p : T_1..T_j) grammar with
// w < 2p; every candidate is canonicalized, deduplicated and filtered for
// minimality.
inline std::vector<ClassEntry> enumerate_minimal(int max_weight = kMaxEnumerationWeight) {
  if (max_weight > kMaxEnumerationWeight) {
    throw std::out_of_range("minimal relation enumeration supports weight <= 12");
  }
  std::vector<detail::KnownClass> known;
  std::set<Relation> seen;  // canonical forms across all classes
  CyclotomicCache cache;

  for (std::int64_t p = 2; p <= max_weight; ++p) {
    if (!is_prime(p)) continue;
    const Relation outer = base_relation(p);
    const int budget = max_weight - static_cast<int>(p);

    // Subtrahend classes: strictly smaller primes, never R_2.
    std::vector<std::size_t> allowed;
    std::vector<int> costs;
    for (std::size_t i = 0; i < known.size(); ++i) {
      const auto& type = known[i].type;
      if (type.prime >= p) continue;
      if (type.subtrahends.empty() && type.prime == 2) continue;
      allowed.push_back(i);
      costs.push_back(type.weight() - 2);
    }
    std::vector<std::vector<std::size_t>> multisets;
    std::vector<std::size_t> scratch;
    detail::cost_multisets(costs, budget, static_cast<std::size_t>(p - 1), 0, scratch, multisets);

    std::vector<detail::KnownClass> fresh;
    for (const auto& ms : multisets) {
      RelationType type;
      type.prime = p;
      for (std::size_t idx : ms) type.subtrahends.push_back(known[allowed[idx]].type);
      type.normalize();

      // Group identical subtrahend classes: anchors for a group are chosen as
      // an increasing combination, variants independently per slot.
      std::vector<std::pair<std::size_t, std::size_t>> groups;  // (known index, count)
      for (std::size_t idx : ms) {
        const std::size_t k = allowed[idx];
        if (!groups.empty() && groups.back().first == k) {
          ++groups.back().second;
        } else {
          groups.emplace_back(k, 1);
        }
      }

      std::vector<Relation> members;
      std::vector<Subtrahend> subs;
      std::vector<bool> anchor_used(static_cast<std::size_t>(p), false);

      std::function<void(std::size_t, std::size_t, std::int64_t)> place =
          [&](std::size_t group, std::size_t slot, std::int64_t min_anchor) {
            if (group == groups.size()) {
              const Relation candidate = canonical_form(compose(outer, subs));
              if (seen.count(candidate) != 0) return;
              seen.insert(candidate);
              if (is_minimal(candidate, cache)) members.push_back(candidate);
              return;
            }
            const auto& [k, count] = groups[group];
            if (slot == count) {
              place(group + 1, 0, 0);
              return;
            }
            for (std::int64_t a = min_anchor; a < p; ++a) {
              if (anchor_used[static_cast<std::size_t>(a)]) continue;
              anchor_used[static_cast<std::size_t>(a)] = true;
              const RootOfUnity anchor(p, a);
              for (const Relation& variant : known[k].anchored_at_one) {
                subs.push_back(Subtrahend{variant.rotated(anchor), anchor});
                place(group, slot + 1, a + 1);
                subs.pop_back();
              }
              anchor_used[static_cast<std::size_t>(a)] = false;
            }
          };
      place(0, 0, 0);

      if (members.empty()) continue;
      std::sort(members.begin(), members.end());
      detail::KnownClass kc{type, members, {}};
      kc.anchored_at_one = detail::anchored_variants(kc.relations);
      fresh.push_back(std::move(kc));
    }
    for (auto& kc : fresh) known.push_back(std::move(kc));
  }

  std::vector<ClassEntry> out;
  for (auto& kc : known) {
    ClassEntry entry;
    entry.cls.type = kc.type;
    entry.cls.label = kc.type.label();
    entry.cls.count = kc.relations.size();
    entry.relations = std::move(kc.relations);
    out.push_back(std::move(entry));
  }
  std::stable_sort(out.begin(), out.end(), [](const ClassEntry& a, const ClassEntry& b) {
    const int wa = a.cls.type.weight(), wb = b.cls.type.weight();
    if (wa != wb) return wa < wb;
    if (a.cls.type.prime != b.cls.type.prime) return a.cls.type.prime < b.cls.type.prime;
    return a.cls.type.max_subtrahend_weight() < b.cls.type.max_subtrahend_weight();
  });
  return out;
}

inline std::size_t total_relations(const std::vector<ClassEntry>& entries) {
  std::size_t total = 0;
  for (const auto& e : entries) total += e.cls.count;
  return total;
}

}  // namespace polydiag::relations
