#include "sqfree/bifurcate_trees.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sqfree/errors.hpp"
#include "sqfree/predicates.hpp"
#include "sqfree/repetition.hpp"

namespace sqfree {

CompleteTreeSearch::CompleteTreeSearch(std::size_t k, std::uint64_t node_budget)
    : k_(k), budget_(node_budget) {
  if (k == 0 || k > kMaxAlphabet) throw std::invalid_argument("alphabet size out of range");
}

bool CompleteTreeSearch::complete_depth(const Word& root, std::size_t depth) {
  if (root.letter_bound() > k_) throw PreconditionError("root uses letters outside the alphabet");
  if (!is_square_free(root)) throw PreconditionError("root is not square-free");
  return solve(canonicalize(root), depth);
}

bool CompleteTreeSearch::solve(const Word& w, std::size_t depth) {
  if (depth == 0) return true;
  {
    auto it = memo_.find(w);
    if (it != memo_.end()) {
      if (depth <= it->second.max_true) return true;
      if (depth >= it->second.min_false) return false;
    }
  }
  if (++nodes_ > budget_) throw BudgetExhausted("complete tree search exceeded its node budget", nodes_);

  // w is canonical, so its letters are 0..bound-1 and any fresh letter is
  // equivalent to `bound`.
  const std::size_t bound = w.letter_bound();
  const std::size_t top = std::min(bound, k_ - 1);
  bool complete = true;
  std::vector<Letter> buf;
  for (std::size_t i = 0; i <= w.size() && complete; ++i) {
    bool found = false;
    for (std::size_t x = 0; x <= top && !found; ++x) {
      if (!insertion_square_free(w, i, static_cast<Letter>(x), buf)) continue;
      found = solve(canonicalize(buf), depth - 1);
    }
    complete = found;
  }
  auto& v = memo_[w];
  if (complete)
    v.max_true = std::max(v.max_true, depth);
  else
    v.min_false = std::min(v.min_false, depth);
  return complete;
}

std::optional<TreeNode> CompleteTreeSearch::witness_tree(const Word& root, std::size_t depth) {
  if (!complete_depth(root, depth)) return std::nullopt;
  return build(root, 0, depth);
}

TreeNode CompleteTreeSearch::build(const Word& w, std::size_t position, std::size_t depth) {
  TreeNode node{w, position, {}};
  if (depth == 0) return node;
  std::vector<Letter> buf;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    for (std::size_t x = 0; x < k_; ++x) {
      if (!insertion_square_free(w, i, static_cast<Letter>(x), buf)) continue;
      Word ext(buf);
      if (solve(canonicalize(ext), depth - 1)) {
        node.children.push_back(build(ext, i, depth - 1));
        break;
      }
    }
  }
  return node;
}

DepthReport max_complete_depth(std::size_t k, std::size_t limit, std::uint64_t node_budget,
                               const Word& root) {
  if (limit < 1) throw std::invalid_argument("limit must be at least 1");
  CompleteTreeSearch search(k, node_budget);
  DepthReport report;
  for (std::size_t d = 1; d <= limit; ++d) {
    bool ok = false;
    try {
      ok = search.complete_depth(root, d);
    } catch (const BudgetExhausted&) {
      report.budget_exhausted = true;
      break;
    }
    if (!ok) break;
    report.depth = d;
  }
  report.limit_reached = !report.budget_exhausted && report.depth == limit;
  report.nodes = search.nodes_expanded();
  report.memo_size = search.memo_size();
  return report;
}

namespace {

class ChainSearch {
 public:
  ChainSearch(std::size_t k, std::size_t limit, std::uint64_t budget)
      : k_(k), limit_(limit), budget_(budget) {}

  ChainResult run(const Word& start) {
    ChainResult result;
    if (is_square_free(start) && bifurcate_over(start, k_)) explore(start);
    result.chain = best_;
    result.budget_exhausted = out_of_budget_;
    result.exhaustive = !stop_;
    result.nodes = nodes_;
    return result;
  }

 private:
  // Returns the number of words in the longest chain starting at w, when
  // the subtree was fully explored.
  std::size_t explore(const Word& w) {
    path_.push_back(w);
    if (path_.size() > best_.size()) best_ = path_;
    if (best_.size() >= limit_) stop_ = true;
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      stop_ = true;
    }

    std::size_t longest = 1;
    std::set<Word> seen;
    std::vector<Letter> buf;
    const std::size_t top = std::min(w.letter_bound(), k_ - 1);
    for (std::size_t i = 0; i <= w.size() && !stop_; ++i) {
      for (std::size_t x = 0; x <= top && !stop_; ++x) {
        if (!insertion_square_free(w, i, static_cast<Letter>(x), buf)) continue;
        Word ext(buf);
        Word key = canonicalize(ext);
        if (!seen.insert(key).second) continue;
        auto it = dead_.find(key);
        if (it != dead_.end()) {
          longest = std::max(longest, it->second + 1);
          if (path_.size() + it->second <= best_.size()) continue;
        }
        if (!bifurcate_over(ext, k_)) {
          dead_[key] = 0;
          continue;
        }
        longest = std::max(longest, explore(ext) + 1);
      }
    }
    if (!stop_) dead_[canonicalize(w)] = longest;
    path_.pop_back();
    return longest;
  }

  std::size_t k_, limit_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
  bool out_of_budget_ = false;
  std::vector<Word> path_, best_;
  // Longest chain length from a fully explored canonical word; 0 marks a
  // word that is not bifurcate.
  std::unordered_map<Word, std::size_t, WordHash> dead_;
};

}  // namespace

ChainResult find_chain(std::size_t k, std::size_t limit, std::uint64_t node_budget,
                       const Word& start) {
  if (limit < 1) throw std::invalid_argument("limit must be at least 1");
  if (k == 0 || k > kMaxAlphabet) throw std::invalid_argument("alphabet size out of range");
  if (start.letter_bound() > k) throw PreconditionError("start uses letters outside the alphabet");
  return ChainSearch(k, limit, node_budget).run(start);
}

bool splits_into_letter_pairs(std::span<const Letter> w) {
  for (std::size_t cut = 1; cut < w.size(); ++cut) {
    std::set<Letter> left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
    std::set<Letter> right(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
    if (left.size() > 2 || right.size() > 2) continue;
    bool disjoint = std::none_of(left.begin(), left.end(),
                                 [&](Letter x) { return right.count(x) > 0; });
    if (disjoint) return true;
  }
  return false;
}

}  // namespace sqfree
