#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sqfree/word.hpp"

namespace sqfree {

/// A bifurcate tree: every child is a single-letter extension of its parent
/// at a distinct position.
struct TreeNode {
  Word word;
  std::size_t position = 0;  ///< Where `word` extends its parent.
  std::vector<TreeNode> children;
};

/// Memoized search for complete bifurcate trees over k letters.
///
/// complete_depth(W, d) holds iff d = 0, or every position of W admits a
/// letter whose square-free extension is complete to depth d - 1. Verdicts
/// are cached per canonical word as (deepest proven true, shallowest proven
/// false), which is sound because the property is monotone in d.
class CompleteTreeSearch {
 public:
  explicit CompleteTreeSearch(std::size_t k, std::uint64_t node_budget = 100'000'000);

  /// Throws PreconditionError unless root is square-free over k letters,
  /// and BudgetExhausted when the node budget runs out.
  bool complete_depth(const Word& root, std::size_t depth);

  /// The first complete tree found (positions and letters ascending), or
  /// nullopt when none of that depth exists.
  std::optional<TreeNode> witness_tree(const Word& root, std::size_t depth);

  std::size_t k() const noexcept { return k_; }
  std::uint64_t nodes_expanded() const noexcept { return nodes_; }
  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  struct Verdicts {
    std::size_t max_true = 0;
    std::size_t min_false = std::numeric_limits<std::size_t>::max();
  };

  bool solve(const Word& canonical, std::size_t depth);
  TreeNode build(const Word& w, std::size_t position, std::size_t depth);

  std::size_t k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<Word, Verdicts, WordHash> memo_;
};

struct DepthReport {
  /// Largest depth proven complete (up to the limit).
  std::size_t depth = 0;
  bool limit_reached = false;
  /// The next depth could not be decided within the budget.
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
  std::size_t memo_size = 0;
};

/// Largest d <= limit with complete_depth(root, k, d); the root defaults to
/// a single letter.
DepthReport max_complete_depth(std::size_t k, std::size_t limit,
                               std::uint64_t node_budget = 100'000'000,
                               const Word& root = Word{0});

struct ChainResult {
  std::vector<Word> chain;
  /// The whole space below the start word was explored, so `chain` is a
  /// longest chain (capped by the limit).
  bool exhaustive = false;
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};

/// Longest-found sequence of words, each bifurcate over k letters, where
/// every word is a single-letter extension (at any position) of the one
/// before. Dead ends are memoized per canonical word.
ChainResult find_chain(std::size_t k, std::size_t limit,
                       std::uint64_t node_budget = 100'000'000,
                       const Word& start = Word{0});

/// Whether w splits as XY with X and Y nonempty, X using at most two
/// letters and Y at most two others.
bool splits_into_letter_pairs(std::span<const Letter> w);

}  // namespace sqfree
