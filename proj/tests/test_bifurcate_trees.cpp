#include <doctest.h>

#include <functional>
#include <map>

#include "oracles.hpp"
#include "sqfree/bifurcate_trees.hpp"
#include "sqfree/errors.hpp"

using namespace sqfree;

namespace {

oracle::Letters letters(const Word& w) { return {w.begin(), w.end()}; }

// Complete depth by plain recursion, memoized on (canonical word, depth).
bool brute_complete(const oracle::Letters& w, std::size_t k, std::size_t depth,
                    std::map<std::pair<oracle::Letters, std::size_t>, bool>& memo) {
  if (depth == 0) return true;
  auto key = std::make_pair(oracle::canonical(w), depth);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool ok = true;
  for (std::size_t i = 0; i <= w.size() && ok; ++i) {
    bool any = false;
    for (std::size_t x = 0; x < k && !any; ++x) {
      auto e = oracle::insert_at(w, i, static_cast<std::uint8_t>(x));
      any = oracle::square_free(e) && brute_complete(e, k, depth - 1, memo);
    }
    ok = any;
  }
  memo[key] = ok;
  return ok;
}

void check_tree(const TreeNode& node, std::size_t k, std::size_t depth) {
  auto w = letters(node.word);
  CHECK(oracle::square_free(w));
  if (depth == 0) {
    CHECK(node.children.empty());
    return;
  }
  CHECK(oracle::bifurcate(w, k));
  REQUIRE(node.children.size() == node.word.size() + 1);
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    const TreeNode& child = node.children[i];
    CHECK(child.position == i);
    CHECK(reduce_at(child.word, i + 1) == node.word);
    check_tree(child, k, depth - 1);
  }
}

bool contains_shape(const TreeNode& node, const Word& shape) {
  if (canonicalize(node.word) == shape) return true;
  for (const auto& c : node.children)
    if (contains_shape(c, shape)) return true;
  return false;
}

}  // namespace

TEST_CASE("complete depth matches brute force") {
  for (std::size_t k : {3u, 4u}) {
    std::map<std::pair<oracle::Letters, std::size_t>, bool> memo;
    CompleteTreeSearch search(k);
    for (const char* root : {"1", "12", "121", "1231"}) {
      Word w = word_from(root);
      if (w.letter_bound() > k) continue;
      for (std::size_t d = 0; d <= 7; ++d) {
        INFO("k=" << k << " root=" << root << " depth=" << d);
        CHECK(search.complete_depth(w, d) == brute_complete(letters(w), k, d, memo));
      }
    }
  }
}

TEST_CASE("four letters: complete to depth 5 and no further") {
  for (Letter x = 0; x < 4; ++x) {
    CompleteTreeSearch search(4);
    CHECK(search.complete_depth(Word{x}, 5));
    CHECK_FALSE(search.complete_depth(Word{x}, 6));
    CHECK_FALSE(search.complete_depth(Word{x}, 7));
  }
  DepthReport r = max_complete_depth(4, 10);
  CHECK(r.depth == 5);
  CHECK_FALSE(r.limit_reached);
  CHECK_FALSE(r.budget_exhausted);
  CHECK(r.nodes > 0);
}

TEST_CASE("witness trees are complete and contain the two-pair shape") {
  CompleteTreeSearch search(4);
  auto tree = search.witness_tree(word_from("1"), 5);
  REQUIRE(tree.has_value());
  check_tree(*tree, 4, 5);
  CHECK(contains_shape(*tree, word_from("121343")));
  CHECK_FALSE(search.witness_tree(word_from("1"), 6).has_value());

  CompleteTreeSearch five(5);
  auto deeper = five.witness_tree(word_from("1"), 4);
  REQUIRE(deeper.has_value());
  check_tree(*deeper, 5, 4);
}

TEST_CASE("tree search preconditions and budget") {
  CompleteTreeSearch search(3);
  CHECK_THROWS_AS(search.complete_depth(word_from("11"), 1), PreconditionError);
  CHECK_THROWS_AS(search.complete_depth(word_from("14"), 1), PreconditionError);
  CompleteTreeSearch tiny(5, 10);
  CHECK_THROWS_AS(tiny.complete_depth(word_from("1"), 8), BudgetExhausted);
  DepthReport r = max_complete_depth(5, 20, 50);
  CHECK(r.budget_exhausted);
  CHECK_FALSE(r.limit_reached);
}

TEST_CASE("chains of bifurcate extensions") {
  ChainResult r = find_chain(4, 20);
  REQUIRE(r.chain.size() >= 20);
  for (std::size_t i = 0; i < r.chain.size(); ++i) {
    CHECK(oracle::bifurcate(letters(r.chain[i]), 4));
    CHECK(r.chain[i].size() == i + 1);
    if (i > 0) {
      bool step = false;
      for (std::size_t p = 1; p <= r.chain[i].size(); ++p) step = step || reduce_at(r.chain[i], p) == r.chain[i - 1];
      CHECK(step);
    }
  }
  ChainResult again = find_chain(4, 20);
  CHECK(again.chain == r.chain);

  ChainResult two = find_chain(2, 10);
  CHECK(two.exhaustive);
  for (const auto& w : two.chain) CHECK(oracle::bifurcate(letters(w), 2));
}

TEST_CASE("splits into two-letter blocks") {
  CHECK(splits_into_letter_pairs(word_from("121343")));
  CHECK(splits_into_letter_pairs(word_from("1234")));
  CHECK(splits_into_letter_pairs(word_from("13")));
  CHECK_FALSE(splits_into_letter_pairs(word_from("1231")));
  CHECK_FALSE(splits_into_letter_pairs(word_from("1")));
  CHECK_FALSE(splits_into_letter_pairs(word_from("12321")));
}
