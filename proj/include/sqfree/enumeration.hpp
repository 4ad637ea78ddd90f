#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sqfree/word.hpp"

namespace sqfree {

/// Counts of canonical words per length over a k-letter alphabet.
struct CountTable {
  std::size_t k = 0;
  std::map<std::size_t, std::uint64_t> rows;
};

struct EnumerationOptions {
  /// Worker threads; 0 means hardware concurrency.
  std::size_t jobs = 1;
  /// Depth at which the DFS frontier is split between workers.
  std::size_t split_depth = 6;
};

/// Visits every canonical steady word of length 1..n_max over k letters in
/// DFS (lexicographic within each length) order. Single-threaded.
/// The visitor returns false to stop the walk early.
void for_each_steady_canonical(
    std::size_t n_max, std::size_t k,
    const std::function<bool(std::span<const Letter>)>& visit);

/// Canonical steady words of length exactly n, lexicographic.
std::vector<Word> enumerate_steady_canonical(std::size_t n, std::size_t k,
                                             const EnumerationOptions& opts = {});

/// rows[n] for 1 <= n <= n_max. Results do not depend on opts.jobs.
CountTable count_steady_canonical(std::size_t n_max, std::size_t k,
                                  const EnumerationOptions& opts = {});

/// Visits every canonical square-free word of length exactly n, in
/// lexicographic order. The visitor returns false to stop early.
void for_each_square_free_canonical(
    std::size_t n, std::size_t k,
    const std::function<bool(std::span<const Letter>)>& visit);

/// Lexicographically least canonical irreducible word per length, or
/// nullopt when none exists.
std::map<std::size_t, std::optional<Word>> scan_irreducible(std::size_t n_min,
                                                            std::size_t n_max,
                                                            std::size_t k);

struct ExtremalScan {
  std::optional<Word> first;  ///< Shortest, then lexicographically least.
  std::uint64_t words_checked = 0;
};

/// Searches canonical square-free words of length 1..n_max for one that is
/// extremal over the first k letters.
ExtremalScan scan_extremal(std::size_t n_max, std::size_t k);

}  // namespace sqfree
