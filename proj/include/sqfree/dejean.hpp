#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sqfree/repetition.hpp"
#include "sqfree/word.hpp"

namespace sqfree {

/// Settings for randomized backtracking over words with no factor of
/// exponent above `threshold`. The Dejean thresholds are 7/4 for three
/// letters, 7/5 for four and k/(k-1) beyond.
struct GenerationConfig {
  std::size_t target_length = 200;
  std::size_t k = 4;
  Exponent threshold{7, 5};
  std::uint64_t seed = 42;
  /// Backtracks allowed per attempt before reseeding.
  std::uint64_t max_backtracks = 1'000'000;
  /// Attempts (the first plus reseeds) before giving up.
  std::size_t max_attempts = 16;
};

/// The smallest exponent bound that k letters can avoid forever.
Exponent dejean_threshold(std::size_t k);

struct GenerationStats {
  std::uint64_t backtracks = 0;  ///< Over all attempts.
  std::size_t attempts = 0;
};

/// A word of cfg.target_length over cfg.k letters with no factor of
/// exponent strictly greater than cfg.threshold. Each appended letter is
/// checked only against factors ending at the new position. The same
/// config always yields the same word. Throws BudgetExhausted after
/// cfg.max_attempts attempts, and std::invalid_argument on k < 2 or a
/// threshold below 1.
Word generate_threshold_word(const GenerationConfig& cfg, GenerationStats* stats = nullptr);

/// A steady quaternary word of length n: a 7/5-threshold word, which has the
/// separation property and is therefore steady. Both properties are
/// re-checked before returning; the result is in canonical form.
Word generate_steady_long(std::size_t n, std::uint64_t seed, GenerationStats* stats = nullptr);

/// Where the deleted letter sat relative to the square it created.
enum class DeletionCase {
  kBetweenCopies,     ///< S = A C a C B
  kInsideFirstCopy,   ///< S = A C' a C'' C' C'' B
  kInsideSecondCopy,  ///< S = A C' C'' C' a C'' B
};

/// A square created by deleting one interior letter of S, together with the
/// factor XYX (|Y| <= |X|) of S that the deletion exposes.
struct CreatedSquare {
  std::size_t deleted = 0;       ///< 1-based index in S.
  std::size_t square_start = 0;  ///< 1-based index in the reduced word.
  std::size_t half_length = 0;
  DeletionCase where = DeletionCase::kBetweenCopies;
  std::size_t factor_start = 0;  ///< 1-based index of XYX in S.
  std::size_t x_length = 0;
  std::size_t y_length = 0;
};

struct DeletionTrace {
  bool all_square_free = true;  ///< Every interior reduction is square-free.
  std::vector<CreatedSquare> squares;
};

/// Deletes each interior letter of a square-free word in turn. For every
/// deletion that creates a square spanning the deletion point, records the
/// leftmost (then shortest) such square, its case, and the XYX factor with
/// |Y| <= |X| that must then exist in the original word. Throws
/// PreconditionError when w contains a square.
DeletionTrace trace_interior_deletions(const Word& w);

}  // namespace sqfree
