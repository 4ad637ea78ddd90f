#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sqfree/word.hpp"

namespace sqfree {

struct SteadyVerdict {
  bool value = false;
  bool square_free = false;
  /// 1-based index whose deletion leaves a square (first one found), when
  /// the word is square-free but not steady.
  std::optional<std::size_t> deleted;
  Word reduction;
};

/// Square-free, and every single-letter deletion is square-free.
SteadyVerdict is_steady(const Word& w);

/// Incremental steadiness test used by the searches.
///
/// Requires the word minus its last letter to be steady. Returns 0 when w is
/// steady; otherwise the smallest j such that the suffix of length 2j + 1
/// turns into a square after deleting one letter (or the suffix of length 2j
/// is itself a square). O(n^2).
std::size_t steady_failure_class(std::span<const Letter> w);

/// Whether inserting x at position i of the square-free word w keeps it
/// square-free. Only squares covering the new letter are examined. The
/// extension is left in `buf`.
bool insertion_square_free(std::span<const Letter> w, std::size_t i, Letter x,
                           std::vector<Letter>& buf);

struct PositionWitness {
  std::size_t position = 0;
  Letter letter = 0;
  Word extended;
};

struct BifurcateVerdict {
  bool value = false;
  /// One witness per position that has a square-free extension, in
  /// ascending position order, smallest letter first.
  std::vector<PositionWitness> witnesses;
  /// First position without any square-free extension.
  std::optional<std::size_t> failing_position;
};

/// Throws PreconditionError unless w is square-free and over `alphabet`.
BifurcateVerdict is_bifurcate(const Word& w, const Alphabet& alphabet);

/// Fast boolean form of is_bifurcate without preconditions checks or
/// witnesses: w must already be square-free. Letters are 0..k-1.
bool bifurcate_over(std::span<const Letter> w, std::size_t k);

struct ExtremalVerdict {
  bool value = false;
  /// A square-free extension, when one exists.
  std::optional<PositionWitness> counterexample;
};

/// Throws PreconditionError unless w is square-free and over `alphabet`.
ExtremalVerdict is_extremal(const Word& w, const Alphabet& alphabet);

struct IrreducibleVerdict {
  bool value = false;
  bool square_free = false;
  /// 1-based interior index whose deletion stays square-free.
  std::optional<std::size_t> deleted;
};

/// Square-free, and deleting any letter other than the first or last
/// leaves a square. Vacuously true for square-free words of length <= 2.
IrreducibleVerdict is_irreducible(const Word& w);

/// The letter to insert at position j of a steady word so that the
/// extension stays square-free.
///
/// For |w| >= 4 the letter is read off the word: w_2 at the front, w_3
/// after the first letter, w_{n-2} before the last, w_{n-1} at the end, and
/// w_{j+2} at every interior position 2 <= j <= n-2 (1-based letters).
/// Shorter words fall back to the smallest working letter of `alphabet`.
/// Throws PreconditionError if w is not steady or not over `alphabet`, and
/// std::out_of_range if j > |w|.
Letter steady_extension_letter(const Word& w, std::size_t j, const Alphabet& alphabet);

}  // namespace sqfree
