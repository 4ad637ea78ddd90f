#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqfree/word.hpp"

namespace sqfree {

/// An occurrence of XX: `start` is 1-based, |X| = half_length.
struct SquareOccurrence {
  std::size_t start = 0;
  std::size_t half_length = 0;

  friend bool operator==(const SquareOccurrence&, const SquareOccurrence&) = default;
};

/// Exact positive rational, always stored reduced.
///
/// Exponents above 2 are allowed (squares, cubes, ...), which goes beyond
/// the usual fractional-power range [1, 2].
class Exponent {
 public:
  /// Throws std::invalid_argument when either part is zero.
  Exponent(std::uint64_t numerator, std::uint64_t denominator);

  /// Parses "num/den" or a bare integer. Throws std::invalid_argument.
  static Exponent parse(std::string_view text);

  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }
  std::string to_string() const;

  /// True iff length / period > *this, compared in integer arithmetic.
  bool exceeded_by(std::uint64_t length, std::uint64_t period) const noexcept {
    return static_cast<Wide>(length) * den_ >
           static_cast<Wide>(period) * num_;
  }

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) noexcept {
    auto lhs = static_cast<Wide>(a.num_) * b.den_;
    auto rhs = static_cast<Wide>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  __extension__ using Wide = unsigned __int128;

  std::uint64_t num_;
  std::uint64_t den_;
};

/// The leftmost square, ties broken by the shortest half; nullopt when the
/// word is square-free. O(n^2).
std::optional<SquareOccurrence> find_square(std::span<const Letter> w);

bool is_square_free(std::span<const Letter> w);

/// True iff some suffix of w is a square.
bool has_square_suffix(std::span<const Letter> w);

/// Largest |F|/p over nonempty factors F and periods p of F.
/// Throws std::domain_error on the empty word.
Exponent max_exponent(std::span<const Letter> w);

/// True iff some factor has exponent strictly greater than `threshold`.
bool has_exponent_above(std::span<const Letter> w, const Exponent& threshold);

/// True iff w has no factor XYX with |X| >= 1 and |Y| <= |X|.
bool separation_holds(std::span<const Letter> w);

/// Incremental repetition state for a word grown one letter at a time.
///
/// For every period p it keeps the length of the longest suffix that has
/// period p, counted as the number of trailing positions t with
/// w[t] == w[t - p]. A push costs O(n); a pop is O(1).
class PeriodTracker {
 public:
  PeriodTracker() = default;
  explicit PeriodTracker(std::span<const Letter> w);

  void push(Letter x);
  void pop();
  void clear();

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  Letter back() const { return letters_.back(); }

  /// Trailing run for period p (1 <= p < size()), 0 otherwise.
  std::size_t run(std::size_t p) const noexcept;

  /// Some suffix is a square.
  bool has_square_suffix() const noexcept;
  /// Some suffix has exponent strictly greater than `threshold`.
  bool suffix_exceeds(const Exponent& threshold) const noexcept;
  /// Largest exponent over suffixes; requires a nonempty word.
  Exponent max_suffix_exponent() const;

 private:
  std::vector<Letter> letters_;
  // runs_[e][p - 1] is the trailing run with period p for the prefix of
  // length e + 1.
  std::vector<std::vector<std::uint32_t>> runs_;
};

}  // namespace sqfree
