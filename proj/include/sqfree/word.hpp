#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sqfree {

/// Dense 0-based letter index. Rendering to text goes through a SymbolTable.
using Letter = std::uint8_t;

/// Largest alphabet any module accepts.
inline constexpr std::size_t kMaxAlphabet = 64;

/// An immutable finite word. Extension and reduction return fresh words.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::span<const Letter> letters)
      : letters_(letters.begin(), letters.end()) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  std::span<const Letter> letters() const noexcept { return letters_; }
  operator std::span<const Letter>() const noexcept { return letters_; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// One past the largest letter used; 0 for the empty word.
  std::size_t letter_bound() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// A nonempty set of letters, kept sorted.
class Alphabet {
 public:
  /// Throws std::invalid_argument when empty, when a letter repeats, or when
  /// a letter is at least kMaxAlphabet.
  explicit Alphabet(std::vector<Letter> letters);

  /// {0, 1, ..., k-1}.
  static Alphabet first(std::size_t k);

  std::size_t size() const noexcept { return letters_.size(); }
  bool contains(Letter x) const noexcept;
  bool contains_all(std::span<const Letter> w) const noexcept;
  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Letter> letters_;
};

/// P_i(W): the first i letters. Throws std::out_of_range when i > |W|.
Word prefix(const Word& w, std::size_t i);

/// S_i(W): the last i letters. Throws std::out_of_range when i > |W|.
Word suffix(const Word& w, std::size_t i);

/// P_i(W) x S_{n-i}(W). Throws std::out_of_range when i > |W|.
Word extend_at(const Word& w, std::size_t i, Letter x);

/// Deletes the letter at 1-based index p. Throws std::out_of_range unless
/// 1 <= p <= |W|.
Word reduce_at(const Word& w, std::size_t p);

/// Relabels letters by order of first occurrence. The result is the
/// representative of the word's orbit under letter permutations.
Word canonicalize(std::span<const Letter> w);
bool is_canonical(std::span<const Letter> w) noexcept;

Word reverse(const Word& w);
Word concat(const Word& a, const Word& b);

/// Maps letters to printable symbols, one character per letter.
class SymbolTable {
 public:
  static constexpr std::string_view kDefaultSymbols =
      "123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

  SymbolTable() : SymbolTable(kDefaultSymbols) {}
  /// Throws std::invalid_argument on duplicate symbols or an empty table.
  explicit SymbolTable(std::string_view symbols);

  /// Throws std::invalid_argument on a character outside the table.
  Word parse(std::string_view text) const;
  Alphabet parse_alphabet(std::string_view text) const;
  std::string render(std::span<const Letter> w) const;
  char symbol(Letter x) const;

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbols() const noexcept { return symbols_; }

 private:
  std::string symbols_;
};

/// Convenience for tests and examples: parse with the default table.
Word word_from(std::string_view text);
std::string to_string(std::span<const Letter> w);

}  // namespace sqfree
