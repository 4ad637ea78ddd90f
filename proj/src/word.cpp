#include "sqfree/word.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace sqfree {

std::size_t Word::letter_bound() const noexcept {
  std::size_t bound = 0;
  for (Letter x : letters_) bound = std::max<std::size_t>(bound, x + 1u);
  return bound;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the letters plus the length.
  std::uint64_t h = 1469598103934665603ull;
  for (Letter x : w) {
    h ^= x;
    h *= 1099511628211ull;
  }
  h ^= w.size();
  h *= 1099511628211ull;
  return static_cast<std::size_t>(h);
}

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  std::sort(letters_.begin(), letters_.end());
  if (std::adjacent_find(letters_.begin(), letters_.end()) != letters_.end())
    throw std::invalid_argument("alphabet has a repeated letter");
  if (letters_.back() >= kMaxAlphabet)
    throw std::invalid_argument("letter index exceeds the supported alphabet size");
}

Alphabet Alphabet::first(std::size_t k) {
  if (k == 0 || k > kMaxAlphabet)
    throw std::invalid_argument("alphabet size out of range");
  std::vector<Letter> v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = static_cast<Letter>(i);
  return Alphabet(std::move(v));
}

bool Alphabet::contains(Letter x) const noexcept {
  return std::binary_search(letters_.begin(), letters_.end(), x);
}

bool Alphabet::contains_all(std::span<const Letter> w) const noexcept {
  return std::all_of(w.begin(), w.end(), [this](Letter x) { return contains(x); });
}

Word prefix(const Word& w, std::size_t i) {
  if (i > w.size()) throw std::out_of_range("prefix length exceeds word length");
  return Word(w.letters().first(i));
}

Word suffix(const Word& w, std::size_t i) {
  if (i > w.size()) throw std::out_of_range("suffix length exceeds word length");
  return Word(w.letters().last(i));
}

Word extend_at(const Word& w, std::size_t i, Letter x) {
  if (i > w.size()) throw std::out_of_range("extension position exceeds word length");
  std::vector<Letter> out;
  out.reserve(w.size() + 1);
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
  out.push_back(x);
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
  return Word(std::move(out));
}

Word reduce_at(const Word& w, std::size_t p) {
  if (p < 1 || p > w.size()) throw std::out_of_range("reduction index out of range");
  std::vector<Letter> out;
  out.reserve(w.size() - 1);
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p - 1));
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(p), w.end());
  return Word(std::move(out));
}

Word canonicalize(std::span<const Letter> w) {
  std::array<int, 256> rename;
  rename.fill(-1);
  int next = 0;
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (rename[x] < 0) rename[x] = next++;
    out.push_back(static_cast<Letter>(rename[x]));
  }
  return Word(std::move(out));
}

bool is_canonical(std::span<const Letter> w) noexcept {
  int bound = 0;
  for (Letter x : w) {
    if (x > bound) return false;
    if (x == bound) ++bound;
  }
  return true;
}

Word reverse(const Word& w) {
  return Word(std::vector<Letter>(w.letters().rbegin(), w.letters().rend()));
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out));
}

SymbolTable::SymbolTable(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) throw std::invalid_argument("symbol table is empty");
  if (symbols_.size() > kMaxAlphabet)
    throw std::invalid_argument("symbol table longer than the supported alphabet");
  std::string sorted = symbols_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("symbol table has a repeated symbol");
}

Word SymbolTable::parse(std::string_view text) const {
  std::vector<Letter> out;
  out.reserve(text.size());
  for (char c : text) {
    auto pos = symbols_.find(c);
    if (pos == std::string::npos)
      throw std::invalid_argument(std::string("unknown symbol '") + c + "'");
    out.push_back(static_cast<Letter>(pos));
  }
  return Word(std::move(out));
}

Alphabet SymbolTable::parse_alphabet(std::string_view text) const {
  Word w = parse(text);
  return Alphabet(std::vector<Letter>(w.begin(), w.end()));
}

std::string SymbolTable::render(std::span<const Letter> w) const {
  std::string out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back(symbol(x));
  return out;
}

char SymbolTable::symbol(Letter x) const {
  if (x >= symbols_.size()) throw std::out_of_range("letter has no symbol");
  return symbols_[x];
}

Word word_from(std::string_view text) { return SymbolTable().parse(text); }

std::string to_string(std::span<const Letter> w) { return SymbolTable().render(w); }

}  // namespace sqfree
