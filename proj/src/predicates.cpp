#include "sqfree/predicates.hpp"

#include <algorithm>
#include <stdexcept>

#include "sqfree/errors.hpp"
#include "sqfree/repetition.hpp"

namespace sqfree {

SteadyVerdict is_steady(const Word& w) {
  SteadyVerdict v;
  v.square_free = is_square_free(w);
  if (!v.square_free) return v;
  for (std::size_t p = 1; p <= w.size(); ++p) {
    Word r = reduce_at(w, p);
    if (!is_square_free(r)) {
      v.deleted = p;
      v.reduction = std::move(r);
      return v;
    }
  }
  v.value = true;
  return v;
}

std::size_t steady_failure_class(std::span<const Letter> w) {
  const std::size_t n = w.size();
  std::vector<char> m0, m1;
  for (std::size_t h = 1; 2 * h <= n; ++h) {
    if (2 * h == n) {
      bool square = true;
      for (std::size_t t = 0; t < h && square; ++t) square = w[t] == w[t + h];
      if (square) return h;
      continue;
    }
    // Window s = last 2h + 1 letters. Deleting s[q] leaves a square iff
    //   q <= h:  s[t] == s[t+h+1] for t < q  and  s[t] == s[t+h] for q < t <= h
    //   q = h+r: s[t] == s[t+h]   for t < r  and  s[t] == s[t+h+1] for r <= t < h
    // with 1 <= r < h (deleting the final letter is excluded).
    std::span<const Letter> s = w.last(2 * h + 1);
    m0.assign(h + 1, 0);
    m1.assign(h, 0);
    for (std::size_t t = 0; t <= h; ++t) m0[t] = s[t] == s[t + h];
    for (std::size_t t = 0; t < h; ++t) m1[t] = s[t] == s[t + h + 1];

    // suffix_m0[t]: m0[t..h] all true; prefix counts for the rest.
    std::vector<char> suffix_m0(h + 2, 1), suffix_m1(h + 1, 1);
    for (std::size_t t = h + 1; t-- > 0;) suffix_m0[t] = suffix_m0[t + 1] && m0[t];
    for (std::size_t t = h; t-- > 0;) suffix_m1[t] = suffix_m1[t + 1] && m1[t];

    bool prefix_m1 = true;
    for (std::size_t q = 0; q <= h; ++q) {
      if (prefix_m1 && suffix_m0[q + 1]) return h;
      if (q < h) prefix_m1 = prefix_m1 && m1[q];
    }
    bool prefix_m0 = m0[0];
    for (std::size_t r = 1; r < h; ++r) {
      if (prefix_m0 && suffix_m1[r]) return h;
      prefix_m0 = prefix_m0 && m0[r];
    }
  }
  return 0;
}

namespace {

void require_square_free_over(const Word& w, const Alphabet& alphabet) {
  if (!alphabet.contains_all(w))
    throw PreconditionError("word uses letters outside the alphabet");
  if (!is_square_free(w)) throw PreconditionError("word is not square-free");
}

}  // namespace

bool insertion_square_free(std::span<const Letter> w, std::size_t i, Letter x,
                           std::vector<Letter>& buf) {
  buf.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
  buf.push_back(x);
  buf.insert(buf.end(), w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
  const std::size_t n = buf.size();
  // A square XX covering index i has |X| <= n/2 and starts in (i - 2|X|, i].
  for (std::size_t h = 1; 2 * h <= n; ++h) {
    std::size_t lo = (i + 1 >= 2 * h) ? i + 1 - 2 * h : 0;
    std::size_t hi = std::min(i, n - 2 * h);
    for (std::size_t s = lo; s <= hi; ++s) {
      bool eq = true;
      for (std::size_t t = 0; t < h && eq; ++t) eq = buf[s + t] == buf[s + t + h];
      if (eq) return false;
    }
  }
  return true;
}

BifurcateVerdict is_bifurcate(const Word& w, const Alphabet& alphabet) {
  require_square_free_over(w, alphabet);
  BifurcateVerdict v;
  std::vector<Letter> buf;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    bool found = false;
    for (Letter x : alphabet) {
      if (insertion_square_free(w, i, x, buf)) {
        v.witnesses.push_back({i, x, Word(buf)});
        found = true;
        break;
      }
    }
    if (!found) {
      v.failing_position = i;
      return v;
    }
  }
  v.value = true;
  return v;
}

bool bifurcate_over(std::span<const Letter> w, std::size_t k) {
  std::vector<Letter> buf;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    bool found = false;
    for (std::size_t x = 0; x < k && !found; ++x)
      found = insertion_square_free(w, i, static_cast<Letter>(x), buf);
    if (!found) return false;
  }
  return true;
}

ExtremalVerdict is_extremal(const Word& w, const Alphabet& alphabet) {
  require_square_free_over(w, alphabet);
  ExtremalVerdict v;
  std::vector<Letter> buf;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    for (Letter x : alphabet) {
      if (insertion_square_free(w, i, x, buf)) {
        v.counterexample = PositionWitness{i, x, Word(buf)};
        return v;
      }
    }
  }
  v.value = true;
  return v;
}

IrreducibleVerdict is_irreducible(const Word& w) {
  IrreducibleVerdict v;
  v.square_free = is_square_free(w);
  if (!v.square_free) return v;
  for (std::size_t p = 2; p + 1 <= w.size(); ++p) {
    if (is_square_free(reduce_at(w, p))) {
      v.deleted = p;
      return v;
    }
  }
  v.value = true;
  return v;
}

Letter steady_extension_letter(const Word& w, std::size_t j, const Alphabet& alphabet) {
  if (!alphabet.contains_all(w))
    throw PreconditionError("word uses letters outside the alphabet");
  if (!is_steady(w).value) throw PreconditionError("word is not steady");
  const std::size_t n = w.size();
  if (j > n) throw std::out_of_range("extension position exceeds word length");

  if (n >= 4) {
    // 1-based w_m is w[m - 1].
    if (j == 0) return w[1];
    if (j == 1) return w[2];
    if (j == n - 1) return w[n - 3];
    if (j == n) return w[n - 2];
    return w[j + 1];
  }
  std::vector<Letter> buf;
  for (Letter x : alphabet)
    if (insertion_square_free(w, j, x, buf)) return x;
  throw PreconditionError("no square-free extension exists at this position");
}

}  // namespace sqfree
