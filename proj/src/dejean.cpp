#include "sqfree/dejean.hpp"

#include <array>
#include <random>
#include <stdexcept>

#include "sqfree/errors.hpp"
#include "sqfree/predicates.hpp"

namespace sqfree {

Exponent dejean_threshold(std::size_t k) {
  if (k < 2) throw std::invalid_argument("Dejean threshold needs k >= 2");
  if (k == 2) return Exponent(2, 1);
  if (k == 3) return Exponent(7, 4);
  if (k == 4) return Exponent(7, 5);
  return Exponent(k, k - 1);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

struct Frame {
  std::array<Letter, kMaxAlphabet> order;
  std::size_t next = 0;
};

void shuffle_order(Frame& f, std::size_t k, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < k; ++i) f.order[i] = static_cast<Letter>(i);
  for (std::size_t i = k; i > 1; --i) std::swap(f.order[i - 1], f.order[rng() % i]);
  f.next = 0;
}

// One seeded attempt; returns false when the backtrack budget runs out.
bool attempt(const GenerationConfig& cfg, std::uint64_t seed, std::vector<Letter>& out,
             std::uint64_t& backtracks) {
  std::mt19937_64 rng(seed);
  PeriodTracker tracker;
  std::vector<Frame> stack(1);
  shuffle_order(stack[0], cfg.k, rng);
  std::uint64_t spent = 0;
  while (tracker.size() < cfg.target_length) {
    Frame& top = stack.back();
    if (top.next == cfg.k) {
      if (tracker.empty()) return false;  // exhausted the whole space
      stack.pop_back();
      tracker.pop();
      ++backtracks;
      if (++spent > cfg.max_backtracks) return false;
      continue;
    }
    tracker.push(top.order[top.next++]);
    if (tracker.suffix_exceeds(cfg.threshold)) {
      tracker.pop();
      continue;
    }
    stack.emplace_back();
    shuffle_order(stack.back(), cfg.k, rng);
  }
  out.assign(tracker.letters().begin(), tracker.letters().end());
  return true;
}

}  // namespace

Word generate_threshold_word(const GenerationConfig& cfg, GenerationStats* stats) {
  if (cfg.k < 2 || cfg.k > kMaxAlphabet) throw std::invalid_argument("need 2 <= k <= 64");
  if (cfg.threshold < Exponent(1, 1)) throw std::invalid_argument("threshold must be >= 1");
  GenerationStats local;
  GenerationStats& st = stats ? *stats : local;
  st = {};
  std::vector<Letter> out;
  std::uint64_t seed = cfg.seed;
  for (std::size_t a = 0; a < cfg.max_attempts; ++a) {
    ++st.attempts;
    if (attempt(cfg, splitmix64(seed), out, st.backtracks)) return Word(std::move(out));
    seed = splitmix64(seed);
  }
  throw BudgetExhausted("threshold word generation ran out of backtracks", st.backtracks);
}

Word generate_steady_long(std::size_t n, std::uint64_t seed, GenerationStats* stats) {
  if (n == 0) throw std::invalid_argument("length must be positive");
  GenerationConfig cfg;
  cfg.target_length = n;
  cfg.k = 4;
  cfg.threshold = Exponent(7, 5);
  cfg.seed = seed;
  Word w = canonicalize(generate_threshold_word(cfg, stats));
  if (!separation_holds(w) || !is_steady(w).value)
    throw std::logic_error("7/5-threshold word failed the steadiness check");
  return w;
}

DeletionTrace trace_interior_deletions(const Word& w) {
  if (!is_square_free(w)) throw PreconditionError("word is not square-free");
  DeletionTrace trace;
  const std::size_t n = w.size();
  for (std::size_t p = 2; p + 1 <= n; ++p) {
    const Word r = reduce_at(w, p);
    const std::size_t q = p - 1;  // first index of r that sits right of the deletion
    bool found = false;
    CreatedSquare sq;
    for (std::size_t s = 0; s < q && !found; ++s) {
      for (std::size_t h = 1; s + 2 * h <= r.size() && !found; ++h) {
        if (s + 2 * h <= q) continue;  // does not span the deletion
        bool eq = true;
        for (std::size_t t = 0; t < h && eq; ++t) eq = r[s + t] == r[s + t + h];
        if (!eq) continue;
        found = true;
        sq.deleted = p;
        sq.square_start = s + 1;
        sq.half_length = h;
        const std::size_t off = q - s;
        if (off == h) {
          sq.where = DeletionCase::kBetweenCopies;  // C a C
          sq.factor_start = s;
          sq.x_length = h;
          sq.y_length = 1;
        } else if (off < h) {
          sq.where = DeletionCase::kInsideFirstCopy;  // C' a C'' C' C''
          const std::size_t c1 = off, c2 = h - off;
          if (c1 <= c2) {
            sq.factor_start = s + c1 + 1;  // C'' C' C''
            sq.x_length = c2;
            sq.y_length = c1;
          } else {
            sq.factor_start = s;  // C' (a C'') C'
            sq.x_length = c1;
            sq.y_length = c2 + 1;
          }
        } else {
          sq.where = DeletionCase::kInsideSecondCopy;  // C' C'' C' a C''
          const std::size_t c1 = off - h, c2 = h - c1;
          if (c2 <= c1) {
            sq.factor_start = s;  // C' C'' C'
            sq.x_length = c1;
            sq.y_length = c2;
          } else {
            sq.factor_start = s + c1;  // C'' (C' a) C''
            sq.x_length = c2;
            sq.y_length = c1 + 1;
          }
        }
        sq.factor_start += 1;
      }
    }
    if (found) {
      trace.all_square_free = false;
      trace.squares.push_back(sq);
    }
  }
  return trace;
}

}  // namespace sqfree
