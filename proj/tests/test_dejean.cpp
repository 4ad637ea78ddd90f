#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sqfree/dejean.hpp"
#include "sqfree/enumeration.hpp"
#include "sqfree/errors.hpp"
#include "sqfree/repetition.hpp"

using namespace sqfree;

namespace {
oracle::Letters letters(const Word& w) { return {w.begin(), w.end()}; }
}  // namespace

TEST_CASE("threshold table") {
  CHECK(dejean_threshold(2) == Exponent(2, 1));
  CHECK(dejean_threshold(3) == Exponent(7, 4));
  CHECK(dejean_threshold(4) == Exponent(7, 5));
  CHECK(dejean_threshold(5) == Exponent(5, 4));
  CHECK(dejean_threshold(9) == Exponent(9, 8));
  CHECK_THROWS_AS(dejean_threshold(1), std::invalid_argument);
}

TEST_CASE("generated words respect the threshold") {
  struct Case { std::size_t k; Exponent t; std::size_t n; };
  for (auto c : {Case{3, Exponent(7, 4), 150}, Case{4, Exponent(7, 5), 150}, Case{5, Exponent(3, 2), 120}}) {
    GenerationConfig cfg;
    cfg.k = c.k;
    cfg.threshold = c.t;
    cfg.target_length = c.n;
    GenerationStats stats;
    Word w = generate_threshold_word(cfg, &stats);
    CHECK(w.size() == c.n);
    CHECK(w.letter_bound() <= c.k);
    CHECK_FALSE(oracle::exceeds(letters(w), c.t.numerator(), c.t.denominator()));
    CHECK(stats.attempts >= 1);
  }
}

TEST_CASE("generation is reproducible per seed") {
  GenerationConfig cfg;
  cfg.target_length = 120;
  cfg.seed = 5;
  Word a = generate_threshold_word(cfg);
  Word b = generate_threshold_word(cfg);
  CHECK(a == b);
  cfg.seed = 6;
  CHECK(generate_threshold_word(cfg) != a);
}

TEST_CASE("impossible targets exhaust the budget") {
  GenerationConfig cfg;
  cfg.k = 2;
  cfg.threshold = Exponent(3, 2);  // binary words this tame are short
  cfg.target_length = 20;
  cfg.max_backtracks = 1000;
  cfg.max_attempts = 2;
  CHECK_THROWS_AS(generate_threshold_word(cfg), BudgetExhausted);
}

TEST_CASE("long steady words from the quaternary threshold") {
  GenerationStats stats;
  Word w = generate_steady_long(150, 42, &stats);
  CHECK(w.size() == 150);
  CHECK(is_canonical(w));
  auto ref = letters(w);
  CHECK_FALSE(oracle::exceeds(ref, 7, 5));
  CHECK(oracle::separation(ref));
  CHECK(oracle::steady(ref));
}

TEST_CASE("the separation property means every exponent is below 3/2") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 3000; ++i) {
    auto w = oracle::random_word(rng, 24, 4);
    if (w.empty()) continue;
    auto e = oracle::max_exponent(w);
    CHECK(oracle::separation(w) == (2 * e.num < 3 * e.den));
    CHECK(separation_holds(Word(w)) == (max_exponent(Word(w)) < Exponent(3, 2)));
  }
}

TEST_CASE("interior deletions expose an XYX factor with |Y| <= |X|") {
  std::mt19937_64 rng(2024);
  std::size_t traced = 0;
  for (int i = 0; i < 3000; ++i) {
    auto ref = oracle::random_word(rng, 30, 4);
    if (!oracle::square_free(ref)) continue;
    Word w(ref);
    DeletionTrace t = trace_interior_deletions(w);
    bool all = true;
    for (std::size_t p = 1; p + 1 < ref.size(); ++p) all = all && oracle::square_free(oracle::delete_at(ref, p));
    CHECK(t.all_square_free == all);
    if (oracle::separation(ref)) CHECK(t.all_square_free);
    for (const auto& sq : t.squares) {
      ++traced;
      CHECK(sq.y_length <= sq.x_length);
      CHECK(sq.x_length >= 1);
      const std::size_t start = sq.factor_start - 1;
      REQUIRE(start + 2 * sq.x_length + sq.y_length <= ref.size());
      CHECK(oracle::equal_blocks(ref, start, start + sq.x_length + sq.y_length, sq.x_length));
      auto r = oracle::delete_at(ref, sq.deleted - 1);
      CHECK(oracle::equal_blocks(r, sq.square_start - 1, sq.square_start - 1 + sq.half_length, sq.half_length));
    }
  }
  CHECK(traced > 100);
  CHECK_THROWS_AS(trace_interior_deletions(word_from("1212")), PreconditionError);
}
