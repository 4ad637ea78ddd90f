#pragma once

// Runs every library check on one word and records where it disagrees with
// the brute-force oracles.

#include <string>
#include <vector>

#include "oracles.hpp"
#include "sqfree/predicates.hpp"
#include "sqfree/repetition.hpp"

namespace equivalence {

struct Mismatch {
  std::string check;
  oracle::Letters word;
};

inline void compare(const oracle::Letters& ref, std::size_t k, bool predicates,
                    std::vector<Mismatch>& out) {
  using namespace sqfree;
  const Word w(ref);
  auto fail = [&](const char* name) { out.push_back({name, ref}); };

  const bool sf = oracle::square_free(ref);
  if (is_square_free(w) != sf) fail("is_square_free");
  auto sq = find_square(w);
  auto expect_sq = oracle::first_square(ref);
  if (sq.has_value() != expect_sq.has_value() ||
      (sq && (sq->start != expect_sq->first + 1 || sq->half_length != expect_sq->second)))
    fail("find_square");
  if (has_square_suffix(w) != oracle::square_suffix(ref)) fail("has_square_suffix");
  if (!ref.empty()) {
    auto e = oracle::max_exponent(ref);
    if (!(max_exponent(w) == Exponent(e.num, e.den))) fail("max_exponent");
  }
  if (separation_holds(w) != oracle::separation(ref)) fail("separation_holds");
  if (has_exponent_above(w, Exponent(7, 5)) != oracle::exceeds(ref, 7, 5)) fail("exponent_above_7/5");
  if (has_exponent_above(w, Exponent(7, 4)) != oracle::exceeds(ref, 7, 4)) fail("exponent_above_7/4");

  const bool steady = oracle::steady(ref);
  auto sv = is_steady(w);
  if (sv.value != steady || sv.square_free != sf) fail("is_steady");
  if (sf && !steady && (!sv.deleted || oracle::square_free(oracle::delete_at(ref, *sv.deleted - 1))))
    fail("is_steady_witness");

  // Incremental view: push letters one at a time.
  PeriodTracker tracker;
  oracle::Letters prefix;
  bool prefix_steady = true;
  for (auto x : ref) {
    tracker.push(x);
    prefix.push_back(x);
    if (tracker.has_square_suffix() != oracle::square_suffix(prefix)) fail("tracker_square_suffix");
    if (tracker.suffix_exceeds(Exponent(7, 5)) != oracle::suffix_exceeds(prefix, 7, 5))
      fail("tracker_suffix_exceeds");
    if (prefix_steady) {
      const bool now = oracle::steady(prefix);
      if ((steady_failure_class(prefix) == 0) != now) fail("steady_failure_class");
      prefix_steady = now;
    }
  }

  if (canonicalize(w) != Word(oracle::canonical(ref))) fail("canonicalize");

  if (predicates) {
    if (is_irreducible(w).value != oracle::irreducible(ref)) fail("is_irreducible");
    if (sf) {
      if (bifurcate_over(w, k) != oracle::bifurcate(ref, k)) fail("bifurcate_over");
      if (is_extremal(w, Alphabet::first(k)).value != oracle::extremal(ref, k)) fail("is_extremal");
    }
  }
}

}  // namespace equivalence
