#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqfree/errors.hpp"
#include "sqfree/word.hpp"

namespace sqfree {

/// One alphabet per position of the word to be built.
class ListSystem {
 public:
  ListSystem() = default;
  explicit ListSystem(std::vector<Alphabet> lists) : lists_(std::move(lists)) {}

  /// n copies of `alphabet`.
  static ListSystem uniform(std::size_t n, const Alphabet& alphabet);

  /// One line per position, symbols separated by commas, `#` starts a
  /// comment. Blank lines are skipped. Throws std::invalid_argument.
  static ListSystem parse(std::string_view text, const SymbolTable& symbols = {});
  std::string to_text(const SymbolTable& symbols = {}) const;

  std::size_t size() const noexcept { return lists_.size(); }
  const Alphabet& operator[](std::size_t i) const { return lists_[i]; }
  const std::vector<Alphabet>& lists() const noexcept { return lists_; }

  /// The common list size, or nullopt when sizes differ (or n = 0).
  std::optional<std::size_t> uniform_size() const;

 private:
  std::vector<Alphabet> lists_;
};

/// A steady word choosing w_i from list i, or nullopt when exhaustive
/// backtracking proves none exists.
std::optional<Word> search_steady_transversal(const ListSystem& lists);

/// Per-length counts for the steady transversals of a list system.
///
/// C[n] counts steady words of length n; F[n] counts words of length n
/// that are not steady but whose length n-1 prefix is. D[n][j] splits F[n]
/// by the smallest j for which the suffix of length 2j + 1 collapses to a
/// square after one deletion (index 0 unused).
struct CountsProfile {
  std::vector<std::uint64_t> C;
  std::vector<std::uint64_t> F;
  std::vector<std::vector<std::uint64_t>> D;
  std::uint64_t nodes = 0;

  std::size_t max_length() const noexcept { return C.empty() ? 0 : C.size() - 1; }
};

struct CountOptions {
  std::uint64_t node_budget = 100'000'000;
  bool breakdown = false;
};

/// Thrown by count_transversals; `partial` holds every length that was
/// completed before the budget ran out.
class TransversalBudgetExhausted : public BudgetExhausted {
 public:
  TransversalBudgetExhausted(CountsProfile partial, std::uint64_t spent)
      : BudgetExhausted("transversal count exceeded its node budget", spent),
        partial(std::move(partial)) {}

  CountsProfile partial;
};

/// Exact C and F for all prefixes of `lists`, one length at a time.
CountsProfile count_transversals(const ListSystem& lists, const CountOptions& opts = {});

struct ClaimCheck {
  bool identity_holds = true;  ///< C[n+1] = L*C[n] - F[n+1] everywhere.
  bool bound_holds = true;     ///< The failure bound holds everywhere.
  bool growth_holds = true;    ///< C[n] >= 4 C[n-1] everywhere.
  std::vector<std::size_t> identity_violations;
  std::vector<std::size_t> bound_violations;  ///< Values of n+1 that fail.
  std::vector<std::size_t> growth_violations;

  bool ok() const noexcept { return identity_holds && bound_holds && growth_holds; }
};

/// Right-hand side of the failure bound for lists of size seven:
/// 2 C[n] + 2 C[n-1] + sum_{i>=0} (3 + 8i) C[n-2-i], with C[m] = 0 for m < 0.
std::uint64_t failure_bound(const std::vector<std::uint64_t>& C, std::size_t n);

/// Checks the counting identity with list size `list_size`, the failure
/// bound, and the 4x growth for every length in the profile.
ClaimCheck verify_claim_bound(const CountsProfile& profile, std::size_t list_size = 7);

struct ListExperimentOptions {
  std::size_t n = 4;
  std::size_t universe = 6;
  std::size_t list_size = 4;
  /// 0 enumerates every system up to a permutation of the universe;
  /// otherwise draws this many random systems.
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
};

struct ListExperimentReport {
  std::uint64_t systems = 0;
  std::vector<ListSystem> counterexamples;  ///< Systems with no steady transversal.
};

/// Runs search_steady_transversal over many list systems and reports any
/// system without a steady transversal.
ListExperimentReport list_experiment(const ListExperimentOptions& opts);

/// A uniformly random list system with lists of `list_size` letters drawn
/// from {0, ..., universe-1}.
ListSystem random_list_system(std::size_t n, std::size_t universe, std::size_t list_size,
                              std::uint64_t seed);

}  // namespace sqfree
