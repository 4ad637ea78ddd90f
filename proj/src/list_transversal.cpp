#include "sqfree/list_transversal.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sqfree/predicates.hpp"

namespace sqfree {

ListSystem ListSystem::uniform(std::size_t n, const Alphabet& alphabet) {
  return ListSystem(std::vector<Alphabet>(n, alphabet));
}

ListSystem ListSystem::parse(std::string_view text, const SymbolTable& symbols) {
  std::vector<Alphabet> lists;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = (eol == std::string_view::npos) ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<Letter> letters;
    std::string token;
    auto fail = [&](const std::string& msg) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
    };
    auto flush = [&] {
      if (token.empty()) fail("empty entry");
      if (token.size() != 1) fail("symbol '" + token + "' is not a single character");
      letters.push_back(symbols.parse(token)[0]);
      token.clear();
    };
    bool saw_comma = false;
    for (char c : line) {
      if (c == ',') {
        flush();
        saw_comma = true;
      } else if (c != ' ' && c != '\t' && c != '\r') {
        token.push_back(c);
      }
    }
    if (!saw_comma && token.empty()) continue;  // blank or comment-only line
    flush();
    try {
      lists.emplace_back(std::move(letters));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return ListSystem(std::move(lists));
}

std::string ListSystem::to_text(const SymbolTable& symbols) const {
  std::ostringstream out;
  for (const auto& list : lists_) {
    bool first = true;
    for (Letter x : list) {
      if (!first) out << ',';
      out << symbols.symbol(x);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

std::optional<std::size_t> ListSystem::uniform_size() const {
  if (lists_.empty()) return std::nullopt;
  const std::size_t s = lists_.front().size();
  for (const auto& l : lists_)
    if (l.size() != s) return std::nullopt;
  return s;
}

namespace {

bool transversal_walk(const ListSystem& lists, std::vector<Letter>& buf) {
  if (buf.size() == lists.size()) return true;
  for (Letter x : lists[buf.size()]) {
    buf.push_back(x);
    if (steady_failure_class(buf) == 0 && transversal_walk(lists, buf)) return true;
    buf.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Word> search_steady_transversal(const ListSystem& lists) {
  std::vector<Letter> buf;
  buf.reserve(lists.size());
  if (!transversal_walk(lists, buf)) return std::nullopt;
  return Word(std::move(buf));
}

CountsProfile count_transversals(const ListSystem& lists, const CountOptions& opts) {
  CountsProfile profile;
  profile.C.push_back(1);
  profile.F.push_back(0);
  if (opts.breakdown) profile.D.emplace_back();

  // Steady words of the current length, stored back to back.
  std::vector<Letter> level;
  std::vector<Letter> buf;
  for (std::size_t len = 1; len <= lists.size(); ++len) {
    const std::size_t prev_count = profile.C.back();
    const Alphabet& choices = lists[len - 1];
    if (profile.nodes + prev_count * choices.size() > opts.node_budget)
      throw TransversalBudgetExhausted(profile, profile.nodes);

    std::vector<Letter> next;
    std::uint64_t c = 0, f = 0;
    std::vector<std::uint64_t> d(len / 2 + 2, 0);
    for (std::size_t w = 0; w < prev_count; ++w) {
      auto parent = std::span<const Letter>(level).subspan(w * (len - 1), len - 1);
      for (Letter x : choices) {
        buf.assign(parent.begin(), parent.end());
        buf.push_back(x);
        ++profile.nodes;
        std::size_t cls = steady_failure_class(buf);
        if (cls == 0) {
          ++c;
          next.insert(next.end(), buf.begin(), buf.end());
        } else {
          ++f;
          ++d[cls];
        }
      }
    }
    level = std::move(next);
    profile.C.push_back(c);
    profile.F.push_back(f);
    if (opts.breakdown) profile.D.push_back(std::move(d));
  }
  return profile;
}

std::uint64_t failure_bound(const std::vector<std::uint64_t>& C, std::size_t n) {
  auto at = [&](std::ptrdiff_t m) -> std::uint64_t {
    return (m < 0 || static_cast<std::size_t>(m) >= C.size()) ? 0 : C[static_cast<std::size_t>(m)];
  };
  const auto sn = static_cast<std::ptrdiff_t>(n);
  std::uint64_t bound = 2 * at(sn) + 2 * at(sn - 1);
  for (std::ptrdiff_t i = 0; sn - 2 - i >= 0; ++i)
    bound += static_cast<std::uint64_t>(3 + 8 * i) * at(sn - 2 - i);
  return bound;
}

ClaimCheck verify_claim_bound(const CountsProfile& profile, std::size_t list_size) {
  ClaimCheck check;
  const auto& C = profile.C;
  const auto& F = profile.F;
  for (std::size_t m = 1; m < C.size(); ++m) {
    if (C[m] + F[m] != list_size * C[m - 1]) {
      check.identity_holds = false;
      check.identity_violations.push_back(m);
    }
    if (F[m] > failure_bound(C, m - 1)) {
      check.bound_holds = false;
      check.bound_violations.push_back(m);
    }
    if (C[m] < 4 * C[m - 1]) {
      check.growth_holds = false;
      check.growth_violations.push_back(m);
    }
  }
  return check;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

using Mask = std::uint64_t;

Alphabet alphabet_of(Mask m) {
  std::vector<Letter> v;
  for (Letter x = 0; m; ++x, m >>= 1)
    if (m & 1) v.push_back(x);
  return Alphabet(std::move(v));
}

Mask permute(Mask m, const std::vector<Letter>& perm) {
  Mask out = 0;
  for (std::size_t x = 0; x < perm.size(); ++x)
    if (m >> x & 1) out |= Mask{1} << perm[x];
  return out;
}

// Every permutation of the universe that maps {0..L-1} onto itself.
std::vector<std::vector<Letter>> first_list_stabilizer(std::size_t universe, std::size_t list_size) {
  std::vector<Letter> low(list_size), high(universe - list_size);
  std::iota(low.begin(), low.end(), Letter{0});
  std::iota(high.begin(), high.end(), static_cast<Letter>(list_size));
  std::vector<std::vector<Letter>> perms;
  do {
    auto h = high;
    do {
      std::vector<Letter> p(low);
      p.insert(p.end(), h.begin(), h.end());
      perms.push_back(std::move(p));
    } while (std::next_permutation(h.begin(), h.end()));
  } while (std::next_permutation(low.begin(), low.end()));
  return perms;
}

// Systems up to a global permutation of the universe. Each orbit contains a
// system whose first list is {0..L-1}; keep the one that is lexicographically
// least (as a mask sequence) among its images under the stabilizer.
std::vector<ListSystem> canonical_systems(std::size_t n, std::size_t universe,
                                          std::size_t list_size) {
  std::vector<Mask> subsets;
  for (Mask m = 0; m < (Mask{1} << universe); ++m)
    if (static_cast<std::size_t>(std::popcount(m)) == list_size) subsets.push_back(m);
  const auto perms = first_list_stabilizer(universe, list_size);

  std::vector<ListSystem> out;
  if (n == 0) return out;
  std::vector<std::size_t> digit(n, 0);
  std::vector<Mask> masks(n), image(n);
  masks[0] = (Mask{1} << list_size) - 1;
  while (true) {
    for (std::size_t i = 1; i < n; ++i) masks[i] = subsets[digit[i]];
    bool minimal = true;
    for (const auto& p : perms) {
      for (std::size_t i = 0; i < n; ++i) image[i] = permute(masks[i], p);
      if (image < masks) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      std::vector<Alphabet> lists;
      for (Mask m : masks) lists.push_back(alphabet_of(m));
      out.emplace_back(std::move(lists));
    }
    std::size_t i = n;
    while (i > 1 && ++digit[i - 1] == subsets.size()) digit[--i] = 0;
    if (i <= 1) break;
  }
  return out;
}

}  // namespace

ListSystem random_list_system(std::size_t n, std::size_t universe, std::size_t list_size,
                              std::uint64_t seed) {
  if (list_size == 0 || list_size > universe || universe > kMaxAlphabet)
    throw std::invalid_argument("need 1 <= list size <= universe <= 64");
  std::mt19937_64 rng(splitmix64(seed));
  std::vector<Letter> pool(universe);
  std::iota(pool.begin(), pool.end(), Letter{0});
  std::vector<Alphabet> lists;
  for (std::size_t i = 0; i < n; ++i) {
    std::shuffle(pool.begin(), pool.end(), rng);
    lists.emplace_back(std::vector<Letter>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(list_size)));
  }
  return ListSystem(std::move(lists));
}

ListExperimentReport list_experiment(const ListExperimentOptions& opts) {
  if (opts.list_size == 0 || opts.list_size > opts.universe || opts.universe > kMaxAlphabet)
    throw std::invalid_argument("need 1 <= list size <= universe <= 64");

  std::vector<ListSystem> systems;
  if (opts.samples == 0) {
    systems = canonical_systems(opts.n, opts.universe, opts.list_size);
  } else {
    systems.reserve(opts.samples);
    for (std::uint64_t s = 0; s < opts.samples; ++s)
      systems.push_back(random_list_system(opts.n, opts.universe, opts.list_size,
                                           splitmix64(opts.seed) ^ s));
  }

  std::vector<char> unsat(systems.size(), 0);
  std::size_t jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<std::size_t>(jobs, std::max<std::size_t>(systems.size(), 1));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < systems.size(); i = next++)
      unsat[i] = !search_steady_transversal(systems[i]).has_value();
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  ListExperimentReport report;
  report.systems = systems.size();
  for (std::size_t i = 0; i < systems.size(); ++i)
    if (unsat[i]) report.counterexamples.push_back(systems[i]);
  return report;
}

}  // namespace sqfree
