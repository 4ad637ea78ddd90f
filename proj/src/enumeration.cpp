#include "sqfree/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "sqfree/predicates.hpp"
#include "sqfree/repetition.hpp"

namespace sqfree {

namespace {

std::size_t resolve_jobs(std::size_t jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return jobs;
}

int max_letter(std::span<const Letter> w) {
  int m = -1;
  for (Letter x : w) m = std::max<int>(m, x);
  return m;
}

// Depth-first walk over canonical steady words extending `buf`. Appending x
// to a steady word keeps it steady iff no suffix window collapses to a
// square after one deletion, which steady_failure_class checks.
template <typename Visit>
bool steady_walk(std::vector<Letter>& buf, int top, std::size_t n_max, std::size_t k,
                 Visit& visit) {
  if (!buf.empty() && !visit(std::span<const Letter>(buf))) return false;
  if (buf.size() == n_max) return true;
  const int limit = std::min<int>(top + 1, static_cast<int>(k) - 1);
  for (int x = 0; x <= limit; ++x) {
    buf.push_back(static_cast<Letter>(x));
    bool keep = true;
    if (steady_failure_class(buf) == 0) keep = steady_walk(buf, std::max(top, x), n_max, k, visit);
    buf.pop_back();
    if (!keep) return false;
  }
  return true;
}

// Runs `work(prefix_index)` over the frontier on `jobs` threads.
template <typename Work>
void run_parallel(std::size_t count, std::size_t jobs, Work&& work) {
  jobs = std::min(resolve_jobs(jobs), std::max<std::size_t>(count, 1));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (std::size_t t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) work(i);
    });
  }
  for (auto& w : workers) w.join();
}

// Splits the steady DFS at `depth`: words shorter than the frontier go to
// `shallow`, frontier words are returned for per-worker expansion.
std::vector<Word> steady_frontier(std::size_t depth, std::size_t k,
                                  const std::function<void(std::span<const Letter>)>& shallow) {
  std::vector<Word> frontier;
  std::vector<Letter> buf;
  auto visit = [&](std::span<const Letter> w) {
    if (w.size() == depth)
      frontier.emplace_back(w);
    else
      shallow(w);
    return true;
  };
  steady_walk(buf, -1, depth, k, visit);
  return frontier;
}

void check_k(std::size_t k) {
  if (k == 0 || k > kMaxAlphabet) throw std::invalid_argument("alphabet size out of range");
}

}  // namespace

void for_each_steady_canonical(
    std::size_t n_max, std::size_t k,
    const std::function<bool(std::span<const Letter>)>& visit) {
  check_k(k);
  std::vector<Letter> buf;
  auto v = [&](std::span<const Letter> w) { return visit(w); };
  steady_walk(buf, -1, n_max, k, v);
}

std::vector<Word> enumerate_steady_canonical(std::size_t n, std::size_t k,
                                             const EnumerationOptions& opts) {
  check_k(k);
  if (n == 0) return {Word()};
  const std::size_t depth = std::min(opts.split_depth, n);
  std::vector<Word> shallow_hits;
  auto frontier = steady_frontier(depth, k, [&](std::span<const Letter> w) {
    if (w.size() == n) shallow_hits.emplace_back(w);
  });
  if (depth == n) return frontier;

  std::vector<std::vector<Word>> parts(frontier.size());
  run_parallel(frontier.size(), opts.jobs, [&](std::size_t i) {
    std::vector<Letter> buf(frontier[i].begin(), frontier[i].end());
    auto visit = [&](std::span<const Letter> w) {
      if (w.size() == n) parts[i].emplace_back(w);
      return true;
    };
    steady_walk(buf, max_letter(buf), n, k, visit);
  });
  std::vector<Word> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

CountTable count_steady_canonical(std::size_t n_max, std::size_t k,
                                  const EnumerationOptions& opts) {
  check_k(k);
  CountTable table{k, {}};
  if (n_max == 0) return table;
  const std::size_t depth = std::min(opts.split_depth, n_max);
  std::vector<std::uint64_t> total(n_max + 1, 0);
  auto frontier = steady_frontier(depth, k, [&](std::span<const Letter> w) { ++total[w.size()]; });

  std::vector<std::vector<std::uint64_t>> parts(frontier.size());
  run_parallel(frontier.size(), opts.jobs, [&](std::size_t i) {
    parts[i].assign(n_max + 1, 0);
    std::vector<Letter> buf(frontier[i].begin(), frontier[i].end());
    auto visit = [&](std::span<const Letter> w) {
      ++parts[i][w.size()];
      return true;
    };
    steady_walk(buf, max_letter(buf), n_max, k, visit);
  });
  for (const auto& p : parts)
    for (std::size_t n = 0; n <= n_max; ++n) total[n] += p[n];
  for (std::size_t n = 1; n <= n_max; ++n) table.rows[n] = total[n];
  return table;
}

void for_each_square_free_canonical(
    std::size_t n, std::size_t k,
    const std::function<bool(std::span<const Letter>)>& visit) {
  check_k(k);
  if (n == 0) {
    visit({});
    return;
  }
  PeriodTracker tracker;
  // Iterative DFS: next_letter[d] is the next candidate at depth d.
  std::vector<int> next_letter(n + 1, 0);
  std::vector<int> top(n + 1, -1);
  std::size_t d = 0;
  while (true) {
    const int limit = std::min<int>(top[d] + 1, static_cast<int>(k) - 1);
    if (next_letter[d] > limit) {
      if (d == 0) return;
      tracker.pop();
      --d;
      continue;
    }
    const int x = next_letter[d]++;
    tracker.push(static_cast<Letter>(x));
    if (tracker.has_square_suffix()) {
      tracker.pop();
      continue;
    }
    if (d + 1 == n) {
      bool go_on = visit(tracker.letters());
      tracker.pop();
      if (!go_on) return;
      continue;
    }
    ++d;
    top[d] = std::max(top[d - 1], x);
    next_letter[d] = 0;
  }
}

std::map<std::size_t, std::optional<Word>> scan_irreducible(std::size_t n_min,
                                                            std::size_t n_max,
                                                            std::size_t k) {
  if (n_min < 1 || n_min > n_max) throw std::invalid_argument("need 1 <= n_min <= n_max");
  std::map<std::size_t, std::optional<Word>> out;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    std::optional<Word> found;
    for_each_square_free_canonical(n, k, [&](std::span<const Letter> w) {
      Word word(w);
      if (is_irreducible(word).value) {
        found = std::move(word);
        return false;
      }
      return true;
    });
    out[n] = std::move(found);
  }
  return out;
}

ExtremalScan scan_extremal(std::size_t n_max, std::size_t k) {
  ExtremalScan scan;
  const Alphabet alphabet = Alphabet::first(k);
  for (std::size_t n = 1; n <= n_max && !scan.first; ++n) {
    for_each_square_free_canonical(n, k, [&](std::span<const Letter> w) {
      ++scan.words_checked;
      Word word(w);
      if (is_extremal(word, alphabet).value) {
        scan.first = std::move(word);
        return false;
      }
      return true;
    });
  }
  return scan;
}

}  // namespace sqfree
