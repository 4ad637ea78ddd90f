#include "sqfree/repetition.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace sqfree {

Exponent::Exponent(std::uint64_t numerator, std::uint64_t denominator) {
  if (numerator == 0 || denominator == 0)
    throw std::invalid_argument("exponent parts must be positive");
  auto g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Exponent Exponent::parse(std::string_view text) {
  auto parse_part = [&](std::string_view part) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw std::invalid_argument("malformed exponent '" + std::string(text) + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Exponent(parse_part(text), 1);
  return Exponent(parse_part(text.substr(0, slash)), parse_part(text.substr(slash + 1)));
}

std::string Exponent::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

// Calls visit(p, start, run) for every maximal run of positions t with
// w[t] == w[t + p]; `start` is the first such t, `run` the run length.
template <typename Visit>
void for_each_period_run(std::span<const Letter> w, Visit&& visit) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    std::size_t run = 0;
    for (std::size_t t = 0; t + p < n; ++t) {
      if (w[t] == w[t + p]) {
        ++run;
      } else {
        if (run > 0 && !visit(p, t - run, run)) return;
        run = 0;
      }
    }
    if (run > 0 && !visit(p, n - p - run, run)) return;
  }
}

}  // namespace

std::optional<SquareOccurrence> find_square(std::span<const Letter> w) {
  // A run of length r >= p with period p starting at s holds squares XX
  // with |X| = p starting at s, s + 1, ..., s + r - p.
  std::optional<SquareOccurrence> best;
  for_each_period_run(w, [&](std::size_t p, std::size_t start, std::size_t run) {
    if (run >= p) {
      SquareOccurrence occ{start + 1, p};
      if (!best || occ.start < best->start) best = occ;
    }
    return true;
  });
  return best;
}

bool is_square_free(std::span<const Letter> w) {
  bool free = true;
  for_each_period_run(w, [&](std::size_t p, std::size_t, std::size_t run) {
    if (run >= p) free = false;
    return free;
  });
  return free;
}

bool has_square_suffix(std::span<const Letter> w) {
  const std::size_t n = w.size();
  for (std::size_t h = 1; 2 * h <= n; ++h) {
    bool eq = true;
    for (std::size_t t = n - h; t < n && eq; ++t) eq = w[t] == w[t - h];
    if (eq) return true;
  }
  return false;
}

Exponent max_exponent(std::span<const Letter> w) {
  if (w.empty()) throw std::domain_error("exponent of the empty word is undefined");
  Exponent best(1, 1);
  for_each_period_run(w, [&](std::size_t p, std::size_t, std::size_t run) {
    Exponent e(run + p, p);
    if (e > best) best = e;
    return true;
  });
  return best;
}

bool has_exponent_above(std::span<const Letter> w, const Exponent& threshold) {
  if (!w.empty() && threshold < Exponent(1, 1)) return true;
  bool above = false;
  for_each_period_run(w, [&](std::size_t p, std::size_t, std::size_t run) {
    above = threshold.exceeded_by(run + p, p);
    return !above;
  });
  return above;
}

bool separation_holds(std::span<const Letter> w) {
  // XYX with |X| = x and |Y| = y is a run of length x for period x + y.
  // Such a factor with y <= x exists iff some run for period p reaches
  // ceil(p / 2).
  bool holds = true;
  for_each_period_run(w, [&](std::size_t p, std::size_t, std::size_t run) {
    if (2 * run >= p) holds = false;
    return holds;
  });
  return holds;
}

PeriodTracker::PeriodTracker(std::span<const Letter> w) {
  for (Letter x : w) push(x);
}

void PeriodTracker::push(Letter x) {
  const std::size_t e = letters_.size();
  letters_.push_back(x);
  std::vector<std::uint32_t> row(e);
  for (std::size_t p = 1; p <= e; ++p) {
    if (letters_[e - p] == x) {
      std::uint32_t prev = (p < e) ? runs_[e - 1][p - 1] : 0;
      row[p - 1] = prev + 1;
    }
  }
  runs_.push_back(std::move(row));
}

void PeriodTracker::pop() {
  letters_.pop_back();
  runs_.pop_back();
}

void PeriodTracker::clear() {
  letters_.clear();
  runs_.clear();
}

std::size_t PeriodTracker::run(std::size_t p) const noexcept {
  if (letters_.empty() || p == 0 || p >= letters_.size()) return 0;
  return runs_.back()[p - 1];
}

bool PeriodTracker::has_square_suffix() const noexcept {
  if (runs_.empty()) return false;
  const auto& row = runs_.back();
  for (std::size_t p = 1; p <= row.size(); ++p)
    if (row[p - 1] >= p) return true;
  return false;
}

bool PeriodTracker::suffix_exceeds(const Exponent& threshold) const noexcept {
  if (runs_.empty()) return false;
  if (threshold < Exponent(1, 1)) return true;
  const auto& row = runs_.back();
  for (std::size_t p = 1; p <= row.size(); ++p)
    if (threshold.exceeded_by(row[p - 1] + p, p)) return true;
  return false;
}

Exponent PeriodTracker::max_suffix_exponent() const {
  if (runs_.empty()) throw std::domain_error("exponent of the empty word is undefined");
  Exponent best(1, 1);
  const auto& row = runs_.back();
  for (std::size_t p = 1; p <= row.size(); ++p) {
    Exponent e(row[p - 1] + p, p);
    if (e > best) best = e;
  }
  return best;
}

}  // namespace sqfree
