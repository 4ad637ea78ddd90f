#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqfree/word.hpp"

namespace sqfree {

/// numerator / 2^level, stored reduced: the numerator is odd unless the
/// point is 0 or 1, which live at level 0.
class DyadicPoint {
 public:
  DyadicPoint() = default;
  /// Reduces the fraction. Throws std::invalid_argument when the value is
  /// outside [0, 1] or the level exceeds 62.
  DyadicPoint(std::uint64_t numerator, unsigned level);

  std::uint64_t numerator() const noexcept { return num_; }
  unsigned level() const noexcept { return level_; }

  /// Numerator over 2^n; requires n >= level().
  std::uint64_t scaled(unsigned n) const noexcept { return num_ << (n - level_); }

  /// "numerator/2^level" in reduced form.
  std::string to_string() const;

  friend bool operator==(const DyadicPoint&, const DyadicPoint&) = default;
  friend std::strong_ordering operator<=>(const DyadicPoint& a, const DyadicPoint& b) noexcept {
    unsigned n = std::max(a.level_, b.level_);
    return a.scaled(n) <=> b.scaled(n);
  }

 private:
  std::uint64_t num_ = 0;
  unsigned level_ = 0;
};

/// D_n: vertices k/2^n for 0 <= k <= 2^n, and for each j <= n an edge
/// between consecutive multiples of 1/2^j.
class DyadicGraph {
 public:
  static constexpr unsigned kDefaultMaxLevel = 4;

  /// Throws std::invalid_argument when level > max_level.
  explicit DyadicGraph(unsigned level, unsigned max_level = kDefaultMaxLevel);

  unsigned level() const noexcept { return level_; }
  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Vertex i is the point i / 2^level.
  DyadicPoint point(std::size_t i) const { return DyadicPoint(i, level_); }
  /// Throws std::out_of_range for points outside the graph.
  std::size_t index_of(const DyadicPoint& p) const;

  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  bool adjacent(std::size_t u, std::size_t v) const;

 private:
  unsigned level_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Color per vertex index of a DyadicGraph.
using PathColoring = std::vector<Letter>;

struct PathCheck {
  bool square_free = true;
  /// A path (vertex indices) whose color word ends in a square.
  std::vector<std::size_t> bad_path;
  std::uint64_t paths = 0;
};

/// Enumerates every simple path (or, when `directed`, every path that moves
/// to larger values only) and checks that its color word is square-free.
/// Throws std::invalid_argument when the coloring size does not match and
/// BudgetExhausted when more than `path_budget` paths are visited.
PathCheck check_path_coloring(const DyadicGraph& g, const PathColoring& colors, bool directed,
                              std::uint64_t path_budget = 100'000'000);

bool is_squarefree_coloring(const DyadicGraph& g, const PathColoring& colors, bool directed,
                            std::uint64_t path_budget = 100'000'000);

struct MinColorsResult {
  std::size_t colors = 0;
  PathColoring coloring;
  /// False when a smaller palette could not be ruled out within budget.
  bool optimal = true;
  std::uint64_t nodes = 0;
};

/// Smallest palette admitting a square-free coloring of D_n, by
/// backtracking with first occurrences of colors in ascending order. Each
/// palette size gets `node_budget` assignments; a size that runs out is
/// skipped and the result flagged non-optimal. Throws BudgetExhausted when
/// no coloring with at most `max_colors` colors is found.
MinColorsResult min_squarefree_colors(unsigned n, bool directed,
                                      std::uint64_t node_budget = 10'000'000,
                                      std::size_t max_colors = 12);

class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct DyadicTreeNode {
  std::vector<DyadicPoint> points;  ///< Ascending.
  Word word;                        ///< Colors of `points`.
  std::vector<DyadicTreeNode> children;
};

/// The complete bifurcate tree read off a square-free coloring.
///
/// The root is {1/2}. A node with points p_0 < ... < p_{l-1} has l + 1
/// children, one per gap: the midpoint of each interior gap, p_0 minus half
/// of (p_1 - p_0) on the left, and p_{l-1} plus half of the last gap on the
/// right (a single point uses 1/4 on both sides). `depth` counts levels, so
/// the deepest words have length `depth`; it must not exceed the graph's
/// level. Throws ConstructionError if a new point would leave the graph, and
/// PreconditionError if a node's word is not square-free.
DyadicTreeNode extract_bifurcate_tree(const DyadicGraph& g, const PathColoring& colors,
                                      std::size_t depth);

/// Lines "numerator/2^level = color", `#` comments. Every vertex must be
/// colored exactly once. Throws std::invalid_argument.
PathColoring parse_coloring(std::string_view text, const DyadicGraph& g);
std::string format_coloring(const DyadicGraph& g, const PathColoring& colors);

}  // namespace sqfree
