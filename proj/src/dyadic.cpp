#include "sqfree/dyadic.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "sqfree/errors.hpp"
#include "sqfree/repetition.hpp"

namespace sqfree {

DyadicPoint::DyadicPoint(std::uint64_t numerator, unsigned level) {
  if (level > 62) throw std::invalid_argument("dyadic level too large");
  if (numerator > (std::uint64_t{1} << level))
    throw std::invalid_argument("dyadic point outside [0, 1]");
  while (level > 0 && numerator % 2 == 0) {
    numerator /= 2;
    --level;
  }
  num_ = numerator;
  level_ = level;
}

std::string DyadicPoint::to_string() const {
  return std::to_string(num_) + "/2^" + std::to_string(level_);
}

DyadicGraph::DyadicGraph(unsigned level, unsigned max_level) : level_(level) {
  if (level > max_level)
    throw std::invalid_argument("dyadic level " + std::to_string(level) + " exceeds the guard " +
                                std::to_string(max_level));
  const std::size_t count = (std::size_t{1} << level) + 1;
  adjacency_.resize(count);
  for (unsigned j = 0; j <= level; ++j) {
    const std::size_t step = std::size_t{1} << (level - j);
    for (std::size_t a = 0; a + step < count; a += step) {
      edges_.emplace_back(a, a + step);
      adjacency_[a].push_back(a + step);
      adjacency_[a + step].push_back(a);
    }
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

std::size_t DyadicGraph::index_of(const DyadicPoint& p) const {
  if (p.level() > level_) throw std::out_of_range("point " + p.to_string() + " is not in D_" +
                                                  std::to_string(level_));
  return static_cast<std::size_t>(p.scaled(level_));
}

bool DyadicGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& nb = adjacency_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

class PathWalker {
 public:
  PathWalker(const DyadicGraph& g, const PathColoring& colors, bool directed, std::uint64_t budget)
      : g_(g), colors_(colors), directed_(directed), budget_(budget), on_path_(g.vertex_count(), 0) {}

  PathCheck run() {
    for (std::size_t s = 0; s < g_.vertex_count() && result_.square_free; ++s) {
      path_.assign(1, s);
      tracker_.clear();
      tracker_.push(colors_[s]);
      on_path_[s] = 1;
      ++result_.paths;
      walk(s);
      on_path_[s] = 0;
    }
    return result_;
  }

 private:
  bool walk(std::size_t v) {
    for (std::size_t u : g_.neighbors(v)) {
      if (on_path_[u] || (directed_ && u < v)) continue;
      if (++result_.paths > budget_)
        throw BudgetExhausted("path enumeration exceeded its budget", result_.paths);
      path_.push_back(u);
      tracker_.push(colors_[u]);
      if (tracker_.has_square_suffix()) {
        result_.square_free = false;
        result_.bad_path = path_;
        return false;
      }
      on_path_[u] = 1;
      bool ok = walk(u);
      on_path_[u] = 0;
      tracker_.pop();
      path_.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  const DyadicGraph& g_;
  const PathColoring& colors_;
  bool directed_;
  std::uint64_t budget_;
  std::vector<char> on_path_;
  std::vector<std::size_t> path_;
  PeriodTracker tracker_;
  PathCheck result_;
};

}  // namespace

PathCheck check_path_coloring(const DyadicGraph& g, const PathColoring& colors, bool directed,
                              std::uint64_t path_budget) {
  if (colors.size() != g.vertex_count())
    throw std::invalid_argument("coloring does not cover the graph");
  return PathWalker(g, colors, directed, path_budget).run();
}

bool is_squarefree_coloring(const DyadicGraph& g, const PathColoring& colors, bool directed,
                            std::uint64_t path_budget) {
  return check_path_coloring(g, colors, directed, path_budget).square_free;
}

namespace {

// Backtracking colorer. Vertices are colored level by level (0, 1, 1/2,
// 1/4, 3/4, ...). After coloring v, every path through v inside the colored
// part is checked: the path is B^R F with F a forward walk from v and B a
// walk from v on the other side. Squares ending at the far end of F are
// caught while F grows; squares starting at the far end of B are caught as
// suffix squares of the reversed word F^R B.
class Colorer {
 public:
  Colorer(const DyadicGraph& g, bool directed, std::size_t palette, std::uint64_t budget)
      : g_(g), directed_(directed), palette_(palette), budget_(budget),
        colors_(g.vertex_count(), 0), colored_(g.vertex_count(), 0), on_path_(g.vertex_count(), 0) {
    const unsigned n = g.level();
    order_.push_back(0);
    order_.push_back(g.vertex_count() - 1);
    for (unsigned j = 1; j <= n; ++j) {
      const std::size_t step = std::size_t{1} << (n - j);
      for (std::size_t a = step; a < g.vertex_count(); a += 2 * step) order_.push_back(a);
    }
  }

  bool search() { return assign(0, 0); }
  const PathColoring& coloring() const noexcept { return colors_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  bool assign(std::size_t idx, std::size_t used) {
    if (idx == order_.size()) return true;
    const std::size_t v = order_[idx];
    const std::size_t top = std::min(used + 1, palette_);
    for (std::size_t c = 0; c < top; ++c) {
      if (++nodes_ > budget_) throw BudgetExhausted("coloring search exceeded its budget", nodes_);
      colors_[v] = static_cast<Letter>(c);
      colored_[v] = 1;
      if (paths_through_ok(v) && assign(idx + 1, std::max(used, c + 1))) return true;
      colored_[v] = 0;
    }
    return false;
  }

  bool allowed(std::size_t from, std::size_t to, bool forward) const {
    if (!colored_[to] || on_path_[to]) return false;
    if (!directed_) return true;
    return forward ? to > from : to < from;
  }

  bool paths_through_ok(std::size_t v) {
    forward_.clear();
    forward_path_.assign(1, v);
    forward_.push(colors_[v]);
    on_path_[v] = 1;
    bool ok = grow_forward(v);
    on_path_[v] = 0;
    return ok;
  }

  bool grow_forward(std::size_t end) {
    if (!check_backward()) return false;
    for (std::size_t u : g_.neighbors(end)) {
      if (!allowed(end, u, true)) continue;
      forward_.push(colors_[u]);
      forward_path_.push_back(u);
      bool ok = !forward_.has_square_suffix();
      if (ok) {
        on_path_[u] = 1;
        ok = grow_forward(u);
        on_path_[u] = 0;
      }
      forward_path_.pop_back();
      forward_.pop();
      if (!ok) return false;
    }
    return true;
  }

  bool check_backward() {
    reversed_.clear();
    for (auto it = forward_path_.rbegin(); it != forward_path_.rend(); ++it) reversed_.push(colors_[*it]);
    return grow_backward(forward_path_.front());
  }

  bool grow_backward(std::size_t end) {
    for (std::size_t u : g_.neighbors(end)) {
      if (!allowed(end, u, false)) continue;
      reversed_.push(colors_[u]);
      bool ok = !reversed_.has_square_suffix();
      if (ok) {
        on_path_[u] = 1;
        ok = grow_backward(u);
        on_path_[u] = 0;
      }
      reversed_.pop();
      if (!ok) return false;
    }
    return true;
  }

  const DyadicGraph& g_;
  bool directed_;
  std::size_t palette_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> order_;
  PathColoring colors_;
  std::vector<char> colored_, on_path_;
  std::vector<std::size_t> forward_path_;
  PeriodTracker forward_, reversed_;
};

}  // namespace

MinColorsResult min_squarefree_colors(unsigned n, bool directed, std::uint64_t node_budget,
                                      std::size_t max_colors) {
  DyadicGraph g(n);
  MinColorsResult result;
  for (std::size_t palette = 1; palette <= std::min(max_colors, kMaxAlphabet); ++palette) {
    Colorer colorer(g, directed, palette, node_budget);
    bool found = false;
    try {
      found = colorer.search();
    } catch (const BudgetExhausted&) {
      result.optimal = false;
    }
    result.nodes += colorer.nodes();
    if (found) {
      result.colors = palette;
      result.coloring = colorer.coloring();
      return result;
    }
  }
  throw BudgetExhausted("no square-free coloring found within the palette limit", result.nodes);
}

namespace {

void expand(const DyadicGraph& g, const PathColoring& colors, DyadicTreeNode& node,
            const std::vector<std::size_t>& idx, std::size_t depth) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0 && !g.adjacent(idx[i - 1], idx[i]))
      throw ConstructionError("consecutive tree points are not adjacent");
  }
  if (!is_square_free(node.word))
    throw PreconditionError("coloring is not square-free along a tree path");
  if (idx.size() == depth) return;

  const auto top = static_cast<std::int64_t>(g.vertex_count() - 1);
  const std::size_t l = idx.size();
  for (std::size_t gap = 0; gap <= l; ++gap) {
    std::int64_t twice;  // twice the new index, to detect half steps
    if (l == 1) {
      const std::int64_t quarter = (top + 1) / 2;  // 1/4 in doubled units
      twice = 2 * static_cast<std::int64_t>(idx[0]) + (gap == 0 ? -quarter : quarter);
    } else if (gap == 0) {
      twice = 2 * static_cast<std::int64_t>(idx[0]) - static_cast<std::int64_t>(idx[1] - idx[0]);
    } else if (gap == l) {
      twice = 2 * static_cast<std::int64_t>(idx[l - 1]) + static_cast<std::int64_t>(idx[l - 1] - idx[l - 2]);
    } else {
      twice = static_cast<std::int64_t>(idx[gap - 1] + idx[gap]);
    }
    if (twice % 2 != 0)
      throw ConstructionError("new tree point is finer than the graph level");
    const std::int64_t at = twice / 2;
    if (at < 0 || at > top) throw ConstructionError("new tree point leaves [0, 1]");
    auto next = idx;
    next.insert(next.begin() + static_cast<std::ptrdiff_t>(gap), static_cast<std::size_t>(at));
    if (std::adjacent_find(next.begin(), next.end()) != next.end())
      throw ConstructionError("new tree point collides with an existing one");

    DyadicTreeNode child;
    std::vector<Letter> word;
    for (std::size_t v : next) {
      child.points.push_back(g.point(v));
      word.push_back(colors[v]);
    }
    child.word = Word(std::move(word));
    expand(g, colors, child, next, depth);
    node.children.push_back(std::move(child));
  }
}

}  // namespace

DyadicTreeNode extract_bifurcate_tree(const DyadicGraph& g, const PathColoring& colors,
                                      std::size_t depth) {
  if (colors.size() != g.vertex_count())
    throw std::invalid_argument("coloring does not cover the graph");
  if (g.level() < 1) throw ConstructionError("the root 1/2 needs level at least 1");
  if (depth > g.level()) throw ConstructionError("tree depth exceeds the graph level");
  DyadicTreeNode root;
  if (depth == 0) return root;
  const std::size_t half = (g.vertex_count() - 1) / 2;
  root.points = {g.point(half)};
  root.word = Word{colors[half]};
  expand(g, colors, root, {half}, depth);
  return root;
}

PathColoring parse_coloring(std::string_view text, const DyadicGraph& g) {
  PathColoring colors(g.vertex_count(), 0);
  std::vector<char> seen(g.vertex_count(), 0);
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("coloring line " + std::to_string(line_no) + ": " + msg);
  };
  auto number = [&](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) fail("bad number '" + std::string(s) + "'");
    return v;
  };
  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = (eol == std::string_view::npos) ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    auto slash = line.find("/2^");
    auto eq = line.find('=');
    if (slash == std::string_view::npos || eq == std::string_view::npos || eq < slash)
      fail("expected 'numerator/2^level = color'");
    std::uint64_t num = number(line.substr(0, slash));
    std::uint64_t level = number(line.substr(slash + 3, eq - slash - 3));
    std::uint64_t color = number(line.substr(eq + 1));
    if (level > 62) fail("level too large");
    if (color >= kMaxAlphabet) fail("color index too large");
    std::size_t v = 0;
    try {
      v = g.index_of(DyadicPoint(num, static_cast<unsigned>(level)));
    } catch (const std::exception& e) {
      fail(e.what());
    }
    if (seen[v]) fail("vertex colored twice");
    seen[v] = 1;
    colors[v] = static_cast<Letter>(color);
  }
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (!seen[v]) throw std::invalid_argument("vertex " + g.point(v).to_string() + " has no color");
  return colors;
}

std::string format_coloring(const DyadicGraph& g, const PathColoring& colors) {
  std::ostringstream out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    out << v << "/2^" << g.level() << " = " << static_cast<unsigned>(colors.at(v)) << '\n';
  return out.str();
}

}  // namespace sqfree
