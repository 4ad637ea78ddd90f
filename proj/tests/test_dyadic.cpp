#include <doctest.h>

#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sqfree/dyadic.hpp"
#include "sqfree/errors.hpp"

using namespace sqfree;

namespace {

std::map<std::string, std::string> load_examples() {
  std::ifstream in(SQFREE_DATA_DIR "/reference_examples.txt");
  std::map<std::string, std::string> r;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find(" = ");
    if (eq != std::string::npos) r[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return r;
}

// "a/b" to an index of D_n.
std::size_t fraction_index(const std::string& f, unsigned n) {
  auto slash = f.find('/');
  std::size_t num = std::stoul(f.substr(0, slash));
  std::size_t den = std::stoul(f.substr(slash + 1));
  return num * ((std::size_t{1} << n) / den);
}

std::vector<std::vector<std::size_t>> parse_level(const std::string& text, unsigned n) {
  std::vector<std::vector<std::size_t>> sets(1);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "|") sets.emplace_back();
    else sets.back().push_back(fraction_index(tok, n));
  }
  return sets;
}

void collect_levels(const DyadicGraph& g, const DyadicTreeNode& node, std::size_t level,
                    std::vector<std::vector<std::vector<std::size_t>>>& out) {
  if (out.size() <= level) out.resize(level + 1);
  std::vector<std::size_t> idx;
  for (const auto& p : node.points) idx.push_back(g.index_of(p));
  out[level].push_back(idx);
  for (const auto& c : node.children) collect_levels(g, c, level + 1, out);
}

}  // namespace

TEST_CASE("dyadic points reduce") {
  DyadicPoint p(4, 3);
  CHECK(p.numerator() == 1);
  CHECK(p.level() == 1);
  CHECK(p.to_string() == "1/2^1");
  CHECK(DyadicPoint(0, 5).to_string() == "0/2^0");
  CHECK(DyadicPoint(8, 3).to_string() == "1/2^0");
  CHECK(DyadicPoint(1, 3) < DyadicPoint(1, 2));
  CHECK(DyadicPoint(2, 2) == DyadicPoint(1, 1));
  CHECK_THROWS_AS(DyadicPoint(9, 3), std::invalid_argument);
}

TEST_CASE("graph structure") {
  for (unsigned n = 0; n <= 4; ++n) {
    DyadicGraph g(n);
    CHECK(g.vertex_count() == (std::size_t{1} << n) + 1);
    CHECK(g.edge_count() == (std::size_t{2} << n) - 1);
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
      for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (u != v) CHECK(g.adjacent(u, v) == oracle::dyadic_adjacent(n, u, v));
    if (n > 0) CHECK(g.index_of(DyadicPoint(1, 1)) == (std::size_t{1} << (n - 1)));
    CHECK(g.index_of(DyadicPoint(1, 0)) == g.vertex_count() - 1);
  }
  CHECK_THROWS_AS(DyadicGraph(5), std::invalid_argument);
  CHECK(DyadicGraph(5, 5).vertex_count() == 33);
  CHECK_THROWS_AS(DyadicGraph(2).index_of(DyadicPoint(1, 3)), std::out_of_range);
}

TEST_CASE("path verification agrees with naive path enumeration") {
  std::mt19937_64 rng(17);
  for (unsigned n = 1; n <= 3; ++n) {
    DyadicGraph g(n);
    for (int trial = 0; trial < 60; ++trial) {
      PathColoring c(g.vertex_count());
      const std::size_t palette = 3 + rng() % 4;
      for (auto& x : c) x = static_cast<Letter>(rng() % palette);
      for (bool directed : {false, true}) {
        PathCheck got = check_path_coloring(g, c, directed);
        auto expect = oracle::dyadic_paths(n, c, directed);
        CHECK(got.square_free == expect.square_free);
        if (got.square_free) CHECK(got.paths == expect.paths);
        if (!got.square_free) {
          oracle::Letters word;
          for (std::size_t i = 0; i < got.bad_path.size(); ++i) {
            if (i > 0) CHECK(g.adjacent(got.bad_path[i - 1], got.bad_path[i]));
            word.push_back(c[got.bad_path[i]]);
          }
          CHECK(oracle::square_suffix(word));
        }
      }
    }
  }
}

TEST_CASE("smallest palettes") {
  auto d1 = min_squarefree_colors(1, false);
  CHECK(d1.colors == 3);
  CHECK(d1.optimal);
  CHECK(min_squarefree_colors(0, false).colors == 2);
  CHECK(min_squarefree_colors(1, true).colors == 3);

  std::size_t previous = 0;
  for (unsigned n = 0; n <= 3; ++n) {
    for (bool directed : {false, true}) {
      auto r = min_squarefree_colors(n, directed);
      CHECK(r.optimal);
      CHECK(r.colors <= 12);
      CHECK(oracle::dyadic_paths(n, r.coloring, directed).square_free);
      if (!directed) {
        CHECK(r.colors >= previous);
        previous = r.colors;
      }
    }
  }

  // D_2 with one color fewer than the optimum, by brute force.
  auto d2 = min_squarefree_colors(2, false);
  const std::size_t fewer = d2.colors - 1;
  PathColoring c(5, 0);
  bool any = false;
  std::function<void(std::size_t)> all = [&](std::size_t v) {
    if (v == c.size()) {
      any = any || oracle::dyadic_paths(2, c, false).square_free;
      return;
    }
    for (std::size_t x = 0; x < fewer; ++x) {
      c[v] = static_cast<Letter>(x);
      all(v + 1);
    }
  };
  all(0);
  CHECK_FALSE(any);
}

TEST_CASE("tree extracted from a coloring of D_3") {
  DyadicGraph g(3);
  auto r = min_squarefree_colors(3, false);
  DyadicTreeNode root = extract_bifurcate_tree(g, r.coloring, 3);

  std::vector<std::vector<std::vector<std::size_t>>> levels;
  collect_levels(g, root, 0, levels);
  auto examples = load_examples();
  REQUIRE(levels.size() == 3);
  CHECK(levels[0] == parse_level(examples.at("dyadic_tree_level1"), 3));
  CHECK(levels[1] == parse_level(examples.at("dyadic_tree_level2"), 3));
  CHECK(levels[2] == parse_level(examples.at("dyadic_tree_level3"), 3));

  std::function<void(const DyadicTreeNode&, std::size_t)> check = [&](const DyadicTreeNode& node,
                                                                     std::size_t depth) {
    CHECK(node.word.size() == node.points.size());
    CHECK(oracle::square_free(oracle::Letters(node.word.begin(), node.word.end())));
    for (std::size_t i = 0; i < node.points.size(); ++i) CHECK(node.word[i] == r.coloring[g.index_of(node.points[i])]);
    CHECK(node.children.size() == (depth < 3 ? node.points.size() + 1 : 0));
    for (const auto& c : node.children) check(c, depth + 1);
  };
  check(root, 1);

  CHECK_THROWS_AS(extract_bifurcate_tree(g, r.coloring, 4), ConstructionError);
  DyadicGraph g4(4);
  auto r4 = min_squarefree_colors(4, false, 10'000'000, 12);
  CHECK(oracle::dyadic_paths(4, r4.coloring, false).square_free);
  DyadicTreeNode deep = extract_bifurcate_tree(g4, r4.coloring, 4);
  CHECK(deep.children.size() == 2);

  PathColoring bad(g.vertex_count(), 0);
  CHECK_THROWS_AS(extract_bifurcate_tree(g, bad, 2), PreconditionError);
}

TEST_CASE("coloring files") {
  DyadicGraph g(2);
  PathColoring c{0, 1, 2, 3, 1};
  std::string text = format_coloring(g, c);
  CHECK(text.substr(0, 10) == "0/2^2 = 0\n");
  CHECK(parse_coloring(text, g) == c);
  CHECK(parse_coloring("# comment\n0/2^0 = 0\n1/2^2 = 1\n1/2^1=2 # mid\n3/2^2 = 3\n1/2^0 = 1\n", g) == c);
  CHECK_THROWS_AS(parse_coloring("0/2^0 = 0\n", g), std::invalid_argument);
  CHECK_THROWS_AS(parse_coloring(text + "2/2^2 = 1\n", g), std::invalid_argument);
  CHECK_THROWS_AS(parse_coloring("1/2^3 = 0\n", g), std::invalid_argument);
  CHECK_THROWS_AS(parse_coloring("half = 1\n", g), std::invalid_argument);
}
