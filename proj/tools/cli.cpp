#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "sqfree/bifurcate_trees.hpp"
#include "sqfree/dejean.hpp"
#include "sqfree/dyadic.hpp"
#include "sqfree/enumeration.hpp"
#include "sqfree/errors.hpp"
#include "sqfree/list_transversal.hpp"
#include "sqfree/predicates.hpp"
#include "sqfree/repetition.hpp"

namespace sqfree::cli {

using Json = nlohmann::ordered_json;

std::uint64_t parse_budget(const std::string& text) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad budget '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(value) || value < 0 || value != std::floor(value) ||
      value >= 1.8e19)
    throw std::invalid_argument("bad budget '" + text + "'");
  return static_cast<std::uint64_t>(value);
}

namespace {

enum class Format { kHuman, kJson, kCsv };

struct Globals {
  std::string symbols{SymbolTable::kDefaultSymbols};
  std::size_t jobs = 1;
  std::string format = "human";
};

class Context {
 public:
  Context(const Globals& g, std::ostream& out) : table(g.symbols), jobs(g.jobs), out(out) {
    if (g.format == "json") format = Format::kJson;
    else if (g.format == "csv") format = Format::kCsv;
  }

  std::string str(std::span<const Letter> w) const { return table.render(w); }
  std::string letter(Letter x) const { return std::string(1, table.symbol(x)); }
  bool json() const { return format == Format::kJson; }

  void emit(const std::string& op, Json input, Json verdict, Json witness, Json stats) const {
    Json record;
    record["op"] = op;
    record["input"] = std::move(input);
    record["verdict"] = std::move(verdict);
    record["witness"] = std::move(witness);
    record["stats"] = std::move(stats);
    out << record.dump() << '\n';
  }

  SymbolTable table;
  std::size_t jobs;
  Format format = Format::kHuman;
  std::ostream& out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json square_witness(const Context& ctx, const Word& w, const SquareOccurrence& sq) {
  Json j;
  j["square_start"] = sq.start;
  j["half_length"] = sq.half_length;
  j["square"] = ctx.str(std::span<const Letter>(w.letters()).subspan(sq.start - 1, 2 * sq.half_length));
  return j;
}

Json extension_witness(const Context& ctx, const PositionWitness& pw) {
  return Json{{"position", pw.position}, {"letter", ctx.letter(pw.letter)},
              {"extension", ctx.str(pw.extended)}};
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  std::string word;
  std::vector<std::string> props{"squarefree"};
  std::string alphabet;
};

struct PropertyResult {
  Json verdict;
  Json witness;
  bool boolean = true;
};

PropertyResult check_property(const Context& ctx, const std::string& prop, const Word& w,
                              const Alphabet& alphabet) {
  PropertyResult r;
  auto square = find_square(w);
  auto not_square_free = [&] {
    r.verdict = false;
    r.witness = Json{{"square", square_witness(ctx, w, *square)}};
  };

  if (prop == "squarefree") {
    r.verdict = !square.has_value();
    if (square) r.witness = square_witness(ctx, w, *square);
  } else if (prop == "steady") {
    auto v = is_steady(w);
    r.verdict = v.value;
    if (!v.square_free) not_square_free();
    else if (!v.value) r.witness = Json{{"deleted", *v.deleted}, {"reduction", ctx.str(v.reduction)}};
  } else if (prop == "bifurcate") {
    if (square) {
      not_square_free();
    } else {
      auto v = is_bifurcate(w, alphabet);
      r.verdict = v.value;
      if (v.value) {
        r.witness = Json::array();
        for (const auto& pw : v.witnesses) r.witness.push_back(extension_witness(ctx, pw));
      } else {
        r.witness = Json{{"failing_position", *v.failing_position}};
      }
    }
  } else if (prop == "extremal") {
    if (square) {
      not_square_free();
    } else {
      auto v = is_extremal(w, alphabet);
      r.verdict = v.value;
      if (v.counterexample) r.witness = extension_witness(ctx, *v.counterexample);
    }
  } else if (prop == "irreducible") {
    auto v = is_irreducible(w);
    r.verdict = v.value;
    if (!v.square_free) not_square_free();
    else if (!v.value)
      r.witness = Json{{"deleted", *v.deleted}, {"reduction", ctx.str(reduce_at(w, *v.deleted))}};
  } else if (prop == "separation") {
    r.verdict = separation_holds(w);
  } else if (prop == "maxexp") {
    r.boolean = false;
    r.verdict = w.empty() ? Json(nullptr) : Json(max_exponent(w).to_string());
  } else {
    throw std::invalid_argument("unknown property '" + prop + "'");
  }
  return r;
}

std::string human_witness(const Json& witness) {
  if (witness.is_null()) return "";
  if (witness.is_array()) {
    std::string s;
    for (const auto& item : witness) s += (s.empty() ? "" : " ") + item["extension"].get<std::string>();
    return "  extensions=" + s;
  }
  std::string s;
  for (const auto& [key, value] : witness.items()) {
    s += "  " + key + "=";
    if (value.is_string()) s += value.get<std::string>();
    else if (value.is_object()) s += value.value("square", std::string{});
    else s += value.dump();
  }
  return s;
}

int run_check(const Context& ctx, const CheckArgs& a) {
  Word w = ctx.table.parse(a.word);
  Alphabet alphabet = a.alphabet.empty()
                          ? Alphabet::first(std::max<std::size_t>(3, w.letter_bound()))
                          : ctx.table.parse_alphabet(a.alphabet);
  bool all_true = true;
  for (const auto& prop : a.props) {
    auto r = check_property(ctx, prop, w, alphabet);
    if (r.boolean && !r.verdict.get<bool>()) all_true = false;
    if (ctx.json()) {
      Json input{{"word", a.word}, {"property", prop}, {"alphabet", ctx.str(alphabet.letters())}};
      ctx.emit("check", std::move(input), r.verdict, r.witness, Json::object());
    } else {
      ctx.out << prop << ": "
              << (r.verdict.is_string() ? r.verdict.get<std::string>() : r.verdict.dump())
              << human_witness(r.witness) << '\n';
    }
  }
  return all_true ? kTrue : kFalse;
}

// --------------------------------------------------------- count-steady

struct CountArgs {
  std::size_t k = 4;
  std::size_t n_min = 1;
  std::size_t n_max = 32;
  bool emit_words = false;
};

int run_count_steady(const Context& ctx, const CountArgs& a) {
  if (a.n_min < 1 || a.n_min > a.n_max) throw std::invalid_argument("need 1 <= n-min <= n-max");
  EnumerationOptions opts;
  opts.jobs = ctx.jobs;
  if (a.emit_words) {
    for (std::size_t n = a.n_min; n <= a.n_max; ++n)
      for (const auto& w : enumerate_steady_canonical(n, a.k, opts)) ctx.out << ctx.str(w) << '\n';
    return kTrue;
  }
  CountTable table = count_steady_canonical(a.n_max, a.k, opts);
  if (ctx.json()) {
    Json rows = Json::object();
    for (std::size_t n = a.n_min; n <= a.n_max; ++n) rows[std::to_string(n)] = table.rows.at(n);
    ctx.emit("count-steady", Json{{"k", a.k}, {"n_min", a.n_min}, {"n_max", a.n_max}}, rows,
             nullptr, Json::object());
  } else {
    ctx.out << "n,count\n";
    for (std::size_t n = a.n_min; n <= a.n_max; ++n) ctx.out << n << ',' << table.rows.at(n) << '\n';
  }
  return kTrue;
}

// ------------------------------------------------------------ enumerate

struct EnumerateArgs {
  std::string kind = "steady";
  std::size_t k = 3;
  std::size_t n = 0;
  std::size_t n_max = 0;
  bool first = false;
  bool count_only = false;
};

// Canonical words of length n of the given kind, in lexicographic order.
// With `first`, stops at the first one.
std::vector<Word> words_of_kind(const Context& ctx, const EnumerateArgs& a, std::size_t n) {
  std::vector<Word> found;
  if (a.kind == "steady") {
    EnumerationOptions opts;
    opts.jobs = ctx.jobs;
    found = enumerate_steady_canonical(n, a.k, opts);
    if (a.first && found.size() > 1) found.resize(1);
    return found;
  }
  std::function<bool(const Word&)> keep;
  if (a.kind == "squarefree") {
    keep = [](const Word&) { return true; };
  } else if (a.kind == "irreducible") {
    keep = [](const Word& w) { return is_irreducible(w).value; };
  } else if (a.kind == "extremal") {
    Alphabet alphabet = Alphabet::first(a.k);
    keep = [alphabet](const Word& w) { return is_extremal(w, alphabet).value; };
  } else {
    throw std::invalid_argument("unknown kind '" + a.kind + "'");
  }
  for_each_square_free_canonical(n, a.k, [&](std::span<const Letter> s) {
    Word w(s);
    if (keep(w)) found.push_back(std::move(w));
    return !(a.first && !found.empty());
  });
  return found;
}

int run_enumerate(const Context& ctx, const EnumerateArgs& a) {
  if (a.k < 1 || a.k > kMaxAlphabet) throw std::invalid_argument("k out of range");
  const std::size_t last = std::max(a.n, a.n_max);
  bool any = false;
  for (std::size_t n = a.n; n <= last; ++n) {
    auto words = words_of_kind(ctx, a, n);
    any = any || !words.empty();
    if (ctx.json()) {
      Json list = Json::array();
      if (!a.count_only)
        for (const auto& w : words) list.push_back(ctx.str(w));
      Json verdict = a.first ? Json(!words.empty()) : Json(words.size());
      ctx.emit("enumerate",
               Json{{"kind", a.kind}, {"k", a.k}, {"n", n}, {"first", a.first}},
               verdict, a.count_only ? Json(nullptr) : list, Json::object());
    } else if (a.first) {
      ctx.out << n << ' ' << (words.empty() ? "none" : ctx.str(words.front())) << '\n';
    } else if (a.count_only) {
      ctx.out << n << ',' << words.size() << '\n';
    } else {
      for (const auto& w : words) ctx.out << ctx.str(w) << '\n';
    }
  }
  return any ? kTrue : kFalse;
}

// ---------------------------------------------------------------- lists

struct ListArgs {
  std::string file;
  std::size_t uniform = 0;
  std::string letters;
  std::string budget = "1e8";
  bool breakdown = false;
  bool claim_check = false;
  std::size_t list_size = 0;
  ListExperimentOptions experiment;
};

ListSystem load_lists(const Context& ctx, const ListArgs& a) {
  if (!a.file.empty() && a.uniform > 0) throw std::invalid_argument("give either --file or --uniform");
  if (!a.file.empty()) return ListSystem::parse(read_file(a.file), ctx.table);
  if (a.uniform > 0) {
    if (a.letters.empty()) throw std::invalid_argument("--uniform needs --letters");
    return ListSystem::uniform(a.uniform, ctx.table.parse_alphabet(a.letters));
  }
  throw std::invalid_argument("give --file or --uniform");
}

int run_lists_search(const Context& ctx, const ListArgs& a) {
  ListSystem lists = load_lists(ctx, a);
  auto w = search_steady_transversal(lists);
  if (ctx.json()) {
    ctx.emit("lists.search", Json{{"lists", lists.to_text(ctx.table)}}, w.has_value(),
             w ? Json(ctx.str(*w)) : Json(nullptr), Json::object());
  } else {
    ctx.out << (w ? ctx.str(*w) : std::string("none")) << '\n';
  }
  return w ? kTrue : kFalse;
}

Json profile_json(const CountsProfile& p, bool breakdown) {
  Json rows = Json::array();
  for (std::size_t n = 0; n <= p.max_length(); ++n) {
    Json row{{"n", n}, {"C", p.C[n]}, {"F", p.F[n]}};
    if (breakdown && n < p.D.size()) row["D"] = p.D[n];
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_profile(const Context& ctx, const CountsProfile& p, bool breakdown) {
  ctx.out << "n,C,F" << (breakdown ? ",D" : "") << '\n';
  for (std::size_t n = 0; n <= p.max_length(); ++n) {
    ctx.out << n << ',' << p.C[n] << ',' << p.F[n];
    if (breakdown && n < p.D.size()) {
      ctx.out << ',';
      for (std::size_t j = 0; j < p.D[n].size(); ++j) ctx.out << (j ? " " : "") << p.D[n][j];
    }
    ctx.out << '\n';
  }
}

int run_lists_count(const Context& ctx, const ListArgs& a) {
  ListSystem lists = load_lists(ctx, a);
  CountOptions opts;
  opts.node_budget = parse_budget(a.budget);
  opts.breakdown = a.breakdown;
  CountsProfile profile;
  bool exhausted = false;
  try {
    profile = count_transversals(lists, opts);
  } catch (const TransversalBudgetExhausted& e) {
    profile = e.partial;
    exhausted = true;
  }

  std::optional<ClaimCheck> claim;
  if (a.claim_check) {
    std::size_t size = a.list_size ? a.list_size : lists.uniform_size().value_or(7);
    claim = verify_claim_bound(profile, size);
  }

  if (ctx.json()) {
    Json verdict = claim ? Json(claim->ok()) : Json(!exhausted);
    Json witness = nullptr;
    if (claim && !claim->ok())
      witness = Json{{"identity_violations", claim->identity_violations},
                     {"bound_violations", claim->bound_violations},
                     {"growth_violations", claim->growth_violations}};
    Json stats{{"nodes", profile.nodes}, {"budget_exhausted", exhausted},
               {"rows", profile_json(profile, a.breakdown)}};
    ctx.emit("lists.count", Json{{"lists", lists.to_text(ctx.table)}, {"budget", opts.node_budget}},
             verdict, witness, stats);
  } else {
    print_profile(ctx, profile, a.breakdown);
    if (exhausted) ctx.out << "budget exhausted after " << profile.nodes << " nodes\n";
    if (claim) {
      auto list = [](const std::vector<std::size_t>& v) {
        std::string s;
        for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
        return s.empty() ? std::string("none") : s;
      };
      ctx.out << "identity: " << (claim->identity_holds ? "holds" : "fails at " + list(claim->identity_violations)) << '\n'
              << "bound: " << (claim->bound_holds ? "holds" : "fails at " + list(claim->bound_violations)) << '\n'
              << "growth: " << (claim->growth_holds ? "holds" : "fails at " + list(claim->growth_violations)) << '\n';
    }
  }
  if (exhausted) return kBudget;
  return (claim && !claim->ok()) ? kFalse : kTrue;
}

int run_lists_experiment(const Context& ctx, ListArgs a) {
  a.experiment.jobs = ctx.jobs;
  auto report = list_experiment(a.experiment);
  const auto& o = a.experiment;
  if (ctx.json()) {
    Json bad = Json::array();
    for (const auto& sys : report.counterexamples) bad.push_back(sys.to_text(ctx.table));
    ctx.emit("lists.experiment",
             Json{{"n", o.n}, {"universe", o.universe}, {"list_size", o.list_size},
                  {"samples", o.samples}, {"seed", o.seed}},
             report.counterexamples.empty(), bad, Json{{"systems", report.systems}});
  } else {
    ctx.out << "systems: " << report.systems << '\n'
            << "without steady transversal: " << report.counterexamples.size() << '\n';
    for (const auto& sys : report.counterexamples) ctx.out << "---\n" << sys.to_text(ctx.table);
  }
  return report.counterexamples.empty() ? kTrue : kFalse;
}

// ----------------------------------------------------------- gen-dejean

struct DejeanArgs {
  std::size_t n = 200;
  std::size_t k = 4;
  std::string threshold = "7/5";
  std::uint64_t seed = 42;
  std::string max_backtracks = "1e6";
  std::size_t max_attempts = 16;
};

int run_gen_dejean(const Context& ctx, const DejeanArgs& a) {
  GenerationConfig cfg;
  cfg.target_length = a.n;
  cfg.k = a.k;
  cfg.threshold = Exponent::parse(a.threshold);
  cfg.seed = a.seed;
  cfg.max_backtracks = parse_budget(a.max_backtracks);
  cfg.max_attempts = a.max_attempts;
  GenerationStats stats;
  Word w = generate_threshold_word(cfg, &stats);

  const bool below = !has_exponent_above(w, cfg.threshold);
  const bool separation = separation_holds(w);
  const bool steady = is_steady(w).value;
  const std::string maxexp = w.empty() ? "-" : max_exponent(w).to_string();
  if (ctx.json()) {
    ctx.emit("gen-dejean",
             Json{{"n", a.n}, {"k", a.k}, {"threshold", cfg.threshold.to_string()}, {"seed", a.seed}},
             below, ctx.str(w),
             Json{{"max_exponent", maxexp}, {"separation", separation}, {"steady", steady},
                  {"backtracks", stats.backtracks}, {"attempts", stats.attempts}});
  } else {
    ctx.out << ctx.str(w) << '\n'
            << "length: " << w.size() << '\n'
            << "max exponent: " << maxexp << " (threshold " << cfg.threshold.to_string() << ", "
            << (below ? "not exceeded" : "EXCEEDED") << ")\n"
            << "separation: " << (separation ? "holds" : "fails") << '\n'
            << "steady: " << (steady ? "yes" : "no") << '\n'
            << "backtracks: " << stats.backtracks << ", attempts: " << stats.attempts << '\n';
  }
  return below ? kTrue : kFalse;
}

// ----------------------------------------------------------------- tree

struct TreeArgs {
  std::size_t k = 5;
  std::size_t limit = 7;
  std::string budget = "1e8";
  std::string root = "1";
  bool witness = false;
};

Json tree_json(const Context& ctx, const TreeNode& node) {
  Json j{{"word", ctx.str(node.word)}, {"position", node.position}};
  Json kids = Json::array();
  for (const auto& c : node.children) kids.push_back(tree_json(ctx, c));
  j["children"] = std::move(kids);
  return j;
}

void print_tree(const Context& ctx, const TreeNode& node, std::size_t indent) {
  ctx.out << std::string(2 * indent, ' ') << ctx.str(node.word);
  if (indent > 0) ctx.out << "  @" << node.position;
  ctx.out << '\n';
  for (const auto& c : node.children) print_tree(ctx, c, indent + 1);
}

int run_tree_depth(const Context& ctx, const TreeArgs& a) {
  Word root = ctx.table.parse(a.root);
  const std::uint64_t budget = parse_budget(a.budget);
  DepthReport report = max_complete_depth(a.k, a.limit, budget, root);

  std::optional<TreeNode> tree;
  if (a.witness && report.depth > 0) {
    CompleteTreeSearch search(a.k, budget);
    tree = search.witness_tree(root, report.depth);
  }
  const char* frontier = report.limit_reached      ? "limit reached"
                         : report.budget_exhausted ? "budget exhausted"
                                                   : "next depth refuted";
  if (ctx.json()) {
    ctx.emit("tree.depth",
             Json{{"k", a.k}, {"limit", a.limit}, {"budget", budget}, {"root", a.root}},
             report.depth, tree ? tree_json(ctx, *tree) : Json(nullptr),
             Json{{"frontier", frontier}, {"limit_reached", report.limit_reached},
                  {"budget_exhausted", report.budget_exhausted},
                  {"nodes", report.nodes}, {"memo_size", report.memo_size}});
  } else {
    ctx.out << "complete depth: " << report.depth << " (" << frontier << ")\n"
            << "nodes expanded: " << report.nodes << '\n'
            << "memo size: " << report.memo_size << '\n';
    if (tree) print_tree(ctx, *tree, 0);
  }
  if (report.budget_exhausted) return kBudget;
  return report.limit_reached ? kTrue : kFalse;
}

int run_tree_chain(const Context& ctx, const TreeArgs& a) {
  Word start = ctx.table.parse(a.root);
  const std::uint64_t budget = parse_budget(a.budget);
  ChainResult r = find_chain(a.k, a.limit, budget, start);
  bool verified = true;
  for (std::size_t i = 0; i < r.chain.size(); ++i) {
    const Word& w = r.chain[i];
    if (!is_square_free(w) || !bifurcate_over(w, a.k)) verified = false;
    if (i > 0) {
      bool step = false;
      for (std::size_t p = 1; p <= w.size() && !step; ++p) step = reduce_at(w, p) == r.chain[i - 1];
      verified = verified && step && w.size() == r.chain[i - 1].size() + 1;
    }
  }
  const bool long_enough = r.chain.size() >= a.limit;
  if (ctx.json()) {
    Json chain = Json::array();
    for (const auto& w : r.chain) chain.push_back(ctx.str(w));
    ctx.emit("tree.chain",
             Json{{"k", a.k}, {"limit", a.limit}, {"budget", budget}, {"start", a.root}},
             r.chain.size(), chain,
             Json{{"verified", verified}, {"exhaustive", r.exhaustive},
                  {"budget_exhausted", r.budget_exhausted}, {"nodes", r.nodes}});
  } else {
    for (const auto& w : r.chain) ctx.out << ctx.str(w) << '\n';
    ctx.out << "chain length: " << r.chain.size() << (verified ? " (verified)" : " (NOT verified)")
            << (r.exhaustive ? ", exhaustive" : "") << (r.budget_exhausted ? ", budget exhausted" : "")
            << '\n'
            << "nodes: " << r.nodes << '\n';
  }
  if (!verified) return kFalse;
  if (long_enough) return kTrue;
  return r.budget_exhausted ? kBudget : kFalse;
}

// --------------------------------------------------------------- dyadic

struct DyadicArgs {
  unsigned level = 3;
  unsigned max_level = DyadicGraph::kDefaultMaxLevel;
  bool directed = false;
  std::string budget = "1e7";
  std::size_t max_colors = 12;
  std::string coloring;
  std::size_t depth = 0;
};

Json coloring_json(const DyadicGraph& g, const PathColoring& c) {
  Json j = Json::object();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) j[g.point(v).to_string()] = c[v];
  return j;
}

int run_dyadic_min_colors(const Context& ctx, const DyadicArgs& a) {
  DyadicGraph g(a.level, a.max_level);
  auto r = min_squarefree_colors(a.level, a.directed, parse_budget(a.budget), a.max_colors);
  if (ctx.json()) {
    ctx.emit("dyadic.min-colors", Json{{"level", a.level}, {"directed", a.directed}}, r.colors,
             coloring_json(g, r.coloring), Json{{"optimal", r.optimal}, {"nodes", r.nodes}});
  } else {
    ctx.out << "# colors: " << r.colors << (r.optimal ? " (optimal)" : " (upper bound)") << '\n'
            << "# nodes: " << r.nodes << '\n'
            << format_coloring(g, r.coloring);
  }
  return kTrue;
}

int run_dyadic_verify(const Context& ctx, const DyadicArgs& a) {
  DyadicGraph g(a.level, a.max_level);
  PathColoring c = parse_coloring(read_file(a.coloring), g);
  auto r = check_path_coloring(g, c, a.directed, parse_budget(a.budget));
  Json witness = nullptr;
  std::string path, word;
  if (!r.square_free) {
    std::vector<Letter> colors;
    for (std::size_t v : r.bad_path) {
      path += (path.empty() ? "" : " ") + g.point(v).to_string();
      colors.push_back(c[v]);
    }
    word = ctx.str(colors);
    witness = Json{{"path", path}, {"word", word}};
  }
  if (ctx.json()) {
    ctx.emit("dyadic.verify", Json{{"level", a.level}, {"directed", a.directed}, {"coloring", a.coloring}},
             r.square_free, witness, Json{{"paths", r.paths}});
  } else {
    ctx.out << "square-free: " << (r.square_free ? "yes" : "no") << " (" << r.paths << " paths)\n";
    if (!r.square_free) ctx.out << "path: " << path << "\nword: " << word << '\n';
  }
  return r.square_free ? kTrue : kFalse;
}

Json dyadic_tree_json(const Context& ctx, const DyadicTreeNode& node) {
  Json points = Json::array();
  for (const auto& p : node.points) points.push_back(p.to_string());
  Json kids = Json::array();
  for (const auto& c : node.children) kids.push_back(dyadic_tree_json(ctx, c));
  return Json{{"points", points}, {"word", ctx.str(node.word)}, {"children", kids}};
}

void print_dyadic_tree(const Context& ctx, const DyadicTreeNode& node, std::size_t indent) {
  ctx.out << std::string(2 * indent, ' ');
  for (std::size_t i = 0; i < node.points.size(); ++i) ctx.out << (i ? " " : "") << node.points[i].to_string();
  ctx.out << "  " << ctx.str(node.word) << '\n';
  for (const auto& c : node.children) print_dyadic_tree(ctx, c, indent + 1);
}

int run_dyadic_extract(const Context& ctx, const DyadicArgs& a) {
  DyadicGraph g(a.level, a.max_level);
  PathColoring c = parse_coloring(read_file(a.coloring), g);
  const std::size_t depth = a.depth ? a.depth : a.level;
  DyadicTreeNode root;
  try {
    root = extract_bifurcate_tree(g, c, depth);
  } catch (const ConstructionError& e) {
    if (ctx.json())
      ctx.emit("dyadic.extract", Json{{"level", a.level}, {"depth", depth}}, false, e.what(), Json::object());
    else
      ctx.out << "construction failed: " << e.what() << '\n';
    return kFalse;
  }
  if (ctx.json())
    ctx.emit("dyadic.extract", Json{{"level", a.level}, {"depth", depth}, {"coloring", a.coloring}},
             true, dyadic_tree_json(ctx, root), Json::object());
  else
    print_dyadic_tree(ctx, root, 0);
  return kTrue;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Square-free word analysis, enumeration and search"};
  app.name("sqfree");
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();

  Globals globals;
  app.add_option("--symbols", globals.symbols, "Symbol table, one character per letter");
  app.add_option("--jobs", globals.jobs, "Worker threads (0 = hardware concurrency)");
  app.add_option("--format", globals.format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}));

  std::function<int(const Context&)> action;

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Test properties of one word");
  check_cmd->add_option("word", check.word, "The word (may be empty)")->required();
  check_cmd->add_option("--props", check.props,
                        "Comma-separated: squarefree, steady, bifurcate, extremal, irreducible, "
                        "separation, maxexp")
      ->delimiter(',');
  check_cmd->add_option("--alphabet", check.alphabet,
                        "Letters for bifurcate/extremal (default: first max(3, used) symbols)");
  check_cmd->callback([&] { action = [&](const Context& c) { return run_check(c, check); }; });

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count-steady", "Count canonical steady words per length (CSV n,count)");
  count_cmd->add_option("--k", count.k, "Alphabet size");
  count_cmd->add_option("--n-min", count.n_min, "First length");
  count_cmd->add_option("--n-max", count.n_max, "Last length");
  count_cmd->add_flag("--emit-words", count.emit_words, "Print the words, one per line");
  count_cmd->callback([&] { action = [&](const Context& c) { return run_count_steady(c, count); }; });

  EnumerateArgs en;
  auto* en_cmd = app.add_subcommand("enumerate", "List canonical words of a kind");
  en_cmd->add_option("--kind", en.kind, "Word kind")
      ->check(CLI::IsMember({"steady", "squarefree", "irreducible", "extremal"}));
  en_cmd->add_option("--k", en.k, "Alphabet size");
  en_cmd->add_option("--n", en.n, "Length")->required();
  en_cmd->add_option("--n-max", en.n_max, "Scan lengths n..n-max");
  en_cmd->add_flag("--first", en.first, "Only the lexicographically least word per length");
  en_cmd->add_flag("--count", en.count_only, "Only counts");
  en_cmd->callback([&] { action = [&](const Context& c) { return run_enumerate(c, en); }; });

  ListArgs lists;
  auto* lists_cmd = app.add_subcommand("lists", "Steady transversals of list systems");
  lists_cmd->require_subcommand(1);
  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("--file", lists.file, "List-system file (comma-separated letters per line)");
    cmd->add_option("--uniform", lists.uniform, "Use N copies of --letters instead of a file");
    cmd->add_option("--letters", lists.letters, "Letters of each uniform list");
  };
  auto* search_cmd = lists_cmd->add_subcommand("search", "Find a steady transversal");
  add_source(search_cmd);
  search_cmd->callback([&] { action = [&](const Context& c) { return run_lists_search(c, lists); }; });
  auto* lcount_cmd = lists_cmd->add_subcommand("count", "Count steady and failing transversals per length");
  add_source(lcount_cmd);
  lcount_cmd->add_option("--budget", lists.budget, "Node budget");
  lcount_cmd->add_flag("--breakdown", lists.breakdown, "Split failures by class");
  lcount_cmd->add_flag("--claim-check", lists.claim_check, "Check the identity, failure bound and growth");
  lcount_cmd->add_option("--list-size", lists.list_size, "List size for the checks (default: uniform size or 7)");
  lcount_cmd->callback([&] { action = [&](const Context& c) { return run_lists_count(c, lists); }; });
  auto* exp_cmd = lists_cmd->add_subcommand("experiment", "Search many list systems for one without a steady transversal");
  exp_cmd->add_option("--n", lists.experiment.n, "Number of lists");
  exp_cmd->add_option("--universe", lists.experiment.universe, "Letters available");
  exp_cmd->add_option("--list-size", lists.experiment.list_size, "Letters per list");
  exp_cmd->add_option("--samples", lists.experiment.samples, "Random systems (0 = exhaustive up to symmetry)");
  exp_cmd->add_option("--seed", lists.experiment.seed, "Random seed");
  exp_cmd->callback([&] { action = [&](const Context& c) { return run_lists_experiment(c, lists); }; });

  DejeanArgs dj;
  auto* dj_cmd = app.add_subcommand("gen-dejean", "Generate a word avoiding exponents above a threshold");
  dj_cmd->add_option("--n", dj.n, "Length");
  dj_cmd->add_option("--k", dj.k, "Alphabet size");
  dj_cmd->add_option("--threshold", dj.threshold, "Largest allowed exponent, num/den");
  dj_cmd->add_option("--seed", dj.seed, "Random seed");
  dj_cmd->add_option("--max-backtracks", dj.max_backtracks, "Backtrack budget per attempt");
  dj_cmd->add_option("--max-attempts", dj.max_attempts, "Restarts with derived seeds");
  dj_cmd->callback([&] { action = [&](const Context& c) { return run_gen_dejean(c, dj); }; });

  TreeArgs tree;
  auto* tree_cmd = app.add_subcommand("tree", "Complete bifurcate trees and chains");
  tree_cmd->require_subcommand(1);
  auto add_tree_opts = [&](CLI::App* cmd, const char* root_help) {
    cmd->add_option("--k", tree.k, "Alphabet size");
    cmd->add_option("--limit", tree.limit, "Depth or chain length limit");
    cmd->add_option("--budget", tree.budget, "Node budget");
    cmd->add_option("--root", tree.root, root_help);
  };
  auto* depth_cmd = tree_cmd->add_subcommand("depth", "Largest complete depth");
  add_tree_opts(depth_cmd, "Root word");
  depth_cmd->add_flag("--witness", tree.witness, "Print a complete tree of the reached depth");
  depth_cmd->callback([&] { action = [&](const Context& c) { return run_tree_depth(c, tree); }; });
  auto* chain_cmd = tree_cmd->add_subcommand("chain", "Long chain of bifurcate extensions");
  add_tree_opts(chain_cmd, "Start word");
  chain_cmd->callback([&] { action = [&](const Context& c) { return run_tree_chain(c, tree); }; });

  DyadicArgs dy;
  auto* dy_cmd = app.add_subcommand("dyadic", "Square-free colorings of dyadic graphs");
  dy_cmd->require_subcommand(1);
  auto add_level = [&](CLI::App* cmd) {
    cmd->add_option("--level", dy.level, "Graph level n of D_n");
    cmd->add_option("--max-level", dy.max_level, "Refuse levels above this");
  };
  auto* mc_cmd = dy_cmd->add_subcommand("min-colors", "Smallest square-free palette");
  add_level(mc_cmd);
  mc_cmd->add_flag("--directed", dy.directed, "Only paths moving right");
  mc_cmd->add_option("--budget", dy.budget, "Node budget per palette size");
  mc_cmd->add_option("--max-colors", dy.max_colors, "Largest palette tried");
  mc_cmd->callback([&] { action = [&](const Context& c) { return run_dyadic_min_colors(c, dy); }; });
  auto* ver_cmd = dy_cmd->add_subcommand("verify", "Check a coloring on every path");
  add_level(ver_cmd);
  ver_cmd->add_flag("--directed", dy.directed, "Only paths moving right");
  ver_cmd->add_option("--coloring", dy.coloring, "Coloring file")->required();
  ver_cmd->add_option("--budget", dy.budget, "Path budget");
  ver_cmd->callback([&] { action = [&](const Context& c) { return run_dyadic_verify(c, dy); }; });
  auto* ex_cmd = dy_cmd->add_subcommand("extract", "Read a complete bifurcate tree off a coloring");
  add_level(ex_cmd);
  ex_cmd->add_option("--coloring", dy.coloring, "Coloring file")->required();
  ex_cmd->add_option("--depth", dy.depth, "Tree levels (0 = the graph level)");
  ex_cmd->callback([&] { action = [&](const Context& c) { return run_dyadic_extract(c, dy); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kUsage;
  }

  try {
    Context ctx(globals, out);
    return action(ctx);
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << " (" << e.spent() << " spent)\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFalse;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace sqfree::cli
