#include "redweave/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <limits>
#include <ostream>
#include <sstream>

#include "redweave/bounds.hpp"
#include "redweave/classes.hpp"
#include "redweave/error.hpp"
#include "redweave/scan.hpp"
#include "redweave/structure.hpp"
#include "redweave/subnetworks.hpp"
#include "text.hpp"

namespace redweave::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "redweave/1";

struct Globals {
  std::string format = "text";
  unsigned threads = 0;
  bool threads_given = false;
  std::uint64_t budget = kDefaultWordBudget;

  RunOptions options() const {
    RunOptions o;
    o.budget_words = budget;
    o.threads = resolve_threads(threads);
    return o;
  }
};

json letters_json(std::span<const Letter> letters) {
  json out = json::array();
  for (Letter l : letters) out.push_back(static_cast<int>(l));
  return out;
}

json perm_json(const Permutation& w) { return json(std::vector<int>(w.values().begin(), w.values().end())); }

json big_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

json document() {
  json j;
  j["schema"] = kSchema;
  return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void require_format(const Globals& g, std::initializer_list<const char*> allowed, const std::string& command) {
  for (const char* f : allowed) {
    if (g.format == f) return;
  }
  throw InputError("format '" + g.format + "' is not available for " + command);
}

std::string join_letters(const Word& w) { return w.empty() ? "()" : w.to_string(); }

// ---- words / classes ------------------------------------------------------

void cmd_words(const Globals& g, const std::string& perm, bool count_only, std::ostream& out) {
  require_format(g, {"text", "json"}, "words");
  const auto w = Permutation::parse(perm);
  const auto options = g.options();
  if (count_only) {
    require_word_budget(w, options.budget_words);
    const auto n = count_reduced_words(w);
    if (g.format == "json") {
      auto j = document();
      j["w"] = perm_json(w);
      j["count"] = n;
      emit(out, j);
    } else {
      out << n << '\n';
    }
    return;
  }
  const auto words = enumerate_reduced_words(w, options.budget_words);
  if (g.format == "json") {
    auto j = document();
    j["w"] = perm_json(w);
    j["count"] = words.size();
    j["words"] = json::array();
    for (const auto& word : words) j["words"].push_back(letters_json(word.letters()));
    emit(out, j);
    return;
  }
  for (const auto& word : words) out << join_letters(word) << '\n';
}

void cmd_classes(const Globals& g, const std::string& perm, std::ostream& out) {
  require_format(g, {"text", "json"}, "classes");
  const auto w = Permutation::parse(perm);
  const auto classes = enumerate_classes(w, g.options());
  if (g.format == "json") {
    auto j = document();
    j["w"] = perm_json(w);
    j["count"] = classes.size();
    j["classes"] = json::array();
    for (const auto& c : classes) {
      j["classes"].push_back({{"id", c.id},
                              {"canonical", letters_json(c.canonical.letters())},
                              {"size", c.size},
                              {"index_sum", c.index_sum}});
    }
    emit(out, j);
    return;
  }
  out << classes.size() << " classes\n";
  for (const auto& c : classes) {
    out << c.id << '\t' << join_letters(c.canonical) << "\tsize " << c.size << "\tsum " << c.index_sum << '\n';
  }
}

// ---- graph / poset --------------------------------------------------------

std::string dot_quote(const std::string& s) { return '"' + s + '"'; }

std::string label_text(const EdgeLabel& l) {
  return "s" + std::to_string(l.letter) + " {" + std::to_string(l.wires[0]) + "," + std::to_string(l.wires[1]) +
         "," + std::to_string(l.wires[2]) + "}";
}

void dot_ranks(std::ostream& out, const RankedPoset& poset) {
  const auto levels = poset.levels();
  for (std::size_t r = 0; r < levels.size(); ++r) {
    out << "  { rank=same;";
    for (int id : levels[r]) out << ' ' << id << ';';
    out << " }\n";
  }
}

void cmd_graph(const Globals& g, const std::string& perm, std::ostream& out) {
  const auto w = Permutation::parse(perm);
  const auto graph = build_graph(w, g.options());
  const auto poset = build_poset(graph);
  if (g.format == "json") {
    auto j = document();
    j["n"] = w.size();
    j["w"] = perm_json(w);
    j["vertices"] = json::array();
    for (const auto& c : graph.vertices()) {
      j["vertices"].push_back({{"id", c.id},
                               {"canonical", letters_json(c.canonical.letters())},
                               {"index_sum", c.index_sum},
                               {"rank", poset.rank[c.id]}});
    }
    j["edges"] = json::array();
    for (const auto& e : graph.edges()) {
      json labels = json::array();
      for (const auto& l : e.labels) labels.push_back({{"letter", l.letter}, {"wires", l.wires}});
      j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"labels", labels}});
    }
    emit(out, j);
  } else if (g.format == "dot") {
    out << "graph " << dot_quote("G(" + w.to_string() + ")") << " {\n  node [shape=box];\n";
    for (const auto& c : graph.vertices()) out << "  " << c.id << " [label=" << dot_quote(join_letters(c.canonical)) << "];\n";
    dot_ranks(out, poset);
    for (const auto& e : graph.edges()) {
      std::string labels;
      for (const auto& l : e.labels) labels += (labels.empty() ? "" : " ") + label_text(l);
      out << "  " << e.u << " -- " << e.v << " [label=" << dot_quote(labels) << "];\n";
    }
    out << "}\n";
  } else {
    out << "G(" << w.to_string() << "): " << graph.size() << " vertices, " << graph.edges().size() << " edges\n";
    for (const auto& c : graph.vertices()) {
      out << c.id << '\t' << join_letters(c.canonical) << "\tsum " << c.index_sum << "\trank " << poset.rank[c.id]
          << '\n';
    }
    for (const auto& e : graph.edges()) {
      out << e.u << " -- " << e.v;
      for (const auto& l : e.labels) out << '\t' << label_text(l);
      out << '\n';
    }
  }
}

void cmd_poset(const Globals& g, const std::string& perm, std::ostream& out) {
  const auto w = Permutation::parse(perm);
  const auto graph = build_graph(w, g.options());
  const auto poset = build_poset(graph);
  const auto levels = poset.levels();
  if (g.format == "json") {
    auto j = document();
    j["w"] = perm_json(w);
    j["n321"] = poset.max_rank;
    j["ranks"] = levels;
    j["vertices"] = json::array();
    for (const auto& c : graph.vertices()) {
      j["vertices"].push_back({{"id", c.id},
                               {"canonical", letters_json(c.canonical.letters())},
                               {"rank", poset.rank[c.id]}});
    }
    j["covers"] = json::array();
    for (const auto& [upper, lower] : poset.covers) j["covers"].push_back({upper, lower});
    emit(out, j);
  } else if (g.format == "dot") {
    out << "digraph " << dot_quote("P(" + w.to_string() + ")") << " {\n  rankdir=TB;\n  node [shape=box];\n";
    for (const auto& c : graph.vertices()) out << "  " << c.id << " [label=" << dot_quote(join_letters(c.canonical)) << "];\n";
    dot_ranks(out, poset);
    for (const auto& [upper, lower] : poset.covers) out << "  " << upper << " -> " << lower << ";\n";
    out << "}\n";
  } else {
    out << "P(" << w.to_string() << "): " << levels.size() << " ranks\n";
    for (std::size_t r = levels.size(); r-- > 0;) {
      out << "rank " << r << ':';
      for (int id : levels[r]) out << ' ' << join_letters(graph.vertices()[id].canonical);
      out << '\n';
    }
    for (const auto& [upper, lower] : poset.covers) {
      out << join_letters(graph.vertices()[upper].canonical) << " > " << join_letters(graph.vertices()[lower].canonical)
          << '\n';
    }
  }
}

// ---- bounds / aggregate ---------------------------------------------------

void cmd_bounds(const Globals& g, const std::string& perm, bool actual, std::ostream& out) {
  require_format(g, {"text", "json"}, "bounds");
  const auto w = Permutation::parse(perm);
  const auto r = size_bounds(w, actual, g.options());
  if (g.format == "json") {
    auto j = document();
    j["w"] = perm_json(w);
    j["Y"] = r.y;
    j["n321"] = r.n321;
    j["length"] = r.length;
    j["lower"] = big_json(r.lower);
    j["upper"] = big_json(r.upper);
    j["refined_upper"] = r.refined;
    j["actual"] = r.actual ? big_json(*r.actual) : json(nullptr);
    if (actual) j["holds"] = r.holds();
    if (!r.notice.empty()) j["notice"] = r.notice;
    emit(out, j);
    return;
  }
  out << "w " << w.to_string() << "  l " << r.length << "  Y " << r.y << "  N321 " << r.n321 << '\n';
  out << "lower " << r.lower << '\n';
  if (r.actual) out << "actual " << *r.actual << '\n';
  out << "upper " << r.upper << " (3^l)\n";
  std::ostringstream refined;
  refined.precision(6);
  refined << r.refined;
  out << "refined " << refined.str() << " (2.487^l, informational)\n";
  if (!r.notice.empty()) out << "notice: " << r.notice << '\n';
  if (actual && r.actual) out << (r.holds() ? "bounds hold\n" : "BOUNDS VIOLATED\n");
}

int cmd_aggregate(const Globals& g, int n, int l, std::ostream& out) {
  require_format(g, {"text", "json"}, "aggregate");
  const auto r = aggregate_bound_check(n, l, g.options());
  if (g.format == "json") {
    auto j = document();
    j["n"] = r.n;
    j["l"] = r.l;
    j["count_perms"] = r.count_perms;
    j["sum_classes"] = big_json(r.sum_classes);
    j["catalan"] = big_json(r.catalan);
    j["four_power"] = big_json(r.four_power);
    j["injective"] = r.injective;
    j["balanced"] = r.balanced;
    j["holds"] = r.holds();
    emit(out, j);
  } else {
    out << "n " << r.n << "  l " << r.l << "  permutations " << r.count_perms << '\n';
    out << "sum |G(w)| " << r.sum_classes << "  C_" << (r.l + r.n - 1) << ' ' << r.catalan << "  4^" << (r.l + r.n)
        << ' ' << r.four_power << '\n';
    out << "encodings " << (r.injective ? "distinct" : "COLLIDE") << ", " << (r.balanced ? "balanced" : "UNBALANCED")
        << '\n';
    out << (r.holds() ? "bound holds\n" : "BOUND VIOLATED\n");
  }
  return r.holds() ? kOk : kInvariantViolation;
}

// ---- subnetworks ----------------------------------------------------------

void cmd_subnet(const Globals& g, const std::string& perm, const std::string& word_text, const std::string& set_text,
                std::optional<int> m, bool predict, std::ostream& out) {
  require_format(g, {"text", "json"}, "subnet");
  const auto w = Permutation::parse(perm);
  const auto word = Word::parse(w.size(), word_text);
  if (!is_reduced_word_of(word, w)) {
    throw InputError(word.to_string() + " is not a reduced word of " + w.to_string());
  }
  const auto x = WordSet::parse(set_text, m);
  if (x.m() > w.size()) throw InputError("pattern size exceeds n");
  const auto count = count_subnetworks(word, x);

  json prediction;
  if (predict) {
    const bool w0_case = w == Permutation::longest(w.size()) && w.size() >= 4 &&
                         x.words() == WordSet::warrington().words();
    if (w0_case) {
      const auto pc = predicted_count_w0_s4(word);
      prediction = {{"formula", "sum (i-1)(n-i-1) - 2 C(n,4)"}, {"predicted", pc.predicted}, {"actual", pc.actual}};
    } else {
      if (!x.pattern()) throw InputError("no counting formula applies to an empty set");
      const auto pc = predicted_count_friendly(w, word, *x.pattern(), g.options());
      prediction = {{"formula", "k (index_sum - c)"}, {"k", pc.k}, {"c", pc.c},
                    {"predicted", pc.predicted}, {"actual", pc.actual}};
      const auto gp = build_graph(*x.pattern(), g.options());
      const auto pp = build_poset(gp);
      const auto top = std::max_element(pp.rank.begin(), pp.rank.end()) - pp.rank.begin();
      const auto formula_set = WordSet::of_class(gp.vertices()[top].canonical);
      if (formula_set.words() != x.words()) prediction["formula_set"] = formula_set.to_string();
    }
  }

  if (g.format == "json") {
    auto j = document();
    j["w"] = perm_json(w);
    j["word"] = letters_json(word.letters());
    j["set"] = x.to_string();
    j["m"] = x.m();
    j["count"] = count;
    if (predict) j["prediction"] = prediction;
    emit(out, j);
    return;
  }
  out << count << '\n';
  if (predict) {
    out << "formula " << prediction["formula"].get<std::string>() << ": predicted "
        << prediction["predicted"].get<std::int64_t>() << ", actual " << prediction["actual"].get<std::int64_t>();
    if (prediction.contains("k")) {
      out << " (k " << prediction["k"].get<std::int64_t>() << ", c " << prediction["c"].get<std::int64_t>() << ')';
    }
    out << '\n';
    if (prediction.contains("formula_set")) {
      out << "note: the formula counts the top class of P(p): " << prediction["formula_set"].get<std::string>()
          << '\n';
    }
  }
}

void cmd_warrington(const Globals& g, int n, bool classes, std::ostream& out) {
  require_format(g, {"text", "json"}, "warrington");
  if (n < 1) throw InputError("n must be at least 1");
  if (n > 9) throw BudgetExceeded("w_0 of S_" + std::to_string(n) + " is beyond any word budget");
  const auto w = Permutation::longest(n);
  const auto r = count_x_avoiding_words(w, WordSet::warrington(), classes, g.options());
  if (g.format == "json") {
    auto j = document();
    j["n"] = n;
    j["set"] = WordSet::warrington().to_string();
    j["words"] = r.words;
    if (r.classes) j["classes"] = *r.classes;
    emit(out, j);
    return;
  }
  out << r.words << '\n';
  if (r.classes) out << "classes " << *r.classes << '\n';
}

// ---- structure ------------------------------------------------------------

void cmd_rect(const Globals& g, const std::string& perm, std::ostream& out) {
  require_format(g, {"text", "json"}, "rect");
  const auto w = Permutation::parse(perm);
  const auto witness = rectangular_witness(w);
  const auto graph = build_graph(w, g.options());
  const auto poset = build_poset(graph);
  const auto spec = rectangle_label(graph, poset);
  if (g.format == "json") {
    auto j = document();
    j["w"] = perm_json(w);
    j["rectangular"] = !witness.has_value();
    j["dims"] = spec ? json(spec->dims) : json(nullptr);
    j["witness_pattern"] = witness ? json(witness->to_string()) : json(nullptr);
    if (spec) {
      json labels = json::object();
      for (const auto& c : graph.vertices()) labels[join_letters(c.canonical)] = spec->labels[c.id];
      j["labels"] = labels;
    } else {
      j["labels"] = nullptr;
    }
    j["grid"] = spec.has_value();
    emit(out, j);
    return;
  }
  out << "pattern test: " << (witness ? "contains " + witness->to_string() : std::string("rectangular")) << '\n';
  if (!spec) {
    out << "labeling: no grid\n";
    return;
  }
  out << "labeling: dims (";
  for (std::size_t i = 0; i < spec->dims.size(); ++i) out << (i ? "," : "") << spec->dims[i];
  out << ")\n";
  for (const auto& c : graph.vertices()) {
    out << join_letters(c.canonical) << " (";
    for (std::size_t i = 0; i < spec->labels[c.id].size(); ++i) out << (i ? "," : "") << spec->labels[c.id][i];
    out << ")\n";
  }
}

void cmd_cycles(const Globals& g, const std::string& perm, std::ostream& out) {
  require_format(g, {"text", "json"}, "cycles");
  const auto w = Permutation::parse(perm);
  const auto graph = build_graph(w, g.options());
  json pairs = json::array();
  std::ostringstream text;
  std::size_t agree = 0;
  std::size_t total = 0;
  for (std::size_t v = 0; v < graph.size(); ++v) {
    const int vi = static_cast<int>(v);
    const auto& nb = graph.neighbors(vi);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t k = i + 1; k < nb.size(); ++k) {
        const auto verdict = classify_edge_pair(graph, vi, nb[i], nb[k]);
        const int len = shortest_induced_cycle_through(graph, vi, nb[i], nb[k]);
        const bool ok = (verdict == CyclePairClass::FourCycle) == (len == 4) &&
                        (verdict == CyclePairClass::EightCycle) == (len == 8) &&
                        (verdict != CyclePairClass::NoInducedCycle || len == 0);
        ++total;
        agree += ok;
        pairs.push_back({{"v", vi}, {"a", nb[i]}, {"b", nb[k]}, {"verdict", to_string(verdict)},
                         {"shortest_induced_cycle", len}, {"agrees", ok}});
        text << vi << ": " << nb[i] << ' ' << nb[k] << '\t' << to_string(verdict) << "\tshortest " << len
             << (ok ? "" : "\tDISAGREES") << '\n';
      }
    }
  }
  if (g.format == "json") {
    auto j = document();
    j["w"] = perm_json(w);
    j["pairs"] = pairs;
    j["agreeing"] = agree;
    emit(out, j);
    return;
  }
  out << text.str() << agree << " of " << total << " pairs agree with the cycle search\n";
}

void cmd_cube(const Globals& g, const std::string& perm, const std::string& word_text, std::ostream& out) {
  require_format(g, {"text", "json"}, "cube");
  const auto w = Permutation::parse(perm);
  const auto options = g.options();
  const auto graph = build_graph(w, options);
  const int y = max_braid_moves(w, options);
  const auto cube = word_text.empty() ? embed_hypercube(graph, options)
                                      : cube_from_word(graph, Word::parse(w.size(), word_text));
  if (g.format == "json") {
    auto j = document();
    j["w"] = perm_json(w);
    j["Y"] = y;
    j["dimension"] = cube.dimension();
    j["direction"] = to_string(cube.direction);
    j["source"] = letters_json(cube.source.letters());
    j["moves"] = json::array();
    for (const auto& m : cube.moves) j["moves"].push_back(m.position);
    j["classes"] = cube.class_ids;
    j["valid"] = validate_hypercube(graph, cube);
    emit(out, j);
    return;
  }
  out << "Y " << y << ", cube of dimension " << cube.dimension() << " from " << join_letters(cube.source) << " ("
      << to_string(cube.direction) << " windows at";
  for (const auto& m : cube.moves) out << ' ' << m.position;
  out << ")\n";
  for (std::size_t s = 0; s < cube.class_ids.size(); ++s) {
    std::string bits;
    for (int k = 0; k < cube.dimension(); ++k) bits += (s >> k & 1u) ? '1' : '0';
    out << (bits.empty() ? "-" : bits) << '\t' << join_letters(graph.vertices()[cube.class_ids[s]].canonical) << '\n';
  }
}

int cmd_scan(const Globals& g, int n, const std::string& suites, std::ostream& out) {
  require_format(g, {"text", "json"}, "scan");
  std::vector<std::string> names;
  for (auto& s : detail::split_tokens(suites)) names.emplace_back(s);
  const auto report = run_scan(n, names, g.options());
  if (g.format == "json") {
    auto j = document();
    j["n"] = n;
    j["ok"] = report.ok();
    j["suites"] = json::array();
    for (const auto& s : report.suites) {
      j["suites"].push_back({{"name", s.name}, {"checks", s.checks}, {"violations", s.violation_count},
                             {"examples", s.violations}});
    }
    emit(out, j);
  } else {
    for (const auto& s : report.suites) {
      out << s.name << '\t' << s.checks << " checks\t" << s.violation_count << " violations\n";
      for (const auto& v : s.violations) out << "  " << v << '\n';
    }
    out << (report.ok() ? "scan clean\n" : "scan found violations\n");
  }
  return report.ok() ? kOk : kInvariantViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduced words, commutation classes and subnetworks of permutations", "redweave"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  auto* threads = app.add_option("--threads", g.threads, "Worker threads (0: all cores)");
  app.add_option("--budget-words", g.budget, "Refuse enumerations above this many reduced words");

  std::string perm;
  std::string word;
  std::string set;
  std::string suites = "all";
  std::optional<int> m;
  int n = 0;
  int l = 0;
  bool flag = false;

  auto* words = app.add_subcommand("words", "List reduced words of W");
  words->add_option("W", perm)->required();
  words->add_flag("--count", flag, "Only count them");
  auto* classes = app.add_subcommand("classes", "Commutation classes of W");
  classes->add_option("W", perm)->required();
  auto* graph = app.add_subcommand("graph", "The graph G(W)");
  graph->add_option("W", perm)->required();
  auto* poset = app.add_subcommand("poset", "The ranked poset P(W)");
  poset->add_option("W", perm)->required();
  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on |G(W)|");
  bounds->add_option("W", perm)->required();
  bounds->add_flag("--actual", flag, "Also enumerate the classes");
  auto* aggregate = app.add_subcommand("aggregate", "Sum of |G(w)| over l(w) = L in S_N against the Catalan bound");
  aggregate->add_option("N", n)->required();
  aggregate->add_option("L", l)->required();
  auto* subnet = app.add_subcommand("subnet", "Count X-subnetworks of a reduced word");
  subnet->add_option("W", perm)->required();
  subnet->add_option("--word", word, "Reduced word of W")->required();
  subnet->add_option("--set", set, "Word set X, e.g. 123212;321232 or warrington-x")->required();
  subnet->add_option("-m", m, "Pattern size of X");
  subnet->add_flag("--predict", flag, "Compare with the applicable counting formula");
  auto* warrington = app.add_subcommand("warrington", "X-avoiding reduced words of w_0 in S_N");
  warrington->add_option("N", n)->required();
  warrington->add_flag("--classes", flag, "Also count X-avoiding classes");
  auto* rect = app.add_subcommand("rect", "Rectangularity of W");
  rect->add_option("W", perm)->required();
  auto* cycles = app.add_subcommand("cycles", "Classify incident edge pairs of G(W)");
  cycles->add_option("W", perm)->required();
  auto* cube = app.add_subcommand("cube", "Hypercube embedded in G(W)");
  cube->add_option("W", perm)->required();
  cube->add_option("--word", word, "Build the cube from this reduced word");
  auto* scan = app.add_subcommand("scan", "Run the invariant suites over S_N");
  scan->add_option("N", n)->required();
  scan->add_option("--suite", suites, "Comma-separated suites, or all");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  if (threads->count() == 0) {
    if (const char* env = std::getenv("REDWEAVE_THREADS"); env != nullptr && *env != '\0') {
      try {
        g.threads = static_cast<unsigned>(detail::parse_int(env, "REDWEAVE_THREADS"));
      } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
      }
    }
  }

  try {
    if (!g.format.empty() && g.format == "dot" && !graph->parsed() && !poset->parsed()) {
      throw InputError("dot output is only available for graph and poset");
    }
    if (words->parsed()) cmd_words(g, perm, flag, out);
    if (classes->parsed()) cmd_classes(g, perm, out);
    if (graph->parsed()) cmd_graph(g, perm, out);
    if (poset->parsed()) cmd_poset(g, perm, out);
    if (bounds->parsed()) cmd_bounds(g, perm, flag, out);
    if (aggregate->parsed()) return cmd_aggregate(g, n, l, out);
    if (subnet->parsed()) cmd_subnet(g, perm, word, set, m, flag, out);
    if (warrington->parsed()) cmd_warrington(g, n, flag, out);
    if (rect->parsed()) cmd_rect(g, perm, out);
    if (cycles->parsed()) cmd_cycles(g, perm, out);
    if (cube->parsed()) cmd_cube(g, perm, word, out);
    if (scan->parsed()) return cmd_scan(g, n, suites, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return kBudgetRefused;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kInvariantViolation;
  } catch (const std::bad_alloc&) {
    err << "refused: out of memory\n";
    return kBudgetRefused;
  }
  return kOk;
}

}  // namespace redweave::cli
