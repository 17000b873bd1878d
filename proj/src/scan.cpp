#include "redweave/scan.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "redweave/bounds.hpp"
#include "redweave/classes.hpp"
#include "redweave/error.hpp"
#include "redweave/structure.hpp"
#include "redweave/subnetworks.hpp"

namespace redweave {

bool ScanReport::ok() const noexcept {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

namespace {

constexpr std::size_t kKeptViolations = 10;

class Recorder {
 public:
  explicit Recorder(SuiteResult& out) : out_(out) {}

  void check(bool ok, const std::string& what) {
    ++out_.checks;
    if (ok) return;
    ++out_.violation_count;
    if (out_.violations.size() < kKeptViolations) out_.violations.push_back(what);
  }

 private:
  SuiteResult& out_;
};

/// Per-permutation data shared by the suites, built on first use.
struct Subject {
  Permutation w;
  RunOptions options;
  std::optional<std::vector<Word>> words_;
  std::optional<ClassGraph> graph_;
  std::optional<RankedPoset> poset_;
  std::optional<int> y_;

  const std::vector<Word>& words() {
    if (!words_) words_ = enumerate_reduced_words(w, options.budget_words);
    return *words_;
  }
  const ClassGraph& graph() {
    if (!graph_) graph_ = build_graph(w, options);
    return *graph_;
  }
  const RankedPoset& poset() {
    if (!poset_) poset_ = build_poset(graph());
    return *poset_;
  }
  int y() {
    if (!y_) {
      int best = 0;
      for (const auto& word : words()) best = std::max(best, braid_window_count(word.letters()));
      y_ = best;
    }
    return *y_;
  }
  std::string name() const { return w.to_string(); }
};

/// Sets X drawn from commutation classes of every pattern in S_3 and S_4.
std::vector<WordSet> pattern_class_sets(int n) {
  std::vector<WordSet> out;
  for (int m = 3; m <= std::min(4, n); ++m) {
    for (const auto& p : enumerate_sn(m)) {
      for (const auto& c : enumerate_classes(p)) out.push_back(WordSet::of_class(c.canonical));
    }
  }
  return out;
}

void words_suite(Subject& s, Recorder& r) {
  const auto& words = s.words();
  r.check(words.size() == count_reduced_words(s.w), s.name() + ": descent count differs from walk");
  for (const auto& word : words) {
    const auto e = evaluate(word);
    r.check(e.reduced && e.result == s.w, s.name() + ": " + word.to_string() + " does not evaluate");
    const auto c = canonical_form(word);
    r.check(canonical_form(c) == c && is_representative(c.letters()),
            s.name() + ": canonical form of " + word.to_string() + " not stable");
    for (const auto& m : list_moves(word)) {
      const auto moved = apply_move(word, m);
      const auto delta = index_sum(moved) - index_sum(word);
      const auto expected = m.kind == MoveKind::Commutation ? 0 : m.kind == MoveKind::BraidUp ? 1 : -1;
      r.check(evaluate(moved).result == s.w && delta == expected,
              s.name() + ": move at " + std::to_string(m.position) + " of " + word.to_string());
    }
  }
}

void classes_suite(Subject& s, Recorder& r) {
  const auto& g = s.graph();
  const auto report = graph_checks(g);
  r.check(report.connected, s.name() + ": G(w) disconnected");
  r.check(report.bipartite && report.index_sums_adjacent, s.name() + ": G(w) not bipartite by index sum");
  std::uint64_t total = 0;
  std::set<std::string> covered;
  for (const auto& c : g.vertices()) {
    total += c.size;
    const auto members = class_members(c.canonical);
    r.check(members.size() == c.size, s.name() + ": class size of " + c.canonical.to_string());
    r.check(members.back() == c.canonical, s.name() + ": canonical is not the largest member");
    for (const auto& m : members) covered.insert(m.key());
  }
  r.check(total == s.words().size() && covered.size() == total, s.name() + ": classes do not partition R(w)");
  for (const auto& e : g.edges()) {
    std::set<std::array<int, 3>> triples;
    for (const auto& l : e.labels) triples.insert(l.wires);
    r.check(triples.size() == 1, s.name() + ": edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                     " acts on several wire triples");
  }
}

void poset_suite(Subject& s, Recorder& r) {
  try {
    const auto& p = s.poset();
    const auto n321 = pattern_count(s.w, Permutation({3, 2, 1}));
    r.check(p.levels().size() == static_cast<std::size_t>(n321 + 1), s.name() + ": rank count");
    for (const auto& [upper, lower] : p.covers) {
      r.check(p.rank[upper] == p.rank[lower] + 1, s.name() + ": cover does not drop rank by one");
    }
    for (const auto& c : s.graph().vertices()) {
      for (const auto& m : class_members(c.canonical)) {
        r.check(count_212(m.letters()) == p.rank[c.id], s.name() + ": 212 count not class-constant");
      }
    }
  } catch (const InvariantViolation& e) {
    r.check(false, s.name() + ": " + e.what());
  }
}

void bounds_suite(Subject& s, Recorder& r) {
  const auto report = size_bounds(s.w, false, s.options);
  const BigInt actual = s.graph().size();
  r.check(report.lower <= actual, s.name() + ": lower bound exceeds |G(w)|");
  if (report.length >= 1) r.check(actual < report.upper, s.name() + ": |G(w)| reaches 3^l(w)");
  if (report.n321 == 0) {
    r.check(report.lower == 1 && actual == 1, s.name() + ": 321-avoiding but not a single class");
  }
  if (report.y == 1) {
    r.check(actual == report.n321 + 1, s.name() + ": Y = 1 but |G(w)| != N_321 + 1");
  }
}

void free_suite(Subject& s, Recorder& r) {
  if (!is_freely_braided(s.graph())) return;
  r.check(s.graph().size() == (std::size_t{1} << s.y()), s.name() + ": freely braided but |G(w)| != 2^Y");
}

void line_suite(Subject& s, Recorder& r) {
  if (!is_path_graph(SimpleGraph::from(s.graph()))) return;
  const auto n321 = pattern_count(s.w, Permutation({3, 2, 1}));
  r.check(s.graph().size() == static_cast<std::size_t>(n321 + 1), s.name() + ": path but |G(w)| != N_321 + 1");
}

void rect_suite(Subject& s, Recorder& r) {
  const bool pattern = is_rectangular(s.w);
  const auto spec = rectangle_label(s.graph(), s.poset());
  const bool labelled = spec && validate_rectangle(s.graph(), *spec);
  r.check(pattern == labelled, s.name() + (pattern ? ": rectangular but labeling failed"
                                                   : ": not rectangular but labeling validated"));
  if (labelled) {
    r.check(are_isomorphic(SimpleGraph::from(s.graph()), SimpleGraph::grid(spec->dims)),
            s.name() + ": labeled grid not isomorphic");
  }
  // Avoiding 4321 rules out pairs of moves inside a longest-element factor.
  if (avoids(s.w, Permutation({4, 3, 2, 1}))) {
    const auto& g = s.graph();
    for (std::size_t v = 0; v < g.size(); ++v) {
      const auto& nb = g.neighbors(static_cast<int>(v));
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          r.check(classify_edge_pair(g, static_cast<int>(v), nb[i], nb[j]) != CyclePairClass::EightCycle,
                  s.name() + ": 4321-avoiding with an eight-cycle edge pair");
        }
      }
    }
  }
}

void cycles_suite(Subject& s, Recorder& r) {
  const auto& g = s.graph();
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto& nb = g.neighbors(static_cast<int>(v));
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const int vi = static_cast<int>(v);
        const auto verdict = classify_edge_pair(g, vi, nb[i], nb[j]);
        const int len = shortest_induced_cycle_through(g, vi, nb[i], nb[j]);
        const auto oracle = len == 4   ? CyclePairClass::FourCycle
                            : len == 8 ? CyclePairClass::EightCycle
                                       : CyclePairClass::NoInducedCycle;
        r.check(verdict == oracle && (len == 0 || len == 4 || len == 8),
                s.name() + ": pair at class " + std::to_string(v) + " classified " + to_string(verdict) +
                    ", shortest induced cycle " + std::to_string(len));
      }
    }
  }
}

void cube_suite(Subject& s, Recorder& r) {
  try {
    const auto cube = embed_hypercube(s.graph(), s.options);
    r.check(validate_hypercube(s.graph(), cube) && cube.dimension() >= (s.y() + 1) / 2,
            s.name() + ": cube too small or invalid");
  } catch (const InvariantViolation& e) {
    r.check(false, s.name() + ": " + e.what());
  }
}

void subnet_suite(Subject& s, Recorder& r, const std::vector<WordSet>& sets) {
  const int n = s.w.size();
  const auto& g = s.graph();
  for (const auto& x : sets) {
    if (x.m() > n) continue;
    SubnetworkTracker tracker(s.w, x);
    for (const auto& c : g.vertices()) {
      const auto expected = tracker.count(c.canonical.letters());
      for (const auto& m : class_members(c.canonical)) {
        r.check(tracker.count(m.letters()) == expected,
                s.name() + ": count for " + x.to_string() + " varies inside class " + c.canonical.to_string());
      }
    }
  }

  // Reversal carries R(w) onto R(w^-1), so x-totals over R(w) match
  // reversed-x totals over R(w^-1).
  const auto inverse = s.w.inverse();
  const auto inverse_words = enumerate_reduced_words(inverse, s.options.budget_words);
  for (int m = 3; m <= std::min(4, n); ++m) {
    for (const auto& p : enumerate_sn(m)) {
      if (p != p.inverse()) continue;
      for (const auto& x : enumerate_reduced_words(p)) {
        const auto xr = reverse_word(x, p).word;
        SubnetworkTracker forward(s.w, WordSet::singleton(x));
        SubnetworkTracker backward(inverse, WordSet::singleton(xr));
        std::int64_t a = 0;
        std::int64_t b = 0;
        for (const auto& rho : s.words()) a += forward.count(rho.letters());
        for (const auto& rho : inverse_words) b += backward.count(rho.letters());
        r.check(a == b, s.name() + ": reversed totals differ for " + x.to_string());
      }
    }
  }

  if (s.w == Permutation::longest(n)) {
    for (int m = 3; m <= std::min(4, n); ++m) {
      const auto p = Permutation::longest(m);
      for (const auto& x : enumerate_reduced_words(p)) {
        const auto xc = complement_word(x, p);
        r.check(xc.same_permutation, s.name() + ": complement of " + x.to_string() + " leaves R(w_0)");
        SubnetworkTracker a(s.w, WordSet::singleton(x));
        SubnetworkTracker b(s.w, WordSet::singleton(xc.word));
        std::int64_t ta = 0;
        std::int64_t tb = 0;
        for (const auto& rho : s.words()) {
          ta += a.count(rho.letters());
          tb += b.count(rho.letters());
        }
        r.check(ta == tb, s.name() + ": complement totals differ for " + x.to_string());
      }
    }
    if (n >= 4) {
      SubnetworkTracker tracker(s.w, WordSet::warrington());
      for (const auto& rho : s.words()) {
        const auto pc = predicted_count_w0_s4(rho);
        r.check(pc.predicted == pc.actual, s.name() + ": w_0 formula fails on " + rho.to_string());
        const auto before = tracker.count(rho.letters());
        for (const auto& mv : list_braid_moves(rho.letters())) {
          if (mv.kind != MoveKind::BraidDown) continue;
          const int i = braid_letter(rho.letters(), mv);
          const auto after = tracker.count(apply_move(rho, mv).letters());
          r.check(after - before == 2 * i - n + 1,
                  s.name() + ": braid step on " + rho.to_string() + " changes the count by " +
                      std::to_string(after - before));
        }
      }
    }
  }
}

}  // namespace

ScanReport run_scan(int n, const std::vector<std::string>& suites, const RunOptions& options) {
  std::vector<std::string> chosen;
  for (const auto& name : suites) {
    if (name == "all") {
      chosen.assign(std::begin(kSuiteNames), std::end(kSuiteNames));
      break;
    }
    if (std::find(std::begin(kSuiteNames), std::end(kSuiteNames), name) == std::end(kSuiteNames)) {
      throw InputError("unknown suite: " + name);
    }
    if (std::find(chosen.begin(), chosen.end(), name) == chosen.end()) chosen.push_back(name);
  }
  if (chosen.empty()) throw InputError("no suites selected");

  const auto perms = enumerate_sn(n);
  const unsigned threads = resolve_threads(options.threads);
  const bool need_sets = std::find(chosen.begin(), chosen.end(), "subnet") != chosen.end();
  const auto sets = need_sets ? pattern_class_sets(n) : std::vector<WordSet>{};
  const std::size_t paren_index = std::find(chosen.begin(), chosen.end(), "paren") - chosen.begin();

  std::vector<std::vector<SuiteResult>> partial(perms.size());
  run_tasks(perms.size(), threads, [&](std::size_t t) {
    RunOptions inner = options;
    inner.threads = 1;
    Subject subject{perms[t], inner, {}, {}, {}, {}};
    auto& results = partial[t];
    results.resize(chosen.size());
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      const auto& name = chosen[k];
      results[k].name = name;
      Recorder r(results[k]);
      if (name == "words") words_suite(subject, r);
      if (name == "classes") classes_suite(subject, r);
      if (name == "poset") poset_suite(subject, r);
      if (name == "bounds") bounds_suite(subject, r);
      if (name == "free") free_suite(subject, r);
      if (name == "line") line_suite(subject, r);
      if (name == "rect") rect_suite(subject, r);
      if (name == "cycles") cycles_suite(subject, r);
      if (name == "cube") cube_suite(subject, r);
      if (name == "subnet") subnet_suite(subject, r, sets);
    }
  });

  ScanReport report;
  report.n = n;
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    SuiteResult merged;
    merged.name = chosen[k];
    for (const auto& p : partial) {
      const auto& s = p[k];
      merged.checks += s.checks;
      merged.violation_count += s.violation_count;
      for (const auto& v : s.violations) {
        if (merged.violations.size() < kKeptViolations) merged.violations.push_back(v);
      }
    }
    if (k == paren_index) {
      Recorder r(merged);
      const int max_l = n * (n - 1) / 2;
      for (int l = 0; l <= max_l; ++l) {
        const auto a = aggregate_bound_check(n, l, options, std::max(n, 6));
        r.check(a.holds(), "aggregate bound fails at n=" + std::to_string(n) + ", l=" + std::to_string(l));
      }
    }
    report.suites.push_back(std::move(merged));
  }
  return report;
}

}  // namespace redweave
