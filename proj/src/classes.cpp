#include "redweave/classes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "redweave/error.hpp"
#include "redweave/subnetworks.hpp"

namespace redweave {

ClassGraph::ClassGraph(Permutation w, std::vector<CommutationClass> vertices,
                       std::vector<ClassEdge> edges)
    : w_(std::move(w)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  adjacency_.resize(vertices_.size());
  edge_index_.resize(vertices_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    adjacency_[edges_[e].u].push_back(edges_[e].v);
    adjacency_[edges_[e].v].push_back(edges_[e].u);
  }
  for (std::size_t id = 0; id < vertices_.size(); ++id) {
    std::sort(adjacency_[id].begin(), adjacency_[id].end());
    by_key_.emplace(vertices_[id].canonical.key(), static_cast<int>(id));
  }
  for (std::size_t id = 0; id < vertices_.size(); ++id) {
    edge_index_[id].assign(adjacency_[id].size(), -1);
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const int u = edges_[e].u;
    const int v = edges_[e].v;
    auto& nu = adjacency_[u];
    auto& nv = adjacency_[v];
    edge_index_[u][std::lower_bound(nu.begin(), nu.end(), v) - nu.begin()] = static_cast<int>(e);
    edge_index_[v][std::lower_bound(nv.begin(), nv.end(), u) - nv.begin()] = static_cast<int>(e);
  }
}

bool ClassGraph::adjacent(int a, int b) const {
  const auto& na = adjacency_[a];
  return std::binary_search(na.begin(), na.end(), b);
}

const ClassEdge* ClassGraph::edge(int a, int b) const {
  const auto& na = adjacency_[a];
  auto it = std::lower_bound(na.begin(), na.end(), b);
  if (it == na.end() || *it != b) return nullptr;
  return &edges_[edge_index_[a][it - na.begin()]];
}

std::optional<int> ClassGraph::find(const Word& canonical) const {
  auto it = by_key_.find(canonical.key());
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> ClassGraph::class_of(const Word& word) const {
  return find(canonical_form(word));
}

std::vector<std::vector<int>> RankedPoset::levels() const {
  std::vector<std::vector<int>> out(max_rank + 1);
  for (std::size_t id = 0; id < rank.size(); ++id) out[rank[id]].push_back(static_cast<int>(id));
  return out;
}

namespace {

struct GraphBuilder {
  int n;
  std::unordered_map<std::string, int> ids;
  std::vector<std::string> keys;
  std::vector<std::uint64_t> sizes;
  std::map<std::pair<int, int>, std::set<EdgeLabel>> edges;
  std::vector<Letter> canonical;
  std::vector<Letter> moved;
  std::vector<int> arrangement;

  int intern(std::span<const Letter> letters) {
    canonical.resize(letters.size());
    canonical_form_into(letters, canonical);
    std::string key(canonical.begin(), canonical.end());
    auto [it, inserted] = ids.try_emplace(std::move(key), static_cast<int>(keys.size()));
    if (inserted) {
      keys.push_back(it->first);
      sizes.push_back(0);
    }
    return it->second;
  }

  void add_word(std::span<const Letter> letters, bool with_edges) {
    const int source = intern(letters);
    ++sizes[source];
    if (!with_edges) return;
    arrangement.resize(n);
    std::iota(arrangement.begin(), arrangement.end(), 1);
    for (std::size_t k = 0; k < letters.size(); ++k) {
      if (k + 2 < letters.size() && letters[k] == letters[k + 2] &&
          letters[k + 1] + 1 == letters[k]) {
        // BraidDown window (i+1, i, i+1) occupying positions i..i+2.
        const int i = letters[k + 1];
        std::array<int, 3> wires{arrangement[i - 1], arrangement[i], arrangement[i + 1]};
        std::sort(wires.begin(), wires.end());
        moved.assign(letters.begin(), letters.end());
        apply_move_in_place(moved, {MoveKind::BraidDown, static_cast<int>(k) + 1});
        const int target = intern(moved);
        edges[{std::min(source, target), std::max(source, target)}].insert({i, wires});
      }
      std::swap(arrangement[letters[k] - 1], arrangement[letters[k]]);
    }
  }

  /// Renumbers classes in canonical-word order.
  std::pair<std::vector<CommutationClass>, std::vector<int>> finish_vertices() const {
    std::vector<int> order(keys.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    std::vector<int> remap(keys.size());
    std::vector<CommutationClass> out(keys.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
      const int old = order[rank];
      remap[old] = static_cast<int>(rank);
      auto& c = out[rank];
      c.id = static_cast<int>(rank);
      c.canonical = Word::from_key(n, keys[old]);
      c.size = sizes[old];
      c.index_sum = index_sum(c.canonical);
    }
    return {std::move(out), std::move(remap)};
  }
};

}  // namespace

std::vector<CommutationClass> enumerate_classes(const Permutation& w, const RunOptions& options) {
  require_word_budget(w, options.budget_words);
  GraphBuilder builder{w.size(), {}, {}, {}, {}, {}, {}, {}};
  for_each_reduced_word(w, [&](std::span<const Letter> letters) { builder.add_word(letters, false); });
  return builder.finish_vertices().first;
}

ClassGraph build_graph(const Permutation& w, const RunOptions& options) {
  require_word_budget(w, options.budget_words);
  GraphBuilder builder{w.size(), {}, {}, {}, {}, {}, {}, {}};
  for_each_reduced_word(w, [&](std::span<const Letter> letters) { builder.add_word(letters, true); });
  auto [vertices, remap] = builder.finish_vertices();
  std::vector<ClassEdge> edges;
  edges.reserve(builder.edges.size());
  for (const auto& [ends, labels] : builder.edges) {
    const int a = remap[ends.first];
    const int b = remap[ends.second];
    if (a == b) throw InvariantViolation("braid move stayed inside one commutation class");
    edges.push_back({std::min(a, b), std::max(a, b), {labels.begin(), labels.end()}});
  }
  std::sort(edges.begin(), edges.end(),
            [](const ClassEdge& x, const ClassEdge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
  return ClassGraph(w, std::move(vertices), std::move(edges));
}

RankedPoset build_poset(const ClassGraph& g) {
  RankedPoset poset;
  const std::size_t count = g.size();
  poset.rank.resize(count);
  poset.lower_covers.resize(count);
  poset.upper_covers.resize(count);
  for (const auto& c : g.vertices()) {
    poset.rank[c.id] = static_cast<int>(count_212(c.canonical.letters()));
  }
  for (const auto& e : g.edges()) {
    const auto& a = g.vertices()[e.u];
    const auto& b = g.vertices()[e.v];
    const bool a_upper = a.index_sum > b.index_sum;
    const int upper = a_upper ? e.u : e.v;
    const int lower = a_upper ? e.v : e.u;
    if (std::abs(a.index_sum - b.index_sum) != 1) {
      throw InvariantViolation("edge joins classes whose index sums differ by " +
                               std::to_string(std::abs(a.index_sum - b.index_sum)));
    }
    if (poset.rank[upper] != poset.rank[lower] + 1) {
      throw InvariantViolation("downward move did not drop the 212 count by one");
    }
    poset.covers.emplace_back(upper, lower);
    poset.lower_covers[upper].push_back(lower);
    poset.upper_covers[lower].push_back(upper);
  }
  std::sort(poset.covers.begin(), poset.covers.end());
  for (auto& l : poset.lower_covers) std::sort(l.begin(), l.end());
  for (auto& l : poset.upper_covers) std::sort(l.begin(), l.end());

  const std::int64_t n321 = pattern_count(g.permutation(), Permutation({3, 2, 1}));
  poset.max_rank = static_cast<int>(n321);
  std::vector<bool> seen(n321 + 1, false);
  for (int r : poset.rank) {
    if (r < 0 || r > n321) throw InvariantViolation("rank outside 0..N_321(w)");
    seen[r] = true;
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw InvariantViolation("ranks do not span 0..N_321(w)");
  }
  return poset;
}

GraphReport graph_checks(const ClassGraph& g) {
  GraphReport report;
  const std::size_t count = g.size();
  std::vector<bool> seen(count, false);
  std::deque<int> queue;
  if (count > 0) {
    seen[0] = true;
    queue.push_back(0);
  }
  std::size_t reached = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    ++reached;
    for (int u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        queue.push_back(u);
      }
    }
  }
  report.connected = reached == count;
  report.bipartite = true;
  report.index_sums_adjacent = true;
  for (const auto& e : g.edges()) {
    const auto su = g.vertices()[e.u].index_sum;
    const auto sv = g.vertices()[e.v].index_sum;
    report.bipartite = report.bipartite && ((su - sv) % 2 != 0);
    report.index_sums_adjacent = report.index_sums_adjacent && std::abs(su - sv) == 1;
  }
  return report;
}

std::vector<Word> class_members(const Word& word) {
  std::unordered_set<std::string> seen{word.key()};
  std::vector<std::string> frontier{word.key()};
  while (!frontier.empty()) {
    std::string key = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t k = 0; k + 1 < key.size(); ++k) {
      const int a = static_cast<unsigned char>(key[k]);
      const int b = static_cast<unsigned char>(key[k + 1]);
      if (std::abs(a - b) < 2) continue;
      std::string next = key;
      std::swap(next[k], next[k + 1]);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  std::vector<Word> out;
  out.reserve(seen.size());
  for (const auto& key : seen) out.push_back(Word::from_key(word.n(), key));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace redweave
