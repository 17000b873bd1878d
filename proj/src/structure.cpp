#include "redweave/structure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "redweave/error.hpp"

namespace redweave {

namespace {

bool windows_disjoint(const Move& a, const Move& b) {
  return std::abs(a.position - b.position) >= 3;
}

bool share_two(const std::array<int, 3>& x, const std::array<int, 3>& y) {
  int common = 0;
  for (int a : x) {
    for (int b : y) common += a == b;
  }
  return common >= 2;
}

}  // namespace

int max_braid_moves(const Permutation& w, const RunOptions& options) {
  require_word_budget(w, options.budget_words);
  int best = 0;
  for_each_reduced_word(w, [&](std::span<const Letter> letters) {
    best = std::max(best, braid_window_count(letters));
  });
  return best;
}

bool validate_hypercube(const ClassGraph& g, const Hypercube& cube) {
  const std::size_t corners = std::size_t{1} << cube.dimension();
  if (cube.class_ids.size() != corners) return false;
  std::set<int> distinct(cube.class_ids.begin(), cube.class_ids.end());
  if (distinct.size() != corners) return false;
  for (std::size_t x = 0; x < corners; ++x) {
    for (std::size_t y = x + 1; y < corners; ++y) {
      const bool unit = std::popcount(x ^ y) == 1;
      if (g.adjacent(cube.class_ids[x], cube.class_ids[y]) != unit) return false;
    }
  }
  return true;
}

Hypercube cube_from_word(const ClassGraph& g, const Word& word, std::optional<MoveKind> direction) {
  if (!is_reduced_word_of(word, g.permutation())) {
    throw InputError(word.to_string() + " is not a reduced word of " + g.permutation().to_string());
  }
  auto windows = list_braid_moves(word.letters());
  std::vector<Move> down;
  std::vector<Move> up;
  for (const auto& m : windows) (m.kind == MoveKind::BraidDown ? down : up).push_back(m);
  Hypercube cube;
  cube.source = word;
  cube.direction = direction.value_or(down.size() >= up.size() ? MoveKind::BraidDown : MoveKind::BraidUp);
  cube.moves = cube.direction == MoveKind::BraidDown ? down : up;
  for (std::size_t i = 0; i < cube.moves.size(); ++i) {
    for (std::size_t j = i + 1; j < cube.moves.size(); ++j) {
      if (!windows_disjoint(cube.moves[i], cube.moves[j])) {
        throw InvariantViolation("same-direction braid windows overlap in " + word.to_string());
      }
    }
  }
  if (cube.moves.size() > 20) throw InputError("too many braid windows for a cube witness");
  const std::size_t corners = std::size_t{1} << cube.moves.size();
  cube.class_ids.resize(corners);
  std::vector<Letter> letters;
  for (std::size_t subset = 0; subset < corners; ++subset) {
    letters.assign(word.letters().begin(), word.letters().end());
    for (std::size_t k = 0; k < cube.moves.size(); ++k) {
      if (subset >> k & 1u) apply_move_in_place(letters, cube.moves[k]);
    }
    auto id = g.class_of(Word(word.n(), letters));
    if (!id) throw InvariantViolation("cube corner is not a class of G(w)");
    cube.class_ids[subset] = *id;
  }
  if (!validate_hypercube(g, cube)) {
    throw InvariantViolation("braid windows of " + word.to_string() + " do not span a cube");
  }
  return cube;
}

Hypercube embed_hypercube(const ClassGraph& g, const RunOptions& options) {
  const auto& w = g.permutation();
  require_word_budget(w, options.budget_words);
  int best = -1;
  std::vector<Letter> witness;
  for_each_reduced_word(w, [&](std::span<const Letter> letters) {
    const int count = braid_window_count(letters);
    if (count > best) {
      best = count;
      witness.assign(letters.begin(), letters.end());
    }
  });
  const Word word(w.size(), witness);
  int down = 0;
  for (const auto& m : list_braid_moves(witness)) down += m.kind == MoveKind::BraidDown;
  const int half = (best + 1) / 2;
  return cube_from_word(g, word, down >= half ? MoveKind::BraidDown : MoveKind::BraidUp);
}

bool is_freely_braided(const ClassGraph& g) {
  std::set<std::array<int, 3>> triples;
  for (const auto& e : g.edges()) {
    for (const auto& label : e.labels) triples.insert(label.wires);
  }
  for (auto i = triples.begin(); i != triples.end(); ++i) {
    for (auto j = std::next(i); j != triples.end(); ++j) {
      if (share_two(*i, *j)) return false;
    }
  }
  return true;
}

bool braid_windows_never_overlap(const Permutation& w, const RunOptions& options) {
  require_word_budget(w, options.budget_words);
  bool ok = true;
  for_each_reduced_word(w, [&](std::span<const Letter> letters) {
    if (!ok) return;
    auto moves = list_braid_moves(letters);
    for (std::size_t i = 0; i + 1 < moves.size() && ok; ++i) {
      ok = windows_disjoint(moves[i], moves[i + 1]);
    }
  });
  return ok;
}

std::optional<Permutation> rectangular_witness(const Permutation& w) {
  for (const auto& p : {Permutation({4, 3, 2, 1}), Permutation({4, 2, 5, 3, 1}),
                        Permutation({5, 3, 1, 4, 2})}) {
    if (!avoids(w, p)) return p;
  }
  return std::nullopt;
}

bool is_rectangular(const Permutation& w) { return !rectangular_witness(w).has_value(); }

bool validate_rectangle(const ClassGraph& g, const RectangleSpec& spec) {
  const std::size_t k = spec.dims.size();
  std::size_t volume = 1;
  std::size_t grid_edges = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (spec.dims[i] < 0) return false;
    std::size_t others = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i) others *= static_cast<std::size_t>(spec.dims[j] + 1);
    }
    grid_edges += static_cast<std::size_t>(spec.dims[i]) * others;
    volume *= static_cast<std::size_t>(spec.dims[i] + 1);
  }
  if (spec.labels.size() != g.size() || volume != g.size()) return false;
  if (g.edges().size() != grid_edges) return false;
  std::set<std::vector<int>> seen;
  for (const auto& label : spec.labels) {
    if (label.size() != k) return false;
    for (std::size_t i = 0; i < k; ++i) {
      if (label[i] < 0 || label[i] > spec.dims[i]) return false;
    }
    if (!seen.insert(label).second) return false;
  }
  for (const auto& e : g.edges()) {
    int distance = 0;
    for (std::size_t i = 0; i < k; ++i) distance += std::abs(spec.labels[e.u][i] - spec.labels[e.v][i]);
    if (distance != 1) return false;
  }
  return true;
}

std::optional<RectangleSpec> rectangle_label(const ClassGraph& g, const RankedPoset& poset) {
  const auto levels = poset.levels();
  if (levels.empty() || levels.back().size() != 1 || levels.front().size() != 1) return std::nullopt;
  const int top = levels.back().front();
  const int bottom = levels.front().front();
  const auto& first = poset.lower_covers[top];
  const std::size_t k = first.size();

  std::vector<std::vector<int>> labels(g.size());
  std::vector<bool> labelled(g.size(), false);
  labels[top].assign(k, 0);
  labelled[top] = true;
  for (std::size_t i = 0; i < k; ++i) {
    labels[first[i]].assign(k, 0);
    labels[first[i]][i] = 1;
    labelled[first[i]] = true;
  }

  // Edges v-v1 and v1-v2 commute when some u != v1 closes a 4-cycle.
  auto commute = [&](int v, int v1, int v2) {
    for (int u : g.neighbors(v)) {
      if (u != v1 && g.adjacent(u, v2)) return true;
    }
    return false;
  };

  for (int r = poset.max_rank - 1; r >= 0; --r) {
    for (int v : levels[r]) {
      if (r == poset.max_rank - 1) {
        if (!labelled[v]) return std::nullopt;  // a second maximal class
        continue;
      }
      std::optional<std::vector<int>> straight;
      for (int v1 : poset.upper_covers[v]) {
        for (int v2 : poset.upper_covers[v1]) {
          if (commute(v, v1, v2)) continue;
          std::vector<int> label(k);
          for (std::size_t i = 0; i < k; ++i) label[i] = 2 * labels[v1][i] - labels[v2][i];
          if (straight && *straight != label) return std::nullopt;
          straight = std::move(label);
        }
      }
      if (straight) {
        labels[v] = std::move(*straight);
      } else {
        labels[v].assign(k, 0);
        for (int u : poset.upper_covers[v]) {
          for (std::size_t i = 0; i < k; ++i) labels[v][i] += labels[u][i];
        }
      }
      labelled[v] = true;
    }
  }

  RectangleSpec spec{labels[bottom], labels};
  if (!validate_rectangle(g, spec)) return std::nullopt;

  std::vector<std::size_t> axes(k);
  std::iota(axes.begin(), axes.end(), 0);
  std::stable_sort(axes.begin(), axes.end(),
                   [&](std::size_t a, std::size_t b) { return spec.dims[a] < spec.dims[b]; });
  RectangleSpec sorted;
  for (std::size_t a : axes) sorted.dims.push_back(spec.dims[a]);
  for (const auto& label : spec.labels) {
    std::vector<int> permuted;
    for (std::size_t a : axes) permuted.push_back(label[a]);
    sorted.labels.push_back(std::move(permuted));
  }
  return sorted;
}

const char* to_string(CyclePairClass c) {
  switch (c) {
    case CyclePairClass::FourCycle:
      return "four-cycle";
    case CyclePairClass::EightCycle:
      return "eight-cycle";
    case CyclePairClass::NoInducedCycle:
      return "no-induced-cycle";
  }
  return "?";
}

namespace {

// True iff letters[start..start+5] use three consecutive letters j..j+2 and,
// shifted down to 1..3, form a reduced word of 4321.
bool is_longest_s4_factor(std::span<const Letter> letters, int start) {
  if (start < 0 || start + 6 > static_cast<int>(letters.size())) return false;
  auto factor = letters.subspan(start, 6);
  const int low = *std::min_element(factor.begin(), factor.end());
  const int high = *std::max_element(factor.begin(), factor.end());
  if (high - low != 2) return false;
  std::vector<Letter> shifted;
  for (Letter l : factor) shifted.push_back(static_cast<Letter>(l - low + 1));
  return is_reduced_word_of(Word(4, shifted), Permutation({4, 3, 2, 1}));
}

}  // namespace

CyclePairClass classify_edge_pair(const ClassGraph& g, int v, int a, int b) {
  const int count = static_cast<int>(g.size());
  if (v < 0 || v >= count || a < 0 || a >= count || b < 0 || b >= count) {
    throw InputError("class id out of range");
  }
  if (a == b) throw InputError("edge pair must consist of two distinct edges");
  if (!g.adjacent(v, a) || !g.adjacent(v, b)) throw InputError("edges are not incident to the vertex");

  // Targets reachable by braid windows inside a longest-element factor,
  // keyed by the four wires that factor re-sorts.
  std::map<std::array<int, 4>, std::set<int>> inside_factor;
  std::vector<Letter> letters;
  std::vector<int> arrangement;
  for (const auto& member : class_members(g.vertices()[v].canonical)) {
    const auto word = member.letters();
    const auto moves = list_braid_moves(word);
    std::vector<int> target(moves.size());
    bool has_a = false;
    bool has_b = false;
    for (std::size_t k = 0; k < moves.size(); ++k) {
      letters.assign(word.begin(), word.end());
      apply_move_in_place(letters, moves[k]);
      target[k] = g.class_of(Word(member.n(), letters)).value_or(-1);
      has_a = has_a || target[k] == a;
      has_b = has_b || target[k] == b;
    }
    if (!has_a && !has_b) continue;
    for (std::size_t x = 0; x < moves.size(); ++x) {
      for (std::size_t y = 0; y < moves.size(); ++y) {
        if (target[x] == a && target[y] == b && windows_disjoint(moves[x], moves[y])) {
          return CyclePairClass::FourCycle;
        }
      }
    }
    arrangement.resize(member.n() + 1);
    std::iota(arrangement.begin(), arrangement.end(), 0);
    for (int start = 0; start + 6 <= static_cast<int>(word.size()); ++start) {
      if (start > 0) std::swap(arrangement[word[start - 1]], arrangement[word[start - 1] + 1]);
      if (!is_longest_s4_factor(word, start)) continue;
      const int low = *std::min_element(word.begin() + start, word.begin() + start + 6);
      std::array<int, 4> wires{arrangement[low], arrangement[low + 1], arrangement[low + 2],
                               arrangement[low + 3]};
      std::sort(wires.begin(), wires.end());
      for (std::size_t k = 0; k < moves.size(); ++k) {
        const int first = moves[k].position - 1;
        if (first >= start && first + 3 <= start + 6 && (target[k] == a || target[k] == b)) {
          inside_factor[wires].insert(target[k]);
        }
      }
    }
  }
  for (const auto& [wires, targets] : inside_factor) {
    if (targets.size() == 2) return CyclePairClass::EightCycle;
  }
  return CyclePairClass::NoInducedCycle;
}

namespace {

struct InducedCycleSearch {
  const ClassGraph& g;
  int v;
  int b;
  int edges_needed;  // path edges from a to b
  std::vector<int> path;
  std::vector<bool> on_path;

  bool extend() {
    const int current = path.back();
    const int depth = static_cast<int>(path.size()) - 1;
    if (depth == edges_needed) return current == b;
    for (int x : g.neighbors(current)) {
      if (x == v || on_path[x]) continue;
      const bool last = depth + 1 == edges_needed;
      if ((x == b) != last) continue;
      if (!last && g.adjacent(x, v)) continue;
      bool chord = false;
      for (std::size_t i = 0; i + 1 < path.size() && !chord; ++i) chord = g.adjacent(x, path[i]);
      if (chord) continue;
      path.push_back(x);
      on_path[x] = true;
      const bool found = extend();
      on_path[x] = false;
      path.pop_back();
      if (found) return true;
    }
    return false;
  }
};

}  // namespace

int shortest_induced_cycle_through(const ClassGraph& g, int v, int a, int b, int max_length) {
  if (a == b || !g.adjacent(v, a) || !g.adjacent(v, b)) {
    throw InputError("edges are not two distinct edges at the vertex");
  }
  for (int length = 3; length <= max_length; ++length) {
    if (length == 3) {
      if (g.adjacent(a, b)) return 3;
      continue;
    }
    if (g.adjacent(a, b)) continue;  // chord
    InducedCycleSearch search{g, v, b, length - 2, {a}, std::vector<bool>(g.size(), false)};
    search.on_path[a] = true;
    if (search.extend()) return length;
  }
  return 0;
}

std::vector<const ClassEdge*> edges_with_multiple_triples(const ClassGraph& g) {
  std::vector<const ClassEdge*> out;
  for (const auto& e : g.edges()) {
    std::set<std::array<int, 3>> triples;
    for (const auto& label : e.labels) triples.insert(label.wires);
    if (triples.size() > 1) out.push_back(&e);
  }
  return out;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& n : adjacency) total += n.size();
  return total / 2;
}

void SimpleGraph::add_edge(int a, int b) {
  adjacency[a].push_back(b);
  adjacency[b].push_back(a);
}

SimpleGraph SimpleGraph::from(const ClassGraph& g) {
  SimpleGraph out;
  out.adjacency.resize(g.size());
  for (const auto& e : g.edges()) out.add_edge(e.u, e.v);
  return out;
}

SimpleGraph SimpleGraph::path(int vertices) {
  SimpleGraph out;
  out.adjacency.resize(vertices);
  for (int i = 0; i + 1 < vertices; ++i) out.add_edge(i, i + 1);
  return out;
}

SimpleGraph SimpleGraph::cycle(int vertices) {
  SimpleGraph out = path(vertices);
  if (vertices >= 3) out.add_edge(vertices - 1, 0);
  return out;
}

SimpleGraph SimpleGraph::grid(const std::vector<int>& dims) {
  SimpleGraph out = path(1);
  for (int d : dims) out = cartesian_product(out, path(d + 1));
  return out;
}

SimpleGraph SimpleGraph::cartesian_product(const SimpleGraph& a, const SimpleGraph& b) {
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  SimpleGraph out;
  out.adjacency.resize(static_cast<std::size_t>(na) * nb);
  auto id = [nb](int x, int y) { return x * nb + y; };
  for (int x = 0; x < na; ++x) {
    for (int y = 0; y < nb; ++y) {
      for (int y2 : b.adjacency[y]) {
        if (y2 > y) out.add_edge(id(x, y), id(x, y2));
      }
      for (int x2 : a.adjacency[x]) {
        if (x2 > x) out.add_edge(id(x, y), id(x2, y));
      }
    }
  }
  return out;
}

bool is_path_graph(const SimpleGraph& g) {
  if (g.size() == 1) return true;
  if (g.edge_count() + 1 != g.size()) return false;
  int ends = 0;
  for (const auto& n : g.adjacency) {
    if (n.size() > 2 || n.empty()) return false;
    ends += n.size() == 1;
  }
  // A connected graph with n-1 edges and max degree 2 is a path.
  return ends == 2;
}

bool is_cycle_graph(const SimpleGraph& g) {
  if (g.size() < 3 || g.edge_count() != g.size()) return false;
  for (const auto& n : g.adjacency) {
    if (n.size() != 2) return false;
  }
  std::vector<bool> seen(g.size(), false);
  std::size_t reached = 0;
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    ++reached;
    for (int y : g.adjacency[x]) {
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return reached == g.size();
}

namespace {

// 1-dimensional Weisfeiler-Leman colours computed jointly on both graphs so
// that colours are comparable across them.
std::pair<std::vector<int>, std::vector<int>> refine_colours(const SimpleGraph& a, const SimpleGraph& b) {
  std::vector<int> ca(a.size()), cb(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) ca[i] = static_cast<int>(a.adjacency[i].size());
  for (std::size_t i = 0; i < b.size(); ++i) cb[i] = static_cast<int>(b.adjacency[i].size());
  for (std::size_t round = 0; round < a.size() + 1; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> palette;
    auto signature = [](const SimpleGraph& g, const std::vector<int>& c, std::size_t i) {
      std::vector<int> around;
      for (int j : g.adjacency[i]) around.push_back(c[j]);
      std::sort(around.begin(), around.end());
      return std::make_pair(c[i], std::move(around));
    };
    std::vector<std::pair<int, std::vector<int>>> sa, sb;
    for (std::size_t i = 0; i < a.size(); ++i) sa.push_back(signature(a, ca, i));
    for (std::size_t i = 0; i < b.size(); ++i) sb.push_back(signature(b, cb, i));
    for (const auto& s : sa) palette.emplace(s, 0);
    for (const auto& s : sb) palette.emplace(s, 0);
    int next = 0;
    for (auto& [s, colour] : palette) colour = next++;
    std::vector<int> na(a.size()), nb(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) na[i] = palette[sa[i]];
    for (std::size_t i = 0; i < b.size(); ++i) nb[i] = palette[sb[i]];
    const bool stable = std::set<int>(na.begin(), na.end()).size() ==
                            std::set<int>(ca.begin(), ca.end()).size() &&
                        std::set<int>(nb.begin(), nb.end()).size() ==
                            std::set<int>(cb.begin(), cb.end()).size();
    ca = std::move(na);
    cb = std::move(nb);
    if (stable && round > 0) break;
  }
  return {ca, cb};
}

struct IsoSearch {
  const SimpleGraph& a;
  const SimpleGraph& b;
  const std::vector<int>& ca;
  const std::vector<int>& cb;
  std::vector<int> order;
  std::vector<int> map_ab;
  std::vector<bool> used_b;

  bool assign(std::size_t k) {
    if (k == order.size()) return true;
    const int x = order[k];
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (used_b[y] || cb[y] != ca[x]) continue;
      bool consistent = true;
      for (int xn : a.adjacency[x]) {
        if (map_ab[xn] >= 0 &&
            std::find(b.adjacency[y].begin(), b.adjacency[y].end(), map_ab[xn]) == b.adjacency[y].end()) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      // Non-edges must be preserved too; degrees match, so counting mapped
      // neighbours on both sides suffices.
      int mapped_a = 0;
      for (int xn : a.adjacency[x]) mapped_a += map_ab[xn] >= 0;
      int mapped_b = 0;
      for (int yn : b.adjacency[y]) mapped_b += used_b[yn];
      if (mapped_a != mapped_b) continue;
      map_ab[x] = static_cast<int>(y);
      used_b[y] = true;
      if (assign(k + 1)) return true;
      map_ab[x] = -1;
      used_b[y] = false;
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  if (a.size() == 0) return true;
  auto [ca, cb] = refine_colours(a, b);
  auto sa = ca;
  auto sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  // Visit a in BFS order so every vertex after the first has a mapped
  // neighbour constraining it.
  std::vector<int> order;
  std::vector<bool> seen(a.size(), false);
  for (std::size_t root = 0; root < a.size(); ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    order.push_back(static_cast<int>(root));
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      for (int y : a.adjacency[order[head]]) {
        if (!seen[y]) {
          seen[y] = true;
          order.push_back(y);
        }
      }
    }
  }
  IsoSearch search{a, b, ca, cb, order, std::vector<int>(a.size(), -1), std::vector<bool>(b.size(), false)};
  return search.assign(0);
}

}  // namespace redweave
