#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "redweave/classes.hpp"
#include "redweave/enumerate.hpp"
#include "redweave/permutation.hpp"
#include "redweave/word.hpp"

namespace redweave {

/// Y: the largest number of braid windows in a single reduced word of w
/// (overlapping windows each count).
int max_braid_moves(const Permutation& w, const RunOptions& options = {});

/// Braid windows in one word.
inline int braid_window_count(std::span<const Letter> letters) {
  return static_cast<int>(list_braid_moves(letters).size());
}

struct Hypercube {
  Word source;
  MoveKind direction = MoveKind::BraidDown;
  std::vector<Move> moves;      // pairwise disjoint, all of `direction`
  std::vector<int> class_ids;   // indexed by the subset of moves applied
  int dimension() const noexcept { return static_cast<int>(moves.size()); }
};

/// Applies every subset of the chosen same-direction braid windows of
/// `word` and checks the resulting classes induce a cube in g.  Downward
/// windows are used when they are at least as numerous as upward ones,
/// unless `direction` forces one.  Throws InvariantViolation if the cube
/// does not validate.
Hypercube cube_from_word(const ClassGraph& g, const Word& word,
                         std::optional<MoveKind> direction = std::nullopt);

/// Picks the lexicographically least word with Y windows and builds the
/// cube from whichever direction has at least ceil(Y/2) windows
/// (downward preferred).
Hypercube embed_hypercube(const ClassGraph& g, const RunOptions& options = {});

/// True iff the 2^k classes are distinct and adjacent exactly when their
/// subsets differ in one move.
bool validate_hypercube(const ClassGraph& g, const Hypercube& cube);

/// Freely braided: no two distinct braid moves of w share a crossing, i.e.
/// the wire triples of all braid moves pairwise share at most one value.
bool is_freely_braided(const ClassGraph& g);

/// The literal per-word condition: in every reduced word, braid windows are
/// pairwise disjoint as sets of letter positions.  Weaker than
/// `is_freely_braided` (4231 satisfies it but has 3 classes and Y = 1).
bool braid_windows_never_overlap(const Permutation& w, const RunOptions& options = {});

/// First of 4321, 42531, 53142 contained in w, if any.
std::optional<Permutation> rectangular_witness(const Permutation& w);
bool is_rectangular(const Permutation& w);

struct RectangleSpec {
  std::vector<int> dims;
  std::vector<std::vector<int>> labels;  // per class id
};

/// Labels classes top-down through P(w): the maximum gets 0, its lower
/// covers the unit vectors; below that a class v takes 2 v1 - v2 when its
/// edge to v1 does not commute with v1 v2, and otherwise the sum of the
/// labels of the classes covering it.  Axes are finally sorted by extent.
/// Returns nothing unless the labels form a grid isomorphism.
std::optional<RectangleSpec> rectangle_label(const ClassGraph& g, const RankedPoset& poset);

/// Bijection onto the box [0, dims] with unit-step adjacency.
bool validate_rectangle(const ClassGraph& g, const RectangleSpec& spec);

enum class CyclePairClass { FourCycle, EightCycle, NoInducedCycle };
const char* to_string(CyclePairClass c);

/// Two edges v-a and v-b: FourCycle when a member word of v realizes both
/// moves on disjoint windows, EightCycle when a member word has both inside
/// a six-letter factor that is a reduced word of the longest element on
/// three consecutive letters, NoInducedCycle otherwise.  Throws InputError
/// unless a and b are distinct neighbours of v.
CyclePairClass classify_edge_pair(const ClassGraph& g, int v, int a, int b);

/// Graph-search oracle: the length of the shortest induced cycle through
/// the path a - v - b, considering lengths up to `max_length`; 0 if none.
int shortest_induced_cycle_through(const ClassGraph& g, int v, int a, int b, int max_length = 8);

/// Edges whose realizing braid moves act on more than one wire triple.
std::vector<const ClassEdge*> edges_with_multiple_triples(const ClassGraph& g);

/// Undirected simple graph on 0..n-1, for shape comparisons.
struct SimpleGraph {
  std::vector<std::vector<int>> adjacency;

  std::size_t size() const noexcept { return adjacency.size(); }
  std::size_t edge_count() const;
  void add_edge(int a, int b);

  static SimpleGraph from(const ClassGraph& g);
  static SimpleGraph path(int vertices);
  static SimpleGraph cycle(int vertices);
  static SimpleGraph grid(const std::vector<int>& dims);
  static SimpleGraph cartesian_product(const SimpleGraph& a, const SimpleGraph& b);
};

bool is_path_graph(const SimpleGraph& g);
bool is_cycle_graph(const SimpleGraph& g);
/// Backtracking isomorphism test with degree refinement; fine for the
/// graphs of a few hundred vertices met here.
bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace redweave
