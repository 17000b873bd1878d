#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "redweave/enumerate.hpp"
#include "redweave/permutation.hpp"
#include "redweave/word.hpp"

namespace redweave {

struct CommutationClass {
  int id = 0;
  Word canonical;
  std::uint64_t size = 0;  // number of member words
  std::int64_t index_sum = 0;
};

/// One realization of an edge: the braid letter i of the (i, i+1, i) window
/// and the three values it re-crosses, sorted ascending.
struct EdgeLabel {
  int letter = 0;
  std::array<int, 3> wires{};

  friend auto operator<=>(const EdgeLabel&, const EdgeLabel&) = default;
};

struct ClassEdge {
  int u = 0;  // u < v
  int v = 0;
  std::vector<EdgeLabel> labels;  // sorted, distinct
};

/// G(w): commutation classes joined by long braid moves.  Vertex ids are
/// dense and follow the lexicographic order of canonical words.
class ClassGraph {
 public:
  ClassGraph(Permutation w, std::vector<CommutationClass> vertices, std::vector<ClassEdge> edges);

  const Permutation& permutation() const noexcept { return w_; }
  const std::vector<CommutationClass>& vertices() const noexcept { return vertices_; }
  const std::vector<ClassEdge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  const std::vector<int>& neighbors(int id) const { return adjacency_[id]; }
  bool adjacent(int a, int b) const;
  /// Null when a and b are not adjacent.
  const ClassEdge* edge(int a, int b) const;
  /// Id of the class whose canonical word is `canonical`, if any.
  std::optional<int> find(const Word& canonical) const;
  /// Id of the class containing `word` (any member).
  std::optional<int> class_of(const Word& word) const;

 private:
  Permutation w_;
  std::vector<CommutationClass> vertices_;
  std::vector<ClassEdge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> edge_index_;  // parallel to adjacency_
  std::unordered_map<std::string, int> by_key_;
};

/// P(w): covers point from the higher index sum to the lower, ranks are
/// 212-subnetwork counts.
struct RankedPoset {
  std::vector<int> rank;                     // per class id
  std::vector<std::pair<int, int>> covers;   // (upper, lower), sorted
  std::vector<std::vector<int>> lower_covers;  // classes covered by id
  std::vector<std::vector<int>> upper_covers;  // classes covering id
  int max_rank = 0;

  /// Class ids at each rank, ascending.
  std::vector<std::vector<int>> levels() const;
};

struct GraphReport {
  bool connected = false;
  bool bipartite = false;  // by index-sum parity
  bool index_sums_adjacent = false;  // every edge changes the sum by exactly 1
};

/// Distinct commutation classes of w, ordered by canonical word.
std::vector<CommutationClass> enumerate_classes(const Permutation& w, const RunOptions& options = {});

ClassGraph build_graph(const Permutation& w, const RunOptions& options = {});

/// Throws InvariantViolation if the rank statistic fails to cover
/// 0..N_321(w) or some cover does not drop it by exactly one.
RankedPoset build_poset(const ClassGraph& g);

GraphReport graph_checks(const ClassGraph& g);

/// Every word in the commutation class of `word`, sorted.
std::vector<Word> class_members(const Word& word);

}  // namespace redweave
