#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdlab/free_word.hpp"

namespace tdlab {

/// Truncated left-coset action of F_k on F_k / H.
struct CosetActionPrefix {
  /// Shortlex-least representative g of each listed coset gH, in order.
  std::vector<FreeWord> representatives;
  /// images[y-1][i]: index of x_y . coset i, or -1 when it is not listed.
  std::vector<std::vector<long long>> images;
  /// True when no image is missing, i.e. all cosets are listed.
  bool saturated = false;
};

/// Folded core graph of a finitely generated subgroup H <= F_k.
///
/// Vertex 0 is the basepoint. adjacency()[v][d] is the endpoint of the edge
/// leaving v in direction d = letter_rank(l), or -1. Vertices are numbered in
/// breadth-first order from the basepoint, directions tried by rank, so two
/// graphs compare equal exactly when they represent the same subgroup.
class CoreGraph {
 public:
  /// The trivial subgroup of F_k.
  explicit CoreGraph(int k);

  /// Folded core graph of <words>.
  static CoreGraph from_words(const std::vector<FreeWord>& words, int k);
  /// Same subgroup, with the edges inserted in an order shuffled by `seed`.
  static CoreGraph from_words_shuffled(const std::vector<FreeWord>& words, int k,
                                       std::uint64_t seed);

  /// <H, words>.
  CoreGraph with_words(const std::vector<FreeWord>& words) const;

  int rank_of_free_group() const { return k_; }
  std::size_t num_vertices() const { return adj_.size(); }
  /// Edges counted once each (positive direction).
  std::size_t num_edges() const;
  /// Rank of H: E - V + 1.
  std::size_t subgroup_rank() const { return num_edges() + 1 - num_vertices(); }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }

  /// Endpoint of the path reading w from `start`, if it exists in the graph.
  std::optional<int> read(int start, const FreeWord& w) const;
  bool contains(const FreeWord& w) const;
  /// a H = b H, i.e. a^-1 b in H.
  bool same_coset(const FreeWord& a, const FreeWord& b) const;
  /// [F_k : H] when every vertex has all 2k directions; nullopt otherwise.
  std::optional<std::size_t> index() const;

  /// Free basis of H read off a breadth-first spanning tree, in shortlex
  /// order of the non-tree edges.
  std::vector<FreeWord> basis() const;

  /// The first `limit` left cosets by (length, shortlex) of their least
  /// representatives, found by breadth-first search from H.
  CosetActionPrefix coset_action_prefix(std::size_t limit) const;

  /// One line per edge: "u letter v".
  std::string to_adjacency_text() const;
  /// Graphviz description of the graph.
  std::string to_dot() const;

  friend bool operator==(const CoreGraph&, const CoreGraph&) = default;

 private:
  CoreGraph(int k, std::vector<std::vector<int>> adj) : k_(k), adj_(std::move(adj)) {}
  friend class Folder;

  int k_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace tdlab
