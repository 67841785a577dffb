#pragma once

#include <string>
#include <vector>

#include "tdlab/corpus.hpp"
#include "tdlab/finite_group.hpp"
#include "tdlab/free_word.hpp"

namespace tdlab {

/// A finite group with an ordered generating tuple, seen as the quotient of
/// F_k sending x_i to images[i-1].
class MarkedGroup {
 public:
  /// Throws PreconditionError when the images do not generate the group.
  MarkedGroup(FiniteGroupTable group, std::vector<Element> images);
  /// The group generated by the marking line of a corpus file (or by its
  /// generators when there is no marking line), marked by that tuple.
  static MarkedGroup from_corpus(const CorpusGroup& g);

  std::size_t k() const { return images_.size(); }
  const FiniteGroupTable& group() const { return group_; }
  const std::vector<Element>& images() const { return images_; }
  Element evaluate(const FreeWord& w) const;

 private:
  FiniteGroupTable group_;
  std::vector<Element> images_;
};

/// w evaluates to the identity.
bool kernel_contains(const MarkedGroup& M, const FreeWord& w);

struct MarkedDistance {
  enum class Kind { Zero, Exact, UpperBound };
  Kind kind = Kind::Zero;
  /// Exact: length of the shortest word in exactly one kernel.
  /// UpperBound: R + 1. Zero: 0.
  std::size_t length = 0;
  /// Shortlex-least separating word of that length (Exact only).
  FreeWord witness;
  double value() const { return length == 0 ? 0.0 : 1.0 / static_cast<double>(length); }
  /// "0", "1/l" or "<=1/(R+1)".
  std::string to_string() const;
};

/// Breadth-first search over the subgroup of G1 x G2 generated by the pairs
/// of marked generators. A word lies in exactly one kernel iff its value has
/// exactly one trivial coordinate, so the first such level gives the exact
/// distance, and exhausting the subgroup without one proves the kernels equal.
/// A separating length beyond `radius` is reported as the bound 1/(R+1).
/// Throws PreconditionError when k differs, BoundExceeded beyond max_states.
MarkedDistance marked_distance(const MarkedGroup& a, const MarkedGroup& b, std::size_t radius,
                               std::size_t max_states = 20'000'000);

}  // namespace tdlab
