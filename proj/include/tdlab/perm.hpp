#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tdlab {

/// A point of the countable domain N = {1, 2, 3, ...}. Zero is never a point.
using Point = std::uint64_t;

/// Permutation of N with finite support.
///
/// Stored as the sorted list of (moved point, image) pairs; fixed points are
/// never stored, so two equal permutations have identical storage.
class FinitaryPerm {
 public:
  using Entry = std::pair<Point, Point>;

  FinitaryPerm() = default;

  /// Builds a permutation from an explicit association. The association must
  /// be a bijection of its key set onto itself; entries n -> n are dropped.
  static FinitaryPerm from_mapping(const std::map<Point, Point>& mapping);

  /// Product of the given cycles, the rightmost cycle acting first.
  static FinitaryPerm from_cycles(const std::vector<std::vector<Point>>& cycles);

  static FinitaryPerm cycle(std::vector<Point> points);
  static FinitaryPerm transposition(Point a, Point b);

  Point operator()(Point n) const;
  Point preimage(Point n) const;

  FinitaryPerm inverse() const;

  std::span<const Entry> mapping() const { return map_; }
  std::vector<Point> support() const;
  std::size_t support_size() const { return map_.size(); }
  bool is_identity() const { return map_.empty(); }
  /// Largest moved point, or 0 for the identity.
  Point max_moved() const { return map_.empty() ? 0 : map_.back().first; }

  friend bool operator==(const FinitaryPerm&, const FinitaryPerm&) = default;
  friend auto operator<=>(const FinitaryPerm& a, const FinitaryPerm& b) {
    return a.map_ <=> b.map_;
  }

 private:
  explicit FinitaryPerm(std::vector<Entry> sorted) : map_(std::move(sorted)) {}

  std::vector<Entry> map_;
};

/// p o q, i.e. n -> p(q(n)).
FinitaryPerm compose(const FinitaryPerm& p, const FinitaryPerm& q);
inline FinitaryPerm operator*(const FinitaryPerm& p, const FinitaryPerm& q) {
  return compose(p, q);
}
FinitaryPerm power(const FinitaryPerm& p, long long exponent);

/// a^g = g^-1 a g.
FinitaryPerm conjugate(const FinitaryPerm& a, const FinitaryPerm& g);
/// [x, y] = x^-1 y^-1 x y.
FinitaryPerm commutator(const FinitaryPerm& x, const FinitaryPerm& y);

/// Disjoint cycles of length >= 2, each starting at its smallest point, sorted
/// by that point.
std::vector<std::vector<Point>> cycle_form(const FinitaryPerm& p);

bool is_even(const FinitaryPerm& p);

/// Cycle notation, e.g. "(1 2 3)(5 6)"; the identity prints as "()".
std::string to_string(const FinitaryPerm& p);
/// Same notation with commas between points and no spaces, e.g. "(1,2,3)(5,6)".
/// Used as a single-token element label.
std::string to_label(const FinitaryPerm& p);

/// Parses cycle notation. Points inside a cycle are separated by whitespace
/// or commas; a product of several (possibly overlapping) cycles is composed
/// right to left. Throws ParseError on malformed input.
FinitaryPerm parse_perm(std::string_view text);

/// A permutation of N given by oracles, possibly with infinite support.
///
/// The oracles must be pure: evaluation has no side effects and every copy of
/// a LazyPerm can be evaluated from any thread.
class LazyPerm {
 public:
  using Map = std::function<Point(Point)>;
  /// Smallest moved point strictly greater than the argument, or nullopt when
  /// there is none. Called with 0 to get the first moved point.
  using NextMoved = std::function<std::optional<Point>(Point)>;

  LazyPerm(std::string name, Map eval, Map eval_inverse, NextMoved next_moved,
           bool infinite_support);

  Point operator()(Point n) const { return eval_(n); }
  Point preimage(Point n) const { return inverse_(n); }
  std::optional<Point> next_moved(Point after) const { return next_(after); }
  bool has_infinite_support() const { return infinite_; }
  const std::string& name() const { return name_; }

  /// (1 2)(3 4)(5 6)...
  static LazyPerm pairwise_swapper();
  /// (2 3)(4 5)(6 7)..., fixing 1.
  static LazyPerm shifted_swapper();
  /// (1 2 3)(4 5 6)...
  static LazyPerm triple_rotator();
  static LazyPerm from_finitary(FinitaryPerm p);

 private:
  std::string name_;
  Map eval_;
  Map inverse_;
  NextMoved next_;
  bool infinite_;
};

/// One factor a_i t^{alpha_i} of the word whose action is separated.
struct SeparatorFactor {
  LazyPerm a;
  long long alpha;
};

/// Every choice made while building the separating permutation.
struct SeparatorPlan {
  Point n0 = 0;
  std::vector<Point> m;
  std::vector<Point> n;
  /// Filler points of cycle i, |alpha_i| - 1 of them.
  std::vector<std::vector<Point>> fillers;
  /// c_i = (n_{i-1}, fillers..., m_i)^{sgn(alpha_i)}.
  std::vector<FinitaryPerm> cycles;
  /// Extension of s|_X to a permutation supported on X u s(X).
  FinitaryPerm s0;
  /// Forbidden sets Y_1..Y_k, each sorted.
  std::vector<std::vector<Point>> forbidden;
};

struct SeparatorResult {
  FinitaryPerm t;
  SeparatorPlan plan;
};

/// Builds t with t|_X = s|_X such that a_k t^{alpha_k} ... a_1 t^{alpha_1}
/// moves the point plan.n0 to plan.n.back(). Wherever several points are
/// admissible the smallest one is taken.
///
/// Throws PreconditionError for an empty factor list, alpha = 0, or a factor
/// without infinite support.
SeparatorResult construct_separating_permutation(
    const FinitaryPerm& s, std::span<const Point> X,
    std::span<const SeparatorFactor> factors);

/// Applies t^{alpha_1}, a_1, t^{alpha_2}, a_2, ... to `start` and returns the
/// whole trajectory: start, t^{alpha_1}(start), a_1(...), ... (2k+1 points).
std::vector<Point> trace_factors(const FinitaryPerm& t,
                                 std::span<const SeparatorFactor> factors,
                                 Point start);

/// The universal sentence satisfied by Alt(N): with a = (1 2 3),
/// b = (4 5 6), c = (7 8 9), d = (10 11 12), true iff one of
/// [a^g, a], [b^g, a], [c^g, a], [d^g, a] is trivial.
bool check_alt_sentence(const FinitaryPerm& g);

}  // namespace tdlab
