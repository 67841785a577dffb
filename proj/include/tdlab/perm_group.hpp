#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tdlab/perm.hpp"

namespace tdlab {

/// Dense permutation of {0, ..., n-1}, the working representation inside
/// PermGroup. Point p of the public 1-based domain is index p-1.
class DensePerm {
 public:
  DensePerm() = default;
  static DensePerm identity(std::size_t n);
  static DensePerm from_finitary(const FinitaryPerm& p, std::size_t n);
  /// images[i] is the image of index i; must be a permutation of 0..n-1.
  static DensePerm from_images(std::vector<std::uint8_t> images);

  std::size_t size() const { return images_.size(); }
  std::size_t operator[](std::size_t i) const { return images_[i]; }
  bool is_identity() const;

  DensePerm inverse() const;
  FinitaryPerm to_finitary() const;
  std::span<const std::uint8_t> images() const { return images_; }

  friend bool operator==(const DensePerm&, const DensePerm&) = default;
  friend auto operator<=>(const DensePerm& a, const DensePerm& b) {
    return a.images_ <=> b.images_;
  }

 private:
  explicit DensePerm(std::vector<std::uint8_t> images) : images_(std::move(images)) {}
  friend DensePerm operator*(const DensePerm& p, const DensePerm& q);

  std::vector<std::uint8_t> images_;
};

/// p * q acts as p o q (q first).
DensePerm operator*(const DensePerm& p, const DensePerm& q);

struct DensePermHash {
  std::size_t operator()(const DensePerm& p) const noexcept;
};

/// Largest domain a PermGroup accepts by default.
inline constexpr std::size_t kDefaultMaxDomain = 64;

/// Finite permutation group on {1..n} given by generators.
///
/// The stabilizer chain uses the complete base 1, 2, ..., n: level i holds the
/// pointwise stabilizer of 1..i and the orbit of i+1 under it, so the order is
/// the product of the basic orbit sizes. The chain is built in the constructor
/// and never modified afterwards.
class PermGroup {
 public:
  PermGroup(std::size_t domain_size, std::vector<FinitaryPerm> generators,
            std::size_t max_domain = kDefaultMaxDomain);
  PermGroup(std::size_t domain_size, std::vector<DensePerm> generators);

  std::size_t domain_size() const { return n_; }
  const std::vector<FinitaryPerm>& generators() const { return gens_; }
  const std::vector<DensePerm>& dense_generators() const { return dense_gens_; }

  /// |G|; throws BoundExceeded if it does not fit in 64 bits.
  std::uint64_t order() const;
  bool contains(const FinitaryPerm& p) const;
  bool contains(const DensePerm& p) const;

  /// Size of the orbit of point i+1 under the stabilizer of 1..i.
  std::vector<std::size_t> basic_orbit_sizes() const;
  /// Generators of Stab(1) read off the chain.
  std::vector<DensePerm> point_stabilizer_generators() const;
  /// Element of the chain transversal mapping point 1 to `point` (1-based).
  DensePerm transversal_element(Point point) const;

  std::vector<Point> orbit(Point p) const;
  bool is_transitive() const;

  /// All elements, enumerated through the chain. Throws BoundExceeded when
  /// |G| > limit.
  std::vector<DensePerm> elements(std::uint64_t limit) const;

 private:
  struct Level {
    std::size_t base = 0;
    std::vector<DensePerm> gens;
    std::vector<std::size_t> orbit;
    // transversal[p] maps base -> p; empty when p is outside the orbit.
    std::vector<DensePerm> transversal;
  };

  void build_chain();
  void add_generator(std::size_t level, DensePerm g);
  DensePerm strip(DensePerm g, std::size_t from) const;

  std::size_t n_;
  std::vector<FinitaryPerm> gens_;
  std::vector<DensePerm> dense_gens_;
  std::vector<Level> levels_;
};

/// Partition of {1..n} into blocks, each sorted, blocks sorted by first point.
struct BlockSystem {
  std::vector<std::vector<Point>> blocks;
};

/// True iff the orbit of one ordered k-tuple of distinct points has size
/// n(n-1)...(n-k+1). Throws PreconditionError unless 1 <= k <= n.
bool is_k_transitive(const PermGroup& G, std::size_t k);

/// Largest k with G k-transitive on its domain (0 for an intransitive group).
std::size_t transitivity_of_action(const PermGroup& G);

/// A nontrivial G-invariant partition with the smallest possible block
/// through 1, or nullopt when G is primitive. Throws PreconditionError if G is
/// not transitive.
std::optional<BlockSystem> minimal_block_system(const PermGroup& G);

/// Every normal subgroup of G as normal closures of unions of conjugacy
/// classes, sorted by order. Throws BoundExceeded when |G| > max_order.
std::vector<PermGroup> normal_subgroups(const PermGroup& G,
                                        std::uint64_t max_order = 10000);

/// Two nontrivial normal subgroups with trivial intersection, if any.
std::optional<std::pair<PermGroup, PermGroup>> is_product_like(
    const PermGroup& G, std::uint64_t max_order = 10000);

bool is_elementary_abelian_2_group(const PermGroup& N);
/// Equal as subgroups of Sym(n).
bool same_group(const PermGroup& a, const PermGroup& b);
/// a <= b.
bool is_subgroup(const PermGroup& a, const PermGroup& b);
/// Subgroup generated by the elements of `gens`, keeping only generators that
/// enlarge the group built so far.
PermGroup generated_subgroup(std::size_t n, std::span<const DensePerm> gens);
/// Normal closure of `gens` in G.
PermGroup normal_closure(const PermGroup& G, std::span<const DensePerm> gens);
/// True iff <Stab_G(point), h> = G for every h outside the stabilizer.
bool point_stabilizer_is_maximal(const PermGroup& G, Point point);
/// C_G(R), computed by scanning the elements of G.
PermGroup centralizer(const PermGroup& G, const PermGroup& R,
                      std::uint64_t max_order = 10000);
/// True iff R is nontrivial and no normal subgroup of G lies strictly
/// between 1 and R.
bool is_minimal_normal(const PermGroup& G, const PermGroup& R,
                       std::uint64_t max_order = 10000);

struct CameronEntry {
  std::uint64_t order = 0;
  std::size_t transitivity = 0;
  /// "transitive-k-1", "elementary-abelian-2", or "violation".
  std::string branch;
};

struct CameronReport {
  std::size_t k = 0;
  std::uint64_t group_order = 0;
  std::vector<CameronEntry> entries;
  bool passed = true;
};

/// Checks, for every nontrivial normal subgroup N of the k-transitive group G,
/// that N is (k-1)-transitive or that k = 3 and N is an elementary abelian
/// 2-group. Throws PreconditionError unless k >= 2 and G is k-transitive.
CameronReport verify_cameron(const PermGroup& G, std::size_t k,
                             std::uint64_t max_order = 10000);

struct TransitivityDegreeReport {
  std::size_t degree = 0;
  std::uint64_t group_order = 0;
  std::size_t subgroups = 0;
  std::size_t core_free_subgroups = 0;
  /// Index of a point stabilizer realizing the degree.
  std::uint64_t best_action_degree = 0;
};

/// Maximum k over all faithful transitive actions of G, i.e. over the actions
/// on G/H for core-free H <= G. Throws BoundExceeded when |G| > budget.
TransitivityDegreeReport transitivity_degree_finite(const PermGroup& G,
                                                    std::uint64_t budget = 60);

/// Largest k such that every 1 <= p <= k divides n.
std::uint64_t burnside_td_upper_bound(std::uint64_t n);

}  // namespace tdlab
