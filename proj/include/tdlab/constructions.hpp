#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tdlab/finite_group.hpp"
#include "tdlab/perm.hpp"
#include "tdlab/perm_group.hpp"

namespace tdlab {

// ---------------------------------------------------------------------------
// Houghton groups

/// Point (ray r, position p) of the union of n rays, 1 <= r <= n, p >= 1,
/// flattened to n (p - 1) + r.
Point houghton_point(std::size_t n, std::size_t ray, std::uint64_t position);
/// Inverse of houghton_point: (ray, position).
std::pair<std::size_t, std::uint64_t> houghton_coords(std::size_t n, Point x);

/// x -> finitary(tau(x)), where tau is the canonical eventual translation
/// with the given per-ray offsets: (r, p) -> (r, p + offset_r) for p > M,
/// M = max |offset_r|, and the remaining n M points matched in increasing
/// flattened order to the points not hit by the tails.
struct HoughtonElement {
  std::size_t n = 2;
  FinitaryPerm finitary;
  std::vector<long long> offsets;

  Point operator()(Point x) const;
  Point preimage(Point x) const;
  bool is_finitary() const;
  friend bool operator==(const HoughtonElement&, const HoughtonElement&) = default;
};

/// The canonical translation with the given offsets; they must sum to 0.
HoughtonElement houghton_translation(std::size_t n, std::vector<long long> offsets);
/// A finitary permutation regarded as an element of H_n.
HoughtonElement houghton_from_finitary(std::size_t n, FinitaryPerm p);
/// g o h.
HoughtonElement houghton_compose(const HoughtonElement& g, const HoughtonElement& h);
HoughtonElement houghton_inverse(const HoughtonElement& g);
/// g^-1 h^-1 g h.
HoughtonElement houghton_commutator(const HoughtonElement& g, const HoughtonElement& h);

/// g_2, ..., g_n: g_i sends (1, p) to (1, p - 1) for p >= 2, (1, 1) to (i, 1)
/// and (i, p) to (i, p + 1), fixing the other rays.
std::vector<HoughtonElement> houghton_generators(std::size_t n);

/// An even finitary element mapping a_j to b_j. The partial map is completed on
/// a u b by pairing b \ a with a \ b in increasing order; when that permutation
/// is odd it is multiplied by a transposition of two points beyond all entries.
HoughtonElement houghton_witness(std::size_t n, const std::vector<Point>& a,
                                 const std::vector<Point>& b);

// ---------------------------------------------------------------------------
// Transposition generators for a finite group Q

/// Q acts on points 1..|Q| (element e is point e + 1). The result is generated
/// by the left translations by xs and the transpositions (identity, x_i).
/// Throws PreconditionError when xs does not generate Q.
PermGroup prop_htA_generators(const FiniteGroupTable& Q, const std::vector<Element>& xs);

struct HtAToken {
  enum class Kind { Lambda, A };
  Kind kind = Kind::A;
  /// Element translated by (Lambda) or generator index (A).
  std::size_t value = 0;
  /// +1 or -1; always +1 for A.
  int exponent = 1;
  friend bool operator==(const HtAToken&, const HtAToken&) = default;
};

/// Word for the transposition (g, h). Along a shortest path g = g_0, ..., g_m = h
/// with g_{j+1} = g_j x_{i_j}, t_{g_j, g_{j+1}} = Lambda(g_j) A(i_j) Lambda(g_j)^-1
/// (the conjugation by Lambda(e) is omitted) and
/// (g_0 g_m) = t_{0,1} ... t_{m-2,m-1} t_{m-1,m} t_{m-2,m-1} ... t_{0,1}.
std::vector<HtAToken> transposition_factorization(const FiniteGroupTable& Q,
                                                  const std::vector<Element>& xs,
                                                  Element g, Element h);
/// Evaluates a token word as a permutation of 1..|Q|, leftmost token applied last.
FinitaryPerm evaluate_htA_word(const FiniteGroupTable& Q, const std::vector<Element>& xs,
                               const std::vector<HtAToken>& word);
std::string to_string(const FiniteGroupTable& Q, const std::vector<HtAToken>& word);

// ---------------------------------------------------------------------------
// Affine groups and catalog generators

/// Arithmetic in GF(q), elements 0..q-1 as base-p digit vectors of polynomials
/// modulo the least monic irreducible polynomial of degree e (q = p^e).
class GaloisField {
 public:
  /// Throws PreconditionError unless q is a prime power with 2 <= q <= 64.
  explicit GaloisField(std::uint64_t q);
  std::uint64_t order() const { return q_; }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t degree() const { return e_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return add_[a * q_ + b]; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mul_[a * q_ + b]; }
  /// Generator of the multiplicative group.
  std::uint64_t primitive_element() const { return primitive_; }
  /// Coefficients of the defining polynomial, constant term first.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

 private:
  std::uint64_t q_, p_, e_, primitive_ = 1;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint64_t> add_, mul_;
};

/// AGL(1, q) on the q field elements (element v is point v + 1), generated by
/// the translations by the additive basis 1, t, ..., t^(e-1) and x -> w x with
/// w primitive.
PermGroup affine_action(std::uint64_t q);
/// AGL(n, 2) on F_2^n (vector v is point v + 1, bit i = coordinate i), 1 <= n <= 6,
/// generated by translation by e_1 and the transvections I + E_{i, i+1 mod n}.
PermGroup affine_f2_action(std::size_t n);

std::vector<FinitaryPerm> symmetric_generators(std::size_t n);
/// 3-cycles (1 2 i); the identity set for n < 3.
std::vector<FinitaryPerm> alternating_generators(std::size_t n);
std::vector<FinitaryPerm> cyclic_generators(std::size_t n);
std::vector<FinitaryPerm> dihedral_generators(std::size_t n);
/// Regular representation of Q8 on 8 points.
std::vector<FinitaryPerm> quaternion_generators();
std::vector<FinitaryPerm> mathieu11_generators();
std::vector<FinitaryPerm> mathieu12_generators();

}  // namespace tdlab
