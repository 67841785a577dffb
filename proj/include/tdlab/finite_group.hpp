#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tdlab/perm.hpp"
#include "tdlab/perm_group.hpp"

namespace tdlab {

/// Finite group as a full multiplication table. Element 0 is the identity.
class FiniteGroupTable {
 public:
  using Element = std::size_t;

  /// Validates closure, identity, inverses and associativity.
  FiniteGroupTable(std::vector<std::vector<Element>> mul,
                   std::vector<std::string> labels);

  /// Elements are the group's permutations ordered by cycle form, so the
  /// identity comes first.
  static FiniteGroupTable from_perm_group(const PermGroup& G,
                                          std::uint64_t max_order = 5000);
  /// Z/n with labels e, a, a2, ..., a(n-1).
  static FiniteGroupTable cyclic(std::size_t n);
  /// (a, b) has index a * |B| + b and label "<la|lb>".
  static FiniteGroupTable direct_product(const FiniteGroupTable& A,
                                         const FiniteGroupTable& B);

  std::size_t size() const { return inv_.size(); }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return mul_[a * size() + b]; }
  Element inv(Element a) const { return inv_[a]; }
  Element power(Element a, long long e) const;
  Element conjugate(Element a, Element g) const;  // g^-1 a g
  Element commutator(Element a, Element b) const;  // a^-1 b^-1 a b

  const std::string& label(Element a) const { return labels_[a]; }
  std::optional<Element> find_label(const std::string& label) const;
  /// Permutation behind an element, when the table came from a PermGroup.
  std::optional<FinitaryPerm> perm(Element a) const;
  std::optional<Element> find_perm(const FinitaryPerm& p) const;

  std::size_t element_order(Element a) const;
  std::size_t class_size(Element a) const;
  std::vector<std::vector<Element>> conjugacy_classes() const;
  /// Subgroup generated by `gens`, sorted.
  std::vector<Element> generated(std::span<const Element> gens) const;
  bool is_subgroup(std::span<const Element> H) const;
  /// Word length of every element over gens and their inverses; nullopt for
  /// elements outside the generated subgroup.
  std::vector<std::optional<std::size_t>> word_lengths(
      std::span<const Element> gens) const;

 private:
  FiniteGroupTable() = default;
  void finish(bool validate);

  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
  std::vector<FinitaryPerm> perms_;
};

using Element = FiniteGroupTable::Element;

}  // namespace tdlab
