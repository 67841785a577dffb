#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tdlab/finite_group.hpp"

namespace tdlab {

/// A letter of G * F_n: a group constant or a signed variable.
struct Letter {
  enum class Kind : std::uint8_t { Constant, Variable };
  Kind kind = Kind::Constant;
  /// Element index for constants; +i or -i for x_i^{+-1}.
  long long value = 0;

  static Letter constant(FiniteGroupTable::Element g) {
    return {Kind::Constant, static_cast<long long>(g)};
  }
  static Letter var(long long signed_index) { return {Kind::Variable, signed_index}; }
  bool is_constant() const { return kind == Kind::Constant; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Word over G * F_n. Words are plain letter lists; normal_form reduces them.
struct MixedWord {
  std::vector<Letter> letters;
  std::size_t num_vars = 0;

  bool empty() const { return letters.empty(); }
  friend bool operator==(const MixedWord&, const MixedWord&) = default;
};

/// One syllable of a normal form: a nontrivial constant or a maximal run of
/// variable letters.
struct Syllable {
  bool constant = false;
  std::vector<Letter> letters;
};

MixedWord word_constant(FiniteGroupTable::Element g, std::size_t num_vars = 0);
MixedWord word_variable(long long signed_index, std::size_t num_vars = 0);
MixedWord concat(const MixedWord& u, const MixedWord& v);
MixedWord inverse(const FiniteGroupTable& G, const MixedWord& w);
MixedWord power(const FiniteGroupTable& G, const MixedWord& w, long long e);
/// u^-1 v^-1 u v.
MixedWord commutator(const FiniteGroupTable& G, const MixedWord& u,
                     const MixedWord& v);
/// Left-normed [w1, w2, ..., wm] = [[w1, w2], ..., wm].
MixedWord commutator(const FiniteGroupTable& G, std::span<const MixedWord> ws);

/// The unique reduced form: no identity constants, adjacent constants
/// multiplied, no x x^-1 pairs. Empty iff w is trivial in G * F_n.
MixedWord normal_form(const FiniteGroupTable& G, const MixedWord& w);
bool is_normal_form(const FiniteGroupTable& G, const MixedWord& w);
std::vector<Syllable> syllables(const MixedWord& w);

/// Sum over constants of their word length over S_G and S_G^-1, plus the
/// number of variable letters. Throws PreconditionError if w is not in
/// normal form or a constant is not generated by S_G.
std::size_t fp_length(const FiniteGroupTable& G, const MixedWord& w,
                      std::span<const FiniteGroupTable::Element> S_G);

FiniteGroupTable::Element evaluate(
    const FiniteGroupTable& G, const MixedWord& w,
    std::span<const FiniteGroupTable::Element> assignment);

struct MixedIdentityResult {
  bool holds = true;
  /// Least assignment in row-major order (x1 most significant) with w != 1.
  std::optional<std::vector<FiniteGroupTable::Element>> witness;
  std::uint64_t evaluations = 0;
};

/// Exhaustive check over all |G|^n assignments. Throws BoundExceeded when
/// |G|^n > budget. With threads > 1 the range is split into contiguous
/// chunks and the least witness wins, so the result does not depend on it.
MixedIdentityResult is_mixed_identity(const FiniteGroupTable& G,
                                      const MixedWord& w,
                                      std::uint64_t budget = 10'000'000,
                                      unsigned threads = 1);

/// [x1^(n!), a]. Throws for a = 1 and BoundExceeded for n > 10.
MixedWord mixed_identity_from_finite_class(const FiniteGroupTable& G,
                                           FiniteGroupTable::Element a,
                                           std::size_t n);

/// [[a, x1], [b, x1]] over a direct product, a and b given as elements of
/// the product table.
MixedWord direct_product_identity(const FiniteGroupTable& AxB,
                                  FiniteGroupTable::Element a,
                                  FiniteGroupTable::Element b);

/// u_i = [w1, x^-1 w2 x, ..., x^-(i-1) wi x^(i-1)] with x = x_{n+1}, where n
/// is the largest variable count among the ws. Throws PreconditionError if
/// some w_j is trivial.
MixedWord build_ui_word(const FiniteGroupTable& G, std::span<const MixedWord> ws);

/// Substitutes x_i -> x^i g x^i (x = x1) and returns the normal form. Throws
/// PreconditionError for g = 1.
MixedWord embed_one_variable(const FiniteGroupTable& G, const MixedWord& w,
                             FiniteGroupTable::Element g);

struct FreeProductCertificate {
  bool passed = true;
  std::size_t elements = 0;
  std::size_t elements_in_G = 0;
  std::size_t max_z_length = 0;
  /// Largest |h|_Z / |h|_{G u {t}} seen, as numerator/denominator.
  std::size_t worst_z = 0;
  std::size_t worst_g = 1;
  std::vector<std::string> violations;
};

/// Enumerates products of at most max_len letters from
/// Z = H u {b_i^-1 t a_i} u {a_i^-1 t^-1 b_i} in G * <t> (t is x1) and checks
/// that every element lying in G lies in H and that |h|_Z <= 3 |h|_{G u {t}}.
/// Throws PreconditionError if H is not a subgroup or the cosets a_i H (or
/// b_i H) are not pairwise distinct; BoundExceeded past `budget` elements.
FreeProductCertificate check_free_product_extension(
    const FiniteGroupTable& G, std::span<const FiniteGroupTable::Element> H,
    std::span<const FiniteGroupTable::Element> a,
    std::span<const FiniteGroupTable::Element> b, std::size_t max_len,
    std::size_t budget = 2'000'000);

/// Parses a word. Tokens: x<i>, X<i> (inverse), g:<label>, a cycle such as
/// (1 2 3), (1,2,3) or (123), "1" for the empty word, commutators
/// [u, v, ...] (left-normed), and a postfix ^<int> on any token.
MixedWord parse_mixed_word(const FiniteGroupTable& G, std::string_view text);
/// Whitespace-separated x<i>, X<i>, g:<label> tokens; "1" for the empty word.
std::string to_text(const FiniteGroupTable& G, const MixedWord& w);

}  // namespace tdlab
