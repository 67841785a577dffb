#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tdlab {

/// Word in the free group F_k: letters +-1..+-k, -i standing for x_i^-1.
using FreeWord = std::vector<int>;

/// Position of a letter in the fixed order 1 < -1 < 2 < -2 < ...
inline int letter_rank(int letter) {
  return 2 * ((letter < 0 ? -letter : letter) - 1) + (letter < 0 ? 1 : 0);
}
inline int letter_from_rank(int rank) {
  return rank % 2 == 0 ? rank / 2 + 1 : -(rank / 2 + 1);
}

FreeWord free_reduce(const FreeWord& w);
bool is_reduced(const FreeWord& w);
FreeWord free_inverse(const FreeWord& w);
/// Reduced product u v.
FreeWord free_mul(const FreeWord& u, const FreeWord& v);
/// Reduced u^-1 g u.
FreeWord free_conjugate(const FreeWord& g, const FreeWord& u);

/// Shortlex: shorter first, then lexicographic by letter rank.
bool shortlex_less(const FreeWord& a, const FreeWord& b);

/// Number of reduced words of length n in F_k.
std::uint64_t reduced_word_count(int k, std::size_t n);
/// 0-based position of a reduced word in the shortlex enumeration of F_k.
std::uint64_t shortlex_rank(const FreeWord& w, int k);
/// Inverse of shortlex_rank.
FreeWord shortlex_unrank(std::uint64_t rank, int k);
/// All reduced words of length n, in shortlex order.
std::vector<FreeWord> reduced_words_of_length(int k, std::size_t n);

/// Letter form: a, b, c, ... for x1, x2, x3 and capitals for inverses; the
/// empty word prints as "1".
std::string to_letters(const FreeWord& w);
/// Accepts letter form (a, A, ...), signed integers separated by spaces or
/// commas, or "1"/"" for the empty word. Throws ParseError.
FreeWord parse_free_word(std::string_view text);
/// Throws PreconditionError unless every letter lies in +-1..+-k.
void check_rank(const FreeWord& w, int k);

}  // namespace tdlab
