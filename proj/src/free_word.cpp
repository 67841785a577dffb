#include "tdlab/free_word.hpp"

#include <algorithm>
#include <cctype>

#include "tdlab/error.hpp"

namespace tdlab {

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (int l : w) {
    if (l == 0) throw PreconditionError("0 is not a letter");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

bool is_reduced(const FreeWord& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) return false;
    if (i + 1 < w.size() && w[i] == -w[i + 1]) return false;
  }
  return true;
}

FreeWord free_inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

FreeWord free_mul(const FreeWord& u, const FreeWord& v) {
  FreeWord w = u;
  w.insert(w.end(), v.begin(), v.end());
  return free_reduce(w);
}

FreeWord free_conjugate(const FreeWord& g, const FreeWord& u) {
  return free_mul(free_mul(free_inverse(u), g), u);
}

bool shortlex_less(const FreeWord& a, const FreeWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return letter_rank(a[i]) < letter_rank(b[i]);
  return false;
}

std::uint64_t reduced_word_count(int k, std::size_t n) {
  if (n == 0) return 1;
  std::uint64_t c = 2 * static_cast<std::uint64_t>(k);
  for (std::size_t i = 1; i < n; ++i) c *= 2 * static_cast<std::uint64_t>(k) - 1;
  return c;
}

std::uint64_t shortlex_rank(const FreeWord& w, int k) {
  check_rank(w, k);
  if (!is_reduced(w)) throw PreconditionError("shortlex_rank needs a reduced word");
  std::uint64_t rank = 0;
  for (std::size_t n = 0; n < w.size(); ++n) rank += reduced_word_count(k, n);
  const std::size_t L = w.size();
  for (std::size_t i = 0; i < L; ++i) {
    // Smaller letters at position i that keep the word reduced.
    std::uint64_t smaller = 0;
    for (int r = 0; r < letter_rank(w[i]); ++r)
      if (i == 0 || letter_from_rank(r) != -w[i - 1]) ++smaller;
    std::uint64_t tail = 1;
    for (std::size_t j = i + 1; j < L; ++j) tail *= 2 * static_cast<std::uint64_t>(k) - 1;
    rank += smaller * tail;
  }
  return rank;
}

FreeWord shortlex_unrank(std::uint64_t rank, int k) {
  std::size_t L = 0;
  while (rank >= reduced_word_count(k, L)) rank -= reduced_word_count(k, L++);
  FreeWord w;
  for (std::size_t i = 0; i < L; ++i) {
    std::uint64_t tail = 1;
    for (std::size_t j = i + 1; j < L; ++j) tail *= 2 * static_cast<std::uint64_t>(k) - 1;
    for (int r = 0; r < 2 * k; ++r) {
      int l = letter_from_rank(r);
      if (i > 0 && l == -w[i - 1]) continue;
      if (rank < tail) {
        w.push_back(l);
        break;
      }
      rank -= tail;
    }
  }
  return w;
}

std::vector<FreeWord> reduced_words_of_length(int k, std::size_t n) {
  std::vector<FreeWord> level{FreeWord{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FreeWord> next;
    for (const auto& w : level)
      for (int r = 0; r < 2 * k; ++r) {
        int l = letter_from_rank(r);
        if (!w.empty() && w.back() == -l) continue;
        FreeWord v = w;
        v.push_back(l);
        next.push_back(std::move(v));
      }
    level = std::move(next);
  }
  return level;
}

std::string to_letters(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int l : w) {
    int i = l < 0 ? -l : l;
    if (i > 26) throw PreconditionError("letter form supports ranks up to 26");
    s.push_back(static_cast<char>((l > 0 ? 'a' : 'A') + i - 1));
  }
  return s;
}

FreeWord parse_free_word(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  if (trimmed.empty() || trimmed == "1") return {};
  FreeWord w;
  if (std::isalpha(static_cast<unsigned char>(trimmed.front()))) {
    for (char c : trimmed) {
      if (std::islower(static_cast<unsigned char>(c)))
        w.push_back(c - 'a' + 1);
      else if (std::isupper(static_cast<unsigned char>(c)))
        w.push_back(-(c - 'A' + 1));
      else if (!std::isspace(static_cast<unsigned char>(c)))
        throw ParseError("unexpected character in letter word: " + std::string(1, c));
    }
    return w;
  }
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size() || v == 0) throw ParseError("bad letter " + token);
      w.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad letter " + token);
    }
    token.clear();
  };
  for (char c : trimmed) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',')
      flush();
    else
      token.push_back(c);
  }
  flush();
  return w;
}

void check_rank(const FreeWord& w, int k) {
  for (int l : w)
    if (l == 0 || l > k || l < -k)
      throw PreconditionError("letter " + std::to_string(l) + " outside rank " +
                              std::to_string(k));
}

}  // namespace tdlab
