#include "tdlab/mixed_word.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <limits>
#include <map>
#include <thread>

#include "tdlab/error.hpp"

namespace tdlab {



namespace {

std::size_t max_var(const std::vector<Letter>& letters) {
  std::size_t n = 0;
  for (const auto& l : letters)
    if (!l.is_constant())
      n = std::max<std::size_t>(n, static_cast<std::size_t>(std::llabs(l.value)));
  return n;
}

}  // namespace

MixedWord word_constant(Element g, std::size_t num_vars) {
  return {{Letter::constant(g)}, num_vars};
}

MixedWord word_variable(long long signed_index, std::size_t num_vars) {
  if (signed_index == 0) throw PreconditionError("variable index 0");
  auto n = static_cast<std::size_t>(std::llabs(signed_index));
  return {{Letter::var(signed_index)}, std::max(n, num_vars)};
}

MixedWord concat(const MixedWord& u, const MixedWord& v) {
  MixedWord w{u.letters, std::max(u.num_vars, v.num_vars)};
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

MixedWord inverse(const FiniteGroupTable& G, const MixedWord& w) {
  MixedWord r{{}, w.num_vars};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(it->is_constant()
                            ? Letter::constant(G.inv(static_cast<Element>(it->value)))
                            : Letter::var(-it->value));
  return r;
}

MixedWord power(const FiniteGroupTable& G, const MixedWord& w, long long e) {
  MixedWord base = e < 0 ? inverse(G, w) : w;
  MixedWord r{{}, w.num_vars};
  for (long long i = 0; i < std::llabs(e); ++i)
    r.letters.insert(r.letters.end(), base.letters.begin(), base.letters.end());
  return r;
}

MixedWord commutator(const FiniteGroupTable& G, const MixedWord& u,
                     const MixedWord& v) {
  return concat(concat(inverse(G, u), inverse(G, v)), concat(u, v));
}

MixedWord commutator(const FiniteGroupTable& G, std::span<const MixedWord> ws) {
  if (ws.empty()) throw PreconditionError("empty commutator");
  MixedWord r = ws[0];
  for (std::size_t i = 1; i < ws.size(); ++i) r = commutator(G, r, ws[i]);
  return r;
}

MixedWord normal_form(const FiniteGroupTable& G, const MixedWord& w) {
  std::vector<Letter> stack;
  stack.reserve(w.letters.size());
  for (const auto& l : w.letters) {
    if (l.is_constant()) {
      auto g = static_cast<Element>(l.value);
      if (g >= G.size()) throw PreconditionError("constant outside the group");
      if (g == G.identity()) continue;
      if (!stack.empty() && stack.back().is_constant()) {
        Element prod = G.mul(static_cast<Element>(stack.back().value), g);
        if (prod == G.identity())
          stack.pop_back();
        else
          stack.back().value = static_cast<long long>(prod);
      } else {
        stack.push_back(l);
      }
    } else {
      if (!stack.empty() && !stack.back().is_constant() &&
          stack.back().value == -l.value)
        stack.pop_back();
      else
        stack.push_back(l);
    }
  }
  return {std::move(stack), w.num_vars};
}

bool is_normal_form(const FiniteGroupTable& G, const MixedWord& w) {
  return normal_form(G, w).letters == w.letters;
}

std::vector<Syllable> syllables(const MixedWord& w) {
  std::vector<Syllable> out;
  for (const auto& l : w.letters) {
    if (l.is_constant() || out.empty() || out.back().constant)
      out.push_back({l.is_constant(), {l}});
    else
      out.back().letters.push_back(l);
  }
  return out;
}

std::size_t fp_length(const FiniteGroupTable& G, const MixedWord& w,
                      std::span<const Element> S_G) {
  if (!is_normal_form(G, w))
    throw PreconditionError("fp_length needs a word in normal form");
  auto lengths = G.word_lengths(S_G);
  std::size_t total = 0;
  for (const auto& l : w.letters) {
    if (!l.is_constant()) {
      ++total;
      continue;
    }
    const auto& d = lengths[static_cast<Element>(l.value)];
    if (!d)
      throw PreconditionError("constant " + G.label(static_cast<Element>(l.value)) +
                              " is not generated by S_G");
    total += *d;
  }
  return total;
}

Element evaluate(const FiniteGroupTable& G, const MixedWord& w,
                 std::span<const Element> assignment) {
  if (assignment.size() < std::max(w.num_vars, max_var(w.letters)))
    throw PreconditionError("assignment is shorter than the variable count");
  Element r = G.identity();
  for (const auto& l : w.letters) {
    Element x;
    if (l.is_constant())
      x = static_cast<Element>(l.value);
    else if (l.value > 0)
      x = assignment[static_cast<std::size_t>(l.value - 1)];
    else
      x = G.inv(assignment[static_cast<std::size_t>(-l.value - 1)]);
    r = G.mul(r, x);
  }
  return r;
}

MixedIdentityResult is_mixed_identity(const FiniteGroupTable& G,
                                      const MixedWord& w, std::uint64_t budget,
                                      unsigned threads) {
  const std::size_t n = std::max(w.num_vars, max_var(w.letters));
  const std::uint64_t q = G.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(total, q, &total) || total > budget)
      throw BoundExceeded("|G|^n exceeds the evaluation budget of " +
                          std::to_string(budget));
  }
  const MixedWord reduced = normal_form(G, w);

  auto decode = [&](std::uint64_t index) {
    std::vector<Element> a(n);
    for (std::size_t i = n; i-- > 0;) {
      a[i] = static_cast<Element>(index % q);
      index /= q;
    }
    return a;
  };

  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, total));
  constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{none};
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (i >= best.load(std::memory_order_relaxed)) return;
      if (evaluate(G, reduced, decode(i)) != G.identity()) {
        std::uint64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  };
  if (workers == 1) {
    scan(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
      std::uint64_t lo = t * chunk, hi = std::min(total, lo + chunk);
      if (lo < hi) pool.emplace_back(scan, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  MixedIdentityResult r;
  if (best.load() == none) {
    r.evaluations = total;
  } else {
    r.holds = false;
    r.witness = decode(best.load());
    r.evaluations = best.load() + 1;
  }
  return r;
}

MixedWord mixed_identity_from_finite_class(const FiniteGroupTable& G,
                                           Element a, std::size_t n) {
  if (a == G.identity()) throw PreconditionError("a must be nontrivial");
  if (n == 0) throw PreconditionError("class size must be positive");
  if (n > 10) throw BoundExceeded("n! letters for n > 10 is beyond the bound");
  long long fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= static_cast<long long>(i);
  return commutator(G, power(G, word_variable(1), fact), word_constant(a, 1));
}

MixedWord direct_product_identity(const FiniteGroupTable& AxB, Element a,
                                  Element b) {
  const MixedWord x = word_variable(1);
  return commutator(AxB, commutator(AxB, word_constant(a, 1), x),
                    commutator(AxB, word_constant(b, 1), x));
}

MixedWord build_ui_word(const FiniteGroupTable& G, std::span<const MixedWord> ws) {
  if (ws.empty()) throw PreconditionError("build_ui_word needs at least one word");
  std::size_t n = 0;
  for (const auto& w : ws) {
    if (normal_form(G, w).empty())
      throw PreconditionError("every w_j must be nontrivial");
    n = std::max({n, w.num_vars, max_var(w.letters)});
  }
  const auto x = static_cast<long long>(n + 1);
  std::vector<MixedWord> terms;
  for (std::size_t j = 0; j < ws.size(); ++j) {
    MixedWord xj = power(G, word_variable(x, n + 1), static_cast<long long>(j));
    terms.push_back(concat(concat(inverse(G, xj), ws[j]), xj));
    terms.back().num_vars = n + 1;
  }
  MixedWord u = normal_form(G, commutator(G, terms));
  u.num_vars = n + 1;
  if (u.empty()) throw Error("u_i reduced to the identity");
  return u;
}

MixedWord embed_one_variable(const FiniteGroupTable& G, const MixedWord& w,
                             Element g) {
  if (g == G.identity()) throw PreconditionError("g must be nontrivial");
  MixedWord out{{}, 1};
  for (const auto& l : w.letters) {
    if (l.is_constant()) {
      out.letters.push_back(l);
      continue;
    }
    const long long i = std::llabs(l.value);
    const long long s = l.value > 0 ? 1 : -1;
    for (long long j = 0; j < i; ++j) out.letters.push_back(Letter::var(s));
    out.letters.push_back(Letter::constant(s > 0 ? g : G.inv(g)));
    for (long long j = 0; j < i; ++j) out.letters.push_back(Letter::var(s));
  }
  MixedWord r = normal_form(G, out);
  if (r.empty() && !normal_form(G, w).empty())
    throw Error("one-variable embedding collapsed a nontrivial word");
  return r;
}

FreeProductCertificate check_free_product_extension(
    const FiniteGroupTable& G, std::span<const Element> H,
    std::span<const Element> a, std::span<const Element> b, std::size_t max_len,
    std::size_t budget) {
  if (!G.is_subgroup(H)) throw PreconditionError("H is not a subgroup");
  if (a.size() != b.size() || a.empty())
    throw PreconditionError("tuples must be nonempty and of equal length");
  std::vector<bool> inH(G.size(), false);
  for (Element h : H) inH[h] = true;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (inH[G.mul(G.inv(a[i]), a[j])])
        throw PreconditionError("a_i H = a_j H for distinct i, j");
      if (inH[G.mul(G.inv(b[i]), b[j])])
        throw PreconditionError("b_i H = b_j H for distinct i, j");
    }

  std::vector<MixedWord> Z;
  for (Element h : H)
    if (h != G.identity()) Z.push_back(word_constant(h, 1));
  for (std::size_t i = 0; i < a.size(); ++i) {
    MixedWord z{{Letter::constant(G.inv(b[i])), Letter::var(1),
                 Letter::constant(a[i])},
                1};
    Z.push_back(normal_form(G, z));
    Z.push_back(normal_form(G, inverse(G, z)));
  }

  FreeProductCertificate cert;
  std::map<std::vector<Letter>, std::size_t> dist;
  std::vector<MixedWord> frontier{MixedWord{{}, 1}};
  dist[{}] = 0;
  auto record = [&](const MixedWord& h, std::size_t d) {
    ++cert.elements;
    std::size_t free_len = h.letters.size();  // one per constant or t letter
    bool in_G = true;
    for (const auto& l : h.letters)
      if (!l.is_constant()) in_G = false;
    if (in_G) {
      ++cert.elements_in_G;
      Element g = h.empty() ? G.identity() : static_cast<Element>(h.letters[0].value);
      if (!inH[g]) {
        cert.passed = false;
        cert.violations.push_back("element " + G.label(g) + " of G outside H");
      }
    }
    if (d > 3 * free_len) {
      cert.passed = false;
      cert.violations.push_back("Lipschitz bound fails for " + to_text(G, h));
    }
    if (free_len > 0 && d * cert.worst_g > cert.worst_z * free_len) {
      cert.worst_z = d;
      cert.worst_g = free_len;
    }
    cert.max_z_length = std::max(cert.max_z_length, d);
  };
  record(frontier[0], 0);
  for (std::size_t d = 1; d <= max_len; ++d) {
    std::vector<MixedWord> next;
    for (const auto& w : frontier)
      for (const auto& z : Z) {
        MixedWord h = normal_form(G, concat(w, z));
        if (dist.emplace(h.letters, d).second) {
          record(h, d);
          next.push_back(std::move(h));
          if (dist.size() > budget)
            throw BoundExceeded("free product enumeration exceeded " +
                                std::to_string(budget) + " elements");
        }
      }
    frontier = std::move(next);
  }
  return cert;
}

// ------------------------------------------------------------------ parsing

namespace {

class WordParser {
 public:
  WordParser(const FiniteGroupTable& G, std::string_view text) : G_(G), s_(text) {}

  MixedWord parse() {
    MixedWord w = product();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    w.num_vars = max_var(w.letters);
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("word parse error at offset " + std::to_string(pos_) + ": " + msg);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end_of_product() {
    skip_ws();
    return pos_ == s_.size() || s_[pos_] == ',' || s_[pos_] == ']';
  }

  MixedWord product() {
    MixedWord w;
    while (!at_end_of_product()) w = concat(w, term());
    return w;
  }

  long long integer() {
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (digits == pos_) fail("expected an integer");
    try {
      return std::stoll(std::string(s_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      fail("integer out of range");
    }
  }

  MixedWord term() {
    MixedWord w = atom();
    skip_ws();
    while (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_ws();
      w = power(G_, w, integer());
      skip_ws();
    }
    return w;
  }

  // A run of parenthesized cycles with nothing between them.
  std::string cycles_text() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] == '(') {
      auto close = s_.find(')', pos_);
      if (close == std::string_view::npos) fail("unterminated cycle");
      pos_ = close + 1;
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  Element constant_from_cycles(const std::string& text) {
    // "(123)" without separators lists single-digit points.
    std::string normalized;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      normalized.push_back(c);
      if (std::isdigit(static_cast<unsigned char>(c)) && i + 1 < text.size() &&
          std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
        std::size_t open = text.rfind('(', i);
        std::size_t close = text.find(')', i);
        std::string_view body(text.data() + open + 1, close - open - 1);
        bool has_sep = body.find_first_of(" ,\t") != std::string_view::npos;
        if (!has_sep) normalized.push_back(' ');
      }
    }
    FinitaryPerm p;
    try {
      p = parse_perm(normalized);
    } catch (const ParseError& e) {
      fail(e.what());
    }
    auto g = G_.find_perm(p);
    if (!g) {
      auto by_label = G_.find_label(to_label(p));
      if (!by_label) fail("permutation " + to_string(p) + " is not in the group");
      return *by_label;
    }
    return *g;
  }

  MixedWord atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '[') {
      ++pos_;
      std::vector<MixedWord> parts{product()};
      skip_ws();
      while (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        parts.push_back(product());
        skip_ws();
      }
      if (pos_ >= s_.size() || s_[pos_] != ']') fail("expected ']'");
      ++pos_;
      if (parts.size() < 2) fail("a commutator needs at least two entries");
      return commutator(G_, parts);
    }
    if (c == '(') return word_constant(constant_from_cycles(cycles_text()));
    if (c == 'x' || c == 'X') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a variable index");
      long long i = std::stoll(std::string(s_.substr(start, pos_ - start)));
      if (i <= 0) fail("variable indices start at 1");
      return word_variable(c == 'x' ? i : -i);
    }
    if (s_.substr(pos_, 2) == "g:") {
      pos_ += 2;
      if (pos_ < s_.size() && s_[pos_] == '(') {
        std::string text = cycles_text();
        if (auto g = G_.find_label(text)) return word_constant(*g);
        return word_constant(constant_from_cycles(text));
      }
      std::size_t start = pos_;
      while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
             s_[pos_] != ',' && s_[pos_] != ']' && s_[pos_] != '[' && s_[pos_] != '^')
        ++pos_;
      std::string label(s_.substr(start, pos_ - start));
      auto g = G_.find_label(label);
      if (!g) fail("unknown element label '" + label + "'");
      return word_constant(*g);
    }
    if (c == '1') {
      ++pos_;
      return MixedWord{};
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const FiniteGroupTable& G_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MixedWord parse_mixed_word(const FiniteGroupTable& G, std::string_view text) {
  return WordParser(G, text).parse();
}

std::string to_text(const FiniteGroupTable& G, const MixedWord& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out.push_back(' ');
    if (l.is_constant())
      out += "g:" + G.label(static_cast<Element>(l.value));
    else
      out += (l.value > 0 ? "x" : "X") + std::to_string(std::llabs(l.value));
  }
  return out;
}

}  // namespace tdlab
