// Acceptance checks. Prints one PASS/FAIL line per criterion and exits with
// the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tdlab/constructions.hpp"
#include "tdlab/corpus.hpp"
#include "tdlab/error.hpp"
#include "tdlab/htbuilder.hpp"
#include "tdlab/marked.hpp"
#include "tdlab/mixed_word.hpp"
#include "tdlab/perm.hpp"
#include "tdlab/perm_group.hpp"
#include "tdlab/stallings.hpp"

using namespace tdlab;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

const fs::path kSource = TDLAB_SOURCE_DIR;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  std::vector<std::string> failures;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 8) failures.push_back(what);
    }
  }
  void note(std::string s) { notes.push_back(std::move(s)); }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

// k > n: there are no k-tuples of distinct points, so the action is not
// k-transitive.
bool k_transitive(const PermGroup& G, std::size_t k) {
  return k <= G.domain_size() && is_k_transitive(G, k);
}

std::uint64_t falling(std::uint64_t n, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= n - i;
  return r;
}

// Orbit of (1, ..., k) by breadth-first search over tuples.
std::uint64_t tuple_orbit_size(const PermGroup& G, std::size_t k) {
  std::vector<Point> start(k);
  std::iota(start.begin(), start.end(), Point{1});
  std::set<std::vector<Point>> seen{start};
  std::vector<std::vector<Point>> queue{start};
  for (std::size_t j = 0; j < queue.size(); ++j)
    for (const auto& g : G.generators()) {
      std::vector<Point> next(k);
      for (std::size_t i = 0; i < k; ++i) next[i] = g(queue[j][i]);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  return seen.size();
}

// k-transitivity from the definition: the tuple orbit has every ordered
// k-tuple of distinct points.
bool k_transitive_oracle(const PermGroup& G, std::size_t k) {
  if (k > G.domain_size()) return false;
  return tuple_orbit_size(G, k) == falling(G.domain_size(), k);
}

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::vector<CorpusGroup> bundled_corpus() { return load_corpus(kSource / "data" / "corpus"); }

// ---------------------------------------------------------------------------

Outcome c1_classical() {
  Outcome o;
  auto t0 = Clock::now();
  for (std::size_t n = 3; n <= 7; ++n) {
    PermGroup S(n, symmetric_generators(n));
    o.require(S.order() == factorial(n), "|S" + std::to_string(n) + "|");
    const bool a = k_transitive(S, n), b = k_transitive(S, n + 1);
    o.require(a == k_transitive_oracle(S, n) && b == k_transitive_oracle(S, n + 1),
              "S" + std::to_string(n) + " disagrees with the tuple-orbit oracle");
    o.require(a && !b, "S" + std::to_string(n) + " is not exactly n-transitive");
  }
  for (std::size_t n = 4; n <= 7; ++n) {
    PermGroup A(n, alternating_generators(n));
    o.require(A.order() == factorial(n) / 2, "|A" + std::to_string(n) + "|");
    const bool a = k_transitive(A, n - 2), b = k_transitive(A, n - 1);
    o.require(a == k_transitive_oracle(A, n - 2) && b == k_transitive_oracle(A, n - 1),
              "A" + std::to_string(n) + " disagrees with the tuple-orbit oracle");
    o.require(a && !b, "A" + std::to_string(n) + " is not exactly (n-2)-transitive");
  }
  const double t = seconds_since(t0);
  o.require(t < 10.0, "took " + std::to_string(t) + " s");
  o.note("S3..S7 n-transitive, A4..A7 (n-2)-transitive");
  return o;
}

Outcome c2_td_finite() {
  Outcome o;
  auto t0 = Clock::now();
  const std::vector<std::pair<std::string, std::size_t>> cases{{"s3", 3}, {"a4", 2}, {"c6", 1}};
  for (const auto& [name, expected] : cases) {
    auto G = load_corpus_group(kSource / "data" / "corpus" / (name + ".grp")).group();
    auto r = transitivity_degree_finite(G);
    o.require(r.degree == expected, "td(" + name + ") = " + std::to_string(r.degree));
    o.note("td(" + name + ")=" + std::to_string(r.degree));
  }
  const double t = seconds_since(t0);
  o.require(t < 60.0, "took " + std::to_string(t) + " s");
  return o;
}

Outcome c3_affine() {
  Outcome o;
  auto t0 = Clock::now();
  for (std::uint64_t q : {4, 5, 7, 8, 9}) {
    auto G = affine_action(q);
    const std::string tag = "AGL(1," + std::to_string(q) + ")";
    o.require(G.order() == q * (q - 1), tag + " order");
    o.require(k_transitive(G, 2) && k_transitive_oracle(G, 2), tag + " not 2-transitive");
    o.require(!k_transitive(G, 3) && !k_transitive_oracle(G, 3), tag + " is 3-transitive");
    // Regular on ordered pairs: 2-transitive with |G| = q(q-1).
    o.require(tuple_orbit_size(G, 2) == G.order(), tag + " not sharply 2-transitive");
  }
  for (std::size_t n : {2, 3, 4}) {
    auto G = affine_f2_action(n);
    const std::string tag = "AGL(" + std::to_string(n) + ",2)";
    const bool three = k_transitive(G, 3), four = k_transitive(G, 4);
    o.require(three == k_transitive_oracle(G, 3) && four == k_transitive_oracle(G, 4),
              tag + " disagrees with the tuple-orbit oracle");
    o.require(three, tag + " not 3-transitive");
    if (four)
      o.require(false, tag + " is 4-transitive (order " + std::to_string(G.order()) +
                           " on " + std::to_string(G.domain_size()) +
                           " points; it is the full symmetric group S4)");
  }
  const double t = seconds_since(t0);
  o.require(t < 30.0, "took " + std::to_string(t) + " s");
  o.note("AGL(1,q) sharply 2-transitive for q=4,5,7,8,9; AGL(3,2), AGL(4,2) 3- not 4-transitive");
  return o;
}

Outcome c4_lemmas() {
  Outcome o;
  constexpr std::uint64_t kMaxOrder = 400000;
  std::size_t groups = 0, primitive = 0, normals = 0, min_pairs = 0;
  for (const auto& cg : bundled_corpus()) {
    auto G = cg.group();
    ++groups;
    const std::string tag = cg.name + ": ";
    const std::size_t k = transitivity_of_action(G);
    o.require(k == 0 || k_transitive(G, k), tag + "transitivity");
    if (k == 0) continue;
    const bool prim = !minimal_block_system(G).has_value();
    if (k >= 2) o.require(prim, tag + "2-transitive but imprimitive");
    if (!prim) continue;
    ++primitive;
    for (Point p = 1; p <= G.domain_size(); ++p)
      o.require(point_stabilizer_is_maximal(G, p),
                tag + "stabilizer of " + std::to_string(p) + " not maximal");
    for (const auto& N : normal_subgroups(G, kMaxOrder)) {
      if (N.order() == 1) continue;
      ++normals;
      o.require(N.is_transitive(), tag + "nontrivial normal subgroup of order " +
                                       std::to_string(N.order()) + " is intransitive");
      // Some transitive T commutes with N iff C_G(N) is transitive, so
      // T = C_G(N) covers every applicable pair.
      auto C = centralizer(G, N, kMaxOrder);
      if (!C.is_transitive()) continue;
      ++min_pairs;
      o.require(is_minimal_normal(G, N, kMaxOrder),
                tag + "normal subgroup of order " + std::to_string(N.order()) +
                    " has a transitive centralizer but is not minimal normal");
    }
  }

  auto agl32 = verify_cameron(affine_f2_action(3), 3, kMaxOrder);
  o.require(agl32.passed, "verify_cameron AGL(3,2)");
  bool elementary = false;
  for (const auto& e : agl32.entries) elementary |= e.branch == "elementary-abelian-2";
  o.require(elementary, "AGL(3,2): no elementary abelian 2-group branch");
  auto s5 = verify_cameron(PermGroup(5, symmetric_generators(5)), 3, kMaxOrder);
  o.require(s5.passed, "verify_cameron S5");
  for (const auto& e : s5.entries)
    o.require(e.branch == "transitive-k-1", "S5: branch " + e.branch);

  o.note(std::to_string(groups) + " groups, " + std::to_string(primitive) + " primitive, " +
         std::to_string(normals) + " normal subgroups, " + std::to_string(min_pairs) +
         " (T,R) classes; Cameron AGL(3,2) and S5 pass");
  return o;
}

Outcome c5_mixed_identities() {
  Outcome o;
  auto t0 = Clock::now();
  std::vector<std::pair<std::string, FiniteGroupTable>> small;
  for (const auto& cg : bundled_corpus()) {
    auto G = cg.group();
    if (G.order() <= 48) small.emplace_back(cg.name, FiniteGroupTable::from_perm_group(G));
  }
  std::size_t words = 0;
  for (const auto& [name, G] : small) {
    if (G.size() > 24) continue;
    for (Element a = 1; a < G.size(); ++a) {
      auto w = mixed_identity_from_finite_class(G, a, G.class_size(a));
      ++words;
      o.require(is_mixed_identity(G, w).holds, name + ": [x^(n!), " + G.label(a) + "]");
    }
  }
  std::size_t pairs = 0;
  for (const auto& [na, A] : small)
    for (const auto& [nb, B] : small) {
      if (A.size() * B.size() > 48) continue;
      ++pairs;
      auto P = FiniteGroupTable::direct_product(A, B);
      for (Element a = 1; a < A.size(); ++a)
        for (Element b = 1; b < B.size(); ++b) {
          ++words;
          o.require(is_mixed_identity(P, direct_product_identity(P, a * B.size(), b)).holds,
                    na + "x" + nb + ": [[a,x],[b,x]]");
        }
    }
  auto S3 = FiniteGroupTable::from_perm_group(PermGroup(3, symmetric_generators(3)));
  auto r = is_mixed_identity(S3, parse_mixed_word(S3, "[x1,(123)]"));
  o.require(!r.holds && r.witness.has_value(), "no witness for [x,(123)] over S3");
  if (r.witness) {
    MixedWord w = parse_mixed_word(S3, "[x1,(123)]");
    o.require(evaluate(S3, w, *r.witness) != S3.identity(), "witness does not evaluate to 1");
  }
  const double t = seconds_since(t0);
  o.require(t < 60.0, "took " + std::to_string(t) + " s");
  o.note(std::to_string(words) + " words, " + std::to_string(pairs) + " product pairs");
  return o;
}

// Every reduction order, explored exhaustively; returns the irreducible words.
std::set<std::vector<Letter>> rewrite_all(const FiniteGroupTable& G,
                                          const std::vector<Letter>& start) {
  std::set<std::vector<Letter>> seen{start}, terminal;
  std::vector<std::vector<Letter>> stack{start};
  while (!stack.empty()) {
    auto w = std::move(stack.back());
    stack.pop_back();
    bool reducible = false;
    auto push = [&](std::vector<Letter> v) {
      reducible = true;
      if (seen.insert(v).second) stack.push_back(std::move(v));
    };
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].is_constant() && w[i].value == 0) {
        auto v = w;
        v.erase(v.begin() + static_cast<long>(i));
        push(std::move(v));
      }
      if (i + 1 == w.size()) continue;
      if (w[i].is_constant() && w[i + 1].is_constant()) {
        auto v = w;
        v[i].value = static_cast<long long>(
            G.mul(static_cast<Element>(w[i].value), static_cast<Element>(w[i + 1].value)));
        v.erase(v.begin() + static_cast<long>(i) + 1);
        push(std::move(v));
      }
      if (!w[i].is_constant() && !w[i + 1].is_constant() && w[i].value == -w[i + 1].value) {
        auto v = w;
        v.erase(v.begin() + static_cast<long>(i), v.begin() + static_cast<long>(i) + 2);
        push(std::move(v));
      }
    }
    if (!reducible) terminal.insert(w);
  }
  return terminal;
}

Outcome c6_normal_form() {
  Outcome o;
  auto G = FiniteGroupTable::from_perm_group(PermGroup(3, symmetric_generators(3)));
  std::vector<Element> S;
  for (const auto& p : symmetric_generators(3)) S.push_back(*G.find_perm(p));
  std::mt19937_64 rng(6006);
  for (int i = 0; i < 10000; ++i) {
    MixedWord w{{}, 2};
    const std::size_t len = rng() % 13;
    for (std::size_t j = 0; j < len; ++j) {
      if (rng() % 2 == 0) {
        w.letters.push_back(Letter::constant(rng() % G.size()));
      } else {
        long long v = 1 + static_cast<long long>(rng() % 2);
        w.letters.push_back(Letter::var(rng() % 2 ? v : -v));
      }
    }
    auto nf = normal_form(G, w);
    auto terminals = rewrite_all(G, w.letters);
    o.require(terminals.size() == 1 && *terminals.begin() == nf.letters,
              "case " + std::to_string(i) + ": normal form differs from rewriting");
    std::size_t sum = 0;
    for (const auto& syl : syllables(nf)) sum += fp_length(G, MixedWord{syl.letters, 2}, S);
    o.require(fp_length(G, nf, S) == sum, "case " + std::to_string(i) + ": length not additive");
  }
  o.note("10000 words over S3*F2, length <= 12");
  return o;
}

Outcome c7_free_product_certificate() {
  Outcome o;
  auto t0 = Clock::now();
  auto G = FiniteGroupTable::from_perm_group(PermGroup(3, symmetric_generators(3)));
  std::vector<Element> H{0, *G.find_perm(parse_perm("(1 2)"))};
  std::vector<Element> a{0}, b{*G.find_perm(parse_perm("(1 3)"))};
  auto cert = check_free_product_extension(G, H, a, b, 6);
  o.require(cert.passed, "certificate: " + join(cert.violations, "; "));
  o.require(cert.elements_in_G == H.size(), "L meets G in " +
                                                std::to_string(cert.elements_in_G) + " elements");
  o.require(cert.worst_z <= 3 * cert.worst_g, "Lipschitz ratio above 3");
  const double t = seconds_since(t0);
  o.require(t < 30.0, "took " + std::to_string(t) + " s");
  o.note(std::to_string(cert.elements) + " elements, worst ratio " +
         std::to_string(cert.worst_z) + "/" + std::to_string(cert.worst_g));
  return o;
}

FreeWord random_reduced(std::mt19937_64& rng, int k, std::size_t max_len) {
  FreeWord w;
  const std::size_t len = 1 + rng() % max_len;
  while (w.size() < len) {
    int l = static_cast<int>(rng() % k) + 1;
    if (rng() % 2) l = -l;
    if (!w.empty() && w.back() == -l) continue;
    w.push_back(l);
  }
  return w;
}

// All reduced products of at most `depth` generators or their inverses.
std::set<FreeWord> products(const std::vector<FreeWord>& gens, std::size_t depth) {
  std::vector<FreeWord> letters;
  for (const auto& g : gens) {
    letters.push_back(g);
    letters.push_back(free_inverse(g));
  }
  std::set<FreeWord> all{FreeWord{}};
  std::vector<FreeWord> frontier{FreeWord{}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<FreeWord> next;
    for (const auto& w : frontier)
      for (const auto& l : letters) {
        FreeWord p = free_mul(w, l);
        if (all.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return all;
}

// Certificate that w is outside H: the core graph with the unread suffix of
// w attached as a path of new vertices, each letter's partial injection then
// completed to a permutation by matching free sources to free targets in
// order. Generators of H read closed paths at 0 in the original graph, so
// they fix 0 in this action.
std::vector<std::vector<int>> separating_action(const CoreGraph& H, const FreeWord& w) {
  auto adj = H.adjacency();
  const int k = H.rank_of_free_group();
  int v = 0;
  for (int l : w) {
    if (adj[v][letter_rank(l)] < 0) {
      adj.emplace_back(2 * k, -1);
      const int fresh = static_cast<int>(adj.size()) - 1;
      adj[v][letter_rank(l)] = fresh;
      adj[fresh][letter_rank(-l)] = v;
    }
    v = adj[v][letter_rank(l)];
  }
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> perm;
  for (int y = 1; y <= k; ++y) {
    std::vector<int> p(n, -1);
    std::vector<bool> hit(n, false);
    for (int u = 0; u < n; ++u) {
      p[u] = adj[u][letter_rank(y)];
      if (p[u] >= 0) hit[p[u]] = true;
    }
    std::vector<int> free_targets;
    for (int u = 0; u < n; ++u)
      if (!hit[u]) free_targets.push_back(u);
    std::size_t next = 0;
    for (int u = 0; u < n; ++u)
      if (p[u] < 0) p[u] = free_targets[next++];
    perm.push_back(std::move(p));
  }
  return perm;
}

// Reads w from `start`, letter by letter.
int act(const std::vector<std::vector<int>>& perm, const FreeWord& w, int start) {
  int v = start;
  for (int l : w) {
    const auto& p = perm[std::abs(l) - 1];
    if (l > 0) {
      v = p[v];
    } else {
      v = static_cast<int>(std::find(p.begin(), p.end(), v) - p.begin());
    }
  }
  return v;
}

Outcome c8_stallings() {
  Outcome o;
  std::mt19937_64 rng(8008);
  std::size_t finite = 0, members = 0, accepted = 0, accepted_long = 0, rejected = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<FreeWord> gens;
    for (int i = 0, n = 1 + static_cast<int>(rng() % 3); i < n; ++i)
      gens.push_back(random_reduced(rng, 2, 6));
    auto H = CoreGraph::from_words(gens, 2);
    const std::string tag = "subgroup " + std::to_string(trial) + ": ";
    auto prods = products(gens, 6);
    for (const auto& w : prods) {
      ++members;
      o.require(H.contains(w), tag + "product " + to_letters(w) + " rejected");
    }
    // Rejected words up to length 6 need a finite quotient in which every
    // generator fixes the basepoint and the word does not.
    for (std::size_t len = 0; len <= 6; ++len)
      for (const auto& w : reduced_words_of_length(2, len)) {
        if (H.contains(w)) {
          ++accepted;
          if (!prods.contains(w)) ++accepted_long;
        } else {
          ++rejected;
          o.require(!prods.contains(w), tag + "product " + to_letters(w) + " rejected");
          auto action = separating_action(H, w);
          bool certified = act(action, w, 0) != 0;
          for (const auto& g : gens) certified = certified && act(action, g, 0) == 0;
          o.require(certified, tag + to_letters(w) + " rejected without certificate");
        }
      }
    auto index = H.index();
    auto prefix = H.coset_action_prefix(H.num_vertices() + 8);
    if (index) {
      ++finite;
      o.require(prefix.saturated && prefix.representatives.size() == *index,
                tag + "finite index without a saturated prefix of that size");
    } else {
      o.require(!prefix.saturated, tag + "infinite index but the prefix saturates");
    }
  }
  o.note("200 subgroups, " + std::to_string(members) + " products accepted, " +
         std::to_string(rejected) + " short words rejected with a quotient certificate, " +
         std::to_string(accepted) + " accepted (" + std::to_string(accepted_long) +
         " need more than 6 generators), " + std::to_string(finite) + " of finite index");
  return o;
}

Outcome c9_htbuilder() {
  Outcome o;
  auto t0 = Clock::now();
  HtConfig config;
  config.rank = 2;
  config.stages = 6;
  config.seed = 0;
  const std::string text = report_to_json(run_builder(config));
  const std::string again = report_to_json(run_builder(config));
  o.require(text == again, "re-run not byte-identical");
  auto v = verify_report_json(text);
  o.require(v.ok, "verify_report: " + join(v.failures, "; "));

  auto j = nlohmann::json::parse(text);
  o.require(j.at("completed").get<bool>(), "run did not complete");
  o.require(j.at("config").contains("seed"), "seed not recorded");
  o.require(j.at("stages").size() >= 6, "fewer than 6 stages");

  std::vector<FreeWord> prev_gens;
  struct Kept {
    std::vector<FreeWord> a, b;
    FreeWord t;
  };
  std::vector<Kept> kept;
  for (const auto& s : j.at("stages")) {
    const std::string tag = "stage " + std::to_string(s.at("index").get<std::size_t>()) + ": ";
    auto gens = s.at("H_generators").get<std::vector<FreeWord>>();
    auto H = CoreGraph::from_words(gens, 2);
    for (const auto& g : prev_gens) o.require(H.contains(g), tag + "chain inclusion");
    for (const auto& w : s.at("B").get<std::vector<FreeWord>>())
      o.require(!H.contains(w), tag + "B-word " + to_letters(w) + " in H");
    o.require(!H.index().has_value(), tag + "finite index");
    auto a = s.at("a").get<std::vector<FreeWord>>();
    auto b = s.at("b").get<std::vector<FreeWord>>();
    if (!s.at("t").is_null()) kept.push_back({a, b, s.at("t").get<FreeWord>()});
    for (const auto& w : kept)
      for (std::size_t i = 0; i < w.a.size(); ++i)
        o.require(H.contains(free_mul(free_inverse(w.b[i]), free_mul(w.t, w.a[i]))),
                  tag + "witness coset t a H != b H");
    prev_gens = std::move(gens);
  }
  const double t = seconds_since(t0);
  o.require(t < 300.0, "took " + std::to_string(t) + " s");
  o.note(std::to_string(j.at("stages").size()) + " stages, " + std::to_string(kept.size()) +
         " extensions, " + std::to_string(text.size()) + " report bytes");
  return o;
}

FinitaryPerm random_perm(std::mt19937_64& rng, Point max_point) {
  std::vector<Point> pts(max_point);
  std::iota(pts.begin(), pts.end(), Point{1});
  std::shuffle(pts.begin(), pts.end(), rng);
  std::map<Point, Point> m;
  for (Point i = 0; i < max_point; ++i) m[i + 1] = pts[i];
  return FinitaryPerm::from_mapping(m);
}

Outcome c10_nonrel() {
  Outcome o;
  std::vector<SeparatorFactor> ex{{LazyPerm::pairwise_swapper(), 1}};
  std::vector<Point> X{1, 2};
  auto r0 = construct_separating_permutation(FinitaryPerm{}, X, ex);
  o.require(r0.t == parse_perm("(3 5)"), "worked example gave " + to_string(r0.t));

  const std::vector<LazyPerm> family{LazyPerm::pairwise_swapper(), LazyPerm::shifted_swapper(),
                                     LazyPerm::triple_rotator()};
  std::mt19937_64 rng(1010);
  for (int trial = 0; trial < 1000; ++trial) {
    auto s = random_perm(rng, 12);
    std::vector<Point> Xs;
    for (Point p = 1; p <= 12; ++p)
      if (rng() % 3 == 0) Xs.push_back(p);
    std::vector<SeparatorFactor> f;
    for (int i = 0, k = 1 + static_cast<int>(rng() % 4); i < k; ++i) {
      long long alpha = static_cast<long long>(rng() % 7) - 3;
      if (alpha == 0) alpha = 2;
      f.push_back({family[rng() % family.size()], alpha});
    }
    auto r = construct_separating_permutation(s, Xs, f);
    for (Point x : Xs) o.require(r.t(x) == s(x), "t differs from s on X");
    // Apply t^alpha_i then a_i directly, independent of trace_factors.
    Point p = r.plan.n0;
    for (const auto& fi : f) {
      p = power(r.t, fi.alpha)(p);
      p = fi.a(p);
    }
    o.require(p != r.plan.n0, "trial " + std::to_string(trial) + ": product fixes n0");
  }
  o.note("t = " + to_string(r0.t) + " for the worked example; 1000 random inputs");
  return o;
}

Outcome c11_alt_sentence() {
  Outcome o;
  std::mt19937_64 rng(1111);
  int checked = 0;
  while (checked < 10000) {
    auto p = random_perm(rng, 30);
    if (!is_even(p)) p = p * FinitaryPerm::transposition(1, 2);
    o.require(is_even(p), "parity fix-up");
    o.require(check_alt_sentence(p), "sentence fails for " + to_string(p));
    ++checked;
  }
  o.note("10000 even permutations of {1..30}");
  return o;
}

Outcome c12_htA() {
  Outcome o;
  auto S3 = FiniteGroupTable::from_perm_group(PermGroup(3, symmetric_generators(3)));
  std::vector<Element> s3gens;
  for (const auto& p : symmetric_generators(3)) s3gens.push_back(*S3.find_perm(p));
  const std::vector<std::pair<FiniteGroupTable, std::vector<Element>>> orders{
      {FiniteGroupTable::cyclic(2), {1}},
      {FiniteGroupTable::cyclic(3), {1}},
      {FiniteGroupTable::cyclic(4), {1}},
      {S3, s3gens}};
  std::vector<std::string> seen;
  for (const auto& [Q, xs] : orders) {
    auto G = prop_htA_generators(Q, xs);
    o.require(G.order() == factorial(Q.size()),
              "|Q|=" + std::to_string(Q.size()) + " gives order " + std::to_string(G.order()));
    seen.push_back(std::to_string(G.order()));
  }
  std::size_t words = 0, groups = 0;
  for (const auto& cg : bundled_corpus()) {
    auto P = cg.group();
    if (P.order() > 8) continue;
    ++groups;
    auto Q = FiniteGroupTable::from_perm_group(P);
    std::vector<Element> xs;
    for (const auto& g : P.generators())
      if (!g.is_identity()) xs.push_back(*Q.find_perm(g));
    if (xs.empty()) continue;
    for (Element g = 0; g < Q.size(); ++g)
      for (Element h = 0; h < Q.size(); ++h) {
        if (g == h) continue;
        ++words;
        auto t = evaluate_htA_word(Q, xs, transposition_factorization(Q, xs, g, h));
        o.require(t == FinitaryPerm::transposition(g + 1, h + 1),
                  cg.name + ": factorization of (" + Q.label(g) + ", " + Q.label(h) + ")");
      }
  }
  o.note("orders " + join(seen, ", ") + "; " + std::to_string(words) + " factorizations over " +
         std::to_string(groups) + " groups");
  return o;
}

Outcome c13_marked() {
  Outcome o;
  const fs::path dir = kSource / "data" / "marked";
  auto load = [&](const char* name) {
    return MarkedGroup::from_corpus(load_corpus_group(dir / (std::string(name) + ".grp")));
  };
  auto c2 = load("c2"), c3 = load("c3"), trivial = load("trivial");
  auto d = marked_distance(c2, c3, 10);
  o.require(d.kind == MarkedDistance::Kind::Exact && d.length == 2, "d(C2,C3) = " + d.to_string());

  // Every marked file plus corpus groups of order <= 120 marked by their
  // generators, grouped by rank.
  std::vector<std::pair<std::string, MarkedGroup>> pool;
  for (const auto& cg : load_corpus(dir)) pool.emplace_back(cg.name, MarkedGroup::from_corpus(cg));
  for (const auto& cg : bundled_corpus())
    if (cg.group().order() <= 120) pool.emplace_back(cg.name, MarkedGroup::from_corpus(cg));
  std::map<std::size_t, std::vector<std::size_t>> by_rank;
  for (std::size_t i = 0; i < pool.size(); ++i) by_rank[pool[i].second.k()].push_back(i);

  std::size_t triples = 0, pairs = 0;
  for (auto& [k, idx] : by_rank) {
    MarkedGroup triv(FiniteGroupTable::cyclic(1), std::vector<Element>(k, 0));
    const std::size_t m = idx.size();
    std::vector<std::vector<MarkedDistance>> dist(m);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& [name, G] = pool[idx[i]];
      auto dt = marked_distance(G, triv, 10);
      if (G.group().size() > 1)
        o.require(dt.kind == MarkedDistance::Kind::Exact && dt.length == 1,
                  name + ": distance to the trivial group " + dt.to_string());
      for (std::size_t j = 0; j < m; ++j) {
        dist[i].push_back(marked_distance(G, pool[idx[j]].second, 12));
        ++pairs;
      }
      o.require(dist[i][i].kind == MarkedDistance::Kind::Zero, name + ": d(G,G) != 0");
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        o.require(dist[i][j].to_string() == dist[j][i].to_string(), "asymmetric");
        for (std::size_t l = 0; l < m; ++l) {
          const auto& x = dist[i][l];
          const auto& y = dist[i][j];
          const auto& z = dist[j][l];
          if (x.kind == MarkedDistance::Kind::UpperBound ||
              y.kind == MarkedDistance::Kind::UpperBound ||
              z.kind == MarkedDistance::Kind::UpperBound)
            continue;
          ++triples;
          o.require(x.value() <= std::max(y.value(), z.value()),
                    pool[idx[i]].first + "," + pool[idx[j]].first + "," + pool[idx[l]].first +
                        ": ultrametric inequality");
        }
      }
  }
  auto one = marked_distance(c2, trivial, 10);
  o.require(one.value() == 1.0, "d(C2, trivial) = " + one.to_string());
  o.note("d(C2,C3)=" + d.to_string() + ", " + std::to_string(pool.size()) + " marked groups, " +
         std::to_string(pairs) + " pairs, " + std::to_string(triples) + " exact triples");
  return o;
}

Outcome c14_burnside() {
  Outcome o;
  // Largest k with 1..k all dividing n, straight from the definition.
  auto oracle = [](std::uint64_t n) {
    std::uint64_t k = 0;
    while (n % (k + 1) == 0) ++k;
    return k;
  };
  for (std::uint64_t n = 1; n < 20000; n += 2)
    o.require(burnside_td_upper_bound(n) == 1, "n=" + std::to_string(n));
  for (std::uint64_t n = 1; n < 5000; ++n)
    o.require(burnside_td_upper_bound(n) == oracle(n), "oracle at n=" + std::to_string(n));
  o.require(burnside_td_upper_bound(12) == 4, "n=12");
  std::uint64_t l = 1;
  for (std::uint64_t k = 1; k <= 8; ++k) {
    l = std::lcm(l, k);
    o.require(burnside_td_upper_bound(l) >= k, "lcm(1.." + std::to_string(k) + ")");
  }
  o.note("odd n -> 1, 12 -> 4, lcm(1..k) -> >= k for k <= 8");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"classical transitivity of Sn and An", c1_classical},
      {"finite transitivity degree", c2_td_finite},
      {"affine groups", c3_affine},
      {"primitivity and normal subgroup lemmas on the corpus", c4_lemmas},
      {"mixed identities", c5_mixed_identities},
      {"free product normal form", c6_normal_form},
      {"free product extension certificate", c7_free_product_certificate},
      {"subgroup graphs", c8_stallings},
      {"certified stage construction", c9_htbuilder},
      {"separating permutation", c10_nonrel},
      {"alternating group sentence", c11_alt_sentence},
      {"transposition generation", c12_htA},
      {"marked group metric", c13_marked},
      {"Burnside bound", c14_burnside},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double t = seconds_since(t0);
    std::string detail = o.pass ? join(o.notes, "; ") : join(o.failures, "; ");
    std::printf("%s C%zu %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, t, detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed;
}
