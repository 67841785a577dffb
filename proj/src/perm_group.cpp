#include "tdlab/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "tdlab/error.hpp"

namespace tdlab {

// ---------------------------------------------------------------- DensePerm

DensePerm DensePerm::identity(std::size_t n) {
  std::vector<std::uint8_t> v(n);
  std::iota(v.begin(), v.end(), std::uint8_t{0});
  return DensePerm(std::move(v));
}

DensePerm DensePerm::from_finitary(const FinitaryPerm& p, std::size_t n) {
  if (p.max_moved() > n)
    throw PreconditionError("permutation " + to_string(p) +
                            " moves points outside {1.." + std::to_string(n) +
                            "}");
  DensePerm d = identity(n);
  for (const auto& [from, to] : p.mapping())
    d.images_[from - 1] = static_cast<std::uint8_t>(to - 1);
  return d;
}

DensePerm DensePerm::from_images(std::vector<std::uint8_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto x : images) {
    if (x >= images.size() || seen[x])
      throw PreconditionError("image list is not a permutation");
    seen[x] = true;
  }
  return DensePerm(std::move(images));
}

bool DensePerm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

DensePerm DensePerm::inverse() const {
  std::vector<std::uint8_t> v(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    v[images_[i]] = static_cast<std::uint8_t>(i);
  return DensePerm(std::move(v));
}

FinitaryPerm DensePerm::to_finitary() const {
  std::map<Point, Point> m;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) m[i + 1] = Point{images_[i]} + 1;
  return FinitaryPerm::from_mapping(m);
}

DensePerm operator*(const DensePerm& p, const DensePerm& q) {
  std::vector<std::uint8_t> v(q.images_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.images_[q.images_[i]];
  return DensePerm(std::move(v));
}

std::size_t DensePermHash::operator()(const DensePerm& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : p.images()) h = (h ^ x) * 1099511628211ULL;
  return h;
}

// ---------------------------------------------------------------- PermGroup

namespace {

std::vector<DensePerm> densify(const std::vector<FinitaryPerm>& gens,
                               std::size_t n) {
  std::vector<DensePerm> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(DensePerm::from_finitary(g, n));
  return out;
}

std::vector<FinitaryPerm> sparsify(const std::vector<DensePerm>& gens) {
  std::vector<FinitaryPerm> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.to_finitary());
  return out;
}

}  // namespace

PermGroup::PermGroup(std::size_t domain_size,
                     std::vector<FinitaryPerm> generators,
                     std::size_t max_domain)
    : n_(domain_size), gens_(std::move(generators)) {
  if (n_ > max_domain || n_ > 255)
    throw BoundExceeded("domain size " + std::to_string(n_) +
                        " exceeds the configured bound " +
                        std::to_string(std::min<std::size_t>(max_domain, 255)));
  dense_gens_ = densify(gens_, n_);
  build_chain();
}

PermGroup::PermGroup(std::size_t domain_size, std::vector<DensePerm> generators)
    : n_(domain_size), dense_gens_(std::move(generators)) {
  if (n_ > 255) throw BoundExceeded("domain size exceeds 255");
  for (const auto& g : dense_gens_)
    if (g.size() != n_)
      throw PreconditionError("generator degree differs from domain size");
  gens_ = sparsify(dense_gens_);
  build_chain();
}

void PermGroup::build_chain() {
  levels_.assign(n_, Level{});
  for (std::size_t i = 0; i < n_; ++i) {
    levels_[i].base = i;
    levels_[i].orbit = {i};
    levels_[i].transversal.assign(n_, DensePerm{});
    levels_[i].transversal[i] = DensePerm::identity(n_);
  }
  for (const auto& g : dense_gens_) {
    DensePerm r = strip(g, 0);
    if (!r.is_identity()) add_generator(0, r);
  }
}

DensePerm PermGroup::strip(DensePerm g, std::size_t from) const {
  for (std::size_t i = from; i < n_; ++i) {
    const Level& L = levels_[i];
    std::size_t p = g[L.base];
    if (L.transversal[p].size() == 0) return g;
    if (p != L.base) g = L.transversal[p].inverse() * g;
  }
  return g;
}

// Incremental Schreier-Sims. Invariant: for every level, each Schreier
// generator built from its orbit and generators strips to the identity
// through the deeper levels.
void PermGroup::add_generator(std::size_t level, DensePerm g) {
  Level& L = levels_[level];
  L.gens.push_back(std::move(g));
  const std::size_t new_gen = L.gens.size() - 1;
  const std::size_t old_orbit = L.orbit.size();

  for (std::size_t j = 0; j < L.orbit.size(); ++j) {
    std::size_t p = L.orbit[j];
    for (std::size_t s = 0; s < L.gens.size(); ++s) {
      if (j < old_orbit && s != new_gen) continue;
      std::size_t q = L.gens[s][p];
      if (L.transversal[q].size() == 0) {
        L.transversal[q] = L.gens[s] * L.transversal[p];
        L.orbit.push_back(q);
      }
    }
  }

  if (level + 1 >= n_) return;
  for (std::size_t j = 0; j < L.orbit.size(); ++j) {
    for (std::size_t s = 0; s < L.gens.size(); ++s) {
      if (j < old_orbit && s != new_gen) continue;
      std::size_t p = L.orbit[j];
      std::size_t q = L.gens[s][p];
      DensePerm h =
          levels_[level].transversal[q].inverse() *
          (levels_[level].gens[s] * levels_[level].transversal[p]);
      DensePerm r = strip(std::move(h), level + 1);
      if (!r.is_identity()) add_generator(level + 1, std::move(r));
    }
  }
}

std::uint64_t PermGroup::order() const {
  std::uint64_t order = 1;
  for (const auto& L : levels_) {
    if (__builtin_mul_overflow(order, static_cast<std::uint64_t>(L.orbit.size()),
                               &order))
      throw BoundExceeded("group order does not fit in 64 bits");
  }
  return order;
}

bool PermGroup::contains(const FinitaryPerm& p) const {
  if (p.max_moved() > n_) return false;
  return contains(DensePerm::from_finitary(p, n_));
}

bool PermGroup::contains(const DensePerm& p) const {
  if (p.size() != n_) return false;
  return strip(p, 0).is_identity();
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(n_);
  for (const auto& L : levels_) out.push_back(L.orbit.size());
  return out;
}

std::vector<DensePerm> PermGroup::point_stabilizer_generators() const {
  if (n_ < 2) return {};
  return levels_[1].gens;
}

DensePerm PermGroup::transversal_element(Point point) const {
  if (point == 0 || point > n_ || levels_[0].transversal[point - 1].size() == 0)
    throw PreconditionError("point " + std::to_string(point) +
                            " is not in the orbit of 1");
  return levels_[0].transversal[point - 1];
}

std::vector<Point> PermGroup::orbit(Point p) const {
  if (p == 0 || p > n_) throw PreconditionError("point outside the domain");
  std::vector<bool> seen(n_, false);
  std::vector<std::size_t> queue{p - 1};
  seen[p - 1] = true;
  for (std::size_t j = 0; j < queue.size(); ++j)
    for (const auto& g : dense_gens_) {
      std::size_t q = g[queue[j]];
      if (!seen[q]) {
        seen[q] = true;
        queue.push_back(q);
      }
    }
  std::vector<Point> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (seen[i]) out.push_back(i + 1);
  return out;
}

bool PermGroup::is_transitive() const {
  return n_ == 0 || levels_[0].orbit.size() == n_;
}

std::vector<DensePerm> PermGroup::elements(std::uint64_t limit) const {
  std::uint64_t ord = order();
  if (ord > limit)
    throw BoundExceeded("group order " + std::to_string(ord) +
                        " exceeds the enumeration bound " +
                        std::to_string(limit));
  std::vector<DensePerm> out{DensePerm::identity(n_)};
  out.reserve(ord);
  // Deepest level first, so each new level multiplies on the left.
  for (std::size_t i = n_; i-- > 0;) {
    const Level& L = levels_[i];
    if (L.orbit.size() == 1) continue;
    std::vector<DensePerm> next;
    next.reserve(out.size() * L.orbit.size());
    std::vector<std::size_t> pts = L.orbit;
    std::sort(pts.begin(), pts.end());
    for (std::size_t p : pts)
      for (const auto& h : out) next.push_back(L.transversal[p] * h);
    out = std::move(next);
  }
  return out;
}

// ------------------------------------------------------- subgroup utilities

bool is_subgroup(const PermGroup& a, const PermGroup& b) {
  if (a.domain_size() != b.domain_size()) return false;
  for (const auto& g : a.dense_generators())
    if (!b.contains(g)) return false;
  return true;
}

bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.order() == b.order() && is_subgroup(a, b);
}

PermGroup generated_subgroup(std::size_t n, std::span<const DensePerm> gens) {
  std::vector<DensePerm> kept;
  PermGroup current(n, kept);
  for (const auto& g : gens) {
    if (current.contains(g)) continue;
    kept.push_back(g);
    current = PermGroup(n, kept);
  }
  return current;
}

PermGroup normal_closure(const PermGroup& G, std::span<const DensePerm> gens) {
  const std::size_t n = G.domain_size();
  std::vector<DensePerm> kept;
  PermGroup current(n, kept);
  std::deque<DensePerm> queue(gens.begin(), gens.end());
  // Conjugating the generators of the closure by the generators of G suffices.
  while (!queue.empty()) {
    DensePerm g = std::move(queue.front());
    queue.pop_front();
    if (current.contains(g)) continue;
    kept.push_back(g);
    current = PermGroup(n, kept);
    for (const auto& s : G.dense_generators())
      queue.push_back(s.inverse() * g * s);
  }
  return current;
}

bool is_elementary_abelian_2_group(const PermGroup& N) {
  const auto& gens = N.dense_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!(gens[i] * gens[i]).is_identity()) return false;
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  }
  return true;
}

// ------------------------------------------------------------ transitivity

bool is_k_transitive(const PermGroup& G, std::size_t k) {
  const std::size_t n = G.domain_size();
  if (k < 1 || k > n)
    throw PreconditionError("k = " + std::to_string(k) +
                            " must satisfy 1 <= k <= " + std::to_string(n));
  // The orbit of the tuple (1, ..., k) has size equal to the product of the
  // first k basic orbit sizes; the i-th factor is at most n - i.
  auto sizes = G.basic_orbit_sizes();
  for (std::size_t i = 0; i < k; ++i)
    if (sizes[i] != n - i) return false;
  return true;
}

std::size_t transitivity_of_action(const PermGroup& G) {
  std::size_t k = 0;
  while (k < G.domain_size() && is_k_transitive(G, k + 1)) ++k;
  return k;
}

// ------------------------------------------------------------------- blocks

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

std::optional<BlockSystem> minimal_block_system(const PermGroup& G) {
  if (!G.is_transitive())
    throw PreconditionError("block systems need a transitive group");
  const std::size_t n = G.domain_size();
  std::optional<BlockSystem> best;
  std::size_t best_size = n;
  for (std::size_t beta = 1; beta < n; ++beta) {
    UnionFind uf(n);
    uf.unite(0, beta);
    std::vector<std::pair<std::size_t, std::size_t>> queue{{0, beta}};
    for (std::size_t j = 0; j < queue.size(); ++j) {
      auto [x, y] = queue[j];
      for (const auto& g : G.dense_generators())
        if (uf.unite(g[x], g[y])) queue.emplace_back(g[x], g[y]);
    }
    std::size_t block_size = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (uf.find(i) == uf.find(0)) ++block_size;
    if (block_size >= best_size) continue;
    best_size = block_size;
    std::map<std::size_t, std::vector<Point>> classes;
    for (std::size_t i = 0; i < n; ++i) classes[uf.find(i)].push_back(i + 1);
    BlockSystem bs;
    for (auto& [root, pts] : classes) bs.blocks.push_back(std::move(pts));
    best = std::move(bs);
  }
  return best;
}

// -------------------------------------------------------- normal subgroups

std::vector<PermGroup> normal_subgroups(const PermGroup& G,
                                        std::uint64_t max_order) {
  const std::size_t n = G.domain_size();
  auto elems = G.elements(max_order);
  std::unordered_map<DensePerm, std::size_t, DensePermHash> index;
  index.reserve(elems.size() * 2);
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);

  std::vector<PermGroup> found;
  auto add_unique = [&](PermGroup N) -> bool {
    for (const auto& M : found)
      if (same_group(M, N)) return false;
    found.push_back(std::move(N));
    return true;
  };

  add_unique(PermGroup(n, std::vector<DensePerm>{}));
  std::vector<bool> classified(elems.size(), false);
  std::vector<DensePerm> ginv;
  for (const auto& s : G.dense_generators()) ginv.push_back(s.inverse());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (classified[i]) continue;
    std::vector<std::size_t> cls{i};
    classified[i] = true;
    for (std::size_t j = 0; j < cls.size(); ++j) {
      for (std::size_t s = 0; s < ginv.size(); ++s) {
        std::size_t c =
            index.at(ginv[s] * elems[cls[j]] * G.dense_generators()[s]);
        if (!classified[c]) {
          classified[c] = true;
          cls.push_back(c);
        }
      }
    }
    if (elems[i].is_identity()) continue;
    std::vector<DensePerm> members;
    for (auto c : cls) members.push_back(elems[c]);
    add_unique(generated_subgroup(n, members));
  }

  // Every normal subgroup is the join of the class closures it contains.
  for (std::size_t a = 0; a < found.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (is_subgroup(found[a], found[b]) || is_subgroup(found[b], found[a]))
        continue;
      std::vector<DensePerm> gens = found[a].dense_generators();
      gens.insert(gens.end(), found[b].dense_generators().begin(),
                  found[b].dense_generators().end());
      add_unique(generated_subgroup(n, gens));
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const PermGroup& x, const PermGroup& y) {
                     return x.order() < y.order();
                   });
  return found;
}

namespace {

std::uint64_t intersection_order(const PermGroup& A, const PermGroup& B,
                                 std::uint64_t max_order) {
  const PermGroup& small = A.order() <= B.order() ? A : B;
  const PermGroup& large = A.order() <= B.order() ? B : A;
  std::uint64_t count = 0;
  for (const auto& g : small.elements(max_order))
    if (large.contains(g)) ++count;
  return count;
}

}  // namespace

std::optional<std::pair<PermGroup, PermGroup>> is_product_like(
    const PermGroup& G, std::uint64_t max_order) {
  auto normals = normal_subgroups(G, max_order);
  for (std::size_t a = 0; a < normals.size(); ++a) {
    if (normals[a].order() == 1) continue;
    for (std::size_t b = a + 1; b < normals.size(); ++b) {
      if (normals[b].order() == 1) continue;
      if (intersection_order(normals[a], normals[b], max_order) == 1)
        return std::make_pair(normals[a], normals[b]);
    }
  }
  return std::nullopt;
}

// ----------------------------------------------------------- lemma helpers

bool point_stabilizer_is_maximal(const PermGroup& G, Point point) {
  const std::size_t n = G.domain_size();
  if (point == 0 || point > n) throw PreconditionError("point outside domain");
  // Conjugate the chain so the stabilizer of `point` is read off level 1.
  std::vector<std::uint8_t> swap_images(n);
  std::iota(swap_images.begin(), swap_images.end(), std::uint8_t{0});
  std::swap(swap_images[0], swap_images[point - 1]);
  DensePerm sigma = DensePerm::from_images(swap_images);
  std::vector<DensePerm> conj;
  for (const auto& g : G.dense_generators()) conj.push_back(sigma * g * sigma);
  PermGroup H(n, conj);
  std::vector<DensePerm> stab = H.point_stabilizer_generators();
  for (auto& s : stab) s = sigma * s * sigma;

  const std::uint64_t order = G.order();
  // <Stab, h> depends only on the coset h Stab, and those cosets are indexed
  // by the image of `point`.
  for (Point image : G.orbit(point)) {
    if (image == point) continue;
    DensePerm h = sigma * H.transversal_element(
                              sigma[image - 1] + 1) * sigma;
    std::vector<DensePerm> gens = stab;
    gens.push_back(h);
    if (generated_subgroup(n, gens).order() != order) return false;
  }
  return true;
}

PermGroup centralizer(const PermGroup& G, const PermGroup& R,
                      std::uint64_t max_order) {
  std::vector<DensePerm> members;
  for (const auto& g : G.elements(max_order)) {
    bool commutes = true;
    for (const auto& r : R.dense_generators())
      if (g * r != r * g) {
        commutes = false;
        break;
      }
    if (commutes) members.push_back(g);
  }
  return generated_subgroup(G.domain_size(), members);
}

bool is_minimal_normal(const PermGroup& G, const PermGroup& R,
                       std::uint64_t max_order) {
  if (R.order() == 1) return false;
  for (const auto& N : normal_subgroups(G, max_order)) {
    if (N.order() == 1 || N.order() >= R.order()) continue;
    if (is_subgroup(N, R)) return false;
  }
  return true;
}

// ----------------------------------------------------------------- Cameron

CameronReport verify_cameron(const PermGroup& G, std::size_t k,
                             std::uint64_t max_order) {
  if (k < 2) throw PreconditionError("verify_cameron needs k >= 2");
  if (k > G.domain_size() || !is_k_transitive(G, k))
    throw PreconditionError("group is not " + std::to_string(k) +
                            "-transitive");
  CameronReport report;
  report.k = k;
  report.group_order = G.order();
  for (const auto& N : normal_subgroups(G, max_order)) {
    if (N.order() == 1) continue;
    CameronEntry e;
    e.order = N.order();
    e.transitivity = transitivity_of_action(N);
    if (e.transitivity >= k - 1)
      e.branch = "transitive-k-1";
    else if (k == 3 && is_elementary_abelian_2_group(N))
      e.branch = "elementary-abelian-2";
    else {
      e.branch = "violation";
      report.passed = false;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

// ----------------------------------------------- finite transitivity degree

namespace {

using Bits = std::vector<std::uint64_t>;

bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1; }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
std::size_t popcount(const Bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

struct Table {
  std::size_t size = 0;
  std::size_t identity = 0;
  std::vector<std::size_t> mul;  // mul[a * size + b] = a*b
  std::vector<std::size_t> inv;
  std::size_t operator()(std::size_t a, std::size_t b) const {
    return mul[a * size + b];
  }
};

Table make_table(const std::vector<DensePerm>& elems) {
  Table t;
  t.size = elems.size();
  std::unordered_map<DensePerm, std::size_t, DensePermHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  t.mul.resize(t.size * t.size);
  t.inv.resize(t.size);
  for (std::size_t a = 0; a < t.size; ++a) {
    if (elems[a].is_identity()) t.identity = a;
    t.inv[a] = index.at(elems[a].inverse());
    for (std::size_t b = 0; b < t.size; ++b)
      t.mul[a * t.size + b] = index.at(elems[a] * elems[b]);
  }
  return t;
}

Bits closure(const Table& t, const std::vector<std::size_t>& gens) {
  Bits b((t.size + 63) / 64, 0);
  std::vector<std::size_t> queue{t.identity};
  set_bit(b, t.identity);
  for (std::size_t j = 0; j < queue.size(); ++j)
    for (auto s : gens) {
      std::size_t x = t(queue[j], s);
      if (!test_bit(b, x)) {
        set_bit(b, x);
        queue.push_back(x);
      }
    }
  return b;
}

}  // namespace

TransitivityDegreeReport transitivity_degree_finite(const PermGroup& G,
                                                    std::uint64_t budget) {
  if (G.order() > budget)
    throw BoundExceeded("group order " + std::to_string(G.order()) +
                        " exceeds the subgroup enumeration budget " +
                        std::to_string(budget));
  auto elems = G.elements(budget);
  std::sort(elems.begin(), elems.end());
  const Table t = make_table(elems);
  const std::size_t m = t.size;

  // Subgroups: cyclic subgroups closed under pairwise joins.
  std::map<Bits, std::vector<std::size_t>> subgroups;  // bits -> generators
  for (std::size_t g = 0; g < m; ++g) subgroups.emplace(closure(t, {g}), std::vector<std::size_t>{g});
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::pair<Bits, std::vector<std::size_t>>> current(
        subgroups.begin(), subgroups.end());
    for (std::size_t a = 0; a < current.size(); ++a)
      for (std::size_t b = a + 1; b < current.size(); ++b) {
        std::vector<std::size_t> gens = current[a].second;
        gens.insert(gens.end(), current[b].second.begin(),
                    current[b].second.end());
        Bits j = closure(t, gens);
        if (subgroups.emplace(std::move(j), std::move(gens)).second) grew = true;
      }
  }

  std::vector<std::size_t> ggens;
  for (const auto& s : G.dense_generators())
    ggens.push_back(static_cast<std::size_t>(
        std::lower_bound(elems.begin(), elems.end(), s) - elems.begin()));

  TransitivityDegreeReport report;
  report.group_order = m;
  report.subgroups = subgroups.size();
  for (const auto& [H, hgens] : subgroups) {
    // Core: intersection of all conjugates g H g^-1.
    Bits core = H;
    for (std::size_t g = 0; g < m && popcount(core) > 1; ++g) {
      Bits conj((m + 63) / 64, 0);
      for (std::size_t h = 0; h < m; ++h)
        if (test_bit(H, h)) set_bit(conj, t(t(g, h), t.inv[g]));
      for (std::size_t w = 0; w < core.size(); ++w) core[w] &= conj[w];
    }
    if (popcount(core) != 1) continue;
    ++report.core_free_subgroups;

    // Left cosets gH, labelled by first appearance in element order.
    std::vector<std::size_t> coset_of(m, SIZE_MAX);
    std::size_t cosets = 0;
    for (std::size_t g = 0; g < m; ++g) {
      if (coset_of[g] != SIZE_MAX) continue;
      for (std::size_t h = 0; h < m; ++h)
        if (test_bit(H, h)) coset_of[t(g, h)] = cosets;
      ++cosets;
    }
    if (cosets > 255) continue;
    std::vector<std::size_t> rep(cosets);
    for (std::size_t g = m; g-- > 0;) rep[coset_of[g]] = g;
    std::vector<DensePerm> action;
    for (auto s : ggens) {
      std::vector<std::uint8_t> img(cosets);
      for (std::size_t c = 0; c < cosets; ++c)
        img[c] = static_cast<std::uint8_t>(coset_of[t(s, rep[c])]);
      action.push_back(DensePerm::from_images(std::move(img)));
    }
    PermGroup A(cosets, action);
    std::size_t k = transitivity_of_action(A);
    if (k > report.degree ||
        (k == report.degree && report.best_action_degree == 0)) {
      report.degree = k;
      report.best_action_degree = cosets;
    }
  }
  return report;
}

std::uint64_t burnside_td_upper_bound(std::uint64_t n) {
  if (n == 0) throw PreconditionError("n must be positive");
  std::uint64_t k = 1;
  while (n % (k + 1) == 0) ++k;
  return k;
}

}  // namespace tdlab
