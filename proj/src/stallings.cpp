#include "tdlab/stallings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "tdlab/error.hpp"

namespace tdlab {

namespace {

int dir_of(int letter) { return letter_rank(letter); }
int inverse_dir(int d) { return d ^ 1; }

}  // namespace

// Union-find folding. Edges are inserted one at a time; a clash between two
// edges leaving a vertex in the same direction queues a vertex merge, and a
// merge re-inserts the absorbed vertex's edges at the surviving vertex.
class Folder {
 public:
  explicit Folder(int k) : k_(k) { new_vertex(); }

  Folder(int k, const std::vector<std::vector<int>>& adj) : k_(k) {
    for (std::size_t v = 0; v < adj.size(); ++v) new_vertex();
    for (std::size_t v = 0; v < adj.size(); ++v)
      for (int d = 0; d < 2 * k_; ++d) adj_[v][d] = adj[v][d];
  }

  int new_vertex() {
    parent_.push_back(static_cast<int>(parent_.size()));
    adj_.emplace_back(2 * k_, -1);
    return static_cast<int>(parent_.size()) - 1;
  }

  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }

  void add_edge(int u, int letter, int v) {
    u = find(u);
    v = find(v);
    link(u, dir_of(letter), v);
    link(v, inverse_dir(dir_of(letter)), u);
    settle();
  }

  // Path from the basepoint reading w, closed at the basepoint.
  std::vector<std::tuple<int, int, int>> loop_edges(const FreeWord& w) {
    std::vector<std::tuple<int, int, int>> edges;
    int prev = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int next = i + 1 == w.size() ? 0 : new_vertex();
      edges.emplace_back(prev, w[i], next);
      prev = next;
    }
    return edges;
  }

  CoreGraph finish() {
    const int n = static_cast<int>(parent_.size());
    std::vector<std::vector<int>> adj(n, std::vector<int>(2 * k_, -1));
    std::vector<bool> alive(n, false);
    for (int v = 0; v < n; ++v) {
      if (find(v) != v) continue;
      alive[v] = true;
      for (int d = 0; d < 2 * k_; ++d)
        if (adj_[v][d] >= 0) adj[v][d] = find(adj_[v][d]);
    }
    // Trim vertices of degree <= 1 other than the basepoint.
    std::deque<int> queue;
    auto degree = [&](int v) {
      int c = 0;
      for (int d = 0; d < 2 * k_; ++d) c += adj[v][d] >= 0;
      return c;
    };
    for (int v = 1; v < n; ++v)
      if (alive[v] && degree(v) <= 1) queue.push_back(v);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (!alive[v] || degree(v) > 1) continue;
      alive[v] = false;
      for (int d = 0; d < 2 * k_; ++d) {
        int u = adj[v][d];
        if (u < 0) continue;
        adj[v][d] = -1;
        adj[u][inverse_dir(d)] = -1;
        if (u != 0 && alive[u] && degree(u) <= 1) queue.push_back(u);
      }
    }
    // Canonical breadth-first numbering.
    std::vector<int> order{0}, label(n, -1);
    label[0] = 0;
    for (std::size_t j = 0; j < order.size(); ++j)
      for (int d = 0; d < 2 * k_; ++d) {
        int u = adj[order[j]][d];
        if (u >= 0 && label[u] < 0) {
          label[u] = static_cast<int>(order.size());
          order.push_back(u);
        }
      }
    std::vector<std::vector<int>> out(order.size(), std::vector<int>(2 * k_, -1));
    for (std::size_t j = 0; j < order.size(); ++j)
      for (int d = 0; d < 2 * k_; ++d) {
        int u = adj[order[j]][d];
        if (u >= 0) out[j][d] = label[u];
      }
    return CoreGraph(k_, std::move(out));
  }

 private:
  void link(int u, int d, int v) {
    int w = adj_[u][d];
    if (w < 0) {
      adj_[u][d] = v;
      return;
    }
    w = find(w);
    adj_[u][d] = w;
    if (w != v) pending_.emplace_back(w, v);
  }

  void settle() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.front();
      pending_.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (b < a) std::swap(a, b);  // the basepoint always survives
      parent_[b] = a;
      for (int d = 0; d < 2 * k_; ++d) {
        int t = adj_[b][d];
        if (t < 0) continue;
        adj_[b][d] = -1;
        link(find(a), d, find(t));
      }
    }
  }

  int k_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> adj_;
  std::deque<std::pair<int, int>> pending_;
};

CoreGraph::CoreGraph(int k) : k_(k), adj_(1, std::vector<int>(2 * k, -1)) {
  if (k < 1) throw PreconditionError("free group rank must be at least 1");
}

namespace {

CoreGraph fold_words(Folder& f, const std::vector<FreeWord>& words, int k,
                     std::mt19937_64* rng) {
  std::vector<std::tuple<int, int, int>> edges;
  for (const auto& raw : words) {
    check_rank(raw, k);
    FreeWord w = free_reduce(raw);
    if (w.empty()) continue;
    auto e = f.loop_edges(w);
    edges.insert(edges.end(), e.begin(), e.end());
  }
  if (rng) std::shuffle(edges.begin(), edges.end(), *rng);
  for (auto [u, l, v] : edges) f.add_edge(u, l, v);
  return f.finish();
}

}  // namespace

CoreGraph CoreGraph::from_words(const std::vector<FreeWord>& words, int k) {
  if (k < 1) throw PreconditionError("free group rank must be at least 1");
  Folder f(k);
  return fold_words(f, words, k, nullptr);
}

CoreGraph CoreGraph::from_words_shuffled(const std::vector<FreeWord>& words,
                                         int k, std::uint64_t seed) {
  if (k < 1) throw PreconditionError("free group rank must be at least 1");
  Folder f(k);
  std::mt19937_64 rng(seed);
  return fold_words(f, words, k, &rng);
}

CoreGraph CoreGraph::with_words(const std::vector<FreeWord>& words) const {
  Folder f(k_, adj_);
  return fold_words(f, words, k_, nullptr);
}

std::size_t CoreGraph::num_edges() const {
  std::size_t e = 0;
  for (const auto& row : adj_)
    for (int d = 0; d < 2 * k_; d += 2) e += row[d] >= 0;
  return e;
}

std::optional<int> CoreGraph::read(int start, const FreeWord& w) const {
  int v = start;
  for (int l : free_reduce(w)) {
    if (l == 0 || l > k_ || l < -k_) return std::nullopt;
    v = adj_[v][dir_of(l)];
    if (v < 0) return std::nullopt;
  }
  return v;
}

bool CoreGraph::contains(const FreeWord& w) const {
  auto end = read(0, w);
  return end && *end == 0;
}

bool CoreGraph::same_coset(const FreeWord& a, const FreeWord& b) const {
  return contains(free_mul(free_inverse(a), b));
}

std::optional<std::size_t> CoreGraph::index() const {
  for (const auto& row : adj_)
    for (int t : row)
      if (t < 0) return std::nullopt;
  return adj_.size();
}

std::vector<FreeWord> CoreGraph::basis() const {
  const std::size_t n = adj_.size();
  std::vector<FreeWord> path(n);
  std::vector<bool> seen(n, false);
  // tree[v][d] marks the edge used to discover a vertex, in both directions.
  std::vector<std::vector<bool>> tree(n, std::vector<bool>(2 * k_, false));
  std::vector<int> order{0};
  seen[0] = true;
  for (std::size_t j = 0; j < order.size(); ++j) {
    int v = order[j];
    for (int d = 0; d < 2 * k_; ++d) {
      int u = adj_[v][d];
      if (u < 0 || seen[u]) continue;
      seen[u] = true;
      path[u] = path[v];
      path[u].push_back(letter_from_rank(d));
      tree[v][d] = tree[u][inverse_dir(d)] = true;
      order.push_back(u);
    }
  }
  std::vector<FreeWord> out;
  for (std::size_t v = 0; v < n; ++v)
    for (int d = 0; d < 2 * k_; d += 2) {
      int u = adj_[v][d];
      if (u < 0 || tree[v][d]) continue;
      FreeWord w = path[v];
      w.push_back(letter_from_rank(d));
      FreeWord back = free_inverse(path[u]);
      w.insert(w.end(), back.begin(), back.end());
      out.push_back(free_reduce(w));
    }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

// Left cosets gH correspond to right cosets H g^-1, i.e. to vertices of the
// full Schreier graph reached by reading g^-1 from the basepoint; the left
// action of x_y therefore follows direction -y. Vertices outside the core lie
// in trees hanging off it and are addressed by (core vertex, reduced word
// leaving the core).
CosetActionPrefix CoreGraph::coset_action_prefix(std::size_t limit) const {
  if (limit == 0) throw PreconditionError("coset prefix needs N >= 1");
  using Node = std::pair<int, FreeWord>;
  auto step = [&](const Node& node, int letter) -> Node {
    const auto& [c, s] = node;
    if (s.empty()) {
      int t = adj_[c][dir_of(letter)];
      if (t >= 0) return {t, {}};
      return {c, {letter}};
    }
    FreeWord s2 = s;
    if (s2.back() == -letter)
      s2.pop_back();
    else
      s2.push_back(letter);
    return {c, std::move(s2)};
  };

  std::map<Node, std::size_t> index_of;
  std::vector<Node> nodes;
  std::vector<FreeWord> reps;
  nodes.push_back({0, {}});
  reps.push_back({});
  index_of[nodes[0]] = 0;
  std::vector<std::size_t> level{0};
  while (nodes.size() < limit && !level.empty()) {
    std::map<Node, FreeWord> found;
    for (std::size_t i : level)
      for (int r = 0; r < 2 * k_; ++r) {
        int y = letter_from_rank(r);
        Node next = step(nodes[i], -y);
        if (index_of.contains(next)) continue;
        FreeWord rep{y};
        rep.insert(rep.end(), reps[i].begin(), reps[i].end());
        auto it = found.find(next);
        if (it == found.end())
          found.emplace(std::move(next), std::move(rep));
        else if (shortlex_less(rep, it->second))
          it->second = std::move(rep);
      }
    std::vector<std::pair<FreeWord, Node>> sorted;
    for (auto& [node, rep] : found) sorted.emplace_back(rep, node);
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return shortlex_less(a.first, b.first);
    });
    level.clear();
    for (auto& [rep, node] : sorted) {
      if (nodes.size() >= limit) break;
      index_of[node] = nodes.size();
      level.push_back(nodes.size());
      nodes.push_back(node);
      reps.push_back(rep);
    }
  }

  CosetActionPrefix out;
  out.representatives = reps;
  out.saturated = true;
  out.images.assign(k_, std::vector<long long>(nodes.size(), -1));
  for (int y = 1; y <= k_; ++y)
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      auto it = index_of.find(step(nodes[i], -y));
      if (it != index_of.end())
        out.images[y - 1][i] = static_cast<long long>(it->second);
      else
        out.saturated = false;
    }
  return out;
}

std::string CoreGraph::to_adjacency_text() const {
  std::ostringstream os;
  os << "vertices " << adj_.size() << " rank " << k_ << "\n";
  for (std::size_t v = 0; v < adj_.size(); ++v)
    for (int d = 0; d < 2 * k_; d += 2)
      if (adj_[v][d] >= 0) os << v << " " << letter_from_rank(d) << " " << adj_[v][d] << "\n";
  return os.str();
}

std::string CoreGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph core {\n  0 [shape=doublecircle];\n";
  for (std::size_t v = 0; v < adj_.size(); ++v)
    for (int d = 0; d < 2 * k_; d += 2)
      if (adj_[v][d] >= 0)
        os << "  " << v << " -> " << adj_[v][d] << " [label=\"x" << d / 2 + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace tdlab
