#include "tdlab/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "tdlab/error.hpp"

namespace tdlab {

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<Element>> mul,
                                   std::vector<std::string> labels) {
  const std::size_t n = mul.size();
  if (n == 0) throw PreconditionError("a group table needs at least one element");
  if (labels.size() != n) throw PreconditionError("one label per element");
  mul_.reserve(n * n);
  for (const auto& row : mul) {
    if (row.size() != n) throw PreconditionError("table is not square");
    for (auto x : row) {
      if (x >= n) throw PreconditionError("table entry out of range");
      mul_.push_back(x);
    }
  }
  inv_.assign(n, 0);
  labels_ = std::move(labels);
  finish(true);
}

void FiniteGroupTable::finish(bool validate) {
  const std::size_t n = size();
  for (Element a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a)
      throw PreconditionError("element 0 is not the identity");
    bool found = false;
    for (Element b = 0; b < n && !found; ++b)
      if (mul(a, b) == 0) {
        if (mul(b, a) != 0) throw PreconditionError("inverse law fails");
        inv_[a] = b;
        found = true;
      }
    if (!found) throw PreconditionError("element without inverse");
  }
  if (!validate) return;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw PreconditionError("table is not associative");
  std::map<std::string, Element> seen;
  for (Element a = 0; a < n; ++a)
    if (!seen.emplace(labels_[a], a).second)
      throw PreconditionError("duplicate label " + labels_[a]);
}

FiniteGroupTable FiniteGroupTable::from_perm_group(const PermGroup& G,
                                                   std::uint64_t max_order) {
  auto dense = G.elements(max_order);
  // Order by cycle form: the identity (no cycles) comes first.
  std::vector<std::pair<std::vector<std::vector<Point>>, DensePerm>> keyed;
  for (auto& d : dense) keyed.emplace_back(cycle_form(d.to_finitary()), std::move(d));
  std::sort(keyed.begin(), keyed.end());
  std::vector<DensePerm> elems;
  for (auto& [key, d] : keyed) elems.push_back(std::move(d));
  const std::size_t n = elems.size();
  std::map<DensePerm, Element> index;
  for (Element i = 0; i < n; ++i) index.emplace(elems[i], i);
  FiniteGroupTable t;
  t.mul_.resize(n * n);
  t.inv_.assign(n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t.mul_[a * n + b] = index.at(elems[a] * elems[b]);
  for (Element a = 0; a < n; ++a) {
    t.perms_.push_back(elems[a].to_finitary());
    t.labels_.push_back(to_label(t.perms_.back()));
  }
  t.finish(false);
  return t;
}

FiniteGroupTable FiniteGroupTable::cyclic(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic group of order 0");
  FiniteGroupTable t;
  t.mul_.resize(n * n);
  t.inv_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) t.mul_[a * n + b] = (a + b) % n;
    t.labels_.push_back(a == 0 ? "e" : a == 1 ? "a" : "a" + std::to_string(a));
  }
  t.finish(false);
  return t;
}

FiniteGroupTable FiniteGroupTable::direct_product(const FiniteGroupTable& A,
                                                  const FiniteGroupTable& B) {
  const std::size_t na = A.size(), nb = B.size(), n = na * nb;
  FiniteGroupTable t;
  t.mul_.resize(n * n);
  t.inv_.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y)
      t.mul_[x * n + y] = A.mul(x / nb, y / nb) * nb + B.mul(x % nb, y % nb);
    t.labels_.push_back("<" + A.label(x / nb) + "|" + B.label(x % nb) + ">");
  }
  t.finish(false);
  return t;
}

FiniteGroupTable::Element FiniteGroupTable::power(Element a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Element r = identity();
  // Exponents can be large (n! for class sizes); reduce modulo the order.
  e %= static_cast<long long>(element_order(a));
  for (long long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

FiniteGroupTable::Element FiniteGroupTable::conjugate(Element a, Element g) const {
  return mul(mul(inv(g), a), g);
}

FiniteGroupTable::Element FiniteGroupTable::commutator(Element a, Element b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

std::optional<FiniteGroupTable::Element> FiniteGroupTable::find_label(
    const std::string& label) const {
  for (Element a = 0; a < size(); ++a)
    if (labels_[a] == label) return a;
  return std::nullopt;
}

std::optional<FinitaryPerm> FiniteGroupTable::perm(Element a) const {
  if (perms_.empty()) return std::nullopt;
  return perms_[a];
}

std::optional<FiniteGroupTable::Element> FiniteGroupTable::find_perm(
    const FinitaryPerm& p) const {
  for (Element a = 0; a < perms_.size(); ++a)
    if (perms_[a] == p) return a;
  return std::nullopt;
}

std::size_t FiniteGroupTable::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

std::size_t FiniteGroupTable::class_size(Element a) const {
  std::vector<bool> seen(size(), false);
  std::size_t count = 0;
  for (Element g = 0; g < size(); ++g) {
    Element c = conjugate(a, g);
    if (!seen[c]) {
      seen[c] = true;
      ++count;
    }
  }
  return count;
}

std::vector<std::vector<FiniteGroupTable::Element>>
FiniteGroupTable::conjugacy_classes() const {
  std::vector<bool> done(size(), false);
  std::vector<std::vector<Element>> out;
  for (Element a = 0; a < size(); ++a) {
    if (done[a]) continue;
    std::vector<Element> cls;
    for (Element g = 0; g < size(); ++g) {
      Element c = conjugate(a, g);
      if (!done[c]) {
        done[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<FiniteGroupTable::Element> FiniteGroupTable::generated(
    std::span<const Element> gens) const {
  std::vector<bool> seen(size(), false);
  std::vector<Element> queue{identity()};
  seen[identity()] = true;
  for (std::size_t j = 0; j < queue.size(); ++j)
    for (Element s : gens) {
      Element x = mul(queue[j], s);
      if (!seen[x]) {
        seen[x] = true;
        queue.push_back(x);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool FiniteGroupTable::is_subgroup(std::span<const Element> H) const {
  std::vector<bool> in(size(), false);
  for (Element h : H) {
    if (h >= size()) return false;
    in[h] = true;
  }
  if (!in[identity()]) return false;
  for (Element a : H) {
    if (!in[inv(a)]) return false;
    for (Element b : H)
      if (!in[mul(a, b)]) return false;
  }
  return true;
}

std::vector<std::optional<std::size_t>> FiniteGroupTable::word_lengths(
    std::span<const Element> gens) const {
  std::vector<std::optional<std::size_t>> dist(size());
  std::vector<Element> moves;
  for (Element s : gens) {
    moves.push_back(s);
    moves.push_back(inv(s));
  }
  std::deque<Element> queue{identity()};
  dist[identity()] = 0;
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (Element s : moves) {
      Element y = mul(x, s);
      if (!dist[y]) {
        dist[y] = *dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace tdlab
