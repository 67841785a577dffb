#include "tdlab/marked.hpp"

#include "tdlab/error.hpp"

namespace tdlab {

MarkedGroup::MarkedGroup(FiniteGroupTable group, std::vector<Element> images)
    : group_(std::move(group)), images_(std::move(images)) {
  if (images_.empty()) throw PreconditionError("a marking needs at least one generator");
  for (Element x : images_)
    if (x >= group_.size()) throw PreconditionError("marked image outside the group");
  if (group_.generated(images_).size() != group_.size())
    throw PreconditionError("the marking does not generate the group");
}

MarkedGroup MarkedGroup::from_corpus(const CorpusGroup& g) {
  const auto& marks = g.marking ? *g.marking : g.generators;
  if (marks.empty()) throw PreconditionError("no marking in " + g.name);
  auto table = FiniteGroupTable::from_perm_group(PermGroup(g.domain, marks));
  std::vector<Element> images;
  for (const auto& p : marks) images.push_back(*table.find_perm(p));
  return MarkedGroup(std::move(table), std::move(images));
}

Element MarkedGroup::evaluate(const FreeWord& w) const {
  check_rank(w, static_cast<int>(k()));
  Element x = group_.identity();
  for (int l : w) {
    Element y = images_[std::abs(l) - 1];
    x = group_.mul(x, l > 0 ? y : group_.inv(y));
  }
  return x;
}

bool kernel_contains(const MarkedGroup& M, const FreeWord& w) {
  return M.evaluate(w) == M.group().identity();
}

std::string MarkedDistance::to_string() const {
  switch (kind) {
    case Kind::Zero:
      return "0";
    case Kind::Exact:
      return "1/" + std::to_string(length);
    case Kind::UpperBound:
      return "<=1/" + std::to_string(length);
  }
  return {};
}

MarkedDistance marked_distance(const MarkedGroup& a, const MarkedGroup& b, std::size_t radius,
                               std::size_t max_states) {
  if (a.k() != b.k()) throw PreconditionError("marked groups have different ranks");
  const std::size_t nb = b.group().size();
  const int k = static_cast<int>(a.k());
  const std::size_t states = a.group().size() * nb;
  if (states > max_states)
    throw BoundExceeded("product of orders " + std::to_string(states) + " exceeds " +
                        std::to_string(max_states));
  auto step = [&](std::size_t s, int l) {
    Element x = s / nb, y = s % nb;
    Element u = a.images()[std::abs(l) - 1], v = b.images()[std::abs(l) - 1];
    if (l < 0) {
      u = a.group().inv(u);
      v = b.group().inv(v);
    }
    return a.group().mul(x, u) * nb + b.group().mul(y, v);
  };
  auto separating = [&](std::size_t s) { return (s / nb == 0) != (s % nb == 0); };

  // Levels are processed in shortlex order of their least words and letters by
  // rank, so each state is first reached by its shortlex-least word.
  std::vector<long long> parent(states, -1);
  std::vector<int> letter(states, 0);
  std::vector<bool> seen(states, false);
  seen[0] = true;
  std::vector<std::size_t> frontier{0};
  for (std::size_t len = 1; !frontier.empty(); ++len) {
    std::vector<std::size_t> next;
    for (std::size_t s : frontier)
      for (int r = 0; r < 2 * k; ++r) {
        const int l = letter_from_rank(r);
        if (letter[s] == -l) continue;
        std::size_t t = step(s, l);
        if (seen[t]) continue;
        seen[t] = true;
        parent[t] = static_cast<long long>(s);
        letter[t] = l;
        if (separating(t)) {
          if (len > radius) return {MarkedDistance::Kind::UpperBound, radius + 1, {}};
          FreeWord w;
          for (std::size_t u = t; u != 0; u = static_cast<std::size_t>(parent[u]))
            w.push_back(letter[u]);
          std::reverse(w.begin(), w.end());
          return {MarkedDistance::Kind::Exact, len, w};
        }
        next.push_back(t);
      }
    frontier = std::move(next);
  }
  return {MarkedDistance::Kind::Zero, 0, {}};
}

}  // namespace tdlab
