#include "tdlab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "tdlab/error.hpp"

namespace tdlab {

namespace {

Point lookup(std::span<const FinitaryPerm::Entry> map, Point n) {
  auto it = std::lower_bound(
      map.begin(), map.end(), n,
      [](const FinitaryPerm::Entry& e, Point key) { return e.first < key; });
  if (it != map.end() && it->first == n) return it->second;
  return n;
}

}  // namespace

FinitaryPerm FinitaryPerm::from_mapping(const std::map<Point, Point>& mapping) {
  std::vector<Entry> entries;
  std::set<Point> images;
  for (const auto& [from, to] : mapping) {
    if (from == 0 || to == 0)
      throw PreconditionError("points are 1-based; 0 is not a point");
    if (!images.insert(to).second)
      throw PreconditionError("mapping is not injective");
  }
  for (const auto& [from, to] : mapping) {
    if (!mapping.contains(to))
      throw PreconditionError("mapping does not permute its key set");
    if (from != to) entries.emplace_back(from, to);
  }
  return FinitaryPerm(std::move(entries));
}

FinitaryPerm FinitaryPerm::from_cycles(
    const std::vector<std::vector<Point>>& cycles) {
  FinitaryPerm result;
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it)
    result = compose(cycle(*it), result);
  return result;
}

FinitaryPerm FinitaryPerm::cycle(std::vector<Point> points) {
  std::set<Point> seen;
  for (Point p : points) {
    if (p == 0) throw PreconditionError("points are 1-based; 0 is not a point");
    if (!seen.insert(p).second)
      throw PreconditionError("a cycle repeats point " + std::to_string(p));
  }
  std::map<Point, Point> m;
  for (std::size_t i = 0; i < points.size(); ++i)
    m[points[i]] = points[(i + 1) % points.size()];
  return from_mapping(m);
}

FinitaryPerm FinitaryPerm::transposition(Point a, Point b) {
  return cycle({a, b});
}

Point FinitaryPerm::operator()(Point n) const { return lookup(map_, n); }

Point FinitaryPerm::preimage(Point n) const {
  for (const auto& [from, to] : map_)
    if (to == n) return from;
  return n;
}

FinitaryPerm FinitaryPerm::inverse() const {
  std::vector<Entry> inv;
  inv.reserve(map_.size());
  for (const auto& [from, to] : map_) inv.emplace_back(to, from);
  std::sort(inv.begin(), inv.end());
  return FinitaryPerm(std::move(inv));
}

std::vector<Point> FinitaryPerm::support() const {
  std::vector<Point> s;
  s.reserve(map_.size());
  for (const auto& e : map_) s.push_back(e.first);
  return s;
}

FinitaryPerm compose(const FinitaryPerm& p, const FinitaryPerm& q) {
  std::vector<Point> points;
  points.reserve(p.support_size() + q.support_size());
  for (const auto& e : p.mapping()) points.push_back(e.first);
  for (const auto& e : q.mapping()) points.push_back(e.first);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::map<Point, Point> m;
  for (Point n : points) m[n] = p(q(n));
  return FinitaryPerm::from_mapping(m);
}

FinitaryPerm power(const FinitaryPerm& p, long long exponent) {
  FinitaryPerm base = exponent < 0 ? p.inverse() : p;
  unsigned long long e =
      exponent < 0 ? static_cast<unsigned long long>(-(exponent + 1)) + 1
                   : static_cast<unsigned long long>(exponent);
  FinitaryPerm result;
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

FinitaryPerm conjugate(const FinitaryPerm& a, const FinitaryPerm& g) {
  return compose(g.inverse(), compose(a, g));
}

FinitaryPerm commutator(const FinitaryPerm& x, const FinitaryPerm& y) {
  return compose(compose(x.inverse(), y.inverse()), compose(x, y));
}

std::vector<std::vector<Point>> cycle_form(const FinitaryPerm& p) {
  std::vector<std::vector<Point>> cycles;
  std::set<Point> done;
  for (const auto& [start, image] : p.mapping()) {
    if (done.contains(start)) continue;
    std::vector<Point> c{start};
    done.insert(start);
    for (Point n = image; n != start; n = p(n)) {
      c.push_back(n);
      done.insert(n);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

bool is_even(const FinitaryPerm& p) {
  std::size_t transpositions = 0;
  for (const auto& c : cycle_form(p)) transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

namespace {

std::string format_cycles(const FinitaryPerm& p, char sep) {
  auto cycles = cycle_form(p);
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += sep;
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

}  // namespace

std::string to_string(const FinitaryPerm& p) { return format_cycles(p, ' '); }
std::string to_label(const FinitaryPerm& p) { return format_cycles(p, ','); }

FinitaryPerm parse_perm(std::string_view text) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_space();
  if (i == text.size()) throw ParseError("empty permutation text");
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' in permutation \"" + std::string(text) +
                       "\"");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      while (i < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[i])) ||
              text[i] == ','))
        ++i;
      if (i == text.size())
        throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("unexpected character '" + std::string(1, text[i]) +
                         "' in permutation");
      Point v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<Point>(text[i] - '0');
        ++i;
      }
      if (v == 0) throw ParseError("points are 1-based; 0 is not a point");
      cycle.push_back(v);
    }
    if (cycle.size() == 1)
      throw ParseError("a cycle must contain at least two points");
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  try {
    return FinitaryPerm::from_cycles(cycles);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

LazyPerm::LazyPerm(std::string name, Map eval, Map eval_inverse,
                   NextMoved next_moved, bool infinite_support)
    : name_(std::move(name)),
      eval_(std::move(eval)),
      inverse_(std::move(eval_inverse)),
      next_(std::move(next_moved)),
      infinite_(infinite_support) {}

LazyPerm LazyPerm::pairwise_swapper() {
  auto swap = [](Point n) { return n % 2 == 1 ? n + 1 : n - 1; };
  return LazyPerm("swapper", swap, swap,
                  [](Point after) -> std::optional<Point> { return after + 1; },
                  true);
}

LazyPerm LazyPerm::shifted_swapper() {
  auto swap = [](Point n) -> Point {
    if (n == 1) return 1;
    return n % 2 == 0 ? n + 1 : n - 1;
  };
  return LazyPerm(
      "shifted-swapper", swap, swap,
      [](Point after) -> std::optional<Point> { return std::max<Point>(after + 1, 2); },
      true);
}

LazyPerm LazyPerm::triple_rotator() {
  auto fwd = [](Point n) { return n % 3 == 0 ? n - 2 : n + 1; };
  auto back = [](Point n) { return n % 3 == 1 ? n + 2 : n - 1; };
  return LazyPerm("rotator", fwd, back,
                  [](Point after) -> std::optional<Point> { return after + 1; },
                  true);
}

LazyPerm LazyPerm::from_finitary(FinitaryPerm p) {
  auto fwd = [p](Point n) { return p(n); };
  auto inv = p.inverse();
  auto back = [inv](Point n) { return inv(n); };
  auto support = p.support();
  auto next = [support](Point after) -> std::optional<Point> {
    auto it = std::upper_bound(support.begin(), support.end(), after);
    if (it == support.end()) return std::nullopt;
    return *it;
  };
  return LazyPerm(to_string(p), fwd, back, next, false);
}

SeparatorResult construct_separating_permutation(
    const FinitaryPerm& s, std::span<const Point> X,
    std::span<const SeparatorFactor> factors) {
  if (factors.empty())
    throw PreconditionError("separating permutation needs at least one factor");
  for (const auto& f : factors) {
    if (f.alpha == 0) throw PreconditionError("exponent alpha must be nonzero");
    if (!f.a.has_infinite_support())
      throw PreconditionError("factor " + f.a.name() +
                              " does not have infinite support");
  }
  for (Point x : X)
    if (x == 0) throw PreconditionError("points are 1-based; 0 is not a point");

  SeparatorPlan plan;
  std::set<Point> xs(X.begin(), X.end());
  std::set<Point> used = xs;
  for (Point x : xs) used.insert(s(x));
  const std::set<Point> x_and_image = used;

  auto smallest_free = [&used]() {
    Point p = 1;
    while (used.contains(p)) ++p;
    return p;
  };

  plan.n0 = smallest_free();
  used.insert(plan.n0);

  for (const auto& f : factors) {
    plan.forbidden.emplace_back(used.begin(), used.end());
    // m in supp(a) with m and a(m) both outside the forbidden set. At most
    // 2|Y| support points are excluded, so a finite scan suffices.
    const std::size_t scan_limit = 2 * used.size() + 1;
    std::optional<Point> chosen;
    Point cursor = 0;
    for (std::size_t seen = 0; seen <= scan_limit; ++seen) {
      auto next = f.a.next_moved(cursor);
      if (!next)
        throw PreconditionError("factor " + f.a.name() +
                                " ran out of moved points");
      cursor = *next;
      Point image = f.a(cursor);
      if (image == cursor)
        throw PreconditionError("support oracle of " + f.a.name() +
                                " yielded a fixed point");
      if (!used.contains(cursor) && !used.contains(image)) {
        chosen = cursor;
        break;
      }
    }
    if (!chosen)
      throw PreconditionError("support oracle of " + f.a.name() +
                              " is inconsistent with an infinite support");
    plan.m.push_back(*chosen);
    plan.n.push_back(f.a(*chosen));
    used.insert(*chosen);
    used.insert(plan.n.back());
  }

  // Fillers avoid every point chosen so far, including m_k and n_k.
  for (const auto& f : factors) {
    std::vector<Point> fill;
    const auto count = static_cast<std::size_t>(f.alpha < 0 ? -f.alpha : f.alpha) - 1;
    for (std::size_t j = 0; j < count; ++j) {
      Point p = smallest_free();
      used.insert(p);
      fill.push_back(p);
    }
    plan.fillers.push_back(std::move(fill));
  }

  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<Point> c;
    c.push_back(i == 0 ? plan.n0 : plan.n[i - 1]);
    c.insert(c.end(), plan.fillers[i].begin(), plan.fillers[i].end());
    c.push_back(plan.m[i]);
    auto cyc = FinitaryPerm::cycle(c);
    plan.cycles.push_back(factors[i].alpha < 0 ? cyc.inverse() : cyc);
  }

  // s0: s on X, completed greedily on s(X) \ X onto X \ s(X).
  std::map<Point, Point> s0;
  std::set<Point> targets = xs;
  for (Point x : xs) {
    s0[x] = s(x);
    targets.erase(s(x));
  }
  auto target = targets.begin();
  for (Point p : x_and_image) {
    if (xs.contains(p)) continue;
    s0[p] = *target++;
  }
  plan.s0 = FinitaryPerm::from_mapping(s0);

  FinitaryPerm t = plan.s0;
  for (const auto& c : plan.cycles) t = compose(t, c);
  return {std::move(t), std::move(plan)};
}

std::vector<Point> trace_factors(const FinitaryPerm& t,
                                 std::span<const SeparatorFactor> factors,
                                 Point start) {
  std::vector<Point> path{start};
  Point cur = start;
  const FinitaryPerm t_inv = t.inverse();
  for (const auto& f : factors) {
    const long long steps = f.alpha < 0 ? -f.alpha : f.alpha;
    for (long long j = 0; j < steps; ++j) cur = f.alpha < 0 ? t_inv(cur) : t(cur);
    path.push_back(cur);
    cur = f.a(cur);
    path.push_back(cur);
  }
  return path;
}

bool check_alt_sentence(const FinitaryPerm& g) {
  static const FinitaryPerm a = FinitaryPerm::cycle({1, 2, 3});
  static const std::vector<FinitaryPerm> others = {
      a, FinitaryPerm::cycle({4, 5, 6}), FinitaryPerm::cycle({7, 8, 9}),
      FinitaryPerm::cycle({10, 11, 12})};
  for (const auto& y : others)
    if (commutator(conjugate(y, g), a).is_identity()) return true;
  return false;
}

}  // namespace tdlab
