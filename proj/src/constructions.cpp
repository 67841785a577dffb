#include "tdlab/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "tdlab/error.hpp"

namespace tdlab {

Point houghton_point(std::size_t n, std::size_t ray, std::uint64_t position) {
  if (n == 0 || ray == 0 || ray > n || position == 0)
    throw PreconditionError("invalid ray point");
  return n * (position - 1) + ray;
}

std::pair<std::size_t, std::uint64_t> houghton_coords(std::size_t n, Point x) {
  if (n == 0 || x == 0) throw PreconditionError("invalid ray point");
  return {static_cast<std::size_t>((x - 1) % n) + 1, (x - 1) / n + 1};
}

namespace {

long long max_abs(const std::vector<long long>& t) {
  long long m = 0;
  for (long long x : t) m = std::max(m, x < 0 ? -x : x);
  return m;
}

// Points outside the translated tails, in increasing order.
std::vector<Point> tail_complement(std::size_t n, const std::vector<long long>& t) {
  const long long M = max_abs(t);
  std::vector<Point> out;
  for (Point y = 1; y <= n * static_cast<Point>(2 * M); ++y) {
    auto [r, q] = houghton_coords(n, y);
    if (static_cast<long long>(q) <= M + t[r - 1]) out.push_back(y);
  }
  return out;
}

Point tau(std::size_t n, const std::vector<long long>& t, Point x) {
  const long long M = max_abs(t);
  auto [r, p] = houghton_coords(n, x);
  if (static_cast<long long>(p) > M)
    return houghton_point(n, r, static_cast<std::uint64_t>(static_cast<long long>(p) + t[r - 1]));
  return tail_complement(n, t)[x - 1];
}

Point tau_inverse(std::size_t n, const std::vector<long long>& t, Point y) {
  const long long M = max_abs(t);
  auto [r, q] = houghton_coords(n, y);
  if (static_cast<long long>(q) > M + t[r - 1])
    return houghton_point(n, r, static_cast<std::uint64_t>(static_cast<long long>(q) - t[r - 1]));
  auto c = tail_complement(n, t);
  return static_cast<Point>(std::lower_bound(c.begin(), c.end(), y) - c.begin()) + 1;
}

std::uint64_t support_position(const HoughtonElement& g) {
  return g.finitary.is_identity() ? 0 : houghton_coords(g.n, g.finitary.max_moved()).second;
}

// The element with offsets t agreeing with `full`, whose finitary part is
// computed on positions 1..bound (it must be the identity beyond).
HoughtonElement normalize(std::size_t n, std::vector<long long> t,
                          const std::function<Point(Point)>& full, std::uint64_t bound) {
  std::map<Point, Point> m;
  for (Point y = 1; y <= n * bound; ++y) {
    Point img = full(tau_inverse(n, t, y));
    if (img != y) m[y] = img;
  }
  return {n, FinitaryPerm::from_mapping(m), std::move(t)};
}

void check_offsets(std::size_t n, const std::vector<long long>& t) {
  if (t.size() != n) throw PreconditionError("one offset per ray required");
  if (std::accumulate(t.begin(), t.end(), 0LL) != 0)
    throw PreconditionError("offsets must sum to 0");
}

}  // namespace

Point HoughtonElement::operator()(Point x) const { return finitary(tau(n, offsets, x)); }

Point HoughtonElement::preimage(Point x) const {
  return tau_inverse(n, offsets, finitary.preimage(x));
}

bool HoughtonElement::is_finitary() const {
  return std::all_of(offsets.begin(), offsets.end(), [](long long x) { return x == 0; });
}

HoughtonElement houghton_translation(std::size_t n, std::vector<long long> offsets) {
  check_offsets(n, offsets);
  return {n, FinitaryPerm(), std::move(offsets)};
}

HoughtonElement houghton_from_finitary(std::size_t n, FinitaryPerm p) {
  if (n == 0) throw PreconditionError("at least one ray required");
  return {n, std::move(p), std::vector<long long>(n, 0)};
}

HoughtonElement houghton_compose(const HoughtonElement& g, const HoughtonElement& h) {
  if (g.n != h.n) throw PreconditionError("ray counts differ");
  std::vector<long long> t(g.n);
  for (std::size_t r = 0; r < g.n; ++r) t[r] = g.offsets[r] + h.offsets[r];
  const std::uint64_t bound =
      std::max(support_position(g), support_position(h)) +
      2 * static_cast<std::uint64_t>(max_abs(g.offsets) + max_abs(h.offsets) + max_abs(t)) + 2;
  return normalize(g.n, std::move(t), [&](Point x) { return g(h(x)); }, bound);
}

HoughtonElement houghton_inverse(const HoughtonElement& g) {
  std::vector<long long> t(g.n);
  for (std::size_t r = 0; r < g.n; ++r) t[r] = -g.offsets[r];
  const std::uint64_t bound =
      support_position(g) + 4 * static_cast<std::uint64_t>(max_abs(g.offsets)) + 2;
  return normalize(g.n, std::move(t), [&](Point x) { return g.preimage(x); }, bound);
}

HoughtonElement houghton_commutator(const HoughtonElement& g, const HoughtonElement& h) {
  return houghton_compose(houghton_compose(houghton_inverse(g), houghton_inverse(h)),
                          houghton_compose(g, h));
}

std::vector<HoughtonElement> houghton_generators(std::size_t n) {
  if (n < 2) throw PreconditionError("Houghton groups need at least 2 rays");
  std::vector<HoughtonElement> out;
  for (std::size_t i = 2; i <= n; ++i) {
    std::vector<long long> t(n, 0);
    t[0] = -1;
    t[i - 1] = 1;
    auto map = [n, i](Point x) -> Point {
      auto [r, p] = houghton_coords(n, x);
      if (r == 1) return p >= 2 ? houghton_point(n, 1, p - 1) : houghton_point(n, i, 1);
      if (r == i) return houghton_point(n, i, p + 1);
      return x;
    };
    out.push_back(normalize(n, std::move(t), map, 4));
  }
  return out;
}

HoughtonElement houghton_witness(std::size_t n, const std::vector<Point>& a,
                                 const std::vector<Point>& b) {
  if (a.size() != b.size()) throw PreconditionError("tuples differ in length");
  std::set<Point> as(a.begin(), a.end()), bs(b.begin(), b.end());
  if (as.size() != a.size() || bs.size() != b.size())
    throw PreconditionError("tuple entries must be distinct");
  if (as.count(0) || bs.count(0)) throw PreconditionError("0 is not a point");
  std::map<Point, Point> m;
  for (std::size_t j = 0; j < a.size(); ++j) m[a[j]] = b[j];
  std::vector<Point> from, to;
  std::set_difference(bs.begin(), bs.end(), as.begin(), as.end(), std::back_inserter(from));
  std::set_difference(as.begin(), as.end(), bs.begin(), bs.end(), std::back_inserter(to));
  for (std::size_t j = 0; j < from.size(); ++j) m[from[j]] = to[j];
  FinitaryPerm p = FinitaryPerm::from_mapping(m);
  if (!is_even(p)) {
    Point far = std::max(as.empty() ? 0 : *as.rbegin(), bs.empty() ? 0 : *bs.rbegin());
    p = p * FinitaryPerm::transposition(far + 1, far + 2);
  }
  return houghton_from_finitary(n == 0 ? 1 : n, std::move(p));
}

// ---------------------------------------------------------------------------

namespace {

FinitaryPerm left_translation(const FiniteGroupTable& Q, Element x) {
  std::map<Point, Point> m;
  for (Element g = 0; g < Q.size(); ++g) m[g + 1] = Q.mul(x, g) + 1;
  return FinitaryPerm::from_mapping(m);
}

void check_generating(const FiniteGroupTable& Q, const std::vector<Element>& xs) {
  for (Element x : xs)
    if (x >= Q.size()) throw PreconditionError("generator outside the group");
  if (Q.generated(xs).size() != Q.size())
    throw PreconditionError("the elements do not generate the group");
}

}  // namespace

PermGroup prop_htA_generators(const FiniteGroupTable& Q, const std::vector<Element>& xs) {
  check_generating(Q, xs);
  std::vector<FinitaryPerm> gens;
  for (Element x : xs) gens.push_back(left_translation(Q, x));
  for (Element x : xs)
    if (x != Q.identity()) gens.push_back(FinitaryPerm::transposition(1, x + 1));
  return PermGroup(Q.size(), gens);
}

std::vector<HtAToken> transposition_factorization(const FiniteGroupTable& Q,
                                                  const std::vector<Element>& xs,
                                                  Element g, Element h) {
  check_generating(Q, xs);
  if (g >= Q.size() || h >= Q.size()) throw PreconditionError("element outside the group");
  if (g == h) throw PreconditionError("a transposition needs two distinct elements");
  // Breadth-first search along g -> g x_i.
  std::vector<long long> parent(Q.size(), -1);
  std::vector<std::size_t> via(Q.size(), 0);
  std::vector<bool> seen(Q.size(), false);
  std::queue<Element> queue;
  queue.push(g);
  seen[g] = true;
  while (!queue.empty() && !seen[h]) {
    Element v = queue.front();
    queue.pop();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Element w = Q.mul(v, xs[i]);
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = static_cast<long long>(v);
      via[w] = i;
      queue.push(w);
    }
  }
  std::vector<std::pair<Element, std::size_t>> steps;
  for (Element v = h; v != g; v = static_cast<Element>(parent[v]))
    steps.emplace_back(static_cast<Element>(parent[v]), via[v]);
  std::reverse(steps.begin(), steps.end());

  auto step_word = [&](const std::pair<Element, std::size_t>& s) {
    std::vector<HtAToken> w;
    if (s.first != Q.identity()) w.push_back({HtAToken::Kind::Lambda, s.first, 1});
    w.push_back({HtAToken::Kind::A, s.second, 1});
    if (s.first != Q.identity()) w.push_back({HtAToken::Kind::Lambda, s.first, -1});
    return w;
  };
  std::vector<HtAToken> word;
  for (std::size_t j = 0; j < steps.size(); ++j)
    for (const auto& t : step_word(steps[j])) word.push_back(t);
  for (std::size_t j = steps.size() - 1; j-- > 0;)
    for (const auto& t : step_word(steps[j])) word.push_back(t);
  return word;
}

FinitaryPerm evaluate_htA_word(const FiniteGroupTable& Q, const std::vector<Element>& xs,
                               const std::vector<HtAToken>& word) {
  FinitaryPerm result;
  for (const auto& t : word) {
    FinitaryPerm f;
    if (t.kind == HtAToken::Kind::A) {
      if (t.value >= xs.size()) throw PreconditionError("generator index out of range");
      if (xs[t.value] != Q.identity()) f = FinitaryPerm::transposition(1, xs[t.value] + 1);
    } else {
      if (t.value >= Q.size()) throw PreconditionError("element outside the group");
      f = left_translation(Q, t.exponent < 0 ? Q.inv(t.value) : t.value);
    }
    result = result * f;
  }
  return result;
}

std::string to_string(const FiniteGroupTable& Q, const std::vector<HtAToken>& word) {
  std::string s;
  for (const auto& t : word) {
    if (!s.empty()) s += ' ';
    if (t.kind == HtAToken::Kind::A) {
      s += "A" + std::to_string(t.value + 1);
    } else {
      s += "L[" + Q.label(t.value) + "]";
      if (t.exponent < 0) s += "^-1";
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<std::uint64_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b over GF(p); b monic.
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  while (a.size() >= b.size()) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
    trim(a);
  }
  return a;
}

Poly digits(std::uint64_t v, std::uint64_t p, std::size_t len) {
  Poly d(len);
  for (auto& x : d) {
    x = v % p;
    v /= p;
  }
  return d;
}

std::uint64_t value(const Poly& d, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

bool irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t e = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= e; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = digits(c, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

GaloisField::GaloisField(std::uint64_t q) : q_(q) {
  if (q < 2 || q > 64) throw PreconditionError("field order must lie in 2..64");
  p_ = 2;
  while (q % p_ != 0) ++p_;
  e_ = 0;
  for (std::uint64_t r = q; r > 1; r /= p_) {
    if (r % p_ != 0) throw PreconditionError(std::to_string(q) + " is not a prime power");
    ++e_;
  }
  std::uint64_t count = q_;  // monic polynomials of degree e
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly f = digits(c, p_, e_);
    f.push_back(1);
    if (irreducible(f, p_)) {
      modulus_ = f;
      break;
    }
  }
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  for (std::uint64_t a = 0; a < q_; ++a)
    for (std::uint64_t b = 0; b < q_; ++b) {
      Poly da = digits(a, p_, e_), db = digits(b, p_, e_);
      Poly s(e_);
      for (std::size_t i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = value(s, p_);
      Poly prod(2 * e_, 0);
      for (std::size_t i = 0; i < e_; ++i)
        for (std::size_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      Poly r = poly_mod(prod, modulus_, p_);
      r.resize(e_, 0);
      mul_[a * q_ + b] = value(r, p_);
    }
  for (std::uint64_t w = 1; w < q_; ++w) {
    std::uint64_t x = w, ord = 1;
    while (x != 1) {
      x = mul(x, w);
      ++ord;
    }
    if (ord == q_ - 1) {
      primitive_ = w;
      break;
    }
  }
}

PermGroup affine_action(std::uint64_t q) {
  GaloisField F(q);
  std::vector<FinitaryPerm> gens;
  auto perm_of = [&](const std::function<std::uint64_t(std::uint64_t)>& f) {
    std::map<Point, Point> m;
    for (std::uint64_t v = 0; v < q; ++v) m[v + 1] = f(v) + 1;
    return FinitaryPerm::from_mapping(m);
  };
  std::uint64_t basis = 1;
  for (std::uint64_t j = 0; j < F.degree(); ++j, basis *= F.characteristic())
    gens.push_back(perm_of([&](std::uint64_t v) { return F.add(v, basis); }));
  const std::uint64_t w = F.primitive_element();
  gens.push_back(perm_of([&](std::uint64_t v) { return F.mul(w, v); }));
  return PermGroup(q, gens);
}

PermGroup affine_f2_action(std::size_t n) {
  if (n < 1 || n > 6) throw PreconditionError("dimension must lie in 1..6");
  const std::uint64_t size = std::uint64_t{1} << n;
  auto perm_of = [&](const std::function<std::uint64_t(std::uint64_t)>& f) {
    std::map<Point, Point> m;
    for (std::uint64_t v = 0; v < size; ++v) m[v + 1] = f(v) + 1;
    return FinitaryPerm::from_mapping(m);
  };
  std::vector<FinitaryPerm> gens{perm_of([](std::uint64_t v) { return v ^ 1; })};
  if (n >= 2)
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (i + 1) % n;
      gens.push_back(perm_of([i, j](std::uint64_t v) { return v ^ (((v >> j) & 1) << i); }));
    }
  return PermGroup(size, gens);
}

std::vector<FinitaryPerm> symmetric_generators(std::size_t n) {
  if (n < 2) return {};
  if (n == 2) return {FinitaryPerm::transposition(1, 2)};
  std::vector<Point> c(n);
  std::iota(c.begin(), c.end(), Point{1});
  return {FinitaryPerm::transposition(1, 2), FinitaryPerm::cycle(c)};
}

std::vector<FinitaryPerm> alternating_generators(std::size_t n) {
  std::vector<FinitaryPerm> out;
  for (Point i = 3; i <= n; ++i) out.push_back(FinitaryPerm::cycle({1, 2, i}));
  return out;
}

std::vector<FinitaryPerm> cyclic_generators(std::size_t n) {
  if (n < 2) return {};
  std::vector<Point> c(n);
  std::iota(c.begin(), c.end(), Point{1});
  return {FinitaryPerm::cycle(c)};
}

std::vector<FinitaryPerm> dihedral_generators(std::size_t n) {
  if (n < 3) throw PreconditionError("dihedral groups act on at least 3 points");
  std::map<Point, Point> m;
  for (Point i = 1; i <= n; ++i) m[i] = i == 1 ? 1 : n + 2 - i;
  return {cyclic_generators(n)[0], FinitaryPerm::from_mapping(m)};
}

std::vector<FinitaryPerm> quaternion_generators() {
  return {parse_perm("(1 3 2 4)(5 7 6 8)"), parse_perm("(1 5 2 6)(3 8 4 7)")};
}

std::vector<FinitaryPerm> mathieu11_generators() {
  return {parse_perm("(1 2 3 4 5 6 7 8 9 10 11)"), parse_perm("(3 7 11 8)(4 10 5 6)")};
}

std::vector<FinitaryPerm> mathieu12_generators() {
  auto g = mathieu11_generators();
  g.push_back(parse_perm("(1 12)(2 11)(3 6)(4 8)(5 9)(7 10)"));
  return g;
}

}  // namespace tdlab
