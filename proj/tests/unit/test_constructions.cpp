#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "tdlab/constructions.hpp"
#include "tdlab/error.hpp"

using namespace tdlab;

namespace {

// Direct definition of the Houghton generator g_i on (ray, position).
Point explicit_generator(std::size_t n, std::size_t i, Point x) {
  std::size_t r = (x - 1) % n + 1;
  std::uint64_t p = (x - 1) / n + 1;
  if (r == 1) return p >= 2 ? n * (p - 2) + 1 : i;
  if (r == i) return n * p + i;
  return x;
}

struct TableWithGens {
  FiniteGroupTable Q;
  std::vector<Element> xs;
};

TableWithGens from_perms(std::size_t n, const std::vector<FinitaryPerm>& gens) {
  auto Q = FiniteGroupTable::from_perm_group(PermGroup(n, gens));
  std::vector<Element> xs;
  for (const auto& g : gens) xs.push_back(*Q.find_perm(g));
  return {Q, xs};
}

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("ray coordinates") {
  CHECK(houghton_point(3, 1, 1) == 1);
  CHECK(houghton_point(3, 3, 1) == 3);
  CHECK(houghton_point(3, 2, 4) == 11);
  for (Point x = 1; x < 40; ++x) {
    auto [r, p] = houghton_coords(3, x);
    CHECK(houghton_point(3, r, p) == x);
  }
  CHECK_THROWS_AS(houghton_point(3, 4, 1), PreconditionError);
}

TEST_CASE("Houghton generators") {
  auto g = houghton_generators(2);
  REQUIRE(g.size() == 1);
  CHECK(g[0].offsets == std::vector<long long>{-1, 1});
  for (std::size_t n = 2; n <= 5; ++n) {
    auto gens = houghton_generators(n);
    CHECK(gens.size() == n - 1);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      long long sum = 0;
      for (long long t : gens[i].offsets) sum += t;
      CHECK(sum == 0);
      for (Point x = 1; x <= 20 * n; ++x) {
        CHECK(gens[i](x) == explicit_generator(n, i + 2, x));
        CHECK(gens[i].preimage(gens[i](x)) == x);
      }
    }
  }
  CHECK_THROWS_AS(houghton_generators(1), PreconditionError);
}

TEST_CASE("Houghton composition and commutators") {
  auto g = houghton_generators(3);
  auto gh = houghton_compose(g[0], g[1]);
  CHECK(gh.offsets == std::vector<long long>{-2, 1, 1});
  auto inv = houghton_inverse(g[0]);
  for (Point x = 1; x <= 60; ++x) {
    CHECK(gh(x) == g[0](g[1](x)));
    CHECK(inv(g[0](x)) == x);
  }
  CHECK(houghton_compose(g[0], inv).finitary.is_identity());
  CHECK(houghton_compose(g[0], inv).is_finitary());

  auto c = houghton_commutator(g[0], g[1]);
  CHECK(c.is_finitary());
  CHECK_FALSE(c.finitary.is_identity());
  for (Point x = 1; x <= 60; ++x) {
    Point y = explicit_generator(3, 2, explicit_generator(3, 3, x));
    // [g, h](x) = g^-1 h^-1 g h (x), computed by inverting through a window.
    auto pre = [](std::size_t i, Point z) {
      for (Point w = 1; w <= 200; ++w)
        if (explicit_generator(3, i, w) == z) return w;
      return Point{0};
    };
    CHECK(c(x) == pre(2, pre(3, y)));
  }
  auto t = houghton_translation(3, {2, -1, -1});
  auto tinv = houghton_inverse(t);
  for (Point x = 1; x <= 60; ++x) CHECK(tinv(t(x)) == x);
  CHECK_THROWS_AS(houghton_translation(3, {1, 0, 0}), PreconditionError);
}

TEST_CASE("Houghton witnesses") {
  CHECK(houghton_witness(3, {4, 7}, {4, 7}).finitary.is_identity());
  auto w = houghton_witness(3, {2}, {5});
  CHECK(w.finitary == FinitaryPerm::transposition(2, 5) * FinitaryPerm::transposition(6, 7));
  CHECK(is_even(w.finitary));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Point> a, b;
    std::set<Point> sa, sb;
    while (a.size() < 4) {
      Point x = 1 + rng() % 20;
      if (sa.insert(x).second) a.push_back(x);
    }
    while (b.size() < 4) {
      Point x = 1 + rng() % 20;
      if (sb.insert(x).second) b.push_back(x);
    }
    auto h = houghton_witness(3, a, b);
    CHECK(h.is_finitary());
    CHECK(is_even(h.finitary));
    for (std::size_t j = 0; j < 4; ++j) CHECK(h(a[j]) == b[j]);
  }
  CHECK_THROWS_AS(houghton_witness(3, {1, 2}, {3}), PreconditionError);
  CHECK_THROWS_AS(houghton_witness(3, {1, 1}, {3, 4}), PreconditionError);
}

TEST_CASE("transposition generators give the full symmetric group") {
  auto c2 = FiniteGroupTable::cyclic(2);
  CHECK(prop_htA_generators(c2, {1}).order() == 2);
  auto c3 = FiniteGroupTable::cyclic(3);
  CHECK(prop_htA_generators(c3, {1}).order() == 6);
  auto c4 = FiniteGroupTable::cyclic(4);
  CHECK(prop_htA_generators(c4, {1}).order() == 24);
  auto s3 = from_perms(3, symmetric_generators(3));
  CHECK(prop_htA_generators(s3.Q, s3.xs).order() == 720);
  CHECK_THROWS_AS(prop_htA_generators(c4, {2}), PreconditionError);
}

TEST_CASE("transposition factorization") {
  auto c3 = FiniteGroupTable::cyclic(3);
  // g = e, h = x: the bare transposition a_1.
  auto w1 = transposition_factorization(c3, {1}, 0, 1);
  CHECK(w1 == std::vector<HtAToken>{{HtAToken::Kind::A, 0, 1}});
  // g^-1 h = x: Lambda(g) a_1 Lambda(g)^-1.
  auto w2 = transposition_factorization(c3, {1}, 1, 2);
  CHECK(w2.size() == 3);
  CHECK(w2[0] == HtAToken{HtAToken::Kind::Lambda, 1, 1});
  CHECK(w2[2] == HtAToken{HtAToken::Kind::Lambda, 1, -1});
  // e to x^2 goes through x: t_{e,x} t_{x,x2} t_{e,x}.
  auto w3 = transposition_factorization(c3, {1}, 0, 2);
  CHECK(w3.size() == 5);
  CHECK(to_string(c3, w3) == "A1 L[a] A1 L[a]^-1 A1");
  CHECK(evaluate_htA_word(c3, {1}, w3) == FinitaryPerm::transposition(1, 3));
  CHECK_THROWS_AS(transposition_factorization(c3, {1}, 2, 2), PreconditionError);

  std::vector<TableWithGens> groups;
  for (std::size_t n = 2; n <= 8; ++n) groups.push_back({FiniteGroupTable::cyclic(n), {1}});
  groups.push_back(from_perms(3, symmetric_generators(3)));
  groups.push_back(from_perms(4, dihedral_generators(4)));
  groups.push_back(from_perms(8, quaternion_generators()));
  groups.push_back({FiniteGroupTable::direct_product(FiniteGroupTable::cyclic(2),
                                                     FiniteGroupTable::cyclic(2)),
                    {1, 2}});
  groups.push_back({FiniteGroupTable::direct_product(FiniteGroupTable::cyclic(2),
                                                     FiniteGroupTable::cyclic(4)),
                    {1, 4}});
  for (const auto& [Q, xs] : groups) {
    REQUIRE(Q.size() <= 8);
    auto G = prop_htA_generators(Q, xs);
    for (Element g = 0; g < Q.size(); ++g)
      for (Element h = 0; h < Q.size(); ++h) {
        if (g == h) continue;
        auto t = evaluate_htA_word(Q, xs, transposition_factorization(Q, xs, g, h));
        CHECK(t == FinitaryPerm::transposition(g + 1, h + 1));
        CHECK(G.contains(t));
      }
  }
}

TEST_CASE("Galois fields") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64}) {
    GaloisField F(q);
    for (std::uint64_t a = 0; a < q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      if (a != 0) {
        std::set<std::uint64_t> row;
        for (std::uint64_t b = 0; b < q; ++b) row.insert(F.mul(a, b));
        CHECK(row.size() == q);
      }
      for (std::uint64_t b = 0; b < q; b += 3)
        for (std::uint64_t c = 0; c < q; c += 5)
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    }
    std::set<std::uint64_t> powers;
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i + 1 < q; ++i, x = F.mul(x, F.primitive_element()))
      powers.insert(x);
    CHECK(powers.size() == q - 1);
  }
  CHECK_THROWS_AS(GaloisField(6), PreconditionError);
  CHECK_THROWS_AS(GaloisField(65), PreconditionError);
}

TEST_CASE("affine groups") {
  auto agl15 = affine_action(5);
  CHECK(is_k_transitive(agl15, 2));
  CHECK_FALSE(is_k_transitive(agl15, 3));
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 32}) {
    auto G = affine_action(q);
    CHECK(G.order() == q * (q - 1));
    CHECK(is_k_transitive(G, 2));
    if (q > 3) CHECK_FALSE(is_k_transitive(G, 3));
  }
  CHECK_THROWS_AS(affine_action(12), PreconditionError);

  // |GL(n,2)| = prod (2^n - 2^i).
  const std::uint64_t gl[] = {1, 1, 6, 168, 20160};
  for (std::size_t n = 1; n <= 4; ++n) {
    auto G = affine_f2_action(n);
    CHECK(G.order() == (std::uint64_t{1} << n) * gl[n]);
  }
  auto agl32 = affine_f2_action(3);
  CHECK(is_k_transitive(agl32, 3));
  CHECK_FALSE(is_k_transitive(agl32, 4));
  // On 4 points AGL(2,2) is the whole of S_4.
  CHECK(is_k_transitive(affine_f2_action(2), 4));
}

TEST_CASE("catalog generators") {
  for (std::size_t n = 2; n <= 7; ++n)
    CHECK(PermGroup(n, symmetric_generators(n)).order() == factorial(n));
  for (std::size_t n = 3; n <= 7; ++n)
    CHECK(PermGroup(n, alternating_generators(n)).order() == factorial(n) / 2);
  CHECK(PermGroup(6, cyclic_generators(6)).order() == 6);
  CHECK(PermGroup(5, dihedral_generators(5)).order() == 10);
  CHECK(PermGroup(8, quaternion_generators()).order() == 8);
  auto m11 = PermGroup(11, mathieu11_generators());
  CHECK(m11.order() == 7920);
  CHECK(is_k_transitive(m11, 4));
  CHECK_FALSE(is_k_transitive(m11, 5));
  auto m12 = PermGroup(12, mathieu12_generators());
  CHECK(m12.order() == 95040);
  CHECK(is_k_transitive(m12, 5));
  CHECK_FALSE(is_k_transitive(m12, 6));
}
