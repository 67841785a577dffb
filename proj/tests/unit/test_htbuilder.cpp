#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "tdlab/error.hpp"
#include "tdlab/htbuilder.hpp"

using namespace tdlab;
using nlohmann::json;

namespace {

const FreeWord e{};
const FreeWord x1{1};
const FreeWord x2{2};

// Membership in <x1^2, x2>: every maximal x1-syllable of the reduced word has
// even exponent (normal form in the free product <x1^2> * <x2>).
bool in_even_x1(const FreeWord& w) {
  int run = 0;
  for (int l : free_reduce(w)) {
    if (l == 1 || l == -1) {
      run += l;
    } else {
      if (run % 2 != 0) return false;
      run = 0;
    }
  }
  return run % 2 == 0;
}

}  // namespace

TEST_CASE("admissibility") {
  CoreGraph trivial(2);
  CoreGraph h1 = CoreGraph::from_words({x1}, 2);
  CHECK(is_admissible(trivial, {e}, {e}));
  CHECK_FALSE(is_admissible(h1, {e, x1}, {e, x2}));
  CHECK(is_admissible(h1, {e, x2}, {x2, e}));
  CHECK_THROWS_AS(is_admissible(h1, {e}, {e, x2}), PreconditionError);
  CHECK_THROWS_AS(is_admissible(h1, {}, {}), PreconditionError);
}

TEST_CASE("conjugator search") {
  CoreGraph trivial(2);
  CHECK(find_conjugator_outside(trivial, {1, 2}) == e);
  CHECK(find_conjugator_outside(trivial, {-2}) == e);

  std::size_t tried = 0;
  CoreGraph h1 = CoreGraph::from_words({x1}, 2);
  CHECK(find_conjugator_outside(h1, x1, 100, &tried) == x2);
  CHECK(tried == 4);

  CoreGraph h = CoreGraph::from_words({{1, 1}, x2}, 2);
  FreeWord expected;
  for (std::uint64_t r = 0;; ++r) {
    FreeWord u = shortlex_unrank(r, 2);
    if (!in_even_x1(free_conjugate(x2, u))) {
      expected = u;
      break;
    }
  }
  CHECK(expected == x1);
  CHECK(find_conjugator_outside(h, x2) == expected);

  CHECK_THROWS_AS(find_conjugator_outside(h1, e), PreconditionError);
  CHECK_THROWS_AS(find_conjugator_outside(CoreGraph::from_words({x1, x2}, 2), x1),
                  PreconditionError);
  CHECK_THROWS_AS(find_conjugator_outside(h1, x1, 3), BoundExceeded);
}

TEST_CASE("diagonal tuple schedule") {
  using P = std::pair<std::vector<FreeWord>, std::vector<FreeWord>>;
  const FreeWord X1{-1};
  // d = 1: m = 1, R = 0. d = 2: m = 1, R = 1 then m = 2, R = 0.
  // d = 3: m = 1, R = 2 starts with rank vector [0, 2].
  CHECK(tuple_pair(1, 2) == P{{e}, {e}});
  CHECK(tuple_pair(2, 2) == P{{e}, {x1}});
  CHECK(tuple_pair(3, 2) == P{{x1}, {e}});
  CHECK(tuple_pair(4, 2) == P{{x1}, {x1}});
  CHECK(tuple_pair(5, 2) == P{{e, e}, {e, e}});
  CHECK(tuple_pair(6, 2) == P{{e}, {X1}});
  CHECK(tuple_pair(10, 2) == P{{X1}, {X1}});
  CHECK(tuple_pair(11, 2).first.size() == 2);
  CHECK_THROWS_AS(tuple_pair(0, 2), PreconditionError);
}

TEST_CASE("single extension steps") {
  HtConfig config;
  Stage s(2);
  s.B = {{1, 2}};
  auto r = extend_stage(s, {e}, {e}, config);
  CHECK(r.admissible);
  REQUIRE(r.t);
  CHECK(*r.t == e);
  CHECK(r.stage.H == CoreGraph(2));
  CHECK(check_stage_invariants(r.stage, &s.H).empty());

  // The shortlex-least t is the empty word: K = <x2^-1> avoids x1.
  Stage s2(2);
  s2.B = {x1};
  auto r2 = extend_stage(s2, {e}, {x2}, config);
  REQUIRE(r2.t);
  CHECK(*r2.t == e);
  CHECK(r2.stage.H == CoreGraph::from_words({x2}, 2));
  CHECK_FALSE(r2.stage.H.contains(x1));
  CHECK_FALSE(r2.stage.H.index().has_value());
  CHECK(r2.stage.H.same_coset(free_mul(*r2.t, e), x2));
  CHECK(check_stage_invariants(r2.stage, &s2.H).empty());

  // t = x2 is also a witness: its generator x2^-1 x2 is trivial.
  CoreGraph K = s2.H.with_words({free_mul(free_inverse(x2), x2)});
  CHECK(K == CoreGraph(2));
  CHECK(K.same_coset(x2, x2));

  // Inadmissible pairs pass through unchanged.
  Stage s3(2);
  s3.H = CoreGraph::from_words({x1}, 2);
  auto r3 = extend_stage(s3, {e, x1}, {e, x2}, config);
  CHECK_FALSE(r3.admissible);
  CHECK_FALSE(r3.t);
  CHECK(r3.stage.H == s3.H);
  CHECK(r3.stage.witnesses.empty());

  HtConfig tight;
  tight.t_budget = 1;
  Stage s4(2);
  s4.B = {x1};
  CHECK_THROWS_AS(extend_stage(s4, {e}, {x1}, tight), BoundExceeded);
}

TEST_CASE("zero stages give the regular action prefix") {
  HtConfig config;
  config.stages = 0;
  config.prefix_size = 20;
  auto r = run_builder(config);
  CHECK(r.completed);
  CHECK(r.stages.empty());
  REQUIRE(r.action_prefix.representatives.size() == 20);
  for (std::size_t i = 0; i < 20; ++i)
    CHECK(r.action_prefix.representatives[i] == shortlex_unrank(i, 2));
  CHECK(verify_report(r).ok);
}

TEST_CASE("six-stage run re-verified independently") {
  HtConfig config;
  config.stages = 6;
  auto r = run_builder(config);
  REQUIRE(r.completed);
  REQUIRE(r.stages.size() == 6);
  CHECK(verify_report(r).ok);

  std::vector<CoreGraph> H;
  for (const auto& s : r.stages) H.push_back(CoreGraph::from_words(s.H_generators, 2));
  for (std::size_t i = 0; i < H.size(); ++i) {
    CHECK_FALSE(H[i].index().has_value());
    for (std::size_t j = 0; j <= i; ++j) CHECK_FALSE(H[i].contains(r.stages[j].b_word));
    if (i > 0)
      for (const auto& g : r.stages[i - 1].H_generators) CHECK(H[i].contains(g));
    for (std::size_t j = 0; j <= i; ++j) {
      const auto& s = r.stages[j];
      if (!s.t) continue;
      for (std::size_t m = 0; m < s.a.size(); ++m)
        CHECK(H[i].same_coset(free_mul(*s.t, s.a[m]), s.b[m]));
    }
    CHECK(r.stages[i].g == shortlex_unrank(i + 1, 2));
    CHECK(r.stages[i].b_word == free_conjugate(r.stages[i].g, r.stages[i].u));
  }
  for (const auto& c : r.witness_checks) CHECK(c.status != "mismatch");
  CHECK_FALSE(r.action_prefix.saturated);

  const std::string text = report_to_json(r);
  CHECK(report_to_json(run_builder(config)) == text);
  CHECK(report_to_json(report_from_json(text)) == text);
  CHECK(verify_report_json(text).ok);
}

TEST_CASE("tampering is detected") {
  HtConfig config;
  config.stages = 8;
  const std::string text = report_to_json(run_builder(config));
  REQUIRE(verify_report_json(text).ok);

  json j = json::parse(text);
  auto& B = j["stages"][6]["B"];
  B.erase(B.begin() + 1);
  CHECK_FALSE(verify_report_json(j.dump()).ok);

  // Find a stage whose witness is not the empty word and blank it.
  json k = json::parse(text);
  bool found = false;
  for (auto& s : k["stages"]) {
    if (s["t"].is_null() || s["t"].empty()) continue;
    bool eps_works = true;
    CoreGraph H = CoreGraph::from_words(s["H_generators"].get<std::vector<FreeWord>>(), 2);
    for (std::size_t m = 0; m < s["a"].size(); ++m)
      eps_works = eps_works && H.same_coset(s["a"][m].get<FreeWord>(), s["b"][m].get<FreeWord>());
    if (eps_works) continue;
    s["t"] = json::array();
    found = true;
    break;
  }
  REQUIRE(found);
  CHECK_FALSE(verify_report_json(k.dump()).ok);

  json l = json::parse(text);
  l["stages"][2]["H_generators"] = json::array();
  CHECK_FALSE(verify_report_json(l.dump()).ok);

  json m = json::parse(text);
  m["action_prefix"]["images"][0][0] = 5;
  CHECK_FALSE(verify_report_json(m.dump()).ok);

  CHECK_FALSE(verify_report_json("{ not json").ok);
}

TEST_CASE("shuffled schedule and partial reports") {
  HtConfig config;
  config.stages = 12;
  config.shuffle = true;
  config.seed = 7;
  auto r = run_builder(config);
  CHECK(r.completed);
  CHECK(verify_report(r).ok);
  CHECK(report_to_json(run_builder(config)) == report_to_json(r));

  HtConfig tight;
  tight.stages = 6;
  tight.t_budget = 1;
  auto p = run_builder(tight);
  CHECK_FALSE(p.completed);
  CHECK(p.stages.size() < 6);
  CHECK(p.error.find("stage") == 0);
  CHECK_FALSE(verify_report(p).ok);
}

TEST_CASE("config text") {
  auto c = parse_ht_config("rank = 3\n# comment\nstages = 4\nseed = 9\nshuffle = true\n");
  CHECK(c.rank == 3);
  CHECK(c.stages == 4);
  CHECK(c.seed == 9);
  CHECK(c.shuffle);
  auto d = parse_ht_config(R"({"rank": 2, "stages": 7, "t_budget": 10})");
  CHECK(d.stages == 7);
  CHECK(d.t_budget == 10);
  CHECK_THROWS_AS(parse_ht_config("colour = 3"), ParseError);
  CHECK_THROWS_AS(parse_ht_config("stages = many"), ParseError);
  CHECK_THROWS_AS(run_builder(HtConfig{1}), PreconditionError);
}
