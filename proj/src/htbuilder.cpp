#include "tdlab/htbuilder.hpp"

#include <json.hpp>

#include <cctype>
#include <limits>
#include <random>
#include <sstream>

#include "tdlab/error.hpp"

namespace tdlab {

using nlohmann::json;

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform in [0, n) by rejection, so the result does not depend on the
// standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % n;
}

void shuffle_class(std::vector<FreeWord>& words, std::uint64_t seed, std::size_t stage,
                   std::size_t length) {
  std::mt19937_64 rng(splitmix(seed ^ splitmix(stage * 1000003ULL + length)));
  for (std::size_t i = words.size(); i > 1; --i)
    std::swap(words[i - 1], words[uniform_below(rng, i)]);
}

std::vector<FreeWord> extension_words(const std::vector<FreeWord>& a,
                                      const std::vector<FreeWord>& b, const FreeWord& t) {
  std::vector<FreeWord> out;
  for (std::size_t j = 0; j < a.size(); ++j)
    out.push_back(free_mul(free_mul(free_inverse(b[j]), t), a[j]));
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

long long coset_index(const CoreGraph& H, const CosetActionPrefix& p, const FreeWord& w) {
  for (std::size_t i = 0; i < p.representatives.size(); ++i)
    if (H.same_coset(w, p.representatives[i])) return static_cast<long long>(i);
  return -1;
}

// Image of coset `start` under the left action of t, or -1 if it leaves the prefix.
long long act(const CosetActionPrefix& p, const FreeWord& t, long long start) {
  long long cur = start;
  for (auto it = t.rbegin(); it != t.rend() && cur >= 0; ++it) {
    const auto& row = p.images[std::abs(*it) - 1];
    if (*it > 0) {
      cur = row[cur];
    } else {
      long long pre = -1;
      for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] == cur) pre = static_cast<long long>(j);
      cur = pre;
    }
  }
  return cur;
}

std::vector<WitnessCheck> prefix_checks(const CoreGraph& H, const CosetActionPrefix& p,
                                        const std::vector<StageRecord>& stages) {
  std::vector<WitnessCheck> out;
  for (const auto& s : stages) {
    if (!s.t) continue;
    for (std::size_t j = 0; j < s.a.size(); ++j) {
      WitnessCheck c;
      c.stage = s.index;
      c.j = j;
      c.a_coset = coset_index(H, p, s.a[j]);
      c.b_coset = coset_index(H, p, s.b[j]);
      if (c.a_coset < 0 || c.b_coset < 0) {
        c.status = "outside-prefix";
      } else {
        long long img = act(p, *s.t, c.a_coset);
        c.status = img < 0 ? "outside-prefix" : img == c.b_coset ? "ok" : "mismatch";
      }
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

bool is_admissible(const CoreGraph& H, const std::vector<FreeWord>& a,
                   const std::vector<FreeWord>& b) {
  if (a.empty() || a.size() != b.size())
    throw PreconditionError("tuples must be nonempty and of equal length");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (H.same_coset(a[i], a[j]) || H.same_coset(b[i], b[j])) return false;
  return true;
}

FreeWord find_conjugator_outside(const CoreGraph& H, const FreeWord& g,
                                 std::size_t budget, std::size_t* tried) {
  const int k = H.rank_of_free_group();
  check_rank(g, k);
  FreeWord gr = free_reduce(g);
  if (gr.empty()) throw PreconditionError("g must be nontrivial");
  if (H.index()) throw PreconditionError("H must have infinite index");
  for (std::uint64_t r = 0; r < budget; ++r) {
    FreeWord u = shortlex_unrank(r, k);
    if (!H.contains(free_conjugate(gr, u))) {
      if (tried) *tried = r + 1;
      return u;
    }
  }
  if (tried) *tried = budget;
  throw BoundExceeded("no conjugator found within " + std::to_string(budget) +
                      " candidates for g = " + to_letters(gr));
}

ExtendResult extend_stage(const Stage& s, const std::vector<FreeWord>& a,
                          const std::vector<FreeWord>& b, const HtConfig& config) {
  const int k = s.H.rank_of_free_group();
  for (const auto& w : a) check_rank(w, k);
  for (const auto& w : b) check_rank(w, k);
  ExtendResult res{s, false, std::nullopt, 0};
  if (!is_admissible(s.H, a, b)) return res;
  res.admissible = true;
  std::size_t finite_index = 0, hits_b = 0;
  for (std::size_t len = 0;; ++len) {
    auto cls = reduced_words_of_length(k, len);
    if (config.shuffle) shuffle_class(cls, config.seed, s.i, len);
    for (const auto& t : cls) {
      if (res.candidates >= config.t_budget)
        throw BoundExceeded("no t found for stage " + std::to_string(s.i) + " within " +
                            std::to_string(config.t_budget) + " candidates up to length " +
                            std::to_string(len) + " (" + std::to_string(finite_index) +
                            " of finite index, " + std::to_string(hits_b) + " meeting B)");
      ++res.candidates;
      CoreGraph K = s.H.with_words(extension_words(a, b, t));
      if (K.index()) {
        ++finite_index;
        continue;
      }
      bool clear = true;
      for (const auto& w : s.B)
        if (K.contains(w)) {
          clear = false;
          break;
        }
      if (!clear) {
        ++hits_b;
        continue;
      }
      res.stage.H = std::move(K);
      res.stage.witnesses.push_back({a, b, t});
      res.t = t;
      return res;
    }
  }
}

std::pair<std::vector<FreeWord>, std::vector<FreeWord>> tuple_pair(std::size_t i, int k) {
  if (i == 0) throw PreconditionError("tuple pairs are numbered from 1");
  if (k < 1) throw PreconditionError("rank must be positive");
  std::uint64_t remaining = i;
  for (std::size_t d = 1;; ++d) {
    for (std::size_t m = 1; m <= d; ++m) {
      const std::uint64_t R = d - m;
      const std::uint64_t count = ipow(R + 1, 2 * m) - ipow(R, 2 * m);
      if (remaining > count) {
        remaining -= count;
        continue;
      }
      std::vector<std::uint64_t> v(2 * m, 0);
      for (;;) {
        bool hits = false;
        for (auto x : v) hits = hits || x == R;
        if (hits && --remaining == 0) break;
        std::size_t pos = v.size();
        while (pos > 0 && v[pos - 1] == R) v[--pos] = 0;
        ++v[pos - 1];
      }
      std::pair<std::vector<FreeWord>, std::vector<FreeWord>> out;
      for (std::size_t j = 0; j < m; ++j) {
        out.first.push_back(shortlex_unrank(v[j], k));
        out.second.push_back(shortlex_unrank(v[m + j], k));
      }
      return out;
    }
  }
}

std::vector<std::string> check_stage_invariants(const Stage& s, const CoreGraph* previous) {
  std::vector<std::string> problems;
  const std::string at = "stage " + std::to_string(s.i) + ": ";
  for (const auto& w : s.B)
    if (s.H.contains(w)) problems.push_back(at + "B-word " + to_letters(w) + " lies in H");
  if (previous)
    for (const auto& g : previous->basis())
      if (!s.H.contains(g))
        problems.push_back(at + "previous generator " + to_letters(g) + " not in H");
  if (s.H.index()) problems.push_back(at + "H has finite index");
  for (const auto& w : s.witnesses)
    for (std::size_t j = 0; j < w.a.size(); ++j)
      if (!s.H.same_coset(free_mul(w.t, w.a[j]), w.b[j]))
        problems.push_back(at + "witness t = " + to_letters(w.t) + " fails at entry " +
                           std::to_string(j));
  return problems;
}

namespace {

void check_config(const HtConfig& c) {
  if (c.rank < 2) throw PreconditionError("rank must be at least 2");
  if (c.prefix_size == 0) throw PreconditionError("prefix size must be positive");
}

}  // namespace

BuildReport run_builder(const HtConfig& config) {
  check_config(config);
  const int k = config.rank;
  BuildReport report;
  report.config = config;
  Stage stage(k);
  for (std::size_t i = 1; i <= config.stages; ++i) {
    try {
      StageRecord rec;
      rec.index = i;
      rec.g = shortlex_unrank(i, k);
      rec.u = find_conjugator_outside(stage.H, rec.g, config.conjugator_budget,
                                      &rec.conjugator_candidates);
      rec.b_word = free_conjugate(rec.g, rec.u);
      std::tie(rec.a, rec.b) = tuple_pair(i, k);
      Stage next = stage;
      next.i = i;
      next.B.push_back(rec.b_word);
      next.conjugators.push_back(rec.u);
      ExtendResult ext = extend_stage(next, rec.a, rec.b, config);
      rec.admissible = ext.admissible;
      rec.t = ext.t;
      rec.t_candidates = ext.candidates;
      auto problems = check_stage_invariants(ext.stage, &stage.H);
      if (!problems.empty()) throw Error(problems.front());
      stage = std::move(ext.stage);
      rec.B = stage.B;
      rec.H_generators = stage.H.basis();
      rec.H_vertices = stage.H.num_vertices();
      for (const auto& w : stage.B) rec.b_outside.push_back(!stage.H.contains(w));
      for (const auto& w : stage.witnesses) {
        bool ok = true;
        for (std::size_t j = 0; j < w.a.size(); ++j)
          ok = ok && stage.H.same_coset(free_mul(w.t, w.a[j]), w.b[j]);
        rec.witnesses_hold.push_back(ok);
      }
      report.total_t_candidates += rec.t_candidates;
      report.total_conjugator_candidates += rec.conjugator_candidates;
      report.max_vertices = std::max(report.max_vertices, rec.H_vertices);
      report.stages.push_back(std::move(rec));
    } catch (const Error& e) {
      report.completed = false;
      report.error = "stage " + std::to_string(i) + ": " + e.what();
      break;
    }
  }
  report.action_prefix = stage.H.coset_action_prefix(config.prefix_size);
  report.witness_checks = prefix_checks(stage.H, report.action_prefix, report.stages);
  return report;
}

namespace {

json config_json(const HtConfig& c) {
  return json{{"rank", c.rank},
              {"stages", c.stages},
              {"seed", c.seed},
              {"shuffle", c.shuffle},
              {"conjugator_budget", c.conjugator_budget},
              {"t_budget", c.t_budget},
              {"prefix_size", c.prefix_size}};
}

HtConfig config_from(const json& j) {
  HtConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "rank") c.rank = value.get<int>();
    else if (key == "stages") c.stages = value.get<std::size_t>();
    else if (key == "seed") c.seed = value.get<std::uint64_t>();
    else if (key == "shuffle") c.shuffle = value.get<bool>();
    else if (key == "conjugator_budget") c.conjugator_budget = value.get<std::size_t>();
    else if (key == "t_budget") c.t_budget = value.get<std::size_t>();
    else if (key == "prefix_size") c.prefix_size = value.get<std::size_t>();
    else throw ParseError("unknown config key " + key);
  }
  return c;
}

}  // namespace

std::string report_to_json(const BuildReport& r) {
  json j;
  j["config"] = config_json(r.config);
  j["completed"] = r.completed;
  j["error"] = r.error;
  json stages = json::array();
  for (const auto& s : r.stages) {
    json js;
    js["index"] = s.index;
    js["g"] = s.g;
    js["u"] = s.u;
    js["b_word"] = s.b_word;
    js["B"] = s.B;
    js["a"] = s.a;
    js["b"] = s.b;
    js["admissible"] = s.admissible;
    js["t"] = s.t ? json(*s.t) : json(nullptr);
    js["H_generators"] = s.H_generators;
    js["H_vertices"] = s.H_vertices;
    js["certificates"] = json{{"b_outside", s.b_outside},
                              {"chain", s.chain},
                              {"infinite_index", s.infinite_index},
                              {"witnesses_hold", s.witnesses_hold}};
    js["search"] = json{{"t_candidates", s.t_candidates},
                        {"conjugator_candidates", s.conjugator_candidates}};
    stages.push_back(std::move(js));
  }
  j["stages"] = std::move(stages);
  j["action_prefix"] = json{{"representatives", r.action_prefix.representatives},
                            {"images", r.action_prefix.images},
                            {"saturated", r.action_prefix.saturated}};
  json checks = json::array();
  for (const auto& c : r.witness_checks)
    checks.push_back(json{{"stage", c.stage},
                          {"j", c.j},
                          {"a_coset", c.a_coset},
                          {"b_coset", c.b_coset},
                          {"status", c.status}});
  j["witness_prefix_checks"] = std::move(checks);
  j["statistics"] = json{{"stages_run", r.stages.size()},
                         {"total_t_candidates", r.total_t_candidates},
                         {"total_conjugator_candidates", r.total_conjugator_candidates},
                         {"max_vertices", r.max_vertices}};
  return j.dump(2) + "\n";
}

BuildReport report_from_json(std::string_view text) {
  try {
    json j = json::parse(text);
    BuildReport r;
    r.config = config_from(j.at("config"));
    r.completed = j.at("completed").get<bool>();
    r.error = j.at("error").get<std::string>();
    for (const auto& js : j.at("stages")) {
      StageRecord s;
      s.index = js.at("index").get<std::size_t>();
      s.g = js.at("g").get<FreeWord>();
      s.u = js.at("u").get<FreeWord>();
      s.b_word = js.at("b_word").get<FreeWord>();
      s.B = js.at("B").get<std::vector<FreeWord>>();
      s.a = js.at("a").get<std::vector<FreeWord>>();
      s.b = js.at("b").get<std::vector<FreeWord>>();
      s.admissible = js.at("admissible").get<bool>();
      if (!js.at("t").is_null()) s.t = js.at("t").get<FreeWord>();
      s.H_generators = js.at("H_generators").get<std::vector<FreeWord>>();
      s.H_vertices = js.at("H_vertices").get<std::size_t>();
      const auto& c = js.at("certificates");
      s.b_outside = c.at("b_outside").get<std::vector<bool>>();
      s.chain = c.at("chain").get<bool>();
      s.infinite_index = c.at("infinite_index").get<bool>();
      s.witnesses_hold = c.at("witnesses_hold").get<std::vector<bool>>();
      s.t_candidates = js.at("search").at("t_candidates").get<std::size_t>();
      s.conjugator_candidates = js.at("search").at("conjugator_candidates").get<std::size_t>();
      r.stages.push_back(std::move(s));
    }
    const auto& p = j.at("action_prefix");
    r.action_prefix.representatives = p.at("representatives").get<std::vector<FreeWord>>();
    r.action_prefix.images = p.at("images").get<std::vector<std::vector<long long>>>();
    r.action_prefix.saturated = p.at("saturated").get<bool>();
    for (const auto& c : j.at("witness_prefix_checks"))
      r.witness_checks.push_back({c.at("stage").get<std::size_t>(), c.at("j").get<std::size_t>(),
                                  c.at("a_coset").get<long long>(),
                                  c.at("b_coset").get<long long>(),
                                  c.at("status").get<std::string>()});
    const auto& st = j.at("statistics");
    r.total_t_candidates = st.at("total_t_candidates").get<std::size_t>();
    r.total_conjugator_candidates = st.at("total_conjugator_candidates").get<std::size_t>();
    r.max_vertices = st.at("max_vertices").get<std::size_t>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

VerifyResult verify_report(const BuildReport& r) {
  VerifyResult res;
  auto fail = [&](std::string msg) {
    res.ok = false;
    res.failures.push_back(std::move(msg));
  };
  try {
    check_config(r.config);
    const int k = r.config.rank;
    if (!r.completed) fail("run did not complete: " + r.error);
    if (r.completed && r.stages.size() != r.config.stages)
      fail("report has " + std::to_string(r.stages.size()) + " stages, config asks for " +
           std::to_string(r.config.stages));

    CoreGraph prev(k);
    std::vector<FreeWord> prev_gens;
    std::vector<FreeWord> B;
    std::vector<Witness> witnesses;
    for (std::size_t n = 0; n < r.stages.size(); ++n) {
      const auto& s = r.stages[n];
      const std::string at = "stage " + std::to_string(n + 1) + ": ";
      auto words_ok = [&](const FreeWord& w) {
        check_rank(w, k);
        if (!is_reduced(w)) throw PreconditionError("unreduced word " + to_letters(w));
      };
      if (s.index != n + 1) fail(at + "wrong index");
      words_ok(s.g);
      words_ok(s.u);
      words_ok(s.b_word);
      if (s.g != shortlex_unrank(n + 1, k)) fail(at + "g does not follow the element schedule");
      auto [a, b] = tuple_pair(n + 1, k);
      if (s.a != a || s.b != b) fail(at + "tuple pair does not follow the schedule");
      if (s.b_word != free_conjugate(s.g, s.u)) fail(at + "B-word is not g^u");
      if (prev.contains(s.b_word)) fail(at + "g^u lies in the previous subgroup");
      const std::uint64_t urank = shortlex_rank(s.u, k);
      if (urank < r.config.conjugator_budget)
        for (std::uint64_t q = 0; q < urank; ++q)
          if (!prev.contains(free_conjugate(s.g, shortlex_unrank(q, k)))) {
            fail(at + "u is not the shortlex-least conjugator");
            break;
          }
      B.push_back(s.b_word);
      if (s.B != B) fail(at + "recorded B differs from the accumulated B-set");

      const bool admissible = is_admissible(prev, s.a, s.b);
      if (admissible != s.admissible) fail(at + "admissibility flag is wrong");
      CoreGraph expected = prev;
      if (admissible) {
        if (!s.t) {
          fail(at + "admissible pair without a witness");
        } else {
          words_ok(*s.t);
          auto gens = prev_gens;
          for (auto& w : extension_words(s.a, s.b, *s.t)) gens.push_back(w);
          expected = CoreGraph::from_words(gens, k);
          witnesses.push_back({s.a, s.b, *s.t});
        }
      } else if (s.t) {
        fail(at + "witness recorded for an inadmissible pair");
      }

      for (const auto& w : s.H_generators) words_ok(w);
      CoreGraph K = CoreGraph::from_words(s.H_generators, k);
      if (!(K == expected)) fail(at + "H is not the prescribed extension");
      for (const auto& g : prev_gens)
        if (!K.contains(g)) fail(at + "chain condition fails for " + to_letters(g));
      if (K.index()) fail(at + "H has finite index");
      if (K.num_vertices() != s.H_vertices) fail(at + "vertex count differs");
      if (s.b_outside.size() != B.size()) fail(at + "B certificate count differs");
      for (std::size_t j = 0; j < B.size(); ++j) {
        if (K.contains(B[j])) fail(at + "B-word " + to_letters(B[j]) + " lies in H");
        if (j < s.b_outside.size() && !s.b_outside[j]) fail(at + "B certificate recorded false");
      }
      if (!s.chain || !s.infinite_index) fail(at + "certificate recorded false");
      if (s.witnesses_hold.size() != witnesses.size()) fail(at + "witness certificate count differs");
      for (std::size_t w = 0; w < witnesses.size(); ++w) {
        for (std::size_t j = 0; j < witnesses[w].a.size(); ++j)
          if (!K.same_coset(free_mul(witnesses[w].t, witnesses[w].a[j]), witnesses[w].b[j]))
            fail(at + "witness " + std::to_string(w) + " fails at entry " + std::to_string(j));
        if (w < s.witnesses_hold.size() && !s.witnesses_hold[w])
          fail(at + "witness certificate recorded false");
      }
      prev = std::move(K);
      prev_gens = s.H_generators;
    }

    auto prefix = prev.coset_action_prefix(r.config.prefix_size);
    if (prefix.representatives != r.action_prefix.representatives ||
        prefix.images != r.action_prefix.images ||
        prefix.saturated != r.action_prefix.saturated)
      fail("action prefix differs from the recomputed one");
    if (prefix.saturated) fail("final subgroup has finite index");
    auto checks = prefix_checks(prev, prefix, r.stages);
    bool same = checks.size() == r.witness_checks.size();
    for (std::size_t i = 0; same && i < checks.size(); ++i) {
      const auto& x = checks[i];
      const auto& y = r.witness_checks[i];
      same = x.stage == y.stage && x.j == y.j && x.a_coset == y.a_coset &&
             x.b_coset == y.b_coset && x.status == y.status;
    }
    if (!same) fail("witness prefix checks differ from the recomputed ones");
    for (const auto& c : checks)
      if (c.status == "mismatch") fail("witness of stage " + std::to_string(c.stage) +
                                       " maps cosets wrongly in the prefix");
  } catch (const Error& e) {
    fail(std::string("invalid report: ") + e.what());
  }
  return res;
}

VerifyResult verify_report_json(std::string_view text) {
  try {
    return verify_report(report_from_json(text));
  } catch (const ParseError& e) {
    return {false, {e.what()}};
  }
}

HtConfig parse_ht_config(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    try {
      return config_from(json::parse(text));
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad config: ") + e.what());
    }
  }
  json j = json::object();
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value: " + line);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value == "true" || value == "false") {
      j[key] = value == "true";
      continue;
    }
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(value, &used);
      if (used != value.size()) throw ParseError("bad value for " + key);
      j[key] = v;
    } catch (const std::logic_error&) {
      throw ParseError("bad value for " + key + ": " + value);
    }
  }
  try {
    return config_from(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad config: ") + e.what());
  }
}

}  // namespace tdlab
