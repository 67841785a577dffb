#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tdlab/constructions.hpp"
#include "tdlab/corpus.hpp"
#include "tdlab/error.hpp"
#include "tdlab/htbuilder.hpp"
#include "tdlab/marked.hpp"
#include "tdlab/mixed_word.hpp"
#include "tdlab/perm_group.hpp"

using namespace tdlab;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

CorpusGroup load_group(const std::string& name) {
  return load_corpus_group(resolve_group_path(name));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  out << text;
}

std::vector<Point> parse_points(const std::string& text) {
  std::vector<Point> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    std::istringstream words(tok);
    std::string w;
    while (words >> w) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(w, &used);
      } catch (const std::logic_error&) {
        used = 0;
      }
      if (used != w.size() || v == 0) throw ParseError("bad point " + w);
      out.push_back(v);
    }
  }
  return out;
}

SeparatorFactor parse_factor(const std::string& text) {
  auto colon = text.rfind(':');
  if (colon == std::string::npos) throw ParseError("factor must be NAME:ALPHA, got " + text);
  const std::string name = text.substr(0, colon);
  long long alpha = 0;
  try {
    std::size_t used = 0;
    alpha = std::stoll(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw ParseError("bad exponent in " + text);
  } catch (const std::logic_error&) {
    throw ParseError("bad exponent in " + text);
  }
  if (name == "pairwise") return {LazyPerm::pairwise_swapper(), alpha};
  if (name == "shifted") return {LazyPerm::shifted_swapper(), alpha};
  if (name == "triple") return {LazyPerm::triple_rotator(), alpha};
  throw ParseError("unknown factor " + name + " (pairwise, shifted, triple)");
}

int cmd_transitivity(const std::string& group, std::optional<std::size_t> k, bool td,
                     std::uint64_t td_budget, const std::string& json_out) {
  auto cg = load_group(group);
  auto G = cg.group();
  if (k) {
    const bool holds = *k >= 1 && *k <= G.domain_size() && is_k_transitive(G, *k);
    std::cout << (holds ? "true" : "false") << "\n";
    if (!json_out.empty())
      write_output(json_out, json{{"group", cg.name}, {"k", *k}, {"k_transitive", holds}}.dump(2) + "\n");
    return kOk;
  }
  json j;
  j["group"] = cg.name;
  j["domain"] = G.domain_size();
  j["order"] = G.order();
  j["transitivity"] = transitivity_of_action(G);
  const bool primitive = G.is_transitive() && !minimal_block_system(G);
  j["primitive"] = primitive;
  std::cout << "group " << cg.name << " on " << G.domain_size() << " points, order "
            << G.order() << "\n";
  std::cout << "transitivity " << j["transitivity"].get<std::size_t>() << "\n";
  std::cout << "primitive " << (primitive ? "yes" : "no") << "\n";
  if (td) {
    auto r = transitivity_degree_finite(G, td_budget);
    j["td"] = json{{"degree", r.degree},
                   {"subgroups", r.subgroups},
                   {"core_free_subgroups", r.core_free_subgroups},
                   {"best_action_degree", r.best_action_degree}};
    std::cout << "td " << r.degree << " (action on " << r.best_action_degree << " points)\n";
  }
  if (!json_out.empty()) write_output(json_out, j.dump(2) + "\n");
  return kOk;
}

int cmd_cameron(const std::string& group, std::size_t k, std::uint64_t max_order,
                const std::string& json_out) {
  auto cg = load_group(group);
  auto r = verify_cameron(cg.group(), k, max_order);
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back(json{{"order", e.order}, {"transitivity", e.transitivity}, {"branch", e.branch}});
    std::cout << "normal subgroup of order " << e.order << ": " << e.transitivity
              << "-transitive, " << e.branch << "\n";
  }
  std::cout << (r.passed ? "passed" : "failed") << "\n";
  if (!json_out.empty())
    write_output(json_out, json{{"group", cg.name},
                                {"k", r.k},
                                {"group_order", r.group_order},
                                {"entries", entries},
                                {"passed", r.passed}}
                                   .dump(2) +
                               "\n");
  return r.passed ? kOk : kViolation;
}

int cmd_mif(const std::string& group, const std::string& word, std::uint64_t budget,
            unsigned threads) {
  auto cg = load_group(group);
  auto G = FiniteGroupTable::from_perm_group(cg.group());
  auto w = parse_mixed_word(G, word);
  auto r = is_mixed_identity(G, w, budget, threads);
  if (r.holds) {
    std::cout << "identity holds (" << r.evaluations << " assignments)\n";
    return kOk;
  }
  std::cout << "not an identity; witness";
  for (std::size_t i = 0; i < r.witness->size(); ++i)
    std::cout << " x" << i + 1 << "=" << G.label((*r.witness)[i]);
  std::cout << "\n";
  return kViolation;
}

int cmd_nonrel(const std::string& s_text, const std::string& x_text,
               const std::vector<std::string>& factor_texts) {
  FinitaryPerm s = parse_perm(s_text);
  auto X = parse_points(x_text);
  std::vector<SeparatorFactor> factors;
  for (const auto& f : factor_texts) factors.push_back(parse_factor(f));
  auto r = construct_separating_permutation(s, X, factors);
  bool restrict_ok = true;
  for (Point x : X) restrict_ok = restrict_ok && r.t(x) == s(x);
  auto trace = trace_factors(r.t, factors, r.plan.n0);
  const bool moves = trace.back() != r.plan.n0;
  std::cout << "t = " << to_string(r.t) << "\n";
  std::cout << "n0 = " << r.plan.n0 << ", image " << trace.back() << "\n";
  std::cout << "t agrees with s on X: " << (restrict_ok ? "yes" : "no") << "\n";
  std::cout << "word moves n0: " << (moves ? "yes" : "no") << "\n";
  return restrict_ok && moves ? kOk : kViolation;
}

struct BuildFlags {
  std::string config_file;
  std::string out;
  int rank = 2;
  std::size_t stages = 6;
  std::uint64_t seed = 0;
  bool shuffle = false;
  std::size_t prefix = 32;
  std::size_t t_budget = 50000;
  std::size_t conjugator_budget = 100000;
};

int cmd_build(const BuildFlags& f, CLI::App* sub) {
  HtConfig c;
  if (!f.config_file.empty()) c = parse_ht_config(read_file(f.config_file));
  if (sub->count("--rank")) c.rank = f.rank;
  if (sub->count("--stages")) c.stages = f.stages;
  if (sub->count("--seed")) c.seed = f.seed;
  if (sub->count("--shuffle")) c.shuffle = f.shuffle;
  if (sub->count("--prefix")) c.prefix_size = f.prefix;
  if (sub->count("--t-budget")) c.t_budget = f.t_budget;
  if (sub->count("--conjugator-budget")) c.conjugator_budget = f.conjugator_budget;
  auto r = run_builder(c);
  const std::string text = report_to_json(r);
  if (f.out.empty()) {
    std::cout << text;
  } else {
    write_output(f.out, text);
    std::size_t ok = 0, outside = 0;
    for (const auto& w : r.witness_checks) (w.status == "ok" ? ok : outside) += 1;
    std::cout << "stages " << r.stages.size() << "/" << c.stages
              << (r.completed ? "" : " (aborted: " + r.error + ")") << "\n";
    if (!r.stages.empty())
      std::cout << "final subgroup: " << r.stages.back().H_vertices << " vertices, "
                << r.stages.back().H_generators.size() << " generators\n";
    std::cout << "prefix witness checks: " << ok << " ok, " << outside << " outside prefix\n";
    std::cout << "report written to " << f.out << "\n";
  }
  return r.completed ? kOk : kViolation;
}

int cmd_verify(const std::string& path) {
  auto r = verify_report_json(read_file(path));
  if (r.ok) {
    std::cout << "ok\n";
    return kOk;
  }
  for (const auto& f : r.failures) std::cout << "FAIL " << f << "\n";
  return kViolation;
}

int cmd_distance(const std::string& a, const std::string& b, std::size_t radius) {
  auto ma = MarkedGroup::from_corpus(load_group(a));
  auto mb = MarkedGroup::from_corpus(load_group(b));
  auto d = marked_distance(ma, mb, radius);
  std::cout << d.to_string();
  if (d.kind == MarkedDistance::Kind::Exact) std::cout << " (separating word " << to_letters(d.witness) << ")";
  std::cout << "\n";
  return kOk;
}

int cmd_construct(const std::string& kind, std::size_t n, const std::string& group,
                  const std::string& out) {
  CorpusGroup g;
  std::string comment = kind;
  auto set = [&](std::size_t domain, std::vector<FinitaryPerm> gens) {
    g.domain = domain;
    g.generators = std::move(gens);
  };
  auto need_n = [&](std::size_t lo) {
    if (n < lo) throw PreconditionError(kind + " needs --n >= " + std::to_string(lo));
    comment += " " + std::to_string(n);
  };
  if (kind == "symmetric") {
    need_n(1);
    set(n, symmetric_generators(n));
  } else if (kind == "alternating") {
    need_n(1);
    set(n, alternating_generators(n));
  } else if (kind == "cyclic") {
    need_n(1);
    set(n, cyclic_generators(n));
  } else if (kind == "dihedral") {
    need_n(3);
    set(n, dihedral_generators(n));
  } else if (kind == "quaternion") {
    set(8, quaternion_generators());
  } else if (kind == "klein") {
    set(4, {parse_perm("(1 2)(3 4)"), parse_perm("(1 3)(2 4)")});
  } else if (kind == "agl1") {
    need_n(2);
    set(n, affine_action(n).generators());
  } else if (kind == "aglf2") {
    need_n(1);
    auto G = affine_f2_action(n);
    set(G.domain_size(), G.generators());
  } else if (kind == "mathieu11") {
    set(11, mathieu11_generators());
  } else if (kind == "mathieu12") {
    set(12, mathieu12_generators());
  } else if (kind == "prop-hta") {
    if (group.empty()) throw PreconditionError("prop-hta needs --group");
    auto cg = load_group(group);
    auto Q = FiniteGroupTable::from_perm_group(cg.group());
    std::vector<Element> xs;
    for (const auto& p : cg.generators) xs.push_back(*Q.find_perm(p));
    auto G = prop_htA_generators(Q, xs);
    set(G.domain_size(), G.generators());
    comment += " over " + cg.name;
  } else {
    throw PreconditionError("unknown construction " + kind);
  }
  write_output(out, to_corpus_text(g, comment));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transitivity degree toolkit: permutation groups, mixed identities, "
               "subgroup graphs of free groups and certified highly transitive actions."};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for parallel searches")
      ->check(CLI::Range(1u, 256u));
  std::function<int()> action;

  auto* tr = app.add_subcommand("transitivity", "k-transitivity, primitivity and td of a corpus group");
  std::string tr_group, tr_json;
  std::optional<std::size_t> tr_k;
  bool tr_td = false;
  std::uint64_t tr_budget = 60;
  tr->add_option("--group", tr_group, "Group file or corpus name")->required();
  tr->add_option("--k", tr_k, "Print whether the action is k-transitive");
  tr->add_flag("--td", tr_td, "Also compute the transitivity degree of the abstract group");
  tr->add_option("--td-budget", tr_budget, "Largest group order for --td");
  tr->add_option("--json", tr_json, "Write a JSON report to this file");
  tr->callback([&] { action = [&] { return cmd_transitivity(tr_group, tr_k, tr_td, tr_budget, tr_json); }; });

  auto* cam = app.add_subcommand("cameron", "Check normal subgroups of a k-transitive group");
  std::string cam_group, cam_json;
  std::size_t cam_k = 2;
  std::uint64_t cam_max = 10000;
  cam->add_option("--group", cam_group, "Group file or corpus name")->required();
  cam->add_option("--k", cam_k, "Transitivity of the group (k >= 2)")->required();
  cam->add_option("--max-order", cam_max, "Largest group order to enumerate");
  cam->add_option("--json", cam_json, "Write a JSON report to this file");
  cam->callback([&] { action = [&] { return cmd_cameron(cam_group, cam_k, cam_max, cam_json); }; });

  auto* mif = app.add_subcommand("mif-test", "Decide whether a word with constants is a mixed identity");
  std::string mif_group, mif_word;
  std::uint64_t mif_budget = 10'000'000;
  mif->add_option("--group", mif_group, "Group file or corpus name")->required();
  mif->add_option("--word", mif_word, "Word, e.g. \"[x1^2,(123)]\" or \"x1 g:(1,2) X1\"")->required();
  mif->add_option("--budget", mif_budget, "Largest number of assignments to evaluate");
  mif->callback([&] { action = [&] { return cmd_mif(mif_group, mif_word, mif_budget, threads); }; });

  auto* nr = app.add_subcommand("nonrel", "Build a permutation separating a word with lazy factors");
  std::string nr_s = "()", nr_x;
  std::vector<std::string> nr_factors;
  nr->add_option("--s", nr_s, "Finitary permutation s in cycle notation");
  nr->add_option("--X", nr_x, "Finite set X, e.g. \"1,2\"")->required();
  nr->add_option("--factor", nr_factors, "NAME:ALPHA with NAME in pairwise, shifted, triple")
      ->required();
  nr->callback([&] { action = [&] { return cmd_nonrel(nr_s, nr_x, nr_factors); }; });

  auto* bh = app.add_subcommand("build-ht", "Run the certified stage construction in F_k");
  BuildFlags bf;
  bh->add_option("--config", bf.config_file, "Config file (key = value lines or JSON)");
  bh->add_option("--rank", bf.rank, "Rank of the free group");
  bh->add_option("--stages", bf.stages, "Number of stages");
  bh->add_option("--seed", bf.seed, "Seed for the shuffled candidate order");
  bh->add_flag("--shuffle", bf.shuffle, "Shuffle t candidates within each length class");
  bh->add_option("--prefix", bf.prefix, "Number of cosets in the action prefix");
  bh->add_option("--t-budget", bf.t_budget, "Candidates tried per stage");
  bh->add_option("--conjugator-budget", bf.conjugator_budget, "Conjugators tried per stage");
  bh->add_option("--out", bf.out, "Report file (standard output when omitted)");
  bh->callback([&] { action = [&] { return cmd_build(bf, bh); }; });

  auto* ver = app.add_subcommand("verify", "Re-check every certificate of a build report");
  std::string ver_path;
  ver->add_option("report", ver_path, "Report file")->required();
  ver->callback([&] { action = [&] { return cmd_verify(ver_path); }; });

  auto* dist = app.add_subcommand("distance", "Distance between two marked finite groups");
  std::string dist_a, dist_b;
  std::size_t dist_r = 10;
  dist->add_option("--a", dist_a, "First marked group file")->required();
  dist->add_option("--b", dist_b, "Second marked group file")->required();
  dist->add_option("--radius", dist_r, "Longest word length searched");
  dist->callback([&] { action = [&] { return cmd_distance(dist_a, dist_b, dist_r); }; });

  auto* con = app.add_subcommand("construct", "Write a constructed group in corpus format");
  std::string con_kind, con_group, con_out;
  std::size_t con_n = 0;
  con->add_option("kind", con_kind,
                  "symmetric, alternating, cyclic, dihedral, quaternion, klein, agl1, aglf2, "
                  "mathieu11, mathieu12, prop-hta")
      ->required();
  con->add_option("--n", con_n, "Degree, field order (agl1) or dimension (aglf2)");
  con->add_option("--group", con_group, "Group Q for prop-hta (its generators are used)");
  con->add_option("--out", con_out, "Output file (standard output when omitted)");
  con->callback([&] { action = [&] { return cmd_construct(con_kind, con_n, con_group, con_out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
}
