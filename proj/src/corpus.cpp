#include "tdlab/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tdlab/error.hpp"

#ifndef TDLAB_DEFAULT_CORPUS
#define TDLAB_DEFAULT_CORPUS "data/corpus"
#endif

namespace tdlab {

PermGroup CorpusGroup::group(std::size_t max_domain) const {
  return PermGroup(domain, generators, max_domain);
}

namespace {

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

FinitaryPerm checked_perm(std::string_view text, std::size_t n, std::size_t line) {
  FinitaryPerm p = parse_perm(text);
  if (p.max_moved() > n)
    throw ParseError("line " + std::to_string(line) + ": point outside the domain");
  return p;
}

}  // namespace

CorpusGroup parse_corpus_group(std::string_view text, std::string name) {
  CorpusGroup g;
  g.name = std::move(name);
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool have_domain = false;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (!have_domain) {
      std::istringstream ls(line);
      std::string key;
      long long n = -1;
      std::string rest;
      if (!(ls >> key >> n) || key != "domain" || n < 1 || (ls >> rest))
        throw ParseError("line " + std::to_string(line_no) + ": expected 'domain <n>'");
      g.domain = static_cast<std::size_t>(n);
      have_domain = true;
      continue;
    }
    if (line.rfind("marking", 0) == 0) {
      std::istringstream ls(line.substr(7));
      std::vector<FinitaryPerm> marks;
      std::string tok;
      while (ls >> tok) marks.push_back(checked_perm(tok, g.domain, line_no));
      if (marks.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty marking");
      g.marking = std::move(marks);
      continue;
    }
    g.generators.push_back(checked_perm(line, g.domain, line_no));
  }
  if (!have_domain) throw ParseError("missing 'domain <n>' line");
  return g;
}

std::string to_corpus_text(const CorpusGroup& g, std::string_view comment) {
  std::string out;
  if (!comment.empty()) out += "# " + std::string(comment) + "\n";
  out += "domain " + std::to_string(g.domain) + "\n";
  for (const auto& p : g.generators) out += to_string(p) + "\n";
  if (g.marking) {
    out += "marking";
    for (const auto& p : *g.marking) out += " " + to_label(p);
    out += "\n";
  }
  return out;
}

std::filesystem::path corpus_dir() {
  if (const char* env = std::getenv("TDLAB_CORPUS"); env && *env) return env;
  return TDLAB_DEFAULT_CORPUS;
}

std::filesystem::path resolve_group_path(const std::string& name) {
  namespace fs = std::filesystem;
  if (fs::is_regular_file(name)) return name;
  const fs::path dir = corpus_dir();
  for (const fs::path& p : {dir / name, dir / (name + ".grp")})
    if (fs::is_regular_file(p)) return p;
  throw PreconditionError("no group file '" + name + "' (corpus: " + dir.string() + ")");
}

CorpusGroup load_corpus_group(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_corpus_group(buf.str(), path.stem().string());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::vector<CorpusGroup> load_corpus(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".grp")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusGroup> out;
  for (const auto& f : files) out.push_back(load_corpus_group(f));
  return out;
}

}  // namespace tdlab
