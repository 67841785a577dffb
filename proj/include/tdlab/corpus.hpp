#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tdlab/perm.hpp"
#include "tdlab/perm_group.hpp"

namespace tdlab {

/// A permutation group file:
///
///     # comment
///     domain <n>
///     <generator in cycle notation>
///     ...
///     marking <perm> <perm> ...      (optional; perms written without spaces)
struct CorpusGroup {
  std::string name;
  std::size_t domain = 0;
  std::vector<FinitaryPerm> generators;
  std::optional<std::vector<FinitaryPerm>> marking;

  PermGroup group(std::size_t max_domain = kDefaultMaxDomain) const;
};

/// Throws ParseError on malformed input or points outside the domain.
CorpusGroup parse_corpus_group(std::string_view text, std::string name = {});
std::string to_corpus_text(const CorpusGroup& g, std::string_view comment = {});

/// Directory named by TDLAB_CORPUS, else the bundled corpus.
std::filesystem::path corpus_dir();
/// `name` itself if it names a file, else corpus_dir()/name, with ".grp"
/// appended when that file exists. Throws PreconditionError if nothing matches.
std::filesystem::path resolve_group_path(const std::string& name);
CorpusGroup load_corpus_group(const std::filesystem::path& path);
/// Every *.grp file of a directory, sorted by name.
std::vector<CorpusGroup> load_corpus(const std::filesystem::path& dir);

}  // namespace tdlab
