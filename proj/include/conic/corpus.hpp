#pragma once

#include <string>
#include <vector>

#include "conic/io.hpp"

namespace conic {

struct CorpusEntry {
  std::string name;
  Json source;  // the polytope JSON as given
  Polytope polytope;
  std::vector<std::string> tags;  // "simple" or "non-simple", "dim=<d>"
  Integer expected_count;
};

// Segments, squares and cubes up to d = 4, simplices, cross-polytopes in
// d = 2, 3, the square pyramid, a cone over a pentagon, rational and
// non-unimodular examples, and one seeded random 0/1-polytope per dim 2..4.
// Expected counts come from brute-force enumeration.
std::vector<CorpusEntry> builtin_corpus();

CorpusEntry make_entry(const std::string& name, const Json& source);

// [{"name", "polytope", "expected_count"}, ...]; tags are recomputed.
std::vector<CorpusEntry> corpus_from_json(const Json& j);
std::vector<CorpusEntry> load_corpus(const std::string& path);
Json corpus_to_json(const std::vector<CorpusEntry>& entries);

const CorpusEntry& find_entry(const std::vector<CorpusEntry>& entries, const std::string& name);

}  // namespace conic
