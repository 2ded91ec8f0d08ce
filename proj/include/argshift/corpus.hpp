#ifndef ARGSHIFT_CORPUS_HPP
#define ARGSHIFT_CORPUS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "argshift/lie_algebra.hpp"
#include "argshift/poly.hpp"
#include "argshift/rng.hpp"

namespace argshift {

// One recorded expectation from a .facts file.  `kind` is the fact keyword,
// `args` the whitespace arguments before '=', `value` the raw right-hand side,
// `tag` the provenance marker carried in the file.
struct CorpusFact {
    std::string tag;
    std::string kind;
    std::vector<std::string> args;
    std::string value;
    int line = 0;
};

struct CorpusEntry {
    std::string name;
    LieAlgebra algebra;
    std::map<std::string, DualPoint> points;
    std::vector<Poly> invariants;
    std::vector<CorpusFact> facts;
};

// Loads <dir>/<name>.facts together with the algebra / invariant files it
// references (paths are relative to the directory).
CorpusEntry load_corpus_entry(const std::string& dir, const std::string& name);

// Every *.facts file in the directory, sorted by name.
std::vector<CorpusEntry> load_corpus(const std::string& dir);

// Recomputes every fact and reports one PASS/FAIL line per fact.
// Returns the number of failures; an empty corpus passes with a warning.
int verify_corpus(const std::vector<CorpusEntry>& entries, std::ostream& out,
                  std::uint64_t seed = kDefaultSeed);

} // namespace argshift

#endif
